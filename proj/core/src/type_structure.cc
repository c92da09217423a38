#include <hgw/combinatorics.hh>
#include <hgw/errors.hh>
#include <hgw/type_structure.hh>

#include <algorithm>
#include <map>
#include <set>

using std::less;
using std::map;
using std::nullopt;
using std::optional;
using std::pair;
using std::set;
using std::size_t;
using std::span;
using std::string;
using std::string_view;
using std::vector;

namespace hgw
{
    TypeStructure::TypeStructure(GraphFamily family, unsigned m, map<string, OrbitRelation, less<>> relations) :
        _family(std::move(family)),
        _m(m),
        _elements(enumerate_types(_family, m).orbits()),
        _relations(std::move(relations))
    {
    }

    auto TypeStructure::element_index(const QfType & t) const -> optional<unsigned>
    {
        auto it = std::lower_bound(_elements.begin(), _elements.end(), t);
        if (it == _elements.end() || *it != t)
            return nullopt;
        return unsigned(it - _elements.begin());
    }

    auto TypeStructure::unary(string_view relation, span<const unsigned> index_map) const -> vector<unsigned>
    {
        auto it = _relations.find(relation);
        if (it == _relations.end())
            throw SchemaError{ "type structure has no relation '" + string{ relation } + "'" };
        if (it->second.arity() != index_map.size())
            throw ArityMismatch{ "index map length does not match the arity of '" + string{ relation } + "'" };
        for (auto p : index_map)
            if (p >= _m)
                throw IndexOutOfRange{ "index map position " + std::to_string(p) + " outside [m]" };

        vector<unsigned> result;
        for (unsigned e = 0; e < _elements.size(); ++e)
            if (it->second.contains(project(_elements[e], index_map)))
                result.push_back(e);
        return result;
    }

    auto TypeStructure::comp(span<const unsigned> i, span<const unsigned> j) const -> vector<pair<unsigned, unsigned>>
    {
        if (i.size() != j.size() || i.empty())
            throw ArityMismatch{ "Comp needs two index maps of the same positive length" };
        for (auto p : i)
            if (p >= _m)
                throw IndexOutOfRange{ "index map position " + std::to_string(p) + " outside [m]" };
        for (auto p : j)
            if (p >= _m)
                throw IndexOutOfRange{ "index map position " + std::to_string(p) + " outside [m]" };

        map<QfType, vector<unsigned>> by_restriction;
        for (unsigned q = 0; q < _elements.size(); ++q)
            by_restriction[project(_elements[q], j)].push_back(q);

        vector<pair<unsigned, unsigned>> result;
        for (unsigned p = 0; p < _elements.size(); ++p) {
            auto it = by_restriction.find(project(_elements[p], i));
            if (it != by_restriction.end())
                for (auto q : it->second)
                    result.emplace_back(p, q);
        }
        return result;
    }

    auto build_type_structure(const map<string, OrbitRelation, less<>> & relations, const GraphFamily & family,
        unsigned m, unsigned max_m) -> TypeStructure
    {
        if (m > max_m)
            throw ArityTooLarge{ "m = " + std::to_string(m) + " exceeds the cap " + std::to_string(max_m) };
        unsigned largest = 1;
        for (auto & [name, rel] : relations)
            largest = std::max(largest, rel.arity());
        if (m < largest)
            throw MTooSmall{ "m = " + std::to_string(m) + " is below the largest relation arity " + std::to_string(largest) };
        return TypeStructure{ family, m, relations };
    }

    auto default_m(const Instance & inst) -> unsigned
    {
        unsigned largest = 0;
        for (auto & [name, rel] : inst.relations())
            largest = std::max(largest, rel.arity());
        return std::max({ largest + 1, 3u, l_value(inst.family()) });
    }

    namespace
    {
        auto variable_name(const Instance & inst, const vector<unsigned> & source) -> string
        {
            string name = "(";
            for (unsigned i = 0; i < source.size(); ++i)
                name += (i ? "," : "") + inst.variables()[source[i]];
            return name + ")";
        }

        auto positions_text(span<const unsigned> positions) -> string
        {
            string text;
            for (unsigned i = 0; i < positions.size(); ++i)
                text += (i ? "," : "") + std::to_string(positions[i] + 1);
            return text;
        }

        auto position_in(const vector<unsigned> & list, unsigned v) -> unsigned
        {
            return unsigned(std::find(list.begin(), list.end(), v) - list.begin());
        }

        auto pair_tuples(const vector<pair<unsigned, unsigned>> & pairs) -> vector<Tuple>
        {
            vector<Tuple> result;
            result.reserve(pairs.size());
            for (auto [p, q] : pairs)
                result.push_back(Tuple{ p, q });
            return result;
        }
    }

    auto translate_instance(const Instance & inst, const TypeStructure & ts, unsigned long long max_variables)
        -> TranslatedInstance
    {
        auto m = ts.m();
        auto n = inst.variable_count();
        if (n < m)
            throw TooFewVariables{ "translation over m = " + std::to_string(m) + " needs at least " + std::to_string(m) +
                " variables, got " + std::to_string(n) };
        if (binomial(n, m) > max_variables)
            throw TooLarge{ "translation would have " + std::to_string(binomial(n, m)) + " variables" };

        TranslatedInstance result;
        result.m = m;
        result.instance.domain_size = unsigned(ts.elements().size());
        for_each_combination(n, m, [&](const vector<unsigned> & c) { result.sources.push_back(c); });
        for (auto & s : result.sources)
            result.instance.variables.push_back(variable_name(inst, s));

        for (auto & c : inst.constraints()) {
            for (unsigned v = 0; v < result.sources.size(); ++v) {
                auto & image = result.sources[v];
                bool inside = std::all_of(c.scope.begin(), c.scope.end(),
                    [&](unsigned x) { return std::binary_search(image.begin(), image.end(), x); });
                if (! inside)
                    continue;
                vector<unsigned> index_map;
                for (auto x : c.scope)
                    index_map.push_back(position_in(image, x));
                vector<Tuple> tuples;
                for (auto e : ts.unary(c.relation, index_map))
                    tuples.push_back(Tuple{ e });
                result.instance.add_constraint({ v }, std::move(tuples), "<" + c.relation + "@" + positions_text(index_map) + ">");
            }
        }

        for (unsigned v = 0; v < result.sources.size(); ++v)
            for (unsigned s = v + 1; s < result.sources.size(); ++s) {
                vector<unsigned> shared;
                std::set_intersection(result.sources[v].begin(), result.sources[v].end(), result.sources[s].begin(),
                    result.sources[s].end(), std::back_inserter(shared));
                if (shared.empty())
                    continue;

                // one Comp constraint per bijection onto the shared image
                auto k = shared;
                do {
                    vector<unsigned> i, j;
                    for (auto x : k) {
                        i.push_back(position_in(result.sources[v], x));
                        j.push_back(position_in(result.sources[s], x));
                    }
                    result.instance.add_constraint({ v, s }, pair_tuples(ts.comp(i, j)),
                        "Comp[" + positions_text(i) + "|" + positions_text(j) + "]");
                } while (std::next_permutation(k.begin(), k.end()));
            }

        return result;
    }

    namespace
    {
        struct SourceConstraint
        {
            vector<unsigned> scope;
            vector<unsigned> variables;
            vector<QfType> orbits;
        };

        auto source_constraints(const Instance & inst) -> vector<SourceConstraint>
        {
            vector<SourceConstraint> result;
            for (size_t c = 0; c < inst.constraints().size(); ++c) {
                SourceConstraint sc;
                sc.scope = inst.constraints()[c].scope;
                sc.variables = sc.scope;
                std::sort(sc.variables.begin(), sc.variables.end());
                sc.variables.erase(std::unique(sc.variables.begin(), sc.variables.end()), sc.variables.end());
                for (auto & t : inst.constraint_relation(c).orbits()) {
                    bool consistent = true;
                    for (unsigned a = 0; a < sc.scope.size(); ++a)
                        for (unsigned b = a + 1; b < sc.scope.size(); ++b)
                            if (sc.scope[a] == sc.scope[b] && t.label(a, b) != OrbitLabel::Eq)
                                consistent = false;
                    if (consistent)
                        sc.orbits.push_back(t);
                }
                result.push_back(std::move(sc));
            }
            return result;
        }

        class Refiner
        {
        private:
            const TypeStructure & _ts;
            const TranslatedInstance & _translated;
            vector<SourceConstraint> _sources;

        public:
            Refiner(const Instance & minimal_source, const TypeStructure & ts, const TranslatedInstance & translated) :
                _ts(ts),
                _translated(translated),
                _sources(source_constraints(minimal_source))
            {
            }

            auto covering(const vector<unsigned> & vars) const -> vector<size_t>
            {
                set<unsigned> image;
                for (auto v : vars)
                    image.insert(_translated.sources[v].begin(), _translated.sources[v].end());
                vector<size_t> result;
                for (size_t c = 0; c < _sources.size(); ++c)
                    if (std::includes(_sources[c].variables.begin(), _sources[c].variables.end(), image.begin(), image.end()))
                        result.push_back(c);
                return result;
            }

            auto types(size_t c, const vector<unsigned> & vars) const -> vector<Tuple>
            {
                auto & sc = _sources[c];
                vector<vector<unsigned>> positions;
                for (auto v : vars) {
                    vector<unsigned> p;
                    for (auto x : _translated.sources[v])
                        p.push_back(position_in(sc.scope, x));
                    positions.push_back(std::move(p));
                }

                vector<Tuple> result;
                for (auto & t : sc.orbits) {
                    Tuple tuple;
                    for (auto & p : positions)
                        tuple.push_back(*_ts.element_index(project(t, p)));
                    result.push_back(std::move(tuple));
                }
                std::sort(result.begin(), result.end());
                result.erase(std::unique(result.begin(), result.end()), result.end());
                return result;
            }

            auto name(size_t c, const vector<unsigned> & vars) const -> string
            {
                string text = "Types(c" + std::to_string(c) + ";";
                for (unsigned i = 0; i < vars.size(); ++i)
                    text += (i ? "," : "") + std::to_string(vars[i] + 1);
                return text + ")";
            }
        };

        auto intersect(const vector<Tuple> & a, const vector<Tuple> & b) -> vector<Tuple>
        {
            vector<Tuple> result;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(result));
            return result;
        }
    }

    auto refine_translation(const Instance & minimal_source, const TypeStructure & ts, const TranslatedInstance & translated)
        -> TranslatedInstance
    {
        auto m = ts.m();
        if (translated.m != m)
            throw MinimalityMismatch{ "translation and type structure use different m" };
        if (! (minimal_source.family() == ts.family()))
            throw MinimalityMismatch{ "source and type structure are over different families" };
        if (minimal_source.variable_count() < m ||
            binomial(minimal_source.variable_count(), m) != translated.sources.size())
            throw MinimalityMismatch{ "source instance does not match the translation" };
        if (auto violation = verify_minimality(minimal_source, 2 * m, 3 * m))
            throw MinimalityMismatch{ "source is not (" + std::to_string(2 * m) + ", " + std::to_string(3 * m) +
                ")-minimal: " + violation->describe(minimal_source) };

        auto count = unsigned(translated.sources.size());
        if (binomial(count, 3) > 2000000)
            throw TooLarge{ "refinement would need " + std::to_string(binomial(count, 3)) + " ternary constraints" };

        Refiner refiner{ minimal_source, ts, translated };

        TranslatedInstance result;
        result.m = m;
        result.sources = translated.sources;
        result.instance.domain_size = translated.instance.domain_size;
        result.instance.variables = translated.instance.variables;

        // existing constraints, cut down by the Types relation of the first covering constraint
        for (auto & c : translated.instance.constraints) {
            auto cover = refiner.covering(c.scope);
            auto tuples = c.tuples;
            if (! cover.empty()) {
                auto types = refiner.types(cover.front(), c.scope);
                tuples = intersect(tuples, types);
                if (tuples.size() != types.size())
                    throw MinimalityMismatch{ "source does not entail translated constraint " + c.name };
            }
            result.instance.add_constraint(c.scope, std::move(tuples), c.name);
        }

        set<pair<vector<unsigned>, vector<Tuple>>> added;
        for (unsigned size = 1; size <= std::min(3u, count); ++size)
            for_each_combination(count, size, [&](const vector<unsigned> & vars) {
                for (auto c : refiner.covering(vars)) {
                    auto tuples = refiner.types(c, vars);
                    if (added.emplace(vars, tuples).second)
                        result.instance.add_constraint(vars, std::move(tuples), refiner.name(c, vars));
                }
            });

        return result;
    }

    auto translate_certificate(const QfType & certificate, const TypeStructure & ts, const TranslatedInstance & ti)
        -> vector<unsigned>
    {
        vector<unsigned> result;
        for (auto & source : ti.sources) {
            auto e = ts.element_index(project(certificate, source));
            if (! e)
                throw NotRealizable{ "certificate restricts to a type outside the structure" };
            result.push_back(*e);
        }
        return result;
    }
}

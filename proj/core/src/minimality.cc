#include <hgw/combinatorics.hh>
#include <hgw/errors.hh>
#include <hgw/minimality.hh>

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>

using std::map;
using std::optional;
using std::pair;
using std::set;
using std::size_t;
using std::string;
using std::uint64_t;
using std::vector;

namespace hgw
{
    namespace
    {
        // distinct variables of a scope, in order of first occurrence
        auto distinct_variables(const vector<unsigned> & scope) -> vector<unsigned>
        {
            vector<unsigned> result;
            for (auto v : scope)
                if (std::find(result.begin(), result.end(), v) == result.end())
                    result.push_back(v);
            return result;
        }

        // does the orbit put "=" on every pair of positions sharing a variable?
        auto respects_repeats(const QfType & t, const vector<unsigned> & scope) -> bool
        {
            for (unsigned a = 0; a < scope.size(); ++a)
                for (unsigned b = a + 1; b < scope.size(); ++b)
                    if (scope[a] == scope[b] && t.label(a, b) != OrbitLabel::Eq)
                        return false;
            return true;
        }

        auto first_position(const vector<unsigned> & scope, unsigned v) -> optional<unsigned>
        {
            auto it = std::find(scope.begin(), scope.end(), v);
            if (it == scope.end())
                return std::nullopt;
            return unsigned(it - scope.begin());
        }

        // order sets by size, then lexicographically
        struct BySizeThenLex
        {
            auto operator()(const vector<unsigned> & a, const vector<unsigned> & b) const -> bool
            {
                if (a.size() != b.size())
                    return a.size() < b.size();
                return a < b;
            }
        };

        // subsets of size 1..k of the distinct scope variables, each sorted
        auto small_subsets(const vector<unsigned> & variables, unsigned k) -> vector<vector<unsigned>>
        {
            vector<unsigned> sorted = variables;
            std::sort(sorted.begin(), sorted.end());
            vector<vector<unsigned>> result;
            for (unsigned s = 1; s <= std::min<size_t>(k, sorted.size()); ++s)
                for (auto & c : combinations_of(sorted, s))
                    result.push_back(std::move(c));
            return result;
        }

        struct Work
        {
            vector<unsigned> scope;
            vector<QfType> orbits;
        };

        struct Membership
        {
            size_t constraint;
            // indices into QfType::labels() for each pair of W's positions, a < b
            vector<unsigned> label_indices;
        };

        auto key_of(const QfType & t, const vector<unsigned> & label_indices) -> uint64_t
        {
            uint64_t key = 0;
            auto & labels = t.labels();
            for (auto i : label_indices)
                key = key * 3 + uint64_t(labels[i]);
            return key;
        }

        auto covered_sets(const vector<Work> & work, unsigned s) -> set<vector<unsigned>>
        {
            set<vector<unsigned>> covered;
            for (auto & w : work) {
                if (w.scope.size() < s)
                    continue;
                vector<unsigned> sorted = w.scope;
                std::sort(sorted.begin(), sorted.end());
                for (auto & c : combinations_of(sorted, s))
                    covered.insert(std::move(c));
            }
            return covered;
        }

        auto fixpoint(vector<Work> & work, unsigned k) -> void
        {
            map<vector<unsigned>, vector<Membership>, BySizeThenLex> by_subset;
            for (size_t c = 0; c < work.size(); ++c) {
                auto & scope = work[c].scope;
                for (auto & w : small_subsets(scope, k)) {
                    vector<unsigned> positions;
                    for (auto v : w)
                        positions.push_back(*first_position(scope, v));
                    Membership m{ c, {} };
                    for (unsigned a = 0; a < positions.size(); ++a)
                        for (unsigned b = a + 1; b < positions.size(); ++b) {
                            auto i = std::min(positions[a], positions[b]), j = std::max(positions[a], positions[b]);
                            m.label_indices.push_back(QfType::pair_index(unsigned(scope.size()), i, j));
                        }
                    by_subset[w].push_back(std::move(m));
                }
            }

            // subset ids follow the size-then-lexicographic order of the map
            vector<const vector<Membership> *> subsets;
            for (auto & [w, members] : by_subset)
                subsets.push_back(&members);

            vector<vector<unsigned>> subsets_of_constraint(work.size());
            for (unsigned id = 0; id < subsets.size(); ++id)
                for (auto & m : *subsets[id])
                    subsets_of_constraint[m.constraint].push_back(id);

            set<unsigned> pending;
            for (unsigned id = 0; id < subsets.size(); ++id)
                if (subsets[id]->size() > 1)
                    pending.insert(id);

            vector<uint64_t> allowed, keys, common;
            while (! pending.empty()) {
                auto id = *pending.begin();
                pending.erase(pending.begin());
                auto & members = *subsets[id];

                bool first = true;
                for (auto & m : members) {
                    keys.clear();
                    for (auto & t : work[m.constraint].orbits)
                        keys.push_back(key_of(t, m.label_indices));
                    std::sort(keys.begin(), keys.end());
                    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
                    if (first) {
                        allowed.swap(keys);
                        first = false;
                    }
                    else {
                        common.clear();
                        std::set_intersection(allowed.begin(), allowed.end(), keys.begin(), keys.end(),
                            std::back_inserter(common));
                        allowed.swap(common);
                    }
                }

                for (auto & m : members) {
                    auto & orbits = work[m.constraint].orbits;
                    auto before = orbits.size();
                    std::erase_if(orbits, [&](const QfType & t) {
                        return ! std::binary_search(allowed.begin(), allowed.end(), key_of(t, m.label_indices));
                    });
                    if (orbits.empty()) {
                        // every constraint shares a variable chain with this one, so all of them empty out
                        for (auto & w : work)
                            w.orbits.clear();
                        return;
                    }
                    if (orbits.size() != before)
                        for (auto other : subsets_of_constraint[m.constraint])
                            if (other != id && subsets[other]->size() > 1)
                                pending.insert(other);
                }
            }
        }

        auto relation_name(size_t c) -> string
        {
            return "c" + std::to_string(c);
        }
    }

    MinimalInstance::MinimalInstance(Instance instance, unsigned k, unsigned l) :
        _instance(std::move(instance)),
        _k(k),
        _l(l)
    {
        auto n = _instance.variable_count();
        _pairs.assign(size_t(n) * n, OrbitalSet{});
        vector<bool> covered(size_t(n) * n, false);

        for (size_t c = 0; c < _instance.constraints().size(); ++c) {
            auto & scope = _instance.constraints()[c].scope;
            auto & rel = _instance.constraint_relation(c);
            auto vars = distinct_variables(scope);
            for (unsigned a = 0; a < vars.size(); ++a)
                for (unsigned b = 0; b < vars.size(); ++b) {
                    if (a == b)
                        continue;
                    auto pa = *first_position(scope, vars[a]), pb = *first_position(scope, vars[b]);
                    auto idx = size_t(vars[a]) * n + vars[b];
                    covered[idx] = true;
                    for (auto & t : rel.orbits())
                        if (respects_repeats(t, scope))
                            _pairs[idx].insert(t.label(pa, pb));
                }
        }

        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) {
                auto idx = size_t(i) * n + j;
                if (i == j)
                    _pairs[idx] = OrbitalSet::eq();
                else if (! covered[idx])
                    _pairs[idx] = OrbitalSet::all();
            }
    }

    auto MinimalInstance::pair_projection(unsigned i, unsigned j) const -> OrbitalSet
    {
        auto n = _instance.variable_count();
        if (i >= n || j >= n)
            throw IndexOutOfRange{ "no variable pair (" + std::to_string(i) + ", " + std::to_string(j) + ")" };
        return _pairs[size_t(i) * n + j];
    }

    auto is_trivial(const Instance & inst) -> bool
    {
        for (size_t c = 0; c < inst.constraints().size(); ++c)
            if (inst.constraint_relation(c).empty())
                return true;
        return false;
    }

    auto is_trivial(const MinimalInstance & m) -> bool
    {
        return is_trivial(m.instance());
    }

    auto is_simple(const MinimalInstance & m) -> bool
    {
        auto n = m.instance().variable_count();
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = i + 1; j < n; ++j)
                if (m.pair_projection(i, j).size() != 1)
                    return false;
        return true;
    }

    auto project_constraint(const Instance & inst, size_t c, const vector<unsigned> & variables) -> OrbitRelation
    {
        auto & scope = inst.constraints().at(c).scope;
        auto & rel = inst.constraint_relation(c);
        vector<unsigned> positions;
        for (auto v : variables) {
            auto p = first_position(scope, v);
            if (! p)
                throw IndexOutOfRange{ "variable " + std::to_string(v) + " is not in the scope of constraint " +
                    std::to_string(c) };
            positions.push_back(*p);
        }

        bool repeats = distinct_variables(scope).size() != scope.size();
        vector<QfType> result;
        for (auto & t : rel.orbits())
            if (! repeats || respects_repeats(t, scope))
                result.push_back(project(t, positions));
        return OrbitRelation{ unsigned(variables.size()), std::move(result) };
    }

    auto establish_minimality(const Instance & inst, unsigned k, unsigned l) -> MinimalInstance
    {
        if (k < 1 || k > l)
            throw InvalidParameters{ "minimality needs 1 <= k <= l, got k = " + std::to_string(k) + ", l = " +
                std::to_string(l) };

        auto n = inst.variable_count();
        auto s = std::min(l, n);
        if (s > default_max_arity)
            throw ArityTooLarge{ "universal constraints of arity " + std::to_string(s) + " exceed the enumeration cap" };

        vector<Work> work;
        for (size_t c = 0; c < inst.constraints().size(); ++c) {
            auto vars = distinct_variables(inst.constraints()[c].scope);
            auto rel = project_constraint(inst, c, vars);
            work.push_back(Work{ std::move(vars), rel.orbits() });
        }

        if (s > 0) {
            auto covered = covered_sets(work, s);
            for_each_combination(n, s, [&](const vector<unsigned> & subset) {
                if (! covered.contains(subset))
                    work.push_back(Work{ subset, enumerate_types(inst.family(), s).orbits() });
            });
        }

        fixpoint(work, k);

        Instance result{ inst.family() };
        for (auto & v : inst.variables())
            result.add_variable(v);
        for (size_t c = 0; c < work.size(); ++c) {
            result.add_relation(relation_name(c), OrbitRelation{ unsigned(work[c].scope.size()), std::move(work[c].orbits) });
            result.add_constraint(work[c].scope, relation_name(c));
        }
        return MinimalInstance{ std::move(result), k, l };
    }

    auto reestablish(const MinimalInstance & m) -> MinimalInstance
    {
        return establish_minimality(m.instance(), m.k(), m.l());
    }

    auto MinimalityViolation::describe(const Instance & inst) const -> string
    {
        string names = "{";
        for (unsigned i = 0; i < variables.size(); ++i)
            names += (i ? "," : "") + inst.variables().at(variables[i]);
        names += "}";
        if (kind == Kind::Uncovered)
            return "no constraint covers " + names;
        return "constraints " + std::to_string(constraints->first) + " and " + std::to_string(constraints->second) +
            " project differently onto " + names;
    }

    auto verify_minimality(const Instance & inst, unsigned k, unsigned l) -> optional<MinimalityViolation>
    {
        auto n = inst.variable_count();
        auto s = std::min(l, n);

        vector<Work> scopes;
        for (auto & c : inst.constraints())
            scopes.push_back(Work{ distinct_variables(c.scope), {} });

        if (s > 0) {
            auto covered = covered_sets(scopes, s);
            optional<MinimalityViolation> uncovered;
            for_each_combination(n, s, [&](const vector<unsigned> & subset) {
                if (! uncovered && ! covered.contains(subset))
                    uncovered = MinimalityViolation{ MinimalityViolation::Kind::Uncovered, subset, std::nullopt };
            });
            if (uncovered)
                return uncovered;
        }

        map<vector<unsigned>, vector<size_t>, BySizeThenLex> by_subset;
        for (size_t c = 0; c < scopes.size(); ++c)
            for (auto & w : small_subsets(scopes[c].scope, k))
                by_subset[w].push_back(c);

        for (auto & [w, members] : by_subset) {
            if (members.size() < 2)
                continue;
            auto reference = project_constraint(inst, members[0], w);
            for (size_t i = 1; i < members.size(); ++i)
                if (project_constraint(inst, members[i], w) != reference)
                    return MinimalityViolation{ MinimalityViolation::Kind::Disagreement, w,
                        pair{ members[0], members[i] } };
        }

        return std::nullopt;
    }
}

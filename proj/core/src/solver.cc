#include <hgw/errors.hh>
#include <hgw/solver.hh>

#include <algorithm>
#include <numeric>

using std::get_if;
using std::nullopt;
using std::optional;
using std::pair;
using std::size_t;
using std::span;
using std::string;
using std::string_view;
using std::variant;
using std::vector;

namespace hgw
{
    auto to_string(Status s) -> string_view
    {
        return s == Status::Sat ? "sat" : "unsat";
    }

    auto to_string(Mode m) -> string_view
    {
        switch (m) {
        case Mode::Width: return "width";
        case Mode::Search: return "search";
        case Mode::Oracle: return "oracle";
        }
        return "?";
    }

    auto parse_priority(string_view text) -> vector<OrbitLabel>
    {
        vector<OrbitLabel> result;
        while (! text.empty()) {
            auto comma = text.find(',');
            auto label = parse_label(text.substr(0, comma));
            if (std::find(result.begin(), result.end(), label) != result.end())
                throw ParseError{ "label '" + string{ to_string(label) } + "' repeated in priority list" };
            result.push_back(label);
            if (comma == string_view::npos)
                break;
            text.remove_prefix(comma + 1);
        }
        if (result.size() != 3)
            throw ParseError{ "priority list must name each of =, E and N once" };
        return result;
    }

    namespace
    {
        class OracleSearch
        {
        private:
            const Instance & _inst;
            unsigned _n;
            vector<pair<unsigned, unsigned>> _pairs;
            vector<OrbitLabel> _labels;
            vector<vector<size_t>> _checks_at;
            vector<size_t> _checks_at_root;

            auto label(unsigned a, unsigned b) const -> OrbitLabel
            {
                if (a == b)
                    return OrbitLabel::Eq;
                if (a > b)
                    std::swap(a, b);
                return _labels[QfType::pair_index(_n, a, b)];
            }

            auto triangles_ok(unsigned i, unsigned j) const -> bool
            {
                auto c = label(i, j);
                for (unsigned x = 0; x < i; ++x) {
                    auto a = label(x, i), b = label(x, j);
                    int eqs = (a == OrbitLabel::Eq) + (b == OrbitLabel::Eq) + (c == OrbitLabel::Eq);
                    if (eqs == 2)
                        return false;
                    if (eqs == 1) {
                        if (a == OrbitLabel::Eq && b != c)
                            return false;
                        if (b == OrbitLabel::Eq && a != c)
                            return false;
                        if (c == OrbitLabel::Eq && a != b)
                            return false;
                    }
                }
                return true;
            }

            // the vertex set {0..i} + {j} is fully labelled
            auto realizable_so_far(unsigned i, unsigned j) const -> bool
            {
                auto & bounds = _inst.family().bounds();
                if (bounds.empty())
                    return true;

                vector<unsigned> vertices(i + 1);
                std::iota(vertices.begin(), vertices.end(), 0u);
                vertices.push_back(j);

                vector<unsigned> representatives;
                for (auto v : vertices) {
                    bool fresh = true;
                    for (auto r : representatives)
                        if (label(r, v) == OrbitLabel::Eq) {
                            fresh = false;
                            break;
                        }
                    if (fresh)
                        representatives.push_back(v);
                }

                vector<pair<unsigned, unsigned>> edges;
                for (unsigned a = 0; a < representatives.size(); ++a)
                    for (unsigned b = a + 1; b < representatives.size(); ++b)
                        if (label(representatives[a], representatives[b]) == OrbitLabel::E)
                            edges.emplace_back(a, b);
                return realizable(_inst.family(), FiniteGraph{ unsigned(representatives.size()), edges });
            }

            auto constraint_ok(size_t c) const -> bool
            {
                auto & scope = _inst.constraints()[c].scope;
                auto r = unsigned(scope.size());
                QfType::Labels labels;
                labels.reserve(r * (r - 1) / 2);
                for (unsigned p = 0; p < r; ++p)
                    for (unsigned q = p + 1; q < r; ++q)
                        labels.push_back(label(scope[p], scope[q]));
                auto t = QfType::try_make(r, std::move(labels));
                return t && _inst.constraint_relation(c).contains(*t);
            }

            auto search(size_t next) -> bool
            {
                if (next == _pairs.size())
                    return true;

                auto [i, j] = _pairs[next];
                for (auto l : all_labels) {
                    _labels[next] = l;
                    if (! triangles_ok(i, j))
                        continue;
                    if (! realizable_so_far(i, j))
                        continue;
                    bool ok = true;
                    for (auto c : _checks_at[next])
                        if (! constraint_ok(c)) {
                            ok = false;
                            break;
                        }
                    if (ok && search(next + 1))
                        return true;
                }
                return false;
            }

        public:
            explicit OracleSearch(const Instance & inst) :
                _inst(inst),
                _n(inst.variable_count())
            {
                for (unsigned a = 0; a < _n; ++a)
                    for (unsigned b = a + 1; b < _n; ++b)
                        _pairs.emplace_back(a, b);
                _labels.assign(_pairs.size(), OrbitLabel::Eq);
                _checks_at.resize(_pairs.size());

                for (size_t c = 0; c < inst.constraints().size(); ++c) {
                    auto vars = inst.constraints()[c].scope;
                    std::sort(vars.begin(), vars.end());
                    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
                    if (vars.size() < 2)
                        _checks_at_root.push_back(c);
                    else
                        _checks_at[QfType::pair_index(_n, vars[vars.size() - 2], vars.back())].push_back(c);
                }
            }

            auto run() -> optional<QfType>
            {
                for (auto c : _checks_at_root)
                    if (! constraint_ok(c))
                        return nullopt;
                if (_n == 0)
                    return nullopt;
                if (! search(0))
                    return nullopt;
                return QfType{ _n, _labels };
            }

            auto empty_sat() const -> bool
            {
                for (auto c : _checks_at_root)
                    if (! constraint_ok(c))
                        return false;
                return true;
            }
        };

        auto first_multivalued_pair(const MinimalInstance & m) -> optional<pair<unsigned, unsigned>>
        {
            auto n = m.instance().variable_count();
            for (unsigned i = 0; i < n; ++i)
                for (unsigned j = i + 1; j < n; ++j)
                    if (m.pair_projection(i, j).size() > 1)
                        return pair{ i, j };
            return nullopt;
        }

        auto search(const MinimalInstance & m, span<const OrbitLabel> priority) -> optional<QfType>
        {
            if (is_trivial(m))
                return nullopt;
            auto p = first_multivalued_pair(m);
            if (! p)
                return quotient_and_check(m);
            auto labels = m.pair_projection(p->first, p->second);
            for (auto l : priority)
                if (labels.contains(l))
                    if (auto result = search(pin(m, p->first, p->second, l), priority))
                        return result;
            return nullopt;
        }
    }

    auto oracle(const Instance & inst, unsigned max_variables) -> Verdict
    {
        if (inst.variable_count() > max_variables)
            throw TooManyVariables{ "oracle handles at most " + std::to_string(max_variables) + " variables, got " +
                std::to_string(inst.variable_count()) };

        OracleSearch search{ inst };
        Verdict v;
        v.mode = Mode::Oracle;
        if (inst.variable_count() == 0) {
            v.status = search.empty_sat() ? Status::Sat : Status::Unsat;
            return v;
        }
        v.certificate = search.run();
        v.status = v.certificate ? Status::Sat : Status::Unsat;
        return v;
    }

    auto decide_width(const Instance & inst, unsigned k, unsigned l) -> Verdict
    {
        auto m = establish_minimality(inst, k, l);
        Verdict v;
        v.mode = Mode::Width;
        v.k = k;
        v.l = l;
        if (is_trivial(m))
            v.status = Status::Unsat;
        else {
            v.status = Status::Sat;
            v.assumed_width = true;
        }
        return v;
    }

    auto decide_width(const Instance & inst) -> Verdict
    {
        return decide_width(inst, 2, l_value(inst.family()));
    }

    auto quotient_and_check(const MinimalInstance & m) -> optional<QfType>
    {
        if (m.k() < 2)
            throw NotMinimal{ "quotient needs an instance that is at least (2, l)-minimal" };
        if (! is_simple(m))
            throw NotSimple{ "quotient needs every pair projection to be a single orbital" };
        if (is_trivial(m))
            return nullopt;

        auto n = m.instance().variable_count();
        if (n == 0)
            return nullopt;

        // classes from "=" components
        vector<unsigned> parent(n);
        std::iota(parent.begin(), parent.end(), 0u);
        auto find = [&](unsigned v) {
            while (parent[v] != v)
                v = parent[v] = parent[parent[v]];
            return v;
        };
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = i + 1; j < n; ++j)
                if (m.pair_projection(i, j) == OrbitalSet::eq()) {
                    auto a = find(i), b = find(j);
                    if (a != b)
                        parent[std::max(a, b)] = std::min(a, b);
                }

        QfType::Labels labels;
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = i + 1; j < n; ++j) {
                auto members = m.pair_projection(i, j).members();
                labels.push_back(members.front());
            }

        // labels must be uniform across classes and "=" exactly within them
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = i + 1; j < n; ++j) {
                auto l = labels[QfType::pair_index(n, i, j)];
                auto ci = find(i), cj = find(j);
                if ((ci == cj) != (l == OrbitLabel::Eq))
                    return nullopt;
                if (ci != cj) {
                    auto a = std::min(ci, cj), b = std::max(ci, cj);
                    if (labels[QfType::pair_index(n, a, b)] != l)
                        return nullopt;
                }
            }

        auto result = QfType::try_make(n, std::move(labels));
        if (! result || ! realizable(m.instance().family(), *result))
            return nullopt;
        return result;
    }

    auto pin(const MinimalInstance & m, unsigned i, unsigned j, OrbitLabel label) -> MinimalInstance
    {
        Instance pinned = m.instance();
        auto name = "pin" + std::to_string(pinned.constraints().size());
        pinned.add_relation(name, OrbitRelation::from_orbitals(OrbitalSet{ label }).restricted_to(pinned.family()));
        pinned.add_constraint({ i, j }, name);
        return establish_minimality(pinned, m.k(), m.l());
    }

    auto shrink_to_simple(const MinimalInstance & m, span<const OrbitLabel> priority) -> variant<MinimalInstance, Stuck>
    {
        if (m.k() < 2)
            throw NotMinimal{ "shrinking needs an instance that is at least (2, l)-minimal" };
        if (is_trivial(m))
            throw NotMinimal{ "shrinking needs a non-trivial instance" };

        MinimalInstance current = m;
        while (auto p = first_multivalued_pair(current)) {
            auto labels = current.pair_projection(p->first, p->second);
            optional<OrbitLabel> first_attempt;
            optional<MinimalInstance> next;
            for (auto l : priority) {
                if (! labels.contains(l))
                    continue;
                if (! first_attempt)
                    first_attempt = l;
                auto candidate = pin(current, p->first, p->second, l);
                if (! is_trivial(candidate)) {
                    next = std::move(candidate);
                    break;
                }
            }
            if (! next)
                return Stuck{ *p, first_attempt.value_or(OrbitLabel::Eq) };
            current = std::move(*next);
        }
        return current;
    }

    auto solve_search(const Instance & inst, span<const OrbitLabel> priority, optional<unsigned> l) -> Verdict
    {
        auto width = l.value_or(l_value(inst.family()));
        Verdict v;
        v.mode = Mode::Search;
        v.k = 2;
        v.l = width;

        if (inst.variable_count() == 0) {
            v.status = is_trivial(inst) ? Status::Unsat : Status::Sat;
            return v;
        }

        v.certificate = search(establish_minimality(inst, 2, std::max(2u, width)), priority);
        v.status = v.certificate ? Status::Sat : Status::Unsat;
        return v;
    }

    auto verify_certificate(const Instance & inst, const QfType & certificate) -> bool
    {
        if (certificate.arity() != inst.variable_count())
            return false;
        if (! realizable(inst.family(), certificate))
            return false;
        for (size_t c = 0; c < inst.constraints().size(); ++c)
            if (! inst.constraint_relation(c).contains(project(certificate, inst.constraints()[c].scope)))
                return false;
        return true;
    }

    auto realize_certificate(const QfType & certificate, const GraphFamily & family) -> Realization
    {
        if (! realizable(family, certificate))
            throw NotRealizable{ "certificate '" + certificate.to_string() + "' is not realizable in " + family.name() };
        return Realization{ quotient_graph(certificate), certificate.class_of() };
    }
}

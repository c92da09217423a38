#include <hgw/combinatorics.hh>
#include <hgw/errors.hh>
#include <hgw/finite_csp.hh>

#include <algorithm>
#include <map>
#include <set>

using std::map;
using std::nullopt;
using std::optional;
using std::pair;
using std::set;
using std::size_t;
using std::string;
using std::vector;

namespace hgw
{
    auto FiniteInstance::add_constraint(vector<unsigned> scope, vector<Tuple> tuples, string name) -> void
    {
        for (auto v : scope)
            if (v >= variables.size())
                throw SchemaError{ "finite constraint refers to unknown variable " + std::to_string(v) };
        for (auto & t : tuples) {
            if (t.size() != scope.size())
                throw SchemaError{ "finite tuple length does not match its scope" };
            for (auto x : t)
                if (x >= domain_size)
                    throw SchemaError{ "finite tuple value " + std::to_string(x) + " outside the domain" };
        }
        std::sort(tuples.begin(), tuples.end());
        tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
        constraints.push_back(FiniteConstraint{ std::move(scope), std::move(tuples), std::move(name) });
    }

    auto is_trivial(const FiniteInstance & inst) -> bool
    {
        return std::any_of(inst.constraints.begin(), inst.constraints.end(),
            [](const FiniteConstraint & c) { return c.tuples.empty(); });
    }

    namespace
    {
        auto distinct_sorted(vector<unsigned> vars) -> vector<unsigned>
        {
            std::sort(vars.begin(), vars.end());
            vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
            return vars;
        }

        // tuples agreeing on repeated variables, projected onto vars
        auto project(const FiniteConstraint & c, const vector<unsigned> & vars) -> set<Tuple>
        {
            vector<unsigned> positions;
            for (auto v : vars)
                positions.push_back(unsigned(std::find(c.scope.begin(), c.scope.end(), v) - c.scope.begin()));

            set<Tuple> result;
            for (auto & t : c.tuples) {
                bool consistent = true;
                for (unsigned a = 0; a < c.scope.size() && consistent; ++a)
                    for (unsigned b = a + 1; b < c.scope.size(); ++b)
                        if (c.scope[a] == c.scope[b] && t[a] != t[b]) {
                            consistent = false;
                            break;
                        }
                if (! consistent)
                    continue;
                Tuple p;
                for (auto pos : positions)
                    p.push_back(t[pos]);
                result.insert(std::move(p));
            }
            return result;
        }

        struct BySizeThenLex
        {
            auto operator()(const vector<unsigned> & a, const vector<unsigned> & b) const -> bool
            {
                if (a.size() != b.size())
                    return a.size() < b.size();
                return a < b;
            }
        };
    }

    auto verify_minimality(const FiniteInstance & inst, unsigned k, unsigned l) -> optional<MinimalityViolation>
    {
        auto n = unsigned(inst.variables.size());
        auto s = std::min(l, n);

        vector<vector<unsigned>> scopes;
        for (auto & c : inst.constraints)
            scopes.push_back(distinct_sorted(c.scope));

        if (s > 0) {
            set<vector<unsigned>> covered;
            for (auto & scope : scopes)
                if (scope.size() >= s)
                    for (auto & sub : combinations_of(scope, s))
                        covered.insert(sub);
            optional<MinimalityViolation> uncovered;
            for_each_combination(n, s, [&](const vector<unsigned> & subset) {
                if (! uncovered && ! covered.contains(subset))
                    uncovered = MinimalityViolation{ MinimalityViolation::Kind::Uncovered, subset, nullopt };
            });
            if (uncovered)
                return uncovered;
        }

        map<vector<unsigned>, vector<size_t>, BySizeThenLex> by_subset;
        for (size_t c = 0; c < scopes.size(); ++c)
            for (unsigned size = 1; size <= std::min<size_t>(k, scopes[c].size()); ++size)
                for (auto & w : combinations_of(scopes[c], size))
                    by_subset[w].push_back(c);

        for (auto & [w, members] : by_subset) {
            if (members.size() < 2)
                continue;
            auto reference = project(inst.constraints[members[0]], w);
            for (size_t i = 1; i < members.size(); ++i)
                if (project(inst.constraints[members[i]], w) != reference)
                    return MinimalityViolation{ MinimalityViolation::Kind::Disagreement, w, pair{ members[0], members[i] } };
        }
        return nullopt;
    }

    namespace
    {
        class FiniteSearch
        {
        private:
            const FiniteInstance & _inst;
            unsigned long long _node_limit, _nodes = 0;
            vector<vector<size_t>> _constraints_of;

            using Domains = vector<vector<bool>>;

            auto supported(const FiniteConstraint & c, const Tuple & t, const Domains & domains) const -> bool
            {
                for (unsigned p = 0; p < c.scope.size(); ++p) {
                    if (! domains[c.scope[p]][t[p]])
                        return false;
                    for (unsigned q = 0; q < p; ++q)
                        if (c.scope[q] == c.scope[p] && t[q] != t[p])
                            return false;
                }
                return true;
            }

            // generalised arc consistency; false on a wipe-out
            auto propagate(Domains & domains) const -> bool
            {
                set<size_t> queue;
                for (size_t c = 0; c < _inst.constraints.size(); ++c)
                    queue.insert(c);

                while (! queue.empty()) {
                    auto c = *queue.begin();
                    queue.erase(queue.begin());
                    auto & con = _inst.constraints[c];

                    vector<vector<bool>> seen(con.scope.size(), vector<bool>(_inst.domain_size, false));
                    for (auto & t : con.tuples)
                        if (supported(con, t, domains))
                            for (unsigned p = 0; p < con.scope.size(); ++p)
                                seen[p][t[p]] = true;

                    for (unsigned p = 0; p < con.scope.size(); ++p) {
                        auto v = con.scope[p];
                        bool changed = false, any = false;
                        for (unsigned x = 0; x < _inst.domain_size; ++x) {
                            if (domains[v][x] && ! seen[p][x]) {
                                domains[v][x] = false;
                                changed = true;
                            }
                            any = any || domains[v][x];
                        }
                        if (! any)
                            return false;
                        if (changed)
                            for (auto other : _constraints_of[v])
                                if (other != c)
                                    queue.insert(other);
                    }
                }
                return true;
            }

            auto search(Domains domains, vector<unsigned> & assignment) -> bool
            {
                if (_node_limit && ++_nodes > _node_limit)
                    throw TooLarge{ "finite search exceeded " + std::to_string(_node_limit) + " nodes" };
                if (! propagate(domains))
                    return false;

                // smallest domain first, ties by index
                optional<unsigned> branch;
                unsigned best = 0;
                for (unsigned v = 0; v < domains.size(); ++v) {
                    auto size = unsigned(std::count(domains[v].begin(), domains[v].end(), true));
                    if (size > 1 && (! branch || size < best)) {
                        branch = v;
                        best = size;
                    }
                }

                if (! branch) {
                    for (unsigned v = 0; v < domains.size(); ++v)
                        assignment[v] = unsigned(std::find(domains[v].begin(), domains[v].end(), true) - domains[v].begin());
                    return true;
                }

                for (unsigned x = 0; x < _inst.domain_size; ++x) {
                    if (! domains[*branch][x])
                        continue;
                    auto next = domains;
                    std::fill(next[*branch].begin(), next[*branch].end(), false);
                    next[*branch][x] = true;
                    if (search(std::move(next), assignment))
                        return true;
                }
                return false;
            }

        public:
            FiniteSearch(const FiniteInstance & inst, unsigned long long node_limit) :
                _inst(inst),
                _node_limit(node_limit),
                _constraints_of(inst.variables.size())
            {
                for (size_t c = 0; c < inst.constraints.size(); ++c)
                    for (auto v : distinct_sorted(inst.constraints[c].scope))
                        _constraints_of[v].push_back(c);
            }

            auto run() -> optional<vector<unsigned>>
            {
                if (is_trivial(_inst))
                    return nullopt;
                if (_inst.domain_size == 0)
                    return _inst.variables.empty() ? optional{ vector<unsigned>{} } : nullopt;
                Domains domains(_inst.variables.size(), vector<bool>(_inst.domain_size, true));
                vector<unsigned> assignment(_inst.variables.size(), 0);
                if (search(std::move(domains), assignment))
                    return assignment;
                return nullopt;
            }
        };
    }

    auto finite_solve(const FiniteInstance & inst, unsigned long long node_limit) -> FiniteVerdict
    {
        FiniteSearch search{ inst, node_limit };
        FiniteVerdict verdict;
        verdict.assignment = search.run();
        verdict.status = verdict.assignment ? Status::Sat : Status::Unsat;
        return verdict;
    }

    auto verify_assignment(const FiniteInstance & inst, const vector<unsigned> & assignment) -> bool
    {
        if (assignment.size() != inst.variables.size())
            return false;
        for (auto & c : inst.constraints) {
            Tuple t;
            for (auto v : c.scope)
                t.push_back(assignment[v]);
            if (! std::binary_search(c.tuples.begin(), c.tuples.end(), t))
                return false;
        }
        return true;
    }
}

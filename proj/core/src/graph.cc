#include <hgw/errors.hh>
#include <hgw/graph.hh>

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

using std::pair;
using std::set;
using std::span;
using std::string;
using std::vector;

namespace hgw
{
    FiniteGraph::FiniteGraph(unsigned order) :
        _order(order),
        _adjacency(std::size_t{ order } * order, false)
    {
        if (order == 0)
            throw InvalidGraph{ "a graph needs at least one vertex" };
    }

    FiniteGraph::FiniteGraph(unsigned order, span<const pair<unsigned, unsigned>> edges) :
        FiniteGraph(order)
    {
        for (auto & [a, b] : edges) {
            if (a >= order || b >= order)
                throw InvalidGraph{ "edge endpoint out of range" };
            if (a == b)
                throw InvalidGraph{ "loops are not allowed" };
            _adjacency[a * _order + b] = true;
            _adjacency[b * _order + a] = true;
        }
    }

    auto FiniteGraph::complete(unsigned order) -> FiniteGraph
    {
        return FiniteGraph{ order }.complement();
    }

    auto FiniteGraph::null(unsigned order) -> FiniteGraph
    {
        return FiniteGraph{ order };
    }

    auto FiniteGraph::path3() -> FiniteGraph
    {
        vector<pair<unsigned, unsigned>> edges{ { 0, 1 }, { 1, 2 } };
        return FiniteGraph{ 3, edges };
    }

    auto FiniteGraph::adjacent(unsigned a, unsigned b) const -> bool
    {
        return _adjacency[a * _order + b];
    }

    auto FiniteGraph::degree(unsigned v) const -> unsigned
    {
        unsigned result = 0;
        for (unsigned w = 0; w < _order; ++w)
            if (adjacent(v, w))
                ++result;
        return result;
    }

    auto FiniteGraph::edge_count() const -> unsigned
    {
        unsigned result = 0;
        for (unsigned v = 0; v < _order; ++v)
            result += degree(v);
        return result / 2;
    }

    auto FiniteGraph::complement() const -> FiniteGraph
    {
        FiniteGraph result{ _order };
        for (unsigned a = 0; a < _order; ++a)
            for (unsigned b = 0; b < _order; ++b)
                result._adjacency[a * _order + b] = (a != b) && ! adjacent(a, b);
        return result;
    }

    auto FiniteGraph::induced(span<const unsigned> vertices) const -> FiniteGraph
    {
        FiniteGraph result{ static_cast<unsigned>(vertices.size()) };
        for (unsigned a = 0; a < vertices.size(); ++a)
            for (unsigned b = 0; b < vertices.size(); ++b)
                result._adjacency[a * result._order + b] = adjacent(vertices[a], vertices[b]);
        return result;
    }

    auto FiniteGraph::canonical_form() const -> vector<bool>
    {
        vector<unsigned> permutation(_order);
        std::iota(permutation.begin(), permutation.end(), 0u);

        vector<bool> best, current;
        current.reserve(_order * (_order - 1) / 2);
        do {
            current.clear();
            for (unsigned a = 0; a < _order; ++a)
                for (unsigned b = a + 1; b < _order; ++b)
                    current.push_back(adjacent(permutation[a], permutation[b]));
            if (best.empty() || current < best)
                best = current;
        } while (std::next_permutation(permutation.begin(), permutation.end()));

        return best;
    }

    auto FiniteGraph::to_string() const -> string
    {
        std::ostringstream out;
        out << "graph(" << _order << "; ";
        bool first = true;
        for (unsigned a = 0; a < _order; ++a)
            for (unsigned b = a + 1; b < _order; ++b)
                if (adjacent(a, b)) {
                    if (! first)
                        out << " ";
                    out << a << "-" << b;
                    first = false;
                }
        out << ")";
        return out.str();
    }

    namespace
    {
        struct EmbeddingSearch
        {
            const FiniteGraph & pattern;
            const FiniteGraph & host;
            vector<unsigned> pattern_degree, host_degree;
            vector<unsigned> mapping;
            vector<bool> used;

            auto extend(unsigned p) -> bool
            {
                if (p == pattern.order())
                    return true;

                unsigned pattern_non_degree = pattern.order() - 1 - pattern_degree[p];
                for (unsigned h = 0; h < host.order(); ++h) {
                    if (used[h])
                        continue;
                    // induced embedding maps p's neighbours to neighbours and its
                    // non-neighbours to non-neighbours
                    if (host_degree[h] < pattern_degree[p] || host.order() - 1 - host_degree[h] < pattern_non_degree)
                        continue;

                    bool ok = true;
                    for (unsigned q = 0; q < p && ok; ++q)
                        ok = pattern.adjacent(p, q) == host.adjacent(h, mapping[q]);
                    if (! ok)
                        continue;

                    mapping[p] = h;
                    used[h] = true;
                    if (extend(p + 1))
                        return true;
                    used[h] = false;
                }
                return false;
            }
        };
    }

    auto embeds(const FiniteGraph & pattern, const FiniteGraph & host) -> bool
    {
        if (pattern.order() > host.order())
            return false;

        EmbeddingSearch search{ pattern, host, {}, {}, vector<unsigned>(pattern.order()), vector<bool>(host.order(), false) };
        for (unsigned v = 0; v < pattern.order(); ++v)
            search.pattern_degree.push_back(pattern.degree(v));
        for (unsigned v = 0; v < host.order(); ++v)
            search.host_degree.push_back(host.degree(v));
        return search.extend(0);
    }

    auto isomorphic(const FiniteGraph & a, const FiniteGraph & b) -> bool
    {
        return a.order() == b.order() && a.edge_count() == b.edge_count() && a.canonical_form() == b.canonical_form();
    }

    auto all_graphs_up_to_isomorphism(unsigned order) -> vector<FiniteGraph>
    {
        vector<pair<unsigned, unsigned>> slots;
        for (unsigned a = 0; a < order; ++a)
            for (unsigned b = a + 1; b < order; ++b)
                slots.emplace_back(a, b);

        vector<FiniteGraph> result;
        set<vector<bool>> seen;
        for (unsigned long mask = 0; mask < (1ul << slots.size()); ++mask) {
            vector<pair<unsigned, unsigned>> edges;
            for (unsigned s = 0; s < slots.size(); ++s)
                if (mask & (1ul << s))
                    edges.push_back(slots[s]);
            FiniteGraph graph{ order, edges };
            if (seen.insert(graph.canonical_form()).second)
                result.push_back(std::move(graph));
        }
        return result;
    }
}

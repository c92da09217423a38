#include "oracles.hh"

#include <hgw/errors.hh>
#include <hgw/family.hh>
#include <hgw/graph.hh>

#include <gtest/gtest.h>

#include <algorithm>
#include <utility>
#include <vector>

using namespace hgw;

using std::nullopt;
using std::pair;
using std::vector;

namespace
{
    auto to_graph(const naive::Matrix & m) -> FiniteGraph
    {
        vector<pair<unsigned, unsigned>> edges;
        for (unsigned a = 0; a < m.size(); ++a)
            for (unsigned b = a + 1; b < m.size(); ++b)
                if (m[a][b])
                    edges.emplace_back(a, b);
        return FiniteGraph{ unsigned(m.size()), edges };
    }

    auto catalog() -> vector<GraphFamily>
    {
        return { GraphFamily::random(), GraphFamily::henson(3), GraphFamily::henson(4), GraphFamily::henson(5),
            GraphFamily::cliques(nullopt, 2), GraphFamily::cliques(2, nullopt), GraphFamily::cliques(nullopt, nullopt),
            GraphFamily::cliques(1, nullopt), GraphFamily::cliques(nullopt, 1), GraphFamily::cliques(3, nullopt),
            GraphFamily::complement(GraphFamily::henson(3)), GraphFamily::complement(GraphFamily::cliques(nullopt, 2)) };
    }

    auto same_up_to_isomorphism(const vector<FiniteGraph> & a, const vector<FiniteGraph> & b) -> bool
    {
        if (a.size() != b.size())
            return false;
        for (auto & g : a)
            if (std::none_of(b.begin(), b.end(), [&](const FiniteGraph & h) { return isomorphic(g, h); }))
                return false;
        return true;
    }
}

TEST(FiniteGraph, RejectsEmptyAndLoops)
{
    EXPECT_THROW(FiniteGraph{ 0 }, InvalidGraph);
    vector<pair<unsigned, unsigned>> loop{ { 1, 1 } };
    EXPECT_THROW((FiniteGraph{ 2, loop }), InvalidGraph);
    vector<pair<unsigned, unsigned>> outside{ { 0, 2 } };
    EXPECT_THROW((FiniteGraph{ 2, outside }), InvalidGraph);
}

TEST(FiniteGraph, AdjacencyIsSymmetric)
{
    vector<pair<unsigned, unsigned>> edges{ { 0, 1 }, { 2, 1 } };
    FiniteGraph g{ 3, edges };
    EXPECT_TRUE(g.adjacent(1, 0));
    EXPECT_TRUE(g.adjacent(1, 2));
    EXPECT_FALSE(g.adjacent(0, 2));
    EXPECT_FALSE(g.adjacent(0, 0));
    EXPECT_TRUE(isomorphic(g, FiniteGraph::path3()));
}

TEST(Bounds, Random)
{
    EXPECT_TRUE(bounds_of(GraphFamily::random()).empty());
}

TEST(Bounds, Henson)
{
    EXPECT_TRUE(same_up_to_isomorphism(bounds_of(GraphFamily::henson(3)), { FiniteGraph::complete(3) }));
    EXPECT_TRUE(same_up_to_isomorphism(bounds_of(GraphFamily::henson(5)), { FiniteGraph::complete(5) }));
}

TEST(Bounds, CliquesOfUnboundedSizeTwoCount)
{
    EXPECT_TRUE(same_up_to_isomorphism(bounds_of(GraphFamily::cliques(nullopt, 2)),
        { FiniteGraph::path3(), FiniteGraph::null(3) }));
}

TEST(Bounds, CliquesOfSizeOneIsMinimised)
{
    EXPECT_TRUE(same_up_to_isomorphism(bounds_of(GraphFamily::cliques(1, nullopt)), { FiniteGraph::complete(2) }));
    EXPECT_EQ(l_value(GraphFamily::cliques(1, nullopt)), 3u);
}

TEST(Bounds, ComplementOfHenson)
{
    EXPECT_TRUE(same_up_to_isomorphism(bounds_of(GraphFamily::complement(GraphFamily::henson(3))), { FiniteGraph::null(3) }));
}

TEST(Bounds, ComplementTwiceGivesOriginalBounds)
{
    for (auto & f : { GraphFamily::henson(4), GraphFamily::cliques(nullopt, 2), GraphFamily::cliques(3, nullopt) }) {
        vector<FiniteGraph> twice;
        auto complement = GraphFamily::complement(f);
        for (auto & g : bounds_of(complement))
            twice.push_back(g.complement());
        EXPECT_TRUE(same_up_to_isomorphism(twice, bounds_of(f))) << f.name();
    }
}

TEST(Family, InvalidParameters)
{
    EXPECT_THROW(GraphFamily::cliques(2, 3), InvalidFamily);
    EXPECT_THROW(GraphFamily::henson(2), InvalidFamily);
    EXPECT_THROW(GraphFamily::cliques(0, nullopt), InvalidFamily);
    EXPECT_THROW(GraphFamily::complement(GraphFamily::random()), InvalidFamily);
    EXPECT_THROW(GraphFamily::complement(GraphFamily::complement(GraphFamily::henson(3))), InvalidFamily);
}

TEST(LValue, Examples)
{
    EXPECT_EQ(l_value(GraphFamily::random()), 3u);
    EXPECT_EQ(l_value(GraphFamily::henson(3)), 3u);
    EXPECT_EQ(l_value(GraphFamily::henson(4)), 4u);
    EXPECT_EQ(l_value(GraphFamily::cliques(2, nullopt)), 3u);
    EXPECT_EQ(l_value(GraphFamily::cliques(nullopt, 3)), 4u);
    EXPECT_EQ(l_value(GraphFamily::cliques(4, nullopt)), 5u);
}

TEST(LValue, AtLeastThree)
{
    for (auto & f : catalog())
        EXPECT_GE(l_value(f), 3u) << f.name();
}

TEST(Embeds, Examples)
{
    EXPECT_TRUE(embeds(FiniteGraph::complete(2), FiniteGraph::complete(3)));
    EXPECT_FALSE(embeds(FiniteGraph::path3(), FiniteGraph::complete(3)));
    EXPECT_FALSE(embeds(FiniteGraph::complete(3), FiniteGraph::path3()));
    EXPECT_FALSE(embeds(FiniteGraph::complete(4), FiniteGraph::complete(3)));
}

TEST(Embeds, ReflexiveAndTransitive)
{
    vector<FiniteGraph> graphs;
    for (unsigned o = 1; o <= 4; ++o)
        for (auto & g : all_graphs_up_to_isomorphism(o))
            graphs.push_back(g);
    ASSERT_EQ(graphs.size(), 18u);
    for (auto & a : graphs) {
        EXPECT_TRUE(embeds(a, a));
        for (auto & b : graphs)
            if (embeds(a, b))
                for (auto & c : graphs)
                    if (embeds(b, c)) {
                        EXPECT_TRUE(embeds(a, c));
                    }
    }
}

TEST(Realizable, Examples)
{
    EXPECT_FALSE(realizable(GraphFamily::henson(3), FiniteGraph::complete(3)));
    EXPECT_FALSE(realizable(GraphFamily::cliques(nullopt, 2), FiniteGraph::path3()));
    for (unsigned o = 1; o <= 6; ++o)
        for (auto & g : all_graphs_up_to_isomorphism(o))
            EXPECT_TRUE(realizable(GraphFamily::random(), g));
}

TEST(Realizable, AgreesWithStructuralDescription)
{
    for (auto & f : catalog())
        for (unsigned o = 1; o <= 5; ++o)
            for (auto & m : naive::all_graphs(o))
                ASSERT_EQ(realizable(f, to_graph(m)), naive::in_family(f, m)) << f.name() << " " << to_graph(m).to_string();
}

TEST(Realizable, ClosedUnderInducedSubgraphs)
{
    for (auto & f : catalog())
        for (unsigned o = 2; o <= 5; ++o)
            for (auto & g : all_graphs_up_to_isomorphism(o)) {
                if (! realizable(f, g))
                    continue;
                for (unsigned drop = 0; drop < o; ++drop) {
                    vector<unsigned> keep;
                    for (unsigned v = 0; v < o; ++v)
                        if (v != drop)
                            keep.push_back(v);
                    EXPECT_TRUE(realizable(f, g.induced(keep))) << f.name();
                }
            }
}

TEST(Realizable, AntitoneInBounds)
{
    // a larger bound set forbids more graphs
    for (unsigned o = 1; o <= 5; ++o)
        for (auto & g : all_graphs_up_to_isomorphism(o)) {
            if (realizable(GraphFamily::henson(3), g)) {
                EXPECT_TRUE(realizable(GraphFamily::henson(4), g));
            }
            if (realizable(GraphFamily::cliques(2, nullopt), g)) {
                EXPECT_TRUE(realizable(GraphFamily::cliques(nullopt, nullopt), g));
            }
        }
}

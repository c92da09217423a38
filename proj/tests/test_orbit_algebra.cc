#include "oracles.hh"

#include <hgw/errors.hh>
#include <hgw/family.hh>
#include <hgw/orbit_relation.hh>
#include <hgw/qf_type.hh>

#include <gtest/gtest.h>

#include <set>
#include <string>
#include <utility>
#include <vector>

using namespace hgw;

using std::nullopt;
using std::set;
using std::string;
using std::vector;

namespace
{
    auto t(const string & text, unsigned arity) -> QfType
    {
        return QfType::parse(text, arity);
    }

    auto strings_of(const OrbitRelation & rel) -> set<string>
    {
        set<string> result;
        for (auto & o : rel.orbits())
            result.insert(o.to_string());
        return result;
    }

    // all position lists of the given length over [arity]
    auto position_lists(unsigned arity, unsigned length) -> vector<vector<unsigned>>
    {
        vector<vector<unsigned>> result{ {} };
        for (unsigned i = 0; i < length; ++i) {
            vector<vector<unsigned>> next;
            for (auto & prefix : result)
                for (unsigned p = 0; p < arity; ++p) {
                    next.push_back(prefix);
                    next.back().push_back(p);
                }
            result = std::move(next);
        }
        return result;
    }
}

TEST(QfType, ParseAndPrintRoundTrip)
{
    vector<std::pair<string, unsigned>> cases{ { "E,E,N", 3 }, { "=,N,N", 3 }, { "E,N,N,N,N,=", 4 }, { "=,=,=", 3 } };
    for (auto & [s, arity] : cases)
        EXPECT_EQ(t(s, arity).to_string(), s);
    EXPECT_EQ(QfType::parse("", 1).to_string(), "");
    EXPECT_EQ(QfType::parse("E", 2).label(1, 0), OrbitLabel::E);
}

TEST(QfType, ParseErrors)
{
    EXPECT_THROW(t("E,X,N", 3), ParseError);
    EXPECT_THROW(t("E,N", 3), ParseError);
    // "=" is transitive: 1~2 and 1~3 force 2~3
    EXPECT_THROW(t("=,=,E", 3), ParseError);
    EXPECT_THROW(t("=,E,N", 3), ParseError);
    EXPECT_THROW((QfType{ 3, { OrbitLabel::Eq, OrbitLabel::E, OrbitLabel::N } }), InvalidType);
}

TEST(QfType, CanonicalClasses)
{
    auto x = t("N,=,N,N,E,N", 4);
    EXPECT_EQ(x.class_of(), (vector<unsigned>{ 0, 1, 0, 2 }));
    EXPECT_EQ(x.class_count(), 3u);
    EXPECT_EQ(QfType::parse(x.to_string(), 4), x);
}

TEST(QfType, OrderingIsArityThenLabels)
{
    EXPECT_LT(t("N", 2), t("E,E,E", 3));
    EXPECT_LT(t("=", 2), t("E", 2));
    EXPECT_LT(t("E", 2), t("N", 2));
    EXPECT_LT(t("E,E,N", 3), t("E,N,E", 3));
}

TEST(QuotientGraph, Examples)
{
    auto k2 = quotient_graph(t("E", 2));
    EXPECT_EQ(k2.order(), 2u);
    EXPECT_EQ(k2.edge_count(), 1u);
    EXPECT_EQ(quotient_graph(t("=,=,=", 3)).order(), 1u);
    auto g = quotient_graph(t("E,N,N,N,N,=", 4));
    EXPECT_EQ(g.order(), 3u);
    EXPECT_EQ(g.edge_count(), 1u);
}

TEST(Project, Examples)
{
    auto een = t("E,E,N", 3);
    vector<unsigned> first_third{ 0, 2 }, second_third{ 1, 2 }, identity{ 0, 1, 2 };
    EXPECT_EQ(project(een, first_third).to_string(), "E");
    EXPECT_EQ(project(een, second_third).to_string(), "N");
    EXPECT_EQ(project(een, identity), een);
    vector<unsigned> last_two{ 2, 3 };
    EXPECT_EQ(project(t("E,N,N,N,N,=", 4), last_two).to_string(), "=");
    vector<unsigned> repeated{ 1, 1, 0 };
    EXPECT_EQ(project(een, repeated).to_string(), "=,E,E");
    vector<unsigned> out_of_range{ 3 }, none{};
    EXPECT_THROW(project(een, out_of_range), IndexOutOfRange);
    EXPECT_THROW(project(een, none), IndexOutOfRange);
}

TEST(Project, Composition)
{
    auto & all = enumerate_types(GraphFamily::random(), 4);
    for (auto & x : all.orbits())
        for (unsigned a = 1; a <= 3; ++a)
            for (auto & s : position_lists(4, a))
                for (unsigned b = 1; b <= 3; ++b)
                    for (auto & s2 : position_lists(a, b)) {
                        vector<unsigned> composed;
                        for (auto p : s2)
                            composed.push_back(s[p]);
                        ASSERT_EQ(project(project(x, s), s2), project(x, composed));
                    }
}

TEST(RelationProject, Examples)
{
    vector<unsigned> first_pair{ 0, 1 };
    auto e_or_n = OrbitRelation::from_orbitals(OrbitalSet::neq());
    EXPECT_EQ(relation_project(e_or_n, first_pair), e_or_n);

    OrbitRelation tab{ 4, { t("E,N,N,N,N,=", 4), t("N,N,N,N,N,E", 4) } };
    EXPECT_EQ(strings_of(relation_project(tab, first_pair)), (set<string>{ "E", "N" }));
    EXPECT_TRUE(relation_project(OrbitRelation{ 4 }, first_pair).empty());
}

TEST(OrbitRelation, SortedDuplicateFree)
{
    OrbitRelation r{ 2, { t("N", 2), t("E", 2), t("N", 2) } };
    ASSERT_EQ(r.size(), 2u);
    EXPECT_EQ(r.orbits()[0].to_string(), "E");
    EXPECT_THROW((OrbitRelation{ 2, { t("E,E,E", 3) } }), ArityMismatch);
}

TEST(OrbitRelation, SetOperations)
{
    auto uu_e = OrbitRelation::from_orbitals(OrbitalSet::uu_e());
    auto uu_n = OrbitRelation::from_orbitals(OrbitalSet::uu_n());
    EXPECT_EQ(intersection(uu_e, uu_n), OrbitRelation::from_orbitals(OrbitalSet::eq()));
    EXPECT_EQ(union_of(uu_e, uu_n), enumerate_types(GraphFamily::random(), 2));
    EXPECT_TRUE(OrbitRelation::from_orbitals(OrbitalSet::e()).is_subset_of(uu_e));
    EXPECT_EQ(OrbitRelation::from_orbitals(OrbitalSet::e()).restricted_to(GraphFamily::cliques(1, nullopt)).size(), 0u);
}

TEST(EnumerateTypes, Counts)
{
    EXPECT_EQ(enumerate_types(GraphFamily::random(), 1).size(), 1u);
    EXPECT_EQ(enumerate_types(GraphFamily::random(), 2).size(), 3u);
    EXPECT_EQ(enumerate_types(GraphFamily::random(), 3).size(), 15u);
    EXPECT_EQ(enumerate_types(GraphFamily::henson(3), 3).size(), 14u);
    EXPECT_EQ(enumerate_types(GraphFamily::cliques(nullopt, 2), 3).size(), 11u);
}

TEST(EnumerateTypes, AgreesWithBruteForce)
{
    vector<GraphFamily> families{ GraphFamily::random(), GraphFamily::henson(3), GraphFamily::henson(4),
        GraphFamily::cliques(nullopt, 2), GraphFamily::cliques(2, nullopt), GraphFamily::cliques(nullopt, nullopt),
        GraphFamily::complement(GraphFamily::henson(3)), GraphFamily::complement(GraphFamily::cliques(nullopt, 2)) };
    for (auto & f : families)
        for (unsigned r = 1; r <= 4; ++r)
            EXPECT_EQ(strings_of(enumerate_types(f, r)), naive::types(f, r)) << f.name() << " arity " << r;
}

TEST(EnumerateTypes, ClosedUnderProjection)
{
    for (auto & f : { GraphFamily::henson(3), GraphFamily::cliques(nullopt, 2) }) {
        auto & four = enumerate_types(f, 4);
        for (unsigned b = 1; b <= 3; ++b) {
            auto & target = enumerate_types(f, b);
            for (auto & s : position_lists(4, b))
                for (auto & x : four.orbits())
                    ASSERT_TRUE(target.contains(project(x, s)));
        }
    }
}

TEST(EnumerateTypes, ArityCap)
{
    EXPECT_THROW(enumerate_types(GraphFamily::random(), 9), ArityTooLarge);
    EXPECT_THROW(enumerate_types(GraphFamily::random(), 4, 3), ArityTooLarge);
}

TEST(MakeRealizableType, RejectsForbiddenQuotients)
{
    EXPECT_THROW(make_realizable_type(GraphFamily::henson(3), 3, { OrbitLabel::E, OrbitLabel::E, OrbitLabel::E }),
        NotRealizable);
    EXPECT_NO_THROW(make_realizable_type(GraphFamily::henson(3), 3, { OrbitLabel::E, OrbitLabel::E, OrbitLabel::N }));
}

TEST(OrbitalSet, NamesAndParsing)
{
    EXPECT_EQ(OrbitalSet::uu_e().name(), "uuE");
    EXPECT_EQ(OrbitalSet::neq().name(), "NEQ");
    EXPECT_EQ(parse_orbital_set("uuN"), OrbitalSet::uu_n());
    EXPECT_EQ(parse_orbital_set("="), OrbitalSet::eq());
    EXPECT_THROW(parse_orbital_set("X"), ParseError);
}

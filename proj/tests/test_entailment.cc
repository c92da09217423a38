#include "oracles.hh"

#include <hgw/entailment.hh>
#include <hgw/errors.hh>
#include <hgw/family.hh>
#include <hgw/orbit_relation.hh>

#include <gtest/gtest.h>

#include <random>
#include <set>
#include <string>
#include <vector>

using namespace hgw;

using std::set;
using std::string;
using std::vector;

namespace
{
    auto t(const string & text) -> QfType
    {
        return QfType::parse(text, 4);
    }

    const string ta = "E,N,N,N,N,=", tb = "N,N,N,N,N,E", tc = "E,N,N,N,N,E";

    auto rel(const vector<string> & orbits) -> OrbitRelation
    {
        vector<QfType> types;
        for (auto & o : orbits)
            types.push_back(t(o));
        return OrbitRelation{ 4, types };
    }

    const EntailmentQuery e_to_eq{ OrbitalSet::e(), OrbitalSet::eq(), {} };
    const EntailmentQuery n_to_e{ OrbitalSet::n(), OrbitalSet::e(), {} };

    auto chars_of(OrbitalSet s) -> string
    {
        string result;
        if (s.contains(OrbitLabel::Eq))
            result += '=';
        if (s.contains(OrbitLabel::E))
            result += 'E';
        if (s.contains(OrbitLabel::N))
            result += 'N';
        return result;
    }

    auto naive_report(const OrbitRelation & r, const EntailmentQuery & q) -> std::pair<bool, bool>
    {
        set<string> orbits;
        for (auto & o : r.orbits())
            orbits.insert(o.to_string());
        vector<naive::Side> sides;
        for (auto & s : q.side_conditions)
            sides.push_back({ s.first, s.second, chars_of(s.allowed) });
        return { naive::entails(orbits, chars_of(q.premise), chars_of(q.conclusion), sides),
            naive::efficiently_entails(orbits, chars_of(q.premise), chars_of(q.conclusion), sides) };
    }
}

TEST(Entails, Examples)
{
    EXPECT_TRUE(entails(rel({ ta, tb }), e_to_eq));
    EXPECT_FALSE(entails(rel({ ta, tb, tc }), e_to_eq));
    EXPECT_TRUE(entails(OrbitRelation{ 4 }, e_to_eq));
    EXPECT_THROW(entails(OrbitRelation::from_orbitals(OrbitalSet::e()), e_to_eq), ArityMismatch);
}

TEST(EfficientlyEntails, Examples)
{
    auto both = efficiently_entails(rel({ ta, tb }), e_to_eq);
    EXPECT_TRUE(both.entails);
    EXPECT_TRUE(both.efficient);
    EXPECT_EQ(both.witness_forward, t(ta));
    EXPECT_EQ(both.witness_backward, t(tb));

    auto only_a = efficiently_entails(rel({ ta }), e_to_eq);
    EXPECT_TRUE(only_a.entails);
    EXPECT_FALSE(only_a.efficient);
    EXPECT_FALSE(only_a.witness_backward);

    auto reverse = efficiently_entails(rel({ ta, tb }), n_to_e);
    EXPECT_TRUE(reverse.entails);
    EXPECT_TRUE(reverse.efficient);
    EXPECT_EQ(reverse.witness_forward, t(tb));
    EXPECT_EQ(reverse.witness_backward, t(ta));
}

TEST(EfficientlyEntails, SideConditions)
{
    EntailmentQuery q{ OrbitalSet::n(), OrbitalSet::e(), { { 2, 3, OrbitalSet::uu_e() } } };
    auto report = efficiently_entails(rel({ ta, tb }), q);
    EXPECT_TRUE(report.side_conditions_hold);
    EXPECT_TRUE(report.efficient);
    auto broken = efficiently_entails(rel({ ta, tb, "E,N,N,N,N,N" }), q);
    EXPECT_FALSE(broken.side_conditions_hold);
    EXPECT_FALSE(broken.entails);
}

TEST(Classify, Examples)
{
    auto & catalog = shape_catalog();
    auto reports = classify(rel({ ta, tb }), catalog);
    ASSERT_EQ(reports.size(), catalog.size());
    bool found = false;
    for (unsigned i = 0; i < catalog.size(); ++i)
        if (catalog[i].premise == OrbitalSet::e() && catalog[i].conclusion == OrbitalSet::eq() &&
            catalog[i].side_conditions.empty())
            found = reports[i].efficient;
    EXPECT_TRUE(found);

    for (auto & r : classify(enumerate_types(GraphFamily::random(), 4), catalog))
        EXPECT_FALSE(r.entails) << r.shape;
    for (auto & r : classify(OrbitRelation{ 4 }, catalog))
        EXPECT_FALSE(r.efficient) << r.shape;
}

TEST(Classify, ShapeNames)
{
    EXPECT_EQ(e_to_eq.name(), "[(E(x1,x2) => =(x3,x4))]");
    EntailmentQuery q{ OrbitalSet::n(), OrbitalSet::e(), { { 2, 3, OrbitalSet::uu_e() } } };
    EXPECT_EQ(q.name(), "[(N(x1,x2) => E(x3,x4)), (uuE(x3,x4))]");
    EXPECT_EQ(shape_catalog().size(), 11u);
}

TEST(Classify, AgreesWithLiteralEvaluation)
{
    auto & all = enumerate_types(GraphFamily::random(), 4).orbits();
    auto & catalog = shape_catalog();
    auto check = [&](const OrbitRelation & r) {
        auto reports = classify(r, catalog);
        for (unsigned i = 0; i < catalog.size(); ++i) {
            auto [entailed, efficient] = naive_report(r, catalog[i]);
            ASSERT_EQ(reports[i].entails, entailed) << catalog[i].name();
            ASSERT_EQ(reports[i].efficient, efficient) << catalog[i].name();
        }
    };

    for (unsigned a = 0; a < all.size(); ++a) {
        check(OrbitRelation{ 4, { all[a] } });
        for (unsigned b = a + 1; b < all.size(); ++b)
            check(OrbitRelation{ 4, { all[a], all[b] } });
    }

    std::mt19937_64 rng{ 5 };
    for (unsigned round = 0; round < 2000; ++round) {
        auto size = 3 + rng() % 62;
        vector<QfType> chosen;
        for (unsigned i = 0; i < size; ++i)
            chosen.push_back(all[rng() % all.size()]);
        check(OrbitRelation{ 4, chosen });
    }
}

TEST(EfficientlyEntails, ImpliesEntails)
{
    auto & all = enumerate_types(GraphFamily::random(), 4).orbits();
    std::mt19937_64 rng{ 6 };
    for (unsigned round = 0; round < 500; ++round) {
        vector<QfType> chosen;
        for (unsigned i = 0, size = 1 + rng() % 8; i < size; ++i)
            chosen.push_back(all[rng() % all.size()]);
        for (auto & r : classify(OrbitRelation{ 4, chosen }, shape_catalog())) {
            if (r.efficient) {
                EXPECT_TRUE(r.entails);
                EXPECT_TRUE(r.witness_forward);
                EXPECT_TRUE(r.witness_backward);
            }
        }
    }
}

TEST(EfficientlyEntails, Monotonicity)
{
    auto & all = enumerate_types(GraphFamily::random(), 4).orbits();
    std::mt19937_64 rng{ 7 };
    for (unsigned round = 0; round < 500; ++round) {
        vector<QfType> chosen;
        for (unsigned i = 0, size = 1 + rng() % 6; i < size; ++i)
            chosen.push_back(all[rng() % all.size()]);
        OrbitRelation base{ 4, chosen };
        auto extra = chosen;
        extra.push_back(all[rng() % all.size()]);
        OrbitRelation larger{ 4, extra };
        for (auto & q : shape_catalog()) {
            // adding orbits can only break the implication
            if (entails(larger, q)) {
                EXPECT_TRUE(entails(base, q));
            }
            // removing orbits can only lose witnesses
            if (efficiently_entails(base, q).efficient && entails(larger, q)) {
                EXPECT_TRUE(efficiently_entails(larger, q).efficient);
            }
        }
    }
}

TEST(DominatedShapes, ForEachDominatingOrbital)
{
    auto e = dominated_shapes(OrbitLabel::E);
    ASSERT_EQ(e.size(), 3u);
    EXPECT_EQ(e[0].premise, OrbitalSet::e());
    EXPECT_EQ(e[0].conclusion, OrbitalSet::uu_n());
    EXPECT_EQ(e[1].conclusion, OrbitalSet::eq());
    EXPECT_EQ(e[2].premise, OrbitalSet::n());
    EXPECT_EQ(e[2].side_conditions.size(), 2u);
    auto n = dominated_shapes(OrbitLabel::N);
    EXPECT_EQ(n[0].premise, OrbitalSet::n());
    EXPECT_EQ(n[0].conclusion, OrbitalSet::uu_e());
    EXPECT_THROW(dominated_shapes(OrbitLabel::Eq), InvalidType);
}

TEST(PermuteCoordinates, SwapsFirstTwo)
{
    vector<unsigned> swap{ 1, 0, 2, 3 };
    EXPECT_EQ(permute_coordinates(rel({ "E,E,N,N,N,N" }), swap), rel({ "E,N,N,E,N,N" }));
    EXPECT_EQ(permute_coordinates(rel({ ta, tb }), swap), rel({ ta, tb }));
    vector<unsigned> not_a_permutation{ 0, 0, 1, 2 }, too_short{ 0, 1, 2 };
    EXPECT_THROW(permute_coordinates(rel({ ta }), not_a_permutation), IndexOutOfRange);
    EXPECT_THROW(permute_coordinates(rel({ ta }), too_short), IndexOutOfRange);
}

#include <hgw/behavior.hh>
#include <hgw/errors.hh>
#include <hgw/family.hh>
#include <hgw/orbit_relation.hh>

#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

using namespace hgw;

using std::nullopt;
using std::string;
using std::vector;

namespace
{
    constexpr auto Eq = OrbitLabel::Eq, E = OrbitLabel::E, N = OrbitLabel::N;

    // rows are the first argument, columns the second, both in the order =, E, N
    using Table = vector<vector<OrbitLabel>>;

    const Table b1{ { Eq, E, N }, { E, E, E }, { N, E, N } };
    const Table b2{ { Eq, E, E }, { E, E, E }, { E, E, E } };
    const Table b3{ { Eq, N, N }, { N, E, N }, { N, N, N } };

    auto matches(const Behavior & b, const Table & table) -> bool
    {
        for (unsigned r = 0; r < 3; ++r)
            for (unsigned c = 0; c < 3; ++c)
                if (b(all_labels[r], all_labels[c]) != table[r][c])
                    return false;
        return true;
    }

    auto t(const string & text, unsigned arity) -> QfType
    {
        return QfType::parse(text, arity);
    }

    auto all_binary() -> vector<Behavior>
    {
        vector<Behavior> result;
        for (auto s : { BinaryShape::Min, BinaryShape::Max, BinaryShape::Projection1, BinaryShape::Projection2,
                 BinaryShape::Xor, BinaryShape::Xnor })
            for (auto f : { Flavor::Balanced, Flavor::EDominated, Flavor::NDominated })
                result.push_back(make_binary(s, f));
        result.push_back(make_binary(BinaryShape::EConstant, nullopt));
        result.push_back(make_binary(BinaryShape::NConstant, nullopt));
        return result;
    }

    auto all_ternary() -> vector<Behavior>
    {
        vector<Behavior> result;
        for (auto & h : all_binary()) {
            result.push_back(make_ternary(TernaryShape::Majority, h));
            result.push_back(make_ternary(TernaryShape::Minority, h));
        }
        result.push_back(make_ternary(TernaryShape::HC2Omega, nullopt));
        return result;
    }
}

TEST(BinaryTables, MaxBalancedIsB1)
{
    EXPECT_TRUE(matches(make_binary(BinaryShape::Max, Flavor::Balanced), b1));
}

TEST(BinaryTables, EConstantIsB2)
{
    EXPECT_TRUE(matches(make_binary(BinaryShape::EConstant, nullopt), b2));
}

TEST(BinaryTables, MinNDominatedIsB3)
{
    EXPECT_TRUE(matches(make_binary(BinaryShape::Min, Flavor::NDominated), b3));
}

TEST(MakeBinary, IncoherentSpecs)
{
    EXPECT_THROW(make_binary(BinaryShape::EConstant, Flavor::Balanced), IncoherentSpec);
    EXPECT_THROW(make_binary(BinaryShape::Min, nullopt), IncoherentSpec);
}

TEST(MakeBinary, ShapesOnDistinctLabels)
{
    auto xor_ = make_binary(BinaryShape::Xor, Flavor::Balanced);
    auto xnor = make_binary(BinaryShape::Xnor, Flavor::Balanced);
    auto p2 = make_binary(BinaryShape::Projection2, Flavor::EDominated);
    EXPECT_EQ(xor_(E, N), E);
    EXPECT_EQ(xor_(N, N), N);
    EXPECT_EQ(xnor(E, E), E);
    EXPECT_EQ(xnor(E, N), N);
    EXPECT_EQ(p2(E, N), N);
    EXPECT_EQ(p2(Eq, N), E);
    EXPECT_EQ(make_binary(BinaryShape::NConstant, nullopt)(E, E), N);
}

TEST(Behaviors, InjectiveExceptH)
{
    for (auto & b : all_binary())
        EXPECT_TRUE(b.is_injective()) << b.name();
    for (auto & b : all_ternary())
        EXPECT_EQ(b.is_injective(), b.name() != "h_c2omega") << b.name();
}

TEST(MakeTernary, Examples)
{
    auto majority = make_ternary(TernaryShape::Majority, make_binary(BinaryShape::Projection1, Flavor::Balanced));
    EXPECT_EQ(majority(E, E, N), E);
    EXPECT_EQ(majority(N, E, N), N);
    auto h = make_ternary(TernaryShape::HC2Omega, nullopt);
    EXPECT_EQ(h(N, E, E), N);
    EXPECT_EQ(h(E, Eq, N), N);
    EXPECT_EQ(h(E, Eq, Eq), E);
    EXPECT_EQ(h(E, E, E), E);
    EXPECT_EQ(h(Eq, E, E), Eq);
    EXPECT_EQ(h(Eq, Eq, Eq), Eq);
}

TEST(MakeTernary, HyperplaneCases)
{
    auto hyper = make_binary(BinaryShape::Min, Flavor::NDominated);
    auto minority = make_ternary(TernaryShape::Minority, hyper);
    EXPECT_EQ(minority(E, E, E), E);
    EXPECT_EQ(minority(E, E, N), N);
    EXPECT_EQ(minority(Eq, E, E), hyper(E, E));
    EXPECT_EQ(minority(E, Eq, N), hyper(E, N));
    EXPECT_EQ(minority(Eq, Eq, E), hyper(E, Eq));
    EXPECT_THROW(make_ternary(TernaryShape::Majority, nullopt), IncoherentSpec);
    EXPECT_THROW(make_ternary(TernaryShape::HC2Omega, hyper), IncoherentSpec);
}

TEST(ParseBehavior, SpecStrings)
{
    EXPECT_TRUE(matches(parse_behavior("max:balanced"), b1));
    EXPECT_TRUE(matches(parse_behavior("e_constant"), b2));
    EXPECT_TRUE(matches(parse_behavior("min:n_dominated"), b3));
    EXPECT_EQ(parse_behavior("majority:projection1:balanced"),
        make_ternary(TernaryShape::Majority, make_binary(BinaryShape::Projection1, Flavor::Balanced)));
    EXPECT_EQ(parse_behavior("minority:xnor:balanced").name(), "minority:xnor:balanced");
    EXPECT_EQ(parse_behavior("h_c2omega").arity(), 3u);
    EXPECT_THROW(parse_behavior("median:balanced"), ParseError);
    EXPECT_THROW(parse_behavior("max:sideways"), ParseError);
    EXPECT_THROW(parse_behavior("e_constant:balanced"), IncoherentSpec);
    EXPECT_THROW(parse_behavior("max"), IncoherentSpec);
    EXPECT_THROW(parse_behavior("majority"), IncoherentSpec);
}

TEST(FormatTable, B3)
{
    EXPECT_EQ(format_table(parse_behavior("min:n_dominated")),
        "min:n_dominated\n"
        "    | = E N\n"
        "  = | = N N\n"
        "  E | N E N\n"
        "  N | N N N\n");
}

TEST(ApplyBehavior, Examples)
{
    auto random = GraphFamily::random();
    vector<QfType> en{ t("E", 2), t("N", 2) }, eqe{ t("=", 2), t("E", 2) }, nn{ t("N", 2), t("N", 2) };
    EXPECT_EQ(apply_behavior(parse_behavior("max:balanced"), en, random), t("E", 2));
    EXPECT_EQ(apply_behavior(parse_behavior("min:n_dominated"), eqe, random), t("N", 2));
    EXPECT_EQ(apply_behavior(parse_behavior("e_constant"), nn, random), t("E", 2));
}

TEST(ApplyBehavior, Errors)
{
    auto random = GraphFamily::random();
    vector<QfType> one{ t("E", 2) }, mixed{ t("E", 2), t("E,E,N", 3) };
    EXPECT_THROW(apply_behavior(parse_behavior("max:balanced"), one, random), ArityMismatch);
    EXPECT_THROW(apply_behavior(parse_behavior("max:balanced"), mixed, random), ArityMismatch);
}

TEST(ApplyBehavior, UnrealizableImage)
{
    vector<QfType> args{ t("E,N,N", 3), t("N,E,N", 3), t("N,N,E", 3) };
    auto image = apply_behavior(parse_behavior("e_constant"), { args.data(), 2 }, GraphFamily::henson(3));
    EXPECT_FALSE(image);
}

TEST(ApplyBehavior, EqualityExactlyWhereAllArgumentsEqual)
{
    auto & types = enumerate_types(GraphFamily::random(), 3).orbits();
    for (auto & b : all_binary())
        for (auto & x : types)
            for (auto & y : types) {
                vector<QfType> args{ x, y };
                auto image = apply_behavior(b, args, GraphFamily::random());
                ASSERT_TRUE(image);
                for (unsigned i = 0; i < 3; ++i)
                    for (unsigned j = i + 1; j < 3; ++j)
                        ASSERT_EQ(image->label(i, j) == Eq, x.label(i, j) == Eq && y.label(i, j) == Eq);
            }
}

TEST(Preserves, Examples)
{
    auto random = GraphFamily::random();
    auto e = OrbitRelation::from_orbitals(OrbitalSet::e()), n = OrbitRelation::from_orbitals(OrbitalSet::n());
    EXPECT_EQ(preserves(parse_behavior("max:balanced"), e, random).status, PreservationReport::Status::Preserved);
    auto violated = preserves(parse_behavior("e_constant"), n, random);
    EXPECT_EQ(violated.status, PreservationReport::Status::Violated);
    EXPECT_EQ(violated.image, t("E", 2));
    EXPECT_EQ(violated.arguments, (vector<QfType>{ t("N", 2), t("N", 2) }));
    EXPECT_EQ(preserves(parse_behavior("min:n_dominated"), n, random).status, PreservationReport::Status::Preserved);
}

TEST(Preserves, IncompatibleWithFamily)
{
    auto report = preserves(parse_behavior("e_constant"), enumerate_types(GraphFamily::henson(3), 3), GraphFamily::henson(3));
    EXPECT_EQ(report.status, PreservationReport::Status::Incompatible);
    EXPECT_FALSE(report.image);
}

TEST(Preserves, FullRelationsOverRandom)
{
    auto random = GraphFamily::random();
    for (unsigned r = 1; r <= 4; ++r)
        for (auto & b : all_binary())
            EXPECT_EQ(preserves(b, enumerate_types(random, r), random).status, PreservationReport::Status::Preserved)
                << b.name() << " arity " << r;
    for (unsigned r = 1; r <= 3; ++r)
        for (auto & b : all_ternary()) {
            if (! b.is_injective())
                continue;
            EXPECT_EQ(preserves(b, enumerate_types(random, r), random).status, PreservationReport::Status::Preserved)
                << b.name() << " arity " << r;
        }
}

TEST(Preserves, NonInjectiveHCanBreakEqualityTransitivity)
{
    // h(=,E,E) is = while h(E,E,E) is E, so "=" on two pairs need not be transitive
    auto random = GraphFamily::random();
    auto report = preserves(parse_behavior("h_c2omega"), enumerate_types(random, 3), random);
    EXPECT_EQ(report.status, PreservationReport::Status::Incompatible);
    EXPECT_EQ(preserves(parse_behavior("h_c2omega"), enumerate_types(random, 2), random).status,
        PreservationReport::Status::Preserved);
}

TEST(Closure, Examples)
{
    auto random = GraphFamily::random();
    vector<Behavior> max_balanced{ parse_behavior("max:balanced") };
    auto e = OrbitRelation::from_orbitals(OrbitalSet::e());
    EXPECT_EQ(closure(max_balanced, e, random), e);

    OrbitRelation tab{ 4, { t("E,N,N,N,N,=", 4), t("N,N,N,N,N,E", 4) } };
    EXPECT_TRUE(closure(max_balanced, tab, random).contains(t("E,N,N,N,N,E", 4)));

    vector<Behavior> h{ parse_behavior("h_c2omega") };
    auto uu_e = OrbitRelation::from_orbitals(OrbitalSet::uu_e());
    EXPECT_EQ(closure(h, uu_e, random), uu_e);
}

TEST(Closure, ExtensiveIdempotentMonotone)
{
    auto random = GraphFamily::random();
    auto & types = enumerate_types(random, 3).orbits();
    std::mt19937_64 rng{ 11 };
    auto behaviors = all_binary();
    for (unsigned round = 0; round < 60; ++round) {
        vector<Behavior> bs{ behaviors[rng() % behaviors.size()] };
        vector<QfType> small, large;
        for (auto & x : types) {
            auto roll = rng() % 6;
            if (roll == 0)
                small.push_back(x);
            if (roll <= 1)
                large.push_back(x);
        }
        OrbitRelation a{ 3, small }, b{ 3, large };
        auto ca = closure(bs, a, random), cb = closure(bs, b, random);
        EXPECT_TRUE(a.is_subset_of(ca));
        EXPECT_EQ(closure(bs, ca, random), ca);
        EXPECT_TRUE(ca.is_subset_of(cb));
        EXPECT_EQ(preserves(bs[0], ca, random).status, PreservationReport::Status::Preserved);
    }
}

TEST(Closure, UntilStopsOnWitness)
{
    auto random = GraphFamily::random();
    vector<Behavior> max_balanced{ parse_behavior("max:balanced") };
    OrbitRelation tab{ 4, { t("E,N,N,N,N,=", 4), t("N,N,N,N,N,E", 4) } };
    auto target = t("E,N,N,N,N,E", 4);
    auto partial = closure_until(max_balanced, tab, random, [&](const QfType & x) { return x == target; });
    EXPECT_TRUE(partial.contains(target));
    EXPECT_TRUE(partial.is_subset_of(closure(max_balanced, tab, random)));
    auto never = closure_until(max_balanced, tab, random, [](const QfType &) { return false; });
    EXPECT_EQ(never, closure(max_balanced, tab, random));
}

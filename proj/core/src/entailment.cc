#include <hgw/entailment.hh>
#include <hgw/errors.hh>

#include <algorithm>

using std::span;
using std::string;
using std::vector;

namespace hgw
{
    namespace
    {
        auto atom(OrbitalSet s, unsigned a, unsigned b) -> string
        {
            return s.name() + "(x" + std::to_string(a + 1) + ",x" + std::to_string(b + 1) + ")";
        }

        auto check_arity(const OrbitRelation & rel) -> void
        {
            if (rel.arity() != 4)
                throw ArityMismatch{ "entailment shapes need a quaternary relation, not arity " + std::to_string(rel.arity()) };
        }

        auto premise_holds(const QfType & t, const EntailmentQuery & q) -> bool
        {
            return q.premise.contains(t.label(0, 1));
        }

        auto conclusion_holds(const QfType & t, const EntailmentQuery & q) -> bool
        {
            return q.conclusion.contains(t.label(2, 3));
        }

        auto side_holds(const QfType & t, const EntailmentQuery & q) -> bool
        {
            return std::all_of(q.side_conditions.begin(), q.side_conditions.end(),
                [&](const SideCondition & c) { return c.allowed.contains(t.label(c.first, c.second)); });
        }
    }

    auto EntailmentQuery::name() const -> string
    {
        string result = "[(" + atom(premise, 0, 1) + " => " + atom(conclusion, 2, 3) + ")";
        if (! side_conditions.empty()) {
            result += ", (";
            bool first = true;
            for (auto & c : side_conditions) {
                if (! first)
                    result += " & ";
                first = false;
                result += atom(c.allowed, c.first, c.second);
            }
            result += ")";
        }
        return result + "]";
    }

    auto satisfies(const QfType & t, const EntailmentQuery & q) -> bool
    {
        return (! premise_holds(t, q) || conclusion_holds(t, q)) && side_holds(t, q);
    }

    auto entails(const OrbitRelation & rel, const EntailmentQuery & q) -> bool
    {
        check_arity(rel);
        return std::all_of(rel.orbits().begin(), rel.orbits().end(), [&](const QfType & t) { return satisfies(t, q); });
    }

    auto efficiently_entails(const OrbitRelation & rel, const EntailmentQuery & q) -> ClassReport
    {
        check_arity(rel);
        ClassReport report;
        report.shape = q.name();
        report.side_conditions_hold = true;
        bool implication = true;
        for (auto & t : rel.orbits()) {
            bool p = premise_holds(t, q), c = conclusion_holds(t, q);
            if (p && ! c)
                implication = false;
            if (! side_holds(t, q))
                report.side_conditions_hold = false;
            if (p && c && ! report.witness_forward)
                report.witness_forward = t;
            if (! p && ! c && ! report.witness_backward)
                report.witness_backward = t;
        }
        report.entails = implication && report.side_conditions_hold;
        report.efficient = report.entails && report.witness_forward && report.witness_backward;
        return report;
    }

    auto shape_catalog() -> const vector<EntailmentQuery> &
    {
        static const vector<EntailmentQuery> catalog = [] {
            auto e = OrbitalSet::e(), n = OrbitalSet::n(), eq = OrbitalSet::eq();
            auto uu_e = OrbitalSet::uu_e(), uu_n = OrbitalSet::uu_n();
            vector<SideCondition> path{ { 0, 1, uu_e }, { 1, 2, n }, { 2, 3, uu_e } };

            vector<EntailmentQuery> result{
                { e, uu_n, {} },
                { n, uu_e, {} },
                { e, eq, {} },
                { n, eq, {} },
                { n, eq, { { 0, 1, uu_n }, { 2, 3, uu_n } } },
                { e, eq, { { 0, 1, uu_e }, { 2, 3, uu_e } } },
                { n, e, { { 2, 3, uu_e } } },
                { e, eq, path },
                { eq, e, path },
                { e, e, path },
                { eq, eq, path },
            };
            return result;
        }();
        return catalog;
    }

    auto dominated_shapes(OrbitLabel o1) -> vector<EntailmentQuery>
    {
        if (o1 == OrbitLabel::Eq)
            throw InvalidType{ "the dominating orbital must be E or N" };
        auto other = o1 == OrbitLabel::E ? OrbitLabel::N : OrbitLabel::E;
        OrbitalSet first{ o1 }, second{ other }, uu_second{ other, OrbitLabel::Eq };
        return {
            { first, uu_second, {} },
            { first, OrbitalSet::eq(), {} },
            { second, OrbitalSet::eq(), { { 0, 1, uu_second }, { 2, 3, uu_second } } },
        };
    }

    auto classify(const OrbitRelation & rel, span<const EntailmentQuery> catalog) -> vector<ClassReport>
    {
        check_arity(rel);
        vector<ClassReport> result;
        for (auto & q : catalog)
            result.push_back(efficiently_entails(rel, q));
        return result;
    }

    auto permute_coordinates(const OrbitRelation & rel, span<const unsigned> perm) -> OrbitRelation
    {
        if (perm.size() != rel.arity())
            throw IndexOutOfRange{ "permutation length does not match the relation arity" };
        vector<bool> used(perm.size(), false);
        for (auto p : perm) {
            if (p >= perm.size() || used[p])
                throw IndexOutOfRange{ "coordinate list is not a permutation" };
            used[p] = true;
        }
        return relation_project(rel, perm);
    }
}

#ifndef HGW_GUARD_HGW_ENTAILMENT_HH
#define HGW_GUARD_HGW_ENTAILMENT_HH 1

#include <hgw/orbit_relation.hh>
#include <hgw/qf_type.hh>

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hgw
{
    /// Every orbit must put positions first and second (zero-based) into allowed.
    struct SideCondition
    {
        unsigned first, second;
        OrbitalSet allowed;
    };

    /**
     * An implication premise(x1,x2) => conclusion(x3,x4) over quaternary
     * relations, with side conditions that every orbit must satisfy.
     */
    struct EntailmentQuery
    {
        OrbitalSet premise;
        OrbitalSet conclusion;
        std::vector<SideCondition> side_conditions;

        /// Bracketed rendering, e.g. "[(E(x1,x2) => uuN(x3,x4))]".
        [[nodiscard]] auto name() const -> std::string;
    };

    struct ClassReport
    {
        std::string shape;
        bool entails = false;
        bool efficient = false;
        bool side_conditions_hold = false;
        std::optional<QfType> witness_forward;
        std::optional<QfType> witness_backward;
    };

    /// Whether a single orbit satisfies the implication and every side condition.
    auto satisfies(const QfType & t, const EntailmentQuery & q) -> bool;

    /// Every orbit satisfies the implication and the side conditions. Throws ArityMismatch unless arity 4.
    auto entails(const OrbitRelation & rel, const EntailmentQuery & q) -> bool;

    /**
     * entails, plus an orbit with premise and conclusion both true and an
     * orbit with both false. Witnesses are the least such orbits.
     */
    auto efficiently_entails(const OrbitRelation & rel, const EntailmentQuery & q) -> ClassReport;

    /// The quaternary implication shapes whose absence gives width (2, L), without duplicates.
    auto shape_catalog() -> const std::vector<EntailmentQuery> &;

    /// The three shapes ruled out by a binary injection whose dominating orbital is o1 (E or N).
    auto dominated_shapes(OrbitLabel o1) -> std::vector<EntailmentQuery>;

    /// One report per shape, in catalog order.
    auto classify(const OrbitRelation & rel, std::span<const EntailmentQuery> catalog) -> std::vector<ClassReport>;

    /**
     * The relation R'(x1..xr) = R(x_{perm[0]+1}, ..., x_{perm[r-1]+1}).
     * perm must be a permutation of the positions. Throws IndexOutOfRange.
     */
    auto permute_coordinates(const OrbitRelation & rel, std::span<const unsigned> perm) -> OrbitRelation;
}

#endif

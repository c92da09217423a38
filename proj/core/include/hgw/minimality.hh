#ifndef HGW_GUARD_HGW_MINIMALITY_HH
#define HGW_GUARD_HGW_MINIMALITY_HH 1

#include <hgw/instance.hh>
#include <hgw/qf_type.hh>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hgw
{
    /**
     * The result of establishing (k,l)-minimality. Every constraint has its own
     * relation, named "c0", "c1", ..., and its scope lists distinct variables.
     * Original constraints come first in input order, followed by the
     * universal constraints added to cover uncovered sets of variables.
     */
    class MinimalInstance
    {
    private:
        Instance _instance;
        unsigned _k, _l;
        std::vector<OrbitalSet> _pairs;

    public:
        MinimalInstance(Instance instance, unsigned k, unsigned l);

        [[nodiscard]] auto instance() const noexcept -> const Instance & { return _instance; }
        [[nodiscard]] auto k() const noexcept -> unsigned { return _k; }
        [[nodiscard]] auto l() const noexcept -> unsigned { return _l; }

        /**
         * Union of the projections onto (v_i, v_j) of every constraint whose
         * scope contains both; a single orbital when the covering constraints
         * agree. Pairs covered by no constraint give every orbital. P(i,i) is "=".
         */
        [[nodiscard]] auto pair_projection(unsigned i, unsigned j) const -> OrbitalSet;

        friend auto operator==(const MinimalInstance &, const MinimalInstance &) -> bool = default;
    };

    /// Some constraint has an empty relation.
    auto is_trivial(const Instance & inst) -> bool;
    auto is_trivial(const MinimalInstance & m) -> bool;

    /// Every pair projection is a single orbital.
    auto is_simple(const MinimalInstance & m) -> bool;

    /**
     * Adds universal constraints on every uncovered set of min(l, |V|)
     * variables, then deletes orbits until all constraints agree on their
     * projections onto every shared set of at most k variables. Throws
     * InvalidParameters unless 1 <= k <= l, and ArityTooLarge if the universal
     * constraints would exceed the enumeration cap.
     */
    auto establish_minimality(const Instance & inst, unsigned k, unsigned l) -> MinimalInstance;

    /// Re-runs the fixpoint on an already minimal instance with the same parameters.
    auto reestablish(const MinimalInstance & m) -> MinimalInstance;

    struct MinimalityViolation
    {
        enum class Kind
        {
            Uncovered,
            Disagreement
        };

        Kind kind;
        std::vector<unsigned> variables;
        std::optional<std::pair<std::size_t, std::size_t>> constraints;

        [[nodiscard]] auto describe(const Instance & inst) const -> std::string;
    };

    /**
     * Checks both minimality conditions literally: every set of min(l, |V|)
     * variables lies in some scope, and any two constraints covering a set W
     * of at most k variables project onto W identically. Sets W are scanned
     * by size, then lexicographically. Returns the first violation.
     */
    auto verify_minimality(const Instance & inst, unsigned k, unsigned l) -> std::optional<MinimalityViolation>;

    /**
     * Projection of a constraint's relation onto the given variables, each of
     * which must occur in the scope. Handles repeated variables in the scope.
     */
    auto project_constraint(const Instance & inst, std::size_t c, const std::vector<unsigned> & variables)
        -> OrbitRelation;
}

#endif

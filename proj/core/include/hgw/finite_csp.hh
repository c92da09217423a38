#ifndef HGW_GUARD_HGW_FINITE_CSP_HH
#define HGW_GUARD_HGW_FINITE_CSP_HH 1

#include <hgw/minimality.hh>
#include <hgw/solver.hh>

#include <optional>
#include <string>
#include <vector>

namespace hgw
{
    using Tuple = std::vector<unsigned>;

    /// A constraint over a finite domain {0, ..., d-1}, with its tuples sorted and unique.
    struct FiniteConstraint
    {
        std::vector<unsigned> scope;
        std::vector<Tuple> tuples;
        std::string name;

        friend auto operator==(const FiniteConstraint &, const FiniteConstraint &) -> bool = default;
    };

    struct FiniteInstance
    {
        unsigned domain_size = 0;
        std::vector<std::string> variables;
        std::vector<FiniteConstraint> constraints;

        /// Sorts and deduplicates tuples. Throws SchemaError on bad scopes or values.
        auto add_constraint(std::vector<unsigned> scope, std::vector<Tuple> tuples, std::string name) -> void;

        friend auto operator==(const FiniteInstance &, const FiniteInstance &) -> bool = default;
    };

    auto is_trivial(const FiniteInstance & inst) -> bool;

    /// Both minimality conditions, checked literally as for the infinite case.
    auto verify_minimality(const FiniteInstance & inst, unsigned k, unsigned l) -> std::optional<MinimalityViolation>;

    struct FiniteVerdict
    {
        Status status = Status::Unsat;
        std::optional<std::vector<unsigned>> assignment;
    };

    /**
     * Exact decision: generalised arc consistency to a fixpoint, then
     * backtracking with the same propagation at each node, trying values in
     * increasing order. Throws TooLarge if more than node_limit nodes are
     * needed (zero means no limit).
     */
    auto finite_solve(const FiniteInstance & inst, unsigned long long node_limit = 0) -> FiniteVerdict;

    /// Every constraint contains the assignment restricted to its scope.
    auto verify_assignment(const FiniteInstance & inst, const std::vector<unsigned> & assignment) -> bool;
}

#endif

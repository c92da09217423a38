#ifndef HGW_GUARD_HGW_SOLVER_HH
#define HGW_GUARD_HGW_SOLVER_HH 1

#include <hgw/graph.hh>
#include <hgw/instance.hh>
#include <hgw/minimality.hh>
#include <hgw/qf_type.hh>

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace hgw
{
    enum class Status
    {
        Sat,
        Unsat
    };

    enum class Mode
    {
        Width,
        Search,
        Oracle
    };

    auto to_string(Status) -> std::string_view;
    auto to_string(Mode) -> std::string_view;

    /**
     * A decision. Sat verdicts from search and oracle mode carry a global type
     * over all variables (absent only for instances without variables). Sat
     * from width mode carries none and has assumed_width set: it is only
     * correct if the language has relational width (k, l).
     */
    struct Verdict
    {
        Status status = Status::Unsat;
        Mode mode = Mode::Oracle;
        std::optional<QfType> certificate;
        bool assumed_width = false;
        unsigned k = 0, l = 0;
    };

    /// Default oracle cap on the number of variables.
    inline constexpr unsigned default_max_variables = 8;

    /// The default pin priority for shrinking and branching.
    inline constexpr OrbitLabel default_priority[] = { OrbitLabel::E, OrbitLabel::N, OrbitLabel::Eq };

    /// Accepts a comma separated list such as "E,N,=" naming each label once. Throws ParseError.
    auto parse_priority(std::string_view text) -> std::vector<OrbitLabel>;

    /**
     * Exact decision by enumerating global types in increasing order with
     * pruning; a Sat certificate is the least satisfying type. Throws
     * TooManyVariables above the cap.
     */
    auto oracle(const Instance & inst, unsigned max_variables = default_max_variables) -> Verdict;

    /// Establishes (k, l)-minimality: Unsat if trivial, else an assumed-width Sat.
    auto decide_width(const Instance & inst, unsigned k, unsigned l) -> Verdict;

    /// With k = 2 and l = l_value(family).
    auto decide_width(const Instance & inst) -> Verdict;

    /**
     * For a simple, (2, l)-minimal instance: the global type whose classes are
     * the "=" components and whose labels come from the pair projections, if
     * that labelling is consistent and realizable. std::nullopt means Unsat.
     * Throws NotMinimal if k < 2 and NotSimple for a non-simple instance.
     */
    auto quotient_and_check(const MinimalInstance & m) -> std::optional<QfType>;

    /// Restricts (v_i, v_j) to one orbital and re-establishes minimality.
    auto pin(const MinimalInstance & m, unsigned i, unsigned j, OrbitLabel label) -> MinimalInstance;

    struct Stuck
    {
        std::pair<unsigned, unsigned> pair;
        OrbitLabel attempted;
    };

    /**
     * Repeatedly pins the first multi-valued pair to the first label in
     * priority order that keeps the instance non-trivial. Returns Stuck with
     * the pair and its first attempted label if every label trivializes.
     * Throws NotMinimal unless m is non-trivial with k >= 2.
     */
    auto shrink_to_simple(const MinimalInstance & m, std::span<const OrbitLabel> priority = default_priority)
        -> std::variant<MinimalInstance, Stuck>;

    /**
     * Complete search: establish (2, l)-minimality, answer trivial and simple
     * instances directly, otherwise branch on the first multi-valued pair over
     * its labels in priority order. l defaults to l_value(family).
     */
    auto solve_search(const Instance & inst, std::span<const OrbitLabel> priority = default_priority,
        std::optional<unsigned> l = std::nullopt) -> Verdict;

    /// Independent check: every constraint scope projects into its relation and the type is realizable.
    auto verify_certificate(const Instance & inst, const QfType & certificate) -> bool;

    struct Realization
    {
        FiniteGraph graph;
        std::vector<unsigned> vertex_of;
    };

    /// One vertex per class of the certificate. Throws NotRealizable.
    auto realize_certificate(const QfType & certificate, const GraphFamily & family) -> Realization;
}

#endif

#ifndef HGW_GUARD_HGW_BEHAVIOR_HH
#define HGW_GUARD_HGW_BEHAVIOR_HH 1

#include <hgw/family.hh>
#include <hgw/orbit_relation.hh>
#include <hgw/qf_type.hh>

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hgw
{
    enum class BinaryShape
    {
        Min,
        Max,
        Projection1,
        Projection2,
        Xor,
        Xnor,
        EConstant,
        NConstant
    };

    /// How a binary behavior treats arguments where exactly one side is equal.
    enum class Flavor
    {
        Balanced,
        EDominated,
        NDominated
    };

    enum class TernaryShape
    {
        Majority,
        Minority,
        HC2Omega
    };

    auto to_string(BinaryShape) -> std::string_view;
    auto to_string(Flavor) -> std::string_view;
    auto to_string(TernaryShape) -> std::string_view;

    /**
     * The action of a binary or ternary canonical operation on orbit labels: a
     * total table from label tuples to labels. Row index of an argument tuple
     * (a0, a1, ...) is a0 * 3^(arity-1) + a1 * 3^(arity-2) + ... using the
     * numeric values of OrbitLabel.
     */
    class Behavior
    {
    private:
        unsigned _arity;
        std::vector<OrbitLabel> _table;
        std::string _name;

    public:
        /// Throws ArityMismatch unless arity is 2 or 3 and the table has 3^arity entries.
        Behavior(unsigned arity, std::vector<OrbitLabel> table, std::string name);

        [[nodiscard]] auto arity() const noexcept -> unsigned { return _arity; }
        [[nodiscard]] auto name() const noexcept -> const std::string & { return _name; }
        [[nodiscard]] auto table() const noexcept -> const std::vector<OrbitLabel> & { return _table; }

        [[nodiscard]] auto operator()(std::span<const OrbitLabel> args) const -> OrbitLabel;
        [[nodiscard]] auto operator()(OrbitLabel a, OrbitLabel b) const -> OrbitLabel;
        [[nodiscard]] auto operator()(OrbitLabel a, OrbitLabel b, OrbitLabel c) const -> OrbitLabel;

        /// Output is "=" exactly when every input is "=".
        [[nodiscard]] auto is_injective() const -> bool;

        friend auto operator==(const Behavior & a, const Behavior & b) -> bool { return a._table == b._table; }
    };

    /// Constants take no flavor; every other shape needs one. Throws IncoherentSpec.
    auto make_binary(BinaryShape shape, std::optional<Flavor> flavor) -> Behavior;

    /// Majority and minority need a binary hyperplane behavior; h_c2omega takes
    /// none. Throws IncoherentSpec.
    auto make_ternary(TernaryShape shape, const std::optional<Behavior> & hyperplane) -> Behavior;

    /**
     * Parses "max:balanced", "min:n_dominated", "e_constant",
     * "majority:projection1:balanced", "minority:xnor:balanced", "h_c2omega".
     * Throws ParseError for unknown words and IncoherentSpec for bad combinations.
     */
    auto parse_behavior(std::string_view spec) -> Behavior;

    /// A 3x3 grid (binary) or three 3x3 grids indexed by the first argument (ternary).
    auto format_table(const Behavior & b) -> std::string;

    /**
     * Applies the behavior pairwise to the position-pair labels of the
     * arguments. Returns std::nullopt if the resulting labelling is not a
     * consistent type or is not realizable in the family. Throws ArityMismatch
     * if the argument count or arities disagree.
     */
    auto apply_behavior(const Behavior & b, std::span<const QfType> args, const GraphFamily & family)
        -> std::optional<QfType>;

    struct PreservationReport
    {
        enum class Status
        {
            Preserved,
            Violated,
            Incompatible
        };

        Status status = Status::Preserved;
        std::vector<QfType> arguments;
        std::optional<QfType> image;
    };

    auto to_string(PreservationReport::Status) -> std::string_view;

    /// Checks every argument tuple in lexicographic order and reports the first failure.
    auto preserves(const Behavior & b, const OrbitRelation & rel, const GraphFamily & family) -> PreservationReport;

    /// Least superset of rel closed under realizable images of every behavior.
    auto closure(std::span<const Behavior> bs, const OrbitRelation & rel, const GraphFamily & family) -> OrbitRelation;

    /**
     * As closure, but stops as soon as some member satisfies stop. Members of
     * the input are checked first, then every new orbit as it is produced.
     */
    auto closure_until(std::span<const Behavior> bs, const OrbitRelation & rel, const GraphFamily & family,
        const std::function<bool(const QfType &)> & stop) -> OrbitRelation;
}

#endif

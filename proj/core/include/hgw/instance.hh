#ifndef HGW_GUARD_HGW_INSTANCE_HH
#define HGW_GUARD_HGW_INSTANCE_HH 1

#include <hgw/family.hh>
#include <hgw/orbit_relation.hh>

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hgw
{
    /// Names of the relations every instance may use without defining them.
    auto builtin_relation_names() -> std::span<const std::string_view>;

    /// E, N, "=", NEQ, uuE or uuN, keeping only orbits realizable in the family.
    auto builtin_relation(std::string_view name, const GraphFamily & family) -> std::optional<OrbitRelation>;

    auto is_builtin_relation_name(std::string_view name) -> bool;

    struct Constraint
    {
        std::vector<unsigned> scope;
        std::string relation;

        friend auto operator==(const Constraint &, const Constraint &) -> bool = default;
    };

    /**
     * A CSP instance over a first-order expansion of a homogeneous graph:
     * named variables, named relations given by their orbits, and constraints
     * that apply a relation to a tuple of variables. Builtin relations are
     * added on first use.
     */
    class Instance
    {
    private:
        GraphFamily _family;
        std::vector<std::string> _variables;
        std::map<std::string, OrbitRelation, std::less<>> _relations;
        std::vector<Constraint> _constraints;

    public:
        explicit Instance(GraphFamily family);

        [[nodiscard]] auto family() const noexcept -> const GraphFamily & { return _family; }
        [[nodiscard]] auto variables() const noexcept -> const std::vector<std::string> & { return _variables; }
        [[nodiscard]] auto variable_count() const noexcept -> unsigned { return unsigned(_variables.size()); }
        [[nodiscard]] auto relations() const noexcept -> const std::map<std::string, OrbitRelation, std::less<>> &
        {
            return _relations;
        }
        [[nodiscard]] auto constraints() const noexcept -> const std::vector<Constraint> & { return _constraints; }

        /// Throws SchemaError on a duplicate name.
        auto add_variable(std::string name) -> unsigned;

        /// Adds variables named prefix1, prefix2, ... and returns the first index.
        auto add_variables(unsigned count, std::string_view prefix = "v") -> unsigned;

        [[nodiscard]] auto variable_index(std::string_view name) const -> std::optional<unsigned>;

        /**
         * Throws SchemaError for a duplicate name, a builtin name, or an orbit
         * not realizable in the family.
         */
        auto add_relation(std::string name, OrbitRelation relation) -> void;

        /// Throws SchemaError for unknown names.
        [[nodiscard]] auto relation(std::string_view name) const -> const OrbitRelation &;

        /// Throws SchemaError for an unknown relation, a bad variable index, or an arity mismatch.
        auto add_constraint(std::vector<unsigned> scope, std::string_view relation) -> void;

        /// Same, naming the variables.
        auto add_constraint_by_name(std::span<const std::string> scope, std::string_view relation) -> void;

        /// The relation of constraint c.
        [[nodiscard]] auto constraint_relation(std::size_t c) const -> const OrbitRelation &;

        friend auto operator==(const Instance &, const Instance &) -> bool = default;
    };
}

#endif

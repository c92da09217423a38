#include <hgw/errors.hh>
#include <hgw/instance.hh>

#include <algorithm>
#include <array>

using std::array;
using std::nullopt;
using std::optional;
using std::span;
using std::string;
using std::string_view;
using std::vector;

namespace hgw
{
    namespace
    {
        constexpr array<string_view, 6> builtin_names = { "E", "N", "=", "NEQ", "uuE", "uuN" };
    }

    auto builtin_relation_names() -> span<const string_view>
    {
        return builtin_names;
    }

    auto is_builtin_relation_name(string_view name) -> bool
    {
        return std::find(builtin_names.begin(), builtin_names.end(), name) != builtin_names.end();
    }

    auto builtin_relation(string_view name, const GraphFamily & family) -> optional<OrbitRelation>
    {
        if (! is_builtin_relation_name(name))
            return nullopt;
        return OrbitRelation::from_orbitals(parse_orbital_set(name)).restricted_to(family);
    }

    Instance::Instance(GraphFamily family) :
        _family(std::move(family))
    {
    }

    auto Instance::add_variable(string name) -> unsigned
    {
        if (variable_index(name))
            throw SchemaError{ "duplicate variable '" + name + "'" };
        _variables.push_back(std::move(name));
        return unsigned(_variables.size() - 1);
    }

    auto Instance::add_variables(unsigned count, string_view prefix) -> unsigned
    {
        auto first = variable_count();
        for (unsigned v = 0; v < count; ++v)
            add_variable(string{ prefix } + std::to_string(first + v + 1));
        return first;
    }

    auto Instance::variable_index(string_view name) const -> optional<unsigned>
    {
        auto it = std::find(_variables.begin(), _variables.end(), name);
        if (it == _variables.end())
            return nullopt;
        return unsigned(it - _variables.begin());
    }

    auto Instance::add_relation(string name, OrbitRelation relation) -> void
    {
        if (is_builtin_relation_name(name))
            throw SchemaError{ "relation name '" + name + "' is reserved for a builtin" };
        if (_relations.contains(name))
            throw SchemaError{ "duplicate relation '" + name + "'" };
        for (auto & t : relation.orbits())
            if (! realizable(_family, t))
                throw SchemaError{ "orbit '" + t.to_string() + "' of relation '" + name + "' is not realizable in " +
                    _family.name() };
        _relations.emplace(std::move(name), std::move(relation));
    }

    auto Instance::relation(string_view name) const -> const OrbitRelation &
    {
        auto it = _relations.find(name);
        if (it == _relations.end())
            throw SchemaError{ "unknown relation '" + string{ name } + "'" };
        return it->second;
    }

    auto Instance::add_constraint(vector<unsigned> scope, string_view relation_name) -> void
    {
        if (! _relations.contains(relation_name)) {
            auto builtin = builtin_relation(relation_name, _family);
            if (! builtin)
                throw SchemaError{ "unknown relation '" + string{ relation_name } + "'" };
            _relations.emplace(string{ relation_name }, std::move(*builtin));
        }

        auto & rel = relation(relation_name);
        if (scope.size() != rel.arity())
            throw SchemaError{ "constraint on relation '" + string{ relation_name } + "' has scope of length " +
                std::to_string(scope.size()) + " but the relation has arity " + std::to_string(rel.arity()) };
        for (auto v : scope)
            if (v >= _variables.size())
                throw SchemaError{ "constraint refers to unknown variable index " + std::to_string(v) };

        _constraints.push_back(Constraint{ std::move(scope), string{ relation_name } });
    }

    auto Instance::add_constraint_by_name(span<const string> scope, string_view relation_name) -> void
    {
        vector<unsigned> indices;
        for (auto & name : scope) {
            auto v = variable_index(name);
            if (! v)
                throw SchemaError{ "constraint refers to unknown variable '" + name + "'" };
            indices.push_back(*v);
        }
        add_constraint(std::move(indices), relation_name);
    }

    auto Instance::constraint_relation(std::size_t c) const -> const OrbitRelation &
    {
        return relation(_constraints.at(c).relation);
    }
}

#include <hgw/orbit_relation.hh>
#include <hgw/random_instances.hh>

#include <string>
#include <vector>

using std::mt19937_64;
using std::string;
using std::vector;

namespace hgw
{
    namespace
    {
        auto draw(mt19937_64 & rng, unsigned bound) -> unsigned
        {
            return unsigned(rng() % bound);
        }
    }

    auto random_instance(const GraphFamily & family, mt19937_64 & rng, const RandomInstanceOptions & options) -> Instance
    {
        Instance inst{ family };
        auto n = options.min_variables + draw(rng, options.max_variables - options.min_variables + 1);
        inst.add_variables(n);

        vector<string> names;
        for (auto name : builtin_relation_names())
            names.emplace_back(name);

        if (! options.builtins_only) {
            auto & universe = enumerate_types(family, options.random_relation_arity);
            for (unsigned r = 0; r < options.random_relations; ++r) {
                vector<QfType> orbits;
                for (auto & t : universe.orbits())
                    if (draw(rng, options.orbit_sparsity) == 0)
                        orbits.push_back(t);
                auto name = "R" + std::to_string(r + 1);
                inst.add_relation(name, OrbitRelation{ options.random_relation_arity, std::move(orbits) });
                names.push_back(name);
            }
        }

        auto constraints = 1 + draw(rng, options.constraints_per_variable * n);
        for (unsigned c = 0; c < constraints; ++c) {
            auto & name = names[draw(rng, unsigned(names.size()))];
            auto arity = inst.relations().contains(name) ? inst.relation(name).arity() : 2u;
            vector<unsigned> scope;
            for (unsigned p = 0; p < arity; ++p)
                scope.push_back(draw(rng, n));
            inst.add_constraint(std::move(scope), name);
        }
        return inst;
    }

    auto random_binary_instance(const GraphFamily & family, mt19937_64 & rng, unsigned variables, unsigned constraints)
        -> Instance
    {
        Instance inst{ family };
        inst.add_variables(variables);
        auto names = builtin_relation_names();
        for (unsigned c = 0; c < constraints; ++c) {
            auto name = names[draw(rng, unsigned(names.size()))];
            auto a = draw(rng, variables), b = draw(rng, variables - 1);
            if (b >= a)
                ++b;
            inst.add_constraint({ a, b }, name);
        }
        return inst;
    }
}

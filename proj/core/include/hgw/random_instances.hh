#ifndef HGW_GUARD_HGW_RANDOM_INSTANCES_HH
#define HGW_GUARD_HGW_RANDOM_INSTANCES_HH 1

#include <hgw/family.hh>
#include <hgw/instance.hh>

#include <random>

namespace hgw
{
    struct RandomInstanceOptions
    {
        unsigned min_variables = 2;
        unsigned max_variables = 6;

        /// Extra quaternary relations R1, R2, ... made of random realizable orbits.
        unsigned random_relations = 5;
        unsigned random_relation_arity = 4;

        /// Each orbit joins a random relation with probability 1 / orbit_sparsity.
        unsigned orbit_sparsity = 3;

        /// Constraint count is drawn from [1, constraints_per_variable * variables].
        unsigned constraints_per_variable = 2;

        /// Use only the builtin relations.
        bool builtins_only = false;
    };

    /// Fully determined by the generator state. Scopes may repeat variables.
    auto random_instance(const GraphFamily & family, std::mt19937_64 & rng, const RandomInstanceOptions & options = {})
        -> Instance;

    /// A binary instance over builtin relations with the given size.
    auto random_binary_instance(const GraphFamily & family, std::mt19937_64 & rng, unsigned variables,
        unsigned constraints) -> Instance;
}

#endif

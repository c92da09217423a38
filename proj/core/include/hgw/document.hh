#ifndef HGW_GUARD_HGW_DOCUMENT_HH
#define HGW_GUARD_HGW_DOCUMENT_HH 1

#include <hgw/family.hh>
#include <hgw/instance.hh>
#include <hgw/solver.hh>
#include <hgw/type_structure.hh>

#include <string>
#include <string_view>

namespace hgw
{
    /**
     * Reads an instance document:
     *
     *   { "domain": {"family": "henson", "k": 3},
     *     "relations": {"R": {"arity": 3, "orbits": ["E,N,N", "=,N,N"]}},
     *     "variables": ["x", "y", "z"],
     *     "constraints": [{"scope": ["x", "y", "z"], "relation": "R"},
     *                     {"scope": ["x", "y"], "relation": "NEQ"}] }
     *
     * Throws ParseError (with line and column) for malformed text and orbit
     * strings, SchemaError for anything structurally wrong.
     */
    auto parse_instance(std::string_view text) -> Instance;

    /// Canonical form: user relations with sorted orbits, builtins left implicit.
    auto serialize_instance(const Instance & inst) -> std::string;

    /// {"family": "random"} and friends. Throws ParseError or SchemaError.
    auto parse_family(std::string_view text) -> GraphFamily;
    auto serialize_family(const GraphFamily & family) -> std::string;

    /// The verdict, plus the certificate realized as a small graph when present.
    auto serialize_verdict(const Instance & inst, const Verdict & verdict) -> std::string;

    /// The finite structure's elements and the translated instance, one relation per constraint.
    auto serialize_translation(const TypeStructure & ts, const TranslatedInstance & ti) -> std::string;
}

#endif

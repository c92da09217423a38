#ifndef HGW_GUARD_HGW_TYPE_STRUCTURE_HH
#define HGW_GUARD_HGW_TYPE_STRUCTURE_HH 1

#include <hgw/finite_csp.hh>
#include <hgw/instance.hh>
#include <hgw/orbit_relation.hh>

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hgw
{
    /// Largest m accepted by build_type_structure.
    inline constexpr unsigned default_max_m = 6;

    /**
     * The finite structure whose elements are the m-types of the graph. Its
     * unary relations <R o i> and compatibility relations Comp(i, j) are
     * computed on demand from the source relations.
     */
    class TypeStructure
    {
    private:
        GraphFamily _family;
        unsigned _m;
        std::vector<QfType> _elements;
        std::map<std::string, OrbitRelation, std::less<>> _relations;

    public:
        TypeStructure(GraphFamily family, unsigned m, std::map<std::string, OrbitRelation, std::less<>> relations);

        [[nodiscard]] auto family() const noexcept -> const GraphFamily & { return _family; }
        [[nodiscard]] auto m() const noexcept -> unsigned { return _m; }
        [[nodiscard]] auto elements() const noexcept -> const std::vector<QfType> & { return _elements; }
        [[nodiscard]] auto element_index(const QfType & t) const -> std::optional<unsigned>;

        /**
         * Elements p whose restriction along index_map lies in the named
         * relation; index_map lists zero-based positions of [m] and may repeat.
         * Throws SchemaError or IndexOutOfRange.
         */
        [[nodiscard]] auto unary(std::string_view relation, std::span<const unsigned> index_map) const
            -> std::vector<unsigned>;

        /// Pairs (p, q) with project(p, i) == project(q, j); i and j have equal length.
        [[nodiscard]] auto comp(std::span<const unsigned> i, std::span<const unsigned> j) const
            -> std::vector<std::pair<unsigned, unsigned>>;
    };

    /**
     * Throws MTooSmall if m is below the largest relation arity and
     * ArityTooLarge if m exceeds max_m.
     */
    auto build_type_structure(const std::map<std::string, OrbitRelation, std::less<>> & relations,
        const GraphFamily & family, unsigned m, unsigned max_m = default_max_m) -> TypeStructure;

    /// max(largest constraint arity + 1, 3, l_value(family)).
    auto default_m(const Instance & inst) -> unsigned;

    /// An instance over the type structure. Variable v stands for the increasing list sources[v].
    struct TranslatedInstance
    {
        unsigned m = 0;
        std::vector<std::vector<unsigned>> sources;
        FiniteInstance instance;
    };

    /**
     * Unary constraints for every source constraint inside the image of a
     * variable, and Comp constraints for every pair of variables with
     * overlapping images, one per ordering of the overlap. Throws
     * TooFewVariables if the instance has fewer than m variables and TooLarge
     * if there would be more than max_variables translated variables.
     */
    auto translate_instance(const Instance & inst, const TypeStructure & ts, unsigned long long max_variables = 20000)
        -> TranslatedInstance;

    /**
     * Adds Types constraints on every one, two and three translated variables
     * taken from each source constraint covering their images, and intersects
     * the existing unary and Comp constraints with the matching Types
     * relation. The source must be the (2m, 3m)-minimal form of the translated
     * instance's source; otherwise throws MinimalityMismatch.
     */
    auto refine_translation(const Instance & minimal_source, const TypeStructure & ts,
        const TranslatedInstance & translated) -> TranslatedInstance;

    /// The source assignment's types, one per translated variable.
    auto translate_certificate(const QfType & certificate, const TypeStructure & ts, const TranslatedInstance & ti)
        -> std::vector<unsigned>;
}

#endif

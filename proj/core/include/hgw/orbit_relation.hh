#ifndef HGW_GUARD_HGW_ORBIT_RELATION_HH
#define HGW_GUARD_HGW_ORBIT_RELATION_HH 1

#include <hgw/family.hh>
#include <hgw/qf_type.hh>

#include <span>
#include <string>
#include <vector>

namespace hgw
{
    /// Types of arity above this are never enumerated.
    inline constexpr unsigned default_max_arity = 8;

    /**
     * A relation of a first-order expansion, held extensionally as the finite
     * set of orbits it contains. Orbits are kept sorted and duplicate free.
     */
    class OrbitRelation
    {
    private:
        unsigned _arity = 1;
        std::vector<QfType> _orbits;

    public:
        OrbitRelation() = default;

        /// Empty relation of the given arity.
        explicit OrbitRelation(unsigned arity);

        /// Throws ArityMismatch if some orbit has a different arity.
        OrbitRelation(unsigned arity, std::vector<QfType> orbits);

        /// The binary relation that is the union of the given orbitals.
        static auto from_orbitals(OrbitalSet labels) -> OrbitRelation;

        [[nodiscard]] auto arity() const noexcept -> unsigned { return _arity; }
        [[nodiscard]] auto orbits() const noexcept -> const std::vector<QfType> & { return _orbits; }
        [[nodiscard]] auto size() const noexcept -> std::size_t { return _orbits.size(); }
        [[nodiscard]] auto empty() const noexcept -> bool { return _orbits.empty(); }
        [[nodiscard]] auto contains(const QfType & t) const -> bool;

        /// Orbits of this relation that are realizable in the family.
        [[nodiscard]] auto restricted_to(const GraphFamily & family) const -> OrbitRelation;

        [[nodiscard]] auto is_subset_of(const OrbitRelation & other) const -> bool;

        friend auto operator==(const OrbitRelation &, const OrbitRelation &) -> bool = default;
    };

    auto intersection(const OrbitRelation & a, const OrbitRelation & b) -> OrbitRelation;
    auto union_of(const OrbitRelation & a, const OrbitRelation & b) -> OrbitRelation;

    /// { project(t, positions) : t in rel }. Throws IndexOutOfRange.
    auto relation_project(const OrbitRelation & rel, std::span<const unsigned> positions) -> OrbitRelation;

    /**
     * Every realizable type of the given arity in the family. Results are
     * memoised per (family, arity). Throws ArityTooLarge above max_arity.
     */
    auto enumerate_types(const GraphFamily & family, unsigned arity, unsigned max_arity = default_max_arity)
        -> const OrbitRelation &;
}

#endif

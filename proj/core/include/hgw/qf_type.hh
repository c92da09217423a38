#ifndef HGW_GUARD_HGW_QF_TYPE_HH
#define HGW_GUARD_HGW_QF_TYPE_HH 1

#include <hgw/family.hh>
#include <hgw/graph.hh>

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hgw
{
    /// The three orbitals of pairs: equality, edge, non-edge.
    enum class OrbitLabel : std::uint8_t
    {
        Eq = 0,
        E = 1,
        N = 2
    };

    inline constexpr OrbitLabel all_labels[] = { OrbitLabel::Eq, OrbitLabel::E, OrbitLabel::N };

    auto to_string(OrbitLabel label) -> std::string_view;

    /// Accepts "=", "E" and "N". Throws ParseError otherwise.
    auto parse_label(std::string_view text) -> OrbitLabel;

    /**
     * A set of orbitals, stored as a three-bit mask. Used for the pair
     * projections of an instance and for the two sides of an entailment.
     */
    class OrbitalSet
    {
    private:
        std::uint8_t _bits = 0;

    public:
        constexpr OrbitalSet() = default;
        constexpr OrbitalSet(std::initializer_list<OrbitLabel> labels)
        {
            for (auto l : labels)
                _bits |= std::uint8_t(1u << unsigned(l));
        }

        static constexpr auto from_bits(std::uint8_t bits) -> OrbitalSet
        {
            OrbitalSet result;
            result._bits = bits & 7u;
            return result;
        }

        static constexpr auto eq() -> OrbitalSet { return { OrbitLabel::Eq }; }
        static constexpr auto e() -> OrbitalSet { return { OrbitLabel::E }; }
        static constexpr auto n() -> OrbitalSet { return { OrbitLabel::N }; }
        static constexpr auto uu_e() -> OrbitalSet { return { OrbitLabel::E, OrbitLabel::Eq }; }
        static constexpr auto uu_n() -> OrbitalSet { return { OrbitLabel::N, OrbitLabel::Eq }; }
        static constexpr auto neq() -> OrbitalSet { return { OrbitLabel::E, OrbitLabel::N }; }
        static constexpr auto all() -> OrbitalSet { return { OrbitLabel::Eq, OrbitLabel::E, OrbitLabel::N }; }

        [[nodiscard]] constexpr auto bits() const noexcept -> std::uint8_t { return _bits; }
        [[nodiscard]] constexpr auto contains(OrbitLabel l) const noexcept -> bool { return _bits & (1u << unsigned(l)); }
        [[nodiscard]] constexpr auto empty() const noexcept -> bool { return _bits == 0; }
        [[nodiscard]] auto size() const noexcept -> unsigned;
        [[nodiscard]] auto members() const -> std::vector<OrbitLabel>;

        constexpr auto insert(OrbitLabel l) -> void { _bits |= std::uint8_t(1u << unsigned(l)); }

        [[nodiscard]] constexpr auto complement() const -> OrbitalSet { return from_bits(std::uint8_t(~_bits)); }

        /// Shorthand name where one exists ("E", "uuE", "NEQ", ...), otherwise "{=,E}" style.
        [[nodiscard]] auto name() const -> std::string;

        friend constexpr auto operator==(OrbitalSet, OrbitalSet) -> bool = default;
        friend constexpr auto operator|(OrbitalSet a, OrbitalSet b) -> OrbitalSet { return from_bits(a._bits | b._bits); }
        friend constexpr auto operator&(OrbitalSet a, OrbitalSet b) -> OrbitalSet { return from_bits(a._bits & b._bits); }
    };

    /// Accepts a shorthand name (E, N, =, uuE, uuN, NEQ, ALL).
    auto parse_orbital_set(std::string_view text) -> OrbitalSet;

    /**
     * The orbit of an r-tuple, equivalently its quantifier-free type: for every
     * pair of positions i < j, whether the entries are equal, adjacent, or
     * non-adjacent.
     *
     * Labels are stored per position pair in the order (0,1), (0,2), ...,
     * (0,r-1), (1,2), ... This is a canonical form: two types are the same
     * orbit iff their label vectors are equal. Construction checks that the
     * "=" pairs form an equivalence relation and that labels between two
     * classes do not depend on the chosen representatives.
     */
    class QfType
    {
    public:
        using Labels = std::vector<OrbitLabel>;

    private:
        unsigned _arity = 1;
        Labels _labels;

        struct Unchecked
        {
        };
        QfType(Unchecked, unsigned arity, Labels && labels);

    public:
        /// The unique type of arity one.
        QfType() = default;

        /// Throws InvalidType for a wrong label count or an inconsistent labelling.
        QfType(unsigned arity, Labels labels);

        /// Returns std::nullopt instead of throwing for an inconsistent labelling.
        static auto try_make(unsigned arity, Labels labels) -> std::optional<QfType>;

        /// All positions in one class.
        static auto single_class(unsigned arity) -> QfType;

        /// Builds a type from a class assignment (any numbering) and a label for
        /// each pair of distinct classes. The class_label callback is only called
        /// with distinct classes and must return E or N.
        static auto from_classes(std::span<const unsigned> class_of,
            const std::function<OrbitLabel(unsigned, unsigned)> & class_label) -> QfType;

        /// Comma-separated pair labels, e.g. "E,E,N" for arity 3. The empty
        /// string is the arity-1 type. Throws ParseError.
        static auto parse(std::string_view text, unsigned arity) -> QfType;

        [[nodiscard]] auto arity() const noexcept -> unsigned { return _arity; }

        /// Label of positions i and j (zero-based). Equal positions give Eq.
        [[nodiscard]] auto label(unsigned i, unsigned j) const -> OrbitLabel;

        [[nodiscard]] auto labels() const noexcept -> const Labels & { return _labels; }

        /// Class index per position; classes are numbered in order of their least member.
        [[nodiscard]] auto class_of() const -> std::vector<unsigned>;
        [[nodiscard]] auto class_count() const -> unsigned;

        [[nodiscard]] auto to_string() const -> std::string;

        friend auto operator==(const QfType &, const QfType &) -> bool = default;
        friend auto operator<=>(const QfType & a, const QfType & b) -> std::strong_ordering;

        static auto pair_index(unsigned arity, unsigned i, unsigned j) -> unsigned;

        friend auto project(const QfType & t, std::span<const unsigned> positions) -> QfType;
    };

    /// One vertex per class, adjacent iff the classes are labelled E.
    auto quotient_graph(const QfType & t) -> FiniteGraph;

    /// Whether the quotient graph embeds into the family's graph.
    auto realizable(const GraphFamily & family, const QfType & t) -> bool;

    /// The type of the tuple (t[p0], t[p1], ...). Positions are zero-based and may
    /// repeat. Throws IndexOutOfRange.
    auto project(const QfType & t, std::span<const unsigned> positions) -> QfType;

    /// Checked construction against a family: throws NotRealizable if the
    /// quotient graph is forbidden.
    auto make_realizable_type(const GraphFamily & family, unsigned arity, QfType::Labels labels) -> QfType;

    struct QfTypeHash
    {
        auto operator()(const QfType & t) const noexcept -> std::size_t;
    };
}

#endif

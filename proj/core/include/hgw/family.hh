#ifndef HGW_GUARD_HGW_FAMILY_HH
#define HGW_GUARD_HGW_FAMILY_HH 1

#include <hgw/graph.hh>

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hgw
{
    /// A clique size or clique count; std::nullopt stands for omega.
    using CountOrOmega = std::optional<unsigned>;

    /**
     * One of the countably infinite homogeneous graphs, described by the family
     * it belongs to: the random graph, a Henson graph H_k, a disjoint union of
     * cliques C^size_count, or the complement of a Henson or clique graph.
     *
     * The factories validate their arguments and throw InvalidFamily.
     */
    class GraphFamily
    {
    public:
        enum class Kind
        {
            Random,
            Henson,
            Cliques,
            Complement
        };

    private:
        Kind _kind;
        unsigned _henson_k = 0;
        CountOrOmega _size, _count;
        std::shared_ptr<const GraphFamily> _inner;
        std::string _name;
        std::shared_ptr<const std::vector<FiniteGraph>> _bounds;

        explicit GraphFamily(Kind kind);
        auto finish() -> GraphFamily &&;

    public:
        static auto random() -> GraphFamily;
        static auto henson(unsigned k) -> GraphFamily;
        static auto cliques(CountOrOmega size, CountOrOmega count) -> GraphFamily;
        static auto complement(const GraphFamily & inner) -> GraphFamily;

        [[nodiscard]] auto kind() const noexcept -> Kind { return _kind; }
        [[nodiscard]] auto henson_k() const noexcept -> unsigned { return _henson_k; }
        [[nodiscard]] auto clique_size() const noexcept -> CountOrOmega { return _size; }
        [[nodiscard]] auto clique_count() const noexcept -> CountOrOmega { return _count; }

        /// The complemented family. Only meaningful for Kind::Complement.
        [[nodiscard]] auto inner() const -> const GraphFamily &;

        /// Stable human-readable key, e.g. "henson(3)" or "complement(cliques(omega,2))".
        [[nodiscard]] auto name() const -> const std::string & { return _name; }

        [[nodiscard]] auto bounds() const -> const std::vector<FiniteGraph> & { return *_bounds; }

        friend auto operator==(const GraphFamily & a, const GraphFamily & b) -> bool { return a._name == b._name; }
    };

    /// The minimal set of forbidden induced subgraphs of the family.
    auto bounds_of(const GraphFamily & family) -> const std::vector<FiniteGraph> &;

    /// max(3, largest bound order).
    auto l_value(const GraphFamily & family) -> unsigned;

    /// A finite graph embeds into the family's graph iff no bound embeds into it.
    auto realizable(const GraphFamily & family, const FiniteGraph & graph) -> bool;
}

#endif

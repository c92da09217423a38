#ifndef HGW_GUARD_HGW_GRAPH_HH
#define HGW_GUARD_HGW_GRAPH_HH 1

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hgw
{
    /**
     * A finite simple undirected graph. Vertices are 0 .. order() - 1. Values are
     * immutable once built; use the static constructors or the edge-list
     * constructor.
     */
    class FiniteGraph
    {
    private:
        unsigned _order;
        std::vector<bool> _adjacency;

    public:
        /// Null graph (no edges) on the given number of vertices. Throws InvalidGraph if order is zero.
        explicit FiniteGraph(unsigned order);

        /// Throws InvalidGraph on out-of-range endpoints or loops.
        FiniteGraph(unsigned order, std::span<const std::pair<unsigned, unsigned>> edges);

        static auto complete(unsigned order) -> FiniteGraph;
        static auto null(unsigned order) -> FiniteGraph;

        /// The three-vertex graph with two edges and one non-edge.
        static auto path3() -> FiniteGraph;

        [[nodiscard]] auto order() const noexcept -> unsigned { return _order; }
        [[nodiscard]] auto adjacent(unsigned a, unsigned b) const -> bool;
        [[nodiscard]] auto degree(unsigned v) const -> unsigned;
        [[nodiscard]] auto edge_count() const -> unsigned;

        [[nodiscard]] auto complement() const -> FiniteGraph;
        [[nodiscard]] auto induced(std::span<const unsigned> vertices) const -> FiniteGraph;

        /// Lexicographically least upper-triangle adjacency string over all vertex
        /// permutations. Two graphs are isomorphic iff their canonical forms match.
        /// Intended for small graphs only (order <= 8).
        [[nodiscard]] auto canonical_form() const -> std::vector<bool>;

        [[nodiscard]] auto to_string() const -> std::string;

        friend auto operator==(const FiniteGraph &, const FiniteGraph &) -> bool = default;
    };

    /// True iff an injective map from pattern to host preserves both edges and non-edges.
    auto embeds(const FiniteGraph & pattern, const FiniteGraph & host) -> bool;

    auto isomorphic(const FiniteGraph & a, const FiniteGraph & b) -> bool;

    /// Every graph on the given order, one representative per isomorphism class.
    auto all_graphs_up_to_isomorphism(unsigned order) -> std::vector<FiniteGraph>;
}

#endif

#pragma once

#include <bdom/design.hpp>

#include <vector>

namespace bdom
{
    /// Bipartite graph G_D. Vertices 0..v-1 are points, v..v+b-1 are blocks
    /// in design order. Repeated blocks give separate vertices.
    class IncidenceGraph
    {
    public:
        explicit IncidenceGraph(const Design & d);

        [[nodiscard]] auto point_count() const noexcept -> int { return _v; }
        [[nodiscard]] auto block_count() const noexcept -> int { return _b; }
        [[nodiscard]] auto vertex_count() const noexcept -> int { return _v + _b; }
        [[nodiscard]] auto point_degree() const noexcept -> int { return _r; }
        [[nodiscard]] auto block_degree() const noexcept -> int { return _k; }
        [[nodiscard]] auto lambda() const noexcept -> int { return _lambda; }
        [[nodiscard]] auto max_degree() const noexcept -> int { return _r > _k ? _r : _k; }
        [[nodiscard]] auto min_degree() const noexcept -> int { return _r < _k ? _r : _k; }
        [[nodiscard]] auto edge_count() const noexcept -> long long { return static_cast<long long>(_b) * _k; }

        [[nodiscard]] auto is_point_vertex(int u) const noexcept -> bool { return u < _v; }
        [[nodiscard]] auto block_vertex(int block) const noexcept -> int { return _v + block; }

        /// Block indices through point p, ascending.
        [[nodiscard]] auto blocks_through(int p) const -> const std::vector<int> & { return _blocks_through.at(p); }
        [[nodiscard]] auto blocks_through_mask(int p) const -> const PointSet & { return _point_masks.at(p); }
        [[nodiscard]] auto block_mask(int block) const -> const PointSet & { return _block_masks.at(block); }

        /// Neighbours of vertex u as global vertex ids, ascending.
        [[nodiscard]] auto neighbours(int u) const -> std::vector<int>;

    private:
        int _v, _b, _k, _r, _lambda;
        std::vector<PointSet> _block_masks;
        std::vector<PointSet> _point_masks; // over block indices
        std::vector<std::vector<int>> _blocks_through;
    };

    auto build_graph(const Design & d) -> IncidenceGraph;

    /// A vertex subset of G_D kept as its point side and its block side.
    struct VertexSet
    {
        PointSet points;
        PointSet blocks;

        static auto empty(const IncidenceGraph & g) -> VertexSet;
        static auto all(const IncidenceGraph & g) -> VertexSet;
        static auto from_vertices(const IncidenceGraph & g, const std::vector<int> & ids) -> VertexSet;

        [[nodiscard]] auto size() const -> int { return static_cast<int>(points.count() + blocks.count()); }
        [[nodiscard]] auto contains_vertex(int u) const -> bool;
        [[nodiscard]] auto vertices() const -> std::vector<int>;
        [[nodiscard]] auto point_list() const -> std::vector<int>;
        [[nodiscard]] auto block_list() const -> std::vector<int>;

        auto operator==(const VertexSet &) const -> bool = default;
    };

    /// Orders vertex sets by their ascending global vertex id lists.
    auto canonical_less(const VertexSet & a, const VertexSet & b) -> bool;

    auto is_dominating(const IncidenceGraph & g, const VertexSet & s) -> bool;
    auto is_independent(const IncidenceGraph & g, const VertexSet & s) -> bool;

    /// No two distinct blocks share two points, so G_D has no 4-cycle.
    auto girth_at_least_6(const IncidenceGraph & g) -> bool;
}

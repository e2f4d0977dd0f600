#pragma once

#include <bdom/design.hpp>
#include <bdom/exact.hpp>
#include <bdom/incidence_graph.hpp>

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace bdom
{
    /// Blocks split by whether they meet a point set P.
    struct PointProjection
    {
        PointSet points;
        std::vector<int> meeting;  ///< L(P)
        std::vector<int> disjoint; ///< L-hat(P)
    };

    /// The point side of s.
    auto project(const VertexSet & s) -> PointSet;

    auto split_blocks(const Design & d, const PointSet & points) -> PointProjection;

    /// I_P: the points of P together with every block disjoint from P.
    auto neat_closure(const Design & d, const PointSet & points) -> VertexSet;

    auto is_neat_set(const Design & d, const VertexSet & s) -> bool;

    /// Every block disjoint from the point side of s is a member of s. Holds
    /// for every dominating set.
    auto hat_contained(const Design & d, const VertexSet & s) -> bool;

    /// I_{B - x} for every block B and x in B, in block then point order.
    /// Steiner designs only; each result is checked to dominate.
    auto punctured_block_sets(const Design & d) -> std::vector<VertexSet>;

    /// The blocks through x, with x removed, partition the other points.
    auto punctured_pencil_partitions(const Design & d, int point) -> bool;

    struct NeatnessReport
    {
        int gamma = 0;
        int idom = 0;
        std::size_t minimum_sets = 0;
        std::size_t neat_minimum_sets = 0;
        std::map<int, std::size_t> neat_by_points; ///< neat minimum sets keyed by |P|
        bool is_neat = false;
        bool all_minimum_neat = false;
        std::optional<bool> is_super_neat; ///< empty when not computed
        std::optional<std::size_t> minimal_sets;
        std::optional<VertexSet> neat_witness;
        std::optional<VertexSet> non_neat_witness;
        std::optional<VertexSet> non_neat_minimal_witness;
    };

    /// `minimum` must be the complete list of dominating sets of size gamma.
    /// Super-neatness is decided only when a complete minimal enumeration is
    /// supplied.
    auto classify_neatness(const Design & d, const EnumerationResult & minimum, int idom,
        const EnumerationResult * minimal = nullptr) -> NeatnessReport;

    /// Four blocks {a,b,c}, {a,d,e}, {b,d,f}, {c,e,f} on six points.
    struct PaschConfiguration
    {
        std::array<int, 6> points{}; ///< a, b, c, d, e, f
        std::array<int, 4> blocks{}; ///< block indices, in pattern order

        auto operator==(const PaschConfiguration &) const -> bool = default;
    };

    /// Pasch configurations in lexicographic order of block quadruples.
    /// `limit` = 0 returns all of them.
    auto find_pasch(const Design & d, std::size_t limit = 0) -> std::vector<PaschConfiguration>;

    /// Reads a configuration off four block indices, or nullopt when they do
    /// not form one.
    auto pasch_from_blocks(const Design & d, std::array<int, 4> blocks) -> std::optional<PaschConfiguration>;

    /// Replaces the four blocks in place by {a,b,d}, {a,c,e}, {b,c,f}, {d,e,f}.
    auto pasch_trade(const Design & d, const PaschConfiguration & c) -> Design;
}

#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <vector>

namespace bdom
{
    using PointSet = boost::dynamic_bitset<std::uint64_t>;

    struct DesignParams
    {
        int v = 0;
        int k = 0;
        int lambda = 0;
        int b = 0;
        int r = 0;

        /// Derives b and r from (v, k, lambda). Throws invalid_input when
        /// r or b is not integral, or when any value is non-positive.
        static auto from(int v, int k, int lambda) -> DesignParams;

        auto operator==(const DesignParams &) const -> bool = default;
    };

    struct DesignClass
    {
        bool is_simple = false;
        bool is_steiner = false;
        bool is_symmetric = false;
        bool is_sts = false;

        auto operator==(const DesignClass &) const -> bool = default;
    };

    /// A validated (v, k, lambda)-design. Points are 0..v-1. Blocks keep their
    /// input order and repeated blocks stay as separate entries.
    class Design
    {
    public:
        [[nodiscard]] auto v() const noexcept -> int { return _params.v; }
        [[nodiscard]] auto k() const noexcept -> int { return _params.k; }
        [[nodiscard]] auto lambda() const noexcept -> int { return _params.lambda; }
        [[nodiscard]] auto b() const noexcept -> int { return _params.b; }
        [[nodiscard]] auto r() const noexcept -> int { return _params.r; }
        [[nodiscard]] auto params() const noexcept -> const DesignParams & { return _params; }

        [[nodiscard]] auto blocks() const noexcept -> const std::vector<PointSet> & { return _blocks; }
        [[nodiscard]] auto block(int i) const -> const PointSet & { return _blocks.at(i); }
        [[nodiscard]] auto block_points(int i) const -> std::vector<int>;
        [[nodiscard]] auto block_lists() const -> std::vector<std::vector<int>>;
        [[nodiscard]] auto contains(int block, int point) const -> bool { return _blocks.at(block).test(point); }

        /// Same parameters and same blocks in the same order.
        auto operator==(const Design &) const -> bool = default;

        friend auto validate_design(int v, const std::vector<std::vector<int>> & blocks, int k, int lambda) -> Design;

    private:
        Design() = default;

        DesignParams _params;
        std::vector<PointSet> _blocks;
    };

    /// Checks block sizes, pair coverage and the counting identities. Blocks
    /// are 0-based point lists. Throws ValidationError on any violation.
    auto validate_design(int v, const std::vector<std::vector<int>> & blocks, int k, int lambda) -> Design;

    auto classify(const Design & d) -> DesignClass;

    /// True when both designs hold the same blocks, ignoring order.
    auto same_block_multiset(const Design & a, const Design & b) -> bool;

    /// Two copies of every block: a (v, k, 2 lambda)-design.
    auto double_design(const Design & d) -> Design;

    /// Block complements: a (v, v-k, b-2r+lambda)-design.
    auto complement(const Design & d) -> Design;

    /// Transpose of a symmetric design. Block i of the dual holds point j iff
    /// block j of d holds point i.
    auto dual(const Design & d) -> Design;

    /// Symmetric d, block B removed: points outside B, blocks C minus B.
    auto residual(const Design & d, int block_index) -> Design;

    /// Symmetric d restricted to block B: blocks C intersect B.
    auto derived(const Design & d, int block_index) -> Design;
}

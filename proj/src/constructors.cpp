#include <bdom/constructors.hpp>
#include <bdom/errors.hpp>

#include <algorithm>
#include <array>
#include <string>

using std::string;
using std::vector;

namespace bdom
{
    using std::to_string;

    namespace
    {
        auto zero_based(const vector<vector<int>> & one_based) -> vector<vector<int>>
        {
            auto result = one_based;
            for (auto & blk : result)
                for (auto & p : blk)
                    --p;
            return result;
        }

        auto mod(long long a, int n) -> int
        {
            auto m = a % n;
            return static_cast<int>(m < 0 ? m + n : m);
        }

        // Nonzero vectors of F_q^3 whose first nonzero coordinate is 1.
        auto normalized_vectors(int q) -> vector<std::array<int, 3>>
        {
            vector<std::array<int, 3>> out;
            out.push_back({0, 0, 1});
            for (int z = 0; z < q; ++z)
                out.push_back({0, 1, z});
            for (int y = 0; y < q; ++y)
                for (int z = 0; z < q; ++z)
                    out.push_back({1, y, z});
            return out;
        }
    }

    auto is_prime(int n) -> bool
    {
        if (n < 2)
            return false;
        for (int d = 2; d * d <= n; ++d)
            if (n % d == 0)
                return false;
        return true;
    }

    auto difference_counts(const DifferenceFamily & f) -> vector<int>
    {
        if (f.modulus < 2)
            throw Error(ErrorKind::invalid_input, "difference family modulus must be at least 2");
        vector<int> counts(f.modulus, 0);
        for (const auto & blk : f.base_blocks)
            for (std::size_t i = 0; i < blk.size(); ++i)
                for (std::size_t j = 0; j < blk.size(); ++j)
                    if (i != j)
                        ++counts[mod(static_cast<long long>(blk[i]) - blk[j], f.modulus)];
        return counts;
    }

    auto fano() -> Design
    {
        return validate_design(7,
            zero_based({{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 5, 6}}), 3, 1);
    }

    auto projective_plane(int q) -> Design
    {
        if (! is_prime(q))
            throw Error(ErrorKind::not_prime, "projective_plane needs a prime order, got " + to_string(q));
        auto pts = normalized_vectors(q);
        vector<vector<int>> lines;
        for (const auto & line : pts) {
            vector<int> on;
            for (std::size_t p = 0; p < pts.size(); ++p) {
                long long dot = 0;
                for (int c = 0; c < 3; ++c)
                    dot += static_cast<long long>(line[c]) * pts[p][c];
                if (dot % q == 0)
                    on.push_back(static_cast<int>(p));
            }
            lines.push_back(std::move(on));
        }
        int v = q * q + q + 1;
        return validate_design(v, lines, q + 1, 1);
    }

    auto affine_plane_9() -> Design
    {
        auto at = [](int x, int y) { return 3 * mod(x, 3) + mod(y, 3); };
        vector<vector<int>> lines;
        for (int c = 0; c < 3; ++c)
            lines.push_back({at(0, c), at(1, c), at(2, c)});
        for (int c = 0; c < 3; ++c)
            lines.push_back({at(c, 0), at(c, 1), at(c, 2)});
        for (int slope = 1; slope <= 2; ++slope)
            for (int c = 0; c < 3; ++c)
                lines.push_back({at(0, c), at(1, slope + c), at(2, 2 * slope + c)});
        for (auto & l : lines)
            std::sort(l.begin(), l.end());
        return validate_design(9, lines, 3, 1);
    }

    auto sts_bose(int v) -> Design
    {
        if (v < 9 || v % 6 != 3)
            throw Error(ErrorKind::bad_order, "Bose construction needs v = 3 (mod 6), v >= 9; got " + to_string(v));
        int n = v / 3;
        int half = (n + 1) / 2; // inverse of 2 mod n
        auto pt = [n](int x, int layer) { return layer * n + x; };
        vector<vector<int>> blocks;
        for (int x = 0; x < n; ++x)
            blocks.push_back({pt(x, 0), pt(x, 1), pt(x, 2)});
        for (int layer = 0; layer < 3; ++layer)
            for (int x = 0; x < n; ++x)
                for (int y = x + 1; y < n; ++y) {
                    int mid = mod(static_cast<long long>(x + y) * half, n);
                    vector<int> blk{pt(x, layer), pt(y, layer), pt(mid, (layer + 1) % 3)};
                    std::sort(blk.begin(), blk.end());
                    blocks.push_back(std::move(blk));
                }
        return validate_design(v, blocks, 3, 1);
    }

    auto cyclic_design(const DifferenceFamily & f) -> Design
    {
        auto counts = difference_counts(f);
        for (int d = 1; d < f.modulus; ++d)
            if (counts[d] != f.lambda)
                throw Error(ErrorKind::difference_coverage_violation,
                    "difference " + to_string(d) + " arises " + to_string(counts[d]) + " times, expected "
                        + to_string(f.lambda));
        if (f.base_blocks.empty())
            throw Error(ErrorKind::invalid_input, "difference family has no base blocks");
        int k = static_cast<int>(f.base_blocks.front().size());
        vector<vector<int>> blocks;
        for (const auto & base : f.base_blocks)
            for (int t = 0; t < f.modulus; ++t) {
                vector<int> blk;
                for (int x : base)
                    blk.push_back(mod(static_cast<long long>(x) + t, f.modulus));
                std::sort(blk.begin(), blk.end());
                blocks.push_back(std::move(blk));
            }
        return validate_design(f.modulus, blocks, k, f.lambda);
    }

    auto difference_family_preset(std::string_view name) -> DifferenceFamily
    {
        if (name == "sts13")
            return {13, 1, {{0, 1, 4}, {0, 2, 7}}};
        if (name == "sts19")
            return {19, 1, {{0, 1, 4}, {0, 2, 9}, {0, 5, 11}}};
        if (name == "biplane11")
            return {11, 2, {{1, 3, 4, 5, 9}}};
        throw Error(ErrorKind::invalid_input, "unknown difference family preset '" + string(name) + "'");
    }

    auto fixture_8_4_3() -> Design
    {
        return validate_design(8,
            zero_based({
                {1, 2, 3, 4},
                {1, 2, 3, 5},
                {1, 2, 6, 7},
                {1, 3, 6, 8},
                {1, 4, 5, 6},
                {1, 4, 7, 8},
                {1, 5, 7, 8},
                {2, 3, 7, 8},
                {2, 4, 5, 7},
                {2, 4, 6, 8},
                {2, 5, 6, 8},
                {3, 4, 5, 8},
                {3, 4, 6, 7},
                {3, 5, 6, 7},
            }),
            4, 3);
    }
}

#pragma once

#include <bdom/design.hpp>

#include <string_view>
#include <vector>

namespace bdom
{
    /// Base blocks over the integers mod `modulus`. Developing every base
    /// block by all n translations gives a design when each nonzero residue
    /// arises exactly `lambda` times as a difference of two base-block elements.
    struct DifferenceFamily
    {
        int modulus = 0;
        int lambda = 1;
        std::vector<std::vector<int>> base_blocks;
    };

    /// Multiplicity of each residue 0..n-1 among all ordered differences x-y.
    auto difference_counts(const DifferenceFamily & f) -> std::vector<int>;

    /// The seven Fano lines 123 145 167 246 257 347 356 (1-based).
    auto fano() -> Design;

    /// PG(2, q) for prime q, from normalized homogeneous coordinates.
    auto projective_plane(int q) -> Design;

    /// AG(2, 3): rows, columns and both diagonal classes of the 3x3 grid.
    auto affine_plane_9() -> Design;

    /// Bose construction of an STS(v), v = 3 (mod 6).
    auto sts_bose(int v) -> Design;

    auto cyclic_design(const DifferenceFamily & f) -> Design;

    /// Known difference families: "sts13", "sts19", "biplane11".
    auto difference_family_preset(std::string_view name) -> DifferenceFamily;

    /// The 14-block (8,4,3)-design used as the neat-but-not-super-neat example.
    auto fixture_8_4_3() -> Design;

    auto is_prime(int n) -> bool;
}

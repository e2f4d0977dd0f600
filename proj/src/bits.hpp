#pragma once

// Fixed-width bitsets for the search kernels. Width is picked at runtime from
// the vertex count and dispatched to a template instantiation.

#include <bdom/errors.hpp>

#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <type_traits>

namespace bdom::detail
{
    template <std::size_t W>
    struct Bits
    {
        std::array<std::uint64_t, W> w{};

        void set(int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
        void reset(int i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
        [[nodiscard]] auto test(int i) const -> bool { return (w[i >> 6] >> (i & 63)) & 1U; }

        [[nodiscard]] auto count() const -> int
        {
            int c = 0;
            for (auto x : w)
                c += std::popcount(x);
            return c;
        }

        [[nodiscard]] auto any() const -> bool
        {
            for (auto x : w)
                if (x)
                    return true;
            return false;
        }

        [[nodiscard]] auto none() const -> bool { return ! any(); }

        [[nodiscard]] auto intersects(const Bits & o) const -> bool
        {
            for (std::size_t i = 0; i < W; ++i)
                if (w[i] & o.w[i])
                    return true;
            return false;
        }

        [[nodiscard]] auto count_and(const Bits & o) const -> int
        {
            int c = 0;
            for (std::size_t i = 0; i < W; ++i)
                c += std::popcount(w[i] & o.w[i]);
            return c;
        }

        [[nodiscard]] auto subset_of(const Bits & o) const -> bool
        {
            for (std::size_t i = 0; i < W; ++i)
                if (w[i] & ~o.w[i])
                    return false;
            return true;
        }

        auto operator|=(const Bits & o) -> Bits &
        {
            for (std::size_t i = 0; i < W; ++i)
                w[i] |= o.w[i];
            return *this;
        }

        auto operator&=(const Bits & o) -> Bits &
        {
            for (std::size_t i = 0; i < W; ++i)
                w[i] &= o.w[i];
            return *this;
        }

        auto subtract(const Bits & o) -> Bits &
        {
            for (std::size_t i = 0; i < W; ++i)
                w[i] &= ~o.w[i];
            return *this;
        }

        friend auto operator&(Bits a, const Bits & b) -> Bits { return a &= b; }
        friend auto operator|(Bits a, const Bits & b) -> Bits { return a |= b; }
        friend auto minus(Bits a, const Bits & b) -> Bits { return a.subtract(b); }
        auto operator==(const Bits &) const -> bool = default;

        /// Lowest set bit, or -1.
        [[nodiscard]] auto first() const -> int
        {
            for (std::size_t i = 0; i < W; ++i)
                if (w[i])
                    return static_cast<int>(i * 64 + std::countr_zero(w[i]));
            return -1;
        }

        template <typename F>
        void for_each(F && f) const
        {
            for (std::size_t i = 0; i < W; ++i) {
                auto x = w[i];
                while (x) {
                    int bit = std::countr_zero(x);
                    x &= x - 1;
                    f(static_cast<int>(i * 64 + bit));
                }
            }
        }

        static auto prefix(int n) -> Bits
        {
            Bits b;
            for (int i = 0; i < n; ++i)
                b.set(i);
            return b;
        }
    };

    inline constexpr int max_kernel_bits = 16 * 64;

    /// Calls f(std::integral_constant<std::size_t, W>{}) for the smallest
    /// supported W with 64 W >= n.
    template <typename F>
    auto dispatch_width(int n, F && f)
    {
        if (n <= 64)
            return f(std::integral_constant<std::size_t, 1>{});
        if (n <= 128)
            return f(std::integral_constant<std::size_t, 2>{});
        if (n <= 256)
            return f(std::integral_constant<std::size_t, 4>{});
        if (n <= 512)
            return f(std::integral_constant<std::size_t, 8>{});
        if (n <= max_kernel_bits)
            return f(std::integral_constant<std::size_t, 16>{});
        throw Error(ErrorKind::instance_too_large,
            "instance with " + std::to_string(n) + " vertices exceeds the search kernel limit");
    }
}

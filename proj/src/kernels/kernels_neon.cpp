#include "reqmine/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

#include <bit>

// NEON variants: vcntq_u8 produces per-byte popcounts, vaddvq_u8 sums the 16
// bytes of one 128-bit chunk (maximum 128, no overflow). Two words per
// iteration, scalar tail for an odd word count. NEON is mandatory on
// AArch64, so no runtime probe is needed.

namespace reqmine::kernels {

namespace {

inline std::uint64_t chunk_popcount(uint64x2_t v) {
    return vaddvq_u8(vcntq_u8(vreinterpretq_u8_u64(v)));
}

std::uint64_t popcount_words_neon(const std::uint64_t* words, std::size_t n_words) {
    const std::size_t vec_words = n_words & ~std::size_t{1};
    std::uint64_t total = 0;
    std::size_t i = 0;
    for (; i < vec_words; i += 2) {
        total += chunk_popcount(vld1q_u64(words + i));
    }
    if (i < n_words) {
        total += static_cast<std::uint64_t>(std::popcount(words[i]));
    }
    return total;
}

std::uint64_t and_popcount_neon(const std::uint64_t* a, const std::uint64_t* b,
                                std::size_t n_words) {
    const std::size_t vec_words = n_words & ~std::size_t{1};
    std::uint64_t total = 0;
    std::size_t i = 0;
    for (; i < vec_words; i += 2) {
        total += chunk_popcount(vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
    }
    if (i < n_words) {
        total += static_cast<std::uint64_t>(std::popcount(a[i] & b[i]));
    }
    return total;
}

std::uint64_t intersect_popcount_neon(const std::uint64_t* const* cols, std::size_t n_cols,
                                      std::size_t n_words) {
    const std::size_t vec_words = n_words & ~std::size_t{1};
    std::uint64_t total = 0;
    std::size_t i = 0;
    for (; i < vec_words; i += 2) {
        uint64x2_t v = vld1q_u64(cols[0] + i);
        for (std::size_t c = 1; c < n_cols; ++c) {
            v = vandq_u64(v, vld1q_u64(cols[c] + i));
        }
        total += chunk_popcount(v);
    }
    if (i < n_words) {
        std::uint64_t word = cols[0][i];
        for (std::size_t c = 1; c < n_cols; ++c) {
            word &= cols[c][i];
        }
        total += static_cast<std::uint64_t>(std::popcount(word));
    }
    return total;
}

}  // namespace

const Kernels& neon_kernels() {
    static const Kernels k{"neon", popcount_words_neon, and_popcount_neon,
                           intersect_popcount_neon};
    return k;
}

}  // namespace reqmine::kernels

#endif  // __aarch64__

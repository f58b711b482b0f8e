#include "reqmine/kernels.hpp"

#if defined(__x86_64__)

#include <bit>
#include <immintrin.h>

// AVX2 variants. Counts are accumulated with the SSSE3 nibble-lookup popcount
// followed by _mm256_sad_epu8, which widens the per-byte counts to one 64-bit
// lane per 8 bytes; the lane accumulator cannot overflow for any realistic
// input size. Loads are unaligned, tails of fewer than four words fall back
// to the scalar loop. Function-level target attributes keep the rest of the
// translation unit buildable without -mavx2.

namespace reqmine::kernels {

namespace {

__attribute__((target("avx2"))) inline __m256i byte_popcount(__m256i v) {
    const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,  //
                                            0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    const __m256i lo = _mm256_and_si256(v, low_mask);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    return _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
}

__attribute__((target("avx2"))) inline std::uint64_t reduce_epi64(__m256i acc) {
    std::uint64_t lanes[4];
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(lanes), acc);
    return lanes[0] + lanes[1] + lanes[2] + lanes[3];
}

__attribute__((target("avx2"))) std::uint64_t popcount_words_avx2(const std::uint64_t* words,
                                                                  std::size_t n_words) {
    const std::size_t vec_words = n_words & ~std::size_t{3};
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i < vec_words; i += 4) {
        const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words + i));
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(byte_popcount(v), _mm256_setzero_si256()));
    }
    std::uint64_t total = reduce_epi64(acc);
    for (; i < n_words; ++i) {
        total += static_cast<std::uint64_t>(std::popcount(words[i]));
    }
    return total;
}

__attribute__((target("avx2"))) std::uint64_t and_popcount_avx2(const std::uint64_t* a,
                                                                const std::uint64_t* b,
                                                                std::size_t n_words) {
    const std::size_t vec_words = n_words & ~std::size_t{3};
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i < vec_words; i += 4) {
        const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        const __m256i v = _mm256_and_si256(va, vb);
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(byte_popcount(v), _mm256_setzero_si256()));
    }
    std::uint64_t total = reduce_epi64(acc);
    for (; i < n_words; ++i) {
        total += static_cast<std::uint64_t>(std::popcount(a[i] & b[i]));
    }
    return total;
}

__attribute__((target("avx2"))) std::uint64_t intersect_popcount_avx2(
    const std::uint64_t* const* cols, std::size_t n_cols, std::size_t n_words) {
    const std::size_t vec_words = n_words & ~std::size_t{3};
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i < vec_words; i += 4) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(cols[0] + i));
        for (std::size_t c = 1; c < n_cols; ++c) {
            v = _mm256_and_si256(
                v, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(cols[c] + i)));
        }
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(byte_popcount(v), _mm256_setzero_si256()));
    }
    std::uint64_t total = reduce_epi64(acc);
    for (; i < n_words; ++i) {
        std::uint64_t word = cols[0][i];
        for (std::size_t c = 1; c < n_cols; ++c) {
            word &= cols[c][i];
        }
        total += static_cast<std::uint64_t>(std::popcount(word));
    }
    return total;
}

}  // namespace

bool cpu_has_avx2() { return __builtin_cpu_supports("avx2"); }

const Kernels& avx2_kernels() {
    static const Kernels k{"avx2", popcount_words_avx2, and_popcount_avx2,
                           intersect_popcount_avx2};
    return k;
}

}  // namespace reqmine::kernels

#endif  // x86-64

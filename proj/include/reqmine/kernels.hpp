#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

// Bit-counting kernels behind all support and correlation arithmetic.
//
// Every hot loop in the miner reduces to one of three word-level primitives
// over bit-packed columns:
//
//   popcount_words      ones(x)          -> column frequency, 1-itemset count
//   and_popcount        ones(x & y)      -> pair support, Pearson sum(XY)
//   intersect_popcount  ones(x1 & ... & xk) -> k-itemset support
//
// The scalar implementations are the reference semantics. SIMD variants
// (AVX2 on x86-64, NEON on AArch64) are selected once at runtime and must
// return bit-identical counts; the test suite checks every available variant
// against the scalar kernels on randomized inputs, including ragged tails.
//
// All kernels take whole words. Callers guarantee that bits past the logical
// column length are zero (BitColumn maintains this).

namespace reqmine::kernels {

struct Kernels {
    const char* name;
    std::uint64_t (*popcount_words)(const std::uint64_t* words, std::size_t n_words);
    std::uint64_t (*and_popcount)(const std::uint64_t* a, const std::uint64_t* b,
                                  std::size_t n_words);
    // n_cols >= 1; cols[0..n_cols) each point at n_words words.
    std::uint64_t (*intersect_popcount)(const std::uint64_t* const* cols, std::size_t n_cols,
                                        std::size_t n_words);
};

// Reference implementation, always available.
const Kernels& scalar_kernels();

// Every variant the current CPU can run, scalar first.
std::vector<const Kernels*> available_kernels();

// The variant in use: the widest supported instruction set, unless the
// REQMINE_KERNEL environment variable ("scalar", "avx2", "neon") overrides
// the choice. Throws reqmine::Error for an unknown or unsupported name.
const Kernels& active_kernels();

#if defined(__x86_64__)
bool cpu_has_avx2();
const Kernels& avx2_kernels();
#endif

#if defined(__aarch64__)
const Kernels& neon_kernels();
#endif

}  // namespace reqmine::kernels

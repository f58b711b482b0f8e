#include "reqmine/kernels.hpp"

#include <bit>

namespace reqmine::kernels {

namespace {

std::uint64_t popcount_words_scalar(const std::uint64_t* words, std::size_t n_words) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < n_words; ++i) {
        total += static_cast<std::uint64_t>(std::popcount(words[i]));
    }
    return total;
}

std::uint64_t and_popcount_scalar(const std::uint64_t* a, const std::uint64_t* b,
                                  std::size_t n_words) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < n_words; ++i) {
        total += static_cast<std::uint64_t>(std::popcount(a[i] & b[i]));
    }
    return total;
}

std::uint64_t intersect_popcount_scalar(const std::uint64_t* const* cols, std::size_t n_cols,
                                        std::size_t n_words) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < n_words; ++i) {
        std::uint64_t word = cols[0][i];
        for (std::size_t c = 1; c < n_cols; ++c) {
            word &= cols[c][i];
        }
        total += static_cast<std::uint64_t>(std::popcount(word));
    }
    return total;
}

}  // namespace

const Kernels& scalar_kernels() {
    static const Kernels k{"scalar", popcount_words_scalar, and_popcount_scalar,
                           intersect_popcount_scalar};
    return k;
}

}  // namespace reqmine::kernels

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace reqmine {

// One binary attribute column, bit-packed into 64-bit words (row i lives at
// bit i % 64 of word i / 64). Bits past size() are always zero, so kernels
// may popcount whole words without masking.
class BitColumn {
public:
    BitColumn() = default;

    explicit BitColumn(std::size_t bits)
        : bits_(bits), words_((bits + 63) / 64, 0) {}

    void set(std::size_t i, bool value) {
        const std::uint64_t mask = std::uint64_t{1} << (i % 64);
        if (value) {
            words_[i / 64] |= mask;
        } else {
            words_[i / 64] &= ~mask;
        }
    }

    bool test(std::size_t i) const {
        return (words_[i / 64] >> (i % 64)) & 1u;
    }

    std::size_t size() const { return bits_; }
    std::size_t word_count() const { return words_.size(); }
    std::span<const std::uint64_t> words() const { return words_; }
    const std::uint64_t* data() const { return words_.data(); }

    friend bool operator==(const BitColumn&, const BitColumn&) = default;

private:
    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace reqmine

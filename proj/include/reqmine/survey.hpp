#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "reqmine/bitcolumn.hpp"
#include "reqmine/types.hpp"

namespace reqmine {

// Binary questionnaire responses: N respondent rows over M named attribute
// columns. Stored column-major and bit-packed so the counting kernels can
// work on whole words.
class ResponseMatrix {
public:
    // rows are respondent vectors of 0/1 values, all of length names.size().
    // Validates every invariant (unique non-empty names, binary cells,
    // N >= 1, M >= 1) and throws reqmine::Error subclasses on violation.
    static ResponseMatrix from_rows(std::vector<std::string> names,
                                    const std::vector<std::vector<std::uint8_t>>& rows);

    std::size_t row_count() const { return rows_; }
    std::size_t attribute_count() const { return names_.size(); }

    const std::vector<std::string>& attribute_names() const { return names_; }
    const std::string& name(AttributeId id) const { return names_[id.index]; }

    bool cell(std::size_t row, AttributeId id) const { return columns_[id.index].test(row); }
    const BitColumn& column(AttributeId id) const { return columns_[id.index]; }

    // New matrix containing only the given columns, in the given order.
    ResponseMatrix select_columns(std::span<const AttributeId> ids) const;

    friend bool operator==(const ResponseMatrix&, const ResponseMatrix&) = default;
    friend ResponseMatrix parse_survey(std::string_view text);

private:
    std::vector<std::string> names_;
    std::size_t rows_ = 0;
    std::vector<BitColumn> columns_;
};

// Per-attribute counts of 1-cells; fractions are derived on demand so that
// ordering and threshold decisions can compare exact integers.
struct FrequencyVector {
    std::vector<std::uint64_t> ones;  // per attribute
    std::uint64_t rows = 0;

    std::size_t size() const { return ones.size(); }
    double fraction(AttributeId id) const {
        return static_cast<double>(ones[id.index]) / static_cast<double>(rows);
    }

    friend bool operator==(const FrequencyVector&, const FrequencyVector&) = default;
};

// Parses the flat CSV survey format: line 1 is the comma-separated header,
// every following line holds exactly M fields, each "0" or "1". LF and CRLF
// are both accepted, one trailing newline is optional. Errors carry the
// 1-based line/field position of the offending cell.
ResponseMatrix parse_survey(std::string_view text);

// Inverse of parse_survey; emits LF line endings and a trailing newline.
std::string serialize_survey(const ResponseMatrix& matrix);

FrequencyVector attribute_frequencies(const ResponseMatrix& matrix);

// Attributes whose frequency is >= threshold, ordered by descending
// frequency, ties by ascending attribute index.
std::vector<AttributeId> select_top_requirements(const FrequencyVector& freqs, double threshold);

}  // namespace reqmine

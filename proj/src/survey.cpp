#include "reqmine/survey.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "reqmine/errors.hpp"
#include "reqmine/kernels.hpp"

namespace reqmine {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

// Splits on LF, dropping one CR before each break (CRLF input) and at most
// one trailing empty line.
std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos) {
            lines.push_back(text.substr(start));
            break;
        }
        std::string_view line = text.substr(start, nl - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        start = nl + 1;
    }
    if (!lines.empty() && lines.back().empty()) lines.pop_back();
    return lines;
}

}  // namespace

ResponseMatrix ResponseMatrix::from_rows(std::vector<std::string> names,
                                         const std::vector<std::vector<std::uint8_t>>& rows) {
    if (names.empty()) throw EmptyInput("attribute list is empty");
    if (rows.empty()) throw EmptyInput("no response rows");
    std::unordered_set<std::string_view> seen;
    for (std::size_t j = 0; j < names.size(); ++j) {
        if (names[j].empty()) {
            throw EmptyHeaderName("attribute " + std::to_string(j + 1) + " has an empty name",
                                  j + 1);
        }
        if (!seen.insert(names[j]).second) {
            throw DuplicateHeader("duplicate attribute name \"" + names[j] + "\" (column " +
                                      std::to_string(j + 1) + ")",
                                  j + 1);
        }
    }

    ResponseMatrix m;
    m.names_ = std::move(names);
    m.rows_ = rows.size();
    m.columns_.assign(m.names_.size(), BitColumn(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.names_.size()) {
            throw RaggedRow("row " + std::to_string(i + 1) + " has " +
                                std::to_string(rows[i].size()) + " values, expected " +
                                std::to_string(m.names_.size()),
                            i + 1);
        }
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            if (rows[i][j] > 1) {
                throw NonBinaryValue("row " + std::to_string(i + 1) + ", column " +
                                         std::to_string(j + 1) + ": value is not 0 or 1",
                                     i + 1, j + 1);
            }
            if (rows[i][j]) m.columns_[j].set(i, true);
        }
    }
    return m;
}

ResponseMatrix ResponseMatrix::select_columns(std::span<const AttributeId> ids) const {
    ResponseMatrix m;
    m.rows_ = rows_;
    m.names_.reserve(ids.size());
    m.columns_.reserve(ids.size());
    for (AttributeId id : ids) {
        m.names_.push_back(names_[id.index]);
        m.columns_.push_back(columns_[id.index]);
    }
    return m;
}

ResponseMatrix parse_survey(std::string_view text) {
    const std::vector<std::string_view> lines = split_lines(text);
    if (lines.empty() || (lines.size() == 1 && lines[0].empty())) {
        throw EmptyInput("input is empty");
    }

    const std::vector<std::string_view> header = split_fields(lines[0]);
    std::vector<std::string> names;
    names.reserve(header.size());
    std::unordered_set<std::string_view> seen;
    for (std::size_t j = 0; j < header.size(); ++j) {
        if (header[j].empty()) {
            throw EmptyHeaderName("header field " + std::to_string(j + 1) + " is empty", j + 1);
        }
        if (!seen.insert(header[j]).second) {
            throw DuplicateHeader("duplicate header name \"" + std::string(header[j]) +
                                      "\" (field " + std::to_string(j + 1) + ")",
                                  j + 1);
        }
        names.emplace_back(header[j]);
    }

    if (lines.size() == 1) throw EmptyInput("no data rows after the header");

    const std::size_t m = names.size();
    const std::size_t n = lines.size() - 1;
    std::vector<BitColumn> columns(m, BitColumn(n));
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t line_no = i + 2;  // 1-based, after the header
        const std::vector<std::string_view> fields = split_fields(lines[i + 1]);
        if (fields.size() != m) {
            throw RaggedRow("line " + std::to_string(line_no) + " has " +
                                std::to_string(fields.size()) + " fields, expected " +
                                std::to_string(m),
                            line_no);
        }
        for (std::size_t j = 0; j < m; ++j) {
            if (fields[j] == "1") {
                columns[j].set(i, true);
            } else if (fields[j] != "0") {
                throw NonBinaryValue("line " + std::to_string(line_no) + ", field " +
                                         std::to_string(j + 1) + ": \"" +
                                         std::string(fields[j]) + "\" is not 0 or 1",
                                     line_no, j + 1);
            }
        }
    }

    ResponseMatrix matrix;
    matrix.names_ = std::move(names);
    matrix.rows_ = n;
    matrix.columns_ = std::move(columns);
    return matrix;
}

std::string serialize_survey(const ResponseMatrix& matrix) {
    std::string out;
    for (std::size_t j = 0; j < matrix.attribute_count(); ++j) {
        if (j > 0) out += ',';
        out += matrix.attribute_names()[j];
    }
    out += '\n';
    for (std::size_t i = 0; i < matrix.row_count(); ++i) {
        for (std::size_t j = 0; j < matrix.attribute_count(); ++j) {
            if (j > 0) out += ',';
            out += matrix.cell(i, AttributeId{static_cast<std::uint32_t>(j)}) ? '1' : '0';
        }
        out += '\n';
    }
    return out;
}

FrequencyVector attribute_frequencies(const ResponseMatrix& matrix) {
    const auto& k = kernels::active_kernels();
    FrequencyVector freqs;
    freqs.rows = matrix.row_count();
    freqs.ones.reserve(matrix.attribute_count());
    for (std::size_t j = 0; j < matrix.attribute_count(); ++j) {
        const BitColumn& col = matrix.column(AttributeId{static_cast<std::uint32_t>(j)});
        freqs.ones.push_back(k.popcount_words(col.data(), col.word_count()));
    }
    return freqs;
}

std::vector<AttributeId> select_top_requirements(const FrequencyVector& freqs, double threshold) {
    std::vector<AttributeId> ids;
    for (std::uint32_t j = 0; j < freqs.size(); ++j) {
        const AttributeId id{j};
        if (freqs.fraction(id) >= threshold) ids.push_back(id);
    }
    std::sort(ids.begin(), ids.end(), [&](AttributeId a, AttributeId b) {
        if (freqs.ones[a.index] != freqs.ones[b.index]) {
            return freqs.ones[a.index] > freqs.ones[b.index];
        }
        return a.index < b.index;
    });
    return ids;
}

}  // namespace reqmine

#include <cstdio>
#include <string>

#include "reqmine/pipeline.hpp"

namespace reqmine {

namespace {

std::string format3(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3f", value);
    return buf;
}

std::string ratio(std::uint64_t count, std::uint64_t total) {
    return std::to_string(count) + "/" + std::to_string(total);
}

struct TextWriter {
    std::string out;
    bool color;

    void heading(const std::string& title) {
        if (!out.empty()) out += '\n';
        if (color) out += "\x1b[1m";
        out += title;
        if (color) out += "\x1b[0m";
        out += '\n';
        out += std::string(title.size(), '-');
        out += '\n';
    }

    void line(const std::string& text) {
        out += text;
        out += '\n';
    }
};

std::string item_names(const Itemset& items, const std::vector<std::string>& names) {
    std::string out = "{";
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0) out += ", ";
        out += names[items[i].index];
    }
    out += "}";
    return out;
}

// Row/column labels of the requirement grid; the legend maps them back to
// full attribute names.
std::string alias(std::size_t r) { return "R" + std::to_string(r + 1); }

}  // namespace

std::string export_text(const PriorityReport& report, bool color) {
    TextWriter w{{}, color};
    const std::uint64_t n = report.respondents;

    w.line("reqmine analysis: " + std::to_string(n) + " respondents, " +
           std::to_string(report.attribute_names.size()) + " attributes");

    w.heading("Attribute frequencies");
    for (std::uint32_t j = 0; j < report.frequencies.size(); ++j) {
        const AttributeId id{j};
        w.line("  " + format3(report.frequencies.fraction(id)) + " (" +
               ratio(report.frequencies.ones[j], n) + ")  " + report.attribute_names[j]);
    }

    w.heading("Top requirements");
    if (report.top_requirements.empty()) w.line("  (none above the threshold)");
    for (std::size_t r = 0; r < report.top_requirements.size(); ++r) {
        const AttributeId id = report.top_requirements[r];
        w.line("  " + alias(r) + "  " + report.attribute_names[id.index] + "  (" +
               format3(report.frequencies.fraction(id)) + ")");
    }

    w.heading("Frequent itemsets");
    if (report.frequent_itemsets.empty()) w.line("  (none)");
    for (const FrequentItemset& f : report.frequent_itemsets) {
        w.line("  " + format3(f.support) + " (" + ratio(f.count, n) + ")  " +
               item_names(f.items, report.requirement_names));
    }

    w.heading("Association rules");
    if (report.rules.empty()) w.line("  (none)");
    for (const AssociationRule& r : report.rules) {
        w.line("  " + item_names(r.antecedent, report.requirement_names) + " => " +
               item_names(r.consequent, report.requirement_names) + "  support " +
               format3(r.support) + ", confidence " + format3(r.confidence) + ", lift " +
               format3(r.lift));
    }

    w.heading("Requirement matrix");
    {
        const std::size_t size = report.requirement_matrix.size();
        const auto pad = [](std::string s, std::size_t width) {
            while (s.size() < width) s.insert(s.begin(), ' ');
            return s;
        };
        if (size == 0) {
            w.line("  (empty)");
        } else {
            std::string header = pad("", 6);
            for (std::size_t j = 0; j < size; ++j) header += pad(alias(j), 4);
            w.line(header);
            for (std::size_t i = 0; i < size; ++i) {
                std::string row = pad(alias(i), 6);
                for (std::size_t j = 0; j < size; ++j) {
                    row += pad(report.requirement_matrix.at(i, j) ? "1" : "0", 4);
                }
                w.line(row);
            }
        }
    }

    w.heading("Requirement groups");
    for (std::size_t g = 0; g < report.groups.size(); ++g) {
        w.line("  group " + std::to_string(g + 1) + ": " +
               item_names(report.groups[g].members, report.requirement_names));
    }
    if (report.groups.empty()) w.line("  (none)");

    w.heading("Correlation edges");
    if (report.correlation.edges.empty()) w.line("  (none)");
    for (const WeightedEdge& e : report.correlation.edges) {
        w.line("  " + format3(e.weight) + "  " + report.requirement_names[e.u.index] + " -- " +
               report.requirement_names[e.v.index]);
    }
    for (const std::string& warning : report.warnings) {
        w.line("  skipped: " + warning);
    }

    w.heading("Maximum spanning forest");
    for (const WeightedEdge& e : report.forest.edges) {
        w.line("  " + format3(e.weight) + "  " + report.requirement_names[e.u.index] + " -- " +
               report.requirement_names[e.v.index]);
    }
    w.line("  total weight " + format3(report.forest.total_weight) + ", " +
           std::to_string(report.forest.component_count) + " component(s)");

    w.heading("Priority order");
    for (std::size_t i = 0; i < report.priority_order.size(); ++i) {
        const PriorityEntry& entry = report.priority_order[i];
        w.line("  " + std::to_string(i + 1) + ". " + report.requirement_names[entry.id.index] +
               "  (score " + format3(entry.score) + ")");
    }
    if (report.priority_order.empty()) w.line("  (none)");

    return w.out;
}

}  // namespace reqmine

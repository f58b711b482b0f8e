#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "json.hpp"
#include "reqmine/pipeline.hpp"

namespace reqmine {

namespace {

using Json = nlohmann::ordered_json;

// Clamp a fraction to 12 significant digits so the serialized form never
// carries more, while still round-tripping bit-exactly through a reparse.
double round_sig12(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return std::strtod(buf, nullptr);
}

std::string format3(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3f", value);
    return buf;
}

std::string quote_dot(const std::string& name) {
    std::string out = "\"";
    for (char c : name) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

Json names_of(const Itemset& items, const std::vector<std::string>& names) {
    Json arr = Json::array();
    for (AttributeId id : items) arr.push_back(names[id.index]);
    return arr;
}

}  // namespace

std::string export_dot(const CorrelationGraph& graph, const SpanningForest& forest,
                       std::span<const std::string> names) {
    std::string out = "graph G {\n";
    for (AttributeId node : graph.nodes) {
        out += "  " + quote_dot(names[node.index]) + ";\n";
    }
    for (const WeightedEdge& edge : graph.edges) {
        const bool in_forest =
            std::find(forest.edges.begin(), forest.edges.end(), edge) != forest.edges.end();
        out += "  " + quote_dot(names[edge.u.index]) + " -- " + quote_dot(names[edge.v.index]) +
               " [label=\"" + format3(edge.weight) + "\"";
        if (in_forest) out += ", style=bold, penwidth=2";
        out += "];\n";
    }
    out += "}\n";
    return out;
}

std::string export_json(const PriorityReport& report) {
    Json doc = Json::object();

    Json frequencies = Json::array();
    for (std::uint32_t j = 0; j < report.frequencies.size(); ++j) {
        const AttributeId id{j};
        frequencies.push_back(Json{{"attribute", report.attribute_names[j]},
                                   {"count", report.frequencies.ones[j]},
                                   {"frequency", round_sig12(report.frequencies.fraction(id))}});
    }
    doc["frequencies"] = std::move(frequencies);

    Json top = Json::array();
    for (AttributeId id : report.top_requirements) {
        top.push_back(report.attribute_names[id.index]);
    }
    doc["top_requirements"] = std::move(top);

    Json itemsets = Json::array();
    for (const FrequentItemset& f : report.frequent_itemsets) {
        itemsets.push_back(Json{{"items", names_of(f.items, report.requirement_names)},
                                {"count", f.count},
                                {"support", round_sig12(f.support)}});
    }
    doc["frequent_itemsets"] = std::move(itemsets);

    Json rules = Json::array();
    for (const AssociationRule& r : report.rules) {
        rules.push_back(Json{{"antecedent", names_of(r.antecedent, report.requirement_names)},
                             {"consequent", names_of(r.consequent, report.requirement_names)},
                             {"support", round_sig12(r.support)},
                             {"confidence", round_sig12(r.confidence)},
                             {"lift", round_sig12(r.lift)}});
    }
    doc["rules"] = std::move(rules);

    Json matrix = Json::object();
    matrix["requirements"] = Json::array();
    for (AttributeId id : report.requirement_matrix.requirements()) {
        matrix["requirements"].push_back(report.requirement_names[id.index]);
    }
    matrix["cells"] = Json::array();
    for (std::size_t i = 0; i < report.requirement_matrix.size(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < report.requirement_matrix.size(); ++j) {
            row.push_back(report.requirement_matrix.at(i, j) ? 1 : 0);
        }
        matrix["cells"].push_back(std::move(row));
    }
    doc["requirement_matrix"] = std::move(matrix);

    Json groups = Json::array();
    for (const RequirementGroup& group : report.groups) {
        groups.push_back(names_of(group.members, report.requirement_names));
    }
    doc["groups"] = std::move(groups);

    Json edges = Json::array();
    for (const WeightedEdge& edge : report.correlation.edges) {
        edges.push_back(Json{{"u", report.requirement_names[edge.u.index]},
                             {"v", report.requirement_names[edge.v.index]},
                             {"weight", round_sig12(edge.weight)}});
    }
    doc["correlation_edges"] = std::move(edges);

    Json forest = Json::object();
    forest["edges"] = Json::array();
    for (const WeightedEdge& edge : report.forest.edges) {
        forest["edges"].push_back(Json{{"u", report.requirement_names[edge.u.index]},
                                       {"v", report.requirement_names[edge.v.index]},
                                       {"weight", round_sig12(edge.weight)}});
    }
    forest["total_weight"] = round_sig12(report.forest.total_weight);
    forest["component_count"] = report.forest.component_count;
    doc["spanning_forest"] = std::move(forest);

    Json priority = Json::array();
    for (const PriorityEntry& entry : report.priority_order) {
        priority.push_back(Json{{"attribute", report.requirement_names[entry.id.index]},
                                {"score", round_sig12(entry.score)}});
    }
    doc["priority_order"] = std::move(priority);

    return doc.dump(2) + "\n";
}

}  // namespace reqmine

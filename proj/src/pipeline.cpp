#include "reqmine/pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "reqmine/errors.hpp"

namespace reqmine {

namespace {

// The report is assembled stage by stage; these checks re-derive the cheap
// cross-stage invariants before the report leaves the pipeline.
void check_report(const PriorityReport& report) {
    if (build_matrix(report.rules, report.requirement_matrix.requirements()) !=
        report.requirement_matrix) {
        throw InternalError("report invariant: requirement matrix does not match its rule list");
    }

    for (const WeightedEdge& edge : report.forest.edges) {
        const bool known = std::find(report.correlation.edges.begin(),
                                     report.correlation.edges.end(),
                                     edge) != report.correlation.edges.end();
        if (!known) {
            throw InternalError("report invariant: forest edge missing from correlation edges");
        }
    }

    std::vector<AttributeId> ordered;
    ordered.reserve(report.priority_order.size());
    for (const PriorityEntry& entry : report.priority_order) ordered.push_back(entry.id);
    std::sort(ordered.begin(), ordered.end());
    std::vector<AttributeId> nodes = report.forest.nodes;
    std::sort(nodes.begin(), nodes.end());
    if (ordered != nodes) {
        throw InternalError("report invariant: priority order is not a permutation of the nodes");
    }

    if (report.forest.edges.size() + report.forest.component_count !=
        report.forest.nodes.size()) {
        throw InternalError("report invariant: forest edge count does not match components");
    }
}

}  // namespace

PriorityReport run_pipeline(std::string_view csv_text, const PipelineConfig& config) {
    config.apriori.validate();
    const double threshold = config.effective_top_threshold();

    PriorityReport report;
    const ResponseMatrix matrix = parse_survey(csv_text);
    report.respondents = matrix.row_count();
    report.attribute_names = matrix.attribute_names();
    report.frequencies = attribute_frequencies(matrix);
    report.top_requirements = select_top_requirements(report.frequencies, threshold);

    // Downstream stages work on the projection onto the selected
    // requirements, in top order; requirement-space index r is the r-th entry
    // of top_requirements.
    const ResponseMatrix projected = matrix.select_columns(report.top_requirements);
    report.requirement_names = projected.attribute_names();
    report.requirement_frequencies = attribute_frequencies(projected);

    report.frequent_itemsets = find_frequent_itemsets(projected, config.apriori);
    report.rules = derive_rules(report.frequent_itemsets, projected, config.apriori);

    std::vector<AttributeId> requirements(projected.attribute_count());
    for (std::uint32_t r = 0; r < requirements.size(); ++r) requirements[r] = AttributeId{r};
    report.requirement_matrix = build_matrix(report.rules, requirements);
    report.groups = extract_groups(report.requirement_matrix);

    report.correlation =
        config.complete_graph
            ? complete_correlation_graph(projected, requirements, &report.warnings)
            : build_correlation_graph(projected, report.requirement_matrix, &report.warnings);

    report.forest = maximum_spanning_forest(report.correlation);
    report.priority_order = priority_ordering(report.forest, report.requirement_frequencies);

    check_report(report);
    return report;
}

PriorityReport run_pipeline(const PipelineConfig& config) {
    std::ifstream in(config.input_path, std::ios::binary);
    if (!in) throw Error("cannot open input file: " + config.input_path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return run_pipeline(buffer.str(), config);
}

std::vector<PriorityEntry> priority_ordering(const SpanningForest& forest,
                                             const FrequencyVector& freqs) {
    std::map<AttributeId, double> score;
    for (AttributeId node : forest.nodes) score[node] = 0.0;
    for (const WeightedEdge& edge : forest.edges) {
        score[edge.u] += edge.weight;
        score[edge.v] += edge.weight;
    }

    std::vector<PriorityEntry> order;
    order.reserve(forest.nodes.size());
    for (AttributeId node : forest.nodes) order.push_back(PriorityEntry{node, score[node]});
    std::sort(order.begin(), order.end(), [&](const PriorityEntry& a, const PriorityEntry& b) {
        if (a.score != b.score) return a.score > b.score;
        if (freqs.ones[a.id.index] != freqs.ones[b.id.index]) {
            return freqs.ones[a.id.index] > freqs.ones[b.id.index];
        }
        return a.id < b.id;
    });
    return order;
}

}  // namespace reqmine

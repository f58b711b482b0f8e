#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "reqmine/apriori.hpp"
#include "reqmine/correlation.hpp"
#include "reqmine/mst.hpp"
#include "reqmine/reqmatrix.hpp"
#include "reqmine/survey.hpp"

namespace reqmine {

struct PipelineConfig {
    std::string input_path;
    AprioriParams apriori;
    // Cut for the top-requirement selection; negative means "use
    // apriori.min_support".
    double top_threshold = -1.0;
    bool complete_graph = false;   // correlate every requirement pair
    bool all_attributes = false;   // widen the requirement set to all attributes
    std::string format = "text";   // "text" or "json"
    std::string out_path;          // empty: stdout
    std::string dot_path;          // empty: no DOT file

    double effective_top_threshold() const {
        if (all_attributes) return 0.0;
        return top_threshold < 0.0 ? apriori.min_support : top_threshold;
    }
};

struct PriorityEntry {
    AttributeId id;  // requirement-space index
    double score = 0.0;

    friend bool operator==(const PriorityEntry&, const PriorityEntry&) = default;
};

// Every intermediate artifact of one analysis run. Attribute-space sections
// (frequencies, top_requirements) index the input columns; everything
// downstream lives in requirement space, where index r means the r-th top
// requirement and requirement_names[r] is its survey name.
struct PriorityReport {
    std::uint64_t respondents = 0;

    std::vector<std::string> attribute_names;
    FrequencyVector frequencies;
    std::vector<AttributeId> top_requirements;

    std::vector<std::string> requirement_names;
    FrequencyVector requirement_frequencies;
    std::vector<FrequentItemset> frequent_itemsets;
    std::vector<AssociationRule> rules;
    RequirementMatrix requirement_matrix;
    std::vector<RequirementGroup> groups;
    CorrelationGraph correlation;
    SpanningForest forest;
    std::vector<PriorityEntry> priority_order;

    // Skipped degenerate correlation edges, one message each.
    std::vector<std::string> warnings;
};

// Full flow on already-loaded CSV text: parse -> frequencies -> top
// requirements -> Apriori -> rules -> requirement matrix -> groups ->
// correlation graph -> maximum spanning forest -> priority ordering.
// Degenerate correlation pairs become report warnings; all other module
// errors propagate.
PriorityReport run_pipeline(std::string_view csv_text, const PipelineConfig& config);

// Reads config.input_path and runs the pipeline on its contents.
PriorityReport run_pipeline(const PipelineConfig& config);

// Sum of incident forest edge weights per node, sorted by descending score,
// ties by descending frequency, then ascending index. `freqs` must cover the
// forest's node indices.
std::vector<PriorityEntry> priority_ordering(const SpanningForest& forest,
                                             const FrequencyVector& freqs);

// Undirected Graphviz rendering of the correlation graph; spanning-forest
// edges are bold, every edge carries its weight to three decimals. `names`
// maps node indices to display names.
std::string export_dot(const CorrelationGraph& graph, const SpanningForest& forest,
                       std::span<const std::string> names);

// Single JSON document with the keys frequencies, top_requirements,
// frequent_itemsets, rules, requirement_matrix, groups, correlation_edges,
// spanning_forest, priority_order, in that order. Fractions carry at most 12
// significant digits; re-serializing the parsed document is byte-identical.
std::string export_json(const PriorityReport& report);

// Human-readable report, fractions rounded to three decimals. ANSI styling
// only when `color` is set.
std::string export_text(const PriorityReport& report, bool color = false);

}  // namespace reqmine

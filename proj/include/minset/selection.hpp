#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "minset/discrimination.hpp"
#include "minset/model.hpp"

namespace minset {

enum class StepAction { indispensable, select, eliminate };

std::string to_string(StepAction action);

/// One decision of the selection loop: which variable, the odp that justified
/// the move, and the selected set's discrimination power afterwards.
struct TraceStep {
    StepAction action = StepAction::select;
    std::size_t variable = 0;
    std::string variable_name;
    double odp = 0.0;
    double dp_after = 0.0;
};

struct SelectionResult {
    std::vector<std::size_t> selected;
    std::vector<std::string> selected_names;
    double dp_selected = 0.0;
    double dp_total = 0.0;
    double reduction_pct = 0.0;
    bool degenerate = false;
    std::string note;
    std::vector<TraceStep> trace;
    double wall_ms = 0.0;
};

/// The greedy core, shared by every algorithm variant: seed with the
/// indispensable variables, then repeatedly take the variable adding the most
/// discrimination (ties: larger standalone power, then lower index) until the
/// selected power reaches theta times the total, dropping any selected
/// variable the rest has made redundant after each step. Mutates the matrix's
/// selection state.
SelectionResult select_on_matrix(DiscriminationMatrix& m, double theta);

/// Partial-discrimination selection through the cached matrix.
SelectionResult minset_plus(const KnowledgeBase& kb, const Measure& measure,
                            double theta);

/// Total-discrimination selection: minset_plus with the boolean measure at
/// theta = 1.
SelectionResult minset(const KnowledgeBase& kb);

/// Same greedy semantics and tie-breaks as minset_plus with the jaccard
/// measure, but every score is recomputed from the value sets on demand: no
/// grid, no cached column maxima. Exists to be benchmarked against.
SelectionResult minset_partial_naive(const KnowledgeBase& kb, double theta);

} // namespace minset

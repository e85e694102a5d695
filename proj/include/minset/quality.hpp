#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "minset/discrimination.hpp"
#include "minset/model.hpp"
#include "minset/selection.hpp"

namespace minset {

/// How well a (possibly reduced) knowledge base separates real individuals,
/// next to the selection's own power figures. extent_intersection_avg is the
/// complement of extent_discrimination_pct; the _original fields hold the
/// same extent metric before reduction, for before/after comparison.
struct QualityReport {
    double overlap_pct = 0.0;
    double extent_discrimination_pct = 0.0;
    double extent_intersection_avg = 0.0;
    double extent_discrimination_original_pct = 0.0;
    double extent_intersection_avg_original = 0.0;
    double dp_selected = 0.0;
    double dp_total = 0.0;
    double reduction_pct = 0.0;
    bool degenerate = false;
    std::vector<std::string> pair_labels;
    std::vector<double> pair_extent_discrimination;
};

/// Indices of the rows the assertion is true of. The assertion's variables
/// are matched to table columns by name, so a reduced assertion evaluates
/// against just its remaining variables.
std::vector<std::size_t> real_extent(const Assertion& a,
                                     const std::vector<VariableSpec>& variables,
                                     const IndividualTable& t);

/// Average over assertion pairs of 1 - |ext_i ∩ ext_j| / |ext_i ∪ ext_j|.
/// A pair with two empty extents counts as fully discriminated.
double extent_discrimination(const KnowledgeBase& kb, const IndividualTable& t);

/// Fraction of assertion pairs no single variable discriminates totally.
double overlap_percentage(const KnowledgeBase& kb);

/// Same, read off a precomputed matrix: a pair counts as discriminated when
/// some cell reaches 1.
double overlap_from_matrix(const DiscriminationMatrix& m);

/// Assembles the full report. reduced must be original restricted to
/// result.selected; overlap is measured on the original knowledge base,
/// extent metrics on both.
QualityReport quality_report(const KnowledgeBase& original, const SelectionResult& result,
                             const KnowledgeBase& reduced, const IndividualTable& t);

} // namespace minset

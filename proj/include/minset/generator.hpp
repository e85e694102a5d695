#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "minset/model.hpp"

namespace minset {

/// What a variable should become in a generated symbolic object. boolean is a
/// two-label categorical set; interval takes the cluster's [min, max], with
/// optional refinement against foreign values.
enum class OutputKind { boolean_set, categorical_set, numeric_point_set, interval };

std::string to_string(OutputKind kind);
OutputKind parse_output_kind(const std::string& name);

struct GenerationSpec {
    std::vector<OutputKind> kinds; // one per variable (object generation)
    bool refine = false;
    std::uint64_t seed = 0;
    double overlap_target = 0.0; // individual generation only
    std::size_t per_cluster = 10;
};

/// Fills missing cells column-wise: numeric columns by mean, categorical by
/// mode (ties to the lexicographically smallest label).
IndividualTable impute_missing(const IndividualTable& t);

/// One assertion per cluster: label unions for categorical variables,
/// [min, max] (optionally refined) for interval output, distinct values for
/// point-set output. Every cluster member satisfies its own assertion.
KnowledgeBase generate_objects(const IndividualTable& t, const GenerationSpec& spec);

/// Splits [min(own), max(own)] at foreign values strictly inside it, keeping
/// the closed pieces anchored at an own value. own must be non-empty and
/// inside the domain; both inputs sorted ascending.
ValueSet refine_interval(const std::vector<double>& own,
                         const std::vector<double>& foreign, const Interval& domain);

/// Samples spec.per_cluster individuals per assertion. Each variable draws
/// from the own assertion's value set, or with probability overlap_target
/// from a uniformly chosen other assertion's set. Interval draws are
/// length-weighted across pieces. Reproducible from spec.seed.
IndividualTable generate_individuals(const KnowledgeBase& kb, const GenerationSpec& spec);

/// Uniform draw from a non-empty value set (point unions: uniform over the
/// points).
Scalar draw_from(const ValueSet& v, std::mt19937_64& rng);

} // namespace minset

#pragma once

#include <string>

#include "minset/value_set.hpp"

namespace minset {

enum class MeasureKind { boolean, jaccard, de_carvalho, ichino_yaguchi };

std::string to_string(MeasureKind kind);

/// A per-variable dissimilarity: identical sets score 0, disjoint sets score
/// the measure's maximum. gamma only matters for ichino_yaguchi.
struct Measure {
    MeasureKind kind = MeasureKind::jaccard;
    double gamma = 0.5;
};

/// All-or-nothing discrimination: 1 iff the two sets share no element at all.
/// Intervals touching in a single point count as overlapping.
double comp(const ValueSet& u, const ValueSet& v);

/// Jaccard-style partial discrimination: 1 - |u ∩ v| / |u ∪ v|. Sizes are
/// measures, except that a measure-zero union of points falls back to point
/// counting so singletons still compare sanely. Two empty sets score 0.
double g_jaccard(const ValueSet& u, const ValueSet& v);

/// Potential-description dissimilarity: the disagreement area (parts of u or v
/// missing from the other) over the total area touched by either, computed
/// with complements taken inside the variable's domain.
double de_carvalho(const ValueSet& u, const ValueSet& v, const VariableSpec& spec);

/// Ichino and Yaguchi's span-minus-meet form. The join is the set union for
/// categories and the convex span for intervals, so the result is an absolute
/// distance rather than a fraction.
double ichino_yaguchi(const ValueSet& u, const ValueSet& v, double gamma);

/// Dispatch on measure.kind. All four are reflexive and symmetric.
double apply(const Measure& measure, const ValueSet& u, const ValueSet& v,
             const VariableSpec& spec);

/// Accepts boolean, jaccard, de-carvalho and ichino (plus underscore
/// variants); throws ValidationError otherwise.
MeasureKind parse_measure(const std::string& name);

} // namespace minset

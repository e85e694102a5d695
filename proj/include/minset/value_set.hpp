#pragma once

#include <string>
#include <variant>
#include <vector>

namespace minset {

enum class VarKind { categorical, numeric };

std::string to_string(VarKind kind);

/// Closed interval [lo, hi], lo <= hi. A degenerate interval [x, x] stands for
/// a single numeric value.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    double length() const { return hi - lo; }
    bool contains(double x) const { return lo <= x && x <= hi; }
    bool operator==(const Interval& other) const = default;
};

/// Describes one variable: its name, whether it is categorical or numeric, and
/// the domain values may come from (a finite label set, or a closed interval).
struct VariableSpec {
    std::string name;
    VarKind kind = VarKind::categorical;
    std::vector<std::string> labels; // categorical domain, sorted unique
    Interval range;                  // numeric domain

    static VariableSpec categorical(std::string name, std::vector<std::string> labels);
    static VariableSpec numeric(std::string name, double lo, double hi);
};

/// A variable's value inside an assertion: either a finite category set or a
/// canonical union of closed intervals. Canonical means categories are sorted
/// and unique, and intervals are sorted with a strict gap between consecutive
/// members (overlapping or touching pieces are merged on construction).
/// Immutable after construction.
class ValueSet {
public:
    ValueSet() = default;

    static ValueSet of_categories(std::vector<std::string> labels);
    static ValueSet of_intervals(std::vector<Interval> pieces);
    static ValueSet of_interval(double lo, double hi);
    static ValueSet of_points(const std::vector<double>& points);
    static ValueSet empty_set(VarKind kind);

    VarKind kind() const { return kind_; }
    bool empty() const;
    const std::vector<std::string>& categories() const { return categories_; }
    const std::vector<Interval>& pieces() const { return pieces_; }

    /// Number of member elements for measure-zero sets: category count, or the
    /// count of (degenerate) interval pieces.
    std::size_t point_count() const;

    bool operator==(const ValueSet& other) const = default;

    std::string to_string() const;

private:
    VarKind kind_ = VarKind::categorical;
    std::vector<std::string> categories_;
    std::vector<Interval> pieces_;
};

/// Size of a value set: element count for categories, summed length for
/// interval unions. Empty sets measure 0, as do unions of degenerate points.
double mu(const ValueSet& v);

ValueSet intersect(const ValueSet& u, const ValueSet& v);
ValueSet unite(const ValueSet& u, const ValueSet& v);

/// Complement within the variable's domain. Intervals follow the closed
/// convention: boundary points are shared between a set and its complement,
/// which is harmless because every measure depends only on lengths.
ValueSet complement(const ValueSet& v, const VariableSpec& spec);

/// Smallest single interval covering every piece of both operands (empty if
/// both are empty). Intervals only.
ValueSet convex_span(const ValueSet& u, const ValueSet& v);

bool contains(const ValueSet& v, const std::string& label);
bool contains(const ValueSet& v, double x);

} // namespace minset

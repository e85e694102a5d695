#include "minset/value_set.hpp"

#include <algorithm>
#include <sstream>

#include "minset/errors.hpp"

namespace minset {

std::string to_string(VarKind kind) {
    return kind == VarKind::categorical ? "categorical" : "numeric";
}

VariableSpec VariableSpec::categorical(std::string name, std::vector<std::string> labels) {
    if (labels.empty()) {
        throw ValidationError("variable '" + name + "': categorical domain must not be empty");
    }
    std::sort(labels.begin(), labels.end());
    if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) {
        throw ValidationError("variable '" + name + "': duplicate label in categorical domain");
    }
    VariableSpec spec;
    spec.name = std::move(name);
    spec.kind = VarKind::categorical;
    spec.labels = std::move(labels);
    return spec;
}

VariableSpec VariableSpec::numeric(std::string name, double lo, double hi) {
    if (!(lo <= hi)) {
        throw ValidationError("variable '" + name + "': numeric domain needs lo <= hi");
    }
    VariableSpec spec;
    spec.name = std::move(name);
    spec.kind = VarKind::numeric;
    spec.range = {lo, hi};
    return spec;
}

namespace {

// Sort by left endpoint and merge every overlapping or touching pair, so the
// stored list always has b_i < a_{i+1}.
std::vector<Interval> canonicalize(std::vector<Interval> pieces) {
    for (const Interval& p : pieces) {
        if (!(p.lo <= p.hi)) {
            throw ValidationError("interval with lo > hi");
        }
    }
    std::sort(pieces.begin(), pieces.end(), [](const Interval& a, const Interval& b) {
        return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
    });
    std::vector<Interval> merged;
    for (const Interval& p : pieces) {
        if (!merged.empty() && p.lo <= merged.back().hi) {
            merged.back().hi = std::max(merged.back().hi, p.hi);
        } else {
            merged.push_back(p);
        }
    }
    return merged;
}

void require_same_kind(const ValueSet& u, const ValueSet& v, const char* op) {
    if (u.kind() != v.kind()) {
        throw ValidationError(std::string(op) + ": value sets have different kinds (" +
                              to_string(u.kind()) + " vs " + to_string(v.kind()) + ")");
    }
}

} // namespace

ValueSet ValueSet::of_categories(std::vector<std::string> labels) {
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    ValueSet v;
    v.kind_ = VarKind::categorical;
    v.categories_ = std::move(labels);
    return v;
}

ValueSet ValueSet::of_intervals(std::vector<Interval> pieces) {
    ValueSet v;
    v.kind_ = VarKind::numeric;
    v.pieces_ = canonicalize(std::move(pieces));
    return v;
}

ValueSet ValueSet::of_interval(double lo, double hi) {
    return of_intervals({{lo, hi}});
}

ValueSet ValueSet::of_points(const std::vector<double>& points) {
    std::vector<Interval> pieces;
    pieces.reserve(points.size());
    for (double x : points) {
        pieces.push_back({x, x});
    }
    return of_intervals(std::move(pieces));
}

ValueSet ValueSet::empty_set(VarKind kind) {
    ValueSet v;
    v.kind_ = kind;
    return v;
}

bool ValueSet::empty() const {
    return kind_ == VarKind::categorical ? categories_.empty() : pieces_.empty();
}

std::size_t ValueSet::point_count() const {
    return kind_ == VarKind::categorical ? categories_.size() : pieces_.size();
}

std::string ValueSet::to_string() const {
    std::ostringstream out;
    if (kind_ == VarKind::categorical) {
        out << "{";
        for (std::size_t i = 0; i < categories_.size(); ++i) {
            out << (i ? ", " : "") << categories_[i];
        }
        out << "}";
    } else {
        if (pieces_.empty()) {
            out << "{}";
        }
        for (std::size_t i = 0; i < pieces_.size(); ++i) {
            out << (i ? " u " : "") << "[" << pieces_[i].lo << ", " << pieces_[i].hi << "]";
        }
    }
    return out.str();
}

double mu(const ValueSet& v) {
    if (v.kind() == VarKind::categorical) {
        return static_cast<double>(v.categories().size());
    }
    double total = 0.0;
    for (const Interval& p : v.pieces()) {
        total += p.length();
    }
    return total;
}

ValueSet intersect(const ValueSet& u, const ValueSet& v) {
    require_same_kind(u, v, "intersect");
    if (u.kind() == VarKind::categorical) {
        std::vector<std::string> out;
        std::set_intersection(u.categories().begin(), u.categories().end(),
                              v.categories().begin(), v.categories().end(),
                              std::back_inserter(out));
        return ValueSet::of_categories(std::move(out));
    }
    // Both lists are sorted; shared endpoints survive as degenerate pieces so
    // that touching intervals still report a nonempty intersection.
    std::vector<Interval> out;
    std::size_t i = 0;
    std::size_t j = 0;
    const auto& a = u.pieces();
    const auto& b = v.pieces();
    while (i < a.size() && j < b.size()) {
        double lo = std::max(a[i].lo, b[j].lo);
        double hi = std::min(a[i].hi, b[j].hi);
        if (lo <= hi) {
            out.push_back({lo, hi});
        }
        if (a[i].hi < b[j].hi) {
            ++i;
        } else {
            ++j;
        }
    }
    return ValueSet::of_intervals(std::move(out));
}

ValueSet unite(const ValueSet& u, const ValueSet& v) {
    require_same_kind(u, v, "unite");
    if (u.kind() == VarKind::categorical) {
        std::vector<std::string> out;
        std::set_union(u.categories().begin(), u.categories().end(),
                       v.categories().begin(), v.categories().end(),
                       std::back_inserter(out));
        return ValueSet::of_categories(std::move(out));
    }
    std::vector<Interval> out = u.pieces();
    out.insert(out.end(), v.pieces().begin(), v.pieces().end());
    return ValueSet::of_intervals(std::move(out));
}

ValueSet complement(const ValueSet& v, const VariableSpec& spec) {
    if (v.kind() != spec.kind) {
        throw ValidationError("complement: value set kind does not match variable '" +
                              spec.name + "'");
    }
    if (spec.kind == VarKind::categorical) {
        std::vector<std::string> out;
        std::set_difference(spec.labels.begin(), spec.labels.end(),
                            v.categories().begin(), v.categories().end(),
                            std::back_inserter(out));
        return ValueSet::of_categories(std::move(out));
    }
    if (v.pieces().empty()) {
        return ValueSet::of_interval(spec.range.lo, spec.range.hi);
    }
    // Closed pieces between consecutive members; degenerate leftovers at the
    // domain edges are dropped (they are boundary points of v itself).
    std::vector<Interval> out;
    double cursor = spec.range.lo;
    for (const Interval& p : v.pieces()) {
        if (cursor < p.lo) {
            out.push_back({cursor, p.lo});
        }
        cursor = std::max(cursor, p.hi);
    }
    if (cursor < spec.range.hi) {
        out.push_back({cursor, spec.range.hi});
    }
    return ValueSet::of_intervals(std::move(out));
}

ValueSet convex_span(const ValueSet& u, const ValueSet& v) {
    require_same_kind(u, v, "convex_span");
    if (u.kind() != VarKind::numeric) {
        throw ValidationError("convex_span: defined for interval value sets only");
    }
    if (u.empty() && v.empty()) {
        return ValueSet::empty_set(VarKind::numeric);
    }
    if (u.empty()) {
        return ValueSet::of_interval(v.pieces().front().lo, v.pieces().back().hi);
    }
    if (v.empty()) {
        return ValueSet::of_interval(u.pieces().front().lo, u.pieces().back().hi);
    }
    return ValueSet::of_interval(std::min(u.pieces().front().lo, v.pieces().front().lo),
                                 std::max(u.pieces().back().hi, v.pieces().back().hi));
}

bool contains(const ValueSet& v, const std::string& label) {
    if (v.kind() != VarKind::categorical) {
        throw ValidationError("contains: label membership asked of an interval value set");
    }
    return std::binary_search(v.categories().begin(), v.categories().end(), label);
}

bool contains(const ValueSet& v, double x) {
    if (v.kind() != VarKind::numeric) {
        throw ValidationError("contains: numeric membership asked of a categorical value set");
    }
    for (const Interval& p : v.pieces()) {
        if (p.contains(x)) {
            return true;
        }
        if (p.lo > x) {
            break;
        }
    }
    return false;
}

} // namespace minset

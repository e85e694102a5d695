#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "minset/measures.hpp"
#include "minset/model.hpp"
#include "minset/value_set.hpp"

namespace testutil {

struct Rng {
    std::mt19937_64 eng;

    explicit Rng(std::uint64_t seed) : eng(seed) {}

    std::size_t index(std::size_t n) {
        std::uniform_int_distribution<std::size_t> d(0, n - 1);
        return d(eng);
    }
    std::size_t between(std::size_t lo, std::size_t hi) {
        std::uniform_int_distribution<std::size_t> d(lo, hi);
        return d(eng);
    }
    double real(double lo, double hi) {
        std::uniform_real_distribution<double> d(lo, hi);
        return d(eng);
    }
    bool coin(double p) { return real(0.0, 1.0) < p; }
};

inline const std::vector<std::string> kLabelPool = {
    "amber", "blue", "coral", "green", "ivory", "red", "teal", "violet"};

inline minset::ValueSet random_category_set(Rng& rng, const std::vector<std::string>& domain,
                                            bool allow_empty = true) {
    if (allow_empty && rng.coin(0.07)) return minset::ValueSet::empty_set(minset::VarKind::categorical);
    std::vector<std::string> picked;
    for (const auto& l : domain)
        if (rng.coin(0.5)) picked.push_back(l);
    if (picked.empty()) picked.push_back(domain[rng.index(domain.size())]);
    return minset::ValueSet::of_categories(picked);
}

inline minset::ValueSet random_interval_set(Rng& rng, double lo, double hi,
                                            bool allow_empty = true) {
    if (allow_empty && rng.coin(0.07)) return minset::ValueSet::empty_set(minset::VarKind::numeric);
    std::size_t n = rng.between(1, 3);
    std::vector<minset::Interval> pieces;
    for (std::size_t i = 0; i < n; ++i) {
        double a = rng.real(lo, hi);
        double b = rng.coin(0.15) ? a : rng.real(lo, hi);
        if (b < a) std::swap(a, b);
        pieces.push_back({a, b});
    }
    return minset::ValueSet::of_intervals(pieces);
}

inline minset::ValueSet random_value_set(Rng& rng, const minset::VariableSpec& spec,
                                         bool allow_empty = true) {
    if (spec.kind == minset::VarKind::categorical)
        return random_category_set(rng, spec.labels, allow_empty);
    return random_interval_set(rng, spec.range.lo, spec.range.hi, allow_empty);
}

/// Random mixed-kind knowledge base, structurally valid by construction.
inline minset::KnowledgeBase random_kb(Rng& rng, std::size_t max_objects = 8,
                                       std::size_t max_variables = 10,
                                       bool allow_empty = true) {
    std::size_t n_vars = rng.between(1, max_variables);
    std::size_t n_objs = rng.between(2, max_objects);
    minset::KnowledgeBase kb;
    for (std::size_t l = 0; l < n_vars; ++l) {
        std::string name = "v_" + std::to_string(l + 1);
        if (rng.coin(0.5)) {
            std::size_t count = rng.between(2, 5);
            std::vector<std::string> labels(kLabelPool.begin(), kLabelPool.begin() + count);
            kb.variables.push_back(minset::VariableSpec::categorical(name, labels));
        } else {
            double lo = rng.real(0.0, 20.0);
            double hi = lo + rng.real(1.0, 80.0);
            kb.variables.push_back(minset::VariableSpec::numeric(name, lo, hi));
        }
    }
    for (std::size_t i = 0; i < n_objs; ++i) {
        minset::Assertion a;
        a.name = "a_" + std::to_string(i + 1);
        for (const auto& spec : kb.variables) a.values.push_back(random_value_set(rng, spec, allow_empty));
        kb.assertions.push_back(std::move(a));
    }
    return kb;
}

// ---- independent oracles -------------------------------------------------
//
// These recompute discrimination sums from first principles: plain loops over
// assertion pairs with the measure evaluated fresh each time, no cached column
// maxima and no additivity shortcuts.

inline double oracle_dp_variable(const minset::KnowledgeBase& kb, const minset::Measure& m,
                                 std::size_t l) {
    double sum = 0.0;
    for (auto [i, j] : kb.pairs())
        sum += minset::apply(m, kb.assertions[i].values[l], kb.assertions[j].values[l],
                             kb.variables[l]);
    return sum;
}

inline double oracle_dp_set(const minset::KnowledgeBase& kb, const minset::Measure& m,
                            const std::vector<std::size_t>& yd) {
    double sum = 0.0;
    for (auto [i, j] : kb.pairs()) {
        double best = 0.0;
        for (std::size_t l : yd)
            best = std::max(best, minset::apply(m, kb.assertions[i].values[l],
                                                kb.assertions[j].values[l], kb.variables[l]));
        sum += best;
    }
    return sum;
}

/// Difference form: dp(Yp + l) - dp(Yp), both sides evaluated in full.
inline double oracle_odp(const minset::KnowledgeBase& kb, const minset::Measure& m,
                         const std::vector<std::size_t>& yp, std::size_t l) {
    std::vector<std::size_t> with = yp;
    with.push_back(l);
    return oracle_dp_set(kb, m, with) - oracle_dp_set(kb, m, yp);
}

/// Smallest subset size whose dp_set reaches the full-set value, by exhaustive
/// enumeration. Only sensible for a handful of variables.
inline std::size_t oracle_min_cover_size(const minset::KnowledgeBase& kb,
                                         const minset::Measure& m, double tol = 1e-9) {
    std::size_t n = kb.n_variables();
    std::vector<std::size_t> all(n);
    for (std::size_t l = 0; l < n; ++l) all[l] = l;
    double total = oracle_dp_set(kb, m, all);
    std::size_t best = n;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::vector<std::size_t> subset;
        for (std::size_t l = 0; l < n; ++l)
            if (mask & (std::size_t{1} << l)) subset.push_back(l);
        if (subset.size() >= best) continue;
        if (oracle_dp_set(kb, m, subset) >= total - tol) best = subset.size();
    }
    return best;
}

// Hand interval arithmetic for single-piece operands, kept deliberately naive.

inline double oracle_overlap_len(double a, double b, double c, double d) {
    return std::max(0.0, std::min(b, d) - std::max(a, c));
}

inline double oracle_interval_jaccard(double a, double b, double c, double d) {
    double inter = oracle_overlap_len(a, b, c, d);
    double uni = (b - a) + (d - c) - inter;
    if (uni == 0.0) return (a == c) ? 0.0 : 1.0;
    return 1.0 - inter / uni;
}

inline double oracle_category_jaccard(std::vector<std::string> u, std::vector<std::string> v) {
    std::set<std::string> su(u.begin(), u.end());
    std::set<std::string> sv(v.begin(), v.end());
    std::vector<std::string> inter, uni;
    std::set_intersection(su.begin(), su.end(), sv.begin(), sv.end(), std::back_inserter(inter));
    std::set_union(su.begin(), su.end(), sv.begin(), sv.end(), std::back_inserter(uni));
    if (uni.empty()) return 0.0;
    return 1.0 - static_cast<double>(inter.size()) / static_cast<double>(uni.size());
}

// ---- statistics ----------------------------------------------------------

/// Ranks with ties replaced by the average rank of the tied block.
inline std::vector<double> average_ranks(const std::vector<double>& xs) {
    std::size_t n = xs.size();
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return xs[a] < xs[b]; });
    std::vector<double> ranks(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && xs[order[j + 1]] == xs[order[i]]) ++j;
        double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
        i = j + 1;
    }
    return ranks;
}

inline double spearman(const std::vector<double>& xs, const std::vector<double>& ys) {
    std::vector<double> rx = average_ranks(xs);
    std::vector<double> ry = average_ranks(ys);
    double n = static_cast<double>(xs.size());
    double mx = 0.0, my = 0.0;
    for (double r : rx) mx += r;
    for (double r : ry) my += r;
    mx /= n;
    my /= n;
    double num = 0.0, dx = 0.0, dy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        num += (rx[i] - mx) * (ry[i] - my);
        dx += (rx[i] - mx) * (rx[i] - mx);
        dy += (ry[i] - my) * (ry[i] - my);
    }
    if (dx == 0.0 || dy == 0.0) return 0.0;
    return num / std::sqrt(dx * dy);
}

} // namespace testutil

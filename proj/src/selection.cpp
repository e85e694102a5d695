#include "minset/selection.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <stdexcept>

#include "minset/errors.hpp"

namespace minset {

std::string to_string(StepAction action) {
    switch (action) {
    case StepAction::indispensable: return "indispensable";
    case StepAction::select: return "select";
    case StepAction::eliminate: return "eliminate";
    }
    return "?";
}

namespace {

/// Scores straight off the cached grid: odp is one subtraction per pair
/// against the running column maxima.
struct MatrixScorer {
    DiscriminationMatrix& m;

    std::size_t n_variables() const { return m.n_variables(); }
    const std::vector<std::size_t>& selected() const { return m.selected(); }
    bool is_selected(std::size_t l) const { return m.is_selected(l); }
    double dp_variable(std::size_t l) const { return m.dp_variable(l); }
    double dp_total() const { return m.dp_total(); }
    double dp_selected() const { return m.dp_selected(); }
    double odp(std::size_t l) const { return m.odp(l); }
    void select(std::size_t l) { m.select(l); }
    void deselect(std::size_t l) { m.deselect(l); }
    std::vector<std::size_t> indispensables() const { return m.indispensables(); }

    double odp_within(std::size_t l) const {
        std::vector<std::size_t> rest;
        for (std::size_t q : m.selected()) {
            if (q != l) {
                rest.push_back(q);
            }
        }
        return m.odp_against(l, rest);
    }
};

/// Recomputes every score from the value sets on the spot. Only the pair
/// index list is kept; no score is ever stored.
struct NaiveScorer {
    const KnowledgeBase& kb;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<std::size_t> sel;

    explicit NaiveScorer(const KnowledgeBase& kb_) : kb(kb_), pairs(kb_.pairs()) {}

    double g(std::size_t l, std::size_t p) const {
        const auto& [i, j] = pairs[p];
        return g_jaccard(kb.assertions[i].values[l], kb.assertions[j].values[l]);
    }

    std::size_t n_variables() const { return kb.n_variables(); }
    const std::vector<std::size_t>& selected() const { return sel; }
    bool is_selected(std::size_t l) const {
        return std::find(sel.begin(), sel.end(), l) != sel.end();
    }

    double dp_variable(std::size_t l) const {
        double sum = 0.0;
        for (std::size_t p = 0; p < pairs.size(); ++p) {
            sum += g(l, p);
        }
        return sum;
    }

    double dp_of(const std::vector<std::size_t>& yd) const {
        double sum = 0.0;
        for (std::size_t p = 0; p < pairs.size(); ++p) {
            double best = 0.0;
            for (std::size_t l : yd) {
                best = std::max(best, g(l, p));
            }
            sum += best;
        }
        return sum;
    }

    double dp_total() const {
        std::vector<std::size_t> all(n_variables());
        for (std::size_t l = 0; l < all.size(); ++l) {
            all[l] = l;
        }
        return dp_of(all);
    }

    double dp_selected() const { return dp_of(sel); }

    double odp_vs(std::size_t l, const std::vector<std::size_t>& yp) const {
        double sum = 0.0;
        for (std::size_t p = 0; p < pairs.size(); ++p) {
            double best = 0.0;
            for (std::size_t q : yp) {
                best = std::max(best, g(q, p));
            }
            sum += std::max(g(l, p) - best, 0.0);
        }
        return sum;
    }

    double odp(std::size_t l) const { return odp_vs(l, sel); }

    double odp_within(std::size_t l) const {
        std::vector<std::size_t> rest;
        for (std::size_t q : sel) {
            if (q != l) {
                rest.push_back(q);
            }
        }
        return odp_vs(l, rest);
    }

    void select(std::size_t l) { sel.push_back(l); }
    void deselect(std::size_t l) { sel.erase(std::find(sel.begin(), sel.end(), l)); }

    std::vector<std::size_t> indispensables() const {
        std::vector<std::size_t> out;
        for (std::size_t l = 0; l < n_variables(); ++l) {
            bool found = false;
            for (std::size_t p = 0; p < pairs.size() && !found; ++p) {
                double own = g(l, p);
                if (own <= kTol) {
                    continue;
                }
                double best_other = 0.0;
                for (std::size_t q = 0; q < n_variables(); ++q) {
                    if (q != l) {
                        best_other = std::max(best_other, g(q, p));
                    }
                }
                if (own - best_other > kTol) {
                    found = true;
                }
            }
            if (found) {
                out.push_back(l);
            }
        }
        return out;
    }
};

template <class Scorer>
SelectionResult run_greedy(Scorer& scorer, const std::vector<std::string>& names,
                           double theta) {
    if (theta <= 0.0 || theta > 1.0) {
        throw ValidationError("theta must lie in (0, 1]");
    }
    SelectionResult r;
    r.dp_total = scorer.dp_total();
    if (r.dp_total <= kTol) {
        r.degenerate = true;
        r.note = "no variable discriminates any assertion pair";
        return r;
    }

    const auto indispensable = scorer.indispensables();
    for (std::size_t l : indispensable) {
        double gain = scorer.odp(l);
        scorer.select(l);
        r.trace.push_back({StepAction::indispensable, l, names[l], gain,
                           scorer.dp_selected()});
    }

    const double target = theta * r.dp_total - kTol;
    while (scorer.dp_selected() < target) {
        bool have = false;
        std::size_t best = 0;
        double best_odp = 0.0;
        double best_dp = 0.0;
        for (std::size_t l = 0; l < scorer.n_variables(); ++l) {
            if (scorer.is_selected(l)) {
                continue;
            }
            double gain = scorer.odp(l);
            if (!have || gain > best_odp + kTol ||
                (gain > best_odp - kTol && scorer.dp_variable(l) > best_dp + kTol)) {
                have = true;
                best = l;
                best_odp = gain;
                best_dp = scorer.dp_variable(l);
            }
        }
        if (!have || best_odp <= kTol) {
            break;
        }
        scorer.select(best);
        r.trace.push_back({StepAction::select, best, names[best], best_odp,
                           scorer.dp_selected()});

        for (std::size_t idx = 0; idx < scorer.selected().size();) {
            std::size_t member = scorer.selected()[idx];
            double contribution = scorer.odp_within(member);
            if (contribution <= kTol) {
                assert(std::find(indispensable.begin(), indispensable.end(), member) ==
                       indispensable.end());
                scorer.deselect(member);
                r.trace.push_back({StepAction::eliminate, member, names[member],
                                   contribution, scorer.dp_selected()});
            } else {
                ++idx;
            }
        }
    }

    r.selected = scorer.selected();
    for (std::size_t l : r.selected) {
        r.selected_names.push_back(names[l]);
    }
    r.dp_selected = scorer.dp_selected();
    r.reduction_pct = 100.0 * (1.0 - static_cast<double>(r.selected.size()) /
                                         static_cast<double>(scorer.n_variables()));
    return r;
}

} // namespace

SelectionResult select_on_matrix(DiscriminationMatrix& m, double theta) {
    if (!m.selected().empty()) {
        throw std::logic_error("select_on_matrix needs a fresh matrix");
    }
    MatrixScorer scorer{m};
    return run_greedy(scorer, m.variable_names(), theta);
}

SelectionResult minset_plus(const KnowledgeBase& kb, const Measure& measure,
                            double theta) {
    kb.validate();
    auto t0 = std::chrono::steady_clock::now();
    DiscriminationMatrix m = DiscriminationMatrix::build(kb, measure);
    SelectionResult r = select_on_matrix(m, theta);
    auto t1 = std::chrono::steady_clock::now();
    r.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return r;
}

SelectionResult minset(const KnowledgeBase& kb) {
    return minset_plus(kb, Measure{MeasureKind::boolean, 0.5}, 1.0);
}

SelectionResult minset_partial_naive(const KnowledgeBase& kb, double theta) {
    kb.validate();
    if (kb.n_pairs() == 0) {
        throw ValidationError("nothing to discriminate: need at least two assertions");
    }
    auto t0 = std::chrono::steady_clock::now();
    NaiveScorer scorer(kb);
    std::vector<std::string> names;
    for (const VariableSpec& spec : kb.variables) {
        names.push_back(spec.name);
    }
    SelectionResult r = run_greedy(scorer, names, theta);
    auto t1 = std::chrono::steady_clock::now();
    r.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return r;
}

} // namespace minset

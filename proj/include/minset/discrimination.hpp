#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "minset/measures.hpp"
#include "minset/model.hpp"

namespace minset {

/// Absolute tolerance for every discrimination-power comparison.
inline constexpr double kTol = 1e-9;

/// The variables-by-pairs grid of per-variable discrimination scores, plus the
/// running column maxima over the currently selected variables ("max Yd").
/// Cells are filled once at construction and never change; selection state
/// (selected set and max_yd) is the only mutable part. Pairs are enumerated
/// lexicographically, so every dump and trace is deterministic.
class DiscriminationMatrix {
public:
    /// Evaluates the measure once per (variable, assertion pair) cell.
    static DiscriminationMatrix build(const KnowledgeBase& kb, const Measure& measure);

    /// Wraps a precomputed grid. cells[l] is variable l's row over the pairs
    /// of assertion_names in lexicographic order.
    static DiscriminationMatrix from_cells(std::vector<std::string> variable_names,
                                           const std::vector<std::string>& assertion_names,
                                           std::vector<std::vector<double>> cells);

    /// Reads a matrix written by dump(). A trailing max-Yd row, if present,
    /// is ignored: selection state always starts empty.
    static DiscriminationMatrix load_csv(std::istream& in);

    /// Header of pair labels, one row per variable, then the max-Yd row.
    void dump_csv(std::ostream& out) const;

    std::size_t n_variables() const { return cells_.size(); }
    std::size_t n_pairs() const { return pair_labels_.size(); }
    const std::vector<std::string>& variable_names() const { return variable_names_; }
    const std::vector<std::string>& pair_labels() const { return pair_labels_; }
    double cell(std::size_t l, std::size_t p) const { return cells_[l][p]; }
    const std::vector<double>& max_yd() const { return max_yd_; }
    const std::vector<std::size_t>& selected() const { return selected_; }
    bool is_selected(std::size_t l) const;

    /// Row sum: how much of the pair space this variable discriminates alone.
    double dp_variable(std::size_t l) const;

    /// Sum over pairs of the best score any member of yd achieves. Stateless;
    /// ignores the selection.
    double dp_set(const std::vector<std::size_t>& yd) const;

    /// dp_set over all variables: the stopping target.
    double dp_total() const;

    /// Sum of max_yd: dp_set of the selected set, read off the cache.
    double dp_selected() const;

    /// What l would add on top of the selected set, one subtraction per pair
    /// against the cached max_yd row.
    double odp(std::size_t l) const;

    /// Like odp but against an arbitrary set, re-scanning its rows.
    double odp_against(std::size_t l, const std::vector<std::size_t>& yp) const;

    /// Adds l to the selection and folds its row into max_yd.
    void select(std::size_t l);

    /// Removes l and rebuilds max_yd from the remaining selected rows.
    void deselect(std::size_t l);

    /// Variables that discriminate some pair strictly better than every other
    /// variable does: cell > 0 and margin over the best other row > 0.
    std::vector<std::size_t> indispensables() const;

    /// (dp_set(yp + {l}), dp_set(yp) + odp_against(l, yp)): the two sides of
    /// the additivity identity the selection loop relies on.
    std::pair<double, double> property1_check(const std::vector<std::size_t>& yp,
                                              std::size_t l) const;

    /// A copy with every cell snapped to 1 (cell >= 1 - kTol) or 0, and the
    /// selection cleared. Turns a partial matrix into a total-discrimination
    /// one.
    DiscriminationMatrix booleanized() const;

private:
    std::vector<std::string> variable_names_;
    std::vector<std::string> pair_labels_;
    std::vector<std::vector<double>> cells_;
    std::vector<double> max_yd_;
    std::vector<std::size_t> selected_;
};

/// "(a_1,a_2)"-style labels for every unordered pair, lexicographically.
std::vector<std::string> pair_labels_for(const std::vector<std::string>& assertion_names);

} // namespace minset

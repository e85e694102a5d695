#include "minset/discrimination.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "minset/errors.hpp"
#include "minset/text.hpp"

namespace minset {

std::vector<std::string> pair_labels_for(const std::vector<std::string>& assertion_names) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i + 1 < assertion_names.size(); ++i) {
        for (std::size_t j = i + 1; j < assertion_names.size(); ++j) {
            labels.push_back("(" + assertion_names[i] + "," + assertion_names[j] + ")");
        }
    }
    return labels;
}

DiscriminationMatrix DiscriminationMatrix::build(const KnowledgeBase& kb,
                                                const Measure& measure) {
    if (kb.n_pairs() == 0) {
        throw ValidationError("nothing to discriminate: need at least two assertions");
    }
    DiscriminationMatrix m;
    for (const VariableSpec& spec : kb.variables) {
        m.variable_names_.push_back(spec.name);
    }
    std::vector<std::string> assertion_names;
    for (const Assertion& a : kb.assertions) {
        assertion_names.push_back(a.name);
    }
    m.pair_labels_ = pair_labels_for(assertion_names);
    auto pairs = kb.pairs();
    m.cells_.assign(kb.n_variables(), std::vector<double>(pairs.size(), 0.0));
    for (std::size_t l = 0; l < kb.n_variables(); ++l) {
        for (std::size_t p = 0; p < pairs.size(); ++p) {
            const auto& [i, j] = pairs[p];
            m.cells_[l][p] = apply(measure, kb.assertions[i].values[l],
                                   kb.assertions[j].values[l], kb.variables[l]);
        }
    }
    m.max_yd_.assign(pairs.size(), 0.0);
    return m;
}

DiscriminationMatrix DiscriminationMatrix::from_cells(
    std::vector<std::string> variable_names,
    const std::vector<std::string>& assertion_names,
    std::vector<std::vector<double>> cells) {
    DiscriminationMatrix m;
    m.variable_names_ = std::move(variable_names);
    m.pair_labels_ = pair_labels_for(assertion_names);
    if (m.pair_labels_.empty()) {
        throw ValidationError("nothing to discriminate: need at least two assertions");
    }
    if (cells.size() != m.variable_names_.size()) {
        throw ValidationError("matrix rows do not match the variable count");
    }
    for (const auto& row : cells) {
        if (row.size() != m.pair_labels_.size()) {
            throw ValidationError("matrix row length does not match the pair count");
        }
    }
    m.cells_ = std::move(cells);
    m.max_yd_.assign(m.pair_labels_.size(), 0.0);
    return m;
}

DiscriminationMatrix DiscriminationMatrix::load_csv(std::istream& in) {
    auto rows = read_csv(in);
    if (rows.size() < 2) {
        throw ValidationError("matrix file needs a header and at least one variable row");
    }
    DiscriminationMatrix m;
    const auto& header = rows[0];
    if (header.size() < 2) {
        throw ValidationError("matrix header needs at least one pair column");
    }
    m.pair_labels_.assign(header.begin() + 1, header.end());
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.empty()) {
            continue;
        }
        if (row[0] == "Max Yd") {
            continue;
        }
        if (row.size() != header.size()) {
            throw ValidationError("matrix row '" + row[0] + "' has " +
                                  std::to_string(row.size() - 1) + " cells, expected " +
                                  std::to_string(header.size() - 1));
        }
        m.variable_names_.push_back(row[0]);
        std::vector<double> cells(row.size() - 1);
        for (std::size_t c = 1; c < row.size(); ++c) {
            if (!parse_double(row[c], cells[c - 1])) {
                throw ValidationError("matrix row '" + row[0] + "': cell '" + row[c] +
                                      "' is not a number");
            }
        }
        m.cells_.push_back(std::move(cells));
    }
    if (m.cells_.empty()) {
        throw ValidationError("matrix file has no variable rows");
    }
    m.max_yd_.assign(m.pair_labels_.size(), 0.0);
    return m;
}

void DiscriminationMatrix::dump_csv(std::ostream& out) const {
    out << "variable";
    for (const std::string& label : pair_labels_) {
        out << ',' << csv_quote(label);
    }
    out << '\n';
    for (std::size_t l = 0; l < cells_.size(); ++l) {
        out << csv_quote(variable_names_[l]);
        for (double v : cells_[l]) {
            out << ',' << format_double(v);
        }
        out << '\n';
    }
    out << "Max Yd";
    for (double v : max_yd_) {
        out << ',' << format_double(v);
    }
    out << '\n';
}

bool DiscriminationMatrix::is_selected(std::size_t l) const {
    return std::find(selected_.begin(), selected_.end(), l) != selected_.end();
}

double DiscriminationMatrix::dp_variable(std::size_t l) const {
    double sum = 0.0;
    for (double v : cells_[l]) {
        sum += v;
    }
    return sum;
}

double DiscriminationMatrix::dp_set(const std::vector<std::size_t>& yd) const {
    double sum = 0.0;
    for (std::size_t p = 0; p < n_pairs(); ++p) {
        double best = 0.0;
        for (std::size_t l : yd) {
            best = std::max(best, cells_[l][p]);
        }
        sum += best;
    }
    return sum;
}

double DiscriminationMatrix::dp_total() const {
    std::vector<std::size_t> all(n_variables());
    for (std::size_t l = 0; l < all.size(); ++l) {
        all[l] = l;
    }
    return dp_set(all);
}

double DiscriminationMatrix::dp_selected() const {
    double sum = 0.0;
    for (double v : max_yd_) {
        sum += v;
    }
    return sum;
}

double DiscriminationMatrix::odp(std::size_t l) const {
    if (is_selected(l)) {
        throw std::logic_error("odp: variable is already selected");
    }
    double sum = 0.0;
    for (std::size_t p = 0; p < n_pairs(); ++p) {
        sum += std::max(cells_[l][p] - max_yd_[p], 0.0);
    }
    return sum;
}

double DiscriminationMatrix::odp_against(std::size_t l,
                                         const std::vector<std::size_t>& yp) const {
    double sum = 0.0;
    for (std::size_t p = 0; p < n_pairs(); ++p) {
        double best = 0.0;
        for (std::size_t q : yp) {
            best = std::max(best, cells_[q][p]);
        }
        sum += std::max(cells_[l][p] - best, 0.0);
    }
    return sum;
}

void DiscriminationMatrix::select(std::size_t l) {
    if (is_selected(l)) {
        throw std::logic_error("select: variable is already selected");
    }
    selected_.push_back(l);
    for (std::size_t p = 0; p < n_pairs(); ++p) {
        max_yd_[p] = std::max(max_yd_[p], cells_[l][p]);
    }
}

void DiscriminationMatrix::deselect(std::size_t l) {
    auto it = std::find(selected_.begin(), selected_.end(), l);
    if (it == selected_.end()) {
        throw std::logic_error("deselect: variable is not selected");
    }
    selected_.erase(it);
    std::fill(max_yd_.begin(), max_yd_.end(), 0.0);
    for (std::size_t q : selected_) {
        for (std::size_t p = 0; p < n_pairs(); ++p) {
            max_yd_[p] = std::max(max_yd_[p], cells_[q][p]);
        }
    }
}

std::vector<std::size_t> DiscriminationMatrix::indispensables() const {
    std::vector<std::size_t> out;
    for (std::size_t l = 0; l < n_variables(); ++l) {
        bool found = false;
        for (std::size_t p = 0; p < n_pairs() && !found; ++p) {
            if (cells_[l][p] <= kTol) {
                continue;
            }
            double best_other = 0.0;
            for (std::size_t q = 0; q < n_variables(); ++q) {
                if (q != l) {
                    best_other = std::max(best_other, cells_[q][p]);
                }
            }
            if (cells_[l][p] - best_other > kTol) {
                found = true;
            }
        }
        if (found) {
            out.push_back(l);
        }
    }
    return out;
}

std::pair<double, double> DiscriminationMatrix::property1_check(
    const std::vector<std::size_t>& yp, std::size_t l) const {
    std::vector<std::size_t> with = yp;
    with.push_back(l);
    return {dp_set(with), dp_set(yp) + odp_against(l, yp)};
}

DiscriminationMatrix DiscriminationMatrix::booleanized() const {
    DiscriminationMatrix m;
    m.variable_names_ = variable_names_;
    m.pair_labels_ = pair_labels_;
    m.cells_ = cells_;
    for (auto& row : m.cells_) {
        for (double& v : row) {
            v = v >= 1.0 - kTol ? 1.0 : 0.0;
        }
    }
    m.max_yd_.assign(n_pairs(), 0.0);
    return m;
}

} // namespace minset

#include "minset/quality.hpp"

#include <algorithm>

#include "minset/errors.hpp"
#include "minset/measures.hpp"

namespace minset {

std::vector<std::size_t> real_extent(const Assertion& a,
                                     const std::vector<VariableSpec>& variables,
                                     const IndividualTable& t) {
    if (a.values.size() != variables.size()) {
        throw ValidationError("assertion '" + a.name + "' is not aligned with its variables");
    }
    std::vector<std::size_t> columns;
    for (const VariableSpec& spec : variables) {
        bool found = false;
        for (std::size_t c = 0; c < t.variables.size(); ++c) {
            if (t.variables[c].name == spec.name) {
                columns.push_back(c);
                found = true;
                break;
            }
        }
        if (!found) {
            throw ValidationError("variable '" + spec.name + "' is not in the table");
        }
    }
    std::vector<std::size_t> extent;
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        bool member = true;
        for (std::size_t l = 0; l < variables.size() && member; ++l) {
            const MaybeScalar& cell = t.rows[r][columns[l]];
            if (!cell) {
                throw ValidationError("row " + std::to_string(r) + ", variable '" +
                                      variables[l].name +
                                      "' is missing; impute before evaluation");
            }
            member = variables[l].kind == VarKind::categorical
                         ? contains(a.values[l], std::get<std::string>(*cell))
                         : contains(a.values[l], std::get<double>(*cell));
        }
        if (member) {
            extent.push_back(r);
        }
    }
    return extent;
}

namespace {

double pair_jaccard_distance(const std::vector<std::size_t>& ea,
                             const std::vector<std::size_t>& eb) {
    std::vector<std::size_t> common;
    std::set_intersection(ea.begin(), ea.end(), eb.begin(), eb.end(),
                          std::back_inserter(common));
    std::size_t uni = ea.size() + eb.size() - common.size();
    if (uni == 0) {
        return 1.0;
    }
    return 1.0 - static_cast<double>(common.size()) / static_cast<double>(uni);
}

} // namespace

double extent_discrimination(const KnowledgeBase& kb, const IndividualTable& t) {
    if (kb.n_pairs() == 0) {
        throw ValidationError("nothing to discriminate: need at least two assertions");
    }
    if (t.rows.empty()) {
        throw ValidationError("no individuals to evaluate");
    }
    std::vector<std::vector<std::size_t>> extents;
    for (const Assertion& a : kb.assertions) {
        extents.push_back(real_extent(a, kb.variables, t));
    }
    double sum = 0.0;
    for (const auto& [i, j] : kb.pairs()) {
        sum += pair_jaccard_distance(extents[i], extents[j]);
    }
    return sum / static_cast<double>(kb.n_pairs());
}

double overlap_percentage(const KnowledgeBase& kb) {
    if (kb.n_pairs() == 0) {
        throw ValidationError("nothing to measure: need at least two assertions");
    }
    std::size_t covered = 0;
    for (const auto& [i, j] : kb.pairs()) {
        for (std::size_t l = 0; l < kb.n_variables(); ++l) {
            if (comp(kb.assertions[i].values[l], kb.assertions[j].values[l]) == 1.0) {
                ++covered;
                break;
            }
        }
    }
    return 1.0 - static_cast<double>(covered) / static_cast<double>(kb.n_pairs());
}

double overlap_from_matrix(const DiscriminationMatrix& m) {
    std::size_t covered = 0;
    for (std::size_t p = 0; p < m.n_pairs(); ++p) {
        for (std::size_t l = 0; l < m.n_variables(); ++l) {
            if (m.cell(l, p) >= 1.0 - kTol) {
                ++covered;
                break;
            }
        }
    }
    return 1.0 - static_cast<double>(covered) / static_cast<double>(m.n_pairs());
}

QualityReport quality_report(const KnowledgeBase& original, const SelectionResult& result,
                             const KnowledgeBase& reduced, const IndividualTable& t) {
    QualityReport q;
    q.overlap_pct = overlap_percentage(original);
    q.dp_selected = result.dp_selected;
    q.dp_total = result.dp_total;
    q.reduction_pct = result.reduction_pct;
    q.degenerate = result.degenerate;

    std::vector<std::vector<std::size_t>> extents;
    for (const Assertion& a : reduced.assertions) {
        extents.push_back(real_extent(a, reduced.variables, t));
    }
    std::vector<std::string> names;
    for (const Assertion& a : reduced.assertions) {
        names.push_back(a.name);
    }
    q.pair_labels = pair_labels_for(names);
    double sum = 0.0;
    for (const auto& [i, j] : original.pairs()) {
        double d = pair_jaccard_distance(extents[i], extents[j]);
        q.pair_extent_discrimination.push_back(d);
        sum += d;
    }
    q.extent_discrimination_pct = sum / static_cast<double>(original.n_pairs());
    q.extent_intersection_avg = 1.0 - q.extent_discrimination_pct;

    q.extent_discrimination_original_pct = extent_discrimination(original, t);
    q.extent_intersection_avg_original = 1.0 - q.extent_discrimination_original_pct;
    return q;
}

} // namespace minset

#include "minset/model.hpp"

#include <algorithm>
#include <unordered_set>

#include "minset/errors.hpp"

namespace minset {

std::size_t KnowledgeBase::n_pairs() const {
    std::size_t m = assertions.size();
    return m * (m - 1) / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> KnowledgeBase::pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    out.reserve(n_pairs());
    for (std::size_t i = 0; i + 1 < assertions.size(); ++i) {
        for (std::size_t j = i + 1; j < assertions.size(); ++j) {
            out.emplace_back(i, j);
        }
    }
    return out;
}

void KnowledgeBase::validate() const {
    if (variables.empty()) {
        throw ValidationError("knowledge base has no variables");
    }
    std::unordered_set<std::string> names;
    for (const VariableSpec& spec : variables) {
        if (!names.insert(spec.name).second) {
            throw ValidationError("duplicate variable name '" + spec.name + "'");
        }
    }
    names.clear();
    for (const Assertion& a : assertions) {
        if (!names.insert(a.name).second) {
            throw ValidationError("duplicate assertion name '" + a.name + "'");
        }
        if (a.values.size() != variables.size()) {
            throw ValidationError("assertion '" + a.name + "' has " +
                                  std::to_string(a.values.size()) + " values for " +
                                  std::to_string(variables.size()) + " variables");
        }
        for (std::size_t l = 0; l < variables.size(); ++l) {
            const VariableSpec& spec = variables[l];
            const ValueSet& v = a.values[l];
            if (v.kind() != spec.kind) {
                throw ValidationError("assertion '" + a.name + "', variable '" + spec.name +
                                      "': value kind does not match the variable");
            }
            if (spec.kind == VarKind::categorical) {
                for (const std::string& label : v.categories()) {
                    if (!std::binary_search(spec.labels.begin(), spec.labels.end(), label)) {
                        throw ValidationError("assertion '" + a.name + "', variable '" +
                                              spec.name + "': label '" + label +
                                              "' is outside the domain");
                    }
                }
            } else {
                for (const Interval& p : v.pieces()) {
                    if (p.lo < spec.range.lo || p.hi > spec.range.hi) {
                        throw ValidationError("assertion '" + a.name + "', variable '" +
                                              spec.name + "': interval outside the domain");
                    }
                }
            }
        }
    }
}

KnowledgeBase KnowledgeBase::restrict_to(const std::vector<std::size_t>& variable_indices) const {
    KnowledgeBase out;
    for (std::size_t l : variable_indices) {
        if (l >= variables.size()) {
            throw ValidationError("restrict_to: variable index out of range");
        }
        out.variables.push_back(variables[l]);
    }
    for (const Assertion& a : assertions) {
        Assertion reduced;
        reduced.name = a.name;
        for (std::size_t l : variable_indices) {
            reduced.values.push_back(a.values[l]);
        }
        out.assertions.push_back(std::move(reduced));
    }
    return out;
}

std::optional<std::size_t> KnowledgeBase::variable_index(const std::string& name) const {
    for (std::size_t l = 0; l < variables.size(); ++l) {
        if (variables[l].name == name) {
            return l;
        }
    }
    return std::nullopt;
}

void IndividualTable::validate() const {
    if (clusters.size() != rows.size()) {
        throw ValidationError("individual table: cluster labels do not match row count");
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != variables.size()) {
            throw ValidationError("individual row " + std::to_string(r) +
                                  " has the wrong number of values");
        }
        for (std::size_t l = 0; l < variables.size(); ++l) {
            if (rows[r][l] && !scalar_in_domain(*rows[r][l], variables[l])) {
                throw ValidationError("row " + std::to_string(r) + ", variable '" +
                                      variables[l].name + "': value outside the domain");
            }
        }
    }
}

std::vector<std::string> IndividualTable::cluster_labels() const {
    std::vector<std::string> out;
    for (const std::string& c : clusters) {
        if (std::find(out.begin(), out.end(), c) == out.end()) {
            out.push_back(c);
        }
    }
    return out;
}

bool scalar_in_domain(const Scalar& x, const VariableSpec& spec) {
    if (spec.kind == VarKind::categorical) {
        const auto* label = std::get_if<std::string>(&x);
        return label && std::binary_search(spec.labels.begin(), spec.labels.end(), *label);
    }
    const auto* value = std::get_if<double>(&x);
    return value && spec.range.contains(*value);
}

bool evaluate(const Assertion& a, const std::vector<VariableSpec>& variables,
              const std::vector<MaybeScalar>& row) {
    if (a.values.size() != variables.size() || row.size() != variables.size()) {
        throw ValidationError("evaluate: assertion, variables and row are not aligned");
    }
    for (std::size_t l = 0; l < variables.size(); ++l) {
        if (!row[l]) {
            throw ValidationError("evaluate: missing value for variable '" +
                                  variables[l].name + "'; impute before evaluation");
        }
        const ValueSet& v = a.values[l];
        bool member = variables[l].kind == VarKind::categorical
                          ? contains(v, std::get<std::string>(*row[l]))
                          : contains(v, std::get<double>(*row[l]));
        if (!member) {
            return false;
        }
    }
    return true;
}

} // namespace minset

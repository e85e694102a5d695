#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "minset/value_set.hpp"

namespace minset {

/// One observed value of an individual: a category label or a real number.
using Scalar = std::variant<double, std::string>;

/// A cell of an individual table; empty means the value is missing.
using MaybeScalar = std::optional<Scalar>;

/// A named symbolic object: the conjunction of one elementary event per
/// variable, stored positionally against the owning knowledge base's
/// variable list.
struct Assertion {
    std::string name;
    std::vector<ValueSet> values;

    bool operator==(const Assertion& other) const = default;
};

/// Variable specifications plus the assertions described over them. The pair
/// index enumerates every unordered assertion pair once, in lexicographic
/// order, and is what all discrimination sums run over.
struct KnowledgeBase {
    std::vector<VariableSpec> variables;
    std::vector<Assertion> assertions;

    std::size_t n_variables() const { return variables.size(); }
    std::size_t n_assertions() const { return assertions.size(); }
    std::size_t n_pairs() const;
    std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

    /// Throws ValidationError if any structural invariant is broken: empty
    /// variable list, duplicate assertion names, misaligned or out-of-domain
    /// value sets.
    void validate() const;

    /// A new knowledge base keeping only the given variables (in the given
    /// order), with every assertion restricted accordingly.
    KnowledgeBase restrict_to(const std::vector<std::size_t>& variable_indices) const;

    std::optional<std::size_t> variable_index(const std::string& name) const;
};

/// Observed individuals: one scalar per variable per row (possibly missing),
/// plus a cluster label per row.
struct IndividualTable {
    std::vector<VariableSpec> variables;
    std::vector<std::vector<MaybeScalar>> rows;
    std::vector<std::string> clusters;

    std::size_t n_rows() const { return rows.size(); }
    void validate() const;

    /// Distinct cluster labels in order of first appearance.
    std::vector<std::string> cluster_labels() const;
};

bool scalar_in_domain(const Scalar& x, const VariableSpec& spec);

/// Conjunction semantics: true iff every variable's value set contains the
/// row's scalar. Rows must be imputed first; a missing value throws.
bool evaluate(const Assertion& a, const std::vector<VariableSpec>& variables,
              const std::vector<MaybeScalar>& row);

} // namespace minset

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "minset/generator.hpp"
#include "minset/model.hpp"
#include "minset/quality.hpp"
#include "minset/selection.hpp"

namespace minset {

/// Settings echoed into a selection report so a run is reproducible from the
/// report alone.
struct RunMeta {
    std::string algorithm;
    std::string measure;
    double theta = 1.0;
    double gamma = 0.5;
    std::string input;
};

KnowledgeBase read_dataset(const std::string& path);
void write_dataset(const KnowledgeBase& kb, const std::string& path);

/// Columns located by header name; every variable must appear, plus a final
/// `cluster` column. Empty cells are missing values.
IndividualTable read_individuals(const std::string& path,
                                 const std::vector<VariableSpec>& variables);

/// Reads a table knowing only each column's kind; categorical domains and
/// numeric ranges are inferred from the observed values.
IndividualTable read_individuals_inferred(const std::string& path,
                                          const std::map<std::string, VarKind>& kinds);

void write_individuals(const IndividualTable& t, const std::string& path);

/// The per-variable output kinds for gen-so: {"kinds": {name: kind, ...}}.
std::map<std::string, OutputKind> read_kinds(const std::string& path);

void write_selection_report(const SelectionResult& r, const RunMeta& meta,
                            const std::string& path);

/// Reads back the fields of a report that later commands need.
SelectionResult read_selection_report(const std::string& path);

void write_quality_report(const QualityReport& q,
                          const std::vector<std::string>& assertion_names,
                          const std::vector<std::vector<std::size_t>>& extents,
                          const std::vector<std::string>& row_labels,
                          const std::string& path);

} // namespace minset

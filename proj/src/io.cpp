#include "minset/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include "json.hpp"
#include "minset/errors.hpp"
#include "minset/text.hpp"

namespace minset {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

namespace {

json parse_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot open '" + path + "'");
    }
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) {
        throw ValidationError("cannot write '" + path + "'");
    }
    out << content;
}

const json& need(const json& doc, const std::string& key, const std::string& where) {
    if (!doc.is_object() || !doc.contains(key)) {
        throw ValidationError(where + ": missing field '" + key + "'");
    }
    return doc.at(key);
}

std::string need_string(const json& doc, const std::string& key, const std::string& where) {
    const json& v = need(doc, key, where);
    if (!v.is_string()) {
        throw ValidationError(where + "." + key + ": expected a string");
    }
    return v.get<std::string>();
}

double need_number(const json& v, const std::string& where) {
    if (!v.is_number()) {
        throw ValidationError(where + ": expected a number");
    }
    return v.get<double>();
}

Interval parse_interval(const json& v, const std::string& where) {
    if (v.is_number()) {
        double x = v.get<double>();
        return {x, x};
    }
    if (!v.is_array() || v.size() != 2) {
        throw ValidationError(where + ": expected [lo, hi]");
    }
    Interval p{need_number(v[0], where + "[0]"), need_number(v[1], where + "[1]")};
    if (p.lo > p.hi) {
        throw ValidationError(where + ": lo exceeds hi");
    }
    return p;
}

ValueSet parse_value_set(const json& v, const VariableSpec& spec, const std::string& where) {
    if (!v.is_array()) {
        throw ValidationError(where + ": expected a list");
    }
    if (spec.kind == VarKind::categorical) {
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (!v[i].is_string()) {
                throw ValidationError(where + "[" + std::to_string(i) +
                                      "]: expected a label");
            }
            labels.push_back(v[i].get<std::string>());
        }
        return ValueSet::of_categories(std::move(labels));
    }
    std::vector<Interval> pieces;
    for (std::size_t i = 0; i < v.size(); ++i) {
        pieces.push_back(parse_interval(v[i], where + "[" + std::to_string(i) + "]"));
    }
    if (pieces.empty()) {
        return ValueSet::empty_set(VarKind::numeric);
    }
    return ValueSet::of_intervals(std::move(pieces));
}

ojson value_set_to_json(const ValueSet& v) {
    ojson out = ojson::array();
    if (v.kind() == VarKind::categorical) {
        for (const std::string& label : v.categories()) {
            out.push_back(label);
        }
    } else {
        for (const Interval& p : v.pieces()) {
            out.push_back(ojson::array({p.lo, p.hi}));
        }
    }
    return out;
}

} // namespace

KnowledgeBase read_dataset(const std::string& path) {
    json doc = parse_json_file(path);
    KnowledgeBase kb;
    const json& vars = need(doc, "variables", path);
    if (!vars.is_array() || vars.empty()) {
        throw ValidationError(path + ".variables: expected a non-empty list");
    }
    for (std::size_t i = 0; i < vars.size(); ++i) {
        std::string where = path + ".variables[" + std::to_string(i) + "]";
        std::string name = need_string(vars[i], "name", where);
        std::string type = need_string(vars[i], "type", where);
        const json& domain = need(vars[i], "domain", where);
        if (type == "categorical") {
            if (!domain.is_array() || domain.empty()) {
                throw ValidationError(where + ".domain: expected a label list");
            }
            std::vector<std::string> labels;
            for (const json& d : domain) {
                if (!d.is_string()) {
                    throw ValidationError(where + ".domain: expected labels");
                }
                labels.push_back(d.get<std::string>());
            }
            kb.variables.push_back(VariableSpec::categorical(name, std::move(labels)));
        } else if (type == "numeric") {
            Interval range = parse_interval(domain, where + ".domain");
            kb.variables.push_back(VariableSpec::numeric(name, range.lo, range.hi));
        } else {
            throw ValidationError(where + ".type: expected categorical or numeric");
        }
    }
    const json& objects = need(doc, "objects", path);
    if (!objects.is_array()) {
        throw ValidationError(path + ".objects: expected a list");
    }
    for (std::size_t i = 0; i < objects.size(); ++i) {
        std::string where = path + ".objects[" + std::to_string(i) + "]";
        Assertion a;
        a.name = need_string(objects[i], "name", where);
        const json& values = need(objects[i], "values", where);
        for (const VariableSpec& spec : kb.variables) {
            if (!values.is_object() || !values.contains(spec.name)) {
                throw ValidationError(where + ".values: missing variable '" + spec.name +
                                      "'");
            }
            a.values.push_back(
                parse_value_set(values.at(spec.name), spec, where + ".values." + spec.name));
        }
        kb.assertions.push_back(std::move(a));
    }
    kb.validate();
    return kb;
}

void write_dataset(const KnowledgeBase& kb, const std::string& path) {
    ojson doc;
    doc["variables"] = ojson::array();
    for (const VariableSpec& spec : kb.variables) {
        ojson v;
        v["name"] = spec.name;
        if (spec.kind == VarKind::categorical) {
            v["type"] = "categorical";
            v["domain"] = spec.labels;
        } else {
            v["type"] = "numeric";
            v["domain"] = ojson::array({spec.range.lo, spec.range.hi});
        }
        doc["variables"].push_back(std::move(v));
    }
    doc["objects"] = ojson::array();
    for (const Assertion& a : kb.assertions) {
        ojson o;
        o["name"] = a.name;
        ojson values;
        for (std::size_t l = 0; l < kb.variables.size(); ++l) {
            values[kb.variables[l].name] = value_set_to_json(a.values[l]);
        }
        o["values"] = std::move(values);
        doc["objects"].push_back(std::move(o));
    }
    write_text_file(path, doc.dump(2) + "\n");
}

namespace {

std::vector<std::vector<std::string>> read_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot open '" + path + "'");
    }
    auto rows = read_csv(in);
    if (rows.empty()) {
        throw ValidationError(path + ": empty file");
    }
    return rows;
}

MaybeScalar parse_cell(const std::string& text, const VariableSpec& spec,
                       const std::string& where) {
    if (text.empty()) {
        return std::nullopt;
    }
    if (spec.kind == VarKind::categorical) {
        return Scalar{text};
    }
    double x = 0.0;
    if (!parse_double(text, x)) {
        throw ValidationError(where + ": '" + text + "' is not a number");
    }
    return Scalar{x};
}

} // namespace

IndividualTable read_individuals(const std::string& path,
                                 const std::vector<VariableSpec>& variables) {
    auto rows = read_csv_file(path);
    const auto& header = rows[0];
    if (header.empty() || header.back() != "cluster") {
        throw ValidationError(path + ": last column must be 'cluster'");
    }
    std::vector<std::size_t> columns;
    for (const VariableSpec& spec : variables) {
        auto it = std::find(header.begin(), header.end() - 1, spec.name);
        if (it == header.end() - 1) {
            throw ValidationError(path + ": missing column '" + spec.name + "'");
        }
        columns.push_back(static_cast<std::size_t>(it - header.begin()));
    }
    if (header.size() != variables.size() + 1) {
        throw ValidationError(path + ": header does not match the variable list");
    }
    IndividualTable t;
    t.variables = variables;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        if (rows[r].size() != header.size()) {
            throw ValidationError(path + ": row " + std::to_string(r) + " has " +
                                  std::to_string(rows[r].size()) + " fields, expected " +
                                  std::to_string(header.size()));
        }
        std::vector<MaybeScalar> row;
        for (std::size_t l = 0; l < variables.size(); ++l) {
            row.push_back(parse_cell(rows[r][columns[l]], variables[l],
                                     path + " row " + std::to_string(r) + ", '" +
                                         variables[l].name + "'"));
        }
        t.rows.push_back(std::move(row));
        t.clusters.push_back(rows[r].back());
    }
    t.validate();
    return t;
}

IndividualTable read_individuals_inferred(const std::string& path,
                                          const std::map<std::string, VarKind>& kinds) {
    auto rows = read_csv_file(path);
    const auto& header = rows[0];
    if (header.empty() || header.back() != "cluster") {
        throw ValidationError(path + ": last column must be 'cluster'");
    }
    std::vector<VariableSpec> variables;
    for (std::size_t c = 0; c + 1 < header.size(); ++c) {
        auto it = kinds.find(header[c]);
        if (it == kinds.end()) {
            throw ValidationError(path + ": no kind given for column '" + header[c] + "'");
        }
        VariableSpec spec;
        spec.name = header[c];
        spec.kind = it->second;
        variables.push_back(std::move(spec));
    }

    std::vector<std::vector<MaybeScalar>> cells;
    std::vector<std::string> clusters;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        if (rows[r].size() != header.size()) {
            throw ValidationError(path + ": row " + std::to_string(r) + " has " +
                                  std::to_string(rows[r].size()) + " fields, expected " +
                                  std::to_string(header.size()));
        }
        std::vector<MaybeScalar> row;
        for (std::size_t l = 0; l < variables.size(); ++l) {
            row.push_back(parse_cell(rows[r][l], variables[l],
                                     path + " row " + std::to_string(r) + ", '" +
                                         variables[l].name + "'"));
        }
        cells.push_back(std::move(row));
        clusters.push_back(rows[r].back());
    }

    for (std::size_t l = 0; l < variables.size(); ++l) {
        if (variables[l].kind == VarKind::categorical) {
            std::set<std::string> labels;
            for (const auto& row : cells) {
                if (row[l]) {
                    labels.insert(std::get<std::string>(*row[l]));
                }
            }
            if (labels.empty()) {
                throw ValidationError(path + ": column '" + variables[l].name +
                                      "' has no observed values");
            }
            variables[l] = VariableSpec::categorical(
                variables[l].name, {labels.begin(), labels.end()});
        } else {
            double lo = 0.0;
            double hi = 0.0;
            bool seen = false;
            for (const auto& row : cells) {
                if (row[l]) {
                    double x = std::get<double>(*row[l]);
                    lo = seen ? std::min(lo, x) : x;
                    hi = seen ? std::max(hi, x) : x;
                    seen = true;
                }
            }
            if (!seen) {
                throw ValidationError(path + ": column '" + variables[l].name +
                                      "' has no observed values");
            }
            variables[l] = VariableSpec::numeric(variables[l].name, lo, hi);
        }
    }

    IndividualTable t;
    t.variables = std::move(variables);
    t.rows = std::move(cells);
    t.clusters = std::move(clusters);
    t.validate();
    return t;
}

void write_individuals(const IndividualTable& t, const std::string& path) {
    std::string out;
    for (const VariableSpec& spec : t.variables) {
        out += csv_quote(spec.name);
        out += ',';
    }
    out += "cluster\n";
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        for (std::size_t l = 0; l < t.variables.size(); ++l) {
            const MaybeScalar& cell = t.rows[r][l];
            if (cell) {
                if (t.variables[l].kind == VarKind::categorical) {
                    out += csv_quote(std::get<std::string>(*cell));
                } else {
                    out += format_double(std::get<double>(*cell));
                }
            }
            out += ',';
        }
        out += csv_quote(t.clusters[r]);
        out += '\n';
    }
    write_text_file(path, out);
}

std::map<std::string, OutputKind> read_kinds(const std::string& path) {
    json doc = parse_json_file(path);
    const json& kinds = need(doc, "kinds", path);
    if (!kinds.is_object() || kinds.empty()) {
        throw ValidationError(path + ".kinds: expected a variable-to-kind map");
    }
    std::map<std::string, OutputKind> out;
    for (const auto& [name, value] : kinds.items()) {
        if (!value.is_string()) {
            throw ValidationError(path + ".kinds." + name + ": expected a kind name");
        }
        out[name] = parse_output_kind(value.get<std::string>());
    }
    return out;
}

void write_selection_report(const SelectionResult& r, const RunMeta& meta,
                            const std::string& path) {
    ojson doc;
    doc["algorithm"] = meta.algorithm;
    doc["measure"] = meta.measure;
    doc["theta"] = meta.theta;
    doc["gamma"] = meta.gamma;
    doc["input"] = meta.input;
    doc["selected"] = r.selected_names;
    doc["selected_indices"] = r.selected;
    doc["dp_selected"] = r.dp_selected;
    doc["dp_total"] = r.dp_total;
    doc["reduction_pct"] = r.reduction_pct;
    doc["degenerate"] = r.degenerate;
    doc["note"] = r.note;
    doc["wall_ms"] = r.wall_ms;
    doc["trace"] = ojson::array();
    for (const TraceStep& step : r.trace) {
        ojson s;
        s["action"] = to_string(step.action);
        s["variable"] = step.variable_name;
        s["odp"] = step.odp;
        s["dp_after"] = step.dp_after;
        doc["trace"].push_back(std::move(s));
    }
    write_text_file(path, doc.dump(2) + "\n");
}

SelectionResult read_selection_report(const std::string& path) {
    json doc = parse_json_file(path);
    SelectionResult r;
    const json& selected = need(doc, "selected", path);
    if (!selected.is_array()) {
        throw ValidationError(path + ".selected: expected a list of names");
    }
    for (const json& name : selected) {
        if (!name.is_string()) {
            throw ValidationError(path + ".selected: expected names");
        }
        r.selected_names.push_back(name.get<std::string>());
    }
    if (doc.contains("selected_indices") && doc["selected_indices"].is_array()) {
        for (const json& idx : doc["selected_indices"]) {
            r.selected.push_back(idx.get<std::size_t>());
        }
    }
    r.dp_selected = need_number(need(doc, "dp_selected", path), path + ".dp_selected");
    r.dp_total = need_number(need(doc, "dp_total", path), path + ".dp_total");
    r.reduction_pct =
        need_number(need(doc, "reduction_pct", path), path + ".reduction_pct");
    if (doc.contains("degenerate")) {
        r.degenerate = doc["degenerate"].get<bool>();
    }
    if (doc.contains("note") && doc["note"].is_string()) {
        r.note = doc["note"].get<std::string>();
    }
    if (doc.contains("wall_ms") && doc["wall_ms"].is_number()) {
        r.wall_ms = doc["wall_ms"].get<double>();
    }
    return r;
}

void write_quality_report(const QualityReport& q,
                          const std::vector<std::string>& assertion_names,
                          const std::vector<std::vector<std::size_t>>& extents,
                          const std::vector<std::string>& row_labels,
                          const std::string& path) {
    ojson doc;
    doc["overlap_pct"] = q.overlap_pct;
    doc["extent_discrimination_pct"] = q.extent_discrimination_pct;
    doc["extent_intersection_avg"] = q.extent_intersection_avg;
    doc["extent_discrimination_original_pct"] = q.extent_discrimination_original_pct;
    doc["extent_intersection_avg_original"] = q.extent_intersection_avg_original;
    doc["extent_delta"] =
        q.extent_intersection_avg - q.extent_intersection_avg_original;
    doc["dp_selected"] = q.dp_selected;
    doc["dp_total"] = q.dp_total;
    doc["reduction_pct"] = q.reduction_pct;
    doc["degenerate"] = q.degenerate;
    doc["pairs"] = ojson::array();
    for (std::size_t p = 0; p < q.pair_labels.size(); ++p) {
        ojson row;
        row["pair"] = q.pair_labels[p];
        row["extent_discrimination"] = q.pair_extent_discrimination[p];
        doc["pairs"].push_back(std::move(row));
    }
    doc["extents"] = ojson::array();
    for (std::size_t i = 0; i < assertion_names.size() && i < extents.size(); ++i) {
        ojson row;
        row["object"] = assertion_names[i];
        row["rows"] = extents[i];
        ojson labels = ojson::array();
        for (std::size_t r : extents[i]) {
            if (r < row_labels.size()) {
                labels.push_back(row_labels[r]);
            }
        }
        row["labels"] = std::move(labels);
        doc["extents"].push_back(std::move(row));
    }
    write_text_file(path, doc.dump(2) + "\n");
}

} // namespace minset

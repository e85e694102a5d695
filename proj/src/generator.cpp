#include "minset/generator.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "minset/errors.hpp"

namespace minset {

std::string to_string(OutputKind kind) {
    switch (kind) {
    case OutputKind::boolean_set: return "boolean";
    case OutputKind::categorical_set: return "categorical-set";
    case OutputKind::numeric_point_set: return "numeric-point-set";
    case OutputKind::interval: return "interval";
    }
    return "?";
}

OutputKind parse_output_kind(const std::string& name) {
    if (name == "boolean") {
        return OutputKind::boolean_set;
    }
    if (name == "categorical-set" || name == "categorical") {
        return OutputKind::categorical_set;
    }
    if (name == "numeric-point-set" || name == "point-set") {
        return OutputKind::numeric_point_set;
    }
    if (name == "interval") {
        return OutputKind::interval;
    }
    throw ValidationError("unknown output kind '" + name + "'");
}

IndividualTable impute_missing(const IndividualTable& t) {
    IndividualTable out = t;
    for (std::size_t l = 0; l < t.variables.size(); ++l) {
        const VariableSpec& spec = t.variables[l];
        MaybeScalar fill;
        if (spec.kind == VarKind::numeric) {
            double sum = 0.0;
            std::size_t n = 0;
            for (const auto& row : t.rows) {
                if (row[l]) {
                    sum += std::get<double>(*row[l]);
                    ++n;
                }
            }
            if (n > 0) {
                fill = Scalar{sum / static_cast<double>(n)};
            }
        } else {
            std::map<std::string, std::size_t> counts;
            for (const auto& row : t.rows) {
                if (row[l]) {
                    ++counts[std::get<std::string>(*row[l])];
                }
            }
            std::size_t best = 0;
            for (const auto& [label, n] : counts) {
                if (n > best) {
                    best = n;
                    fill = Scalar{label};
                }
            }
        }
        for (auto& row : out.rows) {
            if (!row[l]) {
                if (!fill) {
                    throw ValidationError("variable '" + spec.name +
                                          "' has no observed values to impute from");
                }
                row[l] = fill;
            }
        }
    }
    return out;
}

namespace {

void check_kinds(const GenerationSpec& spec, const std::vector<VariableSpec>& variables) {
    if (spec.kinds.size() != variables.size()) {
        throw ValidationError("generation spec lists " + std::to_string(spec.kinds.size()) +
                              " output kinds for " + std::to_string(variables.size()) +
                              " variables");
    }
    for (std::size_t l = 0; l < variables.size(); ++l) {
        const VariableSpec& v = variables[l];
        OutputKind k = spec.kinds[l];
        bool wants_categorical = k == OutputKind::boolean_set || k == OutputKind::categorical_set;
        if (wants_categorical != (v.kind == VarKind::categorical)) {
            throw ValidationError("variable '" + v.name + "': output kind " + to_string(k) +
                                  " does not fit a " + to_string(v.kind) + " variable");
        }
        if (k == OutputKind::boolean_set && v.labels.size() != 2) {
            throw ValidationError("variable '" + v.name +
                                  "': boolean output needs exactly two labels");
        }
    }
}

} // namespace

ValueSet refine_interval(const std::vector<double>& own,
                         const std::vector<double>& foreign, const Interval& domain) {
    if (own.empty()) {
        throw ValidationError("refine_interval: no own values");
    }
    double lo = own.front();
    double hi = own.back();
    if (lo < domain.lo || hi > domain.hi) {
        throw ValidationError("refine_interval: own values outside the domain");
    }
    std::set<double> own_set(own.begin(), own.end());
    std::set<double> boundaries(own.begin(), own.end());
    for (double f : foreign) {
        if (lo < f && f < hi && !own_set.count(f)) {
            boundaries.insert(f);
        }
    }
    std::vector<double> b(boundaries.begin(), boundaries.end());
    std::vector<Interval> kept;
    if (b.size() == 1) {
        kept.push_back({b[0], b[0]});
    }
    for (std::size_t i = 0; i + 1 < b.size(); ++i) {
        if (own_set.count(b[i]) || own_set.count(b[i + 1])) {
            kept.push_back({b[i], b[i + 1]});
        }
    }
    return ValueSet::of_intervals(std::move(kept));
}

KnowledgeBase generate_objects(const IndividualTable& t, const GenerationSpec& spec) {
    t.validate();
    check_kinds(spec, t.variables);
    if (t.rows.empty()) {
        throw ValidationError("no individuals to generalize");
    }
    for (const auto& row : t.rows) {
        for (const auto& cell : row) {
            if (!cell) {
                throw ValidationError("table has missing values; impute before generating");
            }
        }
    }

    KnowledgeBase kb;
    kb.variables = t.variables;
    std::vector<std::string> clusters = t.cluster_labels();
    for (const std::string& cluster : clusters) {
        Assertion a;
        a.name = cluster;
        for (std::size_t l = 0; l < t.variables.size(); ++l) {
            OutputKind kind = spec.kinds[l];
            if (kind == OutputKind::boolean_set || kind == OutputKind::categorical_set) {
                std::vector<std::string> labels;
                for (std::size_t r = 0; r < t.rows.size(); ++r) {
                    if (t.clusters[r] == cluster) {
                        labels.push_back(std::get<std::string>(*t.rows[r][l]));
                    }
                }
                a.values.push_back(ValueSet::of_categories(std::move(labels)));
                continue;
            }
            std::vector<double> own;
            std::vector<double> foreign;
            for (std::size_t r = 0; r < t.rows.size(); ++r) {
                double x = std::get<double>(*t.rows[r][l]);
                (t.clusters[r] == cluster ? own : foreign).push_back(x);
            }
            std::sort(own.begin(), own.end());
            std::sort(foreign.begin(), foreign.end());
            if (kind == OutputKind::numeric_point_set) {
                a.values.push_back(ValueSet::of_points(own));
            } else if (spec.refine) {
                a.values.push_back(refine_interval(own, foreign, t.variables[l].range));
            } else {
                a.values.push_back(ValueSet::of_interval(own.front(), own.back()));
            }
        }
        kb.assertions.push_back(std::move(a));
    }
    kb.validate();
    return kb;
}

Scalar draw_from(const ValueSet& v, std::mt19937_64& rng) {
    if (v.empty()) {
        throw ValidationError("cannot sample from an empty value set");
    }
    if (v.kind() == VarKind::categorical) {
        std::uniform_int_distribution<std::size_t> pick(0, v.categories().size() - 1);
        return Scalar{v.categories()[pick(rng)]};
    }
    double total = mu(v);
    if (total <= 0.0) {
        std::uniform_int_distribution<std::size_t> pick(0, v.pieces().size() - 1);
        return Scalar{v.pieces()[pick(rng)].lo};
    }
    std::uniform_real_distribution<double> offset(0.0, total);
    double x = offset(rng);
    for (const Interval& p : v.pieces()) {
        if (x <= p.length()) {
            return Scalar{std::min(p.lo + x, p.hi)};
        }
        x -= p.length();
    }
    return Scalar{v.pieces().back().hi};
}

IndividualTable generate_individuals(const KnowledgeBase& kb, const GenerationSpec& spec) {
    kb.validate();
    if (spec.per_cluster == 0) {
        throw ValidationError("need at least one individual per cluster");
    }
    if (spec.overlap_target < 0.0 || spec.overlap_target >= 1.0) {
        throw ValidationError("overlap target must lie in [0, 1)");
    }
    if (spec.overlap_target > 0.0 && kb.n_assertions() < 2) {
        throw ValidationError("overlap needs at least two assertions to draw from");
    }

    IndividualTable t;
    t.variables = kb.variables;
    std::mt19937_64 rng(spec.seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (std::size_t a = 0; a < kb.n_assertions(); ++a) {
        std::uniform_int_distribution<std::size_t> other(0, kb.n_assertions() - 2);
        for (std::size_t r = 0; r < spec.per_cluster; ++r) {
            std::vector<MaybeScalar> row;
            for (std::size_t l = 0; l < kb.n_variables(); ++l) {
                std::size_t source = a;
                if (spec.overlap_target > 0.0 && coin(rng) < spec.overlap_target) {
                    std::size_t pick = other(rng);
                    source = pick < a ? pick : pick + 1;
                }
                row.push_back(draw_from(kb.assertions[source].values[l], rng));
            }
            t.rows.push_back(std::move(row));
            t.clusters.push_back(kb.assertions[a].name);
        }
    }
    t.validate();
    return t;
}

} // namespace minset

#include "minset/measures.hpp"

#include "minset/errors.hpp"

namespace minset {

std::string to_string(MeasureKind kind) {
    switch (kind) {
    case MeasureKind::boolean: return "boolean";
    case MeasureKind::jaccard: return "jaccard";
    case MeasureKind::de_carvalho: return "de-carvalho";
    case MeasureKind::ichino_yaguchi: return "ichino";
    }
    return "?";
}

namespace {

void require_same_kind(const ValueSet& u, const ValueSet& v) {
    if (!u.empty() && !v.empty() && u.kind() != v.kind()) {
        throw ValidationError("measure applied to value sets of different kinds");
    }
}

} // namespace

double comp(const ValueSet& u, const ValueSet& v) {
    require_same_kind(u, v);
    return intersect(u, v).empty() ? 1.0 : 0.0;
}

double g_jaccard(const ValueSet& u, const ValueSet& v) {
    require_same_kind(u, v);
    if (u.empty() && v.empty()) {
        return 0.0;
    }
    ValueSet common = intersect(u, v);
    ValueSet total = unite(u, v);
    double denom = mu(total);
    if (denom > 0.0) {
        return 1.0 - mu(common) / denom;
    }
    return 1.0 - static_cast<double>(common.point_count()) /
                     static_cast<double>(total.point_count());
}

double de_carvalho(const ValueSet& u, const ValueSet& v, const VariableSpec& spec) {
    require_same_kind(u, v);
    double agree = mu(intersect(u, v));
    double only_u = mu(intersect(u, complement(v, spec)));
    double only_v = mu(intersect(complement(u, spec), v));
    double denom = agree + only_u + only_v;
    if (denom == 0.0) {
        return 0.0;
    }
    return 1.0 - agree / denom;
}

double ichino_yaguchi(const ValueSet& u, const ValueSet& v, double gamma) {
    if (gamma < 0.0 || gamma > 0.5) {
        throw ValidationError("ichino gamma must lie in [0, 0.5]");
    }
    require_same_kind(u, v);
    ValueSet meet = intersect(u, v);
    bool numeric = u.kind() == VarKind::numeric || v.kind() == VarKind::numeric;
    ValueSet join = numeric ? convex_span(u, v) : unite(u, v);
    return mu(join) - mu(meet) + gamma * (2.0 * mu(meet) - mu(u) - mu(v));
}

double apply(const Measure& measure, const ValueSet& u, const ValueSet& v,
             const VariableSpec& spec) {
    switch (measure.kind) {
    case MeasureKind::boolean: return comp(u, v);
    case MeasureKind::jaccard: return g_jaccard(u, v);
    case MeasureKind::de_carvalho: return de_carvalho(u, v, spec);
    case MeasureKind::ichino_yaguchi: return ichino_yaguchi(u, v, measure.gamma);
    }
    throw ValidationError("unknown measure");
}

MeasureKind parse_measure(const std::string& name) {
    if (name == "boolean" || name == "comp") {
        return MeasureKind::boolean;
    }
    if (name == "jaccard") {
        return MeasureKind::jaccard;
    }
    if (name == "de-carvalho" || name == "de_carvalho") {
        return MeasureKind::de_carvalho;
    }
    if (name == "ichino" || name == "ichino-yaguchi" || name == "ichino_yaguchi") {
        return MeasureKind::ichino_yaguchi;
    }
    throw ValidationError("unknown measure '" + name + "'");
}

} // namespace minset

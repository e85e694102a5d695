#include "minset/bench.hpp"

#include <algorithm>
#include <fstream>
#include <random>

#include "minset/errors.hpp"
#include "minset/generator.hpp"
#include "minset/selection.hpp"
#include "minset/text.hpp"

namespace minset {

KnowledgeBase synthetic_kb(std::size_t n_objects, std::size_t n_variables,
                           std::uint64_t seed) {
    if (n_objects < 2 || n_variables == 0) {
        throw ValidationError("synthetic dataset needs >= 2 objects and >= 1 variable");
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> nudge(-2.0, 2.0);
    KnowledgeBase kb;
    for (std::size_t l = 0; l < n_variables; ++l) {
        kb.variables.push_back(VariableSpec::numeric("v_" + std::to_string(l), 0.0, 100.0));
    }
    for (std::size_t i = 0; i < n_objects; ++i) {
        std::size_t block = std::min<std::size_t>(i / 5, n_variables - 1);
        Assertion a;
        a.name = "o_" + std::to_string(i);
        for (std::size_t l = 0; l < n_variables; ++l) {
            if (l == block) {
                double c = 10.0 + 20.0 * static_cast<double>(i % 5) + nudge(rng);
                a.values.push_back(ValueSet::of_interval(std::max(0.0, c - 3.0),
                                                         std::min(100.0, c + 3.0)));
            } else {
                a.values.push_back(ValueSet::of_interval(0.0, 100.0));
            }
        }
        kb.assertions.push_back(std::move(a));
    }
    return kb;
}

std::vector<BenchRow> run_bench(const BenchConfig& config) {
    if (config.sizes.empty()) {
        throw ValidationError("no sizes to benchmark");
    }
    if (!std::is_sorted(config.sizes.begin(), config.sizes.end())) {
        throw ValidationError("benchmark sizes must be ascending");
    }
    std::vector<BenchRow> rows;
    for (std::size_t size : config.sizes) {
        KnowledgeBase base = synthetic_kb(size, config.n_variables, config.seed + size);
        GenerationSpec sample;
        sample.seed = config.seed + size;
        sample.overlap_target = 0.05;
        sample.per_cluster = std::max<std::size_t>(1, config.n_individuals / size);
        IndividualTable t = generate_individuals(base, sample);
        GenerationSpec objects;
        objects.kinds.assign(config.n_variables, OutputKind::interval);
        KnowledgeBase kb = generate_objects(t, objects);

        SelectionResult plus = minset_plus(kb, Measure{MeasureKind::jaccard, 0.5}, 1.0);
        SelectionResult partial = minset_partial_naive(kb, 1.0);
        SelectionResult boolean_run = minset(kb);
        rows.push_back({size, "minset-plus", plus.wall_ms, plus.dp_selected,
                        plus.selected.size()});
        rows.push_back({size, "minset-partial", partial.wall_ms, partial.dp_selected,
                        partial.selected.size()});
        rows.push_back({size, "minset", boolean_run.wall_ms, boolean_run.dp_selected,
                        boolean_run.selected.size()});
    }
    return rows;
}

void write_bench_csv(const std::vector<BenchRow>& rows, const std::string& path) {
    std::string out = "size,algorithm,wall_ms,dp_selected,n_selected\n";
    for (const BenchRow& row : rows) {
        out += std::to_string(row.size);
        out += ',';
        out += row.algorithm;
        out += ',';
        out += format_double(row.wall_ms);
        out += ',';
        out += format_double(row.dp_selected);
        out += ',';
        out += std::to_string(row.n_selected);
        out += '\n';
    }
    std::ofstream f(path);
    if (!f) {
        throw ValidationError("cannot write '" + path + "'");
    }
    f << out;
}

} // namespace minset

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "minset/model.hpp"

namespace minset {

struct BenchRow {
    std::size_t size = 0;
    std::string algorithm;
    double wall_ms = 0.0;
    double dp_selected = 0.0;
    std::size_t n_selected = 0;
};

struct BenchConfig {
    std::vector<std::size_t> sizes;
    std::size_t n_variables = 20;
    std::size_t n_individuals = 300;
    std::uint64_t seed = 1;
};

/// Seeded interval knowledge base. Objects come in blocks of five; each block
/// has a dedicated variable that separates its members with narrow bands while
/// every other variable sees the full range. Growing object counts therefore
/// pull more variables into the selection, which is what makes the timing
/// sweep informative.
KnowledgeBase synthetic_kb(std::size_t n_objects, std::size_t n_variables,
                           std::uint64_t seed);

/// For each size: synthesize a base, regenerate objects from sampled
/// individuals, and time the three algorithms on the result. Three rows per
/// size, deterministic except for the timings.
std::vector<BenchRow> run_bench(const BenchConfig& config);

void write_bench_csv(const std::vector<BenchRow>& rows, const std::string& path);

} // namespace minset

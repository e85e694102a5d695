#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "minset/bench.hpp"
#include "minset/discrimination.hpp"
#include "minset/errors.hpp"
#include "minset/generator.hpp"
#include "minset/io.hpp"
#include "minset/quality.hpp"
#include "minset/selection.hpp"
#include "minset/text.hpp"

namespace {

bool verbose() {
    const char* env = std::getenv("MINSET_VERBOSE");
    return env && *env && std::string(env) != "0";
}

void log_line(const std::string& message) {
    if (verbose()) {
        std::cerr << message << '\n';
    }
}

void print_trace(const minset::SelectionResult& r) {
    for (const minset::TraceStep& step : r.trace) {
        std::cout << to_string(step.action) << ' ' << step.variable_name
                  << "  odp=" << minset::format_double(step.odp)
                  << "  dp=" << minset::format_double(step.dp_after) << '\n';
    }
}

void print_summary(const minset::SelectionResult& r) {
    if (r.degenerate) {
        std::cout << "degenerate: " << r.note << '\n';
        return;
    }
    std::cout << "selected:";
    for (const std::string& name : r.selected_names) {
        std::cout << ' ' << name;
    }
    std::cout << "\ndp " << minset::format_double(r.dp_selected) << " of "
              << minset::format_double(r.dp_total) << ", reduction "
              << minset::format_double(r.reduction_pct) << "%\n";
}

int cmd_select(const std::string& input, const std::string& matrix_path,
               const std::string& algorithm, const std::string& measure_name,
               double theta, double gamma, bool trace, const std::string& output) {
    minset::Measure measure{minset::parse_measure(measure_name), gamma};
    minset::SelectionResult r;
    minset::RunMeta meta;
    meta.algorithm = algorithm;
    meta.measure = to_string(measure.kind);
    meta.theta = theta;
    meta.gamma = gamma;

    if (!matrix_path.empty()) {
        std::ifstream in(matrix_path);
        if (!in) {
            throw minset::ValidationError("cannot open '" + matrix_path + "'");
        }
        minset::DiscriminationMatrix m = minset::DiscriminationMatrix::load_csv(in);
        if (algorithm == "minset") {
            m = m.booleanized();
            meta.measure = "boolean";
        } else if (algorithm != "minset-plus") {
            throw CLI::ValidationError("--algorithm",
                                       algorithm + " needs a dataset, not a matrix");
        }
        meta.input = matrix_path;
        auto t0 = std::chrono::steady_clock::now();
        r = minset::select_on_matrix(m, algorithm == "minset" ? 1.0 : theta);
        auto t1 = std::chrono::steady_clock::now();
        r.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    } else {
        minset::KnowledgeBase kb = minset::read_dataset(input);
        meta.input = input;
        if (algorithm == "minset") {
            r = minset::minset(kb);
            meta.measure = "boolean";
        } else if (algorithm == "minset-plus") {
            r = minset::minset_plus(kb, measure, theta);
        } else if (algorithm == "minset-partial") {
            r = minset::minset_partial_naive(kb, theta);
            meta.measure = "jaccard";
        } else {
            throw CLI::ValidationError("--algorithm",
                                       "expected minset, minset-plus or minset-partial");
        }
    }

    if (trace) {
        print_trace(r);
    }
    print_summary(r);
    if (!output.empty()) {
        minset::write_selection_report(r, meta, output);
        log_line("wrote " + output);
    }
    return 0;
}

int cmd_gen_so(const std::string& individuals, const std::string& kinds_path,
               bool refine, const std::string& output) {
    auto kinds = minset::read_kinds(kinds_path);
    std::map<std::string, minset::VarKind> var_kinds;
    for (const auto& [name, kind] : kinds) {
        bool categorical = kind == minset::OutputKind::boolean_set ||
                           kind == minset::OutputKind::categorical_set;
        var_kinds[name] =
            categorical ? minset::VarKind::categorical : minset::VarKind::numeric;
    }
    minset::IndividualTable t =
        minset::read_individuals_inferred(individuals, var_kinds);
    std::size_t missing = 0;
    for (const auto& row : t.rows) {
        for (const auto& cell : row) {
            if (!cell) {
                ++missing;
            }
        }
    }
    if (missing > 0) {
        std::cerr << "imputed " << missing << " missing cells\n";
        t = minset::impute_missing(t);
    }
    minset::GenerationSpec spec;
    spec.refine = refine;
    for (const minset::VariableSpec& v : t.variables) {
        spec.kinds.push_back(kinds.at(v.name));
    }
    minset::KnowledgeBase kb = minset::generate_objects(t, spec);
    minset::write_dataset(kb, output);
    std::cout << "wrote " << kb.n_assertions() << " objects over "
              << kb.n_variables() << " variables to " << output << '\n';
    return 0;
}

int cmd_gen_ind(const std::string& objects, std::size_t count, double overlap,
                std::uint64_t seed, const std::string& output) {
    minset::KnowledgeBase kb = minset::read_dataset(objects);
    minset::GenerationSpec spec;
    spec.per_cluster = count;
    spec.overlap_target = overlap;
    spec.seed = seed;
    minset::IndividualTable t = minset::generate_individuals(kb, spec);
    minset::write_individuals(t, output);
    std::cout << "wrote " << t.n_rows() << " individuals to " << output << '\n';
    return 0;
}

int cmd_quality(const std::string& objects, const std::string& individuals,
                const std::string& selection, const std::string& output) {
    minset::KnowledgeBase original = minset::read_dataset(objects);
    minset::IndividualTable t = minset::read_individuals(individuals, original.variables);

    minset::SelectionResult r;
    minset::KnowledgeBase reduced;
    if (!selection.empty()) {
        r = minset::read_selection_report(selection);
        std::vector<std::size_t> indices;
        for (const std::string& name : r.selected_names) {
            auto idx = original.variable_index(name);
            if (!idx) {
                throw minset::ValidationError("selected variable '" + name +
                                              "' is not in the dataset");
            }
            indices.push_back(*idx);
        }
        reduced = original.restrict_to(indices);
    } else {
        reduced = original;
        for (std::size_t l = 0; l < original.n_variables(); ++l) {
            r.selected.push_back(l);
            r.selected_names.push_back(original.variables[l].name);
        }
        minset::DiscriminationMatrix m = minset::DiscriminationMatrix::build(
            original, minset::Measure{minset::MeasureKind::jaccard, 0.5});
        r.dp_total = m.dp_total();
        r.dp_selected = r.dp_total;
        r.reduction_pct = 0.0;
    }

    minset::QualityReport q = minset::quality_report(original, r, reduced, t);
    std::vector<std::string> names;
    std::vector<std::vector<std::size_t>> extents;
    for (const minset::Assertion& a : reduced.assertions) {
        names.push_back(a.name);
        extents.push_back(minset::real_extent(a, reduced.variables, t));
    }
    minset::write_quality_report(q, names, extents, t.clusters, output);
    std::cout << "extent discrimination "
              << minset::format_double(q.extent_discrimination_pct) << ", overlap "
              << minset::format_double(q.overlap_pct) << ", wrote " << output << '\n';
    return 0;
}

int cmd_bench(const std::string& sizes_text, std::size_t vars, std::size_t individuals,
              std::uint64_t seed, const std::string& output) {
    minset::BenchConfig config;
    std::stringstream in(sizes_text);
    std::string token;
    while (std::getline(in, token, ',')) {
        if (token.empty()) {
            continue;
        }
        if (token.find_first_not_of("0123456789") != std::string::npos) {
            throw CLI::ValidationError("--sizes", "'" + token + "' is not a count");
        }
        config.sizes.push_back(static_cast<std::size_t>(std::stoul(token)));
    }
    config.n_variables = vars;
    config.n_individuals = individuals;
    config.seed = seed;
    auto rows = minset::run_bench(config);
    minset::write_bench_csv(rows, output);
    std::cout << "wrote " << rows.size() << " rows to " << output << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Feature selection for boolean symbolic objects"};
    app.require_subcommand(1);

    std::string input;
    std::string matrix_path;
    std::string algorithm = "minset-plus";
    std::string measure = "jaccard";
    double theta = 1.0;
    double gamma = 0.5;
    bool trace = false;
    std::string output;

    CLI::App* select = app.add_subcommand("select", "Select a variable subset");
    auto* input_opt = select->add_option("--input", input, "Dataset JSON");
    auto* matrix_opt =
        select->add_option("--matrix", matrix_path, "Precomputed matrix CSV");
    input_opt->excludes(matrix_opt);
    select->add_option("--algorithm", algorithm, "minset, minset-plus or minset-partial")
        ->check(CLI::IsMember({"minset", "minset-plus", "minset-partial"}));
    select->add_option("--measure", measure, "boolean, jaccard, de-carvalho or ichino")
        ->check(CLI::IsMember({"boolean", "jaccard", "de-carvalho", "ichino"}));
    select->add_option("--theta", theta, "Stop at this fraction of total power");
    select->add_option("--gamma", gamma, "ichino weight in [0, 0.5]");
    select->add_flag("--trace", trace, "Print each selection step");
    select->add_option("--output", output, "Report JSON path");

    std::string individuals;
    std::string kinds_path;
    bool refine = false;
    CLI::App* gen_so = app.add_subcommand("gen-so", "Generalize individuals to objects");
    gen_so->add_option("--individuals", individuals, "Individuals CSV")->required();
    gen_so->add_option("--kinds", kinds_path, "Output-kind JSON")->required();
    gen_so->add_flag("--refine", refine, "Split intervals at foreign values");
    gen_so->add_option("--output", output, "Dataset JSON path")->required();

    std::string objects;
    std::size_t count = 10;
    double overlap = 0.0;
    std::uint64_t seed = 1;
    CLI::App* gen_ind = app.add_subcommand("gen-ind", "Sample individuals from objects");
    gen_ind->add_option("--objects", objects, "Dataset JSON")->required();
    gen_ind->add_option("--count", count, "Individuals per cluster");
    gen_ind->add_option("--overlap", overlap, "Chance of drawing from a foreign object");
    gen_ind->add_option("--seed", seed, "Random seed");
    gen_ind->add_option("--output", output, "Individuals CSV path")->required();

    std::string selection;
    CLI::App* quality = app.add_subcommand("quality", "Score objects against individuals");
    quality->add_option("--objects", objects, "Dataset JSON")->required();
    quality->add_option("--individuals", individuals, "Individuals CSV")->required();
    quality->add_option("--selection", selection, "Selection report JSON");
    quality->add_option("--output", output, "Quality JSON path")->required();

    std::string sizes = "10,20,30,40,50,60,70,80,90,100";
    std::size_t vars = 20;
    std::size_t bench_individuals = 300;
    CLI::App* bench = app.add_subcommand("bench", "Time the algorithms across sizes");
    bench->add_option("--sizes", sizes, "Comma-separated object counts, ascending");
    bench->add_option("--vars", vars, "Variables per dataset");
    bench->add_option("--individuals", bench_individuals, "Individuals per dataset");
    bench->add_option("--seed", seed, "Random seed");
    bench->add_option("--output", output, "Benchmark CSV path")->required();

    try {
        app.parse(argc, argv);
        if (select->parsed()) {
            if (input.empty() && matrix_path.empty()) {
                throw CLI::RequiredError("--input or --matrix");
            }
            return cmd_select(input, matrix_path, algorithm, measure, theta, gamma,
                              trace, output);
        }
        if (gen_so->parsed()) {
            return cmd_gen_so(individuals, kinds_path, refine, output);
        }
        if (gen_ind->parsed()) {
            return cmd_gen_ind(objects, count, overlap, seed, output);
        }
        if (quality->parsed()) {
            return cmd_quality(objects, individuals, selection, output);
        }
        if (bench->parsed()) {
            return cmd_bench(sizes, vars, bench_individuals, seed, output);
        }
        return 1;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    } catch (const minset::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
}

#include "doctest.h"

#include <fstream>

#include "minset/errors.hpp"
#include "minset/generator.hpp"
#include "minset/io.hpp"
#include "minset/quality.hpp"
#include "minset/selection.hpp"
#include "testutil.hpp"

using namespace minset;

namespace {

KnowledgeBase people_kb() {
    KnowledgeBase kb;
    kb.variables = {VariableSpec::categorical("height", {"medium", "small", "tall"}),
                    VariableSpec::categorical("hair", {"black", "brown", "grey"})};
    kb.assertions = {
        {"a_1", {ValueSet::of_categories({"tall"}), ValueSet::of_categories({"brown"})}},
        {"a_2",
         {ValueSet::of_categories({"medium", "tall"}), ValueSet::of_categories({"black"})}},
        {"a_3",
         {ValueSet::of_categories({"small"}), ValueSet::of_categories({"black", "brown"})}}};
    return kb;
}

IndividualTable people_table() {
    return read_individuals(std::string(FIXTURES_DIR) + "/people_individuals.csv",
                            people_kb().variables);
}

KnowledgeBase pair_kb() {
    return read_dataset(std::string(FIXTURES_DIR) + "/people_pair.json");
}

} // namespace

TEST_CASE("real extents over the observed people") {
    auto kb = pair_kb();
    auto t = people_table();
    CHECK(real_extent(kb.assertions[0], kb.variables, t) ==
          std::vector<std::size_t>{0, 2});
    CHECK(real_extent(kb.assertions[1], kb.variables, t) == std::vector<std::size_t>{2});

    SUBCASE("a reduced assertion matches columns by name") {
        auto hair_only = kb.restrict_to({1});
        CHECK(real_extent(hair_only.assertions[0], hair_only.variables, t) ==
              std::vector<std::size_t>{0, 2});
    }
    SUBCASE("an unrestricted assertion takes everyone") {
        Assertion all{"all",
                      {ValueSet::of_categories({"medium", "small", "tall"}),
                       ValueSet::of_categories({"black", "brown", "grey"})}};
        CHECK(real_extent(all, kb.variables, t).size() == 3);
    }
    SUBCASE("an empty event takes no one") {
        Assertion none{"none",
                       {ValueSet::empty_set(VarKind::categorical),
                        ValueSet::of_categories({"black", "brown", "grey"})}};
        CHECK(real_extent(none, kb.variables, t).empty());
    }
    SUBCASE("errors") {
        Assertion a = kb.assertions[0];
        std::vector<VariableSpec> wrong = {VariableSpec::categorical("shoe", {"flat"}),
                                           kb.variables[1]};
        CHECK_THROWS_AS(real_extent(a, wrong, t), ValidationError);
        auto gap = t;
        gap.rows[1][0] = std::nullopt;
        CHECK_THROWS_AS(real_extent(a, kb.variables, gap), ValidationError);
    }
}

TEST_CASE("extent discrimination hand values") {
    CHECK(extent_discrimination(pair_kb(), people_table()) == 0.5);
    CHECK(extent_discrimination(people_kb(), people_table()) == 1.0);

    SUBCASE("identical extents score 0") {
        auto kb = pair_kb();
        kb.assertions[1] = kb.assertions[0];
        kb.assertions[1].name = "q_2";
        CHECK(extent_discrimination(kb, people_table()) == 0.0);
    }
    SUBCASE("a pair of empty extents counts as discriminated") {
        auto kb = pair_kb();
        for (auto& a : kb.assertions) {
            a.values[0] = ValueSet::empty_set(VarKind::categorical);
        }
        CHECK(extent_discrimination(kb, people_table()) == 1.0);
    }
    SUBCASE("input checks") {
        auto kb = pair_kb();
        kb.assertions.resize(1);
        CHECK_THROWS_AS(extent_discrimination(kb, people_table()), ValidationError);
        IndividualTable empty;
        empty.variables = pair_kb().variables;
        CHECK_THROWS_AS(extent_discrimination(pair_kb(), empty), ValidationError);
    }
}

TEST_CASE("overlap percentage") {
    CHECK(overlap_percentage(people_kb()) == 0.0);

    KnowledgeBase kb;
    kb.variables = {VariableSpec::numeric("x", 0.0, 10.0)};
    kb.assertions = {{"a_1", {ValueSet::of_interval(0.0, 2.0)}},
                     {"a_2", {ValueSet::of_interval(1.0, 3.0)}},
                     {"a_3", {ValueSet::of_interval(5.0, 6.0)}}};
    CHECK(overlap_percentage(kb) == doctest::Approx(1.0 / 3.0));

    kb.assertions.resize(1);
    CHECK_THROWS_AS(overlap_percentage(kb), ValidationError);
}

TEST_CASE("overlap read off a matrix") {
    std::ifstream in(std::string(FIXTURES_DIR) + "/grid.csv");
    REQUIRE(in.good());
    auto m = DiscriminationMatrix::load_csv(in);
    CHECK(overlap_from_matrix(m) == 1.0);

    auto people = DiscriminationMatrix::build(people_kb(), {MeasureKind::boolean, 0.5});
    CHECK(overlap_from_matrix(people) == 0.0);
}

TEST_CASE("zero overlap is exactly full boolean coverage") {
    testutil::Rng rng(137);
    for (int t = 0; t < 120; ++t) {
        auto kb = testutil::random_kb(rng);
        auto r = minset::minset(kb);
        bool full = std::abs(r.dp_selected - static_cast<double>(kb.n_pairs())) <= 1e-9;
        CHECK((overlap_percentage(kb) == 0.0) == full);
    }
}

TEST_CASE("restriction only grows real extents") {
    testutil::Rng rng(139);
    for (int t = 0; t < 40; ++t) {
        auto kb = testutil::random_kb(rng, 5, 6, false);
        GenerationSpec gen;
        gen.seed = 500 + static_cast<std::uint64_t>(t);
        gen.per_cluster = 6;
        gen.overlap_target = 0.25;
        auto table = generate_individuals(kb, gen);

        std::vector<std::size_t> keep;
        for (std::size_t l = 0; l < kb.n_variables(); ++l)
            if (rng.coin(0.6)) keep.push_back(l);
        if (keep.empty()) keep.push_back(0);
        auto reduced = kb.restrict_to(keep);

        for (std::size_t i = 0; i < kb.n_assertions(); ++i) {
            auto full = real_extent(kb.assertions[i], kb.variables, table);
            auto loose = real_extent(reduced.assertions[i], reduced.variables, table);
            CHECK(std::includes(loose.begin(), loose.end(), full.begin(), full.end()));
        }
    }
}

TEST_CASE("full-coverage selection preserves extent discrimination") {
    testutil::Rng rng(149);
    int done = 0;
    while (done < 25) {
        auto kb = testutil::random_kb(rng, 5, 6, false);
        if (overlap_percentage(kb) != 0.0) continue;
        auto r = minset::minset(kb);
        REQUIRE(!r.degenerate);
        auto reduced = kb.restrict_to(r.selected);

        GenerationSpec gen;
        gen.seed = 900 + static_cast<std::uint64_t>(done);
        gen.per_cluster = 5;
        gen.overlap_target = 0.3;
        auto table = generate_individuals(kb, gen);

        double before = extent_discrimination(kb, table);
        double after = extent_discrimination(reduced, table);
        CHECK(before == 1.0);
        CHECK(after == 1.0);
        ++done;
    }
}

TEST_CASE("quality report on the people run") {
    auto kb = people_kb();
    auto r = minset::minset(kb);
    auto reduced = kb.restrict_to(r.selected);
    auto q = quality_report(kb, r, reduced, people_table());

    CHECK(q.overlap_pct == 0.0);
    CHECK(q.extent_discrimination_pct == 1.0);
    CHECK(q.extent_intersection_avg == 0.0);
    CHECK(q.extent_discrimination_original_pct == 1.0);
    CHECK(q.dp_selected == 3.0);
    CHECK(q.dp_total == 3.0);
    CHECK(q.reduction_pct == 0.0);
    CHECK(!q.degenerate);
    REQUIRE(q.pair_labels.size() == 3);
    CHECK(q.pair_labels[0] == "(a_1,a_2)");
    REQUIRE(q.pair_extent_discrimination.size() == 3);
    for (double d : q.pair_extent_discrimination) CHECK(d == 1.0);
}

TEST_CASE("the two extent figures always sum to one") {
    testutil::Rng rng(151);
    for (int t = 0; t < 30; ++t) {
        auto kb = testutil::random_kb(rng, 5, 6, false);
        GenerationSpec gen;
        gen.seed = 300 + static_cast<std::uint64_t>(t);
        gen.per_cluster = 4;
        gen.overlap_target = 0.2;
        auto table = generate_individuals(kb, gen);
        auto r = minset_plus(kb, {MeasureKind::jaccard, 0.5}, 1.0);
        auto reduced = kb.restrict_to(r.selected);
        auto q = quality_report(kb, r, reduced, table);
        CHECK(std::abs(q.extent_discrimination_pct + q.extent_intersection_avg - 1.0) <= 1e-9);
        CHECK(std::abs(q.extent_discrimination_original_pct + q.extent_intersection_avg_original -
                       1.0) <= 1e-9);
        CHECK(q.overlap_pct >= 0.0);
        CHECK(q.overlap_pct <= 1.0);
    }
}

TEST_CASE("a degenerate selection reports merged extents") {
    KnowledgeBase kb;
    kb.variables = {VariableSpec::categorical("c", {"x", "y"})};
    kb.assertions = {{"a_1", {ValueSet::of_categories({"x"})}},
                     {"a_2", {ValueSet::of_categories({"x"})}}};
    auto r = minset::minset(kb);
    REQUIRE(r.degenerate);
    auto reduced = kb.restrict_to(r.selected);

    IndividualTable t;
    t.variables = kb.variables;
    t.rows = {{Scalar{std::string("x")}}, {Scalar{std::string("x")}}};
    t.clusters = {"a_1", "a_2"};

    auto q = quality_report(kb, r, reduced, t);
    CHECK(q.degenerate);
    CHECK(q.overlap_pct == 1.0);
    CHECK(q.extent_discrimination_pct == 0.0);
    CHECK(q.extent_intersection_avg == 1.0);
}

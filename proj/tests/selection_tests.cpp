#include "doctest.h"

#include <fstream>

#include "minset/errors.hpp"
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

DiscriminationMatrix grid_matrix() {
    std::ifstream in(std::string(FIXTURES_DIR) + "/grid.csv");
    REQUIRE(in.good());
    return DiscriminationMatrix::load_csv(in);
}

} // namespace

TEST_CASE("total discrimination keeps both person variables") {
    auto r = minset::minset(people_kb());
    CHECK(r.selected == std::vector<std::size_t>{0, 1});
    CHECK(r.selected_names == std::vector<std::string>{"height", "hair"});
    CHECK(r.dp_selected == 3.0);
    CHECK(r.dp_total == 3.0);
    CHECK(r.reduction_pct == 0.0);
    CHECK(!r.degenerate);
    REQUIRE(r.trace.size() == 2);
    CHECK(r.trace[0].action == StepAction::indispensable);
    CHECK(r.trace[0].variable_name == "height");
    CHECK(r.trace[0].odp == 2.0);
    CHECK(r.trace[1].variable_name == "hair");
    CHECK(r.trace[1].odp == 1.0);
    CHECK(r.wall_ms >= 0.0);
}

TEST_CASE("partial discrimination agrees on the person base") {
    auto plus = minset_plus(people_kb(), {MeasureKind::jaccard, 0.5}, 1.0);
    auto naive = minset_partial_naive(people_kb(), 1.0);
    CHECK(plus.selected == std::vector<std::size_t>{0, 1});
    CHECK(plus.dp_selected == doctest::Approx(3.0));
    CHECK(naive.selected == plus.selected);
    CHECK(naive.dp_selected == doctest::Approx(plus.dp_selected).epsilon(1e-12));
}

TEST_CASE("grid selection follows the worked sequence") {
    auto m = grid_matrix();
    auto r = select_on_matrix(m, 1.0);
    CHECK(r.selected == std::vector<std::size_t>{0, 2, 3});
    CHECK(r.selected_names == std::vector<std::string>{"y_1", "y_3", "y_4"});
    CHECK(std::abs(r.dp_selected - 3.6) <= 1e-9);
    CHECK(std::abs(r.dp_total - 3.6) <= 1e-9);
    CHECK(r.reduction_pct == doctest::Approx(40.0));

    REQUIRE(r.trace.size() == 3);
    CHECK(r.trace[0].action == StepAction::indispensable);
    CHECK(r.trace[0].variable_name == "y_1");
    CHECK(r.trace[1].action == StepAction::indispensable);
    CHECK(r.trace[1].variable_name == "y_3");
    CHECK(std::abs(r.trace[1].dp_after - 2.5) <= 1e-9);
    CHECK(r.trace[2].action == StepAction::select);
    CHECK(r.trace[2].variable_name == "y_4");
    CHECK(std::abs(r.trace[2].odp - 1.1) <= 1e-9);
}

TEST_CASE("the odp tie on the grid falls to the stronger standalone row") {
    auto m = grid_matrix();
    m.select(0);
    m.select(2);
    CHECK(std::abs(m.odp(1) - m.odp(3)) <= 1e-9);
    CHECK(m.dp_variable(3) > m.dp_variable(1) + kTol);
}

TEST_CASE("select_on_matrix wants a fresh matrix") {
    auto m = grid_matrix();
    m.select(4);
    CHECK_THROWS_AS(select_on_matrix(m, 1.0), std::logic_error);
}

TEST_CASE("a later pick can make an early pick redundant") {
    auto m = DiscriminationMatrix::from_cells(
        {"broad", "left", "left2", "right", "right2"}, {"a", "b", "c", "d", "e"},
        std::vector<std::vector<double>>{{0.6, 0.6, 0.6, 0.6, 0, 0, 0, 0, 0, 0},
                                         {1, 1, 0, 0, 0, 0, 0, 0, 0, 0},
                                         {1, 1, 0, 0, 0, 0, 0, 0, 0, 0},
                                         {0, 0, 1, 1, 0, 0, 0, 0, 0, 0},
                                         {0, 0, 1, 1, 0, 0, 0, 0, 0, 0}});
    auto r = select_on_matrix(m, 1.0);
    CHECK(r.selected == std::vector<std::size_t>{1, 3});
    CHECK(r.dp_selected == doctest::Approx(4.0));

    REQUIRE(r.trace.size() == 4);
    CHECK(r.trace[0].action == StepAction::select);
    CHECK(r.trace[0].variable_name == "broad");
    CHECK(r.trace[1].variable_name == "left");
    CHECK(r.trace[2].variable_name == "right");
    CHECK(r.trace[3].action == StepAction::eliminate);
    CHECK(r.trace[3].variable_name == "broad");
    CHECK(r.trace[3].dp_after == doctest::Approx(4.0));
}

TEST_CASE("identical rows collapse to a single variable") {
    KnowledgeBase kb;
    kb.variables = {VariableSpec::numeric("u", 0.0, 10.0), VariableSpec::numeric("v", 0.0, 10.0),
                    VariableSpec::numeric("w", 0.0, 10.0)};
    kb.assertions = {{"a_1",
                      {ValueSet::of_interval(0.0, 1.0), ValueSet::of_interval(0.0, 1.0),
                       ValueSet::of_interval(0.0, 1.0)}},
                     {"a_2",
                      {ValueSet::of_interval(2.0, 3.0), ValueSet::of_interval(2.0, 3.0),
                       ValueSet::of_interval(2.0, 3.0)}}};
    auto r = minset::minset(kb);
    CHECK(r.selected == std::vector<std::size_t>{0});
    CHECK(r.dp_selected == 1.0);
    CHECK(r.reduction_pct == doctest::Approx(100.0 * (1.0 - 1.0 / 3.0)));
}

TEST_CASE("a base with nothing to separate degenerates cleanly") {
    KnowledgeBase kb;
    kb.variables = {VariableSpec::categorical("c", {"x", "y"})};
    kb.assertions = {{"a_1", {ValueSet::of_categories({"x"})}},
                     {"a_2", {ValueSet::of_categories({"x"})}}};
    for (auto make : {+[](const KnowledgeBase& b) { return minset::minset(b); },
                      +[](const KnowledgeBase& b) {
                          return minset_plus(b, {MeasureKind::jaccard, 0.5}, 1.0);
                      },
                      +[](const KnowledgeBase& b) { return minset_partial_naive(b, 1.0); }}) {
        auto r = make(kb);
        CHECK(r.degenerate);
        CHECK(r.selected.empty());
        CHECK(r.dp_selected == 0.0);
        CHECK(r.reduction_pct == 0.0);
        CHECK(!r.note.empty());
        CHECK(r.trace.empty());
    }
}

TEST_CASE("theta is validated and honored") {
    auto m = grid_matrix();
    CHECK_THROWS_AS(select_on_matrix(m, 0.0), ValidationError);
    auto m2 = grid_matrix();
    CHECK_THROWS_AS(select_on_matrix(m2, 1.2), ValidationError);
    CHECK_THROWS_AS(minset_plus(people_kb(), {MeasureKind::jaccard, 0.5}, -0.5),
                    ValidationError);

    auto half = grid_matrix();
    auto r = select_on_matrix(half, 0.5);
    CHECK(r.selected == std::vector<std::size_t>{0, 2});
    CHECK(std::abs(r.dp_selected - 2.5) <= 1e-9);
}

TEST_CASE("lowering theta never selects more variables") {
    testutil::Rng rng(83);
    for (int t = 0; t < 60; ++t) {
        auto kb = testutil::random_kb(rng);
        auto full = minset_plus(kb, {MeasureKind::jaccard, 0.5}, 1.0);
        auto nearly = minset_plus(kb, {MeasureKind::jaccard, 0.5}, 0.99);
        CHECK(nearly.selected.size() <= full.selected.size());
        CHECK(nearly.dp_selected <= full.dp_selected + 1e-9);
        if (!nearly.degenerate) {
            CHECK(nearly.dp_selected >= 0.99 * nearly.dp_total - 1e-9);
        }
    }
}

TEST_CASE("matrix and naive selection stay in lockstep") {
    testutil::Rng rng(89);
    for (int t = 0; t < 60; ++t) {
        auto kb = testutil::random_kb(rng);
        double theta = rng.coin(0.3) ? 0.9 : 1.0;
        auto plus = minset_plus(kb, {MeasureKind::jaccard, 0.5}, theta);
        auto naive = minset_partial_naive(kb, theta);
        CHECK(plus.selected == naive.selected);
        CHECK(std::abs(plus.dp_selected - naive.dp_selected) <= 1e-9);
        CHECK(std::abs(plus.dp_total - naive.dp_total) <= 1e-9);
        CHECK(plus.degenerate == naive.degenerate);
        REQUIRE(plus.trace.size() == naive.trace.size());
        for (std::size_t s = 0; s < plus.trace.size(); ++s) {
            CHECK(plus.trace[s].action == naive.trace[s].action);
            CHECK(plus.trace[s].variable == naive.trace[s].variable);
        }
    }
}

TEST_CASE("the boolean specialization is minset") {
    testutil::Rng rng(97);
    for (int t = 0; t < 60; ++t) {
        auto kb = testutil::random_kb(rng);
        auto total = minset::minset(kb);
        auto via_plus = minset_plus(kb, {MeasureKind::boolean, 0.5}, 1.0);
        CHECK(total.selected == via_plus.selected);
        CHECK(total.dp_selected == via_plus.dp_selected);
        CHECK(total.degenerate == via_plus.degenerate);
    }
}

TEST_CASE("full-theta runs cover everything and carry no passengers") {
    testutil::Rng rng(101);
    Measure measure{MeasureKind::jaccard, 0.5};
    for (int t = 0; t < 60; ++t) {
        auto kb = testutil::random_kb(rng);
        auto r = minset_plus(kb, measure, 1.0);
        if (r.degenerate) continue;
        CHECK(std::abs(r.dp_selected - r.dp_total) <= 1e-9);
        for (std::size_t k = 0; k < r.selected.size(); ++k) {
            std::vector<std::size_t> rest;
            for (std::size_t q : r.selected)
                if (q != r.selected[k]) rest.push_back(q);
            CHECK(testutil::oracle_odp(kb, measure, rest, r.selected[k]) > kTol);
        }
    }
}

TEST_CASE("greedy reaches the exhaustive optimum's power on small bases") {
    testutil::Rng rng(103);
    Measure measure{MeasureKind::jaccard, 0.5};
    for (int t = 0; t < 40; ++t) {
        auto kb = testutil::random_kb(rng, 6, 6);
        auto r = minset_plus(kb, measure, 1.0);
        if (r.degenerate) continue;
        std::size_t floor = testutil::oracle_min_cover_size(kb, measure);
        CHECK(r.selected.size() >= floor);
        CHECK(std::abs(r.dp_selected - r.dp_total) <= 1e-9);
    }
}

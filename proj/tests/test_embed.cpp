#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <limits>
#include <numeric>
#include <vector>

#include "unn/dataset.hpp"
#include "unn/embed.hpp"
#include "unn/errors.hpp"
#include "unn/generate.hpp"
#include "unn/knn.hpp"
#include "unn/rng.hpp"

namespace {

unn::Dataset line_data(std::initializer_list<double> values) {
    unn::Matrix m(static_cast<Eigen::Index>(values.size()), 1);
    Eigen::Index i = 0;
    for (const double v : values) {
        m(i++, 0) = v;
    }
    return unn::Dataset(std::move(m));
}

} // namespace

TEST_CASE("insert_at shifts everything at and after the slot") {
    const unn::LatentOrdering base({5, 7});
    CHECK(unn::insert_at(base, 9, 0).patterns_by_slot() == std::vector<int>{9, 5, 7});
    CHECK(unn::insert_at(base, 9, 1).patterns_by_slot() == std::vector<int>{5, 9, 7});
    CHECK(unn::insert_at(base, 9, 2).patterns_by_slot() == std::vector<int>{5, 7, 9});
    CHECK(base.patterns_by_slot() == std::vector<int>{5, 7}); // untouched

    CHECK_THROWS_AS(unn::insert_at(base, 5, 0), std::invalid_argument);
    CHECK_THROWS_AS(unn::insert_at(base, 9, 3), std::invalid_argument);
    CHECK_THROWS_AS(unn::insert_at(base, -1, 0), std::invalid_argument);
}

TEST_CASE("candidate_slots_unn1 lists every insert-before position") {
    CHECK(unn::candidate_slots_unn1(unn::LatentOrdering()) == std::vector<int>{0});
    CHECK(unn::candidate_slots_unn1(unn::LatentOrdering({2, 0, 1})) ==
          std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("candidate_slots_unn2 flanks the data-space nearest embedded pattern") {
    const unn::Dataset data = line_data({0.0, 10.0, 4.0, 7.0, 5.0});
    const unn::LatentOrdering partial({0, 1}); // slots: 0 -> p0 (y=0), 1 -> p1 (y=10)

    CHECK(unn::candidate_slots_unn2(partial, data.pattern(2), data) == std::vector<int>{0, 1});
    CHECK(unn::candidate_slots_unn2(partial, data.pattern(3), data) == std::vector<int>{1, 2});
    // equidistant: the smaller pattern index anchors
    CHECK(unn::candidate_slots_unn2(partial, data.pattern(4), data) == std::vector<int>{0, 1});

    CHECK_THROWS_AS(unn::candidate_slots_unn2(unn::LatentOrdering(), data.pattern(2), data),
                    std::invalid_argument);
}

TEST_CASE("score_insertion: first insertion scores zero") {
    const unn::Dataset data = line_data({3.0, 4.0});
    unn::EmbedConfig config;
    config.k = 1;
    CHECK(unn::score_insertion(unn::LatentOrdering(), 0, 0, data, config) == 0.0);
}

TEST_CASE("score_insertion: pointwise criterion on a small line") {
    const unn::Dataset data = line_data({0.0, 10.0, 4.0});
    const unn::LatentOrdering partial({0, 1});
    unn::EmbedConfig config;
    config.k = 1;
    // inserting p2 (y=4): slots 0 and 1 reconstruct from y0=0, slot 2 from y1=10
    CHECK(unn::score_insertion(partial, 2, 0, data, config) == 16.0);
    CHECK(unn::score_insertion(partial, 2, 1, data, config) == 16.0);
    CHECK(unn::score_insertion(partial, 2, 2, data, config) == 36.0);

    config.k = 2;
    // both embedded patterns are neighbors wherever p2 lands
    for (int slot = 0; slot <= 2; ++slot) {
        CHECK(unn::score_insertion(partial, 2, slot, data, config) == 1.0);
    }
}

TEST_CASE("score_insertion: perfect midpoint scores exactly zero") {
    const unn::Dataset data = line_data({0.0, 2.0, 1.0});
    const unn::LatentOrdering partial({0, 1});
    unn::EmbedConfig config;
    config.k = 2;
    CHECK(unn::score_insertion(partial, 2, 1, data, config) == 0.0);
}

TEST_CASE("score_insertion: full-dsre criterion averages over the line") {
    const unn::Dataset data = line_data({0.0, 10.0, 4.0});
    const unn::LatentOrdering partial({0, 1});
    unn::EmbedConfig config;
    config.k = 1;
    config.criterion = unn::Criterion::FullDsre;
    // line 2,0,1: p2 from p0 -> 16; p0's flanking tie resolves to the smaller
    // pattern index, p1 -> 100; p1 from p0 -> 100
    CHECK(unn::score_insertion(partial, 2, 0, data, config) ==
          doctest::Approx((16.0 + 100.0 + 100.0) / 3.0));
    // line 0,1,2 with k=1: p0 from min-index rule... verified against dsre()
    const unn::LatentOrdering complete({0, 1, 2});
    CHECK(unn::score_insertion(partial, 2, 2, data, config) == unn::dsre(complete, data, 1));
}

TEST_CASE("score_insertion: argument validation") {
    const unn::Dataset data = line_data({0.0, 1.0, 2.0});
    const unn::LatentOrdering partial({0, 1});
    unn::EmbedConfig config;
    CHECK_THROWS_AS(unn::score_insertion(partial, 0, 0, data, config), std::invalid_argument);
    CHECK_THROWS_AS(unn::score_insertion(partial, 3, 0, data, config), std::invalid_argument);
    CHECK_THROWS_AS(unn::score_insertion(partial, 2, 3, data, config), std::invalid_argument);
    config.k = 0;
    CHECK_THROWS_AS(unn::score_insertion(partial, 2, 0, data, config), std::invalid_argument);
}

TEST_CASE("unn2 candidates are a subset of unn1 and never beat its best score") {
    unn::SplitMix64 rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 4 + static_cast<int>(rng.next() % 5);
        const int d = 1 + static_cast<int>(rng.next() % 3);
        unn::Matrix m(n, d);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < d; ++j) {
                m(i, j) = rng.normal(0.0, 1.0);
            }
        }
        const unn::Dataset data(std::move(m));

        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        rng.shuffle(perm);
        const int embedded = 1 + static_cast<int>(rng.next() % static_cast<unsigned>(n - 1));
        const unn::LatentOrdering partial(
            std::vector<int>(perm.begin(), perm.begin() + embedded));
        const int pattern = perm[static_cast<std::size_t>(embedded)];

        unn::EmbedConfig config;
        config.k = 1 + static_cast<int>(rng.next() % 3);

        const std::vector<int> all = unn::candidate_slots_unn1(partial);
        const std::vector<int> two = unn::candidate_slots_unn2(partial, data.pattern(pattern), data);

        REQUIRE(two.size() == 2);
        for (const int c : two) {
            CHECK(std::find(all.begin(), all.end(), c) != all.end());
        }

        double best1 = std::numeric_limits<double>::infinity();
        for (const int c : all) {
            best1 = std::min(best1, unn::score_insertion(partial, pattern, c, data, config));
        }
        double best2 = std::numeric_limits<double>::infinity();
        for (const int c : two) {
            best2 = std::min(best2, unn::score_insertion(partial, pattern, c, data, config));
        }
        CHECK(best1 <= best2);
    }
}

TEST_CASE("embed: greedy choice takes the smallest slot among ties") {
    const unn::Dataset data = line_data({0.0, 10.0, 4.0});
    unn::EmbedConfig config;
    config.k = 1;
    const unn::EmbedResult result = unn::embed(data, config);
    REQUIRE(result.trace.size() == 3);
    // p1 against the single-pattern line scores 100 at both slots: tie -> 0
    CHECK(result.trace[1].chosen_slot == 0);
    CHECK(result.trace[1].score == 100.0);
    // p2 on the line 1,0 scores 36 / 16 / 16: first strict minimum wins
    CHECK(result.trace[2].chosen_slot == 1);
    CHECK(result.trace[2].score == 16.0);
    CHECK(result.ordering.patterns_by_slot() == std::vector<int>{1, 2, 0});
}

TEST_CASE("embed: bootstrap entry and trace shape") {
    const unn::Dataset data = unn::generate({unn::Shape::S2D, 30, 0.05, 17});
    for (const unn::Strategy strategy : {unn::Strategy::Unn1, unn::Strategy::Unn2}) {
        unn::EmbedConfig config;
        config.k = 3;
        config.strategy = strategy;
        const unn::EmbedResult result = unn::embed(data, config);

        REQUIRE(result.trace.size() == 30);
        CHECK(result.trace[0].pattern == 0);
        CHECK(result.trace[0].candidate_count == 1);
        CHECK(result.trace[0].chosen_slot == 0);
        CHECK(result.trace[0].score == 0.0);
        CHECK(result.ordering.is_complete_for(30));

        for (std::size_t i = 1; i < result.trace.size(); ++i) {
            const int expected = strategy == unn::Strategy::Unn1 ? static_cast<int>(i) + 1 : 2;
            CHECK(result.trace[i].candidate_count == expected);
        }
    }
}

TEST_CASE("embed: op accounting, n = 4") {
    const unn::Dataset data = line_data({0.0, 3.0, 1.0, 2.0});
    unn::EmbedConfig config;
    config.k = 2;

    config.strategy = unn::Strategy::Unn1;
    const unn::EmbedResult r1 = unn::embed(data, config);
    CHECK(r1.ops.distance_evals == 0);
    CHECK(r1.ops.reconstruction_evals == 2 + 3 + 4);

    config.strategy = unn::Strategy::Unn2;
    const unn::EmbedResult r2 = unn::embed(data, config);
    CHECK(r2.ops.distance_evals == 1 + 2 + 3);
    CHECK(r2.ops.reconstruction_evals == 2 * 3);

    // per-entry ops sum to the totals
    unn::OpCounts acc;
    for (const unn::TraceEntry& e : r2.trace) {
        acc.distance_evals += e.ops.distance_evals;
        acc.reconstruction_evals += e.ops.reconstruction_evals;
    }
    CHECK(acc.distance_evals == r2.ops.distance_evals);
    CHECK(acc.reconstruction_evals == r2.ops.reconstruction_evals);
}

TEST_CASE("embed: full-dsre criterion counts one evaluation per embedded pattern") {
    const unn::Dataset data = line_data({0.0, 3.0, 1.0, 2.0});
    unn::EmbedConfig config;
    config.k = 2;
    config.criterion = unn::Criterion::FullDsre;
    const unn::EmbedResult result = unn::embed(data, config);
    // insertion m=1: 2 candidates x 2 slots; m=2: 3 x 3; m=3: 4 x 4
    CHECK(result.ops.reconstruction_evals == 2 * 2 + 3 * 3 + 4 * 4);
}

TEST_CASE("embed: deterministic reruns are identical") {
    const unn::Dataset data = unn::generate({unn::Shape::S2D, 40, 0.05, 5});

    unn::EmbedConfig config;
    config.k = 4;
    config.strategy = unn::Strategy::Unn2;
    const unn::EmbedResult a = unn::embed(data, config);
    const unn::EmbedResult b = unn::embed(data, config);
    CHECK(a.ordering == b.ordering);
    CHECK(a.final_dsre == b.final_dsre);

    config.insertion_order = unn::InsertionOrder::Shuffled;
    config.seed = 123;
    const unn::EmbedResult c = unn::embed(data, config);
    const unn::EmbedResult d = unn::embed(data, config);
    CHECK(c.ordering == d.ordering);
    CHECK(c.final_dsre == d.final_dsre);
}

TEST_CASE("embed: shuffled order changes the insertion sequence, not the contract") {
    const unn::Dataset data = unn::generate({unn::Shape::S2D, 25, 0.05, 9});
    unn::EmbedConfig config;
    config.k = 2;
    config.insertion_order = unn::InsertionOrder::Shuffled;
    config.seed = 7;
    const unn::EmbedResult result = unn::embed(data, config);
    CHECK(result.ordering.is_complete_for(25));

    std::vector<int> sequence;
    sequence.reserve(result.trace.size());
    for (const unn::TraceEntry& e : result.trace) {
        sequence.push_back(e.pattern);
    }
    std::vector<int> sorted = sequence;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < 25; ++i) {
        CHECK(sorted[static_cast<std::size_t>(i)] == i);
    }
    CHECK(sequence != sorted); // 25 patterns virtually never shuffle to identity
}

TEST_CASE("embed: identical points end at zero error") {
    unn::Matrix m(8, 2);
    m.setConstant(-3.5);
    const unn::Dataset data(std::move(m));
    for (const unn::Strategy strategy : {unn::Strategy::Unn1, unn::Strategy::Unn2}) {
        unn::EmbedConfig config;
        config.k = 3;
        config.strategy = strategy;
        CHECK(unn::embed(data, config).final_dsre == 0.0);
    }
}

TEST_CASE("embed: running dsre instrumentation ends at the final value") {
    const unn::Dataset data = unn::generate({unn::Shape::S2D, 20, 0.05, 3});
    unn::EmbedConfig config;
    config.k = 2;
    config.record_running_dsre = true;
    const unn::EmbedResult result = unn::embed(data, config);
    CHECK_FALSE(result.trace.front().running_dsre.has_value());
    for (std::size_t i = 1; i < result.trace.size(); ++i) {
        REQUIRE(result.trace[i].running_dsre.has_value());
    }
    CHECK(*result.trace.back().running_dsre == result.final_dsre);
}

TEST_CASE("embed: argument validation") {
    const unn::Dataset tiny = line_data({1.0});
    unn::EmbedConfig config;
    CHECK_THROWS_AS(unn::embed(tiny, config), std::invalid_argument);

    const unn::Dataset data = line_data({0.0, 1.0, 2.0});
    config.k = 0;
    CHECK_THROWS_AS(unn::embed(data, config), std::invalid_argument);

    config.k = 2;
    config.insertion_order = unn::InsertionOrder::Shuffled;
    config.seed.reset();
    CHECK_THROWS_AS(unn::embed(data, config), std::invalid_argument);
}

TEST_CASE("embed: final dsre matches an independent evaluation of the ordering") {
    const unn::Dataset data = unn::generate({unn::Shape::S3D, 60, 0.05, 31});
    for (const unn::Strategy strategy : {unn::Strategy::Unn1, unn::Strategy::Unn2}) {
        unn::EmbedConfig config;
        config.k = 5;
        config.strategy = strategy;
        const unn::EmbedResult result = unn::embed(data, config);
        CHECK(result.final_dsre == unn::dsre(result.ordering, data, config.k));
    }
}

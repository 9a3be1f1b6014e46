#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <fstream>
#include <set>

#include "core/civil_time.hpp"
#include "core/error.hpp"
#include "core/pipeline.hpp"

using namespace eads::pipeline;
using eads::Error;
using eads::ErrorCode;
using eads::ibrl::load_file;

namespace {

std::string fixture_path(const std::string& name) {
    return std::string(EADS_FIXTURE_DIR) + "/" + name;
}

std::vector<eads::ibrl::RawRecord> load_fixture(const std::string& name,
                                                const RunConfig& config) {
    return load_file(fixture_path(name), dataset_filter(config)).records;
}

} // namespace

TEST_CASE("defaults encode the study configuration") {
    const RunConfig config;
    CHECK(eads::civil::format_timestamp(config.period_start) ==
          "2004-03-01T00:00:00");
    CHECK(eads::civil::format_timestamp(config.period_end) ==
          "2004-03-01T04:00:00");
    CHECK(config.window_seconds == 600);
    CHECK(config.temp_bounds.lower == 15.55);
    CHECK(config.temp_bounds.upper == 18.00);
    CHECK(config.hum_bounds.lower == 42.25);
    CHECK(config.hum_bounds.upper == 45.80);
    CHECK(config.excluded_nodes == std::set<int>{5, 15});
    CHECK(config.max_node_id == 54);
    CHECK(config.rule.tau == 0.0);
    CHECK(config.rule.combinator == eads::eval::Combinator::both_exceed);
    CHECK(config.confidence == 0.90);
    CHECK(config.log_base == 10.0);
    CHECK(config.truth.fully_anomalous == std::set<int>{37});
    CHECK(config.truth.partially_anomalous == std::set<int>{14});
    CHECK_NOTHROW(validate(config));
}

TEST_CASE("validate rejects broken configurations") {
    RunConfig config;
    config.window_seconds = 0;
    CHECK_THROWS_AS(validate(config), Error);

    config = RunConfig();
    config.confidence = 1.0;
    CHECK_THROWS_AS(validate(config), Error);

    config = RunConfig();
    config.excluded_nodes = {99};
    config.max_node_id = 54;
    CHECK_THROWS_AS(validate(config), Error);

    config = RunConfig();
    config.rule.tau = -0.5;
    CHECK_THROWS_AS(validate(config), Error);

    config = RunConfig();
    config.truth.partially_anomalous.insert(37);
    CHECK_THROWS_AS(validate(config), Error);
}

TEST_CASE("describe lists every effective setting") {
    const RunConfig config;
    const auto text = describe(config);
    CHECK(text.find("period_start = 2004-03-01T00:00:00") != std::string::npos);
    CHECK(text.find("period_end = 2004-03-01T04:00:00") != std::string::npos);
    CHECK(text.find("window_seconds = 600") != std::string::npos);
    CHECK(text.find("temperature_bounds = 15.55:18") != std::string::npos);
    CHECK(text.find("humidity_bounds = 42.25:45.8") != std::string::npos);
    CHECK(text.find("excluded_nodes = 5,15") != std::string::npos);
    CHECK(text.find("tau = 0") != std::string::npos);
    CHECK(text.find("combinator = and") != std::string::npos);
    CHECK(text.find("confidence = 0.9") != std::string::npos);
    CHECK(text.find("log_base = 10") != std::string::npos);
}

TEST_CASE("synthetic dataset end to end") {
    const RunConfig config;
    const auto records = load_fixture("synthetic_ibrl.txt", config);
    const auto result = run_analysis(records, config, kStageCompare);

    // 12 analyzed nodes x 24 windows
    CHECK(result.entropy_points.size() == 12 * 24);
    REQUIRE(result.node_summaries.size() == 12);

    std::set<int> analyzed;
    for (const auto& s : result.node_summaries) analyzed.insert(s.node_id);
    CHECK(analyzed ==
          std::set<int>{1, 2, 3, 4, 6, 7, 8, 9, 10, 14, 37, 50});
    CHECK(!analyzed.contains(5));
    CHECK(!analyzed.contains(15));

    for (const auto& s : result.node_summaries) {
        if (s.node_id == 37) {
            CHECK(s.windows_flagged == s.windows_total);
            CHECK(s.windows_total == 24);
        } else if (s.node_id == 14) {
            CHECK(s.flagged);
            CHECK(s.windows_flagged == 6);
            CHECK(s.windows_total == 24);
        } else {
            CHECK(!s.flagged);
        }
    }

    // every node 37 window is saturated: H = log10(5) on both axes
    for (std::size_t i = 0; i < result.entropy_points.size(); ++i) {
        const auto& p = result.entropy_points[i];
        CHECK(p.h_temp >= 0.0);
        CHECK(p.h_temp <= std::log10(static_cast<double>(p.n_temp)) + 1e-12);
        CHECK(p.violations_temp <= p.n_temp);
        CHECK(p.violations_hum <= p.n_hum);
        if (p.node_id == 37) {
            CHECK(result.anomalous[i] == 1);
            CHECK(p.h_temp == doctest::Approx(std::log10(5.0)).epsilon(1e-12));
            CHECK(p.h_hum == doctest::Approx(std::log10(5.0)).epsilon(1e-12));
            CHECK(p.violations_temp == p.n_temp);
        }
    }

    REQUIRE(result.ellipse.has_value());
    CHECK(result.ellipse->points.size() == 12 * 120);
    CHECK(std::abs(result.ellipse->threshold - 4.6052) <= 1e-4);

    REQUIRE(result.comparison.has_value());
    const auto& comparison = *result.comparison;
    CHECK(comparison.entropy_flagged == std::set<int>{14, 37});
    CHECK(comparison.ellipse_flagged == std::set<int>{14, 37});
    CHECK(comparison.entropy_flagged.size() >= comparison.ellipse_flagged.size());
    CHECK(comparison.entropy_eval.true_positives == 2);
    CHECK(comparison.entropy_eval.false_positives == 0);
    CHECK(comparison.entropy_eval.true_negatives == 10);
    CHECK(comparison.entropy_eval.incomplete_fully_anomalous.empty());
}

TEST_CASE("all-clean data flags nothing under either method") {
    const RunConfig config;
    const auto records = load_fixture("clean_ring.txt", config);
    const auto result = run_analysis(records, config, kStageCompare);

    for (const auto& p : result.entropy_points) {
        CHECK(p.h_temp == 0.0);
        CHECK(p.h_hum == 0.0);
    }
    REQUIRE(result.comparison.has_value());
    CHECK(result.comparison->entropy_flagged.empty());
    CHECK(result.comparison->ellipse_flagged.empty());
}

TEST_CASE("entropy-only and ellipse-only stages") {
    const RunConfig config;
    const auto records = load_fixture("synthetic_ibrl.txt", config);

    const auto entropy_only = run_analysis(records, config, kStageEntropy);
    CHECK(!entropy_only.entropy_points.empty());
    CHECK(!entropy_only.ellipse.has_value());
    CHECK(!entropy_only.comparison.has_value());

    const auto ellipse_only = run_analysis(records, config, kStageEllipse);
    CHECK(ellipse_only.entropy_points.empty());
    REQUIRE(ellipse_only.ellipse.has_value());
    CHECK(!ellipse_only.comparison.has_value());
}

TEST_CASE("empty data raises empty_data errors") {
    const RunConfig config;
    const std::vector<eads::ibrl::RawRecord> none;
    try {
        run_analysis(none, config, kStageEntropy);
        FAIL("expected empty_data");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::empty_data);
    }
    CHECK_THROWS_AS(run_analysis(none, config, kStageEllipse), Error);
}

TEST_CASE("degenerate point cloud raises degenerate_data") {
    const RunConfig config;
    const auto records = load_fixture("degenerate_single.txt", config);
    try {
        run_analysis(records, config, kStageEllipse);
        FAIL("expected degenerate_data");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::degenerate_data);
    }
}

TEST_CASE("custom log base rescales entropies but not decisions") {
    RunConfig base10;
    RunConfig base2;
    base2.log_base = 2.0;
    const auto records = load_fixture("synthetic_ibrl.txt", base10);

    const auto r10 = run_analysis(records, base10, kStageEntropy);
    const auto r2 = run_analysis(records, base2, kStageEntropy);
    REQUIRE(r10.entropy_points.size() == r2.entropy_points.size());
    const double scale = std::log2(10.0);
    for (std::size_t i = 0; i < r10.entropy_points.size(); ++i) {
        CHECK(r2.entropy_points[i].h_temp ==
              doctest::Approx(r10.entropy_points[i].h_temp * scale).epsilon(1e-9));
        CHECK(r2.anomalous[i] == r10.anomalous[i]);
    }
}

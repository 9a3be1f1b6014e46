#include "eads/eads.h"

#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "core/civil_time.hpp"
#include "core/ellipse.hpp"
#include "core/entropy.hpp"
#include "core/error.hpp"
#include "core/ibrl.hpp"
#include "core/pipeline.hpp"

using eads::Error;
using eads::ErrorCode;

struct eads_config {
    eads::pipeline::RunConfig cfg;
};

struct eads_dataset {
    eads::ibrl::LoadResult loaded;
};

struct eads_analysis {
    eads::pipeline::AnalysisResult result;
    unsigned stages = 0;
};

namespace {

thread_local std::string g_last_error;

eads_status set_error(eads_status status, const std::string& message) {
    g_last_error = message;
    return status;
}

eads_status from_exception() {
    try {
        throw;
    } catch (const Error& e) {
        switch (e.code()) {
            case ErrorCode::invalid_argument:
                return set_error(EADS_EINVAL, e.what());
            case ErrorCode::io:
                return set_error(EADS_EIO, e.what());
            case ErrorCode::degenerate_data:
                return set_error(EADS_EDEGENERATE, e.what());
            case ErrorCode::empty_data:
                return set_error(EADS_EEMPTY, e.what());
        }
        return set_error(EADS_EINTERNAL, e.what());
    } catch (const std::exception& e) {
        return set_error(EADS_EINTERNAL, e.what());
    } catch (...) {
        return set_error(EADS_EINTERNAL, "unknown error");
    }
}

template <typename Fn>
eads_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (...) {
        return from_exception();
    }
}

eads_status require(bool condition, const char* message) {
    return condition ? EADS_OK : set_error(EADS_EINVAL, message);
}

const eads::pipeline::EllipseResult* ellipse_of(const eads_analysis* an) {
    return an->result.ellipse ? &*an->result.ellipse : nullptr;
}

} // namespace

extern "C" {

const char* eads_version(void) { return "1.0.0"; }

const char* eads_status_name(eads_status status) {
    switch (status) {
        case EADS_OK: return "ok";
        case EADS_EINVAL: return "invalid argument";
        case EADS_EIO: return "i/o error";
        case EADS_EDEGENERATE: return "degenerate data";
        case EADS_EEMPTY: return "empty data";
        case EADS_EINTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* eads_last_error(void) { return g_last_error.c_str(); }

eads_config* eads_config_new(void) {
    return new (std::nothrow) eads_config{};
}

void eads_config_free(eads_config* config) { delete config; }

eads_status eads_config_set_period(eads_config* config, const char* start,
                                   const char* end) {
    if (auto s = require(config && start && end, "null argument"); s != EADS_OK)
        return s;
    return guarded([&] {
        const std::int64_t s = eads::civil::parse_timestamp(start);
        const std::int64_t e = eads::civil::parse_timestamp(end);
        if (s >= e)
            eads::throw_invalid("period start must precede period end");
        config->cfg.period_start = s;
        config->cfg.period_end = e;
        return EADS_OK;
    });
}

eads_status eads_config_set_window_seconds(eads_config* config,
                                           int64_t seconds) {
    if (auto s = require(config != nullptr, "null config"); s != EADS_OK)
        return s;
    if (seconds <= 0)
        return set_error(EADS_EINVAL, "window width must be positive");
    config->cfg.window_seconds = seconds;
    return EADS_OK;
}

eads_status eads_config_set_temperature_bounds(eads_config* config,
                                               double lower, double upper) {
    if (auto s = require(config != nullptr, "null config"); s != EADS_OK)
        return s;
    return guarded([&] {
        config->cfg.temp_bounds = eads::entropy::BoundaryRange(lower, upper);
        return EADS_OK;
    });
}

eads_status eads_config_set_humidity_bounds(eads_config* config, double lower,
                                            double upper) {
    if (auto s = require(config != nullptr, "null config"); s != EADS_OK)
        return s;
    return guarded([&] {
        config->cfg.hum_bounds = eads::entropy::BoundaryRange(lower, upper);
        return EADS_OK;
    });
}

eads_status eads_config_set_excluded_nodes(eads_config* config,
                                           const int32_t* ids, size_t count) {
    if (auto s = require(config && (ids || count == 0), "null id array");
        s != EADS_OK)
        return s;
    return guarded([&] {
        std::set<int> nodes;
        for (size_t i = 0; i < count; ++i) {
            if (ids[i] < 1 || ids[i] > config->cfg.max_node_id)
                eads::throw_invalid("excluded node " + std::to_string(ids[i]) +
                                    " outside [1, " +
                                    std::to_string(config->cfg.max_node_id) +
                                    "]");
            nodes.insert(ids[i]);
        }
        config->cfg.excluded_nodes = std::move(nodes);
        return EADS_OK;
    });
}

eads_status eads_config_set_max_node_id(eads_config* config,
                                        int32_t max_node_id) {
    if (auto s = require(config != nullptr, "null config"); s != EADS_OK)
        return s;
    if (max_node_id < 1)
        return set_error(EADS_EINVAL, "max node id must be at least 1");
    config->cfg.max_node_id = max_node_id;
    return EADS_OK;
}

eads_status eads_config_set_rule(eads_config* config, double tau,
                                 eads_combinator combinator) {
    if (auto s = require(config != nullptr, "null config"); s != EADS_OK)
        return s;
    if (!(tau >= 0.0) || !(tau < 1e300))
        return set_error(EADS_EINVAL, "tau must be finite and >= 0");
    if (combinator != EADS_COMBINE_BOTH && combinator != EADS_COMBINE_EITHER)
        return set_error(EADS_EINVAL, "unknown combinator");
    config->cfg.rule.tau = tau;
    config->cfg.rule.combinator = combinator == EADS_COMBINE_BOTH
                                      ? eads::eval::Combinator::both_exceed
                                      : eads::eval::Combinator::either_exceeds;
    return EADS_OK;
}

eads_status eads_config_set_confidence(eads_config* config, double confidence) {
    if (auto s = require(config != nullptr, "null config"); s != EADS_OK)
        return s;
    if (!(confidence > 0.0) || !(confidence < 1.0))
        return set_error(EADS_EINVAL,
                         "confidence must lie strictly between 0 and 1");
    config->cfg.confidence = confidence;
    return EADS_OK;
}

eads_status eads_config_set_log_base(eads_config* config, double log_base) {
    if (auto s = require(config != nullptr, "null config"); s != EADS_OK)
        return s;
    if (!(log_base > 0.0) || log_base == 1.0)
        return set_error(EADS_EINVAL, "log base must be positive and != 1");
    config->cfg.log_base = log_base;
    return EADS_OK;
}

eads_status eads_config_describe(const eads_config* config, char* buf,
                                 size_t cap, size_t* needed) {
    if (auto s = require(config && needed && (buf || cap == 0),
                         "null argument");
        s != EADS_OK)
        return s;
    return guarded([&] {
        const std::string text = eads::pipeline::describe(config->cfg);
        *needed = text.size() + 1;
        if (cap > 0) {
            const size_t n = std::min(cap - 1, text.size());
            std::memcpy(buf, text.data(), n);
            buf[n] = '\0';
        }
        return EADS_OK;
    });
}

eads_status eads_dataset_load_file(const eads_config* config, const char* path,
                                   eads_dataset** out) {
    if (auto s = require(config && path && out, "null argument"); s != EADS_OK)
        return s;
    *out = nullptr;
    return guarded([&] {
        auto loaded = eads::ibrl::load_file(
            path, eads::pipeline::dataset_filter(config->cfg));
        *out = new eads_dataset{std::move(loaded)};
        return EADS_OK;
    });
}

eads_status eads_dataset_load_buffer(const eads_config* config,
                                     const char* bytes, size_t len,
                                     eads_dataset** out) {
    if (auto s = require(config && (bytes || len == 0) && out, "null argument");
        s != EADS_OK)
        return s;
    *out = nullptr;
    return guarded([&] {
        std::istringstream stream(std::string(bytes, len));
        auto loaded = eads::ibrl::load_records(
            stream, eads::pipeline::dataset_filter(config->cfg));
        *out = new eads_dataset{std::move(loaded)};
        return EADS_OK;
    });
}

void eads_dataset_free(eads_dataset* dataset) { delete dataset; }

eads_status eads_dataset_report(const eads_dataset* dataset,
                                eads_ingest_report* out) {
    if (auto s = require(dataset && out, "null argument"); s != EADS_OK)
        return s;
    const auto& r = dataset->loaded.report;
    *out = {r.lines_read, r.lines_malformed, r.records_out_of_period,
            r.records_excluded_node, r.records_kept};
    return EADS_OK;
}

eads_status eads_analysis_run(const eads_dataset* dataset,
                              const eads_config* config, unsigned stages,
                              eads_analysis** out) {
    if (auto s = require(dataset && config && out, "null argument");
        s != EADS_OK)
        return s;
    if ((stages & EADS_STAGE_COMPARE) == 0)
        return set_error(EADS_EINVAL, "stage mask selects nothing");
    if (stages & 4u) stages = EADS_STAGE_COMPARE; // comparing needs both methods
    *out = nullptr;
    return guarded([&] {
        auto result = eads::pipeline::run_analysis(dataset->loaded.records,
                                                   config->cfg, stages);
        *out = new eads_analysis{std::move(result), stages};
        return EADS_OK;
    });
}

void eads_analysis_free(eads_analysis* analysis) { delete analysis; }

eads_status eads_analysis_entropy_point_count(const eads_analysis* analysis,
                                              size_t* out) {
    if (auto s = require(analysis && out, "null argument"); s != EADS_OK)
        return s;
    if (!(analysis->stages & EADS_STAGE_ENTROPY))
        return set_error(EADS_EINVAL, "entropy stage was not run");
    *out = analysis->result.entropy_points.size();
    return EADS_OK;
}

eads_status eads_analysis_entropy_point(const eads_analysis* analysis,
                                        size_t index, eads_entropy_point* out) {
    if (auto s = require(analysis && out, "null argument"); s != EADS_OK)
        return s;
    if (!(analysis->stages & EADS_STAGE_ENTROPY))
        return set_error(EADS_EINVAL, "entropy stage was not run");
    const auto& points = analysis->result.entropy_points;
    if (index >= points.size())
        return set_error(EADS_EINVAL, "entropy point index out of range");
    const auto& p = points[index];
    *out = {p.node_id,
            p.window_index,
            p.h_temp,
            p.h_hum,
            p.n_temp,
            p.n_hum,
            p.violations_temp,
            p.violations_hum,
            analysis->result.anomalous[index]};
    return EADS_OK;
}

eads_status eads_analysis_node_summary_count(const eads_analysis* analysis,
                                             size_t* out) {
    if (auto s = require(analysis && out, "null argument"); s != EADS_OK)
        return s;
    if (!(analysis->stages & EADS_STAGE_ENTROPY))
        return set_error(EADS_EINVAL, "entropy stage was not run");
    *out = analysis->result.node_summaries.size();
    return EADS_OK;
}

eads_status eads_analysis_node_summary(const eads_analysis* analysis,
                                       size_t index, eads_node_summary* out) {
    if (auto s = require(analysis && out, "null argument"); s != EADS_OK)
        return s;
    if (!(analysis->stages & EADS_STAGE_ENTROPY))
        return set_error(EADS_EINVAL, "entropy stage was not run");
    const auto& summaries = analysis->result.node_summaries;
    if (index >= summaries.size())
        return set_error(EADS_EINVAL, "node summary index out of range");
    const auto& s = summaries[index];
    *out = {s.node_id, s.windows_flagged, s.windows_total, s.flagged ? 1 : 0};
    return EADS_OK;
}

eads_status eads_analysis_ellipse_model(const eads_analysis* analysis,
                                        eads_ellipse_model* out) {
    if (auto s = require(analysis && out, "null argument"); s != EADS_OK)
        return s;
    const auto* ellipse = ellipse_of(analysis);
    if (!ellipse)
        return set_error(EADS_EINVAL, "ellipse stage was not run");
    const auto& m = ellipse->model;
    *out = {m.mean_t, m.mean_h,      m.cov_tt,          m.cov_th,
            m.cov_hh, m.confidence, ellipse->threshold};
    return EADS_OK;
}

eads_status eads_analysis_ellipse_point_count(const eads_analysis* analysis,
                                              size_t* out) {
    if (auto s = require(analysis && out, "null argument"); s != EADS_OK)
        return s;
    const auto* ellipse = ellipse_of(analysis);
    if (!ellipse)
        return set_error(EADS_EINVAL, "ellipse stage was not run");
    *out = ellipse->points.size();
    return EADS_OK;
}

eads_status eads_analysis_ellipse_point(const eads_analysis* analysis,
                                        size_t index, eads_ellipse_point* out) {
    if (auto s = require(analysis && out, "null argument"); s != EADS_OK)
        return s;
    const auto* ellipse = ellipse_of(analysis);
    if (!ellipse)
        return set_error(EADS_EINVAL, "ellipse stage was not run");
    if (index >= ellipse->points.size())
        return set_error(EADS_EINVAL, "ellipse point index out of range");
    const auto& p = ellipse->points[index];
    *out = {p.node_id, p.timestamp, p.temperature,
            p.humidity, p.dist_sq,  p.anomalous ? 1 : 0};
    return EADS_OK;
}

eads_status eads_analysis_ellipse_boundary(const eads_analysis* analysis,
                                           size_t k, double* temperature,
                                           double* humidity) {
    if (auto s = require(analysis && temperature && humidity, "null argument");
        s != EADS_OK)
        return s;
    const auto* ellipse = ellipse_of(analysis);
    if (!ellipse)
        return set_error(EADS_EINVAL, "ellipse stage was not run");
    return guarded([&] {
        const auto polygon = eads::ellipse::boundary_polygon(ellipse->model, k);
        for (size_t i = 0; i < polygon.size(); ++i) {
            temperature[i] = polygon[i].t;
            humidity[i] = polygon[i].h;
        }
        return EADS_OK;
    });
}

eads_status eads_analysis_comparison(const eads_analysis* analysis,
                                     eads_comparison* out) {
    if (auto s = require(analysis && out, "null argument"); s != EADS_OK)
        return s;
    const auto& comparison = analysis->result.comparison;
    if (!comparison)
        return set_error(EADS_EINVAL, "compare stage was not run");
    auto confusion = [](const eads::eval::Evaluation& e) {
        return eads_confusion{e.true_positives, e.false_positives,
                              e.true_negatives, e.false_negatives};
    };
    *out = {static_cast<uint64_t>(comparison->per_node.size()),
            static_cast<uint64_t>(comparison->entropy_flagged.size()),
            static_cast<uint64_t>(comparison->ellipse_flagged.size()),
            confusion(comparison->entropy_eval),
            confusion(comparison->ellipse_eval),
            comparison->entropy_eval.incomplete_fully_anomalous.empty() ? 1 : 0};
    return EADS_OK;
}

eads_status eads_analysis_comparison_row_count(const eads_analysis* analysis,
                                               size_t* out) {
    if (auto s = require(analysis && out, "null argument"); s != EADS_OK)
        return s;
    if (!analysis->result.comparison)
        return set_error(EADS_EINVAL, "compare stage was not run");
    *out = analysis->result.comparison->per_node.size();
    return EADS_OK;
}

eads_status eads_analysis_comparison_row(const eads_analysis* analysis,
                                         size_t index,
                                         eads_comparison_row* out) {
    if (auto s = require(analysis && out, "null argument"); s != EADS_OK)
        return s;
    if (!analysis->result.comparison)
        return set_error(EADS_EINVAL, "compare stage was not run");
    const auto& rows = analysis->result.comparison->per_node;
    if (index >= rows.size())
        return set_error(EADS_EINVAL, "comparison row index out of range");
    const auto& r = rows[index];
    *out = {r.node_id,
            r.entropy_windows_flagged,
            r.entropy_windows_total,
            r.entropy_flagged ? 1 : 0,
            r.ellipse_points_flagged,
            r.ellipse_points_total,
            r.ellipse_flagged ? 1 : 0,
            r.truth_positive ? 1 : 0};
    return EADS_OK;
}

eads_status eads_analysis_flagged_nodes(const eads_analysis* analysis,
                                        eads_method method, int32_t* buf,
                                        size_t cap, size_t* count) {
    if (auto s = require(analysis && count && (buf || cap == 0),
                         "null argument");
        s != EADS_OK)
        return s;
    if (!analysis->result.comparison)
        return set_error(EADS_EINVAL, "compare stage was not run");
    const auto& report = *analysis->result.comparison;
    const auto& flagged = method == EADS_METHOD_ENTROPY
                              ? report.entropy_flagged
                              : report.ellipse_flagged;
    *count = flagged.size();
    size_t i = 0;
    for (int id : flagged) {
        if (i >= cap) break;
        buf[i++] = id;
    }
    return EADS_OK;
}

eads_status eads_window_entropy(const double* samples, size_t count,
                                double lower, double upper, double log_base,
                                double* out) {
    if (auto s = require((samples || count == 0) && out, "null argument");
        s != EADS_OK)
        return s;
    return guarded([&] {
        const eads::entropy::BoundaryRange bounds(lower, upper);
        *out = eads::entropy::window_entropy({samples, count}, bounds, log_base);
        return EADS_OK;
    });
}

eads_status eads_chi2_threshold(double confidence, double* out) {
    if (auto s = require(out != nullptr, "null output"); s != EADS_OK)
        return s;
    return guarded([&] {
        *out = eads::ellipse::threshold(confidence);
        return EADS_OK;
    });
}

eads_status eads_parse_time(const char* text, int64_t* out) {
    if (auto s = require(text && out, "null argument"); s != EADS_OK)
        return s;
    return guarded([&] {
        *out = eads::civil::parse_timestamp(text);
        return EADS_OK;
    });
}

eads_status eads_format_time(int64_t seconds, char* buf, size_t cap) {
    if (auto s = require(buf != nullptr, "null buffer"); s != EADS_OK)
        return s;
    if (cap < 20)
        return set_error(EADS_EINVAL, "buffer too small for a timestamp");
    return guarded([&] {
        const std::string text = eads::civil::format_timestamp(seconds);
        if (text.size() + 1 > cap)
            eads::throw_invalid("buffer too small for a timestamp");
        std::memcpy(buf, text.c_str(), text.size() + 1);
        return EADS_OK;
    });
}

} // extern "C"

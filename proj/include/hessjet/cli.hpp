#pragma once

#include <array>
#include <optional>
#include <string>

#include <json.hpp>

#include "hessjet/metric.hpp"
#include "hessjet/solver.hpp"

namespace hj {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";

/// Metric input: base point, truncation order and the three components,
/// each an expression string or a graded-lex coefficient array.
struct MetricConfig {
    std::array<double, 2> base_point{0.0, 0.0};
    int order = 0;
    Json g11, g12, g22;

    Json to_json() const;
};

struct LoadedMetric {
    MetricConfig config;
    MetricJet metric;
};

/// Throws ConfigError, SyntaxError, DomainError, NondegeneracyFailure.
LoadedMetric load_config(const std::string& path, std::optional<int> order_override = std::nullopt);
LoadedMetric config_from_json(const Json& j, std::optional<int> order_override = std::nullopt);

/// {"x2_curve": [...], "p2_curve": [...]}. Throws ConfigError.
Gauge gauge_from_json(const Json& j);
Json gauge_to_json(const Gauge& g);

struct CliOptions {
    std::string metric_path;
    std::optional<int> order;
    std::optional<std::string> gauge_path;
    std::optional<std::string> chart_path;
    std::optional<double> tolerance;
};

struct CliResult {
    int exit_code = 0;
    Json report;
};

/// Runs one command (curvature, classify, characters, hessianize, verify)
/// and returns the report. Never throws; failures become an "error" record.
CliResult dispatch(const std::string& command, const CliOptions& options);

Json chart_to_json(const HessianChart& chart);
/// Reads back the jets written by chart_to_json.
HessianChart chart_from_json(const Json& j);

}  // namespace hj

// hessjet: curvature, element classification, Cartan characters and
// Hessian charts for surface metrics given as JSON configs.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "hessjet/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Hessian representations of surface metrics"};
    app.set_version_flag("--version", hj::kVersion);
    app.require_subcommand(1);

    hj::CliOptions opt;
    std::string out_path;
    int order = 0;
    double tolerance = 0.0;
    std::string gauge_path, chart_path;

    const std::pair<const char*, const char*> commands[] = {
        {"curvature", "Gauss curvature jet and Christoffel symbols at the base point"},
        {"classify", "construct a hyperbolic integral element at the base point"},
        {"characters", "Cartan characters at the base point"},
        {"hessianize", "solve for a Hessian chart and verify it"},
        {"verify", "re-check a stored chart against a metric"},
    };
    for (const auto& [name, help] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("--metric", opt.metric_path, "metric config (or a previous report)")->required();
        sub->add_option("--order", order, "truncation order (overrides the config)");
        sub->add_option("--out", out_path, "report file (default: stdout)");
        sub->add_option("--tolerance", tolerance, "verification tolerance");
        if (std::string(name) == "hessianize") sub->add_option("--gauge", gauge_path, "initial-data override");
        if (std::string(name) == "verify") sub->add_option("--chart", chart_path, "hessianize report to check");
    }

    CLI11_PARSE(app, argc, argv);

    const std::string command = app.get_subcommands().front()->get_name();
    const CLI::App* sub = app.get_subcommands().front();
    if (sub->count("--order")) opt.order = order;
    if (sub->count("--tolerance")) opt.tolerance = tolerance;
    if (!gauge_path.empty()) opt.gauge_path = gauge_path;
    if (!chart_path.empty()) opt.chart_path = chart_path;

    const hj::CliResult result = hj::dispatch(command, opt);
    const std::string text = result.report.dump(2);
    if (out_path.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "cannot write " << out_path << "\n";
            return 2;
        }
        out << text << "\n";
    }
    if (result.report.contains("error")) {
        std::cerr << result.report["error"]["name"].get<std::string>() << ": "
                  << result.report["error"]["message"].get<std::string>() << "\n";
    }
    return result.exit_code;
}

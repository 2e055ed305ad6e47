#include <cmath>
#include <fstream>
#include <sstream>

#include "hessjet/cli.hpp"
#include "hessjet/eds.hpp"
#include "hessjet/error.hpp"
#include "hessjet/exprparse.hpp"

namespace hj {

namespace {

constexpr int kDefaultOrder = 8;

[[noreturn]] void config_error(const std::string& msg) { throw Error(ErrorCode::ConfigError, msg); }

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) config_error("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return Json::parse(ss.str());
    } catch (const Json::parse_error& e) {
        config_error("'" + path + "' is not valid JSON: " + e.what());
    }
}

bool is_report(const Json& j) { return j.is_object() && j.contains("tool") && j.contains("config"); }

Jet2 component_jet(const Json& v, const char* name, const std::array<double, 2>& base, int order) {
    if (v.is_string()) return eval_jet(*parse(v.get<std::string>()), base, order);
    if (v.is_number()) return Jet2::constant(order, v.get<double>());
    if (v.is_array()) {
        std::vector<double> c;
        for (const auto& x : v) {
            if (!x.is_number()) config_error(std::string(name) + " coefficient array must contain numbers");
            c.push_back(x.get<double>());
        }
        c.resize(Jet2::size_for(order), 0.0);
        return Jet2(order, c);
    }
    config_error(std::string(name) + " must be an expression string or a coefficient array");
}

Json jet_json(const Jet2& j) { return Json(j.coeffs()); }
Json jet1_json(const Jet1& j) { return Json(j.coeffs()); }

Jet2 jet_from(const Json& j, int order) {
    if (!j.is_array()) config_error("chart jet must be a coefficient array");
    return Jet2(order, j.get<std::vector<double>>());
}

Json matrix_json(const Eigen::Matrix2d& m) {
    return Json::array({Json::array({m(0, 0), m(0, 1)}), Json::array({m(1, 0), m(1, 1)})});
}

Json element_json(const IntegralElement& E) {
    const BinaryCubic c = characteristic_cubic(E);
    Json j;
    j["G"] = matrix_json(E.frame.G);
    j["K"] = E.frame.K;
    j["p"] = Json(std::vector<double>(E.p.begin(), E.p.end()));
    j["residual"] = integral_element_residual(E);
    j["cubic"] = Json::array({c.c0, c.c1, c.c2, c.c3});
    j["discriminant"] = cubic_discriminant(c);
    j["class"] = class_name(classify_cubic(c));
    return j;
}

Json tolerances_json(const Tolerances& t) {
    Json j;
    j["tangential"] = t.tangential;
    j["characteristic"] = t.characteristic;
    j["pivot"] = t.pivot;
    j["consistency"] = t.consistency;
    j["equations"] = t.equations;
    j["closedness"] = t.closedness;
    j["verify"] = t.verify;
    j["integral_element"] = "1e-10 * max(|K det G|, |p|^2, 1)";
    j["discriminant_band"] = kDiscriminantBand;
    return j;
}

FramePoint base_frame(const MetricJet& m) {
    Eigen::Matrix2d G;
    G << m.g11.constant_term(), m.g12.constant_term(), m.g12.constant_term(), m.g22.constant_term();
    const double K = m.order() >= 2 ? gauss_curvature(m).constant_term() : 0.0;
    return FramePoint::make(G, K);
}

Json verify_json(const VerifyReport& v, double tol) {
    Json j;
    j["residual_by_degree"] = v.residual_by_degree;
    j["max_residual"] = v.max_residual;
    j["tolerance"] = tol;
    j["pass"] = v.max_residual <= tol;
    return j;
}

Json run_curvature(const LoadedMetric& lm) {
    const MetricJet& m = lm.metric;
    const Nondegeneracy nd = check_nondegenerate(m);
    const Jet2 K = gauss_curvature(m);
    const ChristoffelJet c = christoffel(m);
    Json r;
    r["signature"] = signature_name(nd.signature);
    r["det_at_base"] = nd.det.constant_term();
    r["K_order"] = K.order();
    r["K"] = jet_json(K);
    r["K_at_base"] = K.constant_term();
    Json gam = Json::array();
    for (int i = 0; i < 2; ++i) {
        Json row = Json::array();
        for (int j = 0; j < 2; ++j) {
            Json col = Json::array();
            for (int k = 0; k < 2; ++k) col.push_back(c(i, j, k).constant_term());
            row.push_back(col);
        }
        gam.push_back(row);
    }
    r["christoffel_at_base"] = gam;
    return r;
}

Json run_classify(const LoadedMetric& lm) {
    const FramePoint f = base_frame(lm.metric);
    const IntegralElement E = construct_hyperbolic_element(f);
    Json r;
    r["element"] = element_json(E);
    // The same element seen from a few other frames; the class must not change.
    const double mats[][4] = {{2, 0, 0, 1}, {1, 1, 0, 1}, {0, 1, 1, 0}, {1, -1, 1, 1}};
    Json table = Json::array();
    for (const auto& a : mats) {
        Eigen::Matrix2d A;
        A << a[0], a[1], a[2], a[3];
        Json row;
        row["A"] = matrix_json(A);
        row["element"] = element_json(gl2_transform(E, A));
        table.push_back(row);
    }
    r["table"] = table;
    return r;
}

Json run_characters(const LoadedMetric& lm) {
    const FramePoint f = base_frame(lm.metric);
    const TangentVector candidates[] = {
        {{1.0, 0.0}, {0.0, 1.0, 0.0}}, {{0.0, 1.0}, {1.0, 0.0, 0.0}}, {{1.0, 1.0}, {1.0, 0.0, -1.0}},
        {{1.0, 0.5}, {0.3, 1.0, -0.2}}, {{0.7, -1.0}, {-0.4, 0.2, 1.1}},
    };
    for (const TangentVector& v : candidates) {
        const PolarData pd = polar_data(f, v);
        if (std::abs(pd.regularity) <= 1e-9) continue;
        const CartanCharacters ch = cartan_characters(f, v);
        Json r;
        r["frame"] = {{"G", matrix_json(f.G)}, {"K", f.K}};
        r["vector"] = {{"a", v.a}, {"s", v.s}};
        r["polar"] = {{"rank", pd.rank}, {"dim_h", pd.dim_h}, {"regularity", pd.regularity},
                      {"independent", pd.independent}};
        r["characters"] = Json::array({ch.s0, ch.s1, ch.s2});
        return r;
    }
    throw Error(ErrorCode::NotRegular, "no regular tangent vector among the probe set");
}

Json diagnostics_json(const SolveDiagnostics& d) {
    Json j;
    j["rank"] = d.rank;
    j["unknowns"] = d.unknowns;
    j["expected_rank"] = d.expected_rank;
    j["iterations"] = d.iterations;
    j["level_residual"] = d.level_residual;
    j["residual_by_degree"] = {{"R11", d.residual_by_degree[0]},
                               {"R12", d.residual_by_degree[1]},
                               {"R22", d.residual_by_degree[2]},
                               {"R0", d.residual_by_degree[3]}};
    j["max_residual"] = d.max_residual;
    j["closedness"] = d.closedness;
    return j;
}

}  // namespace

Json MetricConfig::to_json() const {
    Json j;
    j["base_point"] = base_point;
    j["order"] = order;
    j["g11"] = g11;
    j["g12"] = g12;
    j["g22"] = g22;
    return j;
}

LoadedMetric config_from_json(const Json& j, std::optional<int> order_override) {
    if (!j.is_object()) config_error("config must be a JSON object");
    LoadedMetric lm;
    MetricConfig& c = lm.config;
    if (j.contains("base_point")) {
        const Json& b = j["base_point"];
        if (!b.is_array() || b.size() != 2 || !b[0].is_number() || !b[1].is_number())
            config_error("base_point must be an array of two numbers");
        c.base_point = {b[0].get<double>(), b[1].get<double>()};
    }
    c.order = kDefaultOrder;
    if (j.contains("order")) {
        if (!j["order"].is_number_integer()) config_error("order must be an integer");
        c.order = j["order"].get<int>();
    }
    if (order_override) c.order = *order_override;
    if (c.order < 0 || c.order > 30) config_error("order must lie in [0, 30]");
    for (const char* name : {"g11", "g12", "g22"})
        if (!j.contains(name)) config_error(std::string("missing metric component ") + name);
    c.g11 = j["g11"];
    c.g12 = j["g12"];
    c.g22 = j["g22"];
    lm.metric = make_metric(component_jet(c.g11, "g11", c.base_point, c.order),
                            component_jet(c.g12, "g12", c.base_point, c.order),
                            component_jet(c.g22, "g22", c.base_point, c.order), c.base_point);
    check_nondegenerate(lm.metric);
    return lm;
}

LoadedMetric load_config(const std::string& path, std::optional<int> order_override) {
    Json j = read_json_file(path);
    if (is_report(j)) j = j["config"];
    return config_from_json(j, order_override);
}

Gauge gauge_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("x2_curve") || !j.contains("p2_curve"))
        config_error("gauge needs x2_curve and p2_curve coefficient arrays");
    Gauge g;
    try {
        g.x2_curve = Jet1(j["x2_curve"].get<std::vector<double>>());
        g.p2_curve = Jet1(j["p2_curve"].get<std::vector<double>>());
    } catch (const Json::exception&) {
        config_error("gauge curves must be arrays of numbers");
    }
    return g;
}

Json gauge_to_json(const Gauge& g) {
    Json j;
    j["x2_curve"] = jet1_json(g.x2_curve);
    j["p2_curve"] = jet1_json(g.p2_curve);
    return j;
}

Json chart_to_json(const HessianChart& c) {
    Json j;
    j["order"] = c.order;
    j["base_point"] = c.base_point;
    j["x1"] = jet_json(c.x1);
    j["x2"] = jet_json(c.x2);
    j["p1"] = jet_json(c.p1);
    j["p2"] = jet_json(c.p2);
    j["f"] = jet_json(c.f);
    j["ymap"] = Json::array({jet_json(c.ymap[0]), jet_json(c.ymap[1])});
    j["F"] = jet_json(c.F);
    j["base_element"] = element_json(c.base_element);
    return j;
}

HessianChart chart_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("order")) config_error("chart record is missing");
    HessianChart c;
    c.order = j["order"].get<int>();
    if (j.contains("base_point")) c.base_point = j["base_point"].get<std::array<double, 2>>();
    for (const char* k : {"x1", "x2", "p1", "p2", "f"})
        if (!j.contains(k)) config_error(std::string("chart is missing ") + k);
    c.x1 = jet_from(j["x1"], c.order);
    c.x2 = jet_from(j["x2"], c.order);
    c.p1 = jet_from(j["p1"], c.order);
    c.p2 = jet_from(j["p2"], c.order);
    c.f = jet_from(j["f"], c.order);
    return c;
}

CliResult dispatch(const std::string& command, const CliOptions& opt) {
    CliResult out;
    Json& rep = out.report;
    rep["tool"] = "hessjet";
    rep["version"] = kVersion;
    rep["command"] = command;
    Tolerances tol;
    if (opt.tolerance) tol.verify = *opt.tolerance;
    Json config_json;
    try {
        Json source = read_json_file(opt.metric_path);
        const bool from_report = is_report(source);
        config_json = from_report ? source["config"] : source;
        const LoadedMetric lm = config_from_json(config_json, opt.order);
        rep["config"] = lm.config.to_json();
        rep["tolerances"] = tolerances_json(tol);

        if (command == "curvature") {
            rep["result"] = run_curvature(lm);
        } else if (command == "classify") {
            rep["result"] = run_classify(lm);
        } else if (command == "characters") {
            rep["result"] = run_characters(lm);
        } else if (command == "hessianize") {
            const int N = lm.config.order;
            if (N < 4) config_error("hessianize needs order >= 4");
            std::optional<Gauge> gauge;
            if (opt.gauge_path) gauge = gauge_from_json(read_json_file(*opt.gauge_path));
            else if (from_report && source.contains("gauge") && source["gauge"].contains("user"))
                gauge = gauge_from_json(source["gauge"]["user"]);
            const InitialData d = default_initial_data(lm.metric, N, gauge);
            Json g;
            if (gauge) g["user"] = gauge_to_json(*gauge);
            g["user_supplied"] = d.gauge.user_supplied;
            g["mu"] = d.gauge.mu;
            g["c"] = d.gauge.c;
            g["kappa"] = d.gauge.kappa;
            g["beta"] = d.gauge.beta;
            g["trial_score"] = d.gauge.score;
            g["candidates_tried"] = d.gauge.candidates_tried;
            rep["gauge"] = g;
            const InitialDataCheck chk = validate_initial_data(lm.metric, d, N, tol);
            const HessianChart chart = solve(lm.metric, d, N, tol);
            const VerifyReport v = verify(lm.metric, chart);
            Json r;
            r["initial_data"] = {{"x1_curve", jet1_json(d.x1_curve)},
                                 {"x2_curve", jet1_json(d.x2_curve)},
                                 {"p1_curve", jet1_json(d.p1_curve)},
                                 {"p2_curve", jet1_json(d.p2_curve)},
                                 {"normal_frame", d.normal_frame},
                                 {"tangential_residual", chk.tangential_residual},
                                 {"frame_residual", chk.frame_residual},
                                 {"cubic_value", chk.cubic_value}};
            r["chart"] = chart_to_json(chart);
            r["diagnostics"] = diagnostics_json(chart.diagnostics);
            r["verify"] = verify_json(v, tol.verify);
            rep["result"] = r;
            if (v.max_residual > tol.verify)
                throw Error(ErrorCode::VerificationFailed, "Hessian identity residual exceeds tolerance");
        } else if (command == "verify") {
            Json chart_source;
            if (opt.chart_path) chart_source = read_json_file(*opt.chart_path);
            else chart_source = source;
            if (!chart_source.contains("result") || !chart_source["result"].contains("chart"))
                config_error("verify needs a hessianize report (pass --chart or a report as --metric)");
            const HessianChart chart = chart_from_json(chart_source["result"]["chart"]);
            if (chart.order < 2) config_error("stored chart order is below 2");
            const VerifyReport v = verify(lm.metric, chart);
            rep["result"] = {{"verify", verify_json(v, tol.verify)}};
            if (v.max_residual > tol.verify)
                throw Error(ErrorCode::VerificationFailed, "Hessian identity residual exceeds tolerance");
        } else {
            config_error("unknown command '" + command + "'");
        }
    } catch (const Error& e) {
        // Keep the input visible even when it could not be loaded.
        if (!rep.contains("config") && !config_json.is_null()) rep["config"] = config_json;
        rep["error"] = {{"name", e.name()}, {"message", e.what()}};
    } catch (const Json::exception& e) {
        rep["error"] = {{"name", error_name(ErrorCode::ConfigError)}, {"message", e.what()}};
    } catch (const std::exception& e) {
        rep["error"] = {{"name", "InternalError"}, {"message", e.what()}};
    }
    out.exit_code = rep.contains("error") ? 1 : 0;
    return out;
}

}  // namespace hj

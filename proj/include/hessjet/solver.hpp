#pragma once

#include <array>
#include <optional>
#include <vector>

#include "hessjet/eds.hpp"
#include "hessjet/jet2.hpp"
#include "hessjet/metric.hpp"

namespace hj {

/// User override of the free functions along the initial curve.
struct Gauge {
    Jet1 x2_curve;
    Jet1 p2_curve;
};

/// How the initial data was chosen.
struct GaugeRecord {
    bool user_supplied = false;
    double mu = 0.0;     // x2'' along the curve
    double c = 0.0;      // p2'
    double kappa = 0.0;  // p2''
    double beta = 0.0;   // root of the frame equation
    double score = 0.0;  // top-degree coefficient size of the trial solve
    int candidates_tried = 0;
};

/// Values along the curve y2 = 0 plus the normal frame vector at the base
/// point. The curves carry the constants x(0), p(0) in their first entry.
struct InitialData {
    Jet1 x1_curve, x2_curve, p1_curve, p2_curve;
    /// e2 in y-components: the coframe at the base point has omega^i(e_j) = delta.
    std::array<double, 2> normal_frame{0.0, 1.0};
    double f0 = 0.0;
    GaugeRecord gauge;
};

struct InitialDataCheck {
    double tangential_residual = 0.0;
    double frame_residual = 0.0;
    double cubic_value = 0.0;  // E*(C) on the curve direction
};

struct Tolerances {
    double tangential = 1e-9;
    double characteristic = 1e-8;
    double pivot = 1e-10;
    double consistency = 1e-9;
    double equations = 1e-8;
    double closedness = 1e-9;
    double verify = 1e-7;
};

struct SolveDiagnostics {
    /// Per level L = 1..N: rank and size of the linearized system.
    std::vector<int> rank;
    std::vector<int> unknowns;
    std::vector<int> expected_rank;
    std::vector<int> iterations;
    std::vector<double> level_residual;
    /// residual_by_degree[e][d]: max |coefficient| of equation e
    /// (R11, R12, R22, R0) at degree d.
    std::array<std::vector<double>, 4> residual_by_degree;
    double max_residual = 0.0;
    double closedness = 0.0;
};

struct VerifyReport {
    std::vector<double> residual_by_degree;  // degrees 0..N-2
    double max_residual = 0.0;
};

struct HessianChart {
    int order = 0;
    std::array<double, 2> base_point{0.0, 0.0};
    Jet2 x1, x2, p1, p2, f;
    JetPair ymap;
    Jet2 F;
    SolveDiagnostics diagnostics;
    /// The integral element traced by the chart at the base point.
    IntegralElement base_element;
};

/// Scans the free curve data (or uses the gauge) and picks the admissible
/// candidate whose trial solve stays smallest. Throws NoAdmissibleGauge.
InitialData default_initial_data(const MetricJet& m, int order, const std::optional<Gauge>& gauge = std::nullopt);

/// Throws ConstraintViolated or CharacteristicInitialData.
InitialDataCheck validate_initial_data(const MetricJet& m, const InitialData& d, int order,
                                       const Tolerances& tol = {});

/// Degree-by-degree solve of the four first-order equations.
/// Throws ObstructionDetected or RankCollapse.
HessianChart solve(const MetricJet& m, const InitialData& d, int order, const Tolerances& tol = {});

/// f with df = p_i dx^i and f(0) = f0. Throws NotClosed.
Jet2 recover_potential(const Jet2& x1, const Jet2& x2, const Jet2& p1, const Jet2& p2, double f0 = 0.0,
                       double tol = 1e-9);

/// Independent check of g = Hess F through order N-2 via map inversion.
VerifyReport verify(const MetricJet& m, const HessianChart& chart);

/// Residual jets (R11, R12, R22, R0) through the given order.
std::array<Jet2, 4> equation_residuals(const MetricJet& m, const std::array<Jet2, 4>& unknowns, int order);

}  // namespace hj

#pragma once

// Helpers shared by the test binaries: random jets and frames, and
// closed-form oracles that do not go through the jet algebra.

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "hessjet/eds.hpp"
#include "hessjet/jet2.hpp"
#include "hessjet/metric.hpp"

namespace testing_support {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline hj::Jet2 random_jet(Rng& rng, int order, double scale = 1.0) {
    hj::Jet2 j(order);
    for (double& c : j.coeffs()) c = uniform(rng, -scale, scale);
    return j;
}

/// Small integer coefficients keep products exact in double precision.
inline hj::Jet2 random_integer_jet(Rng& rng, int order) {
    hj::Jet2 j(order);
    std::uniform_int_distribution<int> d(-3, 3);
    for (double& c : j.coeffs()) c = d(rng);
    return j;
}

/// delta_ij plus a random perturbation with coefficients bounded by eps.
inline hj::MetricJet random_metric(Rng& rng, int order, double eps) {
    hj::Jet2 g11 = random_jet(rng, order, eps) + 1.0;
    hj::Jet2 g12 = random_jet(rng, order, eps);
    hj::Jet2 g22 = random_jet(rng, order, eps) + 1.0;
    return hj::make_metric(g11, g12, g22);
}

/// Random symmetric G with entries in [-2, 2] and |det G| > 0.05.
inline Eigen::Matrix2d random_frame_matrix(Rng& rng, bool positive_definite = false) {
    for (;;) {
        Eigen::Matrix2d G;
        G(0, 0) = uniform(rng, -2, 2);
        G(1, 1) = uniform(rng, -2, 2);
        G(0, 1) = G(1, 0) = uniform(rng, -2, 2);
        if (std::abs(G.determinant()) <= 0.05) continue;
        if (positive_definite && !(G(0, 0) > 0 && G.determinant() > 0)) continue;
        return G;
    }
}

using Field = std::function<double(double, double)>;

struct ClosedMetric {
    Field g11, g12, g22;
};

/// Sixth-order central differences.
inline double d1(const Field& f, double x, double y, int dir, double h = 1e-2) {
    auto at = [&](double t) { return dir == 1 ? f(x + t, y) : f(x, y + t); };
    return (-at(-3 * h) + 9 * at(-2 * h) - 45 * at(-h) + 45 * at(h) - 9 * at(2 * h) + at(3 * h)) / (60 * h);
}

inline double d2(const Field& f, double x, double y, int i, int j, double h = 1e-2) {
    if (i == j) {
        auto at = [&](double t) { return i == 1 ? f(x + t, y) : f(x, y + t); };
        return (2 * at(-3 * h) - 27 * at(-2 * h) + 270 * at(-h) - 490 * at(0) + 270 * at(h) - 27 * at(2 * h) +
                2 * at(3 * h)) /
               (180 * h * h);
    }
    Field fx = [&](double a, double b) { return d1(f, a, b, 1, h); };
    return d1(fx, x, y, 2, h);
}

/// Brioschi formula for K from E, F, G and their derivatives up to order two.
inline double brioschi_K(const ClosedMetric& m, double x, double y) {
    const double E = m.g11(x, y), F = m.g12(x, y), G = m.g22(x, y);
    const double Eu = d1(m.g11, x, y, 1), Ev = d1(m.g11, x, y, 2);
    const double Fu = d1(m.g12, x, y, 1), Fv = d1(m.g12, x, y, 2);
    const double Gu = d1(m.g22, x, y, 1), Gv = d1(m.g22, x, y, 2);
    const double Evv = d2(m.g11, x, y, 2, 2), Fuv = d2(m.g12, x, y, 1, 2), Guu = d2(m.g22, x, y, 1, 1);
    Eigen::Matrix3d M1, M2;
    M1 << -0.5 * Evv + Fuv - 0.5 * Guu, 0.5 * Eu, Fu - 0.5 * Ev,
          Fv - 0.5 * Gu, E, F,
          0.5 * Gv, F, G;
    M2 << 0, 0.5 * Ev, 0.5 * Gu,
          0.5 * Ev, E, F,
          0.5 * Gu, F, G;
    const double W = E * G - F * F;
    return (M1.determinant() - M2.determinant()) / (W * W);
}

/// Christoffel symbols at a point by finite differences of the closed form.
inline std::array<std::array<std::array<double, 2>, 2>, 2> fd_christoffel(const ClosedMetric& m, double x,
                                                                          double y) {
    const Field* g[2][2] = {{&m.g11, &m.g12}, {&m.g12, &m.g22}};
    double dg[2][2][2];  // dg[k][i][j]
    for (int k = 0; k < 2; ++k)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) dg[k][i][j] = d1(*g[i][j], x, y, k + 1);
    Eigen::Matrix2d G;
    G << m.g11(x, y), m.g12(x, y), m.g12(x, y), m.g22(x, y);
    const Eigen::Matrix2d Gi = G.inverse();
    std::array<std::array<std::array<double, 2>, 2>, 2> out{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                double s = 0;
                for (int l = 0; l < 2; ++l) s += Gi(i, l) * (dg[j][l][k] + dg[k][j][l] - dg[l][j][k]);
                out[i][j][k] = 0.5 * s;
            }
    return out;
}

/// (1 + |y|^2/4)^-2 (dy1^2 + dy2^2), curvature 1.
inline hj::MetricJet round_metric(int order, std::array<double, 2> base = {0.0, 0.0}) {
    hj::Jet2 u1 = hj::Jet2::variable(order, 1) + base[0];
    hj::Jet2 u2 = hj::Jet2::variable(order, 2) + base[1];
    hj::Jet2 s = (0.25 * (u1 * u1 + u2 * u2)) + 1.0;
    hj::Jet2 lam = hj::reciprocal(s * s);
    return hj::make_metric(lam, hj::Jet2(order), lam, base);
}

inline ClosedMetric round_closed() {
    auto lam = [](double x, double y) {
        const double s = 1 + (x * x + y * y) / 4;
        return 1 / (s * s);
    };
    return {lam, [](double, double) { return 0.0; }, lam};
}

/// (dy1^2 + dy2^2) / y2^2 around (b1, b2).
inline hj::MetricJet hyperbolic_metric(int order, std::array<double, 2> base = {0.0, 1.0}) {
    hj::Jet2 y2 = hj::Jet2::variable(order, 2) + base[1];
    hj::Jet2 lam = hj::reciprocal(y2 * y2);
    return hj::make_metric(lam, hj::Jet2(order), lam, base);
}

inline ClosedMetric hyperbolic_closed() {
    auto lam = [](double, double y) { return 1 / (y * y); };
    return {lam, [](double, double) { return 0.0; }, lam};
}

/// Real-root count of c0 x^3 + 3 c1 x^2 y + 3 c2 x y^2 + c3 y^3 on the projective
/// line, from companion-matrix eigenvalues of the dehomogenized polynomial.
/// A vanishing c0 contributes the root at infinity (y = 0).
inline int real_root_count(const hj::BinaryCubic& c) {
    std::vector<double> coef = {c.c0, 3 * c.c1, 3 * c.c2, c.c3};  // in x = e1 / e2, leading first
    int at_infinity = 0;
    while (!coef.empty() && coef.front() == 0.0) {
        coef.erase(coef.begin());
        ++at_infinity;
    }
    const int deg = static_cast<int>(coef.size()) - 1;
    int real = at_infinity > 0 ? 1 : 0;
    if (deg <= 0) return real;
    Eigen::MatrixXd C = Eigen::MatrixXd::Zero(deg, deg);
    for (int j = 0; j < deg; ++j) C(0, j) = -coef[j + 1] / coef[0];
    for (int i = 1; i < deg; ++i) C(i, i - 1) = 1.0;
    const Eigen::VectorXcd roots = Eigen::EigenSolver<Eigen::MatrixXd>(C, false).eigenvalues();
    for (int i = 0; i < deg; ++i)
        if (std::abs(roots[i].imag()) <= 1e-7 * std::max(1.0, std::abs(roots[i]))) ++real;
    return real;
}

/// Class predicted by the root oracle for a nonzero cubic with simple roots.
inline hj::ElementClass root_oracle_class(const hj::BinaryCubic& c) {
    return real_root_count(c) == 3 ? hj::ElementClass::Hyperbolic : hj::ElementClass::MixedRealComplex;
}

/// Completes (p111, p112, p122) to an integral element by solving the
/// quadratic relation, which is linear in p222. Returns false when that
/// coefficient is too small to trust.
inline bool complete_element(const hj::FramePoint& f, double p111, double p112, double p122,
                             hj::IntegralElement& out) {
    const Eigen::Matrix2d& Gi = f.Ginv;
    // G^kl (p_k11 p_l22 - p_k12 p_l12) + K det G with u = (p111, p112),
    // v = (p112, p122), w = (p122, p222).
    const Eigen::Vector2d u(p111, p112), v(p112, p122);
    const double lin = Gi(0, 1) * u[0] + Gi(1, 1) * u[1];
    const double rest = u[0] * Gi(0, 0) * p122 + u[1] * Gi(1, 0) * p122 - v.dot(Gi * v) + f.K * f.det();
    if (std::abs(lin) < 1e-3) return false;
    out = hj::IntegralElement{f, {p111, p112, p122, -rest / lin}};
    return true;
}

/// Direct tensor sum eps_jk G^kl p_lmn e^j e^m e^n.
inline double cubic_by_sum(const hj::IntegralElement& E, double e1, double e2) {
    const double e[2] = {e1, e2};
    const double eps[2][2] = {{0, 1}, {-1, 0}};
    double s = 0;
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k)
            for (int l = 0; l < 2; ++l)
                for (int m = 0; m < 2; ++m)
                    for (int n = 0; n < 2; ++n)
                        s += eps[j][k] * E.frame.Ginv(k, l) * E(l, m, n) * e[j] * e[m] * e[n];
    return s;
}

inline hj::MetricJet constant_metric(int order, double g11, double g12, double g22) {
    return hj::make_metric(hj::Jet2::constant(order, g11), hj::Jet2::constant(order, g12),
                           hj::Jet2::constant(order, g22));
}

}  // namespace testing_support

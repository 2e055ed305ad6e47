#include "hessjet/eds.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "hessjet/error.hpp"

namespace hj {

namespace {

constexpr double kRankThreshold = 1e-10;
constexpr double kRegularityBand = 1e-9;
constexpr double kLineMargin = 1e-6;
// Entries smaller than this fraction of the largest one count as vanishing
// for the construction.
constexpr double kEntryFloor = 1e-3;

// 1, -1, 2, -2, 1/2, -1/2, 3, -3, 1/3, -1/3, ...
std::vector<double> tau_schedule() {
    std::vector<double> t = {1.0, -1.0};
    for (int k = 2; k <= 20; ++k) {
        t.push_back(k);
        t.push_back(-k);
        t.push_back(1.0 / k);
        t.push_back(-1.0 / k);
    }
    return t;
}

bool entries_nonzero(const Eigen::Matrix2d& G) {
    const double scale = G.cwiseAbs().maxCoeff();
    return std::abs(G(0, 0)) > kEntryFloor * scale && std::abs(G(0, 1)) > kEntryFloor * scale &&
           std::abs(G(1, 1)) > kEntryFloor * scale;
}

// The ansatz p111 = G11 s1, p112 = G12 s1, p122 = G12 s2, p222 = G22 s2,
// accepted when (s1, s2) is off both exceptional lines and hyperbolic.
bool try_element(const FramePoint& f, double s1, double s2, IntegralElement& out) {
    const Eigen::Matrix2d& G = f.G;
    const double q = G(0, 0) * G(1, 1) + G(0, 1) * G(0, 1);
    const double l1 = q * s1 - 2.0 * G(0, 0) * G(0, 1) * s2;
    const double l2 = q * s2 - 2.0 * G(1, 1) * G(0, 1) * s1;
    if (std::abs(l1) <= kLineMargin || std::abs(l2) <= kLineMargin) return false;
    IntegralElement E{f, {G(0, 0) * s1, G(0, 1) * s1, G(0, 1) * s2, G(1, 1) * s2}};
    if (std::abs(integral_element_residual(E)) > residual_tolerance(E)) return false;
    if (cubic_discriminant(characteristic_cubic(E)) <= kDiscriminantBand) return false;
    out = E;
    return true;
}

bool construct_direct(const FramePoint& f, IntegralElement& out) {
    const Eigen::Matrix2d& G = f.G;
    const double det = f.det();
    const std::vector<double> taus = tau_schedule();
    // (A, B) = (G11 s2 - G12 s1, G12 s2 - G22 s1); the map s -> (A, B) has determinant det G.
    auto solve_s = [&](double A, double B, double& s1, double& s2) {
        s1 = (-G(0, 1) * A + G(0, 0) * B) / det;
        s2 = (-G(1, 1) * A + G(0, 1) * B) / det;
    };
    if (std::abs(f.K) > 1e-14) {
        const double AB = det * det * f.K / G(0, 1);
        for (double tau : taus) {
            double s1, s2;
            solve_s(tau, AB / tau, s1, s2);
            if (try_element(f, s1, s2, out)) return true;
        }
    } else {
        // K = 0: the line A = 0, s = tau (G11 / G12, 1).
        for (double tau : taus) {
            if (try_element(f, tau * G(0, 0) / G(0, 1), tau, out)) return true;
        }
    }
    return false;
}

std::vector<Eigen::Matrix2d> shear_schedule() {
    const double ts[] = {1.0, 2.0, -1.0, -2.0, 3.0, -3.0, 0.5, -0.5};
    std::vector<Eigen::Matrix2d> upper, lower, all;
    for (double t : ts) {
        Eigen::Matrix2d U, L;
        U << 1.0, t, 0.0, 1.0;
        L << 1.0, 0.0, t, 1.0;
        upper.push_back(U);
        lower.push_back(L);
    }
    all.insert(all.end(), upper.begin(), upper.end());
    all.insert(all.end(), lower.begin(), lower.end());
    for (const auto& U : upper)
        for (const auto& L : lower) all.push_back(U * L);
    return all;
}

}  // namespace

const char* class_name(ElementClass c) {
    switch (c) {
        case ElementClass::NonOrdinary: return "NonOrdinary";
        case ElementClass::Hyperbolic: return "Hyperbolic";
        case ElementClass::MixedRealComplex: return "MixedRealComplex";
        case ElementClass::RepeatedRoot: return "RepeatedRoot";
    }
    return "?";
}

FramePoint FramePoint::make(const Eigen::Matrix2d& G, double K) {
    const Eigen::Matrix2d S = 0.5 * (G + G.transpose());
    if (!(std::abs(S.determinant()) > 1e-12)) {
        throw Error(ErrorCode::DegenerateFrame, "frame metric is degenerate");
    }
    FramePoint f;
    f.G = S;
    f.Ginv = S.inverse();
    f.K = K;
    return f;
}

double IntegralElement::p_max() const {
    double m = 0.0;
    for (double v : p) m = std::max(m, std::abs(v));
    return m;
}

double BinaryCubic::max_abs() const {
    return std::max({std::abs(c0), std::abs(c1), std::abs(c2), std::abs(c3)});
}

double integral_element_residual(const IntegralElement& E) {
    const Eigen::Matrix2d& Gi = E.frame.Ginv;
    double q = 0.0;
    for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) q += Gi(k, l) * (E(k, 0, 0) * E(l, 1, 1) - E(k, 0, 1) * E(l, 0, 1));
    return q + E.frame.K * E.frame.det();
}

double residual_tolerance(const IntegralElement& E) {
    const double pm = E.p_max();
    return 1e-10 * std::max({std::abs(E.frame.K * E.frame.det()), pm * pm, 1.0});
}

BinaryCubic characteristic_cubic(const IntegralElement& E) {
    const Eigen::Matrix2d& Gi = E.frame.Ginv;
    std::array<double, 4> coef{0.0, 0.0, 0.0, 0.0};  // by power of e2
    for (int j = 0; j < 2; ++j) {
        const int k = 1 - j;
        const double eps = j == 0 ? 1.0 : -1.0;
        for (int l = 0; l < 2; ++l)
            for (int m = 0; m < 2; ++m)
                for (int n = 0; n < 2; ++n) coef[j + m + n] += eps * Gi(k, l) * E(l, m, n);
    }
    return {coef[0], coef[1] / 3.0, coef[2] / 3.0, coef[3]};
}

double cubic_discriminant(const BinaryCubic& c) {
    return 6.0 * c.c0 * c.c1 * c.c2 * c.c3 + 3.0 * c.c1 * c.c1 * c.c2 * c.c2 -
           4.0 * c.c0 * c.c2 * c.c2 * c.c2 - 4.0 * c.c1 * c.c1 * c.c1 * c.c3 - c.c0 * c.c0 * c.c3 * c.c3;
}

ElementClass classify_cubic(const BinaryCubic& c) {
    if (c.max_abs() <= 1e-12) return ElementClass::NonOrdinary;
    const double d = cubic_discriminant(c);
    if (d > kDiscriminantBand) return ElementClass::Hyperbolic;
    if (d < -kDiscriminantBand) return ElementClass::MixedRealComplex;
    return ElementClass::RepeatedRoot;
}

ElementClass classify_element(const IntegralElement& E) {
    const double r = integral_element_residual(E);
    if (std::abs(r) > residual_tolerance(E)) {
        throw Error(ErrorCode::NotAnIntegralElement,
                    "quadratic residual " + std::to_string(r) + " exceeds tolerance");
    }
    return classify_cubic(characteristic_cubic(E));
}

IntegralElement construct_hyperbolic_element(const FramePoint& frame) {
    if (!(std::abs(frame.det()) > 1e-12)) throw Error(ErrorCode::DegenerateFrame, "frame metric is degenerate");
    IntegralElement out;
    if (entries_nonzero(frame.G) && construct_direct(frame, out)) return out;
    for (const Eigen::Matrix2d& S : shear_schedule()) {
        const Eigen::Matrix2d Gs = S.transpose() * frame.G * S;
        if (!entries_nonzero(Gs)) continue;
        IntegralElement moved;
        if (!construct_direct(FramePoint::make(Gs, frame.K), moved)) continue;
        IntegralElement back = gl2_transform(moved, S.inverse());
        back.frame = frame;
        if (std::abs(integral_element_residual(back)) <= residual_tolerance(back) &&
            cubic_discriminant(characteristic_cubic(back)) > kDiscriminantBand) {
            return back;
        }
    }
    throw Error(ErrorCode::DegenerateFrame, "no admissible element found for this frame");
}

IntegralElement gl2_transform(const IntegralElement& E, const Eigen::Matrix2d& A) {
    const double det = A.determinant();
    if (!(std::abs(det) > 1e-14)) throw Error(ErrorCode::SingularMatrix, "transformation matrix is singular");
    IntegralElement out;
    out.frame = FramePoint::make(A.transpose() * E.frame.G * A, E.frame.K);
    // One representative (i, j, k) per stored component.
    const int rep[4][3] = {{0, 0, 0}, {0, 0, 1}, {0, 1, 1}, {1, 1, 1}};
    for (int t = 0; t < 4; ++t) {
        const int i = rep[t][0], j = rep[t][1], k = rep[t][2];
        double acc = 0.0;
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                for (int c = 0; c < 2; ++c) acc += E(a, b, c) * A(a, i) * A(b, j) * A(c, k);
        out.p[t] = acc;
    }
    return out;
}

Eigen::Matrix<double, 4, 6> polar_equations(const FramePoint& frame, const TangentVector& v) {
    // Columns: omega1, omega2, theta, sigma11, sigma12, sigma22.
    auto sigma_col = [](int i, int j) { return 3 + i + j; };
    const double a1 = v.a[0], a2 = v.a[1];
    Eigen::Matrix<double, 4, 6> M = Eigen::Matrix<double, 4, 6>::Zero();
    M(0, 2) = 1.0;
    // v -| Omega_i = s_i1 omega1 + s_i2 omega2 - a1 sigma_i1 - a2 sigma_i2
    for (int i = 0; i < 2; ++i) {
        M(1 + i, 0) = v.s_at(i, 0);
        M(1 + i, 1) = v.s_at(i, 1);
        M(1 + i, sigma_col(i, 0)) -= a1;
        M(1 + i, sigma_col(i, 1)) -= a2;
    }
    // v -| Theta = G^kl (s_k1 sigma_l2 - s_l2 sigma_k1) + K det G (a1 omega2 - a2 omega1)
    const Eigen::Matrix2d& Gi = frame.Ginv;
    for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) {
            M(3, sigma_col(l, 1)) += Gi(k, l) * v.s_at(k, 0);
            M(3, sigma_col(k, 0)) -= Gi(k, l) * v.s_at(l, 1);
        }
    }
    const double kd = frame.K * frame.det();
    M(3, 0) -= kd * a2;
    M(3, 1) += kd * a1;
    return M;
}

int numeric_rank(const Eigen::MatrixXd& m) {
    Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
    lu.setThreshold(kRankThreshold);
    return static_cast<int>(lu.rank());
}

PolarData polar_data(const FramePoint& frame, const TangentVector& v) {
    const Eigen::Matrix<double, 4, 6> M = polar_equations(frame, v);
    PolarData d;
    d.rank = numeric_rank(M);
    d.dim_h = 6 - d.rank;
    Eigen::Matrix<double, 6, 6> W = Eigen::Matrix<double, 6, 6>::Zero();
    W.topRows<4>() = M;
    W(4, 0) = 1.0;
    W(5, 1) = 1.0;
    d.independent = numeric_rank(W) == d.rank + 2;

    // s^i_j = G^ik s_kj
    Eigen::Matrix2d s;
    s << v.s[0], v.s[1], v.s[1], v.s[2];
    const Eigen::Matrix2d su = frame.Ginv * s;
    const double a1 = v.a[0], a2 = v.a[1];
    d.regularity = a1 * a1 * su(1, 0) - a1 * a2 * (su(0, 0) - su(1, 1)) - a2 * a2 * su(0, 1);
    return d;
}

CartanCharacters cartan_characters(const FramePoint& frame, const TangentVector& v) {
    const PolarData d = polar_data(frame, v);
    if (std::abs(d.regularity) <= kRegularityBand) {
        throw Error(ErrorCode::NotRegular, "tangent vector is not regular (regularity value vanishes)");
    }
    const Eigen::Matrix<double, 4, 6> M = polar_equations(frame, v);
    CartanCharacters c;
    c.s0 = numeric_rank(M.topRows<1>());
    c.s1 = d.rank - c.s0;
    c.s2 = d.dim_h - 2;
    return c;
}

}  // namespace hj

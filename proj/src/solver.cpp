#include "hessjet/solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hessjet/error.hpp"

namespace hj {

namespace {

using Unknowns = std::array<Jet2, 4>;  // x1, x2, p1, p2

struct Slot {
    int jet, a, b;
};

// Coefficients of total degree D with a positive u2 exponent; the u2-free
// ones are fixed by the curve data.
std::vector<Slot> unknown_slots(int D) {
    std::vector<Slot> s;
    for (int f = 0; f < 4; ++f)
        for (int b = 1; b <= D; ++b) s.push_back({f, D - b, b});
    return s;
}

std::vector<Slot> equation_slots(int D) {
    std::vector<Slot> s;
    for (int r = 0; r < 4; ++r)
        for (int b = 0; b <= D; ++b) s.push_back({r, D - b, b});
    return s;
}

double coefficient_scale(const Unknowns& F) {
    double s = 1.0;
    for (const Jet2& j : F) s = std::max(s, j.max_abs());
    return s;
}

Jet1 series_reciprocal(const Jet1& b) {
    const int n = b.order();
    if (b[0] == 0.0) throw Error(ErrorCode::DivisionByZeroConstantTerm, "curve derivative vanishes at the base point");
    Jet1 r(n);
    r[0] = 1.0 / b[0];
    for (int k = 1; k <= n; ++k) {
        double s = 0.0;
        for (int i = 1; i <= k; ++i) s += b[i] * r[k - i];
        r[k] = -s / b[0];
    }
    return r;
}

// Geometry of the curve y2 = 0 at the base point.
struct BasePoint {
    Eigen::Matrix2d G;
    Eigen::Vector2d gamma11;  // Gamma^i_11
    double g11_t = 0.0;       // d/dt g11(t, 0)
};

BasePoint base_geometry(const MetricJet& m) {
    BasePoint b;
    b.G << m.g11.constant_term(), m.g12.constant_term(), m.g12.constant_term(), m.g22.constant_term();
    if (m.order() >= 1) {
        const ChristoffelJet c = christoffel(m);
        b.gamma11 << c(0, 0, 0).constant_term(), c(1, 0, 0).constant_term();
        b.g11_t = m.g11(1, 0);
    } else {
        b.gamma11.setZero();
    }
    return b;
}

// Low-order curve derivatives entering the frame equation.
struct CurveJets {
    double x1d, x1dd, x2d, x2dd, p1d, p1dd, p2d, p2dd;
};

CurveJets curve_jets(const InitialData& d) {
    return {d.x1_curve[1], 2.0 * d.x1_curve[2], d.x2_curve[1], 2.0 * d.x2_curve[2],
            d.p1_curve[1], 2.0 * d.p1_curve[2], d.p2_curve[1], 2.0 * d.p2_curve[2]};
}

// Vanishing of theta along the curve at the base point, as a function of e2.
double frame_equation(const BasePoint& b, const CurveJets& c, const Eigen::Vector2d& e2) {
    const double gee = e2.dot(b.G * e2);
    return c.p2dd - 2.0 * e2.dot(b.G * b.gamma11) + c.x2dd * gee + (c.x1dd / c.x1d) * (c.p2d - c.x2d * gee);
}

// Frame matrix with columns e1, e2, where gamma' = x1' e1 + x2' e2.
Eigen::Matrix2d frame_matrix(const CurveJets& c, const Eigen::Vector2d& e2) {
    Eigen::Matrix2d E;
    const Eigen::Vector2d e1 = (Eigen::Vector2d(1.0, 0.0) - c.x2d * e2) / c.x1d;
    E.col(0) = e1;
    E.col(1) = e2;
    return E;
}

// E*(C) on the curve direction, from second-order curve data.
double curve_cubic_value(const BasePoint& b, const CurveJets& c, const Eigen::Matrix2d& E) {
    const Eigen::Matrix2d Gf = E.transpose() * b.G * E;
    Eigen::Matrix2d eps;
    eps << 0.0, 1.0, -1.0, 0.0;
    const Eigen::Vector2d a(c.x1d, c.x2d);
    const Eigen::Vector2d pdd(c.p1dd, c.p2dd);
    return 0.5 * (a.dot(eps * Gf.inverse() * pdd) - (c.x1d * c.x2dd - c.x2d * c.x1dd));
}

struct FrameRoot {
    double beta;
    Eigen::Vector2d e2;
};

// e2 = p2' z + beta m with g(e2, gamma') = p2' built in; the frame
// equation is then quadratic in beta.
std::vector<FrameRoot> frame_roots(const BasePoint& b, const CurveJets& c) {
    const Eigen::Vector2d g1 = b.G.col(0);
    const Eigen::Vector2d z = g1 / g1.squaredNorm();
    const Eigen::Vector2d mv(-b.G(0, 1), b.G(0, 0));
    auto e2_of = [&](double beta) -> Eigen::Vector2d { return c.p2d * z + beta * mv; };
    const double f0 = frame_equation(b, c, e2_of(0.0));
    const double fp = frame_equation(b, c, e2_of(1.0));
    const double fm = frame_equation(b, c, e2_of(-1.0));
    const double qa = 0.5 * (fp + fm) - f0, qb = 0.5 * (fp - fm), qc = f0;
    const double scale = std::max({std::abs(qa), std::abs(qb), std::abs(qc), 1e-300});
    std::vector<double> betas;
    if (std::abs(qa) <= 1e-12 * scale) {
        if (std::abs(qb) > 1e-12 * scale) betas.push_back(-qc / qb);
    } else {
        const double disc = qb * qb - 4.0 * qa * qc;
        if (disc > 1e-12 * scale * scale) {
            const double sq = std::sqrt(disc);
            betas.push_back((-qb + sq) / (2.0 * qa));
            betas.push_back((-qb - sq) / (2.0 * qa));
        }
    }
    std::vector<FrameRoot> out;
    for (double beta : betas) out.push_back({beta, e2_of(beta)});
    return out;
}

void set_curve_coefficients(Unknowns& F, const InitialData& d, int N) {
    const Jet1* curves[4] = {&d.x1_curve, &d.x2_curve, &d.p1_curve, &d.p2_curve};
    for (int f = 0; f < 4; ++f)
        for (int k = 0; k <= N; ++k) F[f](k, 0) = (*curves[f])[k];
}

// u2-derivatives at the base point from the frame: Jx = E^-1, Jp = E^T G.
void set_normal_derivatives(Unknowns& F, const Eigen::Matrix2d& E, const Eigen::Matrix2d& G) {
    const Eigen::Matrix2d Jx = E.inverse();
    const Eigen::Matrix2d Jp = E.transpose() * G;
    F[0](0, 1) = Jx(0, 1);
    F[1](0, 1) = Jx(1, 1);
    F[2](0, 1) = Jp(0, 1);
    F[3](0, 1) = Jp(1, 1);
}

struct March {
    Unknowns F;
    SolveDiagnostics diag;
    bool ok = true;
    ErrorCode failure = ErrorCode::ObstructionDetected;
    std::string message;
};

class LevelSystem {
public:
    LevelSystem(const MetricJet& m, Unknowns& F, int L)
        : m_(m), F_(F), L_(L) {
        for (int D : {L - 1, L}) {
            if (D < 1) continue;
            auto s = unknown_slots(D);
            unknowns_.insert(unknowns_.end(), s.begin(), s.end());
        }
        for (int D : {L - 2, L - 1}) {
            if (D < 0) continue;
            auto s = equation_slots(D);
            equations_.insert(equations_.end(), s.begin(), s.end());
        }
    }

    int n_unknowns() const { return static_cast<int>(unknowns_.size()); }

    Eigen::VectorXd values() const {
        Eigen::VectorXd v(n_unknowns());
        for (int k = 0; k < n_unknowns(); ++k) v[k] = F_[unknowns_[k].jet](unknowns_[k].a, unknowns_[k].b);
        return v;
    }

    void assign(const Eigen::VectorXd& v) {
        for (int k = 0; k < n_unknowns(); ++k) F_[unknowns_[k].jet](unknowns_[k].a, unknowns_[k].b) = v[k];
    }

    Eigen::VectorXd residual(const Eigen::VectorXd& v) {
        assign(v);
        const auto R = equation_residuals(m_, F_, L_ - 1);
        Eigen::VectorXd r(static_cast<Eigen::Index>(equations_.size()));
        for (std::size_t i = 0; i < equations_.size(); ++i) r[i] = R[equations_[i].jet](equations_[i].a, equations_[i].b);
        return r;
    }

    // The residual is quadratic in the unknowns, so symmetric differences
    // with unit steps give the exact Jacobian.
    Eigen::MatrixXd jacobian(const Eigen::VectorXd& v) {
        Eigen::MatrixXd J(static_cast<Eigen::Index>(equations_.size()), n_unknowns());
        Eigen::VectorXd w = v;
        for (int k = 0; k < n_unknowns(); ++k) {
            w[k] = v[k] + 1.0;
            const Eigen::VectorXd rp = residual(w);
            w[k] = v[k] - 1.0;
            const Eigen::VectorXd rm = residual(w);
            w[k] = v[k];
            J.col(k) = 0.5 * (rp - rm);
        }
        assign(v);
        return J;
    }

private:
    const MetricJet& m_;
    Unknowns& F_;
    int L_;
    std::vector<Slot> unknowns_;
    std::vector<Slot> equations_;
};

int expected_rank(int L) {
    if (L == 1) return 3;
    if (L == 2) return 10;
    return 7 * L - 4;
}

March march(const MetricJet& m, const InitialData& d, int N, const Tolerances& tol) {
    March out;
    for (Jet2& j : out.F) j = Jet2(N);
    set_curve_coefficients(out.F, d, N);
    const BasePoint b = base_geometry(m);
    const CurveJets cj = curve_jets(d);
    const Eigen::Matrix2d E = frame_matrix(cj, Eigen::Vector2d(d.normal_frame[0], d.normal_frame[1]));
    if (!(std::abs(E.determinant()) > 1e-12)) {
        out.ok = false;
        out.failure = ErrorCode::RankCollapse;
        out.message = "normal frame is parallel to the curve";
        return out;
    }
    set_normal_derivatives(out.F, E, b.G);

    auto fail = [&](ErrorCode code, const std::string& msg) {
        out.ok = false;
        out.failure = code;
        out.message = msg;
    };

    {
        LevelSystem sys(m, out.F, 1);
        const Eigen::VectorXd v = sys.values();
        const Eigen::VectorXd r = sys.residual(v);
        Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(sys.jacobian(v));
        cod.setThreshold(tol.pivot);
        out.diag.rank.push_back(static_cast<int>(cod.rank()));
        out.diag.unknowns.push_back(sys.n_unknowns());
        out.diag.expected_rank.push_back(expected_rank(1));
        out.diag.iterations.push_back(0);
        const double res = r.size() ? r.cwiseAbs().maxCoeff() : 0.0;
        out.diag.level_residual.push_back(res);
        if (res > tol.consistency * coefficient_scale(out.F)) {
            fail(ErrorCode::ObstructionDetected, "base-point equations are inconsistent with the initial data");
            return out;
        }
    }

    for (int L = 2; L <= N; ++L) {
        LevelSystem sys(m, out.F, L);
        Eigen::VectorXd v = sys.values();
        Eigen::MatrixXd J;
        int rank = 0;
        int it = 0;
        for (; it < 25; ++it) {
            const Eigen::VectorXd r = sys.residual(v);
            J = sys.jacobian(v);
            Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(J);
            cod.setThreshold(tol.pivot);
            rank = static_cast<int>(cod.rank());
            const Eigen::VectorXd dv = cod.solve(-r);
            v += dv;
            if (dv.cwiseAbs().maxCoeff() <= 1e-15 * (1.0 + v.cwiseAbs().maxCoeff())) break;
        }
        const Eigen::VectorXd r = sys.residual(v);
        const double res = r.cwiseAbs().maxCoeff();
        out.diag.rank.push_back(rank);
        out.diag.unknowns.push_back(sys.n_unknowns());
        out.diag.expected_rank.push_back(expected_rank(L));
        out.diag.iterations.push_back(it + 1);
        out.diag.level_residual.push_back(res);
        if (!std::isfinite(res) || res > tol.consistency * coefficient_scale(out.F)) {
            if (rank < expected_rank(L)) {
                fail(ErrorCode::RankCollapse, "rank " + std::to_string(rank) + " < " +
                                                  std::to_string(expected_rank(L)) + " at degree " +
                                                  std::to_string(L));
            } else {
                fail(ErrorCode::ObstructionDetected, "inconsistent system at degree " + std::to_string(L) +
                                                         " (residual " + std::to_string(res) + ")");
            }
            return out;
        }
    }

    const auto R = equation_residuals(m, out.F, N - 1);
    for (int e = 0; e < 4; ++e) {
        out.diag.residual_by_degree[e].clear();
        for (int deg = 0; deg <= N - 1; ++deg) {
            const double v = R[e].degree_max(deg);
            out.diag.residual_by_degree[e].push_back(v);
            out.diag.max_residual = std::max(out.diag.max_residual, v);
        }
    }
    if (out.diag.max_residual > tol.equations * coefficient_scale(out.F)) {
        fail(ErrorCode::ObstructionDetected, "equation residuals exceed tolerance");
    }
    return out;
}

InitialData build_data(const MetricJet& m, int N, const Jet1& x2, const Jet1& p2) {
    InitialData d;
    d.x1_curve = Jet1(N);
    d.x1_curve[1] = 1.0;
    d.x2_curve = x2.truncated(N);
    d.p2_curve = p2.truncated(N);
    // p1' x1' + p2' x2' = g11(t, 0)
    const Jet1 g11 = restrict_u1(m.g11).truncated(N - 1);
    const Jet1 x1d = d.x1_curve.derivative();
    const Jet1 rhs = g11 - mul(d.p2_curve.derivative(), d.x2_curve.derivative());
    d.p1_curve = mul(rhs, series_reciprocal(x1d)).integral(0.0).truncated(N);
    return d;
}

double trial_score(const Unknowns& F, int T) {
    double s = 0.0;
    for (const Jet2& j : F) s = std::max(s, j.degree_max(T));
    return s;
}

struct Candidate {
    InitialData data;
    double score;
};

// Tries every frame root for the given curves; keeps the best trial.
void consider(const MetricJet& m, int N, const Jet1& x2, const Jet1& p2, double cubic_margin, GaugeRecord rec,
              std::optional<Candidate>& best, int& tried) {
    const int T = std::min(N, 5);
    InitialData d = build_data(m, N, x2, p2);
    const BasePoint b = base_geometry(m);
    const CurveJets cj = curve_jets(d);
    for (const FrameRoot& root : frame_roots(b, cj)) {
        const Eigen::Matrix2d E = frame_matrix(cj, root.e2);
        if (!(std::abs(E.determinant()) > 1e-3)) continue;
        if (!(std::abs(curve_cubic_value(b, cj, E)) > cubic_margin)) continue;
        d.normal_frame = {root.e2[0], root.e2[1]};
        ++tried;
        InitialData trial = d;
        trial.x1_curve = d.x1_curve.truncated(T);
        trial.x2_curve = d.x2_curve.truncated(T);
        trial.p1_curve = d.p1_curve.truncated(T);
        trial.p2_curve = d.p2_curve.truncated(T);
        const March t = march(m, trial, T, Tolerances{});
        if (!t.ok) continue;
        const double score = trial_score(t.F, T);
        if (!best || score < best->score * (1.0 - 1e-9)) {
            rec.beta = root.beta;
            rec.score = score;
            d.gauge = rec;
            best = Candidate{d, score};
        }
    }
}

}  // namespace

std::array<Jet2, 4> equation_residuals(const MetricJet& m, const Unknowns& F, int M) {
    std::array<Jet2, 2> dx1, dx2, dp1, dp2;  // [direction]
    for (int a = 0; a < 2; ++a) {
        dx1[a] = partial(F[0].truncated(M + 1), a + 1);
        dx2[a] = partial(F[1].truncated(M + 1), a + 1);
        dp1[a] = partial(F[2].truncated(M + 1), a + 1);
        dp2[a] = partial(F[3].truncated(M + 1), a + 1);
    }
    auto pair = [&](int a, int b) { return mul(dp1[a], dx1[b]) + mul(dp2[a], dx2[b]); };
    const Jet2 A = pair(0, 1), B = pair(1, 0);
    return {pair(0, 0) - m.g11.truncated(M), 0.5 * (A + B) - m.g12.truncated(M), pair(1, 1) - m.g22.truncated(M),
            A - B};
}

InitialData default_initial_data(const MetricJet& m, int N, const std::optional<Gauge>& gauge) {
    check_nondegenerate(m);
    if (N < 2) throw Error(ErrorCode::OrderTooSmall, "initial data needs order >= 2");
    if (m.order() < N - 1) throw Error(ErrorCode::OrderTooSmall, "metric order is below N - 1");
    std::optional<Candidate> best;
    int tried = 0;
    if (gauge) {
        GaugeRecord rec;
        rec.user_supplied = true;
        rec.mu = 2.0 * gauge->x2_curve[2];
        rec.c = gauge->p2_curve[1];
        rec.kappa = 2.0 * gauge->p2_curve[2];
        consider(m, N, gauge->x2_curve, gauge->p2_curve, 1e-8, rec, best, tried);
    } else {
        const double mus[] = {0.0, 0.25, -0.25, 0.5, -0.5, 1.0, -1.0};
        const double cs[] = {1.0, 0.5, 2.0, -1.0};
        const double kappas[] = {0.0, 0.25, -0.25, 0.5, -0.5, 1.0, -1.0, 2.0, -2.0};
        for (double mu : mus) {
            for (double c : cs) {
                for (double kappa : kappas) {
                    Jet1 x2(N), p2(N);
                    x2[2] = 0.5 * mu;
                    p2[1] = c;
                    p2[2] = 0.5 * kappa;
                    GaugeRecord rec;
                    rec.mu = mu;
                    rec.c = c;
                    rec.kappa = kappa;
                    consider(m, N, x2, p2, 0.05, rec, best, tried);
                }
            }
        }
    }
    if (!best) {
        throw Error(ErrorCode::NoAdmissibleGauge,
                    "no noncharacteristic initial data found (" + std::to_string(tried) + " candidates tried)");
    }
    best->data.gauge.candidates_tried = tried;
    return best->data;
}

InitialDataCheck validate_initial_data(const MetricJet& m, const InitialData& d, int N, const Tolerances& tol) {
    InitialDataCheck chk;
    if (!(std::abs(d.x1_curve[1]) > 0.0)) throw Error(ErrorCode::ConstraintViolated, "x1 curve has zero speed");
    const Jet1 g11 = restrict_u1(m.g11).truncated(N - 1);
    const Jet1 lhs = mul(d.p1_curve.derivative(), d.x1_curve.derivative()) +
                     mul(d.p2_curve.derivative(), d.x2_curve.derivative());
    const Jet1 diff = lhs.truncated(N - 1) - g11;
    for (int k = 0; k <= N - 1; ++k) chk.tangential_residual = std::max(chk.tangential_residual, std::abs(diff[k]));
    if (chk.tangential_residual > tol.tangential) {
        throw Error(ErrorCode::ConstraintViolated,
                    "tangential constraint residual " + std::to_string(chk.tangential_residual));
    }

    const BasePoint b = base_geometry(m);
    const CurveJets cj = curve_jets(d);
    const Eigen::Vector2d e2(d.normal_frame[0], d.normal_frame[1]);
    const Eigen::Matrix2d E = frame_matrix(cj, e2);
    if (!(std::abs(E.determinant()) > 1e-12)) throw Error(ErrorCode::ConstraintViolated, "degenerate normal frame");
    const double along = e2.dot(b.G.col(0)) - cj.p2d;
    chk.frame_residual = std::max(std::abs(frame_equation(b, cj, e2)), std::abs(along));
    if (chk.frame_residual > tol.tangential) {
        throw Error(ErrorCode::ConstraintViolated,
                    "normal frame violates the curve condition (residual " + std::to_string(chk.frame_residual) + ")");
    }
    chk.cubic_value = curve_cubic_value(b, cj, E);
    if (!(std::abs(chk.cubic_value) > tol.characteristic)) {
        throw Error(ErrorCode::CharacteristicInitialData, "curve direction is characteristic (E*(C) = " +
                                                              std::to_string(chk.cubic_value) + ")");
    }
    return chk;
}

Jet2 recover_potential(const Jet2& x1, const Jet2& x2, const Jet2& p1, const Jet2& p2, double f0, double tol) {
    const int N = std::min({x1.order(), x2.order(), p1.order(), p2.order()});
    if (N < 1) throw Error(ErrorCode::OrderTooSmall, "potential recovery needs order >= 1");
    const Jet2 P1 = mul(p1.truncated(N - 1), partial(x1, 1)) + mul(p2.truncated(N - 1), partial(x2, 1));
    const Jet2 P2 = mul(p1.truncated(N - 1), partial(x1, 2)) + mul(p2.truncated(N - 1), partial(x2, 2));
    if (N >= 2) {
        const double mixed = (partial(P1, 2) - partial(P2, 1)).max_abs();
        if (mixed > tol) {
            throw Error(ErrorCode::NotClosed, "p_i dx^i is not closed (mixed-partial defect " + std::to_string(mixed) + ")");
        }
    }
    Jet2 f(N);
    f(0, 0) = f0;
    for (int d = 1; d <= N; ++d) {
        for (int b = 0; b <= d; ++b) {
            const int a = d - b;
            f(a, b) = a >= 1 ? P1(a - 1, b) / a : P2(0, b - 1) / b;
        }
    }
    return f;
}

HessianChart solve(const MetricJet& m, const InitialData& d, int N, const Tolerances& tol) {
    check_nondegenerate(m);
    if (N < 2) throw Error(ErrorCode::OrderTooSmall, "solve needs order >= 2");
    if (m.order() < N - 1) throw Error(ErrorCode::OrderTooSmall, "metric order is below N - 1");
    March mr = march(m, d, N, tol);
    if (!mr.ok) throw Error(mr.failure, mr.message);

    HessianChart c;
    c.order = N;
    c.base_point = m.base_point;
    c.x1 = mr.F[0];
    c.x2 = mr.F[1];
    c.p1 = mr.F[2];
    c.p2 = mr.F[3];
    c.diagnostics = mr.diag;
    c.f = recover_potential(c.x1, c.x2, c.p1, c.p2, d.f0, tol.closedness * coefficient_scale(mr.F));
    c.diagnostics.closedness = (partial(mul(c.p1.truncated(N - 1), partial(c.x1, 1)) +
                                            mul(c.p2.truncated(N - 1), partial(c.x2, 1)),
                                        2) -
                                partial(mul(c.p1.truncated(N - 1), partial(c.x1, 2)) +
                                            mul(c.p2.truncated(N - 1), partial(c.x2, 2)),
                                        1))
                                   .max_abs();
    c.ymap = invert_map({c.x1, c.x2});
    c.F = compose(c.f, c.ymap);

    // G = Jp Jx^-1 is the Hessian of F in x; p_ijk = (1/2) d_k G_ij.
    const int n = N - 1;
    std::array<std::array<Jet2, 2>, 2> Jx, Jp;
    for (int a = 0; a < 2; ++a) {
        Jx[0][a] = partial(c.x1, a + 1);
        Jx[1][a] = partial(c.x2, a + 1);
        Jp[0][a] = partial(c.p1, a + 1);
        Jp[1][a] = partial(c.p2, a + 1);
    }
    const Jet2 inv_det = reciprocal(mul(Jx[0][0], Jx[1][1]) - mul(Jx[0][1], Jx[1][0]));
    std::array<std::array<Jet2, 2>, 2> Jxi = {{{mul(Jx[1][1], inv_det), -mul(Jx[0][1], inv_det)},
                                               {-mul(Jx[1][0], inv_det), mul(Jx[0][0], inv_det)}}};
    Eigen::Matrix2d G0, Ji0;
    std::array<std::array<Eigen::Vector2d, 2>, 2> dG;  // dG[i][j](b) = d_b G_ij at 0
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            Jet2 Gij(n);
            for (int a = 0; a < 2; ++a) Gij += mul(Jp[i][a], Jxi[a][j]);
            G0(i, j) = Gij.constant_term();
            Ji0(i, j) = Jxi[i][j].constant_term();
            dG[i][j] = n >= 1 ? Eigen::Vector2d(Gij(1, 0), Gij(0, 1)) : Eigen::Vector2d::Zero();
        }
    }
    const double K0 = N >= 2 && m.order() >= 2 ? gauss_curvature(m).constant_term() : 0.0;
    IntegralElement be;
    be.frame = FramePoint::make(G0, K0);
    const int rep[4][3] = {{0, 0, 0}, {0, 0, 1}, {0, 1, 1}, {1, 1, 1}};
    for (int t = 0; t < 4; ++t) {
        const int i = rep[t][0], j = rep[t][1], k = rep[t][2];
        be.p[t] = 0.5 * (dG[i][j][0] * Ji0(0, k) + dG[i][j][1] * Ji0(1, k));
    }
    c.base_element = be;
    return c;
}

VerifyReport verify(const MetricJet& m, const HessianChart& chart) {
    const int N = chart.order;
    if (N < 2) throw Error(ErrorCode::OrderTooSmall, "verification needs order >= 2");
    const JetPair y = invert_map({chart.x1, chart.x2});
    const Jet2 F = compose(chart.f, y);
    const int n = N - 2;
    std::array<std::array<Jet2, 2>, 2> H;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) H[i][j] = partial(partial(F, i + 1), j + 1);
    JetPair xs = {chart.x1.truncated(n), chart.x2.truncated(n)};
    xs[0](0, 0) = 0.0;
    xs[1](0, 0) = 0.0;
    std::array<std::array<Jet2, 2>, 2> Hx, dx;  // dx[a][i] = d_a x^i
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) Hx[i][j] = compose(H[i][j], xs);
    const Jet2* xj[2] = {&chart.x1, &chart.x2};
    for (int a = 0; a < 2; ++a)
        for (int i = 0; i < 2; ++i) dx[a][i] = partial(*xj[i], a + 1).truncated(n);

    VerifyReport rep;
    rep.residual_by_degree.assign(static_cast<std::size_t>(n + 1), 0.0);
    for (int a = 0; a < 2; ++a) {
        for (int b = a; b < 2; ++b) {
            Jet2 r = m.g(a, b).truncated(n);
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) r -= mul(Hx[i][j], mul(dx[a][i], dx[b][j]));
            for (int deg = 0; deg <= n; ++deg)
                rep.residual_by_degree[deg] = std::max(rep.residual_by_degree[deg], r.degree_max(deg));
        }
    }
    for (double v : rep.residual_by_degree) rep.max_residual = std::max(rep.max_residual, v);
    return rep;
}

}  // namespace hj

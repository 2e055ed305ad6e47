#include "hessjet/metric.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hessjet/error.hpp"

namespace hj {

const char* signature_name(Signature s) {
    switch (s) {
        case Signature::Positive: return "(+,+)";
        case Signature::Negative: return "(-,-)";
        case Signature::Indefinite: return "(+,-)";
    }
    return "?";
}

int MetricJet::order() const { return std::min({g11.order(), g12.order(), g22.order()}); }

const Jet2& MetricJet::g(int i, int j) const {
    if (i == 0 && j == 0) return g11;
    if (i == 1 && j == 1) return g22;
    return g12;
}

MetricJet make_metric(const Jet2& g11, const Jet2& g12, const Jet2& g22, std::array<double, 2> base) {
    const int n = std::min({g11.order(), g12.order(), g22.order()});
    return MetricJet{base, g11.truncated(n), g12.truncated(n), g22.truncated(n)};
}

Nondegeneracy check_nondegenerate(const MetricJet& m, double tol) {
    Jet2 det = mul(m.g11, m.g22) - mul(m.g12, m.g12);
    const double d0 = det.constant_term();
    if (!(std::abs(d0) > tol)) {
        throw Error(ErrorCode::NondegeneracyFailure,
                    "det g vanishes at the base point (det g(0) = " + std::to_string(d0) + ")");
    }
    Signature sig = Signature::Indefinite;
    if (d0 > 0.0) sig = m.g11.constant_term() > 0.0 ? Signature::Positive : Signature::Negative;
    return {std::move(det), sig};
}

std::array<Jet2, 3> inverse_metric(const MetricJet& m) {
    const Jet2 inv_det = reciprocal(check_nondegenerate(m).det);
    return {mul(m.g22, inv_det), -mul(m.g12, inv_det), mul(m.g11, inv_det)};
}

ChristoffelJet christoffel(const MetricJet& m) {
    if (m.order() < 1) throw Error(ErrorCode::OrderTooSmall, "Christoffel symbols need order >= 1");
    const auto ginv3 = inverse_metric(m);
    const int n = m.order() - 1;
    auto ginv = [&](int i, int j) -> Jet2 {
        const Jet2& v = (i == 0 && j == 0) ? ginv3[0] : (i == 1 && j == 1) ? ginv3[2] : ginv3[1];
        return v.truncated(n);
    };
    // dg[k][i][j] = d_k g_ij
    std::array<std::array<std::array<Jet2, 2>, 2>, 2> dg;
    for (int k = 0; k < 2; ++k)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) dg[k][i][j] = partial(m.g(i, j), k + 1);

    ChristoffelJet c;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            for (int k = j; k < 2; ++k) {
                Jet2 acc(n);
                for (int l = 0; l < 2; ++l) {
                    acc += mul(ginv(i, l), dg[j][l][k] + dg[k][j][l] - dg[l][j][k]);
                }
                acc *= 0.5;
                c.gamma[i][j][k] = acc;
                c.gamma[i][k][j] = acc;
            }
        }
    }
    return c;
}

Jet2 gauss_curvature(const MetricJet& m) {
    if (m.order() < 2) throw Error(ErrorCode::OrderTooSmall, "Gauss curvature needs order >= 2");
    const Nondegeneracy nd = check_nondegenerate(m);
    const ChristoffelJet c = christoffel(m);
    const int n = m.order() - 2;
    auto G = [&](int i, int j, int k) { return c(i, j, k).truncated(n); };

    // R^i_{212} = d_1 Gamma^i_22 - d_2 Gamma^i_12 + Gamma^i_1p Gamma^p_22 - Gamma^i_2p Gamma^p_12
    std::array<Jet2, 2> r;
    for (int i = 0; i < 2; ++i) {
        Jet2 acc = partial(c(i, 1, 1), 1) - partial(c(i, 0, 1), 2);
        for (int p = 0; p < 2; ++p) {
            acc += mul(G(i, 0, p), G(p, 1, 1));
            acc -= mul(G(i, 1, p), G(p, 0, 1));
        }
        r[i] = acc;
    }
    const Jet2 r1212 = mul(m.g11.truncated(n), r[0]) + mul(m.g12.truncated(n), r[1]);
    return div(r1212, nd.det.truncated(n));
}

MetricJet pullback(const MetricJet& m, const JetPair& phi) {
    const int n = std::min({m.order(), phi[0].order(), phi[1].order()}) - 1;
    if (n < 0) throw Error(ErrorCode::OrderTooSmall, "pullback needs order >= 1");
    const JetPair inner = {phi[0].truncated(n), phi[1].truncated(n)};
    std::array<std::array<Jet2, 2>, 2> gc;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) gc[i][j] = compose(m.g(i, j).truncated(n), inner);
    // d[a][i] = d_a phi^i
    std::array<std::array<Jet2, 2>, 2> d;
    for (int a = 0; a < 2; ++a)
        for (int i = 0; i < 2; ++i) d[a][i] = partial(phi[i], a + 1).truncated(n);
    auto comp = [&](int a, int b) {
        Jet2 acc(n);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) acc += mul(gc[i][j], mul(d[a][i], d[b][j]));
        return acc;
    };
    return MetricJet{{0.0, 0.0}, comp(0, 0), comp(0, 1), comp(1, 1)};
}

}  // namespace hj

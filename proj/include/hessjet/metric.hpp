#pragma once

#include <array>
#include <string>

#include "hessjet/jet2.hpp"

namespace hj {

enum class Signature { Positive, Negative, Indefinite };

const char* signature_name(Signature s);

/// Surface metric g11 dy1^2 + 2 g12 dy1 dy2 + g22 dy2^2 as jets around a
/// base point.
struct MetricJet {
    std::array<double, 2> base_point{0.0, 0.0};
    Jet2 g11, g12, g22;

    int order() const;
    /// Component g_ij with 0-based indices.
    const Jet2& g(int i, int j) const;
};

MetricJet make_metric(const Jet2& g11, const Jet2& g12, const Jet2& g22,
                      std::array<double, 2> base = {0.0, 0.0});

struct Nondegeneracy {
    Jet2 det;
    Signature signature;
};

/// det g and its signature at the base point. Throws NondegeneracyFailure
/// when |det g(0)| <= tol.
Nondegeneracy check_nondegenerate(const MetricJet& m, double tol = 1e-12);

/// Entries (g^11, g^12, g^22) of the inverse metric.
std::array<Jet2, 3> inverse_metric(const MetricJet& m);

/// Gamma^i_jk stored as gamma[i][j][k] (0-based), order N-1.
struct ChristoffelJet {
    std::array<std::array<std::array<Jet2, 2>, 2>, 2> gamma;
    const Jet2& operator()(int i, int j, int k) const { return gamma[i][j][k]; }
};

ChristoffelJet christoffel(const MetricJet& m);

/// Gauss curvature through order N-2, R_1212 / det g.
Jet2 gauss_curvature(const MetricJet& m);

/// Metric pulled back through a jet map phi with phi(0) = 0 in local
/// offsets: (phi^* g)_ab = g_ij(phi) d_a phi^i d_b phi^j. Order drops by one.
MetricJet pullback(const MetricJet& m, const JetPair& phi);

}  // namespace hj

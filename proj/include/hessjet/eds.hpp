#pragma once

#include <array>
#include <string>

#include <Eigen/Dense>

namespace hj {

/// G_ij, G^ij and K at one point of the coframe bundle.
struct FramePoint {
    Eigen::Matrix2d G = Eigen::Matrix2d::Identity();
    Eigen::Matrix2d Ginv = Eigen::Matrix2d::Identity();
    double K = 0.0;

    /// Throws DegenerateFrame if |det G| <= 1e-12.
    static FramePoint make(const Eigen::Matrix2d& G, double K);
    double det() const { return G.determinant(); }
};

/// A candidate 2-plane: the frame data plus the fully symmetric p_ijk,
/// stored by the number of indices equal to 2: (p111, p112, p122, p222).
struct IntegralElement {
    FramePoint frame;
    std::array<double, 4> p{0.0, 0.0, 0.0, 0.0};

    /// p_ijk with 0-based indices.
    double operator()(int i, int j, int k) const { return p[i + j + k]; }
    double p_max() const;
};

/// c0 e1^3 + 3 c1 e1^2 e2 + 3 c2 e1 e2^2 + c3 e2^3
struct BinaryCubic {
    double c0 = 0.0, c1 = 0.0, c2 = 0.0, c3 = 0.0;

    double evaluate(double e1, double e2) const {
        return c0 * e1 * e1 * e1 + 3.0 * c1 * e1 * e1 * e2 + 3.0 * c2 * e1 * e2 * e2 + c3 * e2 * e2 * e2;
    }
    double max_abs() const;
};

/// a^i = omega^i(v) and s_ij = sigma_ij(v) stored as (s11, s12, s22).
struct TangentVector {
    std::array<double, 2> a{0.0, 0.0};
    std::array<double, 3> s{0.0, 0.0, 0.0};

    double s_at(int i, int j) const { return s[i + j]; }
};

enum class ElementClass { NonOrdinary, Hyperbolic, MixedRealComplex, RepeatedRoot };

const char* class_name(ElementClass c);

/// Band around zero in which the discriminant sign is not trusted.
constexpr double kDiscriminantBand = 1e-8;

/// G^kl (p_k11 p_l22 - p_k12 p_l12) + K det G
double integral_element_residual(const IntegralElement& E);

/// Acceptance threshold for the residual: 1e-10 * max(|K det G|, |p|_max^2, 1).
double residual_tolerance(const IntegralElement& E);

/// eps_jk G^kl p_lmn e^j e^m e^n in normal form.
BinaryCubic characteristic_cubic(const IntegralElement& E);

double cubic_discriminant(const BinaryCubic& c);

/// Classification of a cubic by the sign of its discriminant.
ElementClass classify_cubic(const BinaryCubic& c);

/// Throws NotAnIntegralElement when the residual exceeds residual_tolerance.
ElementClass classify_element(const IntegralElement& E);

/// An integral element with positive discriminant. Throws DegenerateFrame.
IntegralElement construct_hyperbolic_element(const FramePoint& frame);

/// Right action of A: G' = A^T G A and p contracted with A on every index.
/// Throws SingularMatrix.
IntegralElement gl2_transform(const IntegralElement& E, const Eigen::Matrix2d& A);

struct PolarData {
    int rank = 0;             // rank of {theta, v-Omega1, v-Omega2, v-Theta}
    int dim_h = 0;            // 6 - rank
    double regularity = 0.0;  // nonzero exactly when omega1^omega2 is nonzero on H
    bool independent = false;
};

/// Linear algebra in the coframe basis (omega1, omega2, theta, sigma11, sigma12, sigma22).
PolarData polar_data(const FramePoint& frame, const TangentVector& v);

/// The 4x6 matrix of polar equations, one row per functional.
Eigen::Matrix<double, 4, 6> polar_equations(const FramePoint& frame, const TangentVector& v);

struct CartanCharacters {
    int s0 = 0, s1 = 0, s2 = 0;
};

/// Throws NotRegular when |regularity| <= 1e-9.
CartanCharacters cartan_characters(const FramePoint& frame, const TangentVector& v);

/// Rank with the relative pivot threshold used throughout (1e-10).
int numeric_rank(const Eigen::MatrixXd& m);

}  // namespace hj

#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

namespace hj {

/// Truncated bivariate power series in the local variables (u1, u2).
///
/// Coefficients are stored densely in graded-lex order: all monomials of
/// total degree 0, then degree 1, and so on; within a degree the exponent
/// of u2 increases. The monomial u1^a u2^b therefore lives at
/// d(d+1)/2 + b with d = a + b.
class Jet2 {
public:
    Jet2() : Jet2(0) {}
    explicit Jet2(int order);
    Jet2(int order, std::vector<double> coeffs);

    static Jet2 constant(int order, double value);
    /// u1 (direction 1) or u2 (direction 2) at the given order.
    static Jet2 variable(int order, int direction);

    static std::size_t size_for(int order) {
        return static_cast<std::size_t>((order + 1) * (order + 2) / 2);
    }
    static std::size_t index(int a, int b) {
        const int d = a + b;
        return static_cast<std::size_t>(d * (d + 1) / 2 + b);
    }

    int order() const { return order_; }
    std::size_t size() const { return c_.size(); }
    const std::vector<double>& coeffs() const { return c_; }
    std::vector<double>& coeffs() { return c_; }

    double operator()(int a, int b) const { return c_[index(a, b)]; }
    double& operator()(int a, int b) { return c_[index(a, b)]; }
    double constant_term() const { return c_[0]; }

    /// Same series cut (or zero-extended) to a new order.
    Jet2 truncated(int order) const;
    /// Largest |coefficient| among monomials of exactly this total degree.
    double degree_max(int degree) const;
    double max_abs() const;
    /// Polynomial value at the local offset (u1, u2).
    double evaluate(double u1, double u2) const;

    Jet2& operator+=(const Jet2& other);
    Jet2& operator-=(const Jet2& other);
    Jet2& operator*=(double s);

private:
    int order_;
    std::vector<double> c_;
};

Jet2 operator+(const Jet2& a, const Jet2& b);
Jet2 operator-(const Jet2& a, const Jet2& b);
Jet2 operator-(const Jet2& a);
Jet2 operator*(double s, const Jet2& a);
Jet2 operator*(const Jet2& a, double s);
Jet2 operator*(const Jet2& a, const Jet2& b);
Jet2 operator/(const Jet2& a, const Jet2& b);
Jet2 operator+(const Jet2& a, double s);
Jet2 operator-(const Jet2& a, double s);

/// Truncated Cauchy product at order min(a.order, b.order).
Jet2 mul(const Jet2& a, const Jet2& b);
/// a / b; throws DivisionByZeroConstantTerm if b has no constant term.
Jet2 div(const Jet2& a, const Jet2& b);
Jet2 reciprocal(const Jet2& b);
/// Formal partial derivative, direction 1 or 2. Throws OrderTooSmall at order 0.
Jet2 partial(const Jet2& a, int direction);

/// Max |a - b| coefficient-wise over the common order.
double max_diff(const Jet2& a, const Jet2& b);
bool approx_equal(const Jet2& a, const Jet2& b, double tol);

using JetPair = std::array<Jet2, 2>;

/// outer(inner1, inner2) by Horner evaluation. The inner jets must have
/// zero constant term (they are offsets from the outer base point);
/// otherwise BasePointMismatch.
Jet2 compose(const Jet2& outer, const JetPair& inner);
JetPair compose(const JetPair& outer, const JetPair& inner);

/// Identity map (u1, u2) at the given order.
JetPair identity_map(int order);

/// Inverse of the map u -> x(u) - x(0). Throws SingularJacobian when the
/// linear part is not invertible.
JetPair invert_map(const JetPair& x);

/// Truncated univariate series in t.
class Jet1 {
public:
    Jet1() : Jet1(0) {}
    explicit Jet1(int order) : c_(static_cast<std::size_t>(order + 1), 0.0) {}
    explicit Jet1(std::vector<double> coeffs) : c_(std::move(coeffs)) {}

    int order() const { return static_cast<int>(c_.size()) - 1; }
    double operator[](int k) const { return k < static_cast<int>(c_.size()) ? c_[k] : 0.0; }
    double& operator[](int k) { return c_[k]; }
    const std::vector<double>& coeffs() const { return c_; }

    Jet1 derivative() const;
    /// Antiderivative with the given constant; order grows by one.
    Jet1 integral(double constant = 0.0) const;
    Jet1 truncated(int order) const;
    double evaluate(double t) const;

private:
    std::vector<double> c_;
};

Jet1 operator+(const Jet1& a, const Jet1& b);
Jet1 operator-(const Jet1& a, const Jet1& b);
Jet1 operator*(double s, const Jet1& a);
Jet1 mul(const Jet1& a, const Jet1& b);

/// Restriction of a jet to the curve u2 = 0.
Jet1 restrict_u1(const Jet2& a);

}  // namespace hj

#include "hessjet/jet2.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hessjet/error.hpp"

namespace hj {

Jet2::Jet2(int order) : order_(order), c_(size_for(order), 0.0) {}

Jet2::Jet2(int order, std::vector<double> coeffs) : order_(order), c_(std::move(coeffs)) {
    c_.resize(size_for(order), 0.0);
}

Jet2 Jet2::constant(int order, double value) {
    Jet2 j(order);
    j.c_[0] = value;
    return j;
}

Jet2 Jet2::variable(int order, int direction) {
    Jet2 j(order);
    if (order >= 1) j.c_[direction == 1 ? 1 : 2] = 1.0;
    return j;
}

Jet2 Jet2::truncated(int order) const {
    Jet2 r(order);
    const std::size_t n = std::min(r.size(), size());
    std::copy(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(n), r.c_.begin());
    return r;
}

double Jet2::degree_max(int degree) const {
    if (degree > order_) return 0.0;
    double m = 0.0;
    for (int b = 0; b <= degree; ++b) m = std::max(m, std::abs((*this)(degree - b, b)));
    return m;
}

double Jet2::max_abs() const {
    double m = 0.0;
    for (double v : c_) m = std::max(m, std::abs(v));
    return m;
}

double Jet2::evaluate(double u1, double u2) const {
    // Horner in u1 over u2-polynomials.
    double acc = 0.0;
    for (int a = order_; a >= 0; --a) {
        double inner = 0.0;
        for (int b = order_ - a; b >= 0; --b) inner = inner * u2 + (*this)(a, b);
        acc = acc * u1 + inner;
    }
    return acc;
}

Jet2& Jet2::operator+=(const Jet2& other) {
    *this = *this + other;
    return *this;
}

Jet2& Jet2::operator-=(const Jet2& other) {
    *this = *this - other;
    return *this;
}

Jet2& Jet2::operator*=(double s) {
    for (double& v : c_) v *= s;
    return *this;
}

Jet2 operator+(const Jet2& a, const Jet2& b) {
    Jet2 r = a.truncated(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i < r.size(); ++i) r.coeffs()[i] += b.coeffs()[i];
    return r;
}

Jet2 operator-(const Jet2& a, const Jet2& b) {
    Jet2 r = a.truncated(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i < r.size(); ++i) r.coeffs()[i] -= b.coeffs()[i];
    return r;
}

Jet2 operator-(const Jet2& a) { return -1.0 * a; }

Jet2 operator*(double s, const Jet2& a) {
    Jet2 r = a;
    r *= s;
    return r;
}

Jet2 operator*(const Jet2& a, double s) { return s * a; }
Jet2 operator*(const Jet2& a, const Jet2& b) { return mul(a, b); }
Jet2 operator/(const Jet2& a, const Jet2& b) { return div(a, b); }

Jet2 operator+(const Jet2& a, double s) {
    Jet2 r = a;
    r.coeffs()[0] += s;
    return r;
}

Jet2 operator-(const Jet2& a, double s) { return a + (-s); }

Jet2 mul(const Jet2& a, const Jet2& b) {
    const int n = std::min(a.order(), b.order());
    Jet2 r(n);
    for (int da = 0; da <= n; ++da) {
        for (int ba = 0; ba <= da; ++ba) {
            const double ca = a(da - ba, ba);
            if (ca == 0.0) continue;
            for (int db = 0; db <= n - da; ++db) {
                for (int bb = 0; bb <= db; ++bb) {
                    r(da - ba + db - bb, ba + bb) += ca * b(db - bb, bb);
                }
            }
        }
    }
    return r;
}

Jet2 reciprocal(const Jet2& b) {
    const double b0 = b.constant_term();
    if (b0 == 0.0) {
        throw Error(ErrorCode::DivisionByZeroConstantTerm, "divisor has zero constant term");
    }
    const int n = b.order();
    Jet2 r(n);
    r(0, 0) = 1.0 / b0;
    for (int d = 1; d <= n; ++d) {
        for (int q = 0; q <= d; ++q) {
            const int p = d - q;
            double s = 0.0;
            for (int i = 0; i <= p; ++i) {
                for (int j = 0; j <= q; ++j) {
                    if (i == 0 && j == 0) continue;
                    s += b(i, j) * r(p - i, q - j);
                }
            }
            r(p, q) = -s / b0;
        }
    }
    return r;
}

Jet2 div(const Jet2& a, const Jet2& b) { return mul(a, reciprocal(b)); }

Jet2 partial(const Jet2& a, int direction) {
    if (a.order() < 1) throw Error(ErrorCode::OrderTooSmall, "partial derivative needs order >= 1");
    if (direction != 1 && direction != 2) throw std::invalid_argument("direction must be 1 or 2");
    const int n = a.order() - 1;
    Jet2 r(n);
    for (int d = 0; d <= n; ++d) {
        for (int q = 0; q <= d; ++q) {
            const int p = d - q;
            r(p, q) = direction == 1 ? (p + 1) * a(p + 1, q) : (q + 1) * a(p, q + 1);
        }
    }
    return r;
}

double max_diff(const Jet2& a, const Jet2& b) {
    const std::size_t n = std::min(a.size(), b.size());
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::abs(a.coeffs()[i] - b.coeffs()[i]));
    return m;
}

bool approx_equal(const Jet2& a, const Jet2& b, double tol) { return max_diff(a, b) <= tol; }

Jet2 compose(const Jet2& outer, const JetPair& inner) {
    constexpr double offset_tol = 1e-12;
    for (const Jet2& v : inner) {
        if (std::abs(v.constant_term()) > offset_tol) {
            throw Error(ErrorCode::BasePointMismatch,
                        "inner map has nonzero constant offset " + std::to_string(v.constant_term()));
        }
    }
    const int n = std::min({outer.order(), inner[0].order(), inner[1].order()});
    const Jet2 v1 = inner[0].truncated(n);
    const Jet2 v2 = inner[1].truncated(n);
    const int no = outer.order();
    Jet2 acc(n);
    for (int a = no; a >= 0; --a) {
        Jet2 col(n);
        for (int b = no - a; b >= 0; --b) col = mul(col, v2) + outer(a, b);
        acc = mul(acc, v1) + col;
    }
    return acc;
}

JetPair compose(const JetPair& outer, const JetPair& inner) {
    return {compose(outer[0], inner), compose(outer[1], inner)};
}

JetPair identity_map(int order) { return {Jet2::variable(order, 1), Jet2::variable(order, 2)}; }

JetPair invert_map(const JetPair& x) {
    const int n = std::min(x[0].order(), x[1].order());
    if (n < 1) throw Error(ErrorCode::OrderTooSmall, "map inversion needs order >= 1");
    JetPair x0 = {x[0].truncated(n), x[1].truncated(n)};
    x0[0](0, 0) = 0.0;
    x0[1](0, 0) = 0.0;

    const double a11 = x0[0](1, 0), a12 = x0[0](0, 1);
    const double a21 = x0[1](1, 0), a22 = x0[1](0, 1);
    const double det = a11 * a22 - a12 * a21;
    const double scale = std::max({std::abs(a11), std::abs(a12), std::abs(a21), std::abs(a22), 1e-300});
    if (std::abs(det) <= 1e-14 * scale * scale) {
        throw Error(ErrorCode::SingularJacobian, "Jacobian of the map is singular at the base point");
    }
    const double i11 = a22 / det, i12 = -a12 / det, i21 = -a21 / det, i22 = a11 / det;
    auto apply_inverse = [&](const Jet2& r1, const Jet2& r2) -> JetPair {
        return {i11 * r1 + i12 * r2, i21 * r1 + i22 * r2};
    };

    const JetPair v = identity_map(n);
    JetPair y = apply_inverse(v[0], v[1]);
    // Each frozen-Jacobian Newton step fixes at least one more degree.
    for (int it = 1; it < n; ++it) {
        const JetPair xy = compose(x0, y);
        const JetPair corr = apply_inverse(xy[0] - v[0], xy[1] - v[1]);
        y[0] -= corr[0];
        y[1] -= corr[1];
    }
    return y;
}

Jet1 Jet1::derivative() const {
    const int n = order();
    if (n < 1) return Jet1(0);
    Jet1 r(n - 1);
    for (int k = 0; k < n; ++k) r[k] = (k + 1) * c_[k + 1];
    return r;
}

Jet1 Jet1::integral(double constant) const {
    Jet1 r(order() + 1);
    r[0] = constant;
    for (int k = 0; k <= order(); ++k) r[k + 1] = c_[k] / (k + 1);
    return r;
}

Jet1 Jet1::truncated(int order) const {
    Jet1 r(order);
    for (int k = 0; k <= order; ++k) r[k] = (*this)[k];
    return r;
}

double Jet1::evaluate(double t) const {
    double acc = 0.0;
    for (int k = order(); k >= 0; --k) acc = acc * t + c_[k];
    return acc;
}

Jet1 operator+(const Jet1& a, const Jet1& b) {
    Jet1 r(std::max(a.order(), b.order()));
    for (int k = 0; k <= r.order(); ++k) r[k] = a[k] + b[k];
    return r;
}

Jet1 operator-(const Jet1& a, const Jet1& b) {
    Jet1 r(std::max(a.order(), b.order()));
    for (int k = 0; k <= r.order(); ++k) r[k] = a[k] - b[k];
    return r;
}

Jet1 operator*(double s, const Jet1& a) {
    Jet1 r = a;
    for (int k = 0; k <= r.order(); ++k) r[k] *= s;
    return r;
}

Jet1 mul(const Jet1& a, const Jet1& b) {
    const int n = std::min(a.order(), b.order());
    Jet1 r(n);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j) r[i + j] += a[i] * b[j];
    return r;
}

Jet1 restrict_u1(const Jet2& a) {
    Jet1 r(a.order());
    for (int k = 0; k <= a.order(); ++k) r[k] = a(k, 0);
    return r;
}

}  // namespace hj

#include <doctest.h>

#include <vector>

#include "hessjet/error.hpp"
#include "hessjet/jet2.hpp"
#include "support.hpp"

using hj::Jet2;
using hj::JetPair;
using namespace testing_support;

namespace {

Jet2 poly(int order, std::initializer_list<std::tuple<int, int, double>> terms) {
    Jet2 j(order);
    for (auto [a, b, c] : terms) j(a, b) = c;
    return j;
}

// Univariate polynomial product truncated at n, used as an oracle.
std::vector<double> upoly_mul(const std::vector<double>& a, const std::vector<double>& b, int n) {
    std::vector<double> r(static_cast<std::size_t>(n + 1), 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size() && i + j <= static_cast<std::size_t>(n); ++j) r[i + j] += a[i] * b[j];
    return r;
}

}  // namespace

TEST_CASE("graded-lex layout") {
    CHECK(Jet2::size_for(0) == 1);
    CHECK(Jet2::size_for(3) == 10);
    CHECK(Jet2::index(0, 0) == 0);
    CHECK(Jet2::index(1, 0) == 1);
    CHECK(Jet2::index(0, 1) == 2);
    CHECK(Jet2::index(2, 0) == 3);
    CHECK(Jet2::index(1, 1) == 4);
    CHECK(Jet2::index(0, 2) == 5);
    CHECK(Jet2(6).size() == 28);
}

TEST_CASE("mul examples") {
    const Jet2 one_plus = poly(2, {{0, 0, 1}, {1, 0, 1}});
    const Jet2 one_minus = poly(2, {{0, 0, 1}, {1, 0, -1}});
    CHECK(hj::max_diff(hj::mul(one_plus, one_minus), poly(2, {{0, 0, 1}, {2, 0, -1}})) == 0.0);

    const Jet2 s = poly(2, {{0, 0, 1}, {1, 0, 1}, {0, 1, 1}});
    CHECK(hj::max_diff(hj::mul(s, s), poly(2, {{0, 0, 1}, {1, 0, 2}, {0, 1, 2}, {2, 0, 1}, {1, 1, 2}, {0, 2, 1}})) ==
          0.0);

    const Jet2 a = poly(1, {{0, 0, 1}, {1, 0, 1}});
    const Jet2 b = poly(1, {{0, 0, 1}, {0, 1, 1}});
    const Jet2 p = hj::mul(a, b);
    CHECK(p.order() == 1);
    CHECK(hj::max_diff(p, poly(1, {{0, 0, 1}, {1, 0, 1}, {0, 1, 1}})) == 0.0);
}

TEST_CASE("result order is the minimum of operand orders") {
    Rng rng(1);
    const Jet2 a = random_jet(rng, 5), b = random_jet(rng, 3);
    CHECK(hj::mul(a, b).order() == 3);
    CHECK((a + b).order() == 3);
    CHECK(hj::div(a, b + 5.0).order() == 3);
    CHECK(hj::partial(a, 1).order() == 4);
}

TEST_CASE("div examples") {
    const Jet2 q = hj::div(Jet2::constant(2, 1.0), poly(2, {{0, 0, 1}, {0, 1, 1}}));
    CHECK(hj::max_diff(q, poly(2, {{0, 0, 1}, {0, 1, -1}, {0, 2, 1}})) == 0.0);

    const Jet2 u1 = Jet2::variable(3, 1);
    CHECK(hj::max_diff(hj::div(u1, Jet2::constant(3, 1.0)), u1) == 0.0);

    try {
        hj::div(Jet2::constant(3, 1.0), u1);
        FAIL("expected DivisionByZeroConstantTerm");
    } catch (const hj::Error& e) {
        CHECK(e.code() == hj::ErrorCode::DivisionByZeroConstantTerm);
    }
}

TEST_CASE("partial examples") {
    const Jet2 m = poly(4, {{2, 1, 1}});
    CHECK(hj::max_diff(hj::partial(m, 1), poly(3, {{1, 1, 2}})) == 0.0);
    CHECK(hj::max_diff(hj::partial(m, 2), poly(3, {{2, 0, 1}})) == 0.0);

    Rng rng(2);
    for (int trial = 0; trial < 10; ++trial) {
        const Jet2 a = random_jet(rng, 6);
        CHECK(hj::max_diff(hj::partial(hj::partial(a, 1), 2), hj::partial(hj::partial(a, 2), 1)) == 0.0);
    }
    CHECK_THROWS_AS(hj::partial(Jet2::constant(0, 1.0), 1), hj::Error);
}

TEST_CASE("ring axioms hold exactly on integer jets") {
    Rng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 1 + trial % 6;
        const Jet2 a = random_integer_jet(rng, n), b = random_integer_jet(rng, n), c = random_integer_jet(rng, n);
        CHECK(hj::max_diff(hj::mul(hj::mul(a, b), c), hj::mul(a, hj::mul(b, c))) == 0.0);
        CHECK(hj::max_diff(hj::mul(a, b + c), hj::mul(a, b) + hj::mul(a, c)) == 0.0);
        CHECK(hj::max_diff(hj::mul(a, b), hj::mul(b, a)) == 0.0);
    }
}

TEST_CASE("Leibniz rule") {
    Rng rng(4);
    for (int trial = 0; trial < 20; ++trial) {
        const Jet2 a = random_integer_jet(rng, 6), b = random_integer_jet(rng, 6);
        for (int dir = 1; dir <= 2; ++dir) {
            const Jet2 lhs = hj::partial(hj::mul(a, b), dir);
            const Jet2 rhs = hj::mul(hj::partial(a, dir), b) + hj::mul(a, hj::partial(b, dir));
            CHECK(hj::max_diff(lhs, rhs) == 0.0);
        }
    }
}

TEST_CASE("div then mul round-trips") {
    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const Jet2 a = random_jet(rng, 6);
        Jet2 b = random_jet(rng, 6);
        b(0, 0) = 1.5 + trial * 0.1;
        CHECK(hj::max_diff(hj::mul(hj::div(a, b), b), a) <= 1e-10);
    }
}

TEST_CASE("compose examples") {
    const int n = 4;
    const JetPair inner = {Jet2::variable(n, 1) + Jet2::variable(n, 2), Jet2::variable(n, 2)};
    const Jet2 v1sq = poly(n, {{2, 0, 1}});
    const Jet2 s = inner[0];
    CHECK(hj::max_diff(hj::compose(v1sq, inner), hj::mul(s, s)) <= 1e-15);

    Rng rng(6);
    const Jet2 outer = random_jet(rng, 5);
    CHECK(hj::max_diff(hj::compose(outer, hj::identity_map(5)), outer) <= 1e-15);

    // 1/(1 + v1) with v1 = u1 + u1^2: sum_k (-(u1 + u1^2))^k expanded directly.
    const int m = 3;
    const Jet2 f = hj::reciprocal(Jet2::variable(m, 1) + 1.0);
    const Jet2 comp = hj::compose(f, {poly(m, {{1, 0, 1}, {2, 0, 1}}), Jet2(m)});
    std::vector<double> w = {0.0, -1.0, -1.0}, power = {1.0}, expect(m + 1, 0.0);
    for (int k = 0; k <= m; ++k) {
        for (int i = 0; i < static_cast<int>(power.size()) && i <= m; ++i) expect[i] += power[i];
        power = upoly_mul(power, w, m);
    }
    // 1 - u1 + 0 u1^2 + u1^3
    CHECK(expect[0] == 1.0);
    CHECK(expect[1] == -1.0);
    CHECK(expect[2] == 0.0);
    CHECK(expect[3] == 1.0);
    for (int k = 0; k <= m; ++k) CHECK(comp(k, 0) == doctest::Approx(expect[k]).epsilon(1e-14));
    for (int b = 1; b <= m; ++b) CHECK(comp(0, b) == 0.0);

    JetPair shifted = inner;
    shifted[0](0, 0) = 0.5;
    CHECK_THROWS_AS(hj::compose(outer, shifted), hj::Error);
    try {
        hj::compose(outer, shifted);
    } catch (const hj::Error& e) {
        CHECK(e.code() == hj::ErrorCode::BasePointMismatch);
    }
}

TEST_CASE("invert_map examples") {
    const int n = 5;
    const JetPair id = hj::identity_map(n);
    const JetPair inv_id = hj::invert_map(id);
    CHECK(hj::max_diff(inv_id[0], id[0]) == 0.0);
    CHECK(hj::max_diff(inv_id[1], id[1]) == 0.0);

    // Linear map with matrix A -> A^-1.
    const double A[2][2] = {{2.0, 1.0}, {-1.0, 3.0}};
    const JetPair lin = {A[0][0] * id[0] + A[0][1] * id[1], A[1][0] * id[0] + A[1][1] * id[1]};
    const JetPair inv = hj::invert_map(lin);
    const double det = 7.0;
    CHECK(inv[0](1, 0) == doctest::Approx(3.0 / det));
    CHECK(inv[0](0, 1) == doctest::Approx(-1.0 / det));
    CHECK(inv[1](1, 0) == doctest::Approx(1.0 / det));
    CHECK(inv[1](0, 1) == doctest::Approx(2.0 / det));
    for (int d = 2; d <= n; ++d) CHECK(inv[0].degree_max(d) <= 1e-15);

    // (u1 + u1^2, u2) at order 4 -> (v1 - v1^2 + 2 v1^3 - 5 v1^4, v2)
    const JetPair x = {poly(4, {{1, 0, 1}, {2, 0, 1}}), Jet2::variable(4, 2)};
    const JetPair y = hj::invert_map(x);
    const Jet2 expect = poly(4, {{1, 0, 1}, {2, 0, -1}, {3, 0, 2}, {4, 0, -5}});
    CHECK(hj::max_diff(y[0], expect) <= 1e-14);
    CHECK(hj::max_diff(y[1], Jet2::variable(4, 2)) <= 1e-14);
    const JetPair rt = hj::compose(x, y);
    CHECK(hj::max_diff(rt[0], Jet2::variable(4, 1)) <= 1e-14);

    const JetPair singular = {id[0] + id[1], 2.0 * (id[0] + id[1])};
    try {
        hj::invert_map(singular);
        FAIL("expected SingularJacobian");
    } catch (const hj::Error& e) {
        CHECK(e.code() == hj::ErrorCode::SingularJacobian);
    }
}

TEST_CASE("invert_map round-trips in both directions") {
    Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 6;
        JetPair x = {random_jet(rng, n, 0.5), random_jet(rng, n, 0.5)};
        x[0](1, 0) = 1.0 + uniform(rng, 0, 0.5);
        x[1](0, 1) = 1.0 + uniform(rng, 0, 0.5);
        x[0](0, 0) = x[1](0, 0) = 0.0;
        const JetPair y = hj::invert_map(x);
        const JetPair xy = hj::compose(x, y), yx = hj::compose(y, x);
        const JetPair id = hj::identity_map(n);
        for (int i = 0; i < 2; ++i) {
            CHECK(hj::max_diff(xy[i], id[i]) <= 1e-10);
            CHECK(hj::max_diff(yx[i], id[i]) <= 1e-10);
        }
    }
}

TEST_CASE("constant offsets of the map are ignored by invert_map") {
    const int n = 4;
    JetPair x = {poly(n, {{0, 0, 3.0}, {1, 0, 1}, {0, 2, 1}}), poly(n, {{0, 0, -1.0}, {0, 1, 2}})};
    const JetPair y = hj::invert_map(x);
    JetPair x0 = x;
    x0[0](0, 0) = x0[1](0, 0) = 0.0;
    const JetPair rt = hj::compose(x0, y);
    CHECK(hj::max_diff(rt[0], Jet2::variable(n, 1)) <= 1e-14);
    CHECK(hj::max_diff(rt[1], Jet2::variable(n, 2)) <= 1e-14);
}

TEST_CASE("evaluate and truncation") {
    const Jet2 p = poly(3, {{0, 0, 1}, {1, 0, 2}, {1, 1, -1}, {0, 3, 0.5}});
    CHECK(p.evaluate(0.5, -2.0) == doctest::Approx(1 + 1 + 1 - 4));
    const Jet2 t = p.truncated(1);
    CHECK(t.order() == 1);
    CHECK(t(1, 0) == 2.0);
    const Jet2 e = t.truncated(3);
    CHECK(e(1, 1) == 0.0);
}

TEST_CASE("Jet1 calculus") {
    hj::Jet1 a(std::vector<double>{1.0, 2.0, 3.0});
    const hj::Jet1 d = a.derivative();
    CHECK(d.order() == 1);
    CHECK(d[0] == 2.0);
    CHECK(d[1] == 6.0);
    const hj::Jet1 i = d.integral(1.0);
    CHECK(i[2] == 3.0);
    CHECK(hj::mul(a, a)[2] == 10.0);
    CHECK(a.evaluate(2.0) == 17.0);
    CHECK(hj::restrict_u1(poly(2, {{1, 0, 4}, {0, 1, 9}}))[1] == 4.0);
}

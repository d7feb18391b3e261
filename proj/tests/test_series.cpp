#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncps/series.hpp"
#include "ncps/verify.hpp"

using namespace ncps;

namespace {

Word make_word(std::initializer_list<int> letters) { return Word(std::vector<int>(letters)); }

Word power_word(int k) { return Word(std::vector<int>(static_cast<size_t>(k), 1)); }

// Univariate series from the coefficient list (constant first).
QSeries uni(int cap, std::initializer_list<int> coeffs) {
    QSeries out(1, cap);
    int degree = 0;
    for (int c : coeffs) {
        out.set_coefficient(power_word(degree), Rational(c));
        ++degree;
    }
    return out;
}

} // namespace

TEST_CASE("series container invariants") {
    QSeries f(2, 3);
    f.set_coefficient(make_word({1}), Rational(1, 2));
    f.add_to_coefficient(make_word({1}), Rational(-1, 2));
    CHECK(f.terms().empty());
    CHECK_THROWS_AS(f.set_coefficient(make_word({3}), Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(f.set_coefficient(make_word({1, 1, 1, 1}), Rational(1)),
                    std::invalid_argument);
    // Adds beyond the truncation are silently dropped.
    f.add_to_coefficient(make_word({1, 1, 1, 1}), Rational(1));
    CHECK(f.terms().empty());
    CHECK(QSeries::one(2, 3).classify() == SeriesClass::g1);
    CHECK(QSeries::zero(2, 3).classify() == SeriesClass::g0);
    QSeries tangent(2, 3);
    tangent.set_coefficient(make_word({1}), Rational(1));
    tangent.set_coefficient(make_word({2}), Rational(1));
    CHECK(tangent.classify() == SeriesClass::gc);
}

TEST_CASE("cauchy product") {
    QSeries f = QSeries::one(2, 3);
    f.set_coefficient(make_word({1}), Rational(1));
    QSeries g = QSeries::one(2, 3);
    g.set_coefficient(make_word({2}), Rational(1));

    QSeries expected = QSeries::one(2, 3);
    expected.set_coefficient(make_word({1}), Rational(1));
    expected.set_coefficient(make_word({2}), Rational(1));
    expected.set_coefficient(make_word({1, 2}), Rational(1));
    CHECK(cauchy_mul(f, g) == expected);

    CHECK(cauchy_mul(QSeries::one(2, 3), g) == g);

    const auto x1 = QSeries::monomial(1, 2, power_word(1), Rational(1));
    CHECK(cauchy_mul(x1, x1) == QSeries::monomial(1, 2, power_word(2), Rational(1)));

    QSeries other_shape(2, 4);
    CHECK_THROWS_AS(cauchy_mul(f, other_shape), std::invalid_argument);
}

TEST_CASE("cauchy inverse") {
    CHECK(cauchy_inv(QSeries::one(2, 3)) == QSeries::one(2, 3));
    CHECK(cauchy_inv(uni(3, {1, 1})) == uni(3, {1, -1, 1, -1}));

    QSeries f = QSeries::one(2, 2);
    f.set_coefficient(make_word({1}), Rational(1));
    f.set_coefficient(make_word({2}), Rational(1));
    const auto inverse = cauchy_inv(f);
    QSeries expected = QSeries::one(2, 2);
    expected.set_coefficient(make_word({1}), Rational(-1));
    expected.set_coefficient(make_word({2}), Rational(-1));
    for (int a = 1; a <= 2; ++a)
        for (int b = 1; b <= 2; ++b) expected.set_coefficient(make_word({a, b}), Rational(1));
    CHECK(inverse == expected);

    Rng rng(2024);
    for (int trial = 0; trial < 10; ++trial) {
        const auto h = rng.series_g1(2, 4, 6);
        CHECK(cauchy_mul(h, cauchy_inv(h)) == QSeries::one(2, 4));
        CHECK(cauchy_mul(cauchy_inv(h), h) == QSeries::one(2, 4));
    }

    CHECK_THROWS_AS(cauchy_inv(QSeries::zero(2, 3)), std::domain_error);
}

TEST_CASE("shifted substitution") {
    QSeries g = QSeries::one(2, 3);
    g.set_coefficient(make_word({2}), Rational(1));
    const auto f = QSeries::monomial(2, 3, make_word({1}), Rational(1));
    QSeries expected(2, 3);
    expected.set_coefficient(make_word({1}), Rational(1));
    expected.set_coefficient(make_word({1, 2}), Rational(1));
    CHECK(shifted_substitute(f, g) == expected);

    Rng rng(11);
    const auto any = rng.series_g1(2, 4, 6);
    CHECK(shifted_substitute(any, QSeries::one(2, 4)) == any);

    // x1 x1 under g = 1 + x1 at cap 4: x1x1 + 2 x1^3 + x1^4.
    const auto f2 = QSeries::monomial(1, 4, power_word(2), Rational(1));
    const auto g2 = uni(4, {1, 1});
    CHECK(shifted_substitute(f2, g2) == uni(4, {0, 0, 1, 2, 1}));

    CHECK_THROWS_AS(shifted_substitute(f, QSeries::zero(2, 3)), std::domain_error);
}

TEST_CASE("shifted composition") {
    QSeries f = QSeries::one(2, 3);
    f.set_coefficient(make_word({1}), Rational(1));
    QSeries g = QSeries::one(2, 3);
    g.set_coefficient(make_word({2}), Rational(1));

    // (1+x1) . (1+x2) = (1+x2)(1 + x1 + x1 x2).
    QSeries expected = QSeries::one(2, 3);
    expected.set_coefficient(make_word({1}), Rational(1));
    expected.set_coefficient(make_word({2}), Rational(1));
    expected.set_coefficient(make_word({1, 2}), Rational(1));
    expected.set_coefficient(make_word({2, 1}), Rational(1));
    expected.set_coefficient(make_word({2, 1, 2}), Rational(1));
    CHECK(shifted_compose(f, g) == expected);

    const auto one = QSeries::one(2, 3);
    CHECK(shifted_compose(one, g) == g);
    CHECK(shifted_compose(f, one) == f);

    // Univariate (1+x) . (1+x) = 1 + 2x + 2x^2 + x^3.
    CHECK(shifted_compose(uni(3, {1, 1}), uni(3, {1, 1})) == uni(3, {1, 2, 2, 1}));
}

TEST_CASE("shifted inverse") {
    CHECK(shifted_inverse(QSeries::one(2, 3)) == QSeries::one(2, 3));
    CHECK(shifted_inverse(uni(3, {1, 1})) == uni(3, {1, -1, 2, -5}));

    Rng rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        const auto f = rng.series_g1(2, 4, 6);
        const auto inverse = shifted_inverse(f);
        CHECK(shifted_compose(inverse, f) == QSeries::one(2, 4));
        CHECK(shifted_compose(f, inverse) == QSeries::one(2, 4));
    }
    CHECK_THROWS_AS(shifted_inverse(QSeries::zero(2, 3)), std::domain_error);
}

TEST_CASE("pre-Lie insertion") {
    const auto x1 = QSeries::monomial(2, 3, make_word({1}), Rational(1));
    const auto x2 = QSeries::monomial(2, 3, make_word({2}), Rational(1));
    QSeries expected(2, 3);
    expected.set_coefficient(make_word({2, 1}), Rational(1));
    expected.set_coefficient(make_word({1, 2}), Rational(1));
    CHECK(pre_lie(x1, x2) == expected);

    // Univariate x^n <| x^m = (n+1) x^(n+m).
    for (int n = 1; n <= 4; ++n) {
        for (int m = 1; m <= 4; ++m) {
            const auto lhs = pre_lie(QSeries::monomial(1, 8, power_word(n), Rational(1)),
                                     QSeries::monomial(1, 8, power_word(m), Rational(1)));
            CHECK(lhs == QSeries::monomial(1, 8, power_word(n + m), Rational(n + 1)));
        }
    }

    Rng rng(3);
    const auto f = rng.series_g0(2, 3, 4);
    CHECK(pre_lie(f, QSeries::zero(2, 3)) == QSeries::zero(2, 3));
    CHECK_THROWS_AS(pre_lie(f, QSeries::one(2, 3)), std::domain_error);
}

TEST_CASE("lie bracket") {
    // [x, x^2] = -x^3.
    const auto x = QSeries::monomial(1, 4, power_word(1), Rational(1));
    const auto x2 = QSeries::monomial(1, 4, power_word(2), Rational(1));
    CHECK(lie_bracket(x, x2) == QSeries::monomial(1, 4, power_word(3), Rational(-1)));

    Rng rng(17);
    const auto f = rng.series_g0(2, 4, 6);
    CHECK(lie_bracket(f, f) == QSeries::zero(2, 4));

    // Length-one letters commute: both insertions are the two concatenations.
    const auto x1 = QSeries::monomial(2, 3, make_word({1}), Rational(1));
    const auto y2 = QSeries::monomial(2, 3, make_word({2}), Rational(1));
    CHECK(lie_bracket(x1, y2) == QSeries::zero(2, 3));
}

TEST_CASE("group exponential") {
    CHECK(group_exp(QSeries::zero(2, 3)) == QSeries::one(2, 3));
    // exp of x is the geometric series.
    CHECK(group_exp(QSeries::monomial(1, 4, power_word(1), Rational(1))) ==
          uni(4, {1, 1, 1, 1, 1}));

    // m2 = h2 + h1^2 at t=1 with h = 2x + 5x^2.
    QSeries h(1, 2);
    h.set_coefficient(power_word(1), Rational(2));
    h.set_coefficient(power_word(2), Rational(5));
    QSeries expected(1, 2);
    expected.set_constant_term(Rational(1));
    expected.set_coefficient(power_word(1), Rational(2));
    expected.set_coefficient(power_word(2), Rational(5 + 4));
    CHECK(group_exp(h) == expected);

    CHECK_THROWS_AS(group_exp(QSeries::one(2, 3)), std::domain_error);
}

TEST_CASE("group logarithm") {
    CHECK(group_log(QSeries::one(2, 3)) == QSeries::zero(2, 3));
    CHECK(group_log(uni(3, {1, 1, 1, 1})) == uni(3, {0, 1}));

    Rng rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        const auto h = rng.series_g0(2, 4, 6);
        CHECK(group_log(group_exp(h)) == h);
    }
}

TEST_CASE("flow") {
    // m1(t) = h1 t and m3(t) = h3 t + 5/2 h1 h2 t^2 + h1^3 t^3.
    QSeries h(1, 3);
    const Rational h1(2), h2(3), h3(5);
    h.set_coefficient(power_word(1), h1);
    h.set_coefficient(power_word(2), h2);
    h.set_coefficient(power_word(3), h3);
    const auto m_t = flow(h);

    CHECK(m_t.coefficient(power_word(1)) == PolyT::monomial(h1, 1));
    PolyT m3 = PolyT::monomial(h3, 1);
    m3 += PolyT::monomial(Rational(5, 2) * h1 * h2, 2);
    m3 += PolyT::monomial(h1 * h1 * h1, 3);
    CHECK(m_t.coefficient(power_word(3)) == m3);

    CHECK(specialize_t(m_t, Rational(0)) == QSeries::one(1, 3));
    CHECK(specialize_t(m_t, Rational(1)) == group_exp(h));

    // The flow solves dM/dt = h + (M - 1) <| h in the polynomial ring.
    Rng rng(31);
    const auto g = rng.series_g0(2, 4, 6);
    const auto m = flow(g);
    const auto g_poly = embed_poly(g);
    CHECK(derivative_t(m) == g_poly + pre_lie(m - PolySeries::one(2, 4), g_poly));
}

TEST_CASE("bch") {
    Rng rng(41);
    const auto f = rng.series_g0(2, 3, 4);
    const auto zero = QSeries::zero(2, 3);
    CHECK(group_bch(f, zero) == f);
    CHECK(group_bch(zero, f) == f);

    // Degree <= 2: bch(f, g) = f + g + [f,g]/2.
    const auto a = rng.series_g0(2, 2, 3);
    const auto b = rng.series_g0(2, 2, 3);
    CHECK(group_bch(a, b) == a + b + lie_bracket(a, b).scaled(Rational(1, 2)));

    // x1, x2 commute in degree 2, so bch is plain addition there.
    const auto x1 = QSeries::monomial(2, 2, make_word({1}), Rational(1));
    const auto x2 = QSeries::monomial(2, 2, make_word({2}), Rational(1));
    CHECK(group_bch(x1, x2) == x1 + x2);

    // One-parameter subgroup through x.
    const auto x = QSeries::monomial(1, 4, power_word(1), Rational(1));
    CHECK(group_bch(x.scaled(Rational(2)), x.scaled(Rational(3))) == x.scaled(Rational(5)));
}

TEST_CASE("mu embedding and composition") {
    CHECK(mu_embed(QSeries::one(1, 3)) ==
          QSeries::monomial(1, 4, power_word(1), Rational(1)));
    CHECK(mu_embed(uni(3, {1, 1})) == uni(4, {0, 1, 1}));

    // f = g = 1+x: mu(f) o mu(g) = x + 2x^2 + 2x^3 + x^4 = mu(f.g).
    const auto f = uni(3, {1, 1});
    CHECK(univariate_compose(mu_embed(f), mu_embed(f)) == uni(4, {0, 1, 2, 2, 1}));
    CHECK(mu_compose_check(f, f));

    Rng rng(47);
    for (int trial = 0; trial < 20; ++trial) {
        CHECK(mu_compose_check(rng.series_g1(1, 5, 4), rng.series_g1(1, 5, 4)));
    }
    CHECK_THROWS_AS(mu_embed(QSeries::one(2, 3)), std::domain_error);
}

TEST_CASE("truncation coherence") {
    Rng rng(53);
    const auto f = rng.series_g1(2, 5, 8);
    const auto g = rng.series_g1(2, 5, 8);
    for (int m = 1; m <= 5; ++m) {
        CHECK(shifted_compose(f, g).truncated(m) ==
              shifted_compose(f.truncated(m), g.truncated(m)));
        CHECK(cauchy_mul(f, g).truncated(m) == cauchy_mul(f.truncated(m), g.truncated(m)));
    }
}

TEST_CASE("left linearity of the group law") {
    Rng rng(59);
    const int d = 2, n = 4;
    const auto one = QSeries::one(d, n);
    for (int trial = 0; trial < 10; ++trial) {
        const auto u = rng.series_g0(d, n, 5);
        const auto v = rng.series_g0(d, n, 5);
        const auto g = rng.series_g1(d, n, 6);
        const Rational a = rng.rational(), b = rng.rational();
        const auto lhs = shifted_compose(one + u.scaled(a) + v.scaled(b), g) - g;
        const auto rhs = (shifted_compose(one + u, g) - g).scaled(a) +
                         (shifted_compose(one + v, g) - g).scaled(b);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("polynomial coefficient ring") {
    PolyT p = PolyT::monomial(Rational(1, 2), 2);
    p += PolyT(Rational(3));
    CHECK(to_string(p) == "3 + 1/2*t^2");
    CHECK(p.evaluate(Rational(2)) == Rational(5));
    CHECK(p.derivative() == PolyT::monomial(Rational(1), 1));
    CHECK((p - p).is_zero());
    const PolyT q = PolyT::monomial(Rational(1), 1) * PolyT::monomial(Rational(2), 3);
    CHECK(q == PolyT::monomial(Rational(2), 4));
}

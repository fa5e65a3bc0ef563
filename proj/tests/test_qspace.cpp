#include <doctest.h>

#include "qna/qspace.hpp"

#include <random>

using namespace qna;

namespace {

QPolynomial random_poly(std::mt19937& rng, uint32_t rank, const ParamTablePtr& t, int maxdeg) {
    std::uniform_int_distribution<int> nterms(0, 3), coeffd(-3, 3), expd(0, maxdeg);
    QPolynomial p(rank, t);
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) {
        Monomial m(rank);
        int budget = expd(rng);
        std::uniform_int_distribution<int> pick(0, static_cast<int>(rank) - 1);
        for (int d = 0; d < budget; ++d) m.exps[static_cast<size_t>(pick(rng))]++;
        p.add_term(m, ParamScalar::constant(QScalar(Rational(coeffd(rng))), t));
    }
    return p;
}

} // namespace

TEST_CASE("mono_mul straightening exponents") {
    // x2 * x1 = q x1 x2
    Monomial x2 = Monomial::generator(2, 1), x1 = Monomial::generator(2, 0);
    auto [p1, m1] = mono_mul(x2, x1);
    CHECK(p1 == 1);
    CHECK(m1.exps == std::vector<uint32_t>{1, 1});

    auto [p2, m2] = mono_mul(x1, x2);
    CHECK(p2 == 0);

    // (x2 x3) * x1 = q^2 x1 x2 x3
    Monomial x2x3(3);
    x2x3.exps = {0, 1, 1};
    auto [p3, m3] = mono_mul(x2x3, Monomial::generator(3, 0));
    CHECK(p3 == 2);
    CHECK(m3.exps == std::vector<uint32_t>{1, 1, 1});

    CHECK_THROWS_AS(mono_mul(x1, Monomial::generator(3, 0)), RankMismatch);
}

TEST_CASE("polynomial arithmetic on the quantum plane") {
    auto t = empty_param_table();
    QPolynomial x1 = QPolynomial::generator(2, t, 0);
    QPolynomial x2 = QPolynomial::generator(2, t, 1);

    // (x1 + x2) * x1 = x1^2 + q x1 x2
    QPolynomial lhs = (x1 + x2) * x1;
    QPolynomial expect(2, t);
    Monomial sq(2);
    sq.exps = {2, 0};
    Monomial mix(2);
    mix.exps = {1, 1};
    expect.add_term(sq, ParamScalar::constant(QScalar(1), t));
    expect.add_term(mix, ParamScalar::constant(QScalar::q(), t));
    CHECK(lhs == expect);

    CHECK(x1 * QPolynomial::unit(2, t) == x1);
    CHECK((x1 - x1).is_zero());
}

TEST_CASE("defining relation for all ranks up to 6") {
    auto t = empty_param_table();
    for (uint32_t n = 2; n <= 6; ++n) {
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = 0; j < i; ++j) {
                QPolynomial xi = QPolynomial::generator(n, t, i);
                QPolynomial xj = QPolynomial::generator(n, t, j);
                CHECK((xi * xj - (xj * xi).scale(QScalar::q())).is_zero());
            }
        }
    }
}

TEST_CASE("homogeneous components") {
    auto tbl = std::make_shared<ParamTable>();
    int a0 = tbl->declare("a0", true);
    int u1 = tbl->declare("u1", false);
    int xi2 = tbl->declare("xi2", false);
    ParamTablePtr t = tbl;

    QPolynomial p(3, t);
    p.add_term(Monomial::unit(3), ParamScalar::param_power(t, a0, 1));
    Monomial x1sq(3);
    x1sq.exps = {2, 0, 0};
    p.add_term(x1sq, ParamScalar::param_power(t, u1, 1));
    CHECK(p.homogeneous_component(0) ==
          QPolynomial::constant(3, ParamScalar::param_power(t, a0, 1)));
    CHECK(p.homogeneous_component(1).is_zero());

    QPolynomial p2(3, t);
    Monomial x1x2(3);
    x1x2.exps = {1, 1, 0};
    Monomial x2cube(3);
    x2cube.exps = {0, 3, 0};
    p2.add_term(x1x2, ParamScalar::constant(-QScalar::q(), t));
    p2.add_term(x2cube, ParamScalar::param_power(t, xi2, 1));
    CHECK(p2.homogeneous_component(3) ==
          QPolynomial::term(3, ParamScalar::param_power(t, xi2, 1), x2cube));

    // sum of components reassembles the polynomial
    QPolynomial sum(3, t);
    for (uint32_t d = 0; d <= 3; ++d) sum += p2.homogeneous_component(d);
    CHECK(sum == p2);
}

TEST_CASE("associativity and distributivity, randomized") {
    auto t = empty_param_table();
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        uint32_t n = 2 + trial % 3;
        QPolynomial a = random_poly(rng, n, t, 4);
        QPolynomial b = random_poly(rng, n, t, 4);
        QPolynomial c = random_poly(rng, n, t, 4);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) * c == a * c + b * c);
    }
}

TEST_CASE("product grading") {
    auto t = empty_param_table();
    std::mt19937 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        QPolynomial a = random_poly(rng, 3, t, 3);
        QPolynomial b = random_poly(rng, 3, t, 3);
        QPolynomial ab = a * b;
        for (uint32_t d = 0; d <= 8; ++d) {
            QPolynomial sum(3, t);
            for (uint32_t i = 0; i <= d; ++i)
                sum += a.homogeneous_component(i) * b.homogeneous_component(d - i);
            CHECK(sum == ab.homogeneous_component(d));
        }
    }
}

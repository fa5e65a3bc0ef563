#include <doctest.h>

#include "qna/qscalar.hpp"

#include <random>

using namespace qna;

namespace {

QScalar random_qscalar(std::mt19937& rng) {
    std::uniform_int_distribution<int> deg(0, 3), num(-4, 4);
    auto poly = [&]() {
        std::vector<Rational> cs;
        int d = deg(rng);
        for (int i = 0; i <= d; ++i) cs.emplace_back(num(rng));
        return QPoly::from_coeffs(cs);
    };
    QPoly n = poly(), d = poly();
    while (d.is_zero()) d = poly();
    return QScalar(n, d);
}

} // namespace

TEST_CASE("q-integers") {
    QScalar q = QScalar::q();
    CHECK(QScalar::qint(3) == QScalar(1) + q + q * q);
    CHECK(QScalar::qint(0).is_zero());
    CHECK(QScalar::qint(1) == QScalar(1));
    // (-1)_q = -1/q
    CHECK(QScalar::qint(-1) == QScalar(QPoly(-1), QPoly::q()));
    CHECK(QScalar::qint(-1).eval(Rational(2)) == Rational(-1, 2));

    for (long k = -10; k <= 10; ++k)
        CHECK(QScalar::qint(k + 1) == q * QScalar::qint(k) + QScalar(1));
}

TEST_CASE("canonical form") {
    QScalar q = QScalar::q();
    // (q^2-1)/(q-1) collapses to q+1
    QScalar a(QPoly::monomial(2, 1) - QPoly(1), QPoly::q() - QPoly(1));
    CHECK(a == q + QScalar(1));
    CHECK(a.den().is_one());
    // denominator is monic: 1/(2q-2) stores as (1/2)/(q-1)
    QScalar b(QPoly(1), QPoly::q() * Rational(2) - QPoly(2));
    CHECK(b.den().leading() == 1);
    CHECK(b * (q - QScalar(1)) == QScalar(Rational(1, 2)));
}

TEST_CASE("difference of squares and division") {
    QScalar q = QScalar::q();
    CHECK((q + QScalar(1)) * (q - QScalar(1)) == q * q - QScalar(1));
    QScalar two_q = QScalar::qint(2);
    CHECK((-q * two_q) / two_q == -q);
    CHECK(((-q * two_q) / two_q).eval(Rational(2)) == Rational(-2));
    CHECK_THROWS_AS(q / QScalar(0), DivisionByZero);
}

TEST_CASE("field axioms, randomized") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
        QScalar a = random_qscalar(rng), b = random_qscalar(rng), c = random_qscalar(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        if (!a.is_zero()) CHECK(a * a.inverse() == QScalar(1));
    }
}

TEST_CASE("signed q-power recognition") {
    int sign;
    long exp;
    CHECK(QScalar::q_power(-3).as_signed_q_power(sign, exp));
    CHECK(sign == 1);
    CHECK(exp == -3);
    CHECK((-QScalar::q_power(2)).as_signed_q_power(sign, exp));
    CHECK(sign == -1);
    CHECK(exp == 2);
    CHECK_FALSE((QScalar::q() + QScalar(1)).as_signed_q_power(sign, exp));
    CHECK_FALSE(QScalar(Rational(2)).as_signed_q_power(sign, exp));
}

TEST_CASE("symmetric q-integer") {
    // (q^2 - q^-2)/(q - q^-1) = q + q^-1
    CHECK(QScalar::qint_sym(2) == QScalar::q() + QScalar::q_power(-1));
    CHECK(QScalar::qint_sym(0).is_zero());
    CHECK(QScalar::qint_sym(1) == QScalar(1));
}

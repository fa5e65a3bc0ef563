#include <doctest.h>

#include "qna/param.hpp"

#include <random>

using namespace qna;

namespace {

ParamTablePtr demo_table() {
    auto t = std::make_shared<ParamTable>();
    t->declare("a0", true);
    t->declare("e0", true);
    t->declare("a3", true);
    t->declare("xi4", false);
    return t;
}

} // namespace

TEST_CASE("invertible parameter cancellation") {
    auto t = demo_table();
    ParamScalar a0inv = ParamScalar::param_power(t, 0, -1);
    ParamScalar a0 = ParamScalar::param_power(t, 0, 1);
    CHECK(a0inv * a0 == ParamScalar::constant(QScalar(1), t));
    CHECK_THROWS_AS(ParamScalar::param_power(t, 3, -1), NonInvertibleDivisor);
}

TEST_CASE("division rules") {
    auto t = demo_table();
    ParamScalar a0 = ParamScalar::param_power(t, 0, 1);
    ParamScalar xi4 = ParamScalar::param_power(t, 3, 1);
    ParamScalar sum = a0 + xi4;
    CHECK_THROWS_AS(sum.inverse(), NonInvertibleDivisor);
    CHECK_THROWS_AS(xi4.inverse(), NonInvertibleDivisor);
    CHECK_THROWS_AS(a0 / ParamScalar(t), DivisionByZero);
    CHECK(sum / a0 == ParamScalar::constant(QScalar(1), t) + xi4 / a0);
}

TEST_CASE("substitution is a homomorphism") {
    auto t = demo_table();
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> coin(0, 3), cnum(-3, 3);
    auto random_ps = [&]() {
        ParamScalar r(t);
        for (int k = 0; k < 3; ++k) {
            ParamScalar term = ParamScalar::constant(QScalar(Rational(cnum(rng))), t);
            for (int p = 0; p < t->size(); ++p) {
                int e = coin(rng) - 1; // -1..2
                if (e < 0 && !t->invertible(p)) e = -e;
                if (e != 0) term = term * ParamScalar::param_power(t, p, e);
            }
            r += term;
        }
        return r;
    };
    std::map<int, ParamScalar> bind{
        {0, ParamScalar::constant(QScalar(2), t)},
        {3, ParamScalar::param_power(t, 1, 1) + ParamScalar::constant(QScalar(1), t)},
    };
    for (int trial = 0; trial < 100; ++trial) {
        ParamScalar a = random_ps(), b = random_ps();
        CHECK((a * b).substitute(bind) == a.substitute(bind) * b.substitute(bind));
        CHECK((a + b).substitute(bind) == a.substitute(bind) + b.substitute(bind));
    }
}

TEST_CASE("substitution examples") {
    auto t = demo_table();
    QScalar q = QScalar::q();
    // -q * a0^-1 with a0 -> 1 gives -q
    ParamScalar v = ParamScalar::param_power(t, 0, -1, -q);
    CHECK(v.substitute({{0, ParamScalar::constant(QScalar(1), t)}}) ==
          ParamScalar::constant(-q, t));
    // (2)_q at q = 1 is 2
    ParamScalar two_q = ParamScalar::constant(QScalar::qint(2), t);
    CHECK(two_q.eval_q(Rational(1)) == ParamScalar::constant(QScalar(2), t));
    // xi4 -> -q a0^-1 e0^-1 a3^-1
    ParamScalar binding = ParamScalar::param_power(t, 0, -1, -q) *
                          ParamScalar::param_power(t, 1, -1) *
                          ParamScalar::param_power(t, 2, -1);
    ParamScalar xi4 = ParamScalar::param_power(t, 3, 1);
    CHECK(xi4.substitute({{3, binding}}) == binding);
}

TEST_CASE("substitution guards") {
    auto t = demo_table();
    ParamScalar a0 = ParamScalar::param_power(t, 0, 1);
    CHECK_THROWS_AS(a0.substitute({{0, ParamScalar(t)}}), ZeroBinding);
    CHECK_THROWS_AS(a0.eval_q(Rational(-1)), RootOfUnityRisk);
    CHECK_THROWS_AS(a0.eval_q(Rational(0)), std::domain_error);
    ParamScalar a0inv = ParamScalar::param_power(t, 0, -1);
    ParamScalar multi = ParamScalar::param_power(t, 1, 1) + ParamScalar::constant(QScalar(1), t);
    CHECK_THROWS_AS(a0inv.substitute({{0, multi}}), NonInvertibleDivisor);
}

TEST_CASE("monic normalization orders constraints canonically") {
    auto t = demo_table();
    QScalar q = QScalar::q();
    // (q^2+1)*a3*xi4 + (q^3+q)*a0^-1 e0^-1  ~  a3*xi4 + q*a0^-1 e0^-1
    ParamScalar lhs = ParamScalar::param_power(t, 2, 1, q * q + QScalar(1)) *
                          ParamScalar::param_power(t, 3, 1) +
                      ParamScalar::param_power(t, 0, -1, q * q * q + q) *
                          ParamScalar::param_power(t, 1, -1);
    ParamScalar expect = ParamScalar::param_power(t, 2, 1) * ParamScalar::param_power(t, 3, 1) +
                         ParamScalar::param_power(t, 0, -1, q) * ParamScalar::param_power(t, 1, -1);
    CHECK(lhs.normalized_monic() == expect);
}

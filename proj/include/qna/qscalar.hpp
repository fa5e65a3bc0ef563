#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace qna {

using Rational = mpq_class;

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("division by zero") {}
    explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

/// Dense univariate polynomial in q over the rationals. Trailing zero
/// coefficients are never stored, so the zero polynomial has empty storage.
class QPoly {
public:
    QPoly() = default;
    QPoly(const Rational& c);  // constant
    QPoly(long c) : QPoly(Rational(c)) {}
    static QPoly q();                                  // the variable
    static QPoly monomial(int deg, const Rational& c); // c * q^deg, deg >= 0

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; } // -1 for zero
    const Rational& coeff(int i) const;
    Rational leading() const;

    QPoly operator-() const;
    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly operator*(const Rational& c) const;
    bool operator==(const QPoly& o) const { return coeffs_ == o.coeffs_; }

    // Euclidean division; remainder has degree < divisor's.
    static void divmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem);
    static QPoly gcd(const QPoly& a, const QPoly& b); // monic

    Rational eval(const Rational& v) const;
    std::string to_string() const; // "1 + q - 2*q^3" style, ascending powers

    // Builds from a coefficient vector (index = power of q).
    static QPoly from_coeffs(std::vector<Rational> cs);

private:
    std::vector<Rational> coeffs_; // coeffs_[i] multiplies q^i
    void trim();
};

/// Exact rational function in q: numerator/denominator in lowest terms with a
/// monic denominator, so equality of values is equality of representations.
class QScalar {
public:
    QScalar() : num_(), den_(QPoly(1)) {}
    QScalar(long c) : num_(QPoly(c)), den_(QPoly(1)) {}
    QScalar(const Rational& c) : num_(QPoly(c)), den_(QPoly(1)) {}
    QScalar(QPoly num, QPoly den);

    static QScalar q() { return QScalar(QPoly::q(), QPoly(1)); }
    static QScalar q_power(long k);      // q^k, any sign of k
    static QScalar qint(long k);         // (q^k - 1)/(q - 1)
    static QScalar qint_sym(long k);     // (q^k - q^-k)/(q - q^-1)

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }

    QScalar operator-() const;
    QScalar operator+(const QScalar& o) const;
    QScalar operator-(const QScalar& o) const;
    QScalar operator*(const QScalar& o) const;
    QScalar operator/(const QScalar& o) const; // throws DivisionByZero
    QScalar inverse() const;
    QScalar& operator+=(const QScalar& o) { *this = *this + o; return *this; }
    QScalar& operator*=(const QScalar& o) { *this = *this * o; return *this; }

    bool operator==(const QScalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    std::strong_ordering operator<=>(const QScalar& o) const; // arbitrary total order for map keys

    /// Evaluates at a rational value of q; throws DivisionByZero at a pole.
    Rational eval(const Rational& q_value) const;

    /// True when the value is s*q^k for s in {+1,-1}; reports s and k.
    bool as_signed_q_power(int& sign, long& exponent) const;

    std::string to_string() const;

private:
    QPoly num_, den_;
    void normalize();
};

std::string rational_to_string(const Rational& r);

} // namespace qna

#include "qna/qscalar.hpp"

#include <sstream>

namespace qna {

std::string rational_to_string(const Rational& r) {
    return r.get_str();
}

QPoly::QPoly(const Rational& c) {
    if (c != 0) coeffs_.push_back(c);
}

QPoly QPoly::q() {
    QPoly p;
    p.coeffs_ = {Rational(0), Rational(1)};
    return p;
}

QPoly QPoly::monomial(int deg, const Rational& c) {
    QPoly p;
    if (c != 0) {
        p.coeffs_.assign(static_cast<size_t>(deg) + 1, Rational(0));
        p.coeffs_.back() = c;
    }
    return p;
}

QPoly QPoly::from_coeffs(std::vector<Rational> cs) {
    QPoly p;
    p.coeffs_ = std::move(cs);
    p.trim();
    return p;
}

bool QPoly::is_one() const {
    return coeffs_.size() == 1 && coeffs_[0] == 1;
}

const Rational& QPoly::coeff(int i) const {
    static const Rational zero(0);
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[static_cast<size_t>(i)];
}

Rational QPoly::leading() const {
    return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

void QPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPoly QPoly::operator-() const {
    QPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

QPoly QPoly::operator+(const QPoly& o) const {
    QPoly r;
    r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
    r.trim();
    return r;
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator*(const QPoly& o) const {
    if (is_zero() || o.is_zero()) return QPoly();
    QPoly r;
    r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    r.trim();
    return r;
}

QPoly QPoly::operator*(const Rational& c) const {
    if (c == 0) return QPoly();
    QPoly r = *this;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

void QPoly::divmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    quot = QPoly();
    rem = a;
    const int db = b.degree();
    const Rational lb = b.leading();
    while (!rem.is_zero() && rem.degree() >= db) {
        int shift = rem.degree() - db;
        Rational c = rem.leading() / lb;
        QPoly t = QPoly::monomial(shift, c);
        quot = quot + t;
        rem = rem - t * b;
    }
}

QPoly QPoly::gcd(const QPoly& a, const QPoly& b) {
    QPoly x = a, y = b;
    while (!y.is_zero()) {
        QPoly q, r;
        divmod(x, y, q, r);
        x = y;
        y = r;
    }
    if (x.is_zero()) return x;
    return x * (Rational(1) / x.leading()); // monic
}

Rational QPoly::eval(const Rational& v) const {
    Rational acc(0);
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * v + coeffs_[i];
    return acc;
}

std::string QPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        Rational ac = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool unit = (ac == 1);
        if (i == 0) {
            os << rational_to_string(ac);
        } else {
            if (!unit) os << rational_to_string(ac) << "*";
            os << "q";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

QScalar::QScalar(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("QScalar with zero denominator");
    normalize();
}

void QScalar::normalize() {
    if (num_.is_zero()) {
        den_ = QPoly(1);
        return;
    }
    QPoly g = QPoly::gcd(num_, den_);
    if (g.degree() > 0) {
        QPoly q, r;
        QPoly::divmod(num_, g, q, r);
        num_ = q;
        QPoly::divmod(den_, g, q, r);
        den_ = q;
    }
    Rational lead = den_.leading();
    if (lead != 1) {
        Rational inv = Rational(1) / lead;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

QScalar QScalar::q_power(long k) {
    if (k >= 0) return QScalar(QPoly::monomial(static_cast<int>(k), 1), QPoly(1));
    return QScalar(QPoly(1), QPoly::monomial(static_cast<int>(-k), 1));
}

QScalar QScalar::qint(long k) {
    QScalar qm1 = q() - QScalar(1);
    return (q_power(k) - QScalar(1)) / qm1;
}

QScalar QScalar::qint_sym(long k) {
    return (q_power(k) - q_power(-k)) / (q() - q_power(-1));
}

QScalar QScalar::operator-() const {
    QScalar r = *this;
    r.num_ = -r.num_;
    return r;
}

QScalar QScalar::operator+(const QScalar& o) const {
    return QScalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

QScalar QScalar::operator-(const QScalar& o) const {
    return QScalar(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

QScalar QScalar::operator*(const QScalar& o) const {
    return QScalar(num_ * o.num_, den_ * o.den_);
}

QScalar QScalar::operator/(const QScalar& o) const {
    if (o.is_zero()) throw DivisionByZero();
    return QScalar(num_ * o.den_, den_ * o.num_);
}

QScalar QScalar::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    return QScalar(den_, num_);
}

std::strong_ordering QScalar::operator<=>(const QScalar& o) const {
    auto cmp_poly = [](const QPoly& a, const QPoly& b) -> std::strong_ordering {
        if (a.degree() != b.degree()) return a.degree() <=> b.degree();
        for (int i = a.degree(); i >= 0; --i) {
            int c = cmp(a.coeff(i), b.coeff(i));
            if (c != 0) return c <=> 0;
        }
        return std::strong_ordering::equal;
    };
    auto c = cmp_poly(num_, o.num_);
    if (c != 0) return c;
    return cmp_poly(den_, o.den_);
}

Rational QScalar::eval(const Rational& q_value) const {
    Rational d = den_.eval(q_value);
    if (d == 0) throw DivisionByZero("pole at q = " + rational_to_string(q_value));
    return num_.eval(q_value) / d;
}

bool QScalar::as_signed_q_power(int& sign, long& exponent) const {
    if (is_zero()) return false;
    // numerator must be a single signed monomial, denominator a power of q
    int dn = num_.degree();
    for (int i = 0; i < dn; ++i)
        if (num_.coeff(i) != 0) return false;
    int dd = den_.degree();
    for (int i = 0; i < dd; ++i)
        if (den_.coeff(i) != 0) return false;
    Rational c = num_.leading(); // den is monic, so value is c * q^(dn-dd)
    if (c == 1) sign = 1;
    else if (c == -1) sign = -1;
    else return false;
    exponent = dn - dd;
    return true;
}

std::string QScalar::to_string() const {
    if (den_.is_one()) return num_.to_string();
    std::string n = num_.to_string();
    std::string d = den_.to_string();
    bool npar = n.find_first_of("+- ") != std::string::npos && !(n[0] == '-' && n.find_first_of("+- ", 1) == std::string::npos);
    return (npar ? "(" + n + ")" : n) + "/(" + d + ")";
}

} // namespace qna

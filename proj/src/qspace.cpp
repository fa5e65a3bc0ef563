#include "qna/qspace.hpp"

#include <numeric>
#include <sstream>

namespace qna {

Monomial Monomial::generator(size_t rank, size_t i) {
    Monomial m(rank);
    m.exps.at(i) = 1;
    return m;
}

uint32_t Monomial::degree() const {
    return std::accumulate(exps.begin(), exps.end(), 0u);
}

std::string Monomial::to_string() const {
    std::string s;
    for (size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(i + 1);
        if (exps[i] > 1) s += "^" + std::to_string(exps[i]);
    }
    return s.empty() ? "1" : s;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
    uint32_t da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.exps < b.exps;
}

std::pair<long, Monomial> mono_mul(const Monomial& a, const Monomial& b) {
    if (a.rank() != b.rank())
        throw RankMismatch("mono_mul of monomials with ranks " + std::to_string(a.rank()) +
                           " and " + std::to_string(b.rank()));
    Monomial prod(a.rank());
    long qpow = 0;
    // each x_j from b crosses every x_i of a with i > j
    long suffix = 0; // sum of a's exponents with index > j, built from the right
    std::vector<long> above(a.rank(), 0);
    for (size_t j = a.rank(); j-- > 0;) {
        above[j] = suffix;
        suffix += a.exps[j];
    }
    for (size_t j = 0; j < a.rank(); ++j) {
        prod.exps[j] = a.exps[j] + b.exps[j];
        qpow += above[j] * static_cast<long>(b.exps[j]);
    }
    return {qpow, prod};
}

QPolynomial QPolynomial::unit(uint32_t rank, ParamTablePtr table) {
    QPolynomial p(rank, table);
    p.terms_.emplace(Monomial::unit(rank), ParamScalar::constant(QScalar(1), std::move(table)));
    return p;
}

QPolynomial QPolynomial::generator(uint32_t rank, ParamTablePtr table, size_t i) {
    QPolynomial p(rank, table);
    p.terms_.emplace(Monomial::generator(rank, i), ParamScalar::constant(QScalar(1), std::move(table)));
    return p;
}

QPolynomial QPolynomial::term(uint32_t rank, const ParamScalar& c, const Monomial& m) {
    if (m.rank() != rank) throw RankMismatch("term monomial rank");
    QPolynomial p(rank, c.table());
    if (!c.is_zero()) p.terms_.emplace(m, c);
    return p;
}

QPolynomial QPolynomial::constant(uint32_t rank, const ParamScalar& c) {
    return term(rank, c, Monomial::unit(rank));
}

ParamScalar QPolynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    if (it == terms_.end()) return ParamScalar(table_);
    return it->second;
}

int QPolynomial::degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(terms_.rbegin()->first.degree());
}

void QPolynomial::check_rank(const QPolynomial& o) const {
    if (rank_ != o.rank_)
        throw RankMismatch("polynomials of ranks " + std::to_string(rank_) + " and " +
                           std::to_string(o.rank_));
}

void QPolynomial::add_term(const Monomial& m, const ParamScalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

QPolynomial QPolynomial::operator-() const {
    QPolynomial r(rank_, table_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

QPolynomial QPolynomial::operator+(const QPolynomial& o) const {
    check_rank(o);
    QPolynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

QPolynomial QPolynomial::operator-(const QPolynomial& o) const { return *this + (-o); }

QPolynomial QPolynomial::operator*(const QPolynomial& o) const {
    check_rank(o);
    QPolynomial r(rank_, table_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            auto [qpow, prod] = mono_mul(ma, mb);
            r.add_term(prod, (ca * cb) * QScalar::q_power(qpow));
        }
    }
    return r;
}

QPolynomial QPolynomial::scale(const ParamScalar& c) const {
    QPolynomial r(rank_, table_);
    for (const auto& [m, t] : terms_) r.add_term(m, t * c);
    return r;
}

QPolynomial QPolynomial::scale(const QScalar& c) const {
    QPolynomial r(rank_, table_);
    for (const auto& [m, t] : terms_) r.add_term(m, t * c);
    return r;
}

bool QPolynomial::operator==(const QPolynomial& o) const {
    return rank_ == o.rank_ && (*this - o).is_zero();
}

QPolynomial QPolynomial::homogeneous_component(uint32_t d) const {
    QPolynomial r(rank_, table_);
    for (const auto& [m, c] : terms_)
        if (m.degree() == d) r.terms_.emplace(m, c);
    return r;
}

QPolynomial QPolynomial::substitute(const std::map<int, ParamScalar>& bindings,
                                    const std::optional<Rational>& q_value) const {
    QPolynomial r(rank_, table_);
    for (const auto& [m, c] : terms_) r.add_term(m, c.substitute(bindings, q_value));
    return r;
}

QPolynomial QPolynomial::scale_generators(const std::vector<ParamScalar>& factors) const {
    if (factors.size() != rank_) throw RankMismatch("scale_generators factor count");
    QPolynomial r(rank_, table_);
    for (const auto& [m, c] : terms_) {
        ParamScalar f = c;
        for (size_t i = 0; i < rank_; ++i)
            for (uint32_t k = 0; k < m.exps[i]; ++k) f = f * factors[i];
        r.add_term(m, f);
    }
    return r;
}

std::string QPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string cs = c.to_string();
        bool neg = false;
        if (c.is_single_term() && cs.size() > 0 && cs[0] == '-') {
            cs = (-c).to_string();
            neg = true;
        }
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        bool paren = cs.find_first_of("+-") != std::string::npos &&
                     cs.find_first_of("+-") != 0;
        if (!c.is_single_term()) paren = true;
        std::string coeff = paren ? "(" + cs + ")" : cs;
        if (m.is_unit()) {
            os << coeff;
        } else if (coeff == "1") {
            os << m.to_string();
        } else {
            os << coeff << "*" << m.to_string();
        }
    }
    return os.str();
}

} // namespace qna

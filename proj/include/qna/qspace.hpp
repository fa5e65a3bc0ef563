#pragma once

#include "qna/param.hpp"

#include <cstdint>

namespace qna {

struct RankMismatch : std::invalid_argument {
    explicit RankMismatch(const std::string& w) : std::invalid_argument(w) {}
};

/// x_1^{m_1} ... x_n^{m_n} in ascending index order.
struct Monomial {
    std::vector<uint32_t> exps;

    Monomial() = default;
    explicit Monomial(size_t rank) : exps(rank, 0) {}
    static Monomial unit(size_t rank) { return Monomial(rank); }
    static Monomial generator(size_t rank, size_t i); // x_{i+1}, 0-based i

    size_t rank() const { return exps.size(); }
    uint32_t degree() const;
    bool is_unit() const { return degree() == 0; }

    bool operator==(const Monomial& o) const { return exps == o.exps; }
    std::string to_string() const;
};

/// Graded lexicographic order: compare total degree first, then exponent
/// vectors lexicographically. Fixes term iteration for deterministic output.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Moves every letter of `b` left past the letters of `a` it must cross,
/// collecting one factor q per inversion: returns (q_power, a+b).
std::pair<long, Monomial> mono_mul(const Monomial& a, const Monomial& b);

/// Element of A_q(n): normal-ordered terms with ParamScalar coefficients.
class QPolynomial {
public:
    QPolynomial() : rank_(0), table_(empty_param_table()) {}
    QPolynomial(uint32_t rank, ParamTablePtr table)
        : rank_(rank), table_(std::move(table)) {}

    static QPolynomial zero(uint32_t rank, ParamTablePtr table) { return QPolynomial(rank, std::move(table)); }
    static QPolynomial unit(uint32_t rank, ParamTablePtr table);
    static QPolynomial generator(uint32_t rank, ParamTablePtr table, size_t i); // x_{i+1}
    static QPolynomial term(uint32_t rank, const ParamScalar& c, const Monomial& m);
    static QPolynomial constant(uint32_t rank, const ParamScalar& c);

    uint32_t rank() const { return rank_; }
    const ParamTablePtr& table() const { return table_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, ParamScalar, GrlexLess>& terms() const { return terms_; }
    ParamScalar coeff(const Monomial& m) const;
    int degree() const; // max total degree, -1 for zero

    QPolynomial operator-() const;
    QPolynomial operator+(const QPolynomial& o) const;
    QPolynomial operator-(const QPolynomial& o) const;
    QPolynomial operator*(const QPolynomial& o) const; // straightens
    QPolynomial scale(const ParamScalar& c) const;
    QPolynomial scale(const QScalar& c) const;
    QPolynomial& operator+=(const QPolynomial& o) { *this = *this + o; return *this; }

    bool operator==(const QPolynomial& o) const;

    QPolynomial homogeneous_component(uint32_t d) const;
    /// Applies ParamScalar::substitute to every coefficient.
    QPolynomial substitute(const std::map<int, ParamScalar>& bindings,
                           const std::optional<Rational>& q_value = std::nullopt) const;
    /// Rescales each monomial by prod_i factor_i^{m_i} (diagonal substitution
    /// x_i -> factor_i x_i).
    QPolynomial scale_generators(const std::vector<ParamScalar>& factors) const;

    void add_term(const Monomial& m, const ParamScalar& c);
    std::string to_string() const;

private:
    uint32_t rank_;
    ParamTablePtr table_;
    std::map<Monomial, ParamScalar, GrlexLess> terms_;

    void check_rank(const QPolynomial& o) const;
};

} // namespace qna

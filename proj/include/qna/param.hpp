#pragma once

#include "qna/qscalar.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace qna {

struct NonInvertibleDivisor : std::domain_error {
    explicit NonInvertibleDivisor(const std::string& w) : std::domain_error(w) {}
};
struct ZeroBinding : std::domain_error {
    explicit ZeroBinding(const std::string& w) : std::domain_error(w) {}
};
struct RootOfUnityRisk : std::domain_error {
    explicit RootOfUnityRisk(const std::string& w) : std::domain_error(w) {}
};
struct UnknownSymbol : std::domain_error {
    explicit UnknownSymbol(const std::string& w) : std::domain_error(w) {}
};

/// Declared parameter set of a family. Fixed once constructed; ParamScalar
/// term keys index into it.
class ParamTable {
public:
    ParamTable() = default;

    /// Adds a parameter and returns its index. Names must be unique.
    int declare(const std::string& name, bool invertible);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_[static_cast<size_t>(i)]; }
    bool invertible(int i) const { return invertible_[static_cast<size_t>(i)]; }
    int index_of(const std::string& name) const; // -1 when absent
    int require(const std::string& name) const;  // throws UnknownSymbol

private:
    std::vector<std::string> names_;
    std::vector<bool> invertible_;
};

using ParamTablePtr = std::shared_ptr<const ParamTable>;

ParamTablePtr empty_param_table();

/// Exponent vector over a ParamTable; one integer per declared parameter.
using ExpVec = std::vector<int>;

/// Element of the coefficient ring: a finite sum of Laurent monomials in the
/// declared parameters with QScalar coefficients. Zero coefficients are never
/// stored and negative exponents occur only on invertible parameters.
class ParamScalar {
public:
    ParamScalar() : table_(empty_param_table()) {}
    explicit ParamScalar(ParamTablePtr table) : table_(std::move(table)) {}

    static ParamScalar constant(const QScalar& c, ParamTablePtr table);
    static ParamScalar constant(const QScalar& c) { return constant(c, empty_param_table()); }
    /// s * parameter_i^k; k < 0 requires the parameter to be invertible.
    static ParamScalar param_power(ParamTablePtr table, int index, int k, const QScalar& s = QScalar(1));

    const ParamTablePtr& table() const { return table_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const; // no parameter occurs
    /// Constant value; valid only when is_constant().
    QScalar constant_value() const;
    bool is_single_term() const { return terms_.size() == 1; }
    const std::map<ExpVec, QScalar>& terms() const { return terms_; }

    ParamScalar operator-() const;
    ParamScalar operator+(const ParamScalar& o) const;
    ParamScalar operator-(const ParamScalar& o) const;
    ParamScalar operator*(const ParamScalar& o) const;
    ParamScalar operator*(const QScalar& c) const;
    /// Division by a single invertible term. Throws DivisionByZero or
    /// NonInvertibleDivisor.
    ParamScalar operator/(const ParamScalar& o) const;
    ParamScalar inverse() const; // single invertible term only
    ParamScalar& operator+=(const ParamScalar& o) { *this = *this + o; return *this; }

    bool operator==(const ParamScalar& o) const;
    std::strong_ordering operator<=>(const ParamScalar& o) const;

    /// Ring-homomorphic substitution of parameters, and optionally of q by a
    /// rational value (which must be nonzero and either 1 or of absolute
    /// value != 1). Unbound parameters are left alone.
    ParamScalar substitute(const std::map<int, ParamScalar>& bindings,
                           const std::optional<Rational>& q_value = std::nullopt) const;
    ParamScalar eval_q(const Rational& q_value) const { return substitute({}, q_value); }

    bool contains_param(int index) const;
    /// Max exponent of parameter `index` over all terms (0 when absent).
    int max_exponent(int index) const;
    /// Splits as A*p_index + B with p_index absent from A and B.
    /// Only valid when every term has exponent 0 or 1 in p_index.
    bool split_linear(int index, ParamScalar& coeff, ParamScalar& rest) const;

    /// Divides by the QScalar coefficient of the lexicographically largest
    /// term, making constraints canonical and comparable.
    ParamScalar normalized_monic() const;

    std::string to_string() const;

private:
    ParamTablePtr table_;
    std::map<ExpVec, QScalar> terms_;

    void add_term(const ExpVec& e, const QScalar& c);
    static ParamTablePtr join(const ParamTablePtr& a, const ParamTablePtr& b);
    friend class QPolynomial;
};

} // namespace qna

#pragma once

#include "qna/qspace.hpp"

namespace qna {

struct VertexOutOfRange : std::out_of_range {
    explicit VertexOutOfRange(const std::string& w) : std::out_of_range(w) {}
};

/// Diagonal action of one k generator: k(x_i) = sign_i * q^{exp_i} * x_i.
struct KAction {
    std::vector<int> signs;     // +1 or -1
    std::vector<long> exponents;

    KAction() = default;
    KAction(std::vector<int> s, std::vector<long> e);
    static KAction identity(size_t rank);

    size_t rank() const { return signs.size(); }
    KAction inverse() const;
    QScalar scalar(size_t i) const; // sign_i * q^{exp_i}
    bool operator==(const KAction& o) const = default;
};

/// Eigenvalue of k on a monomial: prod_i (sign_i q^{e_i})^{m_i}.
QScalar weight(const Monomial& m, const KAction& k);

/// Diagonal algebra automorphism psi(x_i) = factor_i x_i; factors are single
/// invertible terms.
struct ScalingMap {
    std::vector<ParamScalar> factors;

    explicit ScalingMap(std::vector<ParamScalar> f);
    static ScalingMap identity(size_t rank, const ParamTablePtr& table);
    size_t rank() const { return factors.size(); }
    ScalingMap inverse() const;
    QPolynomial apply(const QPolynomial& p) const;
};

enum class Gen { K, KInv, E, F };

/// A candidate U_q(sl(m+1)) action on A_q(n) given by generator images:
/// per Dynkin vertex t, one KAction and the polynomials e_t(x_i), f_t(x_i).
class ActionFamily {
public:
    ActionFamily(uint32_t space_rank, uint32_t algebra_rank, ParamTablePtr table);

    uint32_t n() const { return n_; }
    uint32_t m() const { return m_; }
    const ParamTablePtr& table() const { return table_; }

    const KAction& k(size_t vertex) const { return k_.at(vertex); }
    const QPolynomial& e_image(size_t vertex, size_t i) const { return e_.at(vertex).at(i); }
    const QPolynomial& f_image(size_t vertex, size_t i) const { return f_.at(vertex).at(i); }

    void set_k(size_t vertex, KAction k);
    void set_e(size_t vertex, size_t i, QPolynomial p);
    void set_f(size_t vertex, size_t i, QPolynomial p);

    /// Applies the action of one generator extended to all of A_q(n) through
    /// the coproduct: e(uv) = u e(v) + e(u) k(v), f(uv) = k^{-1}(u) f(v) + f(u) v,
    /// with k acting multiplicatively and the counit on 1.
    QPolynomial apply(size_t vertex, Gen g, const QPolynomial& p) const;

    /// Conjugated family psi . gen . psi^{-1}; k rows are unchanged because
    /// diagonal maps commute with diagonal k.
    ActionFamily conjugate(const ScalingMap& psi) const;

    /// Substitutes parameters/q in every generator image.
    ActionFamily substitute(const std::map<int, ParamScalar>& bindings,
                            const std::optional<Rational>& q_value = std::nullopt) const;
    ActionFamily substitute_named(const std::map<std::string, ParamScalar>& bindings) const;

    bool operator==(const ActionFamily& o) const;

    std::string to_string() const;

private:
    uint32_t n_, m_;
    ParamTablePtr table_;
    std::vector<KAction> k_;
    std::vector<std::vector<QPolynomial>> e_, f_;

    QPolynomial apply_ef_monomial(size_t vertex, bool is_e, const Monomial& m) const;
    void check_vertex(size_t vertex) const;
};

/// Witness of the first difference between two families.
struct IsoWitness {
    bool equal = true;
    size_t vertex = 0;
    char generator = 'k'; // 'k', 'e' or 'f'
    size_t xi = 0;        // generator index (0-based)
    std::string lhs, rhs;
};

/// True iff conjugate(f1, psi) == f2, with the first difference reported.
IsoWitness check_iso(const ActionFamily& f1, const ActionFamily& f2, const ScalingMap& psi);

} // namespace qna

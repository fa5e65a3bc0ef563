#include "qna/action.hpp"

#include <sstream>

namespace qna {

KAction::KAction(std::vector<int> s, std::vector<long> e)
    : signs(std::move(s)), exponents(std::move(e)) {
    if (signs.size() != exponents.size())
        throw RankMismatch("KAction sign/exponent lengths differ");
    for (int v : signs)
        if (v != 1 && v != -1) throw std::invalid_argument("KAction sign must be +1 or -1");
}

KAction KAction::identity(size_t rank) {
    return KAction(std::vector<int>(rank, 1), std::vector<long>(rank, 0));
}

KAction KAction::inverse() const {
    KAction r = *this;
    for (auto& e : r.exponents) e = -e;
    return r;
}

QScalar KAction::scalar(size_t i) const {
    QScalar s = QScalar::q_power(exponents.at(i));
    return signs.at(i) < 0 ? -s : s;
}

QScalar weight(const Monomial& m, const KAction& k) {
    if (m.rank() != k.rank()) throw RankMismatch("weight: monomial vs KAction rank");
    long exp = 0;
    int sign = 1;
    for (size_t i = 0; i < m.rank(); ++i) {
        exp += k.exponents[i] * static_cast<long>(m.exps[i]);
        if (k.signs[i] < 0 && (m.exps[i] & 1u)) sign = -sign;
    }
    QScalar s = QScalar::q_power(exp);
    return sign < 0 ? -s : s;
}

ScalingMap::ScalingMap(std::vector<ParamScalar> f) : factors(std::move(f)) {
    for (const auto& x : factors)
        x.inverse(); // throws unless a single invertible term
}

ScalingMap ScalingMap::identity(size_t rank, const ParamTablePtr& table) {
    return ScalingMap(std::vector<ParamScalar>(rank, ParamScalar::constant(QScalar(1), table)));
}

ScalingMap ScalingMap::inverse() const {
    std::vector<ParamScalar> inv;
    inv.reserve(factors.size());
    for (const auto& f : factors) inv.push_back(f.inverse());
    return ScalingMap(std::move(inv));
}

QPolynomial ScalingMap::apply(const QPolynomial& p) const {
    return p.scale_generators(factors);
}

ActionFamily::ActionFamily(uint32_t space_rank, uint32_t algebra_rank, ParamTablePtr table)
    : n_(space_rank), m_(algebra_rank), table_(std::move(table)) {
    k_.assign(m_, KAction::identity(n_));
    e_.assign(m_, std::vector<QPolynomial>(n_, QPolynomial::zero(n_, table_)));
    f_.assign(m_, std::vector<QPolynomial>(n_, QPolynomial::zero(n_, table_)));
}

void ActionFamily::check_vertex(size_t vertex) const {
    if (vertex >= m_) throw VertexOutOfRange("vertex " + std::to_string(vertex + 1));
}

void ActionFamily::set_k(size_t vertex, KAction k) {
    check_vertex(vertex);
    if (k.rank() != n_) throw RankMismatch("set_k rank");
    k_[vertex] = std::move(k);
}

void ActionFamily::set_e(size_t vertex, size_t i, QPolynomial p) {
    check_vertex(vertex);
    if (p.rank() != n_) throw RankMismatch("set_e rank");
    e_[vertex].at(i) = std::move(p);
}

void ActionFamily::set_f(size_t vertex, size_t i, QPolynomial p) {
    check_vertex(vertex);
    if (p.rank() != n_) throw RankMismatch("set_f rank");
    f_[vertex].at(i) = std::move(p);
}

QPolynomial ActionFamily::apply_ef_monomial(size_t vertex, bool is_e, const Monomial& m) const {
    if (m.is_unit()) return QPolynomial::zero(n_, table_);
    size_t i = 0;
    while (m.exps[i] == 0) ++i; // lowest-index letter
    Monomial rest = m;
    rest.exps[i] -= 1;
    QPolynomial xi = QPolynomial::generator(n_, table_, i);
    QPolynomial on_rest = apply_ef_monomial(vertex, is_e, rest);
    QPolynomial rest_poly = QPolynomial::term(n_, ParamScalar::constant(QScalar(1), table_), rest);
    if (is_e) {
        // e(x_i w) = x_i e(w) + e(x_i) k(w)
        QScalar wt = weight(rest, k_[vertex]);
        return xi * on_rest + (e_[vertex][i] * rest_poly).scale(wt);
    }
    // f(x_i w) = k^{-1}(x_i) f(w) + f(x_i) w
    QScalar kinv = k_[vertex].scalar(i).inverse();
    return (xi * on_rest).scale(kinv) + f_[vertex][i] * rest_poly;
}

QPolynomial ActionFamily::apply(size_t vertex, Gen g, const QPolynomial& p) const {
    check_vertex(vertex);
    if (p.rank() != n_) throw RankMismatch("apply rank");
    QPolynomial out(n_, table_);
    for (const auto& [m, c] : p.terms()) {
        switch (g) {
        case Gen::K:
            out.add_term(m, c * weight(m, k_[vertex]));
            break;
        case Gen::KInv:
            out.add_term(m, c * weight(m, k_[vertex].inverse()));
            break;
        case Gen::E:
            out += apply_ef_monomial(vertex, true, m).scale(c);
            break;
        case Gen::F:
            out += apply_ef_monomial(vertex, false, m).scale(c);
            break;
        }
    }
    return out;
}

ActionFamily ActionFamily::conjugate(const ScalingMap& psi) const {
    if (psi.rank() != n_) throw RankMismatch("conjugate scaling rank");
    ActionFamily out(n_, m_, table_);
    ScalingMap inv = psi.inverse();
    for (size_t t = 0; t < m_; ++t) {
        out.set_k(t, k_[t]);
        for (size_t i = 0; i < n_; ++i) {
            // (psi gen psi^{-1})(x_i) = factor_i^{-1} * psi(gen(x_i))
            out.set_e(t, i, psi.apply(e_[t][i]).scale(inv.factors[i]));
            out.set_f(t, i, psi.apply(f_[t][i]).scale(inv.factors[i]));
        }
    }
    return out;
}

ActionFamily ActionFamily::substitute(const std::map<int, ParamScalar>& bindings,
                                      const std::optional<Rational>& q_value) const {
    ActionFamily out(n_, m_, table_);
    for (size_t t = 0; t < m_; ++t) {
        out.set_k(t, k_[t]);
        for (size_t i = 0; i < n_; ++i) {
            out.set_e(t, i, e_[t][i].substitute(bindings, q_value));
            out.set_f(t, i, f_[t][i].substitute(bindings, q_value));
        }
    }
    return out;
}

ActionFamily ActionFamily::substitute_named(const std::map<std::string, ParamScalar>& bindings) const {
    std::map<int, ParamScalar> by_index;
    for (const auto& [name, value] : bindings) by_index[table_->require(name)] = value;
    return substitute(by_index);
}

bool ActionFamily::operator==(const ActionFamily& o) const {
    if (n_ != o.n_ || m_ != o.m_) return false;
    for (size_t t = 0; t < m_; ++t) {
        if (!(k_[t] == o.k_[t])) return false;
        for (size_t i = 0; i < n_; ++i)
            if (!(e_[t][i] == o.e_[t][i]) || !(f_[t][i] == o.f_[t][i])) return false;
    }
    return true;
}

std::string ActionFamily::to_string() const {
    std::ostringstream os;
    for (size_t t = 0; t < m_; ++t) {
        for (size_t i = 0; i < n_; ++i)
            os << "k" << t + 1 << "(x" << i + 1 << ") = " << k_[t].scalar(i).to_string()
               << "*x" << i + 1 << "\n";
        for (size_t i = 0; i < n_; ++i)
            os << "e" << t + 1 << "(x" << i + 1 << ") = " << e_[t][i].to_string() << "\n";
        for (size_t i = 0; i < n_; ++i)
            os << "f" << t + 1 << "(x" << i + 1 << ") = " << f_[t][i].to_string() << "\n";
    }
    return os.str();
}

IsoWitness check_iso(const ActionFamily& f1, const ActionFamily& f2, const ScalingMap& psi) {
    if (f1.n() != f2.n() || f1.m() != f2.m())
        throw RankMismatch("check_iso: families of different ranks");
    IsoWitness w;
    ActionFamily c = f1.conjugate(psi);
    for (size_t t = 0; t < f1.m(); ++t) {
        if (!(c.k(t) == f2.k(t))) {
            // diagonal scalings commute with k, so differing k rows can never match
            for (size_t i = 0; i < f1.n(); ++i) {
                if (!(c.k(t).scalar(i) == f2.k(t).scalar(i))) {
                    w = {false, t, 'k', i, c.k(t).scalar(i).to_string(), f2.k(t).scalar(i).to_string()};
                    return w;
                }
            }
        }
        for (size_t i = 0; i < f1.n(); ++i) {
            if (!(c.e_image(t, i) == f2.e_image(t, i))) {
                w = {false, t, 'e', i, c.e_image(t, i).to_string(), f2.e_image(t, i).to_string()};
                return w;
            }
            if (!(c.f_image(t, i) == f2.f_image(t, i))) {
                w = {false, t, 'f', i, c.f_image(t, i).to_string(), f2.f_image(t, i).to_string()};
                return w;
            }
        }
    }
    return w;
}

} // namespace qna

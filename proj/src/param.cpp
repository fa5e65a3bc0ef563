#include "qna/param.hpp"

#include <algorithm>
#include <sstream>

namespace qna {

int ParamTable::declare(const std::string& name, bool invertible) {
    if (index_of(name) >= 0) throw std::invalid_argument("duplicate parameter: " + name);
    names_.push_back(name);
    invertible_.push_back(invertible);
    return static_cast<int>(names_.size()) - 1;
}

int ParamTable::index_of(const std::string& name) const {
    for (size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<int>(i);
    return -1;
}

int ParamTable::require(const std::string& name) const {
    int i = index_of(name);
    if (i < 0) throw UnknownSymbol("undeclared parameter: " + name);
    return i;
}

ParamTablePtr empty_param_table() {
    static const ParamTablePtr t = std::make_shared<ParamTable>();
    return t;
}

ParamTablePtr ParamScalar::join(const ParamTablePtr& a, const ParamTablePtr& b) {
    if (a == b) return a;
    if (a->size() == 0) return b;
    if (b->size() == 0) return a;
    throw std::invalid_argument("ParamScalar operands use different parameter tables");
}

ParamScalar ParamScalar::constant(const QScalar& c, ParamTablePtr table) {
    ParamScalar r(std::move(table));
    if (!c.is_zero()) r.terms_.emplace(ExpVec(static_cast<size_t>(r.table_->size()), 0), c);
    return r;
}

ParamScalar ParamScalar::param_power(ParamTablePtr table, int index, int k, const QScalar& s) {
    if (k < 0 && !table->invertible(index))
        throw NonInvertibleDivisor("negative power of non-invertible parameter " + table->name(index));
    ParamScalar r(std::move(table));
    if (!s.is_zero()) {
        ExpVec e(static_cast<size_t>(r.table_->size()), 0);
        e[static_cast<size_t>(index)] = k;
        r.terms_.emplace(std::move(e), s);
    }
    return r;
}

bool ParamScalar::is_constant() const {
    for (const auto& [e, c] : terms_)
        for (int x : e)
            if (x != 0) return false;
    return true;
}

QScalar ParamScalar::constant_value() const {
    if (terms_.empty()) return QScalar(0);
    return terms_.begin()->second;
}

void ParamScalar::add_term(const ExpVec& e, const QScalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ParamScalar ParamScalar::operator-() const {
    ParamScalar r(table_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

ParamScalar ParamScalar::operator+(const ParamScalar& o) const {
    ParamScalar r(join(table_, o.table_));
    auto widen = [&](const ParamScalar& s) {
        for (const auto& [e, c] : s.terms_) {
            ExpVec e2 = e;
            e2.resize(static_cast<size_t>(r.table_->size()), 0);
            r.add_term(e2, c);
        }
    };
    widen(*this);
    widen(o);
    return r;
}

ParamScalar ParamScalar::operator-(const ParamScalar& o) const { return *this + (-o); }

ParamScalar ParamScalar::operator*(const ParamScalar& o) const {
    ParamScalar r(join(table_, o.table_));
    const size_t n = static_cast<size_t>(r.table_->size());
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            ExpVec e(n, 0);
            for (size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
            for (size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

ParamScalar ParamScalar::operator*(const QScalar& c) const {
    ParamScalar r(table_);
    if (c.is_zero()) return r;
    for (const auto& [e, t] : terms_) r.terms_.emplace(e, t * c);
    return r;
}

ParamScalar ParamScalar::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero ParamScalar");
    if (terms_.size() != 1)
        throw NonInvertibleDivisor("inverse of a multi-term ParamScalar");
    const auto& [e, c] = *terms_.begin();
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0 && !table_->invertible(static_cast<int>(i)))
            throw NonInvertibleDivisor("inverse involves non-invertible parameter " + table_->name(static_cast<int>(i)));
    ParamScalar r(table_);
    ExpVec einv = e;
    for (auto& x : einv) x = -x;
    r.terms_.emplace(std::move(einv), c.inverse());
    return r;
}

ParamScalar ParamScalar::operator/(const ParamScalar& o) const {
    return *this * o.inverse();
}

bool ParamScalar::operator==(const ParamScalar& o) const {
    if (table_ == o.table_) return terms_ == o.terms_;
    return (*this - o).is_zero();
}

std::strong_ordering ParamScalar::operator<=>(const ParamScalar& o) const {
    if (terms_.size() != o.terms_.size()) return terms_.size() <=> o.terms_.size();
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt) {
        if (it->first != jt->first) return it->first <=> jt->first;
        auto c = it->second <=> jt->second;
        if (c != 0) return c;
    }
    return std::strong_ordering::equal;
}

ParamScalar ParamScalar::substitute(const std::map<int, ParamScalar>& bindings,
                                    const std::optional<Rational>& q_value) const {
    if (q_value) {
        const Rational& v = *q_value;
        if (v == 0) throw std::domain_error("q must be nonzero");
        if (v != 1 && (v == -1 || abs(v) == 1))
            throw RootOfUnityRisk("|q| = 1 with q != 1 risks a root of unity");
    }
    for (const auto& [idx, val] : bindings) {
        if (table_->invertible(idx) && val.is_zero())
            throw ZeroBinding("invertible parameter " + table_->name(idx) + " bound to zero");
    }
    ParamScalar result(table_);
    for (const auto& [e, c] : terms_) {
        QScalar cc = c;
        if (q_value) cc = QScalar(cc.eval(*q_value));
        ParamScalar term = ParamScalar::constant(cc, table_);
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            auto it = bindings.find(static_cast<int>(i));
            if (it == bindings.end()) {
                term = term * param_power(table_, static_cast<int>(i), e[i]);
                continue;
            }
            ParamScalar bound = it->second;
            if (q_value) bound = bound.substitute({}, q_value);
            if (e[i] > 0) {
                for (int r = 0; r < e[i]; ++r) term = term * bound;
            } else {
                ParamScalar inv = bound.inverse(); // throws when not a single invertible term
                for (int r = 0; r < -e[i]; ++r) term = term * inv;
            }
        }
        result += term;
    }
    return result;
}

bool ParamScalar::contains_param(int index) const {
    for (const auto& [e, c] : terms_)
        if (static_cast<size_t>(index) < e.size() && e[static_cast<size_t>(index)] != 0) return true;
    return false;
}

int ParamScalar::max_exponent(int index) const {
    int m = 0;
    for (const auto& [e, c] : terms_)
        if (static_cast<size_t>(index) < e.size())
            m = std::max(m, e[static_cast<size_t>(index)]);
    return m;
}

bool ParamScalar::split_linear(int index, ParamScalar& coeff, ParamScalar& rest) const {
    coeff = ParamScalar(table_);
    rest = ParamScalar(table_);
    for (const auto& [e, c] : terms_) {
        int k = e[static_cast<size_t>(index)];
        if (k == 0) {
            rest.add_term(e, c);
        } else if (k == 1) {
            ExpVec e2 = e;
            e2[static_cast<size_t>(index)] = 0;
            coeff.add_term(e2, c);
        } else {
            return false;
        }
    }
    return true;
}

ParamScalar ParamScalar::normalized_monic() const {
    if (terms_.empty()) return *this;
    const QScalar& lead = terms_.rbegin()->second;
    ParamScalar r(table_);
    QScalar inv = lead.inverse();
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * inv);
    return r;
}

std::string ParamScalar::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        bool negated = c.num().leading() < 0;
        std::string cs = (negated ? -c : c).to_string();
        if (first) {
            if (negated) os << "-";
            first = false;
        } else {
            os << (negated ? " - " : " + ");
        }
        std::string mono;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += table_->name(static_cast<int>(i));
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        bool needs_paren = cs.find_first_of("+-") != std::string::npos &&
                           cs.find_first_of("+-") != 0;
        if (mono.empty()) {
            os << cs;
        } else if (cs == "1") {
            os << mono;
        } else {
            os << (needs_paren ? "(" + cs + ")" : cs) << "*" << mono;
        }
    }
    return os.str();
}

} // namespace qna

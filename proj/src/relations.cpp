#include "qna/relations.hpp"

#include <set>
#include <sstream>

namespace qna {

std::string rel_kind_name(RelKind k) {
    switch (k) {
    case RelKind::KKCommute: return "kk-commute";
    case RelKind::KEConjugation: return "k-e-conjugation";
    case RelKind::KFConjugation: return "k-f-conjugation";
    case RelKind::EFCommutator: return "ef-commutator";
    case RelKind::EECommute: return "ee-commute";
    case RelKind::FFCommute: return "ff-commute";
    case RelKind::ESerre: return "e-serre";
    case RelKind::FSerre: return "f-serre";
    case RelKind::UnitCounit: return "unit-counit";
    case RelKind::StraightenE: return "straighten-e";
    case RelKind::StraightenF: return "straighten-f";
    }
    return "?";
}

std::string RelationId::to_string() const {
    std::string s = rel_kind_name(kind);
    if (i > 0) {
        s += "[" + std::to_string(i);
        if (j > 0) s += "," + std::to_string(j);
        s += "]";
    }
    return s;
}

std::string ResidualKey::argument_string() const {
    if (s2 > 0) return "x" + std::to_string(s) + "*x" + std::to_string(s2);
    if (s == 0) return "1";
    return "x" + std::to_string(s);
}

std::string VerificationReport::to_text() const {
    std::ostringstream os;
    for (const auto& [key, res] : residuals) {
        os << "RELATION " << key.rel.to_string() << " AT " << key.argument_string() << ": ";
        os << (res.is_zero() ? "OK" : res.to_string());
        os << "\n";
    }
    os << (passed ? "PASSED" : "FAILED") << "\n";
    return os.str();
}

std::string VerificationReport::to_text_at_q(const Rational& q_value) const {
    std::ostringstream os;
    bool ok = true;
    for (const auto& [key, res] : residuals) {
        QPolynomial at_q = res.substitute({}, q_value);
        os << "RELATION " << key.rel.to_string() << " AT " << key.argument_string() << ": ";
        os << (at_q.is_zero() ? "OK" : at_q.to_string());
        os << "\n";
        if (!at_q.is_zero()) ok = false;
    }
    os << (ok ? "PASSED" : "FAILED") << " at q = " << rational_to_string(q_value) << "\n";
    return os.str();
}

bool VerificationReport::passed_at_q(const Rational& q_value) const {
    for (const auto& [key, res] : residuals)
        if (!res.substitute({}, q_value).is_zero()) return false;
    return true;
}

const QPolynomial* VerificationReport::first_failure(ResidualKey* key) const {
    for (const auto& [k, res] : residuals) {
        if (!res.is_zero()) {
            if (key) *key = k;
            return &res;
        }
    }
    return nullptr;
}

CartanMatrix cartan_type_a(int m) {
    CartanMatrix a(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m), 0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            a[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                i == j ? 2 : (std::abs(i - j) == 1 ? -1 : 0);
    return a;
}

namespace {

// (k_t - k_t^{-1})/(q - q^{-1}) applied to x_s, as an exact rational function.
QPolynomial cartan_term(const ActionFamily& fam, size_t t, size_t s) {
    QScalar num = fam.k(t).scalar(s) - fam.k(t).inverse().scalar(s);
    QScalar c = num / (QScalar::q() - QScalar::q_power(-1));
    return QPolynomial::generator(fam.n(), fam.table(), s).scale(c);
}

QPolynomial gen_poly(const ActionFamily& fam, size_t i) {
    return QPolynomial::generator(fam.n(), fam.table(), i);
}

} // namespace

VerificationReport verify(const ActionFamily& fam, const VerifyOptions& opts) {
    VerificationReport rep;
    const size_t m = fam.m(), n = fam.n();
    const CartanMatrix cartan =
        opts.cartan.empty() ? cartan_type_a(static_cast<int>(m)) : opts.cartan;
    auto a = [&](size_t i, size_t j) { return cartan[i][j]; };

    auto record = [&](RelKind kind, int vi, int vj, int s, int s2, QPolynomial res) {
        if (!res.is_zero()) rep.passed = false;
        rep.residuals.emplace(ResidualKey{RelationId{kind, vi, vj}, s, s2}, std::move(res));
    };

    auto apply = [&](size_t t, Gen g, const QPolynomial& p) { return fam.apply(t, g, p); };

    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < m; ++j) {
            bool cross = i != j;
            if (opts.cross_only && !cross) continue;
            for (size_t s = 0; s < n; ++s) {
                QPolynomial xs = gen_poly(fam, s);
                int vi = static_cast<int>(i) + 1, vj = static_cast<int>(j) + 1, vs = static_cast<int>(s) + 1;

                if (i < j) {
                    QPolynomial kk = apply(i, Gen::K, apply(j, Gen::K, xs)) -
                                     apply(j, Gen::K, apply(i, Gen::K, xs));
                    record(RelKind::KKCommute, vi, vj, vs, 0, std::move(kk));
                }
                if (i == j) {
                    QPolynomial kk = apply(i, Gen::K, apply(i, Gen::KInv, xs)) - xs;
                    record(RelKind::KKCommute, vi, vj, vs, 0, std::move(kk));
                }

                // k_i e_j = q^{a_ij} e_j k_i and the f counterpart
                QPolynomial ke = apply(i, Gen::K, apply(j, Gen::E, xs)) -
                                 apply(j, Gen::E, apply(i, Gen::K, xs)).scale(QScalar::q_power(a(i, j)));
                record(RelKind::KEConjugation, vi, vj, vs, 0, std::move(ke));

                QPolynomial kf = apply(i, Gen::K, apply(j, Gen::F, xs)) -
                                 apply(j, Gen::F, apply(i, Gen::K, xs)).scale(QScalar::q_power(-a(i, j)));
                record(RelKind::KFConjugation, vi, vj, vs, 0, std::move(kf));

                // [e_i, f_j] = delta_ij (k_i - k_i^{-1})/(q - q^{-1})
                QPolynomial ef = apply(i, Gen::E, apply(j, Gen::F, xs)) -
                                 apply(j, Gen::F, apply(i, Gen::E, xs));
                if (i == j) ef = ef - cartan_term(fam, i, s);
                record(RelKind::EFCommutator, vi, vj, vs, 0, std::move(ef));

                if (i < j && a(i, j) == 0) {
                    QPolynomial ee = apply(i, Gen::E, apply(j, Gen::E, xs)) -
                                     apply(j, Gen::E, apply(i, Gen::E, xs));
                    record(RelKind::EECommute, vi, vj, vs, 0, std::move(ee));
                    QPolynomial ff = apply(i, Gen::F, apply(j, Gen::F, xs)) -
                                     apply(j, Gen::F, apply(i, Gen::F, xs));
                    record(RelKind::FFCommute, vi, vj, vs, 0, std::move(ff));
                }

                if (i != j && a(i, j) == -1) {
                    QScalar qq = QScalar::q() + QScalar::q_power(-1);
                    QPolynomial ej = apply(j, Gen::E, xs);
                    QPolynomial serre_e = apply(i, Gen::E, apply(i, Gen::E, ej)) -
                                          apply(i, Gen::E, apply(j, Gen::E, apply(i, Gen::E, xs))).scale(qq) +
                                          apply(j, Gen::E, apply(i, Gen::E, apply(i, Gen::E, xs)));
                    record(RelKind::ESerre, vi, vj, vs, 0, std::move(serre_e));
                    QPolynomial fj = apply(j, Gen::F, xs);
                    QPolynomial serre_f = apply(i, Gen::F, apply(i, Gen::F, fj)) -
                                          apply(i, Gen::F, apply(j, Gen::F, apply(i, Gen::F, xs))).scale(qq) +
                                          apply(j, Gen::F, apply(i, Gen::F, apply(i, Gen::F, xs)));
                    record(RelKind::FSerre, vi, vj, vs, 0, std::move(serre_f));
                }
            }
        }
    }

    if (!opts.cross_only) {
        QPolynomial one = QPolynomial::unit(n, fam.table());
        for (size_t t = 0; t < m; ++t) {
            int vt = static_cast<int>(t) + 1;
            // epsilon(k) = 1, epsilon(e) = epsilon(f) = 0 on the unit
            record(RelKind::UnitCounit, vt, 1, 0, 0, apply(t, Gen::K, one) - one);
            record(RelKind::UnitCounit, vt, 2, 0, 0, apply(t, Gen::E, one));
            record(RelKind::UnitCounit, vt, 3, 0, 0, apply(t, Gen::F, one));

            // e and f across the straightening relation x_hi x_lo = q x_lo x_hi
            for (size_t hi = 1; hi < n; ++hi) {
                for (size_t lo = 0; lo < hi; ++lo) {
                    QPolynomial xhi = gen_poly(fam, hi), xlo = gen_poly(fam, lo);
                    QScalar alpha_hi = fam.k(t).scalar(hi), alpha_lo = fam.k(t).scalar(lo);
                    const QPolynomial &ehi = fam.e_image(t, hi), &elo = fam.e_image(t, lo);
                    const QPolynomial &fhi = fam.f_image(t, hi), &flo = fam.f_image(t, lo);
                    QScalar q = QScalar::q();

                    QPolynomial se = xhi * elo + (ehi * xlo).scale(alpha_lo) -
                                     (xlo * ehi).scale(q) - (elo * xhi).scale(q * alpha_hi);
                    record(RelKind::StraightenE, vt, 0, static_cast<int>(hi) + 1,
                           static_cast<int>(lo) + 1, std::move(se));

                    QPolynomial sf = (xhi * flo).scale(alpha_hi.inverse()) + fhi * xlo -
                                     (xlo * fhi).scale(q * alpha_lo.inverse()) - (flo * xhi).scale(q);
                    record(RelKind::StraightenF, vt, 0, static_cast<int>(hi) + 1,
                           static_cast<int>(lo) + 1, std::move(sf));
                }
            }
        }
    }

    for (const auto& [key, res] : rep.residuals) {
        for (const auto& [mono, c] : res.terms()) {
            rep.constraints.push_back(c.normalized_monic());
        }
    }
    std::set<ParamScalar> dedup(rep.constraints.begin(), rep.constraints.end());
    rep.constraints.assign(dedup.begin(), dedup.end());
    return rep;
}

std::vector<ParamScalar> extract_constraints(const ActionFamily& fam, const VerifyOptions& opts) {
    return verify(fam, opts).constraints;
}

} // namespace qna

#pragma once

#include "qna/action.hpp"

namespace qna {

enum class RelKind {
    KKCommute,
    KEConjugation,
    KFConjugation,
    EFCommutator,
    EECommute,
    FFCommute,
    ESerre,
    FSerre,
    UnitCounit,
    StraightenE,
    StraightenF,
};

std::string rel_kind_name(RelKind k);

/// One defining relation of U_q(sl(m+1)) (or a well-definedness condition),
/// instantiated at vertex indices. Vertices are 1-based as in the tables.
struct RelationId {
    RelKind kind;
    int i = 0;
    int j = 0;

    auto operator<=>(const RelationId&) const = default;
    std::string to_string() const;
};

/// Key of one residual: the relation applied to one argument. For operator
/// relations the argument is the generator x_s (1-based); for straightening
/// it is the product x_hi * x_lo being rewritten.
struct ResidualKey {
    RelationId rel;
    int s = 0;   // generator index, or hi for straightening
    int s2 = 0;  // lo for straightening, otherwise 0

    auto operator<=>(const ResidualKey&) const = default;
    std::string argument_string() const;
};

struct VerificationReport {
    std::map<ResidualKey, QPolynomial> residuals;
    bool passed = true;
    std::vector<ParamScalar> constraints;

    /// Plain-text report, one line per residual:
    /// "RELATION <id> AT <arg>: <residual|OK>".
    std::string to_text() const;
    /// Same lines, but each residual is first evaluated at a numeric q.
    std::string to_text_at_q(const Rational& q_value) const;
    bool passed_at_q(const Rational& q_value) const;
    const QPolynomial* first_failure(ResidualKey* key = nullptr) const;
};

using CartanMatrix = std::vector<std::vector<int>>;

CartanMatrix cartan_type_a(int m);

struct VerifyOptions {
    /// When set, only the relations coupling two distinct vertices are
    /// checked (compatibility of two U_q(sl(2)) actions).
    bool cross_only = false;
    /// Defaults to the type A_m Cartan matrix when empty.
    CartanMatrix cartan;
};

/// Checks every defining relation on every generator x_s (Lemma-style
/// generator checks), plus the counit values on 1 and the straightening
/// consistency of the e/f extensions across x_hi x_lo = q x_lo x_hi.
VerificationReport verify(const ActionFamily& fam, const VerifyOptions& opts = {});

/// The canonicalized coefficients of all nonzero residual monomials; the
/// family is a module algebra exactly on their common zero set.
std::vector<ParamScalar> extract_constraints(const ActionFamily& fam, const VerifyOptions& opts = {});

} // namespace qna

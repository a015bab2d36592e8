#ifndef WCORE_INVERSES_HPP
#define WCORE_INVERSES_HPP

#include <optional>

#include "wcore/affine_solver.hpp"
#include "wcore/equations.hpp"
#include "wcore/weight.hpp"

namespace wcore {

enum class Method { ClosedForm, Oracle };

/// Result of an inverse construction. When `value` is present, every entry of
/// `certificate` holds (this is enforced, not assumed). Absence is a value,
/// encoding non-existence of the requested inverse class.
struct InverseResult {
    std::optional<Matrix> value;
    Certificate certificate;
    Method method = Method::ClosedForm;

    bool present() const { return value.has_value(); }
    const Matrix& get() const { return *value; }
};

/// Least k >= 0 with rank(a^k) = rank(a^{k+1}).
int matrix_index(const Matrix& a);

/// A {1}-inverse: a x a = a. Always exists over a field; the canonical choice
/// is the oracle's particular solution with the homogeneous part zeroed.
Matrix one_inverse(const Matrix& a);

/// Member of a{1,3^m} = {x : axa = a, (max)* = max}, or Absent when the
/// stacked affine system is inconsistent (possible for indefinite m).
InverseResult inverse_13m(const Matrix& a, const Weight& m);

/// Member of a{1,4^n} = {x : axa = a, (nxa)* = nxa}, mirror of inverse_13m.
InverseResult inverse_14n(const Matrix& a, const Weight& n);

/// Group inverse. Exists iff rank(a) = rank(a^2); built from a full-rank
/// factorization a = FG as F (GF)^-2 G, with a = 0 mapped to 0.
InverseResult group_inverse(const Matrix& a);

struct DrazinResult {
    int index = 0;
    InverseResult inv;
};

/// Drazin inverse via a^D = a^K u a^K with u any {1}-inverse of a^{2K+1},
/// K = index(a). Certified against (6^k), (2), (5).
DrazinResult drazin_inverse(const Matrix& a);

/// m-weighted core inverse, closed form a^# a a^(1,3^m). Exists iff a is both
/// group invertible and {1,3^m}-invertible; certified against (1),(2),(3^m),(6),(7).
InverseResult weighted_core(const Matrix& a, const Weight& m);

/// n-weighted dual core inverse, closed form a^(1,4^n) a a^#; certified
/// against (1),(2),(4^n),(8),(9).
InverseResult weighted_dual_core(const Matrix& a, const Weight& n);

/// Independent route to the m-weighted core inverse: solve the affine system
/// {axa=a, (max)*=max, xa^2=a}, map any solution y to y a y, and verify the
/// full five-equation characterization plus uniqueness (every generator of the
/// affine solution set maps to the same candidate; a violation would disprove
/// the uniqueness lemma and throws). Returns Absent iff the system is
/// inconsistent or the candidate fails verification.
InverseResult oracle_weighted_core(const Matrix& a, const Weight& m);

/// Definition-level check: aza = a, zR = aR, Rz = R a* m (row spaces compared
/// as column spaces of adjoints).
bool range_characterization(const Matrix& a, const Matrix& z, const Weight& m);

enum class CheckOutcome { Pass, Fail, HypothesisNotMet };

/// (a^p)^{#,m} = (a^{#,m})^p for p >= 1. HypothesisNotMet when a has no
/// m-weighted core inverse.
CheckOutcome power_rule_check(const Matrix& a, const Weight& m, int p);

}  // namespace wcore

#endif

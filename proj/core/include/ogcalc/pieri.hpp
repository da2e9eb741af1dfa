#pragma once

#include <optional>
#include <vector>

#include "ogcalc/partition.hpp"
#include "ogcalc/rational.hpp"

namespace ogcalc {

/// Quantum multidegree.  Rings with one deformation parameter use d1 only;
/// the two-parameter ring (K = 2) uses both.
struct QDeg {
    int d1 = 0;
    int d2 = 0;
    auto operator<=>(const QDeg&) const = default;
    bool classical() const { return d1 == 0 && d2 == 0; }
};

/// The relation between box [r,c], c <= k, and box [rp,cp], cp > k:
/// c + cp == K + 1 + r - rp.
bool k_related(int r, int c, int rp, int cp, int K, int k);

/// One admissible move la -> mu: the component count N(la, mu) of the
/// unmentioned added boxes beyond column k, and whether the untyped
/// coefficient doubles once more (la has a part K/2 while mu does not).
struct StripStep {
    KStrictPartition shape;
    int components = 0;
    bool bump = false;
};

/// Validates la -> mu (vertical strip off the first k columns, horizontal
/// strip on, per-column matching of removed and bottom boxes) and returns
/// N(la, mu); nullopt when the move is not admissible.  K is 2k or 2k+1.
std::optional<int> strip_components(const KStrictPartition& la, const KStrictPartition& mu,
                                    int K);

/// All mu with la -> mu and |mu| = |la| + p.  box == nullptr puts no rectangle
/// bound on mu (stable ring).  rows_override >= 0 replaces the row bound of
/// box, used by the deformation terms which live one row deeper.
std::vector<StripStep> strip_successors(const KStrictPartition& la, int p, int K,
                                        const GrassParams* box, int rows_override = -1);

/// Untyped rule: c_p . [Y_la] = sum over steps of 2^(components+bump) [Y_mu].
/// Identical to strip_successors; named for the callers that mean the rule.
inline std::vector<StripStep> chern_pieri(const KStrictPartition& la, int p, int K,
                                          const GrassParams* box) {
    return strip_successors(la, p, K, box);
}

struct TypedStep {
    TypedPartition cls;
    int exp2 = 0;
};

/// Typed rule (K = 2k): c_p . tau_la = sum 2^components tau_mu over typed mu
/// whose type is compatible with la's (type sum != 3).
std::vector<TypedStep> chern_pieri_typed(const TypedPartition& la, int p,
                                         const GrassParams* box);

/// Difference-class rule: for positive-type la, c_p acts through the same
/// strips restricted to positive-type mu with coefficient 2^components.
std::vector<StripStep> chern_pieri_tilde(const KStrictPartition& la, int p,
                                         const GrassParams* box);

/// One term of a quantum product: exact coefficient, shape, q-degree; tilde
/// marks difference classes in the mixed two-parameter rules.
struct QuantumTerm {
    KStrictPartition shape;
    Rat coef;
    QDeg q;
    bool tilde = false;
};

/// K >= 3 rule for untyped classes: classical strips, the wrap-around terms
/// one row deeper carrying q, and (when la fills the first row) the double
/// wrap carrying q^2.
std::vector<QuantumTerm> quantum_chern_pieri(const KStrictPartition& la, int p,
                                             const GrassParams& P);

/// K >= 4 even: difference classes multiply through the odd-parity ring one
/// column over, with q negated.  la must have positive type; all output
/// shapes have positive type (tilde flag set).
std::vector<QuantumTerm> quantum_chern_pieri_tilde(const KStrictPartition& la, int p,
                                                   const GrassParams& P);

/// K == 2 rules (k = 1, m = n, parameters q1 and q2).  The hat rule takes an
/// untyped shape, the tilde rule a positive-type shape; both emit a mix of
/// hat and tilde terms.
std::vector<QuantumTerm> k2_quantum_pieri_hat(const KStrictPartition& la, int p,
                                              const GrassParams& P);
std::vector<QuantumTerm> k2_quantum_pieri_tilde(const KStrictPartition& la, int p,
                                                const GrassParams& P);

}  // namespace ogcalc

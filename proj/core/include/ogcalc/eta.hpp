#pragma once

#include <map>
#include <vector>

#include "ogcalc/mpoly.hpp"
#include "ogcalc/partition.hpp"
#include "ogcalc/symfunc.hpp"

namespace ogcalc {

/// Theta polynomial of a k-strict partition: the raising-operator expansion
/// with inverted pairs at threshold 2k+1, applied to theta monomials.
/// Requires cfg.k == la.k().
MPoly theta_polynomial(const KStrictPartition& la, const VarConfig& cfg);

/// Raising-operator S and Q analogues over theta monomials: S uses no
/// inverted pairs (a theta determinant), Q inverts every pair.
MPoly S_polynomial(const std::vector<int>& parts, const VarConfig& cfg);
MPoly Q_polynomial(const std::vector<int>& parts, const VarConfig& cfg);

/// Eta polynomial H_la of a typed k-strict partition: 2^{-ell_k(la)} times
/// the raising expansion at threshold 2k applied to theta monomials, where
/// for a positive-type shape the factors touching the distinguished row
/// d = ell_k(la)+1 contribute half weight and the untouched part multiplies
/// the reduced theta monomial by eta_k (type 1) or eta'_k (type 2).
/// Requires cfg.k == la.shape.k().
MPoly eta_polynomial(const TypedPartition& la, const VarConfig& cfg);

/// Type-blind halves of the eta polynomial:
///   eta_hat  = 2^{-ell_k} * plain raising expansion (equals the sum of the
///              two typed classes on a positive-type shape, H itself else),
///   eta_tilde = their difference = 2^{-ell_k(la)} e_k(y) Theta_{la - k},
///              zero when la has no part k.
/// So H = eta_hat for type 0 and (eta_hat +/- eta_tilde)/2 for types 1/2.
MPoly eta_hat(const KStrictPartition& la, const VarConfig& cfg);
MPoly eta_tilde(const KStrictPartition& la, const VarConfig& cfg);

/// Regimes of the closed-form specialization of H_la: S when every pair
/// i < j <= ell satisfies la_i + la_j < 2k + j - i, Q when every pair
/// satisfies the reverse inequality, `both` when the pair set is empty
/// (at most one row), `mixed` otherwise.
enum class SQCase { S, Q, both, mixed };

struct SQResult {
    SQCase regime;
    MPoly value;
};

/// Closed form of H_la in its regime:
///   S regime:  S_la (la_1 < k), (S_la +/- e_k(y) S_{la-k})/2 (types 1/2),
///              S_la/2 (type 0 with la_1 > k);
///   Q regime:  2^{-ell} Q_la (la_ell > k), 2^{-ell}(Q_la +/- e_k(y) Q_{la-k})
///              (types 1/2), 2^{1-ell} Q_la (type 0 with la_ell < k).
/// In the mixed regime no closed form applies and value falls back to
/// eta_polynomial.
SQResult SQ_specialization(const TypedPartition& la, const VarConfig& cfg);

/// Coordinates of H_la over P_mu(x) s_{nu'}(y): checked to be nonnegative
/// integers with every nu contained in the first-k-columns shape lambda^2
/// (throws std::logic_error otherwise).  Needs cfg.degcap >= |la|.
std::map<PSKey, long> d_coefficients(const TypedPartition& la, const VarConfig& cfg);

/// Re-expands f over the eta polynomials H_rho (rho typed k-strict, k taken
/// from f's config).  Pivots on the lowest x-degree slice: the bottom
/// summand of H_rho is the single product P_{rho^1}(x) s_{(rho^2)'}(y)
/// (P_{rho^3} s_{(rho^4)'} for type 2), so each slice hands out its
/// coordinates directly.  Throws std::domain_error when f is outside the
/// span; needs cfg.degcap >= deg f.
std::map<TypedPartition, Rat> expand_H_basis(const MPoly& f);

}  // namespace ogcalc

#pragma once

#include <map>
#include <string>
#include <vector>

#include "ogcalc/partition.hpp"
#include "ogcalc/rational.hpp"
#include "ogcalc/specialpoly.hpp"

namespace ogcalc {

/// Sentinel thresholds for the inverted-factor pair set
/// {(i,j) : i < j, parts_i + parts_j >= cond + j - i}.
inline constexpr int kNoPairsCond = 1 << 28;    ///< empty set: plain product of (1 - R_ij)
inline constexpr int kAllPairsCond = -(1 << 28);  ///< every pair inverted

/// Pairs (i,j), 1-based, selected by the threshold above.
std::vector<std::pair<int, int>> inverted_pairs(const std::vector<int>& parts, int cond);

/// Expands prod_{i<j} (1 - R_ij) * prod_{selected} (1 + R_ij)^{-1} applied to
/// the subscript vector `parts`.  Keys keep the full length (zeros retained);
/// every surviving key is entrywise >= 0 with the same entry sum as `parts`.
std::map<std::vector<int>, Rat> expand_raising(const std::vector<int>& parts, int cond);

/// Same expansion, split by whether any applied factor R_ij with positive
/// exponent had i == d or j == d (1-based).  d == 0 means nothing is marked.
/// Untouched keys satisfy key[d-1] == parts[d-1].
struct TaggedExpansion {
    int d = 0;
    std::map<std::vector<int>, Rat> untouched;
    std::map<std::vector<int>, Rat> touched;
};
TaggedExpansion expand_raising_tagged(const std::vector<int>& parts, int cond, int d,
                                      long cap_override = -1);

/// Giambelli polynomial for an untyped class: 2^{-ell_k} * expansion of the
/// operator applied to c_lambda, collected over Chern monomials. K must be
/// 2k or 2k+1.
SpecialPoly giambelli_c(const KStrictPartition& la, int K);

/// Typed Giambelli.  c_form uses generators c_p plus at most one factor of the
/// primed generator per monomial; tau_form is the same polynomial rewritten
/// over tau_p / tau'_k.  Requires K == 2k.
struct GiambelliSpecial {
    SpecialPoly c_form;
    SpecialPoly tau_form;
};
GiambelliSpecial giambelli_special(const TypedPartition& la, int K);

/// Difference of the two typed classes over a positive-type shape:
/// tau_lambda - tau'_lambda = (tau_k - tau'_k) * c_factor where
/// c_factor = 2^{-ell_k(mu)} * shifted expansion of c_mu, mu = la minus one
/// part k.  tau_form is the product expanded over tau generators.
struct GiambelliTilde {
    SpecialPoly c_factor;
    SpecialPoly tau_form;
};
GiambelliTilde giambelli_tilde(const KStrictPartition& la, int K);

/// Human rendering of giambelli_special keeping c_k grouped as
/// (tau_k + tau'_k), e.g. the factored six-term display for k=2, (3,2,2).
std::string giambelli_special_text(const TypedPartition& la, int K);

}  // namespace ogcalc

#pragma once

#include <map>
#include <string>
#include <vector>

#include "ogcalc/mpoly.hpp"
#include "ogcalc/partition.hpp"
#include "ogcalc/rational.hpp"

namespace ogcalc {

/// Element of the even orthogonal Weyl group: a signed permutation with an
/// even number of barred (negative) values, stored as a window of 1-based
/// images and acting as the identity beyond it.  Simple reflections: s_0
/// sends (u_1, u_2, ...) to (-u_2, -u_1, u_3, ...) on the right, s_r for
/// r >= 1 swaps positions r, r+1.
class SignedPermutation {
  public:
    SignedPermutation() = default;  ///< identity
    explicit SignedPermutation(std::vector<int> images);

    static SignedPermutation simple(int r);  ///< s_r, r >= 0

    const std::vector<int>& images() const { return img_; }
    int size() const { return static_cast<int>(img_.size()); }
    /// Image of i >= 1 (identity beyond the window).
    int operator()(int i) const;

    /// Coxeter length: inversions plus negative-sum pairs,
    /// #{i<j : w(i)>w(j)} + #{i<j : w(i)+w(j)<0}.
    int length() const;
    bool has_descent(int r) const;       ///< ell(w s_r) < ell(w)
    std::vector<int> descents() const;   ///< ascending, may start at 0
    /// Descents confined to {k} (to {0,1} when k == 1).
    bool is_grassmannian(int k) const;
    bool is_unbarred() const;

    SignedPermutation right_mul(int r) const;  ///< w * s_r
    SignedPermutation inverse() const;
    friend SignedPermutation operator*(const SignedPermutation& u, const SignedPermutation& v);

    /// Canonical form: trailing fixed points dropped.  Two windows denote the
    /// same element of the infinite group iff their trimmed forms are equal.
    SignedPermutation trimmed() const;

    bool operator==(const SignedPermutation& o) const { return img_ == o.img_; }
    auto operator<=>(const SignedPermutation& o) const = default;

    std::string text() const;  ///< space-separated images, e.g. "-3 6 7 -5 -2 -1 4 8"
    static SignedPermutation from_text(const std::string& s);

  private:
    std::vector<int> img_;
};

/// All reduced words of w (letters >= 0, s_0 included).
std::vector<std::vector<int>> reduced_words(const SignedPermutation& w);

/// Flattening replaces every 0 by 1; the result need not be reduced.
std::vector<int> flatten_word(std::vector<int> word);

/// Distinct flattened reduced words of w.
std::vector<std::vector<int>> flattened_words(const SignedPermutation& w);

/// The k-Grassmannian element attached to a typed k-strict partition, windowed
/// in n+1 entries.  n defaults to max(ell(la)+k, la_1-k), the smallest window
/// this construction supports; the element itself is independent of n.
/// Throws std::domain_error when la does not fit the (n+1-k) x (n+k)
/// rectangle.
SignedPermutation partition_perm(const TypedPartition& la, int n = -1);

/// Inverse of partition_perm: recovers the typed k-strict partition indexing
/// a k-Grassmannian element.  Throws std::domain_error when w is not
/// k-Grassmannian.
TypedPartition perm_partition(const SignedPermutation& w, int k);

/// Kraskiewicz-Lam tableau: rows top to bottom (row 1 longest); the row word
/// reads the bottom row first.  m is the branching exponent
/// ell(shape)+1 - #distinct prefix images of 1.
struct KLTableau {
    std::vector<std::vector<int>> rows;
    std::vector<int> shape;
    int m = 0;

    bool operator==(const KLTableau&) const = default;
};

/// All Kraskiewicz-Lam tableaux for w, optionally restricted to one shape.
std::vector<KLTableau> kl_tableaux(const SignedPermutation& w);
std::vector<KLTableau> kl_tableaux(const SignedPermutation& w, const std::vector<int>& shape);

/// Type D Stanley symmetric function E_w(x) = sum_T 2^{m(T)} P_{shape(T)}.
MPoly stanley_E(const SignedPermutation& w, const VarConfig& cfg);

/// Sparse polynomial in z_1..z_m: plain exponent keys (trailing zeros
/// trimmed), not symmetric in general.
using ZPoly = std::map<std::vector<int>, Rat>;

/// Type A Schubert polynomial of a permutation (1-based images), computed by
/// divided differences down from the staircase monomial.
ZPoly schubert_A(const std::vector<int>& v);

/// The Grassmannian permutation with descent at k whose Schubert polynomial
/// is s_{nu'}(z_1..z_k); needs nu_1 <= k.
std::vector<int> a_grassmannian_perm(const std::vector<int>& nu, int k);

/// Reads a z-polynomial into the y block: requires support within
/// z_1..z_{cfg.k} and symmetry under those variables (throws
/// std::domain_error otherwise).
MPoly z_to_y(const ZPoly& f, const VarConfig& cfg);

/// Billey-Haiman type D Schubert polynomial restricted to the model:
/// sum of E_u(x) * Schubert_v(y) over the length-additive factorizations
/// w = u v with v unbarred.  Every v must satisfy the z_to_y restriction,
/// which holds whenever w is k-Grassmannian.
MPoly billey_haiman_D(const SignedPermutation& w, const VarConfig& cfg);

}  // namespace ogcalc

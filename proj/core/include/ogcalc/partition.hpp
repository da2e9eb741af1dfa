#pragma once

#include <optional>
#include <string>
#include <vector>

namespace ogcalc {

/// Parameters of an orthogonal Grassmannian OG(m, N), N = 2n+2 or 2n+1.
///
/// K = N - 2m.  Even N forces K = 2k with k >= 1 (so m = n+1-k); odd N has
/// K = 2k+1 with k >= 0 (so m = n-k).  Always n + k = N - m - 1.
struct GrassParams {
    int N = 0;  ///< ambient dimension
    int m = 0;  ///< subspace dimension, 0 < 2m < N
    int n = 0;
    int k = 0;
    int K = 0;  ///< N - 2m
    bool even = false;

    static GrassParams from_mN(int m, int N);
    /// Even space OG(n+1-k, 2n+2); requires 1 <= k <= n+1... k <= n so m >= 1.
    static GrassParams even_kn(int k, int n);
    /// Odd space OG(n-k, 2n+1); requires 0 <= k < n.
    static GrassParams odd_kn(int k, int n);

    int max_part() const { return n + k; }  ///< width of the Schubert rectangle
    bool operator==(const GrassParams&) const = default;
};

/// A k-strict partition: weakly decreasing nonnegative parts in which no part
/// greater than k is repeated.  Trailing zeros are trimmed on construction and
/// k is stored with the shape.
class KStrictPartition {
  public:
    KStrictPartition() = default;
    /// Throws std::domain_error unless valid(parts, k).
    KStrictPartition(std::vector<int> parts, int k);

    static bool valid(const std::vector<int>& parts, int k);

    const std::vector<int>& parts() const { return parts_; }
    int k() const { return k_; }
    int length() const { return static_cast<int>(parts_.size()); }
    /// 1-based part access; rows beyond the length read as 0.
    int part(int i) const;
    int weight() const;
    /// Number of parts strictly greater than k.
    int ell_k() const;
    bool has_part(int v) const;
    bool empty() const { return parts_.empty(); }
    /// Fits inside the m x (n+k) rectangle of the given space (same k).
    bool fits(const GrassParams& P) const;

    bool operator==(const KStrictPartition&) const = default;
    auto operator<=>(const KStrictPartition&) const = default;

  private:
    std::vector<int> parts_;
    int k_ = 0;
};

/// A typed k-strict partition.  type is 0, 1, or 2; it is positive exactly
/// when some part equals k.
struct TypedPartition {
    KStrictPartition shape;
    int type = 0;

    TypedPartition() = default;
    TypedPartition(KStrictPartition s, int t);
    TypedPartition(std::vector<int> parts, int k, int t) : TypedPartition(KStrictPartition(std::move(parts), k), t) {}

    bool positive_type() const { return type > 0; }
    bool operator==(const TypedPartition&) const = default;
    auto operator<=>(const TypedPartition&) const = default;
};

/// The derived shapes of a typed k-strict partition.  lambda1 is the strict
/// partition of the columns beyond k, lambda2 the first k columns; lambda3 and
/// lambda4 exist only for type 2 (lambda1 with the smallest marked-diagonal
/// length added, and lambda2 with that many boxes removed from column k).
struct DerivedShapes {
    std::vector<int> star;     ///< (lambda_2, lambda_3, ...)
    std::vector<int> plus_k;   ///< lambda with one extra part k
    std::optional<std::vector<int>> minus_k;  ///< lambda minus one part k, if present
    std::vector<int> lambda1;
    std::vector<int> lambda2;
    std::optional<std::vector<int>> lambda3;
    std::optional<std::vector<int>> lambda4;
};

std::vector<int> conjugate(const std::vector<int>& parts);

/// Lengths of the k diagonals marked by the bottom boxes of the first k
/// columns (column c marks the diagonal through the boxes K-related to its
/// bottom box; length = number of its boxes outside lambda), sorted ascending.
/// The smallest is 0 exactly for type-0 shapes.
std::vector<int> marked_diagonal_lengths(const KStrictPartition& la);

DerivedShapes derived_shapes(const TypedPartition& la);

/// Index function p-bar of Eq-style Schubert indexing: for j = 1..m,
///   pbar_j = N - m + j - la_j - #{i <= j : la_i + la_j >= K + j - i, la_i > k}.
/// Requires la to fit the rectangle of P.  Never takes the value n+1.
std::vector<int> index_bar(const KStrictPartition& la, const GrassParams& P);

/// Typed index function (even N): p_j = pbar_j - 1 when la_j = k < la_{j-1}
/// and n + j + type(la) is even, else pbar_j.
std::vector<int> index_typed(const TypedPartition& la, const GrassParams& P);

/// All k-strict partitions inside a maxRows x maxPart rectangle.
std::vector<KStrictPartition> enumerate_k_strict(int k, int max_rows, int max_part);
/// All k-strict partitions of the given weight (unbounded rectangle).
std::vector<KStrictPartition> enumerate_k_strict_weight(int k, int weight);

/// Typed variants of one shape: both types if some part equals k, else type 0.
std::vector<TypedPartition> typed_versions(const KStrictPartition& la);
/// All typed k-strict partitions in the rectangle of P (even N).
std::vector<TypedPartition> enumerate_typed(const GrassParams& P);
/// All typed k-strict partitions of the given weight (unbounded rectangle).
std::vector<TypedPartition> enumerate_typed_weight(int k, int weight);

/// Canonical text form "k=2:[3,2,2]:t1" and its parser.
std::string to_text(const TypedPartition& la);
TypedPartition typed_from_text(const std::string& s);

}  // namespace ogcalc

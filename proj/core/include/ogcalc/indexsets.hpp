#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ogcalc/partition.hpp"

namespace ogcalc {

/// An m-element subset P of [1,N] with i+j != N+1 for all i,j in P; these
/// label the Schubert varieties X_P of OG(m,N).  For odd N the condition
/// forces n+1 out of P.
class IndexSet {
  public:
    /// Throws std::domain_error unless elements is a valid index set for P.
    IndexSet(std::vector<int> elements, GrassParams params);

    const std::vector<int>& elements() const { return elems_; }
    const GrassParams& params() const { return params_; }
    int element(int j) const { return elems_[j - 1]; }  ///< 1-based, sorted ascending
    bool contains(int p) const;

    bool operator==(const IndexSet& o) const { return elems_ == o.elems_ && params_ == o.params_; }
    auto operator<=>(const IndexSet& o) const = default;

    std::string text() const;  ///< comma-separated, e.g. "2,5,9"
    static IndexSet from_text(const std::string& s, GrassParams params);

  private:
    std::vector<int> elems_;
    GrassParams params_;
};

/// Type of an index set (even N): zero when P avoids {n+1, n+2}, else 1 plus
/// the parity of #([1,n+1] minus P).  Odd N has no types; returns 0.
int type_of(const IndexSet& P);

/// Index set of a typed shape (even N): the typed index function of la.
IndexSet index_set_of(const TypedPartition& la, const GrassParams& params);
/// Barred index set of a k-strict shape (either parity): the index function
/// pbar, which never contains n+1.
IndexSet index_set_of(const KStrictPartition& la, const GrassParams& params);

/// Inverse of the typed bijection (even N only).
TypedPartition partition_of(const IndexSet& P);
/// Inverse of the barred bijection; requires n+1 not in P.
KStrictPartition shape_of(const IndexSet& P);

/// Replaces n+1 by n+2 (identity when n+1 is absent).
IndexSet bar(const IndexSet& P);
/// [P] = P together with the reflected values N+1-p.
std::set<int> bracket(const IndexSet& P);
/// Swaps membership of n+1 and n+2 (even N; identity for odd N).
IndexSet iota(const IndexSet& P);

/// Componentwise comparison q_j <= p_j of the sorted elements.
bool leq(const IndexSet& Q, const IndexSet& P);

/// Smallest c <= n+1 with [c,n+1] inside both brackets and equal element
/// counts below c; empty when the pair is not critical.
std::optional<int> critical_index(const IndexSet& Q, const IndexSet& P);

/// Q <= P, and the types agree whenever (Q,P) is critical (even N).
bool preceq(const IndexSet& Q, const IndexSet& P);

/// The closure order of Schubert varieties: X_Q inside X_P.  This is preceq
/// for even N and leq for odd N.
bool closure_leq(const IndexSet& Q, const IndexSet& P);

/// Every index set for the space, in lexicographic order.
std::vector<IndexSet> all_index_sets(const GrassParams& params);

/// Cover relations (lower, upper) of the closure order: the transitive
/// reduction of closure_leq on all index sets.
std::vector<std::pair<IndexSet, IndexSet>> bruhat_covers(const GrassParams& params);

/// One cover per line, "lower < upper" in element text form.
std::string poset_edges_text(const GrassParams& params);
/// {"nodes":[{"set":[...],"partition":...,"type":...}],"covers":[[lo,hi],...]}
std::string poset_edges_json(const GrassParams& params);

}  // namespace ogcalc

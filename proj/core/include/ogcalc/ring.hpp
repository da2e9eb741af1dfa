#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ogcalc/partition.hpp"
#include "ogcalc/pieri.hpp"
#include "ogcalc/rational.hpp"

namespace ogcalc {

enum class RingMode { classical, quantum, stable };

/// Which Schubert-basis ring an expression lives in.  Bounded rings carry
/// their space; the stable ring is the even-parity inverse limit and needs
/// only k (unbounded rectangle, no deformation parameter).
struct RingSpec {
    RingMode mode = RingMode::stable;
    int k = 1;
    std::optional<GrassParams> box;

    static RingSpec classical_ring(const GrassParams& P) { return {RingMode::classical, P.k, P}; }
    static RingSpec quantum_ring(const GrassParams& P) { return {RingMode::quantum, P.k, P}; }
    static RingSpec stable_ring(int k) { return {RingMode::stable, k, std::nullopt}; }

    int K() const { return box ? box->K : 2 * k; }
    bool even() const { return !box || box->even; }
    bool operator==(const RingSpec&) const = default;
};

/// Basis label: shape, type (0 for odd-parity rings and non-positive shapes),
/// and deformation degree (always zero in classical and stable rings).
struct TermKey {
    KStrictPartition shape;
    int type = 0;
    QDeg q;
    auto operator<=>(const TermKey&) const = default;
};

struct SchubertExpr {
    RingSpec ring;
    std::map<TermKey, Rat> terms;

    void add(const TermKey& key, const Rat& c);
    SchubertExpr& operator+=(const SchubertExpr& o);
    SchubertExpr& operator-=(const SchubertExpr& o);
    SchubertExpr& operator*=(const Rat& c);
    bool is_zero() const { return terms.empty(); }
    bool operator==(const SchubertExpr&) const = default;
};

SchubertExpr zero_expr(const RingSpec& ring);
SchubertExpr unit_expr(const RingSpec& ring);
/// Validates the label against the ring: k and typing consistency, rectangle
/// membership for bounded rings, q = 0 outside quantum mode.
SchubertExpr basis_expr(const RingSpec& ring, KStrictPartition shape, int type = 0, QDeg q = {});

/// Sum/difference coordinates: hat holds coefficients of tau-hat (type-1 plus
/// type-2, equal to the untyped class), tilde of tau-tilde (type-1 minus
/// type-2, supported on positive-type shapes only).
struct SplitExpr {
    RingSpec ring;
    std::map<std::pair<KStrictPartition, QDeg>, Rat> hat;
    std::map<std::pair<KStrictPartition, QDeg>, Rat> tilde;

    void add_hat(const KStrictPartition& s, const QDeg& q, const Rat& c);
    void add_tilde(const KStrictPartition& s, const QDeg& q, const Rat& c);
    SplitExpr& add_scaled(const SplitExpr& o, const Rat& c);
    bool operator==(const SplitExpr&) const = default;
};

SplitExpr to_split(const SchubertExpr& e);
SchubertExpr from_split(const SplitExpr& s);

/// Multiplication generators: the special classes c_p, and for even-parity
/// rings the two middle generators.
struct Generator {
    enum class Kind { chern, tau_prime, tau_tilde };
    Kind kind = Kind::chern;
    int p = 1;

    static Generator chern(int p) { return {Kind::chern, p}; }
    static Generator tau_prime() { return {Kind::tau_prime, 0}; }
    static Generator tau_tilde() { return {Kind::tau_tilde, 0}; }
};

/// One generator applied to an expression, classical/stable via the strip
/// rules and quantum via the deformation rules (two-parameter when K = 2).
SplitExpr apply_generator(const SplitExpr& e, const Generator& g);

/// Exact product in the ring of e's spec: the left factor is expanded into
/// its generator polynomial, which is folded term-by-term onto the right.
SchubertExpr multiply(const SchubertExpr& a, const SchubertExpr& b);

/// Coefficients of tau_nu q^d in tau_la . tau_mu; throws if any coefficient
/// fails to be an integer.
std::map<TermKey, Rat> structure_constants(const TypedPartition& la, const TypedPartition& mu,
                                           const RingSpec& ring);

struct GiambelliCheck {
    bool equal = false;
    SchubertExpr computed;
};
/// Evaluates la's generator polynomial on 1 in the quantum ring and compares
/// with the basis class (no deformation corrections expected).
GiambelliCheck verify_quantum_giambelli(const TypedPartition& la, const GrassParams& P);

/// The unique stable-ring coefficients with [Y_la] = sum a_{p,mu} c_p [Y_mu],
/// p >= la_1 and (p, mu) k-strict, solved by exact elimination in the graded
/// piece.  Verifies the support constraints (mu inside la minus its first
/// row; p < 2n+2k when a rectangle is supplied and la fits it) and throws
/// std::runtime_error if the system is singular or a constraint fails.
std::map<std::pair<int, KStrictPartition>, Rat> recursion_coefficients(
    const KStrictPartition& la, const GrassParams* rect = nullptr);

/// The involution exchanging types 1 and 2.
SchubertExpr iota(const SchubertExpr& e);

/// Degree |shape| + (weighted) q-degree; q weighs n+k, or n+1 per parameter
/// when K = 2.
int term_degree(const RingSpec& ring, const TermKey& key);
/// Common degree of all terms, nullopt if inhomogeneous; 0 for the zero expr.
std::optional<int> homogeneous_degree(const SchubertExpr& e);
bool integer_coefficients(const SchubertExpr& e);

/// Module map from an odd-parity ring to its even-parity partner: the class
/// of shape la maps to the tilde class of la with a part k inserted; in
/// quantum mode the deformation degree contributes a sign (-1)^d.
SplitExpr odd_to_even_transfer(const SchubertExpr& e);
/// Inverse of the above on tilde-supported expressions (hat part must vanish).
SchubertExpr even_to_odd_transfer(const SplitExpr& s);

/// Image in the quotient that identifies the two deformation parameters of
/// the two-parameter ring (q1 = q2 = q, written on the first slot); the
/// identity on one-parameter rings.  The transfer map commutes with the
/// special classes of a two-parameter target only in this quotient.
SplitExpr identify_deformations(const SplitExpr& s);

}  // namespace ogcalc

#pragma once

#include <map>
#include <string>
#include <vector>

#include "ogcalc/rational.hpp"

namespace ogcalc {

/// Variable configuration for the truncated two-block polynomial model:
/// x_1..x_d and y_1..y_k, with products truncated above total degree degcap.
/// Requires d >= degcap so that, up to the cap, the x block behaves like
/// infinitely many variables: no x-monomial basis element of degree <= degcap
/// collapses for lack of variables.
struct VarConfig {
    int d;
    int k;
    int degcap;

    VarConfig(int d_, int k_, int degcap_);
    bool operator==(const VarConfig&) const = default;
};

/// One orbit-sum basis element m_x(x block) * m_y(y block); both components
/// are partitions (weakly decreasing positive entries), ell(x) <= d,
/// ell(y) <= k, |x| + |y| <= degcap.
struct OrbitKey {
    std::vector<int> x;
    std::vector<int> y;
    auto operator<=>(const OrbitKey&) const = default;
};

/// Exact polynomial that is symmetric separately in the x and the y block,
/// stored as coordinates in the basis of products of monomial symmetric
/// polynomials.  Symmetry is a representation invariant: only symmetric
/// expressions can be produced by the public constructors and arithmetic, so
/// it is never re-checked at runtime.
class MPoly {
  public:
    explicit MPoly(const VarConfig& cfg) : cfg_(cfg) {}

    static MPoly zero(const VarConfig& cfg) { return MPoly(cfg); }
    static MPoly one(const VarConfig& cfg);

    const VarConfig& cfg() const { return cfg_; }
    const std::map<OrbitKey, Rat>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    /// Adds c * m_a(x) m_b(y).  a and b may be unsorted but must be
    /// entrywise >= 0; the term is dropped silently when the sorted key
    /// exceeds the variable counts or the degree cap (that is what the
    /// truncated model means by "equals zero").
    void add(std::vector<int> a, std::vector<int> b, const Rat& c);

    Rat coefficient(const OrbitKey& key) const;

    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const Rat& c);
    friend MPoly operator+(MPoly l, const MPoly& r) { return l += r; }
    friend MPoly operator-(MPoly l, const MPoly& r) { return l -= r; }
    friend MPoly operator*(const MPoly& l, const MPoly& r);
    friend MPoly operator*(const Rat& c, MPoly p) {
        p *= c;
        return p;
    }
    bool operator==(const MPoly& o) const { return cfg_ == o.cfg_ && terms_ == o.terms_; }

    bool integer_coefficients() const;

    /// Largest total degree of a stored term, -1 for the zero polynomial.
    int degree() const;
    /// Restriction to the terms of total degree == deg.
    MPoly homogeneous_part(int deg) const;
    /// Sets every y variable to zero (drops terms with a nonempty y part).
    MPoly y_zero() const;

    std::string text() const;

  private:
    VarConfig cfg_;
    std::map<OrbitKey, Rat> terms_;
};

}  // namespace ogcalc

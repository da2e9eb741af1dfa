#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "ogcalc/rational.hpp"

namespace ogcalc {

/// Monomial in an indexed generator family g_1, g_2, ... together with a power
/// of the primed degree-k generator (tkp).  Two alphabets share this shape: the
/// Chern form (g_p = c_p, tkp <= 1) and the tau form (g_p = tau_p, tkp free).
struct SpecialMonomial {
    std::vector<int> g;  ///< subscripts, weakly decreasing, all >= 1
    int tkp = 0;         ///< exponent of the primed generator

    auto operator<=>(const SpecialMonomial&) const = default;

    /// Total degree, counting the primed generator with weight k.
    int degree(int k) const;
};

/// Makes a monomial from an unsorted subscript list, dropping zeros.
SpecialMonomial make_monomial(std::vector<int> subscripts, int tkp = 0);

class SpecialPoly {
  public:
    enum class Alphabet { c, tau };

    SpecialPoly() = default;
    explicit SpecialPoly(Alphabet a) : alphabet_(a) {}

    static SpecialPoly zero(Alphabet a) { return SpecialPoly(a); }
    static SpecialPoly one(Alphabet a);
    static SpecialPoly term(Alphabet a, SpecialMonomial m, Rat coef);

    void add(const SpecialMonomial& m, const Rat& coef);

    SpecialPoly& operator+=(const SpecialPoly& o);
    SpecialPoly& operator-=(const SpecialPoly& o);
    SpecialPoly& operator*=(const Rat& s);
    SpecialPoly operator*(const SpecialPoly& o) const;
    friend SpecialPoly operator+(SpecialPoly a, const SpecialPoly& b) { return a += b; }
    friend SpecialPoly operator-(SpecialPoly a, const SpecialPoly& b) { return a -= b; }
    friend SpecialPoly operator*(SpecialPoly a, const Rat& s) { return a *= s; }

    bool operator==(const SpecialPoly&) const = default;

    const std::map<SpecialMonomial, Rat>& terms() const { return terms_; }
    Alphabet alphabet() const { return alphabet_; }
    bool is_zero() const { return terms_.empty(); }
    bool integer_coefficients() const;

    /// Coefficient of a monomial (zero if absent).
    Rat coefficient(const SpecialMonomial& m) const;

    /// Plain rendering, e.g. "c₃c₂τ′₂" terms joined
    /// with signs; k only selects the symbol for the primed generator.
    std::string text(int k) const;

  private:
    Alphabet alphabet_ = Alphabet::c;
    std::map<SpecialMonomial, Rat> terms_;
};

/// Chern-to-tau substitution: c_p -> tau_p for p < k, tau_k + tau'_k for
/// p == k, 2 tau_p for p > k; existing primed powers carry through.
SpecialPoly to_tau_form(const SpecialPoly& cform, int k);

/// Unicode subscript digits, e.g. 12 -> "₁₂".
std::string subscript(int n);

}  // namespace ogcalc

#pragma once

#include <map>
#include <vector>

#include "ogcalc/mpoly.hpp"

namespace ogcalc {

/// Named generating families over the two-block model.
enum class Family {
    e_x,  ///< elementary symmetric e_r(x)
    e_y,  ///< elementary symmetric e_r(y)
    q,    ///< q_r(x): coefficients of prod_i (1+x_i t)/(1-x_i t)
    s,    ///< Schur: family(s, la) is s_{la'}(x), the CONJUGATE shape
    P,    ///< Schur P polynomial, strict index
    Q     ///< Schur Q polynomial, strict index
};

/// Single-index families e_x, e_y, q; r < 0 gives 0 and r == 0 gives 1.
MPoly family(Family f, int r, const VarConfig& cfg);

/// Multi-index families.  s applies prod_{i<j}(1 - R_ij) to e_la, which
/// produces the Schur polynomial of the conjugate shape s_{la'}(x); P and Q
/// apply prod(1-R_ij)/prod(1+R_ij) to q_la and require a strict partition
/// (P additionally scales by 2^{-ell(la)}).  e_x, e_y, q accept any
/// subscript vector and mean the product of the single-index values.
MPoly family(Family f, const std::vector<int>& la, const VarConfig& cfg);

/// Products q_{a_1} q_{a_2} ... over the subscript vector, and likewise for
/// the other generating families.  Subscript order is immaterial; zeros
/// contribute a factor 1, a negative subscript makes the product 0.
/// Memoized on the sorted subscripts, so repeated raising-operator
/// expansions share work.
MPoly q_monomial(std::vector<int> sub, const VarConfig& cfg);
MPoly theta_monomial(std::vector<int> sub, const VarConfig& cfg);
MPoly e_x_monomial(std::vector<int> sub, const VarConfig& cfg);
MPoly e_y_monomial(std::vector<int> sub, const VarConfig& cfg);

/// theta_r(x;y) = sum_{i>=0} q_{r-i}(x) e_i(y).
MPoly theta_poly(int r, const VarConfig& cfg);

/// eta_r(x;y): e_r(y) + 2 sum_{i<r} P_{r-i}(x) e_i(y) when r < k, and
/// sum_{i<=r} P_{r-i}(x) e_i(y) when r >= k.  eta_prime is the complementary
/// half of the middle generator: eta'_k = sum_{i<k} P_{k-i}(x) e_i(y), so
/// eta_k - eta'_k = e_k(y) and eta_k + eta'_k = theta_k.
MPoly eta_generator(int r, const VarConfig& cfg);
MPoly eta_prime(const VarConfig& cfg);

/// s_{nu'}(y_1..y_k): Schur polynomial of the conjugate of nu in the y block
/// (zero when nu_1 > k).
MPoly schur_conj_y(const std::vector<int>& nu, const VarConfig& cfg);

/// e_r(y^2) = m_{(2^r)}(y), the elementary symmetric polynomial in the
/// squared y variables; zero for r > k.
MPoly e_y_squares(int r, const VarConfig& cfg);

/// A coordinate pair in the P_mu(x) s_{nu'}(y) basis: mu strict, nu_1 <= k.
struct PSKey {
    std::vector<int> mu;
    std::vector<int> nu;
    auto operator<=>(const PSKey&) const = default;
};

/// Expands f over the products P_mu(x) s_{nu'}(y).  Works by graded
/// lexicographic elimination: the leading orbit key of P_mu s_{nu'} is
/// (mu, nu') with coefficient 1, so pivots are read off the top term.
/// Throws std::domain_error when a pivot fails to be a strict partition,
/// which certifies that f lies outside the span.
std::map<PSKey, Rat> expand_P_s_basis(const MPoly& f);

}  // namespace ogcalc

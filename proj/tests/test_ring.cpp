#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>
#include <tuple>
#include <vector>

#include "doctest.h"
#include "ogcalc/ring.hpp"

using namespace ogcalc;

namespace {

KStrictPartition kp(std::vector<int> parts, int k) { return KStrictPartition(std::move(parts), k); }

// (parts, type, d1, d2) -> coefficient
using TKey = std::tuple<std::vector<int>, int, int, int>;

std::map<TKey, Rat> tmap(const SchubertExpr& e) {
    std::map<TKey, Rat> m;
    for (const auto& [key, c] : e.terms) m[{key.shape.parts(), key.type, key.q.d1, key.q.d2}] = c;
    return m;
}

// (parts, d1, d2) -> coefficient, one map per coordinate
using SKey = std::tuple<std::vector<int>, int, int>;

std::map<SKey, Rat> hat_map(const SplitExpr& s) {
    std::map<SKey, Rat> m;
    for (const auto& [key, c] : s.hat) m[{key.first.parts(), key.second.d1, key.second.d2}] = c;
    return m;
}

std::map<SKey, Rat> tilde_map(const SplitExpr& s) {
    std::map<SKey, Rat> m;
    for (const auto& [key, c] : s.tilde) m[{key.first.parts(), key.second.d1, key.second.d2}] = c;
    return m;
}

SplitExpr chern_on(const SchubertExpr& e, int p) {
    return apply_generator(to_split(e), Generator::chern(p));
}

void check_commutes(const std::vector<SchubertExpr>& cls) {
    for (size_t i = 0; i < cls.size(); ++i)
        for (size_t j = i + 1; j < cls.size(); ++j)
            CHECK(multiply(cls[i], cls[j]) == multiply(cls[j], cls[i]));
}

void check_associates(const std::vector<SchubertExpr>& cls, size_t stride) {
    size_t idx = 0;
    for (size_t i = 0; i < cls.size(); ++i)
        for (size_t j = i; j < cls.size(); ++j)
            for (size_t l = j; l < cls.size(); ++l) {
                if (idx++ % stride) continue;
                CHECK(multiply(multiply(cls[i], cls[j]), cls[l]) ==
                      multiply(cls[i], multiply(cls[j], cls[l])));
            }
}

std::vector<SchubertExpr> all_classes(const RingSpec& ring, const GrassParams& P) {
    std::vector<SchubertExpr> out;
    if (P.even)
        for (const auto& la : enumerate_typed(P)) out.push_back(basis_expr(ring, la.shape, la.type));
    else
        for (const auto& la : enumerate_k_strict(P.k, P.m, P.max_part()))
            out.push_back(basis_expr(ring, la));
    return out;
}

}  // namespace

TEST_CASE("ring spec parameters") {
    auto S = RingSpec::stable_ring(2);
    CHECK(S.K() == 4);
    CHECK(S.even());
    auto C = RingSpec::classical_ring(GrassParams::odd_kn(2, 5));
    CHECK(C.K() == 5);
    CHECK_FALSE(C.even());
    auto Q = RingSpec::quantum_ring(GrassParams::even_kn(1, 2));
    CHECK(Q.K() == 2);
    CHECK(Q.even());
    CHECK(S != C);
    CHECK(RingSpec::stable_ring(2) == S);
}

TEST_CASE("basis label validation") {
    auto R = RingSpec::classical_ring(GrassParams::even_kn(2, 3));
    CHECK_THROWS_AS(basis_expr(R, kp({1}, 1)), std::domain_error);          // wrong k
    CHECK_THROWS_AS(basis_expr(R, kp({6}, 2)), std::domain_error);          // too wide
    CHECK_THROWS_AS(basis_expr(R, kp({1, 1, 1}, 2)), std::domain_error);    // too deep
    CHECK_THROWS_AS(basis_expr(R, kp({2}, 2), 0), std::domain_error);       // needs a type
    CHECK_THROWS_AS(basis_expr(R, kp({3}, 2), 1), std::domain_error);       // must be untyped
    CHECK_THROWS_AS(basis_expr(R, kp({1}, 2), 0, {1, 0}), std::domain_error);  // q outside quantum
    auto Q = RingSpec::quantum_ring(GrassParams::even_kn(2, 2));
    CHECK_THROWS_AS(basis_expr(Q, kp({1}, 2), 0, {0, 1}), std::domain_error);  // d2 needs K = 2
    auto O = RingSpec::classical_ring(GrassParams::odd_kn(2, 5));
    CHECK_THROWS_AS(basis_expr(O, kp({2}, 2), 1), std::domain_error);  // odd classes untyped
    CHECK(basis_expr(Q, kp({2}, 2), 2, {1, 0}).terms.size() == 1);
}

TEST_CASE("split coordinates") {
    auto S = RingSpec::stable_ring(2);
    auto split1 = to_split(basis_expr(S, kp({2}, 2), 1));
    CHECK(hat_map(split1) == std::map<SKey, Rat>{{{{2}, 0, 0}, Rat(1, 2)}});
    CHECK(tilde_map(split1) == std::map<SKey, Rat>{{{{2}, 0, 0}, Rat(1, 2)}});
    auto split2 = to_split(basis_expr(S, kp({2}, 2), 2));
    CHECK(tilde_map(split2) == std::map<SKey, Rat>{{{{2}, 0, 0}, Rat(-1, 2)}});

    // round trip on a mixed expression
    SchubertExpr e = basis_expr(S, kp({2}, 2), 1);
    e += basis_expr(S, kp({3, 2}, 2), 2);
    e += basis_expr(S, kp({3, 1}, 2));
    e *= Rat(3, 4);
    e -= basis_expr(S, kp({2}, 2), 2);
    CHECK(from_split(to_split(e)) == e);

    auto O = RingSpec::classical_ring(GrassParams::odd_kn(1, 3));
    auto oe = basis_expr(O, kp({2, 1}, 1));
    CHECK(to_split(oe).tilde.empty());
    CHECK(from_split(to_split(oe)) == oe);

    // tilde mass over a shape with no part k cannot be assembled into types
    SplitExpr bad{S, {}, {}};
    bad.add_tilde(kp({3}, 2), {}, 1);
    CHECK_THROWS_AS(from_split(bad), std::domain_error);
}

TEST_CASE("special classes on the unit") {
    auto S = RingSpec::stable_ring(2);
    auto unit = unit_expr(S);
    // hat coefficient 1 through column k, 2 beyond
    for (int p = 1; p <= 4; ++p) {
        auto out = chern_on(unit, p);
        CHECK(hat_map(out) ==
              std::map<SKey, Rat>{{{{p}, 0, 0}, Rat(p <= 2 ? 1 : 2)}});
        CHECK(out.tilde.empty());
    }
    // the degree-k special class splits as the sum of the two middle classes
    CHECK(tmap(from_split(chern_on(unit, 2))) ==
          std::map<TKey, Rat>{{{{2}, 1, 0, 0}, 1}, {{{2}, 2, 0, 0}, 1}});

    auto tt = apply_generator(to_split(unit), Generator::tau_tilde());
    CHECK(tt.hat.empty());
    CHECK(tilde_map(tt) == std::map<SKey, Rat>{{{{2}, 0, 0}, 1}});
    CHECK(tmap(from_split(tt)) ==
          std::map<TKey, Rat>{{{{2}, 1, 0, 0}, 1}, {{{2}, 2, 0, 0}, -1}});

    auto tp = apply_generator(to_split(unit), Generator::tau_prime());
    CHECK(tmap(from_split(tp)) == std::map<TKey, Rat>{{{{2}, 2, 0, 0}, 1}});

    auto O = RingSpec::classical_ring(GrassParams::odd_kn(2, 5));
    CHECK_THROWS_AS(apply_generator(to_split(unit_expr(O)), Generator::tau_tilde()),
                    std::domain_error);
}

TEST_CASE("difference generator squared") {
    // k = 1: square lands on the hat classes as [1,1] - 2[2]
    auto S1 = RingSpec::stable_ring(1);
    auto sq1 = apply_generator(apply_generator(to_split(unit_expr(S1)), Generator::tau_tilde()),
                               Generator::tau_tilde());
    CHECK(sq1.tilde.empty());
    CHECK(hat_map(sq1) == std::map<SKey, Rat>{{{{1, 1}, 0, 0}, 1}, {{{2}, 0, 0}, -2}});

    // k = 2: [2,2] - 2[3,1] + 2[4]
    auto S2 = RingSpec::stable_ring(2);
    auto sq2 = apply_generator(apply_generator(to_split(unit_expr(S2)), Generator::tau_tilde()),
                               Generator::tau_tilde());
    CHECK(hat_map(sq2) == std::map<SKey, Rat>{
                              {{{2, 2}, 0, 0}, 1}, {{{3, 1}, 0, 0}, -2}, {{{4}, 0, 0}, 2}});

    // deformation corrections appear in the bounded rings
    auto Q4 = RingSpec::quantum_ring(GrassParams::even_kn(2, 2));
    auto sqq = apply_generator(apply_generator(to_split(unit_expr(Q4)), Generator::tau_tilde()),
                               Generator::tau_tilde());
    CHECK(hat_map(sqq) == std::map<SKey, Rat>{{{{4}, 0, 0}, 2}, {{{}, 1, 0}, -2}});

    auto Q2 = RingSpec::quantum_ring(GrassParams::even_kn(1, 1));
    auto sq2p = apply_generator(apply_generator(to_split(unit_expr(Q2)), Generator::tau_tilde()),
                                Generator::tau_tilde());
    CHECK(hat_map(sq2p) == std::map<SKey, Rat>{
                               {{{2}, 0, 0}, -2}, {{{}, 1, 0}, 1}, {{{}, 0, 1}, 1}});
}

TEST_CASE("split path agrees with the typed rule") {
    auto P = GrassParams::even_kn(2, 3);
    auto R = RingSpec::classical_ring(P);
    for (const auto& la : enumerate_typed(P)) {
        auto x = basis_expr(R, la.shape, la.type);
        for (int p = 1; p <= 4; ++p) {
            SchubertExpr expected = zero_expr(R);
            for (const auto& st : chern_pieri_typed(la, p, &P))
                expected.add({st.cls.shape, st.cls.type, {}}, pow2(st.exp2));
            CHECK(from_split(chern_on(x, p)) == expected);
            // degree-one multiplication goes through the same rule
            if (p == 1) CHECK(multiply(basis_expr(R, kp({1}, 2)), x) == expected);
        }
    }
}

TEST_CASE("unit laws") {
    auto Q4 = RingSpec::quantum_ring(GrassParams::even_kn(2, 2));
    auto one = unit_expr(Q4);
    for (const auto& la : enumerate_typed(*Q4.box)) {
        auto x = basis_expr(Q4, la.shape, la.type);
        CHECK(multiply(one, x) == x);
        CHECK(multiply(x, one) == x);  // evaluates the whole generator polynomial
    }
    auto shifted = basis_expr(Q4, kp({3}, 2), 0, {2, 0});
    CHECK(multiply(one, shifted) == shifted);
    CHECK(multiply(shifted, one) == shifted);
}

TEST_CASE("products in the stable rings") {
    auto S1 = RingSpec::stable_ring(1);
    CHECK(tmap(multiply(basis_expr(S1, kp({1}, 1), 1), basis_expr(S1, kp({1}, 1), 2))) ==
          std::map<TKey, Rat>{{{{2}, 0, 0, 0}, 1}});

    auto S2 = RingSpec::stable_ring(2);
    auto t2 = basis_expr(S2, kp({2}, 2), 1);
    auto t2p = basis_expr(S2, kp({2}, 2), 2);
    auto t3 = basis_expr(S2, kp({3}, 2));
    auto t1 = basis_expr(S2, kp({1}, 2));
    CHECK(tmap(multiply(t2, t2p)) == std::map<TKey, Rat>{{{{3, 1}, 0, 0, 0}, 1}});
    CHECK(tmap(multiply(t3, t1)) ==
          std::map<TKey, Rat>{{{{3, 1}, 0, 0, 0}, 1}, {{{4}, 0, 0, 0}, 1}});
    // the middle-class product rewrites over untyped classes
    auto lhs = multiply(t2, t2p);
    auto rhs = multiply(t3, t1);
    rhs -= basis_expr(S2, kp({4}, 2));
    CHECK(lhs == rhs);
}

TEST_CASE("quantum products on the four-dimensional quadric") {
    auto P = GrassParams::even_kn(2, 2);
    auto R = RingSpec::quantum_ring(P);
    auto t1 = basis_expr(R, kp({1}, 2));
    auto t2 = basis_expr(R, kp({2}, 2), 1);
    auto t2p = basis_expr(R, kp({2}, 2), 2);
    auto t3 = basis_expr(R, kp({3}, 2));

    CHECK(tmap(multiply(t2, t2)) == std::map<TKey, Rat>{{{{4}, 0, 0, 0}, 1}});
    CHECK(tmap(multiply(t2p, t2p)) == std::map<TKey, Rat>{{{{4}, 0, 0, 0}, 1}});
    CHECK(tmap(multiply(t2, t2p)) == std::map<TKey, Rat>{{{{}, 0, 1, 0}, 1}});
    CHECK(tmap(multiply(t1, t1)) ==
          std::map<TKey, Rat>{{{{2}, 1, 0, 0}, 1}, {{{2}, 2, 0, 0}, 1}});
    CHECK(tmap(multiply(t1, t2)) == std::map<TKey, Rat>{{{{3}, 0, 0, 0}, 1}});
    CHECK(tmap(multiply(t3, t2)) == std::map<TKey, Rat>{{{{1}, 0, 1, 0}, 1}});
    CHECK(tmap(multiply(t3, t3)) ==
          std::map<TKey, Rat>{{{{2}, 1, 1, 0}, 1}, {{{2}, 2, 1, 0}, 1}});

    // a deformation factor on the left passes through the product
    auto t2q = basis_expr(R, kp({2}, 2), 1, {1, 0});
    CHECK(tmap(multiply(t2q, t2p)) == std::map<TKey, Rat>{{{{}, 0, 2, 0}, 1}});

    // special-class actions
    auto hat2 = basis_expr(R, kp({2}, 2), 1);
    hat2 += basis_expr(R, kp({2}, 2), 2);
    CHECK(hat_map(chern_on(hat2, 2)) ==
          std::map<SKey, Rat>{{{{4}, 0, 0}, 2}, {{{}, 1, 0}, 2}});
    CHECK(hat_map(chern_on(unit_expr(R), 4)) == std::map<SKey, Rat>{{{{4}, 0, 0}, 2}});
    CHECK(hat_map(chern_on(hat2, 4)) == std::map<SKey, Rat>{{{{2}, 1, 0}, 2}});
    auto tilde2 = basis_expr(R, kp({2}, 2), 1);
    tilde2 -= basis_expr(R, kp({2}, 2), 2);
    auto z = chern_on(tilde2, 2);
    CHECK(z.hat.empty());
    CHECK(z.tilde.empty());
    CHECK(tilde_map(chern_on(tilde2, 4)) == std::map<SKey, Rat>{{{{2}, 1, 0}, -2}});
}

TEST_CASE("quantum products with two deformation parameters") {
    // minimal space: products of the two middle classes separate q1 from q2
    auto P = GrassParams::even_kn(1, 1);
    auto R = RingSpec::quantum_ring(P);
    auto u = basis_expr(R, kp({1}, 1), 1);
    auto up = basis_expr(R, kp({1}, 1), 2);
    CHECK(tmap(multiply(u, u)) == std::map<TKey, Rat>{{{{}, 0, 1, 0}, 1}});
    CHECK(tmap(multiply(up, up)) == std::map<TKey, Rat>{{{{}, 0, 0, 1}, 1}});
    CHECK(tmap(multiply(u, up)) == std::map<TKey, Rat>{{{{2}, 0, 0, 0}, 1}});

    // one space up: the distinguished degree-one actions
    auto P2 = GrassParams::even_kn(1, 2);
    auto R2 = RingSpec::quantum_ring(P2);
    auto hat11 = basis_expr(R2, kp({1, 1}, 1), 1);
    hat11 += basis_expr(R2, kp({1, 1}, 1), 2);
    CHECK(hat_map(chern_on(hat11, 1)) ==
          std::map<SKey, Rat>{{{{3}, 0, 0}, 2}, {{{2, 1}, 0, 0}, 2}, {{{}, 1, 0}, 1},
                              {{{}, 0, 1}, 1}});
    auto tilde11 = basis_expr(R2, kp({1, 1}, 1), 1);
    tilde11 -= basis_expr(R2, kp({1, 1}, 1), 2);
    auto act = chern_on(tilde11, 1);
    CHECK(hat_map(act) == std::map<SKey, Rat>{{{{}, 1, 0}, 1}, {{{}, 0, 1}, -1}});
    CHECK(tilde_map(act) == std::map<SKey, Rat>{{{{2, 1}, 0, 0}, 2}});
}

TEST_CASE("quantum products, odd parity") {
    // three-dimensional quadric; the degree-one power series pins h^4 = 4hq
    auto P = GrassParams::odd_kn(1, 2);
    auto R = RingSpec::quantum_ring(P);
    auto s1 = basis_expr(R, kp({1}, 1));
    auto s2 = basis_expr(R, kp({2}, 1));
    auto s3 = basis_expr(R, kp({3}, 1));
    CHECK(tmap(multiply(s1, s1)) == std::map<TKey, Rat>{{{{2}, 0, 0, 0}, 2}});
    CHECK(tmap(multiply(s1, s2)) ==
          std::map<TKey, Rat>{{{{3}, 0, 0, 0}, 1}, {{{}, 0, 1, 0}, 1}});
    CHECK(tmap(multiply(s1, s3)) == std::map<TKey, Rat>{{{{1}, 0, 1, 0}, 1}});
    CHECK(tmap(multiply(s2, s2)) == std::map<TKey, Rat>{{{{1}, 0, 1, 0}, 1}});
    CHECK(tmap(multiply(s2, s3)) == std::map<TKey, Rat>{{{{2}, 0, 1, 0}, 1}});
    CHECK(tmap(multiply(s3, s3)) == std::map<TKey, Rat>{{{{}, 0, 2, 0}, 1}});
}

TEST_CASE("commutativity") {
    auto Q4 = RingSpec::quantum_ring(GrassParams::even_kn(2, 2));
    check_commutes(all_classes(Q4, *Q4.box));
    auto Q2 = RingSpec::quantum_ring(GrassParams::even_kn(1, 2));
    check_commutes(all_classes(Q2, *Q2.box));
    auto O = RingSpec::quantum_ring(GrassParams::odd_kn(1, 2));
    check_commutes(all_classes(O, *O.box));
}

TEST_CASE("associativity") {
    auto Q4 = RingSpec::quantum_ring(GrassParams::even_kn(2, 2));
    check_associates(all_classes(Q4, *Q4.box), 1);
    auto Q1 = RingSpec::quantum_ring(GrassParams::even_kn(1, 1));
    check_associates(all_classes(Q1, *Q1.box), 1);
    auto Q2 = RingSpec::quantum_ring(GrassParams::even_kn(1, 2));
    check_associates(all_classes(Q2, *Q2.box), 7);
    auto O = RingSpec::quantum_ring(GrassParams::odd_kn(1, 2));
    check_associates(all_classes(O, *O.box), 1);
    auto C = RingSpec::classical_ring(GrassParams::even_kn(2, 3));
    check_associates(all_classes(C, *C.box), 61);

    std::vector<SchubertExpr> stable;
    auto S2 = RingSpec::stable_ring(2);
    for (int w = 0; w <= 4; ++w)
        for (const auto& la : enumerate_typed_weight(2, w))
            stable.push_back(basis_expr(S2, la.shape, la.type));
    check_associates(stable, 13);
}

TEST_CASE("structure constants") {
    auto S2 = RingSpec::stable_ring(2);
    // the unit row is a delta
    CHECK(structure_constants(TypedPartition({}, 2, 0), TypedPartition({2, 1}, 2, 2), S2) ==
          std::map<TermKey, Rat>{{{kp({2, 1}, 2), 2, {}}, 1}});
    // symmetry and integrality across a weight sweep
    std::vector<TypedPartition> cls;
    for (int w = 1; w <= 4; ++w)
        for (const auto& la : enumerate_typed_weight(2, w)) cls.push_back(la);
    for (size_t i = 0; i < cls.size(); ++i)
        for (size_t j = i; j < cls.size(); ++j)
            CHECK(structure_constants(cls[i], cls[j], S2) ==
                  structure_constants(cls[j], cls[i], S2));

    // deformation structure constants stay integral
    for (auto P : {GrassParams::even_kn(2, 2), GrassParams::even_kn(1, 1),
                   GrassParams::even_kn(1, 2)}) {
        auto R = RingSpec::quantum_ring(P);
        auto typed = enumerate_typed(P);
        for (size_t i = 0; i < typed.size(); ++i)
            for (size_t j = i; j < typed.size(); ++j)
                CHECK(structure_constants(typed[i], typed[j], R) ==
                      structure_constants(typed[j], typed[i], R));
    }
}

TEST_CASE("generator polynomials close in the deformed rings") {
    for (auto P : {GrassParams::even_kn(2, 2), GrassParams::even_kn(1, 1),
                   GrassParams::even_kn(1, 2)}) {
        for (const auto& la : enumerate_typed(P)) {
            auto check = verify_quantum_giambelli(la, P);
            CHECK(check.equal);
        }
    }
}

TEST_CASE("first-row recursion") {
    using Key = std::pair<int, KStrictPartition>;
    // single rows: coefficient 1 through column k, 1/2 beyond
    CHECK(recursion_coefficients(kp({2}, 2)) == std::map<Key, Rat>{{{2, kp({}, 2)}, 1}});
    CHECK(recursion_coefficients(kp({4}, 2)) ==
          std::map<Key, Rat>{{{4, kp({}, 2)}, Rat(1, 2)}});
    CHECK(recursion_coefficients(kp({2, 1}, 1)) ==
          std::map<Key, Rat>{{{2, kp({1}, 1)}, Rat(1, 2)}, {{3, kp({}, 1)}, -1}});
    CHECK(recursion_coefficients(kp({3, 1}, 2)) ==
          std::map<Key, Rat>{{{3, kp({1}, 2)}, Rat(1, 2)}, {{4, kp({}, 2)}, Rat(-1, 2)}});

    // solvability, support inside the tail rows, and reassembly
    for (int k = 1; k <= 2; ++k) {
        auto S = RingSpec::stable_ring(k);
        for (int w = 1; w <= 6; ++w)
            for (const auto& la : enumerate_k_strict_weight(k, w)) {
                auto coeffs = recursion_coefficients(la);
                SplitExpr sum{S, {}, {}};
                for (const auto& [key, c] : coeffs) {
                    CHECK(key.first >= la.part(1));
                    for (int i = 1; i <= key.second.length(); ++i)
                        CHECK(key.second.part(i) <= la.part(i + 1));
                    SplitExpr base{S, {}, {}};
                    base.add_hat(key.second, {}, c);
                    sum.add_scaled(apply_generator(base, Generator::chern(key.first)), 1);
                }
                SplitExpr target{S, {}, {}};
                target.add_hat(la, {}, 1);
                CHECK(sum == target);
            }
    }

    // rectangle-compatible shapes keep their degrees below the presentation bound
    auto P = GrassParams::even_kn(2, 3);
    for (const auto& la : enumerate_typed(P))
        if (!la.shape.empty())
            CHECK_NOTHROW(recursion_coefficients(la.shape, &P));
}

TEST_CASE("type involution") {
    auto Q4 = RingSpec::quantum_ring(GrassParams::even_kn(2, 2));
    auto t2 = basis_expr(Q4, kp({2}, 2), 1);
    CHECK(iota(t2) == basis_expr(Q4, kp({2}, 2), 2));
    CHECK(iota(iota(t2)) == t2);
    auto cls = all_classes(Q4, *Q4.box);
    for (size_t i = 0; i < cls.size(); ++i)
        for (size_t j = i; j < cls.size(); ++j)
            CHECK(iota(multiply(cls[i], cls[j])) == multiply(iota(cls[i]), iota(cls[j])));

    auto C = RingSpec::classical_ring(GrassParams::even_kn(1, 2));
    auto ccls = all_classes(C, *C.box);
    for (size_t i = 0; i < ccls.size(); ++i)
        for (size_t j = i; j < ccls.size(); ++j)
            CHECK(iota(multiply(ccls[i], ccls[j])) == multiply(iota(ccls[i]), iota(ccls[j])));
}

TEST_CASE("grading") {
    auto Q4 = RingSpec::quantum_ring(GrassParams::even_kn(2, 2));
    CHECK(term_degree(Q4, {kp({3}, 2), 0, {1, 0}}) == 7);  // deformation weighs n+k = 4
    auto Q2 = RingSpec::quantum_ring(GrassParams::even_kn(1, 2));
    CHECK(term_degree(Q2, {kp({2}, 1), 0, {1, 1}}) == 8);  // each parameter weighs n+1 = 3

    auto cls = all_classes(Q4, *Q4.box);
    for (size_t i = 0; i < cls.size(); ++i)
        for (size_t j = i; j < cls.size(); ++j) {
            auto prod = multiply(cls[i], cls[j]);
            CHECK(integer_coefficients(prod));
            if (prod.is_zero()) continue;
            auto d = homogeneous_degree(prod);
            REQUIRE(d.has_value());
            CHECK(*d == *homogeneous_degree(cls[i]) + *homogeneous_degree(cls[j]));
        }

    SchubertExpr mixed = basis_expr(Q4, kp({1}, 2));
    mixed += basis_expr(Q4, kp({3}, 2));
    CHECK_FALSE(homogeneous_degree(mixed).has_value());
    CHECK(homogeneous_degree(zero_expr(Q4)) == 0);
    SchubertExpr half = zero_expr(Q4);
    half.add({kp({}, 2), 0, {}}, Rat(1, 2));
    CHECK_FALSE(integer_coefficients(half));
}

TEST_CASE("parity transfer") {
    // the unit maps to the difference class over a single part k
    auto Ro = RingSpec::classical_ring(GrassParams::odd_kn(1, 2));
    auto psi1 = odd_to_even_transfer(unit_expr(Ro));
    CHECK(psi1.hat.empty());
    CHECK(tilde_map(psi1) == std::map<SKey, Rat>{{{{1}, 0, 0}, 1}});

    // module property over the special classes, classical parity pair (1,2)
    for (const auto& la : enumerate_k_strict(1, 1, 3))
        for (int p = 1; p <= 3; ++p) {
            auto sig = basis_expr(Ro, la);
            CHECK(odd_to_even_transfer(from_split(chern_on(sig, p))) ==
                  apply_generator(odd_to_even_transfer(sig), Generator::chern(p)));
        }

    // and the quantum pair (2,3), where the deformation carries a sign
    auto RoQ = RingSpec::quantum_ring(GrassParams::odd_kn(2, 3));
    for (const auto& la : enumerate_k_strict(2, 1, 5))
        for (int p = 1; p <= 5; ++p) {
            auto sig = basis_expr(RoQ, la);
            CHECK(odd_to_even_transfer(from_split(chern_on(sig, p))) ==
                  apply_generator(odd_to_even_transfer(sig), Generator::chern(p)));
        }
    auto signed_term = odd_to_even_transfer(basis_expr(RoQ, kp({1}, 2), 0, {1, 0}));
    CHECK(tilde_map(signed_term) == std::map<SKey, Rat>{{{{2, 1}, 1, 0}, -1}});

    // the quantum pair (1,2) lands in the two-parameter ring, where the
    // module property only holds after identifying the two parameters
    auto RoQ2 = RingSpec::quantum_ring(GrassParams::odd_kn(1, 2));
    bool raw_differs = false;
    for (const auto& la : enumerate_k_strict(1, 1, 3))
        for (int p = 1; p <= 3; ++p) {
            auto sig = basis_expr(RoQ2, la);
            auto lhs = odd_to_even_transfer(from_split(chern_on(sig, p)));
            auto rhs = apply_generator(odd_to_even_transfer(sig), Generator::chern(p));
            CHECK(identify_deformations(lhs) == identify_deformations(rhs));
            if (!(lhs == rhs)) raw_differs = true;
        }
    CHECK(raw_differs);  // q1 - q2 terms survive before the identification

    // identifying the parameters folds q2 onto q1 and merges coefficients
    SplitExpr mixed{RingSpec::quantum_ring(GrassParams::even_kn(1, 2)), {}, {}};
    mixed.add_hat(kp({2}, 1), {1, 0}, 1);
    mixed.add_hat(kp({2}, 1), {0, 1}, -1);
    mixed.add_tilde(kp({1}, 1), {1, 1}, 3);
    auto folded = identify_deformations(mixed);
    CHECK(folded.hat.empty());
    CHECK(tilde_map(folded) == std::map<SKey, Rat>{{{{1}, 2, 0}, 3}});

    // round trip and hat rejection
    SchubertExpr e = basis_expr(RoQ, kp({3}, 2), 0, {1, 0});
    e += basis_expr(RoQ, kp({5}, 2));
    e *= Rat(5, 3);
    CHECK(even_to_odd_transfer(odd_to_even_transfer(e)) == e);
    auto Re = RingSpec::classical_ring(GrassParams::even_kn(1, 2));
    SplitExpr with_hat{Re, {}, {}};
    with_hat.add_hat(kp({2}, 1), {}, 1);
    CHECK_THROWS_AS(even_to_odd_transfer(with_hat), std::domain_error);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "ogcalc/partition.hpp"

using namespace ogcalc;

TEST_CASE("grassmannian parameters") {
    auto even = GrassParams::even_kn(2, 5);  // OG(4,12)
    CHECK(even.N == 12);
    CHECK(even.m == 4);
    CHECK(even.K == 4);
    CHECK(even.k == 2);
    CHECK(even.n == 5);
    CHECK(even.even);
    CHECK(even.max_part() == 7);
    CHECK(even.n + even.k == even.N - even.m - 1);

    auto odd = GrassParams::odd_kn(2, 5);  // OG(3,11)
    CHECK(odd.N == 11);
    CHECK(odd.m == 3);
    CHECK(odd.K == 5);
    CHECK(odd.k == 2);
    CHECK(odd.n == 5);
    CHECK_FALSE(odd.even);

    CHECK(GrassParams::from_mN(4, 12) == even);
    CHECK_THROWS_AS(GrassParams::from_mN(5, 10), std::domain_error);  // K = 0
    CHECK_THROWS_AS(GrassParams::from_mN(0, 8), std::domain_error);
    CHECK_THROWS_AS(GrassParams::even_kn(0, 3), std::domain_error);  // even space needs k >= 1
    CHECK_THROWS_AS(GrassParams::odd_kn(3, 3), std::domain_error);   // odd space needs k < n
}

TEST_CASE("k-strict validation") {
    CHECK(KStrictPartition::valid({3, 2, 2}, 2));
    CHECK_FALSE(KStrictPartition::valid({3, 3, 1}, 2));  // 3 > k repeated
    CHECK(KStrictPartition::valid({5, 5, 2}, 5));
    CHECK_FALSE(KStrictPartition::valid({1, 2}, 2));  // not weakly decreasing
    CHECK_THROWS_AS(KStrictPartition({3, 3, 1}, 2), std::domain_error);

    KStrictPartition la({3, 2, 2, 0, 0}, 2);
    CHECK(la.length() == 3);  // trailing zeros trimmed
    CHECK(la.parts() == std::vector<int>{3, 2, 2});
    CHECK(la.part(1) == 3);
    CHECK(la.part(4) == 0);
    CHECK(la.weight() == 7);
    CHECK(la.has_part(2));
    CHECK_FALSE(la.has_part(1));
}

TEST_CASE("ell_k") {
    CHECK(KStrictPartition({3, 2, 2}, 2).ell_k() == 1);
    CHECK(KStrictPartition({}, 2).ell_k() == 0);
    CHECK(KStrictPartition({4, 3, 1}, 2).ell_k() == 2);
}

TEST_CASE("typed partitions") {
    CHECK_NOTHROW(TypedPartition({3, 2, 2}, 2, 1));
    CHECK_NOTHROW(TypedPartition({3, 2, 2}, 2, 2));
    CHECK_THROWS_AS(TypedPartition({3, 2, 2}, 2, 0), std::domain_error);  // part k forces type > 0
    CHECK_NOTHROW(TypedPartition({3, 1}, 2, 0));
    CHECK_THROWS_AS(TypedPartition({3, 1}, 2, 1), std::domain_error);
    CHECK(TypedPartition({3, 2, 2}, 2, 1).positive_type());
    CHECK_FALSE(TypedPartition({3, 1}, 2, 0).positive_type());
}

TEST_CASE("index functions") {
    auto P = GrassParams::even_kn(2, 5);  // OG(4,12), n=5, k=2

    // Empty shape: pbar_j = N - m + j.
    auto pb0 = index_bar(KStrictPartition({}, 2), P);
    CHECK(pb0 == std::vector<int>{9, 10, 11, 12});

    // lambda_j = k < lambda_{j-1} exactly when pbar_j = n+2.
    auto pbk = index_bar(KStrictPartition({2}, 2), P);
    CHECK(pbk[0] == P.n + 2);

    // Typed shift: p_1 = pbar_1 - 1 when n+1+type is even.
    auto p1 = index_typed(TypedPartition({2}, 2, 2), P);  // n+1+2 = 8 even
    CHECK(p1[0] == P.n + 1);
    auto p2 = index_typed(TypedPartition({2}, 2, 1), P);  // n+1+1 = 7 odd
    CHECK(p2[0] == P.n + 2);

    // pbar never takes the value n+1.
    for (auto& la : enumerate_k_strict(P.k, P.m, P.max_part()))
        for (int v : index_bar(la, P)) CHECK(v != P.n + 1);

    // The appendix example: lambda=(k), type 1, n even gives p_1 = n+1.
    auto Pev = GrassParams::even_kn(2, 4);  // n = 4
    auto p3 = index_typed(TypedPartition({2}, 2, 1), Pev);  // n+1+1 = 6 even
    CHECK(p3[0] == Pev.n + 1);
}

TEST_CASE("derived shapes") {
    // The split of (7,4,3,2) at column k=3.
    DerivedShapes d = derived_shapes(TypedPartition({7, 4, 3, 2}, 3, 2));
    CHECK(d.lambda1 == std::vector<int>{4, 1});
    CHECK(d.lambda2 == std::vector<int>{3, 3, 3, 2});
    CHECK(d.star == std::vector<int>{4, 3, 2});
    CHECK(d.plus_k == std::vector<int>{7, 4, 3, 3, 2});
    CHECK(d.minus_k.value() == std::vector<int>{7, 4, 2});

    // |lambda1| + |lambda2| = |lambda|.
    CHECK(4 + 1 + 3 + 3 + 3 + 2 == 16);

    DerivedShapes e = derived_shapes(TypedPartition({5, 2}, 2, 2));
    CHECK(e.star == std::vector<int>{2});
    CHECK(e.lambda1 == std::vector<int>{3});
    CHECK(e.lambda2 == std::vector<int>{2, 2});
    CHECK_FALSE(derived_shapes(TypedPartition({5, 1}, 2, 0)).minus_k.has_value());

    // Type 2 auxiliary shapes for (3,2,2), k=2: r_1 = 3.
    DerivedShapes f = derived_shapes(TypedPartition({3, 2, 2}, 2, 2));
    CHECK(f.lambda3.value() == std::vector<int>{3, 1});
    CHECK(f.lambda4.value() == std::vector<int>{1, 1, 1});
    CHECK_FALSE(derived_shapes(TypedPartition({3, 2, 2}, 2, 1)).lambda3.has_value());
}

TEST_CASE("marked diagonal lengths") {
    // Bottom boxes of columns 1..k mark diagonals of these lengths.
    CHECK(marked_diagonal_lengths(KStrictPartition({7, 4, 3, 2}, 3)) == std::vector<int>{2, 5, 6});
    CHECK(marked_diagonal_lengths(KStrictPartition({3, 2, 2}, 2)) == std::vector<int>{3, 4});
    // Smallest length is 0 exactly for shapes without a part k.
    CHECK(marked_diagonal_lengths(KStrictPartition({3, 1}, 2)).front() == 0);
    CHECK(marked_diagonal_lengths(KStrictPartition({}, 2)).front() == 0);
    CHECK(marked_diagonal_lengths(KStrictPartition({2}, 2)).front() > 0);
}

TEST_CASE("enumeration") {
    // k=1, n=1: rectangle 1x2 holds exactly {(), (1)^1, (1)^2, (2)}.
    auto all = enumerate_typed(GrassParams::even_kn(1, 1));
    CHECK(all.size() == 4);

    // k=2 rectangle 1x4: {(), (1), (2)^1, (2)^2, (3), (4)}.
    std::vector<TypedPartition> rect;
    for (auto& la : enumerate_k_strict(2, 1, 4))
        for (auto& t : typed_versions(la)) rect.push_back(t);
    CHECK(rect.size() == 6);

    // No duplicates, all valid (constructor would have thrown).
    auto big = enumerate_typed(GrassParams::even_kn(2, 3));
    std::set<TypedPartition> uniq(big.begin(), big.end());
    CHECK(uniq.size() == big.size());

    // Weight slices.
    auto w3 = enumerate_k_strict_weight(1, 3);
    // (3), (2,1), (1,1,1) are 1-strict; (2,1) has no repeat > 1.
    CHECK(w3.size() == 3);
    auto tw2 = enumerate_typed_weight(2, 2);
    // (2) has types 1,2; (1,1) has type 0.
    CHECK(tw2.size() == 3);
}

TEST_CASE("text round trip") {
    TypedPartition la({3, 2, 2}, 2, 1);
    CHECK(to_text(la) == "k=2:[3,2,2]:t1");
    CHECK(typed_from_text("k=2:[3,2,2]:t1") == la);
    CHECK(typed_from_text(to_text(TypedPartition({}, 3, 0))) == TypedPartition({}, 3, 0));
    CHECK(typed_from_text("k=10:[12,10]:t1") == TypedPartition({12, 10}, 10, 1));
    CHECK_THROWS_AS(typed_from_text("nonsense"), std::invalid_argument);
}

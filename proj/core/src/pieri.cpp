#include "ogcalc/pieri.hpp"

#include <algorithm>
#include <stdexcept>

namespace ogcalc {

bool k_related(int r, int c, int rp, int cp, int K, int k) {
    return c <= k && cp > k && c + cp == K + 1 + r - rp;
}

namespace {

int column_height(const std::vector<int>& parts, int c) {
    int h = 0;
    while (h < static_cast<int>(parts.size()) && parts[h] >= c) ++h;
    return h;
}

struct Box {
    int r, c;
};

}  // namespace

std::optional<int> strip_components(const KStrictPartition& la, const KStrictPartition& mu,
                                    int K) {
    const int k = la.k();
    if (mu.k() != k) throw std::invalid_argument("strictness bound mismatch");
    if (K != 2 * k && K != 2 * k + 1) throw std::invalid_argument("K must be 2k or 2k+1");

    const int rows = std::max(la.length(), mu.length());
    // Vertical strip off: at most one box per row, only from columns <= k.
    for (int i = 1; i <= rows; ++i) {
        int cut = la.part(i) - std::min(la.part(i), mu.part(i));
        if (cut > 1) return std::nullopt;
        if (cut == 1 && la.part(i) > k) return std::nullopt;
    }

    // Added boxes, row by row; horizontal strip needs distinct columns.
    std::vector<Box> added;
    for (int i = 1; i <= mu.length(); ++i) {
        int lo = std::min(la.part(i), mu.part(i));
        for (int c = lo + 1; c <= mu.part(i); ++c) added.push_back({i, c});
    }
    {
        std::vector<int> cols;
        cols.reserve(added.size());
        for (const Box& b : added) cols.push_back(b.c);
        std::sort(cols.begin(), cols.end());
        if (std::adjacent_find(cols.begin(), cols.end()) != cols.end()) return std::nullopt;
    }

    std::vector<char> mentioned(added.size(), 0);
    auto partners = [&](int r, int c, std::vector<int>* idx) {
        int count = 0;
        for (size_t t = 0; t < added.size(); ++t)
            if (k_related(r, c, added[t].r, added[t].c, K, k)) {
                ++count;
                if (idx) idx->push_back(static_cast<int>(t));
            }
        return count;
    };

    for (int c = 1; c <= k; ++c) {
        const int lc = column_height(la.parts(), c);
        const int mc = column_height(mu.parts(), c);
        if (mc == lc && mc > 0) {
            std::vector<int> idx;
            if (partners(mc, c, &idx) > 1) return std::nullopt;
            for (int t : idx) mentioned[t] = 1;
        } else if (mc < lc) {
            // Every box that left the column, and the column's new bottom box,
            // needs exactly one partner; the partners share one row.
            std::vector<int> idx;
            int partner_row = -1;
            auto require_one = [&](int r) {
                std::vector<int> local;
                if (partners(r, c, &local) != 1) return false;
                int row = added[local[0]].r;
                if (partner_row == -1) partner_row = row;
                if (row != partner_row) return false;
                idx.push_back(local[0]);
                return true;
            };
            for (int r = mc + 1; r <= lc; ++r)
                if (!require_one(r)) return std::nullopt;
            if (mc > 0 && !require_one(mc)) return std::nullopt;
            for (int t : idx) mentioned[t] = 1;
        }
    }

    // Components of the unmentioned added boxes beyond column k; boxes connect
    // when they share at least a corner.
    std::vector<Box> free_boxes;
    for (size_t t = 0; t < added.size(); ++t)
        if (added[t].c > k && !mentioned[t]) free_boxes.push_back(added[t]);
    int N = 0;
    std::vector<char> seen(free_boxes.size(), 0);
    for (size_t s = 0; s < free_boxes.size(); ++s) {
        if (seen[s]) continue;
        ++N;
        std::vector<size_t> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            size_t cur = stack.back();
            stack.pop_back();
            for (size_t t = 0; t < free_boxes.size(); ++t)
                if (!seen[t] && std::abs(free_boxes[cur].r - free_boxes[t].r) <= 1 &&
                    std::abs(free_boxes[cur].c - free_boxes[t].c) <= 1) {
                    seen[t] = 1;
                    stack.push_back(t);
                }
        }
    }
    return N;
}

namespace {

void gen_candidates(int k, int max_part, int rows_left, int remaining, std::vector<int>& acc,
                    std::vector<KStrictPartition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc, k);
        return;
    }
    if (rows_left == 0 || max_part == 0) return;
    for (int v = std::min(max_part, remaining); v >= 1; --v) {
        acc.push_back(v);
        gen_candidates(k, v > k ? v - 1 : v, rows_left - 1, remaining - v, acc, out);
        acc.pop_back();
    }
}

bool positive_shape(const KStrictPartition& s, int K) {
    return K % 2 == 0 && s.has_part(K / 2);
}

// max_rows / max_part < 0 mean unbounded (the strip caps still apply).
std::vector<StripStep> successors_raw(const KStrictPartition& la, int p, int K, int max_rows,
                                      int max_part) {
    if (p < 1) throw std::invalid_argument("the special class degree must be positive");
    int rows = la.length() + 1;
    if (max_rows >= 0) rows = std::min(rows, max_rows);
    // Each removal frees one more addable box, so the first row can grow past
    // la_1 + p by the number of rows short enough to lose a box.
    int removable = 0;
    for (int v : la.parts())
        if (v <= la.k()) ++removable;
    int width = la.part(1) + p + removable;
    if (max_part >= 0) width = std::min(width, max_part);

    std::vector<KStrictPartition> cands;
    std::vector<int> acc;
    gen_candidates(la.k(), width, rows, la.weight() + p, acc, cands);

    std::vector<StripStep> out;
    for (auto& mu : cands) {
        auto N = strip_components(la, mu, K);
        if (!N) continue;
        bool bump = positive_shape(la, K) && !positive_shape(mu, K);
        out.push_back({std::move(mu), *N, bump});
    }
    return out;
}

KStrictPartition drop_first(const KStrictPartition& s) {
    std::vector<int> v(s.parts().begin() + (s.empty() ? 0 : 1), s.parts().end());
    return KStrictPartition(std::move(v), s.k());
}

struct WrapTerm {
    KStrictPartition trimmed;
    int components;
    bool bump;
};

// Wrap-around successors nu, one row deeper than the space allows, with
// nu_1 >= K-1 and at most nu_1-K+2 rows of width >= 2; the emitted shape
// keeps rows 2 .. nu_1-K+2 (the rest is a forced tail of 1's).
std::vector<WrapTerm> wrap_raw(const KStrictPartition& la, int p, int K, int m, int width) {
    std::vector<WrapTerm> out;
    for (auto& st : successors_raw(la, p, K, m + 1, width)) {
        const auto& nu = st.shape;
        if (nu.length() != m + 1) continue;
        if (nu.part(1) < K - 1) continue;
        const int r = nu.part(1) - K + 2;
        int wide = 0;
        while (wide < nu.length() && nu.part(wide + 1) >= 2) ++wide;
        if (wide > r) continue;
        std::vector<int> trimmed;
        for (int i = 2; i <= r; ++i) trimmed.push_back(nu.part(i));
        out.push_back({KStrictPartition(std::move(trimmed), la.k()), st.components, st.bump});
    }
    return out;
}

// Double-wrap successors: strips from la minus its full first row, landing on
// shapes whose first row is full again.
std::vector<WrapTerm> double_wrap_raw(const KStrictPartition& la, int p, int K, int m,
                                      int width) {
    std::vector<WrapTerm> out;
    if (la.part(1) != width) return out;
    KStrictPartition star = drop_first(la);
    for (auto& st : successors_raw(star, p, K, m, width)) {
        if (st.shape.part(1) != width) continue;
        out.push_back({drop_first(st.shape), st.components, st.bump});
    }
    return out;
}

std::vector<QuantumTerm> quantum_raw(const KStrictPartition& la, int p, int K, int m,
                                     int width) {
    std::vector<QuantumTerm> out;
    for (auto& st : successors_raw(la, p, K, m, width))
        out.push_back({std::move(st.shape), pow2(st.components + st.bump), {0, 0}, false});
    for (auto& wt : wrap_raw(la, p, K, m, width))
        out.push_back({std::move(wt.trimmed), pow2(wt.components + wt.bump), {1, 0}, false});
    for (auto& wt : double_wrap_raw(la, p, K, m, width))
        out.push_back({std::move(wt.trimmed), pow2(wt.components + wt.bump), {2, 0}, false});
    return out;
}

}  // namespace

std::vector<StripStep> strip_successors(const KStrictPartition& la, int p, int K,
                                        const GrassParams* box, int rows_override) {
    if (!box) return successors_raw(la, p, K, -1, -1);
    return successors_raw(la, p, K, rows_override >= 0 ? rows_override : box->m,
                          box->max_part());
}

std::vector<TypedStep> chern_pieri_typed(const TypedPartition& la, int p,
                                         const GrassParams* box) {
    const int K = 2 * la.shape.k();
    std::vector<TypedStep> out;
    for (auto& st : strip_successors(la.shape, p, K, box)) {
        for (auto& tv : typed_versions(st.shape)) {
            if (la.type + tv.type == 3) continue;
            out.push_back({std::move(tv), st.components});
        }
    }
    return out;
}

std::vector<StripStep> chern_pieri_tilde(const KStrictPartition& la, int p,
                                         const GrassParams* box) {
    const int K = 2 * la.k();
    if (!la.has_part(la.k())) throw std::invalid_argument("difference class needs a part k");
    std::vector<StripStep> out;
    for (auto& st : strip_successors(la, p, K, box)) {
        if (!positive_shape(st.shape, K)) continue;
        st.bump = false;
        out.push_back(std::move(st));
    }
    return out;
}

std::vector<QuantumTerm> quantum_chern_pieri(const KStrictPartition& la, int p,
                                             const GrassParams& P) {
    if (P.K < 3) throw std::invalid_argument("one-parameter rule needs K >= 3");
    if (!la.fits(P)) throw std::invalid_argument("shape outside the rectangle");
    return quantum_raw(la, p, P.K, P.m, P.max_part());
}

std::vector<QuantumTerm> quantum_chern_pieri_tilde(const KStrictPartition& la, int p,
                                                   const GrassParams& P) {
    if (P.K < 4 || P.K % 2 != 0) throw std::invalid_argument("carryover needs even K >= 4");
    const int k = P.k;
    if (!la.has_part(k)) throw std::invalid_argument("difference class needs a part k");
    std::vector<int> v = la.parts();
    v.erase(std::find(v.begin(), v.end(), k));
    KStrictPartition lam(std::move(v), k);
    // Same rectangle width one row up, odd parity: K+1, m-1.
    std::vector<QuantumTerm> out;
    for (auto& t : quantum_raw(lam, p, P.K + 1, P.m - 1, P.max_part())) {
        std::vector<int> w = t.shape.parts();
        w.insert(std::upper_bound(w.begin(), w.end(), k, std::greater<int>()), k);
        Rat coef = t.q.d1 % 2 ? -t.coef : t.coef;
        out.push_back({KStrictPartition(std::move(w), k), std::move(coef), t.q, true});
    }
    return out;
}

namespace {

KStrictPartition with_trailing_one(const KStrictPartition& s) {
    std::vector<int> v = s.parts();
    v.push_back(1);
    return KStrictPartition(std::move(v), s.k());
}

KStrictPartition ones(int count) { return KStrictPartition(std::vector<int>(count, 1), 1); }

void drop_nonpositive_tilde(std::vector<QuantumTerm>& terms) {
    std::erase_if(terms, [](const QuantumTerm& t) { return t.tilde && !t.shape.has_part(1); });
}

}  // namespace

std::vector<QuantumTerm> k2_quantum_pieri_hat(const KStrictPartition& la, int p,
                                              const GrassParams& P) {
    if (P.K != 2) throw std::invalid_argument("two-parameter rule needs K = 2");
    if (!la.fits(P)) throw std::invalid_argument("shape outside the rectangle");
    const int n = P.n;
    std::vector<QuantumTerm> out;
    if (p == 1 && la == ones(n)) {
        out.push_back({KStrictPartition({n + 1}, 1), 2, {0, 0}, false});
        if (n > 1) {
            std::vector<int> v(n, 1);
            v[0] = 2;
            out.push_back({KStrictPartition(std::move(v), 1), 2, {0, 0}, false});
        }
        out.push_back({ones(0), 1, {1, 0}, false});
        out.push_back({ones(0), 1, {0, 1}, false});
        return out;
    }
    for (auto& st : successors_raw(la, p, 2, n, n + 1))
        out.push_back({std::move(st.shape), pow2(st.components + st.bump), {0, 0}, false});
    for (auto& wt : wrap_raw(la, p, 2, n, n + 1)) {
        Rat h = pow2(wt.components + wt.bump - 1);
        out.push_back({wt.trimmed, h, {1, 0}, false});
        out.push_back({wt.trimmed, h, {0, 1}, false});
        out.push_back({wt.trimmed, -h, {1, 0}, true});
        out.push_back({std::move(wt.trimmed), h, {0, 1}, true});
    }
    for (auto& wt : double_wrap_raw(la, p, 2, n, n + 1))
        out.push_back({std::move(wt.trimmed), pow2(wt.components + wt.bump), {1, 1}, false});
    drop_nonpositive_tilde(out);
    return out;
}

std::vector<QuantumTerm> k2_quantum_pieri_tilde(const KStrictPartition& la, int p,
                                                const GrassParams& P) {
    if (P.K != 2) throw std::invalid_argument("two-parameter rule needs K = 2");
    if (!la.has_part(1)) throw std::invalid_argument("difference class needs a part 1");
    const int n = P.n;
    std::vector<int> v = la.parts();
    v.erase(std::find(v.begin(), v.end(), 1));
    KStrictPartition lam(std::move(v), 1);
    std::vector<QuantumTerm> out;
    if (p == 1 && lam == ones(n - 1)) {
        std::vector<int> w(n, 1);
        w[0] = 2;
        out.push_back({KStrictPartition(std::move(w), 1), 2, {0, 0}, true});
        out.push_back({ones(0), 1, {1, 0}, false});
        out.push_back({ones(0), -1, {0, 1}, false});
        drop_nonpositive_tilde(out);
        return out;
    }
    // Odd-parity world one row up: K = 3, m = n-1, same width.
    for (auto& st : successors_raw(lam, p, 3, n - 1, n + 1))
        out.push_back({with_trailing_one(st.shape), pow2(st.components), {0, 0}, true});
    for (auto& wt : wrap_raw(lam, p, 3, n - 1, n + 1)) {
        Rat h = pow2(wt.components - 1);
        KStrictPartition shape = with_trailing_one(wt.trimmed);
        out.push_back({shape, h, {1, 0}, false});
        out.push_back({shape, -h, {0, 1}, false});
        out.push_back({shape, -h, {1, 0}, true});
        out.push_back({std::move(shape), -h, {0, 1}, true});
    }
    for (auto& wt : double_wrap_raw(lam, p, 3, n - 1, n + 1))
        out.push_back({with_trailing_one(wt.trimmed), pow2(wt.components), {1, 1}, true});
    drop_nonpositive_tilde(out);
    return out;
}

}  // namespace ogcalc

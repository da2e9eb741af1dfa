#include "ogcalc/ring.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "ogcalc/raising.hpp"

namespace ogcalc {

void SchubertExpr::add(const TermKey& key, const Rat& c) {
    auto it = terms.find(key);
    if (it == terms.end()) {
        if (c != 0) terms.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms.erase(it);
}

SchubertExpr& SchubertExpr::operator+=(const SchubertExpr& o) {
    for (const auto& [key, c] : o.terms) add(key, c);
    return *this;
}

SchubertExpr& SchubertExpr::operator-=(const SchubertExpr& o) {
    for (const auto& [key, c] : o.terms) add(key, -c);
    return *this;
}

SchubertExpr& SchubertExpr::operator*=(const Rat& c) {
    if (c == 0) {
        terms.clear();
        return *this;
    }
    for (auto& [key, v] : terms) v *= c;
    return *this;
}

SchubertExpr zero_expr(const RingSpec& ring) { return {ring, {}}; }

SchubertExpr unit_expr(const RingSpec& ring) {
    SchubertExpr e{ring, {}};
    e.add({KStrictPartition({}, ring.k), 0, {}}, 1);
    return e;
}

SchubertExpr basis_expr(const RingSpec& ring, KStrictPartition shape, int type, QDeg q) {
    if (shape.k() != ring.k) throw std::domain_error("strictness bound differs from the ring's");
    if (ring.box && !shape.fits(*ring.box))
        throw std::domain_error("shape outside the ring's rectangle");
    if (ring.even()) {
        bool positive = shape.has_part(ring.k);
        if (positive != (type == 1 || type == 2))
            throw std::domain_error("type must be positive exactly for shapes with a part k");
    } else if (type != 0) {
        throw std::domain_error("odd-parity classes are untyped");
    }
    if (ring.mode != RingMode::quantum && !q.classical())
        throw std::domain_error("deformation degree in a non-quantum ring");
    if (ring.K() != 2 && q.d2 != 0)
        throw std::domain_error("second deformation parameter exists only for K = 2");
    SchubertExpr e{ring, {}};
    e.add({std::move(shape), type, q}, 1);
    return e;
}

void SplitExpr::add_hat(const KStrictPartition& s, const QDeg& q, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = hat.try_emplace({s, q}, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) hat.erase(it);
    }
}

void SplitExpr::add_tilde(const KStrictPartition& s, const QDeg& q, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = tilde.try_emplace({s, q}, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) tilde.erase(it);
    }
}

SplitExpr& SplitExpr::add_scaled(const SplitExpr& o, const Rat& c) {
    if (c == 0) return *this;
    for (const auto& [key, v] : o.hat) add_hat(key.first, key.second, v * c);
    for (const auto& [key, v] : o.tilde) add_tilde(key.first, key.second, v * c);
    return *this;
}

SplitExpr to_split(const SchubertExpr& e) {
    SplitExpr s{e.ring, {}, {}};
    for (const auto& [key, c] : e.terms) {
        switch (key.type) {
            case 0: s.add_hat(key.shape, key.q, c); break;
            case 1:
                s.add_hat(key.shape, key.q, c / 2);
                s.add_tilde(key.shape, key.q, c / 2);
                break;
            case 2:
                s.add_hat(key.shape, key.q, c / 2);
                s.add_tilde(key.shape, key.q, -c / 2);
                break;
            default: throw std::domain_error("type must be 0, 1 or 2");
        }
    }
    return s;
}

SchubertExpr from_split(const SplitExpr& s) {
    SchubertExpr e{s.ring, {}};
    const int k = s.ring.k;
    for (const auto& [key, h] : s.hat) {
        const auto& [shape, q] = key;
        if (!s.ring.even() || !shape.has_part(k)) {
            e.add({shape, 0, q}, h);
            continue;
        }
        Rat t = 0;
        if (auto it = s.tilde.find(key); it != s.tilde.end()) t = it->second;
        e.add({shape, 1, q}, h + t);
        e.add({shape, 2, q}, h - t);
    }
    for (const auto& [key, t] : s.tilde) {
        const auto& [shape, q] = key;
        if (!s.ring.even() || !shape.has_part(k))
            throw std::domain_error("tilde part supported on a non-positive shape");
        if (s.hat.contains(key)) continue;  // handled above
        e.add({shape, 1, q}, t);
        e.add({shape, 2, q}, -t);
    }
    return e;
}

namespace {

QDeg qadd(const QDeg& a, const QDeg& b) { return {a.d1 + b.d1, a.d2 + b.d2}; }

SplitExpr zero_split(const RingSpec& ring) { return {ring, {}, {}}; }

SplitExpr shift_q(SplitExpr s, const QDeg& q) {
    if (q.classical()) return s;
    SplitExpr out = zero_split(s.ring);
    for (const auto& [key, c] : s.hat) out.add_hat(key.first, qadd(key.second, q), c);
    for (const auto& [key, c] : s.tilde) out.add_tilde(key.first, qadd(key.second, q), c);
    return out;
}

// Giambelli c-polynomials are requested repeatedly during multiplication;
// memoized per (shape, K).
const SpecialPoly& cached_giambelli_c(const KStrictPartition& la, int K) {
    static std::map<std::pair<std::pair<std::vector<int>, int>, int>, SpecialPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(std::make_pair(la.parts(), la.k()), K);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, giambelli_c(la, K)).first;
    return it->second;
}

SplitExpr apply_chern(const SplitExpr& e, int p) {
    const RingSpec& ring = e.ring;
    SplitExpr out = zero_split(ring);
    const int K = ring.K();
    const GrassParams* box = ring.box ? &*ring.box : nullptr;

    if (ring.mode != RingMode::quantum) {
        for (const auto& [key, c] : e.hat)
            for (const auto& st : strip_successors(key.first, p, K, box))
                out.add_hat(st.shape, key.second, c * pow2(st.components + st.bump));
        for (const auto& [key, c] : e.tilde)
            for (const auto& st : chern_pieri_tilde(key.first, p, box))
                out.add_tilde(st.shape, key.second, c * pow2(st.components));
        return out;
    }

    const GrassParams& P = *ring.box;
    if (K >= 3) {
        for (const auto& [key, c] : e.hat)
            for (const auto& t : quantum_chern_pieri(key.first, p, P))
                out.add_hat(t.shape, qadd(key.second, t.q), c * t.coef);
        for (const auto& [key, c] : e.tilde) {
            if (K % 2 != 0)
                throw std::domain_error("odd-parity quantum ring has no tilde classes");
            for (const auto& t : quantum_chern_pieri_tilde(key.first, p, P))
                out.add_tilde(t.shape, qadd(key.second, t.q), c * t.coef);
        }
        return out;
    }

    for (const auto& [key, c] : e.hat)
        for (const auto& t : k2_quantum_pieri_hat(key.first, p, P)) {
            if (t.tilde)
                out.add_tilde(t.shape, qadd(key.second, t.q), c * t.coef);
            else
                out.add_hat(t.shape, qadd(key.second, t.q), c * t.coef);
        }
    for (const auto& [key, c] : e.tilde)
        for (const auto& t : k2_quantum_pieri_tilde(key.first, p, P)) {
            if (t.tilde)
                out.add_tilde(t.shape, qadd(key.second, t.q), c * t.coef);
            else
                out.add_hat(t.shape, qadd(key.second, t.q), c * t.coef);
        }
    return out;
}

// Applies a product of generators c_{g_1} ... c_{g_r} (g descending).
SplitExpr apply_c_word(SplitExpr state, const std::vector<int>& g) {
    for (int v : g) state = apply_chern(state, v);
    return state;
}

// Applies a marker-free c-polynomial.
SplitExpr apply_c_poly(const SpecialPoly& poly, const SplitExpr& base) {
    SplitExpr acc = zero_split(base.ring);
    for (const auto& [mono, c] : poly.terms()) {
        if (mono.tkp != 0) throw std::logic_error("marker inside a c-polynomial");
        acc.add_scaled(apply_c_word(base, mono.g), c);
    }
    return acc;
}

// tilde_k^2 as a c-polynomial: c_k^2 + 2 sum_{i=1..k} (-1)^i c_{k+i} c_{k-i}.
SpecialPoly tilde_square_poly(int k) {
    SpecialPoly s = SpecialPoly::term(SpecialPoly::Alphabet::c, make_monomial({k, k}), 1);
    for (int i = 1; i <= k; ++i)
        s.add(make_monomial({k + i, k - i}), (i % 2 ? Rat(-2) : Rat(2)));
    return s;
}

SplitExpr apply_tilde_k(const SplitExpr& e) {
    const RingSpec& ring = e.ring;
    if (!ring.even()) throw std::domain_error("tilde generator needs an even-parity ring");
    const int k = ring.k, K = ring.K();
    SplitExpr out = zero_split(ring);

    // On a hat element: tau-tilde_k . tau-hat_s = G_s(c) . tau-tilde_(k).
    SplitExpr base = zero_split(ring);
    base.add_tilde(KStrictPartition({k}, k), {}, 1);
    for (const auto& [key, c] : e.hat) {
        SplitExpr contrib = apply_c_poly(cached_giambelli_c(key.first, K), base);
        out.add_scaled(shift_q(std::move(contrib), key.second), c);
    }

    // On a tilde element: tau-tilde_k . tau-tilde_s = (G~_s . S)(c) . 1,
    // where S is the square of the tilde generator inside the c-subring.
    SplitExpr unit = zero_split(ring);
    unit.add_hat(KStrictPartition({}, k), {}, 1);
    for (const auto& [key, c] : e.tilde) {
        SpecialPoly poly = giambelli_tilde(key.first, K).c_factor * tilde_square_poly(k);
        SplitExpr contrib = apply_c_poly(poly, unit);
        out.add_scaled(shift_q(std::move(contrib), key.second), c);
    }
    return out;
}

}  // namespace

SplitExpr apply_generator(const SplitExpr& e, const Generator& g) {
    switch (g.kind) {
        case Generator::Kind::chern: return apply_chern(e, g.p);
        case Generator::Kind::tau_tilde: return apply_tilde_k(e);
        case Generator::Kind::tau_prime: {
            // tau'_k = (c_k - tau-tilde_k) / 2
            SplitExpr out = apply_chern(e, e.ring.k);
            out.add_scaled(apply_tilde_k(e), -1);
            for (auto& [key, c] : out.hat) c /= 2;
            for (auto& [key, c] : out.tilde) c /= 2;
            return out;
        }
    }
    throw std::logic_error("unreachable");
}

namespace {

// Folds one generator monomial (descending c-word, then tkp marker factors)
// onto a split expression.
SplitExpr fold_monomial(const SpecialMonomial& mono, const SplitExpr& base) {
    SplitExpr state = apply_c_word(base, mono.g);
    for (int i = 0; i < mono.tkp; ++i) state = apply_generator(state, Generator::tau_prime());
    return state;
}

SpecialPoly generator_polynomial(const RingSpec& ring, const TermKey& key) {
    if (ring.even())
        return giambelli_special(TypedPartition(key.shape.parts(), ring.k, key.type), ring.K())
            .c_form;
    return giambelli_c(key.shape, ring.K());
}

}  // namespace

SchubertExpr multiply(const SchubertExpr& a, const SchubertExpr& b) {
    if (a.ring != b.ring) throw std::invalid_argument("factors live in different rings");
    SplitExpr eb = to_split(b);
    SplitExpr acc = zero_split(a.ring);
    for (const auto& [key, ca] : a.terms) {
        SpecialPoly form = generator_polynomial(a.ring, key);
        for (const auto& [mono, cm] : form.terms())
            acc.add_scaled(shift_q(fold_monomial(mono, eb), key.q), ca * cm);
    }
    return from_split(acc);
}

std::map<TermKey, Rat> structure_constants(const TypedPartition& la, const TypedPartition& mu,
                                           const RingSpec& ring) {
    SchubertExpr prod = multiply(basis_expr(ring, la.shape, la.type),
                                 basis_expr(ring, mu.shape, mu.type));
    for (const auto& [key, c] : prod.terms)
        if (!is_integer(c)) throw std::runtime_error("non-integer structure constant");
    return std::move(prod.terms);
}

GiambelliCheck verify_quantum_giambelli(const TypedPartition& la, const GrassParams& P) {
    RingSpec ring = RingSpec::quantum_ring(P);
    SpecialPoly form = giambelli_special(la, P.K).c_form;
    SplitExpr unit = to_split(unit_expr(ring));
    SplitExpr acc = zero_split(ring);
    for (const auto& [mono, cm] : form.terms()) acc.add_scaled(fold_monomial(mono, unit), cm);
    GiambelliCheck check;
    check.computed = from_split(acc);
    check.equal = check.computed == basis_expr(ring, la.shape, la.type);
    return check;
}

std::map<std::pair<int, KStrictPartition>, Rat> recursion_coefficients(const KStrictPartition& la,
                                                                       const GrassParams* rect) {
    std::map<std::pair<int, KStrictPartition>, Rat> out;
    if (la.empty()) return out;
    const int k = la.k();
    const int W = la.weight();

    struct Unknown {
        int p;
        KStrictPartition mu;
        std::vector<StripStep> column;  // c_p [Y_mu] in the stable ring
    };
    std::vector<Unknown> unknowns;
    for (int p = la.part(1); p <= W; ++p)
        for (auto& mu : enumerate_k_strict_weight(k, W - p)) {
            if (mu.part(1) > p) continue;
            if (p > k && mu.part(1) == p) continue;  // (p, mu) must stay k-strict
            unknowns.push_back({p, mu, strip_successors(mu, p, 2 * k, nullptr)});
        }

    std::vector<KStrictPartition> rows = enumerate_k_strict_weight(k, W);
    std::map<std::vector<int>, int> row_of;
    for (size_t r = 0; r < rows.size(); ++r) row_of[rows[r].parts()] = static_cast<int>(r);

    const size_t R = rows.size(), C = unknowns.size();
    std::vector<std::vector<Rat>> A(R, std::vector<Rat>(C + 1, 0));
    for (size_t c = 0; c < C; ++c)
        for (const auto& st : unknowns[c].column)
            A[row_of.at(st.shape.parts())][c] += pow2(st.components + st.bump);
    A[row_of.at(la.parts())][C] = 1;

    // Exact Gaussian elimination; the system is overdetermined but must be
    // consistent with a unique solution.
    size_t rank = 0;
    std::vector<int> pivot_col(R, -1);
    for (size_t c = 0; c < C && rank < R; ++c) {
        size_t piv = rank;
        while (piv < R && A[piv][c] == 0) ++piv;
        if (piv == R) continue;
        std::swap(A[rank], A[piv]);
        Rat inv = A[rank][c];
        for (size_t j = c; j <= C; ++j) A[rank][j] /= inv;
        for (size_t r = 0; r < R; ++r) {
            if (r == rank || A[r][c] == 0) continue;
            Rat f = A[r][c];
            for (size_t j = c; j <= C; ++j) A[r][j] -= f * A[rank][j];
        }
        pivot_col[rank] = static_cast<int>(c);
        ++rank;
    }
    if (rank < C) throw std::runtime_error("recursion system is underdetermined");
    for (size_t r = rank; r < R; ++r)
        if (A[r][C] != 0) throw std::runtime_error("recursion system is inconsistent");

    std::vector<Rat> x(C, 0);
    for (size_t r = 0; r < rank; ++r) x[pivot_col[r]] = A[r][C];

    for (size_t c = 0; c < C; ++c) {
        if (x[c] == 0) continue;
        const auto& u = unknowns[c];
        for (int i = 1; i <= u.mu.length(); ++i)
            if (u.mu.part(i) > la.part(i + 1))
                throw std::runtime_error("recursion support leaves la minus its first row");
        if (rect && la.fits(*rect) && u.p >= 2 * rect->n + 2 * rect->k)
            throw std::runtime_error("recursion degree exceeds the rectangle bound");
        out[{u.p, u.mu}] = x[c];
    }
    return out;
}

SchubertExpr iota(const SchubertExpr& e) {
    SchubertExpr out{e.ring, {}};
    for (const auto& [key, c] : e.terms) {
        int t = key.type == 1 ? 2 : key.type == 2 ? 1 : 0;
        out.add({key.shape, t, key.q}, c);
    }
    return out;
}

int term_degree(const RingSpec& ring, const TermKey& key) {
    int w = key.shape.weight();
    if (!ring.box) return w;
    if (ring.K() == 2) return w + (key.q.d1 + key.q.d2) * (ring.box->n + 1);
    return w + key.q.d1 * ring.box->max_part();
}

std::optional<int> homogeneous_degree(const SchubertExpr& e) {
    std::optional<int> deg;
    for (const auto& [key, c] : e.terms) {
        int d = term_degree(e.ring, key);
        if (deg && *deg != d) return std::nullopt;
        deg = d;
    }
    return e.terms.empty() ? std::optional<int>(0) : deg;
}

bool integer_coefficients(const SchubertExpr& e) {
    return std::all_of(e.terms.begin(), e.terms.end(),
                       [](const auto& kv) { return is_integer(kv.second); });
}

namespace {

KStrictPartition insert_part(const KStrictPartition& s, int v) {
    std::vector<int> w = s.parts();
    w.insert(std::upper_bound(w.begin(), w.end(), v, std::greater<int>()), v);
    return KStrictPartition(std::move(w), s.k());
}

KStrictPartition remove_part(const KStrictPartition& s, int v) {
    std::vector<int> w = s.parts();
    auto it = std::find(w.begin(), w.end(), v);
    if (it == w.end()) throw std::domain_error("shape lacks the required part");
    w.erase(it);
    return KStrictPartition(std::move(w), s.k());
}

}  // namespace

SplitExpr odd_to_even_transfer(const SchubertExpr& e) {
    if (!e.ring.box || e.ring.even())
        throw std::domain_error("transfer source must be a bounded odd-parity ring");
    const GrassParams& Po = *e.ring.box;
    GrassParams Pe = GrassParams::even_kn(Po.k, Po.n);
    RingSpec even = e.ring.mode == RingMode::quantum ? RingSpec::quantum_ring(Pe)
                                                     : RingSpec::classical_ring(Pe);
    SplitExpr out = zero_split(even);
    for (const auto& [key, c] : e.terms) {
        Rat v = (key.q.d1 % 2) ? -c : c;
        out.add_tilde(insert_part(key.shape, Po.k), key.q, v);
    }
    return out;
}

SplitExpr identify_deformations(const SplitExpr& s) {
    SplitExpr out;
    out.ring = s.ring;
    for (const auto& [key, c] : s.hat)
        out.add_hat(key.first, {key.second.d1 + key.second.d2, 0}, c);
    for (const auto& [key, c] : s.tilde)
        out.add_tilde(key.first, {key.second.d1 + key.second.d2, 0}, c);
    return out;
}

SchubertExpr even_to_odd_transfer(const SplitExpr& s) {
    if (!s.ring.box || !s.ring.even())
        throw std::domain_error("transfer source must be a bounded even-parity ring");
    if (!s.hat.empty()) throw std::domain_error("transfer inverse needs a tilde-only expression");
    const GrassParams& Pe = *s.ring.box;
    GrassParams Po = GrassParams::odd_kn(Pe.k, Pe.n);
    RingSpec odd = s.ring.mode == RingMode::quantum ? RingSpec::quantum_ring(Po)
                                                    : RingSpec::classical_ring(Po);
    SchubertExpr out = zero_expr(odd);
    for (const auto& [key, c] : s.tilde) {
        Rat v = (key.second.d1 % 2) ? -c : c;
        out.add({remove_part(key.first, Pe.k), 0, key.second}, v);
    }
    return out;
}

}  // namespace ogcalc

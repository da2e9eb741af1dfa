#include "ogcalc/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "ogcalc/partition.hpp"
#include "ogcalc/raising.hpp"

namespace ogcalc {

namespace {

void partitions_rec(int rest, int maxpart, int maxlen, std::vector<int>& cur,
                    const std::function<void(const std::vector<int>&)>& sink) {
    if (rest == 0) {
        sink(cur);
        return;
    }
    if (maxlen == 0) return;
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(rest - p, p, maxlen - 1, cur, sink);
        cur.pop_back();
    }
}

/// Normalizes a product subscript: drops zeros, sorts descending; returns
/// false when a negative subscript forces the whole product to vanish.
bool normalize_subscript(std::vector<int>& sub) {
    for (int s : sub)
        if (s < 0) return false;
    std::erase(sub, 0);
    std::sort(sub.begin(), sub.end(), std::greater<int>());
    return true;
}

using MonoKey = std::tuple<std::vector<int>, int, int, int>;

MonoKey mono_key(const std::vector<int>& sub, const VarConfig& cfg) {
    return {sub, cfg.d, cfg.k, cfg.degcap};
}

/// Shared memoized fold: product of single-index family values over the
/// normalized subscript vector, peeling the smallest subscript last so
/// prefixes are shared across calls.
MPoly fold_monomial(std::map<MonoKey, MPoly>& cache, std::mutex& mu, Family f,
                    std::vector<int> sub, const VarConfig& cfg) {
    if (!normalize_subscript(sub)) return MPoly::zero(cfg);
    if (sub.empty()) return MPoly::one(cfg);
    MonoKey key = mono_key(sub, cfg);
    {
        std::scoped_lock lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    int last = sub.back();
    sub.pop_back();
    MPoly result = fold_monomial(cache, mu, f, std::move(sub), cfg) * family(f, last, cfg);
    std::scoped_lock lock(mu);
    return cache.emplace(std::move(key), std::move(result)).first->second;
}

std::vector<int> checked_partition(std::vector<int> la) {
    for (std::size_t i = 0; i < la.size(); ++i) {
        if (la[i] < 0) throw std::invalid_argument("negative part");
        if (i && la[i] > la[i - 1]) throw std::invalid_argument("parts must be weakly decreasing");
    }
    while (!la.empty() && la.back() == 0) la.pop_back();
    return la;
}

bool is_strict(const std::vector<int>& la) {
    for (std::size_t i = 1; i < la.size(); ++i)
        if (la[i] >= la[i - 1]) return false;
    return true;
}

}  // namespace

MPoly family(Family f, int r, const VarConfig& cfg) {
    if (r < 0) return MPoly::zero(cfg);
    if (r == 0) return MPoly::one(cfg);
    MPoly out(cfg);
    switch (f) {
        case Family::e_x:
            out.add(std::vector<int>(static_cast<std::size_t>(r), 1), {}, 1);
            return out;
        case Family::e_y:
            out.add({}, std::vector<int>(static_cast<std::size_t>(r), 1), 1);
            return out;
        case Family::q: {
            // q_r = sum over partitions la of r of 2^{ell(la)} m_la(x).
            std::vector<int> cur;
            partitions_rec(r, r, cfg.d, cur, [&](const std::vector<int>& la) {
                out.add(la, {}, pow2(static_cast<long>(la.size())));
            });
            return out;
        }
        default:
            return family(f, std::vector<int>{r}, cfg);
    }
}

MPoly family(Family f, const std::vector<int>& la, const VarConfig& cfg) {
    switch (f) {
        case Family::e_x:
            return e_x_monomial(la, cfg);
        case Family::e_y:
            return e_y_monomial(la, cfg);
        case Family::q:
            return q_monomial(la, cfg);
        case Family::s: {
            std::vector<int> parts = checked_partition(la);
            MPoly out(cfg);
            for (const auto& [sub, c] : expand_raising(parts, kNoPairsCond))
                out += c * e_x_monomial(sub, cfg);
            return out;
        }
        case Family::P:
        case Family::Q: {
            std::vector<int> parts = checked_partition(la);
            if (!is_strict(parts)) throw std::domain_error("P/Q need a strict partition");
            MPoly out(cfg);
            for (const auto& [sub, c] : expand_raising(parts, kAllPairsCond))
                out += c * q_monomial(sub, cfg);
            if (f == Family::P) out *= pow2(-static_cast<long>(parts.size()));
            return out;
        }
    }
    throw std::logic_error("unreachable family");
}

MPoly q_monomial(std::vector<int> sub, const VarConfig& cfg) {
    static std::map<MonoKey, MPoly> cache;
    static std::mutex mu;
    return fold_monomial(cache, mu, Family::q, std::move(sub), cfg);
}

MPoly e_x_monomial(std::vector<int> sub, const VarConfig& cfg) {
    static std::map<MonoKey, MPoly> cache;
    static std::mutex mu;
    return fold_monomial(cache, mu, Family::e_x, std::move(sub), cfg);
}

MPoly e_y_monomial(std::vector<int> sub, const VarConfig& cfg) {
    static std::map<MonoKey, MPoly> cache;
    static std::mutex mu;
    return fold_monomial(cache, mu, Family::e_y, std::move(sub), cfg);
}

MPoly theta_poly(int r, const VarConfig& cfg) {
    if (r < 0) return MPoly::zero(cfg);
    if (r == 0) return MPoly::one(cfg);
    MPoly out(cfg);
    for (int i = 0; i <= std::min(r, cfg.k); ++i) {
        MPoly qi = family(Family::q, r - i, cfg);
        std::vector<int> ypart(static_cast<std::size_t>(i), 1);
        for (const auto& [key, c] : qi.terms()) out.add(key.x, ypart, c);
    }
    return out;
}

MPoly theta_monomial(std::vector<int> sub, const VarConfig& cfg) {
    static std::map<MonoKey, MPoly> cache;
    static std::mutex mu;
    if (!normalize_subscript(sub)) return MPoly::zero(cfg);
    if (sub.empty()) return MPoly::one(cfg);
    MonoKey key = mono_key(sub, cfg);
    {
        std::scoped_lock lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    int last = sub.back();
    std::vector<int> head(sub.begin(), sub.end() - 1);
    MPoly result = theta_monomial(std::move(head), cfg) * theta_poly(last, cfg);
    std::scoped_lock lock(mu);
    return cache.emplace(std::move(key), std::move(result)).first->second;
}

MPoly eta_generator(int r, const VarConfig& cfg) {
    if (r < 0) return MPoly::zero(cfg);
    if (r == 0) return MPoly::one(cfg);
    MPoly out = family(Family::e_y, r, cfg);
    const Rat scale = (r < cfg.k) ? Rat(1) : Rat(1, 2);  // 2 P_j = q_j
    for (int i = 0; i < r; ++i)
        out += scale * (family(Family::q, r - i, cfg) * family(Family::e_y, i, cfg));
    return out;
}

MPoly eta_prime(const VarConfig& cfg) {
    MPoly out(cfg);
    for (int i = 0; i < cfg.k; ++i)
        out += Rat(1, 2) * (family(Family::q, cfg.k - i, cfg) * family(Family::e_y, i, cfg));
    return out;
}

MPoly schur_conj_y(const std::vector<int>& nu, const VarConfig& cfg) {
    std::vector<int> parts = checked_partition(nu);
    MPoly out(cfg);
    for (const auto& [sub, c] : expand_raising(parts, kNoPairsCond))
        out += c * e_y_monomial(sub, cfg);
    return out;
}

MPoly e_y_squares(int r, const VarConfig& cfg) {
    if (r < 0) return MPoly::zero(cfg);
    if (r == 0) return MPoly::one(cfg);
    MPoly out(cfg);
    out.add({}, std::vector<int>(static_cast<std::size_t>(r), 2), 1);
    return out;
}

namespace {

int key_degree(const OrbitKey& key) {
    int s = 0;
    for (int e : key.x) s += e;
    for (int e : key.y) s += e;
    return s;
}

/// Graded order with x-dominant ties: higher total degree wins, then larger
/// x part lexicographically, then larger y part.
bool key_less(const OrbitKey& a, const OrbitKey& b) {
    int da = key_degree(a), db = key_degree(b);
    if (da != db) return da < db;
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

}  // namespace

std::map<PSKey, Rat> expand_P_s_basis(const MPoly& f) {
    const VarConfig& cfg = f.cfg();
    std::map<PSKey, Rat> out;
    MPoly rest = f;
    while (!rest.is_zero()) {
        OrbitKey top = rest.terms().begin()->first;
        for (const auto& [key, c] : rest.terms())
            if (key_less(top, key)) top = key;
        if (!is_strict(top.x))
            throw std::domain_error("polynomial is outside the P_mu(x) s_{nu'}(y) span");
        // The leading orbit key of P_mu(x) s_{nu'}(y) is (mu, nu') with
        // coefficient 1, so the top coefficient is the basis coordinate.
        Rat c = rest.coefficient(top);
        std::vector<int> nu = conjugate(top.y);
        MPoly basis = family(Family::P, top.x, cfg) * schur_conj_y(nu, cfg);
        rest -= c * basis;
        if (rest.coefficient(top) != 0)
            throw std::logic_error("pivot did not cancel in P*s elimination");
        out[PSKey{top.x, std::move(nu)}] = std::move(c);
    }
    return out;
}

}  // namespace ogcalc

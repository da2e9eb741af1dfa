#include "ogcalc/eta.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "ogcalc/raising.hpp"

namespace ogcalc {

namespace {

std::vector<int> drop_slot(std::vector<int> v, int d) {
    v.erase(v.begin() + (d - 1));
    return v;
}

using ShapeKey = std::tuple<std::vector<int>, int, int, int, int, int>;

ShapeKey shape_key(const std::vector<int>& parts, int type, const VarConfig& cfg) {
    return {parts, type, cfg.d, cfg.k, cfg.degcap, 0};
}

void require_matching_k(int la_k, const VarConfig& cfg) {
    if (la_k != cfg.k)
        throw std::invalid_argument("partition k does not match the y-block size");
}

MPoly raising_over_theta(const std::vector<int>& parts, int cond, const VarConfig& cfg) {
    MPoly out(cfg);
    for (const auto& [sub, c] : expand_raising(parts, cond))
        out += c * theta_monomial(sub, cfg);
    return out;
}

}  // namespace

MPoly theta_polynomial(const KStrictPartition& la, const VarConfig& cfg) {
    require_matching_k(la.k(), cfg);
    static std::map<ShapeKey, MPoly> cache;
    static std::mutex mu;
    ShapeKey key = shape_key(la.parts(), -1, cfg);
    {
        std::scoped_lock lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    MPoly out = raising_over_theta(la.parts(), 2 * la.k() + 1, cfg);
    std::scoped_lock lock(mu);
    return cache.emplace(std::move(key), std::move(out)).first->second;
}

MPoly S_polynomial(const std::vector<int>& parts, const VarConfig& cfg) {
    return raising_over_theta(parts, kNoPairsCond, cfg);
}

MPoly Q_polynomial(const std::vector<int>& parts, const VarConfig& cfg) {
    return raising_over_theta(parts, kAllPairsCond, cfg);
}

MPoly eta_polynomial(const TypedPartition& la, const VarConfig& cfg) {
    require_matching_k(la.shape.k(), cfg);
    static std::map<ShapeKey, MPoly> cache;
    static std::mutex mu;
    ShapeKey key = shape_key(la.shape.parts(), la.type, cfg);
    {
        std::scoped_lock lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }

    const int k = la.shape.k();
    const Rat scale = pow2(-static_cast<long>(la.shape.ell_k()));
    MPoly out(cfg);
    if (la.type == 0) {
        out = raising_over_theta(la.shape.parts(), 2 * k, cfg);
        out *= scale;
    } else {
        const int d = la.shape.ell_k() + 1;
        TaggedExpansion tg = expand_raising_tagged(la.shape.parts(), 2 * k, d);
        MPoly factor = (la.type == 1) ? eta_generator(k, cfg) : eta_prime(cfg);
        for (const auto& [sub, c] : tg.untouched)
            out += (c * scale) * (factor * theta_monomial(drop_slot(sub, d), cfg));
        for (const auto& [sub, c] : tg.touched)
            out += (c * scale / 2) * theta_monomial(sub, cfg);
    }
    std::scoped_lock lock(mu);
    return cache.emplace(std::move(key), std::move(out)).first->second;
}

MPoly eta_hat(const KStrictPartition& la, const VarConfig& cfg) {
    require_matching_k(la.k(), cfg);
    MPoly out = raising_over_theta(la.parts(), 2 * la.k(), cfg);
    out *= pow2(-static_cast<long>(la.ell_k()));
    return out;
}

MPoly eta_tilde(const KStrictPartition& la, const VarConfig& cfg) {
    require_matching_k(la.k(), cfg);
    if (!la.has_part(la.k())) return MPoly::zero(cfg);
    DerivedShapes sh = derived_shapes(TypedPartition(la, la.k() > 0 ? 1 : 0));
    KStrictPartition reduced(*sh.minus_k, la.k());
    MPoly out = family(Family::e_y, la.k(), cfg) * theta_polynomial(reduced, cfg);
    out *= pow2(-static_cast<long>(la.ell_k()));
    return out;
}

SQResult SQ_specialization(const TypedPartition& la, const VarConfig& cfg) {
    require_matching_k(la.shape.k(), cfg);
    const std::vector<int>& parts = la.shape.parts();
    const int k = la.shape.k();
    const int len = static_cast<int>(parts.size());

    bool all_below = true, all_at_least = true;
    for (int i = 1; i <= len; ++i)
        for (int j = i + 1; j <= len; ++j) {
            if (parts[i - 1] + parts[j - 1] < 2 * k + j - i)
                all_at_least = false;
            else
                all_below = false;
        }

    SQResult res{SQCase::mixed, MPoly::zero(cfg)};
    if (all_below && all_at_least)
        res.regime = SQCase::both;
    else if (all_below)
        res.regime = SQCase::S;
    else if (all_at_least)
        res.regime = SQCase::Q;
    else {
        res.value = eta_polynomial(la, cfg);
        return res;
    }

    auto reduced_parts = [&]() {
        DerivedShapes sh = derived_shapes(la);
        return *sh.minus_k;
    };

    if (res.regime != SQCase::Q) {
        // S regime (also the vacuous-pair case).
        if (la.type != 0) {
            MPoly diff = family(Family::e_y, k, cfg) * S_polynomial(reduced_parts(), cfg);
            if (la.type == 2) diff *= Rat(-1);
            res.value = Rat(1, 2) * (S_polynomial(parts, cfg) + diff);
        } else if (!parts.empty() && parts[0] > k) {
            res.value = Rat(1, 2) * S_polynomial(parts, cfg);
        } else {
            res.value = S_polynomial(parts, cfg);
        }
    } else {
        const Rat lead = pow2(-static_cast<long>(len));
        if (la.type != 0) {
            MPoly diff = family(Family::e_y, k, cfg) * Q_polynomial(reduced_parts(), cfg);
            if (la.type == 2) diff *= Rat(-1);
            res.value = lead * (Q_polynomial(parts, cfg) + diff);
        } else if (!parts.empty() && parts.back() > k) {
            res.value = lead * Q_polynomial(parts, cfg);
        } else {
            res.value = (2 * lead) * Q_polynomial(parts, cfg);
        }
    }
    return res;
}

std::map<PSKey, long> d_coefficients(const TypedPartition& la, const VarConfig& cfg) {
    std::map<PSKey, long> out;
    DerivedShapes sh = derived_shapes(la);
    for (const auto& [key, c] : expand_P_s_basis(eta_polynomial(la, cfg))) {
        if (!is_integer(c) || c < 0)
            throw std::logic_error("eta coordinate is not a nonnegative integer");
        for (std::size_t i = 0; i < key.nu.size(); ++i) {
            int bound = i < sh.lambda2.size() ? sh.lambda2[i] : 0;
            if (key.nu[i] > bound)
                throw std::logic_error("eta coordinate index escapes the first k columns");
        }
        out[key] = rat_to_long(c);
    }
    return out;
}

std::map<TypedPartition, Rat> expand_H_basis(const MPoly& f) {
    const VarConfig& cfg = f.cfg();
    std::map<TypedPartition, Rat> out;

    for (int w = 0; w <= f.degree(); ++w) {
        MPoly rest = f.homogeneous_part(w);
        if (rest.is_zero()) continue;

        // Bottom x-degree pivot of each candidate: (rho^1, rho^2), or
        // (rho^3, rho^4) for type 2.
        std::map<PSKey, TypedPartition> pivot;
        for (const TypedPartition& rho : enumerate_typed_weight(cfg.k, w)) {
            DerivedShapes sh = derived_shapes(rho);
            PSKey key = (rho.type == 2) ? PSKey{*sh.lambda3, *sh.lambda4}
                                        : PSKey{sh.lambda1, sh.lambda2};
            if (!pivot.emplace(std::move(key), rho).second)
                throw std::logic_error("eta basis pivots collide");
        }

        while (!rest.is_zero()) {
            int low = -1;
            for (const auto& [key, c] : rest.terms()) {
                int xd = 0;
                for (int e : key.x) xd += e;
                if (low < 0 || xd < low) low = xd;
            }
            MPoly slice(cfg);
            for (const auto& [key, c] : rest.terms()) {
                int xd = 0;
                for (int e : key.x) xd += e;
                if (xd == low) slice.add(key.x, key.y, c);
            }
            for (const auto& [key, c] : expand_P_s_basis(slice)) {
                auto it = pivot.find(key);
                if (it == pivot.end())
                    throw std::domain_error("polynomial is outside the eta-polynomial span");
                rest -= c * eta_polynomial(it->second, cfg);
                auto [slot, fresh] = out.emplace(it->second, c);
                if (!fresh) throw std::logic_error("eta pivot consumed twice");
            }
        }
    }
    return out;
}

}  // namespace ogcalc

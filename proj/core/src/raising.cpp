#include "ogcalc/raising.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace ogcalc {

std::vector<std::pair<int, int>> inverted_pairs(const std::vector<int>& parts, int cond) {
    std::vector<std::pair<int, int>> out;
    const int l = static_cast<int>(parts.size());
    for (int i = 1; i <= l; ++i)
        for (int j = i + 1; j <= l; ++j)
            if (parts[i - 1] + parts[j - 1] >= cond + (j - i)) out.emplace_back(i, j);
    return out;
}

TaggedExpansion expand_raising_tagged(const std::vector<int>& parts, int cond, int d,
                                      long cap_override) {
    const int l = static_cast<int>(parts.size());
    if (d < 0 || d > l) throw std::invalid_argument("marked row out of range");
    long W = 0;
    for (int p : parts) {
        if (p < 0) throw std::invalid_argument("negative subscript");
        W += p;
    }
    const long cap = cap_override >= 0 ? cap_override : static_cast<long>(l) * (W + l);

    auto inverted = [&](int i, int j) {
        return parts[i - 1] + parts[j - 1] >= static_cast<long>(cond) + (j - i);
    };

    // Largest possible future raise of each slot: slot j is only raised by
    // factors R_{j,j'}, all of which are processed after any factor lowering j.
    std::vector<long> max_raise(l + 2, 0);
    for (int j = 1; j <= l; ++j)
        for (int jp = j + 1; jp <= l; ++jp) max_raise[j] += inverted(j, jp) ? cap : 1;

    // coefficient per subscript vector, split by whether a factor with
    // positive exponent has hit row d
    using Split = std::array<Rat, 2>;
    std::map<std::vector<int>, Split> state;
    state.emplace(std::vector<int>(parts.begin(), parts.end()), Split{Rat(1), Rat(0)});

    for (int i = 1; i <= l; ++i) {
        for (int j = i + 1; j <= l; ++j) {
            const bool inv = inverted(i, j);
            const long ecap = inv ? cap : 1;
            const bool marks = d != 0 && (i == d || j == d);
            std::map<std::vector<int>, Split> next;
            for (const auto& [alpha, co] : state) {
                for (long e = 0; e <= ecap; ++e) {
                    // Slot i is never lowered again; slot j can still be
                    // raised by at most max_raise[j].
                    if (alpha[i - 1] + e > W) break;
                    if (alpha[j - 1] - e + max_raise[j] < 0) break;
                    Rat s = e == 0 ? Rat(1) : (inv ? Rat(2 * (e % 2 ? -1 : 1)) : Rat(-1));
                    std::vector<int> beta = alpha;
                    beta[i - 1] += static_cast<int>(e);
                    beta[j - 1] -= static_cast<int>(e);
                    auto& acc = next[std::move(beta)];
                    if (e > 0 && marks) {
                        acc[1] += s * (co[0] + co[1]);
                    } else {
                        acc[0] += s * co[0];
                        acc[1] += s * co[1];
                    }
                }
            }
            state = std::move(next);
        }
        // Row i's subscript is now final.
        std::erase_if(state, [&](const auto& kv) {
            int v = kv.first[i - 1];
            return v < 0 || v > W || (kv.second[0] == 0 && kv.second[1] == 0);
        });
    }

    TaggedExpansion out;
    out.d = d;
    for (auto& [alpha, co] : state) {
        if (std::any_of(alpha.begin(), alpha.end(), [](int v) { return v < 0; })) continue;
        if (co[0] != 0) out.untouched.emplace(alpha, std::move(co[0]));
        if (co[1] != 0) out.touched.emplace(alpha, std::move(co[1]));
    }
    return out;
}

std::map<std::vector<int>, Rat> expand_raising(const std::vector<int>& parts, int cond) {
    return expand_raising_tagged(parts, cond, 0).untouched;
}

namespace {

void check_K(const KStrictPartition& la, int K) {
    if (K != 2 * la.k() && K != 2 * la.k() + 1)
        throw std::invalid_argument("K must be 2k or 2k+1");
}

std::vector<int> drop_slot(const std::vector<int>& v, int d) {
    std::vector<int> out(v.begin(), v.end());
    out.erase(out.begin() + (d - 1));
    return out;
}

}  // namespace

SpecialPoly giambelli_c(const KStrictPartition& la, int K) {
    check_K(la, K);
    SpecialPoly out(SpecialPoly::Alphabet::c);
    const Rat scale = pow2(-la.ell_k());
    for (const auto& [alpha, coef] : expand_raising(la.parts(), K))
        out.add(make_monomial(alpha), coef * scale);
    return out;
}

GiambelliSpecial giambelli_special(const TypedPartition& la, int K) {
    const int k = la.shape.k();
    if (K != 2 * k) throw std::invalid_argument("typed classes require K = 2k");
    GiambelliSpecial res;
    if (la.type == 0) {
        res.c_form = giambelli_c(la.shape, K);
        res.tau_form = to_tau_form(res.c_form, k);
        return res;
    }
    const int d = la.shape.ell_k() + 1;
    const Rat scale = pow2(-la.shape.ell_k());
    res.c_form = SpecialPoly(SpecialPoly::Alphabet::c);
    auto tg = expand_raising_tagged(la.shape.parts(), K, d);
    for (const auto& [alpha, coef] : tg.untouched) {
        std::vector<int> rest = drop_slot(alpha, d);
        if (la.type == 2) {
            res.c_form.add(make_monomial(rest, 1), coef * scale);
        } else {
            // tau_k = c_k - tau'_k
            std::vector<int> with_k = rest;
            with_k.push_back(k);
            res.c_form.add(make_monomial(with_k), coef * scale);
            res.c_form.add(make_monomial(rest, 1), -coef * scale);
        }
    }
    for (const auto& [alpha, coef] : tg.touched)
        res.c_form.add(make_monomial(alpha), coef * scale / 2);
    res.tau_form = to_tau_form(res.c_form, k);
    return res;
}

GiambelliTilde giambelli_tilde(const KStrictPartition& la, int K) {
    const int k = la.k();
    if (K != 2 * k) throw std::invalid_argument("typed classes require K = 2k");
    if (!la.has_part(k)) throw std::invalid_argument("shape admits only one type");
    std::vector<int> mu = la.parts();
    mu.erase(std::find(mu.begin(), mu.end(), k));
    GiambelliTilde res;
    res.c_factor = SpecialPoly(SpecialPoly::Alphabet::c);
    const Rat scale = pow2(-la.ell_k());
    for (const auto& [alpha, coef] : expand_raising(mu, K + 1))
        res.c_factor.add(make_monomial(alpha), coef * scale);
    SpecialPoly diff(SpecialPoly::Alphabet::tau);  // tau_k - tau'_k
    diff.add(SpecialMonomial{{k}, 0}, Rat(1));
    diff.add(SpecialMonomial{{}, 1}, Rat(-1));
    res.tau_form = to_tau_form(res.c_factor, k) * diff;
    return res;
}

namespace {

// One term of the grouped rendering: subscripts descending, each subscript k
// printed as the two-generator sum, the degree-k marker (when present) sitting
// just before the first factor of subscript <= k.
std::string grouped_term(const std::vector<int>& subs, int k, int marker_type) {
    std::string out;
    bool marker_done = marker_type == 0;
    size_t i = 0;
    auto marker = [&] {
        out += marker_type == 1 ? "τ" + subscript(k) : "τ′" + subscript(k);
        marker_done = true;
    };
    static const char* sup[10] = {"⁰", "¹", "²", "³", "⁴",
                                  "⁵", "⁶", "⁷", "⁸", "⁹"};
    while (i < subs.size()) {
        size_t j = i;
        while (j < subs.size() && subs[j] == subs[i]) ++j;
        if (!marker_done && subs[i] <= k) marker();
        std::string base = subs[i] == k
                               ? "(τ" + subscript(k) + "+τ′" + subscript(k) + ")"
                               : "τ" + subscript(subs[i]);
        out += base;
        if (j - i > 1) out += sup[j - i];  // powers stay single digit here
        i = j;
    }
    if (!marker_done) marker();
    if (out.empty()) out = "1";
    return out;
}

}  // namespace

std::string giambelli_special_text(const TypedPartition& la, int K) {
    const int k = la.shape.k();
    if (K != 2 * k) throw std::invalid_argument("typed classes require K = 2k");
    const Rat scale = pow2(-la.shape.ell_k());

    // (coefficient, marker, descending subscripts) per rendered term
    std::vector<std::pair<Rat, std::pair<int, std::vector<int>>>> terms;
    auto push = [&](Rat coef, int marker, std::vector<int> subs) {
        std::erase(subs, 0);
        std::sort(subs.begin(), subs.end(), std::greater<int>());
        for (int p : subs)
            if (p > k) coef *= 2;
        for (auto& t : terms)
            if (t.second.first == marker && t.second.second == subs) {
                t.first += coef;
                return;
            }
        terms.emplace_back(std::move(coef), std::make_pair(marker, std::move(subs)));
    };

    if (la.type == 0) {
        for (const auto& [alpha, coef] : expand_raising(la.shape.parts(), K))
            push(coef * scale, 0, alpha);
    } else {
        const int d = la.shape.ell_k() + 1;
        auto tg = expand_raising_tagged(la.shape.parts(), K, d);
        for (const auto& [alpha, coef] : tg.untouched)
            push(coef * scale, la.type, drop_slot(alpha, d));
        for (const auto& [alpha, coef] : tg.touched) push(coef * scale / 2, 0, alpha);
    }

    std::erase_if(terms, [](const auto& t) { return t.first == 0; });
    // Untouched block first, then plain; each ascending by subscript vector.
    std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        const bool am = a.second.first != 0, bm = b.second.first != 0;
        if (am != bm) return am;
        return a.second.second < b.second.second;
    });

    for (const auto& t : terms)
        if (!is_integer(t.first))
            return to_tau_form(giambelli_special(la, K).c_form, k).text(k);

    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [coef, rest] : terms) {
        Rat a = coef < 0 ? Rat(-coef) : coef;
        if (first) {
            if (coef < 0) out += "-";
            first = false;
        } else {
            out += coef < 0 ? " - " : " + ";
        }
        if (a != 1) out += rat_str(a);
        out += grouped_term(rest.second, k, rest.first);
    }
    return out;
}

}  // namespace ogcalc

#include "ogcalc/specialpoly.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace ogcalc {

int SpecialMonomial::degree(int k) const {
    return std::accumulate(g.begin(), g.end(), 0) + k * tkp;
}

SpecialMonomial make_monomial(std::vector<int> subscripts, int tkp) {
    std::erase(subscripts, 0);
    for (int s : subscripts)
        if (s < 0) throw std::invalid_argument("negative subscript in monomial");
    if (tkp < 0) throw std::invalid_argument("negative primed exponent");
    std::sort(subscripts.begin(), subscripts.end(), std::greater<int>());
    return SpecialMonomial{std::move(subscripts), tkp};
}

SpecialPoly SpecialPoly::one(Alphabet a) {
    SpecialPoly p(a);
    p.terms_.emplace(SpecialMonomial{}, Rat(1));
    return p;
}

SpecialPoly SpecialPoly::term(Alphabet a, SpecialMonomial m, Rat coef) {
    SpecialPoly p(a);
    p.add(m, coef);
    return p;
}

void SpecialPoly::add(const SpecialMonomial& m, const Rat& coef) {
    if (coef == 0) return;
    auto [it, fresh] = terms_.try_emplace(m, coef);
    if (!fresh) {
        it->second += coef;
        if (it->second == 0) terms_.erase(it);
    }
}

SpecialPoly& SpecialPoly::operator+=(const SpecialPoly& o) {
    if (alphabet_ != o.alphabet_ && !o.is_zero() && !is_zero())
        throw std::logic_error("alphabet mismatch in polynomial sum");
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

SpecialPoly& SpecialPoly::operator-=(const SpecialPoly& o) {
    if (alphabet_ != o.alphabet_ && !o.is_zero() && !is_zero())
        throw std::logic_error("alphabet mismatch in polynomial difference");
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
}

SpecialPoly& SpecialPoly::operator*=(const Rat& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
}

SpecialPoly SpecialPoly::operator*(const SpecialPoly& o) const {
    if (alphabet_ != o.alphabet_ && !o.is_zero() && !is_zero())
        throw std::logic_error("alphabet mismatch in polynomial product");
    SpecialPoly out(alphabet_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            std::vector<int> g = ma.g;
            g.insert(g.end(), mb.g.begin(), mb.g.end());
            out.add(make_monomial(std::move(g), ma.tkp + mb.tkp), ca * cb);
        }
    return out;
}

bool SpecialPoly::integer_coefficients() const {
    for (const auto& [m, c] : terms_)
        if (!is_integer(c)) return false;
    return true;
}

Rat SpecialPoly::coefficient(const SpecialMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

std::string subscript(int n) {
    static const char* digits[10] = {"₀", "₁", "₂", "₃", "₄",
                                     "₅", "₆", "₇", "₈", "₉"};
    if (n < 0) throw std::invalid_argument("negative subscript");
    std::string out;
    for (char d : std::to_string(n)) out += digits[d - '0'];
    return out;
}

namespace {

std::string superscript(int n) {
    static const char* digits[10] = {"⁰", "¹", "²", "³", "⁴",
                                     "⁵", "⁶", "⁷", "⁸", "⁹"};
    std::string out;
    for (char d : std::to_string(n)) out += digits[d - '0'];
    return out;
}

std::string monomial_text(const SpecialMonomial& m, int k, const char* sym) {
    std::string out;
    auto emit = [&](const std::string& base, int exp) {
        out += base;
        if (exp > 1) out += superscript(exp);
    };
    size_t i = 0;
    bool primed_done = m.tkp == 0;
    while (i < m.g.size()) {
        size_t j = i;
        while (j < m.g.size() && m.g[j] == m.g[i]) ++j;
        if (!primed_done && m.g[i] < k) {
            emit(std::string("τ′") + subscript(k), m.tkp);
            primed_done = true;
        }
        emit(sym + subscript(m.g[i]), static_cast<int>(j - i));
        i = j;
    }
    if (!primed_done) emit(std::string("τ′") + subscript(k), m.tkp);
    if (out.empty()) out = "1";
    return out;
}

}  // namespace

std::string SpecialPoly::text(int k) const {
    if (terms_.empty()) return "0";
    const char* sym = alphabet_ == Alphabet::c ? "c" : "τ";
    // Deterministic order: ascending lexicographic on subscripts, primed last.
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rat a = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (a != 1) out += rat_str(a) + " ";
        out += monomial_text(m, k, sym);
    }
    return out;
}

SpecialPoly to_tau_form(const SpecialPoly& cform, int k) {
    if (cform.alphabet() != SpecialPoly::Alphabet::c)
        throw std::logic_error("to_tau_form expects the Chern alphabet");
    SpecialPoly out(SpecialPoly::Alphabet::tau);
    for (const auto& [m, coef] : cform.terms()) {
        // Each subscript p == k doubles the term count; others rescale.
        std::vector<SpecialMonomial> mons{SpecialMonomial{{}, m.tkp}};
        Rat scale = coef;
        for (int p : m.g) {
            if (p == k) {
                std::vector<SpecialMonomial> next;
                next.reserve(2 * mons.size());
                for (const auto& b : mons) {
                    SpecialMonomial plain = b;
                    plain.g.push_back(k);
                    next.push_back(std::move(plain));
                    SpecialMonomial primed = b;
                    ++primed.tkp;
                    next.push_back(std::move(primed));
                }
                mons = std::move(next);
            } else {
                if (p > k) scale *= 2;
                for (auto& b : mons) b.g.push_back(p);
            }
        }
        for (auto& b : mons) {
            std::sort(b.g.begin(), b.g.end(), std::greater<int>());
            out.add(b, scale);
        }
    }
    return out;
}

}  // namespace ogcalc

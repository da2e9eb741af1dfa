#include "ogcalc/mpoly.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace ogcalc {

namespace {

std::vector<int> sorted_partition(std::vector<int> v) {
    for (int e : v)
        if (e < 0) throw std::invalid_argument("negative exponent in orbit key");
    std::sort(v.begin(), v.end(), std::greater<int>());
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

int weight(const std::vector<int>& v) {
    int s = 0;
    for (int e : v) s += e;
    return s;
}

mpz_class factorial(int n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

/// Distinct ways to place the parts of partition p into `slots` labelled
/// slots, empty slots reading 0: slots! / (prod_v mult_v! * (slots-len)!).
mpz_class arrangement_count(const std::vector<int>& p, int slots) {
    mpz_class num = factorial(slots);
    mpz_class den = factorial(slots - static_cast<int>(p.size()));
    for (std::size_t i = 0; i < p.size();) {
        std::size_t j = i;
        while (j < p.size() && p[j] == p[i]) ++j;
        den *= factorial(static_cast<int>(j - i));
        i = j;
    }
    return num / den;
}

using MProd = std::map<std::vector<int>, Rat>;

/// Structure constants of m_a * m_b in the orbit-sum basis.  They depend on
/// the ambient variable count only through L = min(len(a)+len(b), vars): a
/// product key can never need more than len(a)+len(b) slots, so one table
/// serves every block that is at least that wide.
///
/// Counting argument: fix the dominant arrangement of a in L slots and add
/// every distinct arrangement of b; the tally of a sorted outcome nu, times
/// |arrangements(a)| / |arrangements(nu)|, counts the pairs of arrangements
/// summing to the dominant representative of nu, which is the coefficient of
/// m_nu.
const MProd& m_product(const std::vector<int>& a, const std::vector<int>& b, int vars) {
    static std::map<std::tuple<std::vector<int>, std::vector<int>, int>, MProd> cache;
    static std::mutex mu;

    const int L = std::min(static_cast<int>(a.size() + b.size()), vars);
    const std::vector<int>& lo = (a <= b) ? a : b;
    const std::vector<int>& hi = (a <= b) ? b : a;
    std::tuple<std::vector<int>, std::vector<int>, int> key(lo, hi, L);

    {
        std::scoped_lock lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }

    // Enumerate arrangements of whichever factor has fewer of them.
    mpz_class arr_lo = arrangement_count(lo, L);
    mpz_class arr_hi = arrangement_count(hi, L);
    const std::vector<int>& fixed = (arr_lo <= arr_hi) ? hi : lo;
    const std::vector<int>& moved = (arr_lo <= arr_hi) ? lo : hi;
    const mpz_class& arr_fixed = (arr_lo <= arr_hi) ? arr_hi : arr_lo;

    std::vector<int> cur(static_cast<std::size_t>(L), 0);
    std::copy(fixed.begin(), fixed.end(), cur.begin());

    // Groups of equal parts of `moved`; each group picks an increasing slot set.
    std::vector<std::pair<int, int>> groups;  // (value, multiplicity)
    for (std::size_t i = 0; i < moved.size();) {
        std::size_t j = i;
        while (j < moved.size() && moved[j] == moved[i]) ++j;
        groups.emplace_back(moved[i], static_cast<int>(j - i));
        i = j;
    }

    std::map<std::vector<int>, mpz_class> tally;
    std::vector<char> used(static_cast<std::size_t>(L), 0);
    std::function<void(std::size_t)> place_group = [&](std::size_t g) {
        if (g == groups.size()) {
            std::vector<int> nu = cur;
            std::sort(nu.begin(), nu.end(), std::greater<int>());
            while (!nu.empty() && nu.back() == 0) nu.pop_back();
            tally[std::move(nu)] += 1;
            return;
        }
        auto [value, mult] = groups[g];
        std::vector<int> pos(static_cast<std::size_t>(mult));
        std::function<void(int, int)> choose = [&](int start, int left) {
            if (left == 0) {
                place_group(g + 1);
                return;
            }
            for (int s = start; s <= L - left; ++s) {
                if (used[static_cast<std::size_t>(s)]) continue;
                used[static_cast<std::size_t>(s)] = 1;
                cur[static_cast<std::size_t>(s)] += value;
                choose(s + 1, left - 1);
                cur[static_cast<std::size_t>(s)] -= value;
                used[static_cast<std::size_t>(s)] = 0;
            }
        };
        choose(0, mult);
    };
    place_group(0);

    MProd out;
    for (auto& [nu, count] : tally) {
        mpz_class num = count * arr_fixed;
        mpz_class den = arrangement_count(nu, L);
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        if (r != 0) throw std::logic_error("orbit product coefficient is not an integer");
        out[nu] = Rat(q);
    }

    std::scoped_lock lock(mu);
    return cache.emplace(std::move(key), std::move(out)).first->second;
}

}  // namespace

VarConfig::VarConfig(int d_, int k_, int degcap_) : d(d_), k(k_), degcap(degcap_) {
    if (d < 0 || k < 0 || degcap < 0) throw std::invalid_argument("negative variable config");
    if (d < degcap) throw std::invalid_argument("need d >= degcap for a faithful x block");
}

MPoly MPoly::one(const VarConfig& cfg) {
    MPoly p(cfg);
    p.terms_[OrbitKey{}] = 1;
    return p;
}

void MPoly::add(std::vector<int> a, std::vector<int> b, const Rat& c) {
    if (c == 0) return;
    OrbitKey key{sorted_partition(std::move(a)), sorted_partition(std::move(b))};
    if (static_cast<int>(key.x.size()) > cfg_.d) return;
    if (static_cast<int>(key.y.size()) > cfg_.k) return;
    if (weight(key.x) + weight(key.y) > cfg_.degcap) return;
    Rat& slot = terms_[key];
    slot += c;
    if (slot == 0) terms_.erase(key);
}

Rat MPoly::coefficient(const OrbitKey& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rat(0) : it->second;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    if (!(cfg_ == o.cfg_)) throw std::invalid_argument("mixed variable configs");
    for (const auto& [key, c] : o.terms_) {
        Rat& slot = terms_[key];
        slot += c;
        if (slot == 0) terms_.erase(key);
    }
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    if (!(cfg_ == o.cfg_)) throw std::invalid_argument("mixed variable configs");
    for (const auto& [key, c] : o.terms_) {
        Rat& slot = terms_[key];
        slot -= c;
        if (slot == 0) terms_.erase(key);
    }
    return *this;
}

MPoly& MPoly::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, v] : terms_) v *= c;
    return *this;
}

MPoly operator*(const MPoly& l, const MPoly& r) {
    if (!(l.cfg_ == r.cfg_)) throw std::invalid_argument("mixed variable configs");
    const VarConfig& cfg = l.cfg_;
    MPoly out(cfg);
    for (const auto& [ka, ca] : l.terms_) {
        const int da = weight(ka.x) + weight(ka.y);
        for (const auto& [kb, cb] : r.terms_) {
            if (da + weight(kb.x) + weight(kb.y) > cfg.degcap) continue;
            const Rat cab = ca * cb;
            const MProd& px = m_product(ka.x, kb.x, cfg.d);
            const MProd& py = m_product(ka.y, kb.y, cfg.k);
            for (const auto& [nx, cx] : px) {
                if (static_cast<int>(nx.size()) > cfg.d) continue;
                const Rat cxab = cab * cx;
                for (const auto& [ny, cy] : py) {
                    if (static_cast<int>(ny.size()) > cfg.k) continue;
                    OrbitKey key{nx, ny};
                    Rat& slot = out.terms_[key];
                    slot += cxab * cy;
                    if (slot == 0) out.terms_.erase(key);
                }
            }
        }
    }
    return out;
}

bool MPoly::integer_coefficients() const {
    for (const auto& [key, c] : terms_)
        if (!is_integer(c)) return false;
    return true;
}

int MPoly::degree() const {
    int d = -1;
    for (const auto& [key, c] : terms_) d = std::max(d, weight(key.x) + weight(key.y));
    return d;
}

MPoly MPoly::homogeneous_part(int deg) const {
    MPoly out(cfg_);
    for (const auto& [key, c] : terms_)
        if (weight(key.x) + weight(key.y) == deg) out.terms_[key] = c;
    return out;
}

MPoly MPoly::y_zero() const {
    MPoly out(cfg_);
    for (const auto& [key, c] : terms_)
        if (key.y.empty()) out.terms_[key] = c;
    return out;
}

std::string MPoly::text() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << rat_str(c);
        if (!key.x.empty() || !key.y.empty()) {
            os << "*m[";
            for (std::size_t i = 0; i < key.x.size(); ++i) os << (i ? "," : "") << key.x[i];
            os << "|";
            for (std::size_t i = 0; i < key.y.size(); ++i) os << (i ? "," : "") << key.y[i];
            os << "]";
        }
    }
    return os.str();
}

}  // namespace ogcalc

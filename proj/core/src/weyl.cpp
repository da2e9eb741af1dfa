#include "ogcalc/weyl.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "ogcalc/symfunc.hpp"

namespace ogcalc {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::domain_error(msg);
}

}  // namespace

SignedPermutation::SignedPermutation(std::vector<int> images) : img_(std::move(images)) {
    const int n = static_cast<int>(img_.size());
    std::vector<char> seen(n + 1, 0);
    int bars = 0;
    for (int v : img_) {
        require(v != 0 && std::abs(v) <= n, "signed permutation image out of range");
        require(!seen[std::abs(v)], "signed permutation image repeated");
        seen[std::abs(v)] = 1;
        if (v < 0) ++bars;
    }
    require(bars % 2 == 0, "signed permutation needs an even number of bars");
}

SignedPermutation SignedPermutation::simple(int r) {
    require(r >= 0, "simple reflection index must be nonnegative");
    if (r == 0) return SignedPermutation({-2, -1});
    std::vector<int> img(r + 1);
    std::iota(img.begin(), img.end(), 1);
    std::swap(img[r - 1], img[r]);
    return SignedPermutation(std::move(img));
}

int SignedPermutation::operator()(int i) const {
    return i <= size() ? img_[i - 1] : i;
}

int SignedPermutation::length() const {
    const int n = size();
    int len = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (img_[i] > img_[j]) ++len;
            if (img_[i] + img_[j] < 0) ++len;
        }
    return len;
}

bool SignedPermutation::has_descent(int r) const {
    if (r == 0) return (*this)(1) + (*this)(2) < 0;
    return (*this)(r) > (*this)(r + 1);
}

std::vector<int> SignedPermutation::descents() const {
    std::vector<int> out;
    for (int r = 0; r < size(); ++r)
        if (has_descent(r)) out.push_back(r);
    return out;
}

bool SignedPermutation::is_grassmannian(int k) const {
    for (int r : descents()) {
        if (k == 1) {
            if (r >= 2) return false;
        } else if (r != k) {
            return false;
        }
    }
    return true;
}

bool SignedPermutation::is_unbarred() const {
    return std::all_of(img_.begin(), img_.end(), [](int v) { return v > 0; });
}

SignedPermutation SignedPermutation::right_mul(int r) const {
    const int need = std::max(size(), r == 0 ? 2 : r + 1);
    std::vector<int> img(img_);
    for (int i = size(); i < need; ++i) img.push_back(i + 1);
    if (r == 0) {
        std::swap(img[0], img[1]);
        img[0] = -img[0];
        img[1] = -img[1];
    } else {
        std::swap(img[r - 1], img[r]);
    }
    return SignedPermutation(std::move(img));
}

SignedPermutation SignedPermutation::inverse() const {
    std::vector<int> img(img_.size());
    for (int i = 0; i < size(); ++i) {
        const int v = img_[i];
        img[std::abs(v) - 1] = v > 0 ? i + 1 : -(i + 1);
    }
    return SignedPermutation(std::move(img));
}

SignedPermutation operator*(const SignedPermutation& u, const SignedPermutation& v) {
    const int n = std::max(u.size(), v.size());
    std::vector<int> img(n);
    for (int i = 1; i <= n; ++i) {
        const int j = v(i);
        img[i - 1] = j > 0 ? u(j) : -u(-j);
    }
    return SignedPermutation(std::move(img));
}

SignedPermutation SignedPermutation::trimmed() const {
    std::vector<int> img(img_);
    while (!img.empty() && img.back() == static_cast<int>(img.size())) img.pop_back();
    return SignedPermutation(std::move(img));
}

std::string SignedPermutation::text() const {
    std::string out;
    for (int i = 0; i < size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(img_[i]);
    }
    return out;
}

SignedPermutation SignedPermutation::from_text(const std::string& s) {
    std::istringstream in(s);
    std::vector<int> img;
    int v = 0;
    while (in >> v) img.push_back(v);
    require(in.eof(), "unparsable signed permutation text");
    return SignedPermutation(std::move(img));
}

namespace {

void words_dfs(const SignedPermutation& w, std::vector<int>& tail, std::vector<std::vector<int>>& out) {
    bool terminal = true;
    for (int r = 0; r < w.size(); ++r) {
        if (!w.has_descent(r)) continue;
        terminal = false;
        tail.push_back(r);
        words_dfs(w.right_mul(r), tail, out);
        tail.pop_back();
    }
    if (terminal) {
        // tail holds the letters last-first
        out.emplace_back(tail.rbegin(), tail.rend());
    }
}

}  // namespace

std::vector<std::vector<int>> reduced_words(const SignedPermutation& w) {
    std::vector<std::vector<int>> out;
    std::vector<int> tail;
    words_dfs(w, tail, out);
    return out;
}

std::vector<int> flatten_word(std::vector<int> word) {
    for (int& a : word)
        if (a == 0) a = 1;
    return word;
}

std::vector<std::vector<int>> flattened_words(const SignedPermutation& w) {
    std::set<std::vector<int>> dedup;
    for (auto& word : reduced_words(w)) dedup.insert(flatten_word(std::move(word)));
    return {dedup.begin(), dedup.end()};
}

SignedPermutation partition_perm(const TypedPartition& la, int n) {
    const KStrictPartition& sh = la.shape;
    const int k = sh.k();
    if (n < 0) n = std::max(sh.length() + k, sh.part(1) - k);
    if (k >= 1) {
        require(k <= n, "window too small for the k value");
        require(sh.fits(GrassParams::even_kn(k, n)), "shape does not fit the window");
    } else {
        require(sh.length() <= n && sh.part(1) <= n, "shape does not fit the window");
    }

    const DerivedShapes ds = derived_shapes(la);
    const std::vector<int> r = marked_diagonal_lengths(sh);
    const int p = static_cast<int>(ds.lambda1.size());

    std::vector<char> used(n + 1, 0);
    for (int v : r)
        if (v > 0) used[v] = 1;
    for (int v : ds.lambda1) used[v] = 1;
    std::vector<int> u;
    for (int v = 1; v <= n; ++v)
        if (!used[v]) u.push_back(v);

    std::vector<int> img;
    img.reserve(n + 1);
    int bars = p;  // entries barred so far, before the parity slot
    if (la.type != 0) {
        for (int v : r) img.push_back(v + 1);
        for (int v : ds.lambda1) img.push_back(-(v + 1));
        if (la.type == 2) {
            img[0] = -img[0];
            ++bars;
        }
        img.push_back(bars % 2 == 0 ? 1 : -1);
    } else if (k >= 1) {
        if (r.front() != 0) throw std::logic_error("type-0 shape lacks a zero marked diagonal");
        img.push_back(bars % 2 == 0 ? 1 : -1);
        for (int i = 1; i < k; ++i) img.push_back(r[i] + 1);
        for (int v : ds.lambda1) img.push_back(-(v + 1));
    } else {
        for (int v : ds.lambda1) img.push_back(-(v + 1));
        img.push_back(bars % 2 == 0 ? 1 : -1);
    }
    for (int v : u) img.push_back(v + 1);

    if (static_cast<int>(img.size()) != n + 1)
        throw std::logic_error("window entries collide in the Grassmannian construction");
    SignedPermutation w{std::move(img)};
    if (w.length() != sh.weight())
        throw std::logic_error("Grassmannian element length differs from the shape weight");
    return w;
}

TypedPartition perm_partition(const SignedPermutation& w, int k) {
    require(w.is_grassmannian(k), "element is not k-Grassmannian");
    const SignedPermutation target = w.trimmed();
    for (const TypedPartition& la : enumerate_typed_weight(k, target.length()))
        if (partition_perm(la).trimmed() == target) return la;
    throw std::domain_error("no typed shape indexes this element");
}

namespace {

/// Longest unimodal subsequence: strictly decreasing then strictly
/// increasing, where the valley may repeat only the value 1.
int max_unimodal(const int* a, int m) {
    if (m == 0) return 0;
    std::vector<int> dec(m, 1), inc(m, 1);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < i; ++j)
            if (a[j] > a[i]) dec[i] = std::max(dec[i], dec[j] + 1);
    for (int i = m - 1; i >= 0; --i)
        for (int j = i + 1; j < m; ++j)
            if (a[j] > a[i]) inc[i] = std::max(inc[i], inc[j] + 1);
    int best = 0;
    for (int i = 0; i < m; ++i) best = std::max(best, dec[i] + inc[i] - 1);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (a[i] == 1 && a[j] == 1) best = std::max(best, dec[i] + inc[j]);
    return best;
}

int branching_exponent(const std::vector<std::vector<int>>& rows_bottom_first) {
    // Track the image of 1 under the growing prefix product of the row word;
    // right multiplication by s_a swaps entries a, a+1 of the image vector.
    std::vector<int> perm{1, 2};
    std::set<int> values{1};
    int nrows = 0;
    for (const auto& row : rows_bottom_first) {
        ++nrows;
        for (int a : row) {
            while (static_cast<int>(perm.size()) <= a) perm.push_back(static_cast<int>(perm.size()) + 1);
            std::swap(perm[a - 1], perm[a]);
            values.insert(perm[0]);
        }
    }
    const int m = nrows + 1 - static_cast<int>(values.size());
    if (m < 0) throw std::logic_error("negative branching exponent");
    return m;
}

void cut_dfs(const std::vector<int>& word, int pos, std::vector<std::vector<int>>& rows,
             std::vector<KLTableau>& out) {
    const int L = static_cast<int>(word.size());
    if (pos == L) {
        KLTableau t;
        t.rows.assign(rows.rbegin(), rows.rend());
        for (const auto& row : t.rows) t.shape.push_back(static_cast<int>(row.size()));
        for (size_t i = 1; i < t.shape.size(); ++i)
            if (t.shape[i - 1] <= t.shape[i]) throw std::logic_error("tableau shape is not strict");
        t.m = branching_exponent(rows);
        out.push_back(std::move(t));
        return;
    }
    const int prev = rows.empty() ? 1 : static_cast<int>(rows.back().size());
    for (int len = prev; pos + len <= L; ++len) {
        if (max_unimodal(word.data() + pos, len) != len) continue;  // segment not unimodal
        if (max_unimodal(word.data(), pos + len) != len) continue;  // not of maximum length
        rows.emplace_back(word.begin() + pos, word.begin() + pos + len);
        cut_dfs(word, pos + len, rows, out);
        rows.pop_back();
    }
}

}  // namespace

std::vector<KLTableau> kl_tableaux(const SignedPermutation& w) {
    std::vector<KLTableau> out;
    for (const auto& word : flattened_words(w)) {
        std::vector<std::vector<int>> rows;
        cut_dfs(word, 0, rows, out);
    }
    std::sort(out.begin(), out.end(), [](const KLTableau& a, const KLTableau& b) {
        return std::tie(a.shape, a.rows) < std::tie(b.shape, b.rows);
    });
    return out;
}

std::vector<KLTableau> kl_tableaux(const SignedPermutation& w, const std::vector<int>& shape) {
    std::vector<KLTableau> out;
    for (auto& t : kl_tableaux(w))
        if (t.shape == shape) out.push_back(std::move(t));
    return out;
}

MPoly stanley_E(const SignedPermutation& w, const VarConfig& cfg) {
    MPoly out(cfg);
    for (const auto& t : kl_tableaux(w)) {
        Rat c(1);
        for (int i = 0; i < t.m; ++i) c *= 2;
        out += c * family(Family::P, t.shape, cfg);
    }
    return out;
}

namespace {

std::vector<int> trim_perm(std::vector<int> v) {
    while (!v.empty() && v.back() == static_cast<int>(v.size())) v.pop_back();
    return v;
}

void zadd(ZPoly& f, std::vector<int> key, const Rat& c) {
    while (!key.empty() && key.back() == 0) key.pop_back();
    Rat& slot = f[key];
    slot += c;
    if (slot == Rat(0)) f.erase(key);
}

/// Divided difference: (f - s_i f) / (z_i - z_{i+1}) acting on monomials.
ZPoly divided_difference(const ZPoly& f, int i) {
    ZPoly out;
    for (const auto& [key, c] : f) {
        const int sz = static_cast<int>(key.size());
        const int p = i <= sz ? key[i - 1] : 0;
        const int q = i + 1 <= sz ? key[i] : 0;
        if (p == q) continue;
        std::vector<int> mono(key);
        if (static_cast<int>(mono.size()) < i + 1) mono.resize(i + 1, 0);
        if (p > q) {
            for (int j = 0; j < p - q; ++j) {
                mono[i - 1] = p - 1 - j;
                mono[i] = q + j;
                zadd(out, mono, c);
            }
        } else {
            for (int j = 0; j < q - p; ++j) {
                mono[i - 1] = p + j;
                mono[i] = q - 1 - j;
                zadd(out, mono, -c);
            }
        }
    }
    return out;
}

}  // namespace

ZPoly schubert_A(const std::vector<int>& v) {
    {
        std::vector<char> seen(v.size() + 1, 0);
        for (int x : v) {
            require(x >= 1 && x <= static_cast<int>(v.size()) && !seen[x], "not a permutation window");
            seen[x] = 1;
        }
    }

    static std::map<std::vector<int>, ZPoly> cache;
    static std::mutex cache_mutex;

    const std::vector<int> key = trim_perm(v);
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }

    ZPoly result;
    const int n = static_cast<int>(key.size());
    if (n == 0) {
        result.emplace(std::vector<int>{}, Rat(1));
    } else {
        int ascent = 0;
        for (int i = 1; i < n; ++i)
            if (key[i - 1] < key[i]) {
                ascent = i;
                break;
            }
        if (ascent == 0) {
            // the window is the longest element: staircase monomial
            std::vector<int> mono(n - 1);
            for (int i = 0; i < n - 1; ++i) mono[i] = n - 1 - i;
            result.emplace(std::move(mono), Rat(1));
        } else {
            std::vector<int> up(key);
            std::swap(up[ascent - 1], up[ascent]);
            result = divided_difference(schubert_A(up), ascent);
        }
    }

    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.emplace(key, std::move(result)).first->second;
}

std::vector<int> a_grassmannian_perm(const std::vector<int>& nu, int k) {
    require(nu.empty() || nu.front() <= k, "partition exceeds the k-column bound");
    const std::vector<int> conj = conjugate(nu);
    const int rows = conj.empty() ? 0 : conj.front();
    std::vector<int> img(k + rows);
    std::vector<char> used(k + rows + 1, 0);
    for (int i = 1; i <= k; ++i) {
        const int c = k - i < static_cast<int>(conj.size()) ? conj[k - i] : 0;
        img[i - 1] = c + i;
        used[c + i] = 1;
    }
    int next = 1;
    for (int i = k; i < k + rows; ++i) {
        while (used[next]) ++next;
        img[i] = next;
        used[next] = 1;
    }
    return trim_perm(std::move(img));
}

MPoly z_to_y(const ZPoly& f, const VarConfig& cfg) {
    struct Orbit {
        Rat coef;
        int count = 0;
    };
    std::map<std::vector<int>, Orbit> orbits;
    for (const auto& [key, c] : f) {
        require(static_cast<int>(key.size()) <= cfg.k, "z support exceeds the y block");
        std::vector<int> shape(key);
        std::sort(shape.begin(), shape.end(), std::greater<>());
        while (!shape.empty() && shape.back() == 0) shape.pop_back();
        auto [it, fresh] = orbits.try_emplace(shape, Orbit{c, 1});
        if (!fresh) {
            require(it->second.coef == c, "polynomial is not symmetric in the y block");
            ++it->second.count;
        }
    }
    MPoly out(cfg);
    for (const auto& [shape, orbit] : orbits) {
        // all slot arrangements of the shape must be present
        long expected = 1;
        for (int i = 0; i < static_cast<int>(shape.size()); ++i) expected = expected * (cfg.k - i);
        long mults = 1;
        for (size_t i = 0, j = 0; i < shape.size(); i = j) {
            for (j = i; j < shape.size() && shape[j] == shape[i]; ++j) mults *= static_cast<long>(j - i + 1);
        }
        require(orbit.count == expected / mults, "polynomial is not symmetric in the y block");
        MPoly term(cfg);
        term.add({}, shape, orbit.coef);
        out += term;
    }
    return out;
}

MPoly billey_haiman_D(const SignedPermutation& w, const VarConfig& cfg) {
    std::map<std::vector<int>, SignedPermutation> factors;  // v window -> u
    const SignedPermutation id{};

    auto dfs = [&](auto&& self, const SignedPermutation& u, const SignedPermutation& v) -> void {
        if (!factors.emplace(v.trimmed().images(), u.trimmed()).second) return;
        const int lv = v.length();
        for (int r : u.descents()) {
            if (r == 0) continue;
            SignedPermutation v2 = SignedPermutation::simple(r) * v;
            if (v2.length() != lv + 1) continue;
            self(self, u.right_mul(r), v2);
        }
    };
    dfs(dfs, w, id);

    MPoly out(cfg);
    for (const auto& [vimg, u] : factors)
        out += stanley_E(u, cfg) * z_to_y(schubert_A(vimg), cfg);
    return out;
}

}  // namespace ogcalc

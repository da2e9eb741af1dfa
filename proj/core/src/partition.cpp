#include "ogcalc/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ogcalc {

GrassParams GrassParams::from_mN(int m, int N) {
    if (m < 1 || 2 * m >= N) throw std::domain_error("GrassParams: need 0 < 2m < N");
    GrassParams P;
    P.N = N;
    P.m = m;
    P.K = N - 2 * m;
    P.even = (N % 2 == 0);
    if (P.even) {
        if (P.K % 2 != 0 || P.K < 2) throw std::domain_error("GrassParams: even N needs K = 2k >= 2");
        P.k = P.K / 2;
        P.n = (N - 2) / 2;
    } else {
        P.k = (P.K - 1) / 2;
        P.n = (N - 1) / 2;
    }
    return P;
}

GrassParams GrassParams::even_kn(int k, int n) {
    if (k < 1 || k > n) throw std::domain_error("GrassParams: even space needs 1 <= k <= n");
    return from_mN(n + 1 - k, 2 * n + 2);
}

GrassParams GrassParams::odd_kn(int k, int n) {
    if (k < 0 || k >= n) throw std::domain_error("GrassParams: odd space needs 0 <= k < n");
    return from_mN(n - k, 2 * n + 1);
}

bool KStrictPartition::valid(const std::vector<int>& parts, int k) {
    if (k < 0) return false;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0) return false;
        if (i + 1 < parts.size()) {
            if (parts[i] < parts[i + 1]) return false;
            if (parts[i] > k && parts[i] == parts[i + 1]) return false;
        }
    }
    return true;
}

KStrictPartition::KStrictPartition(std::vector<int> parts, int k) : parts_(std::move(parts)), k_(k) {
    if (!valid(parts_, k_)) throw std::domain_error("not a k-strict partition");
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int KStrictPartition::part(int i) const {
    if (i < 1) throw std::out_of_range("part index is 1-based");
    return i <= length() ? parts_[i - 1] : 0;
}

int KStrictPartition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int KStrictPartition::ell_k() const {
    int c = 0;
    for (int p : parts_)
        if (p > k_) ++c;
    return c;
}

bool KStrictPartition::has_part(int v) const { return std::find(parts_.begin(), parts_.end(), v) != parts_.end(); }

bool KStrictPartition::fits(const GrassParams& P) const {
    if (k_ != P.k) return false;
    return length() <= P.m && (parts_.empty() || parts_[0] <= P.max_part());
}

TypedPartition::TypedPartition(KStrictPartition s, int t) : shape(std::move(s)), type(t) {
    if (t < 0 || t > 2) throw std::domain_error("type must be 0, 1 or 2");
    bool pk = shape.k() >= 1 && shape.has_part(shape.k());
    if (pk != (t > 0)) throw std::domain_error("type must be positive exactly when some part equals k");
}

std::vector<int> conjugate(const std::vector<int>& parts) {
    std::vector<int> c;
    if (parts.empty()) return c;
    c.resize(parts[0], 0);
    for (int p : parts)
        for (int j = 0; j < p; ++j) ++c[j];
    return c;
}

std::vector<int> marked_diagonal_lengths(const KStrictPartition& la) {
    const int k = la.k();
    std::vector<int> conj = conjugate(la.parts());
    conj.resize(std::max<size_t>(conj.size(), k), 0);
    std::vector<int> lens;
    for (int c = 1; c <= k; ++c) {
        int s = k + 1 + conj[c - 1] - c;  // diagonal marked by the bottom box of column c
        int len = 0;
        for (int r = 1; r <= s - 1; ++r)
            if (la.part(r) < k + s - r) ++len;
        lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end());
    return lens;
}

DerivedShapes derived_shapes(const TypedPartition& la) {
    const auto& p = la.shape.parts();
    const int k = la.shape.k();
    DerivedShapes d;
    if (!p.empty()) d.star.assign(p.begin() + 1, p.end());
    d.plus_k = p;
    d.plus_k.insert(std::upper_bound(d.plus_k.begin(), d.plus_k.end(), k, std::greater<int>()), k);
    if (la.shape.has_part(k) && k >= 1) {
        auto mk = p;
        mk.erase(std::find(mk.begin(), mk.end(), k));
        d.minus_k = mk;
    }
    for (int v : p) {
        if (v > k) d.lambda1.push_back(v - k);
        d.lambda2.push_back(std::min(v, k));
    }
    while (!d.lambda2.empty() && d.lambda2.back() == 0) d.lambda2.pop_back();
    if (la.type == 2) {
        auto lens = marked_diagonal_lengths(la.shape);
        int r1 = lens.empty() ? 0 : lens.front();
        auto l3 = d.lambda1;
        l3.insert(std::upper_bound(l3.begin(), l3.end(), r1, std::greater<int>()), r1);
        if (!KStrictPartition::valid(l3, 0)) throw std::logic_error("lambda3 is not strict");
        d.lambda3 = l3;
        auto c2 = conjugate(d.lambda2);
        c2.resize(std::max<size_t>(c2.size(), k), 0);
        if (c2[k - 1] < r1) throw std::logic_error("lambda4 underflow in column k");
        c2[k - 1] -= r1;
        d.lambda4 = conjugate(c2);
    }
    return d;
}

std::vector<int> index_bar(const KStrictPartition& la, const GrassParams& P) {
    if (!la.fits(P)) throw std::domain_error("partition does not fit the Schubert rectangle");
    std::vector<int> out;
    for (int j = 1; j <= P.m; ++j) {
        int cnt = 0;
        for (int i = 1; i <= j; ++i)
            if (la.part(i) + la.part(j) >= P.K + j - i && la.part(i) > P.k) ++cnt;
        out.push_back(P.N - P.m + j - la.part(j) - cnt);
    }
    return out;
}

std::vector<int> index_typed(const TypedPartition& la, const GrassParams& P) {
    if (!P.even) throw std::domain_error("typed index function needs even N");
    auto out = index_bar(la.shape, P);
    for (int j = 1; j <= P.m; ++j) {
        bool at_k = la.shape.part(j) == P.k && (j == 1 || la.shape.part(j - 1) > P.k);
        if (at_k && (P.n + j + la.type) % 2 == 0) out[j - 1] -= 1;
    }
    return out;
}

namespace {

void enum_rec(int k, int max_rows, int max_part, std::vector<int>& cur, std::vector<KStrictPartition>& out) {
    out.emplace_back(cur, k);
    if (static_cast<int>(cur.size()) >= max_rows) return;
    int hi = cur.empty() ? max_part : cur.back();
    for (int v = hi; v >= 1; --v) {
        if (v > k && !cur.empty() && cur.back() == v) continue;
        cur.push_back(v);
        enum_rec(k, max_rows, max_part, cur, out);
        cur.pop_back();
    }
}

void enum_weight_rec(int k, int remaining, int hi, std::vector<int>& cur, std::vector<KStrictPartition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur, k);
        return;
    }
    for (int v = std::min(hi, remaining); v >= 1; --v) {
        if (v > k && !cur.empty() && cur.back() == v) continue;
        cur.push_back(v);
        enum_weight_rec(k, remaining - v, v, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<KStrictPartition> enumerate_k_strict(int k, int max_rows, int max_part) {
    std::vector<KStrictPartition> out;
    std::vector<int> cur;
    enum_rec(k, max_rows, max_part, cur, out);
    return out;
}

std::vector<KStrictPartition> enumerate_k_strict_weight(int k, int weight) {
    if (weight < 0) return {};
    std::vector<KStrictPartition> out;
    std::vector<int> cur;
    enum_weight_rec(k, weight, weight, cur, out);
    return out;
}

std::vector<TypedPartition> typed_versions(const KStrictPartition& la) {
    if (la.k() >= 1 && la.has_part(la.k())) return {TypedPartition(la, 1), TypedPartition(la, 2)};
    return {TypedPartition(la, 0)};
}

std::vector<TypedPartition> enumerate_typed(const GrassParams& P) {
    if (!P.even) throw std::domain_error("typed enumeration needs even N");
    std::vector<TypedPartition> out;
    for (auto& la : enumerate_k_strict(P.k, P.m, P.max_part()))
        for (auto& t : typed_versions(la)) out.push_back(t);
    return out;
}

std::vector<TypedPartition> enumerate_typed_weight(int k, int weight) {
    std::vector<TypedPartition> out;
    for (auto& la : enumerate_k_strict_weight(k, weight))
        for (auto& t : typed_versions(la)) out.push_back(t);
    return out;
}

std::string to_text(const TypedPartition& la) {
    std::ostringstream os;
    os << "k=" << la.shape.k() << ":[";
    const auto& p = la.shape.parts();
    for (size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
    os << "]:t" << la.type;
    return os.str();
}

TypedPartition typed_from_text(const std::string& s) {
    auto fail = [&] { throw std::invalid_argument("bad typed partition literal: " + s); };
    size_t b = s.find("k="), lb = s.find('['), rb = s.find(']'), tp = s.rfind(":t");
    if (b != 0 || lb == std::string::npos || rb == std::string::npos || tp == std::string::npos || tp < rb) fail();
    int k = std::stoi(s.substr(2, lb - 3));
    std::vector<int> parts;
    std::string body = s.substr(lb + 1, rb - lb - 1);
    std::istringstream is(body);
    std::string tok;
    while (std::getline(is, tok, ','))
        if (!tok.empty()) parts.push_back(std::stoi(tok));
    int type = std::stoi(s.substr(tp + 2));
    return TypedPartition(std::move(parts), k, type);
}

}  // namespace ogcalc

#include "ogcalc/indexsets.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace ogcalc {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::domain_error(msg);
}

}  // namespace

IndexSet::IndexSet(std::vector<int> elements, GrassParams params)
    : elems_(std::move(elements)), params_(params) {
    require(static_cast<int>(elems_.size()) == params_.m, "index set size differs from m");
    require(std::is_sorted(elems_.begin(), elems_.end()), "index set must be sorted");
    for (size_t a = 0; a < elems_.size(); ++a) {
        require(elems_[a] >= 1 && elems_[a] <= params_.N, "index set element out of range");
        for (size_t b = a; b < elems_.size(); ++b) {
            require(a == b || elems_[a] != elems_[b], "index set element repeated");
            require(elems_[a] + elems_[b] != params_.N + 1, "index set contains a reflected pair");
        }
    }
}

bool IndexSet::contains(int p) const {
    return std::binary_search(elems_.begin(), elems_.end(), p);
}

std::string IndexSet::text() const {
    std::string out;
    for (size_t i = 0; i < elems_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(elems_[i]);
    }
    return out;
}

IndexSet IndexSet::from_text(const std::string& s, GrassParams params) {
    std::vector<int> elems;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) elems.push_back(std::stoi(tok));
    return IndexSet(std::move(elems), params);
}

int type_of(const IndexSet& P) {
    const GrassParams& g = P.params();
    if (!g.even) return 0;
    if (!P.contains(g.n + 1) && !P.contains(g.n + 2)) return 0;
    int missing = 0;
    for (int v = 1; v <= g.n + 1; ++v)
        if (!P.contains(v)) ++missing;
    return 1 + missing % 2;
}

IndexSet index_set_of(const TypedPartition& la, const GrassParams& params) {
    require(params.even, "typed index sets need an even-dimensional space");
    return IndexSet(index_typed(la, params), params);
}

IndexSet index_set_of(const KStrictPartition& la, const GrassParams& params) {
    return IndexSet(index_bar(la, params), params);
}

namespace {

/// Bijection tables built by enumerating the rectangle, cached per space.
struct BijectionTables {
    std::map<std::vector<int>, TypedPartition> typed;   // even N
    std::map<std::vector<int>, KStrictPartition> bare;  // barred sets, either parity
};

const BijectionTables& tables_for(const GrassParams& params) {
    static std::map<std::pair<int, int>, BijectionTables> cache;
    static std::mutex cache_mutex;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto [it, fresh] = cache.try_emplace({params.N, params.m});
    if (fresh) {
        BijectionTables& t = it->second;
        if (params.even)
            for (const TypedPartition& la : enumerate_typed(params))
                if (!t.typed.emplace(index_typed(la, params), la).second)
                    throw std::logic_error("typed index function is not injective");
        for (const KStrictPartition& la : enumerate_k_strict(params.k, params.m, params.max_part()))
            if (!t.bare.emplace(index_bar(la, params), la).second)
                throw std::logic_error("barred index function is not injective");
    }
    return it->second;
}

}  // namespace

TypedPartition partition_of(const IndexSet& P) {
    require(P.params().even, "typed shapes need an even-dimensional space");
    const auto& table = tables_for(P.params()).typed;
    const auto it = table.find(P.elements());
    if (it == table.end()) throw std::logic_error("index set missing from the typed bijection");
    return it->second;
}

KStrictPartition shape_of(const IndexSet& P) {
    require(!P.contains(P.params().n + 1), "barred index sets avoid n+1");
    const auto& table = tables_for(P.params()).bare;
    const auto it = table.find(P.elements());
    if (it == table.end()) throw std::logic_error("index set missing from the barred bijection");
    return it->second;
}

IndexSet bar(const IndexSet& P) {
    std::vector<int> elems(P.elements());
    for (int& v : elems)
        if (v == P.params().n + 1) v = P.params().n + 2;
    return IndexSet(std::move(elems), P.params());
}

std::set<int> bracket(const IndexSet& P) {
    std::set<int> out;
    for (int v : P.elements()) {
        out.insert(v);
        out.insert(P.params().N + 1 - v);
    }
    return out;
}

IndexSet iota(const IndexSet& P) {
    if (!P.params().even) return P;
    const int lo = P.params().n + 1, hi = P.params().n + 2;
    std::vector<int> elems(P.elements());
    for (int& v : elems) {
        if (v == lo)
            v = hi;
        else if (v == hi)
            v = lo;
    }
    std::sort(elems.begin(), elems.end());
    return IndexSet(std::move(elems), P.params());
}

bool leq(const IndexSet& Q, const IndexSet& P) {
    require(Q.params() == P.params(), "index sets from different spaces");
    for (int j = 1; j <= Q.params().m; ++j)
        if (Q.element(j) > P.element(j)) return false;
    return true;
}

std::optional<int> critical_index(const IndexSet& Q, const IndexSet& P) {
    require(Q.params() == P.params(), "index sets from different spaces");
    const int n = P.params().n;
    const std::set<int> bq = bracket(Q), bp = bracket(P);
    int in_q = 0, in_p = 0;  // element counts below c
    for (int c = 1; c <= n + 1; ++c) {
        bool tail = true;
        for (int x = c; x <= n + 1 && tail; ++x) tail = bq.count(x) && bp.count(x);
        if (tail && in_q == in_p) return c;
        in_q += Q.contains(c);
        in_p += P.contains(c);
    }
    return std::nullopt;
}

bool preceq(const IndexSet& Q, const IndexSet& P) {
    require(P.params().even, "the refined order applies to even-dimensional spaces");
    if (!leq(Q, P)) return false;
    if (critical_index(Q, P) && type_of(Q) != type_of(P)) return false;
    return true;
}

bool closure_leq(const IndexSet& Q, const IndexSet& P) {
    return P.params().even ? preceq(Q, P) : leq(Q, P);
}

std::vector<IndexSet> all_index_sets(const GrassParams& params) {
    std::vector<IndexSet> out;
    std::vector<int> elems;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(elems.size()) == params.m) {
            out.emplace_back(elems, params);
            return;
        }
        for (int v = next; v <= params.N; ++v) {
            bool ok = 2 * v != params.N + 1;
            for (int w : elems)
                if (w + v == params.N + 1) ok = false;
            if (!ok) continue;
            elems.push_back(v);
            self(self, v + 1);
            elems.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

std::vector<std::pair<IndexSet, IndexSet>> bruhat_covers(const GrassParams& params) {
    const std::vector<IndexSet> nodes = all_index_sets(params);
    const int V = static_cast<int>(nodes.size());
    std::vector<std::vector<char>> below(V, std::vector<char>(V, 0));
    for (int a = 0; a < V; ++a)
        for (int b = 0; b < V; ++b)
            if (a != b && closure_leq(nodes[a], nodes[b])) below[a][b] = 1;
    std::vector<std::pair<IndexSet, IndexSet>> covers;
    for (int a = 0; a < V; ++a)
        for (int b = 0; b < V; ++b) {
            if (!below[a][b]) continue;
            bool direct = true;
            for (int c = 0; c < V && direct; ++c)
                if (below[a][c] && below[c][b]) direct = false;
            if (direct) covers.emplace_back(nodes[a], nodes[b]);
        }
    return covers;
}

std::string poset_edges_text(const GrassParams& params) {
    std::string out;
    for (const auto& [lo, hi] : bruhat_covers(params)) {
        out += lo.text();
        out += " < ";
        out += hi.text();
        out += '\n';
    }
    return out;
}

std::string poset_edges_json(const GrassParams& params) {
    const std::vector<IndexSet> nodes = all_index_sets(params);
    std::map<std::vector<int>, int> position;
    for (size_t i = 0; i < nodes.size(); ++i) position[nodes[i].elements()] = static_cast<int>(i);

    auto int_array = [](const std::vector<int>& v) {
        std::string s = "[";
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(v[i]);
        }
        return s + "]";
    };

    std::string out = "{\"nodes\":[";
    for (size_t i = 0; i < nodes.size(); ++i) {
        if (i) out += ',';
        const std::vector<int> parts = params.even ? partition_of(nodes[i]).shape.parts()
                                                   : shape_of(nodes[i]).parts();
        out += "{\"set\":" + int_array(nodes[i].elements()) + ",\"partition\":" + int_array(parts) +
               ",\"type\":" + std::to_string(type_of(nodes[i])) + "}";
    }
    out += "],\"covers\":[";
    bool first = true;
    for (const auto& [lo, hi] : bruhat_covers(params)) {
        if (!first) out += ',';
        first = false;
        out += "[" + std::to_string(position.at(lo.elements())) + "," +
               std::to_string(position.at(hi.elements())) + "]";
    }
    return out + "]}";
}

}  // namespace ogcalc

// ogcalc: command-line surface for the exact Schubert calculus engine.
//
// Verbs: giambelli, pieri, qpieri, multiply, qmultiply, eta,
//        weyl (convert | words | kl-tableaux | stanley | bh),
//        bruhat (type | order | poset),
//        verify (quantum-giambelli | giambelli-pieri | order-laws | transfer).
//
// Output is human text by default or JSON via --format json (environment
// default OGCALC_FORMAT).  Identical inputs give byte-identical output.
// Exit codes: 0 success, 2 usage error, 3 domain error, 4 failed verification.

#include <algorithm>
#include <exception>
#include <functional>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ogcalc/eta.hpp"
#include "ogcalc/indexsets.hpp"
#include "ogcalc/mpoly.hpp"
#include "ogcalc/partition.hpp"
#include "ogcalc/pieri.hpp"
#include "ogcalc/raising.hpp"
#include "ogcalc/rational.hpp"
#include "ogcalc/ring.hpp"
#include "ogcalc/specialpoly.hpp"
#include "ogcalc/symfunc.hpp"
#include "ogcalc/weyl.hpp"

using nlohmann::ordered_json;
using namespace ogcalc;

namespace {

/// Argument problems detected after parsing (mapped to exit code 2).
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<int> parse_parts(const std::string& s) {
    std::vector<int> out;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) continue;
        try {
            size_t pos = 0;
            int v = std::stoi(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw usage_error("not an integer list: \"" + s + "\"");
        }
    }
    return out;
}

std::string shape_str(const std::vector<int>& parts) {
    std::string s = "[";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts[i]);
    }
    return s + "]";
}

std::string qdeg_str(const QDeg& q, int K) {
    if (q.classical()) return "";
    std::string s;
    if (K == 2) {
        if (q.d1 > 0) {
            s += " q1";
            if (q.d1 > 1) s += "^" + std::to_string(q.d1);
        }
        if (q.d2 > 0) {
            s += " q2";
            if (q.d2 > 1) s += "^" + std::to_string(q.d2);
        }
    } else {
        s = " q";
        if (q.d1 > 1) s += "^" + std::to_string(q.d1);
    }
    return s;
}

std::string term_str(const TermKey& key, int K) {
    std::string s = shape_str(key.shape.parts());
    if (key.type > 0) s += ":t" + std::to_string(key.type);
    return s + qdeg_str(key.q, K);
}

ordered_json special_terms_json(const SpecialPoly& f) {
    ordered_json arr = ordered_json::array();
    for (const auto& [mono, coef] : f.terms()) {
        ordered_json t;
        t["g"] = mono.g;
        t["tkp"] = mono.tkp;
        t["coef"] = rat_str(coef);
        arr.push_back(std::move(t));
    }
    return arr;
}

ordered_json mpoly_json(const MPoly& f) {
    ordered_json arr = ordered_json::array();
    for (const auto& [key, coef] : f.terms()) {
        ordered_json t;
        t["x"] = key.x;
        t["y"] = key.y;
        t["coef"] = rat_str(coef);
        arr.push_back(std::move(t));
    }
    return arr;
}

GrassParams box_for(int k, int n, const std::string& parity) {
    return parity == "even" ? GrassParams::even_kn(k, n) : GrassParams::odd_kn(k, n);
}

void emit(const ordered_json& j) { std::cout << j.dump() << "\n"; }

int report_suite(const std::string& fmt, const std::string& suite, const std::string& params,
                 bool pass, long checked, const std::string& detail) {
    if (fmt == "json") {
        ordered_json j;
        j["suite"] = suite;
        j["params"] = params;
        j["pass"] = pass;
        j["checked"] = checked;
        if (!pass) j["detail"] = detail;
        emit(j);
    } else if (pass) {
        std::cout << "PASS (" << suite << " " << params << ", " << checked << " checks)\n";
    } else {
        std::cout << "FAIL (" << suite << " " << params << ": " << detail << ")\n";
    }
    return pass ? 0 : 4;
}

/// Evaluates a polynomial in the generators c_p (and the primed middle
/// generator) on the ring unit via repeated Pieri steps.
SplitExpr fold_generator_poly(const SpecialPoly& form, const RingSpec& ring) {
    SplitExpr unit = to_split(unit_expr(ring));
    SplitExpr acc;
    acc.ring = ring;
    for (const auto& [mono, coef] : form.terms()) {
        SplitExpr t = unit;
        for (int p : mono.g) t = apply_generator(t, Generator::chern(p));
        for (int i = 0; i < mono.tkp; ++i) t = apply_generator(t, Generator::tau_prime());
        acc.add_scaled(t, coef);
    }
    return acc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Schubert calculus on orthogonal Grassmannians"};
    app.require_subcommand(1);

    std::string format = "human";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"human", "json"}))
        ->envname("OGCALC_FORMAT");

    std::function<int()> todo;

    auto addsub = [](CLI::App* parent, const std::string& name, const std::string& desc) {
        CLI::App* s = parent->add_subcommand(name, desc);
        s->fallthrough();
        return s;
    };

    // ------------------------------------------------------------------ giambelli
    struct {
        int k = 1, n = -1, type = 0;
        std::string parity = "even", lambda, form = "auto";
    } gia;
    {
        CLI::App* s = addsub(&app, "giambelli", "expand a Schubert class over the special classes");
        s->add_option("--k", gia.k, "number of special columns")->required();
        s->add_option("--n", gia.n, "rectangle bound: validates that the shape indexes a class");
        s->add_option("--lambda,--shape", gia.lambda, "comma-separated parts")->required();
        s->add_option("--type", gia.type, "class type for shapes with a part k")->check(CLI::Range(0, 2));
        s->add_option("--parity", gia.parity)->check(CLI::IsMember({"even", "odd"}));
        s->add_option("--form", gia.form, "special (typed tau display), c, or tilde")
            ->check(CLI::IsMember({"auto", "special", "c", "tilde"}));
        s->callback([&] {
            todo = [&]() -> int {
                const bool even = gia.parity == "even";
                const int K = even ? 2 * gia.k : 2 * gia.k + 1;
                KStrictPartition la(parse_parts(gia.lambda), gia.k);
                if (!even && gia.type != 0) throw std::domain_error("odd-parity classes are untyped");
                if (gia.n >= 0) {
                    GrassParams P = box_for(gia.k, gia.n, gia.parity);
                    if (!la.fits(P)) throw std::domain_error("shape does not fit the rectangle");
                }
                const std::string form = gia.form == "auto" ? (even ? "special" : "c") : gia.form;
                std::string text;
                ordered_json terms, c_factor;
                if (form == "special") {
                    if (!even) throw std::domain_error("the typed form needs even parity");
                    TypedPartition t(la, gia.type);
                    text = giambelli_special_text(t, K);
                    terms = special_terms_json(giambelli_special(t, K).tau_form);
                } else if (form == "c") {
                    SpecialPoly f = (even && gia.type > 0)
                                        ? giambelli_special(TypedPartition(la, gia.type), K).c_form
                                        : giambelli_c(la, K);
                    text = f.text(gia.k);
                    terms = special_terms_json(f);
                } else {
                    if (!even) throw std::domain_error("the tilde form needs even parity");
                    GiambelliTilde t = giambelli_tilde(la, K);
                    text = t.tau_form.text(gia.k);
                    terms = special_terms_json(t.tau_form);
                    c_factor = special_terms_json(t.c_factor);
                }
                if (format == "json") {
                    ordered_json j;
                    j["verb"] = "giambelli";
                    j["k"] = gia.k;
                    j["K"] = K;
                    j["shape"] = la.parts();
                    j["type"] = gia.type;
                    j["form"] = form;
                    j["text"] = text;
                    j["terms"] = terms;
                    if (form == "tilde") j["c_factor"] = c_factor;
                    emit(j);
                } else {
                    std::cout << text << "\n";
                }
                return 0;
            };
        });
    }

    // ------------------------------------------------------------------ pieri
    struct {
        int k = 1, n = -1, type = 0, p = 1;
        std::string parity = "even", lambda, mode = "hat";
    } pie;
    {
        CLI::App* s = addsub(&app, "pieri", "multiply a class by a special class c_p");
        s->add_option("--k", pie.k)->required();
        s->add_option("--n", pie.n, "rectangle bound; omit for the stable (unbounded) rule");
        s->add_option("--lambda,--shape", pie.lambda)->required();
        s->add_option("--type", pie.type)->check(CLI::Range(0, 2));
        s->add_option("--p", pie.p, "degree of the special class")->required();
        s->add_option("--parity", pie.parity)->check(CLI::IsMember({"even", "odd"}));
        s->add_option("--mode", pie.mode, "hat (untyped), typed, or tilde (difference classes)")
            ->check(CLI::IsMember({"hat", "typed", "tilde"}));
        s->callback([&] {
            todo = [&]() -> int {
                const bool even = pie.parity == "even";
                const int K = even ? 2 * pie.k : 2 * pie.k + 1;
                KStrictPartition la(parse_parts(pie.lambda), pie.k);
                GrassParams P{};
                const GrassParams* box = nullptr;
                if (pie.n >= 0) {
                    P = box_for(pie.k, pie.n, pie.parity);
                    box = &P;
                    if (!la.fits(P)) throw std::domain_error("shape does not fit the rectangle");
                }
                ordered_json jterms = ordered_json::array();
                std::vector<std::string> lines;
                if (pie.mode == "typed") {
                    if (!even) throw std::domain_error("typed classes need even parity");
                    for (const TypedStep& st : chern_pieri_typed(TypedPartition(la, pie.type), pie.p, box)) {
                        lines.push_back(rat_str(pow2(st.exp2)) + " " + to_text(st.cls));
                        ordered_json t;
                        t["coef"] = rat_str(pow2(st.exp2));
                        t["shape"] = st.cls.shape.parts();
                        t["type"] = st.cls.type;
                        jterms.push_back(std::move(t));
                    }
                } else {
                    if (pie.mode == "tilde" && !even)
                        throw std::domain_error("difference classes need even parity");
                    auto steps = pie.mode == "tilde" ? chern_pieri_tilde(la, pie.p, box)
                                                     : chern_pieri(la, pie.p, K, box);
                    const std::string mark = pie.mode == "tilde" ? "~" : "";
                    for (const StripStep& st : steps) {
                        Rat c = pow2(st.components + (st.bump ? 1 : 0));
                        lines.push_back(rat_str(c) + " " + mark + shape_str(st.shape.parts()));
                        ordered_json t;
                        t["coef"] = rat_str(c);
                        t["shape"] = st.shape.parts();
                        if (pie.mode == "tilde") t["tilde"] = true;
                        jterms.push_back(std::move(t));
                    }
                }
                if (format == "json") {
                    ordered_json j;
                    j["verb"] = "pieri";
                    j["mode"] = pie.mode;
                    j["K"] = K;
                    j["p"] = pie.p;
                    j["terms"] = jterms;
                    emit(j);
                } else if (lines.empty()) {
                    std::cout << "0\n";
                } else {
                    for (const auto& l : lines) std::cout << l << "\n";
                }
                return 0;
            };
        });
    }

    // ------------------------------------------------------------------ qpieri
    struct {
        int k = 1, n = -1, p = 1;
        std::string parity = "even", lambda, mode = "hat";
    } qpi;
    {
        CLI::App* s = addsub(&app, "qpieri", "quantum product with a special class c_p");
        s->add_option("--k", qpi.k)->required();
        s->add_option("--n", qpi.n)->required();
        s->add_option("--lambda,--shape", qpi.lambda)->required();
        s->add_option("--p", qpi.p)->required();
        s->add_option("--parity", qpi.parity)->check(CLI::IsMember({"even", "odd"}));
        s->add_option("--mode", qpi.mode)->check(CLI::IsMember({"hat", "tilde"}));
        s->callback([&] {
            todo = [&]() -> int {
                GrassParams P = box_for(qpi.k, qpi.n, qpi.parity);
                KStrictPartition la(parse_parts(qpi.lambda), qpi.k);
                std::vector<QuantumTerm> terms;
                if (P.K == 2)
                    terms = qpi.mode == "hat" ? k2_quantum_pieri_hat(la, qpi.p, P)
                                              : k2_quantum_pieri_tilde(la, qpi.p, P);
                else
                    terms = qpi.mode == "hat" ? quantum_chern_pieri(la, qpi.p, P)
                                              : quantum_chern_pieri_tilde(la, qpi.p, P);
                if (format == "json") {
                    ordered_json arr = ordered_json::array();
                    for (const QuantumTerm& t : terms) {
                        ordered_json u;
                        u["coef"] = rat_str(t.coef);
                        u["shape"] = t.shape.parts();
                        u["q"] = {t.q.d1, t.q.d2};
                        u["tilde"] = t.tilde;
                        arr.push_back(std::move(u));
                    }
                    ordered_json j;
                    j["verb"] = "qpieri";
                    j["mode"] = qpi.mode;
                    j["K"] = P.K;
                    j["p"] = qpi.p;
                    j["terms"] = arr;
                    emit(j);
                } else if (terms.empty()) {
                    std::cout << "0\n";
                } else {
                    for (const QuantumTerm& t : terms)
                        std::cout << rat_str(t.coef) << " " << (t.tilde ? "~" : "")
                                  << shape_str(t.shape.parts()) << qdeg_str(t.q, P.K) << "\n";
                }
                return 0;
            };
        });
    }

    // ------------------------------------------------------------------ multiply / qmultiply
    struct MulOpts {
        int k = 1, n = -1, type = 0, mutype = 0;
        std::string parity = "even", lambda, mu, verb;
    };
    MulOpts mul, qmul;
    auto add_multiply = [&](const std::string& name, const std::string& desc, MulOpts& o,
                            bool quantum) {
        o.verb = name;
        CLI::App* s = addsub(&app, name, desc);
        s->add_option("--k", o.k)->required();
        auto* nopt = s->add_option("--n", o.n);
        if (quantum) nopt->required();
        s->add_option("--lambda,--shape", o.lambda)->required();
        s->add_option("--type", o.type)->check(CLI::Range(0, 2));
        s->add_option("--mu", o.mu)->required();
        s->add_option("--mutype", o.mutype)->check(CLI::Range(0, 2));
        s->add_option("--parity", o.parity)->check(CLI::IsMember({"even", "odd"}));
        s->callback([&todo, &format, op = &o, quantum] {
            todo = [&format, op, quantum]() -> int {
                RingSpec ring;
                if (quantum) {
                    ring = RingSpec::quantum_ring(box_for(op->k, op->n, op->parity));
                } else if (op->n >= 0) {
                    ring = RingSpec::classical_ring(box_for(op->k, op->n, op->parity));
                } else {
                    if (op->parity != "even")
                        throw std::domain_error("the stable ring is even-parity; pass --n for odd");
                    ring = RingSpec::stable_ring(op->k);
                }
                SchubertExpr a =
                    basis_expr(ring, KStrictPartition(parse_parts(op->lambda), op->k), op->type);
                SchubertExpr b =
                    basis_expr(ring, KStrictPartition(parse_parts(op->mu), op->k), op->mutype);
                SchubertExpr prod = multiply(a, b);
                if (format == "json") {
                    ordered_json arr = ordered_json::array();
                    for (const auto& [key, c] : prod.terms) {
                        ordered_json t;
                        t["coef"] = rat_str(c);
                        t["shape"] = key.shape.parts();
                        t["type"] = key.type;
                        t["q"] = {key.q.d1, key.q.d2};
                        arr.push_back(std::move(t));
                    }
                    ordered_json j;
                    j["verb"] = op->verb;
                    j["K"] = ring.K();
                    j["terms"] = arr;
                    emit(j);
                } else if (prod.terms.empty()) {
                    std::cout << "0\n";
                } else {
                    for (const auto& [key, c] : prod.terms)
                        std::cout << rat_str(c) << " " << term_str(key, ring.K()) << "\n";
                }
                return 0;
            };
        });
    };
    add_multiply("multiply", "product of two Schubert classes (classical or stable ring)", mul, false);
    add_multiply("qmultiply", "product of two Schubert classes in the quantum ring", qmul, true);

    // ------------------------------------------------------------------ eta
    struct {
        int k = 1, type = 0, dvars = -1, degcap = -1;
        std::string lambda, what = "H";
    } eta;
    {
        CLI::App* s = addsub(&app, "eta", "polynomial representatives in the two-block variables");
        s->add_option("--k", eta.k)->required();
        s->add_option("--lambda,--shape", eta.lambda)->required();
        s->add_option("--type", eta.type)->check(CLI::Range(0, 2));
        s->add_option("--what", eta.what, "H, theta, S, Q, or d (coordinates over P_mu s_nu')")
            ->check(CLI::IsMember({"H", "theta", "S", "Q", "d"}));
        s->add_option("--d", eta.dvars, "number of x variables (default: the degree cap)");
        s->add_option("--degcap", eta.degcap, "truncation degree (default: the weight)");
        s->callback([&] {
            todo = [&]() -> int {
                std::vector<int> parts = parse_parts(eta.lambda);
                const int weight = std::accumulate(parts.begin(), parts.end(), 0);
                const int cap = eta.degcap >= 0 ? eta.degcap : weight;
                const int dd = eta.dvars >= 0 ? eta.dvars : std::max(cap, 1);
                VarConfig cfg(dd, eta.k, cap);
                if (eta.what == "d") {
                    TypedPartition t(KStrictPartition(parts, eta.k), eta.type);
                    auto coords = d_coefficients(t, cfg);
                    if (format == "json") {
                        ordered_json arr = ordered_json::array();
                        for (const auto& [key, c] : coords) {
                            ordered_json u;
                            u["mu"] = key.mu;
                            u["nu"] = key.nu;
                            u["coef"] = c;
                            arr.push_back(std::move(u));
                        }
                        ordered_json j;
                        j["verb"] = "eta";
                        j["what"] = "d";
                        j["coefficients"] = arr;
                        emit(j);
                    } else {
                        for (const auto& [key, c] : coords)
                            std::cout << "mu=" << shape_str(key.mu) << " nu=" << shape_str(key.nu)
                                      << " coef=" << c << "\n";
                    }
                    return 0;
                }
                MPoly f = [&]() -> MPoly {
                    if (eta.what == "H")
                        return eta_polynomial(TypedPartition(KStrictPartition(parts, eta.k), eta.type),
                                              cfg);
                    if (eta.what == "theta") return theta_polynomial(KStrictPartition(parts, eta.k), cfg);
                    if (eta.what == "S") return S_polynomial(parts, cfg);
                    return Q_polynomial(parts, cfg);
                }();
                if (format == "json") {
                    ordered_json j;
                    j["verb"] = "eta";
                    j["what"] = eta.what;
                    j["d"] = dd;
                    j["k"] = eta.k;
                    j["degcap"] = cap;
                    j["terms"] = mpoly_json(f);
                    emit(j);
                } else {
                    std::cout << f.text() << "\n";
                }
                return 0;
            };
        });
    }

    // ------------------------------------------------------------------ weyl
    struct WeylIn {
        int k = -1, type = 0, n = -1, dvars = -1, degcap = -1;
        std::string lambda, w, verb;
        CLI::Option* lam = nullptr;
        CLI::Option* win = nullptr;
    };
    WeylIn wcv, wwd, wkl, wst, wbh;
    auto add_weyl_inputs = [](CLI::App* s, WeylIn& in) {
        s->add_option("--k", in.k, "number of special columns (needed with --lambda)");
        in.lam = s->add_option("--lambda,--shape", in.lambda, "typed shape input");
        s->add_option("--type", in.type)->check(CLI::Range(0, 2));
        s->add_option("--n", in.n, "window size override for --lambda");
        in.win = s->add_option("--w", in.w, "explicit window, e.g. \"-3 6 7 -5 -2 -1 4 8\"");
    };
    auto input_perm = [](const WeylIn& in) -> SignedPermutation {
        const bool has_l = in.lam->count() > 0, has_w = in.win->count() > 0;
        if (has_l == has_w) throw usage_error("pass exactly one of --lambda or --w");
        if (has_w) return SignedPermutation::from_text(in.w);
        if (in.k < 0) throw usage_error("--k is required with --lambda");
        return partition_perm(TypedPartition(KStrictPartition(parse_parts(in.lambda), in.k), in.type),
                              in.n);
    };
    {
        CLI::App* s = addsub(&app, "weyl", "signed permutations behind the Schubert basis");
        s->require_subcommand(1);

        CLI::App* cv = addsub(s, "convert", "typed shape <-> Grassmannian signed permutation");
        add_weyl_inputs(cv, wcv);
        cv->callback([&] {
            todo = [&]() -> int {
                if (wcv.lam->count() == 0 && wcv.k < 0)
                    throw usage_error("--k is required to read off the shape");
                SignedPermutation w = input_perm(wcv);
                TypedPartition la = perm_partition(w, wcv.k);
                if (format == "json") {
                    ordered_json j;
                    j["verb"] = "weyl-convert";
                    j["window"] = w.images();
                    j["text"] = w.text();
                    j["shape"] = la.shape.parts();
                    j["type"] = la.type;
                    j["length"] = w.length();
                    emit(j);
                } else if (wcv.win->count() > 0) {
                    std::cout << to_text(la) << "\n";
                } else {
                    std::cout << w.text() << "\n";
                }
                return 0;
            };
        });

        CLI::App* wd = addsub(s, "words", "all reduced words");
        add_weyl_inputs(wd, wwd);
        wd->callback([&] {
            todo = [&]() -> int {
                auto words = reduced_words(input_perm(wwd));
                if (format == "json") {
                    ordered_json j;
                    j["verb"] = "weyl-words";
                    j["count"] = words.size();
                    j["words"] = words;
                    emit(j);
                } else {
                    for (const auto& word : words) {
                        for (size_t i = 0; i < word.size(); ++i)
                            std::cout << (i ? " " : "") << word[i];
                        std::cout << "\n";
                    }
                }
                return 0;
            };
        });

        CLI::App* kl = addsub(s, "kl-tableaux", "standard decompositions of the flattened words");
        add_weyl_inputs(kl, wkl);
        kl->callback([&] {
            todo = [&]() -> int {
                auto tabs = kl_tableaux(input_perm(wkl));
                if (format == "json") {
                    ordered_json arr = ordered_json::array();
                    for (const KLTableau& t : tabs) {
                        ordered_json u;
                        u["shape"] = t.shape;
                        u["m"] = t.m;
                        u["rows"] = t.rows;
                        arr.push_back(std::move(u));
                    }
                    ordered_json j;
                    j["verb"] = "weyl-kl-tableaux";
                    j["count"] = tabs.size();
                    j["tableaux"] = arr;
                    emit(j);
                } else {
                    for (size_t ti = 0; ti < tabs.size(); ++ti) {
                        if (ti) std::cout << "\n";
                        std::cout << "shape " << shape_str(tabs[ti].shape) << " m=" << tabs[ti].m
                                  << "\n";
                        for (const auto& row : tabs[ti].rows) {
                            std::cout << " ";
                            for (int v : row) std::cout << " " << v;
                            std::cout << "\n";
                        }
                    }
                }
                return 0;
            };
        });

        auto add_poly_sub = [&](const std::string& name, const std::string& desc, WeylIn& in,
                                bool bh) {
            in.verb = "weyl-" + name;
            CLI::App* sp = addsub(s, name, desc);
            add_weyl_inputs(sp, in);
            sp->add_option("--d", in.dvars, "number of x variables (default: the length)");
            sp->add_option("--degcap", in.degcap, "truncation degree (default: the length)");
            sp->callback([&todo, &format, &input_perm, ip = &in, bh] {
                todo = [&format, &input_perm, ip, bh]() -> int {
                    SignedPermutation w = input_perm(*ip);
                    const int len = w.length();
                    const int cap = ip->degcap >= 0 ? ip->degcap : len;
                    const int dd = ip->dvars >= 0 ? ip->dvars : std::max(cap, 1);
                    const int kk = ip->k >= 0 ? ip->k : 1;
                    if (bh && ip->k < 0) throw usage_error("--k sets the y block and is required");
                    VarConfig cfg(dd, kk, cap);
                    MPoly f = bh ? billey_haiman_D(w, cfg) : stanley_E(w, cfg);
                    if (format == "json") {
                        ordered_json j;
                        j["verb"] = ip->verb;
                        j["window"] = w.images();
                        j["d"] = dd;
                        j["k"] = kk;
                        j["degcap"] = cap;
                        j["terms"] = mpoly_json(f);
                        emit(j);
                    } else {
                        std::cout << f.text() << "\n";
                    }
                    return 0;
                };
            });
        };
        add_poly_sub("stanley", "type D Stanley symmetric function", wst, false);
        add_poly_sub("bh", "Billey-Haiman Schubert polynomial", wbh, true);
    }

    // ------------------------------------------------------------------ bruhat
    struct {
        int N = 0, m = 0, type = 0;
        std::string set, lambda, lower, upper;
        CLI::Option *setopt = nullptr, *lamopt = nullptr;
    } bru;
    {
        CLI::App* s = addsub(&app, "bruhat", "index sets and the closure order of Schubert varieties");
        s->require_subcommand(1);
        s->add_option("--N", bru.N, "ambient dimension")->required();
        s->add_option("--m", bru.m, "subspace dimension")->required();

        CLI::App* ty = addsub(s, "type", "index set <-> shape, with the class type");
        bru.setopt = ty->add_option("--set", bru.set, "comma-separated index set");
        bru.lamopt = ty->add_option("--lambda,--shape", bru.lambda, "shape input");
        ty->add_option("--type", bru.type)->check(CLI::Range(0, 2));
        ty->callback([&] {
            todo = [&]() -> int {
                GrassParams P = GrassParams::from_mN(bru.m, bru.N);
                const bool has_set = bru.setopt->count() > 0, has_lam = bru.lamopt->count() > 0;
                if (has_set == has_lam) throw usage_error("pass exactly one of --set or --lambda");
                IndexSet S = [&] {
                    if (has_set) return IndexSet::from_text(bru.set, P);
                    KStrictPartition la(parse_parts(bru.lambda), P.k);
                    if (P.even) return index_set_of(TypedPartition(la, bru.type), P);
                    return index_set_of(la, P);
                }();
                if (format == "json") {
                    ordered_json j;
                    j["verb"] = "bruhat-type";
                    j["set"] = S.elements();
                    if (P.even) {
                        TypedPartition la = partition_of(S);
                        j["type"] = type_of(S);
                        j["shape"] = la.shape.parts();
                    } else {
                        j["shape"] = shape_of(S).parts();
                    }
                    emit(j);
                } else {
                    std::cout << "set: " << S.text() << "\n";
                    if (P.even) {
                        std::cout << "type: " << type_of(S) << "\n";
                        std::cout << "partition: " << to_text(partition_of(S)) << "\n";
                    } else {
                        std::cout << "shape: " << shape_str(shape_of(S).parts()) << "\n";
                    }
                }
                return 0;
            };
        });

        CLI::App* od = addsub(s, "order", "compare two index sets in the closure order");
        od->add_option("--lower", bru.lower)->required();
        od->add_option("--upper", bru.upper)->required();
        od->callback([&] {
            todo = [&]() -> int {
                GrassParams P = GrassParams::from_mN(bru.m, bru.N);
                IndexSet lo = IndexSet::from_text(bru.lower, P);
                IndexSet hi = IndexSet::from_text(bru.upper, P);
                const bool le = leq(lo, hi);
                const bool cl = closure_leq(lo, hi);
                if (format == "json") {
                    ordered_json j;
                    j["verb"] = "bruhat-order";
                    j["leq"] = le;
                    if (P.even) {
                        auto c = critical_index(lo, hi);
                        j["critical"] = c ? ordered_json(*c) : ordered_json(nullptr);
                        j["preceq"] = preceq(lo, hi);
                        j["types"] = {type_of(lo), type_of(hi)};
                    }
                    j["closure"] = cl;
                    emit(j);
                } else {
                    std::cout << "leq: " << (le ? "yes" : "no") << "\n";
                    if (P.even) {
                        auto c = critical_index(lo, hi);
                        std::cout << "critical: " << (c ? "c=" + std::to_string(*c) : "none") << "\n";
                        std::cout << "preceq: " << (preceq(lo, hi) ? "yes" : "no") << "\n";
                    }
                    std::cout << "closure: " << (cl ? "yes" : "no") << "\n";
                }
                return 0;
            };
        });

        CLI::App* po = addsub(s, "poset", "export the full closure order (covers)");
        po->callback([&] {
            todo = [&]() -> int {
                GrassParams P = GrassParams::from_mN(bru.m, bru.N);
                std::cout << (format == "json" ? poset_edges_json(P) : poset_edges_text(P));
                return 0;
            };
        });
    }

    // ------------------------------------------------------------------ verify
    struct {
        int k = 2, n = 3, N = 8, m = -1;
        bool classical_only = false;
    } ver;
    {
        CLI::App* s = addsub(&app, "verify", "named exactness sweeps (exit 4 on failure)");
        s->require_subcommand(1);

        CLI::App* qg = addsub(s, "quantum-giambelli",
                              "each Giambelli polynomial evaluates to its class, without q terms");
        qg->add_option("--k", ver.k);
        qg->add_option("--n", ver.n);
        qg->callback([&] {
            todo = [&]() -> int {
                GrassParams P = box_for(ver.k, ver.n, "even");
                long checked = 0;
                for (const TypedPartition& la : enumerate_typed(P)) {
                    if (!verify_quantum_giambelli(la, P).equal)
                        return report_suite(format, "quantum-giambelli",
                                      "k=" + std::to_string(ver.k) + " n=" + std::to_string(ver.n),
                                      false, checked, to_text(la));
                    ++checked;
                }
                return report_suite(format, "quantum-giambelli",
                              "k=" + std::to_string(ver.k) + " n=" + std::to_string(ver.n), true,
                              checked, "");
            };
        });

        CLI::App* gp = addsub(s, "giambelli-pieri",
                              "classical Giambelli folded through the Pieri rule returns the class");
        gp->add_option("--k", ver.k);
        gp->add_option("--n", ver.n);
        gp->callback([&] {
            todo = [&]() -> int {
                GrassParams P = box_for(ver.k, ver.n, "even");
                RingSpec ring = RingSpec::classical_ring(P);
                long checked = 0;
                for (const TypedPartition& la : enumerate_typed(P)) {
                    SplitExpr folded = fold_generator_poly(giambelli_special(la, P.K).c_form, ring);
                    if (folded != to_split(basis_expr(ring, la.shape, la.type)))
                        return report_suite(format, "giambelli-pieri",
                                      "k=" + std::to_string(ver.k) + " n=" + std::to_string(ver.n),
                                      false, checked, to_text(la));
                    ++checked;
                }
                return report_suite(format, "giambelli-pieri",
                              "k=" + std::to_string(ver.k) + " n=" + std::to_string(ver.n), true,
                              checked, "");
            };
        });

        CLI::App* ol = addsub(s, "order-laws", "closure-order axioms, union law, involution, bijection");
        ol->add_option("--N", ver.N);
        ol->add_option("--m", ver.m, "single subspace dimension (default: all)");
        ol->callback([&] {
            todo = [&]() -> int {
                long checked = 0;
                std::vector<int> ms;
                if (ver.m >= 1)
                    ms.push_back(ver.m);
                else
                    for (int mm = 1; 2 * mm < ver.N; ++mm) ms.push_back(mm);
                for (int mm : ms) {
                    GrassParams P = GrassParams::from_mN(mm, ver.N);
                    auto V = all_index_sets(P);
                    std::string where = "N=" + std::to_string(ver.N) + " m=" + std::to_string(mm);
                    for (const IndexSet& v : V) {
                        if (!closure_leq(v, v))
                            return report_suite(format, "order-laws", where, false, checked, "not reflexive");
                        IndexSet back = P.even ? index_set_of(partition_of(v), P)
                                               : index_set_of(shape_of(v), P);
                        if (back != v)
                            return report_suite(format, "order-laws", where, false, checked,
                                          "bijection does not round-trip at " + v.text());
                        ++checked;
                    }
                    for (const IndexSet& a : V)
                        for (const IndexSet& b : V) {
                            if (closure_leq(a, b) && closure_leq(b, a) && !(a == b))
                                return report_suite(format, "order-laws", where, false, checked, "not antisymmetric");
                            if (P.even) {
                                if (preceq(a, b) != preceq(iota(a), iota(b)))
                                    return report_suite(format, "order-laws", where, false, checked,
                                                  "involution breaks the order at " + a.text() +
                                                      " vs " + b.text());
                                if (leq(a, bar(b)) != (preceq(a, b) || preceq(a, iota(b))))
                                    return report_suite(format, "order-laws", where, false, checked,
                                                  "union law fails at " + a.text() + " vs " + b.text());
                            }
                            ++checked;
                            for (const IndexSet& c : V)
                                if (closure_leq(a, b) && closure_leq(b, c) && !closure_leq(a, c))
                                    return report_suite(format, "order-laws", where, false, checked,
                                                  "not transitive");
                        }
                }
                std::string params = "N=" + std::to_string(ver.N) +
                                     (ver.m >= 1 ? " m=" + std::to_string(ver.m) : " all m");
                return report_suite(format, "order-laws", params, true, checked, "");
            };
        });

        CLI::App* tr = addsub(s, "transfer",
                              "the odd-to-even module map commutes with every special class");
        tr->add_option("--k", ver.k);
        tr->add_option("--n", ver.n);
        tr->add_flag("--classical-only", ver.classical_only);
        tr->callback([&] {
            todo = [&]() -> int {
                std::string params = "k=" + std::to_string(ver.k) + " n=" + std::to_string(ver.n);
                long checked = 0;
                for (int mode = 0; mode < 2; ++mode) {
                    if (mode == 1 && (ver.classical_only || ver.k < 1)) continue;
                    GrassParams Po = GrassParams::odd_kn(ver.k, ver.n);
                    RingSpec Ro = mode == 0 ? RingSpec::classical_ring(Po)
                                            : RingSpec::quantum_ring(Po);
                    for (const KStrictPartition& la :
                         enumerate_k_strict(ver.k, Po.m, Po.n + Po.k)) {
                        SchubertExpr sig = basis_expr(Ro, la, 0);
                        SplitExpr psig = odd_to_even_transfer(sig);
                        const bool two_param = psig.ring.K() == 2;
                        for (int p = 1; p <= Po.n + Po.k; ++p) {
                            SplitExpr lhs = odd_to_even_transfer(
                                from_split(apply_generator(to_split(sig), Generator::chern(p))));
                            SplitExpr rhs = apply_generator(psig, Generator::chern(p));
                            if (two_param) {
                                lhs = identify_deformations(lhs);
                                rhs = identify_deformations(rhs);
                            }
                            if (!(lhs == rhs))
                                return report_suite(format, "transfer", params, false, checked,
                                              (mode ? "quantum " : "classical ") +
                                                  shape_str(la.parts()) + " p=" + std::to_string(p));
                            ++checked;
                        }
                    }
                }
                return report_suite(format, "transfer", params, true, checked, "");
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (!todo) {
        std::cerr << app.help();
        return 2;
    }
    try {
        return todo();
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}

#include <cstdio>
#include <ogcalc/pieri.hpp>
#include <ogcalc/raising.hpp>

int main() {
    using namespace ogcalc;
    GrassParams P = GrassParams::even_kn(2, 4);
    TypedPartition la({3, 2, 2}, 2, 2);
    std::string s = giambelli_special_text(la, P.K);
    std::printf("%s\n", s.c_str());
    auto q = quantum_chern_pieri(KStrictPartition({4, 3}, 2), 2, GrassParams::even_kn(2, 3));
    for (const auto& t : q)
        std::printf("coef %s shape len %d qdeg %d\n", rat_str(t.coef).c_str(), t.shape.length(),
                    t.q.d1);
    return s.empty() ? 1 : 0;
}

// Scratch profiling harness (not installed, not a test).
#include "nalg/variety.hpp"
#include "nalg/parser.hpp"

#include <chrono>
#include <cstdio>

using namespace nalg;

int main(int argc, char** argv)
{
    int degree = argc > 1 ? atoi(argv[1]) : 5;
    const char* vname = argc > 2 ? argv[2] : "binary-perm";
    Engine eng(1);
    auto t0 = std::chrono::steady_clock::now();
    auto comp = eng.consequences(Variety::builtin(vname), MultiDegree::multilinear(degree));
    auto t1 = std::chrono::steady_clock::now();
    std::size_t maxw = 0, totw = 0;
    for (const auto& r : comp->ech.rows()) {
        maxw = std::max(maxw, r.size());
        totw += r.size();
    }
    printf("%s deg %d: total %zu rank %zu dim %zu  final rows avg width %.1f max %zu  %.2fs\n",
           vname, degree, comp->total(), comp->rank(), comp->dimension(),
           comp->rank() ? double(totw) / comp->rank() : 0.0, maxw,
           std::chrono::duration<double>(t1 - t0).count());
    return 0;
}

// Serial against OpenMP exact doubling number on complete graphs.
#include <omp.h>

#include <chrono>
#include <cstdio>

#include "lirlab/families.hpp"
#include "lirlab/solver.hpp"

using namespace lir;

namespace {

double time_run(const Multigraph& g, Parallelism par, int& value) {
    auto t0 = std::chrono::steady_clock::now();
    auto r = exact_D_lir(g, {}, par);
    value = r.value;
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    int hi = argc > 1 ? std::atoi(argv[1]) : 9;
    std::printf("threads %d\n", omp_get_max_threads());
    std::printf("%-4s %6s %10s %10s %8s\n", "n", "dlir", "serial_s", "omp_s", "speedup");
    for (int n = 7; n <= hi; ++n) {
        auto g = complete_graph(n);
        int a = 0, b = 0;
        double s = time_run(g, Parallelism::Serial, a);
        double p = time_run(g, Parallelism::OpenMP, b);
        if (a != b) {
            std::fprintf(stderr, "K%d: serial %d, parallel %d\n", n, a, b);
            return 1;
        }
        std::printf("K%-3d %6d %10.3f %10.3f %8.2f\n", n, a, s, p, p > 0 ? s / p : 0.0);
    }
    return 0;
}

// Times the serial reference solver against the OpenMP kernel on a fixed set
// of instances and checks that they agree.
//
//   ccn_bench [--repeat r]
//
// Thread count comes from OMP_NUM_THREADS.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ccn/completion.hpp"
#include "ccn/families.hpp"

namespace {

struct Instance {
    std::string name;
    ccn::Graph graph;
};

struct Timed {
    double ms = 0;
    ccn::CompletionResult result;
};

Timed run_ms(const ccn::Graph& g, const ccn::SolverLimits& lim, int repeat,
             bool serial) {
    using clock = std::chrono::steady_clock;
    auto t0 = clock::now();
    Timed out{0, serial ? ccn::solve_zeta_serial(g, lim)
                        : ccn::solve_zeta(g, lim)};
    for (int i = 1; i < repeat; ++i)
        out.result = serial ? ccn::solve_zeta_serial(g, lim)
                            : ccn::solve_zeta(g, lim);
    auto t1 = clock::now();
    out.ms = std::chrono::duration<double, std::milli>(t1 - t0).count() / repeat;
    return out;
}

} // namespace

int main(int argc, char** argv) {
    int repeat = 3;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--repeat") == 0 && i + 1 < argc)
            repeat = std::atoi(argv[++i]);
    }

    std::vector<Instance> instances;
    instances.push_back({"wheel n=14", ccn::gen_wheel(14)});
    instances.push_back({"helm n=9", ccn::gen_helm(9)});
    instances.push_back({"sunlet n=11", ccn::gen_sunlet(11)});
    instances.push_back({"cone over C21", ccn::gen_nested_join(ccn::gen_cycle(21), 1)});
    instances.push_back({"cone over C23", ccn::gen_nested_join(ccn::gen_cycle(23), 1)});

    ccn::SolverLimits lim;
    lim.force = true;

    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    std::printf("threads: %d, repeats per timing: %d\n", threads, repeat);
    std::printf("%-16s %6s %8s %12s %12s %9s %14s\n", "instance", "order",
                "zeta", "serial ms", "parallel ms", "speedup", "nodes s/p");

    int failures = 0;
    for (const auto& inst : instances) {
        Timed serial = run_ms(inst.graph, lim, repeat, true);
        Timed parallel = run_ms(inst.graph, lim, repeat, false);
        bool same = serial.result.zeta == parallel.result.zeta &&
                    serial.result.witness == parallel.result.witness;
        if (!same) ++failures;
        std::printf("%-16s %6d %8lld %12.2f %12.2f %8.2fx %7lld/%-7lld%s\n",
                    inst.name.c_str(), inst.graph.order(), parallel.result.zeta,
                    serial.ms, parallel.ms, serial.ms / parallel.ms,
                    serial.result.explored, parallel.result.explored,
                    same ? "" : "  MISMATCH");
    }
    if (failures) {
        std::printf("%d instance(s) disagreed between the solvers\n", failures);
        return 1;
    }
    return 0;
}

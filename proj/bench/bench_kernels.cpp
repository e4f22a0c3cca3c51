// Timings of the OpenMP kernels against their serial references on a
// tip-refined plate: assembly, sparse matrix-vector product, dot product,
// and a full CG solve. Build and run:
//   cmake --build build --target bench_kernels && ./build/bench/bench_kernels

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>

#include "porocrack/kernels.hpp"
#include "porocrack/parallel.hpp"
#include "porocrack/picard.hpp"

using namespace porocrack;

namespace {

double time_best_of(int reps, const std::function<void()>& body) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        body();
        best = std::min(best, std::chrono::duration<double>(
                                  std::chrono::steady_clock::now() - t0).count());
    }
    return best;
}

void report(const char* name, double serial_s, double parallel_s) {
    std::printf("%-22s %10.4f ms %10.4f ms %8.2fx\n", name, 1e3 * serial_s, 1e3 * parallel_s,
                serial_s / parallel_s);
}

}  // namespace

int main(int argc, char** argv) {
    init_threads_from_env();
    int levels = 4;
    if (argc > 1) levels = std::atoi(argv[1]);

    NotchedPlateGeometry geom;
    const Mesh mesh = generate_notched_plate(geom, {20, 20, 6}, 2.0, levels);
    const LoadSpec loads = plate_tension_loads(mesh, geom, -1.0, 1.0);
    MaterialParams params;
    params.beta = -10.0;

    DisplacementField u(static_cast<size_t>(mesh.dof_count()));
    std::mt19937 rng(1);
    std::uniform_real_distribution<double> d(-1e-3, 1e-3);
    for (auto& v : u) v = d(rng);

    std::printf("mesh: %d elements, %d dofs, %d threads\n", mesh.element_count(),
                mesh.dof_count(), current_max_threads());
    std::printf("%-22s %13s %13s %9s\n", "kernel", "serial", "openmp", "speedup");

    const double ta_s = time_best_of(3, [&] { assemble_serial(mesh, params, u, loads); });
    const double ta_p = time_best_of(3, [&] { assemble(mesh, params, u, loads); });
    report("assemble", ta_s, ta_p);

    auto sys = assemble(mesh, params, u, loads);
    apply_dirichlet(sys, loads, mesh);
    const size_t n = static_cast<size_t>(sys.A.n);
    std::vector<double> x(n), y(n);
    for (auto& v : x) v = d(rng);

    const double tm_s = time_best_of(20, [&] {
        for (int i = 0; i < 10; ++i) kernels::spmv_serial(sys.A, x.data(), y.data());
    });
    const double tm_p = time_best_of(20, [&] {
        for (int i = 0; i < 10; ++i) kernels::spmv(sys.A, x.data(), y.data());
    });
    report("spmv x10", tm_s, tm_p);

    volatile double sink = 0.0;
    const double td_s = time_best_of(20, [&] {
        for (int i = 0; i < 50; ++i) sink = kernels::dot_serial(x.data(), x.data(), n);
    });
    const double td_p = time_best_of(20, [&] {
        for (int i = 0; i < 50; ++i) sink = kernels::dot(x.data(), x.data(), n);
    });
    (void)sink;
    report("dot x50", td_s, td_p);

    const double tc = time_best_of(2, [&] { solve_cg(sys, 1e-10, 0, nullptr); });
    std::printf("%-22s %24.1f ms\n", "cg solve (openmp)", 1e3 * tc);
    return 0;
}

// Benchmark comparing the serial reference convolution with the
// denominator-cleared OpenMP kernel on dense group-algebra elements.

#include <chrono>
#include <iomanip>
#include <iostream>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "wreathfuse/algebra_kernels.hpp"

using namespace wrf;

namespace {

AlgebraElement dense_random(std::mt19937_64& rng, const AlgebraPtr& alg, long conductor) {
    std::uniform_int_distribution<long long> num(-30, 30);
    std::uniform_int_distribution<long long> den(1, 16);
    AlgebraElement::Terms t;
    for (std::uint64_t code = 0; code < alg->order(); ++code) {
        std::vector<Rational> c(static_cast<size_t>(euler_phi(conductor)));
        for (auto& x : c) x = Rational(Int(num(rng)), Int(den(rng)));
        t[code] = Cyclotomic::from_coeffs(conductor, std::move(c));
    }
    return AlgebraElement(alg, std::move(t));
}

template <typename F>
double time_best_ms(int reps, F&& f) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        f();
        auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"convolution kernel benchmark"};
    std::string group_spec = "S3";
    int n = 3, reps = 3;
    long conductor = 1;
    app.add_option("--group", group_spec, "built-in group spec");
    app.add_option("--n", n, "wreath product rank");
    app.add_option("--reps", reps, "repetitions per measurement (best is kept)");
    app.add_option("--conductor", conductor, "coefficient field conductor");
    CLI11_PARSE(app, argc, argv);

    GroupPtr g = build_group(group_spec);
    AlgebraPtr alg = Algebra::make(g, n);
    if (!alg->dense_supported()) {
        std::cerr << "algebra order " << alg->order() << " exceeds the dense kernel cap\n";
        return 1;
    }
    alg->ensure_dense_tables();

    std::mt19937_64 rng(12345);
    AlgebraElement a = dense_random(rng, alg, conductor);
    AlgebraElement b = dense_random(rng, alg, conductor);

    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    std::cout << "kernel benchmark: group=" << g->name << " n=" << n
              << " |H|=" << alg->order() << " conductor=" << conductor
              << " threads=" << threads << "\n";

    auto ref = kernels::mul_reference(*alg, a.terms(), b.terms());
    double t_ref = time_best_ms(reps, [&] {
        auto r = kernels::mul_reference(*alg, a.terms(), b.terms());
        (void)r;
    });

#ifdef _OPENMP
    omp_set_num_threads(1);
#endif
    auto fast1 = kernels::mul_dense_cleared(*alg, a.terms(), b.terms());
    double t_fast1 = time_best_ms(reps, [&] {
        auto r = kernels::mul_dense_cleared(*alg, a.terms(), b.terms());
        (void)r;
    });
#ifdef _OPENMP
    omp_set_num_threads(threads);
#endif
    auto fastp = kernels::mul_dense_cleared(*alg, a.terms(), b.terms());
    double t_fastp = time_best_ms(reps, [&] {
        auto r = kernels::mul_dense_cleared(*alg, a.terms(), b.terms());
        (void)r;
    });

    bool agree = AlgebraElement(alg, std::move(fast1)) == AlgebraElement(alg, kernels::Terms(ref)) &&
                 AlgebraElement(alg, std::move(fastp)) == AlgebraElement(alg, std::move(ref));

    std::cout << std::fixed << std::setprecision(2);
    std::cout << "  reference (serial)              " << std::setw(10) << t_ref << " ms\n";
    std::cout << "  dense-cleared (1 thread)        " << std::setw(10) << t_fast1 << " ms  ("
              << t_ref / t_fast1 << "x)\n";
    std::cout << "  dense-cleared (" << threads << " threads)       " << std::setw(10)
              << t_fastp << " ms  (" << t_ref / t_fastp << "x)\n";
    std::cout << "  kernels agree: " << (agree ? "yes" : "NO") << "\n";
    return agree ? 0 : 1;
}

// Serial vs OpenMP timing for the Monte Carlo kernels. Both paths produce
// bit-identical results (verified in the test suite); this target reports
// the speedup only.

#include <chrono>
#include <cstdio>

#include "zigzag/composition.hpp"
#include "zigzag/experiment.hpp"
#include "zigzag/graph.hpp"
#include "zigzag/paintbox.hpp"
#include "zigzag/walk.hpp"

using namespace zigzag;

namespace {

template <class Fn>
double seconds(Fn&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

void report(const char* name, double serial, double parallel) {
    std::printf("%-28s serial %8.3fs   openmp %8.3fs   speedup %.2fx\n", name, serial, parallel,
                serial / parallel);
}

}  // namespace

int main() {
    const std::uint64_t seed = 20240601;

    {
        Composition lam = SequenceSpec::parse("zigzag:2").at(12);
        Composition mu({2, 1});
        const std::uint64_t samples = 400000;
        double s = seconds([&] { estimate_kernel(mu, lam, samples, seed, false); });
        double p = seconds([&] { estimate_kernel(mu, lam, samples, seed, true); });
        report("estimate_kernel n=12", s, p);
    }
    {
        IntervalSystem u = IntervalSystem::parse("0,0.25;0.5,0.75", "0.25,0.5");
        Composition mu({2, 1, 1});
        const std::uint64_t samples = 2000000;
        double s = seconds([&] { estimate_paintbox_law(u, mu, samples, seed, false); });
        double p = seconds([&] { estimate_paintbox_law(u, mu, samples, seed, true); });
        report("estimate_paintbox_law k=4", s, p);
    }
    {
        const std::uint64_t samples = 4000;
        double s = seconds([&] { clt_experiment(10000, samples, seed, false); });
        double p = seconds([&] { clt_experiment(10000, samples, seed, true); });
        report("clt_experiment n=1e4", s, p);
    }
    {
        IntervalSystem u = IntervalSystem::parse("0,0.5", "0.5,1");
        const std::uint64_t samples = 200;
        double s = seconds([&] { lln_experiment(u, 2000, samples, seed, false); });
        double p = seconds([&] { lln_experiment(u, 2000, samples, seed, true); });
        report("lln_experiment n=2000", s, p);
    }
    return 0;
}

// Times the serial reference paths against the OpenMP kernels on the two
// enumeration-heavy workloads and checks that both produce identical tables.
//
//   usage: bench [threads]   (default: omp_get_max_threads())

#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>

#include "fixedspace/curves.hpp"
#include "fixedspace/enumerate.hpp"

using namespace fixedspace;
using Clock = std::chrono::steady_clock;

namespace {

template <class Fn>
double timed(Fn&& fn) {
    auto start = Clock::now();
    fn();
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(const std::string& name, double serial, double parallel, int threads, bool identical) {
    std::cout << std::left << std::setw(34) << name << "serial " << std::setw(9) << serial << "  "
              << threads << " threads " << std::setw(9) << parallel << "  speedup "
              << std::setprecision(3) << serial / parallel << std::setprecision(6)
              << (identical ? "" : "  RESULTS DIFFER") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    int threads = argc > 1 ? std::atoi(argv[1]) : omp_get_max_threads();
    std::cout << "comparing serial reference vs OpenMP kernels, " << threads << " threads\n\n";

    {
        GroupSpec spec{GroupSpec::Family::Symplectic, 2, 3, 1};
        DistributionTable serial_table, parallel_table;
        double ts = timed([&] { serial_table = empirical_group_distribution(spec, 1); });
        double tp = timed([&] { parallel_table = empirical_group_distribution(spec, threads); });
        report("Sp4(F3) enumeration (51840)", ts, tp, threads, serial_table.same_entries(parallel_table));
    }
    {
        GroupSpec spec{GroupSpec::Family::Unitary, 3, 2, 1};
        DistributionTable serial_table, parallel_table;
        double ts = timed([&] { serial_table = empirical_group_distribution(spec, 1); });
        double tp = timed([&] { parallel_table = empirical_group_distribution(spec, threads); });
        report("GU3(F4) enumeration (648)", ts, tp, threads, serial_table.same_entries(parallel_table));
    }
    {
        BetaReport serial_rep, parallel_rep;
        double ts = timed([&] { serial_rep = beta_genus2_divisibility(13, 3, 1); });
        double tp = timed([&] { parallel_rep = beta_genus2_divisibility(13, 3, threads); });
        report("quintic scan q=13 (342732)", ts, tp, threads,
               serial_rep.empirical.same_entries(parallel_rep.empirical));
    }
    {
        BetaReport serial_rep, parallel_rep;
        double ts = timed([&] { serial_rep = beta_elliptic(127, 3, EllipticFamily::ShortWeierstrass, 1); });
        double tp = timed(
            [&] { parallel_rep = beta_elliptic(127, 3, EllipticFamily::ShortWeierstrass, threads); });
        report("Weierstrass scan q=127 (16002)", ts, tp, threads,
               serial_rep.empirical.same_entries(parallel_rep.empirical));
    }
    return 0;
}

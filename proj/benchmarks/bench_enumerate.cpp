// Compares the serial reference enumerators against the OpenMP frontier
// kernels on representative workloads.
#include "qmut/explorer.hpp"
#include "qmut/families.hpp"

using namespace qmut;

namespace {

FramedQuiver workload(const std::string& sig) {
    return build_special_framing(parse_signature(sig));
}

}  // namespace

#ifdef HAVE_GOOGLE_BENCHMARK
#include <benchmark/benchmark.h>

static void BM_exchange_serial(benchmark::State& state, const std::string& sig) {
    FramedQuiver fq = workload(sig);
    Budget b;
    for (auto _ : state) {
        ExchangeComplex ec = enumerate_exchange_serial(fq, b);
        benchmark::DoNotOptimize(ec.variable_count);
    }
}

static void BM_exchange_parallel(benchmark::State& state, const std::string& sig) {
    FramedQuiver fq = workload(sig);
    Budget b;
    for (auto _ : state) {
        ExchangeComplex ec = enumerate_exchange(fq, b);
        benchmark::DoNotOptimize(ec.variable_count);
    }
}

BENCHMARK_CAPTURE(BM_exchange_serial, d4hat, std::string("T:2,2,2/1,1,1"));
BENCHMARK_CAPTURE(BM_exchange_parallel, d4hat, std::string("T:2,2,2/1,1,1"));
BENCHMARK_CAPTURE(BM_exchange_serial, e6hat, std::string("T:3,3,2/1,1,1"));
BENCHMARK_CAPTURE(BM_exchange_parallel, e6hat, std::string("T:3,3,2/1,1,1"));
BENCHMARK_CAPTURE(BM_exchange_serial, b6hat, std::string("T:5,2/1,2"));
BENCHMARK_CAPTURE(BM_exchange_parallel, b6hat, std::string("T:5,2/1,2"));

BENCHMARK_MAIN();

#else
#include <chrono>
#include <cstdio>

int main() {
    using Clock = std::chrono::steady_clock;
    Budget b;
    for (const char* sig : {"T:2,2,2/1,1,1", "T:3,3,2/1,1,1", "T:5,2/1,2"}) {
        FramedQuiver fq = workload(sig);
        auto t0 = Clock::now();
        ExchangeComplex ser = enumerate_exchange_serial(fq, b);
        auto t1 = Clock::now();
        ExchangeComplex par = enumerate_exchange(fq, b);
        auto t2 = Clock::now();
        double s = std::chrono::duration<double>(t1 - t0).count();
        double p = std::chrono::duration<double>(t2 - t1).count();
        std::printf("%-16s vertices=%zu serial=%.3fs parallel=%.3fs speedup=%.2fx equal=%d\n",
                    sig, ser.size(), s, p, s / p,
                    int(ser.keys == par.keys && ser.adj == par.adj));
    }
    return 0;
}
#endif

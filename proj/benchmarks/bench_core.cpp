#include <benchmark/benchmark.h>

#include <random>

#include "ehzkit/deephole.hpp"
#include "ehzkit/ecp.hpp"
#include "ehzkit/oracle.hpp"

using namespace ehzkit;

namespace {

struct Fixture {
  CodeDescriptor code;
  EcpPair pair;
  FqVec word;
};

Fixture make_fixture(u64 q, const FqVec& pts, u32 k) {
  auto F = Field::make(q);
  auto code = ehz(EvalConfig(F, pts), k);
  auto pair = build_ecp(code);
  std::mt19937_64 rng(7);
  FqVec msg(k + 1, 0);
  for (u32 i = 0; i + 1 < k; ++i) msg[i] = rng() % q;
  msg[k] = rng() % q;
  FqVec cw = encode_ehz(code, Polynomial(F, msg));
  FqVec y = cw;
  for (u32 t = 0; t < pair.ell; ++t) y[t] = (y[t] + 1 + rng() % (q - 1)) % q;
  return {std::move(code), std::move(pair), std::move(y)};
}

void BM_EcpDecode_9_3(benchmark::State& state) {
  auto fx = make_fixture(17, {1, 3, 5, 7, 10, 12, 14, 16}, 3);
  for (auto _ : state)
    benchmark::DoNotOptimize(ecp_decode(fx.code, fx.pair, fx.word));
}
BENCHMARK(BM_EcpDecode_9_3);

void BM_EcpDecode_17_5(benchmark::State& state) {
  auto fx = make_fixture(19, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16}, 5);
  for (auto _ : state)
    benchmark::DoNotOptimize(ecp_decode(fx.code, fx.pair, fx.word));
}
BENCHMARK(BM_EcpDecode_17_5);

void BM_Rref(benchmark::State& state) {
  auto F = Field::make(17);
  std::mt19937_64 rng(11);
  size_t n = size_t(state.range(0));
  FqMatrix M(F, n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) M.set(i, j, rng() % 17);
  for (auto _ : state) benchmark::DoNotOptimize(rref(M));
}
BENCHMARK(BM_Rref)->Arg(8)->Arg(16)->Arg(32);

void BM_MinDistanceBruteForce(benchmark::State& state) {
  auto F = Field::make(11);
  auto code = ehz(EvalConfig(F, FqVec{1, 2, 3, 4, 5, 6, 7}), 3);
  for (auto _ : state) benchmark::DoNotOptimize(min_distance_bruteforce(code));
}
BENCHMARK(BM_MinDistanceBruteForce);

void BM_CoveringRadius(benchmark::State& state) {
  auto F = Field::make(13);
  auto code = ehz(EvalConfig(F, FqVec{1, 2, 3, 4, 5, 6}), 4);
  for (auto _ : state)
    benchmark::DoNotOptimize(covering_radius(code, RadiusMethod::Exhaustive));
}
BENCHMARK(BM_CoveringRadius);

void BM_MdsMinors(benchmark::State& state) {
  auto F = Field::make(16 + 1);
  auto code = ehz(EvalConfig(F, FqVec{1, 3, 5, 7, 10, 12, 14, 16}), 3);
  for (auto _ : state) benchmark::DoNotOptimize(is_mds_minors(code));
}
BENCHMARK(BM_MdsMinors);

void BM_NearestCodeword(benchmark::State& state) {
  auto fx = make_fixture(17, {1, 3, 5, 7, 10, 12, 14, 16}, 3);
  for (auto _ : state)
    benchmark::DoNotOptimize(nearest_codeword(fx.code, fx.word));
}
BENCHMARK(BM_NearestCodeword);

}  // namespace

BENCHMARK_MAIN();

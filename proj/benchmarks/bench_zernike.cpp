#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "zernike/zernike.hpp"

namespace {

using zernike::Complex;
using zernike::CoefficientAggregate;
using zernike::DerivativeSign;
using zernike::RadialMethod;

// Deterministic dense-ish aggregate: every valid index up to the cap.
CoefficientAggregate full_aggregate(int max_degree) {
  CoefficientAggregate alpha(max_degree);
  for (int n = 0; n <= max_degree; ++n) {
    for (int m = -n; m <= n; m += 2) {
      alpha.set({n, m}, Complex{1.0 / (1 + n + std::abs(m)), 0.25 / (1 + n)});
    }
  }
  return alpha;
}

void BM_radial_eval(benchmark::State& state) {
  const int n = int(state.range(0));
  const auto method = RadialMethod(state.range(1));
  const double rho = 0.70710678118654752;
  for (auto _ : state) {
    for (int m = n % 2; m <= n; m += 2) {
      benchmark::DoNotOptimize(zernike::radial_eval(n, m, rho, method));
    }
  }
}

void BM_radial_eval_all_m(benchmark::State& state) {
  const int n = int(state.range(0));
  const double rho = 0.70710678118654752;
  for (auto _ : state) {
    benchmark::DoNotOptimize(zernike::radial_eval_all_m(n, rho));
  }
}

void BM_apply_A(benchmark::State& state) {
  const auto alpha = full_aggregate(int(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(zernike::apply_A(DerivativeSign::Plus, alpha));
  }
}

void BM_reconstruct(benchmark::State& state) {
  const int N = int(state.range(0));
  const auto alpha = full_aggregate(N);
  const zernike::GradientCoefficientPair pair{
      zernike::apply_A(DerivativeSign::Plus, alpha),
      zernike::apply_A(DerivativeSign::Minus, alpha)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(zernike::reconstruct(pair, N));
  }
}

void BM_laplacian(benchmark::State& state) {
  const auto alpha = full_aggregate(int(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(zernike::laplacian(alpha));
  }
}

void BM_solve_neumann(benchmark::State& state) {
  const int N = int(state.range(0));
  const auto star = full_aggregate(N + 2);
  const auto lap = zernike::laplacian(star);
  CoefficientAggregate f(N);
  for (const auto& [idx, v] : lap.entries()) f.set(idx, -v);
  const auto psi = zernike::boundary_normal_derivative(star);
  for (auto _ : state) {
    benchmark::DoNotOptimize(zernike::solve_neumann(f, psi, N));
  }
}

std::vector<double> reconstruction_b(int m, int count) {
  std::vector<double> b;
  for (int j = 0; j < count; ++j) b.push_back(m + 2.0 * j * (m + j + 1));
  return b;
}

void BM_invert_LM_closed_form(benchmark::State& state) {
  const auto b = reconstruction_b(1, int(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(zernike::invert_LM({b}));
  }
}

void BM_invert_LM_dense(benchmark::State& state) {
  const auto b = reconstruction_b(1, int(state.range(0)));
  const int I = int(b.size());
  zernike::DenseMatrix lm(I, I);
  for (int i = 0; i < I; ++i) {
    for (int j = 0; j < I; ++j) {
      const double mij = b[std::min(i, j)];
      const double above = i > 0 ? b[std::min(i - 1, j)] : 0.0;
      lm.at(i, j) = mij - above;
    }
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(zernike::dense_inverse(lm));
  }
}

void BM_invert_C_closed_form(benchmark::State& state) {
  const int K = int(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(zernike::invert_C({2, K}));
  }
}

void BM_invert_C_dense(benchmark::State& state) {
  const int K = int(state.range(0));
  const int m = 2;
  zernike::DenseMatrix c(K + 1, K + 1);
  for (int u = 0; u <= K; ++u) {
    for (int k = u; k <= K; ++k) {
      c.at(u, k) = 4.0 * (m + 2 * u + 1) * (m + k + u + 2) * (k + 1 - u);
    }
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(zernike::dense_inverse(c));
  }
}

}  // namespace

BENCHMARK(BM_radial_eval)
    ->Args({8, 0})
    ->Args({16, 0})
    ->Args({20, 0})
    ->Args({8, 1})
    ->Args({16, 1})
    ->Args({40, 1})
    ->Args({8, 2})
    ->Args({16, 2})
    ->Args({40, 2});
BENCHMARK(BM_radial_eval_all_m)->Arg(10)->Arg(20)->Arg(40);
BENCHMARK(BM_apply_A)->Arg(10)->Arg(20)->Arg(40);
BENCHMARK(BM_reconstruct)->Arg(10)->Arg(20)->Arg(40);
BENCHMARK(BM_laplacian)->Arg(10)->Arg(20)->Arg(40);
BENCHMARK(BM_solve_neumann)->Arg(10)->Arg(20);
BENCHMARK(BM_invert_LM_closed_form)->Arg(4)->Arg(12)->Arg(64);
BENCHMARK(BM_invert_LM_dense)->Arg(4)->Arg(12)->Arg(64);
BENCHMARK(BM_invert_C_closed_form)->Arg(4)->Arg(12)->Arg(64);
BENCHMARK(BM_invert_C_dense)->Arg(4)->Arg(12)->Arg(64);

BENCHMARK_MAIN();

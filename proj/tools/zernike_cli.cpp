#include <cstdint>
#include <cstdio>
#include <exception>
#include <fstream>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "zernike/zernike.hpp"

namespace {

using zernike::Complex;

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

struct EvalArgs {
  std::string coeffs;
  std::string out;
  int grid = 0;
  std::string method = "recurrence";
};

struct GradArgs {
  std::string coeffs;
  std::string out_plus;
  std::string out_minus;
};

struct ReconstructArgs {
  std::string plus;
  std::string minus;
  std::string out;
  std::string report;
  int degree = 0;
};

struct LaplacianArgs {
  std::string coeffs;
  std::string out;
  bool inverse = false;
};

struct NeumannArgs {
  std::string f;
  std::string psi;
  std::string out;
  int degree = 0;
  double tol = 1e-10;
};

zernike::RadialMethod method_from(const std::string& name) {
  if (name == "monomial") return zernike::RadialMethod::Monomial;
  if (name == "recurrence") return zernike::RadialMethod::Recurrence;
  if (name == "dct") return zernike::RadialMethod::ChebyshevDCT;
  throw std::invalid_argument("unknown method '" + name + "'");
}

void run_eval(const EvalArgs& args) {
  const auto alpha = zernike::load_coefficients(args.coeffs);
  const auto method = method_from(args.method);
  std::string csv = "nu,mu,re,im\n";
  for (int i = 0; i < args.grid; ++i) {
    const double nu = -1.0 + 2.0 * i / (args.grid - 1);
    for (int j = 0; j < args.grid; ++j) {
      const double mu = -1.0 + 2.0 * j / (args.grid - 1);
      if (nu * nu + mu * mu > 1.0) continue;
      const zernike::EvalPoint p(nu, mu);
      Complex w{0.0, 0.0};
      for (const auto& [idx, v] : alpha.entries()) {
        w += v * zernike::circle_eval(idx, p, method);
      }
      csv += zernike::format_double(nu);
      csv += ',';
      csv += zernike::format_double(mu);
      csv += ',';
      csv += zernike::format_double(w.real());
      csv += ',';
      csv += zernike::format_double(w.imag());
      csv += '\n';
    }
  }
  write_text(args.out, csv);
}

void run_grad(const GradArgs& args) {
  const auto alpha = zernike::load_coefficients(args.coeffs);
  zernike::save_coefficients(args.out_plus,
                             zernike::apply_A(zernike::DerivativeSign::Plus, alpha));
  zernike::save_coefficients(
      args.out_minus, zernike::apply_A(zernike::DerivativeSign::Minus, alpha));
}

void run_reconstruct(const ReconstructArgs& args) {
  zernike::GradientCoefficientPair pair{zernike::load_coefficients(args.plus),
                                        zernike::load_coefficients(args.minus)};
  const auto report = zernike::reconstruct(pair, args.degree);
  zernike::save_coefficients(args.out, report.alpha_hat);
  if (!args.report.empty()) {
    std::string text = "residual_norm_sq\t";
    text += zernike::format_double(report.residual_norm_sq);
    text += "\npiston_undetermined\t";
    text += report.piston_undetermined ? "true" : "false";
    text += '\n';
    write_text(args.report, text);
  }
}

void run_laplacian(const LaplacianArgs& args) {
  const auto alpha = zernike::load_coefficients(args.coeffs);
  zernike::save_coefficients(args.out, args.inverse
                                           ? zernike::inverse_laplacian(alpha)
                                           : zernike::laplacian(alpha));
}

void run_neumann(const NeumannArgs& args) {
  const auto f = zernike::load_coefficients(args.f);
  const auto psi = zernike::load_boundary(args.psi);
  const auto sol = zernike::solve_neumann(f, psi, args.degree, args.tol);
  zernike::save_coefficients(args.out, sol.phi);
  std::printf("compatibility_defect\t%s\n",
              zernike::format_double(sol.compatibility_defect).c_str());
  std::printf("piston_free\t%s\n", sol.piston_free ? "true" : "false");
}

// ---------------------------------------------------------------------------
// selftest: regenerate the low-order Laplacian and pre-image tables and
// compare them against the published values, exactly.

struct ForwardRow {
  int m, n;
  std::vector<std::pair<int, std::int64_t>> terms;  // (degree, coefficient)
};

struct InverseRow {
  int m, n;
  std::vector<std::tuple<int, std::int64_t, std::int64_t>> terms;  // (n, num, den)
};

const std::vector<ForwardRow>& forward_table() {
  static const std::vector<ForwardRow> rows = {
      {0, 0, {}},
      {1, 1, {}},
      {0, 2, {{0, 8}}},
      {2, 2, {}},
      {1, 3, {{1, 24}}},
      {3, 3, {}},
      {0, 4, {{0, 24}, {2, 48}}},
      {2, 4, {{2, 48}}},
      {4, 4, {}},
      {1, 5, {{1, 64}, {3, 80}}},
      {3, 5, {{3, 80}}},
      {5, 5, {}},
      {0, 6, {{0, 48}, {2, 120}, {4, 120}}},
      {2, 6, {{2, 120}, {4, 120}}},
      {4, 6, {{4, 120}}},
      {6, 6, {}},
  };
  return rows;
}

const std::vector<InverseRow>& inverse_table() {
  static const std::vector<InverseRow> rows = {
      {0, 0, {{2, 1, 8}}},
      {1, 1, {{3, 1, 24}}},
      {0, 2, {{2, -1, 16}, {4, 1, 48}}},
      {2, 2, {{4, 1, 48}}},
      {1, 3, {{3, -1, 30}, {5, 1, 80}}},
      {3, 3, {{5, 1, 80}}},
      {0, 4, {{2, 1, 80}, {4, -1, 48}, {6, 1, 120}}},
      {2, 4, {{4, -1, 48}, {6, 1, 120}}},
      {4, 4, {{6, 1, 120}}},
      {1, 5, {{3, 1, 120}, {5, -1, 70}, {7, 1, 168}}},
      {3, 5, {{5, -1, 70}, {7, 1, 168}}},
      {5, 5, {{7, 1, 168}}},
      {0, 6, {{4, 1, 168}, {6, -1, 96}, {8, 1, 224}}},
      {2, 6, {{4, 1, 168}, {6, -1, 96}, {8, 1, 224}}},
      {4, 6, {{6, -1, 96}, {8, 1, 224}}},
      {6, 6, {{8, 1, 224}}},
  };
  return rows;
}

int run_selftest(bool inject_corruption) {
  int forward_ok = 0;
  int inverse_ok = 0;

  for (const auto& row : forward_table()) {
    std::map<int, std::int64_t> got;
    for (const auto& t : zernike::laplacian_terms({row.n, row.m})) {
      got[t.index.n] = t.coeff;
    }
    if (inject_corruption && row.m == 0 && row.n == 4) {
      got[0] += 1;  // simulate a broken coefficient constant
    }
    std::map<int, std::int64_t> want(row.terms.begin(), row.terms.end());
    if (got == want) {
      ++forward_ok;
    } else {
      std::printf("FAIL Table I row (m=%d, n=%d): expansion mismatch\n", row.m,
                  row.n);
    }
  }

  for (const auto& row : inverse_table()) {
    bool ok = true;
    const auto got = zernike::inverse_laplacian_terms({row.n, row.m});
    if (got.size() != row.terms.size()) ok = false;
    for (const auto& t : got) {
      bool matched = false;
      for (const auto& [n, num, den] : row.terms) {
        if (t.index.n == n && t.index.m == row.m &&
            t.coeff == zernike::make_rational(num, den)) {
          matched = true;
        }
      }
      if (!matched) ok = false;
    }
    if (ok) {
      ++inverse_ok;
    } else {
      std::printf("FAIL Table II row (m=%d, n=%d): pre-image mismatch\n", row.m,
                  row.n);
    }
  }

  std::printf("Table I: %d/%zu rows exact; Table II: %d/%zu rows exact\n",
              forward_ok, forward_table().size(), inverse_ok,
              inverse_table().size());
  const bool pass = forward_ok == int(forward_table().size()) &&
                    inverse_ok == int(inverse_table().size());
  std::printf("selftest: %s\n", pass ? "PASS" : "FAIL");
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zernike circle-polynomial toolkit"};
  app.require_subcommand(1);

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "evaluate a wavefront on a disk grid");
  eval->add_option("--coeffs", eval_args.coeffs, "coefficient file")->required();
  eval->add_option("--grid", eval_args.grid, "grid points per axis")
      ->required()
      ->check(CLI::Range(2, 1 << 16));
  eval->add_option("--method", eval_args.method, "radial evaluation method")
      ->check(CLI::IsMember({"monomial", "recurrence", "dct"}));
  eval->add_option("--out", eval_args.out, "output CSV file")->required();

  GradArgs grad_args;
  auto* grad = app.add_subcommand("grad", "coefficient-space gradient data");
  grad->add_option("--coeffs", grad_args.coeffs, "coefficient file")->required();
  grad->add_option("--out-plus", grad_args.out_plus, "d/dnu + i d/dmu output")
      ->required();
  grad->add_option("--out-minus", grad_args.out_minus, "d/dnu - i d/dmu output")
      ->required();

  ReconstructArgs rec_args;
  auto* rec = app.add_subcommand(
      "reconstruct", "least-squares wavefront fit from gradient data");
  rec->add_option("--plus", rec_args.plus, "plus-gradient coefficient file")
      ->required();
  rec->add_option("--minus", rec_args.minus, "minus-gradient coefficient file")
      ->required();
  rec->add_option("--degree", rec_args.degree, "truncation degree")->required();
  rec->add_option("--out", rec_args.out, "fitted coefficient file")->required();
  rec->add_option("--report", rec_args.report, "residual/piston report file");

  LaplacianArgs lap_args;
  auto* lap = app.add_subcommand("laplacian", "Laplacian of a wavefront");
  lap->add_option("--coeffs", lap_args.coeffs, "coefficient file")->required();
  lap->add_flag("--inverse", lap_args.inverse, "canonical pre-image instead");
  lap->add_option("--out", lap_args.out, "output coefficient file")->required();

  NeumannArgs neu_args;
  auto* neu = app.add_subcommand("neumann", "solve -laplacian(phi) = f");
  neu->add_option("--f", neu_args.f, "source coefficient file")->required();
  neu->add_option("--psi", neu_args.psi, "boundary Fourier file")->required();
  neu->add_option("--degree", neu_args.degree, "source degree cap")->required();
  neu->add_option("--tol", neu_args.tol, "m = 0 compatibility tolerance");
  neu->add_option("--out", neu_args.out, "solution coefficient file")->required();

  bool inject_corruption = false;
  auto* self = app.add_subcommand("selftest", "regenerate the published tables");
  self->add_flag("--inject-corruption", inject_corruption, "")->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*eval) run_eval(eval_args);
    if (*grad) run_grad(grad_args);
    if (*rec) run_reconstruct(rec_args);
    if (*lap) run_laplacian(lap_args);
    if (*neu) run_neumann(neu_args);
    if (*self) return run_selftest(inject_corruption);
  } catch (const zernike::parse_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}

#include "doctest.h"
#include "oracles.hpp"
#include "zernike/radial.hpp"

#include <cmath>
#include <stdexcept>

using namespace zernike;

namespace {

double eval(int n, int m, double rho, RadialMethod method) {
  return radial_eval(n, m, rho, method);
}

}  // namespace

TEST_SUITE("radial") {

TEST_CASE("radial_eval low-order closed forms") {
  CHECK(eval(0, 0, 0.7, RadialMethod::Monomial) == 1.0);
  CHECK(eval(0, 0, 0.7, RadialMethod::Recurrence) == 1.0);
  CHECK(eval(0, 0, 0.7, RadialMethod::ChebyshevDCT) ==
        doctest::Approx(1.0).epsilon(1e-15));

  // R_2^0 = 2 rho^2 - 1, R_3^1 = (3 rho^2 - 2) rho
  CHECK(eval(2, 0, 0.5, RadialMethod::Monomial) == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(eval(3, 1, 0.5, RadialMethod::Monomial) == doctest::Approx(-0.625).epsilon(1e-15));
  CHECK(eval(6, 4, 1.0, RadialMethod::Recurrence) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("radial_eval conventions and errors") {
  // invalid (degree, order) pairs evaluate to zero by convention
  CHECK(eval(3, 2, 0.5, RadialMethod::Recurrence) == 0.0);
  CHECK(eval(1, 3, 0.5, RadialMethod::Monomial) == 0.0);

  CHECK_THROWS_AS(eval(-1, 0, 0.5, RadialMethod::Recurrence), std::invalid_argument);
  CHECK_THROWS_AS(eval(2, -2, 0.5, RadialMethod::Recurrence), std::invalid_argument);
  CHECK_THROWS_AS(eval(2, 0, 1.5, RadialMethod::Recurrence), std::domain_error);
  CHECK_THROWS_AS(eval(2, 0, -0.1, RadialMethod::Monomial), std::domain_error);
  // documented monomial accuracy cap
  CHECK_THROWS_AS(eval(22, 0, 0.5, RadialMethod::Monomial), std::invalid_argument);
  CHECK_NOTHROW(eval(22, 0, 0.5, RadialMethod::Recurrence));
}

TEST_CASE("radial_eval_all_m batches match the monomial route") {
  const auto single = radial_eval_all_m(0, 0.3);
  REQUIRE(single.size() == 1);
  CHECK(single[0] == doctest::Approx(1.0).epsilon(1e-15));

  const auto deg2 = radial_eval_all_m(2, 0.5);
  REQUIRE(deg2.size() == 2);
  CHECK(deg2[0] == doctest::Approx(0.25).epsilon(1e-14));   // R_2^2
  CHECK(deg2[1] == doctest::Approx(-0.5).epsilon(1e-14));   // R_2^0

  const auto deg6 = radial_eval_all_m(6, 0.9);
  REQUIRE(deg6.size() == 4);
  int slot = 0;
  for (int m = 6; m >= 0; m -= 2, ++slot) {
    CHECK(std::abs(deg6[slot] - eval(6, m, 0.9, RadialMethod::Monomial)) <= 1e-12);
  }
}

TEST_CASE("circle_eval matches the Cartesian closed forms") {
  const EvalPoint p(0.3, 0.4);
  const Complex z11 = circle_eval({1, 1}, p);
  CHECK(std::abs(z11 - Complex{0.3, 0.4}) <= 1e-15);

  const Complex z2m2 = circle_eval({2, -2}, p);
  CHECK(std::abs(z2m2 - Complex{-0.07, -0.24}) <= 1e-15);

  const Complex z42 = circle_eval({4, 2}, EvalPoint::polar(0.5, 0.0));
  CHECK(std::abs(z42 - Complex{-0.5, 0.0}) <= 1e-15);

  // invalid index evaluates to zero, not an error
  CHECK(circle_eval({2, 1}, p) == Complex{0.0, 0.0});
  CHECK(circle_eval({1, -3}, p) == Complex{0.0, 0.0});
}

TEST_CASE("lukosz polynomials and the generalized-Zernike connection") {
  // L_n^m(1) = 0
  CHECK(lukosz_eval(2, 0, 1.0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(lukosz_eval(2, 0, 0.5) == doctest::Approx(2 * 0.25 - 2).epsilon(1e-14));

  CHECK(lukosz_eval(4, 2, 0.5, RadialMethod::Monomial) ==
        doctest::Approx(-0.75).epsilon(1e-14));

  const LukoszCoeffs lc = lukosz_coeffs(6, 2);
  CHECK(lc.n_pos == 6);
  CHECK(lc.n_neg == 4);
  CHECK(lc.m == 2);

  // R_4^{2,1} = -(4-2+2)/(2*6) L_6^2
  const double lhs = -(4.0 - 2 + 2) / (2.0 * 6) *
                     lukosz_eval(6, 2, 0.5, RadialMethod::Monomial);
  const double r62 = eval(6, 2, 0.5, RadialMethod::Monomial);
  const double r42 = eval(4, 2, 0.5, RadialMethod::Monomial);
  CHECK(lhs == doctest::Approx(-(1.0 / 3) * (r62 - r42)).epsilon(1e-14));

  CHECK_THROWS_AS(lukosz_coeffs(2, 2), std::invalid_argument);  // n < m + 2
  CHECK_THROWS_AS(lukosz_coeffs(3, 0), std::invalid_argument);  // parity
  CHECK_THROWS_AS(lukosz_coeffs(4, -2), std::invalid_argument);
}

TEST_CASE("scale_expansion coefficients") {
  for (double eps : {0.3, 0.7, 1.0}) {
    const auto c = scale_expansion(2, 0, eps);
    REQUIRE(c.size() == 2);
    CHECK(c[0].first == 0);
    CHECK(c[0].second == doctest::Approx(eps * eps - 1).epsilon(1e-14));
    CHECK(c[1].first == 2);
    CHECK(c[1].second == doctest::Approx(eps * eps).epsilon(1e-14));
  }

  SUBCASE("identity scaling") {
    const auto c = scale_expansion(7, 3, 1.0);
    REQUIRE(c.size() == 3);
    for (const auto& [n, v] : c) {
      CHECK(v == doctest::Approx(n == 7 ? 1.0 : 0.0).epsilon(1e-14));
    }
  }

  SUBCASE("pointwise identity at n' = 4") {
    const auto c = scale_expansion(4, 0, 0.5);
    for (double rho : {0.2, 0.6, 1.0}) {
      double acc = 0.0;
      for (const auto& [n, v] : c) {
        acc += v * eval(n, 0, rho, RadialMethod::Monomial);
      }
      CHECK(std::abs(acc - eval(4, 0, 0.5 * rho, RadialMethod::Monomial)) <= 1e-12);
    }
  }

  CHECK_THROWS_AS(scale_expansion(4, 0, 0.0), std::domain_error);
  CHECK_THROWS_AS(scale_expansion(4, 0, 1.5), std::domain_error);
  CHECK_THROWS_AS(scale_expansion(4, 3, 0.5), std::invalid_argument);
}

TEST_CASE("property: three methods agree across the valid triangle") {
  for (int n = 0; n <= 12; ++n) {
    for (int m = n % 2; m <= n; m += 2) {
      for (int r = 0; r <= 10; ++r) {
        const double rho = r / 10.0;
        const double mono = eval(n, m, rho, RadialMethod::Monomial);
        const double rec = eval(n, m, rho, RadialMethod::Recurrence);
        const double dct = eval(n, m, rho, RadialMethod::ChebyshevDCT);
        CAPTURE(n); CAPTURE(m); CAPTURE(rho);
        CHECK(std::abs(mono - dct) <= 1e-12);
        CHECK(std::abs(mono - rec) <= 1e-12);
      }
    }
  }
  for (int n = 13; n <= 50; ++n) {
    for (int m = n % 2; m <= n; m += 2) {
      for (int r = 0; r <= 10; ++r) {
        const double rho = r / 10.0;
        CAPTURE(n); CAPTURE(m); CAPTURE(rho);
        CHECK(std::abs(eval(n, m, rho, RadialMethod::Recurrence) -
                       eval(n, m, rho, RadialMethod::ChebyshevDCT)) <= 1e-10);
      }
    }
  }
}

TEST_CASE("property: endpoint value R(1) = 1") {
  for (int n = 0; n <= 50; ++n) {
    for (int m = n % 2; m <= n; m += 2) {
      CAPTURE(n); CAPTURE(m);
      CHECK(std::abs(eval(n, m, 1.0, RadialMethod::Recurrence) - 1.0) <= 1e-13);
      CHECK(std::abs(eval(n, m, 1.0, RadialMethod::ChebyshevDCT) - 1.0) <= 1e-13);
      if (n <= 20) {
        CHECK(std::abs(eval(n, m, 1.0, RadialMethod::Monomial) - 1.0) <= 1e-13);
      }
    }
  }
}

TEST_CASE("property: both three-point degree-raising recursions hold") {
  // rho R_n^m = (n+m+2)/(2n+2) R_{n+1}^{m+1} + (n-m)/(2n+2) R_{n-1}^{m+1}
  //           = (n-m+2)/(2n+2) R_{n+1}^{|m-1|} + (n+m)/(2n+2) R_{n-1}^{|m-1|}
  for (int n = 0; n <= 20; ++n) {
    for (int m = n % 2; m <= n; m += 2) {
      for (int r = 0; r <= 10; ++r) {
        const double rho = r / 10.0;
        RadialTable tab(n + 1, rho);
        const double lhs = rho * tab.at(n, m);
        const double up = (n + m + 2.0) / (2.0 * n + 2) * tab.at(n + 1, m + 1) +
                          (n - m) / (2.0 * n + 2) * tab.at(n - 1, m + 1);
        const double dn =
            (n - m + 2.0) / (2.0 * n + 2) * tab.at(n + 1, std::abs(m - 1)) +
            (n + m) / (2.0 * n + 2) * tab.at(n - 1, std::abs(m - 1));
        CAPTURE(n); CAPTURE(m); CAPTURE(rho);
        CHECK(std::abs(lhs - up) <= 1e-12);
        CHECK(std::abs(lhs - dn) <= 1e-12);
      }
    }
  }
}

TEST_CASE("property: azimuthal difference identity") {
  // (m / rho)(R_n^m - R_{n-2}^m) = n (R_{n-1}^{|m-1|} - R_{n-1}^{m+1})
  for (int n = 1; n <= 20; ++n) {
    for (int m = n % 2; m <= n; m += 2) {
      for (int r = 1; r <= 10; ++r) {
        const double rho = r / 10.0;
        RadialTable tab(n, rho);
        const double lhs = m / rho * (tab.at(n, m) - tab.at(n - 2, m));
        const double rhs =
            n * (tab.at(n - 1, std::abs(m - 1)) - tab.at(n - 1, m + 1));
        CAPTURE(n); CAPTURE(m); CAPTURE(rho);
        CHECK(std::abs(lhs - rhs) <= 1e-12);
      }
    }
  }
}

TEST_CASE("property: radial derivative sum identity against finite differences") {
  // d/drho (R_n^m - R_{n-2}^m) = n (R_{n-1}^{|m-1|} + R_{n-1}^{m+1})
  const double h = 1e-5;
  for (int n = 1; n <= 20; ++n) {
    for (int m = n % 2; m <= n; m += 2) {
      for (int r = 1; r <= 9; ++r) {
        const double rho = r / 10.0;
        RadialTable hi(n, rho + h), lo(n, rho - h), mid(n, rho);
        const double fd = ((hi.at(n, m) - hi.at(n - 2, m)) -
                           (lo.at(n, m) - lo.at(n - 2, m))) /
                          (2 * h);
        const double rhs =
            n * (mid.at(n - 1, std::abs(m - 1)) + mid.at(n - 1, m + 1));
        CAPTURE(n); CAPTURE(m); CAPTURE(rho);
        CHECK(std::abs(fd - rhs) <= 1e-6);
      }
    }
  }
}

TEST_CASE("property: generalized Zernike functions are weight-orthogonal") {
  // Int_0^1 (1-rho^2)^{-1} R_{n1}^{m,1} R_{n2}^{m,1} rho drho
  //   = delta_{n1 n2} (n - m + 2) / (2 (n + m + 2)(n + 2)),
  // with R_n^{m,1} = -(n - m + 2)/(2(n + 2)) L_{n+2}^m.  The n1 = n2 = m = 0
  // case integrates (1 - rho^2) rho exactly to 1/4, fixing the constant.
  auto gen_zernike = [](int n, int m, double rho) {
    RadialTable tab(n + 2, rho);
    return -(n - m + 2.0) / (2.0 * (n + 2)) * (tab.at(n + 2, m) - tab.at(n, m));
  };
  for (int m = 0; m <= 3; ++m) {
    for (int n1 = m; n1 <= 9; n1 += 2) {
      for (int n2 = n1; n2 <= 9; n2 += 2) {
        const double integral = oracles::simpson(
            [&](double rho) {
              const double w = 1.0 - rho * rho;
              return gen_zernike(n1, m, rho) * gen_zernike(n2, m, rho) * rho / w;
            },
            0.0, 1.0 - 1e-6, 4096);
        const double expected =
            n1 == n2 ? (n1 - m + 2.0) / (2.0 * (n1 + m + 2) * (n1 + 2)) : 0.0;
        CAPTURE(m); CAPTURE(n1); CAPTURE(n2);
        CHECK(std::abs(integral - expected) <= 1e-6);
      }
    }
  }
}

}  // TEST_SUITE

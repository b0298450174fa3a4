#include <doctest.h>

#include "smoothlab/translate.hpp"
#include "smoothlab/wspace.hpp"

#include <cmath>
#include <random>

using namespace smoothlab;

namespace {
double unit(std::mt19937_64& rng) { return (rng() >> 11) * 0x1.0p-53; }

FunctionRep random_poly(std::mt19937_64& rng, int degree) {
  SpectralFn s;
  s.coeffs.resize(degree + 1);
  for (double& c : s.coeffs) c = 2.0 * unit(rng) - 1.0;
  return FunctionRep::from_spectral(std::move(s));
}
} // namespace

TEST_SUITE_BEGIN("translate");

TEST_CASE("kernel point inequalities at the boundary case") {
  // x=0, z=1, t=pi/2 lands on R = -1 with zero slack margins satisfied
  const auto p = TranslationKernelPoint::make(0.0, 1.0, std::acos(0.0) * 1.0);
  CHECK(p.R == doctest::Approx(-1.0));
  CHECK(p.slack_si_x() >= -1e-15);
  CHECK(p.slack_si_y() >= -1e-15);
  CHECK(p.slack_combo() >= -1e-15);
}

TEST_CASE("T1 closed forms") {
  const FunctionRep one = FunctionRep::named("const:c=1");
  const FunctionRep ident = FunctionRep::named("identity");
  std::mt19937_64 rng(23);
  for (int i = 0; i < 12; ++i) {
    const double y = 2.0 * unit(rng) - 1.0;
    const double x = 1.9 * unit(rng) - 0.95;
    // T1(1) = P_2^{(0,0)}(y)
    CHECK(apply_T1_at(one, y, x) ==
          doctest::Approx((3.0 * y * y - 1.0) / 2.0).epsilon(1e-12).scale(1.0));
    // T1(x) = x P_3^{(0,0)}(y); oracle: order-64 quadrature
    const double expected = x * (5.0 * y * y * y - 3.0 * y) / 2.0;
    CHECK(apply_T1_at(ident, y, x) ==
          doctest::Approx(expected).epsilon(1e-12).scale(1.0));
    CHECK(apply_T1_at(ident, y, x, 64) ==
          doctest::Approx(expected).epsilon(1e-12).scale(1.0));
  }
  CHECK_THROWS_AS(apply_T1_at(one, 1.5, 0.0), std::domain_error);
}

TEST_CASE("T2 closed forms") {
  const FunctionRep one = FunctionRep::named("const:c=1");
  const FunctionRep ident = FunctionRep::named("identity");
  std::mt19937_64 rng(29);
  for (int i = 0; i < 12; ++i) {
    const double y = 2.0 * unit(rng) - 1.0;
    const double x = 1.9 * unit(rng) - 0.95;
    CHECK(apply_T2_at(one, y, x) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(apply_T2_at(ident, y, x) ==
          doctest::Approx(x * y).epsilon(1e-12).scale(1.0));
  }
}

TEST_CASE("eigen relations for both auxiliary operators") {
  std::mt19937_64 rng(31);
  for (int nu = 0; nu <= 10; ++nu) {
    const FunctionRep p_nu =
        FunctionRep::named("jacobi22:n=" + std::to_string(nu));
    for (int i = 0; i < 5; ++i) {
      const double y = 2.0 * unit(rng) - 1.0;
      const double x = 1.9 * unit(rng) - 0.95;
      const double base = jacobi_eval({2.0, 2.0}, nu, x);
      CHECK(apply_T1_at(p_nu, y, x) ==
            doctest::Approx(base * legendre_eval(nu + 2, y))
                .epsilon(1e-8)
                .scale(1.0));
      CHECK(apply_T2_at(p_nu, y, x) ==
            doctest::Approx(base * jacobi_eval({2.0, 2.0}, nu, y))
                .epsilon(1e-8)
                .scale(1.0));
    }
  }
}

TEST_CASE("combined operator identities") {
  const FunctionRep one = FunctionRep::named("const:c=1");
  const FunctionRep ident = FunctionRep::named("identity");
  std::mt19937_64 rng(37);
  for (int i = 0; i < 12; ++i) {
    const double y = 2.0 * unit(rng) - 1.0;
    const double x = 1.9 * unit(rng) - 0.95;
    CHECK(apply_T_at(one, y, x) == doctest::Approx(1.0).epsilon(1e-12));
    // R_1(y) = y^3; oracle: phi-integral backend at t = arccos y
    CHECK(apply_T_at(ident, y, x) ==
          doctest::Approx(x * y * y * y).epsilon(1e-12).scale(1.0));
    CHECK(apply_hatT_at(ident, std::acos(y), x) ==
          doctest::Approx(x * y * y * y).epsilon(1e-11).scale(1.0));
  }

  // y = 1 is the identity on polynomials
  std::mt19937_64 rng2(41);
  const FunctionRep poly = random_poly(rng2, 16);
  for (int i = 0; i < 10; ++i) {
    const double x = 1.9 * unit(rng2) - 0.95;
    CHECK(apply_T_at(poly, 1.0, x) ==
          doctest::Approx(poly(x)).epsilon(1e-8).scale(1.0));
  }
}

TEST_CASE("hatT properties: t=0 identity, evenness, backend agreement") {
  std::mt19937_64 rng(43);
  const FunctionRep poly = random_poly(rng, 12);

  const FunctionRep at0 = apply_hatT(poly, 0.0);
  for (double x : {-0.9, -0.2, 0.5}) {
    CHECK(at0(x) == doctest::Approx(poly(x)).epsilon(1e-10).scale(1.0));
  }

  const FunctionRep plus = apply_hatT(poly, 0.7);
  const FunctionRep minus = apply_hatT(poly, -0.7);
  for (int i = 0; i < plus.grid_size(); ++i) {
    CHECK(plus.grid_values()[i] ==
          doctest::Approx(minus.grid_values()[i]).epsilon(1e-13).scale(1.0));
  }

  const FunctionRep one = FunctionRep::named("const:c=1");
  for (double t : {0.3, 1.2, 2.9}) {
    const FunctionRep tr = apply_hatT(one, t);
    for (double x : {-0.8, 0.1, 0.9}) {
      CHECK(tr(x) == doctest::Approx(1.0).epsilon(1e-11));
    }
  }

  // backend agreement on polynomials at random (x, t)
  for (int i = 0; i < 50; ++i) {
    const double t = 3.0 * unit(rng);
    const double x = 1.9 * unit(rng) - 0.95;
    CHECK(apply_hatT_at(poly, t, x) ==
          doctest::Approx(apply_T_at(poly, std::cos(t), x))
              .epsilon(1e-8)
              .scale(1.0));
  }
}

TEST_CASE("eigen factorization and polynomial preservation") {
  std::mt19937_64 rng(47);
  // the ratio T(P_n)/P_n is independent of x and equals R_n(y)
  for (int n : {2, 5, 8}) {
    const FunctionRep p_n =
        FunctionRep::named("jacobi22:n=" + std::to_string(n));
    const double y = 0.63;
    const FunctionRep tp = apply_T(p_n, y);
    double mean = 0.0;
    int count = 0;
    std::vector<double> ratios;
    // the normalized basis is small in the interior, so include points near
    // the endpoints where |P_n| stays above the cutoff
    for (int i = 0; i < 300; ++i) {
      const double x = 1.99 * unit(rng) - 0.995;
      const double px = p_n(x);
      if (std::abs(px) < 0.1) continue;
      ratios.push_back(tp(x) / px);
      mean += ratios.back();
      ++count;
    }
    REQUIRE(count > 5);
    mean /= count;
    double var = 0.0;
    for (double r : ratios) var += (r - mean) * (r - mean);
    var /= count;
    CHECK(var < 1e-8);
    CHECK(mean == doctest::Approx(eigenvalue_R(n, y)).epsilon(1e-8));
  }

  // degree-(n-1) polynomials map to degree-(n-1) polynomials
  const FunctionRep poly = random_poly(rng, 9);
  const FunctionRep tp = apply_T(poly, -0.4);
  const SpectralFn s = analyze([&](double x) { return tp(x); }, 20, 64);
  double norm = 0.0;
  for (double c : s.coeffs) norm = std::max(norm, std::abs(c));
  for (int k = 10; k <= 20; ++k) {
    CHECK(std::abs(s.coeffs[k]) < 1e-8 * std::max(norm, 1.0));
  }
}

TEST_CASE("linearity") {
  std::mt19937_64 rng(53);
  const FunctionRep f = random_poly(rng, 7);
  const FunctionRep g = FunctionRep::named("abspow:a=0,s=1");
  const double a = 1.7, b = -0.6, y = 0.35;
  const FunctionRep combo = FunctionRep::from_callable(
      "combo", [&, a, b](double x) { return a * f(x) + b * g(x); },
      g.breakpoints());
  const FunctionRep lhs = apply_T(combo, y);
  const FunctionRep tf = apply_T(f, y);
  const FunctionRep tg = apply_T(g, y);
  for (double x : {-0.9, -0.3, 0.2, 0.8}) {
    CHECK(lhs(x) ==
          doctest::Approx(a * tf(x) + b * tg(x)).epsilon(1e-10).scale(1.0));
  }
}

TEST_CASE("spectral backend multiplies by R_k") {
  const SpectralFn one = analyze([](double) { return 1.0; }, 5, 16);
  const SpectralFn tone = apply_T_spectral(one, 0.8);
  for (int k = 0; k <= 5; ++k) {
    CHECK(tone.coeffs[k] == doctest::Approx(one.coeffs[k]).epsilon(1e-14));
  }

  const SpectralFn ident = analyze([](double x) { return x; }, 5, 16);
  const double y = -0.45;
  const SpectralFn tid = apply_T_spectral(ident, y);
  CHECK(tid.coeffs[1] ==
        doctest::Approx(ident.coeffs[1] * y * y * y).epsilon(1e-13));

  const SpectralFn unchanged = apply_T_spectral(ident, 1.0);
  for (int k = 0; k <= 5; ++k) {
    CHECK(unchanged.coeffs[k] ==
          doctest::Approx(ident.coeffs[k]).epsilon(1e-13));
  }
}

TEST_CASE("self-adjointness for smooth and kinked pairs") {
  const FunctionRep one = FunctionRep::named("const:c=1");
  const FunctionRep ident = FunctionRep::named("identity");
  const FunctionRep p2 = FunctionRep::named("jacobi22:n=2");
  const FunctionRep p3 = FunctionRep::named("jacobi22:n=3");
  const FunctionRep kink = FunctionRep::named("abspow:a=0,s=1");

  {
    const auto [lhs, rhs] = adjoint_pair(ident, ident, 0.5, 1);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-13).scale(1.0));
  }
  {
    const auto [lhs, rhs] = adjoint_pair(one, ident, 0.3, 2);
    CHECK(std::abs(lhs - rhs) <= 1e-9 * (1.0 + std::abs(lhs)));
    // both sides reduce to y * integral x (1-x^2)^2 dx, an odd integral
    CHECK(std::abs(lhs) < 1e-12);
  }
  {
    const auto [lhs, rhs] = adjoint_pair(p2, p3, -0.7, 1);
    CHECK(std::abs(lhs - rhs) <= 1e-9 * (1.0 + std::abs(lhs)));
  }
  {
    const auto [lhs, rhs] = adjoint_pair(kink, p3, 0.8, 2);
    CHECK(std::abs(lhs - rhs) <= 1e-8 * (1.0 + std::abs(lhs)));
  }
}

TEST_SUITE_END();

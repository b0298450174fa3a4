#include <doctest.h>

#include "smoothlab/smoothness.hpp"

#include <cmath>
#include <random>

using namespace smoothlab;

namespace {
double unit(std::mt19937_64& rng) { return (rng() >> 11) * 0x1.0p-53; }
} // namespace

TEST_SUITE_BEGIN("smoothness");

TEST_CASE("difference closed forms") {
  const FunctionRep one = FunctionRep::named("const:c=1");
  const double ts[] = {0.4, 1.1};
  const FunctionRep d1 = difference(one, ts);
  for (double x : {-0.9, 0.0, 0.7}) {
    CHECK(std::abs(d1(x)) < 1e-11);
  }

  // first difference of the identity: x (cos^3 t - 1)
  const FunctionRep ident = FunctionRep::named("identity");
  const double t1[] = {0.8};
  const FunctionRep d2 = difference(ident, t1);
  const double factor = std::pow(std::cos(0.8), 3) - 1.0;
  for (double x : {-0.7, 0.2, 0.9}) {
    CHECK(d2(x) == doctest::Approx(x * factor).epsilon(1e-10).scale(1.0));
  }

  const double zeros[] = {0.0, 0.0};
  const FunctionRep d3 = difference(ident, zeros);
  for (double x : {-0.5, 0.4}) {
    CHECK(std::abs(d3(x)) < 1e-11);
  }

  CHECK_THROWS_AS(difference(one, std::span<const double>{}),
                  std::invalid_argument);
}

TEST_CASE("difference is even in each step") {
  const FunctionRep f = FunctionRep::named("abspow:a=0,s=1");
  const double pos[] = {0.5, 0.3};
  const double mix[] = {0.5, -0.3};
  const FunctionRep a = difference(f, pos);
  const FunctionRep b = difference(f, mix);
  for (int i = 0; i < a.grid_size(); ++i) {
    CHECK(a.grid_values()[i] ==
          doctest::Approx(b.grid_values()[i]).epsilon(1e-12).scale(1.0));
  }
}

TEST_CASE("difference_spectral closed forms and backend agreement") {
  const SpectralFn ident = analyze([](double x) { return x; }, 12, 32);
  const double ts[] = {0.6, 0.9};
  const SpectralFn d = difference_spectral(ident, ts);
  // k = 0 coefficient vanishes after one difference (R_0 = 1)
  CHECK(std::abs(d.coeffs[0]) < 1e-14);
  const double expected = ident.coeffs[1] *
                          (std::pow(std::cos(0.6), 3) - 1.0) *
                          (std::pow(std::cos(0.9), 3) - 1.0);
  CHECK(d.coeffs[1] == doctest::Approx(expected).epsilon(1e-12));

  // agreement with the quadrature backend on a polynomial
  std::mt19937_64 rng(7);
  SpectralFn s;
  s.coeffs.resize(13);
  for (double& c : s.coeffs) c = 2.0 * unit(rng) - 1.0;
  const FunctionRep f = FunctionRep::from_spectral(s);
  const FunctionRep diff_quad = difference(f, ts);
  const SpectralFn diff_spec = difference_spectral(s, ts);
  const SpectralFn diff_quad_coeffs =
      analyze([&](double x) { return diff_quad(x); }, 12, 48);
  for (int k = 0; k <= 12; ++k) {
    CHECK(diff_quad_coeffs.coeffs[k] ==
          doctest::Approx(diff_spec.coeffs[k]).epsilon(1e-8).scale(1.0));
  }
}

TEST_CASE("modulus basics") {
  const NormParams params{2.0, 1.25, 1.25};

  const ModulusResult zero_delta =
      modulus(FunctionRep::named("identity"), 1, 0.0, params);
  CHECK(zero_delta.value == 0.0);
  CHECK(zero_delta.argmax_t == std::vector<double>{0.0});

  const ModulusResult constant =
      modulus(FunctionRep::named("const:c=3"), 1, 0.5, params, 4);
  CHECK(constant.value < 1e-11);
  CHECK(constant.samples_used == 4);

  // sup attained at t = delta since 1 - cos^3 t increases on [0, pi]
  const double delta = 0.7;
  const ModulusResult ident =
      modulus(FunctionRep::named("identity"), 1, delta, params, 8);
  const double norm_x = weighted_norm(FunctionRep::named("identity"), params);
  const double expected = (1.0 - std::pow(std::cos(delta), 3)) * norm_x;
  CHECK(ident.value == doctest::Approx(expected).epsilon(1e-6));
  CHECK(ident.argmax_t == std::vector<double>{delta});
  CHECK(ident.samples_used == 8);

  CHECK_THROWS_AS(modulus(FunctionRep::named("identity"), 1, -0.1, params),
                  std::invalid_argument);
  CHECK_THROWS_AS(modulus(FunctionRep::named("identity"), 1, 0.5, params, 1),
                  std::invalid_argument);
}

TEST_CASE("dense scan oracle for the 1-D sup") {
  // dense scan over t confirms the corner maximizer used by the sampler
  const NormParams params{2.0, 1.25, 1.25};
  const FunctionRep ident = FunctionRep::named("identity");
  const double delta = 1.2;
  double dense_best = 0.0;
  for (int i = 0; i <= 60; ++i) {
    const double t = delta * i / 60.0;
    if (t == 0.0) continue;
    const double ts[] = {t};
    dense_best =
        std::max(dense_best, weighted_norm(difference(ident, ts), params));
  }
  const ModulusResult sampled = modulus(ident, 1, delta, params, 8);
  CHECK(sampled.value == doctest::Approx(dense_best).epsilon(1e-6));
}

TEST_CASE("modulus monotone in delta and homogeneous") {
  const NormParams params{2.0, 1.25, 1.25};
  const FunctionRep f = FunctionRep::named("abspow:a=0,s=1");
  const ModulusResult small = modulus(f, 1, 0.25, params, 4);
  const ModulusResult large = modulus(f, 1, 0.5, params, 4);
  CHECK(small.value <= large.value + 1e-10);

  const FunctionRep scaled = FunctionRep::from_callable(
      "3|x|", [](double x) { return 3.0 * std::abs(x); },
      std::vector<double>{0.0});
  const ModulusResult base = modulus(f, 1, 0.5, params, 4);
  const ModulusResult tripled = modulus(scaled, 1, 0.5, params, 4);
  CHECK(tripled.value == doctest::Approx(3.0 * base.value).epsilon(1e-9));
}

TEST_CASE("order-2r ceiling on polynomials") {
  // each factor R_k(cos t) - 1 = O(t^2), so for polynomial f the modulus
  // decays at least like delta^{2r}
  const NormParams params{2.0, 1.25, 1.25};
  const FunctionRep p3 = FunctionRep::named("jacobi22:n=3");
  const int r = 1;
  std::vector<double> ratios;
  for (int k = 3; k <= 10; ++k) {
    const double delta = std::ldexp(1.0, -k);
    const ModulusResult m = modulus(p3, r, delta, params, 4);
    ratios.push_back(m.value / std::pow(delta, 2.0 * r));
  }
  const double first = ratios.front();
  for (double ratio : ratios) {
    CHECK(ratio < 4.0 * first + 1.0);
  }
}

TEST_CASE("modulus_decay ordering and validation") {
  const NormParams params{2.0, 1.25, 1.25};
  const FunctionRep f = FunctionRep::named("abspow:a=0,s=1");
  const double deltas[] = {0.5, 0.25, 0.125};
  const auto sweep = modulus_decay(f, 1, params, deltas, 4);
  REQUIRE(sweep.size() == 3);
  CHECK(sweep[0].value >= sweep[1].value - 1e-10);
  CHECK(sweep[1].value >= sweep[2].value - 1e-10);

  const double bad[] = {0.25, 0.5};
  CHECK_THROWS_AS(modulus_decay(f, 1, params, bad, 4), std::invalid_argument);
}

TEST_SUITE_END();

#include <doctest.h>

#include "smoothlab/errors.hpp"
#include "smoothlab/verify.hpp"

#include <cmath>

using namespace smoothlab;

TEST_SUITE_BEGIN("verify");

TEST_CASE("bound exponents case table") {
  {
    const BoundExponents e = BoundExponents::from({2.0, 1.25, 1.25});
    CHECK(e.gamma == doctest::Approx(1.25));
    CHECK(e.gamma1 == 0.0);
    CHECK(e.gamma2 == 0.0);
    // gamma = 1.25 = 3/2 - 1/(2p): boundary case includes epsilon
    CHECK(e.gamma3 == doctest::Approx(0.25));
  }
  {
    const BoundExponents e = BoundExponents::from({NormParams::inf, 1.0, 1.0});
    CHECK(e.gamma3 == 0.0); // gamma = 1 < 3/2
  }
  {
    const BoundExponents e = BoundExponents::from({1.0, 1.5, 1.0});
    CHECK(e.gamma == doctest::Approx(1.0));
    CHECK(e.gamma1 == doctest::Approx(0.5));
    CHECK(e.gamma2 == 0.0);
    CHECK(e.gamma3 == doctest::Approx(0.0)); // p=1, gamma = 1: gamma - 1
  }
  {
    const BoundExponents e = BoundExponents::from({1.0, 1.2, 1.8});
    CHECK(e.gamma1 == 0.0);
    CHECK(e.gamma2 == doctest::Approx(0.6));
    CHECK(e.gamma1 * e.gamma2 == 0.0);
    CHECK(e.gamma3 == doctest::Approx(0.2));
  }
  CHECK_THROWS_AS(BoundExponents::from({2.0, 1.25, 1.25}, 0.7),
                  std::invalid_argument);
}

TEST_CASE("trend assessment") {
  {
    std::vector<std::pair<double, double>> flat = {
        {2, 1.0}, {4, 1.05}, {8, 0.98}, {16, 1.02}, {32, 1.0}};
    const TrendSummary t = assess_bounded_ratios(flat);
    CHECK(t.bounded);
    CHECK(t.slope <= 0.1);
  }
  {
    std::vector<std::pair<double, double>> growing;
    for (int k = 1; k <= 6; ++k)
      growing.emplace_back(std::pow(2.0, k), std::pow(2.0, 0.5 * k));
    const TrendSummary t = assess_bounded_ratios(growing);
    CHECK_FALSE(t.bounded);
    CHECK(t.slope > 0.4);
  }
  {
    // one spike above 10x median
    std::vector<std::pair<double, double>> spike = {
        {2, 1.0}, {4, 1.0}, {8, 30.0}, {16, 1.0}, {32, 1.0}};
    const TrendSummary t = assess_bounded_ratios(spike);
    CHECK_FALSE(t.bounded);
  }
}

TEST_CASE("elementary kernel inequalities") {
  const CheckReport r = check_elementary(100000, 42);
  CHECK(r.passed);
  CHECK(r.worst <= 1e-12);
  CHECK(r.samples == 100000);
  CHECK(r.notes.find("empirical C") != std::string::npos);

  // boundary case x=0, z=1, t=pi/2 -> R = -1 exactly
  const auto p = TranslationKernelPoint::make(0.0, 1.0, std::acos(0.0));
  CHECK(p.R == doctest::Approx(-1.0));
}

TEST_CASE("eigen check passes at tight tolerance") {
  const CheckReport r = check_eigen(6, 1e-8, 7);
  CHECK(r.passed);
  CHECK(r.worst < 1e-8);
}

TEST_CASE("adjoint check on explicit pairs") {
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"const:c=1", "identity"},
      {"jacobi22:n=2", "jacobi22:n=3"},
      {"abspow:a=0,s=1", "jacobi22:n=3"},
      {"identity", "identity"},
  };
  const CheckReport r = check_adjoint(pairs, 1e-8);
  CHECK(r.passed);
  CHECK(r.samples == static_cast<long>(pairs.size()) * 6);
}

TEST_CASE("bernstein-markov known ratio and trend") {
  // small but real run
  const CheckReport r =
      check_bernstein_markov({2.0, 1.25, 1.25}, 0.5, 0.5, 16, 25, 11);
  CHECK(r.passed);
  CHECK(std::isfinite(r.slope));

  CHECK_THROWS_AS(
      check_bernstein_markov({2.0, -0.6, 0.0}, 0.5, 0.5, 16, 10, 1),
      std::invalid_argument);
}

TEST_CASE("bernstein-markov spot value: P(x)=x at p=inf, alpha=beta=0") {
  // ratio1 = ||P'||_{inf,1/2,1/2} / (2 ||P||_{inf,0,0}) = 1/2
  const NormParams params{NormParams::inf, 0.0, 0.0};
  const FunctionRep p = FunctionRep::named("identity");
  const FunctionRep dp = FunctionRep::named("const:c=1");
  const double r1 = weighted_norm(dp, {NormParams::inf, 0.5, 0.5}) /
                    (2.0 * weighted_norm(p, params));
  CHECK(r1 == doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("bound-T check") {
  const double t_grid[] = {0.01, 0.02, 0.05, 0.1, 0.3, 0.7, 1.0};
  const std::vector<std::string> subset = {"const:c=1", "identity",
                                           "abspow:a=0,s=1"};
  const CheckReport r = check_bound_T(
      {2.0, 1.25, 1.25}, BoundExponents::from({2.0, 1.25, 1.25}), t_grid,
      subset);
  CHECK(r.passed);
  CHECK(r.worst < 10.0);

  CHECK_THROWS_AS(check_bound_T({2.0, 0.5, 0.5},
                                BoundExponents::from({2.0, 0.5, 0.5}), t_grid,
                                subset),
                  ClassParameterError);
}

TEST_CASE("rho-sigma transfer check") {
  // rho = sigma = 0 reduces to E-monotonicity in the same norm
  const CheckReport trivial =
      check_rho_sigma("abspow:a=0,s=1", {2.0, 1.25, 1.25}, {0.0, 0.0}, 4);
  CHECK(trivial.passed);

  // hypothesis violation refuses
  CHECK_THROWS_AS(
      check_rho_sigma("abspow:a=0,s=1", {2.0, 1.25, 1.25}, {0.5, 0.5, 0.5}, 4),
      ClassParameterError);

  const CheckReport shifted =
      check_rho_sigma("abspow:a=0,s=1", {2.0, 1.0, 1.0}, {0.5, 0.5}, 4);
  CHECK(shifted.passed);
}

TEST_CASE("degree-Q check") {
  const CheckReport r = check_degree_Q("abspow:a=0,s=1", 2, 2, 4, 1e-8);
  CHECK(r.passed);
  CHECK(r.worst <= 1e-8);

  const CheckReport one = check_degree_Q("const:c=1", 1, 2, 3, 1e-8);
  CHECK(one.passed);
  CHECK(one.worst < 1e-12);
}

TEST_CASE("direct and inverse checks on a small configuration") {
  const ClassParams cls{{2.0, 1.25, 1.25}, 2};
  const int n_list[] = {4, 8, 16, 32};
  const CheckReport direct = check_direct("abspow:a=0,s=1", cls, n_list);
  CHECK(direct.passed);

  const double deltas[] = {0.5, 0.25, 0.125, 0.0625};
  const CheckReport inverse = check_inverse("abspow:a=0,s=1", cls, deltas);
  CHECK(inverse.passed);

  CHECK_THROWS_AS(check_direct("abspow:a=0,s=1", {{1.0, 3.0, 1.0}, 2},
                               n_list),
                  ClassParameterError);
}

TEST_CASE("registry names and dispatch") {
  CHECK(check_names().size() == 9);
  VerifyConfig config;
  config.elementary_samples = 20000;
  const CheckReport r = run_check("elementary", config);
  CHECK(r.passed);
  // deterministic given (seed, tolerances)
  const CheckReport again = run_check("elementary", config);
  CHECK(again.worst == r.worst);
  CHECK(again.notes == r.notes);
  CHECK_THROWS_AS(run_check("nonsense", config), std::invalid_argument);
}

TEST_SUITE_END();

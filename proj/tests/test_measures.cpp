#include <doctest.h>

#include <cmath>

#include "rhydro/measures.hpp"
#include "rhydro/rng.hpp"

using namespace rhydro;

TEST_CASE("initial measure parameters") {
  // RW, N=10, theta=1, alpha=2, gamma = 1: reservoir mean 5, bulk means 1
  ModelParams p(ModelKind::RW, 10, 1.0, 2.0);
  ProductMeasure m = initial_measure(Profile::parse("const(1)"), p);
  CHECK(m.site0 == doctest::Approx(5.0));
  for (double b : m.bulk) CHECK(b == doctest::Approx(1.0));

  // SEP, N=4, theta=2, alpha=1, gamma(u) = u/2
  ModelParams sep(ModelKind::SEP, 4, 2.0, 1.0);
  ProductMeasure ms = initial_measure(Profile::parse("affine(0,0.5)"), sep);
  CHECK(ms.site0 == doctest::Approx(0.0));
  for (int x = 1; x <= 4; ++x)
    CHECK(ms.bulk[static_cast<std::size_t>(x - 1)] == doctest::Approx(x / 8.0));
}

TEST_CASE("initial measure validation") {
  ModelParams sep1(ModelKind::SEP, 8, 1.0, 1.0);
  CHECK_THROWS_AS(initial_measure(Profile::parse("const(0)"), sep1), InputError);
  CHECK_THROWS_AS(initial_measure(Profile::parse("const(1)"), sep1), InputError);
  CHECK_THROWS_AS(initial_measure(Profile::parse("const(1.5)"), sep1), InputError);
  CHECK_NOTHROW(initial_measure(Profile::parse("const(0.5)"), sep1));
  // RW has no upper range restriction
  ModelParams rw(ModelKind::RW, 8, 1.0, 1.0);
  CHECK_NOTHROW(initial_measure(Profile::parse("const(1.5)"), rw));
}

TEST_CASE("reversible measure parameters") {
  ModelParams rw(ModelKind::RW, 3, 0.0, 4.0);
  ProductMeasure m = reversible_measure(2.0, rw);
  CHECK(m.site0 == doctest::Approx(0.5));
  for (double b : m.bulk) CHECK(b == doctest::Approx(2.0));

  ModelParams sep(ModelKind::SEP, 3, 1.0, 1.0);
  ProductMeasure ms = reversible_measure(0.5, sep);
  CHECK(ms.site0 == doctest::Approx(3.0));
  for (double b : ms.bulk) CHECK(b == doctest::Approx(0.5));

  CHECK_THROWS_AS(reversible_measure(0.0, rw), InputError);
  CHECK_THROWS_AS(reversible_measure(1.0, sep), InputError);
  CHECK_THROWS_AS(reversible_measure(1.0 - 1e-10, sep), InputError);
}

TEST_CASE("RW reversible measure equals the constant-profile initial measure") {
  ModelParams p(ModelKind::RW, 7, 1.5, 0.7);
  ProductMeasure a = reversible_measure(0.8, p);
  ProductMeasure b = initial_measure(Profile::parse("const(0.8)"), p);
  CHECK(a.site0 == doctest::Approx(b.site0).epsilon(1e-14));
  for (int x = 0; x < p.N; ++x)
    CHECK(a.bulk[static_cast<std::size_t>(x)] ==
          doctest::Approx(b.bulk[static_cast<std::size_t>(x)]).epsilon(1e-14));
}

TEST_CASE("sampling: zero, determinism, moments") {
  ModelParams p(ModelKind::RW, 6, 0.0, 1.0);
  ProductMeasure zero = initial_measure(Profile::parse("const(0)"), p);
  Configuration z = sample(zero, 9);
  CHECK(total_mass(z) == 0);

  ProductMeasure m = reversible_measure(5.0, p);
  CHECK(sample(m, 1234) == sample(m, 1234));
  CHECK(sample(m, 1234) != sample(m, 1235));

  // Poisson(5) marginal: mean within 4 sigma, dispersion within 5%
  const int reps = 100000;
  double sum = 0.0, sumsq = 0.0;
  for (int r = 0; r < reps; ++r) {
    Configuration cfg = sample(m, derive_seed(77, static_cast<std::uint64_t>(r)));
    const double v = static_cast<double>(cfg(3));
    sum += v;
    sumsq += v * v;
  }
  const double mean = sum / reps;
  const double var = sumsq / reps - mean * mean;
  CHECK(std::abs(mean - 5.0) < 4.0 * std::sqrt(5.0 / reps));
  CHECK(var / mean == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("poisson sampler across the small/large switch") {
  for (double mu : {9.5, 10.5, 40.0}) {
    Rng rng(31);
    const int reps = 200000;
    double sum = 0.0, sumsq = 0.0;
    for (int r = 0; r < reps; ++r) {
      const double v = static_cast<double>(rng.poisson(mu));
      sum += v;
      sumsq += v * v;
    }
    const double mean = sum / reps;
    const double var = sumsq / reps - mean * mean;
    CHECK(std::abs(mean - mu) < 4.0 * std::sqrt(mu / reps));
    CHECK(var / mu == doctest::Approx(1.0).epsilon(0.03));
  }
}

TEST_CASE("detailed balance of the reversible measures") {
  ModelParams rw(ModelKind::RW, 3, 1.0, 2.0);
  CHECK(detailed_balance_residual(rw, 1.0, 4) <= 1e-12);

  ModelParams sep(ModelKind::SEP, 4, 0.0, 1.0);
  CHECK(detailed_balance_residual(sep, 0.3, 4) <= 1e-12);
}

TEST_CASE("detailed balance flags a perturbed reservoir") {
  ModelParams rw(ModelKind::RW, 3, 1.0, 2.0);
  ProductMeasure m = reversible_measure(1.0, rw);
  m.site0 *= 1.1;
  CHECK(detailed_balance_residual(rw, m, 4) > 1e-3);
}

TEST_CASE("relative entropy") {
  ModelParams sep(ModelKind::SEP, 100, 1.0, 1.0);

  // identical bulk marginals give zero
  CHECK(relative_entropy(Profile::parse("const(0.4)"), 0.4, sep) == doctest::Approx(0.0));
  CHECK(relative_entropy(Profile::parse("const(0.41)"), 0.4, sep) > 0.0);

  // direct summation oracle, p_ref matched so p/(1-p) = gamma(0)
  Profile gamma = Profile::parse("affine(0.5,0.4)");
  const double g0 = gamma(0.0);
  const double p_ref = g0 / (1.0 + g0);
  const double h = relative_entropy(gamma, p_ref, sep);
  long double expect = 0.0L;
  for (int x = 1; x <= sep.N; ++x) {
    const long double q = 0.5L + 0.4L * x / sep.N;
    expect += q * std::log(static_cast<double>(q) / p_ref) +
              (1.0L - q) * std::log(static_cast<double>(1.0L - q) / (1.0 - p_ref));
  }
  CHECK(h == doctest::Approx(static_cast<double>(expect)).epsilon(1e-12));
  CHECK(h >= 0.0);
  CHECK(h <= sep.N * std::log(1.0 / std::min(p_ref, 1.0 - p_ref)));

  CHECK_THROWS_AS(relative_entropy(gamma, 0.0, sep), InputError);
  CHECK_THROWS_AS(relative_entropy(gamma, 1.0, sep), InputError);
  ModelParams rw(ModelKind::RW, 100, 1.0, 1.0);
  CHECK_THROWS_AS(relative_entropy(gamma, p_ref, rw), InputError);
}

TEST_CASE("conserved mass") {
  CHECK(conserved_mass_M(Profile::parse("const(1)"), 2.0) == doctest::Approx(1.5));
  CHECK(conserved_mass_M(Profile::parse("affine(0,1)"), 1.0) == doctest::Approx(0.5));
  // gamma = 0.5 + 0.25 cos(pi u): integral 0.5, gamma(0) = 0.75
  CHECK(conserved_mass_M(Profile::parse("cos(0.5,0.25,1)"), 1.0) ==
        doctest::Approx(1.25).epsilon(1e-10));
}


#include <doctest.h>

#include "rhydro/model.hpp"
#include "rhydro/rng.hpp"

using namespace rhydro;

namespace {

Configuration make_cfg(std::initializer_list<std::int64_t> occ) {
  Configuration cfg(static_cast<int>(occ.size()) - 1);
  int i = 0;
  for (auto v : occ) cfg(i++) = v;
  return cfg;
}

// random legal configuration for property tests
Configuration random_cfg(const ModelParams& p, Rng& rng) {
  Configuration cfg(p.N);
  cfg(0) = rng.poisson(3.0);
  for (int x = 1; x <= p.N; ++x)
    cfg(x) = p.model == ModelKind::SEP ? (rng.bernoulli(0.5) ? 1 : 0) : rng.poisson(1.5);
  return cfg;
}

}  // namespace

TEST_CASE("regime classification") {
  CHECK(regime(0.0) == Regime::Sub);
  CHECK(regime(0.999) == Regime::Sub);
  CHECK(regime(1.0) == Regime::Critical);
  CHECK(regime(2.5) == Regime::Super);
}

TEST_CASE("params validation") {
  CHECK_THROWS_AS(ModelParams(ModelKind::RW, 1, 0.0, 1.0), InputError);
  CHECK_THROWS_AS(ModelParams(ModelKind::RW, 4, 0.0, 0.0), InputError);
  CHECK_THROWS_AS(ModelParams(ModelKind::RW, 4, -0.5, 1.0), InputError);
}

TEST_CASE("jump rates: reservoir release") {
  // SEP, N=10, theta=1, alpha=2, eta(0)=5: 10^2 * (2*5/10) * (1-eta(1))
  ModelParams p(ModelKind::SEP, 10, 1.0, 2.0);
  Configuration cfg(10);
  cfg(0) = 5;
  CHECK(jump_rate(cfg, 0, 1, p) == doctest::Approx(100.0).epsilon(1e-14));
  cfg(1) = 1;
  CHECK(jump_rate(cfg, 0, 1, p) == 0.0);

  // RW, N=4, theta=0, alpha=1, eta(0)=3: 4^2 * 3
  ModelParams rw(ModelKind::RW, 4, 0.0, 1.0);
  Configuration c2(4);
  c2(0) = 3;
  CHECK(jump_rate(c2, 0, 1, rw) == doctest::Approx(48.0).epsilon(1e-14));
}

TEST_CASE("jump rate error paths") {
  ModelParams p(ModelKind::RW, 4, 1.0, 1.0);
  Configuration cfg(4);
  CHECK_THROWS_AS(jump_rate(cfg, 0, 5, p), InputError);
  CHECK_THROWS_AS(jump_rate(cfg, 1, 3, p), InputError);
  CHECK_THROWS_AS(jump_rate(cfg, -1, 0, p), InputError);
}

TEST_CASE("apply_jump moves and no-ops") {
  ModelParams rw(ModelKind::RW, 2, 1.0, 1.0);
  CHECK(apply_jump(make_cfg({2, 0, 1}), 0, 1, rw) == make_cfg({1, 1, 1}));
  CHECK(apply_jump(make_cfg({0, 3, 1}), 0, 1, rw) == make_cfg({0, 3, 1}));

  ModelParams sep(ModelKind::SEP, 3, 1.0, 1.0);
  CHECK(apply_jump(make_cfg({4, 1, 0, 1}), 1, 2, sep) == make_cfg({4, 0, 1, 1}));
  // blocked target in the bulk
  CHECK(apply_jump(make_cfg({4, 1, 1, 0}), 1, 2, sep) == make_cfg({4, 1, 1, 0}));
  // the reservoir absorbs freely
  CHECK(apply_jump(make_cfg({4, 1, 1, 0}), 1, 0, sep) == make_cfg({5, 0, 1, 0}));
}

TEST_CASE("enabled transitions enumerate the generator") {
  ModelParams sep(ModelKind::SEP, 2, 0.0, 1.0);
  CHECK(enabled_transitions(make_cfg({0, 0, 0}), sep).empty());

  auto list = enabled_transitions(make_cfg({1, 0, 1}), sep);
  REQUIRE(list.size() == 2);
  CHECK(list[0].from == 0);
  CHECK(list[0].to == 1);
  CHECK(list[0].rate == doctest::Approx(4.0));
  CHECK(list[1].from == 2);
  CHECK(list[1].to == 1);
  CHECK(list[1].rate == doctest::Approx(4.0));

  ModelParams rw(ModelKind::RW, 2, 0.0, 1.0);
  auto rwlist = enabled_transitions(make_cfg({0, 1, 0}), rw);
  REQUIRE(rwlist.size() == 2);
  CHECK(rwlist[0].rate == doctest::Approx(4.0));
  CHECK(rwlist[1].rate == doctest::Approx(4.0));
}

TEST_CASE("total mass") {
  CHECK(total_mass(make_cfg({5, 1, 0, 1})) == 7);
  CHECK(total_mass(Configuration(3)) == 0);
}

TEST_CASE("properties over random configurations") {
  Rng rng(42);
  for (ModelKind kind : {ModelKind::RW, ModelKind::SEP}) {
    ModelParams p(kind, 8, 1.0, 2.0);
    for (int trial = 0; trial < 200; ++trial) {
      Configuration cfg = random_cfg(p, rng);
      const auto mass = total_mass(cfg);
      const auto transitions = enabled_transitions(cfg, p);

      double exit_rate = 0.0;
      for (const auto& tr : transitions) {
        exit_rate += tr.rate;
        CHECK(tr.rate > 0.0);
        CHECK(std::abs(tr.from - tr.to) == 1);

        Configuration next = apply_jump(cfg, tr.from, tr.to, p);
        CHECK(total_mass(next) == mass);
        if (kind == ModelKind::SEP)
          for (int x = 1; x <= p.N; ++x) CHECK((next(x) == 0 || next(x) == 1));

        // enabled moves really move, and reversing restores the original
        CHECK(next != cfg);
        CHECK(jump_rate(next, tr.to, tr.from, p) > 0.0);
        CHECK(apply_jump(next, tr.to, tr.from, p) == cfg);
      }

      // exit rate matches a direct scan over all neighbor pairs
      double scan = 0.0;
      for (int x = 0; x <= p.N; ++x) {
        if (x > 0) scan += jump_rate(cfg, x, x - 1, p);
        if (x < p.N) scan += jump_rate(cfg, x, x + 1, p);
      }
      CHECK(exit_rate == doctest::Approx(scan).epsilon(1e-12));

      // zero-rate conditions
      for (int x = 0; x < p.N; ++x) {
        if (cfg(x) == 0) CHECK(jump_rate(cfg, x, x + 1, p) == 0.0);
        if (kind == ModelKind::SEP && x >= 1 && cfg(x + 1) == 1)
          CHECK(jump_rate(cfg, x, x + 1, p) == 0.0);
      }
    }
  }
}

#include "rhydro/measures.hpp"

#include <cmath>
#include <functional>
#include <limits>

#include "rhydro/quadrature.hpp"
#include "rhydro/rng.hpp"

namespace rhydro {

namespace {

double reservoir_scale(const ModelParams& p) {
  return std::pow(static_cast<double>(p.N), p.theta) / p.alpha;
}

constexpr double kSepLevelCap = 1.0 - 1e-9;

}  // namespace

ProductMeasure initial_measure(const Profile& profile, const ModelParams& p) {
  p.validate();
  ProductMeasure m;
  m.model = p.model;
  const double g0 = profile(0.0);
  if (g0 < 0.0) throw InputError("profile negative at 0");
  if (p.model == ModelKind::SEP) {
    if (profile.max_value() > 1.0 + 1e-12)
      throw InputError("SEP profile must take values in [0,1]");
    if (p.theta == 1.0 && (g0 <= 0.0 || g0 >= 1.0))
      throw InputError("SEP at theta=1 requires 0 < gamma(0) < 1");
  }
  m.site0 = reservoir_scale(p) * g0;
  m.bulk.resize(static_cast<std::size_t>(p.N));
  for (int x = 1; x <= p.N; ++x) {
    double v = profile(static_cast<double>(x) / p.N);
    if (v < 0.0) throw InputError("profile negative in the bulk");
    if (p.model == ModelKind::SEP && v > 1.0 + 1e-12)
      throw InputError("SEP profile must take values in [0,1]");
    m.bulk[static_cast<std::size_t>(x - 1)] = v;
  }
  return m;
}

ProductMeasure reversible_measure(double level, const ModelParams& p) {
  p.validate();
  ProductMeasure m;
  m.model = p.model;
  m.bulk.assign(static_cast<std::size_t>(p.N), level);
  if (p.model == ModelKind::RW) {
    if (!(level > 0.0)) throw InputError("RW reversible level must be > 0");
    m.site0 = reservoir_scale(p) * level;
  } else {
    if (!(level > 0.0 && level < 1.0))
      throw InputError("SEP reversible level must be in (0,1)");
    if (level > kSepLevelCap)
      throw InputError("SEP reversible level too close to 1; reservoir mean diverges");
    m.site0 = reservoir_scale(p) * level / (1.0 - level);
  }
  return m;
}

Configuration sample(const ProductMeasure& measure, std::uint64_t seed) {
  Rng rng(seed);
  Configuration cfg(measure.N());
  cfg(0) = rng.poisson(measure.site0);
  for (int x = 1; x <= measure.N(); ++x) {
    const double par = measure.bulk[static_cast<std::size_t>(x - 1)];
    if (measure.model == ModelKind::RW) {
      cfg(x) = rng.poisson(par);
    } else {
      cfg(x) = rng.bernoulli(par) ? 1 : 0;
    }
  }
  return cfg;
}

namespace {

// log of the unnormalized product weight of cfg under the measure; the
// normalizing constants cancel in detailed-balance ratios.
double log_weight(const Configuration& cfg, const ProductMeasure& m) {
  auto site_term = [](double par, std::int64_t k, bool bernoulli) {
    if (bernoulli) {
      // weight p^k (1-p)^(1-k)
      return k == 0 ? std::log1p(-par) : std::log(par);
    }
    if (k == 0) return 0.0;
    if (par <= 0.0) return -std::numeric_limits<double>::infinity();
    return k * std::log(par) - std::lgamma(static_cast<double>(k) + 1.0);
  };
  double lw = site_term(m.site0, cfg(0), false);
  for (int x = 1; x <= m.N(); ++x)
    lw += site_term(m.bulk[static_cast<std::size_t>(x - 1)], cfg(x),
                    m.model == ModelKind::SEP);
  return lw;
}

struct ResidualScan {
  const ModelParams& p;
  const ProductMeasure& m;
  double worst = 0.0;
  std::size_t states = 0;

  void visit(const Configuration& cfg) {
    if (++states > 10'000'000)
      throw ResourceError("detailed balance: truncated state space too large");
    const double lw = log_weight(cfg, m);
    if (!std::isfinite(lw)) return;  // zero-weight state
    for (const Transition& tr : enabled_transitions(cfg, p)) {
      Configuration next = apply_jump(cfg, tr.from, tr.to, p);
      const double back = jump_rate(next, tr.to, tr.from, p);
      const double lw_next = log_weight(next, m);
      // relative defect |w r - w' r'| / max of the two fluxes
      const double log_fwd = lw + std::log(tr.rate);
      const double log_bwd = lw_next + (back > 0.0
                                            ? std::log(back)
                                            : -std::numeric_limits<double>::infinity());
      double rel;
      if (!std::isfinite(log_bwd)) {
        rel = 1.0;
      } else {
        rel = -std::expm1(-std::abs(log_fwd - log_bwd));
      }
      if (rel > worst) worst = rel;
    }
  }
};

void enumerate_rw(Configuration& cfg, int site, std::int64_t budget, ResidualScan& scan,
                  const ModelParams& p) {
  if (site > p.N) {
    scan.visit(cfg);
    return;
  }
  for (std::int64_t k = 0; k <= budget; ++k) {
    cfg(site) = k;
    enumerate_rw(cfg, site + 1, budget - k, scan, p);
  }
  cfg(site) = 0;
}

void enumerate_sep(Configuration& cfg, int site, std::int64_t budget, ResidualScan& scan,
                   const ModelParams& p) {
  if (site > p.N) {
    scan.visit(cfg);
    return;
  }
  if (site == 0) {
    for (std::int64_t k = 0; k <= budget; ++k) {
      cfg(0) = k;
      enumerate_sep(cfg, 1, budget - k, scan, p);
    }
    cfg(0) = 0;
    return;
  }
  cfg(site) = 0;
  enumerate_sep(cfg, site + 1, budget, scan, p);
  if (budget >= 1) {
    cfg(site) = 1;
    enumerate_sep(cfg, site + 1, budget - 1, scan, p);
    cfg(site) = 0;
  }
}

}  // namespace

double detailed_balance_residual(const ModelParams& p, const ProductMeasure& measure,
                                 std::int64_t mass_cap) {
  p.validate();
  if (mass_cap < 1) throw InputError("mass_cap must be >= 1");
  if (measure.N() != p.N) throw InputError("measure does not match lattice size");
  ResidualScan scan{p, measure};
  Configuration cfg(p.N);
  if (p.model == ModelKind::RW)
    enumerate_rw(cfg, 0, mass_cap, scan, p);
  else
    enumerate_sep(cfg, 0, mass_cap, scan, p);
  return scan.worst;
}

double detailed_balance_residual(const ModelParams& p, double level,
                                 std::int64_t mass_cap) {
  return detailed_balance_residual(p, reversible_measure(level, p), mass_cap);
}

double relative_entropy(const Profile& profile, double p_ref, const ModelParams& params) {
  if (params.model != ModelKind::SEP)
    throw InputError("relative_entropy is defined for the SEP model");
  if (!(p_ref > 0.0 && p_ref < 1.0)) throw InputError("p_ref must lie in (0,1)");

  auto kl_bernoulli = [](double q, double p) {
    double s = 0.0;
    if (q > 0.0) s += q * std::log(q / p);
    if (q < 1.0) s += (1.0 - q) * std::log((1.0 - q) / (1.0 - p));
    return s;
  };

  double h = 0.0;
  for (int x = 1; x <= params.N; ++x) {
    const double q = profile(static_cast<double>(x) / params.N);
    if (q < 0.0 || q > 1.0 + 1e-12)
      throw InputError("SEP profile must take values in [0,1]");
    h += kl_bernoulli(std::min(q, 1.0), p_ref);
  }
  return h;
}

double conserved_mass_M(const Profile& profile, double alpha) {
  if (!(alpha > 0.0)) throw InputError("alpha must be > 0");
  const double integral =
      integrate([&profile](double u) { return profile(u); }, 0.0, 1.0, 1e-10);
  return profile(0.0) / alpha + integral;
}

}  // namespace rhydro

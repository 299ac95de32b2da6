#include "rhydro/model.hpp"

#include <cmath>
#include <limits>

namespace rhydro {

namespace {

void check_site(int x, const ModelParams& p) {
  if (x < 0 || x > p.N) throw InputError("site index out of range");
}

}  // namespace

void check_configuration(const Configuration& cfg, const ModelParams& p) {
  if (cfg.sites() != p.N + 1)
    throw InputError("configuration size does not match lattice");
  for (int x = 0; x <= p.N; ++x) {
    if (cfg(x) < 0) throw InputError("negative occupation");
    if (p.model == ModelKind::SEP && x >= 1 && cfg(x) > 1)
      throw InputError("SEP bulk occupation must be 0 or 1");
  }
}

double jump_rate(const Configuration& cfg, int x, int y, const ModelParams& p) {
  check_site(x, p);
  check_site(y, p);
  if (x - y != 1 && y - x != 1) throw InputError("jump must be between neighbors");

  if (cfg(x) == 0) return 0.0;

  if (p.model == ModelKind::RW) {
    if (x == 0) return p.reservoir_unit_rate() * static_cast<double>(cfg(0));
    return p.n2() * static_cast<double>(cfg(x));
  }

  // SEP: target site in the bulk must be empty; the reservoir absorbs freely.
  if (x == 0) {
    if (cfg(1) != 0) return 0.0;
    return p.reservoir_unit_rate() * static_cast<double>(cfg(0));
  }
  if (y == 0) return p.n2() * static_cast<double>(cfg(1));
  if (cfg(y) != 0) return 0.0;
  return p.n2() * static_cast<double>(cfg(x));
}

bool apply_jump_inplace(Configuration& cfg, int x, int y, const ModelParams& p) {
  check_site(x, p);
  check_site(y, p);
  if (x - y != 1 && y - x != 1) throw InputError("jump must be between neighbors");

  if (cfg(x) == 0) return false;
  if (p.model == ModelKind::SEP && y >= 1 && cfg(y) != 0) return false;
  if (y == 0 && cfg(0) == std::numeric_limits<std::int64_t>::max())
    throw NumericError("reservoir count overflow");
  --cfg(x);
  ++cfg(y);
  return true;
}

Configuration apply_jump(const Configuration& cfg, int x, int y, const ModelParams& p) {
  Configuration out = cfg;
  apply_jump_inplace(out, x, y, p);
  return out;
}

std::vector<Transition> enabled_transitions(const Configuration& cfg,
                                            const ModelParams& p) {
  std::vector<Transition> out;
  out.reserve(2 * static_cast<std::size_t>(p.N));
  const double r01 = jump_rate(cfg, 0, 1, p);
  if (r01 > 0.0) out.push_back({0, 1, r01});
  for (int x = 1; x <= p.N; ++x) {
    const double down = jump_rate(cfg, x, x - 1, p);
    if (down > 0.0) out.push_back({x, x - 1, down});
    if (x < p.N) {
      const double up = jump_rate(cfg, x, x + 1, p);
      if (up > 0.0) out.push_back({x, x + 1, up});
    }
  }
  return out;
}

std::int64_t total_mass(const Configuration& cfg) {
  std::int64_t sum = 0;
  for (std::int64_t v : cfg.occ) sum += v;
  return sum;
}

}  // namespace rhydro

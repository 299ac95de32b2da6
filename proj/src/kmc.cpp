#include "rhydro/kmc.hpp"

#include <algorithm>
#include <cmath>

#include "rhydro/rng.hpp"

namespace rhydro {

RateTree::RateTree(std::size_t slots) : slots_(slots) {
  // level sizes padded to multiples of 4 so child reads never leave the
  // level; padding nodes hold zero rate
  std::size_t n = std::max<std::size_t>(4, (slots + 3) & ~std::size_t{3});
  offset_.push_back(0);
  std::size_t total_nodes = n;
  while (n > 1) {
    std::size_t next = (n + 3) / 4;
    if (next > 1) next = (next + 3) & ~std::size_t{3};
    offset_.push_back(total_nodes);
    total_nodes += next;
    n = next;
  }
  node_.assign(total_nodes, 0.0);
}

void RateTree::set(std::size_t slot, double rate) {
  node_[slot] = rate;
  rebuild(slot, slot);
}

void RateTree::rebuild(std::size_t lo_slot, std::size_t hi_slot) {
  std::size_t lo = lo_slot, hi = hi_slot;
  for (std::size_t level = 1; level < offset_.size(); ++level) {
    lo >>= 2;
    hi >>= 2;
    const std::size_t child_base = offset_[level - 1];
    double* parents = &node_[offset_[level]];
    for (std::size_t i = lo; i <= hi; ++i) {
      const double* c = &node_[child_base + 4 * i];
      parents[i] = (c[0] + c[1]) + (c[2] + c[3]);
    }
  }
}

std::size_t RateTree::pick(double target) const {
  std::size_t idx = 0;
  for (std::size_t level = offset_.size() - 1; level-- > 0;) {
    const double* c = &node_[offset_[level] + 4 * idx];
    std::size_t j = 0;
    double cum = c[0];
    while (j < 3 && target >= cum) {
      target -= cum;
      cum = c[++j];
    }
    idx = 4 * idx + j;
  }
  std::size_t slot = idx < slots_ ? idx : slots_ - 1;
  // rounding at bin edges can land on an empty slot; step to a live one
  if (node_[slot] <= 0.0) {
    std::size_t s = slot;
    while (s > 0 && node_[s] <= 0.0) --s;
    if (node_[s] <= 0.0) {
      s = slot;
      while (s + 1 < slots_ && node_[s] <= 0.0) ++s;
    }
    slot = s;
  }
  return slot;
}

namespace {

// Directed-edge layout: slot 0 is the reservoir edge 0->1; bulk site x owns
// slot 2x-1 (x -> x-1) and slot 2x (x -> x+1, absent for x = N).
class Engine {
 public:
  Engine(const Configuration& init, const ModelParams& p)
      : p_(p), cfg_(init), tree_(2 * static_cast<std::size_t>(p.N) + 1) {
    check_configuration(cfg_, p_);
    n2_ = p_.n2();
    res_unit_ = p_.reservoir_unit_rate();
    sep_ = p_.model == ModelKind::SEP;
    refresh_reservoir();
    for (int x = 1; x <= p_.N; ++x) refresh_site(x);
  }

  double total_rate() const { return tree_.total(); }

  const Configuration& config() const { return cfg_; }

  void fire(std::size_t slot) {
    int x, y;
    if (slot == 0) {
      x = 0;
      y = 1;
    } else {
      x = static_cast<int>((slot + 1) / 2);
      y = (slot % 2 == 1) ? x - 1 : x + 1;
    }
    --cfg_(x);
    ++cfg_(y);
    const int lo = std::min(x, y);
    const int hi = std::max(x, y);
    // rewrite the touched leaves, then one climb over the whole span
    int s_lo = p_.N, s_hi = 1;
    if (sep_) {
      for (int s = std::max(1, lo - 1); s <= std::min(p_.N, hi + 1); ++s) {
        write_site_leaves(s);
        s_lo = std::min(s_lo, s);
        s_hi = std::max(s_hi, s);
      }
    } else {
      for (int s = std::max(1, lo); s <= hi; ++s) {
        write_site_leaves(s);
        s_lo = std::min(s_lo, s);
        s_hi = std::max(s_hi, s);
      }
    }
    std::size_t slot_lo = static_cast<std::size_t>(2 * s_lo - 1);
    const std::size_t slot_hi =
        static_cast<std::size_t>(s_hi < p_.N ? 2 * s_hi : 2 * s_hi - 1);
    if (lo <= 1) {
      write_reservoir_leaf();
      slot_lo = 0;
    }
    tree_.rebuild(slot_lo, slot_hi);
  }

  std::size_t pick(double target) const { return tree_.pick(target); }

 private:
  void refresh_reservoir() {
    write_reservoir_leaf();
    tree_.rebuild(0, 0);
  }

  void refresh_site(int x) {
    write_site_leaves(x);
    tree_.rebuild(static_cast<std::size_t>(2 * x - 1),
                  static_cast<std::size_t>(x < p_.N ? 2 * x : 2 * x - 1));
  }

  void write_reservoir_leaf() {
    double r = res_unit_ * static_cast<double>(cfg_(0));
    if (sep_ && cfg_(1) != 0) r = 0.0;
    tree_.set_leaf(0, r);
  }

  void write_site_leaves(int x) {
    const double occ = static_cast<double>(cfg_(x));
    double down, up = 0.0;
    if (sep_) {
      down = (x == 1 || cfg_(x - 1) == 0) ? n2_ * occ : 0.0;
      if (x < p_.N) up = (cfg_(x + 1) == 0) ? n2_ * occ : 0.0;
    } else {
      down = n2_ * occ;
      if (x < p_.N) up = n2_ * occ;
    }
    tree_.set_leaf(static_cast<std::size_t>(2 * x - 1), down);
    if (x < p_.N) tree_.set_leaf(static_cast<std::size_t>(2 * x), up);
  }

  const ModelParams& p_;
  Configuration cfg_;
  RateTree tree_;
  double n2_ = 0.0;
  double res_unit_ = 0.0;
  bool sep_ = false;
};

}  // namespace

Trajectory simulate(const Configuration& init, const ModelParams& p,
                    const std::vector<double>& sample_times, std::uint64_t seed) {
  p.validate();
  if (sample_times.empty()) throw InputError("simulate: no sample times");
  for (std::size_t i = 0; i < sample_times.size(); ++i) {
    if (sample_times[i] < 0.0) throw InputError("simulate: negative sample time");
    if (i > 0 && sample_times[i] <= sample_times[i - 1])
      throw InputError("simulate: sample times must be strictly increasing");
  }

  Trajectory out;
  out.params = p;
  out.seed = seed;
  out.sample_times = sample_times;
  if (out.sample_times.front() != 0.0)
    out.sample_times.insert(out.sample_times.begin(), 0.0);
  out.states.reserve(out.sample_times.size());

  Engine engine(init, p);
  Rng rng(seed);
  const std::int64_t mass = total_mass(init);

  double t = 0.0;
  for (double ts : out.sample_times) {
    for (;;) {
      const double rate = engine.total_rate();
      if (rate <= 0.0) break;
      const double dt = rng.exponential() / rate;
      if (t + dt > ts) break;
      t += dt;
      engine.fire(engine.pick(rng.uniform() * rate));
    }
    t = ts;
    out.states.push_back(engine.config());
    if (total_mass(out.states.back()) != mass)
      throw NumericError("simulate: mass conservation violated");
  }
  return out;
}

EmpiricalDensity empirical_density(const Configuration& cfg) {
  EmpiricalDensity d;
  d.N = cfg.sites() - 1;
  d.reservoir = cfg(0);
  d.values.resize(static_cast<std::size_t>(d.N));
  for (int x = 1; x <= d.N; ++x)
    d.values[static_cast<std::size_t>(x - 1)] = static_cast<double>(cfg(x));
  return d;
}

double empirical_pairing(const Configuration& cfg, const std::vector<double>& H) {
  const int N = cfg.sites() - 1;
  if (static_cast<int>(H.size()) != N)
    throw InputError("empirical_pairing: H must be sampled on the bulk grid");
  double sum = 0.0;
  for (int x = 1; x <= N; ++x)
    sum += H[static_cast<std::size_t>(x - 1)] * static_cast<double>(cfg(x));
  return sum / N;
}

std::vector<std::int64_t> window_counts(const Configuration& cfg, double u, int k) {
  const int N = cfg.sites() - 1;
  if (k < 0) throw InputError("window_counts: k must be >= 0");
  const int center = static_cast<int>(std::floor(u * N));
  if (center - k < 1 || center + k > N)
    throw InputError("window_counts: window leaves the bulk");
  std::vector<std::int64_t> out;
  out.reserve(2 * static_cast<std::size_t>(k) + 1);
  for (int x = center - k; x <= center + k; ++x) out.push_back(cfg(x));
  return out;
}

double block_average(const Configuration& cfg, int x, double eps) {
  const int N = cfg.sites() - 1;
  const int width = static_cast<int>(std::floor(eps * N));
  if (width < 1) throw InputError("block_average: block is empty");
  if (x < 0 || x + width > N) throw InputError("block_average: block leaves the bulk");
  std::int64_t sum = 0;
  for (int y = x + 1; y <= x + width; ++y) sum += cfg(y);
  return static_cast<double>(sum) / width;
}

}  // namespace rhydro

#ifndef RHYDRO_KMC_HPP
#define RHYDRO_KMC_HPP

#include <cstdint>
#include <vector>

#include "rhydro/model.hpp"

namespace rhydro {

// Sum tree over per-edge rates: O(log n) rate updates and O(log n)
// proportional selection. Four-way branching keeps the walk short and each
// child scan inside one cache line. Internal nodes are re-summed from their
// children on every update, so no floating-point drift accumulates over
// long runs.
class RateTree {
 public:
  explicit RateTree(std::size_t slots);

  void set(std::size_t slot, double rate);
  double get(std::size_t slot) const { return node_[slot]; }
  double total() const { return node_[offset_.back()]; }

  // Batched update: write leaves with set_leaf, then rebuild the internal
  // sums over the touched slot range with a single climb.
  void set_leaf(std::size_t slot, double rate) { node_[slot] = rate; }
  void rebuild(std::size_t lo_slot, std::size_t hi_slot);

  // Index of the slot containing `target` in the cumulative-rate order.
  // Requires 0 <= target < total().
  std::size_t pick(double target) const;

  std::size_t slots() const { return slots_; }

 private:
  std::size_t slots_ = 0;
  std::vector<std::size_t> offset_;  // start of each level; leaves at 0
  std::vector<double> node_;
};

struct Trajectory {
  ModelParams params;
  std::vector<double> sample_times;
  std::vector<Configuration> states;  // one per sample time
  std::uint64_t seed = 0;
};

// Bulk occupation numbers of one recorded state, plus the reservoir count.
struct EmpiricalDensity {
  int N = 0;
  std::int64_t reservoir = 0;
  std::vector<double> values;  // eta(x) for x = 1..N
};

EmpiricalDensity empirical_density(const Configuration& cfg);

// Event-driven simulation of the particle system: exponential holding times
// at the current total rate, jumps chosen proportionally to the rates.
// Statistically exact; deterministic for a fixed seed. Records the state at
// each requested macroscopic sample time.
Trajectory simulate(const Configuration& init, const ModelParams& p,
                    const std::vector<double>& sample_times, std::uint64_t seed);

// (1/N) sum_{x=1}^N H(x/N) eta(x); H given by its values on the bulk grid
// {1/N,...,1}. The reservoir site is excluded.
double empirical_pairing(const Configuration& cfg, const std::vector<double>& H);

// Occupations on the window floor(uN)-k .. floor(uN)+k, in site order.
std::vector<std::int64_t> window_counts(const Configuration& cfg, double u, int k);

// Block average (1/floor(eps*N)) sum_{y=x+1}^{x+floor(eps*N)} eta(y).
double block_average(const Configuration& cfg, int x, double eps);

}  // namespace rhydro

#endif

#ifndef RHYDRO_MODEL_HPP
#define RHYDRO_MODEL_HPP

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "rhydro/errors.hpp"

namespace rhydro {

enum class ModelKind { RW, SEP };

// Boundary regime selected by the reservoir slowdown exponent.
enum class Regime { Sub, Critical, Super };

inline Regime regime(double theta) {
  if (theta < 1.0) return Regime::Sub;
  if (theta == 1.0) return Regime::Critical;
  return Regime::Super;
}

inline std::string to_string(ModelKind m) { return m == ModelKind::RW ? "rw" : "sep"; }

// Lattice {0,...,N} with the reservoir at site 0. Rates below carry the
// diffusive N^2 factor, so simulation time is macroscopic time.
struct ModelParams {
  ModelKind model = ModelKind::RW;
  int N = 2;
  double theta = 0.0;
  double alpha = 1.0;

  ModelParams() = default;
  ModelParams(ModelKind m, int n, double th, double al)
      : model(m), N(n), theta(th), alpha(al) {
    validate();
  }

  void validate() const {
    if (N < 2) throw InputError("ModelParams: N must be >= 2");
    if (!(alpha > 0.0)) throw InputError("ModelParams: alpha must be > 0");
    if (!(theta >= 0.0)) throw InputError("ModelParams: theta must be >= 0");
  }

  Regime regime() const { return rhydro::regime(theta); }

  double n2() const { return static_cast<double>(N) * N; }
  // reservoir release rate per particle, including the N^2 factor
  double reservoir_unit_rate() const {
    return alpha * std::pow(static_cast<double>(N), 2.0 - theta);
  }
};

// Occupation numbers eta(0..N). Site 0 is the unbounded reservoir; for SEP
// the bulk entries live in {0,1}.
struct Configuration {
  std::vector<std::int64_t> occ;

  Configuration() = default;
  explicit Configuration(int N) : occ(static_cast<std::size_t>(N) + 1, 0) {}

  int sites() const { return static_cast<int>(occ.size()); }
  std::int64_t operator()(int x) const { return occ[static_cast<std::size_t>(x)]; }
  std::int64_t& operator()(int x) { return occ[static_cast<std::size_t>(x)]; }

  bool operator==(const Configuration&) const = default;
};

struct Transition {
  int from = 0;
  int to = 0;
  double rate = 0.0;
};

void check_configuration(const Configuration& cfg, const ModelParams& p);

// Rate of the move x -> y in configuration cfg, including the N^2 factor.
// Zero for disabled moves (empty source; occupied bulk target in SEP).
double jump_rate(const Configuration& cfg, int x, int y, const ModelParams& p);

// Moves one particle x -> y when the move is legal, otherwise returns the
// input unchanged. Total mass is preserved either way.
Configuration apply_jump(const Configuration& cfg, int x, int y, const ModelParams& p);

// In-place variant used by the simulator. Returns true if a particle moved.
bool apply_jump_inplace(Configuration& cfg, int x, int y, const ModelParams& p);

// All moves with positive rate; the rate sum is the exit rate of cfg.
std::vector<Transition> enabled_transitions(const Configuration& cfg, const ModelParams& p);

std::int64_t total_mass(const Configuration& cfg);

}  // namespace rhydro

#endif

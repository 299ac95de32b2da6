#ifndef RHYDRO_PROFILE_HPP
#define RHYDRO_PROFILE_HPP

#include <memory>
#include <string>

#include "rhydro/errors.hpp"

namespace rhydro {

// Macroscopic density profile gamma : [0,1] -> [0,inf), built from the
// expression grammar
//   const(c) | affine(a,b) | cos(a,b,k) | clamp01(expr) | sum(e1,e2)
// where affine(a,b) = a + b*u and cos(a,b,k) = a + b*cos(pi*k*u).
// Whitespace is ignored; reals accept decimal and scientific notation.
class Profile {
 public:
  Profile() = default;

  // Throws InputError with a character position on malformed text, and when
  // the resulting profile is negative somewhere on [0,1].
  static Profile parse(const std::string& text);

  double operator()(double u) const;

  const std::string& text() const { return text_; }
  bool empty() const { return node_ == nullptr; }

  // max over a fine grid; used for range validation
  double min_value() const;
  double max_value() const;

  struct Node;

 private:
  std::shared_ptr<const Node> node_;
  std::string text_;
};

}  // namespace rhydro

#endif

#include "rhydro/profile.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <vector>

namespace rhydro {

struct Profile::Node {
  enum class Kind { Const, Affine, Cos, Clamp01, Sum };
  Kind kind = Kind::Const;
  double a = 0.0, b = 0.0;
  int k = 0;
  std::shared_ptr<const Node> lhs, rhs;

  double eval(double u) const {
    switch (kind) {
      case Kind::Const:
        return a;
      case Kind::Affine:
        return a + b * u;
      case Kind::Cos:
        return a + b * std::cos(3.14159265358979323846 * k * u);
      case Kind::Clamp01:
        return std::clamp(lhs->eval(u), 0.0, 1.0);
      case Kind::Sum:
        return lhs->eval(u) + rhs->eval(u);
    }
    return 0.0;
  }
};

namespace {

using NodePtr = std::shared_ptr<const Profile::Node>;

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  NodePtr run() {
    NodePtr root = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("profile parse error at position " + std::to_string(pos_) +
                     ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool consume(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!consume(c)) fail(std::string("expected '") + c + "'");
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (start == pos_) fail("expected a form name");
    return text_.substr(start, pos_ - start);
  }

  double real() {
    skip_ws();
    const char* begin = text_.c_str() + pos_;
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end == begin) fail("expected a number");
    pos_ += static_cast<std::size_t>(end - begin);
    return v;
  }

  int integer() {
    double v = real();
    double r = std::round(v);
    if (std::abs(v - r) > 1e-12 || r < 0)
      fail("expected a nonnegative integer mode count");
    return static_cast<int>(r);
  }

  NodePtr expr() {
    std::string name = ident();
    auto node = std::make_shared<Profile::Node>();
    expect('(');
    if (name == "const") {
      node->kind = Profile::Node::Kind::Const;
      node->a = real();
    } else if (name == "affine") {
      node->kind = Profile::Node::Kind::Affine;
      node->a = real();
      expect(',');
      node->b = real();
    } else if (name == "cos") {
      node->kind = Profile::Node::Kind::Cos;
      node->a = real();
      expect(',');
      node->b = real();
      expect(',');
      node->k = integer();
    } else if (name == "clamp01") {
      node->kind = Profile::Node::Kind::Clamp01;
      node->lhs = expr();
    } else if (name == "sum") {
      node->kind = Profile::Node::Kind::Sum;
      node->lhs = expr();
      expect(',');
      node->rhs = expr();
    } else {
      fail("unknown form '" + name + "'");
    }
    expect(')');
    return node;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

constexpr int kScanPoints = 4096;

}  // namespace

Profile Profile::parse(const std::string& text) {
  Profile p;
  p.text_ = text;
  p.node_ = Parser(text).run();
  if (p.min_value() < 0.0)
    throw InputError("profile is negative on [0,1]: " + text);
  return p;
}

double Profile::operator()(double u) const {
  if (!node_) throw InputError("empty profile");
  return node_->eval(u);
}

double Profile::min_value() const {
  double m = (*this)(0.0);
  for (int i = 1; i <= kScanPoints; ++i)
    m = std::min(m, (*this)(static_cast<double>(i) / kScanPoints));
  return m;
}

double Profile::max_value() const {
  double m = (*this)(0.0);
  for (int i = 1; i <= kScanPoints; ++i)
    m = std::max(m, (*this)(static_cast<double>(i) / kScanPoints));
  return m;
}

}  // namespace rhydro

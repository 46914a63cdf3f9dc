#pragma once

#include <map>
#include <string>

#include "hchain/exact/poly.hpp"

namespace hchain::exact {

/// Quotient num/den of polynomials. No cancellation is attempted; equality
/// is decided by cross-multiplication.
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.vars(), 1)) {}
  RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw StructuralError("rational function with zero denominator");
  }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator+(const RatFunc& o) const {
    if (den_ == o.den_) return {num_ + o.num_, den_};
    return {num_ * o.den_ + o.num_ * den_, den_ * o.den_};
  }
  RatFunc operator-(const RatFunc& o) const {
    if (den_ == o.den_) return {num_ - o.num_, den_};
    return {num_ * o.den_ - o.num_ * den_, den_ * o.den_};
  }
  RatFunc operator-() const { return {-num_, den_}; }
  RatFunc operator*(const RatFunc& o) const { return {num_ * o.num_, den_ * o.den_}; }
  RatFunc operator/(const RatFunc& o) const {
    if (o.num_.is_zero()) throw StructuralError("division by zero rational function");
    return {num_ * o.den_, den_ * o.num_};
  }
  RatFunc operator*(const Scalar& s) const { return {num_ * s, den_}; }

  bool operator==(const RatFunc& o) const { return num_ * o.den_ == o.num_ * den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  /// Numerator of this - o over the common denominator.
  Poly residual(const RatFunc& o) const { return num_ * o.den_ - o.num_ * den_; }

  RatFunc substitute(const std::map<std::string, Poly>& b, const VarTablePtr& t) const {
    return {num_.substitute(b, t), den_.substitute(b, t)};
  }

 private:
  Poly num_;
  Poly den_;
};

}  // namespace hchain::exact

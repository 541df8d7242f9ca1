#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "exg/error.hpp"

namespace exg {

// Exact rational on int64. Every quantity in the fixed-point and generation
// arithmetic is a small exact fraction; no floating point anywhere.
class Rat {
 public:
  constexpr Rat() : num_(0), den_(1) {}
  constexpr Rat(std::int64_t n) : num_(n), den_(1) {}
  Rat(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
    if (den_ == 0) throw DomainError("rational with zero denominator");
    reduce();
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_integer() const { return den_ == 1; }

  friend Rat operator+(Rat a, Rat b) { return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_); }
  friend Rat operator-(Rat a, Rat b) { return Rat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_); }
  friend Rat operator*(Rat a, Rat b) { return Rat(a.num_ * b.num_, a.den_ * b.den_); }
  friend Rat operator/(Rat a, Rat b) {
    if (b.num_ == 0) throw DomainError("rational division by zero");
    return Rat(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rat operator-() const { return Rat(-num_, den_); }

  friend bool operator==(Rat a, Rat b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(Rat a, Rat b) { return !(a == b); }
  friend bool operator<(Rat a, Rat b) { return a.num_ * b.den_ < b.num_ * a.den_; }
  friend bool operator<=(Rat a, Rat b) { return a.num_ * b.den_ <= b.num_ * a.den_; }
  friend bool operator>(Rat a, Rat b) { return b < a; }
  friend bool operator>=(Rat a, Rat b) { return b <= a; }

  // "num/den" with positive denominator, e.g. "15/19", "-1/2", "3/1".
  std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

  // Compact human form: integers without the "/1".
  std::string pretty() const { return den_ == 1 ? std::to_string(num_) : str(); }

  static Rat parse(const std::string& text);

 private:
  void reduce() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace exg

// Exact rational scalar used throughout: payoffs, probabilities, LP arithmetic.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <functional>
#include <stdexcept>
#include <string>

namespace rankeq {

using Int = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator. All arithmetic is exact; dividing by zero throws.
class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rat(Int n) : num_(std::move(n)), den_(1) {}
  Rat(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }
  Rat(long long n, long long d) : num_(n), den_(d) { reduce(); }

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

  Rat operator-() const { return Rat(unchecked{}, -num_, den_); }

  Rat& operator+=(const Rat& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    reduce();
    return *this;
  }
  Rat& operator-=(const Rat& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    reduce();
    return *this;
  }
  Rat& operator*=(const Rat& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    reduce();
    return *this;
  }
  Rat& operator/=(const Rat& o) {
    if (o.num_ == 0) throw std::domain_error("Rat: division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    reduce();
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const Int lhs = a.num_ * b.den_;
    const Int rhs = b.num_ * a.den_;
    return lhs < rhs   ? std::strong_ordering::less
           : rhs < lhs ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
  }

  Rat abs() const { return num_ < 0 ? -*this : *this; }

  /// Largest integer <= *this.
  Int floor() const {
    Int q = num_ / den_;
    if (num_ < 0 && q * den_ != num_) --q;
    return q;
  }
  /// Smallest integer >= *this.
  Int ceil() const {
    Int q = num_ / den_;
    if (num_ > 0 && q * den_ != num_) ++q;
    return q;
  }

  /// Lowest-terms "p/q" rendering (always with the slash, e.g. "3/1").
  std::string to_string() const {
    return num_.str() + "/" + den_.str();
  }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  friend std::size_t hash_value(const Rat& r) {
    return std::hash<std::string>{}(r.to_string());
  }

 private:
  struct unchecked {};
  Rat(unchecked, Int n, Int d) : num_(std::move(n)), den_(std::move(d)) {}

  void reduce() {
    if (den_ == 0) throw std::domain_error("Rat: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    Int g = gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  Int num_;
  Int den_;
};

/// Parses "p/q", an integer literal, or a plain decimal ("0.25", "-1.5").
Rat parse_rat(const std::string& text);

}  // namespace rankeq

template <>
struct std::hash<rankeq::Rat> {
  std::size_t operator()(const rankeq::Rat& r) const { return hash_value(r); }
};

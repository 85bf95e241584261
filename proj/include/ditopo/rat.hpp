#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>

namespace ditopo {

// Exact rational number, always stored in lowest terms with a positive
// denominator.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(int n) : v_(n) {}  // NOLINT(implicit)
  Rat(long n) : v_(n) {}  // NOLINT(implicit)
  Rat(long long n) : v_(static_cast<long>(n)) {}  // NOLINT(implicit)
  Rat(long n, long d);
  explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  // Parses "p", "p/q", "-p/q". Throws ParseError.
  static Rat parse(const std::string& s);

  std::string str() const;
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }
  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  double to_double() const { return v_.get_d(); }
  std::size_t hash() const;

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

 private:
  mpq_class v_;
};

inline Rat rmin(const Rat& a, const Rat& b) { return b < a ? b : a; }
inline Rat rmax(const Rat& a, const Rat& b) { return a < b ? b : a; }

struct RatHash {
  std::size_t operator()(const Rat& r) const { return r.hash(); }
};

}  // namespace ditopo

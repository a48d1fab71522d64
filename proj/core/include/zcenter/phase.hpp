#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "zcenter/errors.hpp"
#include "zcenter/rational.hpp"

namespace zc {

/// An element of Q/Z, written additively: the phase p/q stands for the root
/// of unity exp(2*pi*i*p/q).  Multiplicative cocycle identities therefore
/// become integer-linear identities between phases.
class Phase {
 public:
  Phase() : num_(0), den_(1) {}
  Phase(long long n, long long d) { set(n, d); }
  explicit Phase(const Rat& r) { set(r.num(), r.den()); }

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  friend Phase operator+(const Phase& a, const Phase& b) {
    long long g = std::gcd(a.den_, b.den_);
    long long d = Rat::checked_mul(a.den_ / g, b.den_);
    long long n = Rat::checked_add(Rat::checked_mul(a.num_, b.den_ / g),
                                   Rat::checked_mul(b.num_, a.den_ / g));
    return Phase(n, d);
  }
  friend Phase operator-(const Phase& a) { return Phase(-a.num_, a.den_); }
  friend Phase operator-(const Phase& a, const Phase& b) { return a + (-b); }
  friend Phase operator*(long long k, const Phase& a) {
    return Phase(Rat::checked_mul(k % a.den_, a.num_), a.den_);
  }
  Phase& operator+=(const Phase& o) { return *this = *this + o; }
  Phase& operator-=(const Phase& o) { return *this = *this - o; }

  friend bool operator==(const Phase& a, const Phase& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Phase& a, const Phase& b) { return !(a == b); }
  friend bool operator<(const Phase& a, const Phase& b) {
    return Rat::checked_mul(a.num_, b.den_) < Rat::checked_mul(b.num_, a.den_);
  }

  /// Additive order in Q/Z (= denominator of the reduced fraction).
  long long order() const { return den_; }

  Rat to_rat() const { return Rat(num_, den_); }
  std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

  static Phase parse(const std::string& s) {
    Rat r = Rat::parse(s);
    return Phase(r.num(), r.den());
  }

 private:
  void set(long long n, long long d) {
    if (d == 0) throw Error(ErrorKind::Internal, "phase with zero denominator");
    if (d < 0) { n = -n; d = -d; }
    n %= d;
    if (n < 0) n += d;
    long long g = std::gcd(n, d);
    num_ = n / g;
    den_ = d / g;
  }

  long long num_;  // 0 <= num_ < den_, gcd(num_, den_) = 1
  long long den_;
};

/// Least N such that every listed phase embeds as an N-th root of unity and
/// every listed extra order divides N.
inline long long common_root_order(const std::vector<Phase>& phases,
                                   const std::vector<long long>& extra_orders = {}) {
  long long n = 1;
  for (const Phase& p : phases) n = std::lcm(n, p.den());
  for (long long e : extra_orders) {
    if (e <= 0) throw Error(ErrorKind::Internal, "nonpositive order");
    n = std::lcm(n, e);
  }
  return n;
}

}  // namespace zc

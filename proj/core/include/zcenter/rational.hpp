#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "zcenter/errors.hpp"

namespace zc {

/// Exact rational number over checked 64-bit integers.
///
/// All sizes in this library are small (groups of order <= 64, root orders
/// <= ~100), so 64-bit numerators never get close to overflow in practice;
/// the checks turn a hypothetical overflow into a hard error instead of a
/// silent wrong answer.
class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(long long n) : num_(n), den_(1) {}
  Rat(long long n, long long d) : num_(n), den_(d) { normalize(); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

  friend Rat operator+(const Rat& a, const Rat& b) {
    long long g = std::gcd(a.den_, b.den_);
    long long bd = b.den_ / g;
    long long n = checked_add(checked_mul(a.num_, bd), checked_mul(b.num_, a.den_ / g));
    long long d = checked_mul(a.den_, bd);
    return Rat(n, d);
  }
  friend Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }
  friend Rat operator-(const Rat& a) { return Rat(-a.num_, a.den_, already_reduced_tag{}); }
  friend Rat operator*(const Rat& a, const Rat& b) {
    long long g1 = std::gcd(std::llabs(a.num_), b.den_);
    long long g2 = std::gcd(std::llabs(b.num_), a.den_);
    return Rat(checked_mul(a.num_ / g1, b.num_ / g2),
               checked_mul(a.den_ / g2, b.den_ / g1), already_reduced_tag{});
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) throw Error(ErrorKind::Internal, "rational division by zero");
    return a * Rat(b.den_, b.num_);
  }
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return checked_mul(a.num_, b.den_) < checked_mul(b.num_, a.den_);
  }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  static Rat parse(const std::string& s);

  static long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r))
      throw Error(ErrorKind::Internal, "rational overflow in addition");
    return r;
  }
  static long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r))
      throw Error(ErrorKind::Internal, "rational overflow in multiplication");
    return r;
  }

 private:
  struct already_reduced_tag {};
  Rat(long long n, long long d, already_reduced_tag) : num_(n), den_(d) {}

  void normalize() {
    if (den_ == 0) throw Error(ErrorKind::Internal, "rational with zero denominator");
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    long long g = std::gcd(std::llabs(num_), den_);
    if (g > 1) { num_ /= g; den_ /= g; }
  }

  long long num_;
  long long den_;
};

inline Rat Rat::parse(const std::string& s) {
  std::size_t slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(std::stoll(s));
    return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::ParseError, "bad rational '" + s + "'");
  }
}

}  // namespace zc

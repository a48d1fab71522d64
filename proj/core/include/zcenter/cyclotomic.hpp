#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <vector>

#include "zcenter/errors.hpp"
#include "zcenter/phase.hpp"
#include "zcenter/rational.hpp"

namespace zc {

/// N-th cyclotomic polynomial as integer coefficients (index = power),
/// computed by exact division of x^N - 1 by the lower-order factors.
const std::vector<long long>& cyclotomic_polynomial(long long n);

/// Element of Q(zeta_N), stored as sum coeffs[i] * zeta_N^i for 0 <= i < N.
/// The representation is not unique; equality, ordering, serialization and
/// rationality tests go through the canonical form (reduction mod Phi_N).
class Cyclotomic {
 public:
  Cyclotomic() : n_(1), c_(1) {}
  explicit Cyclotomic(long long n) : n_(n), c_(static_cast<std::size_t>(n)) {
    if (n <= 0) throw Error(ErrorKind::Internal, "root order must be positive");
  }
  Cyclotomic(long long n, const Rat& scalar) : Cyclotomic(n) { c_[0] = scalar; }

  static Cyclotomic zero(long long n) { return Cyclotomic(n); }
  static Cyclotomic one(long long n) { return Cyclotomic(n, Rat(1)); }

  /// zeta_N^k, any integer k.
  static Cyclotomic root(long long n, long long k) {
    Cyclotomic x(n);
    k %= n;
    if (k < 0) k += n;
    x.c_[static_cast<std::size_t>(k)] = Rat(1);
    return x;
  }

  /// Embedding of the phase p/q as zeta_N^{pN/q}; requires q | N.
  static Cyclotomic from_phase(const Phase& p, long long n) {
    if (n % p.den() != 0)
      throw Error(ErrorKind::IncompatibleOrder,
                  "phase " + p.str() + " does not embed in Q(zeta_" + std::to_string(n) + ")");
    return root(n, p.num() * (n / p.den()));
  }

  long long order() const { return n_; }
  const std::vector<Rat>& raw() const { return c_; }

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    check_same(a, b);
    Cyclotomic r(a.n_);
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
  }
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
    check_same(a, b);
    Cyclotomic r(a.n_);
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
    return r;
  }
  friend Cyclotomic operator-(const Cyclotomic& a) {
    Cyclotomic r(a.n_);
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = -a.c_[i];
    return r;
  }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    check_same(a, b);
    Cyclotomic r(a.n_);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (b.c_[j].is_zero()) continue;
        std::size_t k = i + j;
        if (k >= static_cast<std::size_t>(a.n_)) k -= static_cast<std::size_t>(a.n_);
        r.c_[k] += a.c_[i] * b.c_[j];
      }
    }
    return r;
  }
  friend Cyclotomic operator*(const Rat& s, const Cyclotomic& a) {
    Cyclotomic r(a.n_);
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = s * a.c_[i];
    return r;
  }
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  /// Complex conjugation zeta -> zeta^{-1}.
  Cyclotomic conj() const {
    Cyclotomic r(n_);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      std::size_t k = i == 0 ? 0 : static_cast<std::size_t>(n_) - i;
      r.c_[k] = c_[i];
    }
    return r;
  }

  /// Galois action zeta -> zeta^j; requires gcd(j, N) = 1.
  Cyclotomic galois(long long j) const {
    j %= n_;
    if (j < 0) j += n_;
    if (std::gcd(j, n_) != 1)
      throw Error(ErrorKind::Internal, "galois exponent not coprime to order");
    Cyclotomic r(n_);
    for (std::size_t i = 0; i < c_.size(); ++i)
      r.c_[(i * static_cast<std::size_t>(j)) % static_cast<std::size_t>(n_)] += c_[i];
    return r;
  }

  /// Re-embed into Q(zeta_M) for N | M.
  Cyclotomic change_order(long long m) const {
    if (m % n_ != 0)
      throw Error(ErrorKind::IncompatibleOrder, "cannot embed zeta_" + std::to_string(n_) +
                                                    " into Q(zeta_" + std::to_string(m) + ")");
    Cyclotomic r(m);
    long long f = m / n_;
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i * static_cast<std::size_t>(f)] = c_[i];
    return r;
  }

  /// Coefficients on the basis 1, zeta, ..., zeta^{phi(N)-1} (reduced mod Phi_N),
  /// padded with zeros back to length N.
  std::vector<Rat> canonical() const {
    const std::vector<long long>& phi = cyclotomic_polynomial(n_);
    std::size_t deg = phi.size() - 1;
    std::vector<Rat> r = c_;
    for (std::size_t i = r.size(); i-- > deg;) {
      if (r[i].is_zero()) continue;
      Rat c = r[i];
      r[i] = Rat(0);
      for (std::size_t j = 0; j < deg; ++j)
        if (phi[j] != 0) r[i - deg + j] -= c * Rat(phi[j]);
    }
    return r;
  }

  bool is_zero() const {
    for (const Rat& x : canonical())
      if (!x.is_zero()) return false;
    return true;
  }

  bool is_rational() const {
    std::vector<Rat> r = canonical();
    for (std::size_t i = 1; i < r.size(); ++i)
      if (!r[i].is_zero()) return false;
    return true;
  }

  /// The rational value, assuming is_rational(); throws NonRationalResult otherwise.
  Rat rat_value() const {
    std::vector<Rat> r = canonical();
    for (std::size_t i = 1; i < r.size(); ++i)
      if (!r[i].is_zero())
        throw Error(ErrorKind::NonRationalResult, "cyclotomic value is not rational");
    return r[0];
  }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    check_same(a, b);
    return (a - b).is_zero();
  }
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  /// Deterministic total order on canonical forms (for reproducible sorting).
  static int compare(const Cyclotomic& a, const Cyclotomic& b) {
    check_same(a, b);
    std::vector<Rat> ca = a.canonical(), cb = b.canonical();
    for (std::size_t i = 0; i < ca.size(); ++i) {
      if (ca[i] == cb[i]) continue;
      return ca[i] < cb[i] ? -1 : 1;
    }
    return 0;
  }

 private:
  static void check_same(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.n_ != b.n_)
      throw Error(ErrorKind::IncompatibleOrder, "mixed cyclotomic orders " +
                                                    std::to_string(a.n_) + " and " +
                                                    std::to_string(b.n_));
  }

  long long n_;
  std::vector<Rat> c_;
};

}  // namespace zc

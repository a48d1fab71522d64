#include "zcenter/cyclotomic.hpp"

namespace zc {

namespace {

// Exact division of integer polynomials, assuming the divisor is monic and
// the division is known to be exact.
std::vector<long long> divide_monic(std::vector<long long> num,
                                    const std::vector<long long>& den) {
  std::size_t dn = num.size() - 1, dd = den.size() - 1;
  std::vector<long long> q(dn - dd + 1, 0);
  for (std::size_t i = dn + 1; i-- > dd;) {
    long long c = num[i];
    if (c == 0) continue;
    q[i - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  for (long long v : num)
    if (v != 0) throw Error(ErrorKind::Internal, "inexact polynomial division");
  return q;
}

std::vector<long long> compute_phi(long long n,
                                   std::map<long long, std::vector<long long>>& cache);

const std::vector<long long>& phi_cached(long long n,
                                         std::map<long long, std::vector<long long>>& cache) {
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_phi(n, cache)).first;
  return it->second;
}

std::vector<long long> compute_phi(long long n,
                                   std::map<long long, std::vector<long long>>& cache) {
  // x^n - 1
  std::vector<long long> num(static_cast<std::size_t>(n) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  for (long long d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    num = divide_monic(std::move(num), phi_cached(d, cache));
  }
  return num;
}

}  // namespace

const std::vector<long long>& cyclotomic_polynomial(long long n) {
  static std::mutex mu;
  static std::map<long long, std::vector<long long>> cache;
  std::lock_guard<std::mutex> lock(mu);
  return phi_cached(n, cache);
}

}  // namespace zc

#include "zcenter/render.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace zc {

namespace {

// Root symbol for zeta_N^j, folding the sign of fourth/second roots; returns
// empty for j = 0.
std::string root_symbol(long long n, long long j, bool unicode, int& sign) {
  sign = 1;
  j %= n;
  if (j == 0) return "";
  long long d = n / std::gcd(n, j);
  long long jp = j / (n / d);  // zeta_N^j = zeta_d^jp, gcd(jp, d) = 1
  const std::string omega = unicode ? "ω" : "w";
  const std::string eps = unicode ? "ε" : "eps";
  const std::string eta = unicode ? "η" : "eta";
  const std::string zeta = unicode ? "ζ" : "zeta";
  if (d == 2) {
    sign = -1;
    return "";
  }
  if (d == 3) return jp == 1 ? omega : omega + "^-1";
  if (d == 4) {
    if (jp == 3) {
      sign = -1;
      return eps;
    }
    return eps;
  }
  if (d == 9) return jp == 1 ? eta : eta + "^" + std::to_string(jp);
  return zeta + std::to_string(d) + (jp == 1 ? "" : "^" + std::to_string(jp));
}

std::string coeff_root(const Rat& r, long long n, long long j, bool unicode) {
  int sign;
  std::string sym = root_symbol(n, j, unicode, sign);
  Rat c = sign < 0 ? -r : r;
  if (sym.empty()) return c.str();
  if (c == Rat(1)) return sym;
  if (c == Rat(-1)) return "-" + sym;
  return c.str() + sym;
}

// Among all ways to write v = r * zeta_N^j, prefer the familiar root orders
// (third, fourth, ninth) and positive coefficients.
bool try_monomial(const Cyclotomic& v, long long& j_out, Rat& r_out) {
  long long n = v.order();
  bool found = false;
  long long best_score = 0;
  for (long long j = 1; j < n; ++j) {
    Cyclotomic w = v * Cyclotomic::root(n, n - j);
    if (!w.is_rational()) continue;
    Rat r = w.rat_value();
    if (r.is_zero()) continue;
    long long d = n / std::gcd(n, j);
    long long rank;
    switch (d) {
      case 3: rank = 0; break;
      case 4: rank = 1; break;
      case 9: rank = 2; break;
      default: rank = 3 + d;
    }
    long long score = rank * 2 + (r.sign() < 0 ? 1 : 0);
    if (!found || score < best_score) {
      found = true;
      best_score = score;
      j_out = j;
      r_out = r;
    }
  }
  return found;
}

}  // namespace

std::string render_value(const Cyclotomic& v, const RenderOptions& opt) {
  if (v.is_zero()) return "0";
  if (v.is_rational()) return v.rat_value().str();
  long long n = v.order();
  long long j;
  Rat r;
  bool mono = try_monomial(v, j, r);
  if (mono && r.sign() > 0) return coeff_root(r, n, j, opt.unicode);
  // two terms: rational + monomial, with candidate coefficients drawn from
  // the canonical form; preferred over a negative-coefficient monomial
  // (1 + omega rather than -omega^-1)
  std::vector<Rat> cand;
  for (const Rat& c : v.canonical()) {
    if (c.is_zero()) continue;
    if (c.sign() > 0) cand.push_back(c);
    if (c.sign() < 0) cand.push_back(-c);
  }
  for (long long jj = 1; jj < n; ++jj)
    for (const Rat& c : cand) {
      Cyclotomic rest = v - c * Cyclotomic::root(n, jj);
      if (!rest.is_rational()) continue;
      Rat r0 = rest.rat_value();
      if (r0.is_zero()) continue;
      std::string tail = coeff_root(c, n, jj, opt.unicode);
      if (!tail.empty() && tail[0] == '-') return r0.str() + tail;
      return r0.str() + "+" + tail;
    }
  if (mono) return coeff_root(r, n, j, opt.unicode);
  // fall back to the canonical coefficient list
  std::ostringstream os;
  os << "cyc" << n << "(";
  bool first = true;
  const std::vector<Rat> c = v.canonical();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].is_zero()) continue;
    if (!first) os << ",";
    os << i << ":" << c[i].str();
    first = false;
  }
  os << ")";
  return os.str();
}

std::string render_pair(const GroupTable& g, int f, int x) {
  return "(" + g.name(f) + "," + g.name(x) + ")";
}

std::string render_centre_table(const CentreContext& ctx,
                                const std::vector<std::string>& row_labels,
                                const std::vector<const CentreCharacter*>& rows,
                                const RenderOptions& opt) {
  const GroupTable& g = ctx.group();
  std::size_t ncols = ctx.column_pairs().size();
  std::vector<std::vector<std::string>> cells(rows.size() + 1,
                                              std::vector<std::string>(ncols + 1));
  cells[0][0] = "";
  for (std::size_t c = 0; c < ncols; ++c) {
    auto [f, x] = ctx.column_pairs()[c];
    cells[0][c + 1] = render_pair(g, f, x);
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    cells[r + 1][0] = row_labels[r];
    for (std::size_t c = 0; c < ncols; ++c) {
      auto [f, x] = ctx.column_pairs()[c];
      cells[r + 1][c + 1] = render_value(ctx.value_at(*rows[r], f, x), opt);
    }
  }
  std::vector<std::size_t> widths(ncols + 1, 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
  std::ostringstream os;
  for (std::size_t r = 0; r < cells.size(); ++r) {
    for (std::size_t c = 0; c < cells[r].size(); ++c) {
      os << cells[r][c];
      if (c + 1 < cells[r].size())
        os << std::string(widths[c] + 2 - cells[r][c].size(), ' ');
    }
    os << "\n";
    if (r == 0) {
      std::size_t total = std::accumulate(widths.begin(), widths.end(), std::size_t{0}) +
                          2 * (widths.size() - 1);
      os << std::string(total, '-') << "\n";
    }
  }
  return os.str();
}

std::string render_csv_table(const CentreContext& ctx,
                             const std::vector<std::string>& row_labels,
                             const std::vector<const CentreCharacter*>& rows,
                             const RenderOptions& opt) {
  const GroupTable& g = ctx.group();
  std::ostringstream os;
  os << "label";
  for (auto [f, x] : ctx.column_pairs()) os << ",\"" << render_pair(g, f, x) << "\"";
  os << "\n";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    os << row_labels[r];
    for (auto [f, x] : ctx.column_pairs())
      os << ",\"" << render_value(ctx.value_at(*rows[r], f, x), opt) << "\"";
    os << "\n";
  }
  return os.str();
}

}  // namespace zc

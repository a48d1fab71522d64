#include "zcenter/cochain.hpp"

#include <numeric>

namespace zc {

bool Cochain::is_normalized() const {
  int n = group_order;
  std::vector<int> args(static_cast<std::size_t>(degree), 0);
  for (std::size_t ix = 0; ix < values.size(); ++ix) {
    std::size_t t = ix;
    bool has_identity = false;
    for (int i = degree - 1; i >= 0; --i) {
      args[i] = static_cast<int>(t % n);
      t /= n;
      if (args[i] == 0) has_identity = true;
    }
    if (has_identity && !values[ix].is_zero()) return false;
  }
  return true;
}

long long Cochain::denominator_lcm() const {
  long long m = 1;
  for (const Phase& p : values) m = std::lcm(m, p.den());
  return m;
}

Cochain operator+(const Cochain& a, const Cochain& b) {
  if (a.degree != b.degree || a.group_order != b.group_order)
    throw Error(ErrorKind::MismatchedContext, "cochain shape mismatch");
  Cochain r = a;
  for (std::size_t i = 0; i < r.values.size(); ++i) r.values[i] += b.values[i];
  return r;
}

Cochain operator-(const Cochain& a, const Cochain& b) { return a + (-b); }

Cochain operator-(const Cochain& a) {
  Cochain r = a;
  for (Phase& p : r.values) p = -p;
  return r;
}

Cochain operator*(long long k, const Cochain& a) {
  Cochain r = a;
  for (Phase& p : r.values) p = k * p;
  return r;
}

Cochain zero_cochain(const GroupTable& g, int degree) {
  return Cochain(degree, g.order());
}

Cochain differential(const GroupTable& g, const Cochain& c) {
  if (c.degree > 3) throw Error(ErrorKind::DegreeTooHigh, "differential supports degree <= 3");
  if (c.group_order != g.order())
    throw Error(ErrorKind::MismatchedContext, "cochain/group mismatch");
  int n = g.order();
  int deg = c.degree;
  Cochain d(deg + 1, n);
  std::vector<int> args(static_cast<std::size_t>(deg) + 1, 0);
  std::vector<int> sub(static_cast<std::size_t>(deg), 0);
  for (std::size_t ix = 0; ix < d.values.size(); ++ix) {
    std::size_t t = ix;
    for (int i = deg; i >= 0; --i) {
      args[i] = static_cast<int>(t % n);
      t /= n;
    }
    Phase v;
    // face 0: drop first argument
    for (int i = 0; i < deg; ++i) sub[i] = args[i + 1];
    v += c.values[c.index(sub.data())];
    // inner faces: merge args[i-1], args[i]
    int sign = -1;
    for (int i = 1; i <= deg; ++i) {
      int k = 0;
      for (int j = 0; j <= deg; ++j) {
        if (j == i - 1) {
          sub[k++] = g.mul(args[i - 1], args[i]);
          ++j;  // skip args[i]
        } else {
          sub[k++] = args[j];
        }
      }
      const Phase& term = c.values[c.index(sub.data())];
      v += sign > 0 ? term : -term;
      sign = -sign;
    }
    // last face: drop last argument
    for (int i = 0; i < deg; ++i) sub[i] = args[i];
    const Phase& term = c.values[c.index(sub.data())];
    v += sign > 0 ? term : -term;
    d.values[ix] = v;
  }
  return d;
}

bool is_cocycle(const GroupTable& g, const Cochain& c) {
  if (c.degree > 3) throw Error(ErrorKind::DegreeTooHigh, "is_cocycle supports degree <= 3");
  return differential(g, c).is_zero();
}

Phase transgression_right(const GroupTable& g, const Cochain& a, int f, int gg, int h) {
  int gh = g.conj(gg, h);
  int fgh = g.conj(f, gh);
  return -a(f, gg, h) + a(f, gh, gg) - a(fgh, f, gg);
}

Phase transgression_left(const GroupTable& g, const Cochain& a, int f, int gg, int h) {
  int fg = g.conj(f, gg);
  int fh = g.conj(f, h);
  return a(f, gg, h) - a(fg, f, h) + a(fg, fh, f);
}

TransgressionTables transgression_tables(const GroupTable& g, const Cochain& alpha) {
  int n = g.order();
  TransgressionTables t;
  t.n = n;
  t.right.resize(static_cast<std::size_t>(n) * n * n);
  t.left.resize(t.right.size());
  for (int f = 0; f < n; ++f)
    for (int x = 0; x < n; ++x)
      for (int h = 0; h < n; ++h) {
        std::size_t ix = (static_cast<std::size_t>(f) * n + x) * n + h;
        t.right[ix] = transgression_right(g, alpha, f, x, h);
        t.left[ix] = transgression_left(g, alpha, f, x, h);
      }
  return t;
}

bool check_pca_identities(const GroupTable& g, const Cochain& alpha) {
  int n = g.order();
  TransgressionTables t = transgression_tables(g, alpha);
  for (int f = 0; f < n; ++f)
    for (int x = 0; x < n; ++x)
      for (int h = 0; h < n; ++h)
        for (int u = 0; u < n; ++u) {
          // alpha(f,xh|u) + alpha(x,h|u) = alpha(fx,h|u) + alpha(f,x|huh^-1)
          if (t.tefa(f, g.mul(x, h), u) + t.tefa(x, h, u) !=
              t.tefa(g.mul(f, x), h, u) + t.tefa(f, x, g.conj(h, u)))
            return false;
          // alpha(fx|u,v) + alpha(f,x|u) + alpha(f,x|v)
          //   = alpha(f,x|uv) + alpha(x|u,v) + alpha(f|xux^-1, xvx^-1)
          int u2 = h, v2 = u;
          if (t.acfa(g.mul(f, x), u2, v2) + t.tefa(f, x, u2) + t.tefa(f, x, v2) !=
              t.tefa(f, x, g.mul(u2, v2)) + t.acfa(x, u2, v2) +
                  t.acfa(f, g.conj(x, u2), g.conj(x, v2)))
            return false;
          // alpha(x,h,u) + alpha(f|xh,u) + alpha(f|x,h)
          //   = alpha(f|x,hu) + alpha(f|h,u) + alpha(fxf^-1, fhf^-1, fuf^-1)
          if (alpha(x, h, u) + t.acfa(f, g.mul(x, h), u) + t.acfa(f, x, h) !=
              t.acfa(f, x, g.mul(h, u)) + t.acfa(f, h, u) +
                  alpha(g.conj(f, x), g.conj(f, h), g.conj(f, u)))
            return false;
        }
  return true;
}

namespace {

// Cochain of the conjugation double complex C^{p,q}(G,G,k*): a dense table
// over G^{p+q} with the first p slots acting and the last q slots graded.
struct BiCochain {
  int p = 0, q = 0;
  int n = 1;
  std::vector<Phase> values;
  BiCochain(int p_, int q_, int n_)
      : p(p_), q(q_), n(n_), values(Cochain::table_size(p_ + q_, n_)) {}
  std::size_t index(const int* args) const {
    std::size_t ix = 0;
    for (int i = 0; i < p + q; ++i) ix = ix * n + static_cast<std::size_t>(args[i]);
    return ix;
  }
  bool is_zero() const {
    for (const Phase& v : values)
      if (!v.is_zero()) return false;
    return true;
  }
};

// Vertical differential del: C^{p,q} -> C^{p,q+1} (bar differential in the
// graded slots, trivial coefficients).
BiCochain vertical(const GroupTable& g, const BiCochain& c) {
  BiCochain d(c.p, c.q + 1, c.n);
  int tot = c.p + c.q + 1;
  std::vector<int> args(static_cast<std::size_t>(tot));
  std::vector<int> sub(static_cast<std::size_t>(tot) - 1);
  for (std::size_t ix = 0; ix < d.values.size(); ++ix) {
    std::size_t t = ix;
    for (int i = tot - 1; i >= 0; --i) {
      args[i] = static_cast<int>(t % c.n);
      t /= c.n;
    }
    Phase v;
    // drop first graded slot
    for (int i = 0, k = 0; i < tot; ++i)
      if (i != c.p) sub[k++] = args[i];
    v += c.values[c.index(sub.data())];
    int sign = -1;
    for (int i = 1; i <= c.q; ++i) {  // merge graded slots i-1, i
      for (int j = 0, k = 0; j < tot; ++j) {
        if (j == c.p + i - 1) {
          sub[k++] = g.mul(args[j], args[j + 1]);
          ++j;
        } else {
          sub[k++] = args[j];
        }
      }
      const Phase& term = c.values[c.index(sub.data())];
      v += sign > 0 ? term : -term;
      sign = -sign;
    }
    // drop last graded slot
    for (int i = 0; i < tot - 1; ++i) sub[i] = args[i];
    const Phase& term = c.values[c.index(sub.data())];
    v += sign > 0 ? term : -term;
    d.values[ix] = v;
  }
  return d;
}

// Horizontal differential d: C^{p,q} -> C^{p+1,q}; the last acting slot hits
// the graded slots by conjugation.
BiCochain horizontal(const GroupTable& g, const BiCochain& c) {
  BiCochain d(c.p + 1, c.q, c.n);
  int tot = c.p + 1 + c.q;
  std::vector<int> args(static_cast<std::size_t>(tot));
  std::vector<int> sub(static_cast<std::size_t>(tot) - 1);
  for (std::size_t ix = 0; ix < d.values.size(); ++ix) {
    std::size_t t = ix;
    for (int i = tot - 1; i >= 0; --i) {
      args[i] = static_cast<int>(t % c.n);
      t /= c.n;
    }
    Phase v;
    // drop first acting slot
    for (int i = 1, k = 0; i < tot; ++i) sub[k++] = args[i];
    v += c.values[c.index(sub.data())];
    int sign = -1;
    for (int i = 1; i <= c.p; ++i) {  // merge acting slots i-1, i
      for (int j = 0, k = 0; j < tot; ++j) {
        if (j == i - 1) {
          sub[k++] = g.mul(args[j], args[j + 1]);
          ++j;
        } else {
          sub[k++] = args[j];
        }
      }
      const Phase& term = c.values[c.index(sub.data())];
      v += sign > 0 ? term : -term;
      sign = -sign;
    }
    // drop last acting slot, conjugating the graded slots by it
    int f = args[c.p];
    for (int i = 0; i < c.p; ++i) sub[i] = args[i];
    for (int i = 0; i < c.q; ++i) sub[c.p + i] = g.conj(f, args[c.p + 1 + i]);
    const Phase& term = c.values[c.index(sub.data())];
    v += sign > 0 ? term : -term;
    d.values[ix] = v;
  }
  return d;
}

}  // namespace

bool hs_check(const GroupTable& g, const Cochain& alpha) {
  int n = g.order();
  TransgressionTables t = transgression_tables(g, alpha);
  BiCochain gamma(2, 1, n), beta(1, 2, n), a03(0, 3, n);
  for (std::size_t i = 0; i < gamma.values.size(); ++i) gamma.values[i] = t.right[i];
  for (std::size_t i = 0; i < beta.values.size(); ++i) beta.values[i] = t.left[i];
  a03.values = alpha.values;
  if (!horizontal(g, gamma).is_zero()) return false;
  BiCochain vg = vertical(g, gamma), hb = horizontal(g, beta);
  if (!(vg.values == hb.values)) return false;
  BiCochain vb = vertical(g, beta), ha = horizontal(g, a03);
  if (!(vb.values == ha.values)) return false;
  return vertical(g, a03).is_zero();
}

Cochain restrict_cochain(const Cochain& c, const EmbeddedGroup& h) {
  int m = h.table.order();
  Cochain r(c.degree, m);
  std::vector<int> largs(static_cast<std::size_t>(c.degree));
  std::vector<int> pargs(static_cast<std::size_t>(c.degree));
  for (std::size_t ix = 0; ix < r.values.size(); ++ix) {
    std::size_t t = ix;
    for (int i = c.degree - 1; i >= 0; --i) {
      largs[i] = static_cast<int>(t % m);
      t /= m;
    }
    for (int i = 0; i < c.degree; ++i) pargs[i] = h.to_parent[largs[i]];
    r.values[ix] = c.values[c.index(pargs.data())];
  }
  return r;
}

Cochain product_cocycle(const GroupTable& a, const Cochain& alpha, const GroupTable& b,
                        const Cochain& beta) {
  if (alpha.degree != beta.degree)
    throw Error(ErrorKind::MismatchedContext, "cocycle degree mismatch");
  int na = a.order(), nb = b.order(), n = na * nb;
  int deg = alpha.degree;
  Cochain r(deg, n);
  std::vector<int> args(static_cast<std::size_t>(deg)), aa(args.size()), bb(args.size());
  for (std::size_t ix = 0; ix < r.values.size(); ++ix) {
    std::size_t t = ix;
    for (int i = deg - 1; i >= 0; --i) {
      args[i] = static_cast<int>(t % n);
      t /= n;
    }
    for (int i = 0; i < deg; ++i) {
      aa[i] = args[i] / nb;
      bb[i] = args[i] % nb;
    }
    r.values[ix] = alpha.values[alpha.index(aa.data())] + beta.values[beta.index(bb.data())];
  }
  return r;
}

Cochain inverse_cocycle(const Cochain& alpha) { return -alpha; }

Cochain theta_d3(long long k) {
  GroupTable d3 = dihedral_group(3);
  int n = 6;
  Cochain c(3, n);
  auto decompose = [](int g, int& m, int& nn) {
    m = g / 3;
    nn = g % 3;
  };
  for (int g1 = 0; g1 < n; ++g1)
    for (int g2 = 0; g2 < n; ++g2)
      for (int g3 = 0; g3 < n; ++g3) {
        int m1, n1, m2, n2, m3, n3;
        decompose(g1, m1, n1);
        decompose(g2, m2, n2);
        decompose(g3, m3, n3);
        long long x = (m3 ? -n2 : n2) + n3;
        long long rx = ((x % 3) + 3) % 3;
        long long sgn = (m2 + m3) % 2 ? -1 : 1;
        Phase v = Phase(sgn * n1 * (x - rx), 9) + Phase(m1 * m2 * m3, 2);
        c.at({g1, g2, g3}) = k * v;
      }
  (void)d3;
  return c;
}

Cochain builtin_cocycle(const GroupTable& g, const std::string& spec) {
  if (spec == "trivial") return zero_cochain(g, 3);
  auto colon = spec.find(':');
  std::string head = colon == std::string::npos ? spec : spec.substr(0, colon);
  if (head == "theta3") {
    long long k = 1;
    if (colon != std::string::npos) {
      try {
        k = std::stoll(spec.substr(colon + 1));
      } catch (const std::logic_error&) {
        throw Error(ErrorKind::ParseError, "bad cocycle spec '" + spec + "'");
      }
    }
    GroupTable d3 = dihedral_group(3);
    if (g.order() != 6)
      throw Error(ErrorKind::MismatchedContext, "theta3 lives on the builtin dihedral(3)");
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b)
        if (g.mul(a, b) != d3.mul(a, b))
          throw Error(ErrorKind::MismatchedContext, "theta3 lives on the builtin dihedral(3)");
    return theta_d3(k);
  }
  throw Error(ErrorKind::ParseError, "unknown cocycle spec '" + spec + "'");
}

}  // namespace zc

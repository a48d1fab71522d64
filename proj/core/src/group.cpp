#include "zcenter/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace zc {

GroupTable GroupTable::from_multiplication_table(const std::vector<std::vector<int>>& table,
                                                 std::vector<std::string> names) {
  GroupTable g;
  int n = static_cast<int>(table.size());
  if (n == 0) throw Error(ErrorKind::NoIdentity, "empty table");
  g.n_ = n;
  g.mul_.assign(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[a].size()) != n)
      throw Error(ErrorKind::NotAPermutationRow, "table is not square");
    for (int b = 0; b < n; ++b) {
      int v = table[a][b];
      if (v < 0 || v >= n)
        throw Error(ErrorKind::NotAPermutationRow, "entry out of range");
      g.mul_[static_cast<std::size_t>(a) * n + b] = v;
    }
  }
  for (int a = 0; a < n; ++a) {
    if (g.mul(0, a) != a || g.mul(a, 0) != a)
      throw Error(ErrorKind::NoIdentity, "element 0 is not a two-sided identity");
  }
  g.inv_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (g.mul(a, b) == 0 && g.mul(b, a) == 0) { g.inv_[a] = b; break; }
    if (g.inv_[a] < 0)
      throw Error(ErrorKind::NoInverse, "element " + std::to_string(a) + " has no inverse");
  }
  for (int a = 0; a < n; ++a) {
    std::vector<bool> row(n, false), col(n, false);
    for (int b = 0; b < n; ++b) {
      row[g.mul(a, b)] = true;
      col[g.mul(b, a)] = true;
    }
    for (int b = 0; b < n; ++b)
      if (!row[b] || !col[b])
        throw Error(ErrorKind::NotAPermutationRow,
                    "row/column " + std::to_string(a) + " is not a permutation");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
          throw Error(ErrorKind::NotAssociative,
                      "(" + std::to_string(a) + "," + std::to_string(b) + "," +
                          std::to_string(c) + ")");
  if (names.empty()) {
    names.reserve(n);
    for (int a = 0; a < n; ++a) names.push_back("g" + std::to_string(a));
    names[0] = "e";
  }
  if (static_cast<int>(names.size()) != n)
    throw Error(ErrorKind::ParseError, "name list size mismatch");
  g.names_ = std::move(names);
  return g;
}

int GroupTable::pow(int g, long long k) const {
  if (k < 0) return pow(inv(g), -k);
  int r = 0;
  while (k-- > 0) r = mul(r, g);
  return r;
}

int GroupTable::element_order(int g) const {
  int o = 1, x = g;
  while (x != 0) { x = mul(x, g); ++o; }
  return o;
}

long long GroupTable::exponent() const {
  long long e = 1;
  for (int g = 0; g < n_; ++g) e = std::lcm(e, static_cast<long long>(element_order(g)));
  return e;
}

bool GroupTable::is_abelian() const {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

GroupTable cyclic_group(int n) {
  if (n < 1) throw Error(ErrorKind::ParseError, "cyclic order must be >= 1");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  std::vector<std::string> names(n);
  names[0] = "e";
  for (int a = 1; a < n; ++a) names[a] = a == 1 ? "c" : "c" + std::to_string(a);
  return GroupTable::from_multiplication_table(t, std::move(names));
}

GroupTable dihedral_group(int n) {
  if (n < 1) throw Error(ErrorKind::ParseError, "dihedral parameter must be >= 1");
  // index m*n + j  <->  s^m r^j;  (s^a r^b)(s^c r^d) = s^(a+c) r^((-1)^c b + d)
  int order = 2 * n;
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  auto idx = [n](int m, int j) { return m * n + ((j % n) + n) % n; };
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < n; ++d)
          t[idx(a, b)][idx(c, d)] = idx((a + c) % 2, (c ? -b : b) + d);
  std::vector<std::string> names(order);
  for (int j = 0; j < n; ++j) {
    names[idx(0, j)] = j == 0 ? "e" : (j == 1 ? "r" : "r" + std::to_string(j));
    names[idx(1, j)] = j == 0 ? "s" : (j == 1 ? "sr" : "sr" + std::to_string(j));
  }
  return GroupTable::from_multiplication_table(t, std::move(names));
}

namespace {
std::vector<std::vector<int>> permutations_lex(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> all;
  do all.push_back(p); while (std::next_permutation(p.begin(), p.end()));
  return all;
}
}  // namespace

GroupTable symmetric_group(int n) {
  if (n < 1 || n > 5) throw Error(ErrorKind::SizeLimitExceeded, "symmetric(n) supports n <= 5");
  std::vector<std::vector<int>> perms = permutations_lex(n);
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
  int order = static_cast<int>(perms.size());
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      std::vector<int> c(n);
      for (int i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];  // (ab)(i) = a(b(i))
      t[a][b] = index[c];
    }
  std::vector<std::string> names(order);
  for (int a = 0; a < order; ++a) {
    std::string s;
    for (int i = 0; i < n; ++i) s += static_cast<char>('1' + perms[a][i]);
    names[a] = s;
  }
  return GroupTable::from_multiplication_table(t, std::move(names));
}

GroupTable quaternion_group() {
  // 0..7 = 1, i, j, k, -1, -i, -j, -k
  auto mulq = [](int a, int b) {
    int sa = a / 4, sb = b / 4, ua = a % 4, ub = b % 4;
    static const int base[4][4] = {{0, 1, 2, 3}, {1, 4, 3, 6}, {2, 7, 4, 1}, {3, 2, 5, 4}};
    int r = base[ua][ub];
    int sign = (sa + sb + r / 4) % 2;
    return (r % 4) + 4 * sign;
  };
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) t[a][b] = mulq(a, b);
  return GroupTable::from_multiplication_table(
      t, {"1", "i", "j", "k", "-1", "-i", "-j", "-k"});
}

GroupTable direct_product(const GroupTable& a, const GroupTable& b) {
  int na = a.order(), nb = b.order();
  int n = na * nb;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int x1 = 0; x1 < na; ++x1)
    for (int y1 = 0; y1 < nb; ++y1)
      for (int x2 = 0; x2 < na; ++x2)
        for (int y2 = 0; y2 < nb; ++y2)
          t[x1 * nb + y1][x2 * nb + y2] = a.mul(x1, x2) * nb + b.mul(y1, y2);
  std::vector<std::string> names(n);
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < nb; ++y) names[x * nb + y] = "(" + a.name(x) + "," + b.name(y) + ")";
  return GroupTable::from_multiplication_table(t, std::move(names));
}

GroupTable builtin_group(const std::string& spec, int max_order) {
  auto check = [max_order](GroupTable g) {
    if (g.order() > max_order)
      throw Error(ErrorKind::SizeLimitExceeded,
                  "group order " + std::to_string(g.order()) + " exceeds bound " +
                      std::to_string(max_order));
    return g;
  };
  if (spec == "trivial") return cyclic_group(1);
  if (spec == "quaternion8") return quaternion_group();
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw Error(ErrorKind::ParseError, "bad group spec '" + spec + "'");
  std::string head = spec.substr(0, colon), rest = spec.substr(colon + 1);
  if (head == "product") {
    // split at the top-level comma
    int depth = 0;
    std::size_t cut = std::string::npos;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      if (rest[i] == '(') ++depth;
      else if (rest[i] == ')') --depth;
      else if (rest[i] == ',' && depth == 0) {
        // "product:a,b" where a itself may contain colons but no commas;
        // nested products use parentheses: product:(product:a,b),c
        cut = i;
        break;
      }
    }
    if (cut == std::string::npos)
      throw Error(ErrorKind::ParseError, "product spec needs two factors: '" + spec + "'");
    auto strip = [](std::string s) {
      if (!s.empty() && s.front() == '(' && s.back() == ')') return s.substr(1, s.size() - 2);
      return s;
    };
    GroupTable a = builtin_group(strip(rest.substr(0, cut)), max_order);
    GroupTable b = builtin_group(strip(rest.substr(cut + 1)), max_order);
    return check(direct_product(a, b));
  }
  int n = 0;
  try {
    n = std::stoi(rest);
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::ParseError, "bad group parameter in '" + spec + "'");
  }
  if (head == "cyclic") return check(cyclic_group(n));
  if (head == "dihedral") return check(dihedral_group(n));
  if (head == "symmetric") return check(symmetric_group(n));
  throw Error(ErrorKind::ParseError, "unknown group family '" + head + "'");
}

Subgroup make_subgroup(const GroupTable& g, std::vector<int> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  Subgroup s;
  s.parent = &g;
  s.elems = std::move(elems);
  if (g.order() > 64)
    throw Error(ErrorKind::SizeLimitExceeded, "subgroup machinery requires |G| <= 64");
  for (int e : s.elems) s.mask |= std::uint64_t{1} << e;
  if (!s.contains(0)) throw Error(ErrorKind::NoIdentity, "subgroup misses the identity");
  for (int a : s.elems) {
    if (!s.contains(g.inv(a)))
      throw Error(ErrorKind::NoInverse, "subgroup not closed under inverse");
    for (int b : s.elems)
      if (!s.contains(g.mul(a, b)))
        throw Error(ErrorKind::NotAPermutationRow, "subgroup not closed under multiplication");
  }
  return s;
}

Subgroup trivial_subgroup(const GroupTable& g) { return make_subgroup(g, {0}); }

Subgroup full_subgroup(const GroupTable& g) {
  std::vector<int> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  return make_subgroup(g, std::move(all));
}

Subgroup generated_subgroup(const GroupTable& g, const std::vector<int>& gens) {
  std::vector<int> stack = {0};
  std::uint64_t seen = 1;
  for (int x : gens)
    if (!((seen >> x) & 1u)) { seen |= std::uint64_t{1} << x; stack.push_back(x); }
  std::vector<int> elems = stack;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j) {
      int p = g.mul(elems[i], elems[j]);
      if (!((seen >> p) & 1u)) { seen |= std::uint64_t{1} << p; elems.push_back(p); }
    }
  return make_subgroup(g, std::move(elems));
}

Subgroup conjugate_subgroup(const Subgroup& s, int x) {
  const GroupTable& g = *s.parent;
  std::vector<int> elems;
  elems.reserve(s.elems.size());
  for (int a : s.elems) elems.push_back(g.conj(x, a));
  return make_subgroup(g, std::move(elems));
}

bool is_normal_in(const Subgroup& f, const Subgroup& h) {
  const GroupTable& g = *f.parent;
  for (int x : h.elems)
    for (int a : f.elems)
      if (!f.contains(g.conj(x, a))) return false;
  return true;
}

std::vector<std::vector<int>> conjugacy_classes(const GroupTable& g) {
  int n = g.order();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<int>> classes;
  for (int a = 0; a < n; ++a) {
    if (seen[a]) continue;
    std::set<int> cls;
    for (int x = 0; x < n; ++x) cls.insert(g.conj(x, a));
    std::vector<int> v(cls.begin(), cls.end());
    for (int e : v) seen[e] = true;
    classes.push_back(std::move(v));
  }
  return classes;  // outer order = order of smallest member = discovery order
}

std::vector<int> conjugacy_class_map(const GroupTable& g) {
  std::vector<int> m(g.order(), -1);
  auto classes = conjugacy_classes(g);
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (int e : classes[c]) m[e] = static_cast<int>(c);
  return m;
}

Subgroup centralizer(const GroupTable& g, int f) {
  std::vector<int> elems;
  for (int x = 0; x < g.order(); ++x)
    if (g.commutes(x, f)) elems.push_back(x);
  return make_subgroup(g, std::move(elems));
}

Subgroup centralizer_in(const Subgroup& h, int f) {
  const GroupTable& g = *h.parent;
  std::vector<int> elems;
  for (int x : h.elems)
    if (g.commutes(x, f)) elems.push_back(x);
  return make_subgroup(g, std::move(elems));
}

std::vector<std::pair<int, int>> commuting_pairs(const GroupTable& g) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      if (g.commutes(a, b)) pairs.emplace_back(a, b);
  return pairs;
}

std::vector<Subgroup> all_subgroups_raw(const GroupTable& g, int max_order) {
  if (g.order() > max_order)
    throw Error(ErrorKind::SizeLimitExceeded, "subgroup enumeration bound exceeded");
  std::set<std::uint64_t> seen;
  std::vector<Subgroup> subs;
  auto add = [&](Subgroup s) {
    if (seen.insert(s.mask).second) subs.push_back(std::move(s));
  };
  // layer 0: cyclic subgroups
  for (int a = 0; a < g.order(); ++a) add(generated_subgroup(g, {a}));
  // closure under pairwise joins
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Subgroup> cur = subs;
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (std::size_t j = i + 1; j < cur.size(); ++j) {
        if ((cur[i].mask | cur[j].mask) == cur[i].mask ||
            (cur[i].mask | cur[j].mask) == cur[j].mask)
          continue;
        std::vector<int> gens = cur[i].elems;
        gens.insert(gens.end(), cur[j].elems.begin(), cur[j].elems.end());
        Subgroup join = generated_subgroup(g, gens);
        if (!seen.count(join.mask)) {
          add(join);
          grew = true;
        }
      }
  }
  std::sort(subs.begin(), subs.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.elems.size() != b.elems.size()) return a.elems.size() < b.elems.size();
    return a.elems < b.elems;
  });
  return subs;
}

std::vector<Subgroup> all_subgroups(const GroupTable& g, int max_order) {
  std::vector<Subgroup> raw = all_subgroups_raw(g, max_order);
  std::set<std::uint64_t> covered;
  std::vector<Subgroup> reps;
  for (const Subgroup& s : raw) {
    if (covered.count(s.mask)) continue;
    // pick the lexicographically least element set in the conjugacy orbit;
    // raw order is (size, elems), so s itself is the least of its orbit
    Subgroup best = s;
    for (int x = 0; x < g.order(); ++x) {
      Subgroup c = conjugate_subgroup(s, x);
      covered.insert(c.mask);
      if (c.elems < best.elems) best = c;
    }
    reps.push_back(best);
  }
  return reps;
}

std::vector<Subgroup> normal_subgroups_of(const Subgroup& h) {
  EmbeddedGroup eh = subgroup_as_group(h);
  std::vector<Subgroup> local = all_subgroups_raw(eh.table, 64);
  std::vector<Subgroup> out;
  for (const Subgroup& s : local) {
    std::vector<int> elems;
    for (int e : s.elems) elems.push_back(eh.to_parent[e]);
    Subgroup f = make_subgroup(*h.parent, std::move(elems));
    if (is_normal_in(f, h)) out.push_back(std::move(f));
  }
  return out;
}

EmbeddedGroup subgroup_as_group(const Subgroup& h) {
  const GroupTable& g = *h.parent;
  EmbeddedGroup e;
  e.to_parent = h.elems;
  e.from_parent.assign(g.order(), -1);
  for (std::size_t i = 0; i < h.elems.size(); ++i)
    e.from_parent[h.elems[i]] = static_cast<int>(i);
  int m = h.order();
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      t[a][b] = e.from_parent[g.mul(h.elems[a], h.elems[b])];
  std::vector<std::string> names;
  names.reserve(m);
  for (int a = 0; a < m; ++a) names.push_back(g.name(h.elems[a]));
  e.table = GroupTable::from_multiplication_table(t, std::move(names));
  return e;
}

QuotientWithSection quotient_with_section(const Subgroup& h, const Subgroup& f) {
  const GroupTable& g = *h.parent;
  if ((f.mask | h.mask) != h.mask)
    throw Error(ErrorKind::NotNormal, "F is not contained in H");
  if (!is_normal_in(f, h)) throw Error(ErrorKind::NotNormal, "F is not normal in H");
  QuotientWithSection q;
  q.projection.assign(g.order(), -1);
  std::vector<int> reps;
  for (int x : h.elems) {
    if (q.projection[x] >= 0) continue;
    int c = static_cast<int>(reps.size());
    reps.push_back(x);  // h.elems ascending => first hit is the least-index rep
    for (int a : f.elems) q.projection[g.mul(x, a)] = c;
  }
  int m = static_cast<int>(reps.size());
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) t[a][b] = q.projection[g.mul(reps[a], reps[b])];
  std::vector<std::string> names;
  names.reserve(m);
  for (int a = 0; a < m; ++a) names.push_back(g.name(reps[a]) + "F");
  q.quotient = GroupTable::from_multiplication_table(t, std::move(names));
  q.section = std::move(reps);
  return q;
}

}  // namespace zc

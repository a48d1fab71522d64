#include "zcenter/json_io.hpp"

namespace zc {

using nlohmann::json;

json group_to_json(const GroupTable& g) {
  json t = json::array();
  for (int a = 0; a < g.order(); ++a) {
    json row = json::array();
    for (int b = 0; b < g.order(); ++b) row.push_back(g.mul(a, b));
    t.push_back(std::move(row));
  }
  return json{{"order", g.order()}, {"table", std::move(t)}, {"names", g.names()}};
}

GroupTable group_from_json(const json& j) {
  if (!j.contains("table")) throw Error(ErrorKind::ParseError, "group JSON misses 'table'");
  std::vector<std::vector<int>> table = j.at("table").get<std::vector<std::vector<int>>>();
  std::vector<std::string> names;
  if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
  if (j.contains("order") && j.at("order").get<int>() != static_cast<int>(table.size()))
    throw Error(ErrorKind::ParseError, "group JSON order/table mismatch");
  return GroupTable::from_multiplication_table(table, std::move(names));
}

json cochain_to_json(const GroupTable& g, const Cochain& c) {
  json values = json::array();
  std::vector<int> args(static_cast<std::size_t>(c.degree));
  for (std::size_t ix = 0; ix < c.values.size(); ++ix) {
    if (c.values[ix].is_zero()) continue;
    std::size_t t = ix;
    for (int i = c.degree - 1; i >= 0; --i) {
      args[static_cast<std::size_t>(i)] = static_cast<int>(t % c.group_order);
      t /= c.group_order;
    }
    values.push_back(json{{"args", args}, {"phase", c.values[ix].str()}});
  }
  return json{{"group", group_to_json(g)}, {"degree", c.degree}, {"values", std::move(values)}};
}

Cochain cochain_from_json(const json& j, const GroupTable& expected_group) {
  int degree = j.at("degree").get<int>();
  if (j.contains("group")) {
    GroupTable g = group_from_json(j.at("group"));
    if (g.order() != expected_group.order())
      throw Error(ErrorKind::MismatchedContext, "cochain group order mismatch");
    for (int a = 0; a < g.order(); ++a)
      for (int b = 0; b < g.order(); ++b)
        if (g.mul(a, b) != expected_group.mul(a, b))
          throw Error(ErrorKind::MismatchedContext,
                      "cochain group table differs from the requested group");
  }
  Cochain c(degree, expected_group.order());
  if (j.contains("values"))
    for (const json& e : j.at("values")) {
      std::vector<int> args = e.at("args").get<std::vector<int>>();
      if (static_cast<int>(args.size()) != degree)
        throw Error(ErrorKind::ParseError, "cochain entry arity mismatch");
      for (int a : args)
        if (a < 0 || a >= expected_group.order())
          throw Error(ErrorKind::ParseError, "cochain entry argument out of range");
      c.values[c.index(args.data())] = Phase::parse(e.at("phase").get<std::string>());
    }
  return c;
}

json cyclotomic_to_json(const Cyclotomic& v) {
  json coeffs = json::array();
  for (const Rat& r : v.canonical()) coeffs.push_back(r.str());
  return json{{"N", v.order()}, {"coeffs", std::move(coeffs)}};
}

Cyclotomic cyclotomic_from_json(const json& j) {
  long long n = j.at("N").get<long long>();
  Cyclotomic v(n);
  std::vector<std::string> coeffs = j.at("coeffs").get<std::vector<std::string>>();
  if (static_cast<long long>(coeffs.size()) != n)
    throw Error(ErrorKind::ParseError, "cyclotomic coefficient count mismatch");
  Cyclotomic out(n);
  for (long long i = 0; i < n; ++i)
    out += Rat::parse(coeffs[static_cast<std::size_t>(i)]) * Cyclotomic::root(n, i);
  return out;
}

json projective_table_to_json(const GroupTable& h, const ProjectiveCharacterTable& t) {
  json rows = json::array();
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    json vals = json::array();
    for (const Cyclotomic& v : t.rows[i]) vals.push_back(cyclotomic_to_json(v));
    rows.push_back(json{{"degree", t.degrees[i]}, {"values", std::move(vals)}});
  }
  json classes = json::array();
  for (const auto& cls : conjugacy_classes(h)) classes.push_back(cls[0]);
  return json{{"N", t.root_order}, {"classes", std::move(classes)}, {"rows", std::move(rows)}};
}

json centre_character_to_json(const CentreContext& ctx, const CentreCharacter& chi) {
  json values = json::array();
  for (std::size_t ix = 0; ix < ctx.pairs().size(); ++ix) {
    if (chi.values[ix].is_zero()) continue;
    auto [f, g] = ctx.pairs()[ix];
    values.push_back(json{{"pair", {f, g}}, {"value", cyclotomic_to_json(chi.values[ix])}});
  }
  return json{{"N", chi.root_order}, {"values", std::move(values)}};
}

CentreCharacter centre_character_from_json(const CentreContext& ctx, const json& j) {
  CentreCharacter chi = ctx.zero_character();
  long long n = j.at("N").get<long long>();
  if (n != chi.root_order)
    throw Error(ErrorKind::MismatchedContext,
                "character root order " + std::to_string(n) + " does not match context " +
                    std::to_string(chi.root_order));
  for (const json& e : j.at("values")) {
    int f = e.at("pair").at(0).get<int>();
    int g = e.at("pair").at(1).get<int>();
    int ix = ctx.pair_index(f, g);
    if (ix < 0)
      throw Error(ErrorKind::ParseError, "character value at a non-commuting pair");
    chi.values[static_cast<std::size_t>(ix)] = cyclotomic_from_json(e.at("value"));
  }
  return chi;
}

json etale_datum_to_json(const GroupTable& g, const EtaleDatum& d) {
  (void)g;  // kept in the signature for symmetry with the other serializers
  json gamma = json::array();
  for (int a = 0; a < d.fg.table.order(); ++a)
    for (int b = 0; b < d.fg.table.order(); ++b) {
      const Phase& v = d.gamma(a, b);
      if (v.is_zero()) continue;
      gamma.push_back(json{{"args",
                            {d.fg.to_parent[static_cast<std::size_t>(a)],
                             d.fg.to_parent[static_cast<std::size_t>(b)]}},
                           {"phase", v.str()}});
    }
  json eps = json::array();
  for (int x : d.h.elems)
    for (int ff : d.f.elems) {
      const Phase& v = d.epsilon.at(x, ff);
      if (v.is_zero()) continue;
      eps.push_back(json{{"h", x}, {"f", ff}, {"phase", v.str()}});
    }
  return json{{"H", d.h.elems}, {"F", d.f.elems}, {"gamma", std::move(gamma)},
              {"epsilon", std::move(eps)}};
}

json invariants_to_json(const PhysicalInvariants& inv) {
  json simples_a = json::array();
  for (std::size_t i = 0; i < inv.ctx_a->simples().size(); ++i) {
    const SimpleLabel& l = inv.ctx_a->simples()[i];
    simples_a.push_back(json{{"class_rep", inv.ctx_a->class_rep(l.class_index)},
                             {"char_index", l.char_index},
                             {"degree", inv.ctx_a->simple_degree(static_cast<int>(i))}});
  }
  json list = json::array();
  for (const ModularInvariant& m : inv.invariants) {
    json gamma = json::array();
    for (int a = 0; a < m.datum.hg.table.order(); ++a)
      for (int b = 0; b < m.datum.hg.table.order(); ++b) {
        const Phase& v = m.datum.gamma(a, b);
        if (v.is_zero()) continue;
        gamma.push_back(json{{"args",
                              {m.datum.hg.to_parent[static_cast<std::size_t>(a)],
                               m.datum.hg.to_parent[static_cast<std::size_t>(b)]}},
                             {"phase", v.str()}});
      }
    list.push_back(json{{"U", m.datum.h.elems}, {"gamma", std::move(gamma)},
                        {"matrix", m.matrix}});
  }
  return json{{"simples", std::move(simples_a)}, {"invariants", std::move(list)}};
}

}  // namespace zc

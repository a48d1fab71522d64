#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <thread>

#include "zcenter/centre.hpp"
#include "zcenter/cochain.hpp"
#include "zcenter/cohomology.hpp"
#include "zcenter/etale.hpp"
#include "zcenter/group.hpp"
#include "zcenter/invariants.hpp"
#include "zcenter/json_io.hpp"
#include "zcenter/render.hpp"

namespace {

using namespace zc;

struct RunConfig {
  std::string group_spec = "dihedral:3";
  std::string cocycle_spec = "trivial";
  std::string cocycle_file;
  std::string character_file;
  std::string format = "table";
  int jobs = 1;
  unsigned long long seed = 0;
  int max_order = 64;
  bool ascii = false;
  int degree = 3;

  RenderOptions render() const { return RenderOptions{!ascii}; }
};

GroupTable load_group(const RunConfig& cfg) {
  if (cfg.group_spec.size() > 5 && cfg.group_spec.substr(0, 5) == "file:") {
    std::ifstream in(cfg.group_spec.substr(5));
    if (!in) throw Error(ErrorKind::ParseError, "cannot open group file");
    nlohmann::json j;
    in >> j;
    return group_from_json(j);
  }
  return builtin_group(cfg.group_spec, cfg.max_order);
}

Cochain load_cocycle(const RunConfig& cfg, const GroupTable& g) {
  if (!cfg.cocycle_file.empty()) {
    std::ifstream in(cfg.cocycle_file);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open cocycle file");
    nlohmann::json j;
    in >> j;
    return cochain_from_json(j, g);
  }
  return builtin_cocycle(g, cfg.cocycle_spec);
}

std::vector<std::string> chi_labels(std::size_t n, bool unicode) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    labels.push_back((unicode ? "χ" : "chi") + std::to_string(i));
  return labels;
}

// Brute-force cocycle check, split across jobs; reports the first failing
// tuple (deterministic: the smallest failing index wins).
bool parallel_cocycle_check(const GroupTable& g, const Cochain& alpha, int jobs,
                            std::string& failure) {
  Cochain d = differential(g, alpha);
  std::size_t total = d.values.size();
  std::vector<std::size_t> first_bad(static_cast<std::size_t>(jobs), total);
  std::vector<std::thread> threads;
  for (int t = 0; t < jobs; ++t)
    threads.emplace_back([&, t]() {
      for (std::size_t ix = static_cast<std::size_t>(t); ix < total;
           ix += static_cast<std::size_t>(jobs))
        if (!d.values[ix].is_zero()) {
          first_bad[static_cast<std::size_t>(t)] = ix;
          return;
        }
    });
  for (auto& th : threads) th.join();
  std::size_t bad = total;
  for (std::size_t b : first_bad) bad = std::min(bad, b);
  if (bad == total) return true;
  int n = g.order();
  std::vector<int> args(4);
  std::size_t tmp = bad;
  for (int i = 3; i >= 0; --i) {
    args[static_cast<std::size_t>(i)] = static_cast<int>(tmp % n);
    tmp /= n;
  }
  failure = "(" + g.name(args[0]) + "," + g.name(args[1]) + "," + g.name(args[2]) + "," +
            g.name(args[3]) + ")";
  return false;
}

int cmd_check_cocycle(const RunConfig& cfg) {
  GroupTable g = load_group(cfg);
  Cochain alpha = load_cocycle(cfg, g);
  if (!alpha.is_normalized()) {
    std::cout << "FAIL: cochain is not normalized\n";
    return 1;
  }
  std::string failure;
  if (!parallel_cocycle_check(g, alpha, cfg.jobs, failure)) {
    std::cout << "FAIL: cocycle identity fails at " << failure << "\n";
    return 1;
  }
  std::cout << "cocycle: PASS\n";
  std::cout << "transgression identities: " << (check_pca_identities(g, alpha) ? "PASS" : "FAIL")
            << "\n";
  std::cout << "double-complex splitting: " << (hs_check(g, alpha) ? "PASS" : "FAIL") << "\n";
  return check_pca_identities(g, alpha) && hs_check(g, alpha) ? 0 : 1;
}

int cmd_cohomology(const RunConfig& cfg) {
  GroupTable g = load_group(cfg);
  CohomologyResult h = cohomology(g, cfg.degree);
  if (cfg.format == "json") {
    nlohmann::json j{{"degree", cfg.degree}, {"invariant_factors", h.invariant_factors}};
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "H^" << cfg.degree << " = ";
  if (h.invariant_factors.empty()) {
    std::cout << "trivial\n";
  } else {
    for (std::size_t i = 0; i < h.invariant_factors.size(); ++i)
      std::cout << (i ? " x " : "") << "Z/" << h.invariant_factors[i];
    std::cout << "\n";
  }
  return 0;
}

int cmd_char_table(const RunConfig& cfg, bool simples_only) {
  GroupTable g = load_group(cfg);
  Cochain alpha = load_cocycle(cfg, g);
  CentreContext ctx(g, alpha);
  if (simples_only) {
    if (cfg.format == "json") {
      nlohmann::json j = nlohmann::json::array();
      for (std::size_t i = 0; i < ctx.simples().size(); ++i) {
        const SimpleLabel& l = ctx.simples()[i];
        j.push_back({{"index", i},
                     {"class_rep", ctx.class_rep(l.class_index)},
                     {"class_rep_name", g.name(ctx.class_rep(l.class_index))},
                     {"char_index", l.char_index},
                     {"degree", ctx.simple_degree(static_cast<int>(i))},
                     {"total_dimension", ctx.simple_total_dimension(static_cast<int>(i))}});
      }
      std::cout << j.dump(2) << "\n";
      return 0;
    }
    std::cout << ctx.simples().size() << " simple objects\n";
    for (std::size_t i = 0; i < ctx.simples().size(); ++i) {
      const SimpleLabel& l = ctx.simples()[i];
      std::cout << (cfg.ascii ? "chi" : "χ") << i << ": class of "
                << g.name(ctx.class_rep(l.class_index)) << ", character #" << l.char_index
                << ", degree " << ctx.simple_degree(static_cast<int>(i)) << "\n";
    }
    return 0;
  }
  std::vector<const CentreCharacter*> rows;
  for (std::size_t i = 0; i < ctx.simples().size(); ++i)
    rows.push_back(&ctx.simple_character(static_cast<int>(i)));
  std::vector<std::string> labels = chi_labels(rows.size(), !cfg.ascii);
  if (cfg.format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (std::size_t i = 0; i < rows.size(); ++i)
      j.push_back(centre_character_to_json(ctx, *rows[i]));
    std::cout << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    std::cout << render_csv_table(ctx, labels, rows, cfg.render());
  } else {
    std::cout << render_centre_table(ctx, labels, rows, cfg.render());
  }
  return 0;
}

int cmd_lagrangians(const RunConfig& cfg) {
  GroupTable g = load_group(cfg);
  Cochain alpha = load_cocycle(cfg, g);
  CentreContext ctx(g, alpha);
  std::vector<LagrangianDatum> data = lagrangian_data(g, alpha);
  std::vector<CentreCharacter> chars;
  std::vector<std::string> labels;
  std::vector<std::string> decs;
  for (const LagrangianDatum& d : data) {
    CentreCharacter chi = lagrangian_character(ctx, d);
    std::vector<long long> m = decompose(ctx, chi);
    std::string label = "L({";
    for (std::size_t i = 0; i < d.h.elems.size(); ++i)
      label += (i ? "," : "") + g.name(d.h.elems[i]);
    label += "})";
    labels.push_back(label);
    decs.push_back(decomposition_string(m, !cfg.ascii));
    chars.push_back(std::move(chi));
  }
  if (cfg.format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (std::size_t i = 0; i < data.size(); ++i) {
      nlohmann::json e = etale_datum_to_json(g, lagrangian_as_etale(data[i]));
      e["character"] = centre_character_to_json(ctx, chars[i]);
      e["decomposition"] = decs[i];
      j.push_back(std::move(e));
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::vector<const CentreCharacter*> rows;
  for (const auto& c : chars) rows.push_back(&c);
  if (cfg.format == "csv")
    std::cout << render_csv_table(ctx, labels, rows, cfg.render());
  else
    std::cout << render_centre_table(ctx, labels, rows, cfg.render());
  for (std::size_t i = 0; i < labels.size(); ++i)
    std::cout << labels[i] << " = " << decs[i] << "\n";
  return 0;
}

int cmd_etale(const RunConfig& cfg) {
  GroupTable g = load_group(cfg);
  Cochain alpha = load_cocycle(cfg, g);
  std::vector<EtaleDatum> data = etale_enumerate(g, alpha);
  if (cfg.format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const EtaleDatum& d : data) j.push_back(etale_datum_to_json(g, d));
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << data.size() << " etale data (H, F, gamma, epsilon)\n";
  for (const EtaleDatum& d : data) {
    std::cout << "A(H={";
    for (std::size_t i = 0; i < d.h.elems.size(); ++i)
      std::cout << (i ? "," : "") << g.name(d.h.elems[i]);
    std::cout << "}, F={";
    for (std::size_t i = 0; i < d.f.elems.size(); ++i)
      std::cout << (i ? "," : "") << g.name(d.f.elems[i]);
    std::cout << "})";
    bool gnz = !d.gamma.is_zero();
    bool enz = false;
    for (const Phase& p : d.epsilon.values) enz |= !p.is_zero();
    if (gnz) std::cout << " gamma!=0";
    if (enz) std::cout << " epsilon!=0";
    std::cout << "\n";
  }
  return 0;
}

int cmd_modular_invariants(const RunConfig& cfg) {
  GroupTable g = load_group(cfg);
  Cochain alpha = load_cocycle(cfg, g);
  InvariantOptions opt;
  opt.max_group_order = std::min(cfg.max_order, 8);
  PhysicalInvariants inv = physical_invariants(g, alpha, opt);
  if (cfg.format == "json") {
    std::cout << invariants_to_json(inv).dump(2) << "\n";
    return 0;
  }
  if (cfg.format == "csv") {
    for (std::size_t k = 0; k < inv.invariants.size(); ++k) {
      const ModularInvariant& m = inv.invariants[k];
      std::cout << "# invariant " << k << " U={";
      for (std::size_t i = 0; i < m.datum.h.elems.size(); ++i)
        std::cout << (i ? "," : "") << inv.ctx_prod->group().name(m.datum.h.elems[i]);
      std::cout << "}\n";
      for (const auto& row : m.matrix) {
        for (std::size_t c = 0; c < row.size(); ++c) std::cout << (c ? "," : "") << row[c];
        std::cout << "\n";
      }
    }
    return 0;
  }
  std::cout << inv.invariants.size() << " physical modular invariants for Z("
            << cfg.group_spec << ", " << cfg.cocycle_spec << ")\n";
  for (std::size_t k = 0; k < inv.invariants.size(); ++k) {
    const ModularInvariant& m = inv.invariants[k];
    std::cout << "invariant " << k << ": U = {";
    for (std::size_t i = 0; i < m.datum.h.elems.size(); ++i)
      std::cout << (i ? "," : "") << inv.ctx_prod->group().name(m.datum.h.elems[i]);
    std::cout << "}" << (m.datum.gamma.is_zero() ? "" : ", gamma != 0") << "\n";
    for (const auto& row : m.matrix) {
      std::cout << "  ";
      for (long long v : row) std::cout << v << " ";
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_decompose(const RunConfig& cfg) {
  GroupTable g = load_group(cfg);
  Cochain alpha = load_cocycle(cfg, g);
  CentreContext ctx(g, alpha);
  if (cfg.character_file.empty())
    throw Error(ErrorKind::ParseError, "decompose needs --character-file");
  std::ifstream in(cfg.character_file);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open character file");
  nlohmann::json j;
  in >> j;
  CentreCharacter chi = centre_character_from_json(ctx, j);
  std::vector<long long> m = decompose(ctx, chi);
  if (cfg.format == "json") {
    std::cout << nlohmann::json{{"multiplicities", m}}.dump(2) << "\n";
  } else {
    std::cout << decomposition_string(m, !cfg.ascii) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact character tables, Lagrangian algebras and modular invariants of "
               "twisted Drinfeld centres Z(G, alpha)"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--group", cfg.group_spec,
                 "group spec (cyclic:n, dihedral:n, symmetric:n, quaternion8, "
                 "product:a,b, trivial, file:path.json)");
  app.add_option("--cocycle", cfg.cocycle_spec, "cocycle spec (trivial, theta3:k)");
  app.add_option("--cocycle-file", cfg.cocycle_file, "3-cocycle JSON file");
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_option("--jobs", cfg.jobs, "worker threads for brute-force scans")
      ->check(CLI::Range(1, 256));
  app.add_option("--seed", cfg.seed,
                 "seed for randomized checks (reserved; the shipped subcommands are "
                 "deterministic)");
  app.add_option("--max-order", cfg.max_order, "size bound override");
  app.add_flag("--ascii", cfg.ascii, "ASCII output (no unicode symbols)");

  auto* c_check = app.add_subcommand("check-cocycle", "validate a 3-cocycle and its transgressions");
  auto* c_cohom = app.add_subcommand("cohomology", "H^n(G, Q/Z)");
  c_cohom->add_option("--degree", cfg.degree, "cohomology degree (1..3)")
      ->check(CLI::Range(1, 3));
  auto* c_simples = app.add_subcommand("simples", "list simple objects of Z(G, alpha)");
  auto* c_table = app.add_subcommand("char-table", "simple character table of Z(G, alpha)");
  auto* c_lagr = app.add_subcommand("lagrangians", "Lagrangian algebras, characters, decompositions");
  auto* c_etale = app.add_subcommand("etale", "enumerate etale algebra data A(H,F,gamma,epsilon)");
  auto* c_minv = app.add_subcommand("modular-invariants", "physical modular invariant matrices");
  auto* c_dec = app.add_subcommand("decompose", "decompose a character JSON over the simples");
  c_dec->add_option("--character-file", cfg.character_file, "character JSON file");

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);
  try {
    if (app.got_subcommand(c_check)) return cmd_check_cocycle(cfg);
    if (app.got_subcommand(c_cohom)) return cmd_cohomology(cfg);
    if (app.got_subcommand(c_simples)) return cmd_char_table(cfg, true);
    if (app.got_subcommand(c_table)) return cmd_char_table(cfg, false);
    if (app.got_subcommand(c_lagr)) return cmd_lagrangians(cfg);
    if (app.got_subcommand(c_etale)) return cmd_etale(cfg);
    if (app.got_subcommand(c_minv)) return cmd_modular_invariants(cfg);
    if (app.got_subcommand(c_dec)) return cmd_decompose(cfg);
  } catch (const zc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case zc::ErrorKind::ParseError:
      case zc::ErrorKind::MismatchedContext:
        return 2;
      case zc::ErrorKind::SizeLimitExceeded:
        return 3;
      default:
        return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

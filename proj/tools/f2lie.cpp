// f2lie: command-line front end for the GF(2) Lie algebra toolkit.
#include <algorithm>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "f2lie/catalog.hpp"
#include "f2lie/grading.hpp"
#include "f2lie/subalgebra.hpp"
#include "f2lie/superalgebra.hpp"
#include "json.hpp"

namespace {

using namespace f2lie;
using nlohmann::ordered_json;

enum Exit { kOk = 0, kError = 1, kVerifyFailed = 2, kBudget = 3 };

struct Config {
  std::string command;
  std::string input;
  std::uint64_t budget_nodes = 100'000'000;
  double budget_seconds = 0;
  std::string format = "tsv";
  std::size_t max_dim = 64;
  std::string catalog_dir;
  std::string group_file;
  bool no_aut = false;
  bool orbit_diagram = false;
};

struct Input {
  std::string name;
  LieAlgebra algebra;
};

void progress(const std::string& msg) { std::cerr << "[f2lie] " << msg << "\n"; }

Catalog open_catalog(const Config& cfg) {
  const std::filesystem::path dir = cfg.catalog_dir.empty() ? default_catalog_dir() : std::filesystem::path(cfg.catalog_dir);
  if (std::filesystem::exists(dir / "index.json")) return Catalog::load(dir);
  if (!cfg.catalog_dir.empty()) throw CatalogError(dir.string() + ": no index.json");
  return Catalog::builtins();
}

Input resolve(const Config& cfg, const Catalog& cat) {
  if (const auto* e = cat.find(cfg.input)) return {e->id, e->algebra};
  if (std::filesystem::exists(cfg.input)) {
    auto l = load_algebra(cfg.input, cfg.command != "verify");
    return {l.label().empty() ? cfg.input : l.label(), l};
  }
  throw std::invalid_argument("unknown catalog id or file '" + cfg.input + "'");
}

Budget budget(const Config& cfg) { return {cfg.budget_nodes, cfg.budget_seconds}; }

// Aut(L), or a user-supplied subgroup; nullopt when the search ran out of budget.
std::optional<MatGroup> group_for(const Config& cfg, const LieAlgebra& l, std::string& note) {
  if (!cfg.group_file.empty()) {
    MatGroup g(l.dim(), load_generators(cfg.group_file, l));
    note = "user-supplied";
    return g;
  }
  try {
    auto g = automorphism_group(l, budget(cfg));
    note = "automorphism group";
    return g;
  } catch (const BudgetExceeded& e) {
    note = e.what();
    return std::nullopt;
  }
}

std::string join(const std::vector<std::size_t>& v, const char* sep = ", ") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

void emit(const Config& cfg, const ordered_json& doc, const std::vector<std::pair<std::string, std::string>>& rows) {
  if (cfg.format == "json") {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  for (const auto& [k, v] : rows) std::cout << k << "\t" << v << "\n";
}

int cmd_verify(const Config& cfg, const Input& in) {
  const auto& l = in.algebra;
  const auto rep = validate_axioms(l);
  const bool simple = rep.ok && is_simple(l);
  const auto z = rep.ok ? center(l).dim() : 0;
  ordered_json doc{{"algebra", in.name}, {"dim", l.dim()}, {"axioms", rep.ok},
                   {"violations", rep.violations}, {"center_dim", z}, {"simple", simple}};
  std::vector<std::pair<std::string, std::string>> rows{
      {"algebra", in.name}, {"dim", std::to_string(l.dim())}, {"axioms", rep.ok ? "ok" : "FAILED"},
      {"center_dim", std::to_string(z)}, {"simple", simple ? "yes" : "no"}};
  for (const auto& v : rep.violations) rows.emplace_back("violation", v);
  emit(cfg, doc, rows);
  return rep.ok && simple ? kOk : kVerifyFailed;
}

struct GradingData {
  std::vector<Idempotent> idempotents;
  std::size_t noncentral = 0;
  std::optional<MatGroup> group;
  std::string group_note;
  std::vector<IdempotentOrbit> orbits;  // empty without a group
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> signatures;  // per idempotent
};

GradingData grading_data(const Config& cfg, const LieAlgebra& l) {
  GradingData g;
  g.idempotents = find_idempotents(l);
  for (const auto& id : g.idempotents) {
    if (id.central) continue;
    ++g.noncentral;
    const auto gr = grading_from_idempotent(l, id.element);
    ++g.signatures[{gr.l0.dim(), gr.l1.dim()}];
  }
  if (!cfg.no_aut) {
    g.group = group_for(cfg, l, g.group_note);
    if (g.group) g.orbits = idempotent_orbits(l, *g.group, g.idempotents);
  } else {
    g.group_note = "skipped";
  }
  return g;
}

int cmd_idempotents(const Config& cfg, const Input& in) {
  const auto& l = in.algebra;
  const auto g = grading_data(cfg, l);
  ordered_json sig = ordered_json::array();
  std::string sig_text;
  for (const auto& [k, c] : g.signatures) {
    sig.push_back({{"d0", k.first}, {"d1", k.second}, {"idempotents", c}});
    sig_text += (sig_text.empty() ? "" : ", ") + ("[" + std::to_string(k.first) + "," +
                                                  std::to_string(k.second) + "] x " + std::to_string(c));
  }
  ordered_json doc{{"algebra", in.name}, {"dim", l.dim()}, {"idempotents", g.idempotents.size()},
                   {"noncentral", g.noncentral}, {"signatures", sig}, {"group", g.group_note}};
  std::vector<std::pair<std::string, std::string>> rows{
      {"algebra", in.name}, {"dim", std::to_string(l.dim())},
      {"idempotents", std::to_string(g.idempotents.size())},
      {"noncentral", std::to_string(g.noncentral)}, {"signatures", sig_text}};
  if (g.group) {
    const auto summary = summarize(g.orbits);
    ordered_json orb = ordered_json::array();
    for (const auto& s : summary) orb.push_back({{"orbits", s.count}, {"d0", s.d0}, {"d1", s.d1}});
    doc["group_order"] = g.group->order();
    doc["gradings"] = orb;
    rows.emplace_back("group_order", std::to_string(g.group->order()));
    rows.emplace_back("gradings", format_summary(summary));
  } else {
    doc["partial"] = !cfg.no_aut;
    rows.emplace_back("gradings", cfg.no_aut ? "not computed" : "partial: " + g.group_note);
  }
  emit(cfg, doc, rows);
  return g.group || cfg.no_aut ? kOk : kBudget;
}

int cmd_superize(const Config& cfg, const Input& in) {
  const auto& l = in.algebra;
  const auto g = grading_data(cfg, l);
  std::vector<Vec> reps;
  if (g.group) {
    for (const auto& o : g.orbits) reps.push_back(o.representative);
  } else {
    for (const auto& id : g.idempotents)
      if (!id.central) reps.push_back(id.element);
  }
  std::vector<std::size_t> dims;
  bool axioms = true, simple = true;
  ordered_json items = ordered_json::array();
  for (Vec x : reps) {
    const auto gr = grading_from_idempotent(l, x);
    const auto s = superize(l, gr);
    const bool ok = check_super_axioms(s).ok;
    const bool ss = is_simple_super(s);
    axioms = axioms && ok;
    simple = simple && ss;
    dims.push_back(s.dim());
    items.push_back({{"idempotent", format_vec(x, l.dim())}, {"d0", gr.l0.dim()}, {"d1", gr.l1.dim()},
                     {"dim", s.dim()}, {"axioms", ok}, {"super_simple", ss}});
  }
  std::sort(dims.begin(), dims.end());
  std::vector<std::size_t> distinct = dims;
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  const bool per_orbit = g.group.has_value();
  ordered_json doc{{"algebra", in.name}, {"dim", l.dim()}, {"per_orbit", per_orbit},
                   {"superization_dims", dims}, {"axioms", axioms}, {"super_simple", simple},
                   {"superizations", items}};
  std::vector<std::pair<std::string, std::string>> rows{{"algebra", in.name}, {"dim", std::to_string(l.dim())}};
  if (per_orbit) {
    rows.emplace_back("gradings", format_summary(summarize(g.orbits)));
    rows.emplace_back("superizations", join(dims));
  } else {
    rows.emplace_back("superization_dim_set", join(distinct));
    if (!cfg.no_aut) rows.emplace_back("partial", g.group_note);
  }
  rows.emplace_back("axioms", axioms ? "ok" : "FAILED");
  rows.emplace_back("super_simple", simple ? "yes" : "no");
  emit(cfg, doc, rows);
  if (!axioms) return kVerifyFailed;
  return per_orbit || cfg.no_aut ? kOk : kBudget;
}

int cmd_aut(const Config& cfg, const Input& in) {
  const auto& l = in.algebra;
  std::string note;
  const auto a = group_for(cfg, l, note);
  if (!a) {
    emit(cfg, {{"algebra", in.name}, {"partial", true}, {"reason", note}}, {{"algebra", in.name}, {"partial", note}});
    return kBudget;
  }
  ordered_json gens = ordered_json::array();
  std::vector<std::pair<std::string, std::string>> rows{{"algebra", in.name}, {"order", std::to_string(a->order())},
                                                        {"generators", std::to_string(a->generators().size())}};
  for (std::size_t i = 0; i < a->generators().size(); ++i) {
    const auto m = BitMatrix::from_columns(a->generators()[i], l.dim()).transpose();
    ordered_json rws = ordered_json::array();
    for (std::size_t r = 0; r < l.dim(); ++r) {
      std::string s;
      for (std::size_t c = 0; c < l.dim(); ++c) s += m.get(r, c) ? '1' : '0';
      rws.push_back(s);
      rows.emplace_back("g" + std::to_string(i), s);
    }
    gens.push_back(rws);
  }
  emit(cfg, {{"algebra", in.name}, {"order", a->order()}, {"dim", l.dim()}, {"generators", gens}}, rows);
  return kOk;
}

SubalgebraOptions lattice_options(const Config& cfg) {
  SubalgebraOptions opt;
  opt.max_dim = cfg.max_dim;
  opt.max_seconds = cfg.budget_seconds;
  opt.progress = progress;
  return opt;
}

int cmd_subalgebras(const Config& cfg, const Input& in) {
  const auto& l = in.algebra;
  std::string note;
  const auto a = group_for(cfg, l, note);
  if (!a) {
    emit(cfg, {{"algebra", in.name}, {"partial", true}, {"reason", note}}, {{"algebra", in.name}, {"partial", note}});
    return kBudget;
  }
  const auto lat = all_subalgebras(l, *a, lattice_options(cfg));
  const auto all = lat.orbit_counts();
  const auto max = lat.maximal_counts();
  const std::size_t n = l.dim();
  std::vector<std::size_t> dims, all_row, max_row;
  for (std::size_t d = 1; d < n; ++d) {
    dims.push_back(d);
    all_row.push_back(all[d]);
    max_row.push_back(max[d]);
  }
  ordered_json doc{{"algebra", in.name}, {"dim", n}, {"group_order", a->order()},
                   {"complete", lat.complete}, {"dims", dims}, {"all", all_row}, {"max", max_row},
                   {"subalgebras", lat.member_of.size()}};
  if (!lat.complete) doc["truncation"] = lat.truncation;
  if (cfg.format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "dim\t" << join(dims, "\t") << "\nall\t" << join(all_row, "\t") << "\nmax\t"
              << join(max_row, "\t") << "\n";
    if (!lat.complete) std::cout << "partial\t" << lat.truncation << "\n";
  }
  return lat.complete ? kOk : kBudget;
}

int cmd_hasse(const Config& cfg, const Input& in) {
  const auto& l = in.algebra;
  std::string note;
  const auto a = group_for(cfg, l, note);
  if (!a) {
    std::cerr << "f2lie: " << note << "\n";
    return kBudget;
  }
  const auto lat = all_subalgebras(l, *a, lattice_options(cfg));
  if (!lat.complete) {
    std::cerr << "f2lie: lattice incomplete: " << lat.truncation << "\n";
    return kBudget;
  }
  if (cfg.orbit_diagram || lat.member_of.size() > 5000)
    std::cout << hasse_dot(lat, hasse_edges(lat));
  else
    std::cout << hasse_dot(lat, expanded_hasse(lat));
  return kOk;
}

int cmd_subquotients(const Config& cfg, const Input& in, const Catalog& cat) {
  const auto& l = in.algebra;
  std::string note;
  const auto a = group_for(cfg, l, note);
  if (!a) {
    emit(cfg, {{"algebra", in.name}, {"partial", true}, {"reason", note}}, {{"algebra", in.name}, {"partial", note}});
    return kBudget;
  }
  const auto lat = all_subalgebras(l, *a, lattice_options(cfg));
  if (!lat.complete) {
    emit(cfg, {{"algebra", in.name}, {"partial", true}, {"reason", lat.truncation}},
         {{"algebra", in.name}, {"partial", lat.truncation}});
    return kBudget;
  }
  std::string warnings;
  const Identifier id = [&](const LieAlgebra& s) {
    auto r = cat.identify(s, budget(cfg));
    if (!r.warning.empty()) warnings += r.warning + "; ";
    return r.id;
  };
  const auto rep = simple_subquotients(l, lat, id);
  std::vector<std::string> ids(rep.ids.begin(), rep.ids.end());
  std::sort(ids.begin(), ids.end(), [](const std::string& x, const std::string& y) {
    return std::make_pair(id_dimension(x), x) < std::make_pair(id_dimension(y), y);
  });
  std::vector<std::size_t> unknown;
  for (const auto& u : rep.unidentified) unknown.push_back(u.dim());
  std::string shown;
  for (const auto& i : ids) shown += (shown.empty() ? "" : ", ") + i;
  ordered_json doc{{"algebra", in.name}, {"subquotients", ids}, {"unidentified_dims", unknown},
                   {"sections", rep.sections}};
  std::vector<std::pair<std::string, std::string>> rows{{"algebra", in.name}, {"subquotients", shown}};
  if (!unknown.empty()) rows.emplace_back("unidentified_dims", join(unknown));
  if (!warnings.empty()) {
    doc["warnings"] = warnings;
    rows.emplace_back("warning", warnings);
  }
  emit(cfg, doc, rows);
  return kOk;
}

int cmd_oracle(const Config& cfg, const Input& in) {
  const auto& l = in.algebra;
  if (l.dim() > 8) throw std::invalid_argument("oracle: dimension above 8");
  std::string note;
  const auto a = group_for(cfg, l, note);
  if (!a) {
    std::cerr << "f2lie: " << note << "\n";
    return kBudget;
  }
  const auto brute = brute_force_subalgebras(l, 256);
  const auto lat = all_subalgebras(l, *a, lattice_options(cfg));
  const auto weighted = lat.weighted_counts();
  std::uint64_t total = 0;
  bool match = lat.complete;
  std::vector<std::size_t> bc;
  for (std::size_t d = 0; d < brute.size(); ++d) {
    total += brute[d].size();
    bc.push_back(brute[d].size());
    if (weighted[d] != brute[d].size()) match = false;
  }
  std::vector<std::size_t> wc(weighted.begin(), weighted.end());
  ordered_json doc{{"algebra", in.name}, {"match", match}, {"total", total}, {"brute_force", bc},
                   {"orbit_weighted", wc}};
  if (cfg.format == "json")
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << (match ? "match: " : "MISMATCH: ") << total << " subalgebras\n"
              << "brute_force\t" << join(bc, "\t") << "\norbit_weighted\t" << join(wc, "\t") << "\n";
  return match ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lie algebras over GF(2): idempotents, superizations, subalgebra lattices"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--budget-nodes", cfg.budget_nodes, "automorphism search node budget")
      ->check(CLI::PositiveNumber);
  app.add_option("--budget-seconds", cfg.budget_seconds, "wall-clock budget, 0 for none")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "tsv", "dot"}));
  app.add_option("--max-dim", cfg.max_dim, "largest subalgebra dimension to construct")
      ->check(CLI::PositiveNumber);
  app.add_option("--catalog-dir", cfg.catalog_dir, "catalog directory with index.json");
  app.add_option("--group-file", cfg.group_file, "automorphism generators to use instead of Aut(L)");
  app.add_flag("--no-aut", cfg.no_aut, "skip the automorphism group (signatures only)");
  app.add_flag("--orbits", cfg.orbit_diagram, "hasse: draw orbit representatives only");

  const std::vector<std::pair<const char*, const char*>> commands = {
      {"verify", "check the Lie axioms and simplicity"},
      {"idempotents", "idempotents and their grading signatures"},
      {"superize", "superization dimensions of the idempotent gradings"},
      {"aut", "automorphism group order and generators"},
      {"subalgebras", "orbit counts of all and of maximal subalgebras"},
      {"hasse", "Hasse diagram of the subalgebra lattice (DOT)"},
      {"subquotients", "simple subquotients identified against the catalog"},
      {"oracle", "brute-force cross-check of the subalgebra census"},
      {"list", "list the catalog"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help)->fallthrough();
    if (std::string(name) != "list") sub->add_option("input", cfg.input, "catalog id or structure-constant file")->required();
    sub->callback([&cfg, n = std::string(name)] { cfg.command = n; });
  }
  CLI11_PARSE(app, argc, argv);

  try {
    const auto cat = open_catalog(cfg);
    if (cfg.command == "list") {
      ordered_json doc = ordered_json::array();
      std::vector<std::pair<std::string, std::string>> rows;
      for (const auto& e : cat.entries()) {
        std::string names;
        for (const auto& nm : e.names) names += (names.empty() ? "" : ", ") + nm;
        doc.push_back({{"id", e.id}, {"dim", e.algebra.dim()}, {"names", e.names},
                       {"provenance", to_string(e.provenance)}});
        rows.emplace_back(e.id, std::to_string(e.algebra.dim()) + "\t" + to_string(e.provenance) + "\t" + names);
      }
      emit(cfg, doc, rows);
      return kOk;
    }
    const auto in = resolve(cfg, cat);
    if (cfg.command == "verify") return cmd_verify(cfg, in);
    if (cfg.command == "idempotents") return cmd_idempotents(cfg, in);
    if (cfg.command == "superize") return cmd_superize(cfg, in);
    if (cfg.command == "aut") return cmd_aut(cfg, in);
    if (cfg.command == "subalgebras") return cmd_subalgebras(cfg, in);
    if (cfg.command == "hasse") return cmd_hasse(cfg, in);
    if (cfg.command == "subquotients") return cmd_subquotients(cfg, in, cat);
    if (cfg.command == "oracle") return cmd_oracle(cfg, in);
  } catch (const BudgetExceeded& e) {
    std::cerr << "f2lie: budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "f2lie: " << e.what() << "\n";
    return kError;
  }
  return kError;
}

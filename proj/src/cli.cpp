#include "ea/cli.hpp"

#include <filesystem>
#include <future>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ea/enumerate.hpp"
#include "ea/fixtures.hpp"
#include "ea/io.hpp"
#include "ea/semantics.hpp"
#include "ea/transforms.hpp"

namespace ea::cli {

namespace {

int report_status(const Report& r, std::ostream& out) {
  out << format_report(r);
  return r.ok() ? 0 : 1;
}

int cmd_validate(const std::string& path, std::ostream& out) {
  const EffectAlgebra e = load_effect_algebra(path);
  const Report axioms = validate_effect_axioms(e);
  out << format_report(axioms);
  if (!axioms.ok()) return 1;
  const Report laws = check_basic_laws(e);
  out << format_report(laws);
  return laws.ok() ? 0 : 1;
}

int cmd_order(const std::string& path, const std::string& out_path, std::ostream& out) {
  const EffectAlgebra e = load_effect_algebra(path);
  const OrderStructure ord = induced_order(e);
  out << "order on " << e.size << " elements; lattice: " << (ord.is_lattice ? "yes" : "no")
      << "\n";
  for (int x = 0; x < e.size; ++x) {
    out << e.label(x) << " <= ";
    bool first = true;
    for (int y = 0; y < e.size; ++y)
      if (ord.leq[x][y]) {
        if (!first) out << ",";
        out << e.label(y);
        first = false;
      }
    out << "\n";
  }
  if (ord.is_lattice) {
    out << "join/meet tables present\n";
  }
  if (!out_path.empty()) write_file(out_path, order_to_json(ord));
  return 0;
}

int cmd_transform(const std::string& to, const std::string& path, const std::string& out_path,
                  std::ostream& out) {
  if (to == "implication") {
    const EffectAlgebra e = load_effect_algebra(path);
    const ImplicationTable t = effect_to_implication(e);
    const bool lattice = t.kind == ImpKind::NaturalLattice;
    out << "kind: " << to_string(t.kind) << "\n";
    const Report r = validate_implication_axioms(
        t, lattice ? ImplicationAxiomMode::LEIA : ImplicationAxiomMode::EIA);
    out << format_report(r);
    if (!out_path.empty()) save_implication_table(t, out_path);
    return r.ok() ? 0 : 1;
  }
  const ImplicationTable t = load_implication_table(path);
  const EffectAlgebra e = implication_to_effect(to_algebra(t));  // throws on failure
  const Report r = validate_effect_axioms(e);
  out << format_report(r);
  if (!out_path.empty()) save_effect_algebra(e, out_path);
  return r.ok() ? 0 : 1;
}

int cmd_roundtrip(const std::string& path, std::ostream& out) {
  bool imp_file = path.size() >= 9 && path.compare(path.size() - 9, 9, ".imp.json") == 0;
  if (imp_file) return report_status(round_trip_check(load_implication_table(path)), out);
  return report_status(round_trip_check(load_effect_algebra(path)), out);
}

int cmd_imp(const std::string& kind, const std::string& path, bool compare,
            const std::string& out_path, std::ostream& out) {
  const EffectAlgebra e = load_effect_algebra(path);
  ImplicationTable t;
  if (kind == "natural")
    t = natural_implication_table(e);
  else if (kind == "sasaki")
    t = sasaki_implication_table(e);
  else
    t = set_implication_table(e);
  out << "kind: " << to_string(t.kind) << "\n";
  for (int x = 0; x < t.size; ++x) {
    for (int y = 0; y < t.size; ++y) {
      if (y) out << " ";
      out << t.set_label(t.at(x, y));
    }
    out << "\n";
  }
  if (compare) {
    const ImplicationTable natural = natural_implication_table(e);
    const ImplicationTable sasaki = sasaki_implication_table(e);
    const ImplicationTable set_valued = set_implication_table(e);
    int diff_ns = 0, diff_nv = 0;
    for (int x = 0; x < e.size; ++x)
      for (int y = 0; y < e.size; ++y) {
        if (natural.at(x, y) != sasaki.at(x, y)) {
          ++diff_ns;
          out << "natural/sasaki differ at (" << e.label(x) << "," << e.label(y)
              << "): " << natural.set_label(natural.at(x, y)) << " vs "
              << sasaki.set_label(sasaki.at(x, y)) << "\n";
        }
        if (natural.at(x, y) != set_valued.at(x, y)) {
          ++diff_nv;
          out << "natural/set differ at (" << e.label(x) << "," << e.label(y) << ")\n";
        }
      }
    out << "natural vs sasaki: " << diff_ns << " differing cells\n";
    out << "natural vs set: " << diff_nv << " differing cells\n";
  }
  if (!out_path.empty()) save_implication_table(t, out_path);
  return 0;
}

struct ModelCheck {
  std::string path;
  bool ok = true;
  std::string detail;
};

int cmd_check(const std::string& suite_name, const std::string& identity_line,
              const std::string& quasi_line, const std::vector<std::string>& models, int jobs,
              std::ostream& out) {
  std::vector<QuasiIdentity> items;
  std::vector<std::string> labels;
  if (!suite_name.empty()) {
    const Suite& suite = builtin_suite(suite_id_from_string(suite_name));
    for (const auto& entry : suite.entries)
      for (const auto& item : entry.items) {
        items.push_back(item);
        labels.push_back(suite.name + " " + entry.label);
      }
  } else if (!identity_line.empty()) {
    items.push_back(QuasiIdentity{{}, parse_identity(identity_line)});
    labels.push_back("identity");
  } else {
    items.push_back(parse_quasi_identity(quasi_line));
    labels.push_back("quasi-identity");
  }

  auto check_one = [&](const std::string& path) {
    ModelCheck result;
    result.path = path;
    const ImplicationTable t = load_model_as_table(path);
    std::ostringstream detail;
    for (std::size_t i = 0; i < items.size(); ++i) {
      const CheckOutcome c = check_quasiidentity(t, items[i]);
      if (c.holds) {
        detail << "  " << labels[i] << "  " << to_string(items[i]) << ": holds\n";
      } else {
        result.ok = false;
        detail << "  " << labels[i] << "  " << to_string(items[i])
               << ": countermodel at " << to_string(c.counter->assignment, t) << "\n";
      }
    }
    result.detail = detail.str();
    return result;
  };

  std::vector<ModelCheck> results(models.size());
  if (jobs > 1 && models.size() > 1) {
    std::vector<std::future<ModelCheck>> futures;
    for (const auto& m : models)
      futures.push_back(std::async(std::launch::async, check_one, m));
    for (std::size_t i = 0; i < futures.size(); ++i) results[i] = futures[i].get();
  } else {
    for (std::size_t i = 0; i < models.size(); ++i) results[i] = check_one(models[i]);
  }

  bool all_ok = true;
  for (const auto& r : results) {
    out << r.path << ": " << (r.ok ? "all hold" : "FAIL") << "\n" << r.detail;
    all_ok = all_ok && r.ok;
  }
  return all_ok ? 0 : 1;
}

int cmd_consequence(const std::string& sigma_path, const std::string& goal_line,
                    const std::string& models_dir, std::ostream& out) {
  std::vector<Identity> sigma;
  for (const auto& q : load_identity_file(sigma_path)) {
    if (!q.premises.empty())
      throw MalformedTable("sigma file must contain plain identities");
    sigma.push_back(q.conclusion);
  }
  const Identity goal = parse_identity(goal_line);
  std::vector<ImplicationTable> k;
  std::vector<std::string> names;
  for (const auto& path : list_model_files(models_dir)) {
    k.push_back(load_model_as_table(path));
    names.push_back(path);
  }
  if (k.empty()) throw MalformedTable("no model files in '" + models_dir + "'");
  const CheckOutcome c = semantic_consequence(k, sigma, goal);
  if (c.holds) {
    out << "holds in all " << k.size() << " models\n";
    return 0;
  }
  out << "countermodel: " << names[c.counter->model] << " under "
      << to_string(c.counter->assignment, k[c.counter->model]) << "\n";
  return 1;
}

int cmd_check_proof(const std::string& path, const std::string& audit_dir, std::ostream& out) {
  const Derivation d = load_derivation(path);
  const DerivationCheck check = check_derivation(d, &fixture_corpus());
  if (!check.verified) {
    out << "INVALID at line " << check.line << ": " << check.reason << "\n";
    return 1;
  }
  out << "verified (" << d.lines.size() << " lines)\n";
  if (!audit_dir.empty()) {
    std::vector<ImplicationTable> models;
    for (const auto& m : list_model_files(audit_dir)) models.push_back(load_model_as_table(m));
    if (models.empty()) throw MalformedTable("no model files in '" + audit_dir + "'");
    const Report audit = soundness_audit(d, models);
    out << format_report(audit);
    if (!audit.ok()) return 1;
  }
  return 0;
}

int cmd_prove(const std::string& system, const std::string& goal,
              const std::vector<std::string>& hyps, int max_lines, int max_depth,
              std::ostream& out) {
  std::vector<TermPtr> hypotheses;
  for (const auto& h : hyps) hypotheses.push_back(parse_term(h));
  SearchLimits limits;
  limits.max_lines = max_lines;
  limits.max_depth = max_depth;
  auto found = search_proof(system_from_string(system), hypotheses, parse_term(goal), limits);
  if (!found) {
    out << "not found within " << max_lines << " lines / depth " << max_depth << "\n";
    return 1;
  }
  out << format_derivation(*found);
  return 0;
}

int cmd_enumerate(int max_size, const std::string& out_dir, int jobs, int cap,
                  std::ostream& out) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  for (int n = 2; n <= max_size; ++n) {
    const auto algebras = enumerate_effect_algebras(n, cap, jobs);
    out << "size " << n << ": " << algebras.size() << " algebras\n";
    for (const auto& e : algebras) {
      const std::string name = "ea" + std::to_string(n) + "_" + canonical_hash(e) + ".ea.json";
      save_effect_algebra(e, (fs::path(out_dir) / name).string());
    }
  }
  return 0;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite-model workbench for the logic of effect algebras"};
  app.require_subcommand(1);

  std::string model_path, out_path;

  auto* validate = app.add_subcommand("validate", "axiom validation and derived-law report");
  validate->add_option("model", model_path, "model file (.ea.json)")->required();

  auto* order = app.add_subcommand("order", "induced order, lattice status, join/meet");
  order->add_option("model", model_path)->required();
  order->add_option("--out", out_path, "write the order as JSON");

  std::string transform_to;
  auto* transform = app.add_subcommand("transform", "implication reduct / algebra reconstruction");
  transform->add_option("--to", transform_to)->required()
      ->check(CLI::IsMember({"implication", "effect"}));
  transform->add_option("file", model_path)->required();
  transform->add_option("--out", out_path);

  auto* roundtrip = app.add_subcommand("roundtrip", "transform there and back, compare tables");
  roundtrip->add_option("file", model_path)->required();

  std::string imp_kind;
  bool imp_compare = false;
  auto* imp = app.add_subcommand("imp", "build an implication table");
  imp->add_option("--kind", imp_kind)->required()
      ->check(CLI::IsMember({"natural", "sasaki", "set"}));
  imp->add_option("model", model_path)->required();
  imp->add_flag("--compare", imp_compare, "diff natural vs sasaki and natural vs set");
  imp->add_option("--out", out_path);

  std::string suite_name, identity_line, quasi_line;
  std::vector<std::string> check_models;
  int jobs = 1;
  auto* check = app.add_subcommand("check", "run a builtin suite or an ad hoc (quasi-)identity");
  check->add_option("--suite", suite_name)
      ->check(CLI::IsMember({"th10", "sec6", "th4", "def31", "def52"}));
  check->add_option("--identity", identity_line);
  check->add_option("--quasi", quasi_line);
  check->add_option("--model", check_models, "model files")->required()->expected(-1);
  check->add_option("--jobs", jobs);

  std::string sigma_path, goal_line, models_dir;
  auto* consequence = app.add_subcommand("consequence", "semantic consequence over a model class");
  consequence->add_option("--sigma", sigma_path, "identity file")->required();
  consequence->add_option("--goal", goal_line)->required();
  consequence->add_option("--models", models_dir, "directory of models")->required();

  std::string audit_dir;
  auto* check_proof = app.add_subcommand("check-proof", "verify a derivation file");
  check_proof->add_option("derivation", model_path)->required();
  check_proof->add_option("--audit-models", audit_dir, "audit soundness against these models");

  std::string system = "A", prove_goal;
  std::vector<std::string> prove_hyps;
  int max_lines = 30, max_depth = 8;
  auto* prove = app.add_subcommand("prove", "bounded proof search");
  prove->add_option("--system", system)->check(CLI::IsMember({"A", "B"}));
  prove->add_option("--goal", prove_goal)->required();
  prove->add_option("--hyp", prove_hyps);
  prove->add_option("--max-lines", max_lines);
  prove->add_option("--max-depth", max_depth);

  int max_size = 6, cap = 6;
  auto* enumerate = app.add_subcommand("enumerate", "write all algebras up to a size");
  enumerate->add_option("--max-size", max_size)->required();
  enumerate->add_option("--out", out_path)->required();
  enumerate->add_option("--jobs", jobs);
  enumerate->add_option("--cap", cap, "search-size cap (default 6)");

  auto* census_cmd = app.add_subcommand("census", "per-size counts and implication statistics");
  census_cmd->add_option("--max-size", max_size)->required();
  census_cmd->add_option("--jobs", jobs);

  std::vector<const char*> argv;
  argv.push_back("eakit");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*validate) return cmd_validate(model_path, out);
    if (*order) return cmd_order(model_path, out_path, out);
    if (*transform) return cmd_transform(transform_to, model_path, out_path, out);
    if (*roundtrip) return cmd_roundtrip(model_path, out);
    if (*imp) return cmd_imp(imp_kind, model_path, imp_compare, out_path, out);
    if (*check) {
      const int given = (!suite_name.empty()) + (!identity_line.empty()) + (!quasi_line.empty());
      if (given != 1) {
        err << "usage error: exactly one of --suite, --identity, --quasi\n";
        return 2;
      }
      return cmd_check(suite_name, identity_line, quasi_line, check_models, jobs, out);
    }
    if (*consequence) return cmd_consequence(sigma_path, goal_line, models_dir, out);
    if (*check_proof) return cmd_check_proof(model_path, audit_dir, out);
    if (*prove) return cmd_prove(system, prove_goal, prove_hyps, max_lines, max_depth, out);
    if (*enumerate) return cmd_enumerate(max_size, out_path, jobs, cap, out);
    if (*census_cmd) {
      out << format_census(census(max_size, jobs));
      return 0;
    }
  } catch (const NotAnImplicationAlgebra& e) {
    out << "violation: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "usage error: no subcommand\n";
  return 2;
}

}  // namespace ea::cli

#include "ea/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ea/transforms.hpp"

namespace ea {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw MalformedTable("not valid JSON");
  return j;
}

int get_int(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw MalformedTable(std::string("missing integer field '") + key + "'");
  return j[key].get<int>();
}

std::vector<std::string> get_names(const json& j) {
  std::vector<std::string> names;
  if (j.contains("names")) {
    if (!j["names"].is_array()) throw MalformedTable("'names' must be an array");
    for (const auto& v : j["names"]) {
      if (!v.is_string()) throw MalformedTable("'names' entries must be strings");
      names.push_back(v.get<std::string>());
    }
  }
  return names;
}

}  // namespace

EffectAlgebra effect_algebra_from_json(const std::string& text) {
  json j = parse_json(text);
  EffectAlgebra e;
  e.size = get_int(j, "size");
  e.zero = get_int(j, "zero");
  e.one = get_int(j, "one");
  e.names = get_names(j);
  if (!j.contains("comp") || !j["comp"].is_array()) throw MalformedTable("missing 'comp' array");
  for (const auto& v : j["comp"]) {
    if (!v.is_number_integer()) throw MalformedTable("'comp' entries must be indices");
    e.comp.push_back(v.get<int>());
  }
  if (!j.contains("plus") || !j["plus"].is_array()) throw MalformedTable("missing 'plus' array");
  for (const auto& row : j["plus"]) {
    if (!row.is_array()) throw MalformedTable("'plus' rows must be arrays");
    std::vector<std::optional<int>> out_row;
    for (const auto& v : row) {
      if (v.is_null())
        out_row.push_back(std::nullopt);
      else if (v.is_number_integer())
        out_row.push_back(v.get<int>());
      else
        throw MalformedTable("'plus' entries must be indices or null");
    }
    e.plus.push_back(std::move(out_row));
  }
  check_shape(e);
  return e;
}

std::string effect_algebra_to_json(const EffectAlgebra& e) {
  json j;
  j["size"] = e.size;
  if (!e.names.empty()) j["names"] = e.names;
  j["zero"] = e.zero;
  j["one"] = e.one;
  j["comp"] = e.comp;
  json plus = json::array();
  for (int x = 0; x < e.size; ++x) {
    json row = json::array();
    for (int y = 0; y < e.size; ++y) {
      if (e.defined(x, y))
        row.push_back(e.sum(x, y));
      else
        row.push_back(nullptr);
    }
    plus.push_back(std::move(row));
  }
  j["plus"] = std::move(plus);
  return j.dump(2) + "\n";
}

ImplicationTable implication_table_from_json(const std::string& text) {
  json j = parse_json(text);
  ImplicationTable t;
  t.size = get_int(j, "size");
  t.zero = get_int(j, "zero");
  if (!j.contains("kind") || !j["kind"].is_string())
    throw MalformedTable("missing 'kind' string");
  t.kind = imp_kind_from_string(j["kind"].get<std::string>());
  t.names = get_names(j);
  if (!j.contains("imp") || !j["imp"].is_array()) throw MalformedTable("missing 'imp' array");
  for (const auto& row : j["imp"]) {
    if (!row.is_array()) throw MalformedTable("'imp' rows must be arrays");
    std::vector<ElemSet> out_row;
    for (const auto& cell : row) {
      if (!cell.is_array()) throw MalformedTable("'imp' cells must be arrays of indices");
      ElemSet s;
      for (const auto& v : cell) {
        if (!v.is_number_integer()) throw MalformedTable("'imp' cell entries must be indices");
        s.push_back(v.get<int>());
      }
      out_row.push_back(std::move(s));
    }
    t.imp.push_back(std::move(out_row));
  }
  check_shape(t);
  return t;
}

std::string implication_table_to_json(const ImplicationTable& t) {
  json j;
  j["size"] = t.size;
  if (!t.names.empty()) j["names"] = t.names;
  j["zero"] = t.zero;
  j["kind"] = to_string(t.kind);
  json imp = json::array();
  for (int x = 0; x < t.size; ++x) {
    json row = json::array();
    for (int y = 0; y < t.size; ++y) row.push_back(t.at(x, y));
    imp.push_back(std::move(row));
  }
  j["imp"] = std::move(imp);
  return j.dump(2) + "\n";
}

namespace {

Subst subst_from_json(const json& j) {
  Subst s;
  if (!j.is_object()) throw MalformedTable("'subst' must be an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!it.value().is_string()) throw MalformedTable("'subst' values must be term strings");
    s[it.key()] = parse_term(it.value().get<std::string>());
  }
  return s;
}

json subst_to_json(const Subst& s) {
  json j = json::object();
  for (const auto& [k, v] : s) j[k] = to_string(v);
  return j;
}

Justification just_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw MalformedTable("'just' must carry a 'kind'");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "hyp") return HypothesisRef{get_int(j, "index")};
  if (kind == "axiom") {
    if (!j.contains("schema") || !j["schema"].is_string())
      throw MalformedTable("axiom justification needs a 'schema'");
    return AxiomStep{schema_from_string(j["schema"].get<std::string>()),
                     j.contains("subst") ? subst_from_json(j["subst"]) : Subst{}};
  }
  if (kind == "rule") {
    if (!j.contains("rule") || !j["rule"].is_string())
      throw MalformedTable("rule justification needs a 'rule'");
    std::vector<int> premises;
    if (j.contains("premises")) {
      if (!j["premises"].is_array()) throw MalformedTable("'premises' must be an array");
      for (const auto& p : j["premises"]) {
        if (!p.is_number_integer()) throw MalformedTable("'premises' entries must be line indices");
        premises.push_back(p.get<int>());
      }
    }
    return RuleStep{rule_from_string(j["rule"].get<std::string>()), std::move(premises),
                    j.contains("subst") ? subst_from_json(j["subst"]) : Subst{}};
  }
  if (kind == "lemma") {
    if (!j.contains("fixture") || !j["fixture"].is_string())
      throw MalformedTable("lemma justification needs a 'fixture'");
    return LemmaStep{j["fixture"].get<std::string>(),
                     j.contains("subst") ? subst_from_json(j["subst"]) : Subst{}};
  }
  throw MalformedTable("unknown justification kind '" + kind + "'");
}

json just_to_json(const Justification& just) {
  return std::visit(
      [](const auto& j) -> json {
        using T = std::decay_t<decltype(j)>;
        json out;
        if constexpr (std::is_same_v<T, HypothesisRef>) {
          out["kind"] = "hyp";
          out["index"] = j.index;
        } else if constexpr (std::is_same_v<T, AxiomStep>) {
          out["kind"] = "axiom";
          out["schema"] = to_string(j.schema);
          out["subst"] = subst_to_json(j.subst);
        } else if constexpr (std::is_same_v<T, RuleStep>) {
          out["kind"] = "rule";
          out["rule"] = to_string(j.rule);
          out["premises"] = j.premises;
          out["subst"] = subst_to_json(j.subst);
        } else {
          out["kind"] = "lemma";
          out["fixture"] = j.fixture;
          out["subst"] = subst_to_json(j.subst);
        }
        return out;
      },
      just);
}

}  // namespace

Derivation derivation_from_json(const std::string& text) {
  json j = parse_json(text);
  Derivation d;
  if (!j.contains("system") || !j["system"].is_string())
    throw MalformedTable("missing 'system'");
  d.system = system_from_string(j["system"].get<std::string>());
  if (j.contains("hypotheses")) {
    if (!j["hypotheses"].is_array()) throw MalformedTable("'hypotheses' must be an array");
    for (const auto& h : j["hypotheses"]) {
      if (!h.is_string()) throw MalformedTable("'hypotheses' entries must be term strings");
      d.hypotheses.push_back(parse_term(h.get<std::string>()));
    }
  }
  if (!j.contains("lines") || !j["lines"].is_array()) throw MalformedTable("missing 'lines'");
  for (const auto& line : j["lines"]) {
    if (!line.is_object() || !line.contains("formula") || !line["formula"].is_string())
      throw MalformedTable("every line needs a 'formula' string");
    if (!line.contains("just")) throw MalformedTable("every line needs a 'just'");
    d.lines.push_back({parse_term(line["formula"].get<std::string>()),
                       just_from_json(line["just"])});
  }
  if (!j.contains("conclusion") || !j["conclusion"].is_string())
    throw MalformedTable("missing 'conclusion'");
  d.conclusion = parse_term(j["conclusion"].get<std::string>());
  return d;
}

std::string derivation_to_json(const Derivation& d) {
  json j;
  j["system"] = to_string(d.system);
  json hyps = json::array();
  for (const auto& h : d.hypotheses) hyps.push_back(to_string(h));
  j["hypotheses"] = std::move(hyps);
  json lines = json::array();
  for (const auto& line : d.lines) {
    json l;
    l["formula"] = to_string(line.formula);
    l["just"] = just_to_json(line.just);
    lines.push_back(std::move(l));
  }
  j["lines"] = std::move(lines);
  j["conclusion"] = to_string(d.conclusion);
  return j.dump(2) + "\n";
}

std::string order_to_json(const OrderStructure& o) {
  json j;
  j["size"] = o.size;
  json leq = json::array();
  for (int x = 0; x < o.size; ++x) {
    json row = json::array();
    for (int y = 0; y < o.size; ++y) row.push_back(static_cast<bool>(o.leq[x][y]));
    leq.push_back(std::move(row));
  }
  j["leq"] = std::move(leq);
  j["is_lattice"] = o.is_lattice;
  if (o.join) j["join"] = *o.join;
  else j["join"] = nullptr;
  if (o.meet) j["meet"] = *o.meet;
  else j["meet"] = nullptr;
  return j.dump(2) + "\n";
}

OrderStructure order_from_json(const std::string& text) {
  json j = parse_json(text);
  OrderStructure o;
  o.size = get_int(j, "size");
  if (!j.contains("leq") || !j["leq"].is_array()) throw MalformedTable("missing 'leq'");
  for (const auto& row : j["leq"]) {
    std::vector<bool> out_row;
    for (const auto& v : row) out_row.push_back(v.get<bool>());
    o.leq.push_back(std::move(out_row));
  }
  o.is_lattice = j.value("is_lattice", false);
  if (j.contains("join") && !j["join"].is_null()) o.join = j["join"].get<Grid<int>>();
  if (j.contains("meet") && !j["meet"].is_null()) o.meet = j["meet"].get<Grid<int>>();
  return o;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedTable("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw MalformedTable("cannot write '" + path + "'");
  out << content;
}

EffectAlgebra load_effect_algebra(const std::string& path) {
  return effect_algebra_from_json(read_file(path));
}

void save_effect_algebra(const EffectAlgebra& e, const std::string& path) {
  write_file(path, effect_algebra_to_json(e));
}

ImplicationTable load_implication_table(const std::string& path) {
  return implication_table_from_json(read_file(path));
}

void save_implication_table(const ImplicationTable& t, const std::string& path) {
  write_file(path, implication_table_to_json(t));
}

Derivation load_derivation(const std::string& path) {
  return derivation_from_json(read_file(path));
}

void save_derivation(const Derivation& d, const std::string& path) {
  write_file(path, derivation_to_json(d));
}

std::vector<QuasiIdentity> load_identity_file(const std::string& path) {
  std::vector<QuasiIdentity> out;
  std::istringstream in(read_file(path));
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string trimmed = line;
    trimmed.erase(0, trimmed.find_first_not_of(" \t\r"));
    if (trimmed.empty() || trimmed[0] == '#') continue;
    try {
      out.push_back(parse_quasi_identity(trimmed));
    } catch (const ParseError& e) {
      throw ParseError(path + ":" + std::to_string(lineno) + ": " + e.what(), e.position,
                       e.expected);
    }
  }
  return out;
}

namespace {

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

ImplicationTable load_model_as_table(const std::string& path) {
  if (ends_with(path, ".imp.json")) return load_implication_table(path);
  return effect_to_implication(load_effect_algebra(path));
}

std::vector<std::string> list_model_files(const std::string& dir) {
  namespace fs = std::filesystem;
  std::vector<std::string> out;
  if (!fs::is_directory(dir)) throw MalformedTable("'" + dir + "' is not a directory");
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const std::string p = entry.path().string();
    if (ends_with(p, ".ea.json") || ends_with(p, ".imp.json")) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ea

#pragma once

#include <string>
#include <vector>

#include "ea/effect_algebra.hpp"
#include "ea/implication.hpp"
#include "ea/proof.hpp"
#include "ea/term.hpp"

namespace ea {

// .ea.json: { size, names?, zero, one, comp, plus } with null marking an
// undefined sum.
EffectAlgebra effect_algebra_from_json(const std::string& text);
std::string effect_algebra_to_json(const EffectAlgebra& e);
EffectAlgebra load_effect_algebra(const std::string& path);
void save_effect_algebra(const EffectAlgebra& e, const std::string& path);

// .imp.json: { size, names?, zero, kind, imp } with each cell a sorted array
// of indices.
ImplicationTable implication_table_from_json(const std::string& text);
std::string implication_table_to_json(const ImplicationTable& t);
ImplicationTable load_implication_table(const std::string& path);
void save_implication_table(const ImplicationTable& t, const std::string& path);

// .prf.json: { system, hypotheses, lines: [{formula, just}], conclusion };
// premise references are 0-based line indices.
Derivation derivation_from_json(const std::string& text);
std::string derivation_to_json(const Derivation& d);
Derivation load_derivation(const std::string& path);
void save_derivation(const Derivation& d, const std::string& path);

// order export: { size, leq, is_lattice, join?, meet? }
std::string order_to_json(const OrderStructure& o);
OrderStructure order_from_json(const std::string& text);

/// Identity files: one (quasi-)identity per line; blank lines and lines
/// starting with '#' are skipped.
std::vector<QuasiIdentity> load_identity_file(const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

/// Loads a model file as an implication table: .imp.json directly, .ea.json
/// through the implication reduct.
ImplicationTable load_model_as_table(const std::string& path);

/// All model files (.ea.json / .imp.json) in a directory, sorted by name.
std::vector<std::string> list_model_files(const std::string& dir);

}  // namespace ea

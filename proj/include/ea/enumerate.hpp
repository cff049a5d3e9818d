#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ea/effect_algebra.hpp"

namespace ea {

/// Canonical byte encoding: the minimum, over all relabelings that send zero
/// to index 0 and one to the last index, of the serialized (comp, plus)
/// tables. Two algebras have equal encodings exactly when they are
/// isomorphic.
std::vector<std::uint8_t> canonicalize(const EffectAlgebra& e);

EffectAlgebra decode_canonical(const std::vector<std::uint8_t>& enc);

/// Short stable hex digest of the canonical encoding; used to name files.
std::string canonical_hash(const EffectAlgebra& e);

/// All effect algebras on n elements up to isomorphism, in canonical-form
/// order. Every emitted algebra passes the axiom validator; every valid
/// algebra on n elements is isomorphic to exactly one member. Throws
/// CapExceeded when n is outside [2, cap].
std::vector<EffectAlgebra> enumerate_effect_algebras(int n, int cap = 6, int jobs = 1);

/// Independent generation strategy (addition tables first, complement
/// derived afterwards), used to cross-check the primary enumerator. Returns
/// the same canonical-form set; practical for n <= 5.
std::vector<std::vector<std::uint8_t>> enumerate_canonical_alt(int n);

struct CensusRow {
  int size = 0;
  int total = 0;
  int lattice = 0;
  int non_lattice = 0;
  int max_cell = 0;  // largest implication-cell cardinality observed
};

struct CensusReport {
  std::vector<CensusRow> rows;
  int cap = 0;
  int minimal_non_lattice_size = -1;  // -1: none found up to the cap
};

CensusReport census(int cap = 6, int jobs = 1);

std::string format_census(const CensusReport& r);

}  // namespace ea

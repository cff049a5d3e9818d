#pragma once

#include "ea/proof.hpp"

namespace ea {

/// The shipped derivation corpus: the derived theorems of both deduction
/// systems, transcribed line by line with explicit substitutions. Fixtures
/// reference earlier hypothesis-free fixtures through lemma steps where the
/// original arguments substitute into an already established theorem.
const FixtureRegistry& fixture_corpus();

/// Corpus ids in a stable order.
std::vector<std::string> fixture_ids();

}  // namespace ea

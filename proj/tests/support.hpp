#pragma once

#include <random>
#include <string>
#include <vector>

#include "hornkc/hardness_lab.hpp"
#include "hornkc/horn_logic.hpp"
#include "hornkc/model_core.hpp"

namespace fixtures {

using namespace hornkc;

// (bc -> d)(cd -> b)(bc -> a) over abcd.
inline HornCnf W() {
  return HornCnf(4, {HornClause::implication({2, 3}, 4), HornClause::implication({3, 4}, 2),
                     HornClause::implication({2, 3}, 1)});
}

// (a -> b)(c -> b)(-b v -d) over abcd.
inline HornCnf W_prime() {
  return HornCnf(4, {HornClause::implication({1}, 2), HornClause::implication({3}, 2),
                     HornClause::negative({2, 4})});
}

inline ModelSet char_W() {
  return ModelSet::of({"0010", "0101", "1001", "1010", "1100", "1101", "1111"});
}

inline Assignment bits(const char* s) { return Assignment::from_string(s); }

// Seeded Horn corpus with widths cycling through 1..max_width.
inline std::vector<HornCnf> horn_corpus(std::uint64_t seed, int count, int max_width,
                                        int min_width = 1) {
  std::mt19937_64 rng(seed);
  std::vector<HornCnf> out;
  for (int k = 0; k < count; ++k) {
    const int width = min_width + k % (max_width - min_width + 1);
    out.push_back(random_horn(rng, width));
  }
  return out;
}

}  // namespace fixtures

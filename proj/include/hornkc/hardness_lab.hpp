#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hornkc/dualization.hpp"
#include "hornkc/horn_logic.hpp"
#include "hornkc/model_core.hpp"
#include "hornkc/reductions.hpp"

namespace hornkc {

// (-x1 v ... v -xm)(x1 v -y1)...(xm v -ym) over x1..xm y1..ym; y_i is
// variable m+i.
HornCnf gen_gap_pi(int m);

// sqrt(n) clauses over consecutive blocks of sqrt(n) variables, each block's
// last variable the head.
HornCnf gen_f1(int n);

struct F2Instance {
  std::vector<Term> dnf;  // x1..xm v -x1-y1 v ... v -xm-ym
  HornCnf cnf;            // the same function multiplied out
};

inline constexpr int kMaxF2 = 6;

F2Instance gen_f2_instance(int m);
HornCnf gen_f2(int m);

// A CNF whose clauses are all-positive (monotone) or all-negative, with at
// most three variables each.
class Monotone3SatInstance {
 public:
  Monotone3SatInstance(int width, std::vector<VarSet> monotone, std::vector<VarSet> anti);

  int width() const { return width_; }
  const std::vector<VarSet>& monotone_clauses() const { return monotone_; }
  const std::vector<VarSet>& anti_clauses() const { return anti_; }

  bool satisfied_by(VarSet ones) const;

 private:
  int width_;
  std::vector<VarSet> monotone_;
  std::vector<VarSet> anti_;
};

// Entailment of closure: yes iff every model of h lies in closure(g). A no
// carries the least model of h outside closure(g). Guarded.
Verdict eoc_decide(const HornCnf& h, const ModelSet& g);

struct EocInstance {
  HornCnf h;
  ModelSet gamma;
};

// h is the anti-monotone part; gamma = union over the Horn basis of the
// minimal points of the negated monotone part.
EocInstance reduce_m3sat_to_eoc(const Monotone3SatInstance& inst);

bool m3sat_bruteforce(const Monotone3SatInstance& inst);

// Seeded generators for the test corpora.

struct RandomHornParams {
  int min_clauses = 1;
  int max_clauses = 0;  // 0: twice the width
  int max_body = 3;
  double headless_probability = 0.25;
};

HornCnf random_horn(std::mt19937_64& rng, int width, const RandomHornParams& params = {});

// Up to `count` distinct assignments drawn uniformly.
ModelSet random_model_set(std::mt19937_64& rng, int width, std::size_t count);

MonotoneCnf random_monotone_cnf(std::mt19937_64& rng, int width, int clauses, int max_size);

Monotone3SatInstance random_m3sat(std::mt19937_64& rng, int width, int monotone_clauses,
                                  int anti_clauses);

}  // namespace hornkc

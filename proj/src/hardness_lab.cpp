#include "hornkc/hardness_lab.hpp"

#include <algorithm>
#include <cmath>

#include "hornkc/characteristic.hpp"

namespace hornkc {

HornCnf gen_gap_pi(int m) {
  if (m < 2 || 2 * m > kMaxWidth) throw InvalidArgument("gap function needs 2 <= m <= 32");
  std::vector<HornClause> clauses;
  clauses.emplace_back(full_mask(m), std::nullopt);
  for (int i = 1; i <= m; ++i) clauses.emplace_back(var_bit(m + i), i);
  return HornCnf(2 * m, std::move(clauses));
}

HornCnf gen_f1(int n) {
  const int k = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
  if (n < 4 || k * k != n || n > kMaxWidth) {
    throw InvalidArgument("f1 needs a perfect square width between 4 and 64, got " +
                          std::to_string(n));
  }
  std::vector<HornClause> clauses;
  for (int block = 0; block < k; ++block) {
    const int first = block * k + 1;
    const int head = first + k - 1;
    const VarSet body = full_mask(head - 1) & ~full_mask(first - 1);
    clauses.emplace_back(body, head);
  }
  return HornCnf(n, std::move(clauses));
}

F2Instance gen_f2_instance(int m) {
  if (m < 2) throw InvalidArgument("f2 needs m >= 2");
  if (m > kMaxF2) throw GuardExceeded(m, kMaxF2, "gen_f2 (m)");
  std::vector<Term> dnf;
  dnf.emplace_back(full_mask(m), 0);
  for (int i = 1; i <= m; ++i) dnf.emplace_back(0, var_bit(i) | var_bit(m + i));

  // Pick x_j from the first term and one literal from every other term; the
  // pick -x_j makes the clause a tautology.
  std::vector<HornClause> clauses;
  for (int j = 1; j <= m; ++j) {
    const int others = m - 1;
    for (VarSet choice = 0; choice < (VarSet{1} << others); ++choice) {
      VarSet body = var_bit(m + j);
      int bit = 0;
      for (int i = 1; i <= m; ++i) {
        if (i == j) continue;
        body |= (choice >> bit++) & 1 ? var_bit(m + i) : var_bit(i);
      }
      clauses.emplace_back(body, j);
    }
  }
  // Drop subsumed clauses.
  std::vector<HornClause> kept;
  for (const auto& c : clauses) {
    const bool subsumed = std::any_of(clauses.begin(), clauses.end(), [&](const HornClause& d) {
      return !(d == c) && is_subset(d.body(), c.body()) && (!d.has_head() || d.head() == c.head());
    });
    if (!subsumed) kept.push_back(c);
  }
  return {std::move(dnf), HornCnf(2 * m, std::move(kept))};
}

HornCnf gen_f2(int m) { return gen_f2_instance(m).cnf; }

Monotone3SatInstance::Monotone3SatInstance(int width, std::vector<VarSet> monotone,
                                           std::vector<VarSet> anti)
    : width_(width), monotone_(std::move(monotone)), anti_(std::move(anti)) {
  if (width < 1 || width > kMaxWidth) throw InvalidArgument("instance width out of range");
  for (const auto* family : {&monotone_, &anti_}) {
    for (VarSet s : *family) {
      if (s == 0 || std::popcount(s) > 3) {
        throw InvalidArgument("monotone 3-SAT clauses need one to three variables");
      }
      if (!is_subset(s, full_mask(width))) throw InvalidArgument("clause variable beyond width");
    }
  }
  for (auto* family : {&monotone_, &anti_}) {
    std::sort(family->begin(), family->end(), lex_less);
    family->erase(std::unique(family->begin(), family->end()), family->end());
  }
}

bool Monotone3SatInstance::satisfied_by(VarSet ones) const {
  return std::all_of(monotone_.begin(), monotone_.end(), [ones](VarSet s) { return (s & ones) != 0; }) &&
         std::all_of(anti_.begin(), anti_.end(), [ones](VarSet s) { return !is_subset(s, ones); });
}

Verdict eoc_decide(const HornCnf& h, const ModelSet& g) {
  require_same_width(h.width(), g.width(), "eoc_decide");
  require_within_guard(h.width(), "eoc_decide");
  for (const auto& x : models(h)) {
    if (!closure_member(x, g)) return Verdict::reject(x);
  }
  return Verdict::accept();
}

EocInstance reduce_m3sat_to_eoc(const Monotone3SatInstance& inst) {
  const int n = inst.width();
  std::vector<HornClause> anti;
  for (VarSet s : inst.anti_clauses()) anti.emplace_back(s, std::nullopt);

  std::vector<Term> negated;
  for (VarSet s : inst.monotone_clauses()) negated.emplace_back(0, s);
  ModelSet gamma(n);
  const Basis basis = horn_basis(n);
  for (const auto& b : basis.elements()) {
    gamma = set_union(gamma, min_b_of_dnf(negated, b));
  }
  return {HornCnf(n, std::move(anti)), std::move(gamma)};
}

bool m3sat_bruteforce(const Monotone3SatInstance& inst) {
  require_within_guard(inst.width(), "m3sat_bruteforce");
  const VarSet end = VarSet{1} << inst.width();
  for (VarSet x = 0; x < end; ++x) {
    if (inst.satisfied_by(x)) return true;
  }
  return false;
}

namespace {

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

VarSet random_subset(std::mt19937_64& rng, VarSet pool, int size) {
  std::vector<int> vars = vars_of(pool);
  std::shuffle(vars.begin(), vars.end(), rng);
  VarSet out = 0;
  for (int k = 0; k < size && k < static_cast<int>(vars.size()); ++k) out |= var_bit(vars[static_cast<std::size_t>(k)]);
  return out;
}

}  // namespace

HornCnf random_horn(std::mt19937_64& rng, int width, const RandomHornParams& params) {
  if (width < 1 || width > kMaxWidth) throw InvalidArgument("random_horn width out of range");
  const int max_clauses = params.max_clauses > 0 ? params.max_clauses : 2 * width;
  const int count = uniform_int(rng, std::max(params.min_clauses, 1), std::max(max_clauses, 1));
  std::bernoulli_distribution headless(params.headless_probability);
  std::vector<HornClause> clauses;
  for (int k = 0; k < count; ++k) {
    if (headless(rng) || width == 1) {
      const int size = uniform_int(rng, 1, std::min(params.max_body + 1, width));
      clauses.emplace_back(random_subset(rng, full_mask(width), size), std::nullopt);
    } else {
      const int head = uniform_int(rng, 1, width);
      const int size = uniform_int(rng, 0, std::min(params.max_body, width - 1));
      clauses.emplace_back(random_subset(rng, full_mask(width) & ~var_bit(head), size), head);
    }
  }
  return HornCnf(width, std::move(clauses));
}

ModelSet random_model_set(std::mt19937_64& rng, int width, std::size_t count) {
  if (width < 1 || width > kMaxWidth) throw InvalidArgument("random_model_set width out of range");
  std::uniform_int_distribution<VarSet> draw(0, full_mask(width));
  ModelSet out(width);
  for (std::size_t k = 0; k < count; ++k) out.insert(Assignment(width, draw(rng)));
  return out;
}

MonotoneCnf random_monotone_cnf(std::mt19937_64& rng, int width, int clauses, int max_size) {
  std::vector<VarSet> sets;
  for (int k = 0; k < clauses; ++k) {
    const int size = uniform_int(rng, 1, std::min(max_size, width));
    sets.push_back(random_subset(rng, full_mask(width), size));
  }
  return MonotoneCnf(width, std::move(sets));
}

Monotone3SatInstance random_m3sat(std::mt19937_64& rng, int width, int monotone_clauses,
                                  int anti_clauses) {
  auto draw = [&](int count) {
    std::vector<VarSet> out;
    for (int k = 0; k < count; ++k) {
      out.push_back(random_subset(rng, full_mask(width), uniform_int(rng, 1, std::min(3, width))));
    }
    return out;
  };
  std::vector<VarSet> monotone = draw(monotone_clauses);
  std::vector<VarSet> anti = draw(anti_clauses);
  return Monotone3SatInstance(width, std::move(monotone), std::move(anti));
}

}  // namespace hornkc

// Canonical Horn form via the Duquenne-Guigues (stem) basis.
//
// Clauses are read as implications over x1..xn plus a bottom attribute that
// stands for "false": a headless clause B is the implication B -> bottom, and
// bottom -> everything closes the system. The stem basis of an implication
// system is unique for its closure system, which here is models(h) plus the
// full attribute set, so two equivalent Horn CNFs minimize to the same basis.

#include <algorithm>

#include "hornkc/horn_logic.hpp"

namespace hornkc {

namespace {

struct Implication {
  VarSet premise;
  VarSet conclusion;
  bool alive = true;
};

VarSet closure_under(VarSet x, const std::vector<Implication>& rules) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& r : rules) {
      if (r.alive && is_subset(r.premise, x) && !is_subset(r.conclusion, x)) {
        x |= r.conclusion;
        changed = true;
      }
    }
  }
  return x;
}

}  // namespace

HornCnf canonical_form(const HornCnf& h) {
  const int n = h.width();
  if (n > 63) throw InvalidArgument("canonical_form supports width up to 63");
  const VarSet bottom = VarSet{1} << n;
  const VarSet everything = full_mask(n) | bottom;

  std::vector<Implication> rules;
  rules.reserve(h.size() + 1);
  for (const auto& c : h.clauses()) {
    rules.push_back({c.body(), c.has_head() ? var_bit(*c.head()) : bottom});
  }
  rules.push_back({bottom, everything});

  // Right-saturate every conclusion to the full closure of its premise.
  for (auto& r : rules) {
    r.alive = false;
    r.conclusion = closure_under(r.premise | r.conclusion, rules);
    r.alive = r.conclusion != r.premise;
  }
  // Replace each premise by its closure under the remaining rules; a rule
  // whose premise then reaches its conclusion is redundant.
  for (auto& r : rules) {
    if (!r.alive) continue;
    r.alive = false;
    const VarSet premise = closure_under(r.premise, rules);
    if (premise != r.conclusion) {
      r.premise = premise;
      r.alive = true;
    }
  }

  std::vector<HornClause> clauses;
  for (const auto& r : rules) {
    if (!r.alive || (r.premise & bottom) != 0) continue;
    if (r.conclusion & bottom) {
      clauses.emplace_back(r.premise, std::nullopt);
      continue;
    }
    for (int v : vars_of(r.conclusion & ~r.premise)) clauses.emplace_back(r.premise, v);
  }
  return HornCnf(n, std::move(clauses));
}

}  // namespace hornkc

#include "hornkc/reductions.hpp"

#include <algorithm>

namespace hornkc {

namespace {

std::size_t saturating_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a) {
    return std::numeric_limits<std::size_t>::max();
  }
  return a * b;
}

// Drops position i (1-based) from s and shifts the higher positions down.
VarSet drop_position(VarSet s, int i) {
  const VarSet low = s & (var_bit(i) - 1);
  const VarSet high = (s >> i) << (i - 1);
  return low | high;
}

}  // namespace

Budget Budget::polynomial(int width, std::size_t input_size, std::size_t output_size,
                          std::size_t coefficient) {
  const std::size_t n = static_cast<std::size_t>(width);
  const std::size_t size = input_size + output_size + 1;
  const std::size_t limit =
      saturating_mul(saturating_mul(coefficient, saturating_mul(n, n)), saturating_mul(size, size));
  return {std::max<std::size_t>(limit, 1)};
}

void require_models_of(const HornCnf& h, const ModelSet& g) {
  require_same_width(h.width(), g.width(), "model set");
  for (const auto& x : g) {
    if (!evaluate(h, x)) {
      throw PreconditionError("model set contains " + x.to_string() +
                              ", which does not satisfy the Horn expression");
    }
  }
}

bool cmi(const HornCnf& h, const ModelSet& g) {
  require_models_of(h, g);
  for (const auto& x : models(h)) {
    if (!closure_member(x, g)) return false;
  }
  return true;
}

HornCnf substitute_true(const HornCnf& h, int i) {
  if (i < 1 || i > h.width()) throw InvalidArgument("substitute_true: index out of range");
  if (h.width() < 2) throw InvalidArgument("substitute_true: cannot reduce a width-1 expression");
  std::vector<HornClause> out;
  out.reserve(h.size());
  for (const auto& c : h.clauses()) {
    if (c.head() == i) continue;  // satisfied by x_i = 1
    std::optional<int> head = c.head();
    if (head && *head > i) --*head;
    out.emplace_back(drop_position(c.body() & ~var_bit(i), i), head);
  }
  return HornCnf(h.width() - 1, std::move(out));
}

ModelSet restrict_models_true(const ModelSet& g, int i) {
  if (i < 1 || i > g.width()) throw InvalidArgument("restrict_models_true: index out of range");
  if (g.width() < 2) throw InvalidArgument("restrict_models_true: cannot reduce a width-1 set");
  std::vector<Assignment> out;
  for (const auto& z : g) {
    if (z.test(i)) out.emplace_back(g.width() - 1, drop_position(z.ones(), i));
  }
  return ModelSet(g.width() - 1, std::move(out));
}

Verdict cmic(const HornCnf& h, const ModelSet& g, const CmiOracle& oracle, CmicTrace* trace) {
  require_models_of(h, g);
  const int n = h.width();
  HornCnf current_h = h;
  ModelSet current_g = g;
  std::vector<int> original(static_cast<std::size_t>(n));  // local position -> variable
  for (int k = 0; k < n; ++k) original[static_cast<std::size_t>(k)] = k + 1;
  VarSet ones = 0;

  for (int v = 1; v <= n; ++v) {
    const auto it = std::find(original.begin(), original.end(), v);
    const int local = static_cast<int>(it - original.begin()) + 1;
    if (current_h.width() == 1) {
      // Every other variable is already 1; the only candidate is 1^n.
      const Assignment top = Assignment::all_ones(n);
      if (evaluate(h, top) && !g.contains(top)) ones |= var_bit(v);
      continue;
    }
    HornCnf reduced = substitute_true(current_h, local);
    ModelSet restricted = restrict_models_true(current_g, local);
    const bool yes = oracle(reduced, restricted);
    if (trace) {
      ++trace->oracle_calls;
      trace->probes.push_back({v, reduced, restricted, yes});
    }
    if (!yes) {
      ones |= var_bit(v);
      current_h = std::move(reduced);
      current_g = std::move(restricted);
      original.erase(it);
    }
  }

  // If any witness exists the scan has walked into a maximal one; otherwise
  // the assembled point is not a witness.
  const Assignment x(n, ones);
  if (evaluate(h, x) && !closure_member(x, g)) return Verdict::reject(x);
  return Verdict::accept();
}

Verdict cmic_reference(const HornCnf& h, const ModelSet& g) { return cmic(h, g, cmi); }

// ---------------------------------------------------------------------------
// Structure identification

namespace {

// Horn learner hypothesis: for every negative example s, the clauses
// ones(s) -> x_z for each zero z of s plus ones(s) -> false, minus those
// violated by a positive example seen so far.
HornCnf learner_hypothesis(int n, const std::vector<VarSet>& negatives,
                           const std::vector<VarSet>& positives) {
  std::vector<HornClause> clauses;
  for (VarSet s : negatives) {
    // A head survives iff every positive containing s also has it set.
    VarSet heads = full_mask(n);
    bool positive_above = false;
    for (VarSet p : positives) {
      if (is_subset(s, p)) {
        heads &= p;
        positive_above = true;
      }
    }
    if (!positive_above) clauses.emplace_back(s, std::nullopt);
    for (int z : vars_of(heads & ~s)) clauses.emplace_back(s, z);
  }
  return HornCnf(n, std::move(clauses));
}

}  // namespace

std::optional<HornCnf> sid_bounded(const ModelSet& g, const CmicOracle& oracle,
                                   std::size_t step_limit, SidStats* stats) {
  const int n = g.width();
  SidStats local;
  SidStats& st = stats ? *stats : local;
  std::vector<VarSet> negatives;
  std::vector<VarSet> positives;

  auto member = [&](VarSet x) {
    ++st.membership_queries;
    return closure_member(Assignment(n, x), g);
  };

  while (true) {
    HornCnf h = learner_hypothesis(n, negatives, positives);
    if (st.equivalence_queries >= step_limit) return std::nullopt;
    ++st.equivalence_queries;

    // Equivalence query, first half: closure(g) |= h iff every member of g
    // satisfies h.
    std::optional<VarSet> positive;
    for (const auto& x : g) {
      if (!evaluate(h, x)) {
        positive = x.ones();
        break;
      }
    }
    if (positive) {
      ++st.positive_counterexamples;
      positives.push_back(*positive);
      continue;
    }
    // Second half: h |= closure(g) iff char(h) is inside g.
    const Verdict v = oracle(h, g);
    if (v.yes) return h;
    if (!v.witness) throw Error("CMIC oracle answered no without a counterexample");
    ++st.negative_counterexamples;
    const VarSet x = v.witness->ones();
    bool refined = false;
    for (auto& s : negatives) {
      const VarSet t = s & x;
      if (t != s && !member(t)) {
        s = t;
        refined = true;
        break;
      }
    }
    if (!refined) negatives.push_back(x);
  }
}

HornCnf sid(const ModelSet& g, const CmicOracle& oracle, SidStats* stats) {
  return *sid_bounded(g, oracle, Budget::unlimited().step_limit, stats);
}

Budget sid_budget(const HornCnf& h, const ModelSet& g, std::size_t coefficient) {
  return Budget::polynomial(h.width(), h.size(), g.size(), coefficient);
}

bool cmi_via_sid(const HornCnf& h, const ModelSet& g, const SidSubroutine& sid_routine,
                 const Budget& budget) {
  require_models_of(h, g);
  const std::optional<HornCnf> learned = sid_routine(g, budget.step_limit);
  // Running out of budget means the Horn expression behind g is larger than
  // h, so g cannot be char(h).
  if (!learned) return false;
  return equivalent(h, *learned);
}

bool cmi_via_sid(const HornCnf& h, const ModelSet& g) {
  const SidSubroutine routine = [](const ModelSet& models, std::size_t limit) {
    return sid_bounded(models, cmic_reference, limit);
  };
  return cmi_via_sid(h, g, routine, sid_budget(h, g));
}

bool cmi_via_ccm(const HornCnf& h, const ModelSet& g, const CcmStream& stream) {
  require_models_of(h, g);
  std::size_t produced = 0;
  bool inside = true;
  stream(h, [&](const Assignment& x) {
    ++produced;
    if (produced > g.size() || !g.contains(x)) {
      inside = false;
      return false;
    }
    return true;
  });
  return inside;
}

bool cmi_via_ccm(const HornCnf& h, const ModelSet& g) {
  const CcmStream stream = [](const HornCnf& expr, const ModelSink& sink) {
    ccm_via_cmic_stream(expr, cmic_reference, sink);
  };
  return cmi_via_ccm(h, g, stream);
}

void ccm_via_cmic_stream(const HornCnf& h, const CmicOracle& oracle, const ModelSink& sink) {
  ModelSet found(h.width());
  while (true) {
    const Verdict v = oracle(h, found);
    if (v.yes) return;
    if (!v.witness || found.contains(*v.witness)) {
      throw Error("CMIC oracle answered no without a fresh counterexample");
    }
    found.insert(*v.witness);
    if (!sink(*v.witness)) return;
  }
}

ModelSet ccm_via_cmic(const HornCnf& h, const CmicOracle& oracle, std::size_t* iterations) {
  ModelSet found(h.width());
  std::size_t calls = 0;
  const CmicOracle counted = [&](const HornCnf& expr, const ModelSet& g) {
    ++calls;
    return oracle(expr, g);
  };
  ccm_via_cmic_stream(h, counted, [&](const Assignment& x) {
    found.insert(x);
    return true;
  });
  if (iterations) *iterations = calls;
  return found;
}

}  // namespace hornkc

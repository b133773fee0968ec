#include "hornkc/dualization.hpp"

#include <algorithm>

#include "hornkc/characteristic.hpp"

namespace hornkc {

std::vector<VarSet> minimize_family(std::vector<VarSet> family) {
  // Sorting by size lets each set be checked only against smaller keepers.
  std::sort(family.begin(), family.end(), [](VarSet a, VarSet b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : lex_less(a, b);
  });
  family.erase(std::unique(family.begin(), family.end()), family.end());
  std::vector<VarSet> kept;
  for (VarSet s : family) {
    const bool absorbed =
        std::any_of(kept.begin(), kept.end(), [s](VarSet k) { return is_subset(k, s); });
    if (!absorbed) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end(), lex_less);
  return kept;
}

bool evaluate(const MonotoneCnf& c, VarSet ones) {
  return std::all_of(c.sets().begin(), c.sets().end(), [ones](VarSet s) { return (s & ones) != 0; });
}

bool evaluate(const MonotoneDnf& d, VarSet ones) {
  return std::any_of(d.sets().begin(), d.sets().end(), [ones](VarSet s) { return is_subset(s, ones); });
}

namespace {

std::vector<VarSet> berge_transversals(const std::vector<VarSet>& family) {
  std::vector<VarSet> current{0};
  for (VarSet edge : family) {
    std::vector<VarSet> next;
    next.reserve(current.size());
    for (VarSet t : current) {
      if (t & edge) {
        next.push_back(t);
        continue;
      }
      for (int v : vars_of(edge)) next.push_back(t | var_bit(v));
    }
    current = minimize_family(std::move(next));
    if (current.empty()) break;
  }
  return current;
}

// Shrinks a transversal to a minimal one, dropping variables in descending
// order.
VarSet minimize_transversal(VarSet x, const std::vector<VarSet>& family) {
  std::vector<int> vars = vars_of(x);
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
    const VarSet candidate = x & ~var_bit(*it);
    const bool hits = std::all_of(family.begin(), family.end(),
                                  [candidate](VarSet s) { return (s & candidate) != 0; });
    if (hits) x = candidate;
  }
  return x;
}

std::vector<VarSet> fk_transversals(const std::vector<VarSet>& family, int width) {
  const VarSet universe = full_mask(width);
  std::vector<VarSet> found;
  while (auto x = fk_duality_witness(family, found, universe)) {
    found.push_back(minimize_transversal(*x, family));
  }
  std::sort(found.begin(), found.end(), lex_less);
  return found;
}

}  // namespace

std::vector<VarSet> minimal_transversals(std::span<const VarSet> family, int width,
                                         DualizeEngine engine) {
  if (width < 1 || width > kMaxWidth) throw InvalidArgument("transversal width out of range");
  for (VarSet s : family) {
    if (!is_subset(s, full_mask(width))) throw InvalidArgument("set family exceeds width");
  }
  std::vector<VarSet> edges = minimize_family({family.begin(), family.end()});
  if (engine == DualizeEngine::kFredmanKhachiyan) return fk_transversals(edges, width);
  return berge_transversals(edges);
}

MonotoneDnf dualize(const MonotoneCnf& c, DualizeEngine engine) {
  return MonotoneDnf(c.width(), minimal_transversals(c.sets(), c.width(), engine));
}

MonotoneCnf dualize(const MonotoneDnf& d, DualizeEngine engine) {
  return MonotoneCnf(d.width(), minimal_transversals(d.sets(), d.width(), engine));
}

HornCnf rename_anti_monotone(const MonotoneCnf& c) {
  std::vector<HornClause> clauses;
  clauses.reserve(c.size());
  for (VarSet s : c.sets()) clauses.emplace_back(s, std::nullopt);
  return HornCnf(c.width(), std::move(clauses));
}

MonotoneCnf rename_monotone(const HornCnf& h) {
  std::vector<VarSet> sets;
  sets.reserve(h.size());
  for (const auto& d : h.clauses()) {
    if (d.has_head()) {
      throw InvalidArgument("clause " + d.to_string() + " is not anti-monotone");
    }
    sets.push_back(d.body());
  }
  return MonotoneCnf(h.width(), std::move(sets));
}

MonotoneDnf htr_via_ccm(const MonotoneCnf& c, const CcmSubroutine& ccm) {
  const int n = c.width();
  const HornCnf anti = rename_anti_monotone(c);
  const ModelSet gamma = ccm(anti);
  std::vector<VarSet> terms;
  for (const auto& z : min_b(gamma, Assignment::all_ones(n))) terms.push_back(z.zeros_set());
  return MonotoneDnf(n, std::move(terms));
}

MonotoneDnf htr_via_ccm(const MonotoneCnf& c) {
  return htr_via_ccm(c, [](const HornCnf& h) { return ccm_bruteforce(h); });
}

MonotoneDnf htr_via_sid(const MonotoneCnf& c, const SidRoutine& sid_routine) {
  const int n = c.width();
  // The negation of c, as a DNF whose terms are all negative.
  std::vector<Term> negation;
  negation.reserve(c.size());
  for (VarSet s : c.sets()) negation.emplace_back(0, s);

  ModelSet gamma(n);
  const Basis basis = horn_basis(n);
  for (const auto& b : basis.elements()) {
    gamma = set_union(gamma, min_b_of_dnf(negation, b));
  }
  const HornCnf learned = sid_routine(gamma);
  // The learned function is anti-monotone, so a clause B -> x implies the
  // clause over B alone; the bodies form a CNF of it.
  std::vector<VarSet> bodies;
  bodies.reserve(learned.size());
  for (const auto& d : learned.clauses()) bodies.push_back(d.body());
  return MonotoneDnf(n, minimize_family(std::move(bodies)));
}

MonotoneDnf htr_via_sid(const MonotoneCnf& c) {
  return htr_via_sid(c, [](const ModelSet& g) { return sid(g); });
}

// ---------------------------------------------------------------------------
// Prime implicates by basis element

bool in_bucket(const HornClause& d, int i) {
  if (i == 0) return !d.has_head();
  if (d.body() & var_bit(i)) return false;
  return !d.has_head() || *d.head() == i;
}

PiDecomposition::PiDecomposition(int width, std::vector<std::vector<HornClause>> buckets)
    : width_(width), buckets_(std::move(buckets)) {
  if (width < 1 || width > kMaxWidth) throw InvalidArgument("decomposition width out of range");
  if (buckets_.size() != static_cast<std::size_t>(width) + 1) {
    throw InvalidArgument("decomposition needs " + std::to_string(width + 1) + " buckets, got " +
                          std::to_string(buckets_.size()));
  }
  for (std::size_t i = 0; i < buckets_.size(); ++i) {
    auto& bucket = buckets_[i];
    for (const auto& d : bucket) {
      if (d.max_var() > width) throw InvalidArgument("clause " + d.to_string() + " exceeds width");
      if (!in_bucket(d, static_cast<int>(i))) {
        throw InvalidArgument("clause " + d.to_string() + " is not falsified by basis element " +
                              std::to_string(i));
      }
    }
    std::sort(bucket.begin(), bucket.end());
    bucket.erase(std::unique(bucket.begin(), bucket.end()), bucket.end());
  }
}

HornCnf PiDecomposition::conjunction() const {
  std::vector<HornClause> all;
  for (const auto& bucket : buckets_) all.insert(all.end(), bucket.begin(), bucket.end());
  return HornCnf(width_, std::move(all));
}

PiDecomposition pi_decompose(const HornCnf& h) {
  const int n = h.width();
  require_within_guard(n, "pi_decompose");
  const std::size_t count = std::size_t{1} << n;
  std::vector<char> contradictory(count);
  std::vector<VarSet> derived(count);
  for (VarSet body = 0; body < count; ++body) {
    const ChainResult r = forward_chain(h, body);
    contradictory[body] = r.contradiction;
    derived[body] = r.derived;
  }
  auto implies = [&](VarSet body, int head) {
    return contradictory[body] || (derived[body] & var_bit(head)) != 0;
  };

  std::vector<std::vector<HornClause>> buckets(static_cast<std::size_t>(n) + 1);
  for (VarSet body = 0; body < count; ++body) {
    const std::vector<int> members = vars_of(body);
    if (contradictory[body]) {
      const bool prime = std::none_of(members.begin(), members.end(), [&](int v) {
        return contradictory[body & ~var_bit(v)];
      });
      if (!prime) continue;
      const HornClause d(body, std::nullopt);
      buckets[0].push_back(d);
      for (int i = 1; i <= n; ++i) {
        if (!(body & var_bit(i))) buckets[static_cast<std::size_t>(i)].push_back(d);
      }
      continue;
    }
    for (int head : vars_of(derived[body] & ~body)) {
      const bool prime = std::none_of(members.begin(), members.end(), [&](int v) {
        return implies(body & ~var_bit(v), head);
      });
      if (prime) buckets[static_cast<std::size_t>(head)].emplace_back(body, head);
    }
  }
  return PiDecomposition(n, std::move(buckets));
}

std::vector<HornClause> all_horn_prime_implicates(const HornCnf& h) {
  const int n = h.width();
  require_within_guard(n, "all_horn_prime_implicates");
  std::vector<HornClause> out;
  const VarSet end = VarSet{1} << n;
  for (VarSet body = 0; body < end; ++body) {
    const HornClause negative(body, std::nullopt);
    if (is_prime_implicate(h, negative)) out.push_back(negative);
    for (int head : vars_of(full_mask(n) & ~body)) {
      const HornClause d(body, head);
      if (is_prime_implicate(h, d)) out.push_back(d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

PiCcmDetail ccm_from_all_pis_detailed(const PiDecomposition& p, const HtrSubroutine& htr,
                                      bool validate) {
  const int n = p.width();
  PiCcmDetail detail{ModelSet(n), {}, {}};
  for (int i = 0; i <= n; ++i) {
    const Assignment b = basis_element(n, i);
    // Under the renaming that makes b(i)-monotone functions monotone, a
    // clause of bucket i is the positive clause over its variables.
    std::vector<VarSet> sets;
    for (const auto& d : p.bucket(i)) sets.push_back(d.variables());
    const MonotoneDnf dnf = htr(MonotoneCnf(n, std::move(sets)));

    std::vector<Term> terms;
    std::vector<Assignment> points;
    for (VarSet s : dnf.sets()) {
      const VarSet head = i == 0 ? 0 : (s & var_bit(i));
      terms.emplace_back(head, s & ~head);
      points.push_back(min_b_of_term(terms.back(), b));
    }
    ModelSet minima = min_b(ModelSet(n, std::move(points)), b);
    detail.characteristic = set_union(detail.characteristic, minima);
    detail.bucket_dnfs.push_back(std::move(terms));
    detail.bucket_minima.push_back(std::move(minima));
  }
  if (validate && closure(detail.characteristic) != models(p.conjunction())) {
    throw IncompleteDecomposition(
        "prime implicate buckets do not describe one Horn function; some are missing");
  }
  return detail;
}

ModelSet ccm_from_all_pis(const PiDecomposition& p, const HtrSubroutine& htr, bool validate) {
  return ccm_from_all_pis_detailed(p, htr, validate).characteristic;
}

ModelSet ccm_from_all_pis(const PiDecomposition& p) {
  return ccm_from_all_pis(p, [](const MonotoneCnf& c) { return dualize(c); });
}

namespace {

// Exchanging and/or turns a CNF-to-DNF translator into a DNF-to-CNF one.
MonotoneCnf dualize_dnf_via(const HtrSubroutine& htr, const MonotoneDnf& d) {
  return MonotoneCnf(d.width(), htr(MonotoneCnf(d.width(), d.sets())).sets());
}

}  // namespace

std::vector<Term> dnf_of_minima(const ModelSet& minima, const Assignment& b) {
  require_same_width(minima.width(), b.width(), "dnf_of_minima");
  std::vector<Term> out;
  for (const auto& z : minima) {
    const VarSet diff = z.ones() ^ b.ones();
    out.emplace_back(z.ones() & diff, diff & ~z.ones());
  }
  std::sort(out.begin(), out.end());
  return out;
}

PiDecomposition sid_to_all_pis(const ModelSet& gamma, const HtrSubroutine& htr) {
  if (gamma.empty()) throw InvalidArgument("sid_to_all_pis needs a nonempty model set");
  const int n = gamma.width();
  std::vector<std::vector<HornClause>> buckets(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    const Assignment b = basis_element(n, i);
    std::vector<VarSet> terms;
    for (const auto& t : dnf_of_minima(min_b(gamma, b), b)) terms.push_back(t.variables());
    const MonotoneCnf cnf = dualize_dnf_via(htr, MonotoneDnf(n, std::move(terms)));
    for (VarSet s : cnf.sets()) {
      if (i != 0 && (s & var_bit(i))) {
        buckets[static_cast<std::size_t>(i)].emplace_back(s & ~var_bit(i), i);
      } else {
        buckets[static_cast<std::size_t>(i)].emplace_back(s, std::nullopt);
      }
    }
  }
  return PiDecomposition(n, std::move(buckets));
}

PiDecomposition sid_to_all_pis(const ModelSet& gamma) {
  return sid_to_all_pis(gamma, [](const MonotoneCnf& c) { return dualize(c); });
}

}  // namespace hornkc

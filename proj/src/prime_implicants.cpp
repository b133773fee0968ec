#include <algorithm>

#include "hornkc/dualization.hpp"

namespace hornkc {

namespace {

// Adds t unless an existing term absorbs it; drops the terms t absorbs.
bool add_absorbing(std::vector<Term>& terms, const Term& t) {
  for (const auto& u : terms) {
    if (u.absorbs(t)) return false;
  }
  std::erase_if(terms, [&](const Term& u) { return t.absorbs(u); });
  terms.push_back(t);
  return true;
}

std::vector<Term> distribute(const HornCnf& h) {
  std::vector<Term> terms{Term()};
  for (const auto& clause : h.clauses()) {
    std::vector<Term> next;
    for (const auto& t : terms) {
      const bool satisfied = (t.negative() & clause.body()) != 0 ||
                             (clause.has_head() && (t.positive() & var_bit(*clause.head())) != 0);
      if (!satisfied) {
        for (const auto& lit : clause.literals()) {
          const VarSet bit = var_bit(lit.var);
          if (lit.positive ? (t.negative() & bit) : (t.positive() & bit)) continue;
          add_absorbing(next, lit.positive ? Term(t.positive() | bit, t.negative())
                                           : Term(t.positive(), t.negative() | bit));
        }
      } else {
        add_absorbing(next, t);
      }
    }
    terms = std::move(next);
    std::sort(terms.begin(), terms.end());
  }
  return terms;
}

// The consensus of a and b when they clash on exactly one variable.
std::optional<Term> consensus(const Term& a, const Term& b) {
  const VarSet clash = (a.positive() & b.negative()) | (a.negative() & b.positive());
  if (std::popcount(clash) != 1) return std::nullopt;
  return Term((a.positive() | b.positive()) & ~clash, (a.negative() | b.negative()) & ~clash);
}

}  // namespace

std::vector<Term> prime_implicants_consensus(const HornCnf& h) {
  require_within_guard(h.width(), "prime_implicants_consensus");
  std::vector<Term> terms = distribute(h);
  bool changed = true;
  while (changed) {
    changed = false;
    std::sort(terms.begin(), terms.end());
    const std::vector<Term> snapshot = terms;
    for (std::size_t i = 0; i < snapshot.size(); ++i) {
      for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
        if (auto c = consensus(snapshot[i], snapshot[j])) {
          if (add_absorbing(terms, *c)) changed = true;
        }
      }
    }
  }
  std::sort(terms.begin(), terms.end());
  return terms;
}

namespace {

class CoverSearch {
 public:
  CoverSearch(std::size_t universe, std::vector<std::vector<std::size_t>> covers_of_point,
              std::vector<std::vector<std::size_t>> points_of_cover)
      : covered_(universe, 0),
        covers_of_point_(std::move(covers_of_point)),
        points_of_cover_(std::move(points_of_cover)) {
    for (const auto& p : points_of_cover_) largest_ = std::max(largest_, p.size());
    best_ = points_of_cover_.size();
  }

  std::size_t solve() {
    recurse(0, covered_.size());
    return best_;
  }

 private:
  void recurse(std::size_t used, std::size_t uncovered) {
    if (uncovered == 0) {
      best_ = std::min(best_, used);
      return;
    }
    if (largest_ == 0) return;
    const std::size_t bound = used + (uncovered + largest_ - 1) / largest_;
    if (bound >= best_) return;
    // Branch on the uncovered point with the fewest covering terms.
    std::size_t pick = covered_.size();
    for (std::size_t p = 0; p < covered_.size(); ++p) {
      if (covered_[p] != 0) continue;
      if (pick == covered_.size() || covers_of_point_[p].size() < covers_of_point_[pick].size()) {
        pick = p;
      }
    }
    for (std::size_t c : covers_of_point_[pick]) {
      std::size_t gained = 0;
      for (std::size_t p : points_of_cover_[c]) {
        if (covered_[p]++ == 0) ++gained;
      }
      recurse(used + 1, uncovered - gained);
      for (std::size_t p : points_of_cover_[c]) --covered_[p];
    }
  }

  std::vector<int> covered_;
  std::vector<std::vector<std::size_t>> covers_of_point_;
  std::vector<std::vector<std::size_t>> points_of_cover_;
  std::size_t largest_ = 0;
  std::size_t best_;
};

}  // namespace

std::size_t minimum_dnf_size(const HornCnf& h) {
  const ModelSet m = models(h);
  if (m.empty()) return 0;
  const std::vector<Term> primes = prime_implicants_consensus(h);
  std::vector<std::vector<std::size_t>> covers_of_point(m.size());
  std::vector<std::vector<std::size_t>> points_of_cover(primes.size());
  for (std::size_t p = 0; p < m.size(); ++p) {
    for (std::size_t c = 0; c < primes.size(); ++c) {
      if (primes[c].satisfied_by(m.members()[p])) {
        covers_of_point[p].push_back(c);
        points_of_cover[c].push_back(p);
      }
    }
  }
  return CoverSearch(m.size(), std::move(covers_of_point), std::move(points_of_cover)).solve();
}

}  // namespace hornkc

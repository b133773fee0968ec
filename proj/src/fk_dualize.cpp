// Fredman-Khachiyan style recursion for dualization. The search splits on a
// most frequent variable, and stops early when a counting argument already
// guarantees a witness.

#include <algorithm>
#include <array>
#include <cmath>

#include "hornkc/dualization.hpp"

namespace hornkc {

namespace {

// Members with v, with v removed, and members without v.
void split(const std::vector<VarSet>& family, VarSet v, std::vector<VarSet>& with,
           std::vector<VarSet>& without) {
  for (VarSet s : family) (s & v ? with : without).push_back(s & ~v);
}

// Expected number of violated constraints when the undecided variables of
// `free` are set by fair coins: an f-member missed by x, or a g-member
// inside x. ones are the variables already put into x.
double expected_violations(const std::vector<VarSet>& f, const std::vector<VarSet>& g, VarSet ones,
                           VarSet free) {
  double total = 0;
  for (VarSet s : f) {
    if (s & ones) continue;
    const VarSet open = s & free;
    total += std::ldexp(1.0, -std::popcount(open));
  }
  for (VarSet t : g) {
    if (!is_subset(t, ones | free)) continue;
    total += std::ldexp(1.0, -std::popcount(t & free));
  }
  return total;
}

// Derandomized sampling by conditional expectations.
VarSet fix_by_expectation(const std::vector<VarSet>& f, const std::vector<VarSet>& g,
                          VarSet universe) {
  VarSet ones = 0;
  VarSet free = universe;
  for (int v : vars_of(universe)) {
    const VarSet bit = var_bit(v);
    free &= ~bit;
    if (expected_violations(f, g, ones | bit, free) <= expected_violations(f, g, ones, free)) {
      ones |= bit;
    }
  }
  return ones;
}

std::optional<VarSet> search(std::vector<VarSet> f, std::vector<VarSet> g, VarSet universe) {
  f = minimize_family(std::move(f));
  g = minimize_family(std::move(g));
  if (f.empty()) {
    if (!g.empty() && g.front() == 0) return std::nullopt;
    return VarSet{0};
  }
  if (g.empty()) {
    if (f.front() == 0) return std::nullopt;
    return universe;
  }
  if (f.front() == 0 || g.front() == 0) return std::nullopt;

  if (expected_violations(f, g, 0, universe) < 1.0) return fix_by_expectation(f, g, universe);

  std::array<int, 64> frequency{};
  for (const auto* family : {&f, &g}) {
    for (VarSet s : *family)
      for (int v : vars_of(s)) ++frequency[static_cast<std::size_t>(v - 1)];
  }
  const auto best = std::max_element(frequency.begin(), frequency.end());
  const VarSet v = var_bit(static_cast<int>(best - frequency.begin()) + 1);

  std::vector<VarSet> f1, f0, g1, g0;
  split(f, v, f1, f0);
  split(g, v, g1, g0);
  const VarSet rest = universe & ~v;

  // v left out of x: members of f through v must be met elsewhere, members
  // of g through v can no longer fit.
  std::vector<VarSet> f_without = f0;
  f_without.insert(f_without.end(), f1.begin(), f1.end());
  if (auto x = search(std::move(f_without), g0, rest)) return x;

  // v put into x: members of f through v are met.
  std::vector<VarSet> g_with = g0;
  g_with.insert(g_with.end(), g1.begin(), g1.end());
  if (auto x = search(std::move(f0), std::move(g_with), rest)) return *x | v;
  return std::nullopt;
}

}  // namespace

std::optional<VarSet> fk_duality_witness(std::vector<VarSet> f, std::vector<VarSet> g,
                                         VarSet universe) {
  for (const auto* family : {&f, &g}) {
    for (VarSet s : *family) {
      if (!is_subset(s, universe)) throw InvalidArgument("duality test: set outside universe");
    }
  }
  return search(std::move(f), std::move(g), universe);
}

}  // namespace hornkc

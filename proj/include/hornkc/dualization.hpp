#pragma once

#include <functional>
#include <span>
#include <vector>

#include "hornkc/horn_logic.hpp"
#include "hornkc/model_core.hpp"
#include "hornkc/reductions.hpp"

namespace hornkc {

// A monotone normal form: a family of variable sets over x1..x_width. The
// Tag tells clauses (CNF) from terms (DNF). Sets are kept sorted and unique;
// absorption is not applied on construction.
template <class Tag>
class MonotoneExpr {
 public:
  explicit MonotoneExpr(int width, std::vector<VarSet> sets = {}) : width_(width), sets_(std::move(sets)) {
    if (width < 1 || width > kMaxWidth) throw InvalidArgument("monotone expression width out of range");
    for (VarSet s : sets_) {
      if (!is_subset(s, full_mask(width))) throw InvalidArgument("monotone expression variable beyond width");
    }
    std::sort(sets_.begin(), sets_.end(), lex_less);
    sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
  }

  int width() const { return width_; }
  const std::vector<VarSet>& sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }

  bool is_antichain() const {
    for (VarSet a : sets_)
      for (VarSet b : sets_)
        if (a != b && is_subset(a, b)) return false;
    return true;
  }

  friend bool operator==(const MonotoneExpr&, const MonotoneExpr&) = default;

 private:
  int width_;
  std::vector<VarSet> sets_;
};

struct MonotoneCnfTag {};
struct MonotoneDnfTag {};
using MonotoneCnf = MonotoneExpr<MonotoneCnfTag>;  // AND of ORs
using MonotoneDnf = MonotoneExpr<MonotoneDnfTag>;  // OR of ANDs

// Members of the family not containing another member.
std::vector<VarSet> minimize_family(std::vector<VarSet> family);

bool evaluate(const MonotoneCnf& c, VarSet ones);
bool evaluate(const MonotoneDnf& d, VarSet ones);

enum class DualizeEngine { kBaseline, kFredmanKhachiyan };

// Minimal transversals (hitting sets) of a set family over `width`
// variables, in canonical order. Both engines return the same list.
std::vector<VarSet> minimal_transversals(std::span<const VarSet> family, int width,
                                         DualizeEngine engine = DualizeEngine::kBaseline);

// Monotone CNF -> its unique minimal DNF, and back.
MonotoneDnf dualize(const MonotoneCnf& c, DualizeEngine engine = DualizeEngine::kBaseline);
MonotoneCnf dualize(const MonotoneDnf& d, DualizeEngine engine = DualizeEngine::kBaseline);

// Fredman-Khachiyan style search for a set x within `universe` that meets
// every member of f and contains no member of g. When every member of g is a
// transversal of f, nullopt means g lists all minimal transversals.
std::optional<VarSet> fk_duality_witness(std::vector<VarSet> f, std::vector<VarSet> g,
                                         VarSet universe);

// Rename every variable as its negation: a monotone CNF becomes an
// all-negative (anti-monotone, Horn) CNF. The inverse rejects clauses with
// a positive literal.
HornCnf rename_anti_monotone(const MonotoneCnf& c);
MonotoneCnf rename_monotone(const HornCnf& h);

using CcmSubroutine = std::function<ModelSet(const HornCnf&)>;
using SidRoutine = std::function<HornCnf(const ModelSet&)>;
using HtrSubroutine = std::function<MonotoneDnf(const MonotoneCnf&)>;

// Dualization through a CCM solver run on the renamed anti-monotone CNF.
MonotoneDnf htr_via_ccm(const MonotoneCnf& c, const CcmSubroutine& ccm);
MonotoneDnf htr_via_ccm(const MonotoneCnf& c);

// Dualization through a SID solver: the clauses of c, read as negated
// terms, give an anti-monotone function whose characteristic models are
// computed directly; SID returns a Horn CNF for it whose all-negative
// clauses are the dual terms.
MonotoneDnf htr_via_sid(const MonotoneCnf& c, const SidRoutine& sid_routine);
MonotoneDnf htr_via_sid(const MonotoneCnf& c);

// Prime implicates grouped by the basis element b(i) that falsifies them.
// Bucket 0 holds the all-negative ones; bucket i >= 1 the ones with head x_i
// or all-negative without x_i. Buckets overlap.
class PiDecomposition {
 public:
  PiDecomposition(int width, std::vector<std::vector<HornClause>> buckets);

  int width() const { return width_; }
  const std::vector<HornClause>& bucket(int i) const { return buckets_.at(static_cast<std::size_t>(i)); }
  const std::vector<std::vector<HornClause>>& buckets() const { return buckets_; }

  // All distinct clauses, as one expression.
  HornCnf conjunction() const;

  friend bool operator==(const PiDecomposition&, const PiDecomposition&) = default;

 private:
  int width_;
  std::vector<std::vector<HornClause>> buckets_;
};

// Whether clause d is falsified by b(i).
bool in_bucket(const HornClause& d, int i);

PiDecomposition pi_decompose(const HornCnf& h);

std::vector<HornClause> all_horn_prime_implicates(const HornCnf& h);

struct PiCcmDetail {
  ModelSet characteristic;
  std::vector<std::vector<Term>> bucket_dnfs;  // DNF of M_b(i)(f), original literals
  std::vector<ModelSet> bucket_minima;         // Gamma_i
};

// char(f) from the complete bucketed prime implicates: dualize each bucket
// (after renaming for b(i)), map each term to its minimal point, union.
// With validate set, closure of the result is checked against the models of
// the decomposition (guarded) and IncompleteDecomposition is thrown on a
// mismatch.
PiCcmDetail ccm_from_all_pis_detailed(const PiDecomposition& p, const HtrSubroutine& htr,
                                      bool validate = true);
ModelSet ccm_from_all_pis(const PiDecomposition& p, const HtrSubroutine& htr, bool validate = true);
ModelSet ccm_from_all_pis(const PiDecomposition& p);

class IncompleteDecomposition : public Error {
 public:
  using Error::Error;
};

// All Horn prime implicates of closure(gamma), bucketed: minimal members for
// each b(i), read as a DNF, dualized into the bucket's CNF.
PiDecomposition sid_to_all_pis(const ModelSet& gamma, const HtrSubroutine& htr);
PiDecomposition sid_to_all_pis(const ModelSet& gamma);

// The DNF a set of b-minimal points stands for: each z becomes the term
// fixing the positions where z differs from b.
std::vector<Term> dnf_of_minima(const ModelSet& minima, const Assignment& b);

// All prime implicants of h by iterated consensus with absorption, starting
// from the DNF obtained by distributing h's clauses. Guarded.
std::vector<Term> prime_implicants_consensus(const HornCnf& h);

// Size of a smallest DNF for h (exact set cover of the models by prime
// implicants). Guarded; meant for desk-scale checks.
std::size_t minimum_dnf_size(const HornCnf& h);

}  // namespace hornkc

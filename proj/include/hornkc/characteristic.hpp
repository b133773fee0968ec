#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hornkc/horn_logic.hpp"
#include "hornkc/model_core.hpp"

namespace hornkc {

// The n+1 assignments of weight >= n-1, in the order b(0) = 1^n, then b(i)
// with only x_i cleared.
class Basis {
 public:
  Basis(int width, std::vector<Assignment> elements)
      : width_(width), elements_(std::move(elements)) {}

  int width() const { return width_; }
  const std::vector<Assignment>& elements() const { return elements_; }
  const Assignment& element(std::size_t i) const { return elements_.at(i); }
  std::size_t size() const { return elements_.size(); }
  ModelSet as_set() const { return ModelSet(width_, elements_); }

 private:
  int width_;
  std::vector<Assignment> elements_;
};

Basis horn_basis(int n);

// b(i) alone: 1^n for i = 0, otherwise 1^n with x_i cleared.
Assignment basis_element(int n, int i);

// Members of s that are not intersections of other members.
ModelSet char_of_set(const ModelSet& s);

// char(h) as the non-intersection models of h. Guarded.
ModelSet ccm_bruteforce(const HornCnf& h);

// char(h) as the union of min_b(models(h)) over the Horn basis. Guarded.
ModelSet ccm_via_basis(const HornCnf& h);

// Model-based deduction: every member of char_set satisfies the query. The
// caller guarantees char_set = char(H) for the Horn theory H in question.
bool deduce(const ModelSet& char_set, const HornCnf& query);
std::optional<Assignment> deduce_falsifier(const ModelSet& char_set, const HornCnf& query);

// The <=_b-least assignment satisfying t: t's variables forced, every other
// position copied from b.
Assignment min_b_of_term(const Term& t, const Assignment& b);

// {min_b(t) | t in dnf} reduced to its <=_b-minimal members.
ModelSet min_b_of_dnf(std::span<const Term> dnf, const Assignment& b);

// Least Horn upper bound of f, i.e. closure(f).
ModelSet closure_as_lub(const ModelSet& f);

// The same bound as the intersection of M_b(f) over the Horn basis.
// Extensional; guarded.
ModelSet lub_via_basis(const ModelSet& f);

}  // namespace hornkc

#include "hornkc/characteristic.hpp"

#include <algorithm>

namespace hornkc {

Assignment basis_element(int n, int i) {
  if (i < 0 || i > n) throw InvalidArgument("basis index out of range");
  const VarSet ones = full_mask(n);
  return Assignment(n, i == 0 ? ones : (ones & ~var_bit(i)));
}

Basis horn_basis(int n) {
  if (n < 1 || n > kMaxWidth) throw InvalidArgument("horn_basis: width out of range");
  std::vector<Assignment> elements;
  elements.reserve(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) elements.push_back(basis_element(n, i));
  return Basis(n, std::move(elements));
}

ModelSet char_of_set(const ModelSet& s) {
  std::vector<Assignment> out;
  for (const auto& u : s) {
    bool any = false;
    VarSet meet = ~VarSet{0};
    for (const auto& y : s) {
      if (y != u && is_subset(u.ones(), y.ones())) {
        meet &= y.ones();
        any = true;
      }
    }
    if (!any || meet != u.ones()) out.push_back(u);
  }
  return ModelSet(s.width(), std::move(out));
}

ModelSet ccm_bruteforce(const HornCnf& h) { return char_of_set(models(h)); }

ModelSet ccm_via_basis(const HornCnf& h) {
  const ModelSet f = models(h);
  ModelSet out(h.width());
  const Basis basis = horn_basis(h.width());
  for (const auto& b : basis.elements()) {
    for (const auto& z : min_b(f, b)) out.insert(z);
  }
  return out;
}

std::optional<Assignment> deduce_falsifier(const ModelSet& char_set, const HornCnf& query) {
  require_same_width(query.width(), char_set.width(), "deduce");
  for (const auto& x : char_set) {
    if (!evaluate(query, x)) return x;
  }
  return std::nullopt;
}

bool deduce(const ModelSet& char_set, const HornCnf& query) {
  return !deduce_falsifier(char_set, query).has_value();
}

Assignment min_b_of_term(const Term& t, const Assignment& b) {
  if (!is_subset(t.variables(), full_mask(b.width()))) {
    throw WidthMismatch(b.width(), 64 - std::countl_zero(t.variables()), "min_b_of_term");
  }
  return Assignment(b.width(), (b.ones() & ~t.variables()) | t.positive());
}

ModelSet min_b_of_dnf(std::span<const Term> dnf, const Assignment& b) {
  ModelSet points(b.width());
  for (const auto& t : dnf) points.insert(min_b_of_term(t, b));
  return min_b(points, b);
}

ModelSet closure_as_lub(const ModelSet& f) { return closure(f); }

ModelSet lub_via_basis(const ModelSet& f) {
  require_within_guard(f.width(), "lub_via_basis");
  ModelSet acc = all_assignments(f.width());
  const Basis basis = horn_basis(f.width());
  for (const auto& b : basis.elements()) {
    const ModelSet ext = monotone_extension(f, b);
    std::vector<Assignment> kept;
    std::set_intersection(acc.begin(), acc.end(), ext.begin(), ext.end(), std::back_inserter(kept));
    acc = ModelSet(f.width(), std::move(kept));
  }
  return acc;
}

}  // namespace hornkc

#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "hornkc/error.hpp"

namespace hornkc {

// A set of variables x1..xn packed into a word: bit (i-1) <=> x_i.
using VarSet = std::uint64_t;

inline constexpr int kMaxWidth = 64;

constexpr VarSet var_bit(int var) { return VarSet{1} << (var - 1); }

constexpr VarSet full_mask(int width) {
  return width >= 64 ? ~VarSet{0} : (VarSet{1} << width) - 1;
}

constexpr bool is_subset(VarSet a, VarSet b) { return (a & ~b) == 0; }

inline int lowest_var(VarSet s) { return std::countr_zero(s) + 1; }

// Ascending 1-based variable indices of s.
std::vector<int> vars_of(VarSet s);
VarSet varset_of(std::initializer_list<int> vars);

// Lexicographic order on the ascending variable lists of a and b.
bool lex_less(VarSet a, VarSet b);

// A fixed-width truth assignment. Position 1 is x1, written leftmost, and is
// the most significant position of the total order (so "0101" < "1000").
class Assignment {
 public:
  Assignment(int width, VarSet ones);

  static Assignment from_string(std::string_view bits);
  static Assignment all_zeros(int width) { return Assignment(width, 0); }
  static Assignment all_ones(int width) { return Assignment(width, full_mask(width)); }

  int width() const { return width_; }
  VarSet ones() const { return ones_bits_; }
  VarSet zeros_set() const { return ~ones_bits_ & full_mask(width_); }

  bool test(int var) const { return (ones_bits_ & var_bit(var)) != 0; }
  Assignment with(int var, bool value) const;
  int weight() const { return std::popcount(ones_bits_); }

  std::string to_string() const;

  friend bool operator==(const Assignment&, const Assignment&) = default;
  friend std::strong_ordering operator<=>(const Assignment& a, const Assignment& b);

 private:
  int width_;
  VarSet ones_bits_;
};

int weight(const Assignment& a);

// Bitwise and.
Assignment intersect(const Assignment& a, const Assignment& b);

// Componentwise x <= y.
bool leq(const Assignment& x, const Assignment& y);

// x <=_b y, i.e. (x xor b) <= (y xor b).
bool leq_b(const Assignment& x, const Assignment& y, const Assignment& b);

// A set of same-width assignments kept in lexicographic order.
class ModelSet {
 public:
  explicit ModelSet(int width);
  ModelSet(int width, std::vector<Assignment> members);

  // Convenience for tests and examples; width is taken from the first string,
  // so an empty list needs the explicit-width overload.
  static ModelSet of(std::initializer_list<std::string_view> bits);
  static ModelSet of(int width, std::initializer_list<std::string_view> bits);

  int width() const { return width_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  bool contains(const Assignment& x) const;
  bool insert(const Assignment& x);
  bool erase(const Assignment& x);

  const std::vector<Assignment>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool is_subset_of(const ModelSet& other) const;

  // Lines in canonical order, for messages and debugging.
  std::string to_string() const;

  friend bool operator==(const ModelSet&, const ModelSet&) = default;

 private:
  int width_;
  std::vector<Assignment> members_;
};

ModelSet set_union(const ModelSet& a, const ModelSet& b);
ModelSet set_difference(const ModelSet& a, const ModelSet& b);

// Every assignment of the given width. Guarded.
ModelSet all_assignments(int width);

// Intersection of all members; throws EmptySetError on an empty set.
Assignment intersect(const ModelSet& s);

ModelSet closure(const ModelSet& s);

bool is_redundant(const ModelSet& s);

// x is in closure(g): the intersection of the members above x is x itself.
bool closure_member(const Assignment& x, const ModelSet& g);

// {x | x >=_b z}. Guarded.
ModelSet monotone_extension_point(const Assignment& z, const Assignment& b);

// {x | x >=_b z for some z in f}. Guarded.
ModelSet monotone_extension(const ModelSet& f, const Assignment& b);

// The <=_b-minimal members of f.
ModelSet min_b(const ModelSet& f, const Assignment& b);

void require_same_width(int expected, int actual, std::string_view where);

}  // namespace hornkc

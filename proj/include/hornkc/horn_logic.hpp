#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hornkc/model_core.hpp"

namespace hornkc {

struct Literal {
  int var;  // 1-based
  bool positive;

  friend bool operator==(const Literal&, const Literal&) = default;
};

inline Literal pos(int var) { return {var, true}; }
inline Literal neg(int var) { return {var, false}; }

// A clause with at most one positive literal, stored as body -> head. A
// clause without head is all-negative; with an empty body as well it is the
// empty clause (constant false).
class HornClause {
 public:
  HornClause(VarSet body, std::optional<int> head);

  // Rejects repeated variables, tautologies and a second positive literal.
  static HornClause from_literals(std::span<const Literal> literals);

  static HornClause implication(std::initializer_list<int> body, int head);
  static HornClause negative(std::initializer_list<int> body);
  static HornClause empty_clause() { return HornClause(0, std::nullopt); }

  VarSet body() const { return body_; }
  std::optional<int> head() const {
    return head_ == 0 ? std::nullopt : std::optional<int>(head_);
  }
  bool has_head() const { return head_ != 0; }
  bool is_empty() const { return body_ == 0 && head_ == 0; }
  VarSet variables() const { return head_ == 0 ? body_ : (body_ | var_bit(head_)); }
  std::size_t literal_count() const;
  int max_var() const;

  // Body literals ascending, then the head.
  std::vector<Literal> literals() const;

  bool satisfied_by(const Assignment& x) const;
  bool satisfied_by(VarSet ones) const {
    return !is_subset(body_, ones) || (head_ != 0 && (ones & var_bit(head_)) != 0);
  }

  // "-2 -3 4": body then head, signed 1-based indices.
  std::string to_string() const;

  friend bool operator==(const HornClause&, const HornClause&) = default;
  friend bool operator<(const HornClause& a, const HornClause& b);

 private:
  VarSet body_;
  int head_;  // 0 = none
};

// A conjunction of Horn clauses over x1..x_width, canonicalized on
// construction: clauses sorted and duplicates dropped.
class HornCnf {
 public:
  HornCnf(int width, std::vector<HornClause> clauses);

  static HornCnf constant_true(int width) { return HornCnf(width, {}); }
  static HornCnf constant_false(int width) {
    return HornCnf(width, {HornClause::empty_clause()});
  }

  int width() const { return width_; }
  const std::vector<HornClause>& clauses() const { return clauses_; }
  std::size_t size() const { return clauses_.size(); }
  bool empty() const { return clauses_.empty(); }

  // Sum of clause lengths; the input size used by the budget polynomial.
  std::size_t literal_count() const;

  bool all_negative() const;

  std::string to_string() const;

  friend bool operator==(const HornCnf&, const HornCnf&) = default;

 private:
  int width_;
  std::vector<HornClause> clauses_;
};

// A conjunction of literals; the empty term is constant true.
class Term {
 public:
  Term() = default;
  Term(VarSet positive, VarSet negative);
  static Term from_literals(std::span<const Literal> literals);

  VarSet positive() const { return pos_; }
  VarSet negative() const { return neg_; }
  VarSet variables() const { return pos_ | neg_; }
  std::size_t size() const;
  bool empty() const { return pos_ == 0 && neg_ == 0; }

  std::vector<Literal> literals() const;
  bool satisfied_by(VarSet ones) const { return is_subset(pos_, ones) && (neg_ & ones) == 0; }
  bool satisfied_by(const Assignment& x) const { return satisfied_by(x.ones()); }

  // Every literal of this term occurs in `other`.
  bool absorbs(const Term& other) const {
    return is_subset(pos_, other.pos_) && is_subset(neg_, other.neg_);
  }

  std::string to_string() const;

  friend bool operator==(const Term&, const Term&) = default;
  friend bool operator<(const Term& a, const Term& b);

 private:
  VarSet pos_ = 0;
  VarSet neg_ = 0;
};

bool evaluate(const HornCnf& h, const Assignment& x);

// All satisfying assignments. Guarded.
ModelSet models(const HornCnf& h);

struct ChainResult {
  VarSet derived;
  bool contradiction;
};

// Unit propagation from the assumed-true variables, linear in the size of h.
ChainResult forward_chain(const HornCnf& h, VarSet assumed);

bool entails_clause(const HornCnf& h, const HornClause& d);
bool entails(const HornCnf& h1, const HornCnf& h2);
bool equivalent(const HornCnf& h1, const HornCnf& h2);
bool is_prime_implicate(const HornCnf& h, const HornClause& d);

// A representation that depends only on models(h): the Duquenne-Guigues
// implication basis read back as clauses. Equivalent inputs map to identical
// outputs. Width must be at most 63.
HornCnf canonical_form(const HornCnf& h);

}  // namespace hornkc

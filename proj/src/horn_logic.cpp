#include "hornkc/horn_logic.hpp"

#include <algorithm>

namespace hornkc {

// ---------------------------------------------------------------------------
// HornClause

HornClause::HornClause(VarSet body, std::optional<int> head) : body_(body), head_(head.value_or(0)) {
  if (head && (*head < 1 || *head > kMaxWidth)) {
    throw InvalidArgument("clause head index out of range: " + std::to_string(*head));
  }
  if (head_ != 0 && (body_ & var_bit(head_)) != 0) {
    throw InvalidArgument("tautological clause: x" + std::to_string(head_) +
                          " occurs in body and head");
  }
}

HornClause HornClause::from_literals(std::span<const Literal> literals) {
  VarSet body = 0;
  VarSet seen = 0;
  std::optional<int> head;
  for (const auto& lit : literals) {
    if (lit.var < 1 || lit.var > kMaxWidth) {
      throw InvalidArgument("literal index out of range: " + std::to_string(lit.var));
    }
    const VarSet bit = var_bit(lit.var);
    if (seen & bit) {
      const bool taut = lit.positive ? (body & bit) != 0 : (head && *head == lit.var);
      throw InvalidArgument(taut ? "tautological clause on x" + std::to_string(lit.var)
                                 : "variable x" + std::to_string(lit.var) + " repeated in clause");
    }
    seen |= bit;
    if (lit.positive) {
      if (head) throw InvalidArgument("clause has more than one positive literal");
      head = lit.var;
    } else {
      body |= bit;
    }
  }
  return HornClause(body, head);
}

HornClause HornClause::implication(std::initializer_list<int> body, int head) {
  return HornClause(varset_of(body), head);
}

HornClause HornClause::negative(std::initializer_list<int> body) {
  return HornClause(varset_of(body), std::nullopt);
}

std::size_t HornClause::literal_count() const {
  return static_cast<std::size_t>(std::popcount(body_)) + (head_ != 0 ? 1 : 0);
}

int HornClause::max_var() const {
  const VarSet vars = variables();
  return vars == 0 ? 0 : 64 - std::countl_zero(vars);
}

std::vector<Literal> HornClause::literals() const {
  std::vector<Literal> out;
  for (int v : vars_of(body_)) out.push_back(neg(v));
  if (head_ != 0) out.push_back(pos(head_));
  return out;
}

bool HornClause::satisfied_by(const Assignment& x) const { return satisfied_by(x.ones()); }

std::string HornClause::to_string() const {
  std::string out;
  for (const auto& lit : literals()) {
    if (!out.empty()) out += ' ';
    out += (lit.positive ? "" : "-") + std::to_string(lit.var);
  }
  return out.empty() ? "false" : out;
}

bool operator<(const HornClause& a, const HornClause& b) {
  if (a.body_ != b.body_) return lex_less(a.body_, b.body_);
  return a.head_ < b.head_;
}

// ---------------------------------------------------------------------------
// HornCnf

HornCnf::HornCnf(int width, std::vector<HornClause> clauses)
    : width_(width), clauses_(std::move(clauses)) {
  if (width < 1 || width > kMaxWidth) {
    throw InvalidArgument("Horn CNF width must lie in 1.." + std::to_string(kMaxWidth));
  }
  for (const auto& c : clauses_) {
    if (c.max_var() > width_) {
      throw InvalidArgument("clause " + c.to_string() + " mentions a variable beyond width " +
                            std::to_string(width_));
    }
  }
  std::sort(clauses_.begin(), clauses_.end());
  clauses_.erase(std::unique(clauses_.begin(), clauses_.end()), clauses_.end());
}

std::size_t HornCnf::literal_count() const {
  std::size_t n = 0;
  for (const auto& c : clauses_) n += c.literal_count();
  return n;
}

bool HornCnf::all_negative() const {
  return std::none_of(clauses_.begin(), clauses_.end(),
                      [](const HornClause& c) { return c.has_head(); });
}

std::string HornCnf::to_string() const {
  if (clauses_.empty()) return "true";
  std::string out;
  for (const auto& c : clauses_) out += "(" + c.to_string() + ")";
  return out;
}

// ---------------------------------------------------------------------------
// Term

Term::Term(VarSet positive, VarSet negative) : pos_(positive), neg_(negative) {
  if ((pos_ & neg_) != 0) throw InvalidArgument("inconsistent term: variable occurs with both signs");
}

Term Term::from_literals(std::span<const Literal> literals) {
  VarSet p = 0, n = 0;
  for (const auto& lit : literals) {
    if (lit.var < 1 || lit.var > kMaxWidth) throw InvalidArgument("literal index out of range");
    const VarSet bit = var_bit(lit.var);
    if ((p | n) & bit) {
      const bool clash = lit.positive ? (n & bit) != 0 : (p & bit) != 0;
      throw InvalidArgument(clash ? "inconsistent term on x" + std::to_string(lit.var)
                                  : "variable x" + std::to_string(lit.var) + " repeated in term");
    }
    (lit.positive ? p : n) |= bit;
  }
  return Term(p, n);
}

std::size_t Term::size() const { return static_cast<std::size_t>(std::popcount(pos_ | neg_)); }

std::vector<Literal> Term::literals() const {
  std::vector<Literal> out;
  for (int v : vars_of(pos_ | neg_)) out.push_back({v, (pos_ & var_bit(v)) != 0});
  return out;
}

std::string Term::to_string() const {
  std::string out;
  for (const auto& lit : literals()) {
    if (!out.empty()) out += ' ';
    out += (lit.positive ? "" : "-") + std::to_string(lit.var);
  }
  return out.empty() ? "true" : out;
}

bool operator<(const Term& a, const Term& b) {
  const VarSet va = a.variables(), vb = b.variables();
  if (va != vb) return lex_less(va, vb);
  return lex_less(a.pos_, b.pos_);
}

// ---------------------------------------------------------------------------
// Semantics

bool evaluate(const HornCnf& h, const Assignment& x) {
  require_same_width(h.width(), x.width(), "evaluate");
  const VarSet ones = x.ones();
  return std::all_of(h.clauses().begin(), h.clauses().end(),
                     [ones](const HornClause& c) { return c.satisfied_by(ones); });
}

ModelSet models(const HornCnf& h) {
  require_within_guard(h.width(), "models");
  std::vector<Assignment> out;
  const VarSet end = VarSet{1} << h.width();
  for (VarSet m = 0; m < end; ++m) {
    bool ok = true;
    for (const auto& c : h.clauses()) {
      if (!c.satisfied_by(m)) {
        ok = false;
        break;
      }
    }
    if (ok) out.emplace_back(h.width(), m);
  }
  return ModelSet(h.width(), std::move(out));
}

ChainResult forward_chain(const HornCnf& h, VarSet assumed) {
  if (!is_subset(assumed, full_mask(h.width()))) {
    throw InvalidArgument("forward_chain: assumed variable beyond width");
  }
  const auto& clauses = h.clauses();
  std::vector<std::vector<std::size_t>> watchers(static_cast<std::size_t>(h.width()) + 1);
  std::vector<int> missing(clauses.size());
  ChainResult r{assumed, false};
  std::vector<int> queue;

  auto fire = [&](const HornClause& c) {
    if (!c.has_head()) {
      r.contradiction = true;
      return;
    }
    const VarSet bit = var_bit(*c.head());
    if ((r.derived & bit) == 0) {
      r.derived |= bit;
      queue.push_back(*c.head());
    }
  };

  for (std::size_t k = 0; k < clauses.size(); ++k) {
    const VarSet pending = clauses[k].body() & ~assumed;
    missing[k] = std::popcount(pending);
    for (int v : vars_of(pending)) watchers[static_cast<std::size_t>(v)].push_back(k);
  }
  for (std::size_t k = 0; k < clauses.size(); ++k) {
    if (missing[k] == 0) fire(clauses[k]);
  }
  while (!queue.empty()) {
    const int v = queue.back();
    queue.pop_back();
    for (std::size_t k : watchers[static_cast<std::size_t>(v)]) {
      if (--missing[k] == 0) fire(clauses[k]);
    }
  }
  return r;
}

bool entails_clause(const HornCnf& h, const HornClause& d) {
  if (d.max_var() > h.width()) {
    throw InvalidArgument("entails_clause: clause " + d.to_string() + " exceeds width " +
                          std::to_string(h.width()));
  }
  const ChainResult r = forward_chain(h, d.body());
  if (r.contradiction) return true;
  return d.has_head() && (r.derived & var_bit(*d.head())) != 0;
}

bool entails(const HornCnf& h1, const HornCnf& h2) {
  require_same_width(h1.width(), h2.width(), "entails");
  return std::all_of(h2.clauses().begin(), h2.clauses().end(),
                     [&](const HornClause& d) { return entails_clause(h1, d); });
}

bool equivalent(const HornCnf& h1, const HornCnf& h2) {
  return entails(h1, h2) && entails(h2, h1);
}

bool is_prime_implicate(const HornCnf& h, const HornClause& d) {
  if (!entails_clause(h, d)) return false;
  // Implicates are closed under adding literals, so checking the subclauses
  // one literal shorter suffices.
  if (d.has_head() && entails_clause(h, HornClause(d.body(), std::nullopt))) return false;
  for (int v : vars_of(d.body())) {
    if (entails_clause(h, HornClause(d.body() & ~var_bit(v), d.head()))) return false;
  }
  return true;
}

}  // namespace hornkc

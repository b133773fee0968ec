#include <doctest.h>

#include <map>

#include "oracles.hpp"
#include "support.hpp"

using namespace hornkc;
using fixtures::bits;
using fixtures::W;
using fixtures::W_prime;

TEST_SUITE("horn_logic") {
  TEST_CASE("clause construction") {
    const std::vector<Literal> two_heads{pos(1), pos(2)};
    CHECK_THROWS_AS(HornClause::from_literals(two_heads), InvalidArgument);
    const std::vector<Literal> taut{neg(1), pos(1)};
    CHECK_THROWS_AS(HornClause::from_literals(taut), InvalidArgument);
    const std::vector<Literal> repeat{neg(2), neg(2)};
    CHECK_THROWS_AS(HornClause::from_literals(repeat), InvalidArgument);
    const std::vector<Literal> ok{neg(3), pos(4), neg(2)};
    const HornClause c = HornClause::from_literals(ok);
    CHECK(c.to_string() == "-2 -3 4");
    CHECK(c == HornClause::implication({2, 3}, 4));
    CHECK(HornClause::empty_clause().is_empty());
    CHECK_THROWS_AS(HornCnf(3, {HornClause::implication({1}, 4)}), InvalidArgument);
  }

  TEST_CASE("expressions are canonicalized") {
    const HornCnf a(4, {HornClause::implication({2, 3}, 1), HornClause::implication({2, 3}, 4),
                        HornClause::implication({3, 4}, 2), HornClause::implication({2, 3}, 1)});
    CHECK(a == W());
    CHECK(a.size() == 3);
  }

  TEST_CASE("evaluate") {
    CHECK(evaluate(W(), bits("0101")));
    CHECK_FALSE(evaluate(W(), bits("0111")));
    CHECK(evaluate(HornCnf::constant_true(3), bits("010")));
    CHECK_THROWS_AS(evaluate(W(), bits("010")), WidthMismatch);
  }

  TEST_CASE("models") {
    CHECK(models(W()) == ModelSet::of({"0000", "0001", "0010", "0100", "0101", "1000", "1001",
                                       "1010", "1100", "1101", "1111"}));
    CHECK(models(HornCnf::constant_false(3)).empty());
    CHECK(models(W_prime()) == ModelSet::of({"0000", "0001", "0100", "0110", "1100", "1110"}));
  }

  TEST_CASE("forward chaining") {
    const ChainResult cd = forward_chain(W(), varset_of({3, 4}));
    CHECK(is_subset(varset_of({1, 2}), cd.derived));
    CHECK_FALSE(cd.contradiction);
    const ChainResult bd = forward_chain(W(), varset_of({2, 4}));
    CHECK((bd.derived & var_bit(1)) == 0);
    CHECK(forward_chain(HornCnf::constant_true(4), varset_of({1, 3})).derived == varset_of({1, 3}));
    CHECK(forward_chain(W_prime(), varset_of({1, 4})).contradiction);
  }

  TEST_CASE("entailment") {
    CHECK(entails_clause(W(), HornClause::implication({3, 4}, 1)));
    CHECK_FALSE(entails_clause(W(), HornClause::implication({2, 4}, 1)));
    for (const auto& d : W().clauses()) CHECK(entails_clause(W(), d));
    CHECK(entails(W(), HornCnf(4, {HornClause::implication({3, 4}, 1)})));
    CHECK(entails(W(), W()));
    CHECK_FALSE(entails(W(), HornCnf(4, {HornClause::implication({2, 4}, 1)})));
  }

  TEST_CASE("equivalence") {
    const HornCnf w = W();
    std::vector<HornClause> reordered(w.clauses().rbegin(), w.clauses().rend());
    CHECK(equivalent(W(), HornCnf(4, reordered)));
    std::vector<HornClause> extra = W().clauses();
    extra.push_back(HornClause::implication({3, 4}, 1));
    CHECK(equivalent(W(), HornCnf(4, extra)));
    CHECK_FALSE(equivalent(W(), W_prime()));
    CHECK_THROWS_AS(equivalent(W(), HornCnf::constant_true(3)), WidthMismatch);
  }

  TEST_CASE("prime implicates") {
    CHECK(is_prime_implicate(W_prime(), HornClause::negative({3, 4})));
    CHECK_FALSE(is_prime_implicate(W_prime(), HornClause::negative({1, 2, 4})));
    CHECK_FALSE(is_prime_implicate(HornCnf::constant_true(3), HornClause::negative({1})));
  }

  TEST_CASE("terms") {
    CHECK_THROWS_AS(Term(var_bit(1), var_bit(1)), InvalidArgument);
    const Term t(var_bit(1), var_bit(3));
    CHECK(t.to_string() == "1 -3");
    CHECK(t.satisfied_by(bits("1001")));
    CHECK_FALSE(t.satisfied_by(bits("1011")));
    CHECK(Term(var_bit(1), 0).absorbs(t));
  }

  TEST_CASE("semantics agree with truth tables on random expressions") {
    const auto corpus = fixtures::horn_corpus(21, 200, 8);
    for (std::size_t k = 0; k < corpus.size(); ++k) {
      const HornCnf& h = corpus[k];
      const auto tt = oracle::truth_models(h);
      CHECK(oracle::bits_of(models(h)) == tt);
      CHECK(oracle::close_pairs(tt) == tt);
      for (VarSet x = 0; x <= full_mask(h.width()); ++x) {
        CHECK(evaluate(h, Assignment(h.width(), x)) == (tt.count(x) == 1));
      }
      const HornCnf& other = corpus[(k * 7 + 3) % corpus.size()];
      if (other.width() != h.width()) continue;
      const auto tt2 = oracle::truth_models(other);
      CHECK(entails(h, other) == std::includes(tt2.begin(), tt2.end(), tt.begin(), tt.end()));
    }
  }

  TEST_CASE("forward chaining is monotone and matches the closure") {
    const auto corpus = fixtures::horn_corpus(22, 100, 8);
    std::mt19937_64 rng(23);
    for (const auto& h : corpus) {
      const int n = h.width();
      std::uniform_int_distribution<VarSet> draw(0, full_mask(n));
      const VarSet a = draw(rng);
      const VarSet b = a | draw(rng);
      const ChainResult ra = forward_chain(h, a), rb = forward_chain(h, b);
      if (!rb.contradiction) CHECK(is_subset(ra.derived, rb.derived));
      if (ra.contradiction) CHECK(rb.contradiction);
      // The least model above a is the derived set, when it exists.
      const auto tt = oracle::truth_models(h);
      VarSet meet = full_mask(n);
      bool any = false;
      for (VarSet m : tt) {
        if (is_subset(a, m)) {
          meet &= m;
          any = true;
        }
      }
      CHECK(ra.contradiction == !any);
      if (any) CHECK(ra.derived == meet);
    }
  }

  TEST_CASE("prime implicate test matches truth tables") {
    const auto corpus = fixtures::horn_corpus(24, 60, 6);
    for (const auto& h : corpus) {
      const auto expected = oracle::horn_prime_implicates(h);
      const int n = h.width();
      for (VarSet body = 0; body <= full_mask(n); ++body) {
        for (int head = 0; head <= n; ++head) {
          if (head != 0 && (body & var_bit(head))) continue;
          const HornClause d(body, head == 0 ? std::nullopt : std::optional<int>(head));
          CHECK(is_prime_implicate(h, d) == (expected.count({body, head}) == 1));
        }
      }
    }
  }

  TEST_CASE("canonical form is the stem basis") {
    const auto corpus = fixtures::horn_corpus(25, 150, 6);
    for (const auto& h : corpus) {
      const HornCnf c = canonical_form(h);
      CHECK(equivalent(c, h));
      std::map<VarSet, VarSet> grouped;
      const VarSet bottom = VarSet{1} << h.width();
      for (const auto& d : c.clauses()) {
        VarSet& conclusion = grouped.try_emplace(d.body(), d.body()).first->second;
        conclusion |= d.has_head() ? var_bit(*d.head()) : (full_mask(h.width()) | bottom);
      }
      std::set<std::pair<VarSet, VarSet>> rules(grouped.begin(), grouped.end());
      CHECK(rules == oracle::stem_basis(h));
    }
  }

  TEST_CASE("canonical form depends only on the function") {
    const auto corpus = fixtures::horn_corpus(26, 100, 7);
    for (const auto& h : corpus) {
      // Add implied clauses and check the canonical form does not move.
      std::vector<HornClause> padded = h.clauses();
      for (VarSet body = 0; body <= full_mask(h.width()) && padded.size() < h.size() + 4; ++body) {
        const HornClause d(body, std::nullopt);
        if (entails_clause(h, d)) padded.push_back(d);
      }
      CHECK(canonical_form(HornCnf(h.width(), padded)) == canonical_form(h));
    }
  }
}

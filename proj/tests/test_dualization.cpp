#include <doctest.h>

#include "hornkc/characteristic.hpp"
#include "hornkc/dualization.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace hornkc;
using fixtures::bits;
using fixtures::W_prime;

namespace {

MonotoneCnf cnf(int n, std::initializer_list<std::initializer_list<int>> clauses) {
  std::vector<VarSet> sets;
  for (auto c : clauses) sets.push_back(varset_of(c));
  return MonotoneCnf(n, sets);
}

MonotoneDnf dnf(int n, std::initializer_list<std::initializer_list<int>> terms) {
  std::vector<VarSet> sets;
  for (auto t : terms) sets.push_back(varset_of(t));
  return MonotoneDnf(n, sets);
}

PiDecomposition w_prime_buckets() {
  const HornClause bd = HornClause::negative({2, 4});
  const HornClause cd = HornClause::negative({3, 4});
  const HornClause ad = HornClause::negative({1, 4});
  const HornClause a_b = HornClause::implication({1}, 2);
  const HornClause c_b = HornClause::implication({3}, 2);
  return PiDecomposition(4, {{bd, cd, ad}, {bd, cd}, {a_b, c_b, cd, ad}, {bd, ad}, {}});
}

std::vector<MonotoneCnf> monotone_corpus(std::uint64_t seed, int count, int max_width) {
  std::mt19937_64 rng(seed);
  std::vector<MonotoneCnf> out;
  for (int k = 0; k < count; ++k) {
    const int n = 1 + k % max_width;
    out.push_back(random_monotone_cnf(rng, n, 1 + k % 7, 1 + k % 4));
  }
  return out;
}

bool same_function(const MonotoneCnf& c, const MonotoneDnf& d) {
  for (VarSet x = 0; x <= full_mask(c.width()); ++x) {
    if (evaluate(c, x) != evaluate(d, x)) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("dualization") {
  TEST_CASE("dualize examples") {
    CHECK(dualize(cnf(3, {{1, 2}, {2, 3}})) == dnf(3, {{2}, {1, 3}}));
    CHECK(dualize(cnf(2, {{1, 2}})) == dnf(2, {{1}, {2}}));
    CHECK(dualize(cnf(3, {{1, 2}, {1, 3}, {2, 3}})) == dnf(3, {{1, 2}, {1, 3}, {2, 3}}));
    CHECK(dualize(MonotoneCnf(3)) == MonotoneDnf(3, {0}));
    CHECK(dualize(MonotoneCnf(3, {0})) == MonotoneDnf(3));
    for (auto engine : {DualizeEngine::kBaseline, DualizeEngine::kFredmanKhachiyan}) {
      CHECK(dualize(cnf(3, {{1, 2}, {2, 3}}), engine) == dnf(3, {{2}, {1, 3}}));
      CHECK(dualize(MonotoneCnf(3), engine) == MonotoneDnf(3, {0}));
      CHECK(dualize(MonotoneCnf(3, {0}), engine) == MonotoneDnf(3));
    }
  }

  TEST_CASE("both engines list the minimal transversals") {
    std::mt19937_64 rng(51);
    for (int k = 0; k < 300; ++k) {
      const int n = 1 + k % 10;
      const MonotoneCnf c = random_monotone_cnf(rng, n, 1 + k % 9, 1 + k % 5);
      const auto expected = oracle::minimal_transversals(c.sets(), n);
      CHECK(minimal_transversals(c.sets(), n, DualizeEngine::kBaseline) == expected);
      CHECK(minimal_transversals(c.sets(), n, DualizeEngine::kFredmanKhachiyan) == expected);
    }
  }

  TEST_CASE("dualization is an involution and preserves the function") {
    for (const auto& c : monotone_corpus(52, 200, 12)) {
      const MonotoneDnf d = dualize(c);
      CHECK(d.is_antichain());
      CHECK(same_function(c, d));
      const MonotoneCnf minimal(c.width(), minimize_family(c.sets()));
      if (c.width() <= 10) CHECK(dualize(d) == minimal);
    }
  }

  TEST_CASE("renaming") {
    const HornCnf anti = rename_anti_monotone(cnf(3, {{1, 2}, {2, 3}}));
    CHECK(anti == HornCnf(3, {HornClause::negative({1, 2}), HornClause::negative({2, 3})}));
    CHECK(rename_anti_monotone(MonotoneCnf(3)).empty());
    CHECK(rename_monotone(anti) == cnf(3, {{1, 2}, {2, 3}}));
    CHECK_THROWS_AS(rename_monotone(fixtures::W()), InvalidArgument);
  }

  TEST_CASE("dualization through ccm") {
    const MonotoneCnf c = cnf(3, {{1, 2}, {2, 3}});
    CHECK(ccm_bruteforce(rename_anti_monotone(c)) == ModelSet::of({"101", "010", "100", "001"}));
    CHECK(htr_via_ccm(c) == dnf(3, {{2}, {1, 3}}));
    CHECK(htr_via_ccm(MonotoneCnf(4)) == MonotoneDnf(4, {0}));
    CHECK(htr_via_ccm(MonotoneCnf(2, {0})) == MonotoneDnf(2));
  }

  TEST_CASE("dualization through sid") {
    CHECK(htr_via_sid(cnf(3, {{1, 2}, {2, 3}})) == dnf(3, {{2}, {1, 3}}));
    CHECK(htr_via_sid(MonotoneCnf(4)) == MonotoneDnf(4, {0}));
    CHECK(htr_via_sid(MonotoneCnf(2, {0})) == MonotoneDnf(2));
  }

  TEST_CASE("three dualization routes agree") {
    for (const auto& c : monotone_corpus(53, 100, 8)) {
      const MonotoneDnf d = dualize(c);
      CHECK(htr_via_ccm(c) == d);
      CHECK(htr_via_sid(c) == d);
    }
    for (const auto& c : monotone_corpus(54, 60, 10)) CHECK(htr_via_ccm(c) == dualize(c));
  }

  TEST_CASE("prime implicates of W' by basis element") {
    const PiDecomposition p = pi_decompose(W_prime());
    CHECK(p == w_prime_buckets());
    CHECK(all_horn_prime_implicates(W_prime()) == p.conjunction().clauses());
    CHECK(all_horn_prime_implicates(W_prime()).size() == 5);
    const PiDecomposition top = pi_decompose(HornCnf::constant_true(3));
    for (const auto& bucket : top.buckets()) CHECK(bucket.empty());
    CHECK(all_horn_prime_implicates(HornCnf::constant_true(3)).empty());
  }

  TEST_CASE("gap function has every all-negative choice as a prime implicate") {
    const HornCnf f = gen_gap_pi(3);
    const auto pis = all_horn_prime_implicates(f);
    int found = 0;
    for (VarSet choice = 0; choice < 8; ++choice) {
      VarSet body = 0;
      for (int i = 1; i <= 3; ++i) body |= (choice >> (i - 1)) & 1 ? var_bit(3 + i) : var_bit(i);
      found += std::count(pis.begin(), pis.end(), HornClause(body, std::nullopt)) == 1;
    }
    CHECK(found == 8);
  }

  TEST_CASE("characteristic models of W' from its prime implicates") {
    const PiCcmDetail d = ccm_from_all_pis_detailed(
        w_prime_buckets(), [](const MonotoneCnf& c) { return dualize(c); });
    CHECK(d.bucket_minima[0] == ModelSet::of({"0001", "1110"}));
    CHECK(d.bucket_minima[1] == ModelSet::of({"0001", "0110"}));
    CHECK(d.bucket_minima[2] == ModelSet::of({"1110", "0001"}));
    CHECK(d.bucket_minima[3] == ModelSet::of({"0001", "1100"}));
    CHECK(d.bucket_minima[4] == ModelSet::of({"1110"}));
    CHECK(d.characteristic == ModelSet::of({"0001", "0110", "1100", "1110"}));

    auto terms = [](std::initializer_list<Term> ts) {
      std::vector<Term> v(ts);
      std::sort(v.begin(), v.end());
      return v;
    };
    auto sorted = [](std::vector<Term> v) {
      std::sort(v.begin(), v.end());
      return v;
    };
    CHECK(sorted(d.bucket_dnfs[0]) == terms({Term(0, varset_of({1, 2, 3})), Term(0, var_bit(4))}));
    CHECK(sorted(d.bucket_dnfs[1]) == terms({Term(0, varset_of({2, 3})), Term(0, var_bit(4))}));
    CHECK(sorted(d.bucket_dnfs[2]) ==
          terms({Term(var_bit(2), var_bit(4)), Term(0, varset_of({1, 3}))}));
    CHECK(sorted(d.bucket_dnfs[3]) == terms({Term(0, varset_of({1, 2})), Term(0, var_bit(4))}));
    CHECK(d.bucket_dnfs[4] == terms({Term()}));
  }

  TEST_CASE("empty buckets describe the constant true function") {
    const PiDecomposition empty(3, std::vector<std::vector<HornClause>>(4));
    CHECK(ccm_from_all_pis(empty) == oracle::to_model_set(3, oracle::char_eq1(oracle::truth_models(
                                                                 HornCnf::constant_true(3)))));
  }

  TEST_CASE("a missing prime implicate is detected") {
    auto buckets = w_prime_buckets().buckets();
    std::erase(buckets[2], HornClause::negative({3, 4}));
    CHECK_THROWS_AS(ccm_from_all_pis(PiDecomposition(4, buckets)), IncompleteDecomposition);
  }

  TEST_CASE("prime implicates from characteristic models") {
    CHECK(sid_to_all_pis(ModelSet::of({"0001", "0110", "1100", "1110"})) == w_prime_buckets());
    const PiDecomposition top = sid_to_all_pis(ModelSet::of({"111"}));
    CHECK(models(top.conjunction()) == ModelSet::of({"111"}));
    CHECK_THROWS_AS(sid_to_all_pis(ModelSet(3)), InvalidArgument);
  }

  TEST_CASE("decomposition properties on random Horn expressions") {
    for (const auto& h : fixtures::horn_corpus(55, 200, 7)) {
      const int n = h.width();
      const PiDecomposition p = pi_decompose(h);
      const ModelSet f = models(h);

      std::set<oracle::Clause> flat;
      for (const auto& bucket : p.buckets())
        for (const auto& d : bucket) flat.insert({d.body(), d.head().value_or(0)});
      CHECK(flat == oracle::horn_prime_implicates(h));

      ModelSet meet = all_assignments(n);
      for (int i = 0; i <= n; ++i) {
        const ModelSet bucket_models = models(HornCnf(n, p.bucket(i)));
        if (!f.empty()) CHECK(bucket_models == monotone_extension(f, basis_element(n, i)));
        std::vector<Assignment> kept;
        std::set_intersection(meet.begin(), meet.end(), bucket_models.begin(), bucket_models.end(),
                              std::back_inserter(kept));
        meet = ModelSet(n, kept);
      }
      CHECK(meet == f);

      const PiCcmDetail d =
          ccm_from_all_pis_detailed(p, [](const MonotoneCnf& c) { return dualize(c); });
      CHECK(d.characteristic == ccm_bruteforce(h));
      for (int i = 0; i <= n; ++i) {
        CHECK(d.bucket_minima[static_cast<std::size_t>(i)].size() ==
              d.bucket_dnfs[static_cast<std::size_t>(i)].size());
      }
      if (!f.empty()) {
        const PiDecomposition back = sid_to_all_pis(d.characteristic);
        CHECK(back == p);
        CHECK(equivalent(back.conjunction(), h));
      }
    }
  }

  TEST_CASE("anti-monotone expressions only need bucket 0") {
    for (const auto& c : monotone_corpus(56, 100, 7)) {
      if (c.sets().empty() || c.sets().front() == 0) continue;
      const HornCnf h = rename_anti_monotone(c);
      const PiDecomposition p = pi_decompose(h);
      CHECK(rename_monotone(HornCnf(c.width(), p.bucket(0))) ==
            MonotoneCnf(c.width(), minimize_family(c.sets())));
      CHECK(equivalent(HornCnf(c.width(), p.bucket(0)), h));
      const PiCcmDetail d = ccm_from_all_pis_detailed(
          p, [](const MonotoneCnf& m) { return htr_via_ccm(m); });
      CHECK(d.bucket_minima[0] == min_b(ccm_bruteforce(h), Assignment::all_ones(c.width())));
    }
  }

  TEST_CASE("consensus enumerates the prime implicants") {
    const F2Instance f2 = gen_f2_instance(2);
    const auto pis = prime_implicants_consensus(f2.cnf);
    std::set<oracle::Lit> got;
    for (const auto& t : pis) got.insert({t.positive(), t.negative()});
    CHECK(got == oracle::prime_implicants(f2.cnf));
    for (const auto& t : f2.dnf) {
      CHECK(std::count(pis.begin(), pis.end(), t) == 1);
    }
    CHECK(pis.size() > f2.dnf.size());
    CHECK(prime_implicants_consensus(HornCnf::constant_true(3)) == std::vector<Term>{Term()});
    CHECK(prime_implicants_consensus(HornCnf::constant_false(3)).empty());

    for (const auto& h : fixtures::horn_corpus(57, 150, 6)) {
      std::set<oracle::Lit> mine;
      for (const auto& t : prime_implicants_consensus(h)) mine.insert({t.positive(), t.negative()});
      CHECK(mine == oracle::prime_implicants(h));
    }
  }

  TEST_CASE("prime implicants of anti-monotone functions match their top minima") {
    for (const auto& c : monotone_corpus(58, 80, 7)) {
      const HornCnf h = rename_anti_monotone(c);
      const auto pis = prime_implicants_consensus(h);
      const ModelSet top = min_b(models(h), Assignment::all_ones(c.width()));
      CHECK(pis.size() == top.size());
      for (const auto& t : pis) {
        CHECK(t.positive() == 0);
        CHECK(top.contains(Assignment(c.width(), full_mask(c.width()) & ~t.negative())));
      }
    }
  }

  TEST_CASE("minimum DNF size") {
    for (const auto& h : fixtures::horn_corpus(59, 120, 4)) {
      CHECK(minimum_dnf_size(h) == oracle::min_dnf_size(h));
    }
    CHECK(minimum_dnf_size(HornCnf::constant_true(3)) == 1);
    CHECK(minimum_dnf_size(HornCnf::constant_false(3)) == 0);
  }

  TEST_CASE("size chain: prime implicants, DNF, characteristic models") {
    for (const auto& h : fixtures::horn_corpus(60, 200, 8, 2)) {
      const std::size_t pis = prime_implicants_consensus(h).size();
      const std::size_t dnf_size = minimum_dnf_size(h);
      const std::size_t chars = ccm_bruteforce(h).size();
      CHECK(pis >= dnf_size);
      CHECK(dnf_size * static_cast<std::size_t>(h.width()) >= chars);
    }
  }
}

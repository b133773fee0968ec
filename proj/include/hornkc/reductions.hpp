#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "hornkc/horn_logic.hpp"
#include "hornkc/model_core.hpp"

namespace hornkc {

// Answer of a decision procedure; deciders that promise a counterexample
// attach it to a "no".
struct Verdict {
  bool yes;
  std::optional<Assignment> witness;

  static Verdict accept() { return {true, std::nullopt}; }
  static Verdict reject(std::optional<Assignment> w = std::nullopt) { return {false, std::move(w)}; }
};

// Deterministic step budget standing in for the polynomial time bound a
// reduction is allowed to give its subroutine:
//   step_limit = coefficient * n^2 * (input + output + 1)^2.
struct Budget {
  std::size_t step_limit;

  static constexpr std::size_t kDefaultCoefficient = 16;
  static Budget polynomial(int width, std::size_t input_size, std::size_t output_size,
                           std::size_t coefficient = kDefaultCoefficient);
  static Budget unlimited() { return {std::numeric_limits<std::size_t>::max()}; }
};

using CmiOracle = std::function<bool(const HornCnf&, const ModelSet&)>;
using CmicOracle = std::function<Verdict(const HornCnf&, const ModelSet&)>;
using ModelSink = std::function<bool(const Assignment&)>;  // false stops the stream
using CcmStream = std::function<void(const HornCnf&, const ModelSink&)>;
using SidSubroutine = std::function<std::optional<HornCnf>(const ModelSet&, std::size_t)>;

// Throws PreconditionError unless every member of g satisfies h.
void require_models_of(const HornCnf& h, const ModelSet& g);

// Reference CMI decider: char(h) is contained in g, decided as
// models(h) being contained in closure(g). Guarded.
bool cmi(const HornCnf& h, const ModelSet& g);

// h with x_i := 1; the remaining variables are renumbered downwards.
HornCnf substitute_true(const HornCnf& h, int i);

// Members of g with bit i set, with position i projected out.
ModelSet restrict_models_true(const ModelSet& g, int i);

struct CmicProbe {
  int variable;         // original index of the variable substituted with 1
  HornCnf reduced;      // the expression after substitution
  ModelSet restricted;  // the model set after restriction
  bool oracle_yes;
};

struct CmicTrace {
  std::vector<CmicProbe> probes;
  std::size_t oracle_calls = 0;
};

// CMI with counterexample, built on a CMI oracle. Variables are probed once
// each in ascending order; a "no" fixes the variable to 1 and continues on
// the substituted instance, a "yes" fixes it to 0. At most n oracle calls.
// The witness x on "no" lies in char(h) \ g.
Verdict cmic(const HornCnf& h, const ModelSet& g, const CmiOracle& oracle = cmi,
             CmicTrace* trace = nullptr);

// cmic with the reference CMI oracle.
Verdict cmic_reference(const HornCnf& h, const ModelSet& g);

struct SidStats {
  std::size_t equivalence_queries = 0;
  std::size_t membership_queries = 0;
  std::size_t positive_counterexamples = 0;
  std::size_t negative_counterexamples = 0;
};

// Structure identification: a Horn CNF whose models are closure(g). Runs a
// membership/equivalence-query Horn learner; membership is closure
// membership, equivalence first evaluates the hypothesis on g and then asks
// the CMIC oracle. Returns nullopt when the number of equivalence queries
// exceeds step_limit.
std::optional<HornCnf> sid_bounded(const ModelSet& g, const CmicOracle& oracle,
                                   std::size_t step_limit, SidStats* stats = nullptr);

HornCnf sid(const ModelSet& g, const CmicOracle& oracle = cmic_reference,
            SidStats* stats = nullptr);

// The step budget cmi_via_sid grants for an instance.
Budget sid_budget(const HornCnf& h, const ModelSet& g,
                  std::size_t coefficient = Budget::kDefaultCoefficient);

// CMI by running SID on g under a budget sized from h, then comparing.
bool cmi_via_sid(const HornCnf& h, const ModelSet& g, const SidSubroutine& sid_routine,
                 const Budget& budget);
bool cmi_via_sid(const HornCnf& h, const ModelSet& g);

// CMI by consuming an incremental CCM stream: stop with "no" once a
// produced model is outside g or more than |g| models arrive.
bool cmi_via_ccm(const HornCnf& h, const ModelSet& g, const CcmStream& stream);
bool cmi_via_ccm(const HornCnf& h, const ModelSet& g);

// CCM by repeated CMIC calls starting from the empty set; each "no" yields
// the next characteristic model.
void ccm_via_cmic_stream(const HornCnf& h, const CmicOracle& oracle, const ModelSink& sink);
ModelSet ccm_via_cmic(const HornCnf& h, const CmicOracle& oracle = cmic_reference,
                      std::size_t* iterations = nullptr);

}  // namespace hornkc

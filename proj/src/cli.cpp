#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "hornkc/characteristic.hpp"
#include "hornkc/cli_io.hpp"
#include "hornkc/reductions.hpp"

namespace hornkc {

namespace {

class InputFileError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputFileError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

class Output {
 public:
  explicit Output(std::ostream& fallback) : fallback_(fallback) {}

  void attach(CLI::App* cmd) { cmd->add_option("-o,--output", path_, "Write the result to a file"); }

  void write(const std::string& text) const {
    if (path_.empty()) {
      fallback_ << text;
      return;
    }
    std::ofstream file(path_, std::ios::binary);
    if (!file) throw InputFileError("cannot write " + path_);
    file << text;
  }

 private:
  std::ostream& fallback_;
  std::string path_;
};

int report(const Verdict& v, std::ostream& out) {
  if (v.yes) {
    out << "yes\n";
    return kExitYes;
  }
  out << (v.witness ? v.witness->to_string() : std::string("no")) << "\n";
  return kExitNo;
}

int report(bool yes, std::ostream& out) {
  out << (yes ? "yes\n" : "no\n");
  return yes ? kExitYes : kExitNo;
}

HornCnf read_horn_or_pis(const std::string& path, std::optional<PiDecomposition>& pis) {
  const std::string text = read_file(path);
  if (has_problem_line(text, "horn-pi")) {
    pis = parse_pi_listing(text);
    return pis->conjunction();
  }
  return parse_horn(text);
}

// Restores the process-wide guard when the command finishes.
class GuardScope {
 public:
  GuardScope() : saved_(brute_force_limit()) {}
  ~GuardScope() { set_brute_force_limit(saved_); }
  GuardScope(const GuardScope&) = delete;
  GuardScope& operator=(const GuardScope&) = delete;

 private:
  int saved_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  GuardScope guard_scope;
  if (const char* env = std::getenv("HORNKC_GUARD")) {
    try {
      set_brute_force_limit(std::stoi(env));
    } catch (const std::exception&) {
      err << "hornkc: HORNKC_GUARD must be an integer in 1..62\n";
      return kExitUsage;
    }
  }

  CLI::App app{"Horn expressions and characteristic models", "hornkc"};
  app.require_subcommand(1);
  std::function<int()> action;

  // models
  std::string horn_path, models_path, second_path;
  auto* models_cmd = app.add_subcommand("models", "List the models of a Horn expression");
  models_cmd->add_option("horn", horn_path)->required();
  Output models_out(out);
  models_out.attach(models_cmd);
  models_cmd->callback([&] {
    action = [&] {
      models_out.write(serialize_models(models(parse_horn(read_file(horn_path)))));
      return kExitYes;
    };
  });

  // ccm
  std::string ccm_route = "eq1";
  auto* ccm_cmd = app.add_subcommand("ccm", "Characteristic models of a Horn expression");
  ccm_cmd->add_option("horn", horn_path, "Horn file, or a prime implicate listing")->required();
  ccm_cmd->add_option("--route", ccm_route)
      ->check(CLI::IsMember({"eq1", "basis", "via-cmic", "from-pis"}));
  Output ccm_out(out);
  ccm_out.attach(ccm_cmd);
  ccm_cmd->callback([&] {
    action = [&] {
      std::optional<PiDecomposition> pis;
      const HornCnf h = read_horn_or_pis(horn_path, pis);
      ModelSet result(h.width());
      if (ccm_route == "eq1") {
        result = ccm_bruteforce(h);
      } else if (ccm_route == "basis") {
        result = ccm_via_basis(h);
      } else if (ccm_route == "via-cmic") {
        result = ccm_via_cmic(h);
      } else {
        result = ccm_from_all_pis(pis ? *pis : pi_decompose(h));
      }
      ccm_out.write(serialize_models(result));
      return kExitYes;
    };
  });

  // sid
  std::string sid_route = "learner";
  auto* sid_cmd = app.add_subcommand("sid", "A Horn expression for the closure of a model set");
  sid_cmd->add_option("models", models_path)->required();
  sid_cmd->add_option("--route", sid_route)->check(CLI::IsMember({"learner", "via-pis"}));
  Output sid_out(out);
  sid_out.attach(sid_cmd);
  sid_cmd->callback([&] {
    action = [&] {
      const ModelSet g = parse_models(read_file(models_path));
      HornCnf h = HornCnf::constant_false(g.width());
      if (!g.empty()) {
        h = sid_route == "learner" ? sid(g) : sid_to_all_pis(g).conjunction();
      }
      sid_out.write(serialize_horn(canonical_form(h)));
      return kExitYes;
    };
  });

  // cmi
  std::string cmi_route = "reference";
  auto* cmi_cmd = app.add_subcommand("cmi", "Is the model set exactly the characteristic set?");
  cmi_cmd->add_option("horn", horn_path)->required();
  cmi_cmd->add_option("models", models_path)->required();
  cmi_cmd->add_option("--route", cmi_route)
      ->check(CLI::IsMember({"reference", "via-sid", "via-ccm"}));
  cmi_cmd->callback([&] {
    action = [&] {
      const HornCnf h = parse_horn(read_file(horn_path));
      const ModelSet g = parse_models(read_file(models_path));
      bool yes = false;
      if (cmi_route == "reference") {
        yes = cmi(h, g);
      } else if (cmi_route == "via-sid") {
        yes = cmi_via_sid(h, g);
      } else {
        yes = cmi_via_ccm(h, g);
      }
      return report(yes, out);
    };
  });

  // cmic
  auto* cmic_cmd = app.add_subcommand("cmic", "Like cmi, printing a missing characteristic model");
  cmic_cmd->add_option("horn", horn_path)->required();
  cmic_cmd->add_option("models", models_path)->required();
  cmic_cmd->callback([&] {
    action = [&] {
      return report(cmic(parse_horn(read_file(horn_path)), parse_models(read_file(models_path))),
                    out);
    };
  });

  // eoc
  auto* eoc_cmd = app.add_subcommand("eoc", "Does the Horn expression entail the closure?");
  eoc_cmd->add_option("horn", horn_path)->required();
  eoc_cmd->add_option("models", models_path)->required();
  eoc_cmd->callback([&] {
    action = [&] {
      return report(
          eoc_decide(parse_horn(read_file(horn_path)), parse_models(read_file(models_path))), out);
    };
  });

  // deduce
  auto* deduce_cmd = app.add_subcommand("deduce", "Answer a Horn query from characteristic models");
  deduce_cmd->add_option("models", models_path, "Characteristic model file")->required();
  deduce_cmd->add_option("query", second_path, "Horn query file")->required();
  deduce_cmd->callback([&] {
    action = [&] {
      const ModelSet char_set = parse_models(read_file(models_path));
      const HornCnf query = parse_horn(read_file(second_path));
      const auto falsifier = deduce_falsifier(char_set, query);
      return report(falsifier ? Verdict::reject(*falsifier) : Verdict::accept(), out);
    };
  });

  // dualize
  std::string engine = "baseline";
  std::string mono_path;
  auto* dualize_cmd = app.add_subcommand("dualize", "Translate a monotone CNF to DNF or back");
  dualize_cmd->add_option("file", mono_path)->required();
  dualize_cmd->add_option("--engine", engine)->check(CLI::IsMember({"baseline", "fk"}));
  Output dualize_out(out);
  dualize_out.attach(dualize_cmd);
  dualize_cmd->callback([&] {
    action = [&] {
      const auto doc = parse_monotone(read_file(mono_path));
      const DualizeEngine e =
          engine == "fk" ? DualizeEngine::kFredmanKhachiyan : DualizeEngine::kBaseline;
      if (const auto* cnf = std::get_if<MonotoneCnf>(&doc)) {
        dualize_out.write(serialize_monotone(dualize(*cnf, e)));
      } else {
        dualize_out.write(serialize_monotone(dualize(std::get<MonotoneDnf>(doc), e)));
      }
      return kExitYes;
    };
  });

  // pi
  auto* pi_cmd = app.add_subcommand("pi", "Prime implicates grouped by basis element");
  pi_cmd->add_option("horn", horn_path)->required();
  Output pi_out(out);
  pi_out.attach(pi_cmd);
  pi_cmd->callback([&] {
    action = [&] {
      pi_out.write(serialize_pi_listing(pi_decompose(parse_horn(read_file(horn_path)))));
      return kExitYes;
    };
  });

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "Generate instances");
  gen_cmd->require_subcommand(1);
  Output gen_out(out);
  int size = 0, width = 0, clauses = 0, monotone_count = 0, anti_count = 0;
  std::uint64_t seed = 1;

  auto* gap_cmd = gen_cmd->add_subcommand("gap-pi", "Gap function over 2m variables");
  gap_cmd->add_option("-m", size)->required();
  gen_out.attach(gap_cmd);
  gap_cmd->callback([&] {
    action = [&] {
      gen_out.write(serialize_horn(gen_gap_pi(size)));
      return kExitYes;
    };
  });

  auto* f1_cmd = gen_cmd->add_subcommand("f1", "Block function over n variables (n square)");
  f1_cmd->add_option("-n", size)->required();
  gen_out.attach(f1_cmd);
  f1_cmd->callback([&] {
    action = [&] {
      gen_out.write(serialize_horn(gen_f1(size)));
      return kExitYes;
    };
  });

  auto* f2_cmd = gen_cmd->add_subcommand("f2", "Multiplied-out function over 2m variables");
  f2_cmd->add_option("-m", size)->required();
  gen_out.attach(f2_cmd);
  f2_cmd->callback([&] {
    action = [&] {
      gen_out.write(serialize_horn(gen_f2(size)));
      return kExitYes;
    };
  });

  auto* m3_cmd = gen_cmd->add_subcommand("m3sat", "Random monotone 3-SAT instance");
  m3_cmd->add_option("--width", width)->required()->check(CLI::Range(1, 64));
  m3_cmd->add_option("--monotone", monotone_count)->required()->check(CLI::NonNegativeNumber);
  m3_cmd->add_option("--anti", anti_count)->required()->check(CLI::NonNegativeNumber);
  m3_cmd->add_option("--seed", seed);
  gen_out.attach(m3_cmd);
  m3_cmd->callback([&] {
    action = [&] {
      std::mt19937_64 rng(seed);
      gen_out.write(serialize_m3sat(random_m3sat(rng, width, monotone_count, anti_count)));
      return kExitYes;
    };
  });

  auto* horn_cmd = gen_cmd->add_subcommand("horn", "Random Horn expression");
  horn_cmd->add_option("--width", width)->required()->check(CLI::Range(1, 64));
  horn_cmd->add_option("--clauses", clauses, "Upper bound on the clause count")
      ->check(CLI::PositiveNumber);
  horn_cmd->add_option("--seed", seed);
  gen_out.attach(horn_cmd);
  horn_cmd->callback([&] {
    action = [&] {
      std::mt19937_64 rng(seed);
      RandomHornParams params;
      params.max_clauses = clauses;
      gen_out.write(serialize_horn(random_horn(rng, width, params)));
      return kExitYes;
    };
  });

  // reduce-eoc
  std::string sat_path, horn_out_path, models_out_path;
  auto* reduce_cmd = app.add_subcommand("reduce-eoc", "Monotone 3-SAT to entailment of closure");
  reduce_cmd->add_option("cnf", sat_path)->required();
  reduce_cmd->add_option("--horn-out", horn_out_path);
  reduce_cmd->add_option("--models-out", models_out_path);
  reduce_cmd->callback([&] {
    action = [&] {
      const EocInstance inst = reduce_m3sat_to_eoc(parse_m3sat(read_file(sat_path)));
      auto emit = [&](const std::string& path, const std::string& text) {
        if (path.empty()) {
          out << text;
          return;
        }
        std::ofstream file(path, std::ios::binary);
        if (!file) throw InputFileError("cannot write " + path);
        file << text;
      };
      emit(horn_out_path, serialize_horn(inst.h));
      emit(models_out_path, serialize_models(inst.gamma));
      return kExitYes;
    };
  });

  // check-equiv
  auto* equiv_cmd = app.add_subcommand("check-equiv", "Are two Horn expressions equivalent?");
  equiv_cmd->add_option("first", horn_path)->required();
  equiv_cmd->add_option("second", second_path)->required();
  equiv_cmd->callback([&] {
    action = [&] {
      const HornCnf a = parse_horn(read_file(horn_path));
      const HornCnf b = parse_horn(read_file(second_path));
      if (a.width() != b.width()) throw WidthMismatch(a.width(), b.width(), "check-equiv");
      return report(equivalent(a, b), out);
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitYes : kExitUsage;
  }

  try {
    return action();
  } catch (const GuardExceeded& e) {
    err << "hornkc: " << e.what() << "\n";
    return kExitGuard;
  } catch (const Error& e) {
    err << "hornkc: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace hornkc

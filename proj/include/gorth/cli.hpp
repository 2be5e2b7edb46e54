#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gorth/classifier.hpp"
#include "gorth/errors.hpp"
#include "gorth/io.hpp"
#include "gorth/labels.hpp"
#include "gorth/normal_forms.hpp"
#include "gorth/structures.hpp"

namespace gorth::cli {

enum ExitCode : int {
  kOk = 0,
  kNegative = 1,     // not equivalent / fuzz mismatch / validation failure
  kBadInput = 2,
  kInternal = 3,
  kUndecidable = 4,
};

struct FuzzOutcome {
  std::size_t trials = 0;
  std::optional<std::size_t> first_mismatch;
  std::string expected;
  std::string got;
  std::optional<Triple> counterexample;
};

/// Emits the label, conjugates by `trials` random group elements and
/// reclassifies each. Trial i uses trial_seed(seed, i), so the outcome does
/// not depend on `jobs`.
inline FuzzOutcome fuzz(const Classification& label, const std::optional<Rat>& alpha, std::size_t trials,
                        std::uint64_t seed, unsigned jobs = 1) {
  Triple base = assemble(label, alpha);
  Classification expected = classify(base);
  Classification sorted = label;
  sort_types(sorted.types);
  ensure(expected == sorted, "normal form does not classify back to its label");

  std::vector<std::optional<Classification>> results(trials);
  std::vector<std::exception_ptr> errors(trials);
  auto worker = [&](unsigned id) {
    for (std::size_t i = id; i < trials; i += jobs) {
      try {
        Triple t = conjugate(base, random_group_element(base, trial_seed(seed, i)));
        results[i] = classify(t);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  jobs = std::max(1u, jobs);
  std::vector<std::thread> pool;
  for (unsigned id = 1; id < jobs; ++id) pool.emplace_back(worker, id);
  worker(0);
  for (auto& th : pool) th.join();

  FuzzOutcome out;
  out.trials = trials;
  out.expected = canonical_string(expected);
  for (std::size_t i = 0; i < trials; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    if (*results[i] != expected) {
      out.first_mismatch = i;
      out.got = canonical_string(*results[i]);
      out.counterexample = conjugate(base, random_group_element(base, trial_seed(seed, i)));
      break;
    }
  }
  return out;
}

namespace detail {

inline std::optional<Rat> parse_alpha(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return Rat::parse(s);
}

}  // namespace detail

/// Runs one command line. Results go to `out`, diagnostics to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Adjoint orbit classification for the generalized orthogonal Lie algebra"};
  app.require_subcommand(1);

  std::string in_a, in_b, label, alpha, out_path;
  bool fitting = false;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  unsigned jobs = 1;

  auto* classify_cmd = app.add_subcommand("classify", "Print the canonical orbit label of a triple");
  classify_cmd->add_option("input", in_a, "Triple JSON file")->required();
  classify_cmd->add_flag("--fitting", fitting, "Split off and report the nonzero-eigenvalue part");

  auto* equiv_cmd = app.add_subcommand("equiv", "Decide whether two triples lie in the same orbit");
  equiv_cmd->add_option("a", in_a, "First triple")->required();
  equiv_cmd->add_option("b", in_b, "Second triple")->required();

  auto* emit_cmd = app.add_subcommand("emit", "Write the normal-form triple of a label");
  emit_cmd->add_option("label", label, "Canonical label string")->required();
  emit_cmd->add_option("--alpha", alpha, "Modulus alpha (p/q) for a single-chain label");
  emit_cmd->add_option("-o,--output", out_path, "Output file (stdout if omitted)");

  auto* fuzz_cmd = app.add_subcommand("fuzz", "Check classification invariance under random conjugation");
  fuzz_cmd->add_option("--label", label, "Canonical label string")->required();
  fuzz_cmd->add_option("--alpha", alpha, "Modulus alpha (p/q) for a single-chain label");
  fuzz_cmd->add_option("--trials", trials, "Number of random group elements");
  fuzz_cmd->add_option("--seed", seed, "Seed");
  fuzz_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 256u));

  auto* validate_cmd = app.add_subcommand("validate", "Check the structural identities of a triple");
  validate_cmd->add_option("input", in_a, "Triple JSON file")->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kBadInput;
  }

  try {
    if (*classify_cmd) {
      Triple t = io::read_triple(in_a);
      auto v = validate_triple(t);
      if (!v.ok) throw PreconditionError("invalid triple: " + v.report());
      if (!fitting && !is_nilpotent(t.xi))
        throw PreconditionError("xi is not nilpotent; rerun with --fitting to split off the nonzero part");
      out << canonical_string(classify(t)) << "\n";
      return kOk;
    }
    if (*equiv_cmd) {
      bool same = equivalent(io::read_triple(in_a), io::read_triple(in_b));
      out << (same ? "equivalent" : "not equivalent") << "\n";
      return same ? kOk : kNegative;
    }
    if (*emit_cmd) {
      Classification c = parse_label(label);
      Triple t = assemble(c, detail::parse_alpha(alpha));
      if (out_path.empty()) {
        out << io::to_json(t);
      } else {
        io::write_triple(t, out_path);
        out << canonical_string(c) << "\n";
      }
      return kOk;
    }
    if (*fuzz_cmd) {
      FuzzOutcome r = fuzz(parse_label(label), detail::parse_alpha(alpha), trials, seed, jobs);
      if (!r.first_mismatch) {
        out << r.expected << "\n";
        err << r.trials << " trials, all matched\n";
        return kOk;
      }
      out << "mismatch at trial " << *r.first_mismatch << "\n"
          << "expected: " << r.expected << "\n"
          << "got:      " << r.got << "\n"
          << io::to_json(*r.counterexample);
      return kNegative;
    }
    if (*validate_cmd) {
      auto v = validate_triple(io::read_triple(in_a));
      out << v.report() << "\n";
      return v.ok ? kOk : kNegative;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const Undecidable& e) {
    err << "undecidable: " << e.what() << "\n";
    return kUndecidable;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}

}  // namespace gorth::cli

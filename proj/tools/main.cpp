#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "jmexpand/dyck.hpp"
#include "jmexpand/errors.hpp"
#include "jmexpand/group_algebra.hpp"
#include "jmexpand/hecke.hpp"
#include "jmexpand/jack.hpp"
#include "jmexpand/partial_permutation.hpp"
#include "jmexpand/partition.hpp"
#include "jmexpand/recurrence.hpp"
#include "jmexpand/series.hpp"

namespace {

using jmexpand::CoeffKind;
using jmexpand::CoefficientEngine;
using jmexpand::Int;
using jmexpand::OracleLimits;
using jmexpand::Partition;
using jmexpand::Rat;
using jmexpand::SymFamily;
using nlohmann::json;

// exit codes: 0 success, 2 usage, 3 resource guard, 4 invariant violation,
// 5 degenerate deformation parameter
constexpr int kExitUsage = 2;
constexpr int kExitResourceGuard = 3;
constexpr int kExitInvariant = 4;
constexpr int kExitDegenerate = 5;

json partition_to_json(const Partition& p) {
  return json(p.parts());
}

json entry(const Partition& p, const std::string& value) {
  return json{{"partition", partition_to_json(p)}, {"value", value}};
}

void print_record(const json& record, bool as_json) {
  if (as_json) {
    std::cout << record.dump(2) << '\n';
    return;
  }
  const json& result = record.at("result");
  if (result.contains("entries")) {
    std::cout << "partition\tvalue\n";
    for (const json& e : result.at("entries")) {
      Partition p(e.at("partition").get<std::vector<int>>());
      std::cout << jmexpand::partition_to_string(p) << '\t'
                << e.at("value").get<std::string>() << '\n';
    }
  } else if (result.contains("coefficients")) {
    std::cout << result.at("polynomial").get<std::string>() << '\n';
  } else if (result.contains("value")) {
    std::cout << result.at("value").get<std::string>() << '\n';
  } else if (result.contains("instances")) {
    const json& instances = result.at("instances");
    std::size_t failures = 0;
    for (const json& inst : instances) {
      if (!inst.at("pass").get<bool>()) {
        ++failures;
        std::cout << "FAIL alpha=" << inst.at("alpha").get<std::string>()
                  << " n=" << inst.at("n") << " k=" << inst.at("k")
                  << " rho=" << inst.at("rho_text").get<std::string>()
                  << " m=" << inst.at("m")
                  << " lhs=" << inst.at("lhs").get<std::string>()
                  << " rhs=" << inst.at("rhs").get<std::string>() << '\n';
      }
    }
    std::cout << instances.size() << " instances checked, " << failures
              << " failed\n";
  }
  if (record.contains("verified")) {
    std::cout << (record.at("verified").get<bool>() ? "verification passed"
                                                    : "verification FAILED")
              << '\n';
  }
}

CoefficientEngine& engine() {
  static CoefficientEngine instance;
  return instance;
}

struct ExpandArgs {
  std::string family;
  int k = 0;
  std::string partition;
  int all_of_size = -1;
};

json run_expand(const ExpandArgs& args) {
  CoeffKind kind = jmexpand::parse_kind(args.family);
  json entries = json::array();
  json parameters{{"family", args.family}, {"k", args.k}};
  if (args.all_of_size >= 0) {
    parameters["all_of_size"] = args.all_of_size;
    for (const Partition& p : jmexpand::partitions_of(args.all_of_size)) {
      entries.push_back(entry(
          p, jmexpand::to_decimal(engine().coefficient(kind, args.k, p))));
    }
  } else {
    Partition p = jmexpand::parse_partition(args.partition);
    parameters["partition"] = partition_to_json(p);
    entries.push_back(entry(
        p, jmexpand::to_decimal(engine().coefficient(kind, args.k, p))));
  }
  return json{{"command", "expand"},
              {"parameters", parameters},
              {"result", json{{"entries", entries}}}};
}

struct OracleArgs {
  std::string group;
  std::string function;
  int k = 0;
  int n = 0;
  bool verify = false;
  int max_n = -1;
};

json run_oracle(const OracleArgs& args) {
  SymFamily family = jmexpand::parse_family(args.function);
  OracleLimits limits;
  if (args.max_n > 0) {
    limits.max_symmetric_n = std::max(limits.max_symmetric_n, args.max_n);
    limits.max_hecke_n = std::max(limits.max_hecke_n, args.max_n);
    limits.max_partial_n = std::max(limits.max_partial_n, args.max_n);
  }
  json entries = json::array();
  bool verified = true;
  if (args.group == "sym") {
    jmexpand::ClassExpansion expansion = jmexpand::class_expansion(
        jmexpand::evaluate_in_jm(family, args.k, args.n, limits));
    for (const auto& [lambda, coeff] : expansion.coefficients()) {
      entries.push_back(entry(lambda, jmexpand::to_decimal(coeff)));
      if (args.verify) {
        Int expected;
        switch (family) {
          case SymFamily::Complete:
            expected = engine().a(args.k, lambda);
            break;
          case SymFamily::PowerSum:
            expected = engine().a_power(args.k, lambda);
            break;
          case SymFamily::Elementary:
            // the closed form: every class with n-k cycles, once
            expected = (lambda.length() == args.n - args.k) ? 1 : 0;
            break;
        }
        if (coeff != expected) verified = false;
      }
    }
  } else if (args.group == "hecke") {
    jmexpand::CosetExpansion expansion =
        jmexpand::b_expansion_oracle(family, args.k, args.n, limits);
    for (const auto& [mu, coeff] : expansion.coefficients()) {
      entries.push_back(entry(mu, jmexpand::to_decimal(coeff)));
      if (args.verify) {
        Int expected;
        switch (family) {
          case SymFamily::Complete:
            expected = engine().b(args.k, mu);
            break;
          case SymFamily::PowerSum:
            expected = engine().b_power(args.k, mu);
            break;
          case SymFamily::Elementary:
            expected = (mu.sum() - mu.length() == args.k) ? 1 : 0;
            break;
        }
        if (coeff != expected) verified = false;
      }
    }
  } else if (args.group == "partial") {
    if (args.verify && family != SymFamily::Complete) {
      throw CLI::ValidationError(
          "--verify-recurrence",
          "only the complete family has a partial-permutation recurrence");
    }
    jmexpand::PartialAlgebraElement expansion =
        jmexpand::evaluate_in_partial_jm(family, args.k, args.n, limits);
    for (int size = 0; size <= 2 * args.k && size <= args.n; ++size) {
      for (const Partition& lambda : jmexpand::partitions_of(size)) {
        Int coeff = jmexpand::coefficient_of_cycle_type(expansion, lambda);
        if (coeff == 0) continue;
        entries.push_back(entry(lambda, jmexpand::to_decimal(coeff)));
        if (args.verify && engine().c(args.k, lambda) != coeff) {
          verified = false;
        }
      }
    }
  } else {
    throw CLI::ValidationError("--group", "unknown group: " + args.group);
  }
  json record{{"command", "oracle"},
              {"parameters",
               json{{"group", args.group},
                    {"function", args.function},
                    {"k", args.k},
                    {"n", args.n}}},
              {"result", json{{"entries", entries}}}};
  if (args.verify) record["verified"] = verified;
  return record;
}

struct SeriesArgs {
  std::string which;
  int n = 0;
  int order = 0;
};

json run_series(const SeriesArgs& args) {
  jmexpand::TruncatedSeries series(args.order);
  if (args.which == "cycle") {
    series = jmexpand::cycle_series(args.n, args.order);
  } else if (args.which == "hook") {
    series = jmexpand::hook_series(args.n, args.order);
  } else {
    series = jmexpand::solved_F_series(jmexpand::parse_solved_shape(args.which),
                                       args.n, args.order);
  }
  json coefficients = json::array();
  for (int i = 0; i <= series.order(); ++i) {
    coefficients.push_back(jmexpand::to_decimal(series[i]));
  }
  return json{{"command", "series"},
              {"parameters",
               json{{"which", args.which}, {"n", args.n},
                    {"order", args.order}}},
              {"result",
               json{{"coefficients", coefficients},
                    {"polynomial", jmexpand::series_to_text(series)}}}};
}

struct AsymptoticsArgs {
  std::string which;
  std::string partition;
};

json run_asymptotics(const AsymptoticsArgs& args) {
  Partition mu = jmexpand::parse_partition(args.partition);
  Int value;
  if (args.which == "leading") {
    value = jmexpand::leading_b(mu);
  } else if (args.which == "subleading") {
    value = jmexpand::subleading_b(mu);
  } else {
    throw CLI::ValidationError("--which", "unknown choice: " + args.which);
  }
  return json{{"command", "asymptotics"},
              {"parameters",
               json{{"which", args.which},
                    {"partition", partition_to_json(mu)}}},
              {"result", json{{"value", jmexpand::to_decimal(value)}}}};
}

struct ConjectureArgs {
  int kmax = 3;
  int nmax = 4;
  std::string alphas = "1/2,1,3/2,2,3,5";
};

json run_conjecture(const ConjectureArgs& args) {
  std::vector<Rat> samples;
  std::stringstream ss(args.alphas);
  std::string item;
  while (std::getline(ss, item, ',')) {
    samples.push_back(jmexpand::parse_rational(item));
  }
  if (samples.empty()) {
    throw CLI::ValidationError("--alphas", "no parameter samples given");
  }
  auto instances = jmexpand::conjecture_check(args.kmax, args.nmax, samples);
  json rows = json::array();
  bool all_pass = true;
  for (const jmexpand::ConjectureInstance& inst : instances) {
    all_pass = all_pass && inst.pass;
    rows.push_back(json{{"alpha", jmexpand::to_decimal(inst.alpha)},
                        {"n", inst.n},
                        {"k", inst.k},
                        {"rho", partition_to_json(inst.rho)},
                        {"rho_text", jmexpand::partition_to_string(inst.rho)},
                        {"m", inst.m},
                        {"lhs", jmexpand::to_decimal(inst.lhs)},
                        {"rhs", jmexpand::to_decimal(inst.rhs)},
                        {"pass", inst.pass}});
  }
  return json{{"command", "conjecture"},
              {"parameters",
               json{{"kmax", args.kmax},
                    {"nmax", args.nmax},
                    {"alphas", args.alphas}}},
              {"result", json{{"instances", rows}, {"all_pass", all_pass}}}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact class expansions of symmetric functions in Jucys-Murphy "
      "elements"};
  app.require_subcommand(1);
  bool as_json = false;
  std::string cache_path;
  app.add_flag("--json", as_json, "machine-readable output");
  app.add_option("--cache", cache_path,
                 "coefficient cache file (also via JM_EXPAND_CACHE)")
      ->envname("JM_EXPAND_CACHE");

  ExpandArgs expand_args;
  CLI::App* expand = app.add_subcommand(
      "expand", "coefficients from the induction relations");
  expand->fallthrough();
  expand
      ->add_option("--family", expand_args.family,
                   "one of a, b, c, a-power, b-power, d")
      ->required();
  expand->add_option("--k", expand_args.k, "degree")->required();
  CLI::Option* partition_option = expand->add_option(
      "--partition", expand_args.partition, "partition, e.g. \"3,1,1\"");
  CLI::Option* size_option =
      expand->add_option("--all-of-size", expand_args.all_of_size,
                         "tabulate every partition of this size");
  partition_option->excludes(size_option);

  OracleArgs oracle_args;
  CLI::App* oracle = app.add_subcommand(
      "oracle", "full expansions by exhaustive computation");
  oracle->fallthrough();
  oracle->add_option("--group", oracle_args.group, "sym, hecke or partial")
      ->required();
  oracle->add_option("--function", oracle_args.function, "h, e or p")
      ->required();
  oracle->add_option("--k", oracle_args.k, "degree")->required();
  oracle->add_option("--n", oracle_args.n, "ambient size")->required();
  oracle->add_flag("--verify-recurrence", oracle_args.verify,
                   "compare against the induction engine");
  oracle->add_option("--max-oracle-n", oracle_args.max_n,
                     "raise the expansion size guard");

  SeriesArgs series_args;
  CLI::App* series =
      app.add_subcommand("series", "generating series of coefficients");
  series->fallthrough();
  series
      ->add_option("--which", series_args.which,
                   "cycle, hook, F211 or F22")
      ->required();
  series->add_option("--n", series_args.n, "cycle length parameter")
      ->required();
  series->add_option("--order", series_args.order, "truncation order")
      ->required();

  AsymptoticsArgs asymptotics_args;
  CLI::App* asymptotics = app.add_subcommand(
      "asymptotics", "extreme coset-type coefficients in closed form");
  asymptotics->fallthrough();
  asymptotics
      ->add_option("--which", asymptotics_args.which,
                   "leading or subleading")
      ->required();
  asymptotics
      ->add_option("--partition", asymptotics_args.partition, "partition")
      ->required();

  ConjectureArgs conjecture_args;
  CLI::App* conjecture = app.add_subcommand(
      "conjecture", "check the deformed peeling relation at sampled alpha");
  conjecture->fallthrough();
  conjecture->add_option("--kmax", conjecture_args.kmax, "largest degree");
  conjecture->add_option("--nmax", conjecture_args.nmax, "largest size");
  conjecture->add_option("--alphas", conjecture_args.alphas,
                         "comma-separated rational samples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (!cache_path.empty()) engine().load_cache(cache_path);
    json record;
    if (expand->parsed()) {
      if (expand_args.partition.empty() && expand_args.all_of_size < 0) {
        std::cerr << "expand needs --partition or --all-of-size\n";
        return kExitUsage;
      }
      record = run_expand(expand_args);
    } else if (oracle->parsed()) {
      record = run_oracle(oracle_args);
    } else if (series->parsed()) {
      record = run_series(series_args);
    } else if (asymptotics->parsed()) {
      record = run_asymptotics(asymptotics_args);
    } else if (conjecture->parsed()) {
      record = run_conjecture(conjecture_args);
    }
    print_record(record, as_json);
    if (!cache_path.empty()) engine().save_cache(cache_path);
    if (record.contains("verified") && !record.at("verified").get<bool>()) {
      std::cerr << "oracle and recurrence disagree\n";
      return kExitInvariant;
    }
    return 0;
  } catch (const jmexpand::ResourceGuardError& e) {
    std::cerr << "resource guard: " << e.what() << '\n';
    return kExitResourceGuard;
  } catch (const jmexpand::NotCentralError& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const jmexpand::NotBiInvariantError& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const jmexpand::DegenerateGramError& e) {
    std::cerr << "degenerate parameter: " << e.what() << '\n';
    return kExitDegenerate;
  } catch (const jmexpand::SingularThetaError& e) {
    std::cerr << "degenerate parameter: " << e.what() << '\n';
    return kExitDegenerate;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const jmexpand::InvalidInputError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitUsage;
  } catch (const jmexpand::IndexOutOfRangeError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitUsage;
  } catch (const jmexpand::NoSuchPartError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

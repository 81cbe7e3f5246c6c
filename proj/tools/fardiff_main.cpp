// fardiff - far-difference decompositions and their statistics.
//
// Subcommands:
//   decompose  print the signed decomposition of an integer
//   verify     interval identities + brute-force uniqueness oracle
//   stats      summand-count moments as CSV
//   gaps       empirical / counting / theoretical gap distributions as CSV
//   constants  growth constants as JSON
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fardiff/decomposer.hpp"
#include "fardiff/fixtures.hpp"
#include "fardiff/gap_analysis.hpp"
#include "fardiff/serialize.hpp"
#include "fardiff/spectral.hpp"
#include "fardiff/summand_stats.hpp"

namespace {

struct FamilyOptions {
  int k = -1;
  std::string sd;
  std::string fixture;

  void attach(CLI::App* cmd) {
    auto* k_opt = cmd->add_option("--k", k, "Skipponacci family parameter k (k >= 0)");
    auto* sd_opt = cmd->add_option("--sd", sd, "standard (s,d) family, e.g. --sd 4,3");
    auto* fx_opt = cmd->add_option("--fixture", fixture,
                                   "bundled family: example5.1a, example5.1b, example5.1c, b_k:<k>");
    k_opt->excludes(sd_opt)->excludes(fx_opt);
    sd_opt->excludes(fx_opt);
  }

  fardiff::SequenceFamily resolve() const {
    using fardiff::SequenceFamily;
    const int given = (k >= 0) + !sd.empty() + !fixture.empty();
    if (given != 1) throw CLI::ValidationError("family", "exactly one of --k / --sd / --fixture is required");
    if (k >= 0) return SequenceFamily::skipponacci(k);
    if (!sd.empty()) {
      const auto comma = sd.find(',');
      if (comma == std::string::npos) throw CLI::ValidationError("--sd", "expected s,d");
      return SequenceFamily::standard_sd(std::stoi(sd.substr(0, comma)), std::stoi(sd.substr(comma + 1)));
    }
    return fardiff::fixture_by_name(fixture);
  }
};

std::vector<int> parse_range(const std::string& spec) {
  // "start:stop[:step]" or a single index
  std::vector<int> out;
  const auto c1 = spec.find(':');
  if (c1 == std::string::npos) {
    out.push_back(std::stoi(spec));
    return out;
  }
  const auto c2 = spec.find(':', c1 + 1);
  const int start = std::stoi(spec.substr(0, c1));
  const int stop = std::stoi(spec.substr(c1 + 1, c2 == std::string::npos ? std::string::npos : c2 - c1 - 1));
  const int step = c2 == std::string::npos ? 1 : std::stoi(spec.substr(c2 + 1));
  if (step < 1 || stop < start) throw CLI::ValidationError("--n-range", "empty range");
  for (int n = start; n <= stop; n += step) out.push_back(n);
  return out;
}

std::pair<double, double> parse_weights(const std::string& spec) {
  const auto comma = spec.find(',');
  if (comma == std::string::npos) throw CLI::ValidationError("--weights", "expected a,b");
  return {std::stod(spec.substr(0, comma)), std::stod(spec.substr(comma + 1))};
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << text;
}

int run_verify(const fardiff::SequenceFamily& family, int bound) {
  using namespace fardiff;
  bool ok = true;

  if (family.kind() != FamilyKind::explicit_list) {
    const int id_limit = std::max(bound, 50);
    bool identities = true;
    for (int n = 1; n <= id_limit && identities; ++n)
      identities = family.check_interval_identity(n);
    std::cout << "interval identity n=1.." << id_limit << ": " << (identities ? "PASS" : "FAIL")
              << "\n";
    ok = ok && identities;

    const BigInt limit = family.r_sum(bound);
    bool unique = true;
    for (BigInt x = 1; x <= limit && unique; ++x) {
      const auto found = brute_force_decompositions(x, family, bound);
      if (found.size() != 1 || !(decompose(x, family) == found[0])) {
        std::cout << "  x=" << x.get_str() << ": "
                  << (found.size() != 1 ? std::to_string(found.size()) + " decompositions"
                                        : "decompose() disagrees with the oracle")
                  << "\n";
        unique = false;
      }
    }
    std::cout << "uniqueness oracle x=1..R(" << bound << ")=" << limit.get_str() << ": "
              << (unique ? "PASS" : "FAIL") << "\n";
    ok = ok && unique;
  } else {
    // No interval structure to rely on: check that every legal sign
    // assignment over indices 1..bound gives a distinct value.
    std::map<BigInt, std::vector<SignedTerm>> seen;
    BigInt total = 0;
    std::string clash;
    for_each_legal_decomposition(family, bound, [&](const BigInt& v, const std::vector<SignedTerm>& t) {
      ++total;
      if (!seen.emplace(v, t).second && clash.empty()) clash = v.get_str();
    });
    bool unique = clash.empty();
    if (!unique) std::cout << "  two representations of " << clash << "\n";
    for (const auto& [v, terms] : seen) {
      if (!unique) break;
      try {
        if (!(decompose(v, family).terms == terms)) {
          std::cout << "  decompose(" << v.get_str() << ") disagrees with the oracle\n";
          unique = false;
        }
      } catch (const DecompositionFailure&) {
      }
    }
    std::cout << "uniqueness oracle, " << total.get_str() << " bounded representations (bound "
              << bound << "): " << (unique ? "PASS" : "FAIL") << "\n";
    ok = ok && unique;
  }
  std::cout << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"far-difference decompositions over Skipponacci and (s,d) families"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  app.set_config("--config", "", "read options from an INI/TOML file (flags override)");
  int threads = 1;
  app.add_option("--threads", threads, "worker threads for interval sweeps")->capture_default_str();

  // decompose
  auto* cmd_dec = app.add_subcommand("decompose", "decompose an integer");
  FamilyOptions dec_family;
  dec_family.attach(cmd_dec);
  std::string dec_value;
  bool dec_json = false;
  std::string dec_output;
  cmd_dec->add_option("x", dec_value, "integer to decompose")->required();
  cmd_dec->add_flag("--json", dec_json, "emit the JSON form");
  cmd_dec->add_option("--output", dec_output, "write to file instead of stdout");

  // verify
  auto* cmd_ver = app.add_subcommand("verify", "uniqueness oracle and interval identities");
  FamilyOptions ver_family;
  ver_family.attach(cmd_ver);
  int ver_bound = 10;
  cmd_ver->add_option("--n", ver_bound, "index bound for the oracle sweep")->capture_default_str();

  // stats
  auto* cmd_stats = app.add_subcommand("stats", "summand-count moment summaries (CSV)");
  int stats_k = -1;
  std::string stats_range = "1:20";
  std::string stats_weights = "1,0";
  std::string stats_output;
  cmd_stats->add_option("--k", stats_k, "Skipponacci family parameter k")->required();
  cmd_stats->add_option("--n-range", stats_range, "indices start:stop[:step]")->capture_default_str();
  cmd_stats->add_option("--weights", stats_weights, "weights a,b")->capture_default_str();
  cmd_stats->add_option("--output", stats_output, "write to file instead of stdout");

  // gaps
  auto* cmd_gaps = app.add_subcommand("gaps", "gap distributions (CSV)");
  int gaps_k = -1;
  std::string gaps_range = "6:12";
  std::string gaps_output;
  cmd_gaps->add_option("--k", gaps_k, "Skipponacci family parameter k")->required();
  cmd_gaps->add_option("--n-range", gaps_range, "indices start:stop[:step]")->capture_default_str();
  cmd_gaps->add_option("--output", gaps_output, "write to file instead of stdout");

  // constants
  auto* cmd_const = app.add_subcommand("constants", "growth constants (JSON)");
  int const_k = -1;
  std::string const_weights = "1,0";
  std::string const_output;
  cmd_const->add_option("--k", const_k, "Skipponacci family parameter k")->required();
  cmd_const->add_option("--weights", const_weights, "weights a,b")->capture_default_str();
  cmd_const->add_option("--output", const_output, "write to file instead of stdout");

  try {
    app.parse(argc, argv);

    using namespace fardiff;
    if (cmd_dec->parsed()) {
      BigInt x;
      try {
        x = BigInt(dec_value);
      } catch (const std::invalid_argument&) {
        std::cerr << "error: '" << dec_value << "' is not an integer\n";
        return 2;
      }
      const auto dec = decompose(x, dec_family.resolve());
      std::string text;
      if (dec_json) text = decomposition_json(dec).dump(2) + "\n";
      else if (dec.terms.empty()) text = "(empty)\n";
      else text = symbolic_form(dec) + " = " + numeric_form(dec) + "\n";
      emit(text, dec_output);
      return 0;
    }

    if (cmd_ver->parsed()) return run_verify(ver_family.resolve(), ver_bound);

    if (cmd_stats->parsed()) {
      const auto [a, b] = parse_weights(stats_weights);
      const auto ns = parse_range(stats_range);
      const auto table = build_count_table(stats_k, *std::max_element(ns.begin(), ns.end()));
      std::vector<MomentSummary> rows;
      for (int n : ns) rows.push_back(moments(table, n, a, b));
      emit(stats_csv(rows), stats_output);
      return 0;
    }

    if (cmd_gaps->parsed()) {
      const auto ns = parse_range(gaps_range);
      const int n_top = *std::max_element(ns.begin(), ns.end());
      const auto table = build_count_table(gaps_k, n_top);
      const auto limit = theoretical_gaps(gaps_k, n_top);
      std::vector<GapCsvRow> rows;
      for (int n : ns)
        rows.push_back({n, empirical_gaps(gaps_k, n, threads), counting_gaps(gaps_k, n, &table), limit});
      emit(gaps_csv(gaps_k, rows), gaps_output);
      return 0;
    }

    if (cmd_const->parsed()) {
      const auto [a, b] = parse_weights(const_weights);
      emit(constants_json(growth_constants(const_k, a, b)).dump(2) + "\n", const_output);
      return 0;
    }
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
      return app.exit(e);
    app.exit(e);
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

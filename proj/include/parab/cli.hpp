/// @file cli.hpp
/// @brief The `parab` command line: parses an input document, dispatches to
///        one computation and prints the result as JSON or as a text table.
///
/// Exit codes: 0 success, 1 hypothesis of a formula violated, 2 bad input or
/// usage, 3 a verification found a failure.
#pragma once

#include "parab/io.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

namespace parab::cli {

enum ExitCode : int { kOk = 0, kHypothesis = 1, kInputError = 2, kVerifyFailed = 3 };

namespace detail {

inline std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

inline std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

/// Two-column "key  value" table; nested values are printed compactly.
inline void print_text(const Json& j, std::ostream& out, const std::string& prefix = "") {
  if (!j.is_object()) {
    out << scalar_text(j) << '\n';
    return;
  }
  std::size_t width = 0;
  for (const auto& [k, v] : j.items()) width = std::max(width, prefix.size() + k.size());
  for (const auto& [k, v] : j.items()) {
    const std::string key = prefix + k;
    if (v.is_array() && !v.empty() && v.front().is_object()) {
      for (std::size_t i = 0; i < v.size(); ++i) print_text(v[i], out, key + "[" + std::to_string(i) + "].");
      continue;
    }
    out << key << std::string(width - key.size() + 2, ' ') << scalar_text(v) << '\n';
  }
}

}  // namespace detail

/// Runs one invocation. `args` excludes the program name. `format_env` is the
/// value of PARAB_FORMAT, if set; it overrides --format.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
               const char* format_env = nullptr) {
  CLI::App app{"Invariants of parabolic bundles on orbifold curves", "parab"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

  std::string input = "-";
  auto with_input = [&](CLI::App* sub) {
    sub->add_option("-i,--input", input, "Input document (JSON); '-' reads stdin");
    return sub;
  };

  auto* chi = with_input(app.add_subcommand("chi", "Euler characteristic by orbifold Riemann-Roch"));
  auto* end_chi = with_input(app.add_subcommand("end-chi", "Euler characteristic of the endomorphism bundle"));
  auto* flag = with_input(app.add_subcommand("flag-dim", "Flag-variety dimensions of the parabolic data"));
  auto* hom = with_input(app.add_subcommand("hom-datum", "The endomorphism bundle as an input document"));
  auto* stacky = with_input(app.add_subcommand("stacky-degree", "Degree of the bundle on the root stack"));
  auto* index = with_input(app.add_subcommand("index", "Index h of the generic gerbe"));
  auto* ed = with_input(app.add_subcommand("ed-bound", "Upper bound on the essential dimension"));
  auto* edp = with_input(app.add_subcommand("ed-p", "Essential p-dimension"));
  auto* nil = with_input(app.add_subcommand("nil-dim", "Dimension of the nilpotent-endomorphism stack"));
  auto* trdeg = with_input(app.add_subcommand("trdeg-bound", "Bound on the transcendence degree of the field of moduli"));
  auto* gerbe = app.add_subcommand("gerbe-ed", "Essential dimension bound of a gerbe of index N");
  auto* gerbe_p = app.add_subcommand("gerbe-ed-p", "Essential p-dimension of a gerbe of index N");
  auto* verify = app.add_subcommand("verify", "Run the identity and two-route verification sweeps");

  std::uint64_t prime = 0;
  edp->add_option("--prime", prime, "Prime p")->required();
  bool nonsimple = false;
  trdeg->add_flag("--nonsimple", nonsimple, "Use the bound for bundles with a non-scalar endomorphism");
  long long gerbe_n = 0;
  gerbe->add_option("N", gerbe_n, "Index of the gerbe")->required();
  gerbe_p->add_option("N", gerbe_n, "Index of the gerbe")->required();
  gerbe_p->add_option("--prime", prime, "Prime p")->required();
  unsigned e_max = 12;
  long long random_count = 100;
  std::uint64_t seed = 1;
  verify->add_option("--e-max", e_max, "Largest order e for the root-of-unity identities")->check(CLI::Range(2u, 200u));
  verify->add_option("--random", random_count, "Number of random instances per sweep")->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", seed, "Seed of the instance generator");

  if (!args.empty() && !args.front().empty() && args.front().front() != '-') {
    bool known = false;
    for (const auto* sub : app.get_subcommands({})) known = known || sub->check_name(args.front());
    if (!known) {
      err << "error: unknown subcommand '" << args.front() << "'\n" << app.help();
      return kInputError;
    }
  }
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kInputError;
  }
  if (format_env != nullptr && *format_env != '\0') {
    format = format_env;
    if (format != "json" && format != "text") {
      err << "error: PARAB_FORMAT must be 'json' or 'text'\n";
      return kInputError;
    }
  }

  auto load = [&]() {
    if (input == "-") return read_document(detail::read_all(in));
    std::ifstream file(input);
    if (!file) throw InputError("cannot open input file '" + input + "'");
    return read_document(detail::read_all(file));
  };
  auto check_prime = [&]() {
    if (!is_prime(prime)) throw InputError("--prime " + std::to_string(prime) + " is not prime");
  };

  Json result;
  int code = kOk;
  try {
    if (chi->parsed()) {
      result = to_json(euler_char(load().to_bundle()));
    } else if (end_chi->parsed()) {
      const auto b = load().to_bundle();
      result = {{"end_chi", end_euler_char(b).str()},
                {"rank_squared", b.rank() * b.rank()},
                {"flag_total", weighted_flag_total(b.points())}};
    } else if (flag->parsed()) {
      const auto doc = load();
      Json dims = Json::array();
      for (const auto& p : doc.curve.points) dims.push_back(flag_dim(p.weights));
      result = {{"flag_dims", dims}, {"flag_total", weighted_flag_total(doc.curve.points)}};
    } else if (hom->parsed()) {
      result = to_json(endomorphism_bundle(load().to_bundle()));
    } else if (stacky->parsed()) {
      const auto b = load().to_bundle();
      result = {{"stacky_degree", stacky_degree(b).str()}, {"degree", b.degree()}};
    } else if (index->parsed()) {
      result = {{"h", gerbe_index(load().to_bundle())}};
    } else if (ed->parsed()) {
      result = to_json(ed_upper_bound(load().to_bundle()));
    } else if (edp->parsed()) {
      check_prime();
      result = to_json(ed_p_value(load().to_bundle(), prime));
    } else if (nil->parsed()) {
      const auto doc = load();
      if (doc.pieces.empty()) throw InputError("nil-dim: the document needs a non-empty \"pieces\" array");
      result = {{"nil_dimension", nil_dimension(doc.curve.genus, doc.pieces, doc.residue_degrees())}};
    } else if (trdeg->parsed()) {
      const auto doc = load();
      const auto b = doc.to_bundle();
      const long long flags = weighted_flag_total(b.points());
      if (nonsimple) {
        result = {{"kind", "nonsimple"}, {"trdeg_bound", trdeg_bound_nonsimple(b.genus(), b.rank(), flags)}};
      } else {
        std::vector<long long> ranks;
        for (const auto& pc : doc.pieces) ranks.push_back(pc.rank);
        if (ranks.empty()) ranks.push_back(b.rank());
        result = {{"kind", "indecomposable"},
                  {"piece_ranks", ranks},
                  {"trdeg_bound", trdeg_bound_indecomposable(b.genus(), ranks, flags)}};
      }
    } else if (gerbe->parsed()) {
      if (gerbe_n < 1) throw InputError("gerbe-ed: N must be >= 1");
      const auto n = static_cast<std::uint64_t>(gerbe_n);
      result = {{"n", n}, {"factorization", to_json(factorize(n))}, {"ed_upper", gerbe_ed_upper(n)}};
    } else if (gerbe_p->parsed()) {
      if (gerbe_n < 1) throw InputError("gerbe-ed-p: N must be >= 1");
      check_prime();
      const auto n = static_cast<std::uint64_t>(gerbe_n);
      result = {{"n", n}, {"prime", prime}, {"ed_p", gerbe_ed_p(n, prime)}};
    } else if (verify->parsed()) {
      const SweepOptions opt{random_count, seed};
      std::vector<VerificationReport> reports;
      reports.push_back(verify_cyclotomic_suite(e_max));
      reports.push_back(verify_inertia_totals(e_max));
      reports.push_back(sweep_hom_identity(opt));
      VerificationReport roots{"root_line_bundles", "1 <= e <= " + std::to_string(std::min(e_max, 10u)) +
                                                        ", 0 <= i < 2e, 0 <= g <= 5, f in {1, 2}",
                               0, {}};
      for (long long g = 0; g <= 5; ++g) {
        for (long long f = 1; f <= 2; ++f) roots.absorb(verify_root_lines(std::min(e_max, 10u), g, f));
      }
      reports.push_back(roots);
      reports.push_back(sweep_chi_two_routes(opt));
      reports.push_back(sweep_end_chi(opt));
      reports.push_back(sweep_ed_consistency(opt));
      bool pass = true;
      Json arr = Json::array();
      for (const auto& r : reports) {
        pass = pass && r.pass();
        arr.push_back(to_json(r));
      }
      result = {{"pass", pass}, {"reports", arr}};
      if (!pass) code = kVerifyFailed;
    }
  } catch (const HypothesisViolation& e) {
    err << "error: " << e.what() << '\n';
    return kHypothesis;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  if (format == "text") {
    if (verify->parsed()) {
      out << "pass  " << (result["pass"].get<bool>() ? "true" : "false") << '\n';
      for (const auto& r : result["reports"]) {
        out << r["identity"].get<std::string>() << "  " << (r["pass"].get<bool>() ? "PASS" : "FAIL") << "  "
            << r["cases"].get<long long>() << " cases  (" << r["range"].get<std::string>() << ")\n";
      }
    } else {
      detail::print_text(result, out);
    }
  } else {
    out << result.dump(2) << '\n';
  }
  return code;
}

}  // namespace parab::cli

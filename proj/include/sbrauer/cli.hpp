#ifndef SBRAUER_CLI_HPP
#define SBRAUER_CLI_HPP

// Command-line front end. run() is the whole program minus process setup so
// it can be driven from tests with string streams.
//
// Exit codes: 0 success, 1 a verification found counterexamples, 2 usage or
// input error.

#include <algorithm>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "sbrauer/arith.hpp"
#include "sbrauer/diagram.hpp"
#include "sbrauer/error.hpp"
#include "sbrauer/groups.hpp"
#include "sbrauer/hyperoct.hpp"
#include "sbrauer/perm.hpp"

namespace sbrauer::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_counterexample = 1;
inline constexpr int exit_usage = 2;

namespace detail {

using nlohmann::json;

inline void report_parse_error(ParseError const& e, std::ostream& err) {
  err << "error: " << e.what() << '\n';
  // Point at the offending token on its own line of the input.
  std::string const& input = e.input();
  std::size_t pos = std::min(e.position(), input.size());
  std::size_t line_start = input.rfind('\n', pos == 0 ? 0 : pos - 1);
  line_start = (line_start == std::string::npos || line_start >= pos) ? 0 : line_start + 1;
  if (pos > 0 && input[pos - 1] == '\n' && pos == input.size()) line_start = pos;
  std::size_t line_end = input.find('\n', line_start);
  if (line_end == std::string::npos) line_end = input.size();
  err << "  " << input.substr(line_start, line_end - line_start) << '\n';
  err << "  " << std::string(pos - line_start, ' ') << "^\n";
}

inline json report_json(VerificationReport const& r) {
  json j{{"claim", r.claim},
         {"n", r.n},
         {"checked", r.checked},
         {"failures", r.failures()},
         {"sampled", r.sampled},
         {"seconds", r.duration.count()}};
  if (r.measured) j["measured"] = *r.measured;
  j["counterexamples"] = json::array();
  for (auto const& c : r.counterexamples) {
    j["counterexamples"].push_back({{"rank", c.rank}, {"input", c.input}, {"detail", c.detail}});
  }
  return j;
}

inline void print_report(VerificationReport const& r, std::ostream& out) {
  out << summary_line(r) << '\n';
  for (auto const& c : r.counterexamples) {
    out << "counterexample: " << c.input;
    if (!c.detail.empty()) out << "  # " << c.detail;
    out << '\n';
  }
}

inline void check_format(std::string const& format) {
  if (format != "text" && format != "json") throw std::invalid_argument("unknown output format '" + format + "'");
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  using detail::json;

  CLI::App app{"Signed Brauer diagrams and the signed permutation group inside S_2n", "sbrauer"};
  app.require_subcommand(1);

  std::string format = "text";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format: text or json")->capture_default_str();
  };

  std::string a_text, b_text;
  auto* mul_cmd = app.add_subcommand("mul", "Multiply two signed permutations given in window notation");
  mul_cmd->add_option("a", a_text, "Upper factor, e.g. \"+2 +1\"")->required();
  mul_cmd->add_option("b", b_text, "Lower factor")->required();
  add_format(mul_cmd);

  auto* embed_cmd = app.add_subcommand("embed", "Embed a signed permutation into S_2n");
  embed_cmd->add_option("element", a_text, "Element in window notation")->required();
  add_format(embed_cmd);

  std::string cycles_text;
  std::size_t degree = 0;
  bool invert = false;
  auto* decompose_cmd = app.add_subcommand("decompose", "Canonical cycles, cycle type and parity of a permutation");
  decompose_cmd->add_option("cycles", cycles_text, "Permutation in cycle notation, e.g. \"(1 3)(2 4)\"")->required();
  decompose_cmd->add_option("--degree", degree, "Degree of the permutation (2n for embedded elements)")->required();
  decompose_cmd->add_flag("--invert", invert, "Recover the signed permutation whose embedding this is");
  add_format(decompose_cmd);

  std::size_t n = 0;
  bool even = false;
  std::size_t cap = default_exhaustive_cap;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "List every element, one per line, in enumeration order");
  enumerate_cmd->add_option("--n", n, "Number of strands")->required();
  enumerate_cmd->add_flag("--even", even, "Only elements with an even number of negative strands");
  enumerate_cmd->add_option("--cap", cap, "Largest n enumerated")->capture_default_str();
  add_format(enumerate_cmd);

  std::string claim_id;
  bool all_claims = false;
  std::string oracle;
  VerifyOptions vopt;
  auto* verify_cmd = app.add_subcommand("verify", "Check one claim, or all of them, at size n");
  auto* claim_opt = verify_cmd->add_option("--claim", claim_id, "Claim id");
  auto* all_opt = verify_cmd->add_flag("--all", all_claims, "Run every claim in the registry");
  claim_opt->excludes(all_opt);
  verify_cmd->add_option("--n", n, "Number of strands (upper limit for cor_3_4)")->required();
  verify_cmd->add_option("--oracle", oracle, "Cross-check with an independent oracle (bsgs)");
  verify_cmd->add_option("--jobs", vopt.jobs, "Worker threads; 0 uses every hardware thread")->capture_default_str();
  verify_cmd->add_option("--cap", vopt.cap, "Largest n checked exhaustively")->capture_default_str();
  verify_cmd->add_option("--samples", vopt.samples, "Random draws above the cap")->capture_default_str();
  verify_cmd->add_option("--seed", vopt.seed, "Seed for sampled runs");
  add_format(verify_cmd);

  std::uint64_t limit = 0;
  std::uint64_t exact_limit = 30;
  auto* valuation_cmd = app.add_subcommand("valuation", "Check the 2-adic valuation of n(n-1)...(floor(n/2)+1)");
  valuation_cmd->add_option("--limit", limit, "Check every 2 <= n <= limit")->required();
  valuation_cmd->add_option("--exact-limit", exact_limit, "Exact big-integer check up to this n")->capture_default_str();
  add_format(valuation_cmd);

  std::string render_format = "ascii";
  auto* render_cmd = app.add_subcommand("render", "Render a diagram line read from standard input");
  render_cmd->add_option("--format", render_format, "ascii, dot or json")->capture_default_str();

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*mul_cmd) {
      detail::check_format(format);
      auto a = parse_signed(a_text);
      auto b = parse_signed(b_text);
      auto p = mul(a, b);
      std::string window = format_signed(p);
      std::string cyc = format_cycles(embed(p));
      if (format == "json") {
        out << json{{"product", window}, {"embedded", cyc}}.dump() << '\n';
      } else {
        out << window << '\n' << cyc << '\n';
      }
      return exit_ok;
    }

    if (*embed_cmd) {
      detail::check_format(format);
      auto s = parse_signed(a_text);
      std::string cyc = format_cycles(embed(s));
      if (format == "json") {
        out << json{{"element", format_signed(s)}, {"embedded", cyc}}.dump() << '\n';
      } else {
        out << cyc << '\n';
      }
      return exit_ok;
    }

    if (*decompose_cmd) {
      detail::check_format(format);
      auto p = parse_cycles(cycles_text, degree);
      if (invert) {
        auto s = unembed(p);
        if (!s) {
          err << "error: " << format_cycles(p) << " is not the image of a signed permutation\n";
          return exit_usage;
        }
        if (format == "json") {
          out << json{{"element", format_signed(*s)}}.dump() << '\n';
        } else {
          out << format_signed(*s) << '\n';
        }
        return exit_ok;
      }
      std::string cyc = format_cycles(p);
      std::string type = format_cycle_type(cycle_type(p));
      std::string par = to_string(parity(p));
      if (format == "json") {
        out << json{{"cycles", cyc}, {"cycle_type", cycle_type(p).parts}, {"parity", par}}.dump() << '\n';
      } else {
        out << cyc << '\n' << "cycle_type=" << type << '\n' << "parity=" << par << '\n';
      }
      return exit_ok;
    }

    if (*enumerate_cmd) {
      detail::check_format(format);
      auto stream = even ? enumerate_even(n, cap) : enumerate_signed(n, cap);
      if (format == "json") {
        json list = json::array();
        for (auto const& s : stream) list.push_back(format_signed(s));
        out << list.dump() << '\n';
      } else {
        for (auto const& s : stream) out << format_signed(s) << '\n';
      }
      return exit_ok;
    }

    if (*verify_cmd) {
      detail::check_format(format);
      if (!all_claims && claim_id.empty()) {
        err << "error: verify needs --claim <id> or --all\n";
        return exit_usage;
      }
      if (!oracle.empty() && oracle != "bsgs") {
        err << "error: unknown oracle '" << oracle << "'\n";
        return exit_usage;
      }
      vopt.bsgs_oracle = oracle == "bsgs";
      if (vopt.jobs == 0) vopt.jobs = std::max(1u, std::thread::hardware_concurrency());
      std::vector<VerificationReport> reports;
      if (all_claims) {
        reports = verify_all(n, vopt);
      } else {
        reports.push_back(verify(parse_claim(claim_id), n, vopt));
      }
      bool ok = std::all_of(reports.begin(), reports.end(), [](auto const& r) { return r.ok(); });
      if (format == "json") {
        json list = json::array();
        for (auto const& r : reports) list.push_back(detail::report_json(r));
        out << list.dump() << '\n';
      } else {
        for (auto const& r : reports) detail::print_report(r, out);
      }
      return ok ? exit_ok : exit_counterexample;
    }

    if (*valuation_cmd) {
      detail::check_format(format);
      std::vector<VerificationReport> reports{verify_corollary(limit, exact_limit),
                                              verify_divisibility(limit, exact_limit)};
      bool ok = reports[0].ok() && reports[1].ok();
      if (format == "json") {
        json list = json::array();
        for (auto const& r : reports) list.push_back(detail::report_json(r));
        out << list.dump() << '\n';
      } else {
        for (auto const& r : reports) {
          for (auto const& c : r.counterexamples) out << "failure: " << r.claim << ' ' << c.input << '\n';
        }
        for (auto const& r : reports) out << summary_line(r) << '\n';
      }
      return ok ? exit_ok : exit_counterexample;
    }

    if (*render_cmd) {
      std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
      auto d = parse_diagram(text);
      if (render_format == "json") {
        json edges = json::array();
        for (auto const& e : d.edges()) edges.push_back({{"u", e.u}, {"v", e.v}, {"sign", std::string(1, sign_char(e.sign))}});
        out << json{{"n", d.n()}, {"line", format_diagram(d)}, {"vertical", is_vertical(d)}, {"edges", edges}}.dump()
            << '\n';
      } else {
        out << render(d, parse_render_format(render_format));
      }
      return exit_ok;
    }
  } catch (ParseError const& e) {
    detail::report_parse_error(e, err);
    return exit_usage;
  } catch (std::exception const& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}

inline int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(std::move(args), std::cin, std::cout, std::cerr);
}

}  // namespace sbrauer::cli

#endif

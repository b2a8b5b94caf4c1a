#pragma once

// Command-line front end. run_command is the whole program minus main().
//
// Exit codes: 0 ok, 1 precondition failure, 2 usage error,
// 3 theorem violated or internal inconsistency.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polyabc/abc.hpp"
#include "polyabc/corollaries.hpp"
#include "polyabc/error.hpp"
#include "polyabc/exact_field.hpp"
#include "polyabc/harness.hpp"
#include "polyabc/parse.hpp"
#include "polyabc/radical.hpp"
#include "polyabc/report.hpp"

namespace polyabc {

enum ExitCode : int { kExitOk = 0, kExitPrecondition = 1, kExitUsage = 2, kExitViolated = 3 };

inline int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::SyntaxError:
    case ErrorKind::LiteralOutOfField:
    case ErrorKind::ConfigError:
    case ErrorKind::NotPrime:
    case ErrorKind::NotFiniteField:
      return kExitUsage;
    case ErrorKind::InternalInconsistency:
    case ErrorKind::DivisibilityFailure:
    case ErrorKind::FieldMismatch:
      return kExitViolated;
    default:
      return kExitPrecondition;
  }
}

namespace detail {

// Outcome of one subcommand before rendering.
struct CommandOutcome {
  Json result;
  std::string text;
  int code = kExitOk;
};

// Lets "-b -t^5" and "--x-den -3" through: a value that starts with '-'
// would otherwise be read as another flag.
inline std::vector<std::string> glue_dash_values(const std::vector<std::string>& args) {
  static const std::set<std::string> value_flags{
      "-a", "-b", "-c", "-f", "-g", "-x", "-y", "-n", "--x-den", "--y-den", "--u", "--v", "--w",
      "--poly", "--field", "--p", "--q", "--r", "--n", "--seed"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const auto& a = args[i];
    if (value_flags.count(a) && i + 1 < args.size() && args[i + 1].size() > 1 && args[i + 1][0] == '-') {
      out.push_back(a.rfind("--", 0) == 0 ? a + "=" + args[i + 1] : a + args[i + 1]);
      ++i;
    } else {
      out.push_back(a);
    }
  }
  return out;
}

inline std::uint64_t default_seed() {
  if (const char* env = std::getenv("POLYABC_SEED"); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    fail(ErrorKind::ConfigError, "POLYABC_SEED is not an unsigned integer");
  }
  return 42;
}

inline std::string verdict_text(const MsVerdict& v) {
  std::string s = std::string(to_string(v.kind)) + " max3_degree=" + std::to_string(v.max3_degree) +
                  " radical_degree=" + std::to_string(v.radical_degree);
  if (v.margin) s += " margin=" + std::to_string(*v.margin);
  if (v.wronskian_degree) s += " wronskian_degree=" + std::to_string(*v.wronskian_degree);
  return s + "\n";
}

inline std::string constancy_text(const ConstancyReport& r) {
  std::string s = std::string(to_string(r.kind)) + " degrees=(" + std::to_string(r.degrees[0]) + ", " +
                  std::to_string(r.degrees[1]) + ", " + std::to_string(r.degrees[2]) + ")";
  s += " descent_steps=" + std::to_string(r.descent_trace.size()) + "\n";
  return s;
}

inline std::string search_text(const SearchReport& r) {
  std::string s = "target=" + std::string(to_string(r.config.target)) + " field=" + r.config.field.to_string() +
                  " mode=" + r.mode + " max_degree=" + std::to_string(r.config.max_degree) + "\n";
  s += "pairs_enumerated=" + std::to_string(r.pairs_enumerated) +
       " triples_examined=" + std::to_string(r.triples_examined) + "\n";
  s += "holds=" + std::to_string(r.holds_count) + " vanishing=" + std::to_string(r.vanishing_count) +
       " violations=" + std::to_string(r.violation_count) + " tight=" + std::to_string(r.tight_count) + "\n";
  for (const auto& [name, t] : r.laws) {
    s += "law " + name + ": " + std::to_string(t.passed) + " passed, " + std::to_string(t.failed) + " failed\n";
  }
  for (const auto& w : r.violations) {
    s += "violation: (" + w.triple[0] + ", " + w.triple[1] + ", " + w.triple[2] + ")";
    if (!w.note.empty()) s += " " + w.note;
    s += "\n";
  }
  return s;
}

}  // namespace detail

inline int run_command(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks of the polynomial abc theorem and its corollaries", "polyabc"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string field_text = "q";
  bool json = false;
  bool no_timing = false;
  app.add_option("--field", field_text, "q or fp:<prime>");
  app.add_flag("--json", json, "emit a JSON report document");
  app.add_flag("--no-timing", no_timing, "null out wall-clock timing in JSON");

  std::string poly, a, b, c, f, g, x = "0", x_den = "1", y = "0", y_den = "1";
  std::string u = "1", v = "1", w = "-1";
  std::uint64_t n = 3, cp = 0, cq = 0, cr = 0;
  std::string target = "ms", mode;
  std::size_t max_degree = 2, samples = 1000, workers = 1, record_limit = 32;
  std::optional<std::uint64_t> seed;

  auto unary = [&](const char* name, const char* help) {
    auto* sc = app.add_subcommand(name, help);
    sc->add_option("poly,--poly", poly, "polynomial in t")->required();
    return sc;
  };
  auto triple = [&](const char* name, const char* help) {
    auto* sc = app.add_subcommand(name, help);
    sc->add_option("-a", a)->required();
    sc->add_option("-b", b)->required();
    sc->add_option("-c", c)->required();
    return sc;
  };
  auto fg = [&](const char* name, const char* help) {
    auto* sc = app.add_subcommand(name, help);
    sc->add_option("-f", f)->required();
    sc->add_option("-g", g)->required();
    return sc;
  };

  auto* radical_cmd = unary("radical", "monic radical");
  auto* div_radical_cmd = unary("div-radical", "a / rad(a)");
  auto* descend_cmd = unary("descend", "repeated p-th roots while the derivative vanishes");
  auto* wronskian_cmd = app.add_subcommand("wronskian", "W(a, b) = a b' - a' b");
  wronskian_cmd->add_option("-a", a)->required();
  wronskian_cmd->add_option("-b", b)->required();
  auto* ms_cmd = triple("check-ms", "Mason-Stothers verdict for coprime a + b + c = 0");
  auto* ms_nc_cmd = triple("check-ms-noncoprime", "non-coprime degree bound");
  auto* flt_cmd = triple("check-flt", "a^n + b^n = c^n constancy");
  flt_cmd->add_option("-n,--n", n, "exponent")->required();
  auto* catalan_cmd = triple("check-catalan", "u a^p + v b^q + w c^r = 0 constancy");
  catalan_cmd->add_option("--p", cp)->required();
  catalan_cmd->add_option("--q", cq)->required();
  catalan_cmd->add_option("--r", cr)->required();
  catalan_cmd->add_option("--u", u);
  catalan_cmd->add_option("--v", v);
  catalan_cmd->add_option("--w", w);
  auto* dav_cmd = fg("check-davenport", "deg f + 2 <= 2 deg(f^3 - g^2), characteristic 0");
  auto* dav_p_cmd = fg("check-davenport-prime", "same bound for coprime f, g with nonzero derivatives");
  auto* ell_cmd = app.add_subcommand("check-elliptic", "y^2 = x^3 + 1 over k(t)");
  ell_cmd->add_option("-x", x);
  ell_cmd->add_option("--x-den", x_den);
  ell_cmd->add_option("-y", y);
  ell_cmd->add_option("--y-den", y_den);
  auto* search_cmd = app.add_subcommand("search", "exhaustive or random search");
  search_cmd->add_option("--target", target, "ms | noncoprime | flt | davenport | lemmas | wronskian");
  search_cmd->add_option("--max-degree", max_degree);
  search_cmd->add_option("--n", n, "FLT exponent");
  search_cmd->add_option("--seed", seed);
  search_cmd->add_option("--samples", samples);
  search_cmd->add_option("--workers", workers);
  search_cmd->add_option("--mode", mode, "exhaustive | random");
  search_cmd->add_option("--record-limit", record_limit);
  auto* reproduce_cmd = app.add_subcommand("reproduce", "worked examples with recorded expectations");

  auto args = detail::glue_dash_values(raw_args);
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  ReportDocument doc;
  doc.command = Json{{"name", sub->get_name()}, {"field", field_text}};
  const auto start = std::chrono::steady_clock::now();

  auto emit = [&](const detail::CommandOutcome& o) {
    if (!no_timing) {
      doc.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
    if (json) {
      doc.result = o.result;
      out << doc.to_json().dump(2) << "\n";
    } else {
      out << o.text;
    }
    return o.code;
  };

  try {
    const FieldDesc fd = FieldDesc::parse(field_text);
    Json& echo = doc.command;
    if (sub == search_cmd) {
      SearchConfig cfg;
      cfg.field = fd;
      cfg.target = parse_search_target(target);
      cfg.max_degree = max_degree;
      cfg.flt_n = n;
      cfg.seed = seed ? *seed : detail::default_seed();
      cfg.workers = workers;
      cfg.samples = samples;
      cfg.record_limit = record_limit;
      const bool exhaustive_target = cfg.target == SearchTarget::MasonStothers ||
                                     cfg.target == SearchTarget::NonCoprimeVariant ||
                                     cfg.target == SearchTarget::Flt;
      if (mode.empty()) mode = fd.is_finite() && exhaustive_target ? "exhaustive" : "random";
      if (mode != "exhaustive" && mode != "random") fail(ErrorKind::ConfigError, "mode must be exhaustive or random");
      if (mode == "exhaustive" && !exhaustive_target) {
        fail(ErrorKind::ConfigError, "target has no exhaustive search; use --mode random");
      }
      echo["args"] = Json{{"mode", mode}};
      const auto report = mode == "exhaustive" ? run_search(cfg) : random_suite(cfg);
      // Over F_p the non-coprime bound genuinely fails; those hits are findings.
      const bool expect_none = !(cfg.target == SearchTarget::NonCoprimeVariant && fd.is_finite());
      return emit({to_json(report), detail::search_text(report),
                   expect_none && report.violation_count > 0 ? kExitViolated : kExitOk});
    }
    if (sub == reproduce_cmd) {
      const auto records = reproduce_worked_examples();
      Json list = Json::array();
      std::string text;
      bool all_pass = true;
      for (const auto& r : records) {
        list.push_back(to_json(r));
        all_pass = all_pass && r.pass;
        text += std::string(r.pass ? "PASS" : "FAIL") + (r.informational ? " (informational) " : " ") + r.name +
                ": " + r.actual + "\n";
      }
      return emit({Json{{"examples", list}, {"all_pass", all_pass}}, text, all_pass ? kExitOk : kExitViolated});
    }

    return with_field(fd, [&](const auto& field) -> int {
      using P = std::decay_t<decltype(parse_poly(std::string_view{}, field))>;
      auto read = [&](const char* name, const std::string& text) {
        echo["args"][name] = text;
        return parse_poly(text, field);
      };
      auto scalar = [&](const char* name, const std::string& text) {
        const P p = read(name, text);
        if (!p.is_constant()) fail(ErrorKind::ConfigError, std::string(name) + " must be a constant");
        return p.coeff(0);
      };
      echo["args"] = Json::object();

      if (sub == radical_cmd || sub == div_radical_cmd) {
        const auto in = read("poly", poly);
        const auto r = sub == radical_cmd ? radical(in) : div_radical(in);
        return emit({Json{{"value", format_poly(r)}, {"degree", r.nat_degree()}}, format_poly(r) + "\n"});
      }
      if (sub == descend_cmd) {
        const auto chain = descent_chain(read("poly", poly));
        Json steps = Json::array();
        std::string text;
        for (const auto& step : chain) {
          steps.push_back(Json{{"value", format_poly(step)}, {"degree", step.nat_degree()}});
          text += std::to_string(step.nat_degree()) + ": " + format_poly(step) + "\n";
        }
        return emit({Json{{"chain", steps}, {"root", format_poly(chain.back())}}, text});
      }
      if (sub == wronskian_cmd) {
        const auto wv = wronskian(read("a", a), read("b", b));
        return emit({Json{{"value", format_poly(wv)}, {"degree", optional_json(wv.degree())}}, format_poly(wv) + "\n"});
      }
      if (sub == ms_cmd || sub == ms_nc_cmd) {
        const auto pa = read("a", a), pb = read("b", b), pc = read("c", c);
        MsVerdict verdict{};
        bool theorem_applies = true;
        if (sub == ms_cmd) {
          verdict = mason_stothers_verdict(pa, pb, pc);
        } else if (fd.characteristic() == 0) {
          verdict = ms_noncoprime_verdict_char0(pa, pb, pc);
        } else {
          verdict = noncoprime_degree_verdict(pa, pb, pc);
          theorem_applies = false;
        }
        const bool violated = theorem_applies && verdict.kind == VerdictKind::Violation;
        return emit({to_json(verdict), detail::verdict_text(verdict), violated ? kExitViolated : kExitOk});
      }
      if (sub == flt_cmd || sub == catalan_cmd) {
        ConstancyReport report;
        if (sub == flt_cmd) {
          echo["args"]["n"] = n;
          report = flt_check(n, read("a", a), read("b", b), read("c", c));
        } else {
          echo["args"]["p"] = cp;
          echo["args"]["q"] = cq;
          echo["args"]["r"] = cr;
          const CatalanParams<std::decay_t<decltype(field)>> params{cp, cq, cr, scalar("u", u), scalar("v", v),
                                                                    scalar("w", w)};
          report = flt_catalan_check(params, read("a", a), read("b", b), read("c", c));
        }
        return emit({to_json(report), detail::constancy_text(report),
                     report.kind == ConstancyKind::TheoremViolated ? kExitViolated : kExitOk});
      }
      if (sub == dav_cmd || sub == dav_p_cmd) {
        const auto pf = read("f", f), pg = read("g", g);
        const auto r = sub == dav_cmd ? davenport_check(pf, pg) : davenport_prime_check(pf, pg);
        return emit({to_json(r), "lhs=" + std::to_string(r.lhs) + " rhs=" + std::to_string(r.rhs) +
                                     (r.holds ? " holds\n" : " fails\n"),
                     r.holds ? kExitOk : kExitViolated});
      }
      if (sub == ell_cmd) {
        const RatFunc xr(read("x", x), read("x_den", x_den));
        const RatFunc yr(read("y", y), read("y_den", y_den));
        const auto report = elliptic_parametrization_check(xr, yr);
        return emit({to_json(report), detail::constancy_text(report),
                     report.kind == ConstancyKind::TheoremViolated ? kExitViolated : kExitOk});
      }
      fail(ErrorKind::InternalInconsistency, "unhandled subcommand");
    });
  } catch (const Error& e) {
    const int code = exit_code_for(e.kind());
    err << "error: " << e.what();
    if (e.hypothesis()) err << " [hypothesis " << *e.hypothesis() << "]";
    err << "\n";
    if (json) {
      doc.error = to_json(e);
      const bool constancy_cmd = sub == flt_cmd || sub == catalan_cmd || sub == ell_cmd;
      if (constancy_cmd && e.kind() == ErrorKind::PreconditionViolated) {
        doc.result = Json{{"kind", to_string(ConstancyKind::HypothesisFailed)}};
      }
      if (!no_timing) {
        doc.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      }
      out << doc.to_json().dump(2) << "\n";
    }
    return code;
  }
}

}  // namespace polyabc

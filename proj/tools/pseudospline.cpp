#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <optional>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "pseudospline/api.hpp"
#include "pseudospline/service.hpp"

namespace ps = pseudospline;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kIo = 3 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string family;
  std::vector<std::string> args;
  std::string format;
  std::string out;
  int levels = 5;
  std::optional<int> steps;
  int port = ps::kDefaultPort;
  std::string host = "127.0.0.1";
  int lprime_max = ps::kMaxCurveLprime;
};

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    throw IoError("cannot open " + path + " for writing");
  }
  f << text;
  f.close();
  if (!f) {
    throw IoError("failed writing " + path);
  }
}

std::string json_text(const ps::Json& j) { return j.dump(2) + "\n"; }

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (format == a) {
      return;
    }
  }
  throw std::invalid_argument("unsupported --format '" + format + "' for this command");
}

ps::SchemeSpec scheme_of(const Options& o) { return ps::build_scheme(ps::query_from_positional(o.family, o.args)); }

std::string symbol_text(const ps::SchemeSpec& s) {
  std::ostringstream os;
  os << "family " << ps::family_name(s.family) << ", m = " << s.m << ", r = " << s.r << ", tau = " << s.tau << "\n"
     << "a(z) = " << s.a.str() << "\n"
     << "b(z) = " << s.b.str() << "\n";
  return os.str();
}

std::string report_text(const ps::RegularityReport& r) {
  std::ostringstream os;
  os << "regularity " << ps::display_value(r.regularity) << (r.exact ? "" : " (lower bound)") << "\n"
     << "r = " << r.r << ", rho in [" << r.rho_lo << ", " << r.rho_hi << "]";
  if (r.rho_exact) {
    os << ", rho = " << *r.rho_exact;
  }
  os << "\npositivity " << ps::positivity_name(r.positivity.status) << "\n";
  if (r.flagged) {
    os << "warning: " << r.flag_reason << "\n";
  }
  return os.str();
}

int cmd_symbol(const Options& o) {
  require_format(o.format, {"json", "text"});
  const ps::SchemeSpec s = scheme_of(o);
  emit(o.format == "text" ? symbol_text(s) : json_text(ps::to_json(s)), o.out);
  return kOk;
}

int cmd_regularity(const Options& o) {
  require_format(o.format, {"json", "text"});
  const ps::RegularityReport r = ps::exact_regularity(scheme_of(o));
  emit(o.format == "text" ? report_text(r) : json_text(ps::to_json(r)), o.out);
  return kOk;
}

int cmd_table(const Options& o) {
  if (o.args.size() != 3) {
    throw std::invalid_argument("usage: table m n_max lprime_max");
  }
  const int m = ps::parse_int(o.args[0], "m");
  const int n_max = ps::parse_int(o.args[1], "n_max");
  const int lp_max = ps::parse_int(o.args[2], "lprime_max");
  const auto cells = ps::regularity_table(m, n_max, lp_max);
  if (o.format == "csv") {
    emit(ps::table_csv(cells), o.out);
  } else if (o.format == "json") {
    emit(json_text(ps::table_json(cells)), o.out);
  } else {
    require_format(o.format, {"text"});
    emit(ps::table_text(cells, lp_max), o.out);
  }
  return kOk;
}

int cmd_sample(const Options& o) {
  require_format(o.format, {"csv", "json"});
  const ps::CardinalSamples c = ps::cardinal_samples(scheme_of(o), o.levels);
  emit(o.format == "json" ? json_text(ps::to_json(c)) : ps::samples_csv(c), o.out);
  return kOk;
}

int cmd_sweep(const Options& o) {
  require_format(o.format, {"csv", "json"});
  if (o.args.size() != 1) {
    throw std::invalid_argument("usage: sweep-tension m --steps N");
  }
  const int m = ps::parse_int(o.args[0], "m");
  const auto rows = ps::tension_sweep(m, o.steps.value_or(11));
  emit(o.format == "json" ? json_text(ps::sweep_json(m, rows)) : ps::sweep_csv(rows), o.out);
  return kOk;
}

int cmd_curve(const Options& o) {
  require_format(o.format, {"csv"});
  std::vector<int> arities;
  for (const auto& a : o.args) {
    arities.push_back(ps::parse_int(a, "m"));
  }
  if (arities.empty()) {
    arities = {2, 3, 4, 5, 6, 7};
  }
  emit(ps::curve_csv(ps::dd_curve(arities, o.lprime_max, o.steps.value_or(4))), o.out);
  return kOk;
}

int cmd_verify(const Options& o) {
  std::vector<std::string> suites = o.args;
  if (suites.empty() || (suites.size() == 1 && suites[0] == "all")) {
    suites = ps::verify_suite_names();
  }
  for (const auto& s : suites) {
    const auto& names = ps::verify_suite_names();
    if (std::find(names.begin(), names.end(), s) == names.end()) {
      throw std::invalid_argument("unknown suite '" + s + "'");
    }
  }
  std::ostringstream os;
  bool ok = true;
  for (const auto& s : suites) {
    const ps::SuiteResult r = ps::run_verify_suite(s);
    for (const auto& c : r.checks) {
      os << (c.passed ? "PASS " : "FAIL ") << r.suite << ": " << c.name;
      if (!c.passed) {
        os << " -- counterexample " << c.detail;
      }
      os << "\n";
    }
    ok = ok && r.passed();
  }
  emit(os.str(), o.out);
  return ok ? kOk : kVerifyFailed;
}

int cmd_serve(const Options& o) {
  if (o.port <= 0 || o.port > 65535) {
    throw std::invalid_argument("port must be in [1, 65535]");
  }
  if (!ps::serve(o.host, o.port)) {
    std::cerr << "error: cannot listen on " << o.host << ":" << o.port << "\n";
    return kIo;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pseudo-spline subdivision symbols and their exact Hoelder regularity"};
  app.require_subcommand(1);
  Options o;

  const auto family_cmd = [&](const char* name, const char* help, const std::string& default_format) {
    // Defaults are applied after parsing; the option variables are shared between subcommands.
    CLI::App* c = app.add_subcommand(name, help);
    c->add_option("family", o.family, "pseudo | bspline | dd-primal | dd-dual | dd-dual-conjecture | lian | tension | custom")
        ->required();
    c->add_option("params", o.args, "family parameters");
    c->add_option("--format", o.format, "default " + default_format);
    c->add_option("--out", o.out, "output file (default standard output)");
    return c;
  };

  CLI::App* symbol = family_cmd("symbol", "Print the symbol of a scheme", "json");
  CLI::App* regularity = family_cmd("regularity", "Exact Hoelder regularity of a scheme", "json");
  CLI::App* sample = family_cmd("sample", "Samples of the cardinal limit function", "csv");
  sample->add_option("--levels", o.levels, "refinement levels (default 5)");

  CLI::App* table = app.add_subcommand("table", "Regularity table of pseudo-splines: m n_max lprime_max");
  table->add_option("args", o.args)->expected(3)->required();
  table->add_option("--format", o.format, "text (default), csv or json");
  table->add_option("--out", o.out);

  CLI::App* sweep = app.add_subcommand("sweep-tension", "Regularity of the four-point scheme with tension: m");
  sweep->add_option("m", o.args)->expected(1)->required();
  sweep->add_option("--steps", o.steps, "number of omega values in [0, 1] (default 11)");
  sweep->add_option("--format", o.format, "csv (default) or json");
  sweep->add_option("--out", o.out);

  CLI::App* curve = app.add_subcommand("dd-curve", "Regularity versus l' for Dubuc-Deslauriers schemes with tension");
  curve->add_option("arities", o.args, "arities (default 2..7)");
  curve->add_option("--lprime-max", o.lprime_max, "largest l' (default 30)");
  curve->add_option("--steps", o.steps, "tension steps between consecutive l' (default 4)");
  curve->add_option("--format", o.format, "csv");
  curve->add_option("--out", o.out);

  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite (or all)");
  verify->add_option("suite", o.args);
  verify->add_option("--out", o.out);

  CLI::App* serve = app.add_subcommand("serve", "Serve the JSON API");
  serve->add_option("--port", o.port, "default 8787");
  serve->add_option("--host", o.host, "default 127.0.0.1");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  const auto format_or = [&](const char* fallback) {
    if (o.format.empty()) {
      o.format = fallback;
    }
  };
  try {
    if (symbol->parsed() || regularity->parsed()) format_or("json");
    if (sample->parsed() || sweep->parsed() || curve->parsed()) format_or("csv");
    if (table->parsed()) format_or("text");
    if (symbol->parsed()) return cmd_symbol(o);
    if (regularity->parsed()) return cmd_regularity(o);
    if (sample->parsed()) return cmd_sample(o);
    if (table->parsed()) return cmd_table(o);
    if (sweep->parsed()) return cmd_sweep(o);
    if (curve->parsed()) return cmd_curve(o);
    if (verify->parsed()) return cmd_verify(o);
    if (serve->parsed()) return cmd_serve(o);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

#include "cohomtab/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cohomtab/decomposition.hpp"
#include "cohomtab/functionals.hpp"
#include "cohomtab/identity_suite.hpp"
#include "cohomtab/sheaf_library.hpp"
#include "cohomtab/supernatural.hpp"
#include "cohomtab/table_io.hpp"

namespace cohomtab::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr const char* kDefaultWindow = "-10:10";

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  if (text.empty() || text == "()") return out;
  std::string body = text;
  if (body.front() == '(' && body.back() == ')') body = body.substr(1, body.size() - 2);
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ParseError("malformed " + what + " entry '" + item + "'");
    }
  }
  return out;
}

Window parse_window(const std::string& text) {
  const auto colon = text.find(':', text.empty() || text.front() != '-' ? 0 : 1);
  if (colon == std::string::npos) throw ParseError("window must be lo:hi, got '" + text + "'");
  const auto bounds = parse_int_list(text.substr(0, colon) + "," + text.substr(colon + 1), "window");
  if (bounds.size() != 2 || bounds[0] > bounds[1]) {
    throw ParseError("window must be lo:hi with lo <= hi, got '" + text + "'");
  }
  return {bounds[0], bounds[1]};
}

std::string default_window() {
  const char* env = std::getenv("COHOMTAB_WINDOW");
  return env && *env ? env : kDefaultWindow;
}

std::string slurp(std::istream& in) {
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// A table source is "-" (stdin), an existing file, or a stock sheaf name.
CohomologyTable load_table(const std::string& source, const std::string& window, std::istream& in) {
  if (source.empty() || source == "-") return parse_table(slurp(in));
  if (std::filesystem::exists(source)) {
    std::ifstream file(source);
    if (!file) throw ParseError("cannot read '" + source + "'");
    return parse_table(slurp(file));
  }
  return stock_table(source, parse_window(window));
}

void emit_table(std::ostream& out, const CohomologyTable& t, const std::string& emit, bool pretty) {
  if (emit == "json") {
    out << format_json(t, pretty) << '\n';
  } else {
    out << format_text(t, pretty);
  }
}

BoundSequence parse_phi(const std::string& text, int s) {
  if (text == "inf") return infinite_bounds(s);
  if (text.find(',') == std::string::npos) {
    return phi_bounds(parse_int_list(text, "phi").at(0), s);
  }
  BoundSequence psi;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    psi.push_back(item == "inf" ? kInfinity : parse_int_list(item, "phi").at(0));
  }
  if (static_cast<int>(psi.size()) != s + 2) {
    throw ParseError("bound list must have one entry per degree");
  }
  return psi;
}

int residual_nonzero_entries(const CohomologyTable& t) {
  int count = 0;
  for (int i = 0; i <= t.ambient(); ++i) {
    for (int d = t.window().lo; d <= t.window().hi; ++d) count += t.stored(i, d) != 0;
  }
  return count;
}

ordered_json decomposition_json(const Decomposition& dec, bool pretty) {
  ordered_json j;
  j["n"] = dec.ambient;
  j["steps"] = ordered_json::array();
  for (const auto& step : dec.steps) {
    ordered_json s;
    s["roots"] = step.roots.values();
    s["q"] = format_rational(step.coefficient, pretty);
    s["killed"] = step.killed_corners;
    j["steps"].push_back(std::move(s));
  }
  j["residual_nonzero_entries"] = residual_nonzero_entries(dec.residual);
  j["status"] = to_string(dec.status);
  if (dec.exhausted_at) j["exhausted_at"] = {dec.exhausted_at->first, dec.exhausted_at->second};
  j["top_row_max"] = format_rational(dec.top_row_max, pretty);
  return j;
}

std::vector<DecompositionStep> steps_from_json(const std::string& text, int& n) {
  const auto j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object() || !j.contains("steps") || !j.contains("n")) {
    throw ParseError("expected decomposition JSON with 'n' and 'steps'");
  }
  n = j.at("n").get<int>();
  std::vector<DecompositionStep> steps;
  for (const auto& s : j.at("steps")) {
    DecompositionStep step;
    step.roots = RootSequence(s.at("roots").get<std::vector<int>>());
    step.coefficient = parse_rational(s.at("q").get<std::string>());
    if (s.contains("killed")) step.killed_corners = s.at("killed").get<std::vector<int>>();
    steps.push_back(std::move(step));
  }
  return steps;
}

struct Options {
  std::string emit = "text";
  bool pretty = false;
  std::string window;
  std::string source;
  std::string roots;
  std::string scale = "1";
  int ambient = -1;
  int twist_by = 0;
  int max_steps = 100;
  int per_dimension = 0;
  bool residual = false;
  std::string degrees;
  std::string phi;
  bool show_table = false;
  std::optional<int> c;
  std::optional<int> tau;
  std::string box = "-6:6";
  int smax = 4;
  std::uint64_t seed = kDefaultSeed;
  int trials = 500;
  std::string columns;
};

void add_emit(CLI::App* sub, Options& o) {
  sub->add_option("--emit", o.emit, "Output format")->check(CLI::IsMember({"text", "json"}));
  sub->add_flag("--pretty", o.pretty, "Print integers without /1");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact cohomology tables: supernatural generators, greedy decomposition, "
               "positivity functionals"};
  app.name("cohomtab");
  app.require_subcommand(1);
  Options o;
  o.window = default_window();

  auto* sn = app.add_subcommand("supernatural", "Emit the supernatural table with given roots");
  sn->add_option("--roots", o.roots, "Decreasing roots, e.g. 3,-2 (empty for a point)")->required();
  sn->add_option("--scale", o.scale, "Positive rational multiplier");
  sn->add_option("--ambient", o.ambient, "Ambient dimension n (default: number of roots)");
  sn->add_option("--window", o.window, "Degree window lo:hi");
  add_emit(sn, o);

  auto* stock = app.add_subcommand("stock", "Emit a stock table");
  stock->add_option("name", o.source, "ideal-point-p2, line:a:n, bundle:s:a:n, skew-lines, "
                                      "conic-point, T2, T3; join with + for a direct sum")
      ->required();
  stock->add_option("--twist", o.twist_by, "Twist F -> F(a)");
  stock->add_option("--window", o.window, "Degree window lo:hi");
  add_emit(stock, o);

  auto* dec = app.add_subcommand("decompose", "Greedy decomposition into supernatural tables");
  dec->add_option("table", o.source, "Table file, stock name, or - for stdin");
  dec->add_option("--max-steps", o.max_steps, "Step budget")->check(CLI::NonNegativeNumber);
  dec->add_option("--per-dimension", o.per_dimension, "Step budget per dimension (0: none)")
      ->check(CLI::NonNegativeNumber);
  dec->add_flag("--residual", o.residual, "Also print the residual table (text mode)");
  dec->add_option("--window", o.window, "Window for stock names");
  add_emit(dec, o);

  auto* fn = app.add_subcommand("functional", "Evaluate L(d, psi) on a table");
  fn->add_option("table", o.source, "Table file, stock name, or - for stdin");
  fn->add_option("--degrees", o.degrees, "Increasing degrees d_0,...,d_{s+1}")->required();
  fn->add_option("--phi", o.phi, "j for phi^j(s), 'inf', or an explicit bound list")->required();
  fn->add_flag("--show-table", o.show_table, "Also render the coefficient table");
  fn->add_option("--window", o.window, "Window for stock names");
  fn->add_flag("--pretty", o.pretty, "Print integers without /1");

  auto* pr = app.add_subcommand("pairing", "Pair the pure Betti table of d with a table");
  pr->add_option("table", o.source, "Table file, stock name, or - for stdin");
  pr->add_option("--degrees", o.degrees, "Increasing degrees d_0,...,d_{s+1}")->required();
  auto* c_opt = pr->add_option("--c", o.c, "Cut degree c for the truncated pairing");
  auto* tau_opt = pr->add_option("--tau", o.tau, "Row tau for the truncated pairing");
  c_opt->needs(tau_opt);
  tau_opt->needs(c_opt);
  pr->add_option("--window", o.window, "Window for stock names");
  pr->add_flag("--pretty", o.pretty, "Print integers without /1");

  auto* cert = app.add_subcommand("certify", "Search for a negative positivity functional");
  cert->add_option("table", o.source, "Table file, stock name, or - for stdin");
  cert->add_option("--box", o.box, "Degree box lo:hi for d");
  cert->add_option("--smax", o.smax, "Largest s to try")->check(CLI::NonNegativeNumber);
  cert->add_option("--window", o.window, "Window for stock names");
  cert->add_flag("--pretty", o.pretty, "Print integers without /1");

  auto* ids = app.add_subcommand("check-identities", "Run the exact identity suites");
  ids->add_option("--trials", o.trials, "Trials per suite")->check(CLI::PositiveNumber);
  ids->add_option("--seed", o.seed, "Random seed");
  ids->add_option("--smax", o.smax, "Largest s")->check(CLI::NonNegativeNumber);

  auto* ren = app.add_subcommand("render", "Draw a table as a grid (display columns d+i)");
  ren->add_option("table", o.source, "Table file, stock name, or - for stdin");
  ren->add_option("--columns", o.columns, "Display columns a:b");
  ren->add_option("--window", o.window, "Window for stock names");

  auto* rec = app.add_subcommand("reconstruct", "Sum q*gamma^z over a window from decomposition JSON");
  rec->add_option("decomposition", o.source, "Decomposition JSON file or - for stdin");
  rec->add_option("--window", o.window, "Degree window lo:hi")->required();
  add_emit(rec, o);

  bool smax_given = false;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    smax_given = ids->count("--smax") > 0;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*sn) {
      const RootSequence roots(parse_int_list(o.roots, "roots"));
      const int n = o.ambient < 0 ? roots.length() : o.ambient;
      const SupernaturalSpec spec(roots, n, parse_rational(o.scale));
      emit_table(out, supernatural_table(spec, parse_window(o.window)), o.emit, o.pretty);
    } else if (*stock) {
      emit_table(out, stock_table(o.source, parse_window(o.window), o.twist_by), o.emit, o.pretty);
    } else if (*dec) {
      const CohomologyTable t = load_table(o.source, o.window, in);
      DecomposeOptions opts{o.max_steps, std::nullopt};
      if (o.per_dimension > 0) opts.per_dimension_budget = o.per_dimension;
      const Decomposition result = decompose(t, opts);
      if (o.emit == "json") {
        out << decomposition_json(result, o.pretty).dump() << '\n';
      } else {
        for (const auto& step : result.steps) {
          out << "z=" << step.roots.to_string() << " q=" << format_rational(step.coefficient, o.pretty)
              << '\n';
        }
        out << "status=" << to_string(result.status) << " steps=" << result.steps.size()
            << " residual_nonzero_entries=" << residual_nonzero_entries(result.residual)
            << " top_row_max=" << format_rational(result.top_row_max, o.pretty) << '\n';
        if (o.residual) out << format_text(result.residual, o.pretty);
      }
      if (result.status == DecompositionStatus::kWindowExhausted) {
        err << "window exhausted at (" << result.exhausted_at->first << ","
            << result.exhausted_at->second << "): " << result.exhausted_reason << '\n';
        return kOutOfWindow;
      }
    } else if (*fn) {
      const DegreeSequence d(parse_int_list(o.degrees, "degrees"));
      const BoundSequence psi = parse_phi(o.phi, d.s());
      const CohomologyTable t = load_table(o.source, o.window, in);
      out << format_rational(evaluate_L(d, psi, t), o.pretty) << '\n';
      if (o.show_table) {
        const CohomologyTable f = functional_table(d, psi, t.ambient());
        RenderOptions ro;
        ro.first_column = f.window().lo;
        ro.last_column = f.window().hi + std::max(dimension(f), 0);
        ro.pretty = o.pretty;
        out << render(f, ro);
      }
    } else if (*pr) {
      const DegreeSequence d(parse_int_list(o.degrees, "degrees"));
      const CohomologyTable t = load_table(o.source, o.window, in);
      const BettiTable beta = pure_betti(d);
      const Rational v = o.c ? pairing_c_tau(beta, t, *o.c, *o.tau) : pairing(beta, t);
      out << format_rational(v, o.pretty) << '\n';
    } else if (*cert) {
      const Window box = parse_window(o.box);
      const CohomologyTable t = load_table(o.source, o.window, in);
      const auto found = certificate_search(t, {box.lo, box.hi}, o.smax);
      if (!found) {
        out << "none\n";
      } else {
        ordered_json j;
        j["degrees"] = found->degrees.values();
        j["j"] = found->j;
        j["value"] = format_rational(found->value, o.pretty);
        out << j.dump() << '\n';
      }
    } else if (*ids) {
      SuiteOptions opts;
      opts.seed = o.seed;
      opts.trials = o.trials;
      if (smax_given) opts.max_s = o.smax;
      bool ok = true;
      for (const auto& r : run_identity_suites(opts)) {
        out << r.name << ": trials=" << r.trials << " failures=" << r.failures;
        if (r.failures > 0) out << " first_failure=" << r.first_failure;
        out << '\n';
        ok = ok && r.passed();
      }
      out << "seed=" << opts.seed << '\n';
      return ok ? kOk : kFailure;
    } else if (*ren) {
      const CohomologyTable t = load_table(o.source, o.window, in);
      RenderOptions ro;
      if (!o.columns.empty()) {
        const Window cols = parse_window(o.columns);
        ro.first_column = cols.lo;
        ro.last_column = cols.hi;
      }
      out << render(t, ro);
    } else if (*rec) {
      std::string text;
      if (o.source.empty() || o.source == "-") {
        text = slurp(in);
      } else {
        std::ifstream file(o.source);
        if (!file) throw ParseError("cannot read '" + o.source + "'");
        text = slurp(file);
      }
      int n = 0;
      const auto steps = steps_from_json(text, n);
      emit_table(out, reconstruct(steps, n, parse_window(o.window)), o.emit, o.pretty);
    }
    return kOk;
  } catch (const NonAdmissible& e) {
    err << "non-admissible: " << e.what() << '\n';
    return kNonAdmissible;
  } catch (const OutOfWindow& e) {
    err << "out of window at (" << e.row() << "," << e.degree() << "): " << e.what() << '\n';
    return kOutOfWindow;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const IndexRange& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace cohomtab::cli

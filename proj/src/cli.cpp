#include "geogrowth/cli.hpp"

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "geogrowth/automaton.hpp"
#include "geogrowth/errors.hpp"
#include "geogrowth/racg.hpp"
#include "geogrowth/series.hpp"
#include "geogrowth/trianglefree.hpp"

namespace geogrowth::cli {

using nlohmann::json;

std::string method_name(Method m) {
  switch (m) {
    case Method::automaton: return "auto";
    case Method::racg: return "racg";
    case Method::trianglefree: return "trianglefree";
    case Method::oracle: return "oracle";
    case Method::all: return "all";
  }
  return "?";
}

std::optional<Method> parse_method(const std::string& s) {
  for (Method m : {Method::automaton, Method::racg, Method::trianglefree, Method::oracle, Method::all})
    if (method_name(m) == s) return m;
  return std::nullopt;
}

std::string input_digest(const NumberedGraph& g) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : graph_to_json(g)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

CheckReport cmd_check(const NumberedGraph& g) {
  CheckReport r;
  r.regularity = is_link_regular(g);
  r.all_two = true;
  for (int n : g.numbers()) r.all_two = r.all_two && n == 2;
  if (r.regularity.regular && r.all_two) r.profile = link_profile(g);
  return r;
}

bool cmd_equiv(const NumberedGraph& a, const NumberedGraph& b) { return are_equivalent(a, b); }

bool RunReport::agree() const {
  for (const auto& c : checks)
    if (!c.agree) return false;
  return true;
}

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

MethodResult run_automaton(const NumberedGraph& g, std::size_t n_max) {
  const auto t0 = Clock::now();
  const auto fsa = build_fsa(g);
  MethodResult r{"auto", growth_series(grammar_from_fsa(fsa)).series, {}, 0};
  r.coefficients = expand(*r.series, n_max);
  r.seconds = since(t0);
  return r;
}

MethodResult run_racg(const NumberedGraph& g, std::size_t n_max) {
  const auto t0 = Clock::now();
  MethodResult r{"racg", racg_growth(link_profile(g)), {}, 0};
  r.coefficients = expand(*r.series, n_max);
  r.seconds = since(t0);
  return r;
}

MethodResult run_trianglefree(const NumberedGraph& g, std::size_t n_max) {
  const auto t0 = Clock::now();
  MethodResult r{"trianglefree", solve_tf(build_tf_system(g)), {}, 0};
  r.coefficients = expand(*r.series, n_max);
  r.seconds = since(t0);
  return r;
}

MethodResult run_oracle(const NumberedGraph& g, std::size_t n_max, const OracleLimits& limits) {
  const auto t0 = Clock::now();
  MethodResult r{"oracle", std::nullopt, oracle_counts(g, n_max, limits), 0};
  r.seconds = since(t0);
  return r;
}

CrossCheck compare(const MethodResult& a, const MethodResult& b) {
  CrossCheck c{a.method, b.method, true, 0, ""};
  const std::size_t len = std::min(a.coefficients.size(), b.coefficients.size());
  c.through = len == 0 ? 0 : len - 1;
  for (std::size_t n = 0; n < len; ++n)
    if (a.coefficients[n] != b.coefficients[n]) {
      c.agree = false;
      c.detail = "coefficient of z^" + std::to_string(n) + ": " + a.coefficients[n].get_str() + " vs " +
                 b.coefficients[n].get_str();
      return c;
    }
  if (a.series && b.series && !(*a.series == *b.series)) {
    c.agree = false;
    c.detail = "rational functions differ: " + to_string(*a.series) + " vs " + to_string(*b.series);
  }
  return c;
}

}  // namespace

RunReport cmd_series(const NumberedGraph& g, Method method, std::size_t n_max, const OracleLimits& limits) {
  RunReport rep;
  rep.method = method_name(method);
  rep.input_digest = input_digest(g);
  switch (method) {
    case Method::automaton: rep.results.push_back(run_automaton(g, n_max)); break;
    case Method::racg: rep.results.push_back(run_racg(g, n_max)); break;
    case Method::trianglefree: rep.results.push_back(run_trianglefree(g, n_max)); break;
    case Method::oracle: rep.results.push_back(run_oracle(g, n_max, limits)); break;
    case Method::all: {
      rep.results.push_back(run_automaton(g, n_max));
      try {
        rep.results.push_back(run_racg(g, n_max));
      } catch (const HypothesisError& e) {
        rep.skipped.push_back({"racg", e.what()});
      }
      try {
        rep.results.push_back(run_trianglefree(g, n_max));
      } catch (const HypothesisError& e) {
        rep.skipped.push_back({"trianglefree", e.what()});
      }
      try {
        rep.results.push_back(run_oracle(g, std::min(n_max, limits.max_n), limits));
      } catch (const ResourceError& e) {
        rep.skipped.push_back({"oracle", e.what()});
      }
      for (std::size_t i = 1; i < rep.results.size(); ++i) rep.checks.push_back(compare(rep.results[0], rep.results[i]));
      break;
    }
  }
  return rep;
}

RunReport cmd_series_ell(const std::vector<long>& ell, std::size_t n_max) {
  const auto profile = make_link_profile(ell);
  RunReport rep;
  rep.method = "racg";
  std::string text = "ell:";
  for (long x : ell) text += " " + std::to_string(x);
  rep.input_digest = text;
  const auto t0 = Clock::now();
  MethodResult r{"racg", racg_growth(profile), {}, 0};
  r.coefficients = expand(*r.series, n_max);
  r.seconds = since(t0);
  rep.results.push_back(std::move(r));
  return rep;
}

std::string cmd_export_fsa(const NumberedGraph& g, bool include_reject) {
  return to_dot(build_fsa(g), g, include_reject);
}

namespace {

json big(const BigInt& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

json coeffs_json(const std::vector<BigInt>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(big(x));
  return a;
}

std::string join(const CountTable& t) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? ", " : "") + t[i].get_str();
  return s;
}

json report_json(const RunReport& rep) {
  json j;
  j["method"] = rep.method;
  j["input_digest"] = rep.input_digest;
  j["results"] = json::array();
  for (const auto& r : rep.results) {
    json x;
    x["method"] = r.method;
    if (r.series) {
      x["numerator"] = coeffs_json(r.series->num().coeffs());
      x["denominator"] = coeffs_json(r.series->den().coeffs());
      x["series"] = to_string(*r.series);
    }
    x["coefficients"] = coeffs_json(r.coefficients);
    x["seconds"] = r.seconds;
    j["results"].push_back(x);
  }
  j["skipped"] = json::array();
  for (const auto& s : rep.skipped) j["skipped"].push_back({{"method", s.method}, {"reason", s.reason}});
  j["cross_checks"] = json::array();
  for (const auto& c : rep.checks)
    j["cross_checks"].push_back(
        {{"methods", {c.first, c.second}}, {"agree", c.agree}, {"through", c.through}, {"detail", c.detail}});
  if (!rep.checks.empty()) j["agree"] = rep.agree();
  return j;
}

void print_report(std::ostream& out, const RunReport& rep, bool verbose) {
  out << "input " << rep.input_digest << "\n";
  for (const auto& r : rep.results) {
    out << r.method << ":\n";
    if (r.series) out << "  G(z) = " << to_string(*r.series) << "\n";
    out << "  counts: " << join(r.coefficients) << "\n";
    if (verbose) out << "  time: " << std::fixed << std::setprecision(3) << r.seconds * 1000 << " ms\n";
  }
  for (const auto& s : rep.skipped) out << "skipped " << s.method << ": " << s.reason << "\n";
  for (const auto& c : rep.checks) {
    out << c.first << " vs " << c.second << ": " << (c.agree ? "agree" : "DISAGREE");
    out << " (through n = " << c.through << ")";
    if (!c.detail.empty()) out << ": " << c.detail;
    out << "\n";
  }
}

std::vector<long> parse_ell(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long x = 0;
    try {
      x = std::stol(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || item.find_first_not_of(" \t", used) != std::string::npos)
      throw PreconditionError("--ell expects comma-separated integers, got '" + text + "'");
    out.push_back(x);
  }
  return out;
}

void require_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open " + path);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Geodesic growth series of numbered graph products"};
  app.require_subcommand(1);
  bool as_json = false;
  bool verbose = false;
  app.add_flag("--json", as_json, "Machine-readable output");
  app.add_flag("-v,--verbose", verbose, "Print timings and extra detail");

  std::string graph_a, graph_b;
  auto* check = app.add_subcommand("check", "Link-regularity verdict, witness and link sizes");
  check->add_option("graph", graph_a, "Graph JSON file")->required();

  auto* equiv = app.add_subcommand("equiv", "Equivalence of two link-regular graphs");
  equiv->add_option("first", graph_a, "Graph JSON file")->required();
  equiv->add_option("second", graph_b, "Graph JSON file")->required();

  std::string method_text = "auto";
  std::size_t n_max = 10;
  std::string ell_text;
  OracleLimits limits;
  auto* series = app.add_subcommand("series", "Geodesic growth series");
  series->add_option("graph", graph_a, "Graph JSON file");
  series->add_option("--ell", ell_text, "Link sizes ell_0,...,ell_d for the RACG formula (instead of a graph)");
  series->add_option("-m,--method", method_text, "auto | racg | trianglefree | oracle | all")
      ->check(CLI::IsMember({"auto", "racg", "trianglefree", "oracle", "all"}));
  series->add_option("-n,--n-max", n_max, "Coefficients to print: z^0 .. z^n")->check(CLI::Range(0, 100000));
  series->add_option("--budget", limits.word_budget, "Oracle budget on |S|^n_max");

  bool include_reject = false;
  std::string output_path;
  auto* export_fsa = app.add_subcommand("export-fsa", "Write the geodesic automaton as Graphviz DOT");
  export_fsa->add_option("graph", graph_a, "Graph JSON file")->required();
  export_fsa->add_option("-o,--output", output_path, "Output path (default stdout)");
  export_fsa->add_flag("--include-reject", include_reject, "Draw the reject state");

  std::size_t oracle_n = 6;
  std::string word_text;
  bool csv = false;
  auto* oracle = app.add_subcommand("oracle", "Brute-force geodesic counts by shuffling");
  oracle->add_option("graph", graph_a, "Graph JSON file")->required();
  oracle->add_option("-n,--n-max", oracle_n, "Longest word length to count");
  oracle->add_option("--budget", limits.word_budget, "Upper bound on |S|^n_max");
  oracle->add_option("--closure-cap", limits.closure_cap, "Largest shuffle closure explored");
  oracle->add_option("--max-length", limits.max_n, "Refuse n_max above this")->capture_default_str();
  oracle->add_option("--word", word_text, "Test one word, e.g. \"u v^-1 u\"");
  oracle->add_flag("--csv", csv, "CSV output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*check) {
      require_file(graph_a);
      const auto g = load_graph(graph_a);
      const auto r = cmd_check(g);
      if (as_json) {
        json j{{"link_regular", r.regularity.regular}};
        if (r.regularity.witness)
          j["witness"] = {describe(g, r.regularity.witness->first), describe(g, r.regularity.witness->second)};
        if (r.profile) j["ell"] = r.profile->ell;
        out << j.dump(2) << "\n";
      } else {
        out << "link-regular: " << (r.regularity.regular ? "yes" : "no") << "\n";
        if (r.regularity.witness) {
          const auto& [s, t] = *r.regularity.witness;
          out << "witness: " << describe(g, s) << " and " << describe(g, t)
              << " have equal vertex numbers but their links differ:\n";
          for (const Clique* c : {&s, &t}) {
            out << "  Lk" << describe(g, *c) << " = {";
            const auto lk = link(g, *c);
            for (std::size_t i = 0; i < lk.size(); ++i)
              out << (i ? ", " : "") << g.name(lk[i]) << " (N=" << g.number(lk[i]) << ")";
            out << "}\n";
          }
        }
        if (r.profile) {
          out << "ell: (";
          for (std::size_t i = 0; i < r.profile->ell.size(); ++i) out << (i ? ", " : "") << r.profile->ell[i];
          out << ")\n";
        }
      }
      return kOk;
    }
    if (*equiv) {
      require_file(graph_a);
      require_file(graph_b);
      const bool eq = cmd_equiv(load_graph(graph_a), load_graph(graph_b));
      if (as_json)
        out << json{{"equivalent", eq}}.dump(2) << "\n";
      else
        out << "equivalent: " << (eq ? "yes" : "no") << "\n";
      return kOk;
    }
    if (*series) {
      RunReport rep;
      if (!ell_text.empty()) {
        if (!graph_a.empty()) throw PreconditionError("give either a graph file or --ell, not both");
        if (method_text != "auto" && method_text != "racg")
          throw PreconditionError("--ell only works with the racg method");
        rep = cmd_series_ell(parse_ell(ell_text), n_max);
      } else {
        if (graph_a.empty()) throw PreconditionError("series needs a graph file or --ell");
        require_file(graph_a);
        rep = cmd_series(load_graph(graph_a), *parse_method(method_text), n_max, limits);
      }
      if (as_json)
        out << report_json(rep).dump(2) << "\n";
      else
        print_report(out, rep, verbose);
      return rep.agree() ? kOk : kDisagreement;
    }
    if (*export_fsa) {
      require_file(graph_a);
      const auto dot = cmd_export_fsa(load_graph(graph_a), include_reject);
      if (output_path.empty()) {
        out << dot;
      } else {
        std::ofstream f(output_path);
        if (!f || !(f << dot)) throw std::ios_base::failure("cannot write " + output_path);
      }
      return kOk;
    }
    if (*oracle) {
      require_file(graph_a);
      const auto g = load_graph(graph_a);
      if (!word_text.empty()) {
        const Word w = parse_word(g, word_text);
        const bool geo = is_geodesic(g, w, limits);
        if (as_json) {
          out << json{{"word", to_string(g, w)}, {"geodesic", geo}}.dump(2) << "\n";
        } else {
          out << to_string(g, w) << ": " << (geo ? "geodesic" : "not geodesic") << "\n";
          if (verbose)
            for (const auto& x : shuffle_closure(g, w, limits)) out << "  " << to_string(g, x) << "\n";
        }
        return kOk;
      }
      const auto t0 = Clock::now();
      const auto counts = oracle_counts(g, oracle_n, limits);
      if (as_json) {
        out << json{{"input_digest", input_digest(g)}, {"coefficients", coeffs_json(counts)}}.dump(2) << "\n";
      } else if (csv) {
        out << "n,count\n";
        for (std::size_t n = 0; n < counts.size(); ++n) out << n << "," << counts[n].get_str() << "\n";
      } else {
        out << "counts: " << join(counts) << "\n";
      }
      if (verbose) err << "oracle: " << since(t0) << " s\n";
      return kOk;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const HypothesisError& e) {
    err << "hypothesis violated: " << e.what() << "\n";
    return kHypothesis;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}

}  // namespace geogrowth::cli

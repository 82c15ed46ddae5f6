#pragma once

#include <CLI11.hpp>
#include <cstdlib>
#include <deque>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "poincare/analysis.hpp"
#include "poincare/catalog.hpp"
#include "poincare/dimension_count.hpp"
#include "poincare/jetflow.hpp"

namespace poincare::cli {

using json = nlohmann::ordered_json;

/// One table cell. Exact numbers stay exact in every format.
using Cell = std::variant<std::string, long, Integer, Rational, bool, RationalFunction>;

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

struct Document {
  std::string command;
  std::deque<Table> tables;

  Table& add(std::string name, std::vector<std::string> columns) {
    tables.push_back({std::move(name), std::move(columns), {}});
    return tables.back();
  }
};

inline json exact(const Rational& q) { return {{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}}; }

inline json coefficient_list(const Polynomial& p) {
  json a = json::array();
  for (int i = 0; i <= p.degree(); ++i) a.push_back(exact(p.coeff(static_cast<std::size_t>(i))));
  return a;
}

inline json to_json(const Cell& c) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::string> || std::is_same_v<T, bool>) {
          return v;
        } else if constexpr (std::is_same_v<T, long>) {
          return exact(Rational(v));
        } else if constexpr (std::is_same_v<T, Integer>) {
          return exact(Rational(v));
        } else if constexpr (std::is_same_v<T, Rational>) {
          return exact(v);
        } else {
          return {{"text", v.to_string()}, {"num", coefficient_list(v.num())}, {"den", coefficient_list(v.den())}};
        }
      },
      c);
}

inline std::string to_text(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::string>) {
          return v;
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else if constexpr (std::is_same_v<T, long>) {
          return std::to_string(v);
        } else if constexpr (std::is_same_v<T, Integer> || std::is_same_v<T, Rational>) {
          return poincare::to_string(v);
        } else {
          return v.to_string();
        }
      },
      c);
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

inline std::string md_field(const std::string& s) {
  std::string out;
  for (char ch : s) out += ch == '|' ? std::string("\\|") : std::string(1, ch);
  return out;
}

inline void render(const Document& doc, const std::string& format, std::ostream& out) {
  if (format == "json") {
    json j{{"schema", "poincare-output"}, {"version", 1}, {"command", doc.command}, {"tables", json::array()}};
    for (const auto& t : doc.tables) {
      json rows = json::array();
      for (const auto& r : t.rows) {
        json o = json::object();
        for (std::size_t i = 0; i < r.size(); ++i) o[t.columns[i]] = to_json(r[i]);
        rows.push_back(std::move(o));
      }
      j["tables"].push_back({{"name", t.name}, {"columns", t.columns}, {"rows", std::move(rows)}});
    }
    out << j.dump(2) << "\n";
    return;
  }
  bool first = true;
  for (const auto& t : doc.tables) {
    if (!first) out << "\n";
    first = false;
    if (format == "csv") {
      out << "# " << t.name << "\n";
      for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << csv_field(t.columns[i]);
      out << "\n";
      for (const auto& r : t.rows) {
        for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << csv_field(to_text(r[i]));
        out << "\n";
      }
    } else {
      out << "## " << t.name << "\n\n|";
      for (const auto& c : t.columns) out << " " << md_field(c) << " |";
      out << "\n|";
      for (std::size_t i = 0; i < t.columns.size(); ++i) out << "---|";
      out << "\n";
      for (const auto& r : t.rows) {
        out << "|";
        for (const auto& c : r) out << " " << md_field(to_text(c)) << " |";
        out << "\n";
      }
    }
  }
}

/// "n=3,m=2" -> {n: 3, m: 2}
inline Params parse_params(const std::string& text) {
  Params p;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw Error(Errc::unsupported_argument, "parameter '" + item + "' is not of the form name=value");
    try {
      std::size_t used = 0;
      const std::string value = item.substr(eq + 1);
      p[item.substr(0, eq)] = std::stol(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::logic_error&) {
      throw Error(Errc::unsupported_argument, "parameter '" + item + "' has a non-integer value");
    }
  }
  return p;
}

inline std::vector<std::string> k_columns(const std::string& lead, int K) {
  std::vector<std::string> c{lead};
  for (int k = 0; k <= K; ++k) c.push_back("k=" + std::to_string(k));
  return c;
}

inline void pole_rows(Table& t, const PoleReport& r) {
  t.rows.push_back({std::string("d"), static_cast<long>(r.d)});
  t.rows.push_back({std::string("sigma"), r.sigma});
  t.rows.push_back({std::string("conforms_to_PR"), r.conforms_to_PR});
  std::string poles;
  for (const auto& u : r.other_unit_poles)
    poles += (poles.empty() ? "" : "; ") + std::string("(") + u.factor.to_string() + ", " +
             std::to_string(u.multiplicity) + ")";
  t.rows.push_back({std::string("other_unit_poles"), poles.empty() ? std::string("none") : poles});
}

inline int cmd_list(Document& doc) {
  Table& t = doc.add("catalog", {"id", "title", "group", "params", "base_dim", "pr_form", "hilbert"});
  for (const auto& e : list_entries()) {
    std::string ps;
    for (const auto& p : e.params)
      ps += (ps.empty() ? "" : ", ") + p.name + ">=" + std::to_string(p.min) +
            (p.max ? "<=" + std::to_string(*p.max) : std::string());
    t.rows.push_back({e.id, e.title, e.group, ps, e.base_dim_expr, e.pr_form, e.has_hilbert});
  }
  Table& a = doc.add("aliases", {"alias", "id", "params"});
  for (const auto& al : Catalog::builtin().aliases()) a.rows.push_back({al.alias, al.id, to_string(al.params)});
  return 0;
}

inline int cmd_show(Document& doc, const std::string& id, const std::vector<long>& ns, const std::string& params,
                    int K) {
  if (K < 0) throw Error(Errc::unsupported_argument, "--kmax must be >= 0");
  const auto& cat = Catalog::builtin();
  std::vector<Params> samples;
  const Params extra = parse_params(params);
  if (ns.empty()) samples.push_back(extra);
  for (long n : ns) {
    Params p = extra;
    p["n"] = n;
    samples.push_back(p);
  }
  Table& h = doc.add("h_k", k_columns("params", K));
  Table& s = doc.add("s_k", k_columns("params", K));
  Table& pz = doc.add("poincare", {"params", "P", "d", "sigma", "conforms_to_PR", "source"});
  for (const auto& raw : samples) {
    auto [e, merged] = cat.resolve(id, raw);
    const Params ps = cat.validate(*e, merged);
    const RationalFunction P = claimed_poincare(e->id, ps);
    const std::string label = e->id + (ps.empty() ? "" : " " + to_string(ps));
    std::vector<Cell> hrow{label}, srow{label};
    if (e->has_hilbert) {
      const HilbertSpec spec = hilbert_spec(e->id, ps);
      Integer acc = 0;
      for (int k = 0; k <= K; ++k) {
        hrow.emplace_back(spec(k));
        srow.emplace_back(Integer(acc += spec(k)));
      }
    } else {
      const PowerSeries ser = series_expand(P, K);
      const auto sums = s_sequence(P, K);
      for (int k = 0; k <= K; ++k) {
        hrow.emplace_back(ser.coefficients[static_cast<std::size_t>(k)]);
        srow.emplace_back(sums[static_cast<std::size_t>(k)]);
      }
    }
    h.rows.push_back(std::move(hrow));
    s.rows.push_back(std::move(srow));
    const PoleReport r = analyze(P);
    pz.rows.push_back({label, P, static_cast<long>(r.d), r.sigma, r.conforms_to_PR,
                       std::string(e->has_hilbert ? "h_k closed form" : "P(z) only")});
  }
  return 0;
}

inline int cmd_verify(Document& doc, const std::string& id, long nmax, int K, unsigned jobs) {
  if (K < 0 || nmax < 0) throw Error(Errc::unsupported_argument, "--kmax and --nmax must be >= 0");
  const auto reports = verify_all(K, nmax, jobs, id.empty() ? std::nullopt : std::optional<std::string>(id));
  Table& t = doc.add("verification", {"id", "params", "status", "d", "base_dim", "sigma", "findings"});
  bool bad = false;
  for (const auto& r : reports) {
    std::string f;
    for (const auto& x : r.findings) f += (f.empty() ? "" : "; ") + x.kind + ": " + x.message;
    t.rows.push_back({r.id, to_string(r.params), std::string(to_string(r.status)), static_cast<long>(r.d), r.base_dim,
                      r.sigma, f});
    bad = bad || r.status == VerificationStatus::mismatch;
  }
  if (id.empty()) {
    Table& i = doc.add("identities", {"identity", "ok", "detail"});
    for (const auto& r : check_identities(nmax)) {
      i.rows.push_back({r.description, r.ok, r.detail});
      bad = bad || !r.ok;
    }
  }
  return bad ? 1 : 0;
}

inline int cmd_analyze(Document& doc, const std::string& expr, int K) {
  const RationalFunction f = parse_rational_function(expr);
  const PoleReport r = analyze(f);
  Table& t = doc.add("analysis", {"field", "value"});
  t.rows.push_back({std::string("P"), f});
  pole_rows(t, r);
  if (r.conforms_to_PR && !f.is_zero()) {
    const AsymptoticResult a = asymptotic_details(f);
    t.rows.push_back({std::string("asymptotic_check"), a.ok});
    t.rows.push_back({std::string("s_K/C(K+d,d) at K=200"), a.ratio});
  }
  if (f.den().coeff(0) != 0) {
    Table& s = doc.add("series", {"k", "h_k", "s_k"});
    const PowerSeries ser = series_expand(f, K);
    const auto sums = s_sequence(f, K);
    for (int k = 0; k <= K; ++k)
      s.rows.push_back({static_cast<long>(k), ser.coefficients[static_cast<std::size_t>(k)],
                        sums[static_cast<std::size_t>(k)]});
  }
  return 0;
}

inline int cmd_strata_demo(Document& doc, int K, std::uint64_t seed, unsigned jobs) {
  if (K < 1 || K > 7) throw Error(Errc::unsupported_argument, "strata-demo supports --kmax in [1, 7]");
  const jet::Scenario& sc = jet::lie_example_scenario();
  const auto rows = jet::lie_example_table(K, seed, jobs);
  Table& t = doc.add("strata", k_columns("stratum", K));
  t.columns.insert(t.columns.end(), {"P", "reference", "agrees", "note"});
  bool bad = false;
  for (const auto& r : rows) {
    std::vector<Cell> row{r.label};
    for (const auto& v : r.h) row.emplace_back(v);
    row.emplace_back(r.poincare);
    if (r.analytic) {
      row.emplace_back(std::string("-"));
      row.emplace_back(true);
    } else {
      const RationalFunction ref = parse_rational_function(sc.stratum(r.label).reference);
      const PowerSeries want = series_expand(ref, K);
      bool same = true;
      for (int k = 0; k <= K; ++k) same = same && want.coefficients[static_cast<std::size_t>(k)] == Rational(r.h[static_cast<std::size_t>(k)]);
      row.emplace_back(ref);
      row.emplace_back(same);
      bad = bad || !same;
    }
    row.emplace_back(r.note);
    t.rows.push_back(std::move(row));
  }
  Table& inv = doc.add("invariants", {"stratum", "name", "expr", "expected", "annihilated", "points", "first_failure"});
  for (const auto& iv : sc.invariants) {
    const auto a = jet::annihilation_details(sc, iv.expr, sc.stratum(iv.stratum), seed);
    inv.rows.push_back({iv.stratum, iv.name, iv.expr, iv.expect, a.ok, static_cast<long>(a.points), a.first_failure});
    bad = bad || a.ok != iv.expect;
  }
  const jet::DistributionReport d = jet::distribution_example(seed);
  Table& ds = doc.add("distribution strata", {"stratum", "dim", "rank", "invariants"});
  for (const auto& s : d.strata)
    ds.rows.push_back({s.label, static_cast<long>(s.stratum_dim), static_cast<long>(s.rank), static_cast<long>(s.invariants)});
  Table& dc = doc.add("distribution invariants", {"stratum", "expr", "expected", "annihilated"});
  for (const auto& c : d.checks) {
    dc.rows.push_back({c.stratum, c.expr, c.expect, c.annihilated});
    bad = bad || c.expect != c.annihilated;
  }
  return bad ? 1 : 0;
}

inline int cmd_metric2d(Document& doc, int K, std::uint64_t seed) {
  const auto h = jet::metric2d_case(K, seed);
  const HilbertSpec ref = hilbert_spec("riemannian", {{"n", 2}});
  Table& t = doc.add("metric2d", {"k", "h_k", "riemannian n=2", "agrees"});
  bool bad = false;
  for (int k = 0; k <= K; ++k) {
    const bool same = h[static_cast<std::size_t>(k)] == ref(k);
    t.rows.push_back({static_cast<long>(k), h[static_cast<std::size_t>(k)], ref(k), same});
    bad = bad || !same;
  }
  return bad ? 1 : 0;
}

inline int cmd_rederive(Document& doc, const std::string& id, long n, int K) {
  const CountingPlan plan = make_plan(id, n);
  const HilbertSpec got = assemble_hilbert(plan);
  const HilbertSpec want = hilbert_spec(id, {{"n", n}});
  Table& t = doc.add("rederive", {"k", "plan", "catalog", "agrees"});
  bool bad = false;
  for (int k = 0; k <= K; ++k) {
    const bool same = got(k) == want(k);
    t.rows.push_back({static_cast<long>(k), got(k), want(k), same});
    bad = bad || !same;
  }
  Table& s = doc.add("summary", {"field", "value"});
  s.rows.push_back({std::string("plan spec"), got.to_string()});
  s.rows.push_back({std::string("catalog spec"), want.to_string()});
  s.rows.push_back({std::string("specs equal"), got == want});
  return bad || !(got == want) ? 1 : 0;
}

inline int cmd_scenario(Document& doc, const std::string& path, int K, std::uint64_t seed) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::invalid_scenario, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  const jet::Scenario sc = jet::parse_scenario(ss.str());
  const auto rep = jet::run_scenario(sc, K, seed);
  Table& t = doc.add("strata", k_columns("stratum", K));
  for (const auto& c : rep.strata) {
    std::vector<Cell> row{c.label};
    for (const auto& v : c.h) row.emplace_back(v);
    t.rows.push_back(std::move(row));
  }
  Table& inv = doc.add("invariants", {"stratum", "name", "expr", "expected", "annihilated"});
  bool bad = false;
  for (const auto& c : rep.checks) {
    inv.rows.push_back({c.stratum, c.name, c.expr, c.expect, c.annihilated});
    bad = bad || c.expect != c.annihilated;
  }
  return bad ? 1 : 0;
}

inline constexpr const char* kExprGrammar =
    "rational function literal in z:\n"
    "  expr    = term { (\"+\" | \"-\") term }\n"
    "  term    = unary { [\"*\" | \"/\"] unary }     (juxtaposition multiplies)\n"
    "  unary   = [\"-\" | \"+\"] power\n"
    "  power   = primary [ \"^\" [\"-\"] integer ]\n"
    "  primary = integer | \"z\" | \"(\" expr \")\"\n";

/// Runs the command line in `args` (without the program name). Returns the
/// exit code: 0 success, 1 mismatch findings, 2 usage or validity error.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Poincare and Hilbert functions of differential invariants", "poincare"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format;
  if (const char* env = std::getenv("POINCARE_FORMAT")) format = env;
  if (format.empty()) format = "markdown";
  app.add_option("--format", format, "markdown, csv or json (default: $POINCARE_FORMAT or markdown)")
      ->check(CLI::IsMember({"markdown", "csv", "json"}));
  unsigned jobs = 1;
  app.add_option("--jobs", jobs, "worker threads for verify and strata-demo")->check(CLI::Range(1u, 256u));

  auto* list = app.add_subcommand("list", "catalog entries and aliases");

  auto* show = app.add_subcommand("show", "h_k, s_k and P(z) of a catalog entry");
  std::string show_id, show_params;
  std::vector<long> show_n;
  int show_k = 10;
  show->add_option("id", show_id, "entry id or alias")->required();
  show->add_option("--n", show_n, "dimension n (comma separated for several rows)")->delimiter(',');
  show->add_option("--params", show_params, "other parameters as name=value,...");
  show->add_option("--kmax", show_k, "last order shown");

  auto* verify = app.add_subcommand("verify", "check h_k data against P(z) and pole structure");
  std::string verify_id;
  long nmax = 8;
  int verify_k = 50;
  verify->add_option("--id", verify_id, "restrict to one entry");
  verify->add_option("--nmax", nmax, "largest n sampled");
  verify->add_option("--kmax", verify_k, "series horizon");

  auto* an = app.add_subcommand("analyze", "poles on the unit circle, d and sigma");
  an->footer(kExprGrammar);
  std::string expr;
  int an_k = 10;
  an->add_option("--expr", expr, "rational function literal")->required();
  an->add_option("--kmax", an_k, "series terms shown");

  auto* strata = app.add_subcommand("strata-demo", "stratified example by jet prolongation");
  int strata_k = 7;
  std::uint64_t seed = 1;
  strata->add_option("--kmax", strata_k, "largest jet order");
  strata->add_option("--seed", seed, "sampling seed");

  auto* metric = app.add_subcommand("metric2d", "plane metrics by jet prolongation");
  int metric_k = 4;
  metric->add_option("--kmax", metric_k, "largest jet order (<= 4)");
  metric->add_option("--seed", seed, "sampling seed");

  auto* rederive = app.add_subcommand("rederive", "counting plan against the catalog");
  std::string re_id;
  long re_n = 0;
  int re_k = 40;
  rederive->add_option("--id", re_id, "plan id")->required();
  rederive->add_option("--n", re_n, "dimension")->required();
  rederive->add_option("--kmax", re_k, "last order compared");

  auto* scen = app.add_subcommand("scenario", "run a scenario file (schema poincare-scenario v1)");
  std::string scen_file;
  int scen_k = 3;
  scen->add_option("file", scen_file, "scenario JSON")->required();
  scen->add_option("--kmax", scen_k, "largest jet order");
  scen->add_option("--seed", seed, "sampling seed");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  Document doc;
  int code = 0;
  try {
    if (*list) {
      doc.command = "list";
      code = cmd_list(doc);
    } else if (*show) {
      doc.command = "show";
      code = cmd_show(doc, show_id, show_n, show_params, show_k);
    } else if (*verify) {
      doc.command = "verify";
      code = cmd_verify(doc, verify_id, nmax, verify_k, jobs);
    } else if (*an) {
      doc.command = "analyze";
      code = cmd_analyze(doc, expr, an_k);
    } else if (*strata) {
      doc.command = "strata-demo";
      code = cmd_strata_demo(doc, strata_k, seed, jobs);
    } else if (*metric) {
      doc.command = "metric2d";
      code = cmd_metric2d(doc, metric_k, seed);
    } else if (*rederive) {
      doc.command = "rederive";
      code = cmd_rederive(doc, re_id, re_n, re_k);
    } else if (*scen) {
      doc.command = "scenario";
      code = cmd_scenario(doc, scen_file, scen_k, seed);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  render(doc, format, out);
  return code;
}

}  // namespace poincare::cli

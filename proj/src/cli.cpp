#include "borelcover/cli.hpp"

#include "borelcover/borel.hpp"
#include "borelcover/chart.hpp"
#include "borelcover/cover.hpp"
#include "borelcover/errors.hpp"
#include "borelcover/fixtures.hpp"
#include "borelcover/io.hpp"
#include "borelcover/marked.hpp"
#include "borelcover/oracle.hpp"
#include "borelcover/text.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <set>

namespace borelcover {

namespace {

struct Globals {
  bool json = false;
  std::uint64_t seed = 0;
  int threads = 1;
};

Json constants_json(const ChartConstants& k) {
  return Json{{"n", k.n}, {"hilbert_polynomial", k.p.to_string()}, {"r", k.r}, {"N_r", k.N_r},
              {"s", k.s}, {"s_next", k.s_next}, {"D", k.D}};
}

int run_gotzmann(const Globals& g, int n, const std::string& hp, std::ostream& out) {
  const ChartConstants k = chart_constants(HilbertPoly::parse(hp), n);
  if (g.json) {
    out << constants_json(k).dump(2) << "\n";
  } else {
    out << "r=" << k.r << "\nN(r)=" << k.N_r << "\ns=" << k.s << "\ns'=" << k.s_next << "\nD=" << k.D << "\n";
  }
  return kExitOk;
}

int run_borel_list(const Globals& g, int n, const std::string& hp, long cap, std::ostream& out) {
  const HilbertPoly p = HilbertPoly::parse(hp);
  EnumerationOptions eo;
  eo.node_cap = cap;
  const auto ideals = enumerate_borel_saturated(n, p, eo);
  if (g.json) {
    Json list = Json::array();
    for (const auto& J : ideals) list.push_back({{"sat", to_json(J)}, {"reg", regularity(J)}});
    out << Json{{"n", n}, {"hilbert_polynomial", p.to_string()}, {"ideals", list}}.dump(2) << "\n";
  } else {
    for (const auto& J : ideals) out << to_text(J) << " reg=" << regularity(J) << "\n";
  }
  return kExitOk;
}

int run_borel_classify(const Globals& g, int n, const std::string& hp, long cap, std::ostream& out) {
  const ChartConstants k = chart_constants(HilbertPoly::parse(hp), n);
  EnumerationOptions eo;
  eo.node_cap = cap;
  const Classification c = classify_grassmannian_borel(k, eo);
  if (g.json) {
    Json charts = Json::array();
    for (const auto& J : c.charts) charts.push_back(to_json(J));
    Json empty = Json::array();
    for (const auto& e : c.empty_charts) empty.push_back({{"J", to_json(e.J)}, {"hilbert_polynomial", e.hp.to_string()}});
    out << Json{{"constants", constants_json(k)}, {"charts", charts}, {"empty_charts", empty}}.dump(2) << "\n";
  } else {
    out << "charts: " << c.charts.size() << "\n";
    for (const auto& J : c.charts) out << "  " << to_text(J) << "\n";
    out << "empty charts: " << c.empty_charts.size() << "\n";
    for (const auto& e : c.empty_charts) out << "  " << to_text(e.J) << " hp=" << e.hp.to_string() << "\n";
  }
  return kExitOk;
}

std::optional<int> opt_n(int n) { return n >= 0 ? std::optional<int>(n) : std::nullopt; }

int run_open_set(const Globals& g, const std::string& ideal, int n, long bound, bool all, const std::string& gtext,
                 int max_tries, long cap, std::ostream& out) {
  const PolyIdeal I = parse_poly_ideal(ideal, opt_n(n));
  OpenSetOptions o;
  o.seed = g.seed;
  o.bound = bound;
  o.all_charts = all;
  o.max_tries = max_tries;
  o.enumeration.node_cap = cap;
  if (!gtext.empty()) o.g = coordinate_change_from_json(parse_json(read_argument(gtext)));
  const OpenSetResult res = borel_open_set(I.gens, I.n, o);
  Json j{{"g", to_json(res.g)},
         {"J", to_json(res.J)},
         {"sat", to_json(res.Jsat)},
         {"tried", res.tried},
         {"hilbert_polynomial", res.summary.hp.to_string()}};
  if (all) {
    Json charts = Json::array();
    for (const auto& J : res.charts) charts.push_back(to_json(J));
    j["charts"] = charts;
  }
  out << j.dump(2) << "\n";
  return kExitOk;
}

int run_chart_form(const Globals& g, const std::string& ideal, const std::string& chart, std::ostream& out) {
  const MonomialIdeal J = parse_monomial_ideal(chart);
  const PolyIdeal I = parse_poly_ideal(ideal, J.n());
  const Rational delta = pluecker_coordinate(I.gens, J);
  const ChartPoint cp = chart_form(I.gens, J);
  if (g.json) {
    Json marked = Json::array();
    for (const auto& f : cp.G) marked.push_back({{"head", to_string(f.head)}, {"poly", to_string(f.poly)}});
    out << Json{{"J", to_json(J)}, {"pluecker", rational_to_json(delta)}, {"marked", marked}}.dump(2) << "\n";
  } else {
    for (const auto& f : cp.G) out << to_string(f.poly) << "\n";
  }
  return kExitOk;
}

int run_pluecker(const Globals& g, const std::string& ideal, const std::string& chart, std::ostream& out) {
  const MonomialIdeal J = parse_monomial_ideal(chart);
  const PolyIdeal I = parse_poly_ideal(ideal, J.n());
  const Rational delta = pluecker_coordinate(I.gens, J);
  if (g.json) {
    out << Json{{"value", rational_to_json(delta)}, {"in_chart", sgn(delta) != 0}}.dump(2) << "\n";
  } else {
    out << to_string(delta) << "\n";
  }
  return kExitOk;
}

int run_marked_scheme(const Globals& g, const std::string& sat, int m, const std::string& format,
                      const std::string& selection, std::ostream& out) {
  const MonomialIdeal Jsat = parse_monomial_ideal(sat);
  SchemeOptions so;
  so.threads = g.threads;
  if (selection == "smallest") {
    so.reduce.selection = Selection::SmallestFirst;
  } else if (selection != "largest") {
    throw ParseError("--selection must be largest or smallest");
  }
  const SchemeIdeal ideal = scheme_equations(Jsat, m, so);
  const EquationSummary s = summarize_equations(ideal);
  if (g.json || format == "json") {
    Json j = to_json(s);
    j["spairs"] = ideal.spairs;
    j["longest_chain"] = ideal.longest_chain;
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "m=" << s.m << "\nnum_vars=" << s.num_vars << "\nnum_generators=" << s.generators.size()
      << "\nmax_degree=" << s.max_degree << "\nbound_count=" << (s.bound_count ? s.bound_count->get_str() : "none")
      << "\nbound_degree=" << (s.bound_degree ? std::to_string(*s.bound_degree) : "none") << "\n";
  for (const auto& gen : s.generators) out << gen << "\n";
  return kExitOk;
}

int run_check_basis(const Globals& g, const std::string& chart, const std::string& marked, int r_in,
                    std::ostream& out) {
  const MonomialIdeal J = parse_monomial_ideal(chart);
  const PolyIdeal I = parse_poly_ideal(marked, J.n());
  std::vector<MarkedPoly> G;
  for (const auto& f : I.gens) {
    std::optional<Monomial> head;
    for (const auto& [mono, c] : f.terms()) {
      if (!J.contains(mono)) continue;
      if (head) throw DomainError("polynomial " + to_string(f) + " has more than one monomial in J");
      head = mono;
    }
    if (!head) throw DomainError("polynomial " + to_string(f) + " has no monomial in J");
    G.push_back({*head, f.scaled(Rational(1) / f.coefficient(*head))});
  }
  const int r = r_in >= 0 ? r_in : gotzmann_number(hilbert_polynomial(J), J.n());
  const bool ok = is_marked_basis(G, J, r);
  if (g.json) {
    out << Json{{"marked_basis", ok}, {"r", r}}.dump(2) << "\n";
  } else {
    out << (ok ? "true" : "false") << "\n";
  }
  return kExitOk;
}

int run_atlas(const Globals& g, int n, const std::string& hp, bool with_eq, const std::string& m,
              const std::string& out_path, long cap, std::ostream& out) {
  AtlasOptions o;
  o.with_equations = with_eq;
  o.m = parse_m_choice(m);
  o.threads = g.threads;
  o.enumeration.node_cap = cap;
  const Atlas a = atlas(n, HilbertPoly::parse(hp), o);
  const std::string text = to_json(a).dump(2) + "\n";
  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream f(out_path);
    if (!f) throw Error("cannot write '" + out_path + "'");
    f << text;
    out << "wrote " << out_path << " (" << a.charts.size() << " charts, " << a.empty_charts.size()
        << " empty charts)\n";
  }
  return kExitOk;
}

// Fixture certifications: each returns true when every check passes and logs one line per check.
using Check = std::function<bool(std::ostream&)>;

bool report(std::ostream& out, const std::string& what, bool ok) {
  out << (ok ? "ok   " : "FAIL ") << what << "\n";
  return ok;
}

std::vector<ParamPoly> parse_all(const std::vector<std::string>& gens) {
  std::vector<ParamPoly> out;
  for (const auto& s : gens) out.push_back(parse_param_poly(s));
  return out;
}

std::set<CVar> parse_vars(const std::vector<std::string>& vars) {
  std::set<CVar> out;
  for (const auto& v : vars) out.insert(parse_param_poly(v).terms().begin()->first.factors().front().first);
  return out;
}

bool certify_points4_equations(std::ostream& out, int threads) {
  SchemeOptions so;
  so.threads = threads;
  const SchemeIdeal ours = scheme_equations(fixtures::points4_chart(), 2, so);
  const auto published = parse_all(fixtures::points4_chart_equations());
  const auto linear = parse_vars(fixtures::points4_linear_variables());
  bool ok = report(out, "template has 12 variables", ours.T.num_vars == 12);
  ok &= report(out, "computed generators: " + std::to_string(ours.generators.size()) + ", max degree " +
                        std::to_string(ours.max_degree),
               !ours.generators.empty() && ours.max_degree <= 3);
  ok &= report(out, "computed ideal equals the published one",
               ideal_equal(ours.generators, published, MonomialOrder::elimination(linear)));
  const LinearElimination e = greedy_linear_eliminate(published);
  std::set<CVar> got(e.eliminated.begin(), e.eliminated.end());
  ok &= report(out, "linear elimination removes C[1,3], C[1,4], C[2,4], C[3,4]", got == linear);
  ok &= report(out, "residual ideal is zero, chart is A^" + std::to_string(12 - e.eliminated.size()),
               e.residual.empty());
  return ok;
}

bool certify_points4_open_set(std::ostream& out) {
  OpenSetOptions o;
  o.g = fixtures::points4_shear();
  const OpenSetResult res = borel_open_set(fixtures::points4_double_points(), 2, o);
  bool ok = report(out, "chart is " + to_text(res.Jsat), res.Jsat == fixtures::points4_chart());
  const auto moved = [&] {
    std::vector<XPoly> v;
    for (const auto& f : res.summary.saturated_r) v.push_back(apply_change_of_coords(f, res.g));
    return v;
  }();
  const ChartPoint cp = chart_form(moved, res.J);
  std::set<std::string> got;
  for (const auto& f : cp.G) got.insert(to_string(f.poly));
  std::set<std::string> expected;
  for (const auto& s : fixtures::points4_marked_basis()) expected.insert(to_string(parse_xpoly(s, 2)));
  ok &= report(out, "marked basis matches the reference set", got == expected);
  return ok;
}

bool certify_cubic_lex(std::ostream& out) {
  const SchemeIdeal ideal = scheme_equations(fixtures::cubic_lex(), 1);
  bool ok = report(out, "template has 12 variables", ideal.T.num_vars == 12);
  ok &= report(out, "defining ideal is zero", ideal.generators.empty());
  return ok;
}

bool certify_line_chart(std::ostream& out) {
  const SchemeIdeal ideal = scheme_equations(fixtures::ideal(2, {"x2", "x1^2"}), 2);
  const LinearElimination e = greedy_linear_eliminate(ideal.generators);
  const long left = ideal.T.num_vars - static_cast<long>(e.eliminated.size());
  bool ok = report(out, "template has " + std::to_string(ideal.T.num_vars) + " variables", true);
  ok &= report(out, "residual ideal is zero", e.residual.empty());
  ok &= report(out, "chart is A^" + std::to_string(left) + " (expected A^4)", left == 4);
  return ok;
}

int run_certify(const Globals& g, const std::string& name, std::ostream& out) {
  const std::vector<std::pair<std::string, Check>> all = {
      {"points4-equations", [&](std::ostream& o) { return certify_points4_equations(o, g.threads); }},
      {"points4-open-set", certify_points4_open_set},
      {"cubic-lex", certify_cubic_lex},
      {"line-chart", certify_line_chart},
  };
  bool ok = true;
  bool found = false;
  for (const auto& [fixture, check] : all) {
    if (name != "all" && name != fixture) continue;
    found = true;
    out << "[" << fixture << "]\n";
    ok &= check(out);
  }
  if (!found) {
    std::string names;
    for (const auto& [fixture, check] : all) names += " " + fixture;
    throw ParseError("unknown fixture '" + name + "'; available: all" + names);
  }
  return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Borel open covers of Hilbert schemes: charts, marked bases and their equations"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "Machine-readable JSON output");
  app.add_option("--seed", g.seed, "Seed for random coordinate changes")->capture_default_str();
  app.add_option("--threads", g.threads, "Worker threads for S-pair reduction")->check(CLI::PositiveNumber);

  int n = -1;
  std::string hp;
  long cap = EnumerationOptions{}.node_cap;
  std::function<int()> action;

  auto add_n_hp = [&](CLI::App* sub) {
    sub->add_option("--n", n, "Projective dimension")->required()->check(CLI::NonNegativeNumber);
    sub->add_option("--hp", hp, "Hilbert polynomial, e.g. 2*t+3")->required();
  };
  auto add_cap = [&](CLI::App* sub) {
    sub->add_option("--node-cap", cap, "Search node limit for Borel enumeration")->check(CLI::PositiveNumber);
  };

  auto* gotz = app.add_subcommand("gotzmann", "Gotzmann number and chart constants");
  add_n_hp(gotz);
  gotz->callback([&] { action = [&] { return run_gotzmann(g, n, hp, out); }; });

  auto* blist = app.add_subcommand("borel-list", "Saturated Borel ideals with a given Hilbert polynomial");
  add_n_hp(blist);
  add_cap(blist);
  blist->callback([&] { action = [&] { return run_borel_list(g, n, hp, cap, out); }; });

  auto* bclass = app.add_subcommand("borel-classify", "Borel ideals of the Grassmannian split by Hilbert polynomial");
  add_n_hp(bclass);
  add_cap(bclass);
  bclass->callback([&] { action = [&] { return run_borel_classify(g, n, hp, cap, out); }; });

  std::string ideal;
  std::string chart;
  long bound = 10;
  bool all_charts = false;
  std::string gtext;
  int max_tries = 100;
  auto* open = app.add_subcommand("open-set", "Find a coordinate change and a Borel chart containing an ideal");
  open->add_option("--ideal", ideal, "Homogeneous ideal (JSON, @file or text list)")->required();
  open->add_option("--n", n, "Projective dimension for text input");
  open->add_option("--bound", bound, "Entries of g are drawn from [-bound, bound]")->check(CLI::PositiveNumber);
  open->add_flag("--all-charts", all_charts, "Also list every Borel chart containing I^g");
  open->add_option("--g", gtext, "Fixed change of coordinates as a JSON matrix");
  open->add_option("--max-tries", max_tries, "Number of random coordinate changes to try")->check(CLI::PositiveNumber);
  add_cap(open);
  open->callback([&] {
    action = [&] { return run_open_set(g, ideal, n, bound, all_charts, gtext, max_tries, cap, out); };
  });

  auto* cform = app.add_subcommand("chart-form", "Marked set of a degree-r space in a Borel chart");
  cform->add_option("--ideal", ideal, "s forms of degree r")->required();
  cform->add_option("--chart", chart, "Monomial ideal generated in degree r")->required();
  cform->callback([&] { action = [&] { return run_chart_form(g, ideal, chart, out); }; });

  auto* pl = app.add_subcommand("pluecker", "Pluecker coordinate of s forms at a monomial chart");
  pl->add_option("--ideal", ideal, "s forms of degree r")->required();
  pl->add_option("--chart", chart, "Monomial ideal generated in degree r")->required();
  pl->callback([&] { action = [&] { return run_pluecker(g, ideal, chart, out); }; });

  std::string sat;
  int m = 0;
  std::string format = "text";
  std::string selection = "largest";
  auto* ms = app.add_subcommand("marked-scheme", "Equations of the marked scheme over a truncation");
  ms->add_option("--sat", sat, "Saturated Borel ideal")->required();
  ms->add_option("--m", m, "Truncation degree")->required()->check(CLI::NonNegativeNumber);
  ms->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  ms->add_option("--selection", selection, "Reduction order: largest or smallest");
  ms->callback([&] { action = [&] { return run_marked_scheme(g, sat, m, format, selection, out); }; });

  std::string marked;
  int r = -1;
  auto* cb = app.add_subcommand("check-basis", "Is a marked set over a Borel truncation a marked basis?");
  cb->add_option("--chart", chart, "Borel truncation J")->required();
  cb->add_option("--marked", marked, "Marked polynomials")->required();
  cb->add_option("--r", r, "Gotzmann number (default: from the Hilbert polynomial of S/J)");
  cb->callback([&] { action = [&] { return run_check_basis(g, chart, marked, r, out); }; });

  bool with_eq = false;
  std::string mchoice = "rho";
  std::string out_path;
  auto* at = app.add_subcommand("atlas", "Borel cover of a Hilbert scheme as JSON");
  add_n_hp(at);
  add_cap(at);
  at->add_flag("--with-equations", with_eq, "Compute the equations of every chart");
  at->add_option("--m", mchoice, "Truncation used for equations: rho, reg or gotzmann");
  at->add_option("--out", out_path, "Output file (default stdout)");
  at->callback([&] { action = [&] { return run_atlas(g, n, hp, with_eq, mchoice, out_path, cap, out); }; });

  std::string fixture;
  auto* cert = app.add_subcommand("certify", "Check a reference fixture with the independent oracle");
  cert->add_option("fixture", fixture, "points4-equations, points4-open-set, cubic-lex, line-chart or all")
      ->required();
  cert->callback([&] { action = [&] { return run_certify(g, fixture, out); }; });

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }

  try {
    return action ? action() : kExitParse;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const ScaleCapError& e) {
    err << "scale cap exceeded: " << e.what() << "\n";
    return kExitScaleCap;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace borelcover

#include "borelcover/io.hpp"

#include "borelcover/errors.hpp"
#include "borelcover/text.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace borelcover {

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

template <class T>
T get_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing JSON field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad JSON field '") + key + "': " + e.what());
  }
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::invalid_argument&) {
    }
  }
  throw ParseError("expected an integer, got " + j.dump());
}

Json integer_to_json(const Integer& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

}  // namespace

std::string read_argument(std::string_view text) {
  text = strip(text);
  if (text.empty() || text.front() != '@') return std::string(text);
  const std::string path(text.substr(1));
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

Json rational_to_json(const Rational& q) {
  if (q.get_den() == 1) return integer_to_json(q.get_num());
  return Json(to_string(q));
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(integer_from_json(j));
  if (j.is_string()) {
    Rational q;
    if (q.set_str(j.get<std::string>(), 10) != 0 || q.get_den() == 0) throw ParseError("bad rational " + j.dump());
    q.canonicalize();
    return q;
  }
  throw ParseError("expected a rational, got " + j.dump());
}

Json to_json(const MonomialIdeal& J) {
  Json gens = Json::array();
  for (const auto& b : J.basis()) gens.push_back(b.exponents());
  return Json{{"n", J.n()}, {"gens", gens}};
}

MonomialIdeal monomial_ideal_from_json(const Json& j) {
  const int n = get_field<int>(j, "n");
  if (n < 0) throw ParseError("n must be non-negative");
  const auto gens = get_field<std::vector<std::vector<int>>>(j, "gens");
  std::vector<Monomial> monos;
  for (const auto& e : gens) {
    if (static_cast<int>(e.size()) != n + 1) throw ParseError("exponent vector length must be n + 1");
    if (std::any_of(e.begin(), e.end(), [](int x) { return x < 0; })) throw ParseError("negative exponent");
    monos.emplace_back(e);
  }
  return MonomialIdeal(n, std::move(monos));
}

std::vector<std::string> split_top_level(std::string_view text) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char ch : text) {
    if (ch == '(' || ch == '[') ++depth;
    if (ch == ')' || ch == ']') --depth;
    if (ch == ',' && depth == 0) {
      out.emplace_back(strip(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!strip(cur).empty() || !out.empty()) out.emplace_back(strip(cur));
  return out;
}

namespace {

std::string_view unwrap_parens(std::string_view s) {
  s = strip(s);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  return s;
}

}  // namespace

MonomialIdeal parse_monomial_ideal(std::string_view text_in, std::optional<int> n) {
  const std::string text = read_argument(text_in);
  std::string_view body = strip(text);
  if (!body.empty() && body.front() == '{') {
    MonomialIdeal J = monomial_ideal_from_json(parse_json(body));
    if (n && *n != J.n()) throw ParseError("ideal has n = " + std::to_string(J.n()) + ", expected " + std::to_string(*n));
    return J;
  }
  body = unwrap_parens(body);
  const int dim = n ? *n : std::max(max_variable_index(body), 0);
  std::vector<Monomial> gens;
  for (const auto& part : split_top_level(body)) {
    if (part.empty()) throw ParseError("empty generator in ideal list");
    gens.push_back(parse_monomial(part, dim));
  }
  return MonomialIdeal(dim, std::move(gens));
}

std::string to_text(const MonomialIdeal& J) {
  std::string out = "(";
  for (std::size_t i = 0; i < J.basis().size(); ++i) {
    if (i) out += ", ";
    out += to_string(J.basis()[i]);
  }
  return out + ")";
}

PolyIdeal parse_poly_ideal(std::string_view text_in, std::optional<int> n) {
  const std::string text = read_argument(text_in);
  std::string_view body = strip(text);
  PolyIdeal out;
  if (!body.empty() && body.front() == '{') {
    Json j = parse_json(body);
    if (j.contains("gens")) {
      MonomialIdeal J = monomial_ideal_from_json(j);
      out.n = J.n();
      for (const auto& b : J.basis()) out.gens.push_back(XPoly::monomial(b, Rational(1)));
    } else {
      out.n = get_field<int>(j, "n");
      for (const auto& s : get_field<std::vector<std::string>>(j, "polys")) out.gens.push_back(parse_xpoly(s, out.n));
    }
    if (n && *n != out.n) throw ParseError("ideal has n = " + std::to_string(out.n) + ", expected " + std::to_string(*n));
    return out;
  }
  body = unwrap_parens(body);
  out.n = n ? *n : std::max(max_variable_index(body), 0);
  for (const auto& part : split_top_level(body)) {
    if (part.empty()) throw ParseError("empty generator in ideal list");
    out.gens.push_back(parse_xpoly(part, out.n));
  }
  return out;
}

Json to_json(const PolyIdeal& I) {
  Json polys = Json::array();
  for (const auto& g : I.gens) polys.push_back(to_string(g));
  return Json{{"n", I.n}, {"polys", polys}};
}

Json to_json(const CoordinateChange& g) {
  Json rows = Json::array();
  for (const auto& row : g) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(rational_to_json(x));
    rows.push_back(r);
  }
  return rows;
}

CoordinateChange coordinate_change_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("coordinate change must be a JSON array of rows");
  CoordinateChange g;
  for (const auto& row : j) {
    if (!row.is_array()) throw ParseError("coordinate change rows must be arrays");
    std::vector<Rational> r;
    for (const auto& x : row) r.push_back(rational_from_json(x));
    g.push_back(std::move(r));
  }
  return g;
}

Json to_json(const EquationSummary& s) {
  Json out{{"m", s.m}, {"num_vars", s.num_vars}, {"num_generators", s.generators.size()},
           {"generators", s.generators}, {"max_degree", s.max_degree}};
  out["bound_count"] = s.bound_count ? integer_to_json(*s.bound_count) : Json(nullptr);
  out["bound_degree"] = s.bound_degree ? Json(*s.bound_degree) : Json(nullptr);
  return out;
}

EquationSummary equation_summary_from_json(const Json& j) {
  EquationSummary s;
  s.m = get_field<int>(j, "m");
  s.num_vars = get_field<long>(j, "num_vars");
  s.generators = get_field<std::vector<std::string>>(j, "generators");
  s.max_degree = get_field<int>(j, "max_degree");
  if (j.contains("bound_count") && !j.at("bound_count").is_null()) s.bound_count = integer_from_json(j.at("bound_count"));
  if (j.contains("bound_degree") && !j.at("bound_degree").is_null()) s.bound_degree = get_field<int>(j, "bound_degree");
  return s;
}

Json to_json(const Atlas& a) {
  Json charts = Json::array();
  for (const auto& c : a.charts) {
    Json cj{{"sat", to_json(c.Jsat)},
            {"reg", c.reg},
            {"rho", c.rho},
            {"dims", {{"rho", c.dim_rho}, {"reg", c.dim_reg}, {"gotzmann", c.dim_gotzmann}}}};
    if (c.equations) cj["equations"] = to_json(*c.equations);
    charts.push_back(cj);
  }
  Json empty = Json::array();
  for (const auto& e : a.empty_charts) empty.push_back({{"J", to_json(e.J)}, {"hilbert_polynomial", e.hp.to_string()}});
  return Json{{"n", a.n},
              {"hilbert_polynomial", a.p.to_string()},
              {"gotzmann_number", a.r},
              {"s", a.s},
              {"D", a.D},
              {"charts", charts},
              {"empty_charts", empty},
              {"gluing", a.gluing}};
}

Atlas atlas_from_json(const Json& j) {
  Atlas a;
  a.n = get_field<int>(j, "n");
  a.p = HilbertPoly::parse(get_field<std::string>(j, "hilbert_polynomial"));
  a.r = get_field<int>(j, "gotzmann_number");
  a.s = get_field<long>(j, "s");
  a.D = get_field<long>(j, "D");
  for (const auto& cj : get_field<Json>(j, "charts")) {
    AtlasChart c;
    c.Jsat = monomial_ideal_from_json(get_field<Json>(cj, "sat"));
    c.reg = get_field<int>(cj, "reg");
    c.rho = get_field<int>(cj, "rho");
    const Json dims = get_field<Json>(cj, "dims");
    c.dim_rho = get_field<long>(dims, "rho");
    c.dim_reg = get_field<long>(dims, "reg");
    c.dim_gotzmann = get_field<long>(dims, "gotzmann");
    if (cj.contains("equations")) c.equations = equation_summary_from_json(cj.at("equations"));
    a.charts.push_back(std::move(c));
  }
  for (const auto& ej : get_field<Json>(j, "empty_charts")) {
    a.empty_charts.push_back({monomial_ideal_from_json(get_field<Json>(ej, "J")),
                              HilbertPoly::parse(get_field<std::string>(ej, "hilbert_polynomial"))});
  }
  a.gluing = get_field<std::vector<std::vector<long>>>(j, "gluing");
  return a;
}

}  // namespace borelcover

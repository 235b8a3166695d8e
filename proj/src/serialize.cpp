#include "mtc/serialize.hpp"

#include "mtc/error.hpp"

namespace mtc {

std::string rational_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0 || r.get_den() == 0)
    throw Error(ErrorKind::parse, "not a rational number: '" + text + "'");
  r.canonicalize();
  return r;
}

Json to_json(const CycloNum& x) {
  Json arr = Json::array();
  for (const auto& c : x.coefficients()) arr.push_back(rational_string(c));
  return arr;
}

CycloNum cyclo_from_json(const Json& j) {
  if (!j.is_array() || j.size() != CycloNum::kDegree)
    throw Error(ErrorKind::parse, "field element must be an array of 64 rationals");
  std::vector<Rational> c;
  for (const auto& e : j) {
    if (!e.is_string()) throw Error(ErrorKind::parse, "field coefficient must be a \"num/den\" string");
    c.push_back(parse_rational(e.get<std::string>()));
  }
  return CycloNum::from_power_coefficients(c);
}

Json to_json(const QSeries& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back({{"exp", to_string(e)}, {"coef", to_json(c)}});
  Json out;
  out["bound"] = f.bound() ? Json(to_string(*f.bound())) : Json(nullptr);
  out["terms"] = std::move(terms);
  return out;
}

QSeries qseries_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("terms") || !j.contains("bound"))
    throw Error(ErrorKind::parse, "series needs \"bound\" and \"terms\"");
  OrderBound b;
  if (!j["bound"].is_null()) b = parse_exponent(j["bound"].get<std::string>());
  QSeries::Terms t;
  for (const auto& e : j["terms"]) {
    const QExponent x = parse_exponent(e.at("exp").get<std::string>());
    if (t.count(x)) throw Error(ErrorKind::parse, "repeated exponent " + to_string(x));
    t.emplace(x, cyclo_from_json(e.at("coef")));
  }
  return QSeries(std::move(t), b);
}

Json to_json(const IdentityReport& r) {
  Json out;
  out["id"] = r.id;
  out["bound"] = to_string(r.bound);
  out["status"] = r.equal ? "equal" : "mismatch";
  if (!r.equal) {
    out["first_mismatch_exp"] = r.first_mismatch ? Json(to_string(*r.first_mismatch)) : Json(nullptr);
    out["lhs_coef"] = to_json(r.lhs_coef);
    out["rhs_coef"] = to_json(r.rhs_coef);
  }
  return out;
}

Json to_json(const CompletionTerm& t) {
  return {{"prefactor", to_json(t.prefactor)},
          {"a", to_string(t.a)},
          {"b", to_string(t.b)},
          {"arg_scale", to_string(t.arg_scale)},
          {"arg_shift", to_string(t.arg_shift)}};
}

namespace {

Json cells(const std::vector<CellMismatch>& v) {
  Json a = Json::array();
  for (const auto& c : v) a.push_back({{"h", c.h}, {"j", c.j}});
  return a;
}

}  // namespace

Json to_json(const IntertwiningReport& r) {
  return {{"cells_checked", r.cells_checked},
          {"t_holds", r.t_holds},
          {"s_holds", r.s_holds},
          {"t_violations", cells(r.t_violations)},
          {"s_violations", cells(r.s_violations)}};
}

Json to_json(const VanishingReport& r) {
  return {{"bound", to_string(r.bound)}, {"vanishes", r.vanishes}, {"nonzero_rows", r.nonzero_rows}};
}

Json to_json(const WeilMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.entries.n; ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.entries.n; ++j) row.push_back(to_json(m.entry(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const CuspMatchReport& r) {
  Json c = Json::array();
  for (std::size_t i = 0; i < r.candidates.size(); ++i)
    c.push_back({{"cusp", to_string(r.candidates[i])}, {"class", r.classes[i]}});
  return {{"candidates", c},
          {"pairwise_inequivalent", r.pairwise_inequivalent},
          {"exhaustive", r.exhaustive},
          {"missing_classes", r.missing}};
}

Json to_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

Json to_json(const ResidualReport& r) {
  Json comps = Json::array();
  for (const auto& c : r.components)
    comps.push_back({{"component", c.component},
                     {"z", to_json(c.z)},
                     {"lhs", to_json(c.lhs)},
                     {"rhs", to_json(c.rhs)},
                     {"abs_residual", c.abs_residual},
                     {"error_budget", c.error_budget}});
  return {{"vector", r.vector},
          {"transformation", r.kind},
          {"z", to_json(r.z)},
          {"components", comps},
          {"max_residual", r.max_residual},
          {"max_error_budget", r.max_error_budget}};
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace mtc

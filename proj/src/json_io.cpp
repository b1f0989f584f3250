#include "wtwist/json_io.hpp"

#include "wtwist/errors.hpp"

namespace wtwist {

namespace {

nlohmann::json ints_to_json(const std::vector<Int>& xs) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Int& x : xs) {
    if (!x.fits_slong_p())
      arr.push_back(x.get_str());  // degrade to string rather than overflow
    else
      arr.push_back(x.get_si());
  }
  return arr;
}

Int int_from_json(const nlohmann::json& j, const char* what) {
  try {
    if (j.is_number_integer())
      return Int(std::to_string(j.get<long long>()));
    if (j.is_string()) return Int(j.get<std::string>());
  } catch (const std::exception&) {
  }
  throw domain_error(errc::validation(),
                     std::string(what) + " must be an integer");
}

std::vector<Int> ints_from_json(const nlohmann::json& j, const char* what) {
  if (!j.is_array() || j.empty())
    throw domain_error(errc::validation(),
                       std::string(what) + " must be a non-empty array");
  std::vector<Int> out;
  for (const auto& e : j) out.push_back(int_from_json(e, what));
  return out;
}

Rat rat_from_string(const std::string& s) {
  try {
    Rat q(s);
    q.canonicalize();
    return q;
  } catch (const std::exception&) {
    throw domain_error(errc::validation(),
                       "coefficient must be a p/q string, got \"" + s + "\"");
  }
}

std::string join_ints(const std::vector<Int>& xs) {
  std::string out;
  for (const Int& x : xs) {
    if (!out.empty()) out += " ";
    out += x.get_str();
  }
  return out;
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += "\"";
  return out;
}

}  // namespace

nlohmann::json to_json(const WeightedHypersurface& x) {
  nlohmann::json j;
  j["weights"] = ints_to_json(x.ambient().weights());
  j["degree"] = x.degree().fits_slong_p() ? nlohmann::json(x.degree().get_si())
                                          : nlohmann::json(x.degree().get_str());
  nlohmann::json terms = nlohmann::json::array();
  for (const Term& t : x.poly.terms()) {
    nlohmann::json jt;
    jt["exps"] = ints_to_json(t.mono.exps);
    jt["coeff"] = rat_to_string(t.coeff);
    terms.push_back(std::move(jt));
  }
  j["terms"] = std::move(terms);
  return j;
}

WeightedHypersurface hypersurface_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("weights") || !j.contains("degree") ||
      !j.contains("terms"))
    throw domain_error(errc::validation(),
                       "expected {weights, degree, terms} object");
  WeightSystem ws(ints_from_json(j["weights"], "weights"));
  Int degree = int_from_json(j["degree"], "degree");
  if (!j["terms"].is_array() || j["terms"].empty())
    throw domain_error(errc::validation(), "terms must be a non-empty array");
  std::vector<Term> terms;
  for (const auto& jt : j["terms"]) {
    if (!jt.is_object() || !jt.contains("exps") || !jt.contains("coeff"))
      throw domain_error(errc::validation(),
                         "each term must be {exps, coeff}");
    Monomial m{ints_from_json(jt["exps"], "exps")};
    if (m.exps.size() != ws.size())
      throw domain_error(errc::validation(),
                         "exponent vector length must match weights");
    Rat c = jt["coeff"].is_string()
                ? rat_from_string(jt["coeff"].get<std::string>())
                : Rat(int_from_json(jt["coeff"], "coeff"));
    terms.push_back(Term{std::move(m), std::move(c)});
  }
  return WeightedHypersurface{
      WeightedPolynomial(std::move(ws), std::move(degree), std::move(terms))};
}

nlohmann::json to_json(const NormalizeResult& r) {
  nlohmann::json j;
  j["weights"] = ints_to_json(r.ws.weights());
  j["degree"] = r.degree.fits_slong_p() ? nlohmann::json(r.degree.get_si())
                                        : nlohmann::json(r.degree.get_str());
  j["factors"] = ints_to_json(r.factors);
  if (r.poly)
    j["hypersurface"] = to_json(WeightedHypersurface{*r.poly});
  return j;
}

nlohmann::json to_json(const TwistResult& r) {
  nlohmann::json j;
  j["image"] = to_json(r.image);
  j["quotient_order"] = r.quotient_order.get_si();
  j["gcd_w0_v0_ell"] = r.gcd_w0_v0_ell.get_si();
  j["generically_finite"] = r.generically_finite;
  return j;
}

nlohmann::json to_json(const CyReport& r) {
  nlohmann::json j;
  j["sufficient"] = r.sufficient;
  j["genus_count"] = r.genus_count.get_si();
  j["exceptional_candidate"] = r.exceptional_candidate;
  if (r.fiber_cy) j["fiber_cy"] = *r.fiber_cy;
  if (r.total_cy) j["total_cy"] = *r.total_cy;
  if (r.fibration_needs_modification)
    j["fibration_needs_modification"] = *r.fibration_needs_modification;
  return j;
}

nlohmann::json to_json(const FibrationReport& r) {
  nlohmann::json j;
  nlohmann::json fibers = nlohmann::json::array();
  for (const FiberCount& fc : r.fibers) {
    nlohmann::json jf;
    jf["count"] = fc.count.get_si();
    jf["type"] = fc.fiber.symbol;
    jf["euler"] = fc.fiber.euler;
    jf["alpha"] = rat_to_string(fc.fiber.alpha);
    jf["lattice"] = fc.fiber.lattice;
    fibers.push_back(std::move(jf));
  }
  j["fibers"] = std::move(fibers);
  j["singular_count"] = r.singular_count.get_si();
  j["alpha_sum"] = rat_to_string(r.alpha_sum);
  j["euler_sum"] = r.euler_sum.get_si();
  j["total_euler"] = r.total_euler.get_si();
  j["picard"] = picard_summands(r.fibers);
  return j;
}

nlohmann::json to_json(const TableRow& r) {
  nlohmann::json j;
  j["base_weights"] = ints_to_json(r.base);
  j["fiber_weights"] = ints_to_json(r.fiber);
  j["ell"] = r.ell.get_si();
  j["image_weights"] = ints_to_json(r.image);
  j["degree"] = r.degree.fits_slong_p() ? nlohmann::json(r.degree.get_si())
                                        : nlohmann::json(r.degree.get_str());
  if (r.chi) j["chi"] = r.chi->get_si();
  if (!r.fibers.empty()) j["fibers"] = r.fibers;
  if (!r.base_polynomial.empty()) j["base_polynomial"] = r.base_polynomial;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

nlohmann::json rows_to_json(const std::vector<TableRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const TableRow& r : rows) arr.push_back(to_json(r));
  return arr;
}

std::string rows_to_csv(const std::vector<TableRow>& rows) {
  std::string out =
      "base_weights,fiber_weights,ell,image_weights,degree,chi,fibers,note\n";
  for (const TableRow& r : rows) {
    out += csv_quote(join_ints(r.base)) + ",";
    out += csv_quote(join_ints(r.fiber)) + ",";
    out += r.ell.get_str() + ",";
    out += csv_quote(join_ints(r.image)) + ",";
    out += r.degree.get_str() + ",";
    out += (r.chi ? r.chi->get_str() : "") + ",";
    out += csv_quote(r.fibers) + ",";
    out += csv_quote(r.note) + "\n";
  }
  return out;
}

}  // namespace wtwist

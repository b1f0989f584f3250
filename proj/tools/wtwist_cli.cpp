// Command-line front end: exact weighted-projective constructions, fiber
// classification, Euler/Hodge bookkeeping, resolutions, and table search.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wtwist/errors.hpp"
#include "wtwist/euler_hodge.hpp"
#include "wtwist/fibration.hpp"
#include "wtwist/json_io.hpp"
#include "wtwist/resolve.hpp"
#include "wtwist/search.hpp"
#include "wtwist/twist.hpp"
#include "wtwist/weight_system.hpp"
#include "wtwist/wps_core.hpp"

namespace {

using namespace wtwist;

// --- input helpers ----------------------------------------------------------

std::vector<Int> parse_int_list(const std::string& s, const char* what) {
  std::vector<Int> out;
  std::string token;
  std::stringstream ss(s);
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    try {
      out.emplace_back(token);
    } catch (const std::exception&) {
      throw domain_error(errc::validation(),
                         std::string(what) + ": bad integer \"" + token + "\"");
    }
  }
  if (out.empty())
    throw domain_error(errc::validation(),
                       std::string(what) + ": empty integer list");
  return out;
}

// Accepts either a filename or a literal JSON object.
WeightedHypersurface load_hypersurface(const std::string& spec) {
  std::string text;
  if (!spec.empty() && spec.front() == '{') {
    text = spec;
  } else {
    std::ifstream in(spec);
    if (!in)
      throw domain_error(errc::validation(), "cannot open file " + spec);
    std::stringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw domain_error(errc::validation(),
                       std::string("bad JSON input: ") + e.what());
  }
  return hypersurface_from_json(j);
}

struct SurfaceSpec {
  std::string input;    // JSON file or literal
  std::string weights;  // "w0,w1,..."
  std::string degree;
  bool fermat = false;
  bool chain = false;

  void add_options(CLI::App* cmd) {
    cmd->add_option("--input", input,
                    "hypersurface as JSON (filename or literal object)");
    cmd->add_option("--weights", weights, "comma-separated weights");
    cmd->add_option("--degree", degree, "weighted degree");
    cmd->add_flag("--fermat", fermat, "build the Fermat equation");
    cmd->add_flag("--chain", chain,
                  "build a chain equation (distinguished variable reserved)");
  }

  bool has_weights() const { return !weights.empty() && !degree.empty(); }

  WeightSystem weight_system_only(const char* what) const {
    if (weights.empty())
      throw domain_error(errc::validation(),
                         std::string(what) + ": --weights required");
    return WeightSystem(parse_int_list(weights, what));
  }

  std::optional<WeightedHypersurface> load(const char* what) const {
    if (!input.empty()) return load_hypersurface(input);
    if (!has_weights()) return std::nullopt;
    WeightSystem ws(parse_int_list(weights, what));
    Int d(degree);
    if (chain)
      return WeightedHypersurface{build_chain(ws, d, 0)};
    if (fermat)
      return WeightedHypersurface{build_fermat(ws, d)};
    return std::nullopt;
  }
};

SearchBounds parse_bounds(const std::string& spec) {
  SearchBounds bounds;
  if (spec.empty()) return bounds;
  std::string token;
  std::stringstream ss(spec);
  while (std::getline(ss, token, ',')) {
    auto eq = token.find('=');
    if (eq == std::string::npos)
      throw domain_error(errc::validation(),
                         "--bounds entries must be key=value, got \"" + token +
                             "\"");
    std::string key = token.substr(0, eq);
    std::string value = token.substr(eq + 1);
    if (key == "max_w0") {
      bounds.max_w0 = Int(value);
    } else if (key == "ells") {
      std::string e;
      std::stringstream es(value);
      while (std::getline(es, e, '|'))
        if (!e.empty()) bounds.ells.emplace_back(e);
    } else if (key == "chain") {
      bounds.allow_chain = value != "0";
    } else if (key == "chi") {
      bounds.attach_chi = value != "0";
    } else {
      throw domain_error(errc::validation(),
                         "unknown --bounds key \"" + key + "\"");
    }
  }
  return bounds;
}

void emit(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact constructions for weighted hypersurfaces fibered in "
      "constant-modulus curves and K3 surfaces"};
  app.require_subcommand(1);

  std::string format = "json";
  app.add_option("--format", format, "output format for row tables")
      ->check(CLI::IsMember({"json", "csv"}));
  bool seedless = false;
  app.add_flag("--seedless", seedless,
               "kept for interface stability; output is always deterministic");

  // normalize
  auto* cmd_normalize = app.add_subcommand(
      "normalize", "remove common factors from a weight system");
  SurfaceSpec norm_spec;
  norm_spec.add_options(cmd_normalize);

  // twist
  auto* cmd_twist = app.add_subcommand(
      "twist", "fold two distinguished hypersurfaces into one");
  std::string twist_v1, twist_v2, twist_ell;
  cmd_twist->add_option("--v1", twist_v1, "first factor (JSON file or literal)")
      ->required();
  cmd_twist->add_option("--v2", twist_v2, "second factor")->required();
  cmd_twist->add_option("--ell", twist_ell, "common distinguished exponent")
      ->required();

  // check-cy
  auto* cmd_check = app.add_subcommand(
      "check-cy", "degree-sum and dualizing-sheaf checks");
  SurfaceSpec check_spec;
  check_spec.add_options(cmd_check);

  // classify-fibers
  auto* cmd_classify = app.add_subcommand(
      "classify-fibers",
      "singular fibers of the induced constant-modulus elliptic fibration");
  SurfaceSpec classify_spec;
  classify_spec.add_options(cmd_classify);
  std::string classify_fiber, classify_ell;
  cmd_classify->add_option("--fiber-weights", classify_fiber,
                           "elliptic fiber weights v0,v1,v2")
      ->required();
  cmd_classify->add_option("--ell", classify_ell, "quotient order")->required();

  // euler
  auto* cmd_euler = app.add_subcommand("euler", "Euler number computations");
  std::string euler_mode = "orbifold";
  cmd_euler->add_option("--mode", euler_mode, "orbifold or fibration")
      ->check(CLI::IsMember({"orbifold", "fibration"}));
  std::string euler_weights, euler_degree;
  cmd_euler->add_option("--weights", euler_weights, "weights (orbifold mode)");
  cmd_euler->add_option("--degree", euler_degree, "degree (orbifold mode)");
  std::string euler_n, euler_fiber, euler_generic = "24", euler_base = "2";
  cmd_euler->add_option("--singular-count", euler_n,
                        "number of degenerate fibers (fibration mode)");
  cmd_euler->add_option("--fiber-euler", euler_fiber,
                        "Euler number of the degenerate fiber");
  cmd_euler->add_option("--generic-euler", euler_generic,
                        "Euler number of the generic fiber");
  cmd_euler->add_option("--base-euler", euler_base,
                        "Euler number of the base");

  // resolve-hj
  auto* cmd_hj = app.add_subcommand(
      "resolve-hj", "Hirzebruch-Jung resolution of a cyclic point");
  std::string hj_alpha, hj_beta, hj_weight;
  cmd_hj->add_option("--alpha", hj_alpha, "order of the cyclic group")
      ->required();
  cmd_hj->add_option("--beta", hj_beta, "rotation parameter");
  cmd_hj->add_option("--from-weight", hj_weight,
                     "derive beta as the inverse of this weight mod alpha");

  // cone
  auto* cmd_cone = app.add_subcommand(
      "cone", "interior lattice points of the resolution cone");
  std::string cone_weights;
  cmd_cone->add_option("--weights", cone_weights, "w0,w1,w2")->required();

  // conifold
  auto* cmd_conifold = app.add_subcommand(
      "conifold", "Hodge numbers across a small-resolution transition");
  std::string cf_h11, cf_h21, cf_nodes, cf_relations;
  cmd_conifold->add_option("--h11", cf_h11)->required();
  cmd_conifold->add_option("--h21", cf_h21)->required();
  cmd_conifold->add_option("--nodes", cf_nodes)->required();
  cmd_conifold->add_option("--relations", cf_relations)->required();

  // genus
  auto* cmd_genus = app.add_subcommand(
      "genus", "genus of a weighted curve (hypersurface or intersection)");
  std::string genus_weights, genus_d1, genus_d2;
  cmd_genus->add_option("--weights", genus_weights, "ambient weights")
      ->required();
  cmd_genus->add_option("--d1", genus_d1, "degree")->required();
  cmd_genus->add_option("--d2", genus_d2,
                        "second degree (complete intersection)");

  // enumerate
  auto* cmd_enum = app.add_subcommand("enumerate", "table search");
  std::string enum_kind;
  cmd_enum->add_option("kind", enum_kind, "k3 | cy3-elliptic | cy3-k3")
      ->required()
      ->check(CLI::IsMember({"k3", "cy3-elliptic", "cy3-k3"}));
  std::string enum_bounds;
  cmd_enum->add_option(
      "--bounds", enum_bounds,
      "max_w0=N,ells=3|4|6,chain=0/1,chi=0/1 (comma-separated)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_normalize) {
      WeightSystem ws = norm_spec.weight_system_only("normalize");
      if (norm_spec.degree.empty())
        throw domain_error(errc::validation(), "normalize: --degree required");
      Int d(norm_spec.degree);
      std::optional<WeightedPolynomial> poly;
      if (auto x = norm_spec.load("normalize")) poly = x->poly;
      emit(to_json(normalize(ws, d, poly)));
    } else if (*cmd_twist) {
      TwistInput in{load_hypersurface(twist_v1), load_hypersurface(twist_v2),
                    Int(twist_ell)};
      emit(to_json(twist(in)));
    } else if (*cmd_check) {
      auto x = check_spec.load("check-cy");
      if (!x)
        throw domain_error(errc::validation(),
                           "check-cy: provide --input or --weights/--degree "
                           "with --fermat or --chain");
      emit(to_json(cy_conditions(*x)));
    } else if (*cmd_classify) {
      auto x = classify_spec.load("classify-fibers");
      if (!x)
        throw domain_error(errc::validation(),
                           "classify-fibers: provide --input or "
                           "--weights/--degree with --fermat or --chain");
      WeightSystem fiber(parse_int_list(classify_fiber, "fiber-weights"));
      emit(to_json(classify_elliptic_fibers(*x, fiber, Int(classify_ell))));
    } else if (*cmd_euler) {
      if (euler_mode == "orbifold") {
        if (euler_weights.empty() || euler_degree.empty())
          throw domain_error(errc::validation(),
                             "euler --mode orbifold needs --weights/--degree");
        WeightSystem ws(parse_int_list(euler_weights, "weights"));
        Int chi = orbifold_euler(ws, Int(euler_degree));
        nlohmann::json j;
        j["chi"] = chi.get_si();
        emit(j);
      } else {
        if (euler_n.empty() || euler_fiber.empty())
          throw domain_error(
              errc::validation(),
              "euler --mode fibration needs --singular-count/--fiber-euler");
        FibrationEuler fe =
            fibration_euler(Int(euler_n), Int(euler_fiber),
                            Int(euler_generic), Int(euler_base));
        nlohmann::json j;
        j["chi"] = fe.value.get_si();
        if (fe.bound_satisfied) j["bound_satisfied"] = *fe.bound_satisfied;
        emit(j);
      }
    } else if (*cmd_hj) {
      Int alpha(hj_alpha);
      Int beta;
      if (!hj_weight.empty())
        beta = beta_from_weight(alpha, Int(hj_weight));
      else if (!hj_beta.empty())
        beta = Int(hj_beta);
      else
        throw domain_error(errc::validation(),
                           "resolve-hj: provide --beta or --from-weight");
      nlohmann::json j;
      j["alpha"] = alpha.get_si();
      j["beta"] = beta.get_si();
      nlohmann::json arr = nlohmann::json::array();
      for (const Int& b : hj_expand(alpha, beta)) arr.push_back(b.get_si());
      j["continued_fraction"] = std::move(arr);
      emit(j);
    } else if (*cmd_cone) {
      std::vector<Int> w = parse_int_list(cone_weights, "cone");
      if (w.size() != 3)
        throw domain_error(errc::validation(), "cone needs three weights");
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& t : cone_lattice_points(w[0], w[1], w[2]))
        arr.push_back({t[0].get_si(), t[1].get_si(), t[2].get_si()});
      nlohmann::json j;
      j["points"] = std::move(arr);
      emit(j);
    } else if (*cmd_conifold) {
      ConifoldData data{HodgePair{Int(cf_h11), Int(cf_h21)}, Int(cf_nodes),
                        Int(cf_relations)};
      HodgePair after = conifold_transition(data);
      nlohmann::json j;
      j["h11"] = after.h11.get_si();
      j["h21"] = after.h21.get_si();
      emit(j);
    } else if (*cmd_genus) {
      WeightSystem ws(parse_int_list(genus_weights, "genus"));
      nlohmann::json j;
      if (!genus_d2.empty())
        j["genus"] = ci_curve_genus(Int(genus_d1), Int(genus_d2), ws).get_si();
      else
        j["genus"] = geometric_genus(ws, Int(genus_d1)).get_si();
      emit(j);
    } else if (*cmd_enum) {
      SearchBounds bounds = parse_bounds(enum_bounds);
      std::vector<TableRow> rows;
      if (enum_kind == "k3")
        rows = enumerate_k3(bounds);
      else if (enum_kind == "cy3-elliptic")
        rows = enumerate_cy3_elliptic(bounds);
      else
        rows = enumerate_cy3_k3fibered(bounds);
      if (format == "csv")
        std::cout << rows_to_csv(rows);
      else
        emit(rows_to_json(rows));
    }
  } catch (const domain_error& e) {
    nlohmann::json j;
    j["error"] = e.code();
    j["message"] = e.what();
    std::cerr << j.dump(2) << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}

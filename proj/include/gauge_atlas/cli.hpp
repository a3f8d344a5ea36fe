#pragma once

// Subcommand dispatch for the gauge_atlas command-line tool.  A request is a
// subcommand plus a flag map; the report is one JSON document.

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gauge_atlas/bundle_classes.hpp"
#include "gauge_atlas/cohomology_model.hpp"
#include "gauge_atlas/error.hpp"
#include "gauge_atlas/gauge_components.hpp"
#include "gauge_atlas/io.hpp"
#include "gauge_atlas/lattice_chern_weil.hpp"
#include "gauge_atlas/lie_numerics.hpp"

#ifndef GAUGE_ATLAS_VERSION
#define GAUGE_ATLAS_VERSION "0.0.0"
#endif

namespace gauge_atlas::cli {

using json = nlohmann::json;

inline constexpr std::string_view kVersion = GAUGE_ATLAS_VERSION;

struct CommandRequest {
  std::string subcommand;
  std::optional<std::string> manifold_path;
  /// Flag name without leading dashes -> raw value ("true" for switches).
  std::map<std::string, std::string> parameters;
};

struct Report {
  bool ok = true;
  std::string subcommand;
  json payload = json::object();
  json provenance = json::object();
  std::optional<ErrorCode> error;
  std::string message;
  /// Wall-clock data; kept apart from the payload so payloads compare
  /// byte-for-byte across runs.
  json timing = json::object();

  [[nodiscard]] int exit_code() const { return error ? static_cast<int>(*error) : 0; }
};

inline json to_json(const Report& rep) {
  json doc = {{"status", rep.ok ? "ok" : "error"},
              {"subcommand", rep.subcommand},
              {"payload", rep.payload},
              {"provenance", rep.provenance},
              {"timing", rep.timing}};
  if (rep.error)
    doc["error"] = {{"code", std::string(to_string(*rep.error))}, {"exit_code", rep.exit_code()}, {"message", rep.message}};
  else
    doc["error"] = nullptr;
  return doc;
}

struct FlagSpec {
  std::set<std::string> required;
  std::set<std::string> optional;
};

inline const std::map<std::string, FlagSpec>& subcommand_flags() {
  static const std::map<std::string, FlagSpec> table = {
      {"classify", {{"manifold", "r"}, {"product", "q-min", "q-max"}}},
      {"gauge-components", {{"manifold", "r"}, {"t2", "eta", "deg", "orientation", "limit"}}},
      {"mapping-torus", {{"manifold", "r", "eta"}, {"t2", "deg", "q4", "orientation"}}},
      {"exists-degree", {{"manifold", "r", "c", "sigma"}, {"degree-one", "orientation"}}},
      {"g-sigma", {{"manifold", "r", "sigma", "gamma", "d", "eta", "deg"}, {"orientation"}}},
      {"lie-check", {{"r"}, {"samples", "seed"}}},
      {"verify-lattice",
       {{"config"}, {"r", "grid", "n1", "n2", "w", "s-steps", "kappa", "orientation", "profile"}}},
  };
  return table;
}

namespace detail {

inline std::int64_t parse_int(const std::string& flag, const std::string& text) {
  std::int64_t value = 0;
  std::size_t used = 0;
  try {
    value = std::stoll(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size())
    throw Error(ErrorCode::invalid_argument, "--" + flag + ": expected an integer, got '" + text + "'");
  return value;
}

inline std::vector<std::int64_t> parse_int_list(const std::string& flag, const std::string& text) {
  std::vector<std::int64_t> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_int(flag, item));
  return out;
}

class Params {
 public:
  explicit Params(const CommandRequest& req) : req_(req) {}

  [[nodiscard]] bool has(const std::string& flag) const { return req_.parameters.count(flag) != 0; }

  [[nodiscard]] std::int64_t integer(const std::string& flag, std::optional<std::int64_t> fallback = std::nullopt) const {
    const auto it = req_.parameters.find(flag);
    if (it == req_.parameters.end()) {
      if (fallback) return *fallback;
      throw Error(ErrorCode::invalid_argument, "missing required flag --" + flag);
    }
    return parse_int(flag, it->second);
  }

  [[nodiscard]] std::vector<std::int64_t> list(const std::string& flag) const {
    const auto it = req_.parameters.find(flag);
    if (it == req_.parameters.end()) throw Error(ErrorCode::invalid_argument, "missing required flag --" + flag);
    return parse_int_list(flag, it->second);
  }

  [[nodiscard]] std::string text(const std::string& flag, const std::string& fallback) const {
    const auto it = req_.parameters.find(flag);
    return it == req_.parameters.end() ? fallback : it->second;
  }

  [[nodiscard]] bool flag(const std::string& flag) const {
    const auto it = req_.parameters.find(flag);
    if (it == req_.parameters.end()) return false;
    if (it->second == "true" || it->second == "1" || it->second.empty()) return true;
    if (it->second == "false" || it->second == "0") return false;
    throw Error(ErrorCode::invalid_argument, "--" + flag + ": expected a switch");
  }

  [[nodiscard]] int rank() const {
    const auto r = integer("r");
    if (r < 2) throw Error(ErrorCode::invalid_argument, "--r must be at least 2");
    if (r > 1'000'000) throw Error(ErrorCode::invalid_argument, "--r is too large");
    return static_cast<int>(r);
  }

  /// +1 for the ds ^ dvol_X convention, -1 for the opposite one.
  [[nodiscard]] int orientation_sign() const {
    const auto o = text("orientation", "+");
    if (o == "+" || o == "positive") return 1;
    if (o == "-" || o == "negative") return -1;
    throw Error(ErrorCode::invalid_argument, "--orientation must be + or -");
  }

 private:
  const CommandRequest& req_;
};

inline std::string resolve_manifold_path(const std::string& arg) {
  namespace fs = std::filesystem;
  if (fs::is_regular_file(arg)) return arg;
  std::vector<fs::path> dirs;
  if (const char* env = std::getenv("GAUGE_ATLAS_MANIFOLD_DIR"); env != nullptr && *env != '\0') dirs.emplace_back(env);
#ifdef GAUGE_ATLAS_BUNDLED_MANIFOLD_DIR
  dirs.emplace_back(GAUGE_ATLAS_BUNDLED_MANIFOLD_DIR);
#endif
  for (const auto& dir : dirs) {
    for (const auto& candidate : {dir / arg, dir / (arg + ".json")})
      if (fs::is_regular_file(candidate)) return candidate.string();
  }
  throw Error(ErrorCode::io_error, "manifold file not found: '" + arg + "'");
}

inline io::LoadedManifold load(const CommandRequest& req, Report& rep) {
  if (!req.manifold_path) throw Error(ErrorCode::invalid_argument, "missing required flag --manifold");
  auto loaded = io::parse_manifold_file(resolve_manifold_path(*req.manifold_path));
  rep.provenance["manifold"] = {{"name", loaded.model.name()}, {"digest", loaded.digest}};
  return loaded;
}

inline CohClass coords(const std::vector<std::int64_t>& v, int degree, int expected, const std::string& flag) {
  if (static_cast<int>(v.size()) != expected)
    throw Error(ErrorCode::invalid_argument,
                "--" + flag + " needs " + std::to_string(expected) + " comma-separated integers");
  return CohClass::integral_class(degree, v);
}

inline CohClass t2_lift_from(const Params& p, const CohomologyModel& x) {
  const int n = x.rank(2);
  if (!p.has("t2")) return CohClass::integral_class(2, std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
  return coords(p.list("t2"), 2, n, "t2");
}

inline GaugeClass gauge_from(const Params& p, const CohomologyModel& x, int r) {
  const auto eta = coords(p.list("eta"), 1, x.b1(), "eta");
  std::optional<std::int64_t> deg;
  if (p.has("deg")) deg = p.orientation_sign() * p.integer("deg");
  return make_gauge_class(x, r, eta.coefficients, deg);
}

// Subcommands ---------------------------------------------------------------

inline void run_classify(const CommandRequest& req, const Params& p, Report& rep) {
  const auto loaded = load(req, rep);
  const int r = p.rank();
  const BaseSpace base = p.flag("product") ? BaseSpace(kunneth_model(loaded.model)) : BaseSpace(loaded.model);
  std::optional<QWindow> window;
  if (p.has("q-min") || p.has("q-max")) window = QWindow{p.integer("q-min"), p.integer("q-max")};
  const auto bundles = enumerate_bundles(base, r, window);
  json records = json::array();
  for (const auto& b : bundles) {
    auto rec = io::bundle_record(b);
    if (b.q4) rec["woodward_check"] = woodward_check(b);
    records.push_back(std::move(rec));
  }
  rep.payload = {{"r", r},
                 {"base", base_name(base)},
                 {"dimension", dimension(base)},
                 {"h2_rank", rank(base, 2)},
                 {"count", bundles.size()},
                 {"bundles", records}};
  rep.payload["q4_window"] = window ? json::array({window->lo, window->hi}) : json(nullptr);
}

inline void run_gauge_components(const CommandRequest& req, const Params& p, Report& rep) {
  const auto loaded = load(req, rep);
  const auto& x = loaded.model;
  const int r = p.rank();
  const int sign = p.orientation_sign();
  const auto bundle = make_bundle(x, r, t2_lift_from(p, x));
  const auto pi0 = pi0_description(bundle);
  json desc = {{"kind", std::string(to_string(pi0.kind))},
               {"parity_group", "Z_" + std::to_string(r) + "^" + std::to_string(x.b1())},
               {"parity_group_order", pi0.parity_group_order()}};
  desc["congruence"] = pi0.kind == Pi0Kind::congruence_subset ? json("deg = <t2_lift cup eta>[X] mod r") : json(nullptr);

  const auto limit = static_cast<std::uint64_t>(p.integer("limit", 4096));
  json classes = json::array();
  if (pi0.parity_group_order() <= limit) {
    std::vector<std::int64_t> eta(static_cast<std::size_t>(x.b1()), 0);
    for (std::uint64_t step = 0; step < pi0.parity_group_order(); ++step) {
      const auto e = CohClass::residue_class(1, eta, r);
      json rec = {{"eta", io::class_record(e)}};
      if (x.dimension() == 3)
        rec["deg_residue"] = {{"ring", io::ring_label(r)}, {"value", mod(sign * degree_residue(bundle, e), r)}};
      else
        rec["deg_residue"] = nullptr;
      classes.push_back(std::move(rec));
      for (int i = x.b1() - 1; i >= 0; --i) {
        if (++eta[static_cast<std::size_t>(i)] < r) break;
        eta[static_cast<std::size_t>(i)] = 0;
      }
    }
  }
  rep.payload = {{"bundle", io::bundle_record(bundle)}, {"pi0", desc}, {"classes", classes},
                 {"classes_truncated", pi0.parity_group_order() > limit}};

  if (p.has("eta")) {
    const auto g = gauge_from(p, x, r);
    json q = {{"class", io::gauge_record(g, sign)}, {"admissible", is_admissible(bundle, g)}};
    if (q["admissible"].get<bool>()) {
      q["report"] = io::gauge_report_record(classify_gauge_class(bundle, g));
      q["mapping_torus"] = io::bundle_record(mapping_torus_class(bundle, g));
    } else {
      q["report"] = nullptr;
      q["mapping_torus"] = nullptr;
    }
    rep.payload["query"] = std::move(q);
  }
}

inline void run_mapping_torus(const CommandRequest& req, const Params& p, Report& rep) {
  const auto loaded = load(req, rep);
  const auto& x = loaded.model;
  const int r = p.rank();
  const int sign = p.orientation_sign();
  const auto bundle = make_bundle(x, r, t2_lift_from(p, x));
  if (p.has("deg") && p.has("q4")) throw Error(ErrorCode::invalid_argument, "give either --deg or --q4, not both");

  if (p.has("q4")) {
    // Decode a bundle on S^1 x X with t2 = (t2(P), eta) and the given q4.
    const auto product = kunneth_model(x);
    const auto eta = coords(p.list("eta"), 1, x.b1(), "eta");
    const auto lift = product.join({*bundle.t2_lift, eta});
    BundleClass q{r, product, mod_r_reduce(lift, r), lift, p.integer("q4")};
    const auto g = gauge_class_from_torus(q, bundle);
    rep.payload = {{"direction", "decode"},
                   {"bundle", io::bundle_record(bundle)},
                   {"torus", io::bundle_record(q)},
                   {"class", io::gauge_record(g, sign)}};
    return;
  }
  const auto g = gauge_from(p, x, r);
  const auto q = mapping_torus_class(bundle, g);
  json torus = io::bundle_record(q);
  if (q.q4) torus["woodward_check"] = woodward_check(q);
  rep.payload = {{"direction", "encode"},
                 {"bundle", io::bundle_record(bundle)},
                 {"class", io::gauge_record(g, sign)},
                 {"torus", torus},
                 {"round_trip", gauge_class_from_torus(q, bundle) == g}};
}

inline void run_exists_degree(const CommandRequest& req, const Params& p, Report& rep) {
  const auto loaded = load(req, rep);
  const auto& x = loaded.model;
  const int r = p.rank();
  const int sign = p.orientation_sign();
  const auto c = coords(p.list("c"), 2, x.rank(2), "c");
  const auto sigma = coords(p.list("sigma"), 1, x.b1(), "sigma");
  const auto bundle = make_bundle(x, r, c);
  if (p.flag("degree-one")) {
    const auto res = exists_degree_one(x, c, sigma, r);
    rep.payload = {{"mode", "degree-one"},
                   {"d", res.d},
                   {"m", res.m},
                   {"n", res.n},
                   {"bezout_check", res.m * res.d + res.n * r == 1},
                   {"class", io::gauge_record(res.gauge, sign)},
                   {"admissible", is_admissible(bundle, res.gauge)}};
    return;
  }
  const auto g = exists_degree_d(x, c, sigma, r);
  rep.payload = {{"mode", "degree-d"},
                 {"d", *g.deg},
                 {"class", io::gauge_record(g, sign)},
                 {"admissible", is_admissible(bundle, g)}};
}

inline void run_g_sigma(const CommandRequest& req, const Params& p, Report& rep) {
  const auto loaded = load(req, rep);
  const auto& x = loaded.model;
  const int r = p.rank();
  const int sign = p.orientation_sign();
  const FibrationData fib{coords(p.list("sigma"), 1, x.b1(), "sigma"), p.list("gamma"), p.integer("d")};
  const auto bundle = fibration_bundle(x, fib, r);
  const auto g = gauge_from(p, x, r);
  const auto dec = g_sigma_decompose(g, fib, bundle);
  rep.payload = {{"bundle", io::bundle_record(bundle)},
                 {"class", io::gauge_record(g, sign)},
                 {"k", sign * dec.k},
                 {"u1", {{"class", io::gauge_record(dec.u1.gauge, sign)}, {"m", dec.u1.m}, {"n", dec.u1.n}, {"d", dec.u1.d}}}};
}

inline constexpr double kKillingTolerance = 1e-9;
inline constexpr double kCorootNormTolerance = 1e-12;
inline constexpr double kCorootEigenTolerance = 1e-9;

inline bool by_real(const lie::Complex& a, const lie::Complex& b) { return a.real() < b.real(); }

/// Eigenvalues of exp(xi), sorted by real part.
inline std::vector<lie::Complex> coroot_exp_eigenvalues(int r) {
  const Eigen::ComplexEigenSolver<lie::ComplexMatrix> solver(lie::unitary_exp(lie::coroot_element(r)));
  std::vector<lie::Complex> got(solver.eigenvalues().data(), solver.eigenvalues().data() + r);
  std::sort(got.begin(), got.end(), by_real);
  return got;
}

/// Target spectrum (-1, -1, 1, ..., 1).
inline std::vector<lie::Complex> expected_coroot_eigenvalues(int r) {
  std::vector<lie::Complex> want(static_cast<std::size_t>(r), 1.0);
  want[0] = want[1] = -1.0;
  return want;
}

inline json spectrum_record(const std::vector<lie::Complex>& ev) {
  json out = json::array();
  for (const auto& z : ev) out.push_back(json::array({z.real(), z.imag()}));
  return out;
}

inline json coroot_spectrum(int r) { return spectrum_record(coroot_exp_eigenvalues(r)); }
inline json expected_coroot_spectrum(int r) { return spectrum_record(expected_coroot_eigenvalues(r)); }

/// Max |lambda_k - expected_k| after sorting both spectra by real part.
inline double coroot_eigenvalue_error(int r) {
  const auto got = coroot_exp_eigenvalues(r);
  const auto want = expected_coroot_eigenvalues(r);
  double worst = 0.0;
  for (std::size_t k = 0; k < got.size(); ++k) worst = std::max(worst, std::abs(got[k] - want[k]));
  return worst;
}

inline void run_lie_check(const CommandRequest&, const Params& p, Report& rep) {
  const int r = p.rank();
  if (r > 64) throw Error(ErrorCode::invalid_argument, "lie-check: --r above 64 is not supported");
  const auto samples = p.integer("samples", 200);
  if (samples < 1) throw Error(ErrorCode::invalid_argument, "--samples must be positive");
  const auto seed = p.integer("seed", 20240601);
  std::mt19937_64 rng(static_cast<std::uint64_t>(seed));
  double worst = 0.0;
  for (std::int64_t i = 0; i < samples; ++i) {
    const auto mu = lie::random_element(r, rng);
    const auto nu = lie::random_element(r, rng);
    const double expected = 2.0 * r * (mu.entries() * nu.entries()).trace().real();
    worst = std::max(worst, std::abs(lie::killing_trace(mu, nu) - expected));
  }
  const auto xi = lie::coroot_element(r);
  const double norm = lie::inner_product(xi, xi, lie::InnerProductScale::coroot());
  const double eig = coroot_eigenvalue_error(r);
  const bool killing_ok = worst < kKillingTolerance;
  const bool norm_ok = std::abs(norm - 2.0) < kCorootNormTolerance;
  const bool eig_ok = eig < kCorootEigenTolerance;
  rep.payload = {
      {"r", r},
      {"samples", samples},
      {"seed", seed},
      {"killing", {{"identity", "Tr(ad mu ad nu) = 2r tr(mu nu)"}, {"max_error", worst}, {"tolerance", kKillingTolerance}, {"pass", killing_ok}}},
      {"coroot",
       {{"norm", norm},
        {"norm_expected", 2.0},
        {"norm_tolerance", kCorootNormTolerance},
        {"exp_eigenvalues", coroot_spectrum(r)},
        {"exp_eigenvalues_expected", expected_coroot_spectrum(r)},
        {"exp_eigenvalue_error", eig},
        {"exp_tolerance", kCorootEigenTolerance},
        {"pass", norm_ok && eig_ok}}},
      {"all_pass", killing_ok && norm_ok && eig_ok}};
  if (!(killing_ok && norm_ok && eig_ok)) {
    rep.ok = false;
    rep.error = ErrorCode::invariant_violation;
    rep.message = "lie-check: identity suite failed";
  }
}

inline lie::InnerProductScale scale_from(const Params& p, int r) {
  const auto k = p.text("kappa", "frobenius");
  if (k == "frobenius") return lie::InnerProductScale::frobenius();
  if (k == "killing") return lie::InnerProductScale::killing(r);
  if (k == "coroot") return lie::InnerProductScale::coroot();
  throw Error(ErrorCode::invalid_argument, "--kappa must be frobenius, killing or coroot");
}

inline void run_verify_lattice(const CommandRequest&, const Params& p, Report& rep) {
  const int r = p.has("r") ? p.rank() : 2;
  const auto n = p.integer("grid", 16);
  if (n < 4 || n > 256) throw Error(ErrorCode::invalid_argument, "--grid must lie in [4, 256]");
  const auto scale = scale_from(p, r);
  const int sign = p.orientation_sign();
  const auto config = p.text("config", "");
  json out = {{"config", config},
              {"r", r},
              {"grid", n},
              {"kappa", {{"flavor", std::string(lie::to_string(scale.flavor))}, {"value", scale.kappa}}},
              {"orientation", sign > 0 ? "+" : "-"}};
  double value = 0.0;
  if (config == "constant-curvature") {
    const auto n1 = p.integer("n1", 1);
    const auto n2 = p.integer("n2", 1);
    const lattice::TorusGrid grid(4, static_cast<int>(n));
    const auto f = lattice::constant_curvature_config(r, static_cast<int>(n1), static_cast<int>(n2), grid);
    value = sign * lattice::chern_weil_integral(f, scale);
    const auto oracle = static_cast<double>(sign * 4 * r * n1 * n2);
    out["n1"] = n1;
    out["n2"] = n2;
    out["oracle"] = oracle;
    out["oracle_error"] = std::abs(value - oracle);
  } else if (config == "winding") {
    if (r != 2) throw Error(ErrorCode::unsupported, "winding configurations are implemented for r = 2 only");
    const auto w = p.integer("w", 1);
    const auto steps = p.integer("s-steps", 32);
    if (steps < 2 || steps > 4096) throw Error(ErrorCode::invalid_argument, "--s-steps must lie in [2, 4096]");
    const auto profile_name = p.text("profile", "trigonometric");
    lattice::WindingMapOptions options;
    if (profile_name == "bump")
      options.profile = lattice::WindingProfile::bump;
    else if (profile_name != "trigonometric")
      throw Error(ErrorCode::invalid_argument, "--profile must be trigonometric or bump");
    const lattice::TorusGrid grid(3, static_cast<int>(n));
    const auto u = lattice::winding_map(static_cast<int>(w), grid, 2, options);
    const auto a0 = lattice::ConnectionField::zero(grid, 2);
    value = lattice::degree_integral(a0, u, scale, static_cast<int>(steps),
                                     sign > 0 ? lattice::Orientation::positive : lattice::Orientation::negative);
    out["w"] = w;
    out["profile"] = profile_name;
    out["s_steps"] = steps;
    out["maurer_cartan_winding"] = lattice::maurer_cartan_winding(u);
  } else {
    throw Error(ErrorCode::invalid_argument, "--config must be constant-curvature or winding");
  }
  const double nearest = std::round(value);
  out["value"] = value;
  out["nearest_integer"] = static_cast<std::int64_t>(nearest);
  out["residual"] = std::abs(value - nearest);
  rep.payload = std::move(out);
}

inline std::string canonical_request(const CommandRequest& req) {
  json j = {{"subcommand", req.subcommand}, {"parameters", req.parameters}};
  j["manifold"] = req.manifold_path ? json(*req.manifold_path) : json(nullptr);
  return j.dump();
}

}  // namespace detail

inline void check_request(const CommandRequest& req) {
  const auto& table = subcommand_flags();
  const auto it = table.find(req.subcommand);
  if (it == table.end()) throw Error(ErrorCode::unknown_subcommand, "unknown subcommand '" + req.subcommand + "'");
  const auto& spec = it->second;
  for (const auto& [flag, value] : req.parameters)
    if (flag == "manifold" || (spec.required.count(flag) == 0 && spec.optional.count(flag) == 0))
      throw Error(ErrorCode::invalid_argument, req.subcommand + ": unexpected flag --" + flag);
  for (const auto& flag : spec.required) {
    const bool present = flag == "manifold" ? req.manifold_path.has_value() : req.parameters.count(flag) != 0;
    if (!present) throw Error(ErrorCode::invalid_argument, req.subcommand + ": missing required flag --" + flag);
  }
}

/// Runs one subcommand.  Never throws for library errors: they are reported
/// with their code.
inline Report dispatch(const CommandRequest& req) {
  Report rep;
  rep.subcommand = req.subcommand;
  rep.provenance = {{"version", std::string(kVersion)},
                    {"request_digest", "sha256:" + io::sha256_hex(detail::canonical_request(req))}};
  const auto start = std::chrono::steady_clock::now();
  try {
    check_request(req);
    const detail::Params p(req);
    const auto& s = req.subcommand;
    if (s == "classify") detail::run_classify(req, p, rep);
    else if (s == "gauge-components") detail::run_gauge_components(req, p, rep);
    else if (s == "mapping-torus") detail::run_mapping_torus(req, p, rep);
    else if (s == "exists-degree") detail::run_exists_degree(req, p, rep);
    else if (s == "g-sigma") detail::run_g_sigma(req, p, rep);
    else if (s == "lie-check") detail::run_lie_check(req, p, rep);
    else if (s == "verify-lattice") detail::run_verify_lattice(req, p, rep);
  } catch (const Error& e) {
    rep.ok = false;
    rep.error = e.code();
    rep.message = e.what();
    rep.payload = json::object();
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  rep.timing = {{"runtime_seconds", elapsed.count()}};
  return rep;
}

/// JSON without the timing block, for determinism comparisons.
inline std::string deterministic_text(const Report& rep) {
  auto doc = to_json(rep);
  doc.erase("timing");
  return doc.dump();
}

/// Aligned "key  value" lines for --pretty.
inline std::string pretty_text(const Report& rep) {
  std::vector<std::pair<std::string, std::string>> rows;
  rows.emplace_back("status", rep.ok ? "ok" : "error");
  rows.emplace_back("subcommand", rep.subcommand);
  if (rep.error) rows.emplace_back("error", std::string(to_string(*rep.error)) + ": " + rep.message);
  for (const auto& item : rep.payload.items()) rows.emplace_back(item.key(), item.value().dump());
  rows.emplace_back("version", rep.provenance.value("version", ""));
  if (rep.timing.contains("runtime_seconds")) {
    std::ostringstream t;
    t << rep.timing["runtime_seconds"].get<double>() << " s";
    rows.emplace_back("runtime", t.str());
  }
  std::size_t width = 0;
  for (const auto& row : rows) width = std::max(width, row.first.size());
  std::string out;
  for (const auto& [key, value] : rows) out += key + std::string(width - key.size() + 2, ' ') + value + "\n";
  return out;
}

inline std::string summary_line(const Report& rep) {
  if (!rep.ok) return "gauge_atlas " + rep.subcommand + ": " + std::string(rep.error ? to_string(*rep.error) : "error") + ": " + rep.message;
  std::string s = "gauge_atlas " + rep.subcommand + ": ok";
  if (rep.payload.contains("count")) s += ", " + rep.payload["count"].dump() + " bundle classes";
  if (rep.payload.contains("value")) s += ", value " + rep.payload["value"].dump();
  if (rep.payload.contains("k")) s += ", k = " + rep.payload["k"].dump();
  if (rep.payload.contains("all_pass")) s += rep.payload["all_pass"].get<bool>() ? ", all checks pass" : ", checks failed";
  return s;
}

}  // namespace gauge_atlas::cli

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rootpoly/errors.hpp"
#include "rootpoly/heckman_opdam.hpp"
#include "rootpoly/hessenberg.hpp"
#include "rootpoly/macdonald.hpp"
#include "rootpoly/oracles.hpp"
#include "rootpoly/rootsystem.hpp"

using nlohmann::json;
using namespace rp;

namespace {

const char* kEngineVersion = "rootpoly 1.0";

struct JobSpec {
  std::string family = "A";
  int rank = 2;
  std::string weight;
  std::string construction = "ho";  // ho | mac | mac-general | ho-via-mac
  std::map<std::string, std::string> params;
  std::string minuscule = "default";  // default | a:<r> | vector | spin- | spin+ | sum
  std::string format = "plain";       // json | latex | plain
  bool prune_cn = false;
  bool full_gcd = false;
  bool check = false;
  std::string cache_dir;
};

std::string canonical_job_string(const JobSpec& j) {
  std::ostringstream os;
  os << j.family << '|' << j.rank << '|' << j.weight << '|' << j.construction << '|'
     << j.minuscule << '|' << (j.prune_cn ? 1 : 0) << (j.full_gcd ? 1 : 0);
  for (const auto& [k, v] : j.params) os << '|' << k << '=' << v;
  return os.str();
}

std::string fingerprint(const JobSpec& j) {
  // FNV-1a, 64 bit
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : canonical_job_string(j)) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

RootSystemSpec make_spec(const JobSpec& j) {
  return RootSystemSpec{family_from_string(j.family), j.rank};
}

MinusculeChoice make_choice(const JobSpec& j) {
  if (j.minuscule == "default") return MinusculeChoice::family_default();
  if (j.minuscule == "vector") return MinusculeChoice{MinusculeChoice::DVector};
  if (j.minuscule == "spin-") return MinusculeChoice{MinusculeChoice::DSpinMinus};
  if (j.minuscule == "spin+") return MinusculeChoice{MinusculeChoice::DSpinPlus};
  if (j.minuscule == "sum") return MinusculeChoice{MinusculeChoice::DSum};
  if (j.minuscule.rfind("a:", 0) == 0)
    return MinusculeChoice::a_fundamental(std::stoi(j.minuscule.substr(2)));
  throw Error("unknown minuscule choice '" + j.minuscule + "'");
}

Scalar bound_param(const JobSpec& j, const std::string& name, const char* def_symbol) {
  auto it = j.params.find(name);
  if (it == j.params.end()) return Scalar::variable(def_symbol);
  return parse_scalar(it->second);
}

HOParams make_ho_params(const JobSpec& j) {
  HOParams p;
  p.g = bound_param(j, "g", "g");
  p.g_s = bound_param(j, "g_s", "g_s");
  p.g_l = bound_param(j, "g_l", "g_l");
  return p;
}

MacParams make_mac_params(const JobSpec& j) {
  MacParams p;
  p.q = bound_param(j, "q", "q");
  p.t = bound_param(j, "t", "t");
  return p;
}

TriangularData job_triangular_data(const JobSpec& j, const RootSystemSpec& rs,
                                   const Weight& lam) {
  if (j.construction == "ho") return ho_triangular_data(rs, make_ho_params(j), lam, j.prune_cn);
  if (j.construction == "mac")
    return mac_triangular_data(rs, make_choice(j), make_mac_params(j), lam);
  if (j.construction == "mac-general")
    return mac_general_t_triangular_data(rs, GeneralTParams{}, lam);
  throw Error("construction '" + j.construction + "' has no assembled matrix");
}

MonomialExpansion run_engine(const JobSpec& j, const RootSystemSpec& rs, const Weight& lam) {
  if (j.construction == "ho") return compute_ho(rs, make_ho_params(j), lam, j.prune_cn);
  if (j.construction == "mac")
    return compute_macdonald(rs, make_choice(j), make_mac_params(j), lam);
  if (j.construction == "mac-general")
    return compute_macdonald_general_t(rs, GeneralTParams{}, lam);
  if (j.construction == "ho-via-mac")
    return ho_via_macdonald(rs, bound_param(j, "g", "g"), lam);
  throw Error("unknown construction '" + j.construction + "'");
}

bool integer_params_only(const JobSpec& j, const RootSystemSpec& rs, long& g, long& g_s,
                         long& g_l) {
  auto get = [&](const char* name, long& out) {
    auto it = j.params.find(name);
    if (it == j.params.end()) return false;
    Scalar s = parse_scalar(it->second);
    if (!s.is_rational()) return false;
    Rat r = s.rational();
    if (r.get_den() != 1 || r < 0) return false;
    out = r.get_num().get_si();
    return true;
  };
  // every multiplicity the family actually uses must be bound; the rest stay 1
  bool need_gs = rs.family == Family::B || rs.family == Family::BC;
  bool need_gl = rs.family == Family::C || rs.family == Family::BC;
  return get("g", g) && (!need_gs || get("g_s", g_s)) && (!need_gl || get("g_l", g_l));
}

json run_checks(const JobSpec& j, const RootSystemSpec& rs, const Weight& lam,
                const MonomialExpansion& p) {
  json checks;
  LatticeElement pl = expansion_lattice(rs, p);
  // eigenfunction identity against the direct operator
  bool eig = false;
  if (j.construction == "ho" || j.construction == "ho-via-mac") {
    HOParams hp = j.construction == "ho" ? make_ho_params(j) : HOParams{};
    if (j.construction == "ho-via-mac") {
      Scalar g = bound_param(j, "g", "g");
      hp.g = hp.g_s = hp.g_l = g;
    }
    LatticeElement img = apply_hypergeometric_operator(rs, hp, pl);
    eig = lattice_sub(img, lattice_scale(pl, ho_eigenvalue(rs, hp, lam))).is_zero();
  } else if (j.construction == "mac") {
    MinusculeChoice ch = make_choice(j);
    if (rs.family == Family::D && ch.kind != MinusculeChoice::DVector &&
        ch.kind != MinusculeChoice::AFundamental) {
      // the combined D eigenvalue has no single operator; check with the
      // vector-representation operator instead
      MinusculeChoice vec{MinusculeChoice::DVector};
      LatticeElement img = apply_macdonald_operator(rs, vec, make_mac_params(j), pl);
      eig = lattice_sub(img, lattice_scale(pl, mac_eigenvalue(rs, vec, make_mac_params(j), lam)))
                .is_zero();
    } else {
      LatticeElement img = apply_macdonald_operator(rs, ch, make_mac_params(j), pl);
      eig = lattice_sub(img, lattice_scale(pl, mac_eigenvalue(rs, ch, make_mac_params(j), lam)))
                .is_zero();
    }
  } else if (j.construction == "mac-general") {
    TriangularData td = mac_general_t_triangular_data(rs, GeneralTParams{}, lam);
    LatticeElement img = apply_macdonald_operator_general(rs, GeneralTParams{}, pl);
    eig = lattice_sub(img, lattice_scale(pl, td.eps.back())).is_zero();
  }
  checks["eigenfunction"] = eig ? "pass" : "fail";

  long g = 1, g_s = 1, g_l = 1;
  if ((j.construction == "ho" || j.construction == "ho-via-mac") &&
      integer_params_only(j, rs, g, g_s, g_l)) {
    IntegerMultiplicities mult{g, g_s, g_l};
    LatticeElement delta = weight_function_expand(rs, WeightFunctionKind::HO, mult);
    bool ortho = true;
    for (const Weight& mu : dominant_interval(rs, lam)) {
      if (mu == lam) continue;
      if (!constant_term_inner_product(pl, monomial_lattice(rs, mu), delta).is_zero())
        ortho = false;
    }
    checks["orthogonality"] = ortho ? "pass" : "fail";
  } else {
    checks["orthogonality"] = "skipped";
  }
  return checks;
}

json expansion_to_json(const JobSpec& j, const RootSystemSpec& rs, const Weight& lam,
                       const MonomialExpansion& p) {
  json out;
  out["root_system"] = {{"family", family_to_string(rs.family)}, {"rank", rs.rank}};
  out["lambda"] = lam;
  out["doubled"] = true;
  json coeffs = json::array();
  for (const auto& [mu, c] : p.coeffs) {
    Scalar v = j.full_gcd ? c.reduced_full() : c;
    coeffs.push_back({{"mu", mu}, {"value", v.to_string()}});
  }
  out["coefficients"] = coeffs;
  return out;
}

std::string subscript(const Weight& w) {
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += coord_to_string(w[i]);
  }
  return s;
}

std::string latex_mul(std::string s) {
  // explicit '*' from the exact printer reads better as juxtaposition in TeX
  std::string out;
  for (char c : s) {
    if (c == '*') out += "\\,";
    else out += c;
  }
  return out;
}

std::string latex_scalar(const Scalar& s) {
  if (s.is_rational()) return s.to_string();
  std::string num = s.ratfunc().num.to_string();
  std::string den = s.ratfunc().den.to_string();
  if (den == "1") return latex_mul(num);
  return "\\frac{" + latex_mul(num) + "}{" + latex_mul(den) + "}";
}

std::string render_latex(const JobSpec& j, const Weight& lam, const MonomialExpansion& p) {
  std::string s = "p_{" + subscript(lam) + "} = ";
  bool first = true;
  // leading weight first, then descending interval order via reverse map walk
  std::vector<std::pair<Weight, Scalar>> terms(p.coeffs.rbegin(), p.coeffs.rend());
  for (const auto& [mu, c] : terms) {
    Scalar v = j.full_gcd ? c.reduced_full() : c;
    if (!first) s += " + ";
    first = false;
    if (!v.is_one()) s += "\\left(" + latex_scalar(v) + "\\right) ";
    s += "m_{" + subscript(mu) + "}";
  }
  return s;
}

std::string render_plain(const JobSpec& j, const Weight& lam, const MonomialExpansion& p) {
  std::string s = "p[" + weight_to_string(lam) + "] =";
  std::vector<std::pair<Weight, Scalar>> terms(p.coeffs.rbegin(), p.coeffs.rend());
  for (const auto& [mu, c] : terms) {
    Scalar v = j.full_gcd ? c.reduced_full() : c;
    s += "\n  (" + v.to_string() + ") * m[" + weight_to_string(mu) + "]";
  }
  return s;
}

int cmd_compute(const JobSpec& j) {
  RootSystemSpec rs = make_spec(j);
  Weight lam = weight_from_string(j.weight);
  if (static_cast<int>(lam.size()) != rs.rank) throw ArityMismatch();
  if (!is_dominant(rs, lam)) throw Error("weight is not dominant");

  std::string fp = fingerprint(j);
  std::string cache_path;
  if (!j.cache_dir.empty()) cache_path = j.cache_dir + "/" + fp + ".json";

  json record;
  bool from_cache = false;
  if (!cache_path.empty()) {
    std::ifstream in(cache_path);
    if (in) {
      try {
        in >> record;
        if (record.at("fingerprint") == fp) from_cache = true;
      } catch (...) {
        fprintf(stderr, "warning: ignoring corrupt cache entry %s\n", cache_path.c_str());
        record = json();
      }
    }
  }

  auto t0 = std::chrono::steady_clock::now();
  MonomialExpansion p;
  if (!from_cache) {
    p = run_engine(j, rs, lam);
    record = expansion_to_json(j, rs, lam, p);
    record["fingerprint"] = fp;
    record["provenance"] = {{"engine", kEngineVersion}, {"path", j.construction}};
  } else {
    record["provenance"]["path"] = "cache";
    // rebuild the expansion for non-JSON formats and checks
    p.leading = lam;
    for (const auto& item : record["coefficients"])
      p.coeffs[item["mu"].get<Weight>()] = parse_scalar(item["value"].get<std::string>());
  }
  auto t1 = std::chrono::steady_clock::now();
  record["timing_ms"] = std::chrono::duration<double, std::milli>(t1 - t0).count();

  int rc = 0;
  if (j.check) {
    json checks = run_checks(j, rs, lam, p);
    record["checks"] = checks;
    for (const auto& [k, v] : checks.items())
      if (v == "fail") rc = 1;
  }

  if (!cache_path.empty() && !from_cache) {
    std::ofstream out(cache_path);
    if (out)
      out << record.dump(2) << "\n";
    else
      fprintf(stderr, "warning: cannot write cache entry %s\n", cache_path.c_str());
  }

  if (j.format == "json")
    printf("%s\n", record.dump(2).c_str());
  else if (j.format == "latex")
    printf("%s\n", render_latex(j, lam, p).c_str());
  else
    printf("%s\n", render_plain(j, lam, p).c_str());
  return rc;
}

int cmd_inspect(const std::string& kind, const JobSpec& j) {
  RootSystemSpec rs = make_spec(j);
  Weight lam = weight_from_string(j.weight);
  if (static_cast<int>(lam.size()) != rs.rank) throw ArityMismatch();

  if (kind == "interval") {
    for (const Weight& mu : dominant_interval(rs, lam)) printf("%s\n", weight_to_string(mu).c_str());
    return 0;
  }
  if (kind == "orbit") {
    for (const Weight& w : weyl_orbit(rs, lam)) printf("%s\n", weight_to_string(w).c_str());
    return 0;
  }
  if (kind == "stabilizer") {
    printf("%s\n", rat_to_string(stabilizer_order(rs, lam)).c_str());
    return 0;
  }
  if (kind == "matrix") {
    TriangularData td = job_triangular_data(j, rs, lam);
    const int n = static_cast<int>(td.interval.size());
    printf("interval (%d rows):\n", n);
    for (int k = 0; k < n; ++k) printf("  [%d] %s\n", k, weight_to_string(td.interval[k]).c_str());
    printf("eigenvalues:\n");
    for (int k = 0; k < n; ++k) printf("  eps[%d] = %s\n", k, td.eps[k].to_string().c_str());
    printf("matrix elements (row > column):\n");
    for (const auto& [jk, v] : td.d)
      printf("  d[%d,%d] = %s\n", jk.first, jk.second, v.to_string().c_str());
    printf("normalization factors:\n");
    for (const Scalar& f : normalization_factors(td)) printf("  %s\n", f.to_string().c_str());
    return 0;
  }
  throw Error("unknown inspect kind '" + kind + "'");
}

const char* error_type(const std::exception& e) {
  if (dynamic_cast<const DivisionByZero*>(&e)) return "DivisionByZero";
  if (dynamic_cast<const ParameterDegeneracy*>(&e)) return "ParameterDegeneracy";
  if (dynamic_cast<const RegularityViolation*>(&e)) return "RegularityViolation";
  if (dynamic_cast<const ArityMismatch*>(&e)) return "ArityMismatch";
  if (dynamic_cast<const RankGuardExceeded*>(&e)) return "RankGuardExceeded";
  if (dynamic_cast<const NotInvariant*>(&e)) return "NotInvariant";
  if (dynamic_cast<const NonIntegerParams*>(&e)) return "NonIntegerParams";
  if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
  return "Error";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact monomial expansions of Heckman-Opdam and Macdonald polynomials"};
  app.require_subcommand(1);

  JobSpec job;
  std::vector<std::string> raw_params;
  std::string inspect_kind;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--family", job.family, "root system family: A, B, C, D, BC");
    cmd->add_option("--rank", job.rank, "number of coordinates N");
    cmd->add_option("--weight", job.weight, "dominant weight, e.g. 2,1,0 or 3/2,1/2,1/2")
        ->required();
    cmd->add_option("--construction", job.construction, "ho | mac | mac-general | ho-via-mac");
    cmd->add_option("--param", raw_params, "parameter binding name=value (g, g_s, g_l, q, t)");
    cmd->add_option("--minuscule", job.minuscule, "default | a:<r> | vector | spin- | spin+ | sum");
    cmd->add_flag("--prune-cn", job.prune_cn, "drop rows incomparable in the C-type order");
    cmd->add_flag("--full-gcd", job.full_gcd, "apply full polynomial GCD reduction to output");
  };

  CLI::App* compute = app.add_subcommand("compute", "compute a polynomial expansion");
  add_common(compute);
  compute->add_option("--format", job.format, "json | latex | plain");
  compute->add_flag("--check", job.check, "run eigenfunction/orthogonality oracles");
  compute->add_option("--cache-dir", job.cache_dir, "directory for result caching");

  CLI::App* inspect = app.add_subcommand("inspect", "inspect intermediate data");
  inspect->add_option("kind", inspect_kind, "interval | orbit | stabilizer | matrix")->required();
  add_common(inspect);

  CLI11_PARSE(app, argc, argv);

  for (const std::string& s : raw_params) {
    auto eq = s.find('=');
    if (eq == std::string::npos) {
      fprintf(stderr, "bad --param '%s' (want name=value)\n", s.c_str());
      return 2;
    }
    job.params[s.substr(0, eq)] = s.substr(eq + 1);
  }
  if (job.cache_dir.empty()) {
    const char* env = getenv("ROOTPOLY_CACHE_DIR");
    if (env) job.cache_dir = env;
  }

  try {
    if (compute->parsed()) return cmd_compute(job);
    return cmd_inspect(inspect_kind, job);
  } catch (const std::exception& e) {
    json err = {{"error", {{"type", error_type(e)}, {"message", e.what()}}}};
    printf("%s\n", err.dump().c_str());
    return 3;
  }
}

#include "rootpoly/heckman_opdam.hpp"

#include <fstream>
#include <map>
#include <set>

#include <json.hpp>

#include "rootpoly/errors.hpp"

namespace rp {

namespace {

Rat half(long long doubled) { return Rat(static_cast<long>(doubled)) / 2; }

// Building block: 2g(a-b) when a-c = d-b > 0, arguments in doubled units.
Scalar dA_block(const Scalar& g, long long a, long long b, long long c, long long d) {
  if (a - c != d - b || a - c <= 0) return Scalar(0);
  return g * Scalar(Rat(static_cast<long>(a - b)));
}

// Pair-multiplicity weight: eta(n1)*eta(n2), or C(eta,2) on equal magnitudes.
Rat pair_count(const Weight& nu, long long n1, long long n2) {
  if (std::abs(n1) != std::abs(n2)) return Rat(eta(nu, n1) * eta(nu, n2));
  long e = eta(nu, n1);
  return Rat(e * (e - 1)) / 2;
}

int zero_parts(const Weight& w) { return eta(w, 0); }

// Simply-laced two-row/one-row exchange element (the D-family table; also
// the building block for B and BC).
Scalar d_elem_D(const Scalar& g, const Weight& mu, const Weight& nu) {
  auto [from, to] = skew_parts(mu, nu);
  if (from.size() == 2 && to.size() == 2) {
    long long m1 = from[0], m2 = from[1], n1 = to[0], n2 = to[1];
    Scalar sum(0);
    if (zero_parts(mu) != 0 && m2 != 0) {
      sum = dA_block(g, m1, m2, n1, n2) + dA_block(g, m1, -m2, n1, n2) +
            dA_block(g, m1, m2, n1, -n2) + dA_block(g, m1, -m2, n1, -n2);
    } else {
      sum = dA_block(g, m1, m2, n1, n2) + dA_block(g, m1, -m2, n1, -n2);
    }
    return sum * Scalar(pair_count(nu, n1, n2));
  }
  if (from.size() == 1 && to.size() == 1) {
    long long m = from[0], n = to[0];
    if ((m + n) % 2 != 0) return Scalar(0);
    long long dp = (m + n) / 2, dm = (m - n) / 2;
    Scalar sum = dA_block(g, m, -dp, dp, -n) * Scalar(pair_count(nu, dp, n));
    if (zero_parts(mu) != 0)
      sum += dA_block(g, m, -dm, dm, n) * Scalar(pair_count(nu, dm, n));
    return sum;
  }
  return Scalar(0);
}

// Short-root correction: 2 g_s m eta_nu(n) on single-part exchanges.
Scalar d_elem_short(const Scalar& gs, const Weight& mu, const Weight& nu) {
  auto [from, to] = skew_parts(mu, nu);
  if (from.size() != 1 || to.size() != 1 || from[0] - to[0] <= 0) return Scalar(0);
  return gs * Scalar(Rat(static_cast<long>(from[0]))) * Scalar(Rat(eta(nu, to[0])));
}

// Doubled-root correction: 4 g_l m eta_nu(n) on single-part exchanges of
// positive even step.
Scalar d_elem_long(const Scalar& gl, const Weight& mu, const Weight& nu) {
  auto [from, to] = skew_parts(mu, nu);
  if (from.size() != 1 || to.size() != 1) return Scalar(0);
  long long step = from[0] - to[0];
  if (step <= 0 || step % 4 != 0) return Scalar(0);
  return gl * Scalar(Rat(static_cast<long>(2 * from[0]))) * Scalar(Rat(eta(nu, to[0])));
}

Scalar d_elem_A(const Scalar& g, const Weight& mu, const Weight& nu) {
  auto [from, to] = skew_parts(mu, nu);
  if (from.size() != 2 || to.size() != 2) return Scalar(0);
  long long m1 = from[0], m2 = from[1], n1 = to[0], n2 = to[1];
  if (m1 - n1 != n2 - m2 || m1 - n1 <= 0) return Scalar(0);
  return g * Scalar(Rat(static_cast<long>(m1 - m2))) * Scalar(pair_count(nu, n1, n2));
}

// d with the B-family mirror term and the length corrections as the family
// requires; gl is ignored unless doubled roots are present.
Scalar d_elem_full(Family fam, const HOParams& p, const Weight& mu, const Weight& nu) {
  switch (fam) {
    case Family::A:
      return d_elem_A(p.g, mu, nu);
    case Family::D: {
      Scalar v = d_elem_D(p.g, mu, nu);
      return v;
    }
    case Family::B: {
      Scalar v = d_elem_D(p.g, mu, nu);
      if (mu != bar_last(mu)) v += d_elem_D(p.g, bar_last(mu), nu);
      return v + d_elem_short(p.g_s, mu, nu);
    }
    case Family::C: {
      HOParams q = p;
      q.g_s = Scalar(0);
      return d_elem_full(Family::BC, q, mu, nu);
    }
    case Family::BC: {
      Scalar v = d_elem_D(p.g, mu, nu);
      if (mu != bar_last(mu)) v += d_elem_D(p.g, bar_last(mu), nu);
      return v + d_elem_short(p.g_s, mu, nu) + d_elem_long(p.g_l, mu, nu);
    }
  }
  return Scalar(0);
}

}  // namespace

Scalar ho_param_for_root(const RootSystemSpec& rs, const HOParams& p, const Root& a) {
  switch (root_norm2(a)) {
    case 1: return p.g_s;
    case 2: return p.g;
    case 4: return rs.family == Family::C || rs.family == Family::BC ? p.g_l : p.g;
    default: return p.g;
  }
}

Scalar ho_eigenvalue(const RootSystemSpec& rs, const HOParams& p, const Weight& mu) {
  const int n = rs.rank;
  Scalar total(0);
  for (int j = 1; j <= n; ++j) {
    Scalar mj(half(mu[j - 1]));
    Scalar lin(0);
    switch (rs.family) {
      case Family::A: lin = p.g * Scalar(Rat(n + 1 - 2 * j)); break;
      case Family::B: lin = p.g * Scalar(Rat(2 * (n - j))) + p.g_s; break;
      case Family::C: lin = p.g * Scalar(Rat(2 * (n - j))) + p.g_l * Scalar(2); break;
      case Family::D: lin = p.g * Scalar(Rat(2 * (n - j))); break;
      case Family::BC:
        lin = p.g * Scalar(Rat(2 * (n - j))) + p.g_s + p.g_l * Scalar(2);
        break;
    }
    total += mj * (mj + lin);
  }
  return total;
}

Scalar ho_matrix_element(const RootSystemSpec& rs, const HOParams& p, const Weight& mu,
                         const Weight& nu) {
  if (static_cast<int>(mu.size()) != rs.rank || static_cast<int>(nu.size()) != rs.rank)
    throw ArityMismatch();
  if (mu == nu || !dominance_leq(rs, nu, mu)) return Scalar(0);
  return d_elem_full(rs.family, p, mu, nu);
}

GenericRootData generic_root_data(const RootSystemSpec& rs, const HOParams& p) {
  GenericRootData rd;
  std::set<int> norms;
  for (const Root& a : positive_roots(rs)) {
    std::vector<Rat> v;
    for (int c : a) v.push_back(Rat(c));
    rd.positive_roots.push_back(std::move(v));
    norms.insert(root_norm2(a));
  }
  for (int n2 : norms) {
    Root probe(rs.rank, 0);
    // reconstruct a root of this length to pick the parameter slot
    for (const Root& a : positive_roots(rs))
      if (root_norm2(a) == n2) probe = a;
    rd.g_by_norm2[Rat(n2)] = ho_param_for_root(rs, p, probe);
  }
  return rd;
}

GenericRootData load_root_data_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open root data file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ParseError(std::string("root data JSON: ") + e.what());
  }
  GenericRootData rd;
  auto to_rat = [](const nlohmann::json& v) -> Rat {
    if (v.is_number_integer()) return Rat(v.get<long>());
    if (v.is_string()) return rat_from_string(v.get<std::string>());
    throw ParseError("root coordinate must be an integer or a 'p/q' string");
  };
  if (!j.contains("positive_roots") || !j.contains("g"))
    throw ParseError("root data JSON needs 'positive_roots' and 'g'");
  for (const auto& row : j["positive_roots"]) {
    std::vector<Rat> v;
    for (const auto& x : row) v.push_back(to_rat(x));
    rd.positive_roots.push_back(std::move(v));
  }
  for (auto it = j["g"].begin(); it != j["g"].end(); ++it)
    rd.g_by_norm2[rat_from_string(it.key())] =
        Scalar::variable(it.value().get<std::string>());
  return rd;
}

namespace {

using QVec = std::vector<Rat>;

Rat qdot(const QVec& a, const QVec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

QVec reflect(const QVec& v, const QVec& a, const Rat& norm2) {
  Rat c = 2 * qdot(v, a) / norm2;
  QVec out = v;
  for (size_t i = 0; i < v.size(); ++i) out[i] -= c * a[i];
  return out;
}

std::set<QVec> rd_orbit(const GenericRootData& rd, const QVec& start) {
  std::set<QVec> seen{start};
  std::vector<QVec> queue{start};
  while (!queue.empty()) {
    QVec v = queue.back();
    queue.pop_back();
    for (const auto& a : rd.positive_roots) {
      QVec w = reflect(v, a, qdot(a, a));
      if (seen.insert(w).second) queue.push_back(w);
    }
  }
  return seen;
}

QVec to_qvec(const Weight& w) {
  QVec v;
  for (long long x : w) v.push_back(half(x));
  return v;
}

}  // namespace

Scalar ho_matrix_element_generic(const GenericRootData& rd, const Weight& mu,
                                 const Weight& nu) {
  QVec m = to_qvec(mu);
  auto target = rd_orbit(rd, to_qvec(nu));
  if (target.count(m)) return Scalar(0);  // mu in W(nu): not strictly below
  Scalar sum(0);
  for (const auto& a : rd.positive_roots) {
    Rat norm2 = qdot(a, a);
    Rat pairing = 2 * qdot(m, a) / norm2;  // <mu, alpha_check>
    if (pairing.get_den() != 1) continue;
    long pmax = mpz_get_si(pairing.get_num().get_mpz_t());
    for (long l = 1; 2 * l <= pmax; ++l) {
      QVec shifted = m;
      for (size_t i = 0; i < m.size(); ++i) shifted[i] -= Rat(l) * a[i];
      if (!target.count(shifted)) continue;
      Rat mult = (2 * l == pmax) ? 1 : 2;
      auto it = rd.g_by_norm2.find(norm2);
      Scalar g = it == rd.g_by_norm2.end() ? Scalar(0) : it->second;
      sum += g * Scalar(qdot(m, a) * mult);
      break;  // the string step l is unique per root
    }
  }
  if (sum.is_zero()) return sum;
  Rat ratio = Rat(static_cast<long>(rd_orbit(rd, to_qvec(mu)).size())) /
              Rat(static_cast<long>(target.size()));
  return sum * Scalar(ratio);
}

TriangularData ho_triangular_data(const RootSystemSpec& rs, const HOParams& p,
                                  const Weight& lam, bool prune_cn) {
  if (prune_cn && !(rs.family == Family::BC && p.g_s.is_zero()) &&
      rs.family != Family::C)
    throw Error("row pruning applies only to the doubled family with vanishing "
                "short-root parameter");
  TriangularData td;
  td.interval = dominant_interval(rs, lam);
  if (prune_cn && rs.family == Family::BC) {
    RootSystemSpec cs{Family::C, rs.rank};
    std::vector<Weight> kept;
    for (const auto& mu : td.interval)
      if (dominance_leq(cs, mu, lam)) kept.push_back(mu);
    td.interval = std::move(kept);
  }
  const int n = static_cast<int>(td.interval.size());
  td.eps.resize(n);
  for (int j = 0; j < n; ++j) td.eps[j] = ho_eigenvalue(rs, p, td.interval[j]);
  for (int j = 1; j < n; ++j)
    for (int k = 0; k < j; ++k) {
      Scalar v = ho_matrix_element(rs, p, td.interval[j], td.interval[k]);
      if (!v.is_zero()) td.d[{j, k}] = v;
    }
  return td;
}

MonomialExpansion compute_ho(const RootSystemSpec& rs, const HOParams& p,
                             const Weight& lam, bool prune_cn) {
  return solve_recurrence(ho_triangular_data(rs, p, lam, prune_cn));
}

}  // namespace rp

#include "rootpoly/macdonald.hpp"

#include <functional>

#include "rootpoly/errors.hpp"

namespace rp {

namespace {

// q raised to a half-unit power (2 half-units = first power).
Scalar qpow(const Scalar& base, long long half_units) {
  if (half_units % 2 == 0) return scalar_pow(base, half_units / 2);
  return scalar_pow(base.sqrt(), half_units);
}

long long dotw(const Weight& a, const Weight& b) {
  long long s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

MinusculeChoice resolve(const RootSystemSpec& rs, MinusculeChoice c) {
  if (c.kind != MinusculeChoice::FamilyDefault) return c;
  switch (rs.family) {
    case Family::A: return MinusculeChoice::a_fundamental(1);
    case Family::D: return {MinusculeChoice::DSum, 1};
    default: return c;  // B, C have a unique choice
  }
}

Scalar eps_d_product(const MacParams& p, const Weight& mu, int pm) {
  const int n = static_cast<int>(mu.size());
  long long total = 0;
  for (long long x : mu) total += x;
  if (total % 2 != 0)
    throw Error("eigenvalue needs quarter powers of q; use the vector choice");
  Scalar prod(1);
  for (int j = 1; j <= n; ++j)
    prod *= scalar_pow(p.t, n - j) * qpow(p.q, mu[j - 1]) + Scalar(pm);
  return qpow(p.q, -total / 2) * prod;
}

}  // namespace

Weight mac_rho(const RootSystemSpec& rs) {
  if (rs.family == Family::A) {
    Weight r(rs.rank);
    for (int j = 0; j < rs.rank; ++j) r[j] = 2 * (rs.rank - 1 - j);
    return r;
  }
  return rho(rs);
}

Scalar mac_eigenvalue(const RootSystemSpec& rs, const MinusculeChoice& choice_in,
                      const MacParams& p, const Weight& mu) {
  const int n = rs.rank;
  if (static_cast<int>(mu.size()) != n) throw ArityMismatch();
  MinusculeChoice choice = resolve(rs, choice_in);
  switch (rs.family) {
    case Family::A: {
      int r = choice.r;
      if (r < 1 || r >= n) throw Error("fundamental index out of range");
      // elementary symmetric polynomial e_r of t^{N-j} q^{mu_j}
      std::vector<Scalar> e(r + 1, Scalar(0));
      e[0] = Scalar(1);
      for (int j = 1; j <= n; ++j) {
        Scalar x = scalar_pow(p.t, n - j) * qpow(p.q, mu[j - 1]);
        for (int k = std::min(r, j); k >= 1; --k) e[k] += e[k - 1] * x;
      }
      return e[r];
    }
    case Family::B: {
      Scalar sum(0);
      for (int j = 1; j <= n; ++j)
        sum += scalar_pow(p.t, 2 * n - j) * qpow(p.q, mu[j - 1]) +
               scalar_pow(p.t, j - 1) * qpow(p.q, -mu[j - 1]);
      return sum;
    }
    case Family::C: {
      Scalar prod(1);
      for (int j = 1; j <= n; ++j) {
        if (mu[j - 1] % 2 != 0)
          throw Error("eigenvalue needs quarter powers of q");
        prod *= scalar_pow(p.t, n + 1 - j) * qpow(p.q, mu[j - 1] / 2) +
                qpow(p.q, -mu[j - 1] / 2);
      }
      return prod;
    }
    case Family::D: {
      switch (choice.kind) {
        case MinusculeChoice::DVector: {
          Scalar sum(0);
          for (int j = 1; j <= n; ++j)
            sum += scalar_pow(p.t, 2 * n - j - 1) * qpow(p.q, mu[j - 1]) +
                   scalar_pow(p.t, j - 1) * qpow(p.q, -mu[j - 1]);
          return sum;
        }
        case MinusculeChoice::DSum: return eps_d_product(p, mu, +1);
        case MinusculeChoice::DSpinMinus:
          return (eps_d_product(p, mu, +1) - eps_d_product(p, mu, -1)) / Scalar(2);
        case MinusculeChoice::DSpinPlus:
          return (eps_d_product(p, mu, +1) + eps_d_product(p, mu, -1)) / Scalar(2);
        default: throw Error("invalid selector for the D family");
      }
    }
    case Family::BC:
      throw Error("the doubled family admits no minuscule coweight");
  }
  throw Error("unreachable");
}

std::map<Weight, Scalar> mac_matrix_row(const RootSystemSpec& rs,
                                        const MinusculeChoice& choice,
                                        const MacParams& p, const Weight& mu,
                                        const Scalar& eps_lam) {
  Weight r = mac_rho(rs);
  std::map<Weight, Scalar> row;
  for (const Weight& kappa : weyl_orbit(rs, mu)) {
    Weight v(kappa.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = kappa[i] + r[i];
    Dominantized dom = dominantize(rs, v);
    if (dom.stabilized) continue;
    Weight nu(v.size());
    for (size_t i = 0; i < v.size(); ++i) nu[i] = dom.weight[i] - r[i];
    Scalar contrib = (mac_eigenvalue(rs, choice, p, kappa) - eps_lam) *
                     Scalar(Rat(dom.sign));
    auto it = row.find(nu);
    if (it == row.end())
      row.emplace(nu, contrib);
    else {
      it->second += contrib;
      if (it->second.is_zero()) row.erase(it);
    }
  }
  return row;
}

std::map<Weight, long> inverse_kostka(const RootSystemSpec& rs, const Weight& lam) {
  Weight r = mac_rho(rs);
  std::map<Weight, long> out;
  for (const Weight& kappa : weyl_orbit(rs, lam)) {
    Weight v(kappa.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = kappa[i] + r[i];
    Dominantized dom = dominantize(rs, v);
    if (dom.stabilized) continue;
    Weight nu(v.size());
    for (size_t i = 0; i < v.size(); ++i) nu[i] = dom.weight[i] - r[i];
    out[nu] += dom.sign;
    if (out[nu] == 0) out.erase(nu);
  }
  return out;
}

namespace {

// Shared assembly: interval plus one orbit-scan row per weight, with the
// eigenvalue supplied as a function of (possibly non-dominant) points.
TriangularData assemble_from_scan(const RootSystemSpec& rs, const Weight& lam,
                                  const std::function<Scalar(const Weight&)>& eps_fn) {
  TriangularData td;
  td.interval = dominant_interval(rs, lam);
  const int n = static_cast<int>(td.interval.size());
  std::map<Weight, int> index;
  for (int j = 0; j < n; ++j) index[td.interval[j]] = j;
  td.eps.resize(n);
  for (int j = 0; j < n; ++j) td.eps[j] = eps_fn(td.interval[j]);
  const Scalar eps_lam = td.eps[n - 1];
  Weight r = mac_rho(rs);
  for (int j = 0; j < n; ++j) {
    for (const Weight& kappa : weyl_orbit(rs, td.interval[j])) {
      Weight v(kappa.size());
      for (size_t i = 0; i < v.size(); ++i) v[i] = kappa[i] + r[i];
      Dominantized dom = dominantize(rs, v);
      if (dom.stabilized) continue;
      Weight nu(v.size());
      for (size_t i = 0; i < v.size(); ++i) nu[i] = dom.weight[i] - r[i];
      auto it = index.find(nu);
      if (it == index.end() || it->second >= j) continue;
      Scalar contrib = (eps_fn(kappa) - eps_lam) * Scalar(Rat(dom.sign));
      auto key = std::make_pair(j, it->second);
      auto dit = td.d.find(key);
      if (dit == td.d.end())
        td.d.emplace(key, contrib);
      else {
        dit->second += contrib;
        if (dit->second.is_zero()) td.d.erase(dit);
      }
    }
  }
  return td;
}

}  // namespace

TriangularData mac_triangular_data(const RootSystemSpec& rs, const MinusculeChoice& choice,
                                   const MacParams& p, const Weight& lam) {
  if (rs.family == Family::BC)
    throw Error("the doubled family admits no minuscule coweight");
  return assemble_from_scan(
      rs, lam, [&](const Weight& k) { return mac_eigenvalue(rs, choice, p, k); });
}

MonomialExpansion compute_macdonald(const RootSystemSpec& rs, const MinusculeChoice& choice,
                                    const MacParams& p, const Weight& lam) {
  return solve_recurrence(mac_triangular_data(rs, choice, p, lam));
}

MonomialExpansion ho_via_macdonald(const RootSystemSpec& rs, const Scalar& g,
                                   const Weight& lam) {
  if (rs.family == Family::BC)
    throw Error("the doubled family admits no minuscule coweight");
  Weight r = mac_rho(rs);
  auto eps = [&](const Weight& k) {
    Scalar sum(0);
    for (size_t i = 0; i < k.size(); ++i) {
      Scalar coord = Scalar(Rat(static_cast<long>(k[i])) / 2) +
                     g * Scalar(Rat(static_cast<long>(r[i])) / 2);
      sum += coord * coord;
    }
    return sum;
  };
  return solve_recurrence(assemble_from_scan(rs, lam, eps));
}

namespace {

struct Slot {
  Scalar sym;                 // qg / qgs / qgl
  std::vector<int> root_ids;  // indices into positive_roots
};

std::vector<Slot> slots_for(const RootSystemSpec& rs, const GeneralTParams& p,
                            const std::vector<Root>& roots) {
  std::vector<Slot> slots;
  auto add = [&](const Scalar& sym, int norm2) {
    Slot s;
    s.sym = sym;
    for (size_t i = 0; i < roots.size(); ++i)
      if (root_norm2(roots[i]) == norm2) s.root_ids.push_back(static_cast<int>(i));
    if (!s.root_ids.empty()) slots.push_back(std::move(s));
  };
  add(p.qg, 2);
  if (rs.family == Family::B) add(p.qgs, 1);
  if (rs.family == Family::C) add(p.qgl, 4);
  return slots;
}

Weight minuscule_pi(const RootSystemSpec& rs) {
  Weight pi(rs.rank, 0);
  switch (rs.family) {
    case Family::A:
    case Family::B:
    case Family::D: pi[0] = 2; break;   // e_1
    case Family::C:
      for (int i = 0; i < rs.rank; ++i) pi[i] = 1;  // (1/2, ..., 1/2)
      break;
    default: throw Error("no minuscule coweight");
  }
  return pi;
}

long long require_even(long long x, const char* what) {
  if (x % 2 != 0) throw Error(std::string("quarter powers of q in ") + what);
  return x / 2;
}

}  // namespace

TriangularData mac_general_t_triangular_data(const RootSystemSpec& rs,
                                             const GeneralTParams& p, const Weight& lam) {
  if (rs.family == Family::BC)
    throw Error("the doubled family admits no minuscule coweight");
  auto roots = positive_roots(rs);
  if (roots.size() > 12)
    throw RankGuardExceeded("too many positive roots for the subset scan");
  auto slots = slots_for(rs, p, roots);
  Weight pi = minuscule_pi(rs);
  Weight r = mac_rho(rs);

  // per-slot doubled root sums over the full positive system
  std::vector<Weight> slot_sum(slots.size(), Weight(rs.rank, 0));
  for (size_t s = 0; s < slots.size(); ++s)
    for (int id : slots[s].root_ids)
      for (int i = 0; i < rs.rank; ++i) slot_sum[s][i] += 2 * roots[id][i];

  // eps_mu = q^{<pi, rho_g>} sum_tau q^{<tau, mu + rho_g>}
  auto eps_fn = [&](const Weight& mu) {
    Scalar pref(1);
    for (size_t s = 0; s < slots.size(); ++s)
      pref *= qpow(slots[s].sym, require_even(dotw(pi, slot_sum[s]) / 2, "rho_g"));
    Scalar sum(0);
    for (const Weight& tau : weyl_orbit(rs, pi)) {
      Scalar term = qpow(p.q, require_even(dotw(tau, mu), "tau.mu"));
      for (size_t s = 0; s < slots.size(); ++s)
        term *= qpow(slots[s].sym, require_even(dotw(tau, slot_sum[s]) / 2, "tau.rho_g"));
      sum += term;
    }
    return pref * sum;
  };

  TriangularData td;
  td.interval = dominant_interval(rs, lam);
  const int n = static_cast<int>(td.interval.size());
  std::map<Weight, int> index;
  for (int j = 0; j < n; ++j) index[td.interval[j]] = j;
  td.eps.resize(n);
  for (int j = 0; j < n; ++j) td.eps[j] = eps_fn(td.interval[j]);
  const Scalar eps_lam = td.eps[n - 1];

  const int nroots = static_cast<int>(roots.size());
  for (int j = 0; j < n; ++j) {
    std::map<int, Scalar> b_row;  // column index -> b_{mu nu}
    auto orbit = weyl_orbit(rs, td.interval[j]);
    for (int mask = 0; mask < (1 << nroots); ++mask) {
      // v = kappa + rho - sum_{alpha in X} alpha, in doubled coordinates
      Weight shift(rs.rank, 0);
      std::vector<long long> slot_x(slots.size(), 0);  // <pi, sum_{X cap slot}>
      int xsize = 0;
      for (int id = 0; id < nroots; ++id) {
        if (!(mask & (1 << id))) continue;
        ++xsize;
        for (int i = 0; i < rs.rank; ++i) shift[i] += 2 * roots[id][i];
      }
      for (size_t s = 0; s < slots.size(); ++s)
        for (int id : slots[s].root_ids)
          if (mask & (1 << id))
            for (int i = 0; i < rs.rank; ++i) slot_x[s] += pi[i] * 2 * roots[id][i];
      int xsign = (xsize % 2) ? -1 : 1;
      for (const Weight& kappa : orbit) {
        Weight v(rs.rank);
        for (int i = 0; i < rs.rank; ++i) v[i] = kappa[i] + r[i] - shift[i];
        Dominantized dom = dominantize(rs, v);
        if (dom.stabilized) continue;
        Weight nu(rs.rank);
        for (int i = 0; i < rs.rank; ++i) nu[i] = dom.weight[i] - r[i];
        auto it = index.find(nu);
        if (it == index.end() || it->second > j) continue;
        Scalar mono = qpow(p.q, require_even(dotw(pi, kappa), "pi.kappa"));
        for (size_t s = 0; s < slots.size(); ++s) {
          // half-unit exponent of 2<pi, rho_slot(X^c)>
          long long hu = dotw(pi, slot_sum[s]) / 2 - require_even(slot_x[s], "pi.rho_g(X)");
          mono *= qpow(slots[s].sym, hu);
        }
        Scalar contrib = mono * Scalar(Rat(xsign * dom.sign));
        auto bit = b_row.find(it->second);
        if (bit == b_row.end())
          b_row.emplace(it->second, contrib);
        else
          bit->second += contrib;
      }
    }
    // the X/kappa scan counts each coset of the stabilizer of pi once per element
    Rat stab_inv = Rat(1) / stabilizer_order(rs, pi);
    for (auto& [k, val] : b_row) val *= Scalar(stab_inv);
    auto a_row = inverse_kostka(rs, td.interval[j]);
    for (auto& [nu, a] : a_row) {
      auto it = index.find(nu);
      if (it == index.end() || it->second > j) continue;
      auto bit = b_row.find(it->second);
      if (bit == b_row.end())
        b_row.emplace(it->second, -eps_lam * Scalar(Rat(a)));
      else
        bit->second -= eps_lam * Scalar(Rat(a));
    }
    for (auto& [k, val] : b_row) {
      if (k >= j) continue;  // diagonal handled by the eigenvalues
      if (!val.is_zero()) td.d[{j, k}] = val;
    }
  }
  return td;
}

MonomialExpansion compute_macdonald_general_t(const RootSystemSpec& rs,
                                              const GeneralTParams& p, const Weight& lam) {
  return solve_recurrence(mac_general_t_triangular_data(rs, p, lam));
}

}  // namespace rp

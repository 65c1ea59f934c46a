#include "rootpoly/rootsystem.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <set>

#include "rootpoly/errors.hpp"

namespace rp {

Family family_from_string(const std::string& s) {
  if (s == "A") return Family::A;
  if (s == "B") return Family::B;
  if (s == "C") return Family::C;
  if (s == "D") return Family::D;
  if (s == "BC") return Family::BC;
  throw ParseError("unknown family '" + s + "'");
}

std::string family_to_string(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::BC: return "BC";
  }
  return "?";
}

std::vector<Root> positive_roots(const RootSystemSpec& rs) {
  const int n = rs.rank;
  std::vector<Root> out;
  auto unit = [&](int i, int ci, int j, int cj) {
    Root a(n, 0);
    a[i] = ci;
    if (j >= 0) a[j] = cj;
    return a;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.push_back(unit(i, 1, j, -1));
  if (rs.family == Family::A) return out;
  if (rs.family != Family::A)
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) out.push_back(unit(i, 1, j, 1));
  if (rs.family == Family::B || rs.family == Family::BC)
    for (int i = 0; i < n; ++i) out.push_back(unit(i, 1, -1, 0));
  if (rs.family == Family::C || rs.family == Family::BC)
    for (int i = 0; i < n; ++i) out.push_back(unit(i, 2, -1, 0));
  return out;
}

int root_norm2(const Root& a) {
  int s = 0;
  for (int c : a) s += c * c;
  return s;
}

long long dot2(const Weight& w, const Root& a) {
  long long s = 0;
  for (size_t i = 0; i < w.size(); ++i) s += w[i] * a[i];
  return s;
}

Rat coroot_pairing(const Weight& w, const Root& a) {
  return Rat(static_cast<long>(dot2(w, a))) / Rat(root_norm2(a));
}

Weight rho(const RootSystemSpec& rs) {
  Weight r(rs.rank, 0);
  for (const Root& a : positive_roots(rs))
    for (int i = 0; i < rs.rank; ++i) r[i] += a[i];
  return r;
}

static std::vector<WeylElement> build_weyl(const RootSystemSpec& rs) {
  const int n = rs.rank;
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::vector<std::vector<int>> perms;
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  auto perm_parity = [](const std::vector<int>& p) {
    int inv = 0;
    for (size_t i = 0; i < p.size(); ++i)
      for (size_t j = i + 1; j < p.size(); ++j)
        if (p[i] > p[j]) ++inv;
    return (inv % 2 == 0) ? 1 : -1;
  };

  std::vector<WeylElement> out;
  const bool flips = rs.family != Family::A;
  const bool even_only = rs.family == Family::D;
  const int nmasks = flips ? (1 << n) : 1;
  for (const auto& p : perms) {
    int pp = perm_parity(p);
    for (int mask = 0; mask < nmasks; ++mask) {
      int nflip = __builtin_popcount(static_cast<unsigned>(mask));
      if (even_only && nflip % 2) continue;
      WeylElement w;
      w.perm = p;
      w.signs.assign(n, 1);
      for (int i = 0; i < n; ++i)
        if (mask & (1 << i)) w.signs[i] = -1;
      w.det = pp * ((nflip % 2) ? -1 : 1);
      out.push_back(std::move(w));
    }
  }
  return out;
}

const std::vector<WeylElement>& weyl_elements(const RootSystemSpec& rs) {
  static std::map<std::pair<int, int>, std::vector<WeylElement>> cache;
  auto key = std::make_pair(static_cast<int>(rs.family), rs.rank);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_weyl(rs)).first;
  return it->second;
}

Weight apply_weyl(const WeylElement& w, const Weight& v) {
  Weight out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[w.perm[i]] = w.signs[w.perm[i]] * v[i];
  return out;
}

Root apply_weyl_root(const WeylElement& w, const Root& a) {
  Root out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[w.perm[i]] = w.signs[w.perm[i]] * a[i];
  return out;
}

bool is_dominant(const RootSystemSpec& rs, const Weight& w) {
  const int n = rs.rank;
  for (int i = 0; i + 1 < n; ++i)
    if (w[i] < w[i + 1]) return false;
  switch (rs.family) {
    case Family::A: return true;
    case Family::B:
    case Family::C:
    case Family::BC: return w[n - 1] >= 0;
    case Family::D: return n < 2 || w[n - 2] >= std::llabs(w[n - 1]);
  }
  return false;
}

bool dominance_leq(const RootSystemSpec& rs, const Weight& mu, const Weight& lam) {
  const int n = rs.rank;
  if (static_cast<int>(mu.size()) != n || static_cast<int>(lam.size()) != n)
    throw ArityMismatch("weight rank mismatch");
  std::vector<long long> s(n);  // doubled prefix sums of lam - mu
  long long acc = 0;
  for (int k = 0; k < n; ++k) {
    acc += lam[k] - mu[k];
    s[k] = acc;
  }
  switch (rs.family) {
    case Family::A: {
      if (s[n - 1] != 0) return false;
      for (int k = 0; k + 1 < n; ++k)
        if (s[k] < 0 || s[k] % 2 != 0) return false;
      return true;
    }
    case Family::B:
    case Family::BC: {
      for (int k = 0; k < n; ++k)
        if (s[k] < 0 || s[k] % 2 != 0) return false;
      return true;
    }
    case Family::C: {
      for (int k = 0; k + 1 < n; ++k)
        if (s[k] < 0 || s[k] % 2 != 0) return false;
      return s[n - 1] >= 0 && s[n - 1] % 4 == 0;
    }
    case Family::D: {
      for (int k = 0; k + 2 < n; ++k)
        if (s[k] < 0 || s[k] % 2 != 0) return false;
      long long vn = lam[n - 1] - mu[n - 1];
      long long c_sum = s[n - 1];          // 4 * c_N
      long long c_prev = s[n - 1] - 2 * vn;  // 4 * c_{N-1}
      return c_sum >= 0 && c_sum % 4 == 0 && c_prev >= 0 && c_prev % 4 == 0;
    }
  }
  return false;
}

long long height2(const RootSystemSpec& rs, const Weight& v) {
  const int n = rs.rank;
  std::vector<long long> s(n);
  long long acc = 0;
  for (int k = 0; k < n; ++k) {
    acc += v[k];
    s[k] = acc;
  }
  long long h = 0;
  switch (rs.family) {
    case Family::A:
      for (int k = 0; k + 1 < n; ++k) h += s[k];
      return h;
    case Family::B:
    case Family::BC:
      for (int k = 0; k < n; ++k) h += s[k];
      return h;
    case Family::C:
      for (int k = 0; k + 1 < n; ++k) h += s[k];
      return h + s[n - 1] / 2;
    case Family::D:
      for (int k = 0; k + 2 < n; ++k) h += s[k];
      return h + s[n - 1] - v[n - 1];
  }
  return 0;
}

static void gen_decreasing(long long lo, long long hi, int pos, int n, Weight& cur,
                           std::vector<Weight>& out) {
  if (pos == n) {
    out.push_back(cur);
    return;
  }
  long long top = pos == 0 ? hi : cur[pos - 1];
  for (long long v = top; v >= lo; --v) {
    cur[pos] = v;
    gen_decreasing(lo, hi, pos + 1, n, cur, out);
  }
}

std::vector<Weight> dominant_interval(const RootSystemSpec& rs, const Weight& lam) {
  const int n = rs.rank;
  if (!is_dominant(rs, lam)) throw Error("weight is not dominant: " + weight_to_string(lam));
  std::vector<Weight> cands;
  Weight cur(n);
  if (rs.family == Family::A) {
    gen_decreasing(lam[n - 1], lam[0], 0, n, cur, cands);
  } else if (rs.family == Family::D) {
    std::vector<Weight> heads;
    Weight h(n - 1);
    gen_decreasing(0, lam[0], 0, n - 1, h, heads);
    for (const auto& head : heads) {
      long long m = n >= 2 ? head[n - 2] : 0;
      for (long long v = -m; v <= m; ++v) {
        Weight w = head;
        w.push_back(v);
        cands.push_back(std::move(w));
      }
    }
  } else {
    gen_decreasing(0, lam[0], 0, n, cur, cands);
  }
  std::vector<Weight> out;
  for (const auto& mu : cands)
    if (dominance_leq(rs, mu, lam)) out.push_back(mu);
  std::sort(out.begin(), out.end(), [&](const Weight& x, const Weight& y) {
    Weight dx(n), dy(n);
    for (int i = 0; i < n; ++i) {
      dx[i] = lam[i] - x[i];
      dy[i] = lam[i] - y[i];
    }
    long long hx = height2(rs, dx), hy = height2(rs, dy);
    if (hx != hy) return hx > hy;
    // ties: colex (right-to-left lexicographic)
    return std::lexicographical_compare(x.rbegin(), x.rend(), y.rbegin(), y.rend());
  });
  return out;
}

static int sort_parity(std::vector<std::pair<long long, int>>& keyed) {
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  int inv = 0;
  for (size_t i = 0; i < keyed.size(); ++i)
    for (size_t j = i + 1; j < keyed.size(); ++j)
      if (keyed[i].second > keyed[j].second) ++inv;
  return (inv % 2 == 0) ? 1 : -1;
}

Dominantized dominantize(const RootSystemSpec& rs, const Weight& w) {
  const int n = rs.rank;
  Dominantized res;
  res.sign = 1;
  res.stabilized = false;
  if (rs.family == Family::A) {
    std::vector<std::pair<long long, int>> keyed(n);
    for (int i = 0; i < n; ++i) keyed[i] = {w[i], i};
    res.sign = sort_parity(keyed);
    res.weight.resize(n);
    for (int i = 0; i < n; ++i) res.weight[i] = keyed[i].first;
    for (int i = 0; i + 1 < n; ++i)
      if (res.weight[i] == res.weight[i + 1]) res.stabilized = true;
    return res;
  }
  std::vector<std::pair<long long, int>> keyed(n);
  int neg = 0;
  for (int i = 0; i < n; ++i) {
    keyed[i] = {std::llabs(w[i]), i};
    if (w[i] < 0) ++neg;
  }
  int parity = sort_parity(keyed);
  res.weight.resize(n);
  for (int i = 0; i < n; ++i) res.weight[i] = keyed[i].first;
  if (rs.family == Family::D) {
    res.sign = parity;
    int sgn = 1;
    for (int i = 0; i < n; ++i)
      if (w[i] < 0) sgn = -sgn;
    res.weight[n - 1] *= sgn;
    for (int i = 0; i + 1 < n; ++i)
      if (keyed[i].first == keyed[i + 1].first) res.stabilized = true;
  } else {
    res.sign = parity * ((neg % 2) ? -1 : 1);
    for (int i = 0; i + 1 < n; ++i)
      if (res.weight[i] == res.weight[i + 1]) res.stabilized = true;
    if (res.weight[n - 1] == 0) res.stabilized = true;
  }
  return res;
}

std::vector<Weight> weyl_orbit(const RootSystemSpec& rs, const Weight& w) {
  std::set<Weight> seen;
  for (const auto& el : weyl_elements(rs)) seen.insert(apply_weyl(el, w));
  return std::vector<Weight>(seen.begin(), seen.end());
}

Rat weyl_group_order(const RootSystemSpec& rs) {
  Rat fact = 1;
  for (int i = 2; i <= rs.rank; ++i) fact *= i;
  switch (rs.family) {
    case Family::A: return fact;
    case Family::B:
    case Family::C:
    case Family::BC: {
      Rat p = 1;
      for (int i = 0; i < rs.rank; ++i) p *= 2;
      return fact * p;
    }
    case Family::D: {
      Rat p = 1;
      for (int i = 0; i < rs.rank - 1; ++i) p *= 2;
      return fact * p;
    }
  }
  return fact;
}

Rat stabilizer_order(const RootSystemSpec& rs, const Weight& w) {
  // Product over positive roots orthogonal to w of
  // (<rho,a_check> + 1 + h/2) / (<rho,a_check> + h/2),
  // h = 1 when a/2 is also a root (the doubled roots 2e_i of BC).
  // The product formula only holds on the closed dominant chamber, so move
  // there first; the order is invariant under the group action.
  Weight dom = dominantize(rs, w).weight;
  Weight r = rho(rs);
  Rat order = 1;
  for (const Root& a : positive_roots(rs)) {
    if (dot2(dom, a) != 0) continue;
    Rat half(0);
    if (rs.family == Family::BC && root_norm2(a) == 4) half = rat(1, 2);
    Rat rp_ = coroot_pairing(r, a);
    order *= (rp_ + 1 + half) / (rp_ + half);
  }
  return order;
}

Rat orbit_size(const RootSystemSpec& rs, const Weight& w) {
  return weyl_group_order(rs) / stabilizer_order(rs, w);
}

static std::vector<long long> abs_sorted(const Weight& w) {
  std::vector<long long> v;
  v.reserve(w.size());
  for (long long x : w) v.push_back(std::llabs(x));
  std::sort(v.begin(), v.end(), std::greater<long long>());
  return v;
}

std::vector<long long> multiset_diff(const Weight& a, const Weight& b) {
  std::multiset<long long, std::greater<long long>> rem(a.begin(), a.end());
  for (long long x : b) {
    auto it = rem.find(x);
    if (it != rem.end()) rem.erase(it);
  }
  return std::vector<long long>(rem.begin(), rem.end());
}

std::pair<std::vector<long long>, std::vector<long long>> skew_parts(const Weight& mu,
                                                                     const Weight& nu) {
  auto sgn = [](long long x) { return x < 0 ? -1 : 1; };
  int eps = sgn(mu.back()) * sgn(nu.back());
  auto mp = abs_sorted(mu);
  auto np = abs_sorted(nu);
  Weight mpw(mp.begin(), mp.end()), npw(np.begin(), np.end());
  auto first = multiset_diff(mpw, npw);
  auto second = multiset_diff(npw, mpw);
  if (!second.empty()) second.back() *= eps;
  return {first, second};
}

int eta(const Weight& nu, long long n_doubled) {
  long long a = std::llabs(n_doubled);
  int c = 0;
  for (long long x : nu)
    if (std::llabs(x) == a) ++c;
  return c;
}

Weight bar_last(const Weight& mu) {
  Weight out = mu;
  out.back() = -out.back();
  return out;
}

long long weight_sum(const Weight& w) {
  long long s = 0;
  for (long long x : w) s += x;
  return s;
}

}  // namespace rp

#include "rootpoly/hessenberg.hpp"

#include <functional>

#include "rootpoly/errors.hpp"

namespace rp {

namespace {

// eps_n - eps_j for all j < n, throwing if any difference vanishes.
std::vector<Scalar> eps_gaps(const TriangularData& td) {
  const int n = static_cast<int>(td.interval.size());
  std::vector<Scalar> gaps(n);
  for (int j = 0; j + 1 < n; ++j) {
    gaps[j] = td.eps[n - 1] - td.eps[j];
    if (gaps[j].is_zero())
      throw RegularityViolation("eigenvalue collision between " +
                                weight_to_string(td.interval[j]) + " and " +
                                weight_to_string(td.interval[n - 1]));
  }
  return gaps;
}

// Cancels gap factors shared by num and den.  The recurrence denominators
// are products of the gaps, so trial division by them recovers almost all
// of the gcd at exact-division cost, independent of the symbol count.
Scalar cancel_gap_factors(const Scalar& v, const std::vector<Scalar>& gaps) {
  if (v.is_rational() || v.ratfunc().den.is_constant()) return v;
  LaurentPoly num = v.ratfunc().num;
  LaurentPoly den = v.ratfunc().den;
  bool changed = false;
  for (const Scalar& gs : gaps) {
    if (gs.is_rational() || !gs.ratfunc().den.is_constant()) continue;
    const LaurentPoly& f = gs.ratfunc().num;
    if (f.is_constant()) continue;
    LaurentPoly qd, qn;
    while (!den.is_constant() && poly_try_divexact(den, f, qd) &&
           poly_try_divexact(num, f, qn)) {
      den = std::move(qd);
      num = std::move(qn);
      changed = true;
    }
  }
  return changed ? Scalar(RatFunc{num, den}) : v;
}

MonomialExpansion pack(const TriangularData& td, const std::vector<Scalar>& c) {
  MonomialExpansion out;
  out.leading = td.interval.back();
  for (size_t j = 0; j < c.size(); ++j)
    if (!c[j].is_zero()) out.coeffs.emplace(td.interval[j], c[j]);
  return out;
}

}  // namespace

std::vector<Scalar> normalization_factors(const TriangularData& td) {
  auto gaps = eps_gaps(td);
  gaps.pop_back();
  return gaps;
}

MonomialExpansion solve_recurrence(const TriangularData& td) {
  const int n = static_cast<int>(td.interval.size());
  auto gaps = eps_gaps(td);
  std::vector<Scalar> c(n, Scalar(0));
  c[n - 1] = Scalar(1);
  for (int l = n - 1; l >= 1; --l) {
    Scalar acc(0);
    for (int k = l; k < n; ++k) {
      auto it = td.d.find({k, l - 1});
      if (it != td.d.end() && !c[k].is_zero()) acc += c[k] * it->second;
    }
    // Reduction at every step keeps the rational functions from compounding
    // unreduced denominators across the interval.  Gap-factor cancellation
    // does the structural part at exact-division cost once the denominator
    // has grown; the full gcd then finishes the job.
    Scalar v = acc / gaps[l - 1];
    if (!v.is_rational() && v.ratfunc().den.terms.size() > 200)
      v = cancel_gap_factors(v, gaps);
    if (!v.is_rational()) v = v.reduced_full();
    c[l - 1] = v;
  }
  return pack(td, c);
}

MonomialExpansion solve_closed_form(const TriangularData& td) {
  const int n = static_cast<int>(td.interval.size());
  auto gaps = eps_gaps(td);
  std::vector<Scalar> c(n, Scalar(0));
  c[n - 1] = Scalar(1);
  // DFS over strictly decreasing chains starting at n-1; each step k -> j
  // multiplies by d_{k,j}/(eps_n - eps_j) and deposits into c[j].
  std::function<void(int, const Scalar&)> walk = [&](int k, const Scalar& prod) {
    for (int j = 0; j < k; ++j) {
      auto it = td.d.find({k, j});
      if (it == td.d.end()) continue;
      Scalar next = prod * it->second / gaps[j];
      if (next.is_zero()) continue;
      c[j] += next;
      walk(j, next);
    }
  };
  walk(n - 1, Scalar(1));
  return pack(td, c);
}

MonomialExpansion expand_determinant(const TriangularData& td) {
  const int n = static_cast<int>(td.interval.size());
  auto gaps = eps_gaps(td);
  // Numeric part of the Hessenberg matrix (column 1 of basis elements
  // removed): entry (j,k) = d_{j,k} below the diagonal, eps_j - eps_n on
  // the diagonal, zero above.
  auto entry = [&](int j, int k) -> Scalar {
    if (j == k) return -gaps[j];
    if (j > k) {
      auto it = td.d.find({j, k});
      return it == td.d.end() ? Scalar(0) : it->second;
    }
    return Scalar(0);
  };
  // det of the minor keeping the given rows/cols, by first-column Laplace.
  std::function<Scalar(const std::vector<int>&, const std::vector<int>&)> det =
      [&](const std::vector<int>& rows, const std::vector<int>& cols) -> Scalar {
    if (rows.empty()) return Scalar(1);
    Scalar acc(0);
    for (size_t r = 0; r < rows.size(); ++r) {
      Scalar e = entry(rows[r], cols[0]);
      if (e.is_zero()) continue;
      std::vector<int> rrows, rcols(cols.begin() + 1, cols.end());
      for (size_t i = 0; i < rows.size(); ++i)
        if (i != r) rrows.push_back(rows[i]);
      Scalar sub = det(rrows, rcols);
      acc += (r % 2 ? -sub : sub) * e;
    }
    return acc;
  };
  Scalar norm(1);
  for (int j = 0; j + 1 < n; ++j) norm *= gaps[j];
  std::vector<Scalar> c(n, Scalar(0));
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  for (int j = 0; j < n; ++j) {
    // cofactor of basis row j; the numeric columns are 0..n-2 over the
    // rows with row j removed
    std::vector<int> rows;
    for (int i = 0; i < n; ++i)
      if (i != j) rows.push_back(i);
    std::vector<int> cols(n - 1);
    for (int i = 0; i + 1 < n; ++i) cols[i] = i;
    Scalar minor = det(rows, cols);
    Scalar sign = (j % 2) ? Scalar(-1) : Scalar(1);
    c[j] = sign * minor / norm;
  }
  // fix global sign so the expansion is monic
  if (!c[n - 1].is_zero() && c[n - 1] != Scalar(1)) {
    Scalar lead = c[n - 1];
    for (auto& x : c) x = x / lead;
  }
  return pack(td, c);
}

}  // namespace rp

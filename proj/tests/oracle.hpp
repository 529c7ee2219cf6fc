// Slow, independent reference implementations used as test oracles. Nothing
// here calls into the library's root enumeration or series arithmetic.
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Vec = std::vector<int>;

inline int sum(const Vec& v) { return std::accumulate(v.begin(), v.end(), 0); }

/// Edge list of the extended diagram, hand-written from the vertex layout.
inline std::vector<std::pair<int, int>> affine_edges(char family, int rank) {
  std::vector<std::pair<int, int>> e;
  if (family == 'A') {
    if (rank == 1) return {{0, 1}, {0, 1}};
    for (int i = 0; i < rank; ++i) e.push_back({i, i + 1});
    e.push_back({rank, 0});
  } else if (family == 'D') {
    for (int i = 3; i < rank - 1; ++i) e.push_back({i, i + 1});
    e.push_back({0, 3});
    e.push_back({2, 3});
    e.push_back({1, rank - 1});
    e.push_back({rank, rank - 1});
  } else if (family == 'E' && rank == 6) {
    e = {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 6}, {6, 0}};
  } else if (family == 'E' && rank == 7) {
    e = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {3, 7}};
  } else if (family == 'E' && rank == 8) {
    e = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {5, 8}};
  } else {
    throw std::invalid_argument("no such diagram");
  }
  return e;
}

/// Twice the Tits form: 2 sum x_i^2 - 2 sum_{edges} x_i x_j.
inline long twice_tits(const std::vector<std::pair<int, int>>& edges, const Vec& x) {
  long q = 0;
  for (int v : x) q += 2L * v * v;
  for (auto [i, j] : edges) q -= 2L * x[i] * x[j];
  return q;
}

/// All nonnegative integer vectors of length n and entry sum <= bound, in
/// (entry sum, lexicographic) order.
inline std::vector<Vec> nonnegative_vectors(int n, int bound) {
  std::vector<Vec> out;
  Vec v(n, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n) {
      out.push_back(v);
      return;
    }
    for (int a = 0; a <= left; ++a) {
      v[i] = a;
      rec(i + 1, left - a);
    }
    v[i] = 0;
  };
  rec(0, bound);
  std::sort(out.begin(), out.end(), [](const Vec& a, const Vec& b) {
    const int sa = sum(a), sb = sum(b);
    return sa != sb ? sa < sb : a < b;
  });
  return out;
}

/// Positive real roots by exhaustive scan: nonzero nonnegative vectors with
/// Tits form 1.
inline std::vector<Vec> scan_real_roots(const std::vector<std::pair<int, int>>& edges, int n, int bound) {
  std::vector<Vec> out;
  for (const auto& v : nonnegative_vectors(n, bound))
    if (sum(v) > 0 && twice_tits(edges, v) == 2) out.push_back(v);
  return out;
}

/// Finite roots: scan in the finite coordinates (rho_0 deleted). `bound`
/// must be at least the height of the highest root.
inline std::vector<Vec> scan_finite_roots(char family, int rank, int bound) {
  std::vector<std::pair<int, int>> finite;
  for (auto [i, j] : affine_edges(family, rank))
    if (i != 0 && j != 0) finite.push_back({i - 1, j - 1});
  return scan_real_roots(finite, rank, bound);
}

/// Smallest nonzero vector with Tits form 0 (the imaginary root generator).
inline Vec scan_delta(char family, int rank, int bound) {
  const auto edges = affine_edges(family, rank);
  for (const auto& v : nonnegative_vectors(rank + 1, bound))
    if (sum(v) > 0 && twice_tits(edges, v) == 0) return v;
  throw std::logic_error("no imaginary root found");
}

/// Dense-map truncated power series with total-degree truncation.
struct Naive {
  int order;
  std::map<Vec, mpz_class> c;

  static Naive one(int n, int order) {
    Naive s{order, {}};
    s.c[Vec(n, 0)] = 1;
    return s;
  }

  Naive operator*(const Naive& o) const {
    Naive r{order, {}};
    for (const auto& [ea, ca] : c)
      for (const auto& [eb, cb] : o.c) {
        Vec e(ea.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        if (sum(e) > order) continue;
        r.c[e] += ca * cb;
      }
    r.prune();
    return r;
  }

  void prune() {
    for (auto it = c.begin(); it != c.end();)
      it = it->second == 0 ? c.erase(it) : std::next(it);
  }
};

/// (1 - s x^a)^{-1} as the geometric series sum_k s^k x^{k a}.
inline Naive geometric(int n, int order, const Vec& a, int s) {
  Naive r{order, {}};
  if (sum(a) == 0) throw std::invalid_argument("constant factor");
  Vec e(n, 0);
  mpz_class coef = 1;
  for (int k = 0; sum(e) <= order; ++k) {
    r.c[e] = coef;
    for (int i = 0; i < n; ++i) e[i] += a[i];
    coef *= s;
  }
  return r;
}

/// (1 - s x^a)^{-p}: p-fold product of geometric series for p > 0, |p|-fold
/// product of the binomial 1 - s x^a for p < 0.
inline Naive factor(int n, int order, const Vec& a, int s, int p) {
  Naive r = Naive::one(n, order);
  if (p > 0) {
    const Naive g = geometric(n, order, a, s);
    for (int i = 0; i < p; ++i) r = r * g;
  } else if (p < 0) {
    Naive b = Naive::one(n, order);
    if (sum(a) <= order) b.c[a] = -s;
    for (int i = 0; i < -p; ++i) r = r * b;
  }
  return r;
}

/// A_n or D_n, where |delta| <= 2n and the delta scan stays small.
struct Diagram {
  char family;
  int rank;
  std::vector<std::pair<int, int>> edges;
  Vec delta;
  int n;
  Diagram(char f, int r) : family(f), rank(r), edges(affine_edges(f, r)), delta(scan_delta(f, r, 2 * r + 2)), n(r + 1) {}
};

/// Positive real affine roots with a nonzero rho_0 entry, split by whether
/// x - x_0 delta is nonpositive (PT+ side) or nonnegative (PT- side).
inline std::vector<Vec> pt_side_roots(const Diagram& d, int order, int side) {
  std::vector<Vec> out;
  for (const auto& v : scan_real_roots(d.edges, d.n, order)) {
    if (v[0] == 0) continue;
    bool nonpos = true, nonneg = true;
    for (int i = 0; i < d.n; ++i) {
      const int r = v[i] - v[0] * d.delta[i];
      nonpos = nonpos && r <= 0;
      nonneg = nonneg && r >= 0;
    }
    if ((side > 0 && nonpos) || (side < 0 && nonneg)) out.push_back(v);
  }
  return out;
}

inline Naive pt(const Diagram& d, int order, int side) {
  Naive r = Naive::one(d.n, order);
  for (const auto& a : pt_side_roots(d, order, side)) r = r * factor(d.n, order, a, (a[0] % 2) ? -1 : 1, a[0]);
  return r;
}

/// M(-x^delta)^N = prod_m (1 - (-1)^m x^{m delta})^{-m N}.
inline Naive macmahon(const Diagram& d, int order) {
  Naive r = Naive::one(d.n, order);
  for (int m = 1; m * sum(d.delta) <= order; ++m) {
    Vec a(d.n);
    for (int i = 0; i < d.n; ++i) a[i] = m * d.delta[i];
    r = r * factor(d.n, order, a, (m % 2) ? -1 : 1, m * d.n);
  }
  return r;
}

inline Naive dt(const Diagram& d, int order, int side) { return macmahon(d, order) * pt(d, order, side); }
inline Naive ncdt(const Diagram& d, int order) { return macmahon(d, order) * pt(d, order, 1) * pt(d, order, -1); }

/// Plane partitions of n for n = 0..max_n with parts <= bound in a bound x
/// bound grid, counted by direct enumeration of weakly decreasing arrays.
inline std::vector<long> plane_partition_counts(int max_n, int bound) {
  std::vector<long> counts(max_n + 1, 0);
  std::vector<int> grid(bound * bound, 0);
  std::function<void(int, int)> rec = [&](int cell, int total) {
    if (cell == bound * bound) {
      ++counts[total];
      return;
    }
    const int row = cell / bound, col = cell % bound;
    int cap = bound;
    if (row > 0) cap = std::min(cap, grid[(row - 1) * bound + col]);
    if (col > 0) cap = std::min(cap, grid[row * bound + col - 1]);
    cap = std::min(cap, max_n - total);
    for (int v = 0; v <= cap; ++v) {
      grid[cell] = v;
      rec(cell + 1, total + v);
    }
    grid[cell] = 0;
  };
  rec(0, 0);
  return counts;
}

}  // namespace oracle

#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "tautrel/kappa_ring.hpp"
#include "tautrel/point_algebra.hpp"

namespace tautrel::testing {

using Rng = std::mt19937_64;

/// p/q in lowest terms (mpq_class does not canonicalize on construction).
inline Rational ratio(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// Random point monomial on n points of complex degree exactly `degree`.
inline PointMonomial random_point_monomial(Rng& rng, int n, int degree) {
  PointMonomial m = PointMonomial::unit(n);
  for (int step = 0; step < degree; ++step) {
    const int kind = uniform(rng, 0, n > 1 ? 2 : 1);
    if (kind == 0) {
      ++m.a[uniform(rng, 0, n - 1)];
    } else if (kind == 1) {
      ++m.c;
    } else {
      const int i = uniform(rng, 0, n - 1);
      int j = uniform(rng, 0, n - 2);
      if (j >= i) ++j;
      m.set_edge(i, j, m.edge(i, j) + 1);
    }
  }
  return m;
}

inline KappaPolynomial random_kappa_polynomial(Rng& rng, int max_degree, int terms) {
  KappaPolynomial p;
  for (int t = 0; t < terms; ++t) {
    std::vector<int> parts;
    const int length = uniform(rng, 0, 3);
    for (int k = 0; k < length; ++k) parts.push_back(uniform(rng, 1, max_degree));
    p.add_term(KappaMonomial::from_parts(parts), ratio(uniform(rng, -9, 9), uniform(rng, 1, 4)));
  }
  return p;
}

inline std::vector<int> random_permutation(Rng& rng, int n) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

// One random rewrite by a defining relation of the point algebra, applied
// inside a larger monomial when its left side divides it:
//   e_i v_ij = e_j v_ij,   v_ij^2 = e_i v_ij (either direction),
//   v_xy v_xz = v_xy v_yz.
inline PointMonomial random_move(Rng& rng, PointMonomial m) {
  const int n = m.n;
  const int i = uniform(rng, 0, n - 1);
  int j = uniform(rng, 0, n - 2);
  if (j >= i) ++j;
  switch (uniform(rng, 0, 3)) {
    case 0:
      if (m.a[i] >= 1 && m.edge(i, j) >= 1) {
        --m.a[i];
        ++m.a[j];
      }
      break;
    case 1:
      if (m.edge(i, j) >= 2) {
        m.set_edge(i, j, m.edge(i, j) - 1);
        ++m.a[i];
      }
      break;
    case 2:
      if (m.a[i] >= 1 && m.edge(i, j) >= 1) {
        --m.a[i];
        m.set_edge(i, j, m.edge(i, j) + 1);
      }
      break;
    default:
      if (n >= 3) {
        int k = uniform(rng, 0, n - 1);
        if (k == i || k == j) break;
        if (m.edge(i, j) >= 1 && m.edge(i, k) >= 1) {
          m.set_edge(i, k, m.edge(i, k) - 1);
          m.set_edge(j, k, m.edge(j, k) + 1);
        }
      }
  }
  return m;
}

}  // namespace tautrel::testing

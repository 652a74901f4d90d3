#pragma once

// Independent reference computations used as test oracles. Everything here
// is deliberately naive (cofactor expansion, exhaustive enumeration) so it
// shares no code path with the library algorithms it checks.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "wld/diagram.hpp"
#include "wld/finite_group.hpp"
#include "wld/free_group.hpp"
#include "wld/int_matrix.hpp"
#include "wld/invariants.hpp"
#include "wld/laurent.hpp"
#include "wld/random.hpp"
#include "wld/random_diagram.hpp"

namespace wld::testing {

inline FreeWord random_word(Rng& rng, int generators, int max_len) {
  std::vector<Letter> letters;
  const int len = rng.range(0, max_len);
  for (int i = 0; i < len; ++i) letters.push_back({rng.range(0, generators - 1), rng.sign()});
  return FreeWord(letters);
}

inline IntMatrix random_int_matrix(Rng& rng, std::size_t rows, std::size_t cols, int bound) {
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rng.range(-bound, bound);
  return m;
}

// Laplace expansion along the first row.
template <typename T>
T laplace_det(const std::vector<std::vector<T>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return T(1);
  if (n == 1) return m[0][0];
  T total(0);
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == T(0)) continue;
    std::vector<std::vector<T>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<T> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    T term = m[0][c] * laplace_det(minor);
    if (c % 2) total = total - term;
    else total = total + term;
  }
  return total;
}

// Calls f(rows, cols) for every choice of `size` rows and `size` columns.
inline void for_each_minor(std::size_t rows, std::size_t cols, std::size_t size,
                           const std::function<void(const std::vector<std::size_t>&, const std::vector<std::size_t>&)>& f) {
  if (size > rows || size > cols) return;
  std::vector<bool> rsel(rows, false), csel(cols, false);
  std::fill(rsel.begin(), rsel.begin() + static_cast<long>(size), true);
  do {
    std::vector<std::size_t> rs;
    for (std::size_t i = 0; i < rows; ++i)
      if (rsel[i]) rs.push_back(i);
    std::fill(csel.begin(), csel.end(), false);
    std::fill(csel.begin(), csel.begin() + static_cast<long>(size), true);
    do {
      std::vector<std::size_t> cs;
      for (std::size_t i = 0; i < cols; ++i)
        if (csel[i]) cs.push_back(i);
      f(rs, cs);
    } while (std::prev_permutation(csel.begin(), csel.end()));
  } while (std::prev_permutation(rsel.begin(), rsel.end()));
}

// gcd of all (cols - k)-minors of a Laurent matrix by cofactor expansion.
inline LaurentPolynomial oracle_alexander_poly(const LaurentMatrix& m, int cols, int k) {
  const int size = cols - k;
  if (size <= 0) return 1;
  const std::size_t rows = m.size();
  if (static_cast<std::size_t>(size) > rows) return 0;
  std::vector<LaurentPolynomial> minors;
  for_each_minor(rows, static_cast<std::size_t>(cols), static_cast<std::size_t>(size),
                 [&](const auto& rs, const auto& cs) {
                   std::vector<std::vector<LaurentPolynomial>> sub;
                   for (auto r : rs) {
                     std::vector<LaurentPolynomial> row;
                     for (auto c : cs) row.push_back(m[r][c]);
                     sub.push_back(row);
                   }
                   minors.push_back(laplace_det(sub));
                 });
  return poly_gcd(minors);
}

// Row-echelon shape with positive pivots and reduced entries above them.
inline bool is_hermite_form(const IntMatrix& h) {
  long last_pivot = -1;
  bool seen_zero_row = false;
  for (std::size_t r = 0; r < h.rows(); ++r) {
    long pivot = -1;
    for (std::size_t c = 0; c < h.cols(); ++c)
      if (h(r, c) != 0) {
        pivot = static_cast<long>(c);
        break;
      }
    if (pivot < 0) {
      seen_zero_row = true;
      continue;
    }
    if (seen_zero_row || pivot <= last_pivot) return false;
    const Integer& p = h(r, static_cast<std::size_t>(pivot));
    if (p <= 0) return false;
    for (std::size_t above = 0; above < r; ++above) {
      const Integer& e = h(above, static_cast<std::size_t>(pivot));
      if (e < 0 || e >= p) return false;
    }
    last_pivot = pivot;
  }
  return true;
}

// Whether `v` is an integer combination of the rows of `b`. The rows of `b`
// must be linearly independent so the rational solution is unique.
inline bool in_row_lattice(const IntMatrix& b, const std::vector<Integer>& v) {
  // Gaussian elimination over Q on the augmented transpose system.
  const std::size_t n = b.rows(), m = b.cols();
  std::vector<std::vector<mpq_class>> a(m, std::vector<mpq_class>(n + 1));
  for (std::size_t c = 0; c < m; ++c) {
    for (std::size_t r = 0; r < n; ++r) a[c][r] = b(r, c);
    a[c][n] = v[c];
  }
  std::size_t row = 0;
  std::vector<long> where(n, -1);
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t sel = row;
    while (sel < m && a[sel][col] == 0) ++sel;
    if (sel == m) continue;
    std::swap(a[sel], a[row]);
    for (std::size_t r = 0; r < m; ++r) {
      if (r == row || a[r][col] == 0) continue;
      const mpq_class f = a[r][col] / a[row][col];
      for (std::size_t k = col; k <= n; ++k) a[r][k] -= f * a[row][k];
    }
    where[col] = static_cast<long>(row);
    ++row;
  }
  for (std::size_t r = row; r < m; ++r)
    if (a[r][n] != 0) return false;
  for (std::size_t col = 0; col < n; ++col) {
    if (where[col] < 0) continue;
    const mpq_class x = a[static_cast<std::size_t>(where[col])][n] / a[static_cast<std::size_t>(where[col])][col];
    if (x.get_den() != 1) return false;
  }
  return true;
}

// gcd of the k-minors, the k-th determinantal divisor (0 if all vanish).
inline Integer determinantal_divisor(const IntMatrix& m, std::size_t k) {
  Integer d = 0;
  for_each_minor(m.rows(), m.cols(), k, [&](const auto& rs, const auto& cs) {
    std::vector<std::vector<Integer>> sub;
    for (auto r : rs) {
      std::vector<Integer> row;
      for (auto c : cs) row.push_back(m(r, c));
      sub.push_back(row);
    }
    Integer det = laplace_det(sub);
    mpz_gcd(d.get_mpz_t(), d.get_mpz_t(), det.get_mpz_t());
  });
  return d;
}

// Invariant factors from determinantal divisors: s_k = d_k / d_(k-1).
inline std::vector<Integer> oracle_invariant_factors(const IntMatrix& m) {
  std::vector<Integer> out;
  Integer prev = 1;
  for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
    const Integer d = determinantal_divisor(m, k);
    if (d == 0) break;
    out.push_back(d / prev);
    prev = d;
  }
  return out;
}

// h is the HNF of m: echelon shape, rows of m lie in the lattice of h, and
// both lattices have the same rank and covolume (so neither is a proper
// sublattice of the other). HNF is unique, so this pins h down.
inline bool is_hnf_of(const IntMatrix& h, const IntMatrix& m) {
  if (!is_hermite_form(h)) return false;
  IntMatrix basis(0, h.cols());
  for (std::size_t r = 0; r < h.rows(); ++r)
    if (!h.row_is_zero(r)) basis.append_row(h.row(r));
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (!in_row_lattice(basis, m.row(r))) return false;
  const std::size_t rk = basis.rows();
  if (rk < std::min(m.rows(), m.cols()) && determinantal_divisor(m, rk + 1) != 0) return false;
  if (rk == 0) return true;
  return determinantal_divisor(m, rk) == determinantal_divisor(basis, rk);
}

// Arc labellings by Z/n satisfying 2*over = in + out at each crossing,
// counted by enumerating all n^arcs assignments.
inline Integer oracle_colorings(const Diagram& d, int n) {
  const ArcMap am = arc_map(d);
  const std::size_t arcs = am.arcs.size();
  struct Rel {
    int over, in, out;
  };
  std::vector<Rel> rels;
  for (int id : d.crossing_ids()) {
    const auto& c = d.crossing(id);
    const auto oc = static_cast<std::size_t>(c.over.component), uc = static_cast<std::size_t>(c.under.component);
    rels.push_back({am.arc_of[oc][static_cast<std::size_t>(c.over.index)],
                    am.arc_of[uc][static_cast<std::size_t>(c.under.index)],
                    am.arc_after[uc][static_cast<std::size_t>(c.under.index)]});
  }
  std::vector<int> label(arcs, 0);
  Integer count = 0;
  while (true) {
    bool ok = true;
    for (const auto& r : rels)
      if (((2 * label[static_cast<std::size_t>(r.over)] - label[static_cast<std::size_t>(r.in)] -
            label[static_cast<std::size_t>(r.out)]) % n + n) % n != 0) {
        ok = false;
        break;
      }
    if (ok) ++count;
    std::size_t i = 0;
    while (i < arcs && ++label[i] == n) label[i++] = 0;
    if (i == arcs) break;
  }
  return count;
}

// Homomorphism count by trying every generator assignment.
inline Integer oracle_hom_count(const GroupPresentation& p, const FiniteGroupTable& g) {
  std::vector<int> img(static_cast<std::size_t>(p.generators), g.identity());
  Integer count = 0;
  while (true) {
    bool ok = true;
    for (const auto& w : p.relators) {
      int acc = g.identity();
      for (const auto& l : w.letters()) {
        const int x = img[static_cast<std::size_t>(l.generator)];
        acc = g.mul(acc, l.exponent > 0 ? x : g.inv(x));
      }
      if (acc != g.identity()) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
    std::size_t i = 0;
    while (i < img.size() && ++img[i] == g.order()) img[i++] = 0;
    if (i == img.size()) break;
  }
  return count;
}

// Fox sum as a plain map for direct comparison, with zero terms dropped.
inline FoxSum cleaned(const FoxSum& s) {
  FoxSum out;
  for (const auto& [w, c] : s)
    if (c != 0) out[w] = c;
  return out;
}

}  // namespace wld::testing

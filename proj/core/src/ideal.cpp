#include "wld/ideal.hpp"

#include <stdexcept>

namespace wld {

namespace {

void check_modulus(int n) {
  if (n < 1) throw std::invalid_argument("modulus n must be at least 1");
}

std::size_t residue(std::int64_t e, int n) {
  const std::int64_t r = e % n;
  return static_cast<std::size_t>(r < 0 ? r + n : r);
}

IntMatrix nonzero_rows(const IntMatrix& h) {
  IntMatrix out(0, h.cols());
  for (std::size_t r = 0; r < h.rows() && !h.row_is_zero(r); ++r) out.append_row(h.row(r));
  return out;
}

}  // namespace

bool CyclicLattice::is_unit_ideal() const {
  if (basis.rows() != static_cast<std::size_t>(n)) return false;
  for (std::size_t r = 0; r < basis.rows(); ++r)
    for (std::size_t c = 0; c < basis.cols(); ++c)
      if (basis(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

std::vector<Integer> reduce_mod(const LaurentPolynomial& p, int n) {
  check_modulus(n);
  std::vector<Integer> v(static_cast<std::size_t>(n));
  for (const auto& [e, c] : p.terms()) v[residue(e, n)] += c;
  return v;
}

CyclicLattice ideal_mod(const std::vector<LaurentPolynomial>& gens, int n) {
  check_modulus(n);
  const auto un = static_cast<std::size_t>(n);
  CyclicLattice out{n, IntMatrix(0, un)};
  for (const auto& g : gens) {
    const auto v = reduce_mod(g, n);
    bool zero = true;
    for (const auto& c : v) zero = zero && c == 0;
    if (zero) continue;
    IntMatrix m = out.basis;
    for (std::size_t s = 0; s < un; ++s) {
      std::vector<Integer> row(un);
      for (std::size_t i = 0; i < un; ++i) row[(i + s) % un] = v[i];
      m.append_row(row);
    }
    out.basis = nonzero_rows(hnf(m));
  }
  return out;
}

bool ideal_equal_mod(const std::vector<LaurentPolynomial>& a, const std::vector<LaurentPolynomial>& b, int n) {
  return ideal_mod(a, n) == ideal_mod(b, n);
}

bool contains(const CyclicLattice& l, const LaurentPolynomial& p) {
  IntMatrix m = l.basis;
  m.append_row(reduce_mod(p, l.n));
  return nonzero_rows(hnf(m)) == l.basis;
}

bool member_of_principal(const LaurentPolynomial& p, int n) {
  for (const auto& c : reduce_mod(p, n))
    if (c != 0) return false;
  return true;
}

Integer f_n(const LaurentPolynomial& p, int n) {
  check_modulus(n);
  const std::size_t two = residue(2, n);
  Integer s = 0;
  for (const auto& [e, c] : p.terms()) {
    const std::size_t r = residue(e, n);
    if (r == 0 || r == two) s += c;
  }
  return s;
}

}  // namespace wld

#pragma once

// Ideals of Z[t, t^-1] / (1 - t^n), stored as shift-closed sublattices of
// Z^n (coordinate i = coefficient of t^i) in Hermite normal form.

#include <vector>

#include "wld/int_matrix.hpp"
#include "wld/laurent.hpp"

namespace wld {

struct CyclicLattice {
  int n = 1;
  IntMatrix basis;  // nonzero HNF rows only

  bool is_zero() const noexcept { return basis.rows() == 0; }
  /// Whole quotient ring.
  bool is_unit_ideal() const;
  friend bool operator==(const CyclicLattice& a, const CyclicLattice& b) {
    return a.n == b.n && a.basis == b.basis;
  }
};

/// Coefficient vector of p reduced modulo t^n - 1.
std::vector<Integer> reduce_mod(const LaurentPolynomial& p, int n);

CyclicLattice ideal_mod(const std::vector<LaurentPolynomial>& gens, int n);
bool ideal_equal_mod(const std::vector<LaurentPolynomial>& a, const std::vector<LaurentPolynomial>& b, int n);
bool contains(const CyclicLattice& l, const LaurentPolynomial& p);

/// p lies in the principal ideal generated by 1 - t^n.
bool member_of_principal(const LaurentPolynomial& p, int n);

/// Sum of the coefficients whose exponent is 0 or 2 modulo n.
Integer f_n(const LaurentPolynomial& p, int n);

}  // namespace wld

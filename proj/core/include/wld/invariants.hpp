#pragma once

// Invariants of welded links: ordered linking numbers, the diagram group
// and core group, Alexander ideals, and finite-target counts.

#include <vector>

#include "wld/diagram.hpp"
#include "wld/finite_group.hpp"
#include "wld/free_group.hpp"
#include "wld/laurent.hpp"

namespace wld {

/// entry [i][j]: sum of signs of crossings with component i over j.
using LinkingMatrix = std::vector<std::vector<long long>>;

LinkingMatrix linking_matrix(const Diagram& d);

/// One generator per arc. A crossing with over arc y, incoming under arc x
/// and outgoing under arc z contributes z^-1 y x y^-1 when positive and
/// z^-1 y^-1 x y when negative.
GroupPresentation welded_group(const Diagram& d);

/// One generator per arc, relator y x^-1 y z^-1 per crossing.
GroupPresentation core_group(const Diagram& d);

using LaurentMatrix = std::vector<std::vector<LaurentPolynomial>>;

/// Fox derivatives of the relators with every generator sent to t;
/// rows are relators, columns generators.
LaurentMatrix alexander_matrix(const GroupPresentation& p);

/// Fraction-free (Bareiss) determinant of a square matrix.
LaurentPolynomial determinant(LaurentMatrix m);

/// Generators of the k-th elementary ideal of a presentation matrix with
/// `columns` columns: the (columns - k)-minors, normalized and deduplicated.
/// {1} for the whole ring, {} for the zero ideal.
std::vector<LaurentPolynomial> elementary_ideal(const LaurentMatrix& m, int columns, int k);

struct AlexanderResult {
  std::vector<LaurentPolynomial> ideal;
  LaurentPolynomial polynomial;  // gcd of the ideal, unit-normalized
};

AlexanderResult alexander(const Diagram& d, int k);

/// Number of homomorphisms from the presented group to G.
Integer hom_count(const GroupPresentation& p, const FiniteGroupTable& g);

/// Arc labellings by Z/n with 2y = x + z at every crossing.
Integer coloring_count(const Diagram& d, int n);

struct Abelianization {
  int free_rank = 0;
  std::vector<Integer> torsion;  // invariant factors > 1
};

Abelianization abelianization(const GroupPresentation& p);

}  // namespace wld

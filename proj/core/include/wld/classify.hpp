#pragma once

// Equivalence decisions modulo V(n) and V^n + UC, the Alexander-ideal
// obstruction to V^n-equivalence, and multiplexing of crossings.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wld/diagram.hpp"
#include "wld/ideal.hpp"

namespace wld {

enum class Relation : unsigned char { vn, vn_uc, v_power };
enum class Verdict : unsigned char { equivalent, inequivalent, inconclusive };

std::string to_string(Relation r);  // "vn", "vn-uc", "v^n"
std::string to_string(Verdict v);

/// Residue compared for one component pair: for V(n) the symmetric sum
/// lambda_ij + lambda_ji (i < j), for V^n + UC the ordered lambda_ij.
struct Residue {
  int i = 0;  // 0-based
  int j = 0;
  long long left = 0;
  long long right = 0;
};

struct EquivalenceVerdict {
  Relation relation = Relation::vn;
  int n = 1;
  Verdict verdict = Verdict::inconclusive;
  int mu_left = 1;
  int mu_right = 1;
  std::vector<Residue> residues;
  /// Component order applied to the right-hand diagram (any-order mode).
  std::optional<std::vector<int>> permutation;
  std::optional<int> obstruction_k;
  std::optional<std::pair<CyclicLattice, CyclicLattice>> lattices;
};

/// Recomputes the verdict from the certificate fields alone.
Verdict verdict_from_certificate(const EquivalenceVerdict& v);

/// Exact decision. Even n: always equivalent. Odd n: equal component counts
/// and equal (lambda_ij + lambda_ji) mod n for all i < j. With `any_order`
/// the right-hand components may be permuted.
EquivalenceVerdict decide_vn(const Diagram& l, const Diagram& r, int n, bool any_order = false);

/// Exact decision: equal component counts and lambda_ij equal mod n for
/// every ordered pair.
EquivalenceVerdict decide_vn_uc(const Diagram& l, const Diagram& r, int n, bool any_order = false);

/// Least k <= kmax whose elementary ideals differ modulo 1 - t^n
/// (verdict inequivalent, with the two lattices), else inconclusive.
EquivalenceVerdict obstruct_vn(const Diagram& l, const Diagram& r, int n, int kmax);

/// Replaces every crossing whose over-passage lies on component j by |m_j|
/// crossings of sign sign(c) sign(m_j): consecutive over-passages on the
/// over strand, under-passages consecutive in the same order.
Diagram multiplex(const Diagram& d, const std::vector<int>& m);

}  // namespace wld

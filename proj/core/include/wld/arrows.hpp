#pragma once

// w-arrow presentations: a crossing-free base diagram decorated with signed
// arrows. Surgery turns each arrow into a classical crossing whose
// over-passage sits at the tail and under-passage at the head.
//
// Twist decorations are folded into the sign, so the arrow moves that only
// reposition arrows or trade twists (AR1-AR6) act trivially on this
// encoding. The remaining moves are carried out on the surgery image, where
// they coincide with the diagram moves:
//   AR7  tails exchange (OC)          AR8  isolated arrow (R1)
//   AR9  parallel inverse pair (R2)   AR10 slide (R3)
//   AR11 antiparallel inverse pair    AR12 isolated arrow, head first

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wld/diagram.hpp"
#include "wld/invariants.hpp"
#include "wld/moves.hpp"

namespace wld {

/// An arrow endpoint: component and slot. Slots order the endpoints along a
/// component; only their relative order matters.
struct ArrowEnd {
  int component = 0;
  int slot = 0;

  auto operator<=>(const ArrowEnd&) const = default;
};

struct WArrow {
  ArrowEnd tail;
  ArrowEnd head;
  int sign = 1;

  auto operator<=>(const WArrow&) const = default;
};

struct WArrowPresentation {
  Diagram base;
  std::vector<WArrow> arrows;

  friend bool operator==(const WArrowPresentation& a, const WArrowPresentation& b) {
    return a.base == b.base && a.arrows == b.arrows;
  }
};

/// Checks the base is crossing-free and endpoints are distinct and in range;
/// returns the presentation with slots renumbered 0..k-1 per component.
/// Throws std::invalid_argument.
WArrowPresentation normalized(const WArrowPresentation& p);

/// Arrow i becomes crossing i+1.
Diagram surgery(const WArrowPresentation& p);

/// One arrow per crossing, in increasing crossing-id order.
WArrowPresentation to_arrows(const Diagram& d);

enum class ArrowMove : unsigned char {
  ar1, ar2, ar3, ar4, ar5, ar6, ar7, ar8, ar9, ar10, ar11, ar12,
  heads_exchange,
  head_tail_exchange,
  h,        // heads exchange of arrows with equal signs
  h_prime,  // heads exchange of arrows with opposite signs
  head_tail_reversal,
  ends_exchange,
  a_twist,      // A(n)
  a_block,      // A^n
  a_twist_bar,  // Abar(n)
  a_block_bar,  // Abar^n
};

struct ArrowMoveKind {
  ArrowMove type = ArrowMove::ar1;
  int n = 1;
  Direction direction = Direction::reduce;
};

std::string to_string(ArrowMove m);
std::optional<ArrowMove> parse_arrow_move(std::string_view name);

/// Sites use the diagram-move schemas on the surgery image. Head-tail
/// reversal takes a ReduceSite naming one arrow (1-based); AR1-AR6 take an
/// empty ReduceSite.
std::vector<MoveSite> find_arrow_sites(const WArrowPresentation& p, ArrowMoveKind k);

/// Throws std::invalid_argument if the site does not match.
WArrowPresentation apply_arrow_move(const WArrowPresentation& p, ArrowMoveKind k, const MoveSite& site);

/// |a| arrows from strand i to strand j (1-based, i < j) on the trivial
/// mu-strand string link, sign of a, stacked in order.
WArrowPresentation build_H(int mu, int i, int j, long long a);
/// |b| arrows from strand j to strand i, sign of b.
WArrowPresentation build_Hbar(int mu, int i, int j, long long b);

/// Product of string-link presentations with equal strand counts: q is
/// placed after p on every strand.
WArrowPresentation stack(const WArrowPresentation& p, const WArrowPresentation& q);

/// Upper-triangular residue matrix (entries with i < j), 0-based indices.
using ResidueMatrix = std::vector<std::vector<long long>>;

/// a_ij = (lambda_ij + lambda_ji) mod n of the closure, for odd n.
ResidueMatrix normalize_vn(const WArrowPresentation& p, int n);
/// (lambda_ij mod n, lambda_ji mod n) for i < j.
std::pair<ResidueMatrix, ResidueMatrix> normalize_vn_uc(const WArrowPresentation& p, int n);

/// The presentation product of H_ij(a_ij) over i < j.
WArrowPresentation vn_normal_form(int mu, const ResidueMatrix& a);
/// Product of H_ij(a_ij) H̄_ij(b_ij) over i < j.
WArrowPresentation vn_uc_normal_form(int mu, const ResidueMatrix& a, const ResidueMatrix& b);

/// Text format: "arrows" header, the base diagram lines, then lines
/// "arrow: <component>.<slot> <component>.<slot> <+|->" (tail, head;
/// 1-based components).
WArrowPresentation parse_arrows(std::string_view text);
std::string serialize(const WArrowPresentation& p);

}  // namespace wld

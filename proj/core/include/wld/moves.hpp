#pragma once

// Local moves on Gauss codes: welded Reidemeister moves, the forbidden
// moves OC/UC, crossing virtualization, and the generalized
// virtualizations V(n), V^n with their antiparallel variants.
//
// Gauss-code semantics of the generalized moves:
//   V^n      n crossings of one sign; the first strand passes over all of
//            them consecutively, the second passes under them consecutively
//            in the same order.
//   Vbar^n   as V^n with the second strand running the other way.
//   V(n)     an n half-twist block; the over strand alternates and all
//            crossings share one sign. For even n the two strands are
//            spliced at the far end of the block, which merges two
//            components or splits one.
//   Vbar(n)  odd n only; a twist block on antiparallel strands.
// With n = 1 all four coincide with crossing virtualization.

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wld/diagram.hpp"
#include "wld/random.hpp"

namespace wld {

enum class MoveType : unsigned char {
  r1,
  r2,
  r3,
  oc,
  uc,
  v,
  twist,      // V(n)
  block,      // V^n
  twist_bar,  // Vbar(n)
  block_bar,  // Vbar^n
};

enum class Direction : unsigned char { expand, reduce };

struct MoveKind {
  MoveType type = MoveType::r1;
  int n = 1;
  Direction direction = Direction::reduce;

  auto operator<=>(const MoveKind&) const = default;
};

/// Collapses V(1), V^1, Vbar(1), Vbar^1 onto V; rejects n < 1 and Vbar(n)
/// with even n.
MoveKind normalized(MoveKind k);

/// R3, OC and UC are their own inverses and have a single direction.
bool is_self_inverse(MoveType t) noexcept;

/// Both directions of a move family (one entry for self-inverse moves).
std::vector<MoveKind> both_directions(MoveType t, int n = 1);

/// Parses a comma-separated list of r1,r2,r3,oc,uc,v,v(n):N,v^n:N,
/// vbar(n):N,vbar^n:N into move kinds (both directions each).
std::vector<MoveKind> parse_move_list(std::string_view csv);

std::string family_name(MoveType t, int n);
std::string to_string(const MoveKind& k);

struct Gap {
  int component = 0;
  int index = 0;

  auto operator<=>(const Gap&) const = default;
};

/// Removal of the listed crossings (R1, R2, V, and the A-strand order of a
/// V(n)/V^n block). When an even V(n) reduction cuts one component in two,
/// one piece moves to index `target` and the other keeps the old index;
/// `move_first` moves the piece that carries the end of the A strand.
struct ReduceSite {
  std::vector<int> crossings;
  int target = -1;
  bool move_first = false;

  auto operator<=>(const ReduceSite&) const = default;
};

/// Exchange of the passage at `index` with the next one (OC, UC).
struct SwapSite {
  int component = 0;
  int index = 0;

  auto operator<=>(const SwapSite&) const = default;
};

/// R3 triangle: a = top over middle, b = top over bottom, c = middle over
/// bottom.
struct TriangleSite {
  int a = 0;
  int b = 0;
  int c = 0;

  auto operator<=>(const TriangleSite&) const = default;
};

/// Insertion of a crossing block. `first` receives the over (or twist A)
/// passages, `second` the matching under (twist B) passages. When both gaps
/// coincide, `second_first` puts the second block first.
struct InsertSite {
  Gap first;
  Gap second;
  int sign = 1;
  bool second_first = false;
  bool antiparallel = false;  // R2 only
  int target = -1;            // even V(n) expansions that split a component
  bool move_first = false;    // as in ReduceSite, for the piece ending at `first`

  auto operator<=>(const InsertSite&) const = default;
};

using MoveSite = std::variant<ReduceSite, SwapSite, TriangleSite, InsertSite>;

std::string to_string(const MoveSite& s);

/// Every applicable site, sorted.
std::vector<MoveSite> find_sites(const Diagram& d, MoveKind k);

/// Throws std::invalid_argument if the site is not applicable.
Diagram apply(const Diagram& d, MoveKind k, const MoveSite& site);

/// Uniformly drawn site (expansion parameters are sampled directly rather
/// than enumerated); nullopt if none exists.
std::optional<MoveSite> random_site(const Diagram& d, MoveKind k, Rng& rng);

/// Exactly `steps` random moves drawn from `kinds`. Kinds with no site are
/// redrawn; throws std::runtime_error if no kind has a site.
Diagram scramble(const Diagram& d, const std::vector<MoveKind>& kinds, int steps, std::uint64_t seed);

struct MoveStep {
  MoveKind kind;
  MoveSite site;
};

/// Breadth-first search for a move sequence taking `from` to `to` (equal up
/// to crossing relabelling and basepoint rotation). States with more than
/// `max_crossings` crossings are not explored. nullopt means nothing was
/// found within the bounds, not that no sequence exists.
std::optional<std::vector<MoveStep>> search_path(const Diagram& from, const Diagram& to,
                                                 const std::vector<MoveKind>& kinds, int max_crossings,
                                                 int max_depth);

Diagram replay(const Diagram& d, const std::vector<MoveStep>& steps);

}  // namespace wld

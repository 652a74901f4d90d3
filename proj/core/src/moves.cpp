#include "wld/moves.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace wld {

MoveKind normalized(MoveKind k) {
  switch (k.type) {
    case MoveType::twist:
    case MoveType::block:
    case MoveType::twist_bar:
    case MoveType::block_bar:
      if (k.n < 1) throw std::invalid_argument("move parameter n must be at least 1");
      if (k.type == MoveType::twist_bar && k.n % 2 == 0)
        throw std::invalid_argument("vbar(n) is defined for odd n only");
      if (k.n == 1) return {MoveType::v, 1, k.direction};
      return k;
    case MoveType::r3:
    case MoveType::oc:
    case MoveType::uc:
      return {k.type, 1, Direction::reduce};
    default:
      return {k.type, 1, k.direction};
  }
}

bool is_self_inverse(MoveType t) noexcept {
  return t == MoveType::r3 || t == MoveType::oc || t == MoveType::uc;
}

std::vector<MoveKind> both_directions(MoveType t, int n) {
  const MoveKind k = normalized({t, n, Direction::reduce});
  if (is_self_inverse(k.type)) return {k};
  return {{k.type, k.n, Direction::expand}, {k.type, k.n, Direction::reduce}};
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

int parse_parameter(std::string_view name, std::string_view digits) {
  int n = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || n < 1)
    throw std::invalid_argument("bad move parameter in '" + std::string(name) + "'");
  return n;
}

}  // namespace

std::vector<MoveKind> parse_move_list(std::string_view csv) {
  std::vector<MoveKind> out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    std::size_t end = csv.find(',', start);
    if (end == std::string_view::npos) end = csv.size();
    const std::string_view name = trim(csv.substr(start, end - start));
    start = end + 1;
    if (name.empty()) {
      if (end == csv.size()) break;
      continue;
    }
    MoveType type;
    int n = 1;
    if (name == "r1") type = MoveType::r1;
    else if (name == "r2") type = MoveType::r2;
    else if (name == "r3") type = MoveType::r3;
    else if (name == "oc") type = MoveType::oc;
    else if (name == "uc") type = MoveType::uc;
    else if (name == "v") type = MoveType::v;
    else {
      const auto colon = name.find(':');
      if (colon == std::string_view::npos) throw std::invalid_argument("unknown move '" + std::string(name) + "'");
      const auto head = name.substr(0, colon);
      n = parse_parameter(name, name.substr(colon + 1));
      if (head == "v(n)") type = MoveType::twist;
      else if (head == "v^n") type = MoveType::block;
      else if (head == "vbar(n)") type = MoveType::twist_bar;
      else if (head == "vbar^n") type = MoveType::block_bar;
      else throw std::invalid_argument("unknown move '" + std::string(name) + "'");
    }
    for (const auto& k : both_directions(type, n)) out.push_back(k);
    if (end == csv.size()) break;
  }
  return out;
}

std::string family_name(MoveType t, int n) {
  switch (t) {
    case MoveType::r1: return "r1";
    case MoveType::r2: return "r2";
    case MoveType::r3: return "r3";
    case MoveType::oc: return "oc";
    case MoveType::uc: return "uc";
    case MoveType::v: return "v";
    case MoveType::twist: return "v(n):" + std::to_string(n);
    case MoveType::block: return "v^n:" + std::to_string(n);
    case MoveType::twist_bar: return "vbar(n):" + std::to_string(n);
    case MoveType::block_bar: return "vbar^n:" + std::to_string(n);
  }
  return "?";
}

std::string to_string(const MoveKind& k) {
  std::string s = family_name(k.type, k.n);
  if (!is_self_inverse(k.type)) s += k.direction == Direction::expand ? " expand" : " reduce";
  return s;
}

std::string to_string(const MoveSite& s) {
  struct Visitor {
    std::string operator()(const ReduceSite& r) const {
      std::string out = "crossings";
      for (int c : r.crossings) out += " " + std::to_string(c);
      if (r.target >= 0) out += " target " + std::to_string(r.target + 1) + (r.move_first ? " first" : "");
      return out;
    }
    std::string operator()(const SwapSite& w) const {
      return "swap " + std::to_string(w.component + 1) + "." + std::to_string(w.index + 1);
    }
    std::string operator()(const TriangleSite& t) const {
      return "triangle " + std::to_string(t.a) + " " + std::to_string(t.b) + " " + std::to_string(t.c);
    }
    std::string operator()(const InsertSite& i) const {
      std::string out = "insert " + std::to_string(i.first.component + 1) + "." + std::to_string(i.first.index) +
                        " " + std::to_string(i.second.component + 1) + "." + std::to_string(i.second.index) +
                        (i.sign > 0 ? " +" : " -");
      if (i.second_first) out += " second-first";
      if (i.antiparallel) out += " antiparallel";
      if (i.target >= 0) out += " target " + std::to_string(i.target + 1) + (i.move_first ? " first" : "");
      return out;
    }
  };
  return std::visit(Visitor{}, s);
}

namespace {

// ---------------------------------------------------------------- helpers

Position passage_of(const Diagram& d, int crossing, Role role) {
  const auto& info = d.crossing(crossing);
  return role == Role::over ? info.over : info.under;
}

bool follows(const Diagram& d, Position p, Position q) {
  return p.component == q.component && d.next_index(p.component, p.index) == q.index;
}

bool adjacent(const Diagram& d, Position p, Position q) { return follows(d, p, q) || follows(d, q, p); }

std::vector<Gap> all_gaps(const Diagram& d) {
  std::vector<Gap> gaps;
  for (int c = 0; c < d.mu(); ++c) {
    const int len = static_cast<int>(d.component(c).size());
    const int count = d.is_string_link() ? len + 1 : std::max(len, 1);
    for (int i = 0; i < count; ++i) gaps.push_back({c, i});
  }
  return gaps;
}

bool valid_gap(const Diagram& d, Gap g) {
  if (g.component < 0 || g.component >= d.mu()) return false;
  const int len = static_cast<int>(d.component(g.component).size());
  const int count = d.is_string_link() ? len + 1 : std::max(len, 1);
  return g.index >= 0 && g.index < count;
}

Diagram remove_crossings(const Diagram& d, const std::vector<int>& ids) {
  const std::set<int> drop(ids.begin(), ids.end());
  auto comps = d.components();
  for (auto& comp : comps)
    comp.erase(std::remove_if(comp.begin(), comp.end(), [&](const Passage& p) { return drop.count(p.crossing) != 0; }),
               comp.end());
  return Diagram(d.kind(), std::move(comps));
}

struct Inserted {
  std::vector<Component> comps;
  Position cut_first;  // just after the first block
  Position cut_second;
};

Inserted insert_two(const Diagram& d, Gap g1, const Component& b1, Gap g2, const Component& b2,
                    bool second_first) {
  Inserted out{d.components(), {}, {}};
  auto insert_at = [&](Component& comp, int idx, const Component& block) {
    comp.insert(comp.begin() + idx, block.begin(), block.end());
  };
  if (g1.component != g2.component) {
    insert_at(out.comps[static_cast<std::size_t>(g1.component)], g1.index, b1);
    insert_at(out.comps[static_cast<std::size_t>(g2.component)], g2.index, b2);
    out.cut_first = {g1.component, g1.index + static_cast<int>(b1.size())};
    out.cut_second = {g2.component, g2.index + static_cast<int>(b2.size())};
    return out;
  }
  const Component& old = d.component(g1.component);
  const int len = static_cast<int>(old.size());
  Component merged;
  int start1 = -1, start2 = -1;
  auto emit = [&](const Component& block, int& start) {
    start = static_cast<int>(merged.size());
    merged.insert(merged.end(), block.begin(), block.end());
  };
  for (int idx = 0; idx <= len; ++idx) {
    const bool here1 = g1.index == idx, here2 = g2.index == idx;
    if (here1 && here2) {
      if (second_first) {
        emit(b2, start2);
        emit(b1, start1);
      } else {
        emit(b1, start1);
        emit(b2, start2);
      }
    } else if (here1) {
      emit(b1, start1);
    } else if (here2) {
      emit(b2, start2);
    }
    if (idx < len) merged.push_back(old[static_cast<std::size_t>(idx)]);
  }
  out.comps[static_cast<std::size_t>(g1.component)] = std::move(merged);
  out.cut_first = {g1.component, start1 + static_cast<int>(b1.size())};
  out.cut_second = {g2.component, start2 + static_cast<int>(b2.size())};
  return out;
}

// Reconnects the strand leaving cut `a` to the continuation of cut `b` and
// vice versa. Cuts sit between passages of closed components. A split keeps
// one piece at the old index and moves the other to `target`; `move_first`
// picks the piece that ends at cut `a`.
std::vector<Component> splice(std::vector<Component> comps, Position a, Position b, int target,
                              bool move_first) {
  auto norm = [&](Position p) {
    const int len = static_cast<int>(comps[static_cast<std::size_t>(p.component)].size());
    if (p.index >= len) p.index = 0;
    return p;
  };
  a = norm(a);
  b = norm(b);
  if (a.component != b.component) {
    if (a.component > b.component) std::swap(a, b);
    const Component& x = comps[static_cast<std::size_t>(a.component)];
    const Component& y = comps[static_cast<std::size_t>(b.component)];
    Component merged(x.begin(), x.begin() + a.index);
    merged.insert(merged.end(), y.begin() + b.index, y.end());
    merged.insert(merged.end(), y.begin(), y.begin() + b.index);
    merged.insert(merged.end(), x.begin() + a.index, x.end());
    comps[static_cast<std::size_t>(a.component)] = std::move(merged);
    comps.erase(comps.begin() + b.component);
    return comps;
  }
  const int c = a.component;
  const Component s = comps[static_cast<std::size_t>(c)];
  if (a.index == b.index) throw std::logic_error("splice: coincident cuts");
  // cyclic segment [from, to)
  auto segment = [&](int from, int to) {
    Component out;
    for (int i = from; i != to; i = (i + 1) % static_cast<int>(s.size())) out.push_back(s[static_cast<std::size_t>(i)]);
    return out;
  };
  Component moved = segment(b.index, a.index), kept = segment(a.index, b.index);
  if (!move_first) std::swap(moved, kept);
  comps[static_cast<std::size_t>(c)] = std::move(kept);
  const int size_after = static_cast<int>(comps.size()) + 1;
  if (target <= c || target >= size_after) throw std::invalid_argument("splice: bad target component index");
  comps.insert(comps.begin() + target, std::move(moved));
  return comps;
}

// ------------------------------------------------------- chain blocks

struct BlockPattern {
  std::vector<Role> a_roles;
  bool b_reversed = false;
  bool splices = false;
};

BlockPattern pattern(MoveKind k) {
  BlockPattern p;
  const int n = k.n;
  p.a_roles.resize(static_cast<std::size_t>(n), Role::over);
  if (k.type == MoveType::twist || k.type == MoveType::twist_bar)
    for (int t = 1; t < n; t += 2) p.a_roles[static_cast<std::size_t>(t)] = Role::under;
  p.b_reversed = k.type == MoveType::twist_bar || k.type == MoveType::block_bar;
  p.splices = k.type == MoveType::twist && n % 2 == 0;
  return p;
}

struct ChainMatch {
  std::vector<int> crossings;
  Position a_last;
  Position b_last;  // last B passage in reading order
};

std::optional<ChainMatch> match_chain(const Diagram& d, int k1, const BlockPattern& p) {
  const int n = static_cast<int>(p.a_roles.size());
  const int sign = d.crossing(k1).sign;
  ChainMatch m;
  Position pos = d.crossing(k1).over;
  std::vector<Position> b_positions;
  for (int t = 0; t < n; ++t) {
    if (t > 0) {
      const int next = d.next_index(pos.component, pos.index);
      if (next < 0) return std::nullopt;
      pos.index = next;
    }
    const Passage& pass = d.at(pos);
    if (pass.role != p.a_roles[static_cast<std::size_t>(t)] || pass.sign != sign) return std::nullopt;
    if (std::find(m.crossings.begin(), m.crossings.end(), pass.crossing) != m.crossings.end())
      return std::nullopt;
    m.crossings.push_back(pass.crossing);
    b_positions.push_back(passage_of(d, pass.crossing, opposite(pass.role)));
  }
  m.a_last = pos;
  for (int t = 1; t < n; ++t) {
    const Position prev = b_positions[static_cast<std::size_t>(t - 1)];
    const Position cur = b_positions[static_cast<std::size_t>(t)];
    if (p.b_reversed ? !follows(d, cur, prev) : !follows(d, prev, cur)) return std::nullopt;
  }
  m.b_last = p.b_reversed ? b_positions.front() : b_positions.back();
  return m;
}

std::vector<MoveSite> chain_reduce_sites(const Diagram& d, MoveKind k) {
  const BlockPattern p = pattern(k);
  std::vector<MoveSite> out;
  if (p.splices && d.is_string_link()) return out;
  for (int id : d.crossing_ids()) {
    auto m = match_chain(d, id, p);
    if (!m) continue;
    if (p.splices && m->a_last.component == m->b_last.component) {
      for (int t = m->a_last.component + 1; t <= d.mu(); ++t)
        for (bool first : {false, true}) out.push_back(ReduceSite{m->crossings, t, first});
    } else {
      out.push_back(ReduceSite{m->crossings, -1});
    }
  }
  return out;
}

Diagram chain_reduce(const Diagram& d, MoveKind k, const ReduceSite& site) {
  const BlockPattern p = pattern(k);
  if (site.crossings.empty() || !d.has_crossing(site.crossings.front()))
    throw std::invalid_argument("site not applicable");
  auto m = match_chain(d, site.crossings.front(), p);
  if (!m || m->crossings != site.crossings) throw std::invalid_argument("site not applicable");
  if (!p.splices) {
    if (site.target != -1 || site.move_first) throw std::invalid_argument("site not applicable");
    return remove_crossings(d, site.crossings);
  }
  if (d.is_string_link()) throw std::invalid_argument("site not applicable");
  const bool splits = m->a_last.component == m->b_last.component;
  if (splits != (site.target >= 0) || (!splits && site.move_first)) throw std::invalid_argument("site not applicable");
  auto comps = splice(d.components(), {m->a_last.component, m->a_last.index + 1},
                      {m->b_last.component, m->b_last.index + 1}, site.target, site.move_first);
  return remove_crossings(Diagram(d.kind(), std::move(comps)), site.crossings);
}

struct ChainBlocks {
  Component a;
  Component b;
};

ChainBlocks chain_blocks(const Diagram& d, const BlockPattern& p, int sign) {
  ChainBlocks out;
  const int base = d.max_crossing_id();
  const int n = static_cast<int>(p.a_roles.size());
  for (int t = 0; t < n; ++t) {
    const Role r = p.a_roles[static_cast<std::size_t>(t)];
    out.a.push_back({base + t + 1, r, sign});
    out.b.push_back({base + t + 1, opposite(r), sign});
  }
  if (p.b_reversed) std::reverse(out.b.begin(), out.b.end());
  return out;
}

bool insert_site_shape_ok(const Diagram& d, const InsertSite& s) {
  if (!valid_gap(d, s.first) || !valid_gap(d, s.second)) return false;
  if (s.sign != 1 && s.sign != -1) return false;
  if (s.second_first && s.first != s.second) return false;
  return true;
}

Diagram chain_expand(const Diagram& d, MoveKind k, const InsertSite& s) {
  const BlockPattern p = pattern(k);
  if (!insert_site_shape_ok(d, s) || s.antiparallel) throw std::invalid_argument("site not applicable");
  if (p.splices && d.is_string_link()) throw std::invalid_argument("site not applicable");
  const bool splits = p.splices && s.first.component == s.second.component;
  if (splits != (s.target >= 0) || (!splits && s.move_first)) throw std::invalid_argument("site not applicable");
  const auto blocks = chain_blocks(d, p, s.sign);
  auto ins = insert_two(d, s.first, blocks.a, s.second, blocks.b, s.second_first);
  if (!p.splices) return Diagram(d.kind(), std::move(ins.comps));
  return Diagram(d.kind(), splice(std::move(ins.comps), ins.cut_first, ins.cut_second, s.target, s.move_first));
}

// Parameters of one insertion: all pairs of gaps, both signs, both orders
// for coincident gaps, split targets where needed.
template <typename F>
void for_each_insert(const Diagram& d, bool with_antiparallel, bool splits, F&& f) {
  const auto gaps = all_gaps(d);
  for (const Gap& g1 : gaps) {
    for (const Gap& g2 : gaps) {
      for (int sign : {1, -1}) {
        for (int order = 0; order < (g1 == g2 ? 2 : 1); ++order) {
          for (int anti = 0; anti < (with_antiparallel ? 2 : 1); ++anti) {
            InsertSite s{g1, g2, sign, order == 1, anti == 1, -1};
            if (splits && g1.component == g2.component) {
              for (int t = g1.component + 1; t <= d.mu(); ++t) {
                s.target = t;
                for (bool first : {false, true}) {
                  s.move_first = first;
                  f(s);
                }
              }
              s.move_first = false;
            } else {
              f(s);
            }
          }
        }
      }
    }
  }
}

// ---------------------------------------------------------------- R1, R2

std::vector<MoveSite> r1_reduce_sites(const Diagram& d) {
  std::vector<MoveSite> out;
  for (int id : d.crossing_ids()) {
    const auto& info = d.crossing(id);
    if (adjacent(d, info.over, info.under)) out.push_back(ReduceSite{{id}, -1});
  }
  return out;
}

std::optional<std::pair<int, int>> r2_pair(const Diagram& d, int a, int b) {
  if (a == b || !d.has_crossing(a) || !d.has_crossing(b)) return std::nullopt;
  const auto& ia = d.crossing(a);
  const auto& ib = d.crossing(b);
  if (ia.sign != -ib.sign) return std::nullopt;
  if (!adjacent(d, ia.over, ib.over) || !adjacent(d, ia.under, ib.under)) return std::nullopt;
  return std::pair{std::min(a, b), std::max(a, b)};
}

std::vector<MoveSite> r2_reduce_sites(const Diagram& d) {
  std::set<std::pair<int, int>> pairs;
  for (int a : d.crossing_ids()) {
    const Position o = d.crossing(a).over;
    const int next = d.next_index(o.component, o.index);
    if (next < 0) continue;
    const Passage& q = d.at({o.component, next});
    if (q.role != Role::over) continue;
    if (auto pr = r2_pair(d, a, q.crossing)) pairs.insert(*pr);
  }
  std::vector<MoveSite> out;
  for (auto [a, b] : pairs) out.push_back(ReduceSite{{a, b}, -1});
  return out;
}

Diagram r2_expand(const Diagram& d, const InsertSite& s) {
  if (!insert_site_shape_ok(d, s) || s.target != -1 || s.move_first) throw std::invalid_argument("site not applicable");
  const int a = d.max_crossing_id() + 1, b = a + 1;
  const Component overs{{a, Role::over, s.sign}, {b, Role::over, -s.sign}};
  Component unders{{a, Role::under, s.sign}, {b, Role::under, -s.sign}};
  if (s.antiparallel) std::swap(unders[0], unders[1]);
  return Diagram(d.kind(), insert_two(d, s.first, overs, s.second, unders, s.second_first).comps);
}

// ---------------------------------------------------------------- R3

// Three lines forming a triangle, oriented along the strands; with
// s = +1 when the pair is read in the order (a,b), (a,c), (c,b) on the top,
// middle and bottom strands respectively, a planar triangle exists iff
//   sign(a) s_T s_M = -sign(b) s_T s_B = -sign(c) s_M s_B.
bool is_r3(const Diagram& d, int a, int b, int c) {
  if (a == b || b == c || a == c) return false;
  if (!d.has_crossing(a) || !d.has_crossing(b) || !d.has_crossing(c)) return false;
  const auto& ia = d.crossing(a);
  const auto& ib = d.crossing(b);
  const auto& ic = d.crossing(c);
  auto orders = [&](Position first, Position second) {
    std::vector<int> s;
    if (follows(d, first, second)) s.push_back(1);
    if (follows(d, second, first)) s.push_back(-1);
    return s;
  };
  const auto st = orders(ia.over, ib.over);
  const auto sm = orders(ia.under, ic.over);
  const auto sb = orders(ic.under, ib.under);
  for (int t : st)
    for (int m : sm)
      for (int bo : sb) {
        const int chi = ia.sign * t * m;
        if (-ib.sign * t * bo == chi && -ic.sign * m * bo == chi) return true;
      }
  return false;
}

std::vector<MoveSite> r3_sites(const Diagram& d) {
  std::set<TriangleSite> found;
  auto neighbours = [&](Position p) {
    std::vector<Position> out;
    const int nx = d.next_index(p.component, p.index);
    const int pv = d.prev_index(p.component, p.index);
    if (nx >= 0) out.push_back({p.component, nx});
    if (pv >= 0 && pv != nx) out.push_back({p.component, pv});
    return out;
  };
  for (int a : d.crossing_ids()) {
    const auto& ia = d.crossing(a);
    for (Position pb : neighbours(ia.over)) {
      const Passage& qb = d.at(pb);
      if (qb.role != Role::over) continue;
      for (Position pc : neighbours(ia.under)) {
        const Passage& qc = d.at(pc);
        if (qc.role != Role::over) continue;
        if (is_r3(d, a, qb.crossing, qc.crossing)) found.insert({a, qb.crossing, qc.crossing});
      }
    }
  }
  return {found.begin(), found.end()};
}

Diagram r3_apply(const Diagram& d, const TriangleSite& s) {
  if (!is_r3(d, s.a, s.b, s.c)) throw std::invalid_argument("site not applicable");
  auto comps = d.components();
  auto swap_at = [&](Position p, Position q) {
    std::swap(comps[static_cast<std::size_t>(p.component)][static_cast<std::size_t>(p.index)],
              comps[static_cast<std::size_t>(q.component)][static_cast<std::size_t>(q.index)]);
  };
  const auto& ia = d.crossing(s.a);
  const auto& ib = d.crossing(s.b);
  const auto& ic = d.crossing(s.c);
  swap_at(ia.over, ib.over);
  swap_at(ia.under, ic.over);
  swap_at(ib.under, ic.under);
  return Diagram(d.kind(), std::move(comps));
}

// ---------------------------------------------------------------- OC, UC

std::vector<MoveSite> swap_sites(const Diagram& d, Role role) {
  std::vector<MoveSite> out;
  for (int c = 0; c < d.mu(); ++c) {
    const auto& comp = d.component(c);
    const int len = static_cast<int>(comp.size());
    for (int i = 0; i < len; ++i) {
      const int j = d.next_index(c, i);
      if (j < 0 || j == i) continue;
      if (len == 2 && i == 1) continue;  // same exchange as i = 0
      if (comp[static_cast<std::size_t>(i)].role == role && comp[static_cast<std::size_t>(j)].role == role)
        out.push_back(SwapSite{c, i});
    }
  }
  return out;
}

Diagram swap_apply(const Diagram& d, Role role, const SwapSite& s) {
  if (s.component < 0 || s.component >= d.mu()) throw std::invalid_argument("site not applicable");
  const auto& comp = d.component(s.component);
  const int len = static_cast<int>(comp.size());
  if (s.index < 0 || s.index >= len || (len == 2 && s.index == 1)) throw std::invalid_argument("site not applicable");
  const int j = d.next_index(s.component, s.index);
  if (j < 0 || j == s.index || comp[static_cast<std::size_t>(s.index)].role != role ||
      comp[static_cast<std::size_t>(j)].role != role)
    throw std::invalid_argument("site not applicable");
  auto comps = d.components();
  std::swap(comps[static_cast<std::size_t>(s.component)][static_cast<std::size_t>(s.index)],
            comps[static_cast<std::size_t>(s.component)][static_cast<std::size_t>(j)]);
  return Diagram(d.kind(), std::move(comps));
}

template <typename T>
const T& site_as(const MoveSite& s) {
  if (const T* p = std::get_if<T>(&s)) return *p;
  throw std::invalid_argument("site schema does not match move kind");
}

bool contains_site(const std::vector<MoveSite>& sites, const MoveSite& s) {
  return std::find(sites.begin(), sites.end(), s) != sites.end();
}

int crossings_added(MoveKind k) {
  switch (k.type) {
    case MoveType::r1:
    case MoveType::v:
      return 1;
    case MoveType::r2:
      return 2;
    case MoveType::r3:
    case MoveType::oc:
    case MoveType::uc:
      return 0;
    default:
      return k.n;
  }
}

}  // namespace

std::vector<MoveSite> find_sites(const Diagram& d, MoveKind k) {
  k = normalized(k);
  std::vector<MoveSite> out;
  const bool expand = k.direction == Direction::expand;
  switch (k.type) {
    case MoveType::r1:
      if (!expand) {
        out = r1_reduce_sites(d);
      } else {
        for (const Gap& g : all_gaps(d))
          for (int sign : {1, -1})
            for (int order = 0; order < 2; ++order) out.push_back(InsertSite{g, g, sign, order == 1, false, -1});
      }
      break;
    case MoveType::r2:
      if (!expand) out = r2_reduce_sites(d);
      else for_each_insert(d, true, false, [&](const InsertSite& s) { out.push_back(s); });
      break;
    case MoveType::r3:
      out = r3_sites(d);
      break;
    case MoveType::oc:
      out = swap_sites(d, Role::over);
      break;
    case MoveType::uc:
      out = swap_sites(d, Role::under);
      break;
    default: {
      if (!expand) {
        out = chain_reduce_sites(d, k);
      } else {
        const BlockPattern p = pattern(k);
        if (p.splices && d.is_string_link()) break;
        for_each_insert(d, false, p.splices, [&](const InsertSite& s) { out.push_back(s); });
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Diagram apply(const Diagram& d, MoveKind k, const MoveSite& site) {
  k = normalized(k);
  const bool expand = k.direction == Direction::expand;
  switch (k.type) {
    case MoveType::r1: {
      if (!expand) {
        const auto& r = site_as<ReduceSite>(site);
        if (!contains_site(r1_reduce_sites(d), site)) throw std::invalid_argument("site not applicable");
        return remove_crossings(d, r.crossings);
      }
      const auto& s = site_as<InsertSite>(site);
      if (!insert_site_shape_ok(d, s) || s.first != s.second || s.antiparallel || s.target != -1 || s.move_first)
        throw std::invalid_argument("site not applicable");
      const int id = d.max_crossing_id() + 1;
      return Diagram(d.kind(), insert_two(d, s.first, {{id, Role::over, s.sign}}, s.second,
                                          {{id, Role::under, s.sign}}, s.second_first)
                                   .comps);
    }
    case MoveType::r2: {
      if (!expand) {
        const auto& r = site_as<ReduceSite>(site);
        if (r.crossings.size() != 2 || r.target != -1 || r.move_first || !r2_pair(d, r.crossings[0], r.crossings[1]) ||
            r.crossings[0] > r.crossings[1])
          throw std::invalid_argument("site not applicable");
        return remove_crossings(d, r.crossings);
      }
      return r2_expand(d, site_as<InsertSite>(site));
    }
    case MoveType::r3:
      return r3_apply(d, site_as<TriangleSite>(site));
    case MoveType::oc:
      return swap_apply(d, Role::over, site_as<SwapSite>(site));
    case MoveType::uc:
      return swap_apply(d, Role::under, site_as<SwapSite>(site));
    default:
      if (!expand) return chain_reduce(d, k, site_as<ReduceSite>(site));
      return chain_expand(d, k, site_as<InsertSite>(site));
  }
}

std::optional<MoveSite> random_site(const Diagram& d, MoveKind k, Rng& rng) {
  k = normalized(k);
  const bool expand = k.direction == Direction::expand && !is_self_inverse(k.type);
  if (!expand) {
    auto sites = find_sites(d, k);
    if (sites.empty()) return std::nullopt;
    return sites[rng.below(sites.size())];
  }
  const auto gaps = all_gaps(d);
  const bool splits_possible = k.type == MoveType::twist && k.n % 2 == 0;
  if (splits_possible && d.is_string_link()) return std::nullopt;
  InsertSite s;
  s.first = gaps[rng.below(gaps.size())];
  s.second = k.type == MoveType::r1 ? s.first : gaps[rng.below(gaps.size())];
  s.sign = rng.sign();
  s.second_first = s.first == s.second && rng.below(2) == 1;
  s.antiparallel = k.type == MoveType::r2 && rng.below(2) == 1;
  if (splits_possible && s.first.component == s.second.component) {
    s.move_first = rng.below(2) == 1;
    s.target = s.first.component + 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(d.mu() - s.first.component)));
  }
  return s;
}

Diagram scramble(const Diagram& d, const std::vector<MoveKind>& kinds, int steps, std::uint64_t seed) {
  if (steps < 0) throw std::invalid_argument("steps must be non-negative");
  Rng rng(seed);
  Diagram cur = d;
  for (int step = 0; step < steps; ++step) {
    if (kinds.empty()) throw std::runtime_error("scramble: no move kinds given");
    std::vector<bool> empty(kinds.size(), false);
    std::size_t empty_count = 0;
    while (true) {
      const std::size_t pick = rng.below(kinds.size());
      if (empty[pick]) continue;
      auto site = random_site(cur, kinds[pick], rng);
      if (!site) {
        empty[pick] = true;
        if (++empty_count == kinds.size()) throw std::runtime_error("scramble: no applicable move");
        continue;
      }
      cur = apply(cur, kinds[pick], *site);
      break;
    }
  }
  return cur;
}

Diagram replay(const Diagram& d, const std::vector<MoveStep>& steps) {
  Diagram cur = d;
  for (const auto& s : steps) cur = apply(cur, s.kind, s.site);
  return cur;
}

std::optional<std::vector<MoveStep>> search_path(const Diagram& from, const Diagram& to,
                                                 const std::vector<MoveKind>& kinds, int max_crossings,
                                                 int max_depth) {
  if (max_crossings < 0 || max_depth < 0) throw std::invalid_argument("search bounds must be non-negative");
  const std::string goal = canonical_key(to);
  struct Node {
    Diagram diagram;
    int parent;
    std::optional<MoveStep> step;
    int depth;
  };
  std::vector<Node> nodes;
  std::unordered_map<std::string, int> seen;
  nodes.push_back({from, -1, std::nullopt, 0});
  const std::string start = canonical_key(from);
  seen.emplace(start, 0);
  auto path_to = [&](int idx) {
    std::vector<MoveStep> path;
    for (; nodes[static_cast<std::size_t>(idx)].parent >= 0; idx = nodes[static_cast<std::size_t>(idx)].parent)
      path.push_back(*nodes[static_cast<std::size_t>(idx)].step);
    std::reverse(path.begin(), path.end());
    return path;
  };
  if (start == goal) return std::vector<MoveStep>{};
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    if (nodes[head].depth >= max_depth) continue;
    const Diagram cur = nodes[head].diagram;
    const int depth = nodes[head].depth;
    for (const MoveKind& k : kinds) {
      if (k.direction == Direction::expand && !is_self_inverse(k.type) &&
          cur.crossing_count() + crossings_added(normalized(k)) > max_crossings)
        continue;
      for (const MoveSite& site : find_sites(cur, k)) {
        Diagram next = apply(cur, k, site);
        if (next.crossing_count() > max_crossings) continue;
        std::string key = canonical_key(next);
        if (seen.count(key)) continue;
        const int idx = static_cast<int>(nodes.size());
        seen.emplace(key, idx);
        nodes.push_back({std::move(next), static_cast<int>(head), MoveStep{k, site}, depth + 1});
        if (key == goal) return path_to(idx);
      }
    }
  }
  return std::nullopt;
}

}  // namespace wld

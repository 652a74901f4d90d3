#include "wld/arrows.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <stdexcept>
#include <tuple>

namespace wld {

WArrowPresentation normalized(const WArrowPresentation& p) {
  if (p.base.crossing_count() != 0) throw std::invalid_argument("arrow presentation base must be crossing-free");
  // (slot, arrow, is_tail) per component
  std::vector<std::vector<std::tuple<int, std::size_t, bool>>> ends(static_cast<std::size_t>(p.base.mu()));
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    const WArrow& a = p.arrows[i];
    if (a.sign != 1 && a.sign != -1) throw std::invalid_argument("arrow sign must be +1 or -1");
    for (const auto& [end, tail] : {std::pair{a.tail, true}, std::pair{a.head, false}}) {
      if (end.component < 0 || end.component >= p.base.mu())
        throw std::invalid_argument("arrow endpoint on a missing component");
      ends[static_cast<std::size_t>(end.component)].emplace_back(end.slot, i, tail);
    }
  }
  WArrowPresentation out{p.base, p.arrows};
  for (auto& list : ends) {
    std::sort(list.begin(), list.end());
    for (std::size_t r = 0; r < list.size(); ++r) {
      if (r > 0 && std::get<0>(list[r]) == std::get<0>(list[r - 1]))
        throw std::invalid_argument("two arrow endpoints share a slot");
      auto& a = out.arrows[std::get<1>(list[r])];
      (std::get<2>(list[r]) ? a.tail : a.head).slot = static_cast<int>(r);
    }
  }
  return out;
}

Diagram surgery(const WArrowPresentation& input) {
  const WArrowPresentation p = normalized(input);
  std::vector<Component> comps(static_cast<std::size_t>(p.base.mu()));
  std::vector<int> counts(comps.size(), 0);
  for (const auto& a : p.arrows) {
    ++counts[static_cast<std::size_t>(a.tail.component)];
    ++counts[static_cast<std::size_t>(a.head.component)];
  }
  for (std::size_t c = 0; c < comps.size(); ++c) comps[c].resize(static_cast<std::size_t>(counts[c]));
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    const WArrow& a = p.arrows[i];
    const int id = static_cast<int>(i) + 1;
    comps[static_cast<std::size_t>(a.tail.component)][static_cast<std::size_t>(a.tail.slot)] = {id, Role::over, a.sign};
    comps[static_cast<std::size_t>(a.head.component)][static_cast<std::size_t>(a.head.slot)] = {id, Role::under, a.sign};
  }
  return Diagram(p.base.kind(), std::move(comps));
}

WArrowPresentation to_arrows(const Diagram& d) {
  WArrowPresentation p{Diagram(d.kind(), std::vector<Component>(static_cast<std::size_t>(d.mu()))), {}};
  for (int id : d.crossing_ids()) {
    const auto& c = d.crossing(id);
    p.arrows.push_back({{c.over.component, c.over.index}, {c.under.component, c.under.index}, c.sign});
  }
  return p;
}

namespace {

constexpr std::array<std::pair<ArrowMove, std::string_view>, 22> kArrowMoveNames{{
    {ArrowMove::ar1, "ar1"},
    {ArrowMove::ar2, "ar2"},
    {ArrowMove::ar3, "ar3"},
    {ArrowMove::ar4, "ar4"},
    {ArrowMove::ar5, "ar5"},
    {ArrowMove::ar6, "ar6"},
    {ArrowMove::ar7, "ar7"},
    {ArrowMove::ar8, "ar8"},
    {ArrowMove::ar9, "ar9"},
    {ArrowMove::ar10, "ar10"},
    {ArrowMove::ar11, "ar11"},
    {ArrowMove::ar12, "ar12"},
    {ArrowMove::heads_exchange, "heads-exchange"},
    {ArrowMove::head_tail_exchange, "head-tail-exchange"},
    {ArrowMove::h, "h"},
    {ArrowMove::h_prime, "h'"},
    {ArrowMove::head_tail_reversal, "head-tail-reversal"},
    {ArrowMove::ends_exchange, "ends-exchange"},
    {ArrowMove::a_twist, "a(n)"},
    {ArrowMove::a_block, "a^n"},
    {ArrowMove::a_twist_bar, "abar(n)"},
    {ArrowMove::a_block_bar, "abar^n"},
}};

// Diagram move realizing an arrow move on the surgery image, if any.
std::optional<MoveKind> diagram_kind(ArrowMoveKind k) {
  switch (k.type) {
    case ArrowMove::ar7: return MoveKind{MoveType::oc, 1, Direction::reduce};
    case ArrowMove::ar8:
    case ArrowMove::ar12: return MoveKind{MoveType::r1, 1, k.direction};
    case ArrowMove::ar9:
    case ArrowMove::ar11: return MoveKind{MoveType::r2, 1, k.direction};
    case ArrowMove::ar10: return MoveKind{MoveType::r3, 1, Direction::reduce};
    case ArrowMove::heads_exchange:
    case ArrowMove::h:
    case ArrowMove::h_prime: return MoveKind{MoveType::uc, 1, Direction::reduce};
    case ArrowMove::a_twist: return normalized(MoveKind{MoveType::twist, k.n, k.direction});
    case ArrowMove::a_block: return normalized(MoveKind{MoveType::block, k.n, k.direction});
    case ArrowMove::a_twist_bar: return normalized(MoveKind{MoveType::twist_bar, k.n, k.direction});
    case ArrowMove::a_block_bar: return normalized(MoveKind{MoveType::block_bar, k.n, k.direction});
    default: return std::nullopt;
  }
}

bool follows(const Diagram& d, Position p, Position q) {
  return p.component == q.component && d.next_index(p.component, p.index) == q.index;
}

bool keep_site(const Diagram& d, ArrowMove m, const MoveSite& s) {
  switch (m) {
    case ArrowMove::ar12:
      if (const auto* r = std::get_if<ReduceSite>(&s)) {
        const auto& c = d.crossing(r->crossings.front());
        return follows(d, c.under, c.over);
      }
      return std::get<InsertSite>(s).second_first;
    case ArrowMove::ar9:
    case ArrowMove::ar11: {
      const bool want_anti = m == ArrowMove::ar11;
      if (const auto* r = std::get_if<ReduceSite>(&s)) {
        const auto& a = d.crossing(r->crossings[0]);
        const auto& b = d.crossing(r->crossings[1]);
        const bool ab_over = follows(d, a.over, b.over), ba_over = follows(d, b.over, a.over);
        const bool ab_under = follows(d, a.under, b.under), ba_under = follows(d, b.under, a.under);
        return want_anti ? (ab_over && ba_under) || (ba_over && ab_under) : (ab_over && ab_under) || (ba_over && ba_under);
      }
      return std::get<InsertSite>(s).antiparallel == want_anti;
    }
    case ArrowMove::h:
    case ArrowMove::h_prime: {
      const auto& w = std::get<SwapSite>(s);
      const auto& comp = d.component(w.component);
      const int j = d.next_index(w.component, w.index);
      const bool equal = comp[static_cast<std::size_t>(w.index)].sign == comp[static_cast<std::size_t>(j)].sign;
      return equal == (m == ArrowMove::h);
    }
    default:
      return true;
  }
}

// Adjacent passage pairs of distinct crossings; roles must differ when
// `mixed_only`.
std::vector<MoveSite> exchange_sites(const Diagram& d, bool mixed_only) {
  std::vector<MoveSite> out;
  for (int c = 0; c < d.mu(); ++c) {
    const auto& comp = d.component(c);
    const int len = static_cast<int>(comp.size());
    for (int i = 0; i < len; ++i) {
      const int j = d.next_index(c, i);
      if (j < 0 || j == i || (len == 2 && i == 1)) continue;
      const Passage& a = comp[static_cast<std::size_t>(i)];
      const Passage& b = comp[static_cast<std::size_t>(j)];
      if (a.crossing == b.crossing) continue;
      if (mixed_only && a.role == b.role) continue;
      out.push_back(SwapSite{c, i});
    }
  }
  return out;
}

}  // namespace

std::string to_string(ArrowMove m) {
  for (const auto& [k, name] : kArrowMoveNames)
    if (k == m) return std::string(name);
  return "?";
}

std::optional<ArrowMove> parse_arrow_move(std::string_view name) {
  for (const auto& [k, n] : kArrowMoveNames)
    if (n == name) return k;
  return std::nullopt;
}

std::vector<MoveSite> find_arrow_sites(const WArrowPresentation& p, ArrowMoveKind k) {
  const Diagram d = surgery(p);
  switch (k.type) {
    case ArrowMove::ar1:
    case ArrowMove::ar2:
    case ArrowMove::ar3:
    case ArrowMove::ar4:
    case ArrowMove::ar5:
    case ArrowMove::ar6:
      return {ReduceSite{}};
    case ArrowMove::head_tail_exchange:
      return exchange_sites(d, true);
    case ArrowMove::ends_exchange:
      return exchange_sites(d, false);
    case ArrowMove::head_tail_reversal: {
      std::vector<MoveSite> out;
      for (std::size_t i = 0; i < p.arrows.size(); ++i) out.push_back(ReduceSite{{static_cast<int>(i) + 1}, -1});
      return out;
    }
    default:
      break;
  }
  const MoveKind dk = *diagram_kind(k);
  std::vector<MoveSite> out;
  for (const auto& s : find_sites(d, dk))
    if (keep_site(d, k.type, s)) out.push_back(s);
  return out;
}

WArrowPresentation apply_arrow_move(const WArrowPresentation& p, ArrowMoveKind k, const MoveSite& site) {
  const Diagram d = surgery(p);
  switch (k.type) {
    case ArrowMove::ar1:
    case ArrowMove::ar2:
    case ArrowMove::ar3:
    case ArrowMove::ar4:
    case ArrowMove::ar5:
    case ArrowMove::ar6:
      if (site != MoveSite{ReduceSite{}}) throw std::invalid_argument("site not applicable");
      return normalized(p);
    case ArrowMove::head_tail_exchange:
    case ArrowMove::ends_exchange: {
      const auto sites = exchange_sites(d, k.type == ArrowMove::head_tail_exchange);
      if (std::find(sites.begin(), sites.end(), site) == sites.end()) throw std::invalid_argument("site not applicable");
      const auto& w = std::get<SwapSite>(site);
      auto comps = d.components();
      auto& comp = comps[static_cast<std::size_t>(w.component)];
      std::swap(comp[static_cast<std::size_t>(w.index)],
                comp[static_cast<std::size_t>(d.next_index(w.component, w.index))]);
      return to_arrows(Diagram(d.kind(), std::move(comps)));
    }
    case ArrowMove::head_tail_reversal: {
      const auto* r = std::get_if<ReduceSite>(&site);
      if (!r || r->crossings.size() != 1 || r->target != -1 || !d.has_crossing(r->crossings[0]))
        throw std::invalid_argument("site not applicable");
      auto comps = d.components();
      for (auto& comp : comps)
        for (auto& pass : comp)
          if (pass.crossing == r->crossings[0]) pass.role = opposite(pass.role);
      return to_arrows(Diagram(d.kind(), std::move(comps)));
    }
    default:
      break;
  }
  const MoveKind dk = *diagram_kind(k);
  const Diagram next = apply(d, dk, site);
  if (!keep_site(d, k.type, site)) throw std::invalid_argument("site not applicable");
  return to_arrows(next);
}

namespace {

WArrowPresentation arrow_block(int mu, int i, int j, long long count, bool reverse_roles) {
  if (mu < 2 || i < 1 || j <= i || j > mu) throw std::invalid_argument("need 1 <= i < j <= mu");
  WArrowPresentation p{Diagram::trivial_string_link(mu), {}};
  const int sign = count < 0 ? -1 : 1;
  const long long n = count < 0 ? -count : count;
  for (long long t = 0; t < n; ++t) {
    const ArrowEnd on_i{i - 1, static_cast<int>(t)}, on_j{j - 1, static_cast<int>(t)};
    p.arrows.push_back(reverse_roles ? WArrow{on_j, on_i, sign} : WArrow{on_i, on_j, sign});
  }
  return p;
}

}  // namespace

WArrowPresentation build_H(int mu, int i, int j, long long a) { return arrow_block(mu, i, j, a, false); }
WArrowPresentation build_Hbar(int mu, int i, int j, long long b) { return arrow_block(mu, i, j, b, true); }

WArrowPresentation stack(const WArrowPresentation& p, const WArrowPresentation& q) {
  if (!p.base.is_string_link() || !q.base.is_string_link() || p.base.mu() != q.base.mu())
    throw std::invalid_argument("stacking needs string links with equal strand counts");
  WArrowPresentation a = normalized(p);
  const WArrowPresentation b = normalized(q);
  std::vector<int> offset(static_cast<std::size_t>(a.base.mu()), 0);
  for (const auto& w : a.arrows) {
    ++offset[static_cast<std::size_t>(w.tail.component)];
    ++offset[static_cast<std::size_t>(w.head.component)];
  }
  for (WArrow w : b.arrows) {
    w.tail.slot += offset[static_cast<std::size_t>(w.tail.component)];
    w.head.slot += offset[static_cast<std::size_t>(w.head.component)];
    a.arrows.push_back(w);
  }
  return a;
}

namespace {

LinkingMatrix closed_linking(const WArrowPresentation& p) {
  const Diagram d = surgery(p);
  return linking_matrix(d.is_string_link() ? closure(d) : d);
}

long long mod(long long v, int n) {
  const long long r = v % n;
  return r < 0 ? r + n : r;
}

ResidueMatrix zeros(int mu) {
  return ResidueMatrix(static_cast<std::size_t>(mu), std::vector<long long>(static_cast<std::size_t>(mu), 0));
}

}  // namespace

ResidueMatrix normalize_vn(const WArrowPresentation& p, int n) {
  if (n < 1 || n % 2 == 0) throw std::invalid_argument("normalize_vn needs odd n");
  const auto lam = closed_linking(p);
  const int mu = p.base.mu();
  ResidueMatrix a = zeros(mu);
  for (std::size_t i = 0; i < lam.size(); ++i)
    for (std::size_t j = i + 1; j < lam.size(); ++j) a[i][j] = mod(lam[i][j] + lam[j][i], n);
  return a;
}

std::pair<ResidueMatrix, ResidueMatrix> normalize_vn_uc(const WArrowPresentation& p, int n) {
  if (n < 1) throw std::invalid_argument("normalize_vn_uc needs n >= 1");
  const auto lam = closed_linking(p);
  const int mu = p.base.mu();
  ResidueMatrix a = zeros(mu), b = zeros(mu);
  for (std::size_t i = 0; i < lam.size(); ++i)
    for (std::size_t j = i + 1; j < lam.size(); ++j) {
      a[i][j] = mod(lam[i][j], n);
      b[i][j] = mod(lam[j][i], n);
    }
  return {a, b};
}

WArrowPresentation vn_normal_form(int mu, const ResidueMatrix& a) {
  return vn_uc_normal_form(mu, a, zeros(mu));
}

WArrowPresentation vn_uc_normal_form(int mu, const ResidueMatrix& a, const ResidueMatrix& b) {
  WArrowPresentation p{Diagram::trivial_string_link(mu), {}};
  for (int i = 0; i < mu; ++i)
    for (int j = i + 1; j < mu; ++j) {
      const long long aij = a.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j));
      const long long bij = b.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j));
      if (aij != 0) p = stack(p, build_H(mu, i + 1, j + 1, aij));
      if (bij != 0) p = stack(p, build_Hbar(mu, i + 1, j + 1, bij));
    }
  return p;
}

std::string serialize(const WArrowPresentation& input) {
  const WArrowPresentation p = normalized(input);
  std::string out = "arrows\n" + serialize(p.base);
  for (const auto& a : p.arrows) {
    out += "\narrow: " + std::to_string(a.tail.component + 1) + "." + std::to_string(a.tail.slot + 1) + " " +
           std::to_string(a.head.component + 1) + "." + std::to_string(a.head.slot + 1) + (a.sign > 0 ? " +" : " -");
  }
  return out;
}

WArrowPresentation parse_arrows(std::string_view text) {
  std::string base_text;
  std::vector<WArrow> arrows;
  bool header = false;
  int line_no = 0;
  std::size_t start = 0;
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
  };
  auto parse_end = [&](std::string_view tok, int column) {
    const auto dot = tok.find('.');
    ArrowEnd e;
    auto bad = [&] { throw ParseError("bad arrow endpoint '" + std::string(tok) + "'", line_no, column); };
    if (dot == std::string_view::npos) bad();
    auto [p1, e1] = std::from_chars(tok.data(), tok.data() + dot, e.component);
    auto [p2, e2] = std::from_chars(tok.data() + dot + 1, tok.data() + tok.size(), e.slot);
    if (e1 != std::errc() || p1 != tok.data() + dot || e2 != std::errc() || p2 != tok.data() + tok.size() ||
        e.component < 1)
      bad();
    e.component -= 1;
    return e;
  };
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    const std::string_view content = trim(line);
    if (content.empty() || content.front() == '#') {
      base_text += '\n';
    } else if (!header) {
      if (content != "arrows") throw ParseError("expected 'arrows' header", line_no, 1);
      header = true;
      base_text += '\n';
    } else if (content.starts_with("arrow:")) {
      base_text += '\n';
      std::vector<std::pair<std::string_view, int>> toks;
      std::size_t pos = line.find("arrow:") + 6;
      while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
        if (pos >= line.size()) break;
        std::size_t e = pos;
        while (e < line.size() && line[e] != ' ' && line[e] != '\t' && line[e] != '\r') ++e;
        toks.emplace_back(line.substr(pos, e - pos), static_cast<int>(pos) + 1);
        pos = e;
      }
      if (toks.size() != 3 || (toks[2].first != "+" && toks[2].first != "-"))
        throw ParseError("arrow line needs '<tail> <head> <+|->'", line_no, 1);
      arrows.push_back({parse_end(toks[0].first, toks[0].second), parse_end(toks[1].first, toks[1].second),
                        toks[2].first == "+" ? 1 : -1});
    } else {
      base_text += std::string(line) + '\n';
    }
    if (end == text.size()) break;
  }
  if (!header) throw ParseError("expected 'arrows' header", 1, 1);
  Diagram base = parse_diagram(base_text);
  if (base.crossing_count() != 0) throw ParseError("arrow presentation base must be crossing-free", 1, 1);
  try {
    return normalized({std::move(base), std::move(arrows)});
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), line_no, 1);
  }
}

}  // namespace wld

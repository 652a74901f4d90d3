#include "wld/diagram.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>

namespace wld {

ParseError::ParseError(const std::string& what, int line, int column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + what),
      line_(line),
      column_(column) {}

Diagram::Diagram() : Diagram(DiagramKind::link, {Component{}}) {}

Diagram::Diagram(DiagramKind kind, std::vector<Component> components)
    : kind_(kind), components_(std::move(components)) {
  if (components_.empty()) throw std::invalid_argument("diagram needs at least one component");
  std::map<int, std::pair<int, int>> seen;  // id -> (#over, #under)
  for (int c = 0; c < mu(); ++c) {
    const auto& comp = components_[static_cast<std::size_t>(c)];
    for (int i = 0; i < static_cast<int>(comp.size()); ++i) {
      const Passage& p = comp[static_cast<std::size_t>(i)];
      if (p.crossing <= 0)
        throw std::invalid_argument("crossing ids must be positive");
      if (p.sign != 1 && p.sign != -1)
        throw std::invalid_argument("crossing sign must be +1 or -1");
      auto [it, fresh] = crossings_.try_emplace(p.crossing);
      auto& info = it->second;
      auto& count = seen[p.crossing];
      if (!fresh && info.sign != p.sign)
        throw std::invalid_argument("sign mismatch at crossing " + std::to_string(p.crossing));
      info.sign = p.sign;
      if (p.role == Role::over) {
        ++count.first;
        info.over = {c, i};
      } else {
        ++count.second;
        info.under = {c, i};
      }
    }
  }
  for (const auto& [id, count] : seen) {
    if (count.first != 1 || count.second != 1)
      throw std::invalid_argument("crossing " + std::to_string(id) +
                                  " must appear exactly once as O and once as U");
  }
}

Diagram Diagram::unlink(int mu) {
  if (mu < 1) throw std::invalid_argument("mu must be at least 1");
  return Diagram(DiagramKind::link, std::vector<Component>(static_cast<std::size_t>(mu)));
}

Diagram Diagram::trivial_string_link(int mu) {
  if (mu < 1) throw std::invalid_argument("mu must be at least 1");
  return Diagram(DiagramKind::string_link, std::vector<Component>(static_cast<std::size_t>(mu)));
}

std::vector<int> Diagram::crossing_ids() const {
  std::vector<int> ids;
  ids.reserve(crossings_.size());
  for (const auto& [id, info] : crossings_) ids.push_back(id);
  return ids;
}

const CrossingInfo& Diagram::crossing(int id) const {
  auto it = crossings_.find(id);
  if (it == crossings_.end()) throw std::out_of_range("no crossing " + std::to_string(id));
  return it->second;
}

int Diagram::max_crossing_id() const noexcept {
  return crossings_.empty() ? 0 : crossings_.rbegin()->first;
}

const Passage& Diagram::at(Position p) const {
  return components_.at(static_cast<std::size_t>(p.component)).at(static_cast<std::size_t>(p.index));
}

int Diagram::next_index(int c, int index) const noexcept {
  const int len = static_cast<int>(components_[static_cast<std::size_t>(c)].size());
  if (index + 1 < len) return index + 1;
  return is_string_link() ? -1 : 0;
}

int Diagram::prev_index(int c, int index) const noexcept {
  const int len = static_cast<int>(components_[static_cast<std::size_t>(c)].size());
  if (index > 0) return index - 1;
  return is_string_link() ? -1 : len - 1;
}

Diagram Diagram::compacted() const {
  std::map<int, int> relabel;
  int next = 1;
  for (const auto& [id, info] : crossings_) relabel[id] = next++;
  auto comps = components_;
  for (auto& comp : comps)
    for (auto& p : comp) p.crossing = relabel[p.crossing];
  return Diagram(kind_, std::move(comps));
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

Diagram parse_diagram(std::string_view text) {
  DiagramKind kind = DiagramKind::link;
  std::vector<Component> comps;
  bool seen_content = false;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    const std::string_view content = trim(line);
    if (content.empty() || content.front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    const int indent = static_cast<int>(line.find_first_not_of(" \t"));
    if (content == "stringlink") {
      if (seen_content) throw ParseError("'stringlink' header must come first", line_no, indent + 1);
      kind = DiagramKind::string_link;
      seen_content = true;
    } else if (content.starts_with("component:")) {
      seen_content = true;
      Component comp;
      std::size_t pos = static_cast<std::size_t>(indent) + 10;
      while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
        if (pos >= line.size()) break;
        std::size_t tok_end = pos;
        while (tok_end < line.size() && line[tok_end] != ' ' && line[tok_end] != '\t' &&
               line[tok_end] != '\r')
          ++tok_end;
        const std::string_view tok = line.substr(pos, tok_end - pos);
        const int column = static_cast<int>(pos) + 1;
        if (tok.size() < 3 || (tok.front() != 'O' && tok.front() != 'U') ||
            (tok.back() != '+' && tok.back() != '-'))
          throw ParseError("unknown token '" + std::string(tok) + "'", line_no, column);
        const std::string_view digits = tok.substr(1, tok.size() - 2);
        int id = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), id);
        if (ec != std::errc() || ptr != digits.data() + digits.size() || id <= 0)
          throw ParseError("bad crossing id in '" + std::string(tok) + "'", line_no, column);
        comp.push_back({id, tok.front() == 'O' ? Role::over : Role::under, tok.back() == '+' ? 1 : -1});
        pos = tok_end;
      }
      comps.push_back(std::move(comp));
    } else {
      throw ParseError("unknown token '" + std::string(content.substr(0, content.find(' '))) + "'",
                       line_no, indent + 1);
    }
    if (end == text.size()) break;
  }
  if (comps.empty()) throw ParseError("no components", line_no, 1);
  try {
    return Diagram(kind, std::move(comps));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), line_no, 1);
  }
}

std::string serialize(const Diagram& d) {
  std::string out;
  if (d.is_string_link()) out += "stringlink\n";
  bool first = true;
  for (const auto& comp : d.components()) {
    if (!first) out += '\n';
    first = false;
    out += "component:";
    for (const auto& p : comp) {
      out += ' ';
      out += p.role == Role::over ? 'O' : 'U';
      out += std::to_string(p.crossing);
      out += p.sign > 0 ? '+' : '-';
    }
  }
  return out;
}

Diagram closure(const Diagram& s) {
  if (!s.is_string_link()) throw std::invalid_argument("closure: input is already a link");
  return Diagram(DiagramKind::link, s.components());
}

ArcMap arc_map(const Diagram& d) {
  ArcMap m;
  m.arc_of.resize(static_cast<std::size_t>(d.mu()));
  m.arc_after.resize(static_cast<std::size_t>(d.mu()));
  for (int c = 0; c < d.mu(); ++c) {
    const auto& comp = d.component(c);
    const int len = static_cast<int>(comp.size());
    auto& of = m.arc_of[static_cast<std::size_t>(c)];
    auto& after = m.arc_after[static_cast<std::size_t>(c)];
    of.assign(static_cast<std::size_t>(len), -1);
    after.assign(static_cast<std::size_t>(len), -1);
    std::vector<int> unders;
    for (int i = 0; i < len; ++i)
      if (comp[static_cast<std::size_t>(i)].role == Role::under) unders.push_back(i);
    const int base = static_cast<int>(m.arcs.size());
    if (d.is_string_link()) {
      int begin = 0;
      for (int u : unders) {
        m.arcs.push_back({c, begin, u - begin + 1});
        begin = u + 1;
      }
      m.arcs.push_back({c, begin, len - begin});
    } else if (unders.empty()) {
      m.arcs.push_back({c, 0, len});
    } else {
      // arc k ends at unders[k]; arc 0 wraps around the basepoint
      const int m_count = static_cast<int>(unders.size());
      for (int k = 0; k < m_count; ++k) {
        const int begin = (unders[static_cast<std::size_t>((k + m_count - 1) % m_count)] + 1) % len;
        const int end = unders[static_cast<std::size_t>(k)];
        const int length = ((end - begin) % len + len) % len + 1;
        m.arcs.push_back({c, begin, length});
      }
    }
    const int count = static_cast<int>(m.arcs.size()) - base;
    for (int a = 0; a < count; ++a) {
      const Arc& arc = m.arcs[static_cast<std::size_t>(base + a)];
      for (int t = 0; t < arc.length; ++t) of[static_cast<std::size_t>((arc.begin + t) % std::max(len, 1))] = base + a;
    }
    for (int k = 0; k < static_cast<int>(unders.size()); ++k) {
      const int next = d.is_string_link() ? k + 1 : (k + 1) % count;
      after[static_cast<std::size_t>(unders[static_cast<std::size_t>(k)])] = base + next;
    }
  }
  return m;
}

std::vector<Arc> arcs(const Diagram& d) { return arc_map(d).arcs; }

Diagram rotated(const Diagram& d, int c, int shift) {
  if (d.is_string_link()) throw std::invalid_argument("cannot rotate a string link strand");
  auto comps = d.components();
  auto& comp = comps.at(static_cast<std::size_t>(c));
  if (!comp.empty()) {
    const int len = static_cast<int>(comp.size());
    std::rotate(comp.begin(), comp.begin() + ((shift % len) + len) % len, comp.end());
  }
  return Diagram(d.kind(), std::move(comps));
}

Diagram reversed(const Diagram& d) {
  auto comps = d.components();
  for (auto& comp : comps) std::reverse(comp.begin(), comp.end());
  return Diagram(d.kind(), std::move(comps));
}

namespace {

using Token = std::tuple<int, int, int>;  // (label, role, sign)

struct CanonState {
  std::map<int, int> labels;
  int next = 1;
  std::vector<std::vector<Token>> code;
};

std::vector<Token> encode(const Component& comp, int shift, std::map<int, int>& labels, int& next) {
  std::vector<Token> out;
  const int len = static_cast<int>(comp.size());
  out.reserve(comp.size());
  for (int t = 0; t < len; ++t) {
    const Passage& p = comp[static_cast<std::size_t>((shift + t) % len)];
    auto [it, fresh] = labels.try_emplace(p.crossing, next);
    if (fresh) ++next;
    out.emplace_back(it->second, p.role == Role::over ? 0 : 1, p.sign);
  }
  return out;
}

}  // namespace

Diagram canonical(const Diagram& d) {
  // Greedy component-by-component minimisation; rotations producing the
  // same token sequence are kept as parallel candidates.
  std::vector<CanonState> states(1);
  for (int c = 0; c < d.mu(); ++c) {
    const auto& comp = d.component(c);
    const int len = static_cast<int>(comp.size());
    const int rotations = (d.is_string_link() || len == 0) ? 1 : len;
    std::vector<CanonState> next_states;
    std::vector<Token> best;
    bool have_best = false;
    for (const auto& st : states) {
      for (int r = 0; r < rotations; ++r) {
        CanonState cand = st;
        auto code = encode(comp, r, cand.labels, cand.next);
        if (!have_best || code < best) {
          best = code;
          have_best = true;
          next_states.clear();
        }
        if (code == best) {
          cand.code.push_back(std::move(code));
          next_states.push_back(std::move(cand));
        }
      }
    }
    std::sort(next_states.begin(), next_states.end(),
              [](const CanonState& a, const CanonState& b) { return a.labels < b.labels; });
    next_states.erase(std::unique(next_states.begin(), next_states.end(),
                                  [](const CanonState& a, const CanonState& b) { return a.labels == b.labels; }),
                      next_states.end());
    states = std::move(next_states);
  }
  const auto& code = states.front().code;
  std::vector<Component> comps;
  for (const auto& tokens : code) {
    Component comp;
    for (const auto& [label, role, sign] : tokens)
      comp.push_back({label, role == 0 ? Role::over : Role::under, sign});
    comps.push_back(std::move(comp));
  }
  return Diagram(d.kind(), std::move(comps));
}

std::string canonical_key(const Diagram& d) { return serialize(canonical(d)); }

}  // namespace wld

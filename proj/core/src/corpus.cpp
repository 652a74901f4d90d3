#include "wld/corpus.hpp"

#include <charconv>
#include <cstdlib>
#include <stdexcept>

#include "wld/arrows.hpp"

namespace wld {

Diagram braid_closure(int strands, const std::vector<int>& word) {
  if (strands < 1) throw std::invalid_argument("braid needs at least one strand");
  // passages met by the strand starting at each bottom position
  std::vector<Component> path(static_cast<std::size_t>(strands));
  std::vector<int> at(static_cast<std::size_t>(strands));  // position -> starting strand
  for (int p = 0; p < strands; ++p) at[static_cast<std::size_t>(p)] = p;
  int id = 0;
  for (int g : word) {
    const int i = std::abs(g);
    if (g == 0 || i >= strands) throw std::invalid_argument("braid generator out of range");
    ++id;
    const int sign = g > 0 ? 1 : -1;
    const int left = at[static_cast<std::size_t>(i - 1)], right = at[static_cast<std::size_t>(i)];
    path[static_cast<std::size_t>(left)].push_back({id, g > 0 ? Role::over : Role::under, sign});
    path[static_cast<std::size_t>(right)].push_back({id, g > 0 ? Role::under : Role::over, sign});
    std::swap(at[static_cast<std::size_t>(i - 1)], at[static_cast<std::size_t>(i)]);
  }
  // strand s ends at the position where it sits now; the closure continues
  // with the strand starting there
  std::vector<int> end_pos(static_cast<std::size_t>(strands));
  for (int p = 0; p < strands; ++p) end_pos[static_cast<std::size_t>(at[static_cast<std::size_t>(p)])] = p;
  std::vector<bool> used(static_cast<std::size_t>(strands), false);
  std::vector<Component> comps;
  for (int s = 0; s < strands; ++s) {
    if (used[static_cast<std::size_t>(s)]) continue;
    Component comp;
    for (int cur = s; !used[static_cast<std::size_t>(cur)]; cur = end_pos[static_cast<std::size_t>(cur)]) {
      used[static_cast<std::size_t>(cur)] = true;
      const auto& p = path[static_cast<std::size_t>(cur)];
      comp.insert(comp.end(), p.begin(), p.end());
    }
    comps.push_back(std::move(comp));
  }
  return Diagram(DiagramKind::link, std::move(comps));
}

namespace {

std::vector<long long> parse_args(std::string_view inner) {
  std::vector<long long> out;
  std::size_t start = 0;
  while (start <= inner.size()) {
    std::size_t end = inner.find(',', start);
    if (end == std::string_view::npos) end = inner.size();
    std::string_view tok = inner.substr(start, end - start);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    long long v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw std::invalid_argument("bad corpus argument '" + std::string(tok) + "'");
    out.push_back(v);
    if (end == inner.size()) break;
    start = end + 1;
  }
  return out;
}

}  // namespace

Diagram named(std::string_view name) {
  if (name == "unknot") return Diagram();
  if (name == "trefoil") return braid_closure(2, {1, 1, 1});
  if (name == "figure8") return braid_closure(3, {1, -2, 1, -2});
  if (name == "hopf+") return parse_diagram("component: O1+ U2+\ncomponent: U1+ O2+");
  if (name == "hopf-") return parse_diagram("component: O1- U2-\ncomponent: U1- O2-");
  if (name == "virtual-trefoil") return parse_diagram("component: O1+ O2+ U1+ U2+");
  if (name.starts_with("unlink-")) {
    const auto v = parse_args(name.substr(7));
    if (v.size() != 1 || v[0] < 1 || v[0] > 64) throw std::invalid_argument("unlink size must be in 1..64");
    return Diagram::unlink(static_cast<int>(v[0]));
  }
  for (std::string_view family : {"h(", "hbar("}) {
    if (name.starts_with(family) && name.ends_with(")")) {
      const auto v = parse_args(name.substr(family.size(), name.size() - family.size() - 1));
      if (v.size() != 4) throw std::invalid_argument("expected " + std::string(family) + "MU,I,J,A)");
      const int mu = static_cast<int>(v[0]), i = static_cast<int>(v[1]), j = static_cast<int>(v[2]);
      const auto p = family == "h(" ? build_H(mu, i, j, v[3]) : build_Hbar(mu, i, j, v[3]);
      return closure(surgery(p));
    }
  }
  throw std::invalid_argument("unknown example '" + std::string(name) + "'");
}

std::vector<std::string> corpus_names() {
  return {"unknot", "unlink-2", "unlink-3", "trefoil", "figure8", "hopf+", "hopf-", "virtual-trefoil",
          "h(2,1,2,3)", "hbar(2,1,2,-2)"};
}

}  // namespace wld

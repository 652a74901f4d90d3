#include "wld/random_diagram.hpp"

#include <algorithm>
#include <stdexcept>

namespace wld {

Diagram random_diagram(Rng& rng, int max_crossings, int max_mu, DiagramKind kind) {
  if (max_crossings < 0 || max_mu < 1) throw std::invalid_argument("random_diagram: bad bounds");
  const int mu = rng.range(1, max_mu);
  const int c = rng.range(0, max_crossings);
  std::vector<Passage> passages;
  for (int id = 1; id <= c; ++id) {
    const int sign = rng.sign();
    passages.push_back({id, Role::over, sign});
    passages.push_back({id, Role::under, sign});
  }
  for (std::size_t i = passages.size(); i > 1; --i) std::swap(passages[i - 1], passages[rng.below(i)]);
  std::vector<int> cuts;
  for (int k = 1; k < mu; ++k) cuts.push_back(rng.range(0, static_cast<int>(passages.size())));
  std::sort(cuts.begin(), cuts.end());
  cuts.push_back(static_cast<int>(passages.size()));
  std::vector<Component> comps;
  int begin = 0;
  for (int cut : cuts) {
    comps.emplace_back(passages.begin() + begin, passages.begin() + cut);
    begin = cut;
  }
  return Diagram(kind, std::move(comps));
}

}  // namespace wld

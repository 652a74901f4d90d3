#include "wld/invariants.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "wld/int_matrix.hpp"

namespace wld {

LinkingMatrix linking_matrix(const Diagram& d) {
  const auto mu = static_cast<std::size_t>(d.mu());
  LinkingMatrix m(mu, std::vector<long long>(mu, 0));
  for (int id : d.crossing_ids()) {
    const auto& c = d.crossing(id);
    if (c.over.component == c.under.component) continue;  // diagonal unused
    m[static_cast<std::size_t>(c.over.component)][static_cast<std::size_t>(c.under.component)] += c.sign;
  }
  return m;
}

namespace {

struct CrossingArcs {
  int x;  // incoming under arc
  int y;  // over arc
  int z;  // outgoing under arc
  int sign;
};

std::vector<CrossingArcs> crossing_arcs(const Diagram& d, const ArcMap& am) {
  std::vector<CrossingArcs> out;
  for (int id : d.crossing_ids()) {
    const auto& c = d.crossing(id);
    const auto uc = static_cast<std::size_t>(c.under.component), ui = static_cast<std::size_t>(c.under.index);
    out.push_back({am.arc_of[uc][ui], am.arc_of[static_cast<std::size_t>(c.over.component)][static_cast<std::size_t>(c.over.index)],
                   am.arc_after[uc][ui], c.sign});
  }
  return out;
}

FreeWord word(std::initializer_list<Letter> ls) { return FreeWord(std::vector<Letter>(ls)); }

}  // namespace

GroupPresentation welded_group(const Diagram& d) {
  const ArcMap am = arc_map(d);
  GroupPresentation p{static_cast<int>(am.arcs.size()), {}, PresentationKind::welded};
  for (const auto& c : crossing_arcs(d, am)) {
    if (c.sign > 0)
      p.relators.push_back(word({{c.z, -1}, {c.y, 1}, {c.x, 1}, {c.y, -1}}));
    else
      p.relators.push_back(word({{c.z, -1}, {c.y, -1}, {c.x, 1}, {c.y, 1}}));
  }
  return p;
}

GroupPresentation core_group(const Diagram& d) {
  const ArcMap am = arc_map(d);
  GroupPresentation p{static_cast<int>(am.arcs.size()), {}, PresentationKind::core};
  for (const auto& c : crossing_arcs(d, am)) p.relators.push_back(word({{c.y, 1}, {c.x, -1}, {c.y, 1}, {c.z, -1}}));
  return p;
}

LaurentMatrix alexander_matrix(const GroupPresentation& p) {
  LaurentMatrix m;
  for (const auto& r : p.relators) {
    std::vector<LaurentPolynomial> row(static_cast<std::size_t>(p.generators));
    for (int g = 0; g < p.generators; ++g) row[static_cast<std::size_t>(g)] = fox_derive_t(r, g);
    m.push_back(std::move(row));
  }
  return m;
}

LaurentPolynomial determinant(LaurentMatrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) return 1;
  LaurentPolynomial prev = 1;
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = n;
    for (std::size_t r = k; r < n; ++r)
      if (!m[r][k].is_zero() && (pivot == n || m[r][k].span() < m[pivot][k].span())) pivot = r;
    if (pivot == n) return {};
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = exact_divide(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      m[i][k] = {};
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

namespace {

// Eliminates rows and columns through unit entries. Each step lowers the
// column count by one and keeps every elementary ideal index valid.
void deflate(LaurentMatrix& m, int& columns) {
  while (true) {
    std::size_t pr = m.size(), pc = 0;
    for (std::size_t r = 0; r < m.size() && pr == m.size(); ++r)
      for (std::size_t c = 0; c < m[r].size(); ++c)
        if (is_unit(m[r][c])) {
          pr = r;
          pc = c;
          break;
        }
    if (pr == m.size()) break;
    const auto& [e, coef] = *m[pr][pc].terms().begin();
    const LaurentPolynomial inv = LaurentPolynomial::monomial(coef, -e);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == pr || m[i][pc].is_zero()) continue;
      const LaurentPolynomial f = m[i][pc] * inv;
      for (std::size_t c = 0; c < m[i].size(); ++c)
        if (!m[pr][c].is_zero()) m[i][c] -= f * m[pr][c];
    }
    m.erase(m.begin() + static_cast<std::ptrdiff_t>(pr));
    for (auto& row : m) row.erase(row.begin() + static_cast<std::ptrdiff_t>(pc));
    --columns;
  }
  m.erase(std::remove_if(m.begin(), m.end(),
                         [](const std::vector<LaurentPolynomial>& row) {
                           return std::all_of(row.begin(), row.end(), [](const auto& p) { return p.is_zero(); });
                         }),
          m.end());
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<LaurentPolynomial> elementary_ideal(const LaurentMatrix& input, int columns, int k) {
  if (k < 0) throw std::invalid_argument("elementary ideal index must be non-negative");
  for (const auto& row : input)
    if (static_cast<int>(row.size()) != columns) throw std::invalid_argument("matrix width mismatch");
  LaurentMatrix m = input;
  deflate(m, columns);
  const int size = columns - k;
  if (size <= 0) return {LaurentPolynomial(1)};
  if (static_cast<std::size_t>(size) > m.size()) return {};
  const auto s = static_cast<std::size_t>(size);
  std::set<std::vector<std::pair<std::int64_t, std::string>>> seen;
  std::vector<LaurentPolynomial> gens;
  std::vector<std::size_t> rows(s);
  for (std::size_t i = 0; i < s; ++i) rows[i] = i;
  do {
    std::vector<std::size_t> cols(s);
    for (std::size_t i = 0; i < s; ++i) cols[i] = i;
    do {
      LaurentMatrix sub(s, std::vector<LaurentPolynomial>(s));
      for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) sub[i][j] = m[rows[i]][cols[j]];
      LaurentPolynomial det = normalize_units(determinant(std::move(sub)));
      if (det.is_zero()) continue;
      if (is_unit(det)) return {LaurentPolynomial(1)};
      std::vector<std::pair<std::int64_t, std::string>> key;
      for (const auto& [e, c] : det.terms()) key.emplace_back(e, c.get_str());
      if (seen.insert(std::move(key)).second) gens.push_back(std::move(det));
    } while (next_combination(cols, static_cast<std::size_t>(columns)));
  } while (next_combination(rows, m.size()));
  std::sort(gens.begin(), gens.end(), [](const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return to_string(a) < to_string(b);
  });
  return gens;
}

AlexanderResult alexander(const Diagram& d, int k) {
  const GroupPresentation p = welded_group(d);
  AlexanderResult r;
  r.ideal = elementary_ideal(alexander_matrix(p), p.generators, k);
  r.polynomial = poly_gcd(r.ideal);
  return r;
}

namespace {

class HomSearch {
 public:
  HomSearch(const GroupPresentation& p, const FiniteGroupTable& g)
      : group_(g), value_(static_cast<std::size_t>(p.generators), -1), rels_of_(static_cast<std::size_t>(p.generators)) {
    for (const auto& r : p.relators) {
      if (r.max_generator() >= p.generators) throw std::invalid_argument("relator uses an undeclared generator");
      const auto idx = relators_.size();
      relators_.push_back(r.letters());
      std::set<int> gens;
      for (const Letter& l : r.letters()) gens.insert(l.generator);
      for (int x : gens) rels_of_[static_cast<std::size_t>(x)].push_back(idx);
    }
  }

  Integer run() {
    std::vector<std::size_t> all(relators_.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    search(all);
    return total_;
  }

 private:
  int power(int x, int e) const { return e > 0 ? x : group_.inv(x); }

  void assign(int g, int v, std::vector<int>& trail, std::vector<std::size_t>& queue) {
    value_[static_cast<std::size_t>(g)] = v;
    trail.push_back(g);
    const auto& rs = rels_of_[static_cast<std::size_t>(g)];
    queue.insert(queue.end(), rs.begin(), rs.end());
  }

  // Checks completed relators and solves relators with a single unknown
  // occurrence. Returns false on contradiction.
  bool propagate(std::vector<std::size_t> queue, std::vector<int>& trail) {
    while (!queue.empty()) {
      const std::size_t ri = queue.back();
      queue.pop_back();
      const auto& rel = relators_[ri];
      int unknown = -1, occurrences = 0;
      std::size_t at = 0;
      bool several = false;
      for (std::size_t i = 0; i < rel.size(); ++i) {
        const int g = rel[i].generator;
        if (value_[static_cast<std::size_t>(g)] >= 0) continue;
        if (unknown < 0) {
          unknown = g;
          occurrences = 1;
          at = i;
        } else if (g == unknown) {
          ++occurrences;
        } else {
          several = true;
          break;
        }
      }
      if (several || occurrences > 1) continue;
      if (unknown < 0) {
        int acc = group_.identity();
        for (const Letter& l : rel) acc = group_.mul(acc, power(value_[static_cast<std::size_t>(l.generator)], l.exponent));
        if (acc != group_.identity()) return false;
        continue;
      }
      // A u^e B = 1  =>  u^e = A^-1 B^-1
      int a = group_.identity(), b = group_.identity();
      for (std::size_t i = 0; i < at; ++i)
        a = group_.mul(a, power(value_[static_cast<std::size_t>(rel[i].generator)], rel[i].exponent));
      for (std::size_t i = at + 1; i < rel.size(); ++i)
        b = group_.mul(b, power(value_[static_cast<std::size_t>(rel[i].generator)], rel[i].exponent));
      int ue = group_.mul(group_.inv(a), group_.inv(b));
      assign(unknown, rel[at].exponent > 0 ? ue : group_.inv(ue), trail, queue);
    }
    return true;
  }

  // Unassigned generator that makes the most relators solvable.
  int choose() const {
    int best = -1;
    long best_score = -1;
    for (std::size_t g = 0; g < value_.size(); ++g) {
      if (value_[g] >= 0) continue;
      long score = 0;
      for (std::size_t ri : rels_of_[g]) {
        std::set<int> unknown;
        for (const Letter& l : relators_[ri])
          if (value_[static_cast<std::size_t>(l.generator)] < 0) unknown.insert(l.generator);
        score += unknown.size() == 2 ? 4 : 1;
      }
      if (score > best_score) {
        best_score = score;
        best = static_cast<int>(g);
      }
    }
    return best;
  }

  void search(std::vector<std::size_t> queue) {
    std::vector<int> trail;
    if (propagate(std::move(queue), trail)) {
      const int g = choose();
      if (g < 0) {
        total_ += 1;
      } else {
        for (int v = 0; v < group_.order(); ++v) {
          value_[static_cast<std::size_t>(g)] = v;
          search(rels_of_[static_cast<std::size_t>(g)]);
        }
        value_[static_cast<std::size_t>(g)] = -1;
      }
    }
    for (int g : trail) value_[static_cast<std::size_t>(g)] = -1;
  }

  const FiniteGroupTable& group_;
  std::vector<int> value_;
  std::vector<std::vector<Letter>> relators_;
  std::vector<std::vector<std::size_t>> rels_of_;
  Integer total_ = 0;
};

}  // namespace

Integer hom_count(const GroupPresentation& p, const FiniteGroupTable& g) { return HomSearch(p, g).run(); }

Integer coloring_count(const Diagram& d, int n) {
  if (n < 1) throw std::invalid_argument("coloring modulus must be positive");
  const ArcMap am = arc_map(d);
  const auto g = am.arcs.size();
  IntMatrix m(0, g);
  for (const auto& c : crossing_arcs(d, am)) {
    std::vector<Integer> row(g);
    row[static_cast<std::size_t>(c.y)] += 2;
    row[static_cast<std::size_t>(c.x)] -= 1;
    row[static_cast<std::size_t>(c.z)] -= 1;
    m.append_row(row);
  }
  const auto factors = snf(m);
  Integer count;
  const Integer nn = n;
  mpz_pow_ui(count.get_mpz_t(), nn.get_mpz_t(), static_cast<unsigned long>(g - factors.size()));
  for (const auto& s : factors) {
    Integer gcd;
    mpz_gcd(gcd.get_mpz_t(), s.get_mpz_t(), nn.get_mpz_t());
    count *= gcd;
  }
  return count;
}

Abelianization abelianization(const GroupPresentation& p) {
  const auto g = static_cast<std::size_t>(p.generators);
  IntMatrix m(0, g);
  for (const auto& r : p.relators) {
    std::vector<Integer> row(g);
    for (std::size_t i = 0; i < g; ++i) row[i] = r.exponent_sum(static_cast<int>(i));
    m.append_row(row);
  }
  const auto factors = snf(m);
  Abelianization a;
  a.free_rank = static_cast<int>(g - factors.size());
  for (const auto& f : factors)
    if (f != 1) a.torsion.push_back(f);
  return a;
}

}  // namespace wld

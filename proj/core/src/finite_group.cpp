#include "wld/finite_group.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <map>
#include <numeric>
#include <stdexcept>

namespace wld {

FiniteGroupTable::FiniteGroupTable(std::string name, int order, std::vector<int> table)
    : name_(std::move(name)), order_(order), table_(std::move(table)) {
  if (order_ < 1) throw std::invalid_argument("group order must be positive");
  if (table_.size() != static_cast<std::size_t>(order_) * static_cast<std::size_t>(order_))
    throw std::invalid_argument("multiplication table has wrong size");
  for (int v : table_)
    if (v < 0 || v >= order_) throw std::invalid_argument("multiplication table entry out of range");
  identity_ = -1;
  for (int e = 0; e < order_ && identity_ < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < order_ && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw std::invalid_argument("multiplication table has no identity");
  inverse_.assign(static_cast<std::size_t>(order_), -1);
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b)
      if (mul(a, b) == identity_ && mul(b, a) == identity_) inverse_[static_cast<std::size_t>(a)] = b;
  if (std::find(inverse_.begin(), inverse_.end(), -1) != inverse_.end())
    throw std::invalid_argument("multiplication table lacks inverses");
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b)
      for (int c = 0; c < order_; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw std::invalid_argument("multiplication is not associative");
}

FiniteGroupTable cyclic_group(int n) {
  if (n < 1) throw std::invalid_argument("cyclic group order must be positive");
  std::vector<int> t(static_cast<std::size_t>(n * n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a * n + b)] = (a + b) % n;
  return {"z" + std::to_string(n), n, std::move(t)};
}

// r^i s^f is element i + n f; (r^i s^a)(r^j s^b) = r^(i + (-1)^a j) s^(a+b).
FiniteGroupTable dihedral_group(int n) {
  if (n < 1) throw std::invalid_argument("dihedral parameter must be positive");
  const int order = 2 * n;
  std::vector<int> t(static_cast<std::size_t>(order * order));
  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y) {
      const int i = x % n, a = x / n, j = y % n, b = y / n;
      const int rot = ((i + (a ? -j : j)) % n + n) % n;
      t[static_cast<std::size_t>(x * order + y)] = rot + n * ((a + b) % 2);
    }
  return {"d" + std::to_string(n), order, std::move(t)};
}

FiniteGroupTable symmetric_group(int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("symmetric group degree must be in 1..6");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
  const int order = static_cast<int>(perms.size());
  std::vector<int> t(static_cast<std::size_t>(order * order));
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      std::vector<int> c(static_cast<std::size_t>(n));
      // (a*b)(k) = a(b(k))
      for (int k = 0; k < n; ++k)
        c[static_cast<std::size_t>(k)] =
            perms[static_cast<std::size_t>(a)][static_cast<std::size_t>(perms[static_cast<std::size_t>(b)][static_cast<std::size_t>(k)])];
      t[static_cast<std::size_t>(a * order + b)] = index.at(c);
    }
  return {"s" + std::to_string(n), order, std::move(t)};
}

// Elements +-1, +-i, +-j, +-k as (sign, unit) with unit 0..3 = 1,i,j,k.
FiniteGroupTable quaternion_group() {
  // unit products: u*v = sign * w
  static constexpr std::array<std::array<std::pair<int, int>, 4>, 4> prod{{
      {{{1, 0}, {1, 1}, {1, 2}, {1, 3}}},
      {{{1, 1}, {-1, 0}, {1, 3}, {-1, 2}}},
      {{{1, 2}, {-1, 3}, {-1, 0}, {1, 1}}},
      {{{1, 3}, {1, 2}, {-1, 1}, {-1, 0}}},
  }};
  std::vector<int> t(64);
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      const int sx = x < 4 ? 1 : -1, ux = x % 4, sy = y < 4 ? 1 : -1, uy = y % 4;
      const auto [s, w] = prod[static_cast<std::size_t>(ux)][static_cast<std::size_t>(uy)];
      t[static_cast<std::size_t>(x * 8 + y)] = w + (sx * sy * s > 0 ? 0 : 4);
    }
  return {"q8", 8, std::move(t)};
}

std::vector<std::string> builtin_group_names() {
  std::vector<std::string> names;
  for (int n = 2; n <= 12; ++n) names.push_back("z" + std::to_string(n));
  for (int n = 3; n <= 8; ++n) names.push_back("d" + std::to_string(n));
  names.insert(names.end(), {"s3", "s4", "q8"});
  return names;
}

FiniteGroupTable builtin_group(std::string_view name) {
  auto number = [&](std::string_view digits) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) return -1;
    return v;
  };
  if (name == "q8") return quaternion_group();
  if (name.size() >= 2) {
    const int v = number(name.substr(1));
    if (name[0] == 'z' && v >= 2 && v <= 12) return cyclic_group(v);
    if (name[0] == 'd' && v >= 3 && v <= 8) return dihedral_group(v);
    if (name[0] == 's' && (v == 3 || v == 4)) return symmetric_group(v);
  }
  throw std::invalid_argument("unknown group '" + std::string(name) + "'");
}

FiniteGroupTable parse_group_csv(std::string_view text, std::string name) {
  std::vector<std::vector<int>> rows;
  std::size_t start = 0;
  int line_no = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.remove_suffix(1);
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    if (!line.empty() && line.front() != '#') {
      std::vector<int> row;
      std::size_t p = 0;
      while (p <= line.size()) {
        std::size_t q = line.find(',', p);
        if (q == std::string_view::npos) q = line.size();
        std::string_view cell = line.substr(p, q - p);
        while (!cell.empty() && cell.front() == ' ') cell.remove_prefix(1);
        while (!cell.empty() && cell.back() == ' ') cell.remove_suffix(1);
        int v = 0;
        auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
        if (cell.empty() || ec != std::errc() || ptr != cell.data() + cell.size())
          throw std::invalid_argument("group table line " + std::to_string(line_no) + ": bad entry");
        row.push_back(v);
        p = q + 1;
      }
      rows.push_back(std::move(row));
    }
    if (end == text.size()) break;
  }
  const int order = static_cast<int>(rows.size());
  std::vector<int> table;
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != order) throw std::invalid_argument("group table is not square");
    table.insert(table.end(), r.begin(), r.end());
  }
  return {std::move(name), order, std::move(table)};
}

}  // namespace wld

#include "wld/classify.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>

#include "wld/invariants.hpp"

namespace wld {

std::string to_string(Relation r) {
  switch (r) {
    case Relation::vn: return "vn";
    case Relation::vn_uc: return "vn-uc";
    case Relation::v_power: return "v^n";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::equivalent: return "equivalent";
    case Verdict::inequivalent: return "inequivalent";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

long long mod(long long v, int n) {
  const long long r = v % n;
  return r < 0 ? r + n : r;
}

void check_n(int n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
}

std::vector<Residue> residues(Relation rel, const LinkingMatrix& a, const LinkingMatrix& b, int n,
                              const std::vector<int>& perm) {
  std::vector<Residue> out;
  const int mu = static_cast<int>(a.size());
  auto at = [](const LinkingMatrix& m, int i, int j) {
    return m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  };
  for (int i = 0; i < mu; ++i)
    for (int j = 0; j < mu; ++j) {
      if (i == j || (rel == Relation::vn && j < i)) continue;
      const int pi = perm[static_cast<std::size_t>(i)], pj = perm[static_cast<std::size_t>(j)];
      if (rel == Relation::vn)
        out.push_back({i, j, mod(at(a, i, j) + at(a, j, i), n), mod(at(b, pi, pj) + at(b, pj, pi), n)});
      else
        out.push_back({i, j, mod(at(a, i, j), n), mod(at(b, pi, pj), n)});
    }
  return out;
}

bool residues_agree(const std::vector<Residue>& rs) {
  return std::all_of(rs.begin(), rs.end(), [](const Residue& r) { return r.left == r.right; });
}

EquivalenceVerdict decide(Relation rel, const Diagram& l, const Diagram& r, int n, bool any_order) {
  check_n(n);
  EquivalenceVerdict v;
  v.relation = rel;
  v.n = n;
  v.mu_left = l.mu();
  v.mu_right = r.mu();
  if (rel == Relation::vn && n % 2 == 0) {
    v.verdict = Verdict::equivalent;
    return v;
  }
  if (l.mu() != r.mu()) {
    v.verdict = Verdict::inequivalent;
    return v;
  }
  const auto a = linking_matrix(l), b = linking_matrix(r);
  std::vector<int> perm(static_cast<std::size_t>(l.mu()));
  std::iota(perm.begin(), perm.end(), 0);
  v.residues = residues(rel, a, b, n, perm);
  if (any_order && !residues_agree(v.residues)) {
    auto p = perm;
    while (std::next_permutation(p.begin(), p.end())) {
      auto rs = residues(rel, a, b, n, p);
      if (residues_agree(rs)) {
        v.residues = std::move(rs);
        perm = p;
        break;
      }
    }
  }
  if (any_order) v.permutation = perm;
  v.verdict = verdict_from_certificate(v);
  return v;
}

}  // namespace

Verdict verdict_from_certificate(const EquivalenceVerdict& v) {
  switch (v.relation) {
    case Relation::vn:
      if (v.n % 2 == 0) return Verdict::equivalent;
      [[fallthrough]];
    case Relation::vn_uc:
      if (v.mu_left != v.mu_right) return Verdict::inequivalent;
      return residues_agree(v.residues) ? Verdict::equivalent : Verdict::inequivalent;
    case Relation::v_power:
      if (v.obstruction_k && v.lattices && !(v.lattices->first == v.lattices->second)) return Verdict::inequivalent;
      return Verdict::inconclusive;
  }
  return Verdict::inconclusive;
}

EquivalenceVerdict decide_vn(const Diagram& l, const Diagram& r, int n, bool any_order) {
  return decide(Relation::vn, l, r, n, any_order);
}

EquivalenceVerdict decide_vn_uc(const Diagram& l, const Diagram& r, int n, bool any_order) {
  return decide(Relation::vn_uc, l, r, n, any_order);
}

EquivalenceVerdict obstruct_vn(const Diagram& l, const Diagram& r, int n, int kmax) {
  check_n(n);
  if (kmax < 0) throw std::invalid_argument("kmax must be non-negative");
  EquivalenceVerdict v;
  v.relation = Relation::v_power;
  v.n = n;
  v.mu_left = l.mu();
  v.mu_right = r.mu();
  v.verdict = Verdict::inconclusive;
  for (int k = 0; k <= kmax; ++k) {
    CyclicLattice a = ideal_mod(alexander(l, k).ideal, n);
    CyclicLattice b = ideal_mod(alexander(r, k).ideal, n);
    if (!(a == b)) {
      v.obstruction_k = k;
      v.lattices = std::pair{std::move(a), std::move(b)};
      v.verdict = Verdict::inequivalent;
      break;
    }
  }
  return v;
}

Diagram multiplex(const Diagram& d, const std::vector<int>& m) {
  if (static_cast<int>(m.size()) != d.mu())
    throw std::invalid_argument("multiplex: tuple length " + std::to_string(m.size()) + " != component count " +
                                std::to_string(d.mu()));
  // new ids per old crossing, in block order
  std::map<int, std::vector<int>> block;
  int next = 1;
  for (int id : d.crossing_ids()) {
    const int j = d.crossing(id).over.component;
    const int count = std::abs(m[static_cast<std::size_t>(j)]);
    for (int t = 0; t < count; ++t) block[id].push_back(next++);
  }
  std::vector<Component> comps;
  for (const auto& comp : d.components()) {
    Component out;
    for (const Passage& p : comp) {
      const int j = d.crossing(p.crossing).over.component;
      const int mj = m[static_cast<std::size_t>(j)];
      const int sign = mj < 0 ? -p.sign : p.sign;
      for (int id : block[p.crossing]) out.push_back({id, p.role, sign});
    }
    comps.push_back(std::move(out));
  }
  return Diagram(d.kind(), std::move(comps));
}

}  // namespace wld

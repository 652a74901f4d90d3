#include "wld/free_group.hpp"

#include <algorithm>
#include <stdexcept>

namespace wld {

FreeWord::FreeWord(const std::vector<Letter>& letters) {
  for (const Letter& l : letters) {
    if (l.exponent != 1 && l.exponent != -1) throw std::invalid_argument("letter exponent must be +-1");
    if (l.generator < 0) throw std::invalid_argument("negative generator index");
    if (!letters_.empty() && letters_.back().generator == l.generator && letters_.back().exponent == -l.exponent)
      letters_.pop_back();
    else
      letters_.push_back(l);
  }
}

FreeWord FreeWord::generator(int g, int power) {
  std::vector<Letter> ls(static_cast<std::size_t>(power < 0 ? -power : power), Letter{g, power < 0 ? -1 : 1});
  return FreeWord(ls);
}

int FreeWord::exponent_sum(int g) const {
  int s = 0;
  for (const Letter& l : letters_)
    if (l.generator == g) s += l.exponent;
  return s;
}

int FreeWord::max_generator() const {
  int m = -1;
  for (const Letter& l : letters_) m = std::max(m, l.generator);
  return m;
}

FreeWord FreeWord::inverse() const {
  FreeWord r;
  r.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) r.letters_.push_back({it->generator, -it->exponent});
  return r;
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
  std::vector<Letter> ls = a.letters_;
  ls.insert(ls.end(), b.letters_.begin(), b.letters_.end());
  return FreeWord(ls);
}

std::string to_string(const FreeWord& w) {
  if (w.empty()) return "1";
  std::string out;
  const auto& ls = w.letters();
  for (std::size_t i = 0; i < ls.size();) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    const int power = static_cast<int>(j - i) * ls[i].exponent;
    if (!out.empty()) out += ' ';
    out += "x" + std::to_string(ls[i].generator + 1);
    if (power != 1) out += "^" + std::to_string(power);
    i = j;
  }
  return out;
}

namespace {

void accumulate(FoxSum& s, const FreeWord& w, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = s.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) s.erase(it);
  }
}

}  // namespace

// d(l1...lk)/dx = sum_i l1...l(i-1) * d(li)/dx, with dx/dx = 1 and
// d(x^-1)/dx = -x^-1.
FoxSum fox_derive(const FreeWord& w, int j) {
  FoxSum s;
  std::vector<Letter> prefix;
  for (const Letter& l : w.letters()) {
    if (l.generator == j) {
      if (l.exponent == 1) {
        accumulate(s, FreeWord(prefix), 1);
      } else {
        std::vector<Letter> p = prefix;
        p.push_back(l);
        accumulate(s, FreeWord(p), -1);
      }
    }
    prefix.push_back(l);
  }
  return s;
}

LaurentPolynomial abelianize_t(const FoxSum& s) {
  LaurentPolynomial p;
  for (const auto& [w, c] : s) {
    std::int64_t e = 0;
    for (const Letter& l : w.letters()) e += l.exponent;
    p += LaurentPolynomial::monomial(c, e);
  }
  return p;
}

LaurentPolynomial fox_derive_t(const FreeWord& w, int j) {
  LaurentPolynomial p;
  std::int64_t e = 0;
  for (const Letter& l : w.letters()) {
    if (l.generator == j) p += LaurentPolynomial::monomial(l.exponent, l.exponent == 1 ? e : e - 1);
    e += l.exponent;
  }
  return p;
}

FoxSum operator+(const FoxSum& a, const FoxSum& b) {
  FoxSum r = a;
  for (const auto& [w, c] : b) accumulate(r, w, c);
  return r;
}

FoxSum operator*(const FreeWord& u, const FoxSum& s) {
  FoxSum r;
  for (const auto& [w, c] : s) accumulate(r, u * w, c);
  return r;
}

}  // namespace wld

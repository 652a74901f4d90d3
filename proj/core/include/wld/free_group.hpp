#pragma once

// Free-group words, Fox derivatives and finite presentations.

#include <map>
#include <string>
#include <vector>

#include "wld/laurent.hpp"

namespace wld {

struct Letter {
  int generator = 0;  // 0-based
  int exponent = 1;   // +1 or -1

  auto operator<=>(const Letter&) const = default;
};

/// Freely reduced word.
class FreeWord {
 public:
  FreeWord() = default;
  /// Reduces the given letters.
  explicit FreeWord(const std::vector<Letter>& letters);
  static FreeWord generator(int g, int power = 1);

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  bool empty() const noexcept { return letters_.empty(); }
  std::size_t length() const noexcept { return letters_.size(); }
  /// Exponent sum of generator g.
  int exponent_sum(int g) const;
  int max_generator() const;  // -1 for the empty word

  FreeWord inverse() const;
  friend FreeWord operator*(const FreeWord& a, const FreeWord& b);
  auto operator<=>(const FreeWord&) const = default;

 private:
  std::vector<Letter> letters_;
};

/// "x1 x3^2 x2^-1" (1-based indices); "1" for the empty word.
std::string to_string(const FreeWord& w);

/// Element of the integral group ring Z[F], keyed by reduced word.
using FoxSum = std::map<FreeWord, Integer>;

/// Fox derivative with respect to generator j.
FoxSum fox_derive(const FreeWord& w, int j);
/// Image under x_i -> t for all i.
LaurentPolynomial abelianize_t(const FoxSum& s);
/// abelianize_t(fox_derive(w, j)) without building the intermediate sum.
LaurentPolynomial fox_derive_t(const FreeWord& w, int j);

FoxSum operator+(const FoxSum& a, const FoxSum& b);
/// Left multiplication by a group element.
FoxSum operator*(const FreeWord& u, const FoxSum& s);

enum class PresentationKind : unsigned char { welded, core, other };

struct GroupPresentation {
  int generators = 0;
  std::vector<FreeWord> relators;
  PresentationKind kind = PresentationKind::other;
};

}  // namespace wld

#include "wld/laurent.hpp"

#include <cctype>
#include <stdexcept>

namespace wld {

LaurentPolynomial::LaurentPolynomial(long c) {
  if (c != 0) terms_.emplace(0, Integer(c));
}

LaurentPolynomial::LaurentPolynomial(const Integer& c) {
  if (c != 0) terms_.emplace(0, c);
}

LaurentPolynomial LaurentPolynomial::monomial(const Integer& c, std::int64_t e) {
  LaurentPolynomial p;
  if (c != 0) p.terms_.emplace(e, c);
  return p;
}

Integer LaurentPolynomial::coefficient(std::int64_t e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

std::int64_t LaurentPolynomial::low() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no lowest exponent");
  return terms_.begin()->first;
}

std::int64_t LaurentPolynomial::high() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no highest exponent");
  return terms_.rbegin()->first;
}

std::int64_t LaurentPolynomial::span() const noexcept {
  return terms_.empty() ? -1 : terms_.rbegin()->first - terms_.begin()->first;
}

Integer LaurentPolynomial::content() const {
  Integer g = 0;
  for (const auto& [e, c] : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

Integer LaurentPolynomial::at_one() const {
  Integer s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

void LaurentPolynomial::add_term(std::int64_t e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& o) {
  *this = *this * o;
  return *this;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentPolynomial LaurentPolynomial::shifted(std::int64_t by) const {
  LaurentPolynomial r;
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + by, c);
  return r;
}

namespace {

// Dense polynomials over Z, coefficient of t^i at index i, no trailing zeros.
using Dense = std::vector<Integer>;

Dense to_dense(const LaurentPolynomial& p) {
  if (p.is_zero()) return {};
  const auto lo = p.low();
  Dense d(static_cast<std::size_t>(p.high() - lo + 1));
  for (const auto& [e, c] : p.terms()) d[static_cast<std::size_t>(e - lo)] = c;
  return d;
}

LaurentPolynomial from_dense(const Dense& d) {
  LaurentPolynomial p;
  for (std::size_t i = 0; i < d.size(); ++i) p += LaurentPolynomial::monomial(d[i], static_cast<std::int64_t>(i));
  return p;
}

void trim(Dense& d) {
  while (!d.empty() && d.back() == 0) d.pop_back();
}

int degree(const Dense& d) { return static_cast<int>(d.size()) - 1; }

Integer dense_content(const Dense& d) {
  Integer g = 0;
  for (const auto& c : d) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

Dense divide_scalar(Dense d, const Integer& s) {
  for (auto& c : d) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), s.get_mpz_t());
  return d;
}

Dense primitive_part(const Dense& d) {
  if (d.empty()) return d;
  Dense p = divide_scalar(d, dense_content(d));
  if (p.back() < 0)
    for (auto& c : p) c = -c;
  return p;
}

// lc(b)^(deg a - deg b + 1) * a  mod  b
Dense pseudo_remainder(Dense a, const Dense& b) {
  const int db = degree(b);
  const int e = degree(a) - db + 1;
  const Integer& lb = b.back();
  int steps = 0;
  while (!a.empty() && degree(a) >= db) {
    const Integer la = a.back();
    const int shift = degree(a) - db;
    for (auto& c : a) c *= lb;
    for (int i = 0; i <= db; ++i) a[static_cast<std::size_t>(i + shift)] -= la * b[static_cast<std::size_t>(i)];
    trim(a);
    ++steps;
  }
  Integer pad;
  mpz_pow_ui(pad.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e - steps));
  for (auto& c : a) c *= pad;
  return a;
}

Integer power(const Integer& b, int e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

// Subresultant remainder sequence on primitive parts.
Dense dense_gcd(Dense a, Dense b) {
  if (a.empty()) return b;  // gcd(0, b) keeps the content of b
  if (b.empty()) return a;
  if (degree(a) < degree(b)) std::swap(a, b);
  Integer d;
  const Integer ca = dense_content(a), cb = dense_content(b);
  mpz_gcd(d.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  a = divide_scalar(a, ca);
  b = divide_scalar(b, cb);
  Integer g = 1, h = 1;
  while (true) {
    const int delta = degree(a) - degree(b);
    Dense r = pseudo_remainder(a, b);
    if (r.empty()) break;
    if (degree(r) == 0) {
      b = {Integer(1)};
      break;
    }
    a = std::move(b);
    b = divide_scalar(r, g * power(h, delta));
    g = a.back();
    // h = g^delta / h^(delta - 1)
    if (delta == 0) {
      // h stays
    } else {
      const Integer num = power(g, delta);
      const Integer den = power(h, delta - 1);
      h = num;
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
  }
  Dense out = primitive_part(b);
  for (auto& c : out) c *= d;
  return out;
}

}  // namespace

LaurentPolynomial exact_divide(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) return {};
  Dense num = to_dense(a);
  const Dense den = to_dense(b);
  if (degree(num) < degree(den)) throw std::domain_error("polynomial does not divide");
  Dense q(static_cast<std::size_t>(degree(num) - degree(den) + 1));
  const Integer& lb = den.back();
  while (!num.empty() && degree(num) >= degree(den)) {
    if (!mpz_divisible_p(num.back().get_mpz_t(), lb.get_mpz_t()))
      throw std::domain_error("polynomial does not divide");
    Integer c;
    mpz_divexact(c.get_mpz_t(), num.back().get_mpz_t(), lb.get_mpz_t());
    const int shift = degree(num) - degree(den);
    q[static_cast<std::size_t>(shift)] = c;
    for (int i = 0; i <= degree(den); ++i) num[static_cast<std::size_t>(i + shift)] -= c * den[static_cast<std::size_t>(i)];
    trim(num);
  }
  if (!num.empty()) throw std::domain_error("polynomial does not divide");
  return from_dense(q).shifted(a.low() - b.low());
}

LaurentPolynomial normalize_units(const LaurentPolynomial& p) {
  if (p.is_zero()) return p;
  LaurentPolynomial r = p.shifted(-p.low());
  if (r.terms().begin()->second < 0) r = -r;
  return r;
}

bool is_unit(const LaurentPolynomial& p) {
  return p.terms().size() == 1 && abs(p.terms().begin()->second) == 1;
}

LaurentPolynomial poly_gcd(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  return normalize_units(from_dense(dense_gcd(to_dense(a), to_dense(b))));
}

LaurentPolynomial poly_gcd(const std::vector<LaurentPolynomial>& ps) {
  Dense g;
  for (const auto& p : ps) {
    g = dense_gcd(g, to_dense(p));
    if (g.size() == 1 && g[0] == 1) break;
  }
  return normalize_units(from_dense(g));
}

std::string to_string(const LaurentPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool neg = c < 0;
    const Integer mag = abs(c);
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str();
    out += "t";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

LaurentPolynomial parse_laurent(std::string_view text) {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("bad polynomial '" + std::string(text) + "': " + why);
  };
  auto digits = [&] {
    const std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    return std::string(text.substr(start, i - start));
  };
  LaurentPolynomial p;
  skip();
  if (i == text.size()) fail("empty");
  bool first = true;
  while (true) {
    skip();
    if (i == text.size()) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      fail("expected + or -");
    }
    first = false;
    Integer coef = 1;
    bool have_coef = false;
    const std::string num = digits();
    if (!num.empty()) {
      coef = Integer(num);
      have_coef = true;
      skip();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip();
        if (i >= text.size() || text[i] != 't') fail("expected t after *");
      }
    }
    std::int64_t e = 0;
    if (i < text.size() && text[i] == 't') {
      ++i;
      e = 1;
      skip();
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip();
        int esign = 1;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
          esign = text[i] == '-' ? -1 : 1;
          ++i;
        }
        const std::string ed = digits();
        if (ed.empty()) fail("missing exponent");
        e = esign * std::stoll(ed);
      }
    } else if (!have_coef) {
      fail("expected term");
    }
    p += LaurentPolynomial::monomial(sign * coef, e);
  }
  return p;
}

}  // namespace wld

#include <doctest.h>

#include <algorithm>

#include "support.hpp"
#include "wld/free_group.hpp"
#include "wld/ideal.hpp"
#include "wld/int_matrix.hpp"
#include "wld/laurent.hpp"

using namespace wld;
using wld::testing::cleaned;

namespace {

LaurentPolynomial P(const char* s) { return parse_laurent(s); }

LaurentPolynomial random_poly(Rng& rng, int terms, int span, int bound) {
  LaurentPolynomial p;
  for (int i = 0; i < terms; ++i) p += LaurentPolynomial::monomial(rng.range(-bound, bound), rng.range(-span, span));
  return p;
}

}  // namespace

TEST_SUITE("laurent") {
  TEST_CASE("arithmetic and printing") {
    CHECK((P("1 - t") * P("1 + t")) == P("1 - t^2"));
    CHECK(to_string(P("1 - t^2")) == "1 - t^2");
    CHECK(to_string(P("t^-1 + 1")) == "t^-1 + 1");
    CHECK(to_string(LaurentPolynomial()) == "0");
    CHECK(to_string(LaurentPolynomial::monomial(-3, 2)) == "-3t^2");
    CHECK(P("2*t + 3") == P("3 + 2t"));
    CHECK((P("1 + t") - P("1 + t")).is_zero());
    CHECK(P("t^3 - t").span() == 2);
    CHECK(LaurentPolynomial().span() == -1);
    CHECK(P("2 - 4t + 6t^3").content() == 2);
    CHECK(P("1 - t + t^2").at_one() == 1);
  }

  TEST_CASE("no zero coefficients are stored") {
    const auto p = P("1 + t") + P("-t");
    CHECK(p.terms().size() == 1);
    const auto q = P("1 - t") * P("1 + t");
    for (const auto& [e, c] : q.terms()) CHECK(c != 0);
  }

  TEST_CASE("unit normalization") {
    CHECK(normalize_units(P("-t^3 + t^4 - t^5")) == P("1 - t + t^2"));
    CHECK(normalize_units(1) == LaurentPolynomial(1));
    CHECK(normalize_units(P("-2t^-4")) == LaurentPolynomial(2));
    CHECK(normalize_units(LaurentPolynomial()).is_zero());
    CHECK(is_unit(P("-t^7")));
    CHECK_FALSE(is_unit(P("2")));
    CHECK_FALSE(is_unit(P("1 + t")));
  }

  TEST_CASE("exact division") {
    CHECK(exact_divide(P("1 - t^3"), P("1 - t")) == P("1 + t + t^2"));
    CHECK(exact_divide(P("t^-2 - t^2"), P("t^-1 + t")) == P("t^-1 - t"));
    CHECK_THROWS_AS(exact_divide(P("1 + t^2"), P("1 + t")), std::domain_error);
  }

  TEST_CASE("gcd examples") {
    CHECK(poly_gcd({P("1 - t + t^2")}) == P("1 - t + t^2"));
    CHECK(poly_gcd({P("1 - t^2"), P("1 - t^3")}) == P("1 - t"));
    CHECK(poly_gcd({LaurentPolynomial(), P("-t^2 + t^3")}) == P("1 - t"));
    CHECK(poly_gcd(std::vector<LaurentPolynomial>{}).is_zero());
    CHECK(poly_gcd({P("2 + 2t"), P("4 - 4t^2")}) == P("2 + 2t"));
  }

  TEST_CASE("gcd divides its inputs and recovers planted factors") {
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
      const auto g = random_poly(rng, 3, 2, 3);
      const auto a = random_poly(rng, 3, 3, 4) * g, b = random_poly(rng, 3, 3, 4) * g;
      const auto d = poly_gcd(a, b);
      if (a.is_zero() && b.is_zero()) {
        CHECK(d.is_zero());
        continue;
      }
      CHECK(d == normalize_units(d));
      if (!a.is_zero()) CHECK_NOTHROW(exact_divide(a, d));
      if (!b.is_zero()) CHECK_NOTHROW(exact_divide(b, d));
      if (!g.is_zero()) CHECK_NOTHROW(exact_divide(d, normalize_units(g)));
    }
  }

  TEST_CASE("ring axioms on random polynomials") {
    Rng rng(12);
    for (int trial = 0; trial < 200; ++trial) {
      const auto a = random_poly(rng, 4, 3, 5), b = random_poly(rng, 4, 3, 5), c = random_poly(rng, 4, 3, 5);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * b == b * a);
      CHECK(parse_laurent(to_string(a)) == a);
      CHECK(a.shifted(3) == a * LaurentPolynomial::t(3));
    }
  }
}

TEST_SUITE("free group") {
  TEST_CASE("reduction and inverses") {
    const FreeWord w({{0, 1}, {1, 1}, {1, -1}, {0, 1}});
    CHECK(w == FreeWord::generator(0, 2));
    CHECK(to_string(w) == "x1^2");
    CHECK(to_string(FreeWord()) == "1");
    const FreeWord u({{0, 1}, {2, -1}, {1, 1}});
    CHECK((u * u.inverse()).empty());
    CHECK(u.exponent_sum(2) == -1);
    CHECK(u.max_generator() == 2);
  }

  TEST_CASE("Fox derivative axioms") {
    const auto x = FreeWord::generator(0);
    CHECK(cleaned(fox_derive(x, 0)) == FoxSum{{FreeWord(), 1}});
    CHECK(cleaned(fox_derive(x.inverse(), 0)) == FoxSum{{x.inverse(), -1}});
    CHECK(cleaned(fox_derive(x, 1)).empty());
  }

  TEST_CASE("Fox derivative entries of a block relator") {
    for (int n = 1; n <= 5; ++n) {
      // x1 x3^n x2^-1 x3^-n
      const FreeWord w = FreeWord::generator(0) * FreeWord::generator(2, n) * FreeWord::generator(1, -1) *
                         FreeWord::generator(2, -n);
      CHECK(abelianize_t(fox_derive(w, 1)) == -LaurentPolynomial::t(n));
      CHECK(abelianize_t(fox_derive(w, 2)) == LaurentPolynomial::t(n) - 1);
      CHECK(fox_derive_t(w, 2) == LaurentPolynomial::t(n) - 1);
    }
  }

  TEST_CASE("product rule and fundamental formula on random words") {
    Rng rng(21);
    for (int trial = 0; trial < 500; ++trial) {
      const FreeWord u = testing::random_word(rng, 3, 10), v = testing::random_word(rng, 3, 10);
      FoxSum fundamental;
      for (int j = 0; j < 3; ++j) {
        const auto d = fox_derive(u * v, j);
        CHECK(cleaned(d) == cleaned(fox_derive(u, j) + u * fox_derive(v, j)));
        CHECK(fox_derive_t(u * v, j) == abelianize_t(d));
        // sum_j (du/dx_j)(x_j - 1) = u - 1
        for (const auto& [w, c] : fox_derive(u, j)) {
          fundamental[w * FreeWord::generator(j)] += c;
          fundamental[w] -= c;
        }
      }
      FoxSum expected{{u, 1}};
      expected[FreeWord()] -= 1;
      CHECK(cleaned(fundamental) == cleaned(expected));
    }
  }
}

TEST_SUITE("integer matrices") {
  TEST_CASE("snf and hnf examples") {
    CHECK(snf(IntMatrix{{2, 0}, {0, 3}}) == std::vector<Integer>{1, 6});
    const IntMatrix zero(2, 3);
    CHECK(hnf(zero) == zero);
    CHECK(snf(zero).empty());
    CHECK(rank(zero) == 0);
    // abelianized core relations of the trefoil: 2y - x - z per crossing
    const IntMatrix core{{-1, 2, -1}, {-1, -1, 2}, {2, -1, -1}};
    CHECK(snf(core) == std::vector<Integer>{1, 3});
    CHECK(rank(core) == 2);
    CHECK(hnf(IntMatrix{{4, 6}, {2, 3}}) == IntMatrix{{2, 3}, {0, 0}});
  }

  TEST_CASE("hnf and snf against determinantal-divisor oracles") {
    Rng rng(31);
    for (int trial = 0; trial < 300; ++trial) {
      const auto r = static_cast<std::size_t>(rng.range(1, 4)), c = static_cast<std::size_t>(rng.range(1, 4));
      const IntMatrix m = testing::random_int_matrix(rng, r, c, 4);
      const IntMatrix h = hnf(m);
      CHECK(h.rows() == m.rows());
      CHECK(testing::is_hnf_of(h, m));
      CHECK(hnf(h) == h);
      const auto s = snf(m);
      CHECK(s == testing::oracle_invariant_factors(m));
      CHECK(s.size() == rank(m));
      for (std::size_t i = 1; i < s.size(); ++i) CHECK(s[i] % s[i - 1] == 0);
    }
  }

  TEST_CASE("hnf is invariant under row operations") {
    Rng rng(32);
    for (int trial = 0; trial < 100; ++trial) {
      IntMatrix m = testing::random_int_matrix(rng, 3, 3, 5);
      const IntMatrix h = hnf(m);
      IntMatrix n = m;
      n.swap_rows(0, 2);
      const Integer f = rng.range(-3, 3);
      for (std::size_t c = 0; c < 3; ++c) n(1, c) += f * n(0, c);
      CHECK(hnf(n) == h);
    }
  }
}

TEST_SUITE("ideals modulo 1 - t^n") {
  TEST_CASE("reduction and the f_n functional") {
    CHECK(reduce_mod(P("1 - t + t^2"), 2) == std::vector<Integer>{2, -1});
    CHECK(reduce_mod(P("t^-1"), 3) == std::vector<Integer>{0, 0, 1});
    CHECK(f_n(P("1 - t + t^2"), 2) == 2);
    CHECK(f_n(P("1 - t + t^2"), 3) == 2);
    CHECK_THROWS(f_n(P("1"), 0));
    CHECK_THROWS(ideal_mod({P("1")}, 0));
  }

  TEST_CASE("principal membership") {
    for (int n = 1; n <= 8; ++n)
      for (int s = -3; s <= 3; ++s) CHECK(member_of_principal(LaurentPolynomial::t(s) * (1 - LaurentPolynomial::t(n)), n));
    for (int n = 2; n <= 12; ++n)
      for (int eps : {1, -1})
        for (int r = 0; r < n; ++r)
          CHECK_FALSE(member_of_principal(P("1 - t + t^2") - LaurentPolynomial::monomial(eps, r), n));
  }

  TEST_CASE("f_n vanishes on the principal ideal") {
    Rng rng(41);
    for (int trial = 0; trial < 200; ++trial) {
      const int n = rng.range(1, 9), s = rng.range(-5, 5);
      const auto p = random_poly(rng, 4, 4, 6);
      CHECK(f_n(p * LaurentPolynomial::t(s) * (1 - LaurentPolynomial::t(n)), n) == 0);
    }
  }

  TEST_CASE("the two membership routes agree") {
    Rng rng(42);
    for (int trial = 0; trial < 200; ++trial) {
      const int n = rng.range(1, 7);
      auto p = random_poly(rng, 3, 4, 3);
      if (rng.below(2)) p = p * (1 - LaurentPolynomial::t(n));
      const auto base = 1 - LaurentPolynomial::t(n);
      CHECK(member_of_principal(p, n) == ideal_equal_mod({p, base}, {base}, n));
    }
  }

  TEST_CASE("lattice is order independent and absorbs multiples") {
    Rng rng(43);
    for (int trial = 0; trial < 100; ++trial) {
      const int n = rng.range(1, 8);
      std::vector<LaurentPolynomial> gens{random_poly(rng, 3, 3, 4), random_poly(rng, 3, 3, 4), random_poly(rng, 2, 3, 4)};
      const auto l = ideal_mod(gens, n);
      auto shuffled = gens;
      std::reverse(shuffled.begin(), shuffled.end());
      CHECK(ideal_mod(shuffled, n) == l);
      auto extended = gens;
      extended.push_back(random_poly(rng, 3, 3, 3) * gens[1]);
      CHECK(ideal_mod(extended, n) == l);
      CHECK(testing::is_hermite_form(l.basis));
      for (const auto& g : gens) CHECK(contains(l, g));
    }
  }

  TEST_CASE("unit and zero ideals") {
    CHECK(ideal_mod({P("1")}, 5).is_unit_ideal());
    CHECK(ideal_mod({}, 5).is_zero());
    CHECK(ideal_mod({P("1 - t^4")}, 4).is_zero());
    // resultant of 1 - t + t^2 and t^n - 1 is 1 when gcd(n, 6) = 1
    for (int n : {5, 7, 11}) CHECK(ideal_mod({P("1 - t + t^2")}, n).is_unit_ideal());
    for (int n : {2, 3, 4, 6, 8, 9, 10, 12}) CHECK_FALSE(ideal_mod({P("1 - t + t^2")}, n).is_unit_ideal());
  }
}

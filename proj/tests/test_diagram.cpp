#include <doctest.h>

#include <map>

#include "support.hpp"
#include "wld/corpus.hpp"
#include "wld/diagram.hpp"
#include "wld/invariants.hpp"

using namespace wld;

TEST_SUITE("diagram") {
  TEST_CASE("parsing the basic codes") {
    const Diagram tre = parse_diagram("component: O1+ U2+ O3+ U1+ O2+ U3+");
    CHECK(tre.mu() == 1);
    CHECK(tre.crossing_count() == 3);
    CHECK(tre == named("trefoil"));

    const Diagram unk = parse_diagram("component:");
    CHECK(unk.crossing_count() == 0);
    CHECK(serialize(unk) == "component:");
    CHECK(serialize(named("unknot")) == "component:");

    const Diagram hopf = parse_diagram("component: O1+ U2+\ncomponent: U1+ O2+");
    CHECK(hopf.mu() == 2);
    CHECK(hopf == named("hopf+"));
    CHECK(hopf.crossing(1).over.component == 0);
    CHECK(hopf.crossing(1).under.component == 1);
  }

  TEST_CASE("comments, blank lines and string links") {
    const Diagram d = parse_diagram("# two strands\nstringlink\n\ncomponent: O1- \ncomponent: U1-\n");
    CHECK(d.is_string_link());
    CHECK(d.crossing(1).sign == -1);
    CHECK(serialize(d) == "stringlink\ncomponent: O1-\ncomponent: U1-");
  }

  TEST_CASE("parse errors carry positions") {
    try {
      parse_diagram("component: O1+ U1+\ncomponent: O2+ X3+");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
      CHECK(e.column() > 1);
    }
    CHECK_THROWS_AS(parse_diagram("component: O1+"), ParseError);
    CHECK_THROWS_AS(parse_diagram("component: O1+ U1-"), ParseError);
    CHECK_THROWS_AS(parse_diagram("component: O1+ O1+"), ParseError);
    CHECK_THROWS_AS(parse_diagram(""), ParseError);
    CHECK_THROWS_AS(parse_diagram("component: O1+ U1+\nstringlink"), ParseError);
    CHECK_THROWS_AS(parse_diagram("strand: O1+ U1+"), ParseError);
  }

  TEST_CASE("arc counts") {
    CHECK(arcs(named("trefoil")).size() == 3);
    CHECK(arcs(named("unknot")).size() == 1);
    CHECK(arcs(named("hopf+")).size() == 2);
    CHECK(arcs(Diagram::unlink(3)).size() == 3);
  }

  TEST_CASE("closure") {
    const Diagram one = Diagram::trivial_string_link(2);
    const Diagram c = closure(one);
    CHECK_FALSE(c.is_string_link());
    CHECK(c == Diagram::unlink(2));
    const Diagram s = parse_diagram("stringlink\ncomponent: O1+ U2-\ncomponent: O2- U1+");
    const Diagram cs = closure(s);
    CHECK(cs.crossing_count() == s.crossing_count());
    CHECK(cs.components() == s.components());
  }

  TEST_CASE("random diagram properties") {
    Rng rng(101);
    for (int trial = 0; trial < 300; ++trial) {
      const auto kind = rng.below(3) == 0 ? DiagramKind::string_link : DiagramKind::link;
      const Diagram d = random_diagram(rng, 10, 4, kind);
      CAPTURE(serialize(d));
      CHECK(parse_diagram(serialize(d)) == d);

      int overs = 0, unders = 0;
      for (const auto& comp : d.components())
        for (const auto& p : comp) (p.role == Role::over ? overs : unders)++;
      CHECK(overs == d.crossing_count());
      CHECK(unders == d.crossing_count());

      // arcs partition each component; closed components have
      // max(1, #unders) arcs, open strands one more
      const auto as = arcs(d);
      std::map<int, int> covered, count;
      for (const auto& a : as) {
        covered[a.component] += a.length;
        ++count[a.component];
      }
      for (int c = 0; c < d.mu(); ++c) {
        int u = 0;
        for (const auto& p : d.component(c)) u += p.role == Role::under;
        CHECK(covered[c] == static_cast<int>(d.component(c).size()));
        CHECK(count[c] == (d.is_string_link() ? u + 1 : std::max(1, u)));
      }

      if (!d.is_string_link()) {
        const Diagram c = closure(parse_diagram("stringlink\n" + serialize(d)));
        CHECK(c == d);
      }
    }
  }

  TEST_CASE("basepoint rotation and relabelling do not change invariants") {
    Rng rng(102);
    for (int trial = 0; trial < 100; ++trial) {
      const Diagram d = random_diagram(rng, 7, 3, DiagramKind::link);
      CAPTURE(serialize(d));
      const int c = rng.range(0, d.mu() - 1);
      const int len = static_cast<int>(d.component(c).size());
      const Diagram r = rotated(d, c, len == 0 ? 0 : rng.range(0, len - 1));
      CHECK(canonical_key(r) == canonical_key(d));
      CHECK(linking_matrix(r) == linking_matrix(d));
      CHECK(alexander(r, 1).polynomial == alexander(d, 1).polynomial);
      CHECK(coloring_count(r, 3) == coloring_count(d, 3));
      CHECK(abelianization(welded_group(r)).torsion == abelianization(welded_group(d)).torsion);
      CHECK(canonical_key(d.compacted()) == canonical_key(d));
      CHECK(canonical(canonical(d)) == canonical(d));
    }
  }

  TEST_CASE("reversal keeps signs and the crossing set") {
    const Diagram d = named("figure8");
    const Diagram r = reversed(d);
    CHECK(r.crossing_count() == d.crossing_count());
    for (int id : d.crossing_ids()) CHECK(r.crossing(id).sign == d.crossing(id).sign);
    CHECK(reversed(r) == d);
  }
}

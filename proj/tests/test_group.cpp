#include <doctest.h>

#include <algorithm>

#include "spfsym/group.hpp"

using namespace spfsym;

namespace {

const VotingPair kPair32 = checked_pair(3, 2);

GElem gelem(const std::string& text, VotingPair pair) { return parse_gelem(text, pair); }

}  // namespace

TEST_CASE("closure basics") {
  CHECK(PGroup::closure(kPair32, {}).order() == 1);
  CHECK(PGroup::closure(kPair32, {gelem("((1 2)|(1 2))", kPair32)}).order() == 2);
  const PGroup klein = parse_group("((1 2)(3 4)|id);((1 3)(2 4)|id)", checked_pair(4, 2));
  CHECK(klein.order() == 4);
  CHECK(klein == klein_left(checked_pair(4, 2)));
  CHECK_THROWS_AS(PGroup::closure(kPair32, {gelem("((1 2)|id)", checked_pair(2, 2))}),
                  std::invalid_argument);
  CHECK_THROWS_AS(full_group(checked_pair(7, 3)), BoundExceeded);
}

TEST_CASE("join") {
  const PGroup u = PGroup::closure(kPair32, {gelem("((1 2)|(1 2))", kPair32)});
  CHECK(join(u, u) == u);

  const VotingPair p33 = checked_pair(3, 3);
  const PGroup left = parse_group("((1 2 3)|id)", p33);
  const PGroup right = parse_group("(id|(1 2 3))", p33);
  CHECK(join(left, right).order() == 9);

  const PGroup x = parse_group("((1 2)|(1 2));(id|(1 2))", kPair32);
  const PGroup y = parse_group("((2 3)|(1 2));(id|(1 2))", kPair32);
  CHECK(join(x, y) == full_group(kPair32));
}

TEST_CASE("conjugation of groups") {
  const PGroup u = parse_group("((1 2)|(1 2))", kPair32);
  CHECK(conjugate_group(u, identity_elem(kPair32)) == u);
  const GElem g = gelem("((1 2 3)|(1 2))", kPair32);
  const PGroup cg = conjugate_group(u, g);
  CHECK(cg.order() == u.order());
  CHECK(conjugate_group(cg, inverse(g)) == u);

  const PGroup klein = klein_left(checked_pair(4, 2));
  CHECK(conjugate_group(klein, gelem("((1 2)|id)", checked_pair(4, 2))) == klein);
}

TEST_CASE("projections and direct products") {
  const PGroup vw = v_times_w(kPair32, {parse_cycles("(1 2)", 3)}, {parse_cycles("(1 2)", 2)});
  CHECK(is_direct_product(vw));
  CHECK(project1(vw).size() == 2);
  CHECK(project2(vw).size() == 2);

  const PGroup diag = parse_group("((1 2)|(1 2))", kPair32);
  CHECK_FALSE(is_direct_product(diag));
  CHECK(project1(diag).size() == 2);
  CHECK(project2(diag).size() == 2);

  CHECK(diagonal_group(kPair32) == diag);
  CHECK_FALSE(is_direct_product(diagonal_group(kPair32)));
}

TEST_CASE("contains and minimal overgroups") {
  const PGroup g = full_group(kPair32);
  CHECK(minimal_overgroups(g).empty());

  // Besides V = <((1 2)|id),(id|(1 2))> the sign-diagonal copy of S_3 also
  // covers the order-2 diagonal, so two minimal overgroups exist.
  const PGroup u = parse_group("((1 2)|(1 2))", kPair32);
  const std::vector<PGroup> over = minimal_overgroups(u);
  REQUIRE(over.size() == 2);
  const PGroup v = parse_group("((1 2)|id);(id|(1 2))", kPair32);
  CHECK(std::count(over.begin(), over.end(), v) == 1);
  for (const PGroup& w : over) {
    CHECK(w.contains(u));
    CHECK(w.order() > u.order());
  }

  // {id} x S_2 is covered by the three <(a b)> x S_2 and by A_3 x S_2
  // (order 6; nothing of order 2 < k < 6 can sit between).
  const PGroup id_s2 = parse_group("(id|(1 2))", kPair32);
  const std::vector<PGroup> covers = minimal_overgroups(id_s2);
  REQUIRE(covers.size() == 4);
  const PGroup x = parse_group("((1 2)|id);(id|(1 2))", kPair32);
  const PGroup y = parse_group("((2 3)|id);(id|(1 2))", kPair32);
  const PGroup z = parse_group("((1 3)|id);(id|(1 2))", kPair32);
  const PGroup a3s2 = parse_group("((1 2 3)|id);(id|(1 2))", kPair32);
  for (const PGroup& v : {x, y, z, a3s2})
    CHECK(std::count(covers.begin(), covers.end(), v) == 1);
}

TEST_CASE("subgroup enumeration") {
  const std::vector<PGroup>& s22 = all_subgroups(checked_pair(2, 2));
  CHECK(s22.size() == 5);
  const std::vector<PGroup>& s32 = all_subgroups(kPair32);
  CHECK(s32.size() == 16);
  CHECK(std::count(s32.begin(), s32.end(), trivial_group(kPair32)) == 1);
  CHECK(std::count(s32.begin(), s32.end(), full_group(kPair32)) == 1);
}

TEST_CASE("named constructors") {
  CHECK(diagonal_group(checked_pair(3, 3)).order() == 6);
  CHECK(complete_intransitive(checked_pair(4, 2), {{1, 2}, {3, 4}}).order() == 4);
  CHECK(alternating_left(checked_pair(4, 2)).order() == 12);
  CHECK(trivial_group(kPair32).order() == 1);
  CHECK(full_group(kPair32).order() == 12);
  CHECK_THROWS_AS(klein_left(kPair32), std::invalid_argument);
  CHECK_THROWS_AS(diagonal_group(checked_pair(2, 3)), std::invalid_argument);
  CHECK_THROWS_AS(complete_intransitive(kPair32, {{1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(complete_intransitive(kPair32, {{1, 2}, {2, 3}}), std::invalid_argument);
}

TEST_CASE("lattice invariants at (2,2) and (3,2)") {
  for (const VotingPair pair : {checked_pair(2, 2), kPair32}) {
    const std::uint64_t ambient_order = full_group(pair).order();
    for (const PGroup& u : all_subgroups(pair)) {
      CHECK(ambient_order % u.order() == 0);  // Lagrange
      // U sits inside pi1(U) x pi2(U).
      CHECK(u.order() <= project1(u).size() * project2(u).size());
      const PGroup vw = v_times_w(pair, project1(u), project2(u));
      CHECK(vw.contains(u));
    }
  }
}

TEST_CASE("join contains both factors and contains is a partial order") {
  const std::vector<PGroup>& s32 = all_subgroups(kPair32);
  for (std::size_t i = 0; i < s32.size(); i += 3)
    for (std::size_t j = 0; j < s32.size(); j += 4) {
      const PGroup w = join(s32[i], s32[j]);
      CHECK(w.contains(s32[i]));
      CHECK(w.contains(s32[j]));
      const bool ij = s32[i].contains(s32[j]);
      const bool ji = s32[j].contains(s32[i]);
      if (ij && ji) CHECK(s32[i] == s32[j]);
    }
}

TEST_CASE("group literal round-trip") {
  const PGroup u = parse_group("((1 2)(3 4)|id);((1 3)(2 4)|id)", checked_pair(4, 2));
  CHECK(parse_group(format_group(u), checked_pair(4, 2)) == u);
  CHECK(format_group(trivial_group(kPair32)).empty());
  CHECK(parse_group("", kPair32).order() == 1);
  CHECK_THROWS_AS(parse_group("((1 2)|", kPair32), std::invalid_argument);
  CHECK_THROWS_AS(parse_group("(1 2)", kPair32), std::invalid_argument);
}

TEST_CASE("element set wrapping validates closure") {
  const std::vector<GElem> not_closed{identity_elem(kPair32),
                                      gelem("((1 2 3)|id)", kPair32)};
  CHECK_THROWS_AS(PGroup::from_elements(kPair32, not_closed), std::invalid_argument);
}

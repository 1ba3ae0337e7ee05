#include <doctest.h>

#include <numeric>
#include <random>

#include "spfsym/regularity.hpp"

using namespace spfsym;

namespace {

const VotingPair kPair32 = checked_pair(3, 2);

}  // namespace

TEST_CASE("regular groups by definition") {
  // Subgroups of S_h x {id} are regular.
  CHECK(is_regular_by_definition(v_times_w(kPair32, {parse_cycles("(1 2 3)", 3)}, {})));
  CHECK(is_regular_by_definition(trivial_group(kPair32)));
  CHECK_FALSE(is_regular_by_definition(full_group(checked_pair(3, 3))));
}

TEST_CASE("regularity by the cycle-type criterion") {
  const VotingPair p42 = checked_pair(4, 2);
  const PGroup a4s2 = v_times_w(
      p42, {parse_cycles("(1 2 3)", 4), parse_cycles("(1 2)(3 4)", 4)},
      {parse_cycles("(1 2)", 2)});
  CHECK(a4s2.order() == 24);
  CHECK_FALSE(is_regular_by_criterion(a4s2));

  const VotingPair p33 = checked_pair(3, 3);
  CHECK_FALSE(is_regular_by_criterion(parse_group("((1 2 3)|id);(id|(1 2 3))", p33)));

  // V x W with V fixing a point of [h].
  CHECK(is_regular_by_criterion(
      v_times_w(kPair32, {parse_cycles("(2 3)", 3)}, {parse_cycles("(1 2)", 2)})));
}

TEST_CASE("regularity of the ambient group") {
  CHECK(is_regular(full_group(checked_pair(5, 3))));  // gcd(5,6)=1
  CHECK_FALSE(is_regular(diagonal_group(checked_pair(3, 3))));
  CHECK(is_regular(diagonal_group(kPair32)));  // gcd(3,2)=1
}

TEST_CASE("criterion matches definition over small lattices") {
  for (const VotingPair pair : {checked_pair(2, 2), kPair32, checked_pair(2, 3)})
    for (const PGroup& u : all_subgroups(pair))
      CHECK(is_regular_by_criterion(u) == is_regular_by_definition(u));
}

TEST_CASE("is_regular verify mode accepts consistent groups") {
  for (const PGroup& u : all_subgroups(kPair32))
    CHECK_NOTHROW(is_regular(u, true));
}

TEST_CASE("regularity is subgroup- and conjugacy-closed") {
  const std::vector<PGroup>& lattice = all_subgroups(checked_pair(4, 2));
  const PGroup g = full_group(checked_pair(4, 2));
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
  for (const PGroup& u : lattice) {
    if (!is_regular_by_criterion(u)) continue;
    for (const PGroup& w : lattice)
      if (u.contains(w)) CHECK(is_regular_by_criterion(w));
    for (int trial = 0; trial < 3; ++trial)
      CHECK(is_regular_by_criterion(conjugate_group(u, g.elements()[pick(rng)])));
  }
}

TEST_CASE("regular maximal") {
  CHECK(is_regular_maximal(parse_group("(id|(1 2))", checked_pair(2, 2))));
  // S_4 x {id} at (4,2): the only overgroup is the non-regular full group.
  const VotingPair p42 = checked_pair(4, 2);
  CHECK(is_regular_maximal(
      v_times_w(p42, {parse_cycles("(1 2)", 4), parse_cycles("(1 2 3 4)", 4)}, {})));
  // At (5,3) the full group is regular, so nothing below it is maximal.
  CHECK_FALSE(is_regular_maximal(trivial_group(checked_pair(5, 3))));
  CHECK(is_regular_maximal(full_group(checked_pair(5, 3))));
  CHECK_FALSE(is_regular_maximal(full_group(checked_pair(3, 3))));
}

TEST_CASE("regular-maximal set is conjugacy-closed at (2,2) and (3,2)") {
  for (const VotingPair pair : {checked_pair(2, 2), kPair32}) {
    const PGroup g = full_group(pair);
    for (const PGroup& u : all_subgroups(pair)) {
      if (!is_regular_maximal(u)) continue;
      for (std::size_t i = 0; i < g.order(); i += 3)
        CHECK(is_regular_maximal(conjugate_group(u, g.elements()[i])));
    }
  }
}

#include <doctest.h>

#include <algorithm>
#include <random>

#include "spfsym/regularity.hpp"
#include "spfsym/spf.hpp"

using namespace spfsym;

namespace {

const VotingPair kPair32 = checked_pair(3, 2);

// Every SPF at (3,2) as a raw 8-entry bit table.
std::vector<Spf> all_spfs_32() {
  std::vector<Spf> out;
  for (std::uint32_t bits = 0; bits < 256; ++bits) {
    std::vector<std::uint16_t> table(8);
    for (int i = 0; i < 8; ++i) table[static_cast<std::size_t>(i)] = (bits >> i) & 1;
    out.push_back(Spf(kPair32, std::move(table)));
  }
  return out;
}

}  // namespace

TEST_CASE("from_assignment with the trivial group packages the table") {
  const PGroup trivial = trivial_group(kPair32);
  const std::vector<std::uint16_t> values{0, 1, 1, 0, 1, 0, 0, 1};
  const Spf f = from_assignment(OrbitAssignment{trivial, values}, true);
  CHECK(f.table() == values);
}

TEST_CASE("from_assignment extends U-symmetrically") {
  const PGroup u = parse_group("(id|(1 2))", kPair32);
  const Spf f = from_assignment(OrbitAssignment{u, {0, 0, 0, 0}}, true);
  const GElem flip = parse_gelem("(id|(1 2))", kPair32);
  const Perm sigma = parse_cycles("(1 2)", 2);
  for (std::uint64_t i = 0; i < 8; ++i) {
    const Profile p = profile_unindex(i, kPair32);
    CHECK(f.evaluate(apply(p, flip)) == compose(sigma, f.evaluate(p)));
  }
  CHECK(is_symmetric_under(f, u));
}

TEST_CASE("from_assignment rejects non-regular groups") {
  const PGroup diag22 = diagonal_group(checked_pair(2, 2));
  CHECK_FALSE(is_regular(diag22));
  CHECK_THROWS_AS(from_assignment(OrbitAssignment{diag22, {0, 0}}, false),
                  std::invalid_argument);
}

TEST_CASE("symmetric SPF counting matches exhaustive filtering") {
  const PGroup u = parse_group("(id|(1 2))", kPair32);
  CHECK(orbit_count(u) == 4);
  CHECK(symmetric_spf_count(u) == 16);
  int found = 0;
  for (const Spf& f : all_spfs_32())
    if (is_symmetric_under(f, u)) ++found;
  CHECK(found == 16);

  CHECK(symmetric_spf_count(trivial_group(kPair32)) == 256);
  CHECK(symmetric_spf_count(diagonal_group(checked_pair(2, 2))) == 0);
}

TEST_CASE("assignment / table reading is a bijection on F^U") {
  for (const PGroup& u : all_subgroups(kPair32)) {
    if (u.order() > 4) continue;
    const OrbitPartition& part = all_orbits(u);
    const std::uint32_t r = part.orbit_count;
    std::vector<Spf> built;
    std::vector<std::uint16_t> values(r, 0);
    for (;;) {
      const Spf f = from_assignment(OrbitAssignment{u, values}, true);
      // Reading the representative values back recovers the assignment.
      for (std::uint32_t j = 0; j < r; ++j)
        CHECK(f.table()[part.reps[j]] == values[j]);
      built.push_back(f);
      std::uint32_t pos = 0;
      while (pos < r && values[pos] == 1) values[pos++] = 0;
      if (pos == r) break;
      ++values[pos];
    }
    // Distinct assignments give distinct SPFs and exhaust F^U.
    std::sort(built.begin(), built.end(),
              [](const Spf& a, const Spf& b) { return a.table() < b.table(); });
    CHECK(std::adjacent_find(built.begin(), built.end()) == built.end());
    int symmetric = 0;
    for (const Spf& f : all_spfs_32())
      if (is_symmetric_under(f, u)) ++symmetric;
    CHECK(static_cast<std::size_t>(symmetric) == built.size());
  }
}

TEST_CASE("built-in SPFs evaluate per their definitions") {
  const Spf d1 = dictatorship(kPair32, 1);
  const Profile p = parse_profile("2>1, 1>2, 2>1", kPair32);
  CHECK(d1.evaluate(p) == parse_order("2>1", 2));
  CHECK(dictatorship(kPair32, 3).evaluate(p) == parse_order("2>1", 2));
  CHECK(dictatorship(kPair32, 2).evaluate(p) == parse_order("1>2", 2));

  const Perm sigma = parse_cycles("(1 2)", 2);
  CHECK(constant_spf(kPair32, sigma).evaluate(p) == sigma);

  const Spf m3 = majority_spf(kPair32);
  CHECK(m3.evaluate(parse_profile("1>2, 1>2, 2>1", kPair32)).is_identity());
  CHECK(m3.evaluate(parse_profile("2>1, 2>1, 1>2", kPair32)) == sigma);

  const Spf m4 = majority_spf(checked_pair(4, 2));
  CHECK(m4.evaluate(parse_profile("1>2, 1>2, 2>1, 2>1", checked_pair(4, 2))).is_identity());
  CHECK_THROWS_AS(majority_spf(checked_pair(3, 3)), std::invalid_argument);
}

TEST_CASE("every SPF is symmetric under the trivial group") {
  std::mt19937 rng(37);
  std::uniform_int_distribution<int> bit(0, 1);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::uint16_t> table(8);
    for (auto& v : table) v = static_cast<std::uint16_t>(bit(rng));
    CHECK(is_symmetric_under(Spf(kPair32, std::move(table)), trivial_group(kPair32)));
  }
}

TEST_CASE("the constant SPF is fully anonymous") {
  for (const VotingPair pair : {kPair32, checked_pair(4, 2), checked_pair(3, 3)}) {
    const Spf c = constant_spf(pair, Perm(pair.n));
    std::vector<Perm> gens{parse_cycles("(1 2)", pair.h)};
    if (pair.h > 2) {
      std::vector<int> cyc(static_cast<std::size_t>(pair.h));
      for (int i = 0; i < pair.h; ++i) cyc[static_cast<std::size_t>(i)] = i + 1;
      gens.push_back(Perm::from_cycles(pair.h, {cyc}));
    }
    CHECK(anonymity_group(c) == v_times_w(pair, gens, {}));
  }
}

TEST_CASE("majority symmetry by parity of h") {
  const Spf m4 = majority_spf(checked_pair(4, 2));
  const PGroup s4_left = v_times_w(checked_pair(4, 2),
                                   {parse_cycles("(1 2)", 4), parse_cycles("(1 2 3 4)", 4)}, {});
  const PGroup s4_s2 = full_group(checked_pair(4, 2));
  CHECK(is_symmetric_under(m4, s4_left));
  CHECK_FALSE(is_symmetric_under(m4, s4_s2));

  const Spf m3 = majority_spf(kPair32);
  CHECK(is_symmetric_under(m3, full_group(kPair32)));
  CHECK(is_symmetric_under(m3, trivial_group(kPair32)));
}

TEST_CASE("dictatorship symmetry groups") {
  for (const VotingPair pair : {kPair32, checked_pair(3, 3)}) {
    const Spf d1 = dictatorship(pair, 1);
    // G1 = stabilizer of individual 1, G2 = {id} x S_n, G = their product.
    const PGroup g1 = anonymity_group(d1);
    CHECK(g1 == complete_intransitive(pair, {{1}, {2, 3}}));
    const PGroup g2 = neutrality_group(d1);
    CHECK(g2.order() == factorial(pair.n));
    const PGroup g = symmetry_group(d1);
    CHECK(g.order() == g1.order() * g2.order());
    CHECK(g.contains(g1));
    CHECK(g.contains(g2));
    CHECK(is_direct_product(g));
  }
}

TEST_CASE("majority symmetry groups, odd and even h") {
  const Spf m3 = majority_spf(kPair32);
  const PGroup s3_left = v_times_w(kPair32, {parse_cycles("(1 2)", 3), parse_cycles("(1 2 3)", 3)}, {});
  CHECK(anonymity_group(m3) == s3_left);
  CHECK(neutrality_group(m3) == parse_group("(id|(1 2))", kPair32));
  CHECK(symmetry_group(m3) == full_group(kPair32));

  const VotingPair p42 = checked_pair(4, 2);
  const Spf m4 = majority_spf(p42);
  const PGroup s4_left = v_times_w(p42, {parse_cycles("(1 2)", 4), parse_cycles("(1 2 3 4)", 4)}, {});
  CHECK(anonymity_group(m4) == s4_left);
  CHECK(symmetry_group(m4) == s4_left);
  CHECK(neutrality_group(m4).is_trivial());
}

TEST_CASE("symmetry groups are subgroups and satisfy the intersections") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> bit(0, 1);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::uint16_t> table(8);
    for (auto& v : table) v = static_cast<std::uint16_t>(bit(rng));
    const Spf f(kPair32, std::move(table));
    const PGroup g = symmetry_group(f);  // from_elements validates closure
    const PGroup g1 = anonymity_group(f);
    const PGroup g2 = neutrality_group(f);
    CHECK(g.contains(identity_elem(kPair32)));
    // G1 = G meet (S_h x {id}), G2 = G meet ({id} x S_n).
    for (const GElem& e : g.elements()) {
      if (e.psi.is_identity()) CHECK(g1.contains(e));
      if (e.phi.is_identity()) CHECK(g2.contains(e));
    }
    CHECK(g.contains(g1));
    CHECK(g.contains(g2));
    CHECK(g1.order() * g2.order() <= g.order());
  }
}

TEST_CASE("a symmetry group properly above G1 x G2 exists at (3,2)") {
  const PGroup diag = diagonal_group(kPair32);
  bool found = false;
  for (const Spf& f : all_spfs_32())
    if (symmetry_group(f) == diag) {
      found = true;
      CHECK(anonymity_group(f).is_trivial());
      CHECK(neutrality_group(f).is_trivial());
      break;
    }
  CHECK(found);
}

TEST_CASE("nested groups reverse the symmetric-family inclusion") {
  const PGroup x = parse_group("((1 2)|id);(id|(1 2))", kPair32);
  const PGroup u = parse_group("(id|(1 2))", kPair32);
  REQUIRE(x.contains(u));
  for (const Spf& f : all_spfs_32())
    if (is_symmetric_under(f, x)) CHECK(is_symmetric_under(f, u));
}

TEST_CASE("intersecting symmetric families equals the family of the join") {
  const PGroup x = parse_group("((1 2)|id);(id|(1 2))", kPair32);
  const PGroup y = parse_group("((2 3)|id);(id|(1 2))", kPair32);
  const PGroup z = parse_group("((1 3)|id);(id|(1 2))", kPair32);
  const PGroup g = full_group(kPair32);
  REQUIRE(join(x, y) == g);
  REQUIRE(join(y, z) == g);
  for (const Spf& f : all_spfs_32()) {
    CHECK((is_symmetric_under(f, x) && is_symmetric_under(f, y)) ==
          is_symmetric_under(f, g));
    CHECK((is_symmetric_under(f, y) && is_symmetric_under(f, z)) ==
          is_symmetric_under(f, g));
    CHECK((is_symmetric_under(f, x) && is_symmetric_under(f, z)) ==
          is_symmetric_under(f, g));
  }
}

TEST_CASE("from_assignment output is symmetric under its group") {
  std::mt19937 rng(17);
  for (const PGroup& u : all_subgroups(kPair32)) {
    const std::uint32_t r = orbit_count(u);
    std::uniform_int_distribution<int> bit(0, 1);
    std::vector<std::uint16_t> values(r);
    for (auto& v : values) v = static_cast<std::uint16_t>(bit(rng));
    const Spf f = from_assignment(OrbitAssignment{u, values}, true);
    CHECK(is_symmetric_under(f, u));
    CHECK(symmetry_group(f).contains(u));
  }
}

TEST_CASE("conjugating an SPF conjugates its groups") {
  std::mt19937 rng(19);
  std::uniform_int_distribution<int> bit(0, 1);
  const PGroup g = full_group(kPair32);
  std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<std::uint16_t> table(8);
    for (auto& v : table) v = static_cast<std::uint16_t>(bit(rng));
    const Spf f(kPair32, std::move(table));
    const GElem e = g.elements()[pick(rng)];
    const Spf fg = conjugate_spf(f, e);
    CHECK(symmetry_group(fg) == conjugate_group(symmetry_group(f), e));
    CHECK(anonymity_group(fg) == conjugate_group(anonymity_group(f), e));
    CHECK(conjugate_spf(f, identity_elem(kPair32)) == f);
  }
}

TEST_CASE("pinned-value construction hits the pinned profiles") {
  const PGroup u = parse_group("(id|(1 2))", kPair32);
  const std::uint64_t idx = profile_index(parse_profile("2>1, 2>1, 2>1", kPair32));
  const Spf f = from_pinned_values(u, {{idx, 0}}, 0, true);
  CHECK(f.table()[idx] == 0);
  CHECK(is_symmetric_under(f, u));
}

TEST_CASE("random regular subgroups extend assignments consistently") {
  std::mt19937 rng(41);
  for (const VotingPair pair : {checked_pair(2, 3), checked_pair(3, 3), checked_pair(4, 2)}) {
    const PGroup g = full_group(pair);
    std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
    std::uniform_int_distribution<int> value(0, static_cast<int>(factorial(pair.n)) - 1);
    for (int trial = 0; trial < 15; ++trial) {
      const PGroup u = PGroup::closure(
          pair, {g.elements()[pick(rng)], g.elements()[pick(rng)]});
      if (!is_regular(u, true)) continue;
      std::vector<std::uint16_t> values(orbit_count(u));
      for (auto& v : values) v = static_cast<std::uint16_t>(value(rng));
      const Spf f = from_assignment(OrbitAssignment{u, values}, true);
      CHECK(is_symmetric_under(f, u));
      CHECK(symmetry_group(f).contains(u));
    }
  }
}

TEST_CASE("evaluate rejects foreign profiles") {
  const Spf m = majority_spf(kPair32);
  CHECK_THROWS_AS(m.evaluate(parse_profile("1>2, 2>1", checked_pair(2, 2))),
                  std::invalid_argument);
  CHECK_THROWS_AS(is_symmetric_under(m, trivial_group(checked_pair(2, 2))),
                  std::invalid_argument);
}

TEST_CASE("SPF JSON round-trip and totality") {
  const Spf m = majority_spf(kPair32);
  const std::string text = spf_to_json(m);
  CHECK(spf_from_json(text) == m);
  CHECK_THROWS_AS(spf_from_json("{\"pair\": [3,2], \"map\": {}}"), std::invalid_argument);
  CHECK_THROWS_AS(spf_from_json("not json"), std::invalid_argument);
  // A map missing one profile is rejected.
  const std::string partial =
      "{\"pair\": [2,2], \"map\": {\"1>2, 1>2\": \"1>2\", \"1>2, 2>1\": \"1>2\", "
      "\"2>1, 1>2\": \"1>2\"}}";
  CHECK_THROWS_AS(spf_from_json(partial), std::invalid_argument);
}

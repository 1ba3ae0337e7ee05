#include "spfsym/classify.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>
#include <random>

#include "spfsym/orbit_extension.hpp"
#include "spfsym/profile.hpp"
#include "spfsym/regularity.hpp"

namespace spfsym {

std::string to_string(GroupKind kind) {
  switch (kind) {
    case GroupKind::anonymity: return "anonymity";
    case GroupKind::neutrality: return "neutrality";
    case GroupKind::symmetry: return "symmetry";
  }
  return "?";
}

GroupKind group_kind_from_string(std::string_view s) {
  if (s == "anonymity") return GroupKind::anonymity;
  if (s == "neutrality") return GroupKind::neutrality;
  if (s == "symmetry") return GroupKind::symmetry;
  throw std::invalid_argument("kind must be anonymity, neutrality or symmetry");
}

namespace {

bool left_only(const PGroup& u) {
  for (const GElem& e : u.elements())
    if (!e.psi.is_identity()) return false;
  return true;
}

bool right_only(const PGroup& u) {
  for (const GElem& e : u.elements())
    if (!e.phi.is_identity()) return false;
  return true;
}

PGroup group_of_kind(const Spf& f, GroupKind kind) {
  switch (kind) {
    case GroupKind::anonymity: return anonymity_group(f);
    case GroupKind::neutrality: return neutrality_group(f);
    case GroupKind::symmetry: return symmetry_group(f);
  }
  throw std::logic_error("unreachable");
}

Verdict verified_true(GroupKind kind, std::string method, Spf witness, const PGroup& u) {
  if (!(group_of_kind(witness, kind) == u))
    throw VerificationError("constructed witness does not realize the requested group");
  return Verdict{kind, true, std::move(method), std::move(witness)};
}

// First profile whose full stabilizer in S_h x {id} sits inside U. That
// stabilizer is generated by the transpositions of individuals with equal
// orders, so containment is a generator check.
std::optional<std::uint64_t> profile_with_stabilizer_inside(const PGroup& u,
                                                            std::uint64_t max_profiles) {
  const VotingPair pair = u.pair();
  const std::uint64_t count = profile_count(pair, max_profiles);
  const std::uint64_t nfact = factorial(pair.n);
  std::vector<std::vector<GElem>> swap_elem(static_cast<std::size_t>(pair.h));
  for (int i = 1; i <= pair.h; ++i)
    for (int j = i + 1; j <= pair.h; ++j)
      swap_elem[static_cast<std::size_t>(i) - 1].push_back(
          GElem{Perm::from_cycles(pair.h, {{i, j}}), Perm(pair.n)});
  std::vector<std::uint16_t> digits(static_cast<std::size_t>(pair.h));
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t rest = idx;
    for (int i = pair.h - 1; i >= 0; --i) {
      digits[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(rest % nfact);
      rest /= nfact;
    }
    bool ok = true;
    for (int i = 1; i <= pair.h && ok; ++i)
      for (int j = i + 1; j <= pair.h && ok; ++j)
        if (digits[static_cast<std::size_t>(i) - 1] == digits[static_cast<std::size_t>(j) - 1])
          ok = u.contains(swap_elem[static_cast<std::size_t>(i) - 1]
                                   [static_cast<std::size_t>(j - i) - 1]);
    if (ok) return idx;
  }
  return std::nullopt;
}

// Witness with G1(F) = U for U <= S_h x {id}, given a profile whose full
// stabilizer lies in U: identity on p's own orbit and everywhere outside
// p's S_h x {id}-orbit, a fixed non-identity order on the other U-orbits
// splitting that big orbit.
Spf anonymity_witness_from_profile(const PGroup& u, std::uint64_t pidx,
                                   std::uint64_t max_profiles) {
  const VotingPair pair = u.pair();
  const OrbitPartition& part = all_orbits(u, max_profiles);
  const std::uint64_t count = part.orbit_of.size();
  const std::uint64_t nfact = factorial(pair.n);
  const auto sigma = static_cast<std::uint16_t>(Perm::from_cycles(pair.n, {{1, 2}}).rank());

  const auto digits_of = [&](std::uint64_t idx) {
    std::vector<std::uint16_t> d(static_cast<std::size_t>(pair.h));
    for (int i = pair.h - 1; i >= 0; --i) {
      d[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(idx % nfact);
      idx /= nfact;
    }
    std::sort(d.begin(), d.end());
    return d;
  };
  const std::vector<std::uint16_t> base = digits_of(pidx);

  std::vector<std::uint16_t> values(part.orbit_count, 0);
  for (std::uint64_t idx = 0; idx < count; ++idx)
    if (part.orbit_of[idx] != part.orbit_of[pidx] && digits_of(idx) == base)
      values[part.orbit_of[idx]] = sigma;  // same S_h x {id}-orbit, different U-orbit
  return from_assignment(OrbitAssignment{u, std::move(values)}, false, max_profiles);
}

// -- exact counting decision --------------------------------------------

// |F^{V_1} u ... u F^{V_k}| by inclusion-exclusion over subsets; each
// intersection is F^{<subset>} of size n!^R(join) when the join is regular
// and empty otherwise. Joins are interned by canonical identity.
mpz_class union_spf_count(const std::vector<PGroup>& covers, const ClassifyOptions& opt) {
  if (covers.size() > 22)
    throw BoundExceeded("inclusion-exclusion over too many minimal overgroups");
  std::vector<PGroup> interned;
  std::map<std::vector<std::uint64_t>, int> ids;
  const auto intern = [&](PGroup g) {
    auto [it, fresh] = ids.emplace(g.element_keys(), static_cast<int>(interned.size()));
    if (fresh) interned.push_back(std::move(g));
    return it->second;
  };
  std::vector<int> cover_ids;
  for (const PGroup& v : covers) cover_ids.push_back(intern(v));

  std::map<std::pair<int, std::size_t>, int> join_memo;
  const auto join_with = [&](int gid, std::size_t ci) {
    auto it = join_memo.find({gid, ci});
    if (it == join_memo.end()) {
      int res = intern(join(interned[static_cast<std::size_t>(gid)],
                            covers[ci], opt.max_group_order));
      it = join_memo.emplace(std::pair<int, std::size_t>{gid, ci}, res).first;
    }
    return it->second;
  };

  std::map<int, mpz_class> count_memo;
  const auto count_of = [&](int gid) -> const mpz_class& {
    auto it = count_memo.find(gid);
    if (it == count_memo.end())
      it = count_memo
               .emplace(gid, symmetric_spf_count(interned[static_cast<std::size_t>(gid)],
                                                 opt.max_profiles))
               .first;
    return it->second;
  };

  mpz_class total = 0;
  const auto dfs = [&](auto&& self, std::size_t i, int gid, int taken) -> void {
    if (i == covers.size()) {
      if (taken == 0) return;
      if (taken % 2 == 1)
        total += count_of(gid);
      else
        total -= count_of(gid);
      return;
    }
    self(self, i + 1, gid, taken);
    self(self, i + 1, taken == 0 ? cover_ids[i] : join_with(gid, i), taken + 1);
  };
  dfs(dfs, 0, -1, 0);
  return total;
}

bool exact_symmetry_decision(const PGroup& u, const ClassifyOptions& opt) {
  std::vector<PGroup> covers;
  for (PGroup& v : minimal_overgroups(u, opt.max_group_order))
    if (is_regular_by_criterion(v)) covers.push_back(std::move(v));
  return symmetric_spf_count(u, opt.max_profiles) > union_spf_count(covers, opt);
}

// -- witness search -------------------------------------------------------

// F is U-symmetric by construction, so G(F) = U iff no element outside U
// is a symmetry of F.
bool symmetry_group_is(const Spf& f, const PGroup& u, const ClassifyOptions& opt) {
  const PGroup ambient = full_group(f.pair(), opt.max_group_order);
  for (const GElem& e : ambient.elements()) {
    if (u.contains(e)) continue;
    if (is_symmetry_element(f, e)) return false;
  }
  return true;
}

std::optional<Spf> search_symmetry_witness(const PGroup& u, const ClassifyOptions& opt) {
  const VotingPair pair = u.pair();
  // Constructive route for subgroups of S_h x {id}.
  if (left_only(u)) {
    std::optional<Spf> base;
    if (u.is_trivial())
      base = trivial_group_witness(pair, opt.max_profiles);
    else if (auto pidx = profile_with_stabilizer_inside(u, opt.max_profiles))
      base = anonymity_witness_from_profile(u, *pidx, opt.max_profiles);
    if (base) {
      Spf candidate = fix_constants_to_identity(*base);
      if (symmetry_group_is(candidate, u, opt)) return candidate;
      throw VerificationError("constructive symmetry witness failed its check");
    }
  }

  const std::uint32_t r = orbit_count(u, opt.max_profiles);
  const std::uint64_t nfact = factorial(pair.n);

  // Seeded randomized assignments.
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, nfact - 1);
  for (int attempt = 0; attempt < 1024; ++attempt) {
    std::vector<std::uint16_t> values(r);
    for (auto& v : values) v = static_cast<std::uint16_t>(pick(rng));
    Spf f = from_assignment(OrbitAssignment{u, std::move(values)}, false, opt.max_profiles);
    if (symmetry_group_is(f, u, opt)) return f;
  }

  // Exhaustive over all assignments while n!^R stays small.
  mpz_class space;
  mpz_ui_pow_ui(space.get_mpz_t(), static_cast<unsigned long>(nfact), r);
  if (space <= (1u << 20)) {
    std::vector<std::uint16_t> values(r, 0);
    for (;;) {
      Spf f = from_assignment(OrbitAssignment{u, values}, false, opt.max_profiles);
      if (symmetry_group_is(f, u, opt)) return f;
      std::uint32_t pos = 0;
      while (pos < r && values[pos] + 1u == nfact) values[pos++] = 0;
      if (pos == r) break;
      ++values[pos];
    }
  }
  return std::nullopt;
}

}  // namespace

Spf trivial_group_witness(VotingPair pair, std::uint64_t max_profiles) {
  const std::uint64_t count = profile_count(pair, max_profiles);
  const std::uint64_t nfact = factorial(pair.n);
  const SnTable& sn = SnTable::of(pair.n);
  std::vector<std::uint16_t> table(count);
  std::vector<std::uint16_t> digits(static_cast<std::size_t>(pair.h));
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t rest = idx;
    for (int i = pair.h - 1; i >= 0; --i) {
      digits[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(rest % nfact);
      rest /= nfact;
    }
    if (pair.n >= 3) {
      // Follow the lowest-numbered individual placing alternative 1 on top.
      std::uint16_t value = 0;
      for (int i = 0; i < pair.h; ++i)
        if (sn.perm(digits[static_cast<std::size_t>(i)])(1) == 1) {
          value = digits[static_cast<std::size_t>(i)];
          break;
        }
      table[idx] = value;
    } else {
      // Ordered profiles (all 1>2 votes before all 2>1 votes) map to 1>2.
      bool ordered = true;
      for (int i = 1; i < pair.h && ordered; ++i)
        ordered = !(digits[static_cast<std::size_t>(i) - 1] == 1 &&
                    digits[static_cast<std::size_t>(i)] == 0);
      table[idx] = ordered ? 0 : 1;
    }
  }
  return Spf(pair, std::move(table), max_profiles);
}

Spf fix_constants_to_identity(const Spf& f) {
  const VotingPair pair = f.pair();
  const std::uint64_t nfact = factorial(pair.n);
  std::uint64_t unit = 0;  // index of the constant profile with component rank 1
  for (int i = 0; i < pair.h; ++i) unit = unit * nfact + 1;
  std::vector<std::uint16_t> table = f.table();
  for (std::uint64_t r = 0; r < nfact; ++r) table[r * unit] = 0;
  return Spf(pair, std::move(table));
}

Verdict is_neutrality_group(const PGroup& u, const ClassifyOptions& opt) {
  if (!right_only(u))
    throw std::invalid_argument("a neutrality group must lie inside {id} x S_n");
  const VotingPair pair = u.pair();
  const std::uint64_t nfact = factorial(pair.n);
  if (u.order() == nfact)
    return verified_true(GroupKind::neutrality, "dictatorship", dictatorship(pair, 1), u);

  // Pin the identity order on one constant profile per right coset of
  // pi2(U); these land in pairwise distinct U-orbits.
  const SnTable& sn = SnTable::of(pair.n);
  std::vector<bool> covered(nfact, false);
  std::vector<std::uint16_t> coset_reps;
  for (std::uint16_t x = 0; x < nfact; ++x) {
    if (covered[x]) continue;
    coset_reps.push_back(x);
    for (const GElem& e : u.elements())
      covered[sn.mult(static_cast<std::uint16_t>(e.psi.rank()), x)] = true;
  }
  std::uint64_t unit = 0;
  for (int i = 0; i < pair.h; ++i) unit = unit * nfact + 1;
  std::vector<std::pair<std::uint64_t, std::uint16_t>> pins;
  for (std::uint16_t x : coset_reps) pins.emplace_back(static_cast<std::uint64_t>(x) * unit, 0);
  Spf witness = from_pinned_values(u, pins, 0, opt.verify, opt.max_profiles);
  return verified_true(GroupKind::neutrality, "coset-construction", std::move(witness), u);
}

Verdict is_symmetry_group(const PGroup& u, const ClassifyOptions& opt) {
  if (!is_regular(u, opt.verify, opt.max_profiles))
    return Verdict{GroupKind::symmetry, false, "non-regular", std::nullopt};
  if (!is_orbit_extension_fixed(u, opt.max_group_order, opt.max_profiles))
    return Verdict{GroupKind::symmetry, false, "O(U)!=U", std::nullopt};
  if (is_regular_maximal(u, opt.max_group_order, opt.max_profiles)) {
    // Every U-symmetric SPF realizes a regular-maximal U.
    Spf witness = from_assignment(
        OrbitAssignment{u, std::vector<std::uint16_t>(orbit_count(u, opt.max_profiles), 0)},
        opt.verify, opt.max_profiles);
    return verified_true(GroupKind::symmetry, "regular-maximal", std::move(witness), u);
  }
  if (left_only(u)) {
    // For U <= S_h x {id}, symmetry and anonymity membership coincide; the
    // anonymity fast paths avoid the counting machinery where they apply.
    const bool h_small = u.pair().h <= static_cast<int>(factorial(u.pair().n));
    std::optional<std::uint64_t> pidx = profile_with_stabilizer_inside(u, opt.max_profiles);
    if (pidx) {
      Spf witness = fix_constants_to_identity(
          anonymity_witness_from_profile(u, *pidx, opt.max_profiles));
      return verified_true(GroupKind::symmetry, h_small ? "h<=n!" : "stabilizer-condition",
                           std::move(witness), u);
    }
  }
  if (!exact_symmetry_decision(u, opt))
    return Verdict{GroupKind::symmetry, false, "inclusion-exclusion", std::nullopt};
  std::optional<Spf> witness = search_symmetry_witness(u, opt);
  if (!witness) return Verdict{GroupKind::symmetry, true, "counting-only", std::nullopt};
  return verified_true(GroupKind::symmetry, "inclusion-exclusion", std::move(*witness), u);
}

Verdict is_anonymity_group(const PGroup& u, const ClassifyOptions& opt) {
  if (!left_only(u))
    throw std::invalid_argument("an anonymity group must lie inside S_h x {id}");
  const VotingPair pair = u.pair();
  const bool h_small = pair.h <= static_cast<int>(factorial(pair.n));
  std::optional<std::uint64_t> pidx = profile_with_stabilizer_inside(u, opt.max_profiles);
  if (pidx) {
    Spf witness = anonymity_witness_from_profile(u, *pidx, opt.max_profiles);
    return verified_true(GroupKind::anonymity, h_small ? "h<=n!" : "stabilizer-condition",
                         std::move(witness), u);
  }
  if (!is_orbit_extension_fixed(u, opt.max_group_order, opt.max_profiles))
    return Verdict{GroupKind::anonymity, false, "O(U)!=U", std::nullopt};
  Verdict s = is_symmetry_group(u, opt);
  if (s.decision && s.witness) {
    // G(F) = U <= S_h x {id} forces G1(F) = U.
    return verified_true(GroupKind::anonymity, std::move(s.method), std::move(*s.witness), u);
  }
  return Verdict{GroupKind::anonymity, s.decision, std::move(s.method), std::nullopt};
}

ClassifyAllReport classify_all(VotingPair pair, GroupKind kind, const ClassifyOptions& opt) {
  std::vector<Perm> sym_h;
  sym_h.push_back(Perm::from_cycles(pair.h, {{1, 2}}));
  if (pair.h > 2) {
    std::vector<int> full(static_cast<std::size_t>(pair.h));
    for (int i = 0; i < pair.h; ++i) full[static_cast<std::size_t>(i)] = i + 1;
    sym_h.push_back(Perm::from_cycles(pair.h, {full}));
  }
  std::vector<Perm> sym_n;
  sym_n.push_back(Perm::from_cycles(pair.n, {{1, 2}}));
  if (pair.n > 2) {
    std::vector<int> full(static_cast<std::size_t>(pair.n));
    for (int i = 0; i < pair.n; ++i) full[static_cast<std::size_t>(i)] = i + 1;
    sym_n.push_back(Perm::from_cycles(pair.n, {full}));
  }
  PGroup ambient;
  switch (kind) {
    case GroupKind::anonymity:
      ambient = v_times_w(pair, sym_h, {}, opt.max_group_order);
      break;
    case GroupKind::neutrality:
      ambient = v_times_w(pair, {}, sym_n, opt.max_group_order);
      break;
    case GroupKind::symmetry:
      ambient = full_group(pair, opt.max_group_order);
      break;
  }
  ClassifyAllReport report;
  report.pair = pair;
  report.kind = kind;
  report.fully = true;
  for (PGroup& u : all_subgroups_of(ambient, opt.max_group_order)) {
    Verdict v;
    switch (kind) {
      case GroupKind::anonymity: v = is_anonymity_group(u, opt); break;
      case GroupKind::neutrality: v = is_neutrality_group(u, opt); break;
      case GroupKind::symmetry: v = is_symmetry_group(u, opt); break;
    }
    report.fully = report.fully && v.decision;
    report.entries.push_back(ClassifyEntry{std::move(u), std::move(v)});
  }
  return report;
}

std::string verdict_to_json(const Verdict& v, const PGroup& u) {
  nlohmann::ordered_json j;
  j["kind"] = to_string(v.kind);
  j["pair"] = {u.pair().h, u.pair().n};
  nlohmann::ordered_json gens = nlohmann::ordered_json::array();
  for (const GElem& g : u.generators()) gens.push_back(format_gelem(g));
  j["group"] = std::move(gens);
  j["decision"] = v.decision;
  j["method"] = v.method;
  j["witness"] = v.witness ? nlohmann::ordered_json::parse(spf_to_json(*v.witness))
                           : nlohmann::ordered_json(nullptr);
  return j.dump(2);
}

}  // namespace spfsym

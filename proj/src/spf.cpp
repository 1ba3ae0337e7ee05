#include "spfsym/spf.hpp"

#include <nlohmann/json.hpp>


#include "spfsym/regularity.hpp"

namespace spfsym {

Spf::Spf(VotingPair pair, std::vector<std::uint16_t> table, std::uint64_t max_profiles)
    : pair_(pair), table_(std::move(table)) {
  const std::uint64_t count = profile_count(pair, max_profiles);
  if (table_.size() != count)
    throw std::invalid_argument("SPF table must cover every profile");
  const std::uint64_t nfact = factorial(pair.n);
  for (std::uint16_t v : table_)
    if (v >= nfact) throw std::invalid_argument("SPF table entry out of range");
}

const LinearOrder& Spf::evaluate(const Profile& p) const {
  if (p.pair() != pair_) throw std::invalid_argument("evaluate: pair mismatch");
  return SnTable::of(pair_.n).perm(table_[profile_index(p)]);
}

Spf from_assignment(const OrbitAssignment& a, bool verify, std::uint64_t max_profiles) {
  if (!is_regular_by_criterion(a.group))
    throw std::invalid_argument("orbit assignment requires a regular group");
  const OrbitPartition& part = all_orbits(a.group, max_profiles);
  if (a.values.size() != part.orbit_count)
    throw std::invalid_argument("orbit assignment must cover every orbit");
  const SnTable& sn = SnTable::of(a.group.pair().n);
  const std::uint64_t count = part.orbit_of.size();
  std::vector<std::uint16_t> table(count);
  for (std::uint64_t i = 0; i < count; ++i)
    table[i] = sn.mult(part.rep_psi[i], a.values[part.orbit_of[i]]);
  Spf f(a.group.pair(), std::move(table), max_profiles);
  if (verify && !is_symmetric_under(f, a.group))
    throw VerificationError("orbit assignment produced a non-symmetric SPF");
  return f;
}

Spf from_pinned_values(const PGroup& u,
                       const std::vector<std::pair<std::uint64_t, std::uint16_t>>& pins,
                       std::uint16_t fallback_rank, bool verify,
                       std::uint64_t max_profiles) {
  const OrbitPartition& part = all_orbits(u, max_profiles);
  const SnTable& sn = SnTable::of(u.pair().n);
  std::vector<std::uint16_t> values(part.orbit_count, fallback_rank);
  std::vector<bool> pinned(part.orbit_count, false);
  for (const auto& [idx, value] : pins) {
    if (idx >= part.orbit_of.size()) throw std::invalid_argument("pinned profile out of range");
    const std::uint32_t orb = part.orbit_of[idx];
    if (pinned[orb]) throw std::invalid_argument("two pins land in one orbit");
    pinned[orb] = true;
    // p = rep^t, so F(p) = psi_t F(rep); solve for the rep value.
    values[orb] = sn.mult(sn.inv(part.rep_psi[idx]), value);
  }
  return from_assignment(OrbitAssignment{u, std::move(values)}, verify, max_profiles);
}

bool is_symmetric_under(const Spf& f, const PGroup& u) {
  if (f.pair() != u.pair()) throw std::invalid_argument("pair mismatch");
  const std::uint64_t count = f.table().size();
  const SnTable& sn = SnTable::of(f.pair().n);
  for (const GElem& g : u.elements()) {
    const IndexAction act(f.pair(), g);
    const auto psi_rank = static_cast<std::uint16_t>(g.psi.rank());
    for (std::uint64_t i = 0; i < count; ++i)
      if (f.table()[act(i)] != sn.mult(psi_rank, f.table()[i])) return false;
  }
  return true;
}

bool is_symmetry_element(const Spf& f, const GElem& g) {
  const std::uint64_t count = f.table().size();
  const SnTable& sn = SnTable::of(f.pair().n);
  const IndexAction act(f.pair(), g);
  const auto psi_rank = static_cast<std::uint16_t>(g.psi.rank());
  for (std::uint64_t i = 0; i < count; ++i)
    if (f.table()[act(i)] != sn.mult(psi_rank, f.table()[i])) return false;
  return true;
}

PGroup symmetry_group(const Spf& f) {
  const PGroup g = full_group(f.pair());
  std::vector<GElem> members;
  for (const GElem& e : g.elements())
    if (is_symmetry_element(f, e)) members.push_back(e);
  return PGroup::from_elements(f.pair(), std::move(members));
}

PGroup anonymity_group(const Spf& f) {
  const SnTable& sh = SnTable::of(f.pair().h);
  std::vector<GElem> members;
  for (std::uint32_t a = 0; a < sh.size(); ++a) {
    const GElem e{sh.perm(static_cast<std::uint16_t>(a)), Perm(f.pair().n)};
    if (is_symmetry_element(f, e)) members.push_back(e);
  }
  return PGroup::from_elements(f.pair(), std::move(members));
}

PGroup neutrality_group(const Spf& f) {
  const SnTable& sn = SnTable::of(f.pair().n);
  std::vector<GElem> members;
  for (std::uint32_t b = 0; b < sn.size(); ++b) {
    const GElem e{Perm(f.pair().h), sn.perm(static_cast<std::uint16_t>(b))};
    if (is_symmetry_element(f, e)) members.push_back(e);
  }
  return PGroup::from_elements(f.pair(), std::move(members));
}

Spf conjugate_spf(const Spf& f, const GElem& g) {
  if (g.phi.degree() != f.pair().h || g.psi.degree() != f.pair().n)
    throw std::invalid_argument("conjugate_spf: degree mismatch");
  const SnTable& sn = SnTable::of(f.pair().n);
  const IndexAction act_inv(f.pair(), inverse(g));
  const auto psi_rank = static_cast<std::uint16_t>(g.psi.rank());
  const std::uint64_t count = f.table().size();
  std::vector<std::uint16_t> table(count);
  for (std::uint64_t i = 0; i < count; ++i)
    table[i] = sn.mult(psi_rank, f.table()[act_inv(i)]);
  return Spf(f.pair(), std::move(table));
}

Spf dictatorship(VotingPair pair, int dictator) {
  if (dictator < 1 || dictator > pair.h)
    throw std::invalid_argument("dictator must be an individual in [h]");
  const std::uint64_t count = profile_count(pair);
  const std::uint64_t nfact = factorial(pair.n);
  std::uint64_t place = 1;
  for (int i = pair.h; i > dictator; --i) place *= nfact;
  std::vector<std::uint16_t> table(count);
  for (std::uint64_t i = 0; i < count; ++i)
    table[i] = static_cast<std::uint16_t>((i / place) % nfact);
  return Spf(pair, std::move(table));
}

Spf constant_spf(VotingPair pair, const LinearOrder& value) {
  if (value.degree() != pair.n) throw std::invalid_argument("constant order degree mismatch");
  return Spf(pair, std::vector<std::uint16_t>(profile_count(pair),
                                              static_cast<std::uint16_t>(value.rank())));
}

Spf majority_spf(VotingPair pair) {
  if (pair.n != 2) throw std::invalid_argument("majority SPF requires n = 2");
  const std::uint64_t count = profile_count(pair);
  std::vector<std::uint16_t> table(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    int ones = 0;
    for (std::uint64_t x = i; x != 0; x >>= 1) ones += static_cast<int>(x & 1);
    const int prefer_12 = pair.h - ones;  // individuals voting 1>2 (= id)
    table[i] = (2 * prefer_12 >= pair.h) ? 0 : 1;
  }
  return Spf(pair, std::move(table));
}

mpz_class symmetric_spf_count(const PGroup& u, std::uint64_t max_profiles) {
  if (!is_regular_by_criterion(u)) return 0;
  mpz_class result;
  mpz_ui_pow_ui(result.get_mpz_t(), static_cast<unsigned long>(factorial(u.pair().n)),
                static_cast<unsigned long>(orbit_count(u, max_profiles)));
  return result;
}

std::string spf_to_json(const Spf& f) {
  nlohmann::ordered_json j;
  j["pair"] = {f.pair().h, f.pair().n};
  nlohmann::ordered_json map = nlohmann::ordered_json::object();
  const std::uint64_t count = f.table().size();
  const SnTable& sn = SnTable::of(f.pair().n);
  for (std::uint64_t i = 0; i < count; ++i)
    map[format_profile(profile_unindex(i, f.pair()))] = format_order(sn.perm(f.table()[i]));
  j["map"] = std::move(map);
  return j.dump(2);
}

Spf spf_from_json(std::string_view text, std::uint64_t max_profiles) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("invalid SPF JSON: ") + e.what());
  }
  if (!j.contains("pair") || !j["pair"].is_array() || j["pair"].size() != 2 ||
      !j.contains("map") || !j["map"].is_object())
    throw std::invalid_argument("SPF JSON must carry \"pair\" and \"map\"");
  const VotingPair pair = checked_pair(j["pair"][0].get<int>(), j["pair"][1].get<int>());
  const std::uint64_t count = profile_count(pair, max_profiles);
  std::vector<std::uint16_t> table(count, 0xffff);
  std::uint64_t filled = 0;
  for (const auto& [key, value] : j["map"].items()) {
    const std::uint64_t idx = profile_index(parse_profile(key, pair));
    if (table[idx] != 0xffff) throw std::invalid_argument("SPF JSON repeats a profile");
    table[idx] = static_cast<std::uint16_t>(parse_order(value.get<std::string>(), pair.n).rank());
    ++filled;
  }
  if (filled != count)
    throw std::invalid_argument("SPF JSON must map every profile (SPFs are total)");
  return Spf(pair, std::move(table), max_profiles);
}

}  // namespace spfsym

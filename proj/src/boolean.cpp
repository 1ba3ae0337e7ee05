#include "spfsym/boolean.hpp"

#include <nlohmann/json.hpp>


#include "spfsym/orbit_extension.hpp"
#include "spfsym/profile.hpp"

namespace spfsym {

BooleanFunction checked_boolean(int arity, int value_count,
                                std::vector<std::uint16_t> table) {
  if (arity < 2 || arity > 20) throw std::invalid_argument("arity must be within 2..20");
  if (value_count < 2) throw std::invalid_argument("k must be at least 2");
  if (table.size() != (std::uint64_t{1} << arity))
    throw std::invalid_argument("table must have 2^arity entries");
  for (std::uint16_t v : table)
    if (v >= value_count) throw std::invalid_argument("table entry out of range");
  return BooleanFunction{arity, value_count, std::move(table)};
}

namespace {

// Index of x^phi when index x encodes bits with position 1 most significant.
std::uint32_t permute_bits(std::uint32_t x, const Perm& phi_inv, int h) {
  std::uint32_t out = 0;
  for (int j = 1; j <= h; ++j) {
    const std::uint32_t bit = (x >> (h - phi_inv(j))) & 1u;
    out |= bit << (h - j);
  }
  return out;
}

}  // namespace

std::vector<Perm> invariance_group(const BooleanFunction& f) {
  if (f.arity > 8) throw BoundExceeded("invariance group limited to arity <= 8");
  const auto size = static_cast<std::uint32_t>(f.table.size());
  std::vector<Perm> members;
  for (const Perm& phi : all_permutations(f.arity)) {
    const Perm phi_inv = inverse(phi);
    bool invariant = true;
    for (std::uint32_t x = 0; x < size && invariant; ++x)
      invariant = f.table[permute_bits(x, phi_inv, f.arity)] == f.table[x];
    if (invariant) members.push_back(phi);
  }
  return members;
}

namespace {

// Permutation names for the values 0..k-1: id, (12), then the unused
// permutations in rank order.
std::vector<std::uint16_t> value_perm_ranks(int n, int k) {
  const std::uint64_t nfact = factorial(n);
  if (static_cast<std::uint64_t>(k) > nfact)
    throw std::invalid_argument("k must not exceed n!");
  const auto swap_rank = static_cast<std::uint16_t>(Perm::from_cycles(n, {{1, 2}}).rank());
  std::vector<std::uint16_t> out{0, swap_rank};
  for (std::uint16_t r = 0; out.size() < static_cast<std::size_t>(k); ++r)
    if (r != 0 && r != swap_rank) out.push_back(r);
  out.resize(static_cast<std::size_t>(k));
  return out;
}

}  // namespace

Spf spf_from_boolean(const BooleanFunction& f, int n, std::uint64_t max_profiles) {
  const VotingPair pair = checked_pair(f.arity, n);
  const std::vector<std::uint16_t> value_rank = value_perm_ranks(n, f.value_count);
  const std::uint16_t one_rank = value_rank[1];

  std::vector<GElem> members;
  for (const Perm& phi : invariance_group(f)) members.push_back(GElem{phi, Perm(n)});
  const PGroup u = PGroup::from_elements(pair, std::move(members));
  const OrbitPartition& part = all_orbits(u, max_profiles);

  // Profiles whose components all lie in {id, (12)} mirror the bit strings;
  // their orbits consist of bit strings only and carry F's own values.
  const std::uint64_t nfact = factorial(n);
  const auto bits_of = [&](std::uint64_t idx) -> std::optional<std::uint32_t> {
    std::uint32_t bits = 0;
    for (int i = pair.h - 1; i >= 0; --i) {
      const auto digit = static_cast<std::uint16_t>(idx % nfact);
      idx /= nfact;
      if (digit == one_rank)
        bits |= 1u << (pair.h - 1 - i);
      else if (digit != 0)
        return std::nullopt;
    }
    return bits;
  };

  std::vector<std::uint16_t> values(part.orbit_count, 0xffff);
  std::uint16_t spill_value = 0;  // value at the last bit-string representative
  for (std::uint32_t j = 0; j < part.orbit_count; ++j)
    if (auto bits = bits_of(part.reps[j])) {
      values[j] = value_rank[f.table[*bits]];
      spill_value = values[j];
    }
  for (auto& v : values)
    if (v == 0xffff) v = spill_value;
  return from_assignment(OrbitAssignment{u, std::move(values)}, false, max_profiles);
}

BooleanFunction boolean_from_spf(const Spf& f) {
  if (f.pair().n != 2)
    throw std::invalid_argument("boolean_from_spf requires two alternatives");
  std::vector<std::uint16_t> table(f.table().begin(), f.table().end());
  return checked_boolean(f.pair().h, 2, std::move(table));
}

RepresentabilityVerdict is_two_representable(const std::vector<Perm>& v, int h,
                                             const ClassifyOptions& opt) {
  std::vector<GElem> members;
  for (const Perm& phi : v) {
    if (phi.degree() != h) throw std::invalid_argument("permutation degree mismatch");
    members.push_back(GElem{phi, Perm(2)});
  }
  const VotingPair pair = checked_pair(h, 2);
  PGroup u;
  try {
    u = PGroup::from_elements(pair, std::move(members));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("the permutations must form a subgroup of S_h");
  }
  Verdict a = is_anonymity_group(u, opt);
  RepresentabilityVerdict out;
  out.decision = a.decision;
  out.method = a.method;
  if (a.witness) out.witness = boolean_from_spf(*a.witness);
  return out;
}

bool check_O_necessary(const std::vector<Perm>& v, int h, const ClassifyOptions& opt) {
  std::vector<GElem> members;
  for (const Perm& phi : v) {
    if (phi.degree() != h) throw std::invalid_argument("permutation degree mismatch");
    members.push_back(GElem{phi, Perm(2)});
  }
  const PGroup u = PGroup::from_elements(checked_pair(h, 2), std::move(members));
  return is_orbit_extension_fixed(u, opt.max_group_order, opt.max_profiles);
}

std::string boolean_to_json(const BooleanFunction& f) {
  nlohmann::ordered_json j;
  j["arity"] = f.arity;
  j["k"] = f.value_count;
  j["table"] = f.table;
  return j.dump(2);
}

BooleanFunction boolean_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("invalid Boolean function JSON: ") + e.what());
  }
  if (!j.contains("arity") || !j.contains("k") || !j.contains("table") ||
      !j["table"].is_array())
    throw std::invalid_argument("Boolean JSON must carry \"arity\", \"k\" and \"table\"");
  return checked_boolean(j["arity"].get<int>(), j["k"].get<int>(),
                         j["table"].get<std::vector<std::uint16_t>>());
}

}  // namespace spfsym

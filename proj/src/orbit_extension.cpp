#include "spfsym/orbit_extension.hpp"

#include <vector>

#include "spfsym/profile.hpp"
#include "spfsym/regularity.hpp"

namespace spfsym {

bool orbit_leq(const PGroup& u, const PGroup& v, std::uint64_t max_profiles) {
  if (u.pair() != v.pair()) throw std::invalid_argument("orbit_leq: pair mismatch");
  const OrbitPartition& pu = all_orbits(u, max_profiles);
  const OrbitPartition& pv = all_orbits(v, max_profiles);
  const std::uint64_t count = pu.orbit_of.size();
  for (std::uint64_t i = 0; i < count; ++i)
    if (pv.orbit_of[i] != pv.orbit_of[pu.reps[pu.orbit_of[i]]]) return false;
  return true;
}

bool orbit_equivalent(const PGroup& u, const PGroup& v, std::uint64_t max_profiles) {
  return orbit_leq(u, v, max_profiles) && orbit_leq(v, u, max_profiles);
}

PGroup orbit_preserver(const PGroup& u, std::uint64_t max_group_order,
                       std::uint64_t max_profiles) {
  if (!is_regular_by_criterion(u))
    throw std::invalid_argument("orbit_preserver requires a regular group");
  const OrbitPartition& part = all_orbits(u, max_profiles);
  const std::uint64_t count = part.orbit_of.size();
  const PGroup g = full_group(u.pair(), max_group_order);
  std::vector<GElem> keepers;
  for (const GElem& e : g.elements()) {
    const IndexAction act(u.pair(), e, max_profiles);
    bool keeps = true;
    for (std::uint64_t i = 0; i < count && keeps; ++i)
      keeps = part.orbit_of[act(i)] == part.orbit_of[i];
    if (keeps) keepers.push_back(e);
  }
  // from_elements re-checks closure; the orbit-preserving set is product
  // closed, so a failure here is an internal error.
  return PGroup::from_elements(u.pair(), std::move(keepers));
}

PGroup orbit_extension(const PGroup& u, std::uint64_t max_group_order,
                       std::uint64_t max_profiles) {
  const PGroup w = orbit_preserver(u, max_group_order, max_profiles);
  std::vector<GElem> seeds;
  for (const GElem& g : w.elements()) {
    std::vector<GElem> gens = u.generators();
    gens.push_back(g);
    const PGroup ext = PGroup::closure(u.pair(), std::move(gens), max_group_order);
    if (is_regular_by_criterion(ext) && w.contains(ext)) seeds.push_back(g);
  }
  return PGroup::closure(u.pair(), std::move(seeds), max_group_order);
}

bool is_orbit_extension_fixed(const PGroup& u, std::uint64_t max_group_order,
                              std::uint64_t max_profiles) {
  return orbit_extension(u, max_group_order, max_profiles) == u;
}

}  // namespace spfsym

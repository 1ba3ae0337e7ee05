#include "spfsym/regularity.hpp"

#include <vector>

#include "spfsym/profile.hpp"

namespace spfsym {

bool is_regular_by_definition(const PGroup& u, std::uint64_t max_profiles) {
  const std::uint64_t count = profile_count(u.pair(), max_profiles);
  for (const GElem& g : u.elements()) {
    if (g.psi.is_identity()) continue;
    const IndexAction act(u.pair(), g, max_profiles);
    for (std::uint64_t i = 0; i < count; ++i)
      if (act(i) == i) return false;  // g sits in Stab(p) with psi != id
  }
  return true;
}

bool is_regular_by_criterion(const PGroup& u) {
  for (const GElem& g : u.elements()) {
    if (g.psi.is_identity()) continue;
    const std::uint64_t phi_gcd = type_gcd(cycle_type(g.phi));
    const std::uint64_t psi_order = order(g.psi);
    for (std::uint64_t r = 2; r <= psi_order; ++r) {
      if (psi_order % r != 0) continue;
      bool prime = true;
      for (std::uint64_t d = 2; d * d <= r; ++d)
        if (r % d == 0) {
          prime = false;
          break;
        }
      if (!prime) continue;
      if (phi_gcd % r_part(psi_order, r) == 0) return false;
    }
  }
  return true;
}

bool is_regular(const PGroup& u, bool verify, std::uint64_t max_profiles) {
  const bool criterion = is_regular_by_criterion(u);
  if (verify && criterion != is_regular_by_definition(u, max_profiles))
    throw VerificationError("regularity criterion disagrees with the stabilizer definition");
  return criterion;
}

bool is_regular_maximal(const PGroup& u, std::uint64_t max_group_order,
                        std::uint64_t max_profiles) {
  (void)max_profiles;
  if (!is_regular_by_criterion(u)) return false;
  // A regular W > U would make <U, g> a regular proper overgroup for any
  // g in W \ U (regularity is subgroup-closed), so single-generator
  // extensions decide maximality without touching the subgroup lattice.
  const PGroup g = full_group(u.pair(), max_group_order);
  for (const GElem& e : g.elements()) {
    if (u.contains(e)) continue;
    std::vector<GElem> gens = u.generators();
    gens.push_back(e);
    if (is_regular_by_criterion(PGroup::closure(u.pair(), std::move(gens), max_group_order)))
      return false;
  }
  return true;
}

}  // namespace spfsym

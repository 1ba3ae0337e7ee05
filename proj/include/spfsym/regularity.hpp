#pragma once

#include <cstdint>

#include "spfsym/errors.hpp"
#include "spfsym/group.hpp"

namespace spfsym {

/// A subgroup U of S_h x S_n is regular when the stabilizer of every
/// profile lies inside S_h x {id} -- equivalently, no element of U with
/// psi != id fixes any profile. Exactly the regular groups admit a
/// U-symmetric social preference function.

/// Stabilizer definition, by scanning the profile space.
bool is_regular_by_definition(const PGroup& u,
                              std::uint64_t max_profiles = kDefaultMaxProfiles);

/// Cycle-type criterion, no profile enumeration: U is regular iff for every
/// (phi, psi) in U with psi != id and every prime r dividing order(psi),
/// the r-part of order(psi) does not divide gcd of the cycle type of phi.
bool is_regular_by_criterion(const PGroup& u);

/// Production check (criterion). With verify = true also evaluates the
/// definition and throws VerificationError on disagreement.
bool is_regular(const PGroup& u, bool verify = false,
                std::uint64_t max_profiles = kDefaultMaxProfiles);

/// Regular with no strictly larger regular subgroup. Since regularity is
/// subgroup-closed it suffices to inspect the minimal overgroups.
bool is_regular_maximal(const PGroup& u,
                        std::uint64_t max_group_order = kDefaultMaxGroupOrder,
                        std::uint64_t max_profiles = kDefaultMaxProfiles);

}  // namespace spfsym

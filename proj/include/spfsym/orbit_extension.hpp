#pragma once

#include <cstdint>

#include "spfsym/errors.hpp"
#include "spfsym/group.hpp"

namespace spfsym {

/// True when every U-orbit of a profile is contained in its V-orbit
/// (p^U subset of p^V for all p).
bool orbit_leq(const PGroup& u, const PGroup& v,
               std::uint64_t max_profiles = kDefaultMaxProfiles);

/// Mutual orbit containment: U and V induce the same orbit partition.
bool orbit_equivalent(const PGroup& u, const PGroup& v,
                      std::uint64_t max_profiles = kDefaultMaxProfiles);

/// W(U): all g in G that keep every profile inside its own U-orbit.
/// A subgroup containing U; it may fail to be regular. Requires U regular.
PGroup orbit_preserver(const PGroup& u,
                       std::uint64_t max_group_order = kDefaultMaxGroupOrder,
                       std::uint64_t max_profiles = kDefaultMaxProfiles);

/// O(U): the subgroup generated by all regular overgroups of U whose orbits
/// stay inside the U-orbits. Computed through the element characterization
///   O(U) = < { g in W(U) : <U, g> regular and <U, g> inside W(U) } >,
/// which agrees with the overgroup definition: any such g lies in the
/// regular overgroup <U, g> with orbits inside U-orbits, and conversely a
/// member of such an overgroup V satisfies the element test via <U, g> <= V.
/// Requires U regular; the result is itself regular and O(U) = U is
/// necessary for U to be a symmetry (hence anonymity) group.
PGroup orbit_extension(const PGroup& u,
                       std::uint64_t max_group_order = kDefaultMaxGroupOrder,
                       std::uint64_t max_profiles = kDefaultMaxProfiles);

/// O(U) == U.
bool is_orbit_extension_fixed(const PGroup& u,
                              std::uint64_t max_group_order = kDefaultMaxGroupOrder,
                              std::uint64_t max_profiles = kDefaultMaxProfiles);

}  // namespace spfsym

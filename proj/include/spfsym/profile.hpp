#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "spfsym/errors.hpp"
#include "spfsym/group.hpp"
#include "spfsym/perm.hpp"

namespace spfsym {

/// A preference profile: one linear order on [n] per individual, stored by
/// canonical rank. Profiles are the points of the G = S_h x S_n action
///   (p^(phi,psi))_i = psi . p_{phi^-1(i)}.
class Profile {
public:
  Profile(VotingPair pair, std::vector<Perm> prefs);
  static Profile from_ranks(VotingPair pair, std::vector<std::uint16_t> ranks);

  VotingPair pair() const { return pair_; }
  const std::vector<std::uint16_t>& ranks() const { return ranks_; }

  /// Linear order of individual i (1-based).
  const Perm& pref(int i) const;

  bool operator==(const Profile&) const = default;

private:
  VotingPair pair_;
  std::vector<std::uint16_t> ranks_;
};

/// Number of profiles (n!)^h; throws BoundExceeded past max_profiles.
std::uint64_t profile_count(VotingPair pair,
                            std::uint64_t max_profiles = kDefaultMaxProfiles);

/// Mixed-radix encoding base n! of the component ranks, individual 1 most
/// significant. profile_index and profile_unindex are mutually inverse.
std::uint64_t profile_index(const Profile& p);
Profile profile_unindex(std::uint64_t index, VotingPair pair);

Profile apply(const Profile& p, const GElem& g);

bool is_constant(const Profile& p);
/// The n! constant profiles in rank order of their common component.
std::vector<Profile> constant_profiles(VotingPair pair);

/// Text form "1>2, 2>1, 1>2" (one order per individual).
std::string format_profile(const Profile& p);
Profile parse_profile(std::string_view text, VotingPair pair);

/// For n = 2, the profile as a 0/1 string, individual 1 first
/// (0 = "1>2" = id, 1 = "2>1" = (12)).
std::string bit_string(const Profile& p);

/// Applies one fixed group element to profile indices.
class IndexAction {
public:
  IndexAction(VotingPair pair, const GElem& g,
              std::uint64_t max_profiles = kDefaultMaxProfiles);
  std::uint64_t operator()(std::uint64_t index) const;

private:
  int h_;
  std::uint64_t nfact_;
  const SnTable* sn_;
  std::uint16_t psi_rank_;
  std::vector<int> src_pos_;          // src_pos_[i] = phi^-1(i+1) - 1
  std::vector<std::uint64_t> place_;  // place_[i] = (n!)^(h-1-i)
};

/// The partition of all (n!)^h profiles into U-orbits.
///
/// Orbit ids are numbered by increasing minimum profile index, and reps[j]
/// is that minimum index for orbit j. rep_psi[i] is the psi-rank of one
/// group element carrying the orbit representative to profile i (a
/// transversal, used to extend orbit assignments to full tables).
struct OrbitPartition {
  VotingPair pair;
  std::uint32_t orbit_count = 0;
  std::vector<std::uint32_t> orbit_of;
  std::vector<std::uint32_t> reps;
  std::vector<std::uint16_t> rep_psi;
};

/// Memoized per canonical group identity; the reference stays valid for the
/// lifetime of the process.
const OrbitPartition& all_orbits(const PGroup& u,
                                 std::uint64_t max_profiles = kDefaultMaxProfiles);

std::uint32_t orbit_count(const PGroup& u,
                          std::uint64_t max_profiles = kDefaultMaxProfiles);

/// The orbit of p under U, sorted by profile index.
std::vector<Profile> orbit_profiles(const Profile& p, const PGroup& u,
                                    std::uint64_t max_profiles = kDefaultMaxProfiles);

/// Canonical system of representatives (minimum index per orbit).
std::vector<Profile> representatives(const PGroup& u,
                                     std::uint64_t max_profiles = kDefaultMaxProfiles);

/// Subgroup of U fixing p.
PGroup stabilizer(const Profile& p, const PGroup& u);

}  // namespace spfsym

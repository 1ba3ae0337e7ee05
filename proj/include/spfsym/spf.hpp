#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "spfsym/errors.hpp"
#include "spfsym/group.hpp"
#include "spfsym/profile.hpp"

namespace spfsym {

/// A social preference function: a total map from the (n!)^h profiles to
/// linear orders on [n], tabulated by profile index with entries stored as
/// order ranks.
class Spf {
public:
  Spf(VotingPair pair, std::vector<std::uint16_t> table,
      std::uint64_t max_profiles = kDefaultMaxProfiles);

  VotingPair pair() const { return pair_; }
  const std::vector<std::uint16_t>& table() const { return table_; }

  const LinearOrder& evaluate(const Profile& p) const;
  std::uint16_t value_rank(std::uint64_t profile_index) const { return table_[profile_index]; }

  bool operator==(const Spf&) const = default;

private:
  VotingPair pair_;
  std::vector<std::uint16_t> table_;
};

/// One linear order per U-orbit, indexed like the canonical representatives
/// of all_orbits(group). Requires a regular group; the values determine a
/// unique U-symmetric SPF.
struct OrbitAssignment {
  PGroup group;
  std::vector<std::uint16_t> values;  // values[j] = rank of the order at reps[j]
};

/// The unique U-symmetric SPF extending the assignment: a profile p with
/// p = rep^(phi,psi) gets the value psi * q_orbit. Regularity makes the
/// choice of (phi,psi) immaterial. With verify = true the full symmetry
/// condition is re-checked and VerificationError thrown on failure.
Spf from_assignment(const OrbitAssignment& a, bool verify = false,
                    std::uint64_t max_profiles = kDefaultMaxProfiles);

/// Like from_assignment but pins values at arbitrary profiles (at most one
/// per orbit); unpinned orbits fall back to the given order. Pinning p to
/// value q sets the whole orbit so that the resulting SPF maps p to q.
Spf from_pinned_values(const PGroup& u,
                       const std::vector<std::pair<std::uint64_t, std::uint16_t>>& pins,
                       std::uint16_t fallback_rank, bool verify = false,
                       std::uint64_t max_profiles = kDefaultMaxProfiles);

/// F(p^(phi,psi)) == psi F(p) for all profiles p and all (phi,psi) in U.
bool is_symmetric_under(const Spf& f, const PGroup& u);

/// The single-element version of the symmetry condition.
bool is_symmetry_element(const Spf& f, const GElem& g);

/// G(F): all (phi,psi) with F(p^(phi,psi)) = psi F(p) for every p.
PGroup symmetry_group(const Spf& f);
/// G1(F) = G(F) meet (S_h x {id}).
PGroup anonymity_group(const Spf& f);
/// G2(F) = G(F) meet ({id} x S_n).
PGroup neutrality_group(const Spf& f);

/// F_g(p) = psi_g F(p^(g^-1)).
Spf conjugate_spf(const Spf& f, const GElem& g);

/// D_i(p) = p_i.
Spf dictatorship(VotingPair pair, int dictator);
Spf constant_spf(VotingPair pair, const LinearOrder& value);
/// n = 2 only: picks 1>2 when at least half the individuals do (ties to 1>2).
Spf majority_spf(VotingPair pair);

/// |F^U| = n!^R(U) for regular U, 0 otherwise (no U-symmetric SPF exists).
mpz_class symmetric_spf_count(const PGroup& u,
                              std::uint64_t max_profiles = kDefaultMaxProfiles);

/// JSON schema: { "pair": [h, n], "map": { "<profile>": "<order>", ... } }
/// with profiles in canonical index order when emitted; every profile must
/// be present (SPFs are total).
std::string spf_to_json(const Spf& f);
Spf spf_from_json(std::string_view text,
                  std::uint64_t max_profiles = kDefaultMaxProfiles);

}  // namespace spfsym

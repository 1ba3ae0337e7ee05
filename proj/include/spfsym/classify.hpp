#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spfsym/errors.hpp"
#include "spfsym/group.hpp"
#include "spfsym/spf.hpp"

namespace spfsym {

enum class GroupKind { anonymity, neutrality, symmetry };

std::string to_string(GroupKind kind);
GroupKind group_kind_from_string(std::string_view s);

struct ClassifyOptions {
  std::uint64_t seed = 0;
  std::uint64_t max_group_order = kDefaultMaxGroupOrder;
  std::uint64_t max_profiles = kDefaultMaxProfiles;
  bool verify = false;
};

/// Outcome of one membership decision. A true decision normally carries a
/// witness SPF whose relevant group (G1, G2 or G) equals the queried group
/// exactly, re-verified by brute force before being returned; method
/// "counting-only" marks the one escape where the decision is certain but
/// the witness search was exhausted.
struct Verdict {
  GroupKind kind;
  bool decision = false;
  std::string method;
  std::optional<Spf> witness;
};

/// Decides U = G2(F) for some SPF F. Requires U <= {id} x S_n. Always true:
/// the witness is a dictatorship when pi2(U) = S_n, otherwise built from
/// values pinned on coset-representative constant profiles.
Verdict is_neutrality_group(const PGroup& u, const ClassifyOptions& opt = {});

/// Decides U = G(F) for some SPF F. Exact: non-regular groups and groups
/// with O(U) != U fail; regular-maximal groups succeed; groups inside
/// S_h x {id} follow the anonymity decision; the rest are settled by the
/// counting identity |F^U| > |union of F^V over minimal regular overgroups|
/// evaluated by inclusion-exclusion with exact big integers.
Verdict is_symmetry_group(const PGroup& u, const ClassifyOptions& opt = {});

/// Decides U = G1(F) for some SPF F. Requires U <= S_h x {id}.
/// Fast paths in order: h <= n!; a profile whose full stabilizer lies in U;
/// O(U) != U; otherwise the symmetry decision (equivalent for these groups).
Verdict is_anonymity_group(const PGroup& u, const ClassifyOptions& opt = {});

/// An SPF whose anonymity group is trivial: for n >= 3 the first-individual
/// rule "follow the lowest-numbered individual ranking alternative 1 on
/// top", for n = 2 the ordered-profile indicator.
Spf trivial_group_witness(VotingPair pair,
                          std::uint64_t max_profiles = kDefaultMaxProfiles);

/// Remaps every constant profile to the identity order. For F symmetric
/// under U <= S_h x {id} with G1(F) = U this turns an anonymity witness
/// into a symmetry witness: G(result) = G1(result) = U.
Spf fix_constants_to_identity(const Spf& f);

struct ClassifyEntry {
  PGroup group;
  Verdict verdict;
};

struct ClassifyAllReport {
  VotingPair pair;
  GroupKind kind;
  std::vector<ClassifyEntry> entries;  // every subgroup of the relevant ambient
  bool fully = false;                  // all decisions true
};

ClassifyAllReport classify_all(VotingPair pair, GroupKind kind,
                               const ClassifyOptions& opt = {});

/// Verdict JSON: { "kind": ..., "pair": [h,n], "group": [...], "decision":
/// bool, "method": "...", "witness": <spf or null> }.
std::string verdict_to_json(const Verdict& v, const PGroup& u);

}  // namespace spfsym

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spfsym/classify.hpp"
#include "spfsym/errors.hpp"
#include "spfsym/perm.hpp"
#include "spfsym/spf.hpp"

namespace spfsym {

/// A k-valued Boolean function {0,1}^h -> {0,...,k-1}. Table index i
/// encodes the bit string of i with position 1 as the most significant
/// bit, matching the profile indexing convention.
struct BooleanFunction {
  int arity = 0;
  int value_count = 2;  // k
  std::vector<std::uint16_t> table;

  bool operator==(const BooleanFunction&) const = default;
};

BooleanFunction checked_boolean(int arity, int value_count,
                                std::vector<std::uint16_t> table);

/// S(F) = { phi in S_h : F(x^phi) = F(x) for all x } with
/// x^phi = (x_{phi^-1(1)}, ..., x_{phi^-1(h)}). Sorted by rank.
std::vector<Perm> invariance_group(const BooleanFunction& f);

/// Embeds F into an SPF on the pair (h, n), n! >= k: values name
/// permutations of S_n (0 = id, 1 = (12), further values take the unused
/// permutations in rank order), bit strings become profiles over {id, (12)},
/// and the table extends over the remaining profiles symmetrically under
/// S(F) x {id}. The result has G1 = S(F) x {id}.
Spf spf_from_boolean(const BooleanFunction& f, int n,
                     std::uint64_t max_profiles = kDefaultMaxProfiles);

/// Reads back a Boolean function from an SPF on two alternatives.
BooleanFunction boolean_from_spf(const Spf& f);

struct RepresentabilityVerdict {
  bool decision = false;
  std::string method;
  std::optional<BooleanFunction> witness;
};

/// V is 2-representable at arity h iff V = S(F) for some F in B_h(2),
/// which holds iff V x {id} is an anonymity group on the pair (h, 2).
/// The permutations must form a subgroup of S_h.
RepresentabilityVerdict is_two_representable(const std::vector<Perm>& v, int h,
                                             const ClassifyOptions& opt = {});

/// Necessary condition: O(V x {id}) = V x {id} on the pair (h, 2).
bool check_O_necessary(const std::vector<Perm>& v, int h,
                       const ClassifyOptions& opt = {});

/// JSON schema: { "arity": h, "k": k, "table": [ 2^h integers ] }.
std::string boolean_to_json(const BooleanFunction& f);
BooleanFunction boolean_from_json(std::string_view text);

}  // namespace spfsym

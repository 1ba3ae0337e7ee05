#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "spfsym/errors.hpp"
#include "spfsym/perm.hpp"

namespace spfsym {

/// A voting pair: h individuals, n alternatives (both >= 2).
/// The ambient group is G = S_h x S_n.
struct VotingPair {
  int h = 0;
  int n = 0;

  bool operator==(const VotingPair&) const = default;
  auto operator<=>(const VotingPair&) const = default;
};

VotingPair checked_pair(int h, int n);

/// Element (phi, psi) of S_h x S_n: phi renames individuals, psi alternatives.
struct GElem {
  Perm phi;
  Perm psi;

  bool operator==(const GElem&) const = default;

  /// Canonical encoding phi.rank() * n! + psi.rank(); total order on G.
  std::uint64_t key() const { return phi.rank() * factorial(psi.degree()) + psi.rank(); }
};

GElem identity_elem(VotingPair pair);
GElem compose(const GElem& a, const GElem& b);
GElem inverse(const GElem& a);
GElem conjugate(const GElem& a, const GElem& s);

/// Text form "(<phi>|<psi>)" with both components in cycle notation.
std::string format_gelem(const GElem& g);
GElem parse_gelem(std::string_view text, VotingPair pair);

/// A subgroup of G = S_h x S_n held as a dense, closed element set.
///
/// The canonical identity of a group is its sorted element-key set;
/// equality, hashing and all deterministic orderings use it. Values are
/// immutable once constructed.
class PGroup {
public:
  PGroup() = default;

  /// Smallest subgroup containing the generators (breadth-first product
  /// closure). Throws BoundExceeded when the closure grows past max_order.
  static PGroup closure(VotingPair pair, std::vector<GElem> generators,
                        std::uint64_t max_order = kDefaultMaxGroupOrder);

  /// Wraps an explicit element set; throws std::invalid_argument unless it
  /// is a subgroup (contains the identity, closed under composition).
  static PGroup from_elements(VotingPair pair, std::vector<GElem> elements);

  VotingPair pair() const { return pair_; }
  std::uint64_t order() const { return elems_.size(); }

  /// Elements sorted by canonical key.
  const std::vector<GElem>& elements() const { return elems_; }

  /// Canonical minimal generating set (greedy over elements in key order);
  /// deterministic for equal groups regardless of how they were built.
  const std::vector<GElem>& generators() const { return gens_; }

  const std::vector<std::uint64_t>& element_keys() const { return keys_; }

  bool contains(const GElem& g) const;
  bool contains(const PGroup& other) const;
  bool is_trivial() const { return elems_.size() == 1; }

  bool operator==(const PGroup& other) const {
    return pair_ == other.pair_ && keys_ == other.keys_;
  }

private:
  VotingPair pair_;
  std::vector<GElem> elems_;
  std::vector<std::uint64_t> keys_;
  std::vector<GElem> gens_;

  void finalize();
};

PGroup join(const PGroup& a, const PGroup& b,
            std::uint64_t max_order = kDefaultMaxGroupOrder);
PGroup conjugate_group(const PGroup& u, const GElem& g);

/// Componentwise image sets, each sorted by rank.
std::vector<Perm> project1(const PGroup& u);
std::vector<Perm> project2(const PGroup& u);

/// True iff U equals project1(U) x project2(U) as a set.
bool is_direct_product(const PGroup& u);

// -- named constructors ------------------------------------------------

PGroup trivial_group(VotingPair pair);
PGroup full_group(VotingPair pair, std::uint64_t max_order = kDefaultMaxGroupOrder);
/// <V> x <W> from generator lists for the two factors.
PGroup v_times_w(VotingPair pair, const std::vector<Perm>& v_gens,
                 const std::vector<Perm>& w_gens,
                 std::uint64_t max_order = kDefaultMaxGroupOrder);
/// A_h x {id}.
PGroup alternating_left(VotingPair pair, std::uint64_t max_order = kDefaultMaxGroupOrder);
/// K x {id} with K = {id, (12)(34), (13)(24), (14)(23)}; requires h = 4.
PGroup klein_left(VotingPair pair);
/// {(phi, psi) : phi(i) = psi(i) for all i in [n]}; requires n <= h.
PGroup diagonal_group(VotingPair pair, std::uint64_t max_order = kDefaultMaxGroupOrder);
/// (S_B1 x ... x S_Bk) x {id} for a partition {B1,...,Bk} of [h].
PGroup complete_intransitive(VotingPair pair, const std::vector<std::vector<int>>& blocks);

// -- subgroup lattice --------------------------------------------------

/// Every subgroup of the ambient group, sorted by (order, element keys).
std::vector<PGroup> all_subgroups_of(const PGroup& ambient,
                                     std::uint64_t max_order = kDefaultMaxGroupOrder);

/// Every subgroup of G = S_h x S_n; memoized per pair.
const std::vector<PGroup>& all_subgroups(VotingPair pair,
                                         std::uint64_t max_order = kDefaultMaxGroupOrder);

/// All V with U < V <= G and nothing strictly between U and V.
std::vector<PGroup> minimal_overgroups(const PGroup& u,
                                       std::uint64_t max_order = kDefaultMaxGroupOrder);

// -- group literal (CLI/JSON interface) ---------------------------------

/// Semicolon-separated generator pairs, e.g. "((1 2)(3 4)|id);((1 3)(2 4)|id)".
/// The empty string denotes the trivial group.
PGroup parse_group(std::string_view literal, VotingPair pair,
                   std::uint64_t max_order = kDefaultMaxGroupOrder);
std::string format_group(const PGroup& u);

}  // namespace spfsym

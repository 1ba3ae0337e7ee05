#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace spfsym {

std::uint64_t factorial(int k);

/// Largest power of the prime r dividing k. Requires k >= 1 and r prime.
std::uint64_t r_part(std::uint64_t k, std::uint64_t r);

/// Permutation of [k] = {1,...,k}, stored as its image sequence:
/// images()[i-1] is the image of point i. All points are 1-based.
///
/// A permutation doubles as a linear order on [k]: images()[r-1] is the
/// alternative placed at rank position r, so the order 3>2>4>1 is the
/// permutation sending 1->3, 2->2, 3->4, 4->1.
class Perm {
public:
  Perm() = default;

  /// Identity of the given degree.
  explicit Perm(int degree);

  /// From an explicit image sequence (1-based values). Throws
  /// std::invalid_argument unless the sequence is a bijection of [k].
  explicit Perm(std::vector<int> images);

  static Perm identity(int degree) { return Perm(degree); }

  /// From disjoint cycles on [degree]; points not mentioned are fixed.
  static Perm from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }

  /// Image of point x (1-based).
  int operator()(int x) const { return images_[static_cast<std::size_t>(x) - 1]; }

  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;

  bool operator==(const Perm&) const = default;
  auto operator<=>(const Perm&) const = default;

  /// Lexicographic rank of the image sequence among all degree! sequences;
  /// rank(identity) == 0. This is the canonical enumeration order.
  std::uint64_t rank() const;
  static Perm unrank(std::uint64_t rank, int degree);

private:
  std::vector<int> images_;
};

/// compose(a, b)(x) = a(b(x)). Throws on degree mismatch.
Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& a);
/// conjugate(a, s) = s * a * s^-1. Throws on degree mismatch.
Perm conjugate(const Perm& a, const Perm& s);

bool is_even(const Perm& a);

/// Unordered multiset of orbit sizes of <a> on [degree]; parts sum to degree.
struct CycleType {
  std::vector<int> parts;  // sorted descending
  int degree = 0;

  bool operator==(const CycleType&) const = default;
};

CycleType cycle_type(const Perm& a);
std::uint64_t type_gcd(const CycleType& t);
std::uint64_t type_lcm(const CycleType& t);

/// order(a) = lcm of the cycle type of a.
std::uint64_t order(const Perm& a);

/// Cycle grammar: perm := "id" | cycle+ ; cycle := "(" int (sep int)* ")" ;
/// sep := whitespace | ",". Cycles must be disjoint; points in [degree].
Perm parse_cycles(std::string_view text, int degree);

/// Canonical form: cycles sorted by smallest moved point, each rotated to
/// start at its smallest point, fixed points omitted; identity is "id".
std::string format_cycles(const Perm& a);

/// A linear order on [n] under the ranking identification above.
using LinearOrder = Perm;

/// Order grammar: n distinct alternatives joined by ">", e.g. "3>2>4>1".
LinearOrder parse_order(std::string_view text, int n);
std::string format_order(const LinearOrder& o);

/// All k! permutations in lexicographic image-sequence order.
/// Throws BoundExceeded for k > 8.
std::vector<Perm> all_permutations(int k);

/// Rank-indexed tables for one symmetric group S_n (n <= 7): every
/// permutation in canonical rank order plus composition and inverse lookup.
class SnTable {
public:
  /// Memoized per-degree instance.
  static const SnTable& of(int n);

  int degree() const { return n_; }
  std::uint32_t size() const { return static_cast<std::uint32_t>(perms_.size()); }

  const Perm& perm(std::uint16_t rank) const { return perms_[rank]; }

  /// Rank of perm(a) composed with perm(b) (apply b first).
  std::uint16_t mult(std::uint16_t a, std::uint16_t b) const;
  std::uint16_t inv(std::uint16_t a) const { return inv_[a]; }

private:
  explicit SnTable(int n);

  int n_;
  std::vector<Perm> perms_;
  std::vector<std::uint16_t> mult_;  // empty when the table is too large
  std::vector<std::uint16_t> inv_;
};

}  // namespace spfsym

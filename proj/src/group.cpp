#include "spfsym/group.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_set>

namespace spfsym {

VotingPair checked_pair(int h, int n) {
  if (h < 2 || n < 2) throw std::invalid_argument("voting pair requires h >= 2 and n >= 2");
  if (h > 7 || n > 7) throw BoundExceeded("voting pair components must be within 2..7");
  return VotingPair{h, n};
}

GElem identity_elem(VotingPair pair) {
  return GElem{Perm(pair.h), Perm(pair.n)};
}

GElem compose(const GElem& a, const GElem& b) {
  return GElem{compose(a.phi, b.phi), compose(a.psi, b.psi)};
}

GElem inverse(const GElem& a) { return GElem{inverse(a.phi), inverse(a.psi)}; }

GElem conjugate(const GElem& a, const GElem& s) {
  return GElem{conjugate(a.phi, s.phi), conjugate(a.psi, s.psi)};
}

std::string format_gelem(const GElem& g) {
  return "(" + format_cycles(g.phi) + "|" + format_cycles(g.psi) + ")";
}

GElem parse_gelem(std::string_view text, VotingPair pair) {
  std::size_t b = text.find_first_not_of(" \t");
  std::size_t e = text.find_last_not_of(" \t");
  if (b == std::string_view::npos || text[b] != '(' || text[e] != ')')
    throw std::invalid_argument("generator must be of the form (<phi>|<psi>)");
  std::string_view inner = text.substr(b + 1, e - b - 1);
  std::size_t bar = inner.find('|');
  if (bar == std::string_view::npos)
    throw std::invalid_argument("generator must separate phi and psi with '|'");
  return GElem{parse_cycles(inner.substr(0, bar), pair.h),
               parse_cycles(inner.substr(bar + 1), pair.n)};
}

namespace {

// Key-space closure helpers. An element key is phiRank * n! + psiRank; all
// products are looked up in the per-degree SnTables.
struct KeySpace {
  const SnTable& sh;
  const SnTable& sn;
  std::uint64_t nfact;

  explicit KeySpace(VotingPair pair)
      : sh(SnTable::of(pair.h)), sn(SnTable::of(pair.n)), nfact(factorial(pair.n)) {}

  std::uint64_t mult(std::uint64_t a, std::uint64_t b) const {
    const auto pa = static_cast<std::uint16_t>(a / nfact);
    const auto pb = static_cast<std::uint16_t>(b / nfact);
    const auto qa = static_cast<std::uint16_t>(a % nfact);
    const auto qb = static_cast<std::uint16_t>(b % nfact);
    return static_cast<std::uint64_t>(sh.mult(pa, pb)) * nfact + sn.mult(qa, qb);
  }

  GElem elem(std::uint64_t key) const {
    return GElem{sh.perm(static_cast<std::uint16_t>(key / nfact)),
                 sn.perm(static_cast<std::uint16_t>(key % nfact))};
  }
};

// Breadth-first semigroup closure from the identity; for finite groups this
// equals the generated subgroup.
std::vector<std::uint64_t> close_keys(const KeySpace& ks,
                                      const std::vector<std::uint64_t>& gen_keys,
                                      std::uint64_t max_order) {
  std::unordered_set<std::uint64_t> seen{0};
  std::vector<std::uint64_t> queue{0};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const std::uint64_t e = queue[qi];
    for (std::uint64_t g : gen_keys) {
      const std::uint64_t f = ks.mult(e, g);
      if (seen.insert(f).second) {
        if (seen.size() > max_order)
          throw BoundExceeded("group closure exceeds the order bound");
        queue.push_back(f);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

std::vector<std::uint64_t> minimal_generator_keys(const KeySpace& ks,
                                                  const std::vector<std::uint64_t>& keys) {
  std::vector<std::uint64_t> gens;
  std::vector<std::uint64_t> closed{0};
  for (std::uint64_t k : keys) {
    if (closed.size() == keys.size()) break;
    if (std::binary_search(closed.begin(), closed.end(), k)) continue;
    gens.push_back(k);
    closed = close_keys(ks, gens, keys.size());
  }
  return gens;
}

}  // namespace

void PGroup::finalize() {
  std::sort(elems_.begin(), elems_.end(),
            [](const GElem& a, const GElem& b) { return a.key() < b.key(); });
  keys_.clear();
  keys_.reserve(elems_.size());
  for (const GElem& e : elems_) keys_.push_back(e.key());
  const KeySpace ks(pair_);
  gens_.clear();
  for (std::uint64_t k : minimal_generator_keys(ks, keys_)) gens_.push_back(ks.elem(k));
}

PGroup PGroup::closure(VotingPair pair, std::vector<GElem> generators,
                       std::uint64_t max_order) {
  for (const GElem& g : generators)
    if (g.phi.degree() != pair.h || g.psi.degree() != pair.n)
      throw std::invalid_argument("generator degrees do not match the voting pair");
  const KeySpace ks(pair);
  std::vector<std::uint64_t> gen_keys;
  gen_keys.reserve(generators.size());
  for (const GElem& g : generators) gen_keys.push_back(g.key());
  PGroup u;
  u.pair_ = pair;
  for (std::uint64_t k : close_keys(ks, gen_keys, max_order)) u.elems_.push_back(ks.elem(k));
  u.finalize();
  return u;
}

PGroup PGroup::from_elements(VotingPair pair, std::vector<GElem> elements) {
  PGroup u;
  u.pair_ = pair;
  u.elems_ = std::move(elements);
  for (const GElem& g : u.elems_)
    if (g.phi.degree() != pair.h || g.psi.degree() != pair.n)
      throw std::invalid_argument("element degrees do not match the voting pair");
  try {
    u.finalize();
  } catch (const BoundExceeded&) {  // the greedy generators escaped the set
    throw std::invalid_argument("element set is not a subgroup");
  }
  if (std::adjacent_find(u.keys_.begin(), u.keys_.end()) != u.keys_.end())
    throw std::invalid_argument("element set contains duplicates");
  // Regenerating from the minimal generators must reproduce the set exactly.
  const KeySpace ks(pair);
  std::vector<std::uint64_t> gen_keys;
  for (const GElem& g : u.gens_) gen_keys.push_back(g.key());
  if (close_keys(ks, gen_keys, u.keys_.size() + 1) != u.keys_)
    throw std::invalid_argument("element set is not a subgroup");
  return u;
}

bool PGroup::contains(const GElem& g) const {
  return std::binary_search(keys_.begin(), keys_.end(), g.key());
}

bool PGroup::contains(const PGroup& other) const {
  return pair_ == other.pair_ &&
         std::includes(keys_.begin(), keys_.end(), other.keys_.begin(), other.keys_.end());
}

PGroup join(const PGroup& a, const PGroup& b, std::uint64_t max_order) {
  if (a.pair() != b.pair()) throw std::invalid_argument("join: pair mismatch");
  std::vector<GElem> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return PGroup::closure(a.pair(), std::move(gens), max_order);
}

PGroup conjugate_group(const PGroup& u, const GElem& g) {
  std::vector<GElem> elems;
  elems.reserve(u.order());
  for (const GElem& e : u.elements()) elems.push_back(conjugate(e, g));
  return PGroup::from_elements(u.pair(), std::move(elems));
}

std::vector<Perm> project1(const PGroup& u) {
  std::vector<Perm> out;
  for (const GElem& e : u.elements()) out.push_back(e.phi);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Perm> project2(const PGroup& u) {
  std::vector<Perm> out;
  for (const GElem& e : u.elements()) out.push_back(e.psi);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_direct_product(const PGroup& u) {
  // U <= pi1(U) x pi2(U) always holds, so equality of sizes is equality of sets.
  return u.order() == project1(u).size() * static_cast<std::uint64_t>(project2(u).size());
}

PGroup trivial_group(VotingPair pair) { return PGroup::closure(pair, {}); }

PGroup full_group(VotingPair pair, std::uint64_t max_order) {
  const std::uint64_t n = factorial(pair.h) * factorial(pair.n);
  if (n > max_order) throw BoundExceeded("ambient group order exceeds the bound");
  static std::mutex mu;
  static std::map<VotingPair, PGroup> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(pair);
  if (it == cache.end()) {
    const SnTable& sh = SnTable::of(pair.h);
    const SnTable& sn = SnTable::of(pair.n);
    std::vector<GElem> elems;
    elems.reserve(n);
    for (std::uint32_t a = 0; a < sh.size(); ++a)
      for (std::uint32_t b = 0; b < sn.size(); ++b)
        elems.push_back(GElem{sh.perm(static_cast<std::uint16_t>(a)),
                              sn.perm(static_cast<std::uint16_t>(b))});
    it = cache.emplace(pair, PGroup::from_elements(pair, std::move(elems))).first;
  }
  return it->second;
}

PGroup v_times_w(VotingPair pair, const std::vector<Perm>& v_gens,
                 const std::vector<Perm>& w_gens, std::uint64_t max_order) {
  std::vector<GElem> gens;
  for (const Perm& v : v_gens) gens.push_back(GElem{v, Perm(pair.n)});
  for (const Perm& w : w_gens) gens.push_back(GElem{Perm(pair.h), w});
  return PGroup::closure(pair, std::move(gens), max_order);
}

PGroup alternating_left(VotingPair pair, std::uint64_t max_order) {
  std::vector<Perm> gens;
  for (int i = 3; i <= pair.h; ++i) gens.push_back(Perm::from_cycles(pair.h, {{1, 2, i}}));
  return v_times_w(pair, gens, {}, max_order);
}

PGroup klein_left(VotingPair pair) {
  if (pair.h != 4) throw std::invalid_argument("klein_left requires h = 4");
  return v_times_w(pair,
                   {Perm::from_cycles(4, {{1, 2}, {3, 4}}), Perm::from_cycles(4, {{1, 3}, {2, 4}})},
                   {});
}

PGroup diagonal_group(VotingPair pair, std::uint64_t max_order) {
  if (pair.n > pair.h) throw std::invalid_argument("diagonal_group requires n <= h");
  if (factorial(pair.h) * factorial(pair.n) > max_order)
    throw BoundExceeded("ambient group order exceeds the bound");
  const SnTable& sh = SnTable::of(pair.h);
  const SnTable& sn = SnTable::of(pair.n);
  std::vector<GElem> elems;
  for (std::uint32_t a = 0; a < sh.size(); ++a) {
    const Perm& phi = sh.perm(static_cast<std::uint16_t>(a));
    for (std::uint32_t b = 0; b < sn.size(); ++b) {
      const Perm& psi = sn.perm(static_cast<std::uint16_t>(b));
      bool match = true;
      for (int i = 1; i <= pair.n && match; ++i) match = phi(i) == psi(i);
      if (match) elems.push_back(GElem{phi, psi});
    }
  }
  return PGroup::from_elements(pair, std::move(elems));
}

PGroup complete_intransitive(VotingPair pair, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> block_of(static_cast<std::size_t>(pair.h), 0);
  std::vector<bool> seen(static_cast<std::size_t>(pair.h), false);
  int b = 0;
  for (const auto& block : blocks) {
    ++b;
    if (block.empty()) throw std::invalid_argument("empty partition block");
    for (int x : block) {
      if (x < 1 || x > pair.h) throw std::invalid_argument("partition point out of range");
      if (seen[static_cast<std::size_t>(x) - 1])
        throw std::invalid_argument("partition blocks overlap");
      seen[static_cast<std::size_t>(x) - 1] = true;
      block_of[static_cast<std::size_t>(x) - 1] = b;
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw std::invalid_argument("partition does not cover [h]");
  const SnTable& sh = SnTable::of(pair.h);
  std::vector<GElem> elems;
  for (std::uint32_t a = 0; a < sh.size(); ++a) {
    const Perm& phi = sh.perm(static_cast<std::uint16_t>(a));
    bool keeps = true;
    for (int x = 1; x <= pair.h && keeps; ++x)
      keeps = block_of[static_cast<std::size_t>(phi(x)) - 1] ==
              block_of[static_cast<std::size_t>(x) - 1];
    if (keeps) elems.push_back(GElem{phi, Perm(pair.n)});
  }
  return PGroup::from_elements(pair, std::move(elems));
}

std::vector<PGroup> all_subgroups_of(const PGroup& ambient, std::uint64_t max_order) {
  if (ambient.order() > max_order)
    throw BoundExceeded("subgroup enumeration: ambient order exceeds the bound");
  const KeySpace ks(ambient.pair());
  const std::vector<std::uint64_t>& universe = ambient.element_keys();

  // Bottom-up single-generator extensions reach every subgroup: any chain
  // <g1> <= <g1,g2> <= ... climbs one generator at a time.
  std::map<std::vector<std::uint64_t>, std::vector<std::uint64_t>> known;  // keys -> gens
  std::vector<std::uint64_t> id_only{0};
  known.emplace(id_only, std::vector<std::uint64_t>{});
  std::vector<std::vector<std::uint64_t>> frontier{id_only};
  while (!frontier.empty()) {
    std::vector<std::vector<std::uint64_t>> next;
    for (const auto& keys : frontier) {
      const auto& gens = known.at(keys);
      for (std::uint64_t g : universe) {
        if (std::binary_search(keys.begin(), keys.end(), g)) continue;
        std::vector<std::uint64_t> ext_gens = gens;
        ext_gens.push_back(g);
        std::vector<std::uint64_t> ext = close_keys(ks, ext_gens, ambient.order());
        if (known.emplace(ext, ext_gens).second) next.push_back(std::move(ext));
      }
    }
    frontier = std::move(next);
  }

  std::vector<PGroup> out;
  out.reserve(known.size());
  for (const auto& [keys, gens] : known) {
    std::vector<GElem> elems;
    elems.reserve(keys.size());
    for (std::uint64_t k : keys) elems.push_back(ks.elem(k));
    out.push_back(PGroup::from_elements(ambient.pair(), std::move(elems)));
  }
  std::sort(out.begin(), out.end(), [](const PGroup& a, const PGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.element_keys() < b.element_keys();
  });
  return out;
}

const std::vector<PGroup>& all_subgroups(VotingPair pair, std::uint64_t max_order) {
  if (factorial(pair.h) * factorial(pair.n) > max_order)
    throw BoundExceeded("subgroup enumeration: ambient order exceeds the bound");
  static std::mutex mu;
  static std::map<VotingPair, std::unique_ptr<const std::vector<PGroup>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(pair);
  if (it == cache.end()) {
    auto lattice = std::make_unique<std::vector<PGroup>>(
        all_subgroups_of(full_group(pair, max_order), max_order));
    it = cache.emplace(pair, std::move(lattice)).first;
  }
  return *it->second;
}

std::vector<PGroup> minimal_overgroups(const PGroup& u, std::uint64_t max_order) {
  const std::vector<PGroup>& lattice = all_subgroups(u.pair(), max_order);
  std::vector<const PGroup*> over;
  for (const PGroup& v : lattice)
    if (v.order() > u.order() && v.contains(u)) over.push_back(&v);
  std::vector<PGroup> out;
  for (const PGroup* v : over) {
    bool minimal = true;
    for (const PGroup* w : over)
      if (w != v && v->contains(*w)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(*v);
  }
  return out;
}

PGroup parse_group(std::string_view literal, VotingPair pair, std::uint64_t max_order) {
  std::vector<GElem> gens;
  std::size_t start = 0;
  while (start <= literal.size()) {
    std::size_t semi = literal.find(';', start);
    std::string_view part = literal.substr(
        start, semi == std::string_view::npos ? std::string_view::npos : semi - start);
    std::size_t b = part.find_first_not_of(" \t");
    if (b != std::string_view::npos) gens.push_back(parse_gelem(part, pair));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  return PGroup::closure(pair, std::move(gens), max_order);
}

std::string format_group(const PGroup& u) {
  std::string out;
  for (const GElem& g : u.generators()) {
    if (!out.empty()) out += ';';
    out += format_gelem(g);
  }
  return out;
}

}  // namespace spfsym

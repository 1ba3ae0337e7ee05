#include "spfsym/profile.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <tuple>

namespace spfsym {

Profile::Profile(VotingPair pair, std::vector<Perm> prefs) : pair_(pair) {
  if (static_cast<int>(prefs.size()) != pair.h)
    throw std::invalid_argument("profile must have one order per individual");
  ranks_.reserve(prefs.size());
  for (const Perm& o : prefs) {
    if (o.degree() != pair.n)
      throw std::invalid_argument("profile component degree mismatch");
    ranks_.push_back(static_cast<std::uint16_t>(o.rank()));
  }
}

Profile Profile::from_ranks(VotingPair pair, std::vector<std::uint16_t> ranks) {
  if (static_cast<int>(ranks.size()) != pair.h)
    throw std::invalid_argument("profile must have one order per individual");
  const std::uint64_t nfact = factorial(pair.n);
  for (std::uint16_t r : ranks)
    if (r >= nfact) throw std::invalid_argument("profile component rank out of range");
  Profile p(pair, std::vector<Perm>(static_cast<std::size_t>(pair.h), Perm(pair.n)));
  p.ranks_ = std::move(ranks);
  return p;
}

const Perm& Profile::pref(int i) const {
  if (i < 1 || i > pair_.h) throw std::invalid_argument("individual out of range");
  return SnTable::of(pair_.n).perm(ranks_[static_cast<std::size_t>(i) - 1]);
}

std::uint64_t profile_count(VotingPair pair, std::uint64_t max_profiles) {
  const std::uint64_t nfact = factorial(pair.n);
  std::uint64_t count = 1;
  for (int i = 0; i < pair.h; ++i) {
    if (count > max_profiles / nfact + 1) throw BoundExceeded("profile space exceeds the bound");
    count *= nfact;
  }
  if (count > max_profiles) throw BoundExceeded("profile space exceeds the bound");
  return count;
}

std::uint64_t profile_index(const Profile& p) {
  const std::uint64_t nfact = factorial(p.pair().n);
  std::uint64_t idx = 0;
  for (std::uint16_t r : p.ranks()) idx = idx * nfact + r;
  return idx;
}

Profile profile_unindex(std::uint64_t index, VotingPair pair) {
  const std::uint64_t nfact = factorial(pair.n);
  std::uint64_t count = profile_count(pair);
  if (index >= count) throw std::invalid_argument("profile index out of range");
  std::vector<std::uint16_t> ranks(static_cast<std::size_t>(pair.h));
  for (int i = pair.h - 1; i >= 0; --i) {
    ranks[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(index % nfact);
    index /= nfact;
  }
  return Profile::from_ranks(pair, std::move(ranks));
}

Profile apply(const Profile& p, const GElem& g) {
  const VotingPair pair = p.pair();
  if (g.phi.degree() != pair.h || g.psi.degree() != pair.n)
    throw std::invalid_argument("apply: element degrees do not match the profile");
  const SnTable& sn = SnTable::of(pair.n);
  const auto psi_rank = static_cast<std::uint16_t>(g.psi.rank());
  const Perm phi_inv = inverse(g.phi);
  std::vector<std::uint16_t> ranks(static_cast<std::size_t>(pair.h));
  for (int i = 1; i <= pair.h; ++i)
    ranks[static_cast<std::size_t>(i) - 1] =
        sn.mult(psi_rank, p.ranks()[static_cast<std::size_t>(phi_inv(i)) - 1]);
  return Profile::from_ranks(pair, std::move(ranks));
}

bool is_constant(const Profile& p) {
  const auto& r = p.ranks();
  return std::adjacent_find(r.begin(), r.end(), std::not_equal_to<>()) == r.end();
}

std::vector<Profile> constant_profiles(VotingPair pair) {
  const std::uint64_t nfact = factorial(pair.n);
  std::vector<Profile> out;
  out.reserve(nfact);
  for (std::uint64_t r = 0; r < nfact; ++r)
    out.push_back(Profile::from_ranks(
        pair, std::vector<std::uint16_t>(static_cast<std::size_t>(pair.h),
                                         static_cast<std::uint16_t>(r))));
  return out;
}

std::string format_profile(const Profile& p) {
  std::string out;
  for (int i = 1; i <= p.pair().h; ++i) {
    if (i > 1) out += ", ";
    out += format_order(p.pref(i));
  }
  return out;
}

Profile parse_profile(std::string_view text, VotingPair pair) {
  std::vector<Perm> prefs;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = text.find(',', start);
    std::string_view part = text.substr(
        start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    prefs.push_back(parse_order(part, pair.n));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Profile(pair, std::move(prefs));
}

std::string bit_string(const Profile& p) {
  if (p.pair().n != 2) throw std::invalid_argument("bit_string requires n = 2");
  std::string out;
  for (std::uint16_t r : p.ranks()) out += static_cast<char>('0' + r);
  return out;
}

IndexAction::IndexAction(VotingPair pair, const GElem& g, std::uint64_t max_profiles)
    : h_(pair.h),
      nfact_(factorial(pair.n)),
      sn_(&SnTable::of(pair.n)),
      psi_rank_(static_cast<std::uint16_t>(g.psi.rank())) {
  profile_count(pair, max_profiles);
  if (g.phi.degree() != pair.h || g.psi.degree() != pair.n)
    throw std::invalid_argument("IndexAction: element degrees do not match the pair");
  const Perm phi_inv = inverse(g.phi);
  src_pos_.resize(static_cast<std::size_t>(h_));
  for (int i = 1; i <= h_; ++i) src_pos_[static_cast<std::size_t>(i) - 1] = phi_inv(i) - 1;
  place_.resize(static_cast<std::size_t>(h_));
  std::uint64_t pw = 1;
  for (int i = h_ - 1; i >= 0; --i) {
    place_[static_cast<std::size_t>(i)] = pw;
    pw *= nfact_;
  }
}

std::uint64_t IndexAction::operator()(std::uint64_t index) const {
  std::uint16_t digits[16];
  for (int i = h_ - 1; i >= 0; --i) {
    digits[i] = static_cast<std::uint16_t>(index % nfact_);
    index /= nfact_;
  }
  std::uint64_t out = 0;
  for (int i = 0; i < h_; ++i)
    out += static_cast<std::uint64_t>(sn_->mult(psi_rank_, digits[src_pos_[static_cast<std::size_t>(i)]])) *
           place_[static_cast<std::size_t>(i)];
  return out;
}

namespace {

struct UnionFind {
  std::vector<std::uint32_t> parent;

  explicit UnionFind(std::uint64_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0u);
  }

  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  // Keeps the smaller index as root so representatives are orbit minima.
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b)
      parent[b] = a;
    else
      parent[a] = b;
  }
};

OrbitPartition compute_orbits(const PGroup& u, std::uint64_t max_profiles) {
  const VotingPair pair = u.pair();
  const std::uint64_t count = profile_count(pair, max_profiles);

  std::vector<IndexAction> actions;
  std::vector<std::uint16_t> gen_psi;
  for (const GElem& g : u.generators()) {
    actions.emplace_back(pair, g, max_profiles);
    gen_psi.push_back(static_cast<std::uint16_t>(g.psi.rank()));
  }

  UnionFind uf(count);
  for (const IndexAction& act : actions)
    for (std::uint64_t i = 0; i < count; ++i)
      uf.unite(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(act(i)));

  OrbitPartition part;
  part.pair = pair;
  part.orbit_of.assign(count, 0);
  constexpr std::uint32_t kUnset = 0xffffffffu;
  std::vector<std::uint32_t> orbit_id(count, kUnset);
  for (std::uint64_t i = 0; i < count; ++i) {
    const std::uint32_t root = uf.find(static_cast<std::uint32_t>(i));
    if (orbit_id[root] == kUnset) {  // roots are minima, visited in order
      orbit_id[root] = part.orbit_count++;
      part.reps.push_back(root);
    }
    part.orbit_of[i] = orbit_id[root];
  }

  // Transversal: breadth-first from each representative, recording the
  // psi-component of one element that maps the representative onto each
  // member (p = rep^t gives rep_psi[p] = rank of psi_t).
  constexpr std::uint16_t kPsiUnset = 0xffff;
  part.rep_psi.assign(count, kPsiUnset);
  const SnTable& sn = SnTable::of(pair.n);
  std::vector<std::uint32_t> queue;
  for (std::uint32_t rep : part.reps) {
    queue.clear();
    queue.push_back(rep);
    part.rep_psi[rep] = 0;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const std::uint32_t p = queue[qi];
      for (std::size_t gi = 0; gi < actions.size(); ++gi) {
        const auto q = static_cast<std::uint32_t>(actions[gi](p));
        if (part.rep_psi[q] == kPsiUnset) {
          part.rep_psi[q] = sn.mult(gen_psi[gi], part.rep_psi[p]);
          queue.push_back(q);
        }
      }
    }
  }
  return part;
}

}  // namespace

const OrbitPartition& all_orbits(const PGroup& u, std::uint64_t max_profiles) {
  profile_count(u.pair(), max_profiles);
  using Key = std::tuple<int, int, std::vector<std::uint64_t>>;
  static std::mutex mu;
  static std::map<Key, std::unique_ptr<const OrbitPartition>> cache;
  Key key{u.pair().h, u.pair().n, u.element_keys()};
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it == cache.end()) {
    auto part = std::make_unique<OrbitPartition>(compute_orbits(u, max_profiles));
    it = cache.emplace(std::move(key), std::move(part)).first;
  }
  return *it->second;
}

std::uint32_t orbit_count(const PGroup& u, std::uint64_t max_profiles) {
  return all_orbits(u, max_profiles).orbit_count;
}

std::vector<Profile> orbit_profiles(const Profile& p, const PGroup& u,
                                    std::uint64_t max_profiles) {
  if (p.pair() != u.pair()) throw std::invalid_argument("orbit: pair mismatch");
  profile_count(p.pair(), max_profiles);
  std::vector<std::uint64_t> seen{profile_index(p)};
  std::vector<IndexAction> actions;
  for (const GElem& g : u.generators()) actions.emplace_back(p.pair(), g, max_profiles);
  for (std::size_t qi = 0; qi < seen.size(); ++qi)
    for (const IndexAction& act : actions) {
      const std::uint64_t q = act(seen[qi]);
      if (std::find(seen.begin(), seen.end(), q) == seen.end()) seen.push_back(q);
    }
  std::sort(seen.begin(), seen.end());
  std::vector<Profile> out;
  out.reserve(seen.size());
  for (std::uint64_t idx : seen) out.push_back(profile_unindex(idx, p.pair()));
  return out;
}

std::vector<Profile> representatives(const PGroup& u, std::uint64_t max_profiles) {
  const OrbitPartition& part = all_orbits(u, max_profiles);
  std::vector<Profile> out;
  out.reserve(part.reps.size());
  for (std::uint32_t rep : part.reps) out.push_back(profile_unindex(rep, u.pair()));
  return out;
}

PGroup stabilizer(const Profile& p, const PGroup& u) {
  if (p.pair() != u.pair()) throw std::invalid_argument("stabilizer: pair mismatch");
  std::vector<GElem> fixing;
  for (const GElem& g : u.elements())
    if (apply(p, g) == p) fixing.push_back(g);
  return PGroup::from_elements(u.pair(), std::move(fixing));
}

}  // namespace spfsym

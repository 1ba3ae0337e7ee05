#include "spfsym/perm.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "spfsym/errors.hpp"

namespace spfsym {

std::uint64_t factorial(int k) {
  if (k < 0 || k > 20) throw std::invalid_argument("factorial: k out of range");
  std::uint64_t f = 1;
  for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

namespace {

bool is_prime(std::uint64_t r) {
  if (r < 2) return false;
  for (std::uint64_t d = 2; d * d <= r; ++d)
    if (r % d == 0) return false;
  return true;
}

}  // namespace

std::uint64_t r_part(std::uint64_t k, std::uint64_t r) {
  if (k < 1) throw std::invalid_argument("r_part: k must be >= 1");
  if (!is_prime(r)) throw std::invalid_argument("r_part: r must be prime");
  std::uint64_t p = 1;
  while (k % r == 0) {
    p *= r;
    k /= r;
  }
  return p;
}

Perm::Perm(int degree) {
  if (degree < 0) throw std::invalid_argument("Perm: negative degree");
  images_.resize(static_cast<std::size_t>(degree));
  std::iota(images_.begin(), images_.end(), 1);
}

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  const int k = degree();
  std::vector<bool> seen(static_cast<std::size_t>(k), false);
  for (int v : images_) {
    if (v < 1 || v > k) throw std::invalid_argument("Perm: image out of range");
    if (seen[static_cast<std::size_t>(v) - 1])
      throw std::invalid_argument("Perm: repeated image");
    seen[static_cast<std::size_t>(v) - 1] = true;
  }
}

Perm Perm::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  Perm p(degree);
  std::vector<bool> seen(static_cast<std::size_t>(degree), false);
  for (const auto& cyc : cycles) {
    for (int x : cyc) {
      if (x < 1 || x > degree) throw std::invalid_argument("cycle point out of range");
      if (seen[static_cast<std::size_t>(x) - 1])
        throw std::invalid_argument("repeated point in cycles");
      seen[static_cast<std::size_t>(x) - 1] = true;
    }
    for (std::size_t j = 0; j + 1 < cyc.size(); ++j)
      p.images_[static_cast<std::size_t>(cyc[j]) - 1] = cyc[j + 1];
    if (!cyc.empty())
      p.images_[static_cast<std::size_t>(cyc.back()) - 1] = cyc.front();
  }
  return p;
}

bool Perm::is_identity() const {
  for (int i = 1; i <= degree(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

std::uint64_t Perm::rank() const {
  const int k = degree();
  std::uint64_t r = 0;
  for (int i = 0; i < k; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < k; ++j)
      if (images_[static_cast<std::size_t>(j)] < images_[static_cast<std::size_t>(i)]) ++smaller;
    r += static_cast<std::uint64_t>(smaller) * factorial(k - 1 - i);
  }
  return r;
}

Perm Perm::unrank(std::uint64_t rank, int degree) {
  if (degree < 0) throw std::invalid_argument("unrank: negative degree");
  if (rank >= factorial(degree)) throw std::invalid_argument("unrank: rank out of range");
  std::vector<int> pool(static_cast<std::size_t>(degree));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> images;
  images.reserve(static_cast<std::size_t>(degree));
  for (int i = degree - 1; i >= 0; --i) {
    const std::uint64_t f = factorial(i);
    const auto pick = static_cast<std::size_t>(rank / f);
    rank %= f;
    images.push_back(pool[pick]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return Perm(std::move(images));
}

Perm compose(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> images(static_cast<std::size_t>(a.degree()));
  for (int x = 1; x <= a.degree(); ++x)
    images[static_cast<std::size_t>(x) - 1] = a(b(x));
  return Perm(std::move(images));
}

Perm inverse(const Perm& a) {
  std::vector<int> images(static_cast<std::size_t>(a.degree()));
  for (int x = 1; x <= a.degree(); ++x)
    images[static_cast<std::size_t>(a(x)) - 1] = x;
  return Perm(std::move(images));
}

Perm conjugate(const Perm& a, const Perm& s) {
  if (a.degree() != s.degree()) throw std::invalid_argument("conjugate: degree mismatch");
  return compose(s, compose(a, inverse(s)));
}

bool is_even(const Perm& a) {
  const CycleType t = cycle_type(a);
  int transpositions = 0;
  for (int part : t.parts) transpositions += part - 1;
  return transpositions % 2 == 0;
}

CycleType cycle_type(const Perm& a) {
  CycleType t;
  t.degree = a.degree();
  std::vector<bool> seen(static_cast<std::size_t>(a.degree()), false);
  for (int x = 1; x <= a.degree(); ++x) {
    if (seen[static_cast<std::size_t>(x) - 1]) continue;
    int len = 0;
    int y = x;
    do {
      seen[static_cast<std::size_t>(y) - 1] = true;
      y = a(y);
      ++len;
    } while (y != x);
    t.parts.push_back(len);
  }
  std::sort(t.parts.rbegin(), t.parts.rend());
  return t;
}

std::uint64_t type_gcd(const CycleType& t) {
  std::uint64_t g = 0;
  for (int part : t.parts) g = std::gcd(g, static_cast<std::uint64_t>(part));
  return g;
}

std::uint64_t type_lcm(const CycleType& t) {
  std::uint64_t l = 1;
  for (int part : t.parts) l = std::lcm(l, static_cast<std::uint64_t>(part));
  return l;
}

std::uint64_t order(const Perm& a) { return type_lcm(cycle_type(a)); }

namespace {

void skip_ws(std::string_view s, std::size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

int parse_int(std::string_view s, std::size_t& i) {
  skip_ws(s, i);
  std::size_t start = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == start) throw std::invalid_argument("expected an integer");
  int value = 0;
  for (std::size_t j = start; j < i; ++j) {
    value = value * 10 + (s[j] - '0');
    if (value > 1'000'000) throw std::invalid_argument("integer too large");
  }
  return value;
}

}  // namespace

Perm parse_cycles(std::string_view text, int degree) {
  std::size_t i = 0;
  skip_ws(text, i);
  if (text.substr(i, 2) == "id") {
    i += 2;
    skip_ws(text, i);
    if (i != text.size()) throw std::invalid_argument("trailing text after \"id\"");
    return Perm(degree);
  }
  std::vector<std::vector<int>> cycles;
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("expected '('");
    ++i;
    std::vector<int> cyc;
    for (;;) {
      cyc.push_back(parse_int(text, i));
      skip_ws(text, i);
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ')') break;
      if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) continue;
      throw std::invalid_argument("malformed cycle");
    }
    ++i;  // ')'
    cycles.push_back(std::move(cyc));
    skip_ws(text, i);
  }
  if (cycles.empty()) throw std::invalid_argument("empty permutation text");
  return Perm::from_cycles(degree, cycles);
}

std::string format_cycles(const Perm& a) {
  std::string out;
  std::vector<bool> seen(static_cast<std::size_t>(a.degree()), false);
  for (int x = 1; x <= a.degree(); ++x) {
    if (seen[static_cast<std::size_t>(x) - 1] || a(x) == x) continue;
    out += '(';
    int y = x;
    bool first = true;
    do {
      seen[static_cast<std::size_t>(y) - 1] = true;
      if (!first) out += ' ';
      out += std::to_string(y);
      first = false;
      y = a(y);
    } while (y != x);
    out += ')';
  }
  return out.empty() ? "id" : out;
}

LinearOrder parse_order(std::string_view text, int n) {
  std::vector<int> images;
  std::size_t i = 0;
  for (;;) {
    images.push_back(parse_int(text, i));
    skip_ws(text, i);
    if (i == text.size()) break;
    if (text[i] != '>') throw std::invalid_argument("expected '>'");
    ++i;
  }
  if (static_cast<int>(images.size()) != n)
    throw std::invalid_argument("order must list exactly n alternatives");
  return Perm(std::move(images));
}

std::string format_order(const LinearOrder& o) {
  std::string out;
  for (int r = 1; r <= o.degree(); ++r) {
    if (r > 1) out += '>';
    out += std::to_string(o(r));
  }
  return out;
}

std::vector<Perm> all_permutations(int k) {
  if (k < 0) throw std::invalid_argument("all_permutations: negative degree");
  if (k > 8) throw BoundExceeded("all_permutations: degree > 8");
  std::vector<int> images(static_cast<std::size_t>(k));
  std::iota(images.begin(), images.end(), 1);
  std::vector<Perm> out;
  out.reserve(factorial(k));
  do {
    out.push_back(Perm(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

SnTable::SnTable(int n) : n_(n) {
  perms_ = all_permutations(n);
  const std::uint32_t m = size();
  inv_.resize(m);
  for (std::uint32_t a = 0; a < m; ++a)
    inv_[a] = static_cast<std::uint16_t>(inverse(perms_[a]).rank());
  if (n <= 6) {  // 720^2 entries at most; larger degrees fall back to composing
    mult_.resize(static_cast<std::size_t>(m) * m);
    for (std::uint32_t a = 0; a < m; ++a)
      for (std::uint32_t b = 0; b < m; ++b)
        mult_[static_cast<std::size_t>(a) * m + b] =
            static_cast<std::uint16_t>(compose(perms_[a], perms_[b]).rank());
  }
}

std::uint16_t SnTable::mult(std::uint16_t a, std::uint16_t b) const {
  if (!mult_.empty()) return mult_[static_cast<std::size_t>(a) * size() + b];
  return static_cast<std::uint16_t>(compose(perms_[a], perms_[b]).rank());
}

const SnTable& SnTable::of(int n) {
  if (n < 1 || n > 7) throw BoundExceeded("SnTable: degree must be within 1..7");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<SnTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end())
    it = cache.emplace(n, std::unique_ptr<SnTable>(new SnTable(n))).first;
  return *it->second;
}

}  // namespace spfsym

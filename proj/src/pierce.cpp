#include "vrw/pierce.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace vrw {

FiniteRing FiniteRing::zn(unsigned long n) {
  if (n < 2) throw std::invalid_argument("Z/n needs n >= 2");
  FiniteRing r;
  r.kind_ = Kind::zn;
  r.n_ = n;
  r.size_ = n;
  r.zero_ = 0;
  r.one_ = 1;
  return r;
}

FiniteRing FiniteRing::product(const std::vector<unsigned long>& moduli) {
  if (moduli.empty()) throw std::invalid_argument("empty product ring");
  FiniteRing r;
  r.kind_ = Kind::product;
  r.moduli_ = moduli;
  size_t sz = 1;
  for (unsigned long m : moduli) {
    if (m < 2) throw std::invalid_argument("product factor needs n >= 2");
    sz *= m;
    if (sz > kMaxTableSize * 16)
      throw std::invalid_argument("product ring too large");
  }
  r.size_ = sz;
  r.zero_ = 0;
  std::vector<unsigned long> ones(moduli.size(), 1);
  r.one_ = r.encode(ones);
  return r;
}

void FiniteRing::decode(size_t a, std::vector<unsigned long>& out) const {
  out.resize(moduli_.size());
  for (size_t i = 0; i < moduli_.size(); ++i) {
    out[i] = a % moduli_[i];
    a /= moduli_[i];
  }
}

size_t FiniteRing::encode(const std::vector<unsigned long>& t) const {
  size_t a = 0;
  for (size_t i = moduli_.size(); i-- > 0;) a = a * moduli_[i] + t[i];
  return a;
}

size_t FiniteRing::add(size_t a, size_t b) const {
  switch (kind_) {
    case Kind::zn: return (a + b) % n_;
    case Kind::table: return add_t_[a * size_ + b];
    case Kind::product: {
      std::vector<unsigned long> x, y;
      decode(a, x);
      decode(b, y);
      for (size_t i = 0; i < x.size(); ++i) x[i] = (x[i] + y[i]) % moduli_[i];
      return encode(x);
    }
  }
  return 0;
}

size_t FiniteRing::mul(size_t a, size_t b) const {
  switch (kind_) {
    case Kind::zn: return (a * b) % n_;
    case Kind::table: return mul_t_[a * size_ + b];
    case Kind::product: {
      std::vector<unsigned long> x, y;
      decode(a, x);
      decode(b, y);
      for (size_t i = 0; i < x.size(); ++i) x[i] = (x[i] * y[i]) % moduli_[i];
      return encode(x);
    }
  }
  return 0;
}

size_t FiniteRing::neg(size_t a) const {
  switch (kind_) {
    case Kind::zn: return (n_ - a) % n_;
    case Kind::product: {
      std::vector<unsigned long> x;
      decode(a, x);
      for (size_t i = 0; i < x.size(); ++i) x[i] = (moduli_[i] - x[i]) % moduli_[i];
      return encode(x);
    }
    case Kind::table:
      for (size_t b = 0; b < size_; ++b)
        if (add(a, b) == zero_) return b;
      throw std::logic_error("table ring without additive inverse");
  }
  return 0;
}

bool FiniteRing::is_unit_element(size_t a) const {
  for (size_t b = 0; b < size_; ++b)
    if (mul(a, b) == one_) return true;
  return false;
}

std::string FiniteRing::name() const {
  switch (kind_) {
    case Kind::zn: return "Z/" + std::to_string(n_);
    case Kind::product: {
      std::string s;
      for (size_t i = 0; i < moduli_.size(); ++i)
        s += (i ? " x " : "") + ("Z/" + std::to_string(moduli_[i]));
      return s;
    }
    case Kind::table: return "table(" + std::to_string(size_) + ")";
  }
  return "?";
}

std::string FiniteRing::element_str(size_t a) const {
  if (kind_ == Kind::product) {
    std::vector<unsigned long> x;
    decode(a, x);
    std::string s = "(";
    for (size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + std::to_string(x[i]);
    return s + ")";
  }
  return std::to_string(a);
}

FiniteRing FiniteRing::from_tables(
    const std::vector<std::vector<unsigned long>>& add,
    const std::vector<std::vector<unsigned long>>& mul) {
  size_t n = add.size();
  if (n == 0 || n > kMaxTableSize)
    throw std::invalid_argument("table ring size out of range");
  if (mul.size() != n)
    throw std::invalid_argument("table ring: add/mul size mismatch");
  FiniteRing r;
  r.kind_ = Kind::table;
  r.size_ = n;
  r.add_t_.resize(n * n);
  r.mul_t_.resize(n * n);
  for (size_t i = 0; i < n; ++i) {
    if (add[i].size() != n || mul[i].size() != n)
      throw std::invalid_argument("table ring: ragged table");
    for (size_t j = 0; j < n; ++j) {
      if (add[i][j] >= n || mul[i][j] >= n)
        throw std::invalid_argument("table ring: entry out of range");
      r.add_t_[i * n + j] = static_cast<uint16_t>(add[i][j]);
      r.mul_t_[i * n + j] = static_cast<uint16_t>(mul[i][j]);
    }
  }
  // Identify zero and one.
  bool found_zero = false, found_one = false;
  for (size_t e = 0; e < n && !(found_zero && found_one); ++e) {
    bool is_zero = true, is_one = true;
    for (size_t x = 0; x < n; ++x) {
      if (r.add_t_[e * n + x] != x) is_zero = false;
      if (r.mul_t_[e * n + x] != x) is_one = false;
    }
    if (is_zero && !found_zero) { r.zero_ = e; found_zero = true; }
    if (is_one && !found_one) { r.one_ = e; found_one = true; }
  }
  if (!found_zero || !found_one)
    throw std::invalid_argument("table ring: missing zero or one");
  if (r.zero_ == r.one_ && n > 1)
    throw std::invalid_argument("table ring: zero equals one");

  // Commutativity of both operations and additive inverses: exhaustive.
  for (size_t a = 0; a < n; ++a) {
    bool has_inv = false;
    for (size_t b = 0; b < n; ++b) {
      if (r.add_t_[a * n + b] != r.add_t_[b * n + a])
        throw std::invalid_argument("table ring: addition not commutative");
      if (r.mul_t_[a * n + b] != r.mul_t_[b * n + a])
        throw std::invalid_argument("table ring: multiplication not commutative");
      if (r.add_t_[a * n + b] == r.zero_) has_inv = true;
    }
    if (!has_inv)
      throw std::invalid_argument("table ring: missing additive inverse");
  }
  // Associativity and distributivity: exhaustive for small rings, a fixed
  // deterministic sample beyond that.
  auto check_triple = [&](size_t a, size_t b, size_t c) {
    if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c)))
      throw std::invalid_argument("table ring: addition not associative");
    if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c)))
      throw std::invalid_argument("table ring: multiplication not associative");
    if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c)))
      throw std::invalid_argument("table ring: not distributive");
  };
  if (n <= 128) {
    for (size_t a = 0; a < n; ++a)
      for (size_t b = 0; b < n; ++b)
        for (size_t c = 0; c < n; ++c) check_triple(a, b, c);
  } else {
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
    std::uniform_int_distribution<size_t> dist(0, n - 1);
    for (int i = 0; i < 200000; ++i) check_triple(dist(rng), dist(rng), dist(rng));
  }
  return r;
}

std::vector<size_t> idempotents(const FiniteRing& r) {
  std::vector<size_t> out;
  for (size_t e = 0; e < r.size(); ++e)
    if (r.mul(e, e) == e) out.push_back(e);
  return out;
}

BooleanRing::BooleanRing(const FiniteRing& r) {
  elems_ = idempotents(r);
  size_t n = elems_.size();
  std::map<size_t, size_t> index;
  for (size_t i = 0; i < n; ++i) index[elems_[i]] = i;
  xor_.assign(n * n, 0);
  meet_.assign(n * n, 0);
  size_t two = r.add(r.one(), r.one());
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      size_t e = elems_[i], f = elems_[j];
      size_t ef = r.mul(e, f);
      // e + f - 2ef
      size_t x = r.sub(r.add(e, f), r.mul(two, ef));
      auto it = index.find(x);
      auto mt = index.find(ef);
      if (it == index.end() || mt == index.end())
        throw std::logic_error("Boolean operations left the idempotent set");
      xor_[i * n + j] = it->second;
      meet_[i * n + j] = mt->second;
    }
  zero_i_ = index.at(r.zero());
  one_i_ = index.at(r.one());

  // Axioms: xor is an abelian group operation with e (+) e = 0, meet is
  // associative/commutative/idempotent, and meet distributes over xor.
  auto check_triple = [&](size_t i, size_t j, size_t k) {
    if (xor_op(xor_op(i, j), k) != xor_op(i, xor_op(j, k)))
      throw std::logic_error("Boolean xor not associative");
    if (meet_op(meet_op(i, j), k) != meet_op(i, meet_op(j, k)))
      throw std::logic_error("Boolean meet not associative");
    if (meet_op(i, xor_op(j, k)) != xor_op(meet_op(i, j), meet_op(i, k)))
      throw std::logic_error("Boolean meet does not distribute over xor");
  };
  for (size_t i = 0; i < n; ++i) {
    if (xor_op(i, i) != zero_i_) throw std::logic_error("e xor e != 0");
    if (xor_op(i, zero_i_) != i) throw std::logic_error("e xor 0 != e");
    if (meet_op(i, i) != i) throw std::logic_error("meet not idempotent");
    for (size_t j = 0; j < n; ++j) {
      if (xor_op(i, j) != xor_op(j, i)) throw std::logic_error("xor not commutative");
      if (meet_op(i, j) != meet_op(j, i)) throw std::logic_error("meet not commutative");
    }
  }
  if (n <= 128) {
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        for (size_t k = 0; k < n; ++k) check_triple(i, j, k);
  } else {
    std::mt19937_64 rng(0x2545f4914f6cdd1dull);
    std::uniform_int_distribution<size_t> dist(0, n - 1);
    for (int s = 0; s < 100000; ++s) check_triple(dist(rng), dist(rng), dist(rng));
  }
  verified_ = true;

  // Atoms: minimal nonzero under e <= f iff ef = e.
  for (size_t i = 0; i < n; ++i) {
    if (i == zero_i_) continue;
    bool minimal = true;
    for (size_t j = 0; j < n && minimal; ++j) {
      if (j == zero_i_ || j == i) continue;
      if (meet_op(j, i) == j) minimal = false;  // 0 < e_j < e_i
    }
    if (minimal) atoms_.push_back(i);
  }
}

BooleanRing boolean_ring(const FiniteRing& r) { return BooleanRing(r); }

namespace {

// Quotient of r by the ideal (sorted element set), as a table ring plus the
// projection map.
std::pair<FiniteRing, std::vector<size_t>> quotient_ring(
    const FiniteRing& r, const std::vector<size_t>& ideal) {
  size_t n = r.size();
  std::vector<size_t> coset_rep(n, SIZE_MAX);
  for (size_t x = 0; x < n; ++x) {
    if (coset_rep[x] != SIZE_MAX) continue;
    size_t rep = x;
    for (size_t i : ideal) rep = std::min(rep, r.add(x, i));
    for (size_t i : ideal) coset_rep[r.add(x, i)] = rep;
  }
  std::vector<size_t> reps;
  for (size_t x = 0; x < n; ++x)
    if (coset_rep[x] == x) reps.push_back(x);
  std::map<size_t, size_t> rep_index;
  for (size_t i = 0; i < reps.size(); ++i) rep_index[reps[i]] = i;
  size_t q = reps.size();
  std::vector<std::vector<unsigned long>> add(q, std::vector<unsigned long>(q)),
      mul(q, std::vector<unsigned long>(q));
  for (size_t i = 0; i < q; ++i)
    for (size_t j = 0; j < q; ++j) {
      add[i][j] = rep_index.at(coset_rep[r.add(reps[i], reps[j])]);
      mul[i][j] = rep_index.at(coset_rep[r.mul(reps[i], reps[j])]);
    }
  std::vector<size_t> projection(n);
  for (size_t x = 0; x < n; ++x) projection[x] = rep_index.at(coset_rep[x]);
  return {FiniteRing::from_tables(add, mul), std::move(projection)};
}

std::string describe_stalk(const FiniteRing& s) {
  // Cyclic additive group generated by 1 means Z/m.
  size_t x = s.one();
  size_t steps = 1;
  while (x != s.zero() && steps <= s.size()) {
    x = s.add(x, s.one());
    ++steps;
  }
  if (x == s.zero() && steps == s.size())
    return "Z/" + std::to_string(s.size());
  return "ring of order " + std::to_string(s.size());
}

}  // namespace

PierceBundle pierce_decompose(const FiniteRing& r) {
  PierceBundle out{BooleanRing(r), {}, false};
  const BooleanRing& b = out.boolean;
  size_t n = r.size();

  for (size_t ai : b.atom_indices()) {
    size_t atom = b.elements()[ai];
    size_t comp = r.sub(r.one(), atom);
    // P-bar as (1 - a) k.
    std::set<size_t> ideal_set;
    for (size_t x = 0; x < n; ++x) ideal_set.insert(r.mul(comp, x));
    // Internal check: equals the union of e k over idempotents e killing the
    // atom (the prime ideal of B attached to it).
    std::set<size_t> union_set;
    for (size_t ei = 0; ei < b.count(); ++ei) {
      size_t e = b.elements()[ei];
      if (r.mul(e, atom) != r.zero()) continue;
      for (size_t x = 0; x < n; ++x) union_set.insert(r.mul(e, x));
    }
    if (union_set != ideal_set)
      throw std::logic_error("P-bar mismatch: (1-a)k != union of e k");

    std::vector<size_t> ideal(ideal_set.begin(), ideal_set.end());
    auto [stalk, projection] = quotient_ring(r, ideal);
    PierceStalk ps{atom, std::move(ideal), std::move(stalk), std::move(projection), ""};
    ps.description = describe_stalk(ps.ring);
    out.stalks.push_back(std::move(ps));
  }

  // Section map: x -> (pi_i(x)). Bijectivity plus the homomorphism property.
  size_t prod = 1;
  for (const auto& s : out.stalks) prod *= s.ring.size();
  bool iso = (prod == n);
  if (iso) {
    std::set<std::vector<size_t>> seen;
    for (size_t x = 0; x < n && iso; ++x) {
      std::vector<size_t> tup;
      for (const auto& s : out.stalks) tup.push_back(s.projection[x]);
      iso = seen.insert(tup).second;
    }
  }
  if (iso) {
    // Homomorphism on all pairs for modest sizes, sampled beyond.
    auto check_pair = [&](size_t x, size_t y) {
      for (const auto& s : out.stalks) {
        if (s.projection[r.add(x, y)] !=
            s.ring.add(s.projection[x], s.projection[y]))
          return false;
        if (s.projection[r.mul(x, y)] !=
            s.ring.mul(s.projection[x], s.projection[y]))
          return false;
      }
      return true;
    };
    if (n <= 1024) {
      for (size_t x = 0; x < n && iso; ++x)
        for (size_t y = x; y < n && iso; ++y) iso = check_pair(x, y);
    } else {
      std::mt19937_64 rng(0xda942042e4dd58b5ull);
      std::uniform_int_distribution<size_t> dist(0, n - 1);
      for (int s = 0; s < 200000 && iso; ++s) iso = check_pair(dist(rng), dist(rng));
    }
  }
  out.section_map_is_isomorphism = iso;
  return out;
}

bool is_local(const FiniteRing& r) {
  // Non-units must be closed under addition; absorption is automatic in a
  // finite commutative ring.
  std::vector<char> unit(r.size(), 0);
  std::vector<size_t> nonunits;
  for (size_t a = 0; a < r.size(); ++a) {
    unit[a] = r.is_unit_element(a);
    if (!unit[a]) nonunits.push_back(a);
  }
  for (size_t a : nonunits)
    for (size_t b : nonunits)
      if (unit[r.add(a, b)]) return false;
  return true;
}

bool is_von_neumann_regular(const FiniteRing& r) {
  size_t n = r.size();
  auto principal = [&](size_t a) {
    std::vector<char> in(n, 0);
    for (size_t x = 0; x < n; ++x) in[r.mul(a, x)] = 1;
    return in;
  };
  std::vector<std::vector<char>> idem_ideals;
  for (size_t e : idempotents(r)) idem_ideals.push_back(principal(e));
  for (size_t a = 0; a < n; ++a) {
    std::vector<char> aR = principal(a);
    bool matched = false;
    for (const auto& eR : idem_ideals)
      if (eR == aR) { matched = true; break; }
    if (!matched) return false;
  }
  return true;
}

bool is_exchange(const FiniteRing& r) {
  std::vector<size_t> idem = idempotents(r);
  std::vector<char> unit(r.size(), 0);
  for (size_t a = 0; a < r.size(); ++a) unit[a] = r.is_unit_element(a);
  for (size_t a = 0; a < r.size(); ++a) {
    bool ok = false;
    for (size_t e : idem)
      if (unit[r.sub(a, e)]) { ok = true; break; }
    if (!ok) return false;
  }
  return true;
}

MonkVerdict monk_verdict(const FiniteRing& r) {
  MonkVerdict v;
  v.exchange_check = is_exchange(r);
  v.all_stalks_local = true;
  for (const auto& s : pierce_decompose(r).stalks)
    if (!is_local(s.ring)) { v.all_stalks_local = false; break; }
  v.agree = (v.exchange_check == v.all_stalks_local);
  return v;
}

int distinct_prime_factors(unsigned long n) {
  int count = 0;
  for (unsigned long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ++count;
      while (n % p == 0) n /= p;
    }
  if (n > 1) ++count;
  return count;
}

}  // namespace vrw

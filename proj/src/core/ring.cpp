#include "monideal/ring.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "monideal/errors.hpp"

namespace monideal {

Exponent checked_add(Exponent a, Exponent b) {
  Exponent out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("exponent addition overflows 64 bits");
  return out;
}

Exponent checked_mul(Exponent a, Exponent b) {
  Exponent out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("exponent multiplication overflows 64 bits");
  return out;
}

// --- Ring ------------------------------------------------------------------

Ring::Ring(std::vector<std::string> vars) : vars_(std::move(vars)) {
  if (vars_.empty()) throw StructuralError("a ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (v.empty()) throw StructuralError("variable names must be nonempty");
    if (!seen.insert(v).second) throw StructuralError("duplicate variable name '" + v + "'");
  }
}

std::size_t Ring::index_of(const std::string& name) const noexcept {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  return static_cast<std::size_t>(it - vars_.begin());
}

RingPtr make_ring(std::vector<std::string> vars) {
  return std::make_shared<const Ring>(std::move(vars));
}

bool same_ring(const RingPtr& a, const RingPtr& b) noexcept {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b)) throw StructuralError("operands live over different rings");
}

// --- Monomial --------------------------------------------------------------

Monomial Monomial::variable(std::size_t nvars, std::size_t i, Exponent power) {
  Monomial m = one(nvars);
  m.exps_.at(i) = power;
  return m;
}

Exponent Monomial::degree() const {
  Exponent d = 0;
  for (Exponent e : exps_) d = checked_add(d, e);
  return d;
}

bool Monomial::is_one() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::is_squarefree() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > 0) out.push_back(i);
  return out;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (exps_.size() != other.exps_.size()) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (size() != other.size()) throw StructuralError("monomials of different length");
  Monomial out = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] = checked_add(exps_[i], other.exps_[i]);
  return out;
}

Monomial Monomial::operator/(const Monomial& other) const {
  if (size() != other.size()) throw StructuralError("monomials of different length");
  if (!other.divides(*this)) throw DomainError("monomial quotient is not exact");
  Monomial out = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] -= other.exps_[i];
  return out;
}

Monomial Monomial::pow(Exponent n) const {
  Monomial out = *this;
  for (auto& e : out.exps_) e = checked_mul(e, n);
  return out;
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
  if (auto c = degree() <=> other.degree(); c != 0) return c;
  const std::size_t n = std::min(exps_.size(), other.exps_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (exps_[i] != other.exps_[i]) return other.exps_[i] <=> exps_[i];
  }
  return exps_.size() <=> other.exps_.size();
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) throw StructuralError("monomials of different length");
  Monomial out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::min(a[i], b[i]);
  return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) throw StructuralError("monomials of different length");
  Monomial out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

std::string to_string(const Monomial& m, const Ring& ring) {
  if (m.size() != ring.size()) throw StructuralError("monomial does not match ring");
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.name(i);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

// --- MonomialIdeal ---------------------------------------------------------

MonomialIdeal::MonomialIdeal(RingPtr ring, std::vector<Monomial> gens)
    : MonomialIdeal(minimalize(std::move(ring), std::move(gens))) {}

MonomialIdeal::MonomialIdeal(RingPtr ring, std::vector<Monomial> gens, Canonical)
    : ring_(std::move(ring)), gens_(std::move(gens)) {}

MonomialIdeal MonomialIdeal::zero(RingPtr ring) {
  return MonomialIdeal(std::move(ring), {}, Canonical{});
}

MonomialIdeal MonomialIdeal::unit(RingPtr ring) {
  const std::size_t n = ring->size();
  return MonomialIdeal(std::move(ring), {Monomial::one(n)}, Canonical{});
}

bool MonomialIdeal::is_pure_power() const noexcept {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) {
    std::size_t nz = 0;
    for (Exponent e : g.exponents()) nz += e > 0;
    return nz == 1;
  });
}

bool MonomialIdeal::is_squarefree() const noexcept {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_squarefree(); });
}

bool MonomialIdeal::operator==(const MonomialIdeal& other) const {
  return same_ring(ring_, other.ring_) && gens_ == other.gens_;
}

MonomialIdeal minimalize(RingPtr ring, std::vector<Monomial> gens) {
  if (!ring) throw StructuralError("null ring");
  for (const auto& g : gens)
    if (g.size() != ring->size()) throw StructuralError("generator does not match ring");

  // Precompute degrees once; the sort is on (degree, lex) anyway.
  std::vector<std::pair<Exponent, Monomial>> keyed;
  keyed.reserve(gens.size());
  for (auto& g : gens) keyed.emplace_back(g.degree(), std::move(g));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  });

  std::vector<Monomial> kept;
  for (auto& [deg, g] : keyed) {
    // Anything that divides g has degree <= deg(g) and so was seen earlier.
    bool redundant = false;
    for (const auto& k : kept) {
      if (k.divides(g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(std::move(g));
  }
  return MonomialIdeal(std::move(ring), std::move(kept), MonomialIdeal::Canonical{});
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& v) {
  if (v.size() != ideal.ring()->size()) throw StructuralError("monomial does not match ring");
  std::vector<Monomial> out;
  out.reserve(ideal.num_gens());
  for (const auto& u : ideal.gens()) out.push_back(u / gcd(u, v));
  return minimalize(ideal.ring(), std::move(out));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const MonomialIdeal& by) {
  require_same_ring(ideal.ring(), by.ring());
  // (I : 0) is the whole ring.
  MonomialIdeal acc = MonomialIdeal::unit(ideal.ring());
  for (const auto& g : by.gens()) acc = intersect(acc, colon(ideal, g));
  return acc;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Monomial> out;
  out.reserve(a.num_gens() * b.num_gens());
  for (const auto& u : a.gens())
    for (const auto& v : b.gens()) out.push_back(lcm(u, v));
  return minimalize(a.ring(), std::move(out));
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Monomial> out = a.gens();
  out.insert(out.end(), b.gens().begin(), b.gens().end());
  return minimalize(a.ring(), std::move(out));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Monomial> out;
  out.reserve(a.num_gens() * b.num_gens());
  for (const auto& u : a.gens())
    for (const auto& v : b.gens()) out.push_back(u * v);
  return minimalize(a.ring(), std::move(out));
}

MonomialIdeal power(const MonomialIdeal& ideal, unsigned n) {
  if (n == 0) return MonomialIdeal::unit(ideal.ring());
  MonomialIdeal acc = ideal;
  for (unsigned k = 1; k < n; ++k) acc = product(acc, ideal);
  return acc;
}

Exponent alpha(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw DomainError("alpha of the zero ideal");
  // Generators are sorted by degree.
  return ideal.gens().front().degree();
}

Exponent delta(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw DomainError("delta of the zero ideal");
  Exponent d = 0;
  for (const auto& g : ideal.gens()) d = std::max(d, g.degree());
  return d;
}

bool contains(const MonomialIdeal& ideal, const Monomial& m) {
  if (m.size() != ideal.ring()->size()) throw StructuralError("monomial does not match ring");
  return std::any_of(ideal.gens().begin(), ideal.gens().end(),
                     [&](const Monomial& g) { return g.divides(m); });
}

bool is_subset(const MonomialIdeal& ideal, const MonomialIdeal& other) {
  require_same_ring(ideal.ring(), other.ring());
  return std::all_of(ideal.gens().begin(), ideal.gens().end(),
                     [&](const Monomial& g) { return contains(other, g); });
}

bool is_equigenerated(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return true;
  return alpha(ideal) == delta(ideal);
}

std::vector<std::size_t> support_union(const MonomialIdeal& ideal) {
  std::vector<std::size_t> out;
  const std::size_t n = ideal.ring()->size();
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& g : ideal.gens()) {
      if (g[i] > 0) {
        out.push_back(i);
        break;
      }
    }
  }
  return out;
}

std::vector<Exponent> max_exponents(const MonomialIdeal& ideal) {
  std::vector<Exponent> out(ideal.ring()->size(), 0);
  for (const auto& g : ideal.gens())
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(out[i], g[i]);
  return out;
}

std::string to_string(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return "<0>";
  std::string out = "<";
  for (std::size_t i = 0; i < ideal.num_gens(); ++i) {
    if (i) out += ", ";
    out += to_string(ideal.gens()[i], *ideal.ring());
  }
  return out + ">";
}

} // namespace monideal

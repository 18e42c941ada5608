#include "monideal/decompose.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "monideal/errors.hpp"

namespace monideal {

// --- MonomialPrime ---------------------------------------------------------

MonomialPrime::MonomialPrime(RingPtr ring, std::vector<std::size_t> vars)
    : ring_(std::move(ring)), vars_(std::move(vars)) {
  std::sort(vars_.begin(), vars_.end());
  vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
  if (vars_.empty()) throw StructuralError("a monomial prime needs at least one variable");
  if (vars_.back() >= ring_->size()) throw StructuralError("prime variable outside ring");
}

bool MonomialPrime::contains_var(std::size_t i) const noexcept {
  return std::binary_search(vars_.begin(), vars_.end(), i);
}

MonomialIdeal MonomialPrime::ideal() const {
  std::vector<Monomial> gens;
  for (std::size_t i : vars_) gens.push_back(Monomial::variable(ring_->size(), i));
  return MonomialIdeal(ring_, std::move(gens));
}

std::strong_ordering MonomialPrime::operator<=>(const MonomialPrime& other) const {
  if (auto c = vars_.size() <=> other.vars_.size(); c != 0) return c;
  return vars_ <=> other.vars_;
}

std::string to_string(const MonomialPrime& p) {
  std::string out = "<";
  for (std::size_t k = 0; k < p.vars().size(); ++k) {
    if (k) out += ", ";
    out += p.ring()->name(p.vars()[k]);
  }
  return out + ">";
}

// --- IrredComponent --------------------------------------------------------

IrredComponent::IrredComponent(RingPtr ring, std::vector<std::pair<std::size_t, Exponent>> powers)
    : ring_(std::move(ring)), powers_(std::move(powers)) {
  std::sort(powers_.begin(), powers_.end());
  if (powers_.empty()) throw StructuralError("an irreducible component needs a generator");
  for (std::size_t k = 0; k < powers_.size(); ++k) {
    if (powers_[k].second == 0) throw StructuralError("component exponents must be positive");
    if (powers_[k].first >= ring_->size()) throw StructuralError("component variable outside ring");
    if (k && powers_[k].first == powers_[k - 1].first)
      throw StructuralError("component lists a variable twice");
  }
}

MonomialPrime IrredComponent::radical() const {
  std::vector<std::size_t> vars;
  for (const auto& [i, e] : powers_) vars.push_back(i);
  return MonomialPrime(ring_, std::move(vars));
}

MonomialIdeal IrredComponent::ideal() const {
  std::vector<Monomial> gens;
  for (const auto& [i, e] : powers_) gens.push_back(Monomial::variable(ring_->size(), i, e));
  return MonomialIdeal(ring_, std::move(gens));
}

Exponent IrredComponent::exponent_of(std::size_t i) const noexcept {
  for (const auto& [v, e] : powers_)
    if (v == i) return e;
  return 0;
}

bool IrredComponent::is_subset_of(const IrredComponent& other) const noexcept {
  // x_i^a lies in <x_j^b> iff some j == i with b <= a.
  for (const auto& [i, a] : powers_) {
    Exponent b = other.exponent_of(i);
    if (b == 0 || b > a) return false;
  }
  return true;
}

std::strong_ordering IrredComponent::operator<=>(const IrredComponent& other) const {
  if (auto c = radical() <=> other.radical(); c != 0) return c;
  return powers_ <=> other.powers_;
}

IrredComponent as_component(const MonomialIdeal& ideal) {
  if (!ideal.is_proper() || !ideal.is_pure_power())
    throw DomainError("ideal is not generated by pure powers of variables");
  std::vector<std::pair<std::size_t, Exponent>> powers;
  for (const auto& g : ideal.gens()) {
    auto s = g.support();
    powers.emplace_back(s.front(), g[s.front()]);
  }
  return IrredComponent(ideal.ring(), std::move(powers));
}

std::string to_string(const IrredComponent& c) { return to_string(c.ideal()); }

// --- decomposition ---------------------------------------------------------

namespace {

// Splits the first generator with at least two supported variables at its
// first supported variable: I = (rest + x_i^a) ∩ (rest + w) for u = x_i^a w.
void split(const RingPtr& ring, const std::vector<Monomial>& gens, std::set<std::vector<std::pair<std::size_t, Exponent>>>& out) {
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const Monomial& u = gens[k];
    auto supp = u.support();
    if (supp.size() < 2) continue;

    const std::size_t i = supp.front();
    Monomial head = Monomial::variable(u.size(), i, u[i]);
    Monomial tail = u / head;

    std::vector<Monomial> left, right;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (j == k) continue;
      left.push_back(gens[j]);
      right.push_back(gens[j]);
    }
    left.push_back(std::move(head));
    right.push_back(std::move(tail));
    split(ring, minimalize(ring, std::move(left)).gens(), out);
    split(ring, minimalize(ring, std::move(right)).gens(), out);
    return;
  }

  std::vector<std::pair<std::size_t, Exponent>> powers;
  for (const auto& g : gens) {
    auto s = g.support();
    powers.emplace_back(s.front(), g[s.front()]);
  }
  std::sort(powers.begin(), powers.end());
  out.insert(std::move(powers));
}

} // namespace

MonomialIdeal intersection_of(const std::vector<IrredComponent>& components, const RingPtr& ring) {
  MonomialIdeal acc = MonomialIdeal::unit(ring);
  for (const auto& c : components) acc = intersect(acc, c.ideal());
  return acc;
}

Decomposition irreducible_decomposition(const MonomialIdeal& ideal) {
  if (!ideal.is_proper()) throw DomainError("decomposition needs a proper nonzero ideal");

  std::set<std::vector<std::pair<std::size_t, Exponent>>> raw;
  split(ideal.ring(), ideal.gens(), raw);

  std::vector<IrredComponent> comps;
  for (const auto& p : raw) comps.emplace_back(ideal.ring(), p);

  // A component containing another one is redundant.
  std::vector<IrredComponent> minimal;
  for (std::size_t a = 0; a < comps.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < comps.size() && !redundant; ++b)
      redundant = a != b && comps[b].is_subset_of(comps[a]);
    if (!redundant) minimal.push_back(comps[a]);
  }

  // Full check: drop C when the intersection of the others already lies in C.
  for (std::size_t a = 0; a < minimal.size();) {
    std::vector<IrredComponent> others;
    for (std::size_t b = 0; b < minimal.size(); ++b)
      if (b != a) others.push_back(minimal[b]);
    if (!others.empty() && is_subset(intersection_of(others, ideal.ring()), minimal[a].ideal()))
      minimal.erase(minimal.begin() + static_cast<std::ptrdiff_t>(a));
    else
      ++a;
  }

  std::sort(minimal.begin(), minimal.end());
  return Decomposition{std::move(minimal)};
}

std::vector<MonomialPrime> associated_primes(const MonomialIdeal& ideal) {
  std::vector<MonomialPrime> out;
  for (const auto& c : irreducible_decomposition(ideal).components) out.push_back(c.radical());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<MonomialPrime> minimal_primes(const MonomialIdeal& ideal) {
  auto ass = associated_primes(ideal);
  std::vector<MonomialPrime> out;
  for (const auto& p : ass) {
    bool minimal = true;
    for (const auto& q : ass) {
      if (q == p) continue;
      if (std::includes(p.vars().begin(), p.vars().end(), q.vars().begin(), q.vars().end())) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(p);
  }
  return out;
}

std::size_t height(const MonomialIdeal& ideal) {
  std::size_t h = ideal.ring()->size();
  for (const auto& p : minimal_primes(ideal)) h = std::min(h, p.height());
  return h;
}

bool is_complete_intersection(const MonomialIdeal& ideal) {
  if (height(ideal) != ideal.num_gens()) return false;
  const auto& g = ideal.gens();
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t b = a + 1; b < g.size(); ++b)
      if (!gcd(g[a], g[b]).is_one())
        throw std::logic_error("complete intersection with non-coprime generators: " + to_string(ideal));
  return true;
}

MonomialIdeal primary_component(const MonomialIdeal& ideal, const MonomialPrime& p) {
  require_same_ring(ideal.ring(), p.ring());
  std::vector<IrredComponent> chosen;
  for (const auto& c : irreducible_decomposition(ideal).components)
    if (c.radical() == p) chosen.push_back(c);
  if (chosen.empty()) throw DomainError(to_string(p) + " is not an associated prime of " + to_string(ideal));
  return intersection_of(chosen, ideal.ring());
}

MonomialIdeal saturate(const MonomialIdeal& ideal, const Monomial& f) {
  MonomialIdeal cur = ideal;
  while (true) {
    MonomialIdeal next = colon(cur, f);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

MonomialIdeal symbolic_power(const MonomialIdeal& ideal, unsigned n, SymbolicMode mode) {
  if (!ideal.is_proper()) throw DomainError("symbolic power needs a proper nonzero ideal");
  if (n == 0) return MonomialIdeal::unit(ideal.ring());

  const auto primes = mode == SymbolicMode::MinimalPrimes ? minimal_primes(ideal) : associated_primes(ideal);
  const MonomialIdeal pw = power(ideal, n);
  const std::size_t nv = ideal.ring()->size();

  MonomialIdeal acc = MonomialIdeal::unit(ideal.ring());
  for (const auto& q : primes) {
    Monomial outside = Monomial::one(nv);
    for (std::size_t i = 0; i < nv; ++i)
      if (!q.contains_var(i)) outside[i] = 1;
    acc = intersect(acc, saturate(pw, outside));
  }
  return acc;
}

} // namespace monideal

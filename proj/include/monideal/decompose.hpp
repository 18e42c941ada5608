#pragma once

// Irredundant irreducible decomposition of monomial ideals and everything
// derived from it: associated primes, height, complete-intersection
// detection, primary components, saturation and symbolic powers.

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "monideal/ring.hpp"

namespace monideal {

/// The prime <x_i : i in vars>. Variable indices are kept sorted.
class MonomialPrime {
public:
  MonomialPrime(RingPtr ring, std::vector<std::size_t> vars);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<std::size_t>& vars() const noexcept { return vars_; }
  std::size_t height() const noexcept { return vars_.size(); }
  bool contains_var(std::size_t i) const noexcept;

  MonomialIdeal ideal() const;

  bool operator==(const MonomialPrime& other) const { return vars_ == other.vars_; }
  /// Smaller primes first, then lexicographic on the index lists.
  std::strong_ordering operator<=>(const MonomialPrime& other) const;

private:
  RingPtr ring_;
  std::vector<std::size_t> vars_;
};

std::string to_string(const MonomialPrime& p);

/// <x_{i1}^{a1}, ..., x_{ik}^{ak}> with every a >= 1, stored as
/// (variable index, exponent) pairs sorted by index.
class IrredComponent {
public:
  IrredComponent(RingPtr ring, std::vector<std::pair<std::size_t, Exponent>> powers);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<std::pair<std::size_t, Exponent>>& powers() const noexcept { return powers_; }

  MonomialPrime radical() const;
  MonomialIdeal ideal() const;
  /// Exponent of variable i, or 0 when i does not occur.
  Exponent exponent_of(std::size_t i) const noexcept;

  /// Containment of irreducible ideals: this ⊆ other.
  bool is_subset_of(const IrredComponent& other) const noexcept;

  bool operator==(const IrredComponent& other) const { return powers_ == other.powers_; }
  std::strong_ordering operator<=>(const IrredComponent& other) const;

private:
  RingPtr ring_;
  std::vector<std::pair<std::size_t, Exponent>> powers_;
};

/// Recognizes a pure-power ideal as a component; DomainError otherwise.
IrredComponent as_component(const MonomialIdeal& ideal);

std::string to_string(const IrredComponent& c);

struct Decomposition {
  std::vector<IrredComponent> components;
};

/// Unique irredundant decomposition into pure-power ideals, canonically
/// sorted. DomainError for the zero and unit ideals.
Decomposition irreducible_decomposition(const MonomialIdeal& ideal);

/// Intersection of the components as a monomial ideal.
MonomialIdeal intersection_of(const std::vector<IrredComponent>& components, const RingPtr& ring);

/// Ass(S/I), computed as the distinct radicals of the irredundant components.
std::vector<MonomialPrime> associated_primes(const MonomialIdeal& ideal);
std::vector<MonomialPrime> minimal_primes(const MonomialIdeal& ideal);

std::size_t height(const MonomialIdeal& ideal);

/// height == number of minimal generators. When true, also checks that the
/// generators are pairwise coprime and throws std::logic_error otherwise.
bool is_complete_intersection(const MonomialIdeal& ideal);

/// Intersection of the irredundant components with radical p.
/// DomainError unless p is associated.
MonomialIdeal primary_component(const MonomialIdeal& ideal, const MonomialPrime& p);

/// (I : f^infinity).
MonomialIdeal saturate(const MonomialIdeal& ideal, const Monomial& f);

enum class SymbolicMode { MinimalPrimes, AllAssociated };

/// Intersection over the chosen primes Q of I^n S_Q ∩ S, with each
/// localization-contraction realized as saturation of I^n by the product of
/// the variables outside Q.
MonomialIdeal symbolic_power(const MonomialIdeal& ideal, unsigned n, SymbolicMode mode);

} // namespace monideal

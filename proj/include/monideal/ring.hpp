#pragma once

// Exact monomial and monomial-ideal arithmetic. Every other module builds on
// the three value types declared here: Ring, Monomial and MonomialIdeal.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace monideal {

using Exponent = std::uint64_t;

/// Addition and multiplication that throw OverflowError instead of wrapping.
Exponent checked_add(Exponent a, Exponent b);
Exponent checked_mul(Exponent a, Exponent b);

/// Ordered list of variable names. Coordinate i of every monomial over the
/// ring refers to vars()[i].
class Ring {
public:
  explicit Ring(std::vector<std::string> vars);

  const std::vector<std::string>& vars() const noexcept { return vars_; }
  std::size_t size() const noexcept { return vars_.size(); }
  const std::string& name(std::size_t i) const { return vars_.at(i); }

  /// Index of a variable name, or size() when absent.
  std::size_t index_of(const std::string& name) const noexcept;

  bool operator==(const Ring& other) const noexcept { return vars_ == other.vars_; }

private:
  std::vector<std::string> vars_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> vars);

/// True when both pointers denote the same variable list.
bool same_ring(const RingPtr& a, const RingPtr& b) noexcept;

/// Throws StructuralError unless the rings agree.
void require_same_ring(const RingPtr& a, const RingPtr& b);

/// Exponent vector x^a. The all-zero vector is the unit monomial.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}
  Monomial(std::initializer_list<Exponent> exps) : exps_(exps) {}

  static Monomial one(std::size_t nvars) { return Monomial(std::vector<Exponent>(nvars, 0)); }
  static Monomial variable(std::size_t nvars, std::size_t i, Exponent power = 1);

  std::size_t size() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent& operator[](std::size_t i) { return exps_[i]; }
  std::span<const Exponent> exponents() const noexcept { return exps_; }

  /// Sum of the exponents, recomputed on every call.
  Exponent degree() const;
  bool is_one() const noexcept;
  bool is_squarefree() const noexcept;

  /// Indices i with exps[i] > 0.
  std::vector<std::size_t> support() const;

  /// Componentwise <=, i.e. this divides other.
  bool divides(const Monomial& other) const noexcept;

  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; throws DomainError when other does not divide *this.
  Monomial operator/(const Monomial& other) const;
  Monomial pow(Exponent n) const;

  bool operator==(const Monomial& other) const noexcept = default;

  /// Canonical order: degree first, then the exponent vector compared
  /// lexicographically with larger entries first (x^2 < xy < y^2).
  std::strong_ordering operator<=>(const Monomial& other) const;

private:
  std::vector<Exponent> exps_;
};

Monomial gcd(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);

/// Text form over a ring, e.g. "x^2*y"; the unit monomial prints as "1".
std::string to_string(const Monomial& m, const Ring& ring);

/// A monomial ideal kept as its canonical antichain of minimal generators,
/// sorted in canonical monomial order. The zero ideal has no generators; the
/// unit ideal has the single generator 1.
class MonomialIdeal {
public:
  /// Minimalizes and sorts the given generators. An empty list is the zero ideal.
  MonomialIdeal(RingPtr ring, std::vector<Monomial> gens);

  static MonomialIdeal zero(RingPtr ring);
  static MonomialIdeal unit(RingPtr ring);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Monomial>& gens() const noexcept { return gens_; }
  std::size_t num_gens() const noexcept { return gens_.size(); }

  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept { return gens_.size() == 1 && gens_.front().is_one(); }
  bool is_proper() const noexcept { return !is_zero() && !is_unit(); }

  /// Every generator is a pure power of a variable.
  bool is_pure_power() const noexcept;
  bool is_squarefree() const noexcept;

  bool operator==(const MonomialIdeal& other) const;

private:
  struct Canonical {};
  MonomialIdeal(RingPtr ring, std::vector<Monomial> gens, Canonical);

  RingPtr ring_;
  std::vector<Monomial> gens_;

  friend MonomialIdeal minimalize(RingPtr ring, std::vector<Monomial> gens);
};

/// Canonical antichain generating the same ideal as gens. Throws
/// StructuralError when a monomial has the wrong number of coordinates.
MonomialIdeal minimalize(RingPtr ring, std::vector<Monomial> gens);

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& v);
MonomialIdeal colon(const MonomialIdeal& ideal, const MonomialIdeal& by);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);

/// Minimal generators of ideal^n. By convention power(I, 0) is the unit ideal.
MonomialIdeal power(const MonomialIdeal& ideal, unsigned n);

/// Smallest and largest degree of a minimal generator. DomainError on the zero ideal.
Exponent alpha(const MonomialIdeal& ideal);
Exponent delta(const MonomialIdeal& ideal);

bool contains(const MonomialIdeal& ideal, const Monomial& m);
/// ideal ⊆ other.
bool is_subset(const MonomialIdeal& ideal, const MonomialIdeal& other);
bool is_equigenerated(const MonomialIdeal& ideal);

/// Union of the supports of the minimal generators, ascending.
std::vector<std::size_t> support_union(const MonomialIdeal& ideal);

/// Largest exponent of each variable over the minimal generators.
std::vector<Exponent> max_exponents(const MonomialIdeal& ideal);

std::string to_string(const MonomialIdeal& ideal);

} // namespace monideal

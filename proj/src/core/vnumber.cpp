#include "monideal/vnumber.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "monideal/deadline.hpp"
#include "monideal/errors.hpp"

namespace monideal {

namespace {

bool divisible_by_some(const std::vector<Monomial>& gens, const Monomial& f) {
  for (const auto& u : gens)
    if (u.divides(f)) return true;
  return false;
}

// T = {i : x_i f in I}. (I : f) is the prime P_T exactly when f is not in I,
// T is nonempty and every u / gcd(u, f) involves a variable of T.
std::optional<std::vector<std::size_t>> colon_prime(const std::vector<Monomial>& gens,
                                                    const std::vector<std::size_t>& dims,
                                                    Monomial& f) {
  if (divisible_by_some(gens, f)) return std::nullopt;
  std::vector<std::size_t> t;
  for (std::size_t i : dims) {
    ++f[i];
    if (divisible_by_some(gens, f)) t.push_back(i);
    --f[i];
  }
  if (t.empty()) return std::nullopt;
  for (const auto& u : gens) {
    bool meets = false;
    for (std::size_t i : t)
      if (u[i] > f[i]) {
        meets = true;
        break;
      }
    if (!meets) return std::nullopt;
  }
  return t;
}

class Search {
public:
  // With all_primes set, targets must be the full list of associated primes
  // and any other colon prime is an internal error.
  Search(const MonomialIdeal& ideal, const std::vector<MonomialPrime>& targets, bool all_primes)
      : ideal_(ideal), targets_(targets), found_(targets.size()), all_primes_(all_primes) {
    dims_ = support_union(ideal);
    const auto bound = max_exponents(ideal);
    for (std::size_t i : dims_) bound_.push_back(bound[i]);
    suffix_.assign(dims_.size() + 1, 0);
    for (std::size_t k = dims_.size(); k-- > 0;) suffix_[k] = checked_add(suffix_[k + 1], bound_[k]);
  }

  std::vector<LocalVNumber> run() {
    f_ = Monomial::one(ideal_.ring()->size());
    for (Exponent d = 0; d <= suffix_[0] && remaining_ > 0; ++d) {
      check_deadline();
      visit(0, d);
    }
    std::vector<LocalVNumber> out;
    for (std::size_t k = 0; k < targets_.size(); ++k) {
      if (!found_[k]) throw std::logic_error("associated prime without a witness in the search box");
      out.push_back(std::move(*found_[k]));
    }
    return out;
  }

private:
  // Assigns coordinates k.. with total left, largest exponent first so that a
  // degree is visited in canonical order.
  void visit(std::size_t k, Exponent left) {
    if (remaining_ == 0) return;
    if (k == dims_.size()) {
      if (left == 0) test();
      return;
    }
    if (left > suffix_[k]) return;
    const Exponent hi = std::min(left, bound_[k]);
    const Exponent lo = left > suffix_[k + 1] ? left - suffix_[k + 1] : 0;
    for (Exponent e = hi + 1; e-- > lo;) {
      f_[dims_[k]] = e;
      visit(k + 1, left - e);
      if (remaining_ == 0) break;
    }
    f_[dims_[k]] = 0;
  }

  void test() {
    if ((++tested_ & 0xfff) == 0) check_deadline();
    auto t = colon_prime(ideal_.gens(), dims_, f_);
    if (!t) return;
    bool associated = false;
    for (std::size_t k = 0; k < targets_.size(); ++k) {
      if (targets_[k].vars() != *t) continue;
      associated = true;
      if (!found_[k]) {
        found_[k].emplace(LocalVNumber{f_.degree(), Witness::verified(ideal_, f_, targets_[k])});
        --remaining_;
      }
    }
    if (!associated && all_primes_) throw std::logic_error("colon prime missing from the associated primes");
  }

  const MonomialIdeal& ideal_;
  const std::vector<MonomialPrime>& targets_;
  std::vector<std::optional<LocalVNumber>> found_;
  bool all_primes_;
  std::vector<std::size_t> dims_;
  std::vector<Exponent> bound_;
  std::vector<Exponent> suffix_;
  Monomial f_;
  std::size_t remaining_ = targets_.size();
  std::size_t tested_ = 0;
};

} // namespace

Witness Witness::verified(const MonomialIdeal& ideal, Monomial f, MonomialPrime prime) {
  if (!check_witness(ideal, f, prime)) throw std::logic_error("witness colon differs from its prime");
  const Exponent d = f.degree();
  return Witness(std::move(f), std::move(prime), d);
}

const LocalVNumber& VNumberReport::at(const MonomialPrime& p) const {
  for (const auto& l : locals)
    if (l.witness.prime() == p) return l;
  throw DomainError("prime is not associated");
}

bool check_witness(const MonomialIdeal& ideal, const Monomial& f, const MonomialPrime& p) {
  require_same_ring(ideal.ring(), p.ring());
  if (f.size() != ideal.ring()->size()) throw StructuralError("monomial does not match ring");
  return colon(ideal, f) == p.ideal();
}

LocalVNumber local_v_number(const MonomialIdeal& ideal, const MonomialPrime& p) {
  require_same_ring(ideal.ring(), p.ring());
  const auto ass = associated_primes(ideal);
  if (std::find(ass.begin(), ass.end(), p) == ass.end()) throw DomainError("prime is not associated");
  const std::vector<MonomialPrime> targets{p};
  Search search(ideal, targets, false);
  return std::move(search.run().front());
}

VNumberReport v_number(const MonomialIdeal& ideal) {
  const auto ass = associated_primes(ideal);
  Search search(ideal, ass, true);
  auto locals = search.run();
  Exponent v = locals.front().value;
  for (const auto& l : locals) v = std::min(v, l.value);
  return VNumberReport{ideal, std::move(locals), v};
}

} // namespace monideal

#pragma once

#include <span>
#include <vector>

#include "mdssd/galois.hpp"

namespace mdssd {

/// Univariate polynomial over a Field, ascending coefficients with no trailing zero.
/// The zero polynomial has no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Element> coeffs);

  const std::vector<Element>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of x^i, zero beyond the degree.
  Element coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Element{0}; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Element> coeffs_;
};

/// prod (x - a) over the roots. Throws InvalidArgument on a repeated root.
Polynomial expand_from_roots(const Field& F, std::span<const Element> roots);
/// Formal derivative; coefficient i * c_i is reduced mod p.
Polynomial derive(const Field& F, const Polynomial& P);
Element eval(const Field& F, const Polynomial& P, Element a);
/// P(Q(a)).
Element compose_eval(const Field& F, const Polynomial& P, const Polynomial& Q, Element a);

Polynomial add(const Field& F, const Polynomial& A, const Polynomial& B);
Polynomial mul(const Field& F, const Polynomial& A, const Polynomial& B);
/// A(x^f).
Polynomial substitute_power(const Polynomial& A, std::size_t f);

}  // namespace mdssd

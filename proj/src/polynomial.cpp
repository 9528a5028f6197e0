#include "mdssd/polynomial.hpp"

#include <algorithm>

#include "mdssd/errors.hpp"

namespace mdssd {

Polynomial::Polynomial(std::vector<Element> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back().index == 0) coeffs_.pop_back();
}

Polynomial expand_from_roots(const Field& F, std::span<const Element> roots) {
  std::vector<Element> sorted(roots.begin(), roots.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidArgument("expand_from_roots: repeated root");
  }
  std::vector<Element> c{F.one()};
  c.reserve(roots.size() + 1);
  for (Element a : roots) {
    const Element minus_a = F.neg(a);
    c.push_back(F.zero());
    for (std::size_t i = c.size() - 1; i > 0; --i) c[i] = F.add(c[i - 1], F.mul(c[i], minus_a));
    c[0] = F.mul(c[0], minus_a);
  }
  return Polynomial(std::move(c));
}

Polynomial derive(const Field& F, const Polynomial& P) {
  const auto& c = P.coeffs();
  if (c.size() <= 1) return {};
  std::vector<Element> d(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) d[i - 1] = F.mul(F.from_int(static_cast<std::int64_t>(i)), c[i]);
  return Polynomial(std::move(d));
}

Element eval(const Field& F, const Polynomial& P, Element a) {
  Element acc = F.zero();
  const auto& c = P.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = F.add(F.mul(acc, a), c[i]);
  return acc;
}

Element compose_eval(const Field& F, const Polynomial& P, const Polynomial& Q, Element a) {
  return eval(F, P, eval(F, Q, a));
}

Polynomial add(const Field& F, const Polynomial& A, const Polynomial& B) {
  std::vector<Element> c(std::max(A.coeffs().size(), B.coeffs().size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.add(A.coeff(i), B.coeff(i));
  return Polynomial(std::move(c));
}

Polynomial mul(const Field& F, const Polynomial& A, const Polynomial& B) {
  if (A.is_zero() || B.is_zero()) return {};
  std::vector<Element> c(A.coeffs().size() + B.coeffs().size() - 1);
  for (std::size_t i = 0; i < A.coeffs().size(); ++i) {
    for (std::size_t j = 0; j < B.coeffs().size(); ++j) {
      c[i + j] = F.add(c[i + j], F.mul(A.coeffs()[i], B.coeffs()[j]));
    }
  }
  return Polynomial(std::move(c));
}

Polynomial substitute_power(const Polynomial& A, std::size_t f) {
  if (A.is_zero()) return {};
  std::vector<Element> c((A.coeffs().size() - 1) * f + 1);
  for (std::size_t i = 0; i < A.coeffs().size(); ++i) c[i * f] = A.coeffs()[i];
  return Polynomial(std::move(c));
}

}  // namespace mdssd

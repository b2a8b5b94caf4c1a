#pragma once

// Square-free decomposition and the radical.
//
// rad(a) is the product of the distinct monic irreducible factors of a. It is
// also the product of the parts of a square-free decomposition, which is what
// we compute; no irreducible factorization is ever needed.

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "polyabc/error.hpp"
#include "polyabc/polynomial.hpp"

namespace polyabc {

template <ExactField F>
struct SquareFreePart {
  Polynomial<F> factor;
  std::size_t multiplicity;
};

/// unit * prod(factor_i ^ multiplicity_i). Factors are monic, square-free,
/// nonconstant and pairwise coprime; multiplicities strictly increase.
template <ExactField F>
struct SquareFreeDecomposition {
  typename F::value_type unit;
  std::vector<SquareFreePart<F>> parts;

  Polynomial<F> reconstruct(const F& field) const {
    auto acc = Polynomial<F>::constant(field, unit);
    for (const auto& part : parts) acc = acc * pow(part.factor, part.multiplicity);
    return acc;
  }
};

/// g with g(t^p) = a, for a with vanishing derivative over F_p.
template <ExactField F>
Polynomial<F> pth_root(const Polynomial<F>& a) {
  const F& field = a.field();
  const std::size_t p = field.characteristic();
  if (p == 0) fail(ErrorKind::NotCharP, "p-th root needs positive characteristic");
  if (!derivative(a).is_zero()) fail(ErrorKind::DerivativeNonzero, "derivative does not vanish");
  if (a.is_zero()) return a;
  // Frobenius is the identity on F_p, so coefficients carry over unchanged.
  const auto c = a.coeffs();
  std::vector<typename F::value_type> out;
  out.reserve(c.size() / p + 1);
  for (std::size_t i = 0; i < c.size(); i += p) out.push_back(c[i]);
  return Polynomial<F>(field, std::move(out));
}

namespace detail {

// Yun's algorithm; `a` monic.
template <ExactField F>
void yun(const Polynomial<F>& a, std::map<std::size_t, Polynomial<F>>& out) {
  const auto da = derivative(a);
  const auto c = gcd_monic(a, da);
  auto w = exact_quotient(a, c);
  auto y = exact_quotient(da, c);
  auto z = y - derivative(w);
  for (std::size_t i = 1; !w.is_constant(); ++i) {
    auto g = gcd_monic(w, z);
    w = exact_quotient(w, g);
    y = exact_quotient(z, g);
    z = y - derivative(w);
    if (!g.is_constant()) out.emplace(i, std::move(g));
  }
}

// Characteristic-p variant: peel with gcd(a, a') and recurse on the p-th
// root of whatever p-th power content is left. `scale` is the multiplicity
// factor from earlier p-th roots.
template <ExactField F>
void squarefree_char_p(Polynomial<F> a, std::size_t scale, std::map<std::size_t, Polynomial<F>>& out) {
  const std::size_t p = a.field().characteristic();
  if (a.is_constant()) return;
  const auto da = derivative(a);
  if (da.is_zero()) {
    squarefree_char_p(pth_root(a), scale * p, out);
    return;
  }
  auto c = gcd_monic(a, da);
  auto w = exact_quotient(a, c);
  for (std::size_t i = 1; !w.is_constant(); ++i) {
    auto y = gcd_monic(w, c);
    auto fac = exact_quotient(w, y);
    if (!fac.is_constant()) {
      auto [it, inserted] = out.try_emplace(i * scale, fac);
      if (!inserted) it->second = it->second * fac;
    }
    w = std::move(y);
    c = exact_quotient(c, w);
  }
  if (!c.is_constant()) squarefree_char_p(pth_root(c), scale * p, out);
}

}  // namespace detail

template <ExactField F>
SquareFreeDecomposition<F> squarefree_decompose(const Polynomial<F>& a) {
  if (a.is_zero()) fail(ErrorKind::ZeroPolynomial, "square-free decomposition of zero");
  const F& field = a.field();
  SquareFreeDecomposition<F> out{a.leading(), {}};
  std::map<std::size_t, Polynomial<F>> by_multiplicity;
  const auto m = monic(a);
  if (field.characteristic() == 0) {
    detail::yun(m, by_multiplicity);
  } else {
    detail::squarefree_char_p(m, 1, by_multiplicity);
  }
  for (auto& [mult, factor] : by_multiplicity) out.parts.push_back({monic(factor), mult});
  return out;
}

/// Monic radical; rad(0) = rad(unit) = 1.
template <ExactField F>
Polynomial<F> radical(const Polynomial<F>& a) {
  auto acc = Polynomial<F>::one(a.field());
  if (a.is_constant()) return acc;
  for (const auto& part : squarefree_decompose(a).parts) acc = acc * part.factor;
  return acc;
}

/// a / rad(a), always exact.
template <ExactField F>
Polynomial<F> div_radical(const Polynomial<F>& a) {
  if (a.is_zero()) fail(ErrorKind::ZeroPolynomial, "div_radical of zero");
  return exact_quotient(a, radical(a));
}

template <ExactField F>
bool is_squarefree(const Polynomial<F>& a) {
  if (a.is_zero()) fail(ErrorKind::ZeroPolynomial, "is_squarefree of zero");
  return radical(a) == monic(a);
}

/// Repeated p-th roots of `a` while its derivative vanishes and it is not
/// constant. Element 0 is `a`; each later entry is the p-th root of the one
/// before, so each degree is the previous one divided by the characteristic.
template <ExactField F>
std::vector<Polynomial<F>> descent_chain(const Polynomial<F>& a) {
  if (a.field().characteristic() == 0) fail(ErrorKind::NotCharP, "descent needs positive characteristic");
  std::vector<Polynomial<F>> chain{a};
  while (!chain.back().is_constant() && derivative(chain.back()).is_zero()) {
    chain.push_back(pth_root(chain.back()));
  }
  return chain;
}

}  // namespace polyabc

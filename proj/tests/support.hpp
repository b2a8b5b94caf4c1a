#pragma once

// Shared test helpers and brute-force reference implementations.

#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "polyabc/harness.hpp"
#include "polyabc/parse.hpp"
#include "polyabc/polynomial.hpp"

namespace polyabc::test {

/// Kind of the Error thrown by fn; records a failure if nothing is thrown.
template <class Fn>
ErrorKind kind_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorKind::InternalInconsistency;
}

inline QPoly q(const std::string& text) { return parse_poly(text, RationalField{}); }

inline FpPoly fp(std::uint32_t p, const std::string& text) { return parse_poly(text, PrimeField(p)); }

inline std::mt19937_64 rng_for(std::uint64_t salt) { return std::mt19937_64(0x5eed0000ULL + salt); }

/// Monic irreducibles of degree <= d over F_p, by sieving products.
inline std::vector<FpPoly> monic_irreducibles(const PrimeField& field, std::size_t d) {
  std::vector<FpPoly> irr;
  for (const auto& cand : enumerate_polys(field.desc(), d)) {
    if (cand.nat_degree() == 0 || !(cand.leading() == field.one())) continue;
    bool reducible = false;
    for (const auto& f : irr) {
      if (2 * f.nat_degree() > cand.nat_degree()) break;
      if (divmod(cand, f).remainder.is_zero()) {
        reducible = true;
        break;
      }
    }
    if (!reducible) irr.push_back(cand);
  }
  return irr;
}

/// Radical by trial division with every monic irreducible of small degree.
inline FpPoly brute_radical(const FpPoly& a, const std::vector<FpPoly>& irreducibles) {
  auto rad = FpPoly::one(a.field());
  if (a.is_constant()) return rad;
  auto rest = monic(a);
  for (const auto& f : irreducibles) {
    if (rest.is_constant()) break;
    if (!divmod(rest, f).remainder.is_zero()) continue;
    rad = rad * f;
    while (divmod(rest, f).remainder.is_zero()) rest = divmod(rest, f).quotient;
  }
  // Whatever is left is an irreducible of degree beyond the table.
  if (!rest.is_constant()) rad = rad * rest;
  return rad;
}

/// Coefficients constant term first, e.g. "1,0,-2/3".
template <ExactField F>
Polynomial<F> from_coeff_list(const F& field, const std::string& csv) {
  std::vector<typename F::value_type> coeffs;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    coeffs.push_back(parse_poly(item, field).coeff(0));
  }
  return Polynomial<F>(field, std::move(coeffs));
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace polyabc::test

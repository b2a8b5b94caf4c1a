#pragma once

// Exhaustive searches over small prime fields and seeded random batteries.
//
// Work is sharded over the outer index (enumeration index or sample index)
// and shard results are merged in index order, so a report depends only on
// its configuration and never on the worker count. Violations are recorded
// as report entries rather than thrown.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "polyabc/abc.hpp"
#include "polyabc/corollaries.hpp"
#include "polyabc/error.hpp"
#include "polyabc/exact_field.hpp"
#include "polyabc/parse.hpp"
#include "polyabc/polynomial.hpp"
#include "polyabc/radical.hpp"

namespace polyabc {

enum class SearchTarget { MasonStothers, NonCoprimeVariant, Flt, Davenport, Lemmas, Wronskian };

inline std::string_view to_string(SearchTarget t) {
  switch (t) {
    case SearchTarget::MasonStothers: return "ms";
    case SearchTarget::NonCoprimeVariant: return "noncoprime";
    case SearchTarget::Flt: return "flt";
    case SearchTarget::Davenport: return "davenport";
    case SearchTarget::Lemmas: return "lemmas";
    case SearchTarget::Wronskian: return "wronskian";
  }
  return "unknown";
}

inline SearchTarget parse_search_target(std::string_view s) {
  for (auto t : {SearchTarget::MasonStothers, SearchTarget::NonCoprimeVariant, SearchTarget::Flt,
                 SearchTarget::Davenport, SearchTarget::Lemmas, SearchTarget::Wronskian}) {
    if (s == to_string(t)) return t;
  }
  fail(ErrorKind::ConfigError, "unknown search target '" + std::string(s) + "'");
}

struct SearchConfig {
  FieldDesc field = FieldDesc::rationals();
  std::size_t max_degree = 1;
  SearchTarget target = SearchTarget::MasonStothers;
  std::uint64_t flt_n = 3;
  std::uint64_t seed = 42;
  std::size_t workers = 1;
  std::size_t samples = 1000;
  /// Cap on recorded tight instances and violations; counts are always full.
  std::size_t record_limit = 32;
};

inline void validate(const SearchConfig& cfg) {
  if (cfg.max_degree < 1) fail(ErrorKind::ConfigError, "max_degree must be at least 1");
  if (cfg.workers < 1) fail(ErrorKind::ConfigError, "workers must be at least 1");
  if (cfg.target == SearchTarget::Flt) {
    if (cfg.flt_n < 3) fail(ErrorKind::ConfigError, "FLT target needs n >= 3");
    const auto ch = cfg.field.characteristic();
    if (ch != 0 && cfg.flt_n % ch == 0) fail(ErrorKind::ConfigError, "characteristic divides n");
  }
}

inline MsVerdict bare_verdict(VerdictKind k) {
  MsVerdict v{};
  v.kind = k;
  return v;
}

struct Witness {
  std::array<std::string, 3> triple;
  MsVerdict verdict = bare_verdict(VerdictKind::Violation);
  std::optional<ConstancyReport> constancy;
  std::string note;
};

struct LawTally {
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
};

struct SearchReport {
  SearchConfig config;
  std::string mode;
  std::uint64_t pairs_enumerated = 0;
  std::uint64_t triples_examined = 0;
  std::uint64_t holds_count = 0;
  std::uint64_t vanishing_count = 0;
  std::uint64_t violation_count = 0;
  std::uint64_t tight_count = 0;
  std::vector<Witness> tight_instances;
  std::vector<Witness> violations;
  std::map<std::string, LawTally> laws;
  double wall_time_ms = 0;

  void absorb(SearchReport&& shard) {
    pairs_enumerated += shard.pairs_enumerated;
    triples_examined += shard.triples_examined;
    holds_count += shard.holds_count;
    vanishing_count += shard.vanishing_count;
    violation_count += shard.violation_count;
    tight_count += shard.tight_count;
    for (auto& w : shard.tight_instances) {
      if (tight_instances.size() < config.record_limit) tight_instances.push_back(std::move(w));
    }
    for (auto& w : shard.violations) {
      if (violations.size() < config.record_limit) violations.push_back(std::move(w));
    }
    for (const auto& [name, tally] : shard.laws) {
      laws[name].passed += tally.passed;
      laws[name].failed += tally.failed;
    }
  }

  void record_law(const std::string& name, bool ok) {
    auto& t = laws[name];
    ++triples_examined;
    if (ok) {
      ++t.passed;
      ++holds_count;
    } else {
      ++t.failed;
      ++violation_count;
    }
  }
};

/// Decodes enumeration index k >= 1: base-p digits of k, least significant
/// digit is the constant coefficient.
inline FpPoly poly_from_index(const PrimeField& field, std::uint64_t k) {
  std::vector<Fp> coeffs;
  const std::uint64_t p = field.modulus();
  while (k > 0) {
    coeffs.push_back(field.from_int(static_cast<std::int64_t>(k % p)));
    k /= p;
  }
  return FpPoly(field, std::move(coeffs));
}

/// All p^(d+1) - 1 nonzero polynomials of degree <= d, lowest first in
/// lexicographic coefficient order.
inline std::vector<FpPoly> enumerate_polys(const FieldDesc& fd, std::size_t max_degree) {
  if (!fd.is_finite()) fail(ErrorKind::NotFiniteField, "enumeration needs a prime field");
  const PrimeField field(fd);
  std::uint64_t count = 1;
  for (std::size_t i = 0; i <= max_degree; ++i) {
    count *= field.modulus();
    if (count > (std::uint64_t{1} << 26)) fail(ErrorKind::ConfigError, "enumeration too large");
  }
  std::vector<FpPoly> out;
  out.reserve(count - 1);
  for (std::uint64_t k = 1; k < count; ++k) out.push_back(poly_from_index(field, k));
  return out;
}

namespace detail {

template <class Fn>
SearchReport run_sharded(const SearchConfig& cfg, std::size_t n_items, Fn&& shard_fn) {
  const std::size_t workers = std::max<std::size_t>(1, std::min(cfg.workers, std::max<std::size_t>(n_items, 1)));
  std::vector<SearchReport> shards(workers);
  std::vector<std::exception_ptr> errors(workers);
  auto run = [&](std::size_t w) {
    const std::size_t begin = n_items * w / workers;
    const std::size_t end = n_items * (w + 1) / workers;
    shards[w].config = cfg;
    try {
      shard_fn(shards[w], begin, end);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(run, w);
    for (auto& t : threads) t.join();
  }
  SearchReport merged;
  merged.config = cfg;
  for (std::size_t w = 0; w < workers; ++w) {
    if (errors[w]) std::rethrow_exception(errors[w]);
    merged.absorb(std::move(shards[w]));
  }
  return merged;
}

template <ExactField F>
std::array<std::string, 3> render(const Polynomial<F>& a, const Polynomial<F>& b, const Polynomial<F>& c) {
  return {format_poly(a), format_poly(b), format_poly(c)};
}

template <ExactField F>
void classify(SearchReport& rep, const Polynomial<F>& a, const Polynomial<F>& b, const Polynomial<F>& c,
              const MsVerdict& v) {
  ++rep.triples_examined;
  switch (v.kind) {
    case VerdictKind::DerivativesVanish:
    case VerdictKind::AllConstant:
      ++rep.vanishing_count;
      break;
    case VerdictKind::InequalityHolds:
      ++rep.holds_count;
      if (v.margin == 0) {
        ++rep.tight_count;
        if (rep.tight_instances.size() < rep.config.record_limit) {
          rep.tight_instances.push_back({render(a, b, c), v, std::nullopt, {}});
        }
      }
      break;
    case VerdictKind::Violation:
      ++rep.violation_count;
      if (rep.violations.size() < rep.config.record_limit) rep.violations.push_back({render(a, b, c), v, std::nullopt, {}});
      break;
  }
}

template <ExactField F>
void record_engine_failure(SearchReport& rep, const Polynomial<F>& a, const Polynomial<F>& b,
                           const Polynomial<F>& c, const Error& e) {
  ++rep.triples_examined;
  ++rep.violation_count;
  if (rep.violations.size() < rep.config.record_limit) {
    rep.violations.push_back({render(a, b, c), bare_verdict(VerdictKind::Violation), std::nullopt, e.what()});
  }
}

/// c with c^n = s when s is a perfect n-th power, read off the square-free
/// decomposition.
template <ExactField F>
std::optional<Polynomial<F>> perfect_power_root(const Polynomial<F>& s, unsigned n) {
  const F& field = s.field();
  const auto dec = squarefree_decompose(s);
  const auto unit_root = nth_root(field, dec.unit, n);
  if (!unit_root) return std::nullopt;
  auto c = Polynomial<F>::constant(field, *unit_root);
  for (const auto& part : dec.parts) {
    if (part.multiplicity % n != 0) return std::nullopt;
    c = c * pow(part.factor, part.multiplicity / n);
  }
  return c;
}

template <ExactField F>
void flt_pair(SearchReport& rep, const Polynomial<F>& a, const Polynomial<F>& b, const Polynomial<F>& an,
              const Polynomial<F>& bn, std::uint64_t n) {
  ++rep.pairs_enumerated;
  const auto s = an + bn;
  if (s.is_zero() || !is_coprime(a, b)) return;
  const auto c = perfect_power_root(s, static_cast<unsigned>(n));
  if (!c) return;
  ++rep.triples_examined;
  Witness w{render(a, b, *c), bare_verdict(VerdictKind::DerivativesVanish), std::nullopt, {}};
  try {
    auto report = flt_check(n, a, b, *c);
    const bool constant = a.nat_degree() == 0 && b.nat_degree() == 0 && c->nat_degree() == 0;
    if (report.kind == ConstancyKind::AllConstant && constant) {
      ++rep.vanishing_count;
      return;
    }
    w.constancy = std::move(report);
    w.note = constant ? "checker did not certify a constant solution" : "nonconstant solution";
  } catch (const Error& e) {
    w.note = e.what();
  }
  ++rep.violation_count;
  if (rep.violations.size() < rep.config.record_limit) rep.violations.push_back(std::move(w));
}

// Independent uniform draws per sample index keep reports worker-invariant.
inline std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index, std::uint64_t salt = 0) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                    static_cast<std::uint32_t>(salt)};
  return std::mt19937_64(seq);
}

inline std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

template <ExactField F>
typename F::value_type random_coeff(const F& field, std::mt19937_64& rng) {
  if (field.characteristic() == 0) return field.from_int(uniform_int(rng, -5, 5));
  return field.from_int(uniform_int(rng, 0, static_cast<std::int64_t>(field.characteristic()) - 1));
}

template <ExactField F>
typename F::value_type random_nonzero_coeff(const F& field, std::mt19937_64& rng) {
  for (;;) {
    auto c = random_coeff(field, rng);
    if (!F::is_zero(c)) return c;
  }
}

}  // namespace detail

/// Random polynomial of degree <= max_degree; coefficients in [-5, 5] over Q,
/// uniform residues over F_p. May be zero.
template <ExactField F>
Polynomial<F> random_poly(const F& field, std::mt19937_64& rng, std::size_t max_degree) {
  const auto deg = static_cast<std::size_t>(detail::uniform_int(rng, 0, static_cast<std::int64_t>(max_degree)));
  std::vector<typename F::value_type> c;
  for (std::size_t i = 0; i <= deg; ++i) c.push_back(detail::random_coeff(field, rng));
  return Polynomial<F>(field, std::move(c));
}

/// Random polynomial of exact degree `degree`.
template <ExactField F>
Polynomial<F> random_poly_exact(const F& field, std::mt19937_64& rng, std::size_t degree) {
  std::vector<typename F::value_type> c;
  for (std::size_t i = 0; i < degree; ++i) c.push_back(detail::random_coeff(field, rng));
  c.push_back(detail::random_nonzero_coeff(field, rng));
  return Polynomial<F>(field, std::move(c));
}

template <ExactField F>
Polynomial<F> random_nonzero_poly(const F& field, std::mt19937_64& rng, std::size_t max_degree) {
  for (;;) {
    auto p = random_poly(field, rng, max_degree);
    if (!p.is_zero()) return p;
  }
}

/// Nonzero polynomial of degree <= max_degree that often has repeated
/// factors: plain draws, g^k h products and, in characteristic p, g(t^p) h.
template <ExactField F>
Polynomial<F> random_structured_poly(const F& field, std::mt19937_64& rng, std::size_t max_degree) {
  const auto shape = detail::uniform_int(rng, 0, 5);
  const std::size_t p = field.characteristic();
  if (shape >= 3 && max_degree >= 2) {
    const auto k = static_cast<std::size_t>(detail::uniform_int(rng, 2, 4));
    const std::size_t gdeg = std::max<std::size_t>(1, std::min<std::size_t>(max_degree / k, 3));
    const auto g = random_poly_exact(field, rng, static_cast<std::size_t>(detail::uniform_int(rng, 1, gdeg)));
    const std::size_t used = k * g.nat_degree();
    const auto h = random_nonzero_poly(field, rng, max_degree - std::min(used, max_degree));
    return pow(g, k) * h;
  }
  if (shape == 2 && p != 0 && max_degree >= p) {
    const auto g = random_nonzero_poly(field, rng, max_degree / p);
    const auto composed = compose_t_pow(g, p);
    const auto h = random_nonzero_poly(field, rng, max_degree - composed.nat_degree());
    return composed * h;
  }
  return random_nonzero_poly(field, rng, max_degree);
}

inline SearchReport search_mason_stothers(const SearchConfig& cfg) {
  validate(cfg);
  if (cfg.target != SearchTarget::MasonStothers && cfg.target != SearchTarget::NonCoprimeVariant) {
    fail(ErrorKind::ConfigError, "search_mason_stothers needs target ms or noncoprime");
  }
  const auto start = std::chrono::steady_clock::now();
  const auto polys = enumerate_polys(cfg.field, cfg.max_degree);
  auto report = detail::run_sharded(cfg, polys.size(), [&](SearchReport& rep, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const auto& a = polys[i];
      for (const auto& b : polys) {
        ++rep.pairs_enumerated;
        const auto c = -(a + b);
        if (c.is_zero()) continue;
        if (cfg.target == SearchTarget::MasonStothers) {
          if (!is_coprime(a, b)) continue;
          try {
            detail::classify(rep, a, b, c, mason_stothers_verdict(a, b, c));
          } catch (const Error& e) {
            detail::record_engine_failure(rep, a, b, c, e);
          }
        } else {
          detail::classify(rep, a, b, c, noncoprime_degree_verdict(a, b, c));
        }
      }
    }
  });
  report.mode = "exhaustive";
  report.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

inline SearchReport search_flt(const SearchConfig& cfg) {
  validate(cfg);
  if (cfg.target != SearchTarget::Flt) fail(ErrorKind::ConfigError, "search_flt needs target flt");
  const auto start = std::chrono::steady_clock::now();
  const auto polys = enumerate_polys(cfg.field, cfg.max_degree);
  std::vector<FpPoly> powers;
  powers.reserve(polys.size());
  for (const auto& p : polys) powers.push_back(pow(p, cfg.flt_n));
  auto report = detail::run_sharded(cfg, polys.size(), [&](SearchReport& rep, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t j = 0; j < polys.size(); ++j) {
        detail::flt_pair(rep, polys[i], polys[j], powers[i], powers[j], cfg.flt_n);
      }
    }
  });
  report.mode = "exhaustive";
  report.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

namespace detail {

template <ExactField F>
void lemma_sample(SearchReport& rep, const F& field, std::mt19937_64& rng, std::size_t max_degree,
                  std::uint64_t index) {
  const auto a = random_structured_poly(field, rng, max_degree);
  const auto rad = radical(a);

  const auto dec = squarefree_decompose(a);
  bool parts_ok = true;
  for (std::size_t i = 0; i < dec.parts.size(); ++i) {
    const auto& f = dec.parts[i].factor;
    parts_ok = parts_ok && f.nat_degree() > 0 && f.leading() == field.one() && is_coprime(f, derivative(f)) &&
               (i == 0 || dec.parts[i - 1].multiplicity < dec.parts[i].multiplicity);
    for (std::size_t j = 0; j < i; ++j) parts_ok = parts_ok && is_coprime(f, dec.parts[j].factor);
  }
  rep.record_law("squarefree_reconstruction", dec.reconstruct(field) == a);
  rep.record_law("squarefree_parts", parts_ok);
  rep.record_law("radical_dvd_self", divides(rad, a));
  rep.record_law("radical_neg", radical(-a) == rad);
  rep.record_law("divRadical_dvd_derivative", divides(div_radical(a), derivative(a)));
  rep.record_law("natDegree_radical_eq_zero_iff", (rad.nat_degree() == 0) == (a.nat_degree() == 0));

  const std::uint64_t n = index % 5 + 1;
  const auto small = random_structured_poly(field, rng, std::min<std::size_t>(max_degree, 5));
  rep.record_law("radical_pow", radical(pow(small, n)) == radical(small));

  // Make b coprime to a by stripping common factors.
  auto b = random_structured_poly(field, rng, max_degree);
  for (auto g = gcd_monic(a, b); !g.is_one(); g = gcd_monic(a, b)) b = exact_quotient(b, g);
  rep.record_law("radical_hMul", radical(a * b) == radical(a) * radical(b));
  rep.record_law("divRadical_mul", div_radical(a * b) == div_radical(a) * div_radical(b));
}

template <ExactField F>
void wronskian_sample(SearchReport& rep, const F& field, std::mt19937_64& rng, std::size_t max_degree) {
  const auto a = random_structured_poly(field, rng, max_degree);
  const auto b = random_structured_poly(field, rng, max_degree);
  const auto c = random_poly(field, rng, max_degree);
  const auto wab = wronskian(a, b);
  rep.record_law("alternating", wronskian(a, a).is_zero());
  rep.record_law("antisymmetric", wab == -wronskian(b, a));
  rep.record_law("additive", wronskian(a + b, c) == wronskian(a, c) + wronskian(b, c));
  rep.record_law("scalar", wronskian(a.scaled(field.from_int(3)), c) == wronskian(a, c).scaled(field.from_int(3)));
  const auto c0 = -(a + b);
  rep.record_law("zero_sum_common", wronskian(b, c0) == wab && wronskian(c0, a) == wab);
  if (!wab.is_zero()) rep.record_law("degree_bound", wab.nat_degree() < a.nat_degree() + b.nat_degree());

  // A coprime zero-sum triple for the divisibility chain.
  Polynomial<F> x = a, y = b;
  for (auto g = gcd_monic(x, y); !g.is_one(); g = gcd_monic(x, y)) y = exact_quotient(y, g);
  const auto z = -(x + y);
  if (z.is_zero()) return;
  const auto w = wronskian(x, y);
  const auto dx = div_radical(x), dy = div_radical(y), dz = div_radical(z);
  rep.record_law("divisibility_chain", divides(dx, w) && divides(dy, w) && divides(dz, w) &&
                                           divides(dx * dy * dz, w) && divides(div_radical(x * y * z), w));
  if (w.is_zero()) {
    rep.record_law("zero_wronskian_derivatives",
                   derivative(x).is_zero() && derivative(y).is_zero() && derivative(z).is_zero());
  }
}

template <ExactField F>
void random_sample(SearchReport& rep, const F& field, const SearchConfig& cfg, std::uint64_t index) {
  auto rng = sample_rng(cfg.seed, index);
  const std::size_t d = cfg.max_degree;
  ++rep.pairs_enumerated;
  switch (cfg.target) {
    case SearchTarget::MasonStothers: {
      const auto a = random_nonzero_poly(field, rng, d);
      const auto b = random_nonzero_poly(field, rng, d);
      const auto c = -(a + b);
      if (c.is_zero() || !is_coprime(a, b)) return;
      try {
        classify(rep, a, b, c, mason_stothers_verdict(a, b, c));
      } catch (const Error& e) {
        record_engine_failure(rep, a, b, c, e);
      }
      return;
    }
    case SearchTarget::NonCoprimeVariant: {
      Polynomial<F> a(field), b(field);
      if (index % 2 == 1 && d >= 2) {
        // Shared factor so the non-coprime case is actually exercised.
        const auto g = random_poly_exact(field, rng, static_cast<std::size_t>(uniform_int(rng, 1, static_cast<std::int64_t>(d / 2))));
        a = g * random_nonzero_poly(field, rng, d - g.nat_degree());
        b = g * random_nonzero_poly(field, rng, d - g.nat_degree());
      } else {
        a = random_nonzero_poly(field, rng, d);
        b = random_nonzero_poly(field, rng, d);
      }
      const auto c = -(a + b);
      if (c.is_zero()) return;
      try {
        classify(rep, a, b, c,
                 field.characteristic() == 0 ? ms_noncoprime_verdict_char0(a, b, c) : noncoprime_degree_verdict(a, b, c));
      } catch (const Error& e) {
        record_engine_failure(rep, a, b, c, e);
      }
      return;
    }
    case SearchTarget::Flt: {
      const auto a = random_nonzero_poly(field, rng, d);
      const auto b = random_nonzero_poly(field, rng, d);
      flt_pair(rep, a, b, pow(a, cfg.flt_n), pow(b, cfg.flt_n), cfg.flt_n);
      return;
    }
    case SearchTarget::Davenport: {
      // Redraw until f^3 != g^2 so every sample is a valid instance.
      for (std::uint64_t salt = 1;; ++salt) {
        const auto f = random_poly_exact(field, rng, static_cast<std::size_t>(uniform_int(rng, 1, static_cast<std::int64_t>(d))));
        const auto g = random_poly_exact(field, rng, static_cast<std::size_t>(uniform_int(rng, 1, static_cast<std::int64_t>(d))));
        if ((pow(f, 3) - pow(g, 2)).is_zero()) {
          rng = sample_rng(cfg.seed, index, salt);
          continue;
        }
        ++rep.triples_examined;
        try {
          const auto r = davenport_check(f, g);
          if (r.holds) {
            ++rep.holds_count;
            if (r.lhs == r.rhs) ++rep.tight_count;
            return;
          }
        } catch (const Error&) {
        }
        ++rep.violation_count;
        if (rep.violations.size() < cfg.record_limit) {
          rep.violations.push_back({{format_poly(f), format_poly(g), format_poly(pow(f, 3) - pow(g, 2))},
                                    bare_verdict(VerdictKind::Violation), std::nullopt, "Davenport bound fails"});
        }
        return;
      }
    }
    case SearchTarget::Lemmas:
      lemma_sample(rep, field, rng, d, index);
      return;
    case SearchTarget::Wronskian:
      wronskian_sample(rep, field, rng, d);
      return;
  }
}

}  // namespace detail

/// Calls fn with the RationalField or PrimeField described by fd.
template <class Fn>
decltype(auto) with_field(const FieldDesc& fd, Fn&& fn) {
  if (fd.is_finite()) return fn(PrimeField(fd));
  return fn(RationalField{});
}

inline SearchReport random_suite(const SearchConfig& cfg) {
  validate(cfg);
  if (cfg.target == SearchTarget::Davenport && cfg.field.characteristic() != 0) {
    fail(ErrorKind::ConfigError, "Davenport suite needs characteristic 0");
  }
  const auto start = std::chrono::steady_clock::now();
  auto report = with_field(cfg.field, [&](const auto& field) {
    return detail::run_sharded(cfg, cfg.samples, [&](SearchReport& rep, std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) detail::random_sample(rep, field, cfg, i);
    });
  });
  report.mode = "random";
  report.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

/// Exhaustive search for ms / noncoprime / flt over prime fields.
inline SearchReport run_search(const SearchConfig& cfg) {
  if (cfg.target == SearchTarget::Flt) return search_flt(cfg);
  return search_mason_stothers(cfg);
}

struct ReproductionRecord {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
  bool informational = false;
};

inline std::vector<ReproductionRecord> reproduce_worked_examples() {
  std::vector<ReproductionRecord> out;
  const auto guarded = [&](std::string name, std::string expected, const std::function<ReproductionRecord()>& body) {
    try {
      out.push_back(body());
    } catch (const std::exception& e) {
      out.push_back({std::move(name), std::move(expected), std::string("error: ") + e.what(), false, false});
    }
  };

  {
    const RationalField q;
    const auto t = QPoly::variable(q);
    const auto one = QPoly::one(q);
    const std::string name = "tight rational triple (t^2, 1 - t^2, -1)";
    const std::string expected = "InequalityHolds max3=2 deg rad=3 margin=0";
    guarded(name, expected, [&] {
      const auto v = mason_stothers_verdict(t * t, one - t * t, -one);
      const std::string actual = std::string(to_string(v.kind)) + " max3=" + std::to_string(v.max3_degree) +
                                 " deg rad=" + std::to_string(v.radical_degree) +
                                 " margin=" + std::to_string(v.margin.value_or(-999));
      return ReproductionRecord{name, expected, actual, actual == expected};
    });
  }

  for (std::uint32_t p : {3U, 5U, 7U}) {
    const PrimeField field(p);
    const auto t = FpPoly::variable(field);
    const auto one = FpPoly::one(field);
    const std::string name = "vanishing derivatives (-1, -t^p, (1+t)^p), p=" + std::to_string(p);
    const std::string expected = "DerivativesVanish max3+1=" + std::to_string(p + 1) + " > deg rad=2";
    guarded(name, expected, [&] {
      const auto v = mason_stothers_verdict(-one, -pow(t, p), pow(one + t, p));
      const std::string actual = std::string(to_string(v.kind)) + " max3+1=" + std::to_string(v.max3_degree + 1) +
                                 (v.max3_degree + 1 > v.radical_degree ? " > " : " <= ") +
                                 "deg rad=" + std::to_string(v.radical_degree);
      return ReproductionRecord{name, expected, actual, actual == expected};
    });
  }

  for (std::uint32_t p : {3U, 5U}) {
    const PrimeField field(p);
    const auto t = FpPoly::variable(field);
    const auto one = FpPoly::one(field);
    const std::string name = "non-coprime counterexample (t^(p+1), -t(1+t)^p, t), p=" + std::to_string(p);
    const std::string expected = "Violation max3=" + std::to_string(p + 1) + " bound=4";
    guarded(name, expected, [&] {
      const auto v = noncoprime_degree_verdict(pow(t, p + 1), -(t * pow(one + t, p)), t);
      const std::string actual = std::string(to_string(v.kind)) + " max3=" + std::to_string(v.max3_degree) +
                                 " bound=" + std::to_string(v.radical_degree);
      return ReproductionRecord{name, expected, actual, actual == expected};
    });
  }

  {
    const PrimeField field(2);
    const auto t = FpPoly::variable(field);
    const auto one = FpPoly::one(field);
    const std::string name = "non-coprime family at p=2, every role assignment";
    const std::string expected = "no violation";
    guarded(name, expected, [&] {
      const std::array<FpPoly, 3> tri{pow(t, 3), -(t * pow(one + t, 2)), t};
      const std::array<std::array<int, 3>, 6> perms{{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
      std::string actual;
      bool any_violation = false;
      for (const auto& pm : perms) {
        const auto v = noncoprime_degree_verdict(tri[pm[0]], tri[pm[1]], tri[pm[2]]);
        any_violation = any_violation || v.kind == VerdictKind::Violation;
        actual += std::to_string(v.max3_degree) + "<" + std::to_string(v.radical_degree) + " ";
      }
      actual = (any_violation ? "violation found: " : "no violation: ") + actual;
      actual.pop_back();
      return ReproductionRecord{name, expected, actual, !any_violation, true};
    });
  }

  {
    const PrimeField field(2);
    const auto t = FpPoly::variable(field);
    const auto f = pow(t, 4);
    const auto g = pow(t, 6) + t;
    const std::string name = "Davenport hypotheses needed: F_2, (t^4, t^6 + t)";
    const std::string expected = "deg(f^3-g^2)=2 lhs=6 > rhs=4; haderiv rejected";
    guarded(name, expected, [&] {
      const auto r = davenport_degrees(f, g);
      std::string rejected = "accepted";
      try {
        davenport_prime_check(f, g);
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::PreconditionViolated) rejected = e.hypothesis().value_or("?") + " rejected";
      }
      const std::string actual = "deg(f^3-g^2)=" + std::to_string(r.rhs / 2) + " lhs=" + std::to_string(r.lhs) +
                                 (r.holds ? " <= " : " > ") + "rhs=" + std::to_string(r.rhs) + "; " + rejected;
      return ReproductionRecord{name, expected, actual, actual == expected};
    });
  }
  return out;
}

}  // namespace polyabc

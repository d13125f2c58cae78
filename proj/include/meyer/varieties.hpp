#pragma once

// Closed-form invariants of smooth projective surfaces (and Veronese images of
// complete intersections, through a generic surface section) and the value of
// the Meyer function on a lasso around the dual / associated variety:
//
//   deg D_X = chi(X) + deg X - 2 (2 - 2g)
//   phi_X(lasso) = (Sign X - deg X) / deg D_X
//
// where g is the genus of a generic hyperplane section curve.

#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "meyer/error.hpp"
#include "meyer/exactnum.hpp"

namespace meyer {

struct SurfaceInvariants {
  BigInt sign;
  BigInt chi;    // topological Euler characteristic
  BigInt deg;
  BigInt genus;  // of a generic hyperplane section
  // rank H_1(X; R) < 2g for some PID R; asserted by the caller, not checked
  bool h1_rank_ok = true;
};

struct LassoReport {
  BigInt deg_DX;
  Rational phi;
  // phi = alpha / beta. Closed-form alpha_X, beta_X on the complete
  // intersection paths; (Sign - deg, deg D_X) on the generic path.
  Rational alpha;
  Rational beta;
};

struct CISpec {
  std::size_t m = 0;
  std::vector<BigInt> degrees;
  BigInt n = 2;  // dimension of X
  BigInt d = 1;  // Veronese degree
};

struct CISurfaceReport {
  SurfaceInvariants invariants;
  LassoReport lasso;
};

inline LassoReport generic_surface_lasso(const SurfaceInvariants& inv) {
  if (inv.deg < 1) throw Error(Errc::invalid_argument, "deg X must be positive, got " + inv.deg.str());
  if (inv.genus < 0) throw Error(Errc::negative_genus, "section genus " + inv.genus.str());
  if (inv.genus == 0) throw Error(Errc::genus_zero, "the generic section curve must have genus > 0");
  if (!inv.h1_rank_ok) throw Error(Errc::invalid_argument, "requires rank H_1(X;R) < 2g for some PID R");
  const BigInt deg_dx = inv.chi + inv.deg - 2 * (2 - 2 * inv.genus);
  if (deg_dx <= 0)
    throw Error(Errc::non_positive_deg_dx, "deg D_X = " + deg_dx.str() + " <= 0; D_X is not a hypersurface");
  const Rational num(inv.sign - inv.deg);
  return {deg_dx, num / Rational(deg_dx), num, Rational(deg_dx)};
}

/// 2 - 2g = <c_1(X) h, [X]> - deg X.
inline BigInt hyperplane_genus(const BigInt& c1_dot_h, const BigInt& deg) {
  if (deg < 1) throw Error(Errc::invalid_argument, "deg must be positive");
  const BigInt euler = c1_dot_h - deg;
  const BigInt twice_g = 2 - euler;
  if (twice_g % 2 != 0) throw Error(Errc::non_integral_genus, "c1.h - deg = " + euler.str() + " is odd");
  if (twice_g < 0) throw Error(Errc::negative_genus, "genus " + BigInt(twice_g / 2).str() + " < 0");
  return twice_g / 2;
}

struct StratumCodim {
  long codim;           // i^2 - i
  long fiber_dim_term;  // i - i^2
};

/// Codimension of the locus of planes meeting X with an i-dimensional
/// tangency defect.
inline StratumCodim stratum_codim(long i) {
  if (i < 1) throw Error(Errc::invalid_argument, "stratum index must be >= 1");
  return {i * i - i, i - i * i};
}

// ---------------------------------------------------------------------------
// Complete intersections

namespace detail {

struct DegreeSums {
  BigInt product = 1, sum = 0, sum_sq = 0, pair_sum = 0;  // pair_sum = sum_{i<j} k_i k_j
};

inline DegreeSums degree_sums(std::span<const BigInt> ks) {
  DegreeSums s;
  for (const auto& k : ks) {
    s.pair_sum += s.sum * k;
    s.product *= k;
    s.sum += k;
    s.sum_sq += k * k;
  }
  return s;
}

inline BigInt binom2(const BigInt& a) { return a * (a - 1) / 2; }

inline void require_degrees(std::span<const BigInt> ks) {
  for (const auto& k : ks)
    if (k < 2) throw Error(Errc::invalid_argument, "defining degrees must be >= 2, got " + k.str());
}

}  // namespace detail

/// Euler characteristic and signature of a smooth complete intersection
/// surface of multidegree ks in P_{M+2}, M = |ks|.
inline std::pair<BigInt, BigInt> ci_surface_topology(std::span<const BigInt> ks) {
  const auto s = detail::degree_sums(ks);
  const BigInt M = ks.size();
  const BigInt chi = s.product * (detail::binom2(M + 3) + s.sum_sq - (M + 3) * s.sum + s.pair_sum);
  const BigInt sign3 = s.product * (M + 3 - s.sum_sq);
  if (sign3 % 3 != 0) throw Error(Errc::invalid_argument, "signature is not integral; degrees are inconsistent");
  return {chi, sign3 / 3};
}

/// chi of a smooth complete intersection curve of multidegree ks in P_{M+1}.
inline BigInt ci_curve_euler(std::span<const BigInt> ks) {
  const auto s = detail::degree_sums(ks);
  return s.product * (BigInt(ks.size()) + 2 - s.sum);
}

inline BigInt genus_from_euler(const BigInt& euler) {
  const BigInt twice_g = 2 - euler;
  if (twice_g % 2 != 0) throw Error(Errc::non_integral_genus, "curve Euler characteristic " + euler.str() + " is odd");
  if (twice_g < 0) throw Error(Errc::negative_genus, "curve Euler characteristic " + euler.str() + " > 2");
  return twice_g / 2;
}

/// Rejects inputs outside the family: m = |degrees|, n >= 2, d >= 1, degrees
/// >= 2, d >= 2 when m = 0, and the excluded tuples (d,m,n_1) = (1,1,2) and
/// (n,d,m) = (2,2,0).
inline void validate(const CISpec& spec) {
  if (spec.degrees.size() != spec.m)
    throw Error(Errc::invalid_argument, "m = " + std::to_string(spec.m) + " but " +
                                            std::to_string(spec.degrees.size()) + " degrees given");
  if (spec.n < 2) throw Error(Errc::invalid_argument, "dimension n must be >= 2");
  if (spec.n > 64) throw Error(Errc::invalid_argument, "dimension n > 64 is not supported");
  if (spec.d < 1) throw Error(Errc::invalid_argument, "Veronese degree d must be >= 1");
  detail::require_degrees(spec.degrees);
  if (spec.m == 0 && spec.d == 1) throw Error(Errc::excluded_case, "m = 0 requires d >= 2");
  if (spec.d == 1 && spec.m == 1 && spec.degrees[0] == 2)
    throw Error(Errc::excluded_case, "(d, m, n_1) = (1, 1, 2): the quadric");
  if (spec.n == 2 && spec.d == 2 && spec.m == 0)
    throw Error(Errc::excluded_case, "(n, d, m) = (2, 2, 0): the Veronese surface");
}

/// Closed-form alpha_X and beta_X.
inline std::pair<Rational, Rational> veronese_alpha_beta(const CISpec& spec) {
  const auto s = detail::degree_sums(spec.degrees);
  const BigInt m = spec.m, &n = spec.n, &d = spec.d;
  const Rational alpha(m + n + 1 - s.sum_sq - (n + 1) * d * d, BigInt(3));
  const BigInt beta = detail::binom2(m + n + 1) + s.sum_sq + s.pair_sum - (m + n + 1) * (s.sum + n * d) +
                      n * d * s.sum + (n * n + n) * d * d / 2;
  return {alpha, Rational(beta)};
}

inline BigInt ipow(BigInt base, const BigInt& exp) {
  BigInt r = 1;
  for (BigInt i = 0; i < exp; ++i) r *= base;
  return r;
}

/// Lasso value for v_d(complete intersection) from the closed forms:
/// phi = alpha_X / beta_X and deg D_X = (prod n_i) d^{n-2} beta_X.
inline LassoReport veronese_ci_lasso(const CISpec& spec) {
  validate(spec);
  auto [alpha, beta] = veronese_alpha_beta(spec);
  if (beta <= 0) throw Error(Errc::non_positive_deg_dx, "beta_X = " + to_string(beta) + " <= 0");
  const BigInt deg_dx = detail::degree_sums(spec.degrees).product * ipow(spec.d, spec.n - 2) * numerator_of(beta);
  return {deg_dx, alpha / beta, alpha, beta};
}

/// Invariants of the surface section X' = X cut by a generic codimension
/// (n-2) linear space; X' is v_d of a complete intersection of type
/// (n_1..n_m, d x (n-2)) in P_{m+n}.
inline SurfaceInvariants veronese_section_invariants(const CISpec& spec) {
  validate(spec);
  std::vector<BigInt> surface = spec.degrees;
  for (BigInt i = 0; i < spec.n - 2; ++i) surface.push_back(spec.d);
  std::vector<BigInt> curve = surface;
  curve.push_back(spec.d);

  auto [chi, sign] = ci_surface_topology(surface);
  const BigInt deg = detail::degree_sums(spec.degrees).product * ipow(spec.d, spec.n);
  return {sign, chi, deg, genus_from_euler(ci_curve_euler(curve))};
}

/// Complete intersection surface X of type (n_1..n_m) in P_{m+2}.
inline CISurfaceReport ci_surface_invariants(std::size_t m, const std::vector<BigInt>& degrees) {
  if (m < 1) throw Error(Errc::invalid_argument, "a complete intersection surface needs m >= 1");
  const CISpec spec{m, degrees, 2, 1};
  validate(spec);
  auto [chi, sign] = ci_surface_topology(degrees);
  const SurfaceInvariants inv{sign, chi, detail::degree_sums(degrees).product,
                              genus_from_euler(ci_curve_euler(degrees))};
  LassoReport lasso = generic_surface_lasso(inv);
  auto [alpha, beta] = veronese_alpha_beta(spec);
  lasso.alpha = alpha;
  lasso.beta = beta;
  return {inv, lasso};
}

// ---------------------------------------------------------------------------
// Named presets

struct PresetResult {
  std::string name;
  std::optional<SurfaceInvariants> invariants;
  LassoReport lasso;
};

/// The Segre image s_{3,3}(P_1 x P_1) in P_15.
inline SurfaceInvariants segre33_invariants() { return {0, 4, 18, 4}; }

namespace detail {

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace detail

/// "n1,n2,..." (possibly empty) to degrees.
inline std::vector<BigInt> parse_degrees(std::string_view s) {
  std::vector<BigInt> out;
  if (s.empty()) return out;
  for (const auto& tok : detail::split(s, ',')) out.push_back(detail::parse_integer(tok));
  return out;
}

inline std::size_t parse_count(std::string_view s) {
  const BigInt v = detail::parse_integer(s);
  if (v < 0 || v > 1024) throw Error(Errc::invalid_argument, "count out of range: " + std::string(s));
  return static_cast<std::size_t>(v);
}

inline std::vector<std::pair<std::string, std::string>> list_presets() {
  return {
      {"segre33", "s_{3,3}(P1 x P1): Sign=0 chi=4 deg=18 g=4"},
      {"veronese-p4-d2", "v_2(P4), surface section of genus 5"},
      {"ci:<m>:<n1,...>", "complete intersection surface of type (n1..nm) in P_{m+2}"},
      {"veronese-ci:<m>:<n1,...>:<n>:<d>", "v_d of an n-dimensional complete intersection of type (n1..nm)"},
  };
}

inline PresetResult resolve_preset(std::string_view name) {
  if (name == "segre33") {
    const auto inv = segre33_invariants();
    return {std::string(name), inv, generic_surface_lasso(inv)};
  }
  const auto veronese = [&](const CISpec& spec) {
    return PresetResult{std::string(name), veronese_section_invariants(spec), veronese_ci_lasso(spec)};
  };
  if (name == "veronese-p4-d2") return veronese(CISpec{0, {}, 4, 2});

  const auto parts = detail::split(name, ':');
  if (parts.size() == 3 && parts[0] == "ci") {
    auto r = ci_surface_invariants(parse_count(parts[1]), parse_degrees(parts[2]));
    return {std::string(name), r.invariants, r.lasso};
  }
  if (parts.size() == 5 && parts[0] == "veronese-ci") {
    return veronese(CISpec{parse_count(parts[1]), parse_degrees(parts[2]), detail::parse_integer(parts[3]),
                           detail::parse_integer(parts[4])});
  }
  throw Error(Errc::unknown_name, "no preset named '" + std::string(name) + "'");
}

}  // namespace meyer

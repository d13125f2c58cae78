#pragma once

// Local signatures of fiber germs of fibered 4-manifolds.
//
// A germ F with lifted monodromy x_F has sigma(F) = phi(x_F) + Sign(N(F)),
// where N(F) is a fiber neighborhood, and a fibration over a closed surface
// satisfies Sign(M) = sum over singular germs of sigma(F).

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "meyer/error.hpp"
#include "meyer/exactnum.hpp"

namespace meyer {

enum class BaseCurve { disk, p1 };

struct ComplexSurfaceData {
  BigInt chi_O;  // holomorphic Euler characteristic
  BigInt K2;     // self-intersection of the dualizing sheaf
  BigInt fiber_genus = 2;
  BaseCurve base = BaseCurve::p1;
};

struct SurfaceTopology {
  BigInt chi_top;
  BigInt sign;
};

/// Noether: chi_top = 12 chi_O - K^2. Hirzebruch: Sign = K^2 - 8 chi_O.
inline SurfaceTopology surface_topology(const ComplexSurfaceData& d) {
  return {12 * d.chi_O - d.K2, d.K2 - 8 * d.chi_O};
}

/// Inverse of surface_topology: chi_O = (chi_top + Sign) / 4.
inline std::pair<BigInt, BigInt> holomorphic_from_topology(const BigInt& chi_top, const BigInt& sign) {
  const BigInt four_chi = chi_top + sign;
  if (four_chi % 4 != 0)
    throw Error(Errc::invalid_argument, "chi_top + Sign = " + four_chi.str() + " is not divisible by 4");
  const BigInt chi_O = four_chi / 4;
  return {chi_O, 12 * chi_O - chi_top};
}

/// Total Euler contribution of the singular fibers: chi_top - chi(B) (2 - 2g).
inline BigInt fiber_count(const BigInt& chi_top, const BigInt& genus, const BigInt& base_chi = 2) {
  if (genus < 2) throw Error(Errc::invalid_argument, "fiber genus must be >= 2");
  return chi_top - base_chi * (2 - 2 * genus);
}

inline Rational germ_sigma(const Rational& phi_value, const BigInt& nbhd_sign) {
  return phi_value + Rational(nbhd_sign);
}

struct FiberGerm {
  std::string name;
  Rational phi;       // Meyer function at the lifted monodromy
  BigInt nbhd_sign;   // signature of a fiber neighborhood
  Rational sigma;     // phi + nbhd_sign
  bool smooth = false;

  static FiberGerm make(std::string name, Rational phi, BigInt nbhd_sign, bool smooth = false) {
    Rational sigma = germ_sigma(phi, nbhd_sign);
    return {std::move(name), std::move(phi), std::move(nbhd_sign), std::move(sigma), smooth};
  }
};

/// A smooth germ contributes nothing.
inline bool smooth_germ_check(const FiberGerm& g) {
  if (!g.smooth) return true;
  if (g.phi != 0 || g.nbhd_sign != 0)
    throw Error(Errc::smooth_germ_nonzero, "smooth germ '" + g.name + "' has phi = " + to_string(g.phi) +
                                               ", nbhd_sign = " + g.nbhd_sign.str());
  return true;
}

/// Germs with known values. R4 is the family of non-hyperelliptic genus 4
/// curves of rank 4 (on a smooth quadric); NT5 the non-trigonal genus 5 curves.
inline const std::vector<FiberGerm>& builtin_germs() {
  static const std::vector<FiberGerm> table = {
      FiberGerm::make("R4/F_I", Rational(-9, 17), 0),
      FiberGerm::make("R4/F_31", Rational(28, 17), -1),
      FiberGerm::make("R4/F_22", Rational(36, 17), -1),
      FiberGerm::make("R4/F_Rprime", Rational(4, 17), 0),
      FiberGerm::make("R4/F_R", Rational(2, 17), 0),
      FiberGerm::make("NT5/F_I", Rational(-1, 2), 0),
  };
  return table;
}

inline const FiberGerm* find_germ(std::string_view name) {
  const auto& t = builtin_germs();
  auto it = std::find_if(t.begin(), t.end(), [&](const FiberGerm& g) { return g.name == name; });
  return it == t.end() ? nullptr : &*it;
}

inline const FiberGerm& germ(std::string_view name) {
  if (const auto* g = find_germ(name)) return *g;
  throw Error(Errc::unknown_name, "no built-in germ named '" + std::string(name) + "'");
}

struct LedgerEntry {
  std::string name;
  std::optional<Rational> phi;  // empty: the unknown germ
  BigInt nbhd_sign = 0;
  BigInt count = 1;

  bool known() const { return phi.has_value(); }
  Rational sigma() const { return germ_sigma(phi.value(), nbhd_sign); }

  static LedgerEntry from(const FiberGerm& g, BigInt count) { return {g.name, g.phi, g.nbhd_sign, std::move(count)}; }
};

struct FibrationLedger {
  BigInt total_sign;
  std::vector<LedgerEntry> germs;
};

struct FibrationReport {
  Rational germ_sum;
  BigInt total_sign;
  Rational residual;  // total_sign - germ_sum

  bool balanced() const { return residual == 0; }
};

inline FibrationReport check_fibration(const FibrationLedger& ledger) {
  FibrationReport r{0, ledger.total_sign, 0};
  for (const auto& e : ledger.germs) {
    if (!e.known()) throw Error(Errc::invalid_argument, "germ '" + e.name + "' has no phi value");
    r.germ_sum += Rational(e.count) * e.sigma();
  }
  r.residual = Rational(ledger.total_sign) - r.germ_sum;
  return r;
}

struct SolvedGerm {
  std::string name;
  Rational sigma;
  Rational phi;  // sigma - nbhd_sign
};

/// sigma of the single unknown germ from the global signature formula.
inline SolvedGerm solve_unknown_germ(const FibrationLedger& ledger) {
  const LedgerEntry* unknown = nullptr;
  Rational known_sum = 0;
  for (const auto& e : ledger.germs) {
    if (e.known()) {
      known_sum += Rational(e.count) * e.sigma();
    } else if (unknown) {
      throw Error(Errc::zero_or_many_unknowns, "more than one germ has no phi value");
    } else {
      unknown = &e;
    }
  }
  if (!unknown) throw Error(Errc::zero_or_many_unknowns, "no germ is marked unknown");
  if (unknown->count < 1) throw Error(Errc::invalid_argument, "unknown germ count must be >= 1");
  const Rational sigma = (Rational(ledger.total_sign) - known_sum) / Rational(unknown->count);
  return {unknown->name, sigma, sigma - Rational(unknown->nbhd_sign)};
}

}  // namespace meyer

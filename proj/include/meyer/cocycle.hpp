#pragma once

// Meyer's signature cocycle on Sp(2g;Z) and the Meyer function on SL(2;Z).
//
// tau(A1, A2) is the signature of the symmetric form
//   <(x,y), (x',y')> = (x+y)^T J (I - A2) y'
// on V = {(x,y) : (A1^{-1} - I) x + (A2 - I) y = 0}.
//
// The Meyer function phi is the rational 1-cochain with
//   phi(A) - phi(AB) + phi(B) = tau(A, B),
// so phi(AB) = phi(A) + phi(B) - tau(A, B). On SL(2;Z) it is fixed by its
// values on S and T, which the relations of the group determine.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "meyer/error.hpp"
#include "meyer/exactnum.hpp"
#include "meyer/symplectic.hpp"

namespace meyer {

namespace detail {

inline void require_same_genus(const SymplecticElement& a, const SymplecticElement& b) {
  if (a.genus() != b.genus())
    throw Error(Errc::genus_mismatch, "genus " + std::to_string(a.genus()) + " vs genus " + std::to_string(b.genus()) +
                                          "; stabilize explicitly with direct_sum");
}

}  // namespace detail

/// The 2g x 4g matrix [(A1^{-1} - I) | (A2 - I)] whose kernel is V_{A1,A2}.
inline RatMatrix meyer_constraint(const SymplecticElement& a1, const SymplecticElement& a2) {
  detail::require_same_genus(a1, a2);
  const IntMatrix id = IntMatrix::identity(a1.dim());
  return to_rational(hconcat(a1.inverse().matrix() - id, a2.matrix() - id));
}

/// The form (x+y)^T J (I - A2) y' as a matrix on Q^{4g} = Q^{2g} + Q^{2g}.
inline BilinearForm meyer_bilinear(const SymplecticElement& a2) {
  const std::size_t n = a2.dim();
  const IntMatrix k = standard_J(a2.genus()) * (IntMatrix::identity(n) - a2.matrix());
  RatMatrix b(2 * n, 2 * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      b(r, n + c) = k(r, c);
      b(n + r, n + c) = k(r, c);
    }
  return BilinearForm{std::move(b)};
}

/// Gram matrix of the Meyer form on the canonical kernel basis of V_{A1,A2}.
inline SymmetricForm meyer_form(const SymplecticElement& a1, const SymplecticElement& a2) {
  const auto basis = kernel_basis(meyer_constraint(a1, a2));
  return gram_restrict(meyer_bilinear(a2), basis);
}

inline long tau(const SymplecticElement& a1, const SymplecticElement& a2) { return signature(meyer_form(a1, a2)); }

/// tau(A1,A2) + tau(A1 A2, A3) - tau(A2, A3) - tau(A1, A2 A3); zero for a cocycle.
inline long tau_cocycle_defect(const SymplecticElement& a1, const SymplecticElement& a2, const SymplecticElement& a3) {
  detail::require_same_genus(a1, a2);
  detail::require_same_genus(a2, a3);
  return tau(a1, a2) + tau(a1 * a2, a3) - tau(a2, a3) - tau(a1, a2 * a3);
}

/// phi of the product f_1 ... f_k from phi(f_i) and the images A_i:
/// sum phi(f_i) - sum_i tau(A_1 ... A_i, A_{i+1}).
inline Rational fold_phi(std::span<const Rational> phis, std::span<const SymplecticElement> images) {
  if (phis.size() != images.size()) throw Error(Errc::dimension_mismatch, "one phi value per factor");
  if (images.empty()) return 0;
  Rational acc = phis[0];
  SymplecticElement prefix = images[0];
  for (std::size_t i = 1; i < images.size(); ++i) {
    acc += phis[i] - tau(prefix, images[i]);
    prefix = prefix * images[i];
  }
  return acc;
}

struct PhiBase {
  Rational phi_S;
  Rational phi_T;
};

namespace detail {

// c_S phi(S) + c_T phi(T) + c_0
struct PhiAffine {
  Rational c_S, c_T, c_0;

  Rational at(const PhiBase& b) const { return c_S * b.phi_S + c_T * b.phi_T + c_0; }
};

inline PhiAffine letter_phi(Letter l) {
  // phi(g^{-1}) = tau(g, g^{-1}) - phi(g), from phi(1) = 0
  switch (l) {
    case Letter::S: return {1, 0, 0};
    case Letter::T: return {0, 1, 0};
    case Letter::S_inv: return {-1, 0, Rational(tau(letter_matrix(Letter::S), letter_matrix(Letter::S_inv)))};
    case Letter::T_inv: return {0, -1, Rational(tau(letter_matrix(Letter::T), letter_matrix(Letter::T_inv)))};
  }
  throw Error(Errc::invalid_argument, "bad letter");
}

inline PhiAffine word_phi_affine(const SL2Word& w) {
  PhiAffine acc{0, 0, 0};
  SymplecticElement prefix = SymplecticElement::identity(1);
  bool first = true;
  for (auto l : w.letters) {
    const PhiAffine f = letter_phi(l);
    acc.c_S += f.c_S;
    acc.c_T += f.c_T;
    acc.c_0 += f.c_0;
    const SymplecticElement m = letter_matrix(l);
    if (!first) acc.c_0 -= tau(prefix, m);
    prefix = prefix * m;
    first = false;
  }
  return acc;
}

}  // namespace detail

/// Solves for phi(S), phi(T) from S^4 = 1 and (ST)^6 = 1, then checks the
/// remaining defining relation S^2 = (ST)^3.
inline PhiBase phi1_base() {
  const SL2Word s4 = SL2Word::parse("SSSS");
  const SL2Word st6 = SL2Word::parse("STSTSTSTSTST");
  const SL2Word s2 = SL2Word::parse("SS");
  const SL2Word st3 = SL2Word::parse("STSTST");
  const auto id = SymplecticElement::identity(1);
  if (evaluate(s4) != id || evaluate(st6) != id || evaluate(s2) != evaluate(st3))
    throw Error(Errc::inconsistent_relations, "generator matrices do not satisfy the SL(2;Z) relations");

  const auto e1 = detail::word_phi_affine(s4);
  const auto e2 = detail::word_phi_affine(st6);
  const Rational det = e1.c_S * e2.c_T - e1.c_T * e2.c_S;
  if (det == 0) throw Error(Errc::inconsistent_relations, "relator equations do not determine phi(S), phi(T)");
  // e_i.c_S x + e_i.c_T y = -e_i.c_0
  const Rational r1 = -e1.c_0, r2 = -e2.c_0;
  PhiBase base{(r1 * e2.c_T - e1.c_T * r2) / det, (e1.c_S * r2 - r1 * e2.c_S) / det};

  const auto lhs = detail::word_phi_affine(s2);
  const auto rhs = detail::word_phi_affine(st3);
  if (lhs.at(base) != rhs.at(base))
    throw Error(Errc::inconsistent_relations, "phi(S^2) != phi((ST)^3): tau is not a coboundary on SL(2;Z)");
  return base;
}

inline const PhiBase& phi1_base_cached() {
  static const PhiBase base = phi1_base();
  return base;
}

/// phi_1 along an explicit word. Any word for the same matrix gives the same value.
inline Rational phi1_word(const SL2Word& w, const PhiBase& base = phi1_base_cached()) {
  return detail::word_phi_affine(w).at(base);
}

inline Rational phi1(const SymplecticElement& a, Reduction mode = Reduction::floor) {
  return phi1_word(sl2_word(a, mode));
}

inline Rational phi1(const IntMatrix& a, Reduction mode = Reduction::floor) {
  return phi1_word(sl2_word(a, mode));
}

/// phi(sigma^n) = n phi(sigma) + (n - 1), for a lasso sigma whose monodromy is
/// an inverse twist about a nonseparating curve (tau(A, A^k) = -1).
inline Rational lasso_power(const Rational& phi_sigma, long n) {
  if (n < 1) throw Error(Errc::invalid_argument, "lasso power needs n >= 1, got " + std::to_string(n));
  return Rational(n) * phi_sigma + Rational(n - 1);
}

}  // namespace meyer

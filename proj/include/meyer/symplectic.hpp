#pragma once

// Integral symplectic matrices in the basis (a_1..a_g, b_1..b_g) with the form
// J = [[0, I_g], [-I_g, 0]], transvections, block sums, and S/T words for
// SL(2;Z).

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "meyer/error.hpp"
#include "meyer/exactnum.hpp"

namespace meyer {

inline IntMatrix standard_J(std::size_t genus) {
  if (genus == 0) throw Error(Errc::invalid_argument, "genus must be >= 1");
  IntMatrix j(2 * genus, 2 * genus);
  for (std::size_t i = 0; i < genus; ++i) {
    j(i, genus + i) = 1;
    j(genus + i, i) = -1;
  }
  return j;
}

/// A 2g x 2g integer matrix with A^T J A = J. Checked on construction.
class SymplecticElement {
 public:
  explicit SymplecticElement(IntMatrix mat) : mat_(std::move(mat)) {
    if (!mat_.is_square() || mat_.rows() == 0 || mat_.rows() % 2 != 0)
      throw Error(Errc::dimension_mismatch, "symplectic matrix must be 2g x 2g with g >= 1, got " + mat_.shape());
    genus_ = mat_.rows() / 2;
    const IntMatrix j = standard_J(genus_);
    if (mat_.transpose() * j * mat_ != j) throw Error(Errc::not_symplectic, "A^T J A != J");
  }

  static SymplecticElement identity(std::size_t genus) {
    if (genus == 0) throw Error(Errc::invalid_argument, "genus must be >= 1");
    return SymplecticElement(IntMatrix::identity(2 * genus), genus);
  }

  /// Accepts a rational matrix whose entries happen to be integers.
  static SymplecticElement from_rational(const RatMatrix& m) { return SymplecticElement(to_integer(m)); }

  std::size_t genus() const noexcept { return genus_; }
  std::size_t dim() const noexcept { return 2 * genus_; }
  const IntMatrix& matrix() const noexcept { return mat_; }

  /// J^{-1} A^T J; no elimination needed.
  SymplecticElement inverse() const {
    const IntMatrix j = standard_J(genus_);
    return SymplecticElement(-j * mat_.transpose() * j, genus_);
  }

  SymplecticElement pow(long n) const {
    SymplecticElement base = n < 0 ? inverse() : *this;
    unsigned long e = n < 0 ? static_cast<unsigned long>(-(n + 1)) + 1 : static_cast<unsigned long>(n);
    SymplecticElement acc = identity(genus_);
    while (e) {
      if (e & 1U) acc = acc * base;
      e >>= 1U;
      if (e) base = base * base;
    }
    return acc;
  }

  friend SymplecticElement operator*(const SymplecticElement& a, const SymplecticElement& b) {
    if (a.genus_ != b.genus_)
      throw Error(Errc::genus_mismatch, "product of genus " + std::to_string(a.genus_) + " and genus " +
                                            std::to_string(b.genus_) + " elements");
    return SymplecticElement(a.mat_ * b.mat_, a.genus_);
  }

  friend bool operator==(const SymplecticElement& a, const SymplecticElement& b) { return a.mat_ == b.mat_; }

 private:
  // Closed operations skip the A^T J A check.
  SymplecticElement(IntMatrix mat, std::size_t genus) : mat_(std::move(mat)), genus_(genus) {}

  IntMatrix mat_;
  std::size_t genus_ = 0;
};

/// omega(x, v) = x^T J v for the standard form.
inline BigInt symplectic_pairing(const std::vector<BigInt>& x, const std::vector<BigInt>& v) {
  const std::size_t g = x.size() / 2;
  BigInt s = 0;
  for (std::size_t i = 0; i < g; ++i) s += x[i] * v[g + i] - x[g + i] * v[i];
  return s;
}

/// x -> x + k (x^T J v) v. With k = 1 and g = 1, v = e_1 this is
/// [[1,-1],[0,1]], the homology image of an inverse right-handed Dehn twist
/// about the curve with class v; k = -1 gives the right-handed twist. Flipping
/// the sign of k everywhere corresponds to the opposite orientation
/// convention and flips the sign of every tau value.
inline SymplecticElement transvection(const std::vector<BigInt>& v, long k = 1) {
  if (v.empty() || v.size() % 2 != 0)
    throw Error(Errc::dimension_mismatch, "transvection vector must have even length, got " + std::to_string(v.size()));
  bool nonzero = false;
  for (const auto& x : v) nonzero = nonzero || x != 0;
  if (!nonzero) throw Error(Errc::zero_vector, "transvection along the zero vector");

  const std::size_t n = v.size();
  const IntMatrix j = standard_J(n / 2);
  // column c of the matrix is e_c + k (e_c^T J v) v, and e_c^T J v = (J v)_c
  std::vector<BigInt> jv(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) jv[r] += j(r, c) * v[c];
  IntMatrix m = IntMatrix::identity(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) += BigInt(k) * v[r] * jv[c];
  return SymplecticElement(std::move(m));
}

/// Block sum respecting the symplectic ordering: the result acts on
/// (a, a', b, b') with A on (a, b) and B on (a', b').
inline SymplecticElement direct_sum(const SymplecticElement& a, const SymplecticElement& b) {
  const std::size_t g1 = a.genus(), g2 = b.genus(), g = g1 + g2;
  std::vector<std::size_t> ia(2 * g1), ib(2 * g2);
  for (std::size_t i = 0; i < g1; ++i) {
    ia[i] = i;
    ia[g1 + i] = g + i;
  }
  for (std::size_t i = 0; i < g2; ++i) {
    ib[i] = g1 + i;
    ib[g2 + i] = g + g1 + i;
  }
  IntMatrix m(2 * g, 2 * g);
  for (std::size_t r = 0; r < 2 * g1; ++r)
    for (std::size_t c = 0; c < 2 * g1; ++c) m(ia[r], ia[c]) = a.matrix()(r, c);
  for (std::size_t r = 0; r < 2 * g2; ++r)
    for (std::size_t c = 0; c < 2 * g2; ++c) m(ib[r], ib[c]) = b.matrix()(r, c);
  return SymplecticElement(std::move(m));
}

// ---------------------------------------------------------------------------
// SL(2;Z) words in S = [[0,-1],[1,0]] and T = [[1,1],[0,1]].

enum class Letter { S, S_inv, T, T_inv };

constexpr char letter_char(Letter l) {
  switch (l) {
    case Letter::S: return 'S';
    case Letter::S_inv: return 's';
    case Letter::T: return 'T';
    case Letter::T_inv: return 't';
  }
  return '?';
}

constexpr Letter inverse_letter(Letter l) {
  switch (l) {
    case Letter::S: return Letter::S_inv;
    case Letter::S_inv: return Letter::S;
    case Letter::T: return Letter::T_inv;
    case Letter::T_inv: return Letter::T;
  }
  return l;
}

inline SymplecticElement letter_matrix(Letter l) {
  switch (l) {
    case Letter::S: return SymplecticElement(IntMatrix{{0, -1}, {1, 0}});
    case Letter::S_inv: return SymplecticElement(IntMatrix{{0, 1}, {-1, 0}});
    case Letter::T: return SymplecticElement(IntMatrix{{1, 1}, {0, 1}});
    case Letter::T_inv: return SymplecticElement(IntMatrix{{1, -1}, {0, 1}});
  }
  throw Error(Errc::invalid_argument, "bad letter");
}

struct SL2Word {
  std::vector<Letter> letters;

  /// Letters over {S, s, T, t}; lowercase is the inverse. Empty is the identity.
  std::string str() const {
    std::string s;
    s.reserve(letters.size());
    for (auto l : letters) s.push_back(letter_char(l));
    return s;
  }

  static SL2Word parse(std::string_view text) {
    SL2Word w;
    for (char ch : text) {
      switch (ch) {
        case 'S': w.letters.push_back(Letter::S); break;
        case 's': w.letters.push_back(Letter::S_inv); break;
        case 'T': w.letters.push_back(Letter::T); break;
        case 't': w.letters.push_back(Letter::T_inv); break;
        case ' ': case '\t': case '\n': case '1': break;
        default: throw Error(Errc::parse, std::string("unexpected letter '") + ch + "' in SL(2;Z) word");
      }
    }
    return w;
  }

  SL2Word inverse() const {
    SL2Word w;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) w.letters.push_back(inverse_letter(*it));
    return w;
  }

  friend SL2Word operator*(SL2Word a, const SL2Word& b) {
    a.letters.insert(a.letters.end(), b.letters.begin(), b.letters.end());
    return a;
  }

  friend bool operator==(const SL2Word&, const SL2Word&) = default;
};

inline SymplecticElement evaluate(const SL2Word& w) {
  SymplecticElement m = SymplecticElement::identity(1);
  for (auto l : w.letters) m = m * letter_matrix(l);
  return m;
}

/// Merges adjacent S-runs (exponent mod 4, S^3 written s) and T-runs.
inline SL2Word normalize(const SL2Word& w) {
  struct Run {
    bool is_s;
    long exp;
  };
  std::vector<Run> runs;
  for (auto l : w.letters) {
    const bool is_s = l == Letter::S || l == Letter::S_inv;
    const long e = (l == Letter::S || l == Letter::T) ? 1 : -1;
    if (!runs.empty() && runs.back().is_s == is_s) {
      runs.back().exp += e;
    } else {
      runs.push_back({is_s, e});
    }
    if (runs.back().is_s) runs.back().exp = ((runs.back().exp % 4) + 4) % 4;
    if (runs.back().exp == 0) runs.pop_back();
  }
  SL2Word out;
  for (const auto& r : runs) {
    if (r.is_s) {
      if (r.exp == 3) {
        out.letters.push_back(Letter::S_inv);
      } else {
        out.letters.insert(out.letters.end(), static_cast<std::size_t>(r.exp), Letter::S);
      }
    } else {
      out.letters.insert(out.letters.end(), static_cast<std::size_t>(r.exp < 0 ? -r.exp : r.exp),
                         r.exp < 0 ? Letter::T_inv : Letter::T);
    }
  }
  return out;
}

/// Euclidean reduction strategy. `floor` and `nearest` reduce the first column
/// by left multiplication and differ in the quotient; `row` reduces the bottom
/// row by right multiplication. They generally give different words.
enum class Reduction { floor, nearest, row };

namespace detail {

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;  // truncates toward zero
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

inline BigInt nearest_div(const BigInt& a, const BigInt& b) {
  // round(a/b), ties toward -infinity
  BigInt num = 2 * a + b;
  BigInt den = 2 * b;
  BigInt q = floor_div(num, den);
  if (q * den == num) q -= 1;
  return q;
}

inline void push_power(SL2Word& w, Letter pos, const BigInt& e) {
  const Letter l = e < 0 ? inverse_letter(pos) : pos;
  for (BigInt i = 0, n = abs(e); i < n; ++i) w.letters.push_back(l);
}

}  // namespace detail

namespace detail {

inline SL2Word upper_unipotent_word(const BigInt& a, const BigInt& b) {
  // [[a, b], [0, a]] with a = +-1
  SL2Word w;
  if (a == 1) {
    push_power(w, Letter::T, b);
  } else {
    w.letters = {Letter::S, Letter::S};
    push_power(w, Letter::T, -b);
  }
  return w;
}

inline SL2Word column_reduction_word(BigInt a, BigInt b, BigInt c, BigInt d, Reduction mode) {
  // prefix collects inverses of the applied left factors, in application order
  SL2Word prefix;
  while (c != 0) {
    const BigInt q = mode == Reduction::floor ? floor_div(a, c) : nearest_div(a, c);
    if (q != 0) {
      // T^{-q} on the left
      a -= q * c;
      b -= q * d;
      push_power(prefix, Letter::T, q);
    }
    // S on the left: (a, b; c, d) -> (-c, -d; a, b)
    BigInt na = -c, nb = -d;
    c = std::move(a);
    d = std::move(b);
    a = std::move(na);
    b = std::move(nb);
    prefix.letters.push_back(Letter::S_inv);
  }
  return prefix * upper_unipotent_word(a, b);
}

inline SL2Word row_reduction_word(BigInt a, BigInt b, BigInt c, BigInt d) {
  // suffix collects inverses of the applied right factors, latest first
  std::vector<Letter> applied;
  while (c != 0) {
    const BigInt q = floor_div(d, c);
    if (q != 0) {
      // T^{-q} on the right: column 2 -= q * column 1
      b -= q * a;
      d -= q * c;
      SL2Word tmp;
      push_power(tmp, Letter::T_inv, q);
      applied.insert(applied.end(), tmp.letters.begin(), tmp.letters.end());
    }
    // S on the right: (a, b; c, d) -> (b, -a; d, -c)
    BigInt na = b, nc = d;
    b = -a;
    d = -c;
    a = std::move(na);
    c = std::move(nc);
    applied.push_back(Letter::S);
  }
  SL2Word w = upper_unipotent_word(a, b);
  for (auto it = applied.rbegin(); it != applied.rend(); ++it) w.letters.push_back(inverse_letter(*it));
  return w;
}

}  // namespace detail

/// Word with evaluate(word) == A by Euclidean reduction to +-T^k. -I is
/// written SS and S-exponents are reduced mod 4.
inline SL2Word sl2_word(const IntMatrix& m, Reduction mode = Reduction::floor) {
  if (m.rows() != 2 || m.cols() != 2) throw Error(Errc::dimension_mismatch, "SL(2;Z) element must be 2x2");
  const BigInt det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  if (det != 1) throw Error(Errc::not_unimodular, "determinant is " + det.str() + ", not 1");
  if (mode == Reduction::row) return normalize(detail::row_reduction_word(m(0, 0), m(0, 1), m(1, 0), m(1, 1)));
  return normalize(detail::column_reduction_word(m(0, 0), m(0, 1), m(1, 0), m(1, 1), mode));
}

inline SL2Word sl2_word(const SymplecticElement& a, Reduction mode = Reduction::floor) {
  if (a.genus() != 1) throw Error(Errc::genus_mismatch, "SL(2;Z) words need genus 1");
  return sl2_word(a.matrix(), mode);
}

}  // namespace meyer

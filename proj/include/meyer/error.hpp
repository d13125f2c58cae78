#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace meyer {

enum class Errc {
  // malformed or out-of-domain input
  parse,
  dimension_mismatch,
  not_symplectic,
  not_unimodular,
  zero_vector,
  genus_mismatch,
  excluded_case,
  invalid_argument,
  zero_or_many_unknowns,
  unknown_name,
  // a mathematical contract the inputs were supposed to guarantee failed
  asymmetric_gram,
  inconsistent_relations,
  non_positive_deg_dx,
  genus_zero,
  non_integral_genus,
  negative_genus,
  smooth_germ_nonzero,
};

constexpr std::string_view errc_name(Errc c) {
  switch (c) {
    case Errc::parse: return "ParseError";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::not_symplectic: return "NotSymplectic";
    case Errc::not_unimodular: return "NotUnimodular";
    case Errc::zero_vector: return "ZeroVector";
    case Errc::genus_mismatch: return "GenusMismatch";
    case Errc::excluded_case: return "ExcludedCase";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::zero_or_many_unknowns: return "ZeroOrManyUnknowns";
    case Errc::unknown_name: return "UnknownName";
    case Errc::asymmetric_gram: return "AsymmetricGram";
    case Errc::inconsistent_relations: return "InconsistentRelations";
    case Errc::non_positive_deg_dx: return "NonPositiveDegDX";
    case Errc::genus_zero: return "GenusZero";
    case Errc::non_integral_genus: return "NonIntegralGenus";
    case Errc::negative_genus: return "NegativeGenus";
    case Errc::smooth_germ_nonzero: return "SmoothGermNonzero";
  }
  return "Unknown";
}

/// True for errors that mean "the inputs were accepted but a proven property
/// failed", as opposed to rejected input.
constexpr bool is_contract_violation(Errc c) {
  return c >= Errc::asymmetric_gram;
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace meyer

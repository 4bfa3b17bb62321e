#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "latint/rational.hpp"

namespace latint {

enum class SchemeKind { shapley, banzhaf, custom };

/// Coefficient family of an importance/interaction index.
///
/// Only the importance weights alpha1(k, n) are chosen freely: k is the height
/// of the vertex the derivative is taken at and n the number of attributes.
/// Interaction weights for a target with j non-bottom coordinates follow as
/// alpha(j, k, n) = alpha1(k, n - j + 1), and the Möbius-side weights beta
/// are the binomial sums of the alpha(j, ., n).
class CoefficientScheme {
 public:
  using Alpha1 = std::function<Rational(unsigned k, unsigned n)>;

  /// (n-1-k)! k! / n!
  static CoefficientScheme shapley();
  /// 1 / 2^(n-1)
  static CoefficientScheme banzhaf();
  static CoefficientScheme custom(std::string name, Alpha1 alpha1);
  /// "shapley" or "banzhaf"; throws Error otherwise.
  static CoefficientScheme from_name(std::string_view name);

  const std::string& name() const { return name_; }
  SchemeKind kind() const { return kind_; }

  /// Requires n >= 1 and k <= n - 1; throws IndexOutOfRange.
  Rational alpha1(unsigned k, unsigned n) const;
  /// Requires 1 <= j <= n and k <= n - j.
  Rational alpha(unsigned j, unsigned k, unsigned n) const;
  /// beta^j_{kz}(n) for j <= kz <= n.
  Rational beta(unsigned j, unsigned kz, unsigned n) const;

 private:
  CoefficientScheme(std::string name, SchemeKind kind, Alpha1 alpha1)
      : name_(std::move(name)), kind_(kind), alpha1_(std::move(alpha1)) {}

  std::string name_;
  SchemeKind kind_;
  Alpha1 alpha1_;
};

/// beta^j_kz(n) indexed by kz in [0, n]; entries with kz < j are zero.
std::vector<Rational> beta_from_alpha(const CoefficientScheme& scheme, unsigned j, unsigned n);

/// Inverse of beta_from_alpha: solves the unit-diagonal triangular system for
/// alpha^j_k(n), k = 0..n-j. `beta` is indexed by kz as returned above.
std::vector<Rational> alpha_from_beta(std::span<const Rational> beta, unsigned j, unsigned n);

}  // namespace latint

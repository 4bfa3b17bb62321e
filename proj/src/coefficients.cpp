#include "latint/coefficients.hpp"

#include "latint/errors.hpp"

namespace latint {

CoefficientScheme CoefficientScheme::shapley() {
  return CoefficientScheme("shapley", SchemeKind::shapley,
                           [](unsigned k, unsigned n) { return factorial_ratio(n - 1 - k, k, n); });
}

CoefficientScheme CoefficientScheme::banzhaf() {
  return CoefficientScheme("banzhaf", SchemeKind::banzhaf, [](unsigned, unsigned n) {
    Integer denominator;
    mpz_ui_pow_ui(denominator.get_mpz_t(), 2, n - 1);
    return Rational(Integer(1), denominator);
  });
}

CoefficientScheme CoefficientScheme::custom(std::string name, Alpha1 alpha1) {
  return CoefficientScheme(std::move(name), SchemeKind::custom, std::move(alpha1));
}

CoefficientScheme CoefficientScheme::from_name(std::string_view name) {
  if (name == "shapley") return shapley();
  if (name == "banzhaf") return banzhaf();
  throw Error("unknown coefficient scheme '" + std::string(name) + "'");
}

Rational CoefficientScheme::alpha1(unsigned k, unsigned n) const {
  if (n == 0 || k >= n) {
    throw IndexOutOfRange("alpha1_" + std::to_string(k) + "(" + std::to_string(n) + ") is undefined");
  }
  // custom weights may arrive unreduced; mpq comparisons assume canonical form
  Rational value = alpha1_(k, n);
  value.canonicalize();
  return value;
}

Rational CoefficientScheme::alpha(unsigned j, unsigned k, unsigned n) const {
  if (j == 0 || j > n || k > n - j) {
    throw IndexOutOfRange("alpha^" + std::to_string(j) + "_" + std::to_string(k) + "(" + std::to_string(n) +
                          ") is undefined");
  }
  return alpha1(k, n - j + 1);
}

Rational CoefficientScheme::beta(unsigned j, unsigned kz, unsigned n) const {
  if (j == 0 || j > n || kz < j || kz > n) {
    throw IndexOutOfRange("beta^" + std::to_string(j) + "_" + std::to_string(kz) + "(" + std::to_string(n) +
                          ") is undefined");
  }
  Rational total = 0;
  const unsigned free = n - kz;
  for (unsigned l = 0; l <= free; ++l) total += Rational(binomial(free, l)) * alpha(j, kz - j + l, n);
  return total;
}

std::vector<Rational> beta_from_alpha(const CoefficientScheme& scheme, unsigned j, unsigned n) {
  std::vector<Rational> out(n + 1, Rational(0));
  for (unsigned kz = j; kz <= n; ++kz) out[kz] = scheme.beta(j, kz, n);
  return out;
}

std::vector<Rational> alpha_from_beta(std::span<const Rational> beta, unsigned j, unsigned n) {
  if (j == 0 || j > n) throw IndexOutOfRange("alpha_from_beta needs 1 <= j <= n");
  if (beta.size() != n + 1) throw SizeError("beta must be indexed by k(z) = 0..n");
  std::vector<Rational> alpha(n - j + 1, Rational(0));
  for (unsigned kz = n + 1; kz-- > j;) {
    Rational value = beta[kz];
    const unsigned free = n - kz;
    for (unsigned l = 1; l <= free; ++l) value -= Rational(binomial(free, l)) * alpha[kz - j + l];
    alpha[kz - j] = value;
  }
  return alpha;
}

}  // namespace latint

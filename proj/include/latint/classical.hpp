#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "latint/coefficients.hpp"
#include "latint/function.hpp"
#include "latint/rational.hpp"

namespace latint {

/// Subset of players as a bitmask; bit i is player i (0-based).
using Coalition = std::uint32_t;

inline constexpr unsigned kMaxCapacityPlayers = 24;
inline constexpr unsigned kMaxBiCapacityPlayers = 16;

/// Set function on 2^N stored densely by bitmask.
struct Capacity {
  unsigned n = 0;
  std::vector<Rational> values;  // 2^n entries

  /// Throws SizeError unless values has 2^n entries and n <= kMaxCapacityPlayers.
  static Capacity from_values(unsigned n, std::vector<Rational> values);

  Coalition full() const { return n == 32 ? ~Coalition{0} : (Coalition{1} << n) - 1; }
  const Rational& operator()(Coalition s) const { return values[s]; }
};

/// (A, B) with A the positive and B the negative players.
struct BiCoalition {
  Coalition positive = 0;
  Coalition negative = 0;

  friend bool operator==(const BiCoalition&, const BiCoalition&) = default;
};

/// Function on Q(N) stored densely in base 3: player i contributes digit
/// 0 when in B, 1 when in neither and 2 when in A, at weight 3^i. Digit
/// order is the order -1 < 0 < 1 of the ternary scale.
struct BiCapacity {
  unsigned n = 0;
  std::vector<Rational> values;  // 3^n entries

  /// Throws SizeError unless values has 3^n entries and n <= kMaxBiCapacityPlayers.
  static BiCapacity from_values(unsigned n, std::vector<Rational> values);

  /// Throws NotDisjoint.
  std::uint64_t index(Coalition a, Coalition b) const;
  BiCoalition coalition(std::uint64_t index) const;
  const Rational& operator()(Coalition a, Coalition b) const { return values[index(a, b)]; }
  Coalition full() const { return (Coalition{1} << n) - 1; }
};

// Capacities.

/// Marginal contributions weighted by (n-s-1)! s! / n!. Throws IndexOutOfRange.
Rational shapley_value(const Capacity& c, unsigned player);
/// Average marginal contribution with weight 1 / 2^(n-1).
Rational banzhaf_value(const Capacity& c, unsigned player);
/// Sum over T in N \ S of alpha^s_t(n) Delta_S v(T). Throws EmptyCoalition.
Rational interaction_index(const Capacity& c, Coalition s, const CoefficientScheme& scheme);
/// I(S) for every coalition, indexed by bitmask, from the Möbius transform:
/// I(S) = sum over R containing S of beta^s_r(n) m(R). Entry 0 is zero.
std::vector<Rational> all_interactions(const Capacity& c, const CoefficientScheme& scheme, unsigned threads = 1);
/// Möbius transform by the subset-sum recurrence.
std::vector<Rational> capacity_mobius(const Capacity& c);

struct CapacityReport {
  bool is_game = false;
  bool is_normalized = false;
  bool is_monotone = false;
  /// First (A, A + i) with v(A) > v(A + i).
  std::optional<std::pair<Coalition, Coalition>> violation;
};
CapacityReport validate(const Capacity& c);

/// v restricted to N \ K; the remaining players keep their relative order.
Capacity restrict_game(const Capacity& c, Coalition k);
/// Players of S merged into one player appended after the players of N \ S.
Capacity reduce_game(const Capacity& c, Coalition s);

struct ClassicalRecursionResult {
  Rational lhs;
  Rational rhs;
  bool pass = false;
};
/// I^v(S) against I^{v_[S]}([S]) - sum over nonempty proper K of I^{v^(N\K)}(S \ K).
ClassicalRecursionResult classical_recursion_check(const Capacity& c, Coalition s, const CoefficientScheme& scheme);

// Bi-capacities.

/// I(i, {}) for positive = true, I({}, i) otherwise, with Shapley weights.
Rational bicap_importance(const BiCapacity& b, unsigned player, bool positive);
/// I_{S,T}: S the positive and T the negative players of the interaction.
/// Throws NotDisjoint and EmptyCoalition when both are empty.
Rational bicap_interaction(const BiCapacity& b, Coalition s, Coalition t,
                           const CoefficientScheme& scheme = CoefficientScheme::shapley());
/// Möbius transform over Q(N), one ternary axis at a time.
std::vector<Rational> bicap_mobius(const BiCapacity& b);
/// Shapley I(A, B) in element notation (so I_{S,T} = I(S, N \ (S u T))) as
/// the 1 / (t - t' + 1)-weighted Möbius mass of [(A, B), (A u B, {})].
/// `m` is laid out like BiCapacity::values. Throws NotDisjoint and EmptyTarget
/// when B = N.
Rational bicap_interaction_mobius(const std::vector<Rational>& m, unsigned n, Coalition a, Coalition b);

struct BiCapacityReport {
  /// v(N, {}) = 1, v({}, {}) = 0 and v({}, N) = -1.
  bool boundary = false;
  bool is_monotone = false;
  /// First covering pair (lower, upper) in Q(N) with v(lower) > v(upper).
  std::optional<std::pair<BiCoalition, BiCoalition>> violation;
};
BiCapacityReport validate(const BiCapacity& b);

// Views on the general engine.

/// c on the product of n copies of the 2-chain "0" < "1", attribute k being player k.
ProductFunction as_product_function(const Capacity& c);
/// b on the product of n copies of the chain "-1" < "0" < "1".
ProductFunction as_product_function(const BiCapacity& b);

}  // namespace latint

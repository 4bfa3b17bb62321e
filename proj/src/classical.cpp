#include "latint/classical.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <thread>

#include "latint/errors.hpp"
#include "latint/lattice.hpp"
#include "latint/transforms.hpp"

namespace latint {

namespace {

unsigned popcount(Coalition s) { return static_cast<unsigned>(std::popcount(s)); }

void require_player(unsigned player, unsigned n) {
  if (player >= n) {
    throw IndexOutOfRange("player " + std::to_string(player) + " out of range for " + std::to_string(n) + " players");
  }
}

void require_coalition(Coalition s, unsigned n) {
  if (n < 32 && (s >> n) != 0) throw IndexOutOfRange("coalition mentions a player beyond " + std::to_string(n));
}

std::uint64_t pow3(unsigned e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= 3;
  return r;
}

// Delta_S v(T) = sum over L in S of (-1)^(s-l) v(T u L).
Rational capacity_derivative(const Capacity& c, Coalition s, Coalition t) {
  Rational total = 0;
  const unsigned size = popcount(s);
  for (Coalition l = s;; l = (l - 1) & s) {
    if ((size - popcount(l)) % 2 == 0) {
      total += c(t | l);
    } else {
      total -= c(t | l);
    }
    if (l == 0) break;
  }
  return total;
}

// Delta_{S,T} v(A, B) = sum over S' in S, T' in T of the signed v(A u S', B \ T').
Rational bicap_derivative(const BiCapacity& b, Coalition s, Coalition t, Coalition a, Coalition neg) {
  Rational total = 0;
  const unsigned size = popcount(s) + popcount(t);
  for (Coalition sp = s;; sp = (sp - 1) & s) {
    for (Coalition tp = t;; tp = (tp - 1) & t) {
      const Rational& value = b(a | sp, neg & ~tp);
      if ((size - popcount(sp) - popcount(tp)) % 2 == 0) {
        total += value;
      } else {
        total -= value;
      }
      if (tp == 0) break;
    }
    if (sp == 0) break;
  }
  return total;
}

// Reindexes the players of `kept` (ascending) to 0..|kept|-1.
Coalition compress(Coalition s, Coalition kept) {
  Coalition out = 0;
  unsigned position = 0;
  for (unsigned i = 0; i < 32; ++i) {
    if (!(kept & (Coalition{1} << i))) continue;
    if (s & (Coalition{1} << i)) out |= Coalition{1} << position;
    ++position;
  }
  return out;
}

Coalition expand(Coalition s, Coalition kept) {
  Coalition out = 0;
  unsigned position = 0;
  for (unsigned i = 0; i < 32; ++i) {
    if (!(kept & (Coalition{1} << i))) continue;
    if (s & (Coalition{1} << position)) out |= Coalition{1} << i;
    ++position;
  }
  return out;
}

}  // namespace

Capacity Capacity::from_values(unsigned n, std::vector<Rational> values) {
  if (n > kMaxCapacityPlayers) throw SizeError("capacities are limited to " + std::to_string(kMaxCapacityPlayers) + " players");
  if (values.size() != (std::size_t{1} << n)) {
    throw SizeError("capacity on " + std::to_string(n) + " players needs " + std::to_string(std::size_t{1} << n) +
                    " values, got " + std::to_string(values.size()));
  }
  return Capacity{n, std::move(values)};
}

BiCapacity BiCapacity::from_values(unsigned n, std::vector<Rational> values) {
  if (n > kMaxBiCapacityPlayers) {
    throw SizeError("bi-capacities are limited to " + std::to_string(kMaxBiCapacityPlayers) + " players");
  }
  if (values.size() != pow3(n)) {
    throw SizeError("bi-capacity on " + std::to_string(n) + " players needs " + std::to_string(pow3(n)) +
                    " values, got " + std::to_string(values.size()));
  }
  return BiCapacity{n, std::move(values)};
}

std::uint64_t BiCapacity::index(Coalition a, Coalition b) const {
  if (a & b) throw NotDisjoint("positive and negative coalitions overlap");
  require_coalition(a | b, n);
  std::uint64_t index = 0;
  std::uint64_t weight = 1;
  for (unsigned i = 0; i < n; ++i, weight *= 3) {
    const Coalition bit = Coalition{1} << i;
    index += weight * ((a & bit) ? 2 : (b & bit) ? 0 : 1);
  }
  return index;
}

BiCoalition BiCapacity::coalition(std::uint64_t index) const {
  BiCoalition out;
  for (unsigned i = 0; i < n; ++i, index /= 3) {
    const unsigned digit = static_cast<unsigned>(index % 3);
    if (digit == 2) out.positive |= Coalition{1} << i;
    if (digit == 0) out.negative |= Coalition{1} << i;
  }
  return out;
}

Rational shapley_value(const Capacity& c, unsigned player) {
  require_player(player, c.n);
  const Coalition bit = Coalition{1} << player;
  const Coalition others = c.full() & ~bit;
  std::vector<Rational> weight(c.n);
  for (unsigned s = 0; s < c.n; ++s) weight[s] = factorial_ratio(c.n - s - 1, s, c.n);
  Rational total = 0;
  for (Coalition s = others;; s = (s - 1) & others) {
    total += weight[popcount(s)] * (c(s | bit) - c(s));
    if (s == 0) break;
  }
  return total;
}

Rational banzhaf_value(const Capacity& c, unsigned player) {
  require_player(player, c.n);
  const Coalition bit = Coalition{1} << player;
  const Coalition others = c.full() & ~bit;
  Rational total = 0;
  for (Coalition s = others;; s = (s - 1) & others) {
    total += c(s | bit) - c(s);
    if (s == 0) break;
  }
  Integer denominator;
  mpz_ui_pow_ui(denominator.get_mpz_t(), 2, c.n - 1);
  return total / Rational(denominator);
}

Rational interaction_index(const Capacity& c, Coalition s, const CoefficientScheme& scheme) {
  if (s == 0) throw EmptyCoalition("interaction of the empty coalition");
  require_coalition(s, c.n);
  const unsigned size = popcount(s);
  const Coalition rest = c.full() & ~s;
  std::vector<Rational> alpha(c.n - size + 1);
  for (unsigned t = 0; t + size <= c.n; ++t) alpha[t] = scheme.alpha(size, t, c.n);
  Rational total = 0;
  for (Coalition t = rest;; t = (t - 1) & rest) {
    total += alpha[popcount(t)] * capacity_derivative(c, s, t);
    if (t == 0) break;
  }
  return total;
}

std::vector<Rational> capacity_mobius(const Capacity& c) {
  std::vector<Rational> m = c.values;
  fast_boolean_mobius(std::span<Rational>(m), kMaxCapacityPlayers);
  return m;
}

std::vector<Rational> all_interactions(const Capacity& c, const CoefficientScheme& scheme, unsigned threads) {
  const std::vector<Rational> m = capacity_mobius(c);
  const unsigned n = c.n;
  // beta[s][r] for 1 <= s <= r <= n
  std::vector<std::vector<Rational>> beta(n + 1);
  for (unsigned s = 1; s <= n; ++s) beta[s] = beta_from_alpha(scheme, s, n);

  const std::size_t count = std::size_t{1} << n;
  std::vector<Rational> out(count, Rational(0));
  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t index = first; index < count; index += stride) {
      const Coalition s = static_cast<Coalition>(index);
      if (s == 0) continue;
      const std::vector<Rational>& row = beta[popcount(s)];
      const Coalition rest = c.full() & ~s;
      Rational total = 0;
      for (Coalition extra = rest;; extra = (extra - 1) & rest) {
        const Coalition r = s | extra;
        if (sgn(m[r]) != 0) total += row[popcount(r)] * m[r];
        if (extra == 0) break;
      }
      out[index] = std::move(total);
    }
  };
  threads = std::max(1u, threads);
  if (threads == 1 || n < 6) {
    work(0, 1);
  } else {
    // interleaved so that every worker gets a mix of small and large coalitions
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w, threads);
    for (auto& th : pool) th.join();
  }
  return out;
}

CapacityReport validate(const Capacity& c) {
  CapacityReport report;
  report.is_game = sgn(c(0)) == 0;
  report.is_normalized = c(c.full()) == 1;
  report.is_monotone = true;
  for (Coalition a = 0; a <= c.full() && report.is_monotone; ++a) {
    for (unsigned i = 0; i < c.n; ++i) {
      const Coalition bit = Coalition{1} << i;
      if (a & bit) continue;
      if (c(a) > c(a | bit)) {
        report.is_monotone = false;
        report.violation = std::make_pair(a, a | bit);
        break;
      }
    }
    if (a == c.full()) break;
  }
  return report;
}

Capacity restrict_game(const Capacity& c, Coalition k) {
  require_coalition(k, c.n);
  const Coalition kept = c.full() & ~k;
  const unsigned n = popcount(kept);
  std::vector<Rational> values(std::size_t{1} << n);
  for (Coalition s = 0; s < values.size(); ++s) values[s] = c(expand(s, kept));
  return Capacity{n, std::move(values)};
}

Capacity reduce_game(const Capacity& c, Coalition s) {
  if (s == 0) throw EmptyCoalition("cannot reduce to the empty coalition");
  require_coalition(s, c.n);
  const Coalition kept = c.full() & ~s;
  const unsigned rest = popcount(kept);
  const unsigned n = rest + 1;
  const Coalition merged = Coalition{1} << rest;
  std::vector<Rational> values(std::size_t{1} << n);
  for (Coalition t = 0; t < values.size(); ++t) {
    const Coalition original = expand(t & ~merged, kept);
    values[t] = c((t & merged) ? (original | s) : original);
  }
  return Capacity{n, std::move(values)};
}

ClassicalRecursionResult classical_recursion_check(const Capacity& c, Coalition s, const CoefficientScheme& scheme) {
  ClassicalRecursionResult result;
  result.lhs = interaction_index(c, s, scheme);
  const Capacity reduced = reduce_game(c, s);
  result.rhs = interaction_index(reduced, Coalition{1} << (reduced.n - 1), scheme);
  for (Coalition k = (s - 1) & s; k != 0; k = (k - 1) & s) {
    const Capacity restricted = restrict_game(c, k);
    result.rhs -= interaction_index(restricted, compress(s & ~k, c.full() & ~k), scheme);
  }
  result.pass = result.lhs == result.rhs;
  return result;
}

Rational bicap_importance(const BiCapacity& b, unsigned player, bool positive) {
  require_player(player, b.n);
  const Coalition bit = Coalition{1} << player;
  const Coalition others = b.full() & ~bit;
  Rational total = 0;
  for (Coalition s = others;; s = (s - 1) & others) {
    const Rational weight = factorial_ratio(b.n - popcount(s) - 1, popcount(s), b.n);
    if (positive) {
      // Delta_{i,{}} v(S, N \ (S u i))
      const Coalition neg = others & ~s;
      total += weight * (b(s | bit, neg) - b(s, neg));
    } else {
      // Delta_{{},i} v(S, N \ S)
      const Coalition neg = b.full() & ~s;
      total += weight * (b(s, neg & ~bit) - b(s, neg));
    }
    if (s == 0) break;
  }
  return total;
}

Rational bicap_interaction(const BiCapacity& b, Coalition s, Coalition t, const CoefficientScheme& scheme) {
  if (s & t) throw NotDisjoint("positive and negative coalitions overlap");
  if ((s | t) == 0) throw EmptyCoalition("interaction of the empty pair");
  require_coalition(s | t, b.n);
  const unsigned size = popcount(s | t);
  const Coalition rest = b.full() & ~(s | t);
  std::vector<Rational> alpha(b.n - size + 1);
  for (unsigned k = 0; k + size <= b.n; ++k) alpha[k] = scheme.alpha(size, k, b.n);
  Rational total = 0;
  for (Coalition k = rest;; k = (k - 1) & rest) {
    total += alpha[popcount(k)] * bicap_derivative(b, s, t, k, b.full() & ~(k | s));
    if (k == 0) break;
  }
  return total;
}

std::vector<Rational> bicap_mobius(const BiCapacity& b) {
  std::vector<Rational> m = b.values;
  std::uint64_t weight = 1;
  for (unsigned axis = 0; axis < b.n; ++axis, weight *= 3) {
    for (std::uint64_t index = 0; index < m.size(); ++index) {
      const unsigned digit = static_cast<unsigned>((index / weight) % 3);
      if (digit != 0) continue;
      // chain -1 < 0 < 1 along this axis
      m[index + 2 * weight] -= m[index + weight];
      m[index + weight] -= m[index];
    }
  }
  return m;
}

Rational bicap_interaction_mobius(const std::vector<Rational>& m, unsigned n, Coalition a, Coalition b) {
  if (a & b) throw NotDisjoint("positive and negative coalitions overlap");
  if (n > kMaxBiCapacityPlayers || m.size() != pow3(n)) throw SizeError("Möbius vector does not match 3^n");
  require_coalition(a | b, n);
  const Coalition full = (Coalition{1} << n) - 1;
  if (b == full) throw EmptyTarget("(∅, N) is the bottom element");
  const BiCapacity layout{n, {}};
  const unsigned t = popcount(b);
  Rational total = 0;
  // [(A, B), (A u B, {})]: B' ranges over subsets of B, A' = A u (B \ B') plus
  // any part of B \ B' left neutral.
  for (Coalition bp = b;; bp = (bp - 1) & b) {
    const Coalition moved = b & ~bp;
    for (Coalition up = moved;; up = (up - 1) & moved) {
      const Rational weight(1, t - popcount(bp) + 1);
      total += weight * m[layout.index(a | up, bp)];
      if (up == 0) break;
    }
    if (bp == 0) break;
  }
  return total;
}

BiCapacityReport validate(const BiCapacity& b) {
  BiCapacityReport report;
  const Coalition full = b.full();
  report.boundary = b(full, 0) == 1 && sgn(b(0, 0)) == 0 && b(0, full) == -1;
  report.is_monotone = true;
  // covering steps of Q(N): a player moves from B to neutral or from neutral to A
  for (std::uint64_t index = 0; index < b.values.size() && report.is_monotone; ++index) {
    const BiCoalition lower = b.coalition(index);
    for (unsigned i = 0; i < b.n; ++i) {
      const Coalition bit = Coalition{1} << i;
      BiCoalition upper = lower;
      if (lower.negative & bit) {
        upper.negative &= ~bit;
      } else if (!(lower.positive & bit)) {
        upper.positive |= bit;
      } else {
        continue;
      }
      if (b(lower.positive, lower.negative) > b(upper.positive, upper.negative)) {
        report.is_monotone = false;
        report.violation = std::make_pair(lower, upper);
        break;
      }
    }
  }
  return report;
}

ProductFunction as_product_function(const Capacity& c) {
  auto P = make_power(make_boolean(), c.n);
  std::vector<Rational> values(P->size());
  for (std::uint64_t index = 0; index < values.size(); ++index) {
    const ProductElement x = P->element_at(index);
    Coalition s = 0;
    for (unsigned k = 0; k < c.n; ++k) {
      if (x[k] == P->lattice(k).top()) s |= Coalition{1} << k;
    }
    values[index] = c(s);
  }
  return ProductFunction::dense(P, std::move(values));
}

ProductFunction as_product_function(const BiCapacity& b) {
  auto P = make_power(make_ternary(), b.n);
  std::vector<Rational> values(P->size());
  for (std::uint64_t index = 0; index < values.size(); ++index) {
    const ProductElement x = P->element_at(index);
    Coalition a = 0;
    Coalition neg = 0;
    for (unsigned k = 0; k < b.n; ++k) {
      if (x[k] == P->lattice(k).top()) a |= Coalition{1} << k;
      if (x[k] == P->lattice(k).bottom()) neg |= Coalition{1} << k;
    }
    values[index] = b(a, neg);
  }
  return ProductFunction::dense(P, std::move(values));
}

}  // namespace latint

#include "latint/lattice.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <unordered_map>

#include "latint/errors.hpp"

namespace latint {

namespace {

constexpr ElementId kNone = static_cast<ElementId>(-1);

std::vector<ElementId> bits_to_ids(const Bitset& bits) {
  std::vector<ElementId> out;
  out.reserve(bits.count());
  for (auto i = bits.find_first(); i != Bitset::npos; i = bits.find_next(i)) {
    out.push_back(static_cast<ElementId>(i));
  }
  return out;
}

bool has_m3_sublattice(const FiniteLattice& L) {
  const auto m = static_cast<ElementId>(L.size());
  for (ElementId a = 0; a < m; ++a) {
    for (ElementId b = a + 1; b < m; ++b) {
      if (L.comparable(a, b)) continue;
      const ElementId j = L.join(a, b);
      const ElementId mt = L.meet(a, b);
      for (ElementId c = b + 1; c < m; ++c) {
        if (L.comparable(a, c) || L.comparable(b, c)) continue;
        if (L.join(a, c) == j && L.join(b, c) == j && L.meet(a, c) == mt && L.meet(b, c) == mt) {
          return true;
        }
      }
    }
  }
  return false;
}

// {0, a < b, c, 1} with c joining and meeting a and b to the same elements.
bool has_n5_sublattice(const FiniteLattice& L) {
  const auto m = static_cast<ElementId>(L.size());
  for (ElementId a = 0; a < m; ++a) {
    for (ElementId b = 0; b < m; ++b) {
      if (!L.less(a, b)) continue;
      for (ElementId c = 0; c < m; ++c) {
        if (L.comparable(a, c)) continue;
        if (L.join(a, c) == L.join(b, c) && L.meet(a, c) == L.meet(b, c)) return true;
      }
    }
  }
  return false;
}

bool is_distributive_by_law(const FiniteLattice& L) {
  const auto m = static_cast<ElementId>(L.size());
  for (ElementId x = 0; x < m; ++x) {
    for (ElementId y = 0; y < m; ++y) {
      const ElementId xy = L.meet(x, y);
      for (ElementId z = y + 1; z < m; ++z) {
        if (L.meet(x, L.join(y, z)) != L.join(xy, L.meet(x, z))) return false;
      }
    }
  }
  return true;
}

bool is_lower_semimodular(const FiniteLattice& L) {
  const auto m = static_cast<ElementId>(L.size());
  for (ElementId x = 0; x < m; ++x) {
    for (ElementId y = x + 1; y < m; ++y) {
      const ElementId j = L.join(x, y);
      if (!L.covers(j, x) || !L.covers(j, y)) continue;
      const ElementId mt = L.meet(x, y);
      if (!L.covers(x, mt) || !L.covers(y, mt)) return false;
    }
  }
  return true;
}

bool is_complemented(const FiniteLattice& L) {
  const auto m = static_cast<ElementId>(L.size());
  for (ElementId x = 0; x < m; ++x) {
    bool found = false;
    for (ElementId y = 0; y < m && !found; ++y) {
      found = L.join(x, y) == L.top() && L.meet(x, y) == L.bottom();
    }
    if (!found) return false;
  }
  return true;
}

StructureFlags compute_flags(const FiniteLattice& L) {
  StructureFlags f;
  const auto m = static_cast<ElementId>(L.size());

  f.is_linear = true;
  for (ElementId x = 0; x < m && f.is_linear; ++x) {
    for (ElementId y = x + 1; y < m; ++y) {
      if (!L.comparable(x, y)) {
        f.is_linear = false;
        break;
      }
    }
  }

  f.is_lattice = L.is_lattice();
  if (!f.is_lattice) {
    f.is_linear = false;
    return f;
  }

  f.is_distributive = is_distributive_by_law(L);
  f.is_modular = !has_n5_sublattice(L);
  f.is_lower_semimodular = is_lower_semimodular(L);
  f.is_lower_locally_distributive = f.is_lower_semimodular && !has_m3_sublattice(L);
  f.is_boolean = f.is_distributive && is_complemented(L);

  f.is_atomistic = true;
  for (ElementId x = 0; x < m; ++x) {
    if (L.lower_covers(x).size() == 1 && L.lower_covers(x).front() != L.bottom()) {
      f.is_atomistic = false;
      break;
    }
  }
  return f;
}

}  // namespace

ElementId JoinIrreducibleSet::predecessor_of(ElementId x) const {
  auto it = std::lower_bound(members.begin(), members.end(), x);
  if (it == members.end() || *it != x) {
    throw NotJoinIrreducible("element " + std::to_string(x) + " is not join-irreducible");
  }
  return predecessor[static_cast<std::size_t>(it - members.begin())];
}

std::optional<ElementId> FiniteLattice::find(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<ElementId>(i);
  }
  return std::nullopt;
}

ElementId FiniteLattice::id_of(std::string_view label) const {
  if (auto id = find(label)) return *id;
  throw UnknownLabel("unknown element label '" + std::string(label) + "'");
}

ElementId FiniteLattice::join(ElementId a, ElementId b) const {
  if (!flags_.is_lattice) throw NotALattice("join requested on a poset that is not a lattice");
  return join_table_[static_cast<std::size_t>(a) * size() + b];
}

ElementId FiniteLattice::meet(ElementId a, ElementId b) const {
  if (!flags_.is_lattice) throw NotALattice("meet requested on a poset that is not a lattice");
  return meet_table_[static_cast<std::size_t>(a) * size() + b];
}

ElementId FiniteLattice::join_all(std::span<const ElementId> xs) const {
  ElementId acc = bottom_;
  for (ElementId x : xs) acc = join(acc, x);
  return acc;
}

FiniteLattice build_lattice(std::vector<std::string> labels,
                            const std::vector<std::pair<std::string, std::string>>& cover_pairs) {
  std::unordered_map<std::string, ElementId> index;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!index.emplace(labels[i], static_cast<ElementId>(i)).second) {
      throw DuplicateLabel("duplicate element label '" + labels[i] + "'");
    }
  }
  std::vector<std::pair<ElementId, ElementId>> ids;
  ids.reserve(cover_pairs.size());
  for (const auto& [lower, upper] : cover_pairs) {
    auto lo = index.find(lower);
    auto up = index.find(upper);
    if (lo == index.end()) throw UnknownLabel("cover pair references unknown label '" + lower + "'");
    if (up == index.end()) throw UnknownLabel("cover pair references unknown label '" + upper + "'");
    ids.emplace_back(lo->second, up->second);
  }
  return build_lattice(std::move(labels), ids);
}

FiniteLattice build_lattice(std::vector<std::string> labels,
                            const std::vector<std::pair<ElementId, ElementId>>& cover_pairs) {
  FiniteLattice L;
  const std::size_t m = labels.size();
  if (m == 0) throw NoBottom("empty element set");
  {
    std::set<std::string> seen;
    for (const auto& l : labels) {
      if (!seen.insert(l).second) throw DuplicateLabel("duplicate element label '" + l + "'");
    }
  }
  L.labels_ = std::move(labels);

  L.cover_down_.assign(m, Bitset(m));
  L.lower_covers_.assign(m, {});
  L.upper_covers_.assign(m, {});
  for (const auto& [lower, upper] : cover_pairs) {
    if (lower >= m || upper >= m) throw UnknownLabel("cover pair references an unknown element id");
    if (lower == upper) throw CycleError("element '" + L.labels_[lower] + "' covers itself");
    if (L.cover_down_[upper].test(lower)) {
      throw NotTransitivelyReduced("duplicate cover pair ('" + L.labels_[lower] + "', '" +
                                   L.labels_[upper] + "')");
    }
    L.cover_down_[upper].set(lower);
    L.lower_covers_[upper].push_back(lower);
    L.upper_covers_[lower].push_back(upper);
    L.cover_pairs_.emplace_back(lower, upper);
  }
  for (auto& v : L.lower_covers_) std::sort(v.begin(), v.end());
  for (auto& v : L.upper_covers_) std::sort(v.begin(), v.end());
  std::sort(L.cover_pairs_.begin(), L.cover_pairs_.end());

  // Kahn ordering with smallest-id tie break.
  std::vector<std::size_t> indegree(m, 0);
  for (std::size_t x = 0; x < m; ++x) indegree[x] = L.lower_covers_[x].size();
  std::priority_queue<ElementId, std::vector<ElementId>, std::greater<>> ready;
  for (std::size_t x = 0; x < m; ++x) {
    if (indegree[x] == 0) ready.push(static_cast<ElementId>(x));
  }
  while (!ready.empty()) {
    const ElementId x = ready.top();
    ready.pop();
    L.order_.push_back(x);
    for (ElementId y : L.upper_covers_[x]) {
      if (--indegree[y] == 0) ready.push(y);
    }
  }
  if (L.order_.size() != m) throw CycleError("cover relation contains a cycle");
  L.rank_.assign(m, 0);
  for (std::size_t r = 0; r < m; ++r) L.rank_[L.order_[r]] = r;

  L.down_.assign(m, Bitset(m));
  for (ElementId x : L.order_) {
    L.down_[x].set(x);
    for (ElementId y : L.lower_covers_[x]) L.down_[x] |= L.down_[y];
  }
  L.up_.assign(m, Bitset(m));
  for (std::size_t x = 0; x < m; ++x) {
    for (auto y = L.down_[x].find_first(); y != Bitset::npos; y = L.down_[x].find_next(y)) {
      L.up_[y].set(x);
    }
  }

  for (const auto& [lower, upper] : L.cover_pairs_) {
    if ((L.up_[lower] & L.down_[upper]).count() != 2) {
      throw NotTransitivelyReduced("cover pair ('" + L.labels_[lower] + "', '" + L.labels_[upper] +
                                   "') is implied by other pairs");
    }
  }

  std::vector<ElementId> minimal, maximal;
  for (std::size_t x = 0; x < m; ++x) {
    if (L.lower_covers_[x].empty()) minimal.push_back(static_cast<ElementId>(x));
    if (L.upper_covers_[x].empty()) maximal.push_back(static_cast<ElementId>(x));
  }
  if (minimal.size() != 1) throw NoBottom("poset has " + std::to_string(minimal.size()) + " minimal elements");
  if (maximal.size() != 1) throw NoTop("poset has " + std::to_string(maximal.size()) + " maximal elements");
  L.bottom_ = minimal.front();
  L.top_ = maximal.front();

  // Least upper bound = the upper bound with the smallest down-set, if every
  // other upper bound lies above it. Meets dually.
  std::vector<std::size_t> down_count(m), up_count(m);
  for (std::size_t x = 0; x < m; ++x) {
    down_count[x] = L.down_[x].count();
    up_count[x] = L.up_[x].count();
  }
  bool lattice = true;
  L.join_table_.assign(m * m, kNone);
  L.meet_table_.assign(m * m, kNone);
  for (std::size_t a = 0; a < m && lattice; ++a) {
    for (std::size_t b = a; b < m; ++b) {
      const Bitset ub = L.up_[a] & L.up_[b];
      std::size_t best = Bitset::npos;
      for (auto u = ub.find_first(); u != Bitset::npos; u = ub.find_next(u)) {
        if (best == Bitset::npos || down_count[u] < down_count[best]) best = u;
      }
      if (best == Bitset::npos || !ub.is_subset_of(L.up_[best])) {
        lattice = false;
        break;
      }
      const Bitset lb = L.down_[a] & L.down_[b];
      std::size_t low = Bitset::npos;
      for (auto u = lb.find_first(); u != Bitset::npos; u = lb.find_next(u)) {
        if (low == Bitset::npos || up_count[u] < up_count[low]) low = u;
      }
      if (low == Bitset::npos || !lb.is_subset_of(L.down_[low])) {
        lattice = false;
        break;
      }
      L.join_table_[a * m + b] = L.join_table_[b * m + a] = static_cast<ElementId>(best);
      L.meet_table_[a * m + b] = L.meet_table_[b * m + a] = static_cast<ElementId>(low);
    }
  }
  if (!lattice) {
    L.join_table_.clear();
    L.meet_table_.clear();
  }
  L.flags_.is_lattice = lattice;

  L.irreducibles_.membership = Bitset(m);
  for (std::size_t x = 0; x < m; ++x) {
    if (L.lower_covers_[x].size() == 1) {
      L.irreducibles_.members.push_back(static_cast<ElementId>(x));
      L.irreducibles_.predecessor.push_back(L.lower_covers_[x].front());
      L.irreducibles_.membership.set(x);
    }
  }

  L.flags_ = compute_flags(L);
  return L;
}

const StructureFlags& classify(const FiniteLattice& lattice) { return lattice.flags(); }

const JoinIrreducibleSet& join_irreducibles(const FiniteLattice& lattice) {
  return lattice.join_irreducibles();
}

std::vector<ElementId> normal_decomposition(const FiniteLattice& lattice, ElementId x) {
  return bits_to_ids(lattice.down_row(x) & lattice.join_irreducibles().membership);
}

std::vector<ElementId> minimal_decomposition(const FiniteLattice& L, ElementId x) {
  if (!L.is_lattice()) throw NotALattice("minimal decomposition needs a lattice");
  const std::vector<ElementId> eta = normal_decomposition(L, x);

  if (L.flags().is_lower_locally_distributive) {
    std::vector<ElementId> kept;
    for (ElementId i : eta) {
      bool dominated = false;
      for (ElementId j : eta) {
        if (L.less(i, j)) {
          dominated = true;
          break;
        }
      }
      if (!dominated) kept.push_back(i);
    }
    if (L.join_all(kept) != x) {
      throw NotLLDError("maximal join-irreducibles below '" + L.label(x) + "' do not join to it");
    }
    for (std::size_t pos = 0; pos < kept.size();) {
      std::vector<ElementId> rest = kept;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pos));
      if (L.join_all(rest) == x) {
        kept = std::move(rest);
      } else {
        ++pos;
      }
    }
    return kept;
  }

  if (eta.size() > 24) {
    throw NotLLDError("cannot verify a unique minimal decomposition of '" + L.label(x) + "'");
  }
  const std::size_t k = eta.size();
  std::vector<std::uint32_t> best;
  int best_size = -1;
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    const int size = __builtin_popcount(mask);
    if (best_size >= 0 && size > best_size) continue;
    std::vector<ElementId> chosen;
    for (std::size_t b = 0; b < k; ++b) {
      if (mask & (1u << b)) chosen.push_back(eta[b]);
    }
    if (L.join_all(chosen) != x) continue;
    if (best_size < 0 || size < best_size) {
      best_size = size;
      best.clear();
    }
    best.push_back(mask);
  }
  if (best.size() != 1) {
    throw NotLLDError("element '" + L.label(x) + "' has " + std::to_string(best.size()) +
                      " minimal join-irreducible decompositions");
  }
  std::vector<ElementId> out;
  for (std::size_t b = 0; b < k; ++b) {
    if (best.front() & (1u << b)) out.push_back(eta[b]);
  }
  return out;
}

Decomposition decompose(const FiniteLattice& lattice, ElementId x) {
  return {normal_decomposition(lattice, x), minimal_decomposition(lattice, x)};
}

std::vector<ElementId> downset(const FiniteLattice& lattice, ElementId x) {
  return bits_to_ids(lattice.down_row(x));
}

std::vector<ElementId> interval(const FiniteLattice& lattice, ElementId a, ElementId b) {
  if (!lattice.leq(a, b)) {
    throw OrderError("interval bounds '" + lattice.label(a) + "' and '" + lattice.label(b) +
                     "' are not ordered");
  }
  return bits_to_ids(lattice.up_row(a) & lattice.down_row(b));
}

bool is_boolean_interval(const FiniteLattice& L, ElementId a, ElementId b) {
  const std::vector<ElementId> members = interval(L, a, b);
  std::vector<ElementId> atoms;
  for (ElementId z : members) {
    if (L.covers(z, a)) atoms.push_back(z);
  }
  const std::size_t k = atoms.size();
  if (k >= 31 || members.size() != (std::size_t{1} << k)) return false;

  Bitset hit(L.size());
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    ElementId acc = a;
    for (std::size_t bit = 0; bit < k; ++bit) {
      if (mask & (1u << bit)) acc = L.join(acc, atoms[bit]);
    }
    if (hit.test(acc)) return false;
    hit.set(acc);
  }
  return true;
}

std::vector<ElementId> downset_via_decomposition(const FiniteLattice& L, ElementId x) {
  const Bitset& irreducible = L.join_irreducibles().membership;
  auto eta_bits = [&](ElementId y) { return L.down_row(y) & irreducible; };

  // Closure of {empty} under union with eta(j), j in eta(x).
  std::set<Bitset> unions{Bitset(L.size())};
  for (ElementId j : normal_decomposition(L, x)) {
    const Bitset ej = eta_bits(j);
    std::vector<Bitset> fresh;
    for (const Bitset& u : unions) fresh.push_back(u | ej);
    unions.insert(fresh.begin(), fresh.end());
  }

  std::vector<ElementId> out;
  for (std::size_t y = 0; y < L.size(); ++y) {
    if (unions.count(eta_bits(static_cast<ElementId>(y)))) out.push_back(static_cast<ElementId>(y));
  }
  return out;
}

FiniteLattice make_chain(std::vector<std::string> labels) {
  std::vector<std::pair<ElementId, ElementId>> covers;
  for (std::size_t i = 1; i < labels.size(); ++i) {
    covers.emplace_back(static_cast<ElementId>(i - 1), static_cast<ElementId>(i));
  }
  return build_lattice(std::move(labels), covers);
}

FiniteLattice make_chain(std::size_t size) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < size; ++i) labels.push_back(std::to_string(i));
  return make_chain(std::move(labels));
}

FiniteLattice make_boolean() { return make_chain({"0", "1"}); }

FiniteLattice make_ternary() { return make_chain({"-1", "0", "1"}); }

FiniteLattice make_boolean_lattice(unsigned n) {
  const std::uint32_t count = 1u << n;
  std::vector<std::string> labels;
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    std::string s = "{";
    bool first = true;
    for (unsigned i = 0; i < n; ++i) {
      if (mask & (1u << i)) {
        if (!first) s += ",";
        s += std::to_string(i + 1);
        first = false;
      }
    }
    labels.push_back(s + "}");
  }
  std::vector<std::pair<ElementId, ElementId>> covers;
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    for (unsigned i = 0; i < n; ++i) {
      if (!(mask & (1u << i))) covers.emplace_back(mask, mask | (1u << i));
    }
  }
  return build_lattice(std::move(labels), covers);
}

FiniteLattice make_diamond() {
  return build_lattice({"bot", "a", "b", "top"},
                       std::vector<std::pair<std::string, std::string>>{
                           {"bot", "a"}, {"bot", "b"}, {"a", "top"}, {"b", "top"}});
}

FiniteLattice make_m3() {
  return build_lattice({"0", "a", "b", "c", "1"},
                       std::vector<std::pair<std::string, std::string>>{
                           {"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}});
}

FiniteLattice make_n5() {
  return build_lattice({"0", "a", "b", "c", "1"},
                       std::vector<std::pair<std::string, std::string>>{
                           {"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}});
}

}  // namespace latint

#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace latint {

using ElementId = std::uint32_t;
using Bitset = boost::dynamic_bitset<std::uint64_t>;

struct StructureFlags {
  bool is_lattice = false;
  bool is_distributive = false;
  bool is_modular = false;
  bool is_lower_semimodular = false;
  bool is_lower_locally_distributive = false;
  bool is_linear = false;
  bool is_boolean = false;
  bool is_atomistic = false;
};

/// Elements covering exactly one element, with that element recorded.
struct JoinIrreducibleSet {
  std::vector<ElementId> members;      // ascending
  std::vector<ElementId> predecessor;  // parallel to members
  Bitset membership;

  bool contains(ElementId x) const { return x < membership.size() && membership.test(x); }
  ElementId predecessor_of(ElementId x) const;
  std::size_t size() const { return members.size(); }
};

struct Decomposition {
  std::vector<ElementId> eta;       // normal decomposition
  std::vector<ElementId> eta_star;  // minimal decomposition
};

/// A finite bounded poset given by its cover relation. Immutable once built.
///
/// Element ids are dense integers in declaration order. The reflexive-transitive
/// order is held as one bit row per element in both directions, and the join/meet
/// tables are filled only when every pair has a supremum and an infimum.
class FiniteLattice {
 public:
  std::size_t size() const { return labels_.size(); }

  const std::string& label(ElementId x) const { return labels_.at(x); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<ElementId> find(std::string_view label) const;
  /// Throws UnknownLabel.
  ElementId id_of(std::string_view label) const;

  ElementId bottom() const { return bottom_; }
  ElementId top() const { return top_; }

  bool leq(ElementId a, ElementId b) const { return down_[b].test(a); }
  bool less(ElementId a, ElementId b) const { return a != b && leq(a, b); }
  bool comparable(ElementId a, ElementId b) const { return leq(a, b) || leq(b, a); }
  /// True when `upper` covers `lower`.
  bool covers(ElementId upper, ElementId lower) const { return cover_down_[upper].test(lower); }

  /// Elements y with y <= x.
  const Bitset& down_row(ElementId x) const { return down_[x]; }
  /// Elements y with x <= y.
  const Bitset& up_row(ElementId x) const { return up_[x]; }
  const std::vector<ElementId>& lower_covers(ElementId x) const { return lower_covers_[x]; }
  const std::vector<ElementId>& upper_covers(ElementId x) const { return upper_covers_[x]; }
  const std::vector<std::pair<ElementId, ElementId>>& cover_pairs() const { return cover_pairs_; }

  /// Kahn order of the cover graph, ties broken by smallest id.
  const std::vector<ElementId>& linear_extension() const { return order_; }
  std::size_t rank(ElementId x) const { return rank_[x]; }
  ElementId at_rank(std::size_t r) const { return order_[r]; }

  /// Throws NotALattice when the poset lacks joins or meets.
  ElementId join(ElementId a, ElementId b) const;
  ElementId meet(ElementId a, ElementId b) const;
  /// Join of a set of elements; bottom for the empty set.
  ElementId join_all(std::span<const ElementId> xs) const;

  const StructureFlags& flags() const { return flags_; }
  bool is_lattice() const { return flags_.is_lattice; }
  const JoinIrreducibleSet& join_irreducibles() const { return irreducibles_; }

 private:
  friend FiniteLattice build_lattice(std::vector<std::string>,
                                     const std::vector<std::pair<ElementId, ElementId>>&);

  std::vector<std::string> labels_;
  std::vector<std::pair<ElementId, ElementId>> cover_pairs_;
  std::vector<Bitset> down_;
  std::vector<Bitset> up_;
  std::vector<Bitset> cover_down_;
  std::vector<std::vector<ElementId>> lower_covers_;
  std::vector<std::vector<ElementId>> upper_covers_;
  std::vector<ElementId> order_;
  std::vector<std::size_t> rank_;
  std::vector<ElementId> join_table_;
  std::vector<ElementId> meet_table_;
  ElementId bottom_ = 0;
  ElementId top_ = 0;
  StructureFlags flags_;
  JoinIrreducibleSet irreducibles_;
};

/// Validates the cover relation and precomputes order, tables and flags.
///
/// Throws DuplicateLabel, UnknownLabel, CycleError, NotTransitivelyReduced,
/// NoBottom or NoTop. A bounded poset that is not a lattice is returned with
/// `is_lattice` cleared rather than rejected.
FiniteLattice build_lattice(std::vector<std::string> labels,
                            const std::vector<std::pair<std::string, std::string>>& cover_pairs);
FiniteLattice build_lattice(std::vector<std::string> labels,
                            const std::vector<std::pair<ElementId, ElementId>>& cover_pairs);

const StructureFlags& classify(const FiniteLattice& lattice);
const JoinIrreducibleSet& join_irreducibles(const FiniteLattice& lattice);

/// All join-irreducibles below x.
std::vector<ElementId> normal_decomposition(const FiniteLattice& lattice, ElementId x);

/// The unique irredundant join-irreducible decomposition of x.
///
/// On lower locally distributive lattices this keeps the maximal members of the
/// normal decomposition and drops any that are still redundant. Elsewhere every
/// minimum-cardinality decomposition is enumerated, and NotLLDError is thrown
/// unless exactly one exists.
std::vector<ElementId> minimal_decomposition(const FiniteLattice& lattice, ElementId x);

Decomposition decompose(const FiniteLattice& lattice, ElementId x);

std::vector<ElementId> downset(const FiniteLattice& lattice, ElementId x);
/// Elements z with a <= z <= b. Throws OrderError when a is not below b.
std::vector<ElementId> interval(const FiniteLattice& lattice, ElementId a, ElementId b);
/// Whether [a, b] is isomorphic to 2^k, k being the number of atoms of the interval.
bool is_boolean_interval(const FiniteLattice& lattice, ElementId a, ElementId b);

/// Down-set of x rebuilt from join-irreducibles: the y whose normal decomposition
/// is a union of normal decompositions of members of eta(x).
std::vector<ElementId> downset_via_decomposition(const FiniteLattice& lattice, ElementId x);

// Common attribute lattices.
FiniteLattice make_chain(std::vector<std::string> labels);
/// Chain 0 < 1 < ... < size-1.
FiniteLattice make_chain(std::size_t size);
/// Two-element chain "0" < "1".
FiniteLattice make_boolean();
/// Three-element chain "-1" < "0" < "1".
FiniteLattice make_ternary();
/// 2^n as subsets of {1..n}, labelled "{}", "{1}", "{1,2}", ...
FiniteLattice make_boolean_lattice(unsigned n);
/// 2^2 with labels bot, a, b, top.
FiniteLattice make_diamond();
FiniteLattice make_m3();
FiniteLattice make_n5();

}  // namespace latint

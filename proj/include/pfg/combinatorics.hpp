// Copyright 2026 The pfg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PFG_COMBINATORICS_HPP
#define PFG_COMBINATORICS_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "pfg/rational.hpp"

namespace pfg {

/// Index of a player within the universe, 0-based.
using PlayerId = int;

/// Largest universe the library can represent.
inline constexpr int kHardCap = 12;
inline constexpr int kDefaultCap = 10;

/// Process-wide cap on player indices (and hence player-set sizes).
int universe_cap();
/// Throws SizeError unless 1 <= cap <= kHardCap.
void set_universe_cap(int cap);

/// A set of players, stored as a bitset over the universe.
class Coalition {
 public:
  using Mask = std::uint32_t;

  constexpr Coalition() = default;
  constexpr explicit Coalition(Mask bits) : bits_(bits) {}
  Coalition(std::initializer_list<PlayerId> players);

  static Coalition singleton(PlayerId i);
  /// {0, 1, ..., n-1}
  static Coalition first(int n);

  constexpr Mask bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(PlayerId i) const { return i >= 0 && i < 32 && ((bits_ >> i) & 1U) != 0; }
  constexpr bool subset_of(Coalition other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool disjoint(Coalition other) const { return (bits_ & other.bits_) == 0; }
  /// Smallest member; the coalition must be nonempty.
  constexpr PlayerId min() const { return std::countr_zero(bits_); }

  Coalition with(PlayerId i) const { return *this | singleton(i); }
  Coalition without(PlayerId i) const { return *this - singleton(i); }

  std::vector<PlayerId> members() const;

  template <typename F>
  void for_each(F&& f) const {
    for (Mask m = bits_; m != 0; m &= m - 1) f(static_cast<PlayerId>(std::countr_zero(m)));
  }

  friend constexpr Coalition operator|(Coalition a, Coalition b) { return Coalition(a.bits_ | b.bits_); }
  friend constexpr Coalition operator&(Coalition a, Coalition b) { return Coalition(a.bits_ & b.bits_); }
  /// Set difference.
  friend constexpr Coalition operator-(Coalition a, Coalition b) { return Coalition(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(Coalition a, Coalition b) = default;

 private:
  Mask bits_ = 0;
};

/// Canonical coalition order: by cardinality, then lexicographically by the
/// ascending member list.
bool coalition_order_less(Coalition a, Coalition b);
std::strong_ordering coalition_order(Coalition a, Coalition b);

/// Throws SizeError if any member index reaches the universe cap.
void require_within_cap(Coalition players);

/// Rank of `sub` among the subsets of `ground` in the bit order induced by
/// ground's members (i.e. the parallel bit extract of sub over ground).
std::uint32_t compress(Coalition sub, Coalition ground);
Coalition expand(std::uint32_t local, Coalition ground);

/// A partition of a ground set into disjoint nonempty blocks, kept in
/// canonical form: blocks ordered by least member.
class Partition {
 public:
  /// The empty partition, the only partition of the empty ground set.
  Partition() = default;
  /// Validates (nonempty, pairwise disjoint) and canonicalizes.
  explicit Partition(std::vector<Coalition> blocks);
  Partition(std::initializer_list<Coalition> blocks) : Partition(std::vector<Coalition>(blocks)) {}

  std::span<const Coalition> blocks() const { return blocks_; }
  std::size_t block_count() const { return blocks_.size(); }
  bool empty() const { return blocks_.empty(); }
  Coalition ground() const { return ground_; }
  /// The block holding player i; DomainError if i is not in the ground set.
  Coalition block_of(PlayerId i) const;

  /// Restricted growth string over the ascending ground members: entry k is
  /// the index of the block holding the k-th member.
  std::vector<int> growth_string() const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.ground_ == b.ground_ && a.blocks_ == b.blocks_;
  }
  /// Ground set (as a canonical coalition) first, then growth string
  /// lexicographically; this is the enumeration order.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

 private:
  std::vector<Coalition> blocks_;
  Coalition ground_;
};

/// A coalition S together with a partition of the remaining players.
struct EmbeddedCoalition {
  Coalition coalition;
  Partition outside;

  friend bool operator==(const EmbeddedCoalition&, const EmbeddedCoalition&) = default;
  /// Coalition in canonical coalition order, then outside partition.
  friend std::strong_ordering operator<=>(const EmbeddedCoalition& a, const EmbeddedCoalition& b);
};

/// Bell number B(m) for 0 <= m <= kHardCap + 1.
std::uint64_t bell_number(int m);

/// Number of restricted growth completions of `remaining` positions when
/// `used` block labels are already taken.
std::uint64_t growth_completions(int remaining, int used);

/// Position of the partition given by `blocks` (any order) among the
/// partitions of `ground` in enumeration order. Blocks must partition ground.
std::uint64_t partition_rank(Coalition ground, std::span<const Coalition> blocks);

/// Inverse of partition_rank; blocks come out canonically ordered.
std::vector<Coalition> partition_unrank(Coalition ground, std::uint64_t rank);

/// Calls f(std::span<const Coalition> blocks) for every partition of ground
/// in enumeration order (lexicographic growth strings). No cap check.
template <typename F>
void for_each_partition(Coalition ground, F&& f) {
  const std::vector<PlayerId> elems = ground.members();
  const int m = static_cast<int>(elems.size());
  std::vector<Coalition> blocks;
  blocks.reserve(m);
  auto recurse = [&](auto& self, int k) -> void {
    if (k == m) {
      f(std::span<const Coalition>(blocks));
      return;
    }
    const Coalition e = Coalition::singleton(elems[k]);
    const std::size_t used = blocks.size();
    for (std::size_t b = 0; b < used; ++b) {
      blocks[b] = blocks[b] | e;
      self(self, k + 1);
      blocks[b] = blocks[b] - e;
    }
    blocks.push_back(e);
    self(self, k + 1);
    blocks.pop_back();
  };
  recurse(recurse, 0);
}

/// Every partition of ground exactly once, in enumeration order.
std::vector<Partition> enumerate_partitions(Coalition ground);

/// { B \ T | B in pi, B \ T nonempty }. T must lie in pi's ground set.
Partition remove_players(const Partition& pi, Coalition removed);

/// pi with player i added to block `target`, or as a new singleton block
/// when target is empty.
Partition add_player(const Partition& pi, PlayerId i, Coalition target);

/// Ewens (theta = 1) probability of a partition of an m-element ground set:
/// prod_B (|B|-1)! / m!. The empty partition has weight 1.
Rational ewens_weight(const Partition& pi);
Rational ewens_weight(std::span<const Coalition> blocks);

/// Every (S, pi) with S a subset of N and pi a partition of N \ S, including
/// S = {}; B(n+1) entries in canonical order.
std::vector<EmbeddedCoalition> enumerate_embedded(Coalition players);

/// "{1,2}" with 0-based ids shifted by `offset`; for messages.
std::string to_string(Coalition s, int offset = 0);
std::string to_string(const Partition& pi, int offset = 0);

}  // namespace pfg

#endif  // PFG_COMBINATORICS_HPP

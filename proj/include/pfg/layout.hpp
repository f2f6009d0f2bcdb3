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

#ifndef PFG_LAYOUT_HPP
#define PFG_LAYOUT_HPP

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "pfg/combinatorics.hpp"

namespace pfg {

/// Dense indexing of the embedded coalitions E(N) of one player set.
///
/// Entries are ordered by coalition (canonical coalition order), then by the
/// outside partition in enumeration order. Layouts are shared and immutable;
/// obtain them through for_players().
class EmbeddedLayout {
 public:
  static std::shared_ptr<const EmbeddedLayout> for_players(Coalition players);

  Coalition players() const { return players_; }
  int player_count() const { return players_.size(); }
  /// B(n+1).
  std::size_t size() const { return size_; }

  /// Index of (s, blocks). Blocks may come in any order but must partition
  /// players \ s; this is only checked in debug builds.
  std::size_t index_of(Coalition s, std::span<const Coalition> blocks) const {
    return offset_[compress(s, players_)] + partition_rank(players_ - s, blocks);
  }
  /// Validating lookup; DomainError if e is not in E(N).
  std::size_t index_of(const EmbeddedCoalition& e) const;

  /// Index of the first entry with coalition s.
  std::size_t offset_of(Coalition s) const { return offset_[compress(s, players_)]; }

  EmbeddedCoalition entry(std::size_t index) const;

  /// Coalitions in canonical order.
  std::span<const Coalition> coalitions() const { return coalitions_; }

  /// Calls f(index, s, blocks) for every entry in index order.
  template <typename F>
  void for_each(F&& f) const {
    std::size_t index = 0;
    for (Coalition s : coalitions_) {
      for_each_partition(players_ - s, [&](std::span<const Coalition> blocks) { f(index++, s, blocks); });
    }
  }

  explicit EmbeddedLayout(Coalition players);

 private:
  Coalition players_;
  std::size_t size_ = 0;
  std::vector<Coalition> coalitions_;
  std::vector<std::size_t> offset_;  // by compressed coalition
};

}  // namespace pfg

#endif  // PFG_LAYOUT_HPP

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

#include "pfg/layout.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "pfg/errors.hpp"

namespace pfg {

EmbeddedLayout::EmbeddedLayout(Coalition players) : players_(players) {
  require_within_cap(players);
  const int n = players.size();
  coalitions_.reserve(std::size_t{1} << n);
  for (std::uint32_t local = 0; local < (1U << n); ++local) coalitions_.push_back(expand(local, players));
  std::sort(coalitions_.begin(), coalitions_.end(), coalition_order_less);

  offset_.assign(std::size_t{1} << n, 0);
  for (Coalition s : coalitions_) {
    offset_[compress(s, players)] = size_;
    size_ += bell_number(n - s.size());
  }
}

std::shared_ptr<const EmbeddedLayout> EmbeddedLayout::for_players(Coalition players) {
  static std::mutex mutex;
  static std::map<Coalition::Mask, std::shared_ptr<const EmbeddedLayout>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(players.bits()); it != cache.end()) return it->second;
  }
  auto layout = std::make_shared<const EmbeddedLayout>(players);
  std::lock_guard lock(mutex);
  return cache.try_emplace(players.bits(), std::move(layout)).first->second;
}

std::size_t EmbeddedLayout::index_of(const EmbeddedCoalition& e) const {
  if (!e.coalition.subset_of(players_) || e.outside.ground() != players_ - e.coalition) {
    throw DomainError("(" + to_string(e.coalition) + ", " + to_string(e.outside) +
                      ") is not an embedded coalition of " + to_string(players_));
  }
  return index_of(e.coalition, e.outside.blocks());
}

EmbeddedCoalition EmbeddedLayout::entry(std::size_t index) const {
  if (index >= size_) throw DomainError("embedded coalition index out of range");
  // Offsets increase along coalitions_, so binary search over that order.
  auto it = std::upper_bound(coalitions_.begin(), coalitions_.end(), index,
                             [&](std::size_t i, Coalition s) { return i < offset_of(s); });
  const Coalition s = *std::prev(it);
  return {s, Partition(partition_unrank(players_ - s, index - offset_of(s)))};
}

}  // namespace pfg

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

#include "pfg/combinatorics.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <sstream>

#include "pfg/errors.hpp"

namespace pfg {

namespace {

std::atomic<int> g_cap{kDefaultCap};

constexpr int kMaxLen = kHardCap + 1;

// completions[r][u]: number of ways to extend a growth string by r positions
// when u labels are already in use.
struct CompletionTable {
  std::array<std::array<std::uint64_t, kMaxLen + 2>, kMaxLen + 1> c{};
  constexpr CompletionTable() {
    for (int u = 0; u <= kMaxLen + 1; ++u) c[0][u] = 1;
    for (int r = 1; r <= kMaxLen; ++r) {
      for (int u = 0; u <= kMaxLen; ++u) c[r][u] = static_cast<std::uint64_t>(u) * c[r - 1][u] + c[r - 1][u + 1];
    }
  }
};

constexpr CompletionTable kCompletions{};

constexpr std::array<std::uint64_t, 13> kFactorial = [] {
  std::array<std::uint64_t, 13> f{};
  f[0] = 1;
  for (std::size_t i = 1; i < f.size(); ++i) f[i] = f[i - 1] * i;
  return f;
}();

}  // namespace

int universe_cap() { return g_cap.load(std::memory_order_relaxed); }

void set_universe_cap(int cap) {
  if (cap < 1 || cap > kHardCap) {
    throw SizeError("universe cap must lie in [1, " + std::to_string(kHardCap) + "], got " +
                    std::to_string(cap));
  }
  g_cap.store(cap, std::memory_order_relaxed);
}

Coalition::Coalition(std::initializer_list<PlayerId> players) {
  for (PlayerId i : players) *this = with(i);
}

Coalition Coalition::singleton(PlayerId i) {
  if (i < 0 || i >= kHardCap) throw DomainError("player index " + std::to_string(i) + " out of range");
  return Coalition(Mask{1} << i);
}

Coalition Coalition::first(int n) {
  if (n < 0 || n > kHardCap) throw SizeError("cannot form a player set of size " + std::to_string(n));
  return Coalition((Mask{1} << n) - 1);
}

std::vector<PlayerId> Coalition::members() const {
  std::vector<PlayerId> out;
  out.reserve(size());
  for_each([&](PlayerId i) { out.push_back(i); });
  return out;
}

std::strong_ordering coalition_order(Coalition a, Coalition b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  // Equal sizes: compare ascending member lists. The first differing member
  // is the lowest bit of the symmetric difference; whoever owns it is less.
  const Coalition::Mask diff = a.bits() ^ b.bits();
  if (diff == 0) return std::strong_ordering::equal;
  const Coalition::Mask low = diff & (~diff + 1);
  return (a.bits() & low) != 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

bool coalition_order_less(Coalition a, Coalition b) { return coalition_order(a, b) < 0; }

void require_within_cap(Coalition players) {
  const int cap = universe_cap();
  if ((players.bits() >> cap) != 0) {
    throw SizeError("player set " + to_string(players) + " exceeds the universe cap of " +
                    std::to_string(cap) + " players");
  }
}

std::uint32_t compress(Coalition sub, Coalition ground) {
  std::uint32_t out = 0;
  int k = 0;
  ground.for_each([&](PlayerId i) {
    if (sub.contains(i)) out |= 1U << k;
    ++k;
  });
  return out;
}

Coalition expand(std::uint32_t local, Coalition ground) {
  Coalition::Mask out = 0;
  int k = 0;
  ground.for_each([&](PlayerId i) {
    if ((local >> k) & 1U) out |= Coalition::Mask{1} << i;
    ++k;
  });
  return Coalition(out);
}

Partition::Partition(std::vector<Coalition> blocks) : blocks_(std::move(blocks)) {
  Coalition::Mask seen = 0;
  for (Coalition b : blocks_) {
    if (b.empty()) throw DomainError("partition block is empty");
    if ((seen & b.bits()) != 0) throw DomainError("partition blocks overlap");
    seen |= b.bits();
  }
  ground_ = Coalition(seen);
  std::sort(blocks_.begin(), blocks_.end(), [](Coalition a, Coalition b) { return a.min() < b.min(); });
}

Coalition Partition::block_of(PlayerId i) const {
  for (Coalition b : blocks_) {
    if (b.contains(i)) return b;
  }
  throw DomainError("player " + std::to_string(i) + " is not in the partition's ground set");
}

std::vector<int> Partition::growth_string() const {
  std::vector<int> out;
  out.reserve(ground_.size());
  ground_.for_each([&](PlayerId i) {
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      if (blocks_[b].contains(i)) {
        out.push_back(static_cast<int>(b));
        return;
      }
    }
  });
  return out;
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  if (auto c = coalition_order(a.ground_, b.ground_); c != 0) return c;
  const auto ga = a.growth_string();
  const auto gb = b.growth_string();
  return std::lexicographical_compare_three_way(ga.begin(), ga.end(), gb.begin(), gb.end());
}

std::strong_ordering operator<=>(const EmbeddedCoalition& a, const EmbeddedCoalition& b) {
  if (auto c = coalition_order(a.coalition, b.coalition); c != 0) return c;
  return a.outside <=> b.outside;
}

std::uint64_t bell_number(int m) {
  if (m < 0 || m > kMaxLen) throw SizeError("Bell number index out of range");
  return kCompletions.c[m][0];
}

std::uint64_t growth_completions(int remaining, int used) {
  if (remaining < 0 || remaining > kMaxLen || used < 0 || used > kMaxLen + 1) {
    throw SizeError("growth completion index out of range");
  }
  return kCompletions.c[remaining][used];
}

std::uint64_t partition_rank(Coalition ground, std::span<const Coalition> blocks) {
  std::array<int, kMaxLen> label;
  label.fill(-1);
  const int len = ground.size();
  int used = 0;
  int k = 0;
  std::uint64_t rank = 0;
  ground.for_each([&](PlayerId e) {
    std::size_t b = 0;
    while (!blocks[b].contains(e)) ++b;
    const bool fresh = label[b] < 0;
    const int a = fresh ? used : label[b];
    // Each smaller label choice at position k is an existing label, which
    // leaves `used` unchanged for the remaining positions.
    rank += static_cast<std::uint64_t>(a) * kCompletions.c[len - k - 1][used];
    if (fresh) label[b] = used++;
    ++k;
  });
  return rank;
}

std::vector<Coalition> partition_unrank(Coalition ground, std::uint64_t rank) {
  const int len = ground.size();
  if (rank >= kCompletions.c[len][0]) throw DomainError("partition rank out of range");
  std::vector<Coalition> blocks;
  int k = 0;
  ground.for_each([&](PlayerId e) {
    const int used = static_cast<int>(blocks.size());
    const std::uint64_t step = kCompletions.c[len - k - 1][used];
    const int a = static_cast<int>(std::min<std::uint64_t>(rank / step, static_cast<std::uint64_t>(used)));
    rank -= static_cast<std::uint64_t>(a) * step;
    if (a == used) {
      blocks.push_back(Coalition::singleton(e));
    } else {
      blocks[a] = blocks[a].with(e);
    }
    ++k;
  });
  return blocks;
}

std::vector<Partition> enumerate_partitions(Coalition ground) {
  require_within_cap(ground);
  std::vector<Partition> out;
  out.reserve(bell_number(ground.size()));
  for_each_partition(ground, [&](std::span<const Coalition> blocks) {
    out.emplace_back(std::vector<Coalition>(blocks.begin(), blocks.end()));
  });
  return out;
}

Partition remove_players(const Partition& pi, Coalition removed) {
  if (!removed.subset_of(pi.ground())) {
    throw DomainError("cannot remove " + to_string(removed - pi.ground()) + ": not in the ground set " +
                      to_string(pi.ground()));
  }
  std::vector<Coalition> blocks;
  blocks.reserve(pi.block_count());
  for (Coalition b : pi.blocks()) {
    if (Coalition rest = b - removed; !rest.empty()) blocks.push_back(rest);
  }
  return Partition(std::move(blocks));
}

Partition add_player(const Partition& pi, PlayerId i, Coalition target) {
  if (pi.ground().contains(i)) {
    throw DomainError("player " + std::to_string(i) + " is already in the ground set");
  }
  std::vector<Coalition> blocks(pi.blocks().begin(), pi.blocks().end());
  if (target.empty()) {
    blocks.push_back(Coalition::singleton(i));
  } else {
    auto it = std::find(blocks.begin(), blocks.end(), target);
    if (it == blocks.end()) throw DomainError("target " + to_string(target) + " is not a block of the partition");
    *it = it->with(i);
  }
  return Partition(std::move(blocks));
}

Rational ewens_weight(std::span<const Coalition> blocks) {
  std::uint64_t numerator = 1;
  int m = 0;
  for (Coalition b : blocks) {
    numerator *= kFactorial[b.size() - 1];
    m += b.size();
  }
  if (m >= static_cast<int>(kFactorial.size())) throw SizeError("partition too large for Ewens weight");
  return Rational(static_cast<long>(numerator), static_cast<long>(kFactorial[m]));
}

Rational ewens_weight(const Partition& pi) { return ewens_weight(pi.blocks()); }

std::vector<EmbeddedCoalition> enumerate_embedded(Coalition players) {
  require_within_cap(players);
  const int n = players.size();
  std::vector<Coalition> coalitions;
  coalitions.reserve(std::size_t{1} << n);
  for (std::uint32_t local = 0; local < (1U << n); ++local) coalitions.push_back(expand(local, players));
  std::sort(coalitions.begin(), coalitions.end(), coalition_order_less);

  std::vector<EmbeddedCoalition> out;
  out.reserve(bell_number(n + 1));
  for (Coalition s : coalitions) {
    for_each_partition(players - s, [&](std::span<const Coalition> blocks) {
      out.push_back({s, Partition(std::vector<Coalition>(blocks.begin(), blocks.end()))});
    });
  }
  return out;
}

std::string to_string(Coalition s, int offset) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  s.for_each([&](PlayerId i) {
    if (!first) os << ',';
    os << i + offset;
    first = false;
  });
  os << '}';
  return os.str();
}

std::string to_string(const Partition& pi, int offset) {
  if (pi.empty()) return "{}";
  std::string out = "{";
  for (Coalition b : pi.blocks()) out += to_string(b, offset);
  return out + "}";
}

}  // namespace pfg

// Copyright 2026 The onecvx Authors
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

#ifndef ONECVX_COALITION_HPP
#define ONECVX_COALITION_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace onecvx {

inline constexpr int kMaxPlayers = 16;

/// A coalition over a fixed player set {0, ..., n-1}, encoded as a bitmask.
/// Player i is a member iff bit i is set. Players are 0-based internally;
/// I/O layers render them 1-based.
class Coalition {
 public:
  Coalition(std::uint32_t mask, int player_count)
      : mask_(mask), n_(player_count) {
    if (player_count < 1 || player_count > kMaxPlayers) {
      throw std::invalid_argument("player count out of range");
    }
    if (mask >= (1u << player_count)) {
      throw std::invalid_argument("coalition mask out of range");
    }
  }

  static Coalition empty_set(int n) { return Coalition(0, n); }
  static Coalition grand(int n) { return Coalition((1u << n) - 1, n); }
  static Coalition singleton(int player, int n) {
    return Coalition(1u << check_player(player, n), n);
  }
  static Coalition of(const std::vector<int>& players, int n) {
    std::uint32_t m = 0;
    for (int p : players) m |= 1u << check_player(p, n);
    return Coalition(m, n);
  }

  std::uint32_t mask() const { return mask_; }
  int player_count() const { return n_; }
  int size() const { return std::popcount(mask_); }
  bool empty() const { return mask_ == 0; }
  bool is_grand() const { return mask_ == (1u << n_) - 1; }

  bool contains(int player) const {
    return (mask_ >> check_player(player, n_)) & 1u;
  }
  Coalition with(int player) const {
    return Coalition(mask_ | (1u << check_player(player, n_)), n_);
  }
  Coalition without(int player) const {
    return Coalition(mask_ & ~(1u << check_player(player, n_)), n_);
  }
  Coalition complement() const {
    return Coalition(((1u << n_) - 1) & ~mask_, n_);
  }
  bool subset_of(const Coalition& other) const {
    return (mask_ & ~other.mask_) == 0;
  }

  /// Members in ascending order, 0-based.
  std::vector<int> members() const {
    std::vector<int> out;
    for (int i = 0; i < n_; ++i) {
      if ((mask_ >> i) & 1u) out.push_back(i);
    }
    return out;
  }

  /// "{1,3}" with 1-based players; "{}" for the empty coalition.
  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int i : members()) {
      if (!first) s += ",";
      s += std::to_string(i + 1);
      first = false;
    }
    s += "}";
    return s;
  }

  friend bool operator==(const Coalition& a, const Coalition& b) {
    return a.mask_ == b.mask_ && a.n_ == b.n_;
  }
  friend std::strong_ordering operator<=>(const Coalition& a,
                                          const Coalition& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.mask_ <=> b.mask_;
  }

 private:
  static int check_player(int player, int n) {
    if (player < 0 || player >= n) {
      throw std::invalid_argument("player index out of range");
    }
    return player;
  }

  std::uint32_t mask_;
  int n_;
};

}  // namespace onecvx

#endif  // ONECVX_COALITION_HPP

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

#ifndef ONECVX_GAME_HPP
#define ONECVX_GAME_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "onecvx/coalition.hpp"
#include "onecvx/rational.hpp"

namespace onecvx {

/// Individual payoffs, one entry per player (0-based).
using PayoffVector = std::vector<Rational>;

Rational payoff_sum(const PayoffVector& x);
Rational payoff_sum(const PayoffVector& x, const Coalition& s);
std::string payoff_to_string(const PayoffVector& x);
PayoffVector payoff_add(const PayoffVector& a, const PayoffVector& b);

/// A cooperative game (N, v): one exact rational worth per coalition mask,
/// with v(empty) = 0. Immutable after construction.
class CompleteGame {
 public:
  CompleteGame(int player_count, std::vector<Rational> values);

  static CompleteGame zeros(int player_count);
  /// Additive game v(S) = sum of per-player worths.
  static CompleteGame additive(const PayoffVector& worths);

  int player_count() const { return n_; }
  std::uint32_t grand_mask() const { return (1u << n_) - 1; }
  std::size_t num_coalitions() const { return values_.size(); }

  const Rational& value(std::uint32_t mask) const { return values_.at(mask); }
  const Rational& value(const Coalition& s) const {
    return values_.at(s.mask());
  }
  const Rational& grand_value() const { return values_[grand_mask()]; }
  const std::vector<Rational>& values() const { return values_; }

  friend bool operator==(const CompleteGame& a, const CompleteGame& b) {
    return a.n_ == b.n_ && a.values_ == b.values_;
  }

 private:
  int n_;
  std::vector<Rational> values_;
};

CompleteGame add(const CompleteGame& a, const CompleteGame& b);
CompleteGame scale(const Rational& k, const CompleteGame& g);
/// v(S) = k * v(S) + shift * |S| (an additive shift of `shift` per player).
CompleteGame affine_transform(const Rational& k, const Rational& shift,
                              const CompleteGame& g);
/// Relabels players: new_value(pi(S)) = value(S), where pi maps old player i
/// to perm[i].
CompleteGame permute_players(const CompleteGame& g,
                             const std::vector<int>& perm);

/// A partially known game (N, K, v): worths only on the known set K, which
/// always contains the empty coalition with worth 0.
class IncompleteGame {
 public:
  IncompleteGame(int player_count, std::map<std::uint32_t, Rational> known);

  /// K = {empty, singletons, N}.
  static IncompleteGame minimal(int player_count,
                                const std::vector<Rational>& singletons,
                                const Rational& grand);
  /// Restriction of a complete game to the given known masks.
  static IncompleteGame restriction(const CompleteGame& g,
                                    const std::vector<std::uint32_t>& known);

  int player_count() const { return n_; }
  std::uint32_t grand_mask() const { return (1u << n_) - 1; }

  bool is_known(std::uint32_t mask) const { return values_.count(mask) > 0; }
  bool is_known(const Coalition& s) const { return is_known(s.mask()); }
  const Rational& value(std::uint32_t mask) const;
  const Rational& value(const Coalition& s) const { return value(s.mask()); }
  const std::map<std::uint32_t, Rational>& known_values() const {
    return values_;
  }
  std::vector<std::uint32_t> known_masks() const;
  std::vector<std::uint32_t> unknown_masks() const;

  /// K is exactly {empty, singletons, N}.
  bool is_minimal() const;
  /// K contains N and every N\{i}, so the upper vector is computable.
  bool has_defined_upper_vector() const;
  /// w coincides with v on every known coalition.
  bool agrees_with(const CompleteGame& w) const;

  friend bool operator==(const IncompleteGame& a, const IncompleteGame& b) {
    return a.n_ == b.n_ && a.values_ == b.values_;
  }

 private:
  int n_;
  std::map<std::uint32_t, Rational> values_;
};

IncompleteGame add(const IncompleteGame& a, const IncompleteGame& b);
IncompleteGame scale(const Rational& k, const IncompleteGame& g);

struct ExcessEntry {
  Coalition coalition;
  Rational excess;
};

/// All 2^n excesses, sorted by excess non-increasing; ties are broken by
/// ascending coalition mask so the order is total and reproducible.
struct ExcessProfile {
  std::vector<ExcessEntry> entries;
};

/// b_i = v(N) - v(N \ i), each player's marginal contribution to N.
PayoffVector upper_vector(const CompleteGame& g);

/// g(S) = b(S) - v(S).
Rational gap(const CompleteGame& g, const Coalition& s);

/// e(S, x) = v(S) - x(S).
Rational excess(const CompleteGame& g, const Coalition& s,
                const PayoffVector& x);

ExcessProfile excess_profile(const CompleteGame& g, const PayoffVector& x);

/// True iff a precedes b in the lexicographic order on sorted excesses.
bool lexicographically_less(const ExcessProfile& a, const ExcessProfile& b);

/// v0(S) = v(S) - sum of singleton worths over S; all singletons become 0.
CompleteGame zero_normalise(const CompleteGame& g);

/// Zero-normalisation of a minimal incomplete game: singletons become 0 and
/// the grand coalition keeps only the total excess. Rejects non-minimal K.
IncompleteGame zero_normalise_minimal(const IncompleteGame& g);

}  // namespace onecvx

#endif  // ONECVX_GAME_HPP

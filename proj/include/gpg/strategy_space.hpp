#ifndef GPG_STRATEGY_SPACE_HPP
#define GPG_STRATEGY_SPACE_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

#include "gpg/rational.hpp"

namespace gpg {

// Dense tables refuse to materialize above this many profiles unless the
// limit is raised (the CLI maps GPG_MAX_PROFILES onto it).
std::size_t max_table_profiles();
void set_max_table_profiles(std::size_t cap);

// One strategy profile: strategy index per player. Value type, ordered
// lexicographically.
class Profile {
 public:
  Profile() = default;
  explicit Profile(std::vector<int> strategies) : s_(std::move(strategies)) {}
  Profile(std::initializer_list<int> strategies) : s_(strategies) {}

  int size() const { return static_cast<int>(s_.size()); }
  int operator[](int i) const { return s_[static_cast<std::size_t>(i)]; }
  int& operator[](int i) { return s_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& strategies() const { return s_; }

  friend bool operator==(const Profile&, const Profile&) = default;
  friend auto operator<=>(const Profile&, const Profile&) = default;

 private:
  std::vector<int> s_;
};

// Per-player strategy counts m_i plus a distinguished strategy o_i for each
// player. Profiles are ranked in mixed radix with player 0 least
// significant: rank(a) = sum_i a_i * prod_{j<i} m_j. Rank arithmetic is
// only available while the profile count fits in 62 bits; spaces larger
// than that (many players) still support profile manipulation.
class StrategySpace {
 public:
  StrategySpace() = default;
  StrategySpace(std::vector<int> strategy_counts, std::vector<int> distinguished);
  // All o_i = 0.
  explicit StrategySpace(std::vector<int> strategy_counts);
  static StrategySpace uniform(int players, int strategies_each, int distinguished = 0);

  int players() const { return static_cast<int>(m_.size()); }
  int strategy_count(int i) const { return m_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& strategy_counts() const { return m_; }
  int distinguished(int i) const { return o_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& distinguished_profile() const { return o_; }

  // Copy of this space with different distinguished strategies.
  StrategySpace with_distinguished(std::vector<int> o) const;

  // Number of profiles, when it fits; nullopt for astronomically large
  // spaces (those still admit profiles, just no dense tables).
  std::optional<std::size_t> profile_count() const { return count_; }
  bool rankable() const { return count_.has_value(); }
  // Throws unless rankable and within max_table_profiles().
  std::size_t table_size() const;

  bool contains(const Profile& a) const;

  std::size_t rank(const Profile& a) const;
  Profile unrank(std::size_t rank) const;
  Profile distinguished_as_profile() const { return Profile(o_); }

  // O(1) rank surgery. with_coord replaces coordinate i by value; pin sets
  // it to o_i.
  std::size_t stride(int i) const { return strides_[static_cast<std::size_t>(i)]; }
  int coord_of_rank(std::size_t rank, int i) const;
  std::size_t with_coord(std::size_t rank, int i, int value) const;
  std::size_t pin_rank(std::size_t rank, int i) const { return with_coord(rank, i, distinguished(i)); }

  // Rank over the reduced space that drops player i (order of the others
  // preserved). Used for opponent-indexed offset tables.
  std::size_t drop_rank(std::size_t rank, int i) const;
  std::size_t drop_count(int i) const;

  // Mixed-radix rank over an ascending member subset, member 0 least
  // significant. Used for clique-local and neighbor-indexed tables.
  std::size_t restricted_rank(const Profile& a, const std::vector<int>& members) const;
  static std::size_t restricted_size(const std::vector<int>& counts);
  std::vector<int> counts_of(const std::vector<int>& members) const;

  friend bool operator==(const StrategySpace&, const StrategySpace&) = default;

 private:
  std::vector<int> m_;
  std::vector<int> o_;
  std::vector<std::size_t> strides_;
  std::optional<std::size_t> count_;
};

}  // namespace gpg

#endif  // GPG_STRATEGY_SPACE_HPP

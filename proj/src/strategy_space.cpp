#include "gpg/strategy_space.hpp"

#include <atomic>
#include <limits>
#include <stdexcept>

namespace gpg {

namespace {
std::atomic<std::size_t> g_max_table_profiles{std::size_t{1} << 26};
constexpr std::size_t kRankLimit = std::size_t{1} << 62;
}  // namespace

std::size_t max_table_profiles() { return g_max_table_profiles.load(); }
void set_max_table_profiles(std::size_t cap) { g_max_table_profiles.store(cap); }

StrategySpace::StrategySpace(std::vector<int> strategy_counts, std::vector<int> distinguished)
    : m_(std::move(strategy_counts)), o_(std::move(distinguished)) {
  if (m_.size() != o_.size()) throw std::invalid_argument("strategy space: m/o length mismatch");
  strides_.resize(m_.size());
  std::size_t acc = 1;
  bool fits = true;
  for (std::size_t i = 0; i < m_.size(); ++i) {
    if (m_[i] < 1) throw std::invalid_argument("strategy space: every m_i must be >= 1");
    if (o_[i] < 0 || o_[i] >= m_[i]) throw std::invalid_argument("strategy space: o_i out of range");
    strides_[i] = fits ? acc : 0;
    if (fits && acc > kRankLimit / static_cast<std::size_t>(m_[i])) {
      fits = false;
    } else if (fits) {
      acc *= static_cast<std::size_t>(m_[i]);
    }
  }
  if (fits) count_ = acc;
}

StrategySpace::StrategySpace(std::vector<int> strategy_counts)
    : StrategySpace(strategy_counts, std::vector<int>(strategy_counts.size(), 0)) {}

StrategySpace StrategySpace::uniform(int players, int strategies_each, int distinguished) {
  return StrategySpace(std::vector<int>(static_cast<std::size_t>(players), strategies_each),
                       std::vector<int>(static_cast<std::size_t>(players), distinguished));
}

StrategySpace StrategySpace::with_distinguished(std::vector<int> o) const {
  return StrategySpace(m_, std::move(o));
}

std::size_t StrategySpace::table_size() const {
  if (!count_) throw std::length_error("strategy space: profile count exceeds rank range");
  if (*count_ > max_table_profiles())
    throw std::length_error("strategy space: profile count exceeds the dense-table limit");
  return *count_;
}

bool StrategySpace::contains(const Profile& a) const {
  if (a.size() != players()) return false;
  for (int i = 0; i < players(); ++i)
    if (a[i] < 0 || a[i] >= strategy_count(i)) return false;
  return true;
}

std::size_t StrategySpace::rank(const Profile& a) const {
  std::size_t r = 0;
  for (int i = 0; i < players(); ++i) r += static_cast<std::size_t>(a[i]) * stride(i);
  return r;
}

Profile StrategySpace::unrank(std::size_t rank) const {
  std::vector<int> s(m_.size());
  for (std::size_t i = 0; i < m_.size(); ++i) {
    s[i] = static_cast<int>(rank % static_cast<std::size_t>(m_[i]));
    rank /= static_cast<std::size_t>(m_[i]);
  }
  return Profile(std::move(s));
}

int StrategySpace::coord_of_rank(std::size_t rank, int i) const {
  return static_cast<int>((rank / stride(i)) % static_cast<std::size_t>(strategy_count(i)));
}

std::size_t StrategySpace::with_coord(std::size_t rank, int i, int value) const {
  int cur = coord_of_rank(rank, i);
  return rank + (static_cast<std::size_t>(value) - static_cast<std::size_t>(cur)) * stride(i);
}

std::size_t StrategySpace::drop_rank(std::size_t rank, int i) const {
  std::size_t low = rank % stride(i);
  std::size_t high = rank / (stride(i) * static_cast<std::size_t>(strategy_count(i)));
  return low + high * stride(i);
}

std::size_t StrategySpace::drop_count(int i) const {
  return table_size() / static_cast<std::size_t>(strategy_count(i));
}

std::size_t StrategySpace::restricted_rank(const Profile& a, const std::vector<int>& members) const {
  std::size_t r = 0;
  std::size_t s = 1;
  for (int v : members) {
    r += static_cast<std::size_t>(a[v]) * s;
    s *= static_cast<std::size_t>(strategy_count(v));
  }
  return r;
}

std::size_t StrategySpace::restricted_size(const std::vector<int>& counts) {
  std::size_t s = 1;
  for (int m : counts) {
    if (m < 1) throw std::invalid_argument("restricted space: m < 1");
    if (s > (std::numeric_limits<std::size_t>::max() / 2) / static_cast<std::size_t>(m))
      throw std::length_error("restricted space: too large");
    s *= static_cast<std::size_t>(m);
  }
  return s;
}

std::vector<int> StrategySpace::counts_of(const std::vector<int>& members) const {
  std::vector<int> c;
  c.reserve(members.size());
  for (int v : members) c.push_back(strategy_count(v));
  return c;
}

}  // namespace gpg

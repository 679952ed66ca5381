#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace autodrive::qlearn {

inline constexpr std::size_t kStateDims = 5;

// One bucket per radar sensor.
using StateIndex = std::array<int, kStateDims>;

// Dense (b, b, b, b, b, |A|) table, row-major with the action innermost.
class QTable {
 public:
  QTable() = default;
  QTable(int buckets, int action_count, std::uint64_t seed = 0);

  int buckets() const { return buckets_; }
  int action_count() const { return action_count_; }
  std::uint64_t seed() const { return seed_; }
  std::size_t state_count() const;

  std::size_t offset(const StateIndex& s) const;
  double& at(const StateIndex& s, int action) { return values_[offset(s) + static_cast<std::size_t>(action)]; }
  double at(const StateIndex& s, int action) const {
    return values_[offset(s) + static_cast<std::size_t>(action)];
  }
  std::span<const double> row(const StateIndex& s) const {
    return {values_.data() + offset(s), static_cast<std::size_t>(action_count_)};
  }

  std::span<const double> values() const { return values_; }
  std::span<double> values() { return values_; }

  // FNV-1a over the raw value bytes; cheap change detection for tests and logs.
  std::uint64_t fingerprint() const;

  bool operator==(const QTable&) const = default;

 private:
  int buckets_ = 0;
  int action_count_ = 0;
  std::uint64_t seed_ = 0;
  std::vector<double> values_;
};

// Binary layout: "AQTABLE1", u32 buckets, u32 action_count, u64 seed,
// u64 value count, then little-endian IEEE doubles in row-major order.
void save_qtable(const QTable& table, const std::filesystem::path& path);
QTable load_qtable(const std::filesystem::path& path);
// Also rejects a table whose shape differs from the expected one.
QTable load_qtable(const std::filesystem::path& path, int expected_buckets,
                   int expected_action_count);

}  // namespace autodrive::qlearn

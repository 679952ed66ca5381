#include "autodrive/qlearn/qtable.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <string>

namespace autodrive::qlearn {

static_assert(std::endian::native == std::endian::little,
              "Q-table files are written in host order; big-endian hosts are unsupported");

namespace {
constexpr char kMagic[8] = {'A', 'Q', 'T', 'A', 'B', 'L', 'E', '1'};

template <class T>
void put(std::ostream& out, T v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof v);
}

template <class T>
T get(std::istream& in, const std::filesystem::path& path) {
  T v{};
  in.read(reinterpret_cast<char*>(&v), sizeof v);
  if (in.gcount() != static_cast<std::streamsize>(sizeof v)) {
    throw std::runtime_error(path.string() + ": truncated Q-table file");
  }
  return v;
}

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}
}  // namespace

QTable::QTable(int buckets, int action_count, std::uint64_t seed)
    : buckets_(buckets), action_count_(action_count), seed_(seed) {
  if (buckets < 2) throw std::invalid_argument("Q-table needs at least 2 buckets");
  if (action_count < 1) throw std::invalid_argument("Q-table needs at least 1 action");
  values_.assign(state_count() * static_cast<std::size_t>(action_count), 0.0);
}

std::size_t QTable::state_count() const {
  return ipow(static_cast<std::size_t>(buckets_), kStateDims);
}

std::size_t QTable::offset(const StateIndex& s) const {
  std::size_t idx = 0;
  for (int b : s) {
    if (b < 0 || b >= buckets_) {
      throw std::out_of_range("state bucket " + std::to_string(b) + " outside [0, " +
                              std::to_string(buckets_) + ")");
    }
    idx = idx * static_cast<std::size_t>(buckets_) + static_cast<std::size_t>(b);
  }
  return idx * static_cast<std::size_t>(action_count_);
}

std::uint64_t QTable::fingerprint() const {
  std::uint64_t h = 1469598103934665603ULL;
  const auto* bytes = reinterpret_cast<const unsigned char*>(values_.data());
  for (std::size_t i = 0; i < values_.size() * sizeof(double); ++i) {
    h ^= bytes[i];
    h *= 1099511628211ULL;
  }
  return h;
}

void save_qtable(const QTable& table, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out.write(kMagic, sizeof kMagic);
  put<std::uint32_t>(out, static_cast<std::uint32_t>(table.buckets()));
  put<std::uint32_t>(out, static_cast<std::uint32_t>(table.action_count()));
  put<std::uint64_t>(out, table.seed());
  put<std::uint64_t>(out, table.values().size());
  out.write(reinterpret_cast<const char*>(table.values().data()),
            static_cast<std::streamsize>(table.values().size() * sizeof(double)));
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

QTable load_qtable(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  char magic[sizeof kMagic] = {};
  in.read(magic, sizeof magic);
  if (in.gcount() != static_cast<std::streamsize>(sizeof magic) ||
      std::memcmp(magic, kMagic, sizeof kMagic) != 0) {
    throw std::runtime_error(path.string() + ": not a Q-table file");
  }
  const auto buckets = get<std::uint32_t>(in, path);
  const auto actions = get<std::uint32_t>(in, path);
  const auto seed = get<std::uint64_t>(in, path);
  const auto count = get<std::uint64_t>(in, path);
  if (buckets < 2 || buckets > 64 || actions < 1 || actions > 64) {
    throw std::runtime_error(path.string() + ": implausible Q-table shape");
  }
  QTable table(static_cast<int>(buckets), static_cast<int>(actions), seed);
  if (count != table.values().size()) {
    throw std::runtime_error(path.string() + ": header shape does not match value count");
  }
  in.read(reinterpret_cast<char*>(table.values().data()),
          static_cast<std::streamsize>(count * sizeof(double)));
  if (in.gcount() != static_cast<std::streamsize>(count * sizeof(double))) {
    throw std::runtime_error(path.string() + ": truncated Q-table values");
  }
  if (in.peek() != std::char_traits<char>::eof()) {
    throw std::runtime_error(path.string() + ": trailing bytes after Q-table values");
  }
  return table;
}

QTable load_qtable(const std::filesystem::path& path, int expected_buckets,
                   int expected_action_count) {
  QTable table = load_qtable(path);
  if (table.buckets() != expected_buckets || table.action_count() != expected_action_count) {
    throw std::runtime_error(path.string() + ": Q-table shape (" + std::to_string(table.buckets()) +
                             " buckets, " + std::to_string(table.action_count()) +
                             " actions) does not match expected (" + std::to_string(expected_buckets) +
                             ", " + std::to_string(expected_action_count) + ")");
  }
  return table;
}

}  // namespace autodrive::qlearn

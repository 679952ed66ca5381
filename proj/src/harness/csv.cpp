#include "autodrive/harness/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace autodrive::harness {

std::size_t CsvTable::column(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  throw std::runtime_error("missing column '" + std::string(name) + "'");
}

bool CsvTable::has_column(std::string_view name) const {
  for (const auto& h : header) {
    if (h == name) return true;
  }
  return false;
}

std::vector<double> CsvTable::numbers(std::string_view name) const {
  const std::size_t c = column(name);
  std::vector<double> out;
  out.reserve(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::string& s = rows[r].at(c);
    double v = 0.0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || end != s.data() + s.size()) {
      throw std::runtime_error("column '" + std::string(name) + "' row " + std::to_string(r + 1) +
                               ": '" + s + "' is not a number");
    }
    out.push_back(v);
  }
  return out;
}

std::string format_number(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("refusing to write a non-finite value to CSV");
  if (v == 0.0) v = 0.0;  // no "-0"
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
  return std::string(buf, end);
}

std::string format_number(long long v) { return std::to_string(v); }

CsvTable episodes_table(std::span<const qlearn::EpisodeRecord> records) {
  CsvTable t{kEpisodeColumns, {}};
  for (const auto& r : records) {
    t.rows.push_back({format_number(static_cast<long long>(r.episode)), format_number(r.total_reward),
                      format_number(static_cast<long long>(r.steps)), format_number(r.distance),
                      format_number(static_cast<long long>(r.checkpoints_hit)),
                      format_number(static_cast<long long>(r.laps)), format_number(r.epsilon),
                      format_number(r.lr), std::string(qlearn::to_string(r.terminal))});
  }
  return t;
}

CsvTable block_average_table(std::span<const qlearn::EpisodeRecord> records, int block) {
  if (block <= 0) throw std::invalid_argument("block size must be positive");
  CsvTable t{kAvg100Columns, {}};
  const auto n = records.size();
  const auto b = static_cast<std::size_t>(block);
  for (std::size_t start = 0, k = 0; start < n; start += b, ++k) {
    const std::size_t stop = std::min(n, start + b);
    double sum = 0.0;
    for (std::size_t i = start; i < stop; ++i) sum += records[i].total_reward;
    t.rows.push_back({format_number(static_cast<long long>(k)),
                      format_number(static_cast<long long>(records[start].episode)),
                      format_number(sum / static_cast<double>(stop - start))});
  }
  return t;
}

CsvTable generations_table(std::span<const neat::GenerationStats> stats) {
  CsvTable t{kGenerationColumns, {}};
  for (const auto& s : stats) {
    t.rows.push_back({format_number(static_cast<long long>(s.generation)), format_number(s.best_fitness),
                      format_number(s.mean_fitness),
                      format_number(static_cast<long long>(s.species_count))});
  }
  return t;
}

CsvTable species_table(std::span<const neat::GenerationStats> stats) {
  CsvTable t{kSpeciesColumns, {}};
  for (const auto& s : stats) {
    for (const auto& sp : s.species) {
      t.rows.push_back({format_number(static_cast<long long>(s.generation)),
                        format_number(static_cast<long long>(sp.species_id)),
                        format_number(static_cast<long long>(sp.size)), format_number(sp.best_fitness),
                        format_number(static_cast<long long>(sp.stagnation))});
    }
  }
  return t;
}

void validate_table(const CsvTable& t, std::span<const std::string> schema) {
  if (!std::equal(t.header.begin(), t.header.end(), schema.begin(), schema.end())) {
    std::string want;
    for (const auto& s : schema) want += (want.empty() ? "" : ",") + s;
    throw std::runtime_error("CSV header does not match schema " + want);
  }
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    if (t.rows[r].size() != t.header.size()) {
      throw std::runtime_error("CSV row " + std::to_string(r + 1) + " has " +
                               std::to_string(t.rows[r].size()) + " fields, expected " +
                               std::to_string(t.header.size()));
    }
    for (const auto& f : t.rows[r]) {
      if (f.empty() || f.find_first_of(",\"\r\n") != std::string::npos) {
        throw std::runtime_error("CSV row " + std::to_string(r + 1) + ": bad field '" + f + "'");
      }
    }
  }
}

void write_csv(const std::filesystem::path& path, const CsvTable& t,
               std::span<const std::string> schema) {
  validate_table(t, schema);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  auto line = [&](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << fields[i];
    out << '\n';
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  auto split = [](const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) out.push_back(field);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
  };
  CsvTable t;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (t.header.empty()) {
      t.header = split(line);
    } else {
      t.rows.push_back(split(line));
      if (t.rows.back().size() != t.header.size()) {
        throw std::runtime_error(path.string() + ": row " + std::to_string(t.rows.size()) +
                                 " has the wrong number of fields");
      }
    }
  }
  if (t.header.empty()) throw std::runtime_error(path.string() + ": empty CSV");
  return t;
}

}  // namespace autodrive::harness

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "autodrive/harness/csv.hpp"

namespace autodrive::harness {

enum class PlotKind {
  RewardPerEpisodeAvg100,
  RewardPerEpisode,
  BestFitness,
  BestMeanFitness,
  MeanFitness,
  SpeciesFitness,
  SpeciesDiversity,
};

inline constexpr PlotKind kAllPlotKinds[] = {
    PlotKind::RewardPerEpisodeAvg100, PlotKind::RewardPerEpisode, PlotKind::BestFitness,
    PlotKind::BestMeanFitness,        PlotKind::MeanFitness,      PlotKind::SpeciesFitness,
    PlotKind::SpeciesDiversity};

std::string_view to_string(PlotKind k);
std::optional<PlotKind> parse_plot_kind(std::string_view name);

// Columns the source CSV must carry for a kind; the first is the x axis.
std::vector<std::string> required_columns(PlotKind k);

struct PlotSpec {
  PlotKind kind = PlotKind::RewardPerEpisode;
  std::filesystem::path source;
  std::filesystem::path output;
};

// Line chart as SVG text. Same table in, same bytes out.
// Throws std::runtime_error on a missing column or an empty table.
std::string render_svg(PlotKind kind, const CsvTable& table);

void render_plot(const PlotSpec& spec);

}  // namespace autodrive::harness

#include "autodrive/harness/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <stdexcept>

namespace autodrive::harness {

namespace {

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

struct KindInfo {
  PlotKind kind;
  const char* name;
  const char* title;
  const char* x_label;
  const char* y_label;
};

constexpr KindInfo kKinds[] = {
    {PlotKind::RewardPerEpisodeAvg100, "RewardPerEpisodeAvg100",
     "Average reward per 100 episodes", "block", "mean reward"},
    {PlotKind::RewardPerEpisode, "RewardPerEpisode", "Reward per episode", "episode", "reward"},
    {PlotKind::BestFitness, "BestFitness", "Best fitness over generations", "generation", "fitness"},
    {PlotKind::BestMeanFitness, "BestMeanFitness", "Best and mean fitness over generations",
     "generation", "fitness"},
    {PlotKind::MeanFitness, "MeanFitness", "Mean fitness over generations", "generation", "fitness"},
    {PlotKind::SpeciesFitness, "SpeciesFitness", "Species fitness over generations", "generation",
     "best fitness"},
    {PlotKind::SpeciesDiversity, "SpeciesDiversity", "Species diversity over generations",
     "generation", "species"},
};

const KindInfo& info(PlotKind k) {
  for (const auto& i : kKinds) {
    if (i.kind == k) return i;
  }
  throw std::logic_error("unknown plot kind");
}

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                                "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string fixed(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s(buf);
  if (s == "-0.00") s = "0.00";
  return s;
}

std::string tick_label(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  std::string s(buf);
  if (s == "-0") s = "0";
  return s;
}

std::vector<Series> extract(PlotKind kind, const CsvTable& t) {
  for (const auto& c : required_columns(kind)) t.column(c);
  if (t.rows.empty()) throw std::runtime_error(std::string(info(kind).name) + ": CSV has no data rows");

  switch (kind) {
    case PlotKind::RewardPerEpisodeAvg100:
      return {{"mean reward", t.numbers("block"), t.numbers("mean_reward")}};
    case PlotKind::RewardPerEpisode:
      return {{"reward", t.numbers("episode"), t.numbers("total_reward")}};
    case PlotKind::BestFitness:
      return {{"best", t.numbers("generation"), t.numbers("best_fitness")}};
    case PlotKind::BestMeanFitness:
      return {{"best", t.numbers("generation"), t.numbers("best_fitness")},
              {"mean", t.numbers("generation"), t.numbers("mean_fitness")}};
    case PlotKind::MeanFitness:
      return {{"mean", t.numbers("generation"), t.numbers("mean_fitness")}};
    case PlotKind::SpeciesDiversity:
      return {{"species", t.numbers("generation"), t.numbers("species_count")}};
    case PlotKind::SpeciesFitness: {
      const auto gen = t.numbers("generation");
      const auto id = t.numbers("species_id");
      const auto fit = t.numbers("best_fitness");
      std::map<long long, Series> by_id;
      for (std::size_t i = 0; i < gen.size(); ++i) {
        Series& s = by_id[static_cast<long long>(id[i])];
        s.label = "species " + std::to_string(static_cast<long long>(id[i]));
        s.x.push_back(gen[i]);
        s.y.push_back(fit[i]);
      }
      std::vector<Series> out;
      for (auto& [k, s] : by_id) out.push_back(std::move(s));
      return out;
    }
  }
  throw std::logic_error("unknown plot kind");
}

}  // namespace

std::string_view to_string(PlotKind k) { return info(k).name; }

std::optional<PlotKind> parse_plot_kind(std::string_view name) {
  for (const auto& i : kKinds) {
    if (name == i.name) return i.kind;
  }
  return std::nullopt;
}

std::vector<std::string> required_columns(PlotKind k) {
  switch (k) {
    case PlotKind::RewardPerEpisodeAvg100: return {"block", "mean_reward"};
    case PlotKind::RewardPerEpisode: return {"episode", "total_reward"};
    case PlotKind::BestFitness: return {"generation", "best_fitness"};
    case PlotKind::BestMeanFitness: return {"generation", "best_fitness", "mean_fitness"};
    case PlotKind::MeanFitness: return {"generation", "mean_fitness"};
    case PlotKind::SpeciesFitness: return {"generation", "species_id", "best_fitness"};
    case PlotKind::SpeciesDiversity: return {"generation", "species_count"};
  }
  throw std::logic_error("unknown plot kind");
}

std::string render_svg(PlotKind kind, const CsvTable& table) {
  const std::vector<Series> series = extract(kind, table);
  const KindInfo& ki = info(kind);

  double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
  for (const auto& s : series) {
    for (double v : s.x) x0 = std::min(x0, v), x1 = std::max(x1, v);
    for (double v : s.y) y0 = std::min(y0, v), y1 = std::max(y1, v);
  }
  if (x1 == x0) x0 -= 0.5, x1 += 0.5;
  if (y1 == y0) y0 -= 0.5, y1 += 0.5;

  constexpr double W = 800, H = 480, L = 80, R = 150, T = 40, B = 60;
  const double pw = W - L - R, ph = H - T - B;
  auto px = [&](double x) { return L + (x - x0) / (x1 - x0) * pw; };
  auto py = [&](double y) { return T + ph - (y - y0) / (y1 - y0) * ph; };

  std::string o;
  o += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"480\" viewBox=\"0 0 800 480\">\n";
  o += "<rect width=\"800\" height=\"480\" fill=\"white\"/>\n";
  o += "<text x=\"" + fixed(L + pw / 2) + "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">" +
       ki.title + "</text>\n";
  o += "<g stroke=\"black\" stroke-width=\"1\">\n";
  o += "<line x1=\"" + fixed(L) + "\" y1=\"" + fixed(T + ph) + "\" x2=\"" + fixed(L + pw) + "\" y2=\"" + fixed(T + ph) + "\"/>\n";
  o += "<line x1=\"" + fixed(L) + "\" y1=\"" + fixed(T) + "\" x2=\"" + fixed(L) + "\" y2=\"" + fixed(T + ph) + "\"/>\n";
  o += "</g>\n<g font-family=\"sans-serif\" font-size=\"11\">\n";
  for (int i = 0; i <= 4; ++i) {
    const double xv = x0 + (x1 - x0) * i / 4.0;
    const double yv = y0 + (y1 - y0) * i / 4.0;
    o += "<text x=\"" + fixed(px(xv)) + "\" y=\"" + fixed(T + ph + 16) + "\" text-anchor=\"middle\">" +
         tick_label(xv) + "</text>\n";
    o += "<text x=\"" + fixed(L - 6) + "\" y=\"" + fixed(py(yv) + 4) + "\" text-anchor=\"end\">" +
         tick_label(yv) + "</text>\n";
  }
  o += "<text x=\"" + fixed(L + pw / 2) + "\" y=\"" + fixed(H - 16) + "\" text-anchor=\"middle\">" +
       ki.x_label + "</text>\n";
  o += "<text x=\"18\" y=\"" + fixed(T + ph / 2) + "\" text-anchor=\"middle\" transform=\"rotate(-90 18 " +
       fixed(T + ph / 2) + ")\">" + ki.y_label + "</text>\n";
  o += "</g>\n";

  for (std::size_t si = 0; si < series.size(); ++si) {
    const Series& s = series[si];
    const char* color = kPalette[si % std::size(kPalette)];
    o += "<polyline fill=\"none\" stroke=\"" + std::string(color) + "\" stroke-width=\"1.5\" data-label=\"" +
         s.label + "\" points=\"";
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      o += (i ? " " : "") + fixed(px(s.x[i])) + "," + fixed(py(s.y[i]));
    }
    o += "\"/>\n";
    if (si < 12) {
      const double ly = T + 14 + 16.0 * static_cast<double>(si);
      o += "<line x1=\"" + fixed(L + pw + 12) + "\" y1=\"" + fixed(ly - 4) + "\" x2=\"" + fixed(L + pw + 32) +
           "\" y2=\"" + fixed(ly - 4) + "\" stroke=\"" + color + "\" stroke-width=\"2\"/>\n";
      o += "<text x=\"" + fixed(L + pw + 36) + "\" y=\"" + fixed(ly) +
           "\" font-family=\"sans-serif\" font-size=\"11\">" + s.label + "</text>\n";
    }
  }
  o += "</svg>\n";
  return o;
}

void render_plot(const PlotSpec& spec) {
  const std::string svg = render_svg(spec.kind, read_csv(spec.source));
  std::ofstream out(spec.output, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + spec.output.string() + " for writing");
  out << svg;
  if (!out) throw std::runtime_error("failed writing " + spec.output.string());
}

}  // namespace autodrive::harness

#include "wavecgh/metrics.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

#include <json.hpp>

#include "wavecgh/angular_spectrum.hpp"
#include "wavecgh/errors.hpp"

namespace wavecgh {

namespace {

// Summed-area table with a zero top row and left column, so any window sum
// is four lookups.
std::vector<double> integral_table(const RealImage& a, const RealImage& b, int which) {
  const int w = a.width();
  const int h = a.height();
  std::vector<double> table(std::size_t(w + 1) * (h + 1), 0.0);
  for (int y = 0; y < h; ++y) {
    const double* ra = a.row(y);
    const double* rb = b.row(y);
    double* cur = table.data() + std::size_t(y + 1) * (w + 1);
    const double* prev = table.data() + std::size_t(y) * (w + 1);
    for (int x = 0; x < w; ++x) {
      double v = 0.0;
      switch (which) {
        case 0: v = ra[x]; break;
        case 1: v = rb[x]; break;
        case 2: v = ra[x] * ra[x]; break;
        case 3: v = rb[x] * rb[x]; break;
        case 4: v = ra[x] * rb[x]; break;
      }
      cur[x + 1] = v + cur[x] + prev[x + 1] - prev[x];
    }
  }
  return table;
}

double window_sum(const std::vector<double>& table, int stride, int x, int y, int window) {
  const auto idx = [stride](int col, int row) { return std::size_t(row) * stride + col; };
  return table[idx(x + window, y + window)] - table[idx(x, y + window)] -
         table[idx(x + window, y)] + table[idx(x, y)];
}

}  // namespace

double ssim(const RealImage& a, const RealImage& b, int window, double k1, double k2,
            double dynamic_range) {
  if (!a.same_size(b)) throw ValidationError("ssim: image sizes differ");
  if (window <= 0 || window > std::min(a.width(), a.height())) {
    throw ValidationError("ssim: window must fit inside the images");
  }
  if (!(dynamic_range > 0.0)) throw ValidationError("ssim: dynamic range must be positive");

  const auto sa = integral_table(a, b, 0);
  const auto sb = integral_table(a, b, 1);
  const auto saa = integral_table(a, b, 2);
  const auto sbb = integral_table(a, b, 3);
  const auto sab = integral_table(a, b, 4);

  const int stride = a.width() + 1;
  const double c1 = (k1 * dynamic_range) * (k1 * dynamic_range);
  const double c2 = (k2 * dynamic_range) * (k2 * dynamic_range);
  const double inv_n = 1.0 / (double(window) * double(window));

  double total = 0.0;
  std::size_t count = 0;
  for (int y = 0; y + window <= a.height(); ++y) {
    for (int x = 0; x + window <= a.width(); ++x) {
      const double mu_a = window_sum(sa, stride, x, y, window) * inv_n;
      const double mu_b = window_sum(sb, stride, x, y, window) * inv_n;
      const double var_a = window_sum(saa, stride, x, y, window) * inv_n - mu_a * mu_a;
      const double var_b = window_sum(sbb, stride, x, y, window) * inv_n - mu_b * mu_b;
      const double cov = window_sum(sab, stride, x, y, window) * inv_n - mu_a * mu_b;
      const double score = ((2.0 * mu_a * mu_b + c1) * (2.0 * cov + c2)) /
                           ((mu_a * mu_a + mu_b * mu_b + c1) * (var_a + var_b + c2));
      total += score;
      ++count;
    }
  }
  return total / double(count);
}

MetricsReport build_report(const ProgressiveResult& result, const RealImage& oracle_recon,
                           const SceneParams& scene, bool intensity) {
  MetricsReport report;
  report.intensity = intensity;
  report.pointwise_ops =
      std::uint64_t(scene.plane_size()) * std::uint64_t(scene.plane_size());

  const auto [lo, hi] =
      std::minmax_element(oracle_recon.data().begin(), oracle_recon.data().end());
  const double range = *hi - *lo;
  report.dynamic_range = range > 0.0 ? range : 1.0;

  std::uint64_t cumulative = 0;
  for (int s = 0; s < 4; ++s) {
    const RealImage recon = reconstruct(result.stage(s), scene, intensity);
    StageMetrics m;
    m.name = std::string(kStageNames[s]);
    m.ssim = ssim(recon, oracle_recon, report.window, report.k1, report.k2,
                  report.dynamic_range);
    m.ops = result.ops.get(kStageOpLevels[s]);
    cumulative += m.ops;
    m.ops_cumulative = cumulative;
    report.stages.push_back(std::move(m));
  }
  return report;
}

std::string MetricsReport::to_json() const {
  nlohmann::json j;
  j["metric"] = {{"name", "ssim"},
                 {"window_type", "box"},
                 {"window", window},
                 {"k1", k1},
                 {"k2", k2},
                 {"dynamic_range", dynamic_range},
                 {"reconstruction", intensity ? "intensity" : "magnitude"}};
  j["pointwise_ops"] = pointwise_ops;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& s : stages) {
    rows.push_back({{"name", s.name},
                    {"ssim", s.ssim},
                    {"ops", s.ops},
                    {"ops_cumulative", s.ops_cumulative}});
  }
  j["stages"] = rows;
  return j.dump(2) + "\n";
}

std::string MetricsReport::to_table() const {
  char line[160];
  std::string out;
  std::snprintf(line, sizeof(line),
                "# ssim: box window %d, k1=%g, k2=%g, dynamic_range=%.9g, recon=%s\n",
                window, k1, k2, dynamic_range, intensity ? "intensity" : "magnitude");
  out += line;
  std::snprintf(line, sizeof(line), "%-12s %10s %12s %16s\n", "stage", "ssim", "ops",
                "ops_cumulative");
  out += line;
  for (const auto& s : stages) {
    std::snprintf(line, sizeof(line), "%-12s %10.6f %12llu %16llu\n", s.name.c_str(), s.ssim,
                  static_cast<unsigned long long>(s.ops),
                  static_cast<unsigned long long>(s.ops_cumulative));
    out += line;
  }
  std::snprintf(line, sizeof(line), "%-12s %10s %12llu\n", "pointwise", "-",
                static_cast<unsigned long long>(pointwise_ops));
  out += line;
  return out;
}

}  // namespace wavecgh

#include "tsboot/io.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>

#include "tsboot/errors.hpp"

namespace tsboot {

namespace {

std::string_view trimmed(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::ofstream open_out(const std::filesystem::path& path) {
  // Binary mode keeps line endings byte-stable across platforms.
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open for writing: " + path.string());
  return out;
}

}  // namespace

std::string format_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_human(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

Series read_series_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open series file: " + path.string());

  std::vector<double> values;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string_view body = trimmed(line);
    if (body.empty() || body.front() == '#') continue;
    double v = 0.0;
    const auto* first = body.data();
    const auto* last = body.data() + body.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last) {
      throw IoError(path.string() + ":" + std::to_string(lineno) + ": not a number: '" +
                    std::string(body) + "'");
    }
    values.push_back(v);
  }
  if (values.empty()) throw IoError(path.string() + ": no observations found");
  try {
    return Series(std::move(values));
  } catch (const InputError& e) {
    throw IoError(path.string() + ": " + e.what());
  }
}

void write_series_file(const std::filesystem::path& path, const Series& series,
                       std::span<const std::string> comments) {
  auto out = open_out(path);
  for (const auto& c : comments) out << "# " << c << "\n";
  for (double v : series.values()) out << format_full(v) << "\n";
  if (!out) throw IoError("write failed: " + path.string());
}

void write_coverage_csv(const std::filesystem::path& path, const CoverageReport& report) {
  auto out = open_out(path);
  out << "dgp,n,alpha,coverage,n_outer,B,failures\n";
  for (std::size_t i = 0; i < report.sample_sizes.size(); ++i) {
    out << report.dgp << ',' << report.sample_sizes[i] << ',' << format_full(report.alpha) << ','
        << format_full(report.coverage[i]) << ',' << report.n_outer << ',' << report.n_bootstrap
        << ',' << report.failures[i] << "\n";
  }
  if (!out) throw IoError("write failed: " + path.string());
}

void write_bound_csv(const std::filesystem::path& path, const BoundResult& result) {
  auto out = open_out(path);
  out << "# train_error=" << format_full(result.train_error) << "\n";
  out << "# eta_quantile=" << format_full(result.eta_quantile) << "\n";
  out << "# upper_bound=" << format_full(result.upper_bound) << "\n";
  out << "# alpha=" << format_full(result.alpha) << "\n";
  out << "# ell=" << result.ell_used << "\n";
  out << "# seed=" << result.seed << "\n";
  out << "# n_failed=" << result.n_failed << "\n";
  out << "replicate,eta\n";
  for (std::size_t i = 0; i < result.eta_samples.size(); ++i) {
    out << i << ',' << format_full(result.eta_samples[i]) << "\n";
  }
  if (!out) throw IoError("write failed: " + path.string());
}

void write_qq_csv(const std::filesystem::path& path, std::span<const QqPoint> points,
                  std::span<const std::string> comments) {
  auto out = open_out(path);
  for (const auto& c : comments) out << "# " << c << "\n";
  out << "theoretical_normal_quantile,sample_quantile\n";
  for (const auto& p : points) {
    out << format_full(p.theoretical) << ',' << format_full(p.sample) << "\n";
  }
  if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace tsboot

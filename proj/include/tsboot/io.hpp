#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "tsboot/bound.hpp"
#include "tsboot/harness.hpp"
#include "tsboot/series.hpp"

namespace tsboot {

/// Full-precision decimal form of a double (%.17g, round-trip exact).
std::string format_full(double v);

/// Short human-readable form (%.4g).
std::string format_human(double v);

/**
 * Read a series file: UTF-8 text, one number per line, blank lines and
 * lines starting with '#' ignored.  Throws IoError with the offending line
 * number on non-numeric content.
 */
Series read_series_file(const std::filesystem::path& path);

/// Write a series file; each comment line is emitted with a '#' prefix.
/// Values print at full precision so a read-back reproduces the series.
void write_series_file(const std::filesystem::path& path, const Series& series,
                       std::span<const std::string> comments);

/// CSV columns: dgp,n,alpha,coverage,n_outer,B,failures.
void write_coverage_csv(const std::filesystem::path& path, const CoverageReport& report);

/// Summary as '#' key=value header lines, then CSV columns: replicate,eta.
void write_bound_csv(const std::filesystem::path& path, const BoundResult& result);

/// CSV columns: theoretical_normal_quantile,sample_quantile.
void write_qq_csv(const std::filesystem::path& path, std::span<const QqPoint> points,
                  std::span<const std::string> comments);

}  // namespace tsboot

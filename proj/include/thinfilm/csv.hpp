#pragma once

// CSV output: comma separated, '.' decimal, one header row, numbers in
// round-trip scientific notation. T, R and A are clamped to [0, 1] here and
// nowhere else.

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>

#include "thinfilm/sweep.hpp"

namespace thinfilm
{

/// Column order of sweep files.
inline constexpr const char *sweep_header =
    "swept_name,swept_value,T,R,A,re_sigma_d,im_sigma_d,re_w,im_w,kd,quad_err,"
    "series_name,series_value,error";

/// Extra columns appended by validation reports.
inline constexpr const char *validation_extra_header =
    "exact_T,exact_R,exact_A,dev_T,dev_R,dev_A,d_over_delta";

/// "%.17e" formatting; NaN and infinities print as nan, inf, -inf.
std::string format_number(double x);

/// Writes header plus one line per row. Throws UsageError on an empty row set.
void emit_csv(std::span<const SweepRow> rows, std::ostream &out);

/// Same, to a file. Throws Error naming the path when it cannot be written.
void emit_csv(std::span<const SweepRow> rows, const std::filesystem::path &path);

void emit_validation_csv(std::span<const ValidatedRow> rows, std::ostream &out);
void emit_validation_csv(std::span<const ValidatedRow> rows, const std::filesystem::path &path);

}  // namespace thinfilm

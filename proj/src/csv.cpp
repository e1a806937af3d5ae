#include "thinfilm/csv.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

#include "thinfilm/error.hpp"

namespace thinfilm
{

namespace
{

double clamp_unit(double x) { return std::isnan(x) ? x : std::clamp(x, 0.0, 1.0); }

// Error messages go into a single unquoted field.
std::string sanitize(std::string text)
{
  std::replace_if(
      text.begin(), text.end(), [](char ch) { return ch == ',' || ch == '\n' || ch == '\r'; },
      ';');
  return text;
}

void write_row(const SweepRow &r, std::ostream &out)
{
  out << r.swept_name << ',' << format_number(r.swept_value) << ','
      << format_number(clamp_unit(r.T)) << ',' << format_number(clamp_unit(r.R)) << ','
      << format_number(clamp_unit(r.A)) << ',' << format_number(r.sigma_d.real()) << ','
      << format_number(r.sigma_d.imag()) << ',' << format_number(r.w.real()) << ','
      << format_number(r.w.imag()) << ',' << format_number(r.kd) << ','
      << format_number(r.quad_err) << ',' << r.series_name << ',';
  if (!r.series_name.empty())
  {
    out << format_number(r.series_value);
  }
  out << ',' << sanitize(r.error);
}

template <class Writer>
void write_file(const std::filesystem::path &path, Writer &&writer)
{
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file)
  {
    throw Error("cannot open '" + path.string() + "' for writing");
  }
  writer(file);
  file.flush();
  if (!file)
  {
    throw Error("write to '" + path.string() + "' failed");
  }
}

}  // namespace

std::string format_number(double x)
{
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17e", x);
  return buf;
}

void emit_csv(std::span<const SweepRow> rows, std::ostream &out)
{
  if (rows.empty())
  {
    throw UsageError("refusing to write a CSV without rows");
  }
  out << sweep_header << '\n';
  for (const SweepRow &r : rows)
  {
    write_row(r, out);
    out << '\n';
  }
}

void emit_csv(std::span<const SweepRow> rows, const std::filesystem::path &path)
{
  write_file(path, [&](std::ostream &out) { emit_csv(rows, out); });
}

void emit_validation_csv(std::span<const ValidatedRow> rows, std::ostream &out)
{
  if (rows.empty())
  {
    throw UsageError("refusing to write a CSV without rows");
  }
  out << sweep_header << ',' << validation_extra_header << '\n';
  for (const ValidatedRow &v : rows)
  {
    write_row(v.row, out);
    const ValidationRow &c = v.check;
    out << ',' << format_number(c.exact.T) << ',' << format_number(c.exact.R) << ','
        << format_number(c.exact.A) << ',' << format_number(c.dev_T()) << ','
        << format_number(c.dev_R()) << ',' << format_number(c.dev_A()) << ','
        << format_number(c.d_over_delta) << '\n';
  }
}

void emit_validation_csv(std::span<const ValidatedRow> rows, const std::filesystem::path &path)
{
  write_file(path, [&](std::ostream &out) { emit_validation_csv(rows, out); });
}

}  // namespace thinfilm

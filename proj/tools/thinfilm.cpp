// thinfilm: T/R/A sweeps of an s-wave on a thin metal film.
//
//   thinfilm sweep --material sodium --swept theta --min 0 --max 1.5707963 --count 200 \
//                  --d 1e-7 --omega-frac 1e-2 --p 0.5 --out fig1.csv
//   thinfilm figure fig1 --out fig1.csv
//   thinfilm validate --out report.csv
//
// `--config FILE` reads flat `key = value` lines whose keys are the flag names
// without the leading dashes; flags given on the command line win.

#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "thinfilm/csv.hpp"
#include "thinfilm/error.hpp"
#include "thinfilm/sweep.hpp"

namespace
{

using namespace thinfilm;

struct SpecOptions
{
  std::string material = "sodium";
  double omega_p = 0.0;
  double v_F = 0.0;
  double nu = 0.0;
  std::string swept = "theta";
  double min = 0.0;
  double max = 1.5707963267948966;
  std::size_t count = 200;
  std::string scale = "linear";
  FixedValues fixed;
  double tol = default_fuchs_tol;
};

void add_spec_options(CLI::App *cmd, SpecOptions &o, bool with_p)
{
  cmd->add_option("--material", o.material, "Material preset")->capture_default_str();
  cmd->add_option("--omega-p", o.omega_p, "Override plasma frequency, rad/s");
  cmd->add_option("--v-f", o.v_F, "Override Fermi velocity, cm/s");
  cmd->add_option("--nu", o.nu, "Override collision frequency, 1/s");
  cmd->add_option("--swept", o.swept, "Swept parameter: theta, d, p or omega")
      ->capture_default_str();
  cmd->add_option("--min", o.min, "Grid lower bound (omega as omega/omega_p)")
      ->capture_default_str();
  cmd->add_option("--max", o.max, "Grid upper bound")->capture_default_str();
  cmd->add_option("--count", o.count, "Grid points")->capture_default_str();
  cmd->add_option("--scale", o.scale, "linear or log")->capture_default_str();
  cmd->add_option("--d", o.fixed.d, "Film thickness, cm")->capture_default_str();
  cmd->add_option("--theta", o.fixed.theta, "Incidence angle, rad")->capture_default_str();
  cmd->add_option("--omega-frac", o.fixed.omega_frac, "omega / omega_p")->capture_default_str();
  if (with_p)
  {
    cmd->add_option("--p", o.fixed.p, "Specularity coefficient")->capture_default_str();
  }
  cmd->add_option("--tol", o.tol, "Relative quadrature tolerance")->capture_default_str();
}

SweepSpec build_spec(const SpecOptions &o)
{
  SweepSpec spec;
  spec.material_name = o.material;
  spec.material = material_preset(o.material);
  if (o.omega_p > 0.0) spec.material.omega_p = o.omega_p;
  if (o.v_F > 0.0) spec.material.v_F = o.v_F;
  if (o.nu > 0.0) spec.material.nu = o.nu;
  spec.swept = parse_parameter(o.swept);
  spec.grid = {o.min, o.max, o.count, parse_scale(o.scale)};
  spec.fixed = o.fixed;
  spec.tol = o.tol;
  return spec;
}

void write_rows(const std::vector<SweepRow> &rows, const std::string &out)
{
  if (out == "-")
  {
    emit_csv(rows, std::cout);
  }
  else
  {
    emit_csv(rows, std::filesystem::path(out));
  }
}

int report_failures(const std::vector<SweepRow> &rows)
{
  std::size_t failed = 0;
  for (const SweepRow &r : rows)
  {
    if (!r.error.empty())
    {
      ++failed;
    }
  }
  if (failed > 0)
  {
    std::cerr << "thinfilm: " << failed << " of " << rows.size()
              << " points failed; see the error column\n";
  }
  return 0;
}

// Expands every `--config FILE` into `--key value` pairs placed before the
// remaining arguments of the same subcommand, so explicit flags override.
std::vector<std::string> expand_config(const std::vector<std::string> &args)
{
  std::vector<std::string> head;
  std::vector<std::string> tail;
  std::vector<std::string> from_config;
  bool seen_subcommand = false;
  for (std::size_t i = 0; i < args.size(); ++i)
  {
    const std::string &a = args[i];
    std::string file;
    if (a == "--config" && i + 1 < args.size())
    {
      file = args[++i];
    }
    else if (a.rfind("--config=", 0) == 0)
    {
      file = a.substr(9);
    }
    else
    {
      (seen_subcommand ? tail : head).push_back(a);
      if (!seen_subcommand && !a.empty() && a[0] != '-')
      {
        seen_subcommand = true;
      }
      continue;
    }
    for (const CLI::ConfigItem &item : CLI::ConfigINI().from_file(file))
    {
      const std::string key = item.fullname();
      if (key == "config" || key.empty())
      {
        continue;
      }
      from_config.push_back("--" + key);
      for (const std::string &v : item.inputs)
      {
        from_config.push_back(v);
      }
    }
  }
  // Positional arguments (the figure name) stay in front of the options.
  std::vector<std::string> result = head;
  while (!tail.empty() && !tail.front().empty() && tail.front()[0] != '-')
  {
    result.push_back(tail.front());
    tail.erase(tail.begin());
  }
  result.insert(result.end(), from_config.begin(), from_config.end());
  result.insert(result.end(), tail.begin(), tail.end());
  return result;
}

}  // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Transmission, reflection and absorption of an s-wave by a thin metal film",
               "thinfilm"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  unsigned threads = 0;
  std::string out = "-";

  SpecOptions sweep_opts;
  CLI::App *sweep = app.add_subcommand("sweep", "Sweep one parameter with the others fixed");
  add_spec_options(sweep, sweep_opts, true);
  sweep->add_option("--out", out, "Output CSV path, - for stdout")->capture_default_str();
  sweep->add_option("--threads", threads, "Worker threads, 0 = all cores");
  sweep->add_option("--config", "Flat key = value file with flag names as keys");

  std::string figure_name;
  double figure_tol = default_fuchs_tol;
  CLI::App *figure = app.add_subcommand("figure", "Run a preset figure sweep");
  figure->add_option("name", figure_name, "fig1, fig2, fig3, fig4 or fig5")->required();
  figure->add_option("--out", out, "Output CSV path, - for stdout")->capture_default_str();
  figure->add_option("--threads", threads, "Worker threads, 0 = all cores");
  figure->add_option("--tol", figure_tol, "Relative quadrature tolerance")->capture_default_str();

  SpecOptions validate_opts;
  validate_opts.swept = "d";
  validate_opts.min = 1e-9;
  validate_opts.max = 5e-5;
  validate_opts.count = 48;
  validate_opts.scale = "log";
  validate_opts.fixed.p = 1.0;
  CLI::App *validate =
      app.add_subcommand("validate", "Compare thin-film formulas with the exact local slab (p = 1)");
  add_spec_options(validate, validate_opts, false);
  validate->add_option("--out", out, "Output CSV path, - for stdout")->capture_default_str();
  validate->add_option("--config", "Flat key = value file with flag names as keys");

  try
  {
    std::vector<std::string> args(argv + 1, argv + argc);
    args = expand_config(args);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  }
  catch (const CLI::ParseError &e)
  {
    return app.exit(e);
  }

  try
  {
    if (*sweep)
    {
      const std::vector<SweepRow> rows = run_sweep(build_spec(sweep_opts), threads);
      write_rows(rows, out);
      return report_failures(rows);
    }
    if (*figure)
    {
      SweepSpec spec = figure_preset(figure_name);
      spec.tol = figure_tol;
      const std::vector<SweepRow> rows = run_sweep(spec, threads);
      write_rows(rows, out);
      return report_failures(rows);
    }
    if (*validate)
    {
      const std::vector<ValidatedRow> rows = run_validation(build_spec(validate_opts));
      if (out == "-")
      {
        emit_validation_csv(rows, std::cout);
      }
      else
      {
        emit_validation_csv(rows, std::filesystem::path(out));
      }
    }
  }
  catch (const thinfilm::UsageError &e)
  {
    std::cerr << "thinfilm: " << e.what() << '\n';
    return 2;
  }
  catch (const CLI::Error &e)
  {
    std::cerr << "thinfilm: " << e.what() << '\n';
    return 2;
  }
  catch (const thinfilm::Error &e)
  {
    std::cerr << "thinfilm: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

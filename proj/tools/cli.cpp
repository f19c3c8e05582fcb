#include "blaschke/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "blaschke/airy_predictor.hpp"
#include "blaschke/errors.hpp"
#include "blaschke/norms.hpp"
#include "blaschke/rational.hpp"
#include "blaschke/regions.hpp"
#include "blaschke/scaling.hpp"
#include "blaschke/weyl.hpp"
#include "svg.hpp"

namespace blaschke::cli {

namespace {

class ConfigError : public Error {
 public:
  using Error::Error;
};

// Runs a parsing/validation step, reporting any library error as a config error.
template <class F>
auto parse_step(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
}

struct Output {
  std::string name;
  Table table;
  std::optional<Plot> plot;
};

long require_n(const RunConfig& c) {
  if (!c.n) throw ConfigError("--n is required for this command");
  return *c.n;
}

BlaschkeParams params_of(const RunConfig& c) {
  return parse_step([&] { return make_params(parse_rational(c.lambda), require_n(c)); });
}

Engine parse_engine(const std::string& s) {
  if (s == "exact") return Engine::exact;
  if (s == "fft") return Engine::fft;
  if (s == "oscillatory") return Engine::oscillatory;
  throw ConfigError("unknown engine '" + s + "' (exact, fft, oscillatory)");
}

std::vector<Exponent> parse_exponents(const RunConfig& c, std::vector<std::string> fallback) {
  const auto& list = c.p_list.empty() ? fallback : c.p_list;
  std::vector<Exponent> out;
  for (const auto& s : list) out.push_back(parse_step([&] { return Exponent::parse(s); }));
  return out;
}

std::vector<long> parse_grid(const RunConfig& c) {
  if (!c.grid) throw ConfigError("--grid a:b is required for this command");
  const auto colon = c.grid->find(':');
  if (colon == std::string::npos) throw ConfigError("--grid must look like a:b, got '" + *c.grid + "'");
  return parse_step([&] {
    const mpq_class a = parse_rational(c.grid->substr(0, colon));
    const mpq_class b = parse_rational(c.grid->substr(colon + 1));
    if (a.get_den() != 1 || b.get_den() != 1) throw DomainError("grid bounds must be integers");
    const auto g = geometric_grid(a.get_num().get_si(), b.get_num().get_si());
    if (g.back() != b.get_num().get_si()) throw DomainError("grid end must be the start times a power of two");
    validate_scaling_grid(g);
    return g;
  });
}

PrecisionPolicy policy_of(const RunConfig& c, const BlaschkeParams& params) {
  PrecisionPolicy p = PrecisionPolicy::for_params(params);
  if (c.max_bits) p.max_bits = *c.max_bits;
  parse_step([&] {
    p.validate();
    return 0;
  });
  return p;
}

std::string file_tag(const Exponent& p) {
  std::string s = p.str();
  for (char& ch : s)
    if (ch == '/') ch = '_';
  return s;
}

std::vector<PlotBand> region_bands(const BlaschkeParams& params, long kmax) {
  std::vector<PlotBand> bands;
  try {
    const auto part = region_partition(params, default_region_alpha(params));
    const char* fills[] = {"#f4f4f4", "#e8eef7"};
    for (Region r : kAllRegions) {
      if (part.empty(r)) continue;
      const double hi = r == Region::VII ? static_cast<double>(kmax) : static_cast<double>(part.last(r));
      bands.push_back({static_cast<double>(part.first(r)), hi, std::string(to_string(r)),
                       fills[(static_cast<int>(r) - 1) % 2]});
    }
  } catch (const OrderingError&) {
  }
  return bands;
}

CoefficientSeries series_for(Engine engine, const BlaschkeParams& params, long kmax, const PrecisionPolicy& policy) {
  switch (engine) {
    case Engine::exact: return coeff_series_exact(params, kmax, policy);
    case Engine::fft: return coeff_series_fft(params, kmax);
    case Engine::oscillatory: return coeff_series_oscillatory(params, kmax);
  }
  throw ConfigError("unknown engine");
}

// --- commands -------------------------------------------------------------

std::vector<Output> run_coeffs(const RunConfig& c) {
  const auto params = params_of(c);
  const Engine engine = parse_engine(c.engine);
  const PrecisionPolicy policy = policy_of(c, params);
  Output o{"coeffs", {{"k", "value", "abs_error", "engine"}, {}, {}}, std::nullopt};

  if (c.k) {
    if (*c.k < 0) throw ConfigError("--k must be >= 0");
    if (engine == Engine::exact) {
      const Coefficient v = coeff_exact(params, *c.k, policy);
      o.table.rows.push_back({std::to_string(*c.k), format_double(v.value.to_double()), format_double(v.abs_error), "exact"});
    } else if (engine == Engine::oscillatory) {
      const auto v = coeff_oscillatory(params, *c.k);
      o.table.rows.push_back({std::to_string(*c.k), format_double(v.value), format_double(v.error_estimate), "oscillatory"});
    } else {
      const auto s = coeff_series_fft(params, *c.k);
      o.table.rows.push_back({std::to_string(*c.k), format_double(s[*c.k]), format_double(s.achieved_abs_error), "fft"});
    }
    return {o};
  }

  const long kmax = c.kmax ? *c.kmax : default_kmax(params);
  if (kmax < 0) throw ConfigError("--kmax must be >= 0");
  const CoefficientSeries s = series_for(engine, params, kmax, policy);
  const std::string tag(to_string(engine));
  for (long k = 0; k <= kmax; ++k) {
    // Exact values are correctly rounded: error ≤ half an ulp.
    const double err = engine == Engine::exact ? 0.5 * std::fabs(s[k]) * 0x1p-52 : s.achieved_abs_error;
    o.table.rows.push_back({std::to_string(k), format_double(s[k]), format_double(err), tag});
  }
  if (c.emit_svg) {
    Plot plot{"coefficients, lambda=" + c.lambda + ", n=" + std::to_string(params.n()), "k", "B(k)", {}, region_bands(params, kmax)};
    PlotLine line;
    for (long k = 0; k <= kmax; ++k) line.points.emplace_back(static_cast<double>(k), s[k]);
    plot.lines.push_back(std::move(line));
    o.plot = std::move(plot);
  }
  return {o};
}

std::vector<Output> run_norms(const RunConfig& c) {
  const auto params = params_of(c);
  const auto exps = parse_exponents(c, {"1", "2", "4", "inf"});
  const Engine engine = parse_engine(c.engine);
  const PrecisionPolicy policy = policy_of(c, params);
  std::optional<mpq_class> alpha;
  if (c.alpha) alpha = parse_step([&] { return parse_rational(*c.alpha); });

  const long kmax = c.kmax ? *c.kmax : default_kmax(params);
  const CoefficientSeries s = series_for(engine, params, kmax, policy);
  Output o{"norms", {{"p", "value", "tail_certificate", "mass_I", "mass_II", "mass_III", "mass_IV", "mass_V", "mass_VI", "mass_VII"}, {}, {}}, std::nullopt};
  for (const auto& p : exps) {
    const NormReport r = lp_norm(s, p, alpha);
    std::vector<std::string> row{p.str(), format_double(r.value), format_double(r.tail_certificate)};
    for (std::size_t i = 0; i < 7; ++i) row.push_back(r.per_region_mass ? format_double((*r.per_region_mass)[i]) : "");
    o.table.rows.push_back(std::move(row));
  }
  o.table.footer.push_back("engine=" + std::string(to_string(engine)) + ",kmax=" + std::to_string(kmax));
  return {o};
}

std::vector<Output> run_regions(const RunConfig& c) {
  const auto params = params_of(c);
  const mpq_class alpha = c.alpha ? parse_step([&] { return parse_rational(*c.alpha); }) : default_region_alpha(params);
  const auto part = parse_step([&] { return region_partition(params, alpha); });
  Output o{"regions", {{"region", "k_first", "k_last"}, {}, {}}, std::nullopt};
  for (Region r : kAllRegions)
    o.table.rows.push_back({std::string(to_string(r)), std::to_string(part.first(r)),
                            r == Region::VII ? "inf" : std::to_string(part.last(r))});
  o.table.footer.push_back("alpha=" + alpha.get_str());
  return {o};
}

std::vector<Output> run_predict(const RunConfig& c) {
  const auto params = params_of(c);
  const long n = params.n();
  const double top = params.alpha0_inv_d() * static_cast<double>(n);
  const long first = c.k_first ? *c.k_first
                               : std::max(0L, static_cast<long>(std::ceil(top - std::pow(static_cast<double>(n), 0.75))));
  const long last = c.k_last ? *c.k_last : static_cast<long>(std::floor(top + 2 * std::cbrt(static_cast<double>(n))));
  if (first < 0 || last < first) throw ConfigError("prediction range must satisfy 0 <= k_first <= k_last");

  const auto preds = airy_predict_range(params, first, last);
  const auto exact = coeff_series_exact(params, last, policy_of(c, params));
  Output o{"predict", {{"k", "alpha", "airy_argument", "a0", "predicted", "exact", "in_window"}, {}, {}}, std::nullopt};
  PlotLine pl{{}, "#d62728", "predicted", false}, ex{{}, "#1f77b4", "exact", false};
  for (const auto& p : preds) {
    o.table.rows.push_back({std::to_string(p.k), format_double(p.alpha), format_double(p.airy_argument),
                            format_double(p.a0), format_double(p.predicted), format_double(exact[p.k]),
                            p.in_window ? "1" : "0"});
    pl.points.emplace_back(static_cast<double>(p.k), p.predicted);
    ex.points.emplace_back(static_cast<double>(p.k), exact[p.k]);
  }
  if (c.emit_svg)
    o.plot = Plot{"Airy prediction, lambda=" + c.lambda + ", n=" + std::to_string(n), "k", "B(k)", {ex, pl}, {}};
  return {o};
}

std::vector<Output> run_scaling(const RunConfig& c) {
  const mpq_class lambda = parse_step([&] {
    const mpq_class l = parse_rational(c.lambda);
    make_params(l, 1);
    return l;
  });
  const auto grid = parse_grid(c);
  const auto exps = parse_exponents(c, {});
  if (exps.empty()) throw ConfigError("--p is required for scaling");

  std::vector<Output> outs;
  for (const auto& p : exps) {
    const ScalingFit fit = run_norm_scaling(lambda, p, grid);
    Output o{exps.size() == 1 ? "scaling" : "scaling_p" + file_tag(p), {{"n", "norm", "log_n", "log_norm"}, {}, {}}, std::nullopt};
    PlotLine pts{{}, "#1f77b4", "measured", true};
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double ln = std::log(static_cast<double>(grid[i]));
      const double lv = std::log(fit.norms[i]);
      o.table.rows.push_back({std::to_string(grid[i]), format_double(fit.norms[i]), format_double(ln), format_double(lv)});
      pts.points.emplace_back(ln, lv);
    }
    o.table.footer.push_back("slope=" + format_double(fit.fitted_slope) + ",stderr=" + format_double(fit.slope_stderr) +
                             ",theory=" + format_double(fit.theory_slope.get_d()));
    if (fit.log_corrected) o.table.footer.push_back("model=log_norm vs (1/4)log(log n/n)");
    for (const auto& w : fit.warnings) o.table.footer.push_back("warning: " + w);
    if (c.emit_svg)
      o.plot = Plot{"||B||_p scaling, lambda=" + c.lambda + ", p=" + p.str(), "log n", "log norm", {pts}, {}};
    outs.push_back(std::move(o));
  }
  return outs;
}

std::vector<Output> run_weyl(const RunConfig& c) {
  const long n = require_n(c);
  const mpq_class lambda = parse_step([&] {
    const mpq_class l = parse_rational(c.lambda);
    make_params(l, n);
    return l;
  });
  if (c.j == 0) throw ConfigError("--j must be nonzero");
  const WeylExperiment e = weyl_sums(lambda, n, c.j);
  Output o{"weyl", {{"k", "s", "abs_A"}, {}, {}}, std::nullopt};
  PlotLine line{{}, "#2ca02c", "|A_k|", false};
  for (std::size_t i = 0; i < e.s_values.size(); ++i) {
    const long k = e.k_first + static_cast<long>(i);
    const double a = std::abs(e.partial_sums[i]);
    o.table.rows.push_back({std::to_string(k), format_double(e.s_values[i]), format_double(a)});
    line.points.emplace_back(static_cast<double>(k), a);
  }
  std::string hist;
  for (long h : histogram(e.s_values, 16)) hist += (hist.empty() ? "" : ";") + std::to_string(h);
  o.table.footer.push_back("max_abs_A=" + format_double(e.max_abs_A) + ",n=" + std::to_string(n) + ",j=" +
                           std::to_string(c.j) + ",window=" + std::to_string(e.k_first) + ":" + std::to_string(e.k_last));
  o.table.footer.push_back("histogram16=" + hist);
  if (c.emit_svg) o.plot = Plot{"Weyl partial sums, lambda=" + c.lambda + ", n=" + std::to_string(n), "k", "|A_k|", {line}, {}};
  return {o};
}

std::vector<Output> dispatch(const RunConfig& c) {
  switch (c.command) {
    case Command::coeffs: return run_coeffs(c);
    case Command::norms: return run_norms(c);
    case Command::regions: return run_regions(c);
    case Command::predict: return run_predict(c);
    case Command::scaling: return run_scaling(c);
    case Command::weyl: return run_weyl(c);
  }
  throw ConfigError("unknown command");
}

void write_outputs(const RunConfig& c, const std::vector<Output>& outputs, std::ostream& out) {
  if (!c.output_dir) {
    for (const auto& o : outputs) {
      if (o.table.rows.empty()) throw IoError("no records to write for " + o.name);
      write_csv(o.table, out);
    }
    return;
  }
  std::error_code ec;
  std::filesystem::create_directories(*c.output_dir, ec);
  if (ec) throw IoError("cannot create output directory " + c.output_dir->string() + ": " + ec.message());
  for (const auto& o : outputs) {
    emit_csv(o.table, *c.output_dir / (o.name + ".csv"));
    if (o.plot) {
      const auto path = *c.output_dir / (o.name + ".svg");
      std::ofstream f(path, std::ios::binary);
      f << render_svg(*o.plot);
      if (!f) throw IoError("cannot write " + path.string());
    }
  }
}

}  // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_csv(const Table& table, std::ostream& out) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
    out << '\n';
  };
  line(table.header);
  for (const auto& r : table.rows) line(r);
  for (const auto& f : table.footer) out << "# " << f << '\n';
}

void emit_csv(const Table& table, const std::filesystem::path& path) {
  if (table.rows.empty()) throw IoError("refusing to write an empty table to " + path.string());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path.string() + " for writing");
  write_csv(table, f);
  f.flush();
  if (!f) throw IoError("write to " + path.string() + " failed");
}

CoefficientSeries read_coeffs_csv(const std::filesystem::path& path, const BlaschkeParams& params) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open " + path.string());
  std::string line;
  if (!std::getline(f, line) || line != "k,value,abs_error,engine")
    throw IoError(path.string() + " is not a coefficient table");
  CoefficientSeries s(params);
  long expected = 0;
  while (std::getline(f, line)) {
    if (line.empty() || line.front() == '#') continue;
    std::istringstream row(line);
    std::string k, value, err, engine;
    if (!std::getline(row, k, ',') || !std::getline(row, value, ',') || !std::getline(row, err, ',') ||
        !std::getline(row, engine))
      throw IoError("malformed row '" + line + "' in " + path.string());
    try {
      if (std::stol(k) != expected) throw IoError("rows of " + path.string() + " are not consecutive from k=0");
      s.values.push_back(std::stod(value));
      s.achieved_abs_error = std::max(s.achieved_abs_error, std::stod(err));
    } catch (const std::logic_error&) {
      throw IoError("malformed number in row '" + line + "'");
    }
    s.engine = engine == "fft" ? Engine::fft : engine == "oscillatory" ? Engine::oscillatory : Engine::exact;
    ++expected;
  }
  if (s.values.empty()) throw IoError(path.string() + " has no rows");
  s.kmax = static_cast<long>(s.values.size()) - 1;
  if (s.engine == Engine::fft) s.resolution_floor = 1e-12;
  return s;
}

std::optional<long> max_bits_from_env() {
  const char* v = std::getenv("BLASCHKE_MAX_BITS");
  if (!v || !*v) return std::nullopt;
  char* end = nullptr;
  const long bits = std::strtol(v, &end, 10);
  if (*end != '\0' || bits <= 0) throw DomainError(std::string("BLASCHKE_MAX_BITS must be a positive integer, got '") + v + "'");
  return bits;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::vector<Output> outputs;
  try {
    outputs = dispatch(config);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const Error& e) {
    err << "computation error: " << e.what() << '\n';
    return kExitCompute;
  } catch (const std::bad_alloc&) {
    err << "computation error: out of memory\n";
    return kExitCompute;
  }
  try {
    write_outputs(config, outputs, out);
  } catch (const Error& e) {
    err << "I/O error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitOk;
}

}  // namespace blaschke::cli

#include "etorus/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <memory>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "etorus/io.hpp"
#include "etorus/parallel.hpp"
#include "etorus/realization.hpp"
#include "etorus/transform.hpp"

namespace etorus::cli {

namespace {

struct JobConfig {
  std::string family;
  int rank = 0;
  Int level = 0;
  int j = 1;
  std::string format = "csv";
  std::string input;
  std::string output;
  std::string points;
  int resolution = 64;
  std::uint64_t seed = 1;
  int random_vectors = 10;
  unsigned threads = 0;
  std::string which;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

SimpleType resolve_type(const JobConfig& cfg) {
  const auto family = parse_family(cfg.family);
  if (!family) throw ConfigError("family must be one of A, B, C, D (got '" + cfg.family + "')");
  return SimpleType::make(*family, cfg.rank);
}

void require_level(const JobConfig& cfg) {
  if (cfg.level < 1) throw ConfigError("-M must be given and >= 1");
}

io::Format resolve_format(const JobConfig& cfg) {
  if (cfg.format == "csv") return io::Format::csv;
  if (cfg.format == "json") return io::Format::json;
  throw ConfigError("--format must be csv or json");
}

TransformOptions options_for(const JobConfig& cfg) {
  TransformOptions opts;
  opts.threads = cfg.threads;
  return opts;
}

/// Output sink: the named file, or `out` when no file was given.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : to_file_(!path.empty()), path_(path) {
    if (to_file_) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw IoError("cannot open output file '" + path + "'");
    }
    stream_ = to_file_ ? file_.get() : &fallback;
  }
  std::ostream& stream() { return *stream_; }
  bool to_file() const { return to_file_; }
  void close() {
    stream_->flush();
    if (to_file_) {
      file_->close();
      if (!*file_) throw IoError("write to '" + path_ + "' failed");
    } else if (!*stream_) {
      throw IoError("write to standard output failed");
    }
  }

 private:
  bool to_file_;
  std::string path_;
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

io::GridFile read_grid_file(const std::string& path) {
  if (path.empty()) throw ConfigError("--input is required");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open input file '" + path + "'");
  return io::read(in);
}

int cmd_info(const JobConfig& cfg, std::ostream& out) {
  const RootSystemData rsd(resolve_type(cfg));
  const int n = rsd.rank();
  out << "type " << rsd.type().name() << '\n';
  out << "cartan_matrix\n";
  for (int i = 0; i < n; ++i) {
    out << ' ';
    for (int k = 0; k < n; ++k) out << std::setw(3) << rsd.cartan()(i, k);
    out << '\n';
  }
  out << "marks " << to_string(rsd.marks()) << '\n';
  out << "dual_marks " << to_string(rsd.dual_marks()) << '\n';
  out << "coxeter_number m=" << rsd.coxeter() << '\n';
  out << "center_order c=" << rsd.center() << '\n';
  out << "weyl_order |W|=" << rsd.weyl_order() << '\n';
  out << "even_weyl_order |W^e|=" << rsd.weyl_order() / 2 << '\n';
  return kOk;
}

int cmd_grid(const JobConfig& cfg, std::ostream& out) {
  const SimpleType type = resolve_type(cfg);
  require_level(cfg);
  const io::Format format = resolve_format(cfg);
  if (cfg.which != "points" && cfg.which != "weights") throw ConfigError("grid expects 'points' or 'weights'");
  const DiscreteETransform t(type, cfg.level, cfg.j, options_for(cfg));
  Sink sink(cfg.output, out);
  const std::vector<Complex> zeros(t.size());
  if (cfg.which == "points")
    io::write(sink.stream(), io::sample_file(t, t.make_samples(zeros)), format);
  else
    io::write(sink.stream(), io::coefficient_file(t, t.make_coefficients(zeros)), format);
  sink.close();
  return kOk;
}

int cmd_transform(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
  const SimpleType type = resolve_type(cfg);
  require_level(cfg);
  const io::Format format = resolve_format(cfg);
  if (cfg.which != "forward" && cfg.which != "inverse") throw ConfigError("transform expects 'forward' or 'inverse'");
  const bool forward = cfg.which == "forward";
  const io::GridFile in = read_grid_file(cfg.input);
  const DiscreteETransform t(type, cfg.level, cfg.j, options_for(cfg));
  const auto values = io::extract_values(in, t, forward ? io::FileKind::samples : io::FileKind::coefficients);

  Sink sink(cfg.output, out);
  PlancherelReport report;
  if (forward) {
    const SampleVector f = t.make_samples(values);
    const CoefficientVector cv = t.forward(f);
    report = t.plancherel_check(f, cv);
    io::write(sink.stream(), io::coefficient_file(t, cv), format);
  } else {
    const CoefficientVector cv = t.make_coefficients(values);
    const SampleVector f = t.inverse(cv);
    report = t.plancherel_check(f, cv);
    io::write(sink.stream(), io::sample_file(t, f), format);
  }
  sink.close();
  std::ostream& summary = sink.to_file() ? out : err;
  summary << "transform " << cfg.which << ' ' << type.name() << " M=" << cfg.level << " j=" << cfg.j << " size=" << t.size()
          << '\n';
  summary << "plancherel lhs=" << io::format_double(report.lhs) << " rhs=" << io::format_double(report.rhs)
          << " reldev=" << io::format_double(report.reldev) << '\n';
  return kOk;
}

int cmd_eval(const JobConfig& cfg, std::ostream& out) {
  const SimpleType type = resolve_type(cfg);
  require_level(cfg);
  if (cfg.resolution < 1) throw ConfigError("--resolution must be >= 1");
  const io::GridFile in = read_grid_file(cfg.input);
  const DiscreteETransform t(type, cfg.level, cfg.j, options_for(cfg));
  const CoefficientVector cv = t.make_coefficients(io::extract_values(in, t, io::FileKind::coefficients));

  std::vector<std::vector<double>> ys;
  std::string extra;
  if (!cfg.points.empty()) {
    std::ifstream pin(cfg.points, std::ios::binary);
    if (!pin) throw IoError("cannot open points file '" + cfg.points + "'");
    ys = io::read_points(pin, type.rank);
    extra = "mode=points count=" + std::to_string(ys.size());
  } else {
    if (type.rank > 2) throw ConfigError("mesh emission needs rank 1 or 2; pass --points for higher ranks");
    ys = fundamental_domain_mesh(t.root_system(), cfg.j, cfg.resolution);
    extra = "mode=mesh resolution=" + std::to_string(cfg.resolution);
  }

  const EuclideanRealization real(t.root_system());
  std::vector<io::MeshSample> samples(ys.size());
  parallel_for(ys.size(), resolve_threads(cfg.threads), [&](size_t k) {
    samples[k] = {real.to_cartesian(ys[k]), ys[k], t.interpolate(cv, std::span<const double>(ys[k]))};
  });
  Sink sink(cfg.output, out);
  io::write_mesh(sink.stream(), t.grid_id(), extra, samples);
  sink.close();
  return kOk;
}

struct CheckLine {
  bool pass;
  std::string name;
  std::string detail;
};

int cmd_verify(const JobConfig& cfg, std::ostream& out) {
  const SimpleType type = resolve_type(cfg);
  require_level(cfg);
  if (cfg.random_vectors < 1) throw ConfigError("--vectors must be >= 1");
  const DiscreteETransform t(type, cfg.level, cfg.j, options_for(cfg));
  const RootSystemData& rsd = t.root_system();
  const Int M = cfg.level;
  const int n = rsd.rank();
  std::vector<CheckLine> lines;

  {
    const Int enumerated = static_cast<Int>(t.points().size());
    const Int labels = static_cast<Int>(t.weights().size());
    const Int formula = count_formula(type, M);
    const Int proposition = count_F_M(rsd.marks(), M) + count_F_M(rsd.marks(), M - rsd.coxeter());
    std::ostringstream d;
    d << "|F^e_M|=" << enumerated << " |Lambda^e_M|=" << labels << " formula=" << formula << " proposition=" << proposition;
    if (type.family == Family::B) {
      const Int c_count = count_formula(SimpleType::make(Family::C, n), M);
      d << " C_" << n << "=" << c_count;
      lines.push_back({enumerated == labels && enumerated == formula && enumerated == proposition && enumerated == c_count,
                       "count", d.str()});
    } else {
      lines.push_back({enumerated == labels && enumerated == formula && enumerated == proposition, "count", d.str()});
    }
  }
  {
    Int sum = 0;
    for (const auto& p : t.points()) sum += p.eps;
    Int expected = rsd.center();
    for (int i = 0; i < n; ++i) expected = checked::mul(expected, M);
    lines.push_back({sum == expected, "eps_sum", "sum eps=" + std::to_string(sum) + " c*M^n=" + std::to_string(expected)});
  }
  {
    size_t mismatches = 0;
    for (const auto& p : t.points())
      if (stabilizer_order_diagram(p.bary, rsd, Lattice::point) != stabilizer_order_brute(p.bary, t.even_group(), rsd, Lattice::point))
        ++mismatches;
    for (const auto& w : t.weights())
      if (stabilizer_order_diagram(w.bary, rsd, Lattice::weight) != stabilizer_order_brute(w.bary, t.even_group(), rsd, Lattice::weight))
        ++mismatches;
    lines.push_back({mismatches == 0, "stabilizers",
                     "diagram vs brute mismatches=" + std::to_string(mismatches) + " of " +
                         std::to_string(t.points().size() + t.weights().size())});
  }
  {
    const GramReport g = t.gram_matrix();
    const double off = g.max_offdiag_abs / t.scale();
    std::ostringstream d;
    d << "diagonal scale c|W^e|M^n=" << io::format_double(t.scale()) << " max offdiag/scale=" << io::format_double(off)
      << " max diag reldev=" << io::format_double(g.max_diag_reldev);
    lines.push_back({off < 1e-9 && g.max_diag_reldev < 1e-10, "gram", d.str()});
  }
  {
    std::mt19937_64 rng(cfg.seed);
    std::normal_distribution<double> normal;
    double max_recon = 0.0, max_planch = 0.0;
    for (int v = 0; v < cfg.random_vectors; ++v) {
      std::vector<Complex> values(t.size());
      for (auto& z : values) z = {normal(rng), normal(rng)};
      const SampleVector f = t.make_samples(values);
      const CoefficientVector cv = t.forward(f);
      const SampleVector back = t.inverse(cv);
      for (size_t k = 0; k < values.size(); ++k) max_recon = std::max(max_recon, std::abs(back.values[k] - values[k]));
      max_planch = std::max(max_planch, t.plancherel_check(f, cv).reldev);
    }
    std::ostringstream d;
    d << "vectors=" << cfg.random_vectors << " seed=" << cfg.seed << " max reconstruction error=" << io::format_double(max_recon)
      << " max plancherel reldev=" << io::format_double(max_planch);
    lines.push_back({max_recon < 1e-9 && max_planch < 1e-10, "round_trip", d.str()});
  }

  bool all = true;
  out << "verify " << type.name() << " M=" << M << " j=" << cfg.j << '\n';
  for (const auto& l : lines) {
    out << (l.pass ? "[PASS] " : "[FAIL] ") << l.name << ": " << l.detail << '\n';
    all = all && l.pass;
  }
  if (!all) {
    out << "failed:";
    for (const auto& l : lines)
      if (!l.pass) out << ' ' << l.name;
    out << '\n';
  }
  return all ? kOk : kVerifyFailed;
}

void add_type_options(CLI::App* sub, JobConfig& cfg) {
  sub->add_option("family,--family", cfg.family, "Root system family (A, B, C, D)")->required();
  sub->add_option("rank,--rank", cfg.rank, "Rank n")->required();
  sub->add_option("--threads", cfg.threads, "Worker threads (default: ETORUS_THREADS, else hardware)");
}

void add_level_options(CLI::App* sub, JobConfig& cfg) {
  sub->add_option("-M,--M,--level", cfg.level, "Grid level M")->required();
  sub->add_option("--j", cfg.j, "Index j of the reflection r_j used for F^e (default 1)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  JobConfig cfg;
  CLI::App app{"Discrete E-transforms on the fundamental domains of even affine Weyl groups"};
  app.name("etorus");
  app.require_subcommand(1);

  auto* info = app.add_subcommand("info", "Root data of a simple type");
  add_type_options(info, cfg);

  auto* grid = app.add_subcommand("grid", "List F^e_M (points) or Lambda^e_M (weights)");
  grid->add_option("which", cfg.which, "points | weights")->required()->check(CLI::IsMember({"points", "weights"}));
  add_type_options(grid, cfg);
  add_level_options(grid, cfg);
  grid->add_option("--format", cfg.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  grid->add_option("--output,-o", cfg.output, "Output file (default stdout)");

  auto* transform = app.add_subcommand("transform", "Forward or inverse discrete E-transform of a file");
  transform->add_option("direction", cfg.which, "forward | inverse")->required()->check(CLI::IsMember({"forward", "inverse"}));
  add_type_options(transform, cfg);
  add_level_options(transform, cfg);
  transform->add_option("--input,-i", cfg.input, "Sample file (forward) or coefficient file (inverse)")->required();
  transform->add_option("--output,-o", cfg.output, "Output file (default stdout)");
  transform->add_option("--format", cfg.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

  auto* eval = app.add_subcommand("eval", "Sample the interpolant of a coefficient file off the grid");
  add_type_options(eval, cfg);
  add_level_options(eval, cfg);
  eval->add_option("--input,-i", cfg.input, "Coefficient file")->required();
  eval->add_option("--output,-o", cfg.output, "Output file (default stdout)");
  eval->add_option("--resolution,-R", cfg.resolution, "Mesh resolution R (rank 1: R points, rank 2: R*R)");
  eval->add_option("--points", cfg.points, "File of omega^vee coordinates to evaluate instead of the mesh");

  auto* verify = app.add_subcommand("verify", "Run the invariant suites for one grid");
  add_type_options(verify, cfg);
  add_level_options(verify, cfg);
  verify->add_option("--seed", cfg.seed, "Seed for the random sample vectors");
  verify->add_option("--vectors", cfg.random_vectors, "Number of random sample vectors (default 10)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidConfig;
  }

  try {
    if (info->parsed()) return cmd_info(cfg, out);
    if (grid->parsed()) return cmd_grid(cfg, out);
    if (transform->parsed()) return cmd_transform(cfg, out, err);
    if (eval->parsed()) return cmd_eval(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidConfig;
  } catch (const InvalidTypeError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidConfig;
  } catch (const SizeLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidConfig;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const GridMismatchError& e) {
    err << "error: grid mismatch: " << e.what() << '\n';
    return kGridMismatch;
  } catch (const io::ParseError& e) {
    err << "error: malformed input: " << e.what() << '\n';
    return kMalformedRows;
  } catch (const InvariantError& e) {
    err << "error: invariant violated: " << e.what() << '\n';
    return kVerifyFailed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidConfig;
  }
  return kInvalidConfig;
}

}  // namespace etorus::cli

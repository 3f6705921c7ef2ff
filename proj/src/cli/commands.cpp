#include "estab/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "estab/acceptance.hpp"
#include "estab/core_stability.hpp"
#include "estab/errors.hpp"
#include "estab/json_writer.hpp"
#include "estab/sphere_family.hpp"
#include "estab/sphere_spectra.hpp"

namespace estab::cli {
namespace {

// Thrown for option combinations CLI11 cannot express.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct IndexOptions {
  std::optional<int> dim;
  std::optional<std::string> lambda;
  std::optional<std::string> spectrum_file;
  std::string functional = "all";
  bool strict = false;
};

struct EnergyOptions {
  int dim = 0;
  std::vector<double> t;
  std::string format = "csv";
};

struct SpectrumOptions {
  int dim = 0;
  std::optional<std::string> lambda;
  std::optional<std::string> up_to;
  std::string format = "json";
};

struct VerifyOptions {
  std::vector<std::string> suites;
};

Rational parse_rational_option(const std::string& text, const char* option) {
  try {
    return parse_rational(text);
  } catch (const ParseError& e) {
    throw UsageError(std::string(option) + ": " + e.what());
  }
}

std::vector<FunctionalKind> parse_functionals(const std::string& text) {
  if (text == "all") {
    return {std::begin(kAllFunctionals), std::end(kAllFunctionals)};
  }
  if (text == "e" || text == "energy") return {FunctionalKind::Energy};
  if (text == "e2" || text == "bienergy") return {FunctionalKind::Bienergy};
  if (text == "e2c" || text == "c_bienergy") return {FunctionalKind::ConformalBienergy};
  throw UsageError("--functional must be one of e, e2, e2c, all");
}

QuadratureConfig quadrature_from_environment() {
  try {
    return QuadratureConfig::from_environment();
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

Json space_json(const EinsteinSpace& space) {
  Json j;
  j["name"] = space.name();
  j["dimension"] = space.dimension();
  j["einstein_constant"] = to_string(space.einstein_constant());
  j["scalar_curvature"] = to_string(space.scalar_curvature());
  return j;
}

Json band_json(const SpectralBand& band) {
  Json j;
  j["eigenvalue"] = to_string(band.eigenvalue);
  j["multiplicity"] = band.multiplicity;
  j["kind"] = std::string(to_string(band.kind));
  return j;
}

Json report_json(const IndexReport& report) {
  Json j;
  j["functional"] = std::string(to_string(report.functional));
  j["index"] = report.index;
  j["nullity"] = report.nullity;
  Json bands = Json::array();
  for (const ContributingBand& c : report.contributing_bands) {
    Json b = band_json(c.band);
    b["jacobi_eigenvalue"] = to_string(c.jacobi_eigenvalue);
    bands.push_back(std::move(b));
  }
  j["contributing_bands"] = std::move(bands);
  j["warnings"] = report.warnings;
  return j;
}

Json validation_json(const ValidationReport& validation) {
  Json list = Json::array();
  for (const ValidationIssue& issue : validation.issues) {
    Json j;
    j["severity"] = std::string(to_string(issue.severity));
    j["band"] = band_json(issue.band);
    j["message"] = issue.message;
    list.push_back(std::move(j));
  }
  return list;
}

int run_index(const IndexOptions& opt, std::ostream& out, std::ostream& err) {
  const std::vector<FunctionalKind> kinds = parse_functionals(opt.functional);
  if (opt.spectrum_file && (opt.lambda || opt.dim)) {
    throw UsageError("--spectrum-file excludes --dim and --lambda");
  }
  if (!opt.spectrum_file && !opt.dim) {
    throw UsageError("give either --dim with --lambda, or --spectrum-file");
  }

  std::optional<LoadedSpectrum> spectrum;
  if (opt.spectrum_file) {
    spectrum = load_spectrum(*opt.spectrum_file, LoadOptions{opt.strict});
  } else {
    const int m = *opt.dim;
    if (!opt.lambda && m != 1) {
      throw UsageError("--lambda is required for --dim >= 2");
    }
    const Rational lambda = opt.lambda ? parse_rational_option(*opt.lambda, "--lambda") : Rational(0);
    try {
      spectrum = sphere_spectrum(m, lambda);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  }
  const bool from_file = std::holds_alternative<SpectrumFile>(spectrum->source.origin);

  if (opt.strict) {
    if (from_file && !spectrum->source.complete_up_to) {
      err << "strict: spectrum file does not declare complete_up_to\n";
      return kExitStrictValidation;
    }
    try {
      validate_spectrum(spectrum->space, spectrum->bands, true);
    } catch (const BoundViolation& e) {
      err << "strict: " << e.what() << "\n";
      return kExitStrictValidation;
    }
  }

  Json doc;
  doc["space"] = space_json(spectrum->space);
  Json source;
  source["origin"] = from_file ? "file" : "closed_form_sphere";
  if (from_file) {
    source["path"] = std::get<SpectrumFile>(spectrum->source.origin).path.string();
  }
  if (spectrum->source.complete_up_to) {
    source["complete_up_to"] = to_string(*spectrum->source.complete_up_to);
  } else {
    source["complete_up_to"] = nullptr;
  }
  doc["source"] = std::move(source);
  Json reports = Json::array();
  for (FunctionalKind kind : kinds) {
    try {
      reports.push_back(report_json(index_nullity(spectrum->space, spectrum->bands, kind,
                                                  spectrum->source.complete_up_to)));
    } catch (const IncompleteSpectrum& e) {
      err << e.what() << "\n";
      return kExitStrictValidation;
    }
  }
  doc["reports"] = std::move(reports);
  doc["validation"] = validation_json(spectrum->validation);
  for (const ValidationIssue& issue : spectrum->validation.issues) {
    if (issue.severity != Severity::Note) {
      err << to_string(issue.severity) << ": " << issue.message << "\n";
    }
  }
  write_json(out, doc);
  return kExitOk;
}

int run_energy(const EnergyOptions& opt, std::ostream& out) {
  if (opt.dim < 2) {
    throw UsageError("--dim must be >= 2");
  }
  if (opt.t.empty()) {
    throw UsageError("--t needs at least one value");
  }
  for (double t : opt.t) {
    if (!(t >= kMinFamilyParameter && t <= kMaxFamilyParameter)) {
      throw UsageError("--t value " + format_double(t) + " outside [1e-8, 1e8]");
    }
  }
  if (opt.format != "csv" && opt.format != "json") {
    throw UsageError("--format must be csv or json");
  }
  const QuadratureConfig quad = quadrature_from_environment();

  // Computed in full before anything is printed, so a failure leaves no
  // partial table behind.
  std::vector<FamilyEvaluation> rows;
  rows.reserve(opt.t.size());
  for (double t : opt.t) {
    rows.push_back(evaluate_family(opt.dim, t, quad));
  }

  if (opt.format == "csv") {
    out << "t,energy,energy_error,bienergy,bienergy_error,c_bienergy,c_bienergy_error\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const FamilyEvaluation& r = rows[i];
      out << format_double(opt.t[i]) << ',' << format_double(r.energy) << ','
          << format_double(r.energy_error) << ',' << format_double(r.bienergy) << ','
          << format_double(r.bienergy_error) << ',' << format_double(r.c_bienergy) << ','
          << format_double(r.c_bienergy_error) << '\n';
    }
    return kExitOk;
  }
  Json doc;
  doc["dimension"] = opt.dim;
  Json list = Json::array();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const FamilyEvaluation& r = rows[i];
    Json row;
    row["t"] = opt.t[i];
    row["energy"] = r.energy;
    row["energy_error"] = r.energy_error;
    row["bienergy"] = r.bienergy;
    row["bienergy_error"] = r.bienergy_error;
    row["c_bienergy"] = r.c_bienergy;
    row["c_bienergy_error"] = r.c_bienergy_error;
    list.push_back(std::move(row));
  }
  doc["rows"] = std::move(list);
  write_json(out, doc);
  return kExitOk;
}

int run_spectrum(const SpectrumOptions& opt, std::ostream& out) {
  if (opt.dim < 1) {
    throw UsageError("--dim must be >= 1");
  }
  if (opt.format != "csv" && opt.format != "json") {
    throw UsageError("--format must be csv or json");
  }
  const Rational lambda = opt.lambda ? parse_rational_option(*opt.lambda, "--lambda")
                                     : Rational(opt.dim == 1 ? 0 : opt.dim - 1);
  std::optional<Rational> up_to;
  if (opt.up_to) {
    up_to = parse_rational_option(*opt.up_to, "--up-to");
  }
  LoadedSpectrum spectrum = [&] {
    try {
      return sphere_spectrum(opt.dim, lambda, up_to);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  }();
  if (opt.format == "json") {
    out << dump_spectrum(spectrum.space, spectrum.bands, spectrum.source.complete_up_to);
    return kExitOk;
  }
  out << "eigenvalue,multiplicity,kind\n";
  for (const SpectralBand& band : spectrum.bands) {
    out << to_string(band.eigenvalue) << ',' << band.multiplicity << ',' << to_string(band.kind)
        << '\n';
  }
  return kExitOk;
}

int run_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
  std::vector<Suite> suites;
  if (opt.suites.empty()) {
    suites.assign(std::begin(kAllSuites), std::end(kAllSuites));
  } else {
    for (const std::string& name : opt.suites) {
      try {
        const Suite suite = parse_suite(name);
        if (std::find(suites.begin(), suites.end(), suite) == suites.end()) {
          suites.push_back(suite);
        }
      } catch (const DomainError& e) {
        throw UsageError(e.what());
      }
    }
  }
  const QuadratureConfig quad = quadrature_from_environment();

  bool all_passed = true;
  Json checks = Json::array();
  for (Suite suite : suites) {
    for (const CheckResult& c : run_suite(suite, quad)) {
      all_passed = all_passed && c.passed;
      err << (c.passed ? "PASS " : "FAIL ") << c.suite << ": " << c.name << " (expected "
          << c.expected << ", got " << c.got << ")\n";
      Json j;
      j["suite"] = c.suite;
      j["criterion"] = c.criterion;
      j["name"] = c.name;
      j["expected"] = c.expected;
      j["got"] = c.got;
      j["tolerance"] = c.tolerance;
      j["passed"] = c.passed;
      checks.push_back(std::move(j));
    }
  }
  Json doc;
  doc["passed"] = all_passed;
  doc["checks"] = std::move(checks);
  write_json(out, doc);
  return all_passed ? kExitOk : kExitChecksFailed;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Index, nullity and conformal-bienergy tools for identity maps of Einstein spaces",
               "estab-cli"};
  app.require_subcommand(1, 1);

  IndexOptions index_opt;
  auto* index = app.add_subcommand("index", "index and nullity of Id for E, E2, E2c");
  auto* dim_opt = index->add_option("--dim", index_opt.dim, "sphere dimension m");
  auto* lambda_opt = index->add_option("--lambda", index_opt.lambda, "Einstein constant p/q");
  auto* file_opt =
      index->add_option("--spectrum-file", index_opt.spectrum_file, "spectrum document (JSON)");
  file_opt->excludes(dim_opt)->excludes(lambda_opt);
  index->add_option("--functional", index_opt.functional, "e | e2 | e2c | all")
      ->capture_default_str();
  index->add_flag("--strict", index_opt.strict, "bound violations and incompleteness fail");

  EnergyOptions energy_opt;
  auto* energy = app.add_subcommand("energy", "E, E2, E2c along the family phi_t");
  energy->add_option("--dim", energy_opt.dim, "dimension m >= 2")->required();
  energy->add_option("--t", energy_opt.t, "comma-separated parameters")
      ->required()
      ->delimiter(',');
  energy->add_option("--format", energy_opt.format, "csv | json")->capture_default_str();

  SpectrumOptions spectrum_opt;
  auto* spectrum = app.add_subcommand("spectrum", "dump closed-form sphere bands");
  spectrum->add_option("--dim", spectrum_opt.dim, "dimension m >= 1")->required();
  spectrum->add_option("--lambda", spectrum_opt.lambda, "Einstein constant p/q (default m-1)");
  spectrum->add_option("--up-to", spectrum_opt.up_to, "eigenvalue bound p/q (default: cutoff)");
  spectrum->add_option("--format", spectrum_opt.format, "json | csv")->capture_default_str();

  VerifyOptions verify_opt;
  auto* verify = app.add_subcommand("verify", "run the verification suites");
  verify->add_option("--suites", verify_opt.suites,
                     "tables,constancy,hessian,epsilon,bounds,symmetry (default: all)")
      ->delimiter(',');

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (index->parsed()) return run_index(index_opt, out, err);
    if (energy->parsed()) return run_energy(energy_opt, out);
    if (spectrum->parsed()) return run_spectrum(spectrum_opt, out);
    if (verify->parsed()) return run_verify(verify_opt, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const FileError& e) {
    err << "file error: " << e.what() << "\n";
    return kExitFile;
  } catch (const ParseError& e) {
    err << "file error: " << e.what() << "\n";
    return kExitFile;
  } catch (const InvalidBand& e) {
    err << "file error: " << e.what() << "\n";
    return kExitFile;
  } catch (const QuadratureFailure& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitUsage;
}

}  // namespace estab::cli

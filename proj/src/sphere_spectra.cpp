#include "estab/sphere_spectra.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "estab/errors.hpp"
#include "estab/json_writer.hpp"

namespace estab {
namespace {

BigInt factorial(int n) {
  BigInt result = 1;
  for (int i = 2; i <= n; ++i) {
    result *= i;
  }
  return result;
}

BigInt exact_quotient(const BigInt& numerator, const BigInt& denominator) {
  BigInt quotient;
  BigInt remainder;
  boost::multiprecision::divide_qr(numerator, denominator, quotient, remainder);
  if (remainder != 0) {
    throw std::logic_error("multiplicity formula does not divide evenly: " + numerator.str() +
                           " / " + denominator.str());
  }
  return quotient;
}

std::int64_t to_multiplicity(const BigInt& value) {
  if (value > std::numeric_limits<std::int64_t>::max()) {
    throw DomainError("multiplicity " + value.str() + " exceeds 64 bits");
  }
  return value.convert_to<std::int64_t>();
}

void require_sphere_args(int m, const Rational& lambda, const Rational& up_to) {
  if (m < 2) {
    throw DomainError("sphere generators need m >= 2 (use circle_bands for m = 1)");
  }
  if (lambda <= 0) {
    throw DomainError("sphere generators need lambda > 0, got " + to_string(lambda));
  }
  if (up_to < 0) {
    throw DomainError("up_to must be >= 0, got " + to_string(up_to));
  }
}

std::string sphere_name(int m, const Rational& lambda) {
  std::string name = "S^" + std::to_string(m);
  if (lambda != m - 1) {
    name += " (lambda=" + to_string(lambda) + ")";
  }
  return name;
}

}  // namespace

BigInt harmonic_multiplicity(int m, int k) {
  if (m < 1 || k < 0) {
    throw DomainError("harmonic_multiplicity needs m >= 1, k >= 0");
  }
  if (m == 1) {
    return k == 0 ? 1 : 2;
  }
  return exact_quotient(BigInt(2 * k + m - 1) * factorial(k + m - 2),
                        factorial(k) * factorial(m - 1));
}

BigInt divergence_free_multiplicity(int m, int k) {
  if (m < 2 || k < 1) {
    throw DomainError("divergence_free_multiplicity needs m >= 2, k >= 1");
  }
  // (k+m-3)! with k+m-3 = -1 only for m = 2, k = 0, excluded above.
  return exact_quotient(BigInt(k) * (k + m - 1) * (2 * k + m - 1) * factorial(k + m - 3),
                        factorial(k + 1) * factorial(m - 2));
}

std::vector<SpectralBand> gradient_bands(int m, const Rational& lambda, const Rational& up_to) {
  require_sphere_args(m, lambda, up_to);
  const Rational scale = lambda / (m - 1);
  std::vector<SpectralBand> bands;
  for (int k = 1;; ++k) {
    Rational mu = Rational(k * (k + m - 1)) * scale;
    if (mu > up_to) break;
    bands.push_back({std::move(mu), to_multiplicity(harmonic_multiplicity(m, k)),
                     BandKind::Gradient});
  }
  return bands;
}

std::vector<SpectralBand> divergence_free_bands(int m, const Rational& lambda,
                                                const Rational& up_to) {
  require_sphere_args(m, lambda, up_to);
  const Rational scale = lambda / (m - 1);
  std::vector<SpectralBand> bands;
  for (int k = 1;; ++k) {
    Rational mu = Rational(k * (k + m - 1) + m - 2) * scale;
    if (mu > up_to) break;
    bands.push_back({std::move(mu), to_multiplicity(divergence_free_multiplicity(m, k)),
                     BandKind::DivergenceFree});
  }
  return bands;
}

SphereSpectrum circle_bands(const Rational& up_to) {
  if (up_to < 0) {
    throw DomainError("up_to must be >= 0, got " + to_string(up_to));
  }
  SphereSpectrum out{EinsteinSpace(1, 0, "S^1"), {}};
  for (int k = 1; Rational(k * k) <= up_to; ++k) {
    out.bands.push_back({Rational(k * k), 2, BandKind::Gradient});
  }
  out.bands.push_back({Rational(0), 1, BandKind::DivergenceFree});
  return out;
}

LoadedSpectrum sphere_spectrum(int m, const Rational& lambda, std::optional<Rational> up_to) {
  if (m == 1) {
    if (lambda != 0) {
      throw DomainError("S^1 is flat: lambda must be 0");
    }
    const Rational bound = up_to.value_or(Rational(0));
    SphereSpectrum circle = circle_bands(bound);
    ValidationReport validation = validate_spectrum(circle.space, circle.bands, false);
    return {circle.space, std::move(circle.bands), {ClosedFormSphere{1, 0}, bound},
            std::move(validation)};
  }
  EinsteinSpace space(m, lambda, sphere_name(m, lambda));
  Rational bound;
  if (up_to) {
    bound = *up_to;
  } else {
    for (FunctionalKind kind : kAllFunctionals) {
      bound = std::max(bound, contribution_cutoff(space, kind));
    }
  }
  std::vector<SpectralBand> bands = gradient_bands(m, lambda, bound);
  for (SpectralBand& band : divergence_free_bands(m, lambda, bound)) {
    bands.push_back(std::move(band));
  }
  bands = normalize_bands(bands);
  ValidationReport validation = validate_spectrum(space, bands, false);
  return {std::move(space), std::move(bands), {ClosedFormSphere{m, lambda}, bound},
          std::move(validation)};
}

namespace {

const Json& require(const Json& object, const char* field, const std::string& context) {
  auto it = object.find(field);
  if (it == object.end()) {
    throw MissingField("missing field '" + std::string(field) + "' in " + context);
  }
  return *it;
}

Rational rational_field(const Json& value, const std::string& what) {
  if (value.is_string()) {
    return parse_rational(value.get<std::string>());
  }
  if (value.is_number_integer()) {
    return Rational(value.get<std::int64_t>());
  }
  throw ParseError(what + " must be a \"p/q\" string or an integer");
}

void reject_unknown(const Json& object, const std::set<std::string>& known,
                    const std::string& context) {
  for (auto it = object.begin(); it != object.end(); ++it) {
    if (!known.contains(it.key())) {
      throw ParseError("unknown field '" + it.key() + "' in " + context);
    }
  }
}

}  // namespace

LoadedSpectrum parse_spectrum(std::string_view text, LoadOptions options,
                              std::filesystem::path origin) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("spectrum document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw ParseError("spectrum document must be an object");
  }
  if (options.strict) {
    reject_unknown(doc, {"name", "dimension", "einstein_constant", "complete_up_to", "bands"},
                   "spectrum document");
  }

  std::string name;
  if (auto it = doc.find("name"); it != doc.end()) {
    if (!it->is_string()) throw ParseError("name must be a string");
    name = it->get<std::string>();
  }
  const Json& dim = require(doc, "dimension", "spectrum document");
  if (!dim.is_number_integer()) throw ParseError("dimension must be an integer");
  const Rational lambda =
      rational_field(require(doc, "einstein_constant", "spectrum document"), "einstein_constant");

  std::optional<Rational> complete_up_to;
  if (auto it = doc.find("complete_up_to"); it != doc.end() && !it->is_null()) {
    complete_up_to = rational_field(*it, "complete_up_to");
  }

  std::optional<EinsteinSpace> space;
  try {
    space.emplace(dim.get<int>(), lambda, name);
  } catch (const DomainError& e) {
    throw ParseError(std::string("invalid space: ") + e.what());
  }

  const Json& band_list = require(doc, "bands", "spectrum document");
  if (!band_list.is_array()) throw ParseError("bands must be an array");
  std::vector<SpectralBand> bands;
  bands.reserve(band_list.size());
  for (std::size_t i = 0; i < band_list.size(); ++i) {
    const Json& entry = band_list[i];
    const std::string context = "band #" + std::to_string(i);
    if (!entry.is_object()) throw ParseError(context + " must be an object");
    if (options.strict) {
      reject_unknown(entry, {"eigenvalue", "multiplicity", "kind"}, context);
    }
    SpectralBand band;
    band.eigenvalue = rational_field(require(entry, "eigenvalue", context), context + " eigenvalue");
    const Json& mult = require(entry, "multiplicity", context);
    if (!mult.is_number_integer()) throw ParseError(context + " multiplicity must be an integer");
    band.multiplicity = mult.get<std::int64_t>();
    const Json& kind = require(entry, "kind", context);
    if (!kind.is_string()) throw ParseError(context + " kind must be a string");
    band.kind = parse_band_kind(kind.get<std::string>());
    if (band.multiplicity <= 0) {
      throw InvalidBand(context + " has non-positive multiplicity " +
                        std::to_string(band.multiplicity));
    }
    if (band.eigenvalue < 0) {
      throw InvalidBand(context + " has negative eigenvalue " + to_string(band.eigenvalue));
    }
    bands.push_back(std::move(band));
  }

  ValidationReport validation = validate_spectrum(*space, bands, false);
  return {std::move(*space), std::move(bands), {SpectrumFile{std::move(origin)}, complete_up_to},
          std::move(validation)};
}

LoadedSpectrum load_spectrum(const std::filesystem::path& path, LoadOptions options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw FileError("cannot open spectrum file " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw FileError("error reading spectrum file " + path.string());
  }
  return parse_spectrum(buffer.str(), options, path);
}

std::string dump_spectrum(const EinsteinSpace& space, const std::vector<SpectralBand>& bands,
                          const std::optional<Rational>& complete_up_to) {
  Json doc;
  doc["name"] = space.name();
  doc["dimension"] = space.dimension();
  doc["einstein_constant"] = to_string(space.einstein_constant());
  if (complete_up_to) {
    doc["complete_up_to"] = to_string(*complete_up_to);
  }
  Json list = Json::array();
  for (const SpectralBand& band : bands) {
    Json entry;
    entry["eigenvalue"] = to_string(band.eigenvalue);
    entry["multiplicity"] = band.multiplicity;
    entry["kind"] = std::string(to_string(band.kind));
    list.push_back(std::move(entry));
  }
  doc["bands"] = std::move(list);
  return to_json_text(doc);
}

}  // namespace estab

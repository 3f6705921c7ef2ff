#include "estab/core_stability.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <tuple>
#include <utility>

#include "estab/errors.hpp"

namespace estab {

std::string_view to_string(FunctionalKind kind) {
  switch (kind) {
    case FunctionalKind::Energy:
      return "energy";
    case FunctionalKind::Bienergy:
      return "bienergy";
    case FunctionalKind::ConformalBienergy:
      return "c_bienergy";
  }
  return "?";
}

std::string_view to_string(BandKind kind) {
  return kind == BandKind::Gradient ? "gradient" : "divergence_free";
}

BandKind parse_band_kind(std::string_view text) {
  if (text == "gradient") return BandKind::Gradient;
  if (text == "divergence_free") return BandKind::DivergenceFree;
  throw ParseError("unknown band kind '" + std::string(text) + "'");
}

std::string_view to_string(Severity severity) {
  switch (severity) {
    case Severity::Note:
      return "note";
    case Severity::Warning:
      return "warning";
    case Severity::Error:
      return "error";
  }
  return "?";
}

EinsteinSpace::EinsteinSpace(int dimension, Rational einstein_constant, std::string name)
    : dimension_(dimension),
      einstein_constant_(std::move(einstein_constant)),
      name_(std::move(name)) {
  if (dimension_ < 1) {
    throw DomainError("dimension must be >= 1, got " + std::to_string(dimension_));
  }
  if (einstein_constant_ < 0) {
    throw DomainError("Einstein constant must be >= 0, got " + to_string(einstein_constant_));
  }
}

namespace {

// Second root of the conformal-bienergy eigenvalue: (2/3)(6 - m) lambda.
Rational conformal_root(const EinsteinSpace& space) {
  return Rational(2 * (6 - space.dimension()), 3) * space.einstein_constant();
}

void check_band(const SpectralBand& band) {
  if (band.multiplicity <= 0) {
    throw InvalidBand("band at eigenvalue " + to_string(band.eigenvalue) +
                      " has non-positive multiplicity " +
                      std::to_string(band.multiplicity));
  }
  if (band.eigenvalue < 0) {
    throw InvalidBand("negative eigenvalue " + to_string(band.eigenvalue));
  }
}

}  // namespace

Rational jacobi_eigenvalue(FunctionalKind kind, const EinsteinSpace& space, const Rational& mu) {
  if (mu < 0) {
    throw DomainError("Hodge-Laplacian eigenvalue must be >= 0, got " + to_string(mu));
  }
  const Rational shifted = mu - 2 * space.einstein_constant();
  switch (kind) {
    case FunctionalKind::Energy:
      return shifted;
    case FunctionalKind::Bienergy:
      return shifted * shifted;
    case FunctionalKind::ConformalBienergy:
      return shifted * (mu - conformal_root(space));
  }
  return shifted;
}

Rational contribution_cutoff(const EinsteinSpace& space, FunctionalKind kind) {
  const Rational killing = 2 * space.einstein_constant();
  if (kind == FunctionalKind::ConformalBienergy) {
    return std::max(killing, conformal_root(space));
  }
  return killing;
}

std::vector<SpectralBand> normalize_bands(std::span<const SpectralBand> bands) {
  // Key order gives the report order: eigenvalue, then Gradient first.
  std::map<std::pair<Rational, int>, std::int64_t> merged;
  for (const SpectralBand& band : bands) {
    check_band(band);
    auto& total = merged[{band.eigenvalue, static_cast<int>(band.kind)}];
    if (total > std::numeric_limits<std::int64_t>::max() - band.multiplicity) {
      throw InvalidBand("multiplicity overflow at eigenvalue " + to_string(band.eigenvalue));
    }
    total += band.multiplicity;
  }
  std::vector<SpectralBand> out;
  out.reserve(merged.size());
  for (const auto& [key, multiplicity] : merged) {
    out.push_back({key.first, multiplicity, static_cast<BandKind>(key.second)});
  }
  return out;
}

IndexReport index_nullity(const EinsteinSpace& space, std::span<const SpectralBand> bands,
                          FunctionalKind kind, std::optional<Rational> complete_up_to) {
  IndexReport report;
  report.functional = kind;
  const Rational cutoff = contribution_cutoff(space, kind);
  if (complete_up_to) {
    if (*complete_up_to < cutoff) {
      throw IncompleteSpectrum("spectrum declared complete up to " + to_string(*complete_up_to) +
                               " but " + std::string(to_string(kind)) +
                               " needs every eigenvalue up to " + to_string(cutoff));
    }
  } else {
    report.warnings.push_back("spectrum completeness up to " + to_string(cutoff) +
                              " not declared; counts cover the listed bands only");
  }

  for (const SpectralBand& band : normalize_bands(bands)) {
    Rational value = jacobi_eigenvalue(kind, space, band.eigenvalue);
    const int s = sign(value);
    if (s > 0) {
      continue;
    }
    (s < 0 ? report.index : report.nullity) += band.multiplicity;
    report.contributing_bands.push_back({band, std::move(value)});
  }
  return report;
}

bool ValidationReport::clean() const {
  return std::none_of(issues.begin(), issues.end(),
                      [](const ValidationIssue& i) { return i.severity != Severity::Note; });
}

ValidationReport validate_spectrum(const EinsteinSpace& space, std::span<const SpectralBand> bands,
                                   bool strict) {
  ValidationReport report;
  const int m = space.dimension();
  const Rational& lambda = space.einstein_constant();
  if (lambda == 0 || m == 1) {
    return report;
  }
  const Rational obata = Rational(m, m - 1) * lambda;
  const Rational killing = 2 * lambda;

  auto flag = [&](const SpectralBand& band, std::string message) {
    if (strict) {
      throw BoundViolation(message);
    }
    report.issues.push_back({Severity::Warning, band, std::move(message)});
  };

  for (const SpectralBand& band : bands) {
    const std::string where = std::string(to_string(band.kind)) + " band at " +
                              to_string(band.eigenvalue);
    if (band.kind == BandKind::Gradient) {
      if (band.eigenvalue < obata) {
        flag(band, where + " violates the Lichnerowicz-Obata bound " + to_string(obata));
      } else if (band.eigenvalue == obata) {
        report.issues.push_back(
            {Severity::Note, band, where + " attains the Obata bound: round sphere only"});
      }
    } else if (band.eigenvalue < killing) {
      flag(band, where + " lies below the divergence-free bound 2*lambda = " +
                     to_string(killing));
    }
  }
  return report;
}

}  // namespace estab

#pragma once

// Index and nullity of the identity map of a compact Einstein manifold for
// the energy, bienergy and conformal-bienergy functionals.
//
// On an Einstein manifold (Ric = lambda g) every Jacobi operator at the
// identity is a polynomial in the Hodge Laplacian on vector fields, so a
// spectral band of Delta_H with eigenvalue mu contributes
//
//   energy             mu - 2 lambda
//   bienergy           (mu - 2 lambda)^2
//   conformal-bienergy (mu - 2 lambda)(mu - (2/3)(6 - m) lambda)
//
// with the band's multiplicity. All sign decisions are exact.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "estab/rational.hpp"

namespace estab {

enum class FunctionalKind { Energy, Bienergy, ConformalBienergy };

inline constexpr FunctionalKind kAllFunctionals[] = {
    FunctionalKind::Energy, FunctionalKind::Bienergy,
    FunctionalKind::ConformalBienergy};

// "energy", "bienergy", "c_bienergy".
std::string_view to_string(FunctionalKind kind);

// Which summand of C(TM) = {grad f} + {div X = 0} a band lives in.
enum class BandKind { Gradient, DivergenceFree };

// "gradient", "divergence_free".
std::string_view to_string(BandKind kind);
BandKind parse_band_kind(std::string_view text);

class EinsteinSpace {
 public:
  // Throws DomainError unless dimension >= 1 and einstein_constant >= 0.
  EinsteinSpace(int dimension, Rational einstein_constant, std::string name = {});

  int dimension() const { return dimension_; }
  const Rational& einstein_constant() const { return einstein_constant_; }
  Rational scalar_curvature() const { return dimension_ * einstein_constant_; }
  const std::string& name() const { return name_; }

 private:
  int dimension_;
  Rational einstein_constant_;
  std::string name_;
};

struct SpectralBand {
  Rational eigenvalue;
  std::int64_t multiplicity = 0;
  BandKind kind = BandKind::Gradient;

  friend bool operator==(const SpectralBand&, const SpectralBand&) = default;
};

struct ContributingBand {
  SpectralBand band;
  Rational jacobi_eigenvalue;

  friend bool operator==(const ContributingBand&, const ContributingBand&) = default;
};

struct IndexReport {
  FunctionalKind functional = FunctionalKind::Energy;
  std::int64_t index = 0;
  std::int64_t nullity = 0;
  // Bands with non-positive Jacobi eigenvalue, eigenvalue ascending,
  // Gradient before DivergenceFree at equal eigenvalue.
  std::vector<ContributingBand> contributing_bands;
  std::vector<std::string> warnings;
};

Rational jacobi_eigenvalue(FunctionalKind kind, const EinsteinSpace& space,
                           const Rational& mu);

// Least mu* with jacobi_eigenvalue(kind, space, mu) > 0 for every mu > mu*.
Rational contribution_cutoff(const EinsteinSpace& space, FunctionalKind kind);

// Validates every band (InvalidBand on multiplicity <= 0 or eigenvalue < 0),
// merges duplicates (eigenvalue, kind) by summing multiplicities and sorts.
std::vector<SpectralBand> normalize_bands(std::span<const SpectralBand> bands);

// complete_up_to is the caller's declaration that `bands` lists every
// eigenvalue <= that bound. A declaration below the cutoff throws
// IncompleteSpectrum; no declaration adds a warning to the report.
IndexReport index_nullity(const EinsteinSpace& space,
                          std::span<const SpectralBand> bands,
                          FunctionalKind kind,
                          std::optional<Rational> complete_up_to = std::nullopt);

enum class Severity { Note, Warning, Error };

std::string_view to_string(Severity severity);

struct ValidationIssue {
  Severity severity = Severity::Note;
  SpectralBand band;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;

  // No warnings or errors (notes allowed).
  bool clean() const;
};

// Lichnerowicz-Obata bound mu >= m lambda / (m - 1) on Gradient bands and
// mu >= 2 lambda on DivergenceFree bands. Equality in the Obata bound is
// reported as a note. Skipped entirely for lambda = 0 and for m = 1. In
// strict mode the first violation throws BoundViolation.
ValidationReport validate_spectrum(const EinsteinSpace& space,
                                   std::span<const SpectralBand> bands,
                                   bool strict);

}  // namespace estab

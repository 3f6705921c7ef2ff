#pragma once

// Hodge-Laplacian spectra on vector fields of round spheres, and spectrum
// files for any other Einstein space.
//
// A sphere with Einstein constant lambda is the unit sphere rescaled so that
// every eigenvalue picks up the factor lambda / (m - 1).

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "estab/core_stability.hpp"
#include "estab/rational.hpp"

namespace estab {

// N(m, k): dimension of the degree-k spherical harmonics on S^m.
BigInt harmonic_multiplicity(int m, int k);

// M(m, k): multiplicity of the k-th divergence-free band on S^m, m >= 2.
BigInt divergence_free_multiplicity(int m, int k);

// Gradients of degree-k harmonics, k >= 1: mu_k = k(k+m-1) lambda/(m-1).
// Requires m >= 2, lambda > 0, up_to >= 0.
std::vector<SpectralBand> gradient_bands(int m, const Rational& lambda,
                                         const Rational& up_to);

// mu'_k = (k(k+m-1) + m - 2) lambda/(m-1), k >= 1. The first band is the
// Killing band at 2 lambda.
std::vector<SpectralBand> divergence_free_bands(int m, const Rational& lambda,
                                                const Rational& up_to);

struct SphereSpectrum;

// S^1 (flat): gradient bands k^2 with multiplicity 2 and the rotation field
// as a divergence-free band at 0.
SphereSpectrum circle_bands(const Rational& up_to);

struct ClosedFormSphere {
  int dimension;
  Rational einstein_constant;
};

struct SpectrumFile {
  std::filesystem::path path;
};

struct SpectrumSource {
  std::variant<ClosedFormSphere, SpectrumFile> origin;
  std::optional<Rational> complete_up_to;
};

struct SphereSpectrum {
  EinsteinSpace space;
  std::vector<SpectralBand> bands;
};

struct LoadedSpectrum {
  EinsteinSpace space;
  std::vector<SpectralBand> bands;
  SpectrumSource source;
  ValidationReport validation;
};

// Full closed-form spectrum of a sphere up to `up_to`; defaults to the
// largest contribution cutoff over the three functionals. m = 1 requires
// lambda = 0 and dispatches to circle_bands; m >= 2 requires lambda > 0.
LoadedSpectrum sphere_spectrum(int m, const Rational& lambda,
                               std::optional<Rational> up_to = std::nullopt);

struct LoadOptions {
  // Reject unknown fields.
  bool strict = false;
};

LoadedSpectrum parse_spectrum(std::string_view text, LoadOptions options = {},
                              std::filesystem::path origin = {});

// Throws FileError if the file cannot be read, ParseError / MissingField /
// InvalidBand on bad content.
LoadedSpectrum load_spectrum(const std::filesystem::path& path,
                             LoadOptions options = {});

// Serializes in the spectrum file format; parse_spectrum inverts it.
std::string dump_spectrum(const EinsteinSpace& space,
                          const std::vector<SpectralBand>& bands,
                          const std::optional<Rational>& complete_up_to);

}  // namespace estab

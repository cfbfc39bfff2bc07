#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jrka/matrix.hpp"

namespace jrka {

enum class SpectrumShape { linear, flat, geometric };

// W* = W + W_eps with W of exact rank r built from r outer products with a
// known spectrum, and W_eps i.i.d. Gaussian. Deterministic given the seed.
struct NoisyEnsemble {
  Matrix w_ideal;
  Matrix w_noise;
  Matrix w_star;
  std::size_t rank = 0;
  std::uint64_t seed = 0;
  double noise_sigma = 0.0;
  double snr = 0.0;  // ||w_ideal||_F / ||w_noise||_F
};

struct EnsembleConfig {
  std::size_t n = 64;
  std::size_t m = 64;
  std::size_t r = 8;
  double sigma = 0.0;  // per-entry noise standard deviation
  std::uint64_t seed = 0;
  SpectrumShape spectrum = SpectrumShape::linear;
  double geometric_gamma = 0.8;
};

NoisyEnsemble make_ensemble(const EnsembleConfig& config);

// Rescales the noise so that ||w_ideal||_F / ||w_noise||_F equals snr exactly.
NoisyEnsemble make_ensemble_with_snr(EnsembleConfig config, double snr);

// Distance of each truncation W*_(k) to the ideal W, k = 1..min(n, m),
// against the untruncated baseline ||W* - W||.
struct DenoiseCurve {
  std::vector<double> err_frobenius;  // index k-1
  std::vector<double> err_spectral;
  double baseline_frobenius = 0.0;
  double baseline_spectral = 0.0;
  std::size_t best_k = 0;  // argmin of the Frobenius curve, ties to smallest k
  bool hypothesis_satisfied = false;  // some k beats the baseline in Frobenius
  std::size_t ideal_rank = 0;
  std::uint64_t seed = 0;
  double snr = 0.0;

  std::string to_csv() const;  // k, err_f, err_spec, baseline_f, baseline_spec
};

DenoiseCurve denoise_sweep(const NoisyEnsemble& ensemble);

struct DenoiseSummary {
  std::size_t curves = 0;
  std::size_t satisfied = 0;
  double satisfaction_rate = 0.0;
  std::vector<std::pair<std::size_t, std::size_t>> best_k_histogram;  // (k, count)

  std::string to_text() const;
  std::string to_csv() const;
};

DenoiseSummary denoise_report(const std::vector<DenoiseCurve>& curves);

}  // namespace jrka

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "jrka/joint.hpp"

namespace jrka {

struct FfnWeights {
  Matrix w_gate;  // h x d
  Matrix w_up;    // h x d
  Matrix w_down;  // d x h

  void validate() const;
};

struct AttnWeights {
  Matrix w_q;  // d x d
  Matrix w_k;  // d x d
  int heads = 1;

  int dim() const { return static_cast<int>(w_q.rows()); }
  int head_dim() const { return dim() / heads; }
  void validate() const;
};

double silu(double x);
Vec silu(const Vec& x);

// w_down * (silu(w_gate x) ⊙ (w_up x))
Vec ffn_forward(const Vec& x, const FfnWeights& w);

// Same forward pass through a factored gate/up joint group: the shared
// vt_k x is computed once, then each member applies sigma and its u_k block.
Vec ffn_forward_compressed(const Vec& x, const FactoredLinear& gate, const FactoredLinear& up,
                           const Matrix& w_down);

// Per-head scaled scores (W_Q X)^T (W_K X) / sqrt(head_dim), positional maps
// taken as identity. Entry h is the len x len score matrix of head h.
std::vector<Matrix> attention_scores(const Matrix& x_seq, const AttnWeights& w);

struct ScoreErrorReport {
  std::int64_t k_joint = 0;
  std::int64_t k_separate = 0;
  std::int64_t param_joint = 0;
  std::int64_t param_separate = 0;
  std::int64_t budget = 0;
  double err_joint = 0.0;    // mean over trials
  double err_separate = 0.0;
  int trials = 0;
};

enum class EnsembleKind { iid, correlated };

struct ProbeConfig {
  int dim = 128;
  int seq_len = 64;
  int heads = 1;
  EnsembleKind ensemble = EnsembleKind::correlated;
  double spectrum_gamma = 0.8;  // sigma_i = gamma^i for the correlated ensemble
  std::uint64_t seed = 1;
};

// Draw (W_Q, W_K). The correlated ensemble shares right singular vectors and
// the aligned spectrum sigma_i = gamma^i; left factors are independent.
std::pair<Matrix, Matrix> sample_weight_pair(const ProbeConfig& config, std::mt19937_64& rng);

// Largest ranks whose parameter counts fit the budget in each mode, then the
// mean score-matrix Frobenius error of joint vs separate approximation of
// W_Q / W_K over `trials` seeded draws.
ScoreErrorReport score_error_comparison(const ProbeConfig& config, std::int64_t budget,
                                        int trials);

struct ScoreSweepRow {
  std::int64_t k = 0;         // joint rank
  double ratio = 0.0;         // factored params over dense params
  double err_joint = 0.0;
  double err_separate = 0.0;  // at the largest separate rank within the same budget
  std::int64_t params = 0;
};

// Budget sweep over joint ranks; each row compares against the best separate
// configuration of no larger parameter count.
std::vector<ScoreSweepRow> score_error_sweep(const ProbeConfig& config,
                                             const std::vector<std::int64_t>& joint_ranks,
                                             int trials);

std::string sweep_to_csv(const std::vector<ScoreSweepRow>& rows, const ScoreErrorReport& summary);

}  // namespace jrka

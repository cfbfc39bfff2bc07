#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jrka/svd.hpp"

namespace jrka {

struct JointMember {
  std::string name;
  Matrix matrix;
};

// Bookkeeping for a row-stacked joint matrix: which tensors were stacked and
// where each one's row block lives. row_offsets has members+1 entries starting
// at 0 and ending at the stacked row count.
struct JointGroup {
  std::vector<std::string> member_names;
  std::vector<std::size_t> row_offsets;
  std::size_t cols = 0;

  std::size_t members() const { return member_names.size(); }
  std::size_t total_rows() const { return row_offsets.empty() ? 0 : row_offsets.back(); }
  std::string joined_name() const;
};

// One compressed linear layer: truncated factors standing in for a dense
// weight matrix. Members of a joint group carry bitwise-identical vt_k and
// sigma_k and record the group under shared_vt_group.
struct FactoredLinear {
  Matrix u_k;
  std::vector<double> sigma_k;
  Matrix vt_k;
  std::size_t original_rows = 0;
  std::size_t original_cols = 0;
  std::optional<std::string> shared_vt_group;

  std::size_t rank() const { return sigma_k.size(); }
};

Matrix reconstruct(const FactoredLinear& f);

// Row-stack >= 2 matrices sharing a column count, preserving member order.
std::pair<Matrix, JointGroup> stack_rows(const std::vector<JointMember>& members);

// SVD of the row-stacked matrix truncated to k; u_k split back per member,
// every member holding the same sigma_k / vt_k (the shared input analysis).
std::vector<FactoredLinear> joint_rank_k(const std::vector<JointMember>& members, std::size_t k);

// Split already-computed joint factors along the group's row offsets.
std::vector<FactoredLinear> split_joint(const SvdFactors& factors, const JointGroup& group);

// Fold-for-deployment option: multiplies sqrt(sigma) into both u_k and vt_k
// and resets sigma_k to ones. Note this breaks bitwise vt sharing.
void fold_sigma(FactoredLinear& f);

enum class ParamMode { dense, separate_svd, joint_svd };

using Shape = std::pair<std::int64_t, std::int64_t>;  // (rows n_i, cols m)

// dense          = sum n_i * m
// separate_svd   = sum (n_i * k + k * m), + k per member when count_sigma
// joint_svd      = (sum n_i) * k + k * m, + k when count_sigma
// All members must share the column count m.
std::int64_t param_count(ParamMode mode, const std::vector<Shape>& shapes, std::int64_t k,
                         bool count_sigma);

}  // namespace jrka

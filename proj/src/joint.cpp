#include "jrka/joint.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "jrka/error.hpp"

namespace jrka {

std::string JointGroup::joined_name() const {
  std::string name;
  for (std::size_t i = 0; i < member_names.size(); ++i) {
    if (i > 0) name += "+";
    name += member_names[i];
  }
  return name;
}

Matrix reconstruct(const FactoredLinear& f) {
  SvdFactors as_factors{f.u_k, f.sigma_k, f.vt_k};
  return reconstruct(as_factors);
}

std::pair<Matrix, JointGroup> stack_rows(const std::vector<JointMember>& members) {
  if (members.size() < 2) {
    throw InvalidArgument("stack_rows: joint stacking requires >= 2 members, got " +
                          std::to_string(members.size()));
  }
  const std::size_t cols = members.front().matrix.cols();
  std::size_t total_rows = 0;
  for (const auto& m : members) {
    if (m.matrix.cols() != cols) {
      throw InvalidArgument("stack_rows: member '" + m.name + "' has shape " +
                            std::to_string(m.matrix.rows()) + "x" +
                            std::to_string(m.matrix.cols()) + " but '" +
                            members.front().name + "' has shape " +
                            std::to_string(members.front().matrix.rows()) + "x" +
                            std::to_string(cols) + "; members must share the column count");
    }
    total_rows += m.matrix.rows();
  }

  Matrix stacked(total_rows, cols);
  JointGroup group;
  group.cols = cols;
  group.row_offsets.push_back(0);
  std::size_t at = 0;
  for (const auto& m : members) {
    group.member_names.push_back(m.name);
    std::copy(m.matrix.data(), m.matrix.data() + m.matrix.size(), stacked.row(at));
    at += m.matrix.rows();
    group.row_offsets.push_back(at);
  }
  return {std::move(stacked), std::move(group)};
}

std::vector<FactoredLinear> split_joint(const SvdFactors& factors, const JointGroup& group) {
  if (group.member_names.empty() || group.row_offsets.size() != group.member_names.size() + 1 ||
      group.row_offsets.front() != 0) {
    throw InvalidArgument("split_joint: malformed joint group offsets");
  }
  for (std::size_t i = 1; i < group.row_offsets.size(); ++i) {
    if (group.row_offsets[i] <= group.row_offsets[i - 1]) {
      throw InvalidArgument("split_joint: row offsets must be strictly increasing");
    }
  }
  if (factors.u.rows() != group.total_rows()) {
    throw InvalidArgument("split_joint: factor row count " + std::to_string(factors.u.rows()) +
                          " does not match group total rows " +
                          std::to_string(group.total_rows()));
  }

  const std::string group_name = group.joined_name();
  std::vector<FactoredLinear> out;
  out.reserve(group.member_names.size());
  for (std::size_t i = 0; i < group.member_names.size(); ++i) {
    FactoredLinear f;
    f.u_k = take_rows(factors.u, group.row_offsets[i], group.row_offsets[i + 1]);
    f.sigma_k = factors.sigma;
    f.vt_k = factors.vt;
    f.original_rows = group.row_offsets[i + 1] - group.row_offsets[i];
    f.original_cols = group.cols;
    f.shared_vt_group = group_name;
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<FactoredLinear> joint_rank_k(const std::vector<JointMember>& members,
                                         std::size_t k) {
  auto [stacked, group] = stack_rows(members);
  const std::size_t max_k = std::min(stacked.rows(), stacked.cols());
  if (k < 1 || k > max_k) {
    throw InvalidArgument("joint_rank_k: k=" + std::to_string(k) + " outside valid range [1, " +
                          std::to_string(max_k) + "]");
  }
  return split_joint(rank_k_approx(stacked, k), group);
}

void fold_sigma(FactoredLinear& f) {
  for (std::size_t j = 0; j < f.sigma_k.size(); ++j) {
    const double root = std::sqrt(f.sigma_k[j]);
    for (std::size_t i = 0; i < f.u_k.rows(); ++i) f.u_k(i, j) *= root;
    double* vrow = f.vt_k.row(j);
    for (std::size_t c = 0; c < f.vt_k.cols(); ++c) vrow[c] *= root;
    f.sigma_k[j] = 1.0;
  }
}

std::int64_t param_count(ParamMode mode, const std::vector<Shape>& shapes, std::int64_t k,
                         bool count_sigma) {
  if (shapes.empty()) throw InvalidArgument("param_count: no shapes given");
  const std::int64_t m = shapes.front().second;
  for (const auto& [n_i, m_i] : shapes) {
    if (n_i < 1 || m_i < 1) throw InvalidArgument("param_count: dimensions must be positive");
    if (m_i != m) {
      throw InvalidArgument("param_count: members must share the column count, got " +
                            std::to_string(m_i) + " vs " + std::to_string(m));
    }
  }
  if (mode != ParamMode::dense && k < 1) {
    throw InvalidArgument("param_count: k must be >= 1 for factored modes");
  }

  std::int64_t total_rows = 0;
  for (const auto& [n_i, m_i] : shapes) total_rows += n_i;

  switch (mode) {
    case ParamMode::dense:
      return total_rows * m;
    case ParamMode::separate_svd: {
      std::int64_t count = 0;
      for (const auto& [n_i, m_i] : shapes) {
        count += n_i * k + k * m + (count_sigma ? k : 0);
      }
      return count;
    }
    case ParamMode::joint_svd:
      return total_rows * k + k * m + (count_sigma ? k : 0);
  }
  throw InvalidArgument("param_count: unknown mode");
}

}  // namespace jrka

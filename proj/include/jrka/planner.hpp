#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "jrka/joint.hpp"

namespace jrka {

enum class TensorKind { w_q, w_k, w_v, w_gate, w_up, w_down };

const char* tensor_kind_name(TensorKind kind);

enum class BaselineScope { linear_layers_only, all_parameters };

// Shape description of one transformer model: enough to name every linear
// tensor, size it, and account parameters. Templates contain a "{layer}"
// placeholder. extra_linear lists linear tensors that count toward the
// linear-layers-only baseline but are never planning targets.
struct ModelSpec {
  std::string name;
  int num_layers = 0;
  int hidden_dim = 0;
  int ffn_dim = 0;
  int heads = 0;
  std::map<TensorKind, std::string> templates;
  std::int64_t baseline_param_count = 0;  // all-parameters denominator
  BaselineScope baseline_scope = BaselineScope::all_parameters;

  struct ExtraLinear {
    std::string name_template;
    std::int64_t rows = 0;
    std::int64_t cols = 0;
  };
  std::vector<ExtraLinear> extra_linear;

  int head_dim() const { return hidden_dim / heads; }
  std::string tensor_name(TensorKind kind, int layer) const;
  Shape tensor_shape(TensorKind kind) const;
  std::int64_t linear_param_count() const;
  std::int64_t baseline(BaselineScope scope) const;

  // name -> shape for every linear tensor the spec knows about.
  std::map<std::string, Shape> tensor_shapes() const;

  void validate() const;

  static ModelSpec llama7b();
  static ModelSpec from_json_text(const std::string& text);
  std::string to_json_text() const;
};

// One compression target: a whole tensor or a row slice of it (per-head
// grouping is expressed as row slices).
struct TargetRef {
  std::string name;
  std::optional<std::pair<std::int64_t, std::int64_t>> row_range;  // [begin, end)

  std::string display() const;
};

enum class GroupMode { separate, joint };

struct PlanGroup {
  std::vector<TargetRef> tensors;  // 1 for separate, >= 2 for joint
  GroupMode mode = GroupMode::separate;
  std::int64_t k = 0;
  bool break_even_warning = false;  // set when k exceeds the break-even rank

  std::string storage_name() const;  // deterministic archive key for shared factors
};

struct CompressionPlan {
  ModelSpec spec;
  std::vector<PlanGroup> groups;
  std::set<int> layer_filter;  // layers eligible for compression
  bool sigma_accounting = true;

  std::string to_json_text() const;  // stable key ordering, deterministic bytes
  static CompressionPlan from_json_text(const std::string& text);
};

// Largest rank at which factored storage n*k + k + k*m does not exceed dense
// storage n*m: floor(n*m / (n + m + 1)). Zero means no compressive rank exists.
std::int64_t break_even_rank(std::int64_t n, std::int64_t m);

// Parameters removed by the plan (dense minus factored, summed over groups).
std::int64_t plan_savings(const CompressionPlan& plan);

// (baseline - savings) / baseline. 1.0 for an empty plan.
double predicted_ratio(const CompressionPlan& plan, BaselineScope scope);

struct LayerPolicy {
  enum class Kind {
    none_protected,  // compress every layer
    first_quarter,   // leave the 1st quarter unchanged
    second_quarter,
    third_quarter,
    fourth_quarter,
    first_n,  // leave the first n layers unchanged
    last_n,   // leave the last n layers unchanged
    custom,   // leave an explicit set unchanged
  };
  Kind kind = Kind::none_protected;
  int n = 0;
  std::set<int> custom_protected;

  static LayerPolicy parse(const std::string& text);
};

// Layers to compress: the complement of the protected set. Quarters split the
// layer range evenly with the remainder assigned to the last quarter.
std::set<int> layer_filter(const LayerPolicy& policy, int num_layers);

struct Recipe {
  enum class Kind { none, appendix_a_10, appendix_a_20, explicit_ranks, target_ratio };
  Kind kind = Kind::none;

  double target_ratio = 1.0;  // for Kind::target_ratio (parameters kept / baseline)

  // Explicit-rank knobs.
  std::optional<std::int64_t> attn_rank;
  GroupMode attn_mode = GroupMode::separate;
  bool attn_per_head = false;
  bool attn_include_v = false;  // joint W_Q/W_K/W_V: forbidden unless allow_qkv_joint
  std::optional<std::int64_t> ffn_rank;  // joint W_gate/W_up
  std::optional<int> ffn_last_n_layers;  // restrict FFN groups to the last n layers

  bool allow_qkv_joint = false;

  static Recipe named(const std::string& name);
};

// Deterministic plan construction. Throws InvalidArgument when the recipe is
// unachievable, reporting the closest achievable ratio.
CompressionPlan make_plan(const ModelSpec& spec, const Recipe& recipe,
                          const LayerPolicy& policy = {});

// FNV-1a hash of the canonical plan serialization, hex-encoded.
std::string plan_hash(const CompressionPlan& plan);

}  // namespace jrka

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "jrka/matrix.hpp"
#include "jrka/planner.hpp"

// JRKA named-tensor container.
//
// File layout (all integers little-endian):
//   bytes 0..3    magic "JRKA"
//   bytes 4..7    format version, u32 (currently 1)
//   bytes 8..15   header length in bytes, u64
//   bytes 16..    UTF-8 JSON header, exactly header-length bytes
//   payload       starts at the next 64-byte boundary after the header
//
// Header JSON: {"metadata": {string: string}, "tensors": {name: {"dtype":
// "f32"|"f64", "shape": [..], "offset": N, "nbytes": N}}}. Offsets are
// relative to the payload start, 64-byte aligned, ascending in sorted name
// order, non-overlapping. Tensor data is raw little-endian. The writer sorts
// names and serializes the header canonically (sorted keys, no whitespace),
// so identical content produces byte-identical files.

namespace jrka {

enum class Dtype { f32, f64 };

std::size_t dtype_width(Dtype dtype);
const char* dtype_name(Dtype dtype);
Dtype dtype_from_name(const std::string& name);

struct TensorInfo {
  Dtype dtype = Dtype::f32;
  std::vector<std::int64_t> shape;
  std::uint64_t offset = 0;
  std::uint64_t nbytes = 0;

  std::int64_t element_count() const;
};

struct ArchiveHeader {
  std::uint32_t version = 1;
  std::map<std::string, TensorInfo> tensors;
  std::map<std::string, std::string> metadata;
};

// Parses and validates the header once; tensors are loaded individually on
// demand. Reads open their own file handle, so concurrent readers are safe.
class ArchiveReader {
 public:
  explicit ArchiveReader(std::string path);

  const ArchiveHeader& header() const { return header_; }
  const std::string& path() const { return path_; }

  bool contains(const std::string& name) const;
  const TensorInfo& info(const std::string& name) const;
  std::vector<std::string> tensor_names() const;

  std::vector<std::byte> read_raw(const std::string& name) const;
  Matrix read_matrix(const std::string& name) const;       // 2-D, converted to f64
  std::vector<double> read_vector(const std::string& name) const;  // 1-D

  std::uint64_t payload_bytes() const;  // sum of tensor byte lengths

 private:
  std::string path_;
  ArchiveHeader header_;
  std::uint64_t payload_start_ = 0;
  std::uint64_t file_size_ = 0;
};

// Declare-then-write streaming writer. All tensors are declared up front so
// the header (with final offsets) is written before any payload; tensors may
// then be written in any order. close() verifies every declared tensor was
// written.
class ArchiveWriter {
 public:
  explicit ArchiveWriter(std::string path);
  ~ArchiveWriter();

  ArchiveWriter(const ArchiveWriter&) = delete;
  ArchiveWriter& operator=(const ArchiveWriter&) = delete;

  void declare(const std::string& name, Dtype dtype, std::vector<std::int64_t> shape);
  void set_metadata(const std::string& key, const std::string& value);
  void finalize_header();

  void write_tensor(const std::string& name, const void* data, std::uint64_t nbytes);
  void write_matrix(const std::string& name, Dtype dtype, const Matrix& values);
  void write_vector(const std::string& name, Dtype dtype, const std::vector<double>& values);

  void close();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// One-shot convenience for in-memory archives.
struct TensorEntry {
  std::string name;
  Dtype dtype = Dtype::f32;
  std::vector<std::int64_t> shape;
  std::vector<std::byte> bytes;
};

void write_archive(const std::vector<TensorEntry>& entries, const std::string& path,
                   const std::map<std::string, std::string>& metadata = {});

// --- factored-archive pipeline ---

struct CompressOptions {
  Dtype storage_dtype = Dtype::f32;
  int threads = 0;  // 0: JRKA_THREADS env var, else hardware concurrency
};

struct TensorReport {
  std::string tensor;  // member tensor or "<group>.shared" for shared factors
  std::string group;
  GroupMode mode = GroupMode::separate;
  std::int64_t rows = 0;
  std::int64_t cols = 0;
  std::int64_t k = 0;
  std::int64_t dense_params = 0;
  std::int64_t factored_params = 0;
  double err_frobenius = 0.0;
  double err_spectral = 0.0;
};

struct CompressReport {
  std::vector<TensorReport> rows;
  std::int64_t dense_params_total = 0;
  std::int64_t factored_params_total = 0;
  std::uint64_t input_payload_bytes = 0;
  std::uint64_t output_payload_bytes = 0;
  double wall_seconds = 0.0;

  double param_ratio() const;  // factored-or-copied params over dense params
  double byte_ratio() const;   // output payload bytes over input payload bytes
  std::string to_csv() const;
  std::string to_text() const;
};

// Factored results for one plan group, ready for serialization.
struct FactoredGroupResult {
  PlanGroup group;
  std::vector<FactoredLinear> members;  // aligned with group.tensors
};

// Writes the compressed archive: factored triples for planned tensors (shared
// vt/sigma stored once per joint group), untouched tensors copied verbatim,
// plan recorded in metadata. `results` must cover every plan group.
CompressReport convert_factored(const ArchiveReader& source, const CompressionPlan& plan,
                                const std::vector<FactoredGroupResult>& results,
                                const std::string& out_path,
                                Dtype storage_dtype = Dtype::f32);

// Full pipeline: validates the plan against the archive, runs the SVDs with a
// bounded worker pool, and streams the factored archive to disk.
CompressReport compress_archive(const ArchiveReader& source, const CompressionPlan& plan,
                                const std::string& out_path, const CompressOptions& options = {});

// Reconstructs every factored entry back to a dense tensor (stored dtype) and
// copies untouched tensors verbatim.
void expand_archive(const ArchiveReader& source, const std::string& out_path);

}  // namespace jrka

#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "mckay/invariants.hpp"

namespace mckay::cli {

enum class OutputFormat { Json, Plain, Factors };

OutputFormat parse_output_format(std::string_view text);
std::string to_string(OutputFormat format);

/// One partition-function request.
struct RunConfig {
  DynkinLabel label{Family::A, 1};
  int order = 0;
  PartitionKind kind = PartitionKind::NCDT;
  std::optional<StabilityParameter> zeta;
  OutputFormat output = OutputFormat::Plain;
  std::optional<std::filesystem::path> cache_dir;

  /// Throws InvalidArgument: Chamber needs zeta, every other kind forbids it;
  /// the order must be non-negative; zeta must match the vertex count.
  void validate() const;

  /// The fields that determine the result, with sorted keys.
  nlohmann::json canonical_json() const;
  /// Hex SHA-256 of the canonical JSON dump.
  std::string cache_key() const;
};

/// The series, its factor list and the MacMahon exponent for `config`.
PartitionResult compute_partition(const RunConfig& config);

nlohmann::json partition_to_json(const RunConfig& config, const PartitionResult& computed);
PartitionResult partition_from_json(const nlohmann::json& json);

/// Directory of JSON result files named by cache key.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path directory) : directory_(std::move(directory)) {}

  std::filesystem::path path_for(const RunConfig& config) const;
  std::optional<PartitionResult> load(const RunConfig& config) const;
  /// Writes to a temporary file in the same directory and renames it into place.
  void store(const RunConfig& config, const PartitionResult& computed) const;

 private:
  std::filesystem::path directory_;
};

/// Exit codes: 0 success or check passed, 1 check mismatch, 2 usage or input error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mckay::cli

#pragma once

#include <Eigen/Dense>

#include <array>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "emgkit/types.hpp"

namespace emgkit {

/// Number of scalar features computed per channel series.
inline constexpr int kFeaturesPerChannel = 20;

/// Frozen per-channel feature order; column c*20+j of a per-channel matrix is
/// feature j of channel c. See FEATURES.md for definitions.
const std::array<std::string, kFeaturesPerChannel>& feature_names_per_channel();

enum class ChannelMode {
  per_channel,   // 8 x 20 = 160 columns, named ch{c}_{feature}
  channel_mean,  // 20 columns, per-feature mean across channels
};

/// Column schema for a channel mode.
std::vector<std::string> feature_schema(ChannelMode mode);

/// One extracted row. The name schema is shared between vectors of one
/// extraction run.
struct FeatureVector {
  Eigen::VectorXd values;
  std::shared_ptr<const std::vector<std::string>> names;
  int label = 0;
};

/// Rectangular labelled dataset: rows = windows, columns = named features.
struct FeatureMatrix {
  Eigen::MatrixXd values;
  std::vector<std::string> names;
  std::vector<int> labels;

  Eigen::Index rows() const { return values.rows(); }
  Eigen::Index cols() const { return values.cols(); }
  int column_index(const std::string& name) const;  // -1 when absent
};

/// All 20 statistics of one series, in schema order. Requires length >= 2.
Eigen::Matrix<double, kFeaturesPerChannel, 1> channel_features(
    const Eigen::Ref<const Eigen::VectorXd>& series);

/// Per-channel feature bank of one window, channel-major. Errors are
/// annotated with the failing channel.
FeatureVector extract_features(const Window& window,
                               ChannelMode mode = ChannelMode::per_channel);

/// Stacks one row per window, preserving input order.
FeatureMatrix build_feature_matrix(const std::vector<Window>& windows,
                                   ChannelMode mode = ChannelMode::per_channel);

/// Provenance stamp embedded in written artifacts.
struct Provenance {
  std::string tool_version;
  std::string config_hash;
  std::uint64_t seed = 0;
};

/// CSV with a single '#' provenance comment line, then a header of feature
/// names plus "label", then one row per window. '.' decimal separator,
/// LF endings, shortest round-trip number formatting.
void write_feature_csv(const FeatureMatrix& m, const std::filesystem::path& path,
                       const std::optional<Provenance>& provenance = std::nullopt);
FeatureMatrix read_feature_csv(const std::filesystem::path& path);

}  // namespace emgkit

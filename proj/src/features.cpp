#include "emgkit/features.hpp"

#include <fstream>
#include <sstream>

#include "emgkit/parallel.hpp"
#include "emgkit/stats.hpp"
#include "emgkit/version.hpp"
#include "text_util.hpp"

namespace emgkit {

const std::array<std::string, kFeaturesPerChannel>& feature_names_per_channel() {
  static const std::array<std::string, kFeaturesPerChannel> kNames = {
      // morphological
      "mav", "min", "max", "ptp",
      // time domain
      "mean", "median", "var_s", "var_p", "mad", "std_s", "std_p",
      "percentile", "q1", "iqr", "skewness", "kurtosis",
      // frequency domain
      "energy", "power", "rms", "hjorth_activity"};
  return kNames;
}

std::vector<std::string> feature_schema(ChannelMode mode) {
  const auto& base = feature_names_per_channel();
  std::vector<std::string> names;
  if (mode == ChannelMode::per_channel) {
    names.reserve(static_cast<std::size_t>(kChannelCount) * kFeaturesPerChannel);
    for (int c = 0; c < kChannelCount; ++c)
      for (const auto& f : base) names.push_back("ch" + std::to_string(c) + "_" + f);
  } else {
    names.assign(base.begin(), base.end());
  }
  return names;
}

int FeatureMatrix::column_index(const std::string& name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  return -1;
}

Eigen::Matrix<double, kFeaturesPerChannel, 1> channel_features(
    const Eigen::Ref<const Eigen::VectorXd>& series) {
  Eigen::Matrix<double, kFeaturesPerChannel, 1> out;
  const auto amp = amplitude_features(series);
  const auto disp = dispersion_features(series);
  const auto ord = order_statistics(series, 50.0);
  const auto shp = shape_features(series);
  const auto nrg = spectral_energy_features(series);
  out << amp.mav, amp.min, amp.max, amp.ptp,
      disp.mean, disp.median, disp.var_s, disp.var_p, disp.mad, disp.std_s,
      disp.std_p, ord.percentile, ord.q1, ord.iqr, shp.skewness, shp.kurtosis,
      nrg.energy, nrg.power, nrg.rms, nrg.hjorth_activity;
  return out;
}

namespace {

Eigen::VectorXd window_feature_row(const Window& w, ChannelMode mode) {
  Eigen::MatrixXd per_channel(kFeaturesPerChannel, kChannelCount);
  for (int c = 0; c < kChannelCount; ++c) {
    try {
      per_channel.col(c) = channel_features(w.channel(c));
    } catch (const Error& e) {
      raise(e.code(), "channel " + std::to_string(c) + " at window offset " +
                          std::to_string(w.offset()) + ": " + e.what());
    }
  }
  if (mode == ChannelMode::per_channel)
    return per_channel.reshaped();  // column-major -> channel-major blocks
  return per_channel.rowwise().mean();
}

}  // namespace

FeatureVector extract_features(const Window& window, ChannelMode mode) {
  static const auto per_channel_schema =
      std::make_shared<const std::vector<std::string>>(feature_schema(ChannelMode::per_channel));
  static const auto mean_schema =
      std::make_shared<const std::vector<std::string>>(feature_schema(ChannelMode::channel_mean));
  FeatureVector fv;
  fv.values = window_feature_row(window, mode);
  fv.names = mode == ChannelMode::per_channel ? per_channel_schema : mean_schema;
  fv.label = window.label();
  return fv;
}

FeatureMatrix build_feature_matrix(const std::vector<Window>& windows, ChannelMode mode) {
  if (windows.empty()) raise(ErrorCode::empty_input, "no windows to extract from");
  FeatureMatrix m;
  m.names = feature_schema(mode);
  m.values.resize(static_cast<Eigen::Index>(windows.size()),
                  static_cast<Eigen::Index>(m.names.size()));
  m.labels.resize(windows.size());
  parallel_for(windows.size(), [&](std::size_t i) {
    m.values.row(static_cast<Eigen::Index>(i)) =
        window_feature_row(windows[i], mode).transpose();
    m.labels[i] = windows[i].label();
  });
  return m;
}

void write_feature_csv(const FeatureMatrix& m, const std::filesystem::path& path,
                       const std::optional<Provenance>& provenance) {
  std::ofstream out(path, std::ios::binary);  // binary: LF endings everywhere
  if (!out) raise(ErrorCode::io_error, "cannot open " + path.string() + " for writing");
  if (provenance) {
    out << "# emgkit " << provenance->tool_version << " config=" << provenance->config_hash
        << " seed=" << provenance->seed << "\n";
  }
  for (std::size_t i = 0; i < m.names.size(); ++i) out << m.names[i] << ",";
  out << "label\n";
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      out << detail::format_double(m.values(r, c)) << ",";
    out << m.labels[static_cast<std::size_t>(r)] << "\n";
  }
  if (!out) raise(ErrorCode::io_error, "failed writing " + path.string());
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find(',', start);
    if (pos == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return fields;
}

}  // namespace

FeatureMatrix read_feature_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorCode::io_error, "cannot open " + path.string());
  std::string line;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    header = split_csv_line(line);
    break;
  }
  if (header.size() < 2 || header.back() != "label")
    raise(ErrorCode::malformed_line, path.string() + ": missing feature/label header");
  FeatureMatrix m;
  m.names.assign(header.begin(), header.end() - 1);
  const std::size_t ncols = m.names.size();

  std::vector<double> data;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto fields = split_csv_line(line);
    if (fields.size() != ncols + 1)
      raise(ErrorCode::malformed_line,
            path.string() + ":" + std::to_string(line_no) + ": expected " +
                std::to_string(ncols + 1) + " fields, got " + std::to_string(fields.size()));
    for (std::size_t c = 0; c < ncols; ++c) {
      double v;
      if (!detail::parse_double(fields[c], v))
        raise(ErrorCode::malformed_line,
              path.string() + ":" + std::to_string(line_no) + ": bad number '" + fields[c] + "'");
      data.push_back(v);
    }
    std::int64_t lab;
    if (!detail::parse_int64(fields[ncols], lab))
      raise(ErrorCode::malformed_line,
            path.string() + ":" + std::to_string(line_no) + ": bad label '" + fields[ncols] + "'");
    m.labels.push_back(static_cast<int>(lab));
  }
  if (m.labels.empty()) raise(ErrorCode::empty_file, path.string() + ": no data rows");
  m.values.resize(static_cast<Eigen::Index>(m.labels.size()),
                  static_cast<Eigen::Index>(ncols));
  for (std::size_t r = 0; r < m.labels.size(); ++r)
    for (std::size_t c = 0; c < ncols; ++c)
      m.values(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          data[r * ncols + c];
  return m;
}

}  // namespace emgkit

#pragma once

#include <Eigen/Dense>

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "emgkit/errors.hpp"

namespace emgkit {

inline constexpr int kChannelCount = 8;
inline constexpr int kLabelCount = 7;  // gesture codes 0..6

/// Samples-by-channel amplitude block; one column per bracelet channel.
using ChannelMatrix = Eigen::Matrix<double, Eigen::Dynamic, kChannelCount>;

/// One of the seven dataset classes. Code 0 marks the rest intervals between
/// gestures; codes 1..6 are the six static gestures.
class GestureLabel {
 public:
  static constexpr int kRest = 0;

  GestureLabel() = default;
  explicit GestureLabel(int code) : code_(code) {
    if (!is_valid(code))
      raise(ErrorCode::unknown_label,
            "gesture class " + std::to_string(code) + " outside 0..6");
  }

  int code() const { return code_; }
  const std::string& name() const { return names()[static_cast<std::size_t>(code_)]; }

  static bool is_valid(int code) { return code >= 0 && code < kLabelCount; }
  static const std::array<std::string, kLabelCount>& names();
  static const std::string& name_of(int code) { return GestureLabel(code).names()[code]; }

  friend bool operator==(GestureLabel a, GestureLabel b) { return a.code_ == b.code_; }
  friend bool operator!=(GestureLabel a, GestureLabel b) { return a.code_ != b.code_; }

 private:
  int code_ = kRest;
};

/// One subject/trial file: timestamps, 8 channel series and per-sample labels,
/// all of identical length.
struct Recording {
  int subject_id = 1;
  int trial_id = 1;
  std::vector<double> time_ms;
  ChannelMatrix channels;
  std::vector<int> labels;  // gesture codes
  std::string source_path;
  bool non_monotonic_time = false;   // timestamps unused downstream; warn only
  std::int64_t remapped_labels = 0;  // samples remapped to rest by parse policy

  Eigen::Index samples() const { return channels.rows(); }
};

/// Maximal run of one nonzero label inside a recording. Owns a copy of its
/// channel block so downstream windows can outlive the recording.
struct GestureSegment {
  int subject_id = 1;
  int trial_id = 1;
  int label = 0;  // never 0 after segmentation
  ChannelMatrix channels;
  Eigen::Index start_index = 0;  // position of the first sample in the source

  Eigen::Index length() const { return channels.rows(); }
};

/// Fixed-length single-gesture slice; the unit of feature extraction.
/// Shares segment storage, so copies are cheap.
class Window {
 public:
  Window(std::shared_ptr<const GestureSegment> segment, Eigen::Index offset,
         Eigen::Index length)
      : segment_(std::move(segment)), offset_(offset), length_(length) {}

  int subject_id() const { return segment_->subject_id; }
  int trial_id() const { return segment_->trial_id; }
  int label() const { return segment_->label; }
  Eigen::Index offset() const { return offset_; }
  Eigen::Index length() const { return length_; }

  /// W x 8 block view into the owning segment.
  auto channels() const { return segment_->channels.middleRows(offset_, length_); }
  /// Column view of one channel series.
  auto channel(int c) const { return segment_->channels.col(c).segment(offset_, length_); }

 private:
  std::shared_ptr<const GestureSegment> segment_;
  Eigen::Index offset_ = 0;
  Eigen::Index length_ = 0;
};

}  // namespace emgkit

#pragma once

#include <map>
#include <memory>
#include <vector>

#include "emgkit/types.hpp"

namespace emgkit {

/// Maximal runs of identical nonzero labels, in temporal order. Rest (label 0)
/// runs are dropped. A recording that is all rest yields an empty list.
std::vector<GestureSegment> segment_by_label(const Recording& rec);

/// Windows at offsets 0, stride, 2*stride, ... while offset + window_len stays
/// inside the segment. Segments shorter than window_len yield no windows.
/// window_len must be >= 2 (third/fourth moment features need it) and
/// stride >= 1.
std::vector<Window> window_segment(std::shared_ptr<const GestureSegment> segment,
                                   Eigen::Index window_len, Eigen::Index stride);
std::vector<Window> window_segment(const GestureSegment& segment,
                                   Eigen::Index window_len, Eigen::Index stride);

/// Segments a recording and windows every segment. window_len 0 selects
/// whole-segment mode: one window spanning each segment of length >= 2.
std::vector<Window> cut_windows(const Recording& rec, Eigen::Index window_len,
                                Eigen::Index stride);

struct SegmentStats {
  struct PerLabel {
    std::int64_t count = 0;
    Eigen::Index min_len = 0;
    Eigen::Index max_len = 0;
    double mean_len = 0.0;
    std::map<Eigen::Index, std::int64_t> length_histogram;  // bucket floor -> count
  };
  std::map<int, PerLabel> per_label;
  static constexpr Eigen::Index kBucketWidth = 100;
};

SegmentStats segment_stats(const std::vector<GestureSegment>& segments);

}  // namespace emgkit

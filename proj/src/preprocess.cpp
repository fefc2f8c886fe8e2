#include "emgkit/preprocess.hpp"

#include <algorithm>

namespace emgkit {

std::vector<GestureSegment> segment_by_label(const Recording& rec) {
  std::vector<GestureSegment> segments;
  const auto n = static_cast<Eigen::Index>(rec.labels.size());
  Eigen::Index run_start = 0;
  while (run_start < n) {
    const int label = rec.labels[static_cast<std::size_t>(run_start)];
    Eigen::Index run_end = run_start + 1;
    while (run_end < n && rec.labels[static_cast<std::size_t>(run_end)] == label)
      ++run_end;
    if (label != GestureLabel::kRest) {
      GestureSegment seg;
      seg.subject_id = rec.subject_id;
      seg.trial_id = rec.trial_id;
      seg.label = label;
      seg.start_index = run_start;
      seg.channels = rec.channels.middleRows(run_start, run_end - run_start);
      segments.push_back(std::move(seg));
    }
    run_start = run_end;
  }
  return segments;
}

std::vector<Window> window_segment(std::shared_ptr<const GestureSegment> segment,
                                   Eigen::Index window_len, Eigen::Index stride) {
  if (window_len < 2)
    raise(ErrorCode::invalid_windowing, "window_len must be >= 2");
  if (stride < 1) raise(ErrorCode::invalid_windowing, "stride must be >= 1");
  std::vector<Window> windows;
  const Eigen::Index len = segment->length();
  for (Eigen::Index offset = 0; offset + window_len <= len; offset += stride)
    windows.emplace_back(segment, offset, window_len);
  return windows;
}

std::vector<Window> window_segment(const GestureSegment& segment,
                                   Eigen::Index window_len, Eigen::Index stride) {
  return window_segment(std::make_shared<const GestureSegment>(segment), window_len,
                        stride);
}

std::vector<Window> cut_windows(const Recording& rec, Eigen::Index window_len,
                                Eigen::Index stride) {
  std::vector<Window> windows;
  for (auto& seg : segment_by_label(rec)) {
    auto shared = std::make_shared<const GestureSegment>(std::move(seg));
    if (window_len == 0) {  // whole-segment mode
      if (shared->length() >= 2)
        windows.emplace_back(shared, 0, shared->length());
      continue;
    }
    auto ws = window_segment(shared, window_len, stride);
    windows.insert(windows.end(), ws.begin(), ws.end());
  }
  return windows;
}

SegmentStats segment_stats(const std::vector<GestureSegment>& segments) {
  SegmentStats stats;
  for (const auto& seg : segments) {
    auto& entry = stats.per_label[seg.label];
    const Eigen::Index len = seg.length();
    if (entry.count == 0) {
      entry.min_len = len;
      entry.max_len = len;
    } else {
      entry.min_len = std::min(entry.min_len, len);
      entry.max_len = std::max(entry.max_len, len);
    }
    entry.mean_len += static_cast<double>(len);
    ++entry.count;
    ++entry.length_histogram[(len / SegmentStats::kBucketWidth) *
                             SegmentStats::kBucketWidth];
  }
  for (auto& [label, entry] : stats.per_label)
    entry.mean_len /= static_cast<double>(entry.count);
  return stats;
}

}  // namespace emgkit

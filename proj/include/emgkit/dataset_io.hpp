#pragma once

#include <filesystem>
#include <map>
#include <vector>

#include "emgkit/types.hpp"

namespace emgkit {

/// What to do with an integral class value outside 0..6. The strict default
/// matches the file contract; the pipeline commands remap such samples to the
/// rest label (they are dropped with the rest intervals) so corpora containing
/// extra gesture classes still load.
enum class UnknownLabelPolicy { error, treat_as_rest };

struct ParseOptions {
  UnknownLabelPolicy unknown_labels = UnknownLabelPolicy::error;
};

/// Parses one tab-separated recording: time(ms), channel1..channel8, class,
/// with an optional single header line. subject/trial ids are inferred from
/// digits in the path (parent directory first, then filename).
Recording parse_recording(const std::filesystem::path& path,
                          const ParseOptions& options = {});

/// Writes the external text format (header line + one sample per line).
/// Numbers use shortest round-trip formatting, so re-parsing reproduces the
/// recording exactly.
void write_recording(const Recording& rec, const std::filesystem::path& path);

/// Loads every recording under root (recursively, *.txt, lexicographic path
/// order). Files that do not look like recordings are skipped with a warning;
/// malformed data lines inside recording files propagate, annotated with the
/// path.
std::vector<Recording> load_dataset(const std::filesystem::path& root,
                                    const ParseOptions& options = {});

struct DatasetSummary {
  std::size_t recordings = 0;
  std::size_t subjects = 0;
  std::int64_t samples = 0;
  std::map<int, std::int64_t> samples_per_label;
};

DatasetSummary summarize_dataset(const std::vector<Recording>& recordings);

}  // namespace emgkit

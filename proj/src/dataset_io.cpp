#include "emgkit/dataset_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <set>
#include <string_view>

#include "text_util.hpp"

namespace emgkit {

namespace {

constexpr int kFieldsPerLine = 1 + kChannelCount + 1;  // time, 8 channels, class

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find('\t', start);
    if (pos == std::string_view::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return fields;
}

struct SampleLine {
  double time;
  std::array<double, kChannelCount> amps;
  double cls;
};

bool parse_sample_line(std::string_view line, SampleLine& out) {
  auto fields = split_tabs(line);
  if (fields.size() != kFieldsPerLine) return false;
  if (!detail::parse_double(fields[0], out.time)) return false;
  for (int c = 0; c < kChannelCount; ++c)
    if (!detail::parse_double(fields[static_cast<std::size_t>(c) + 1], out.amps[c]))
      return false;
  return detail::parse_double(fields[kFieldsPerLine - 1], out.cls);
}

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

/// First integer run in a string, or 0 when none.
int first_number(const std::string& s, std::size_t skip_groups = 0) {
  std::size_t i = 0;
  while (i < s.size()) {
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      std::size_t j = i;
      long v = 0;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
        v = std::min(v * 10 + (s[j] - '0'), 1000000L);
        ++j;
      }
      if (skip_groups == 0) return static_cast<int>(v);
      --skip_groups;
      i = j;
    } else {
      ++i;
    }
  }
  return 0;
}

/// Subject/trial inference. UCI-style layouts keep per-subject directories
/// ("01".."36") with files "1_raw_data_*.txt"; flat layouts carry both ids in
/// the filename ("subject03_trial2.txt").
void infer_ids(const std::filesystem::path& path, int& subject, int& trial) {
  const std::string fname = path.filename().string();
  const std::string parent = path.parent_path().filename().string();
  int parent_num = first_number(parent);
  if (parent_num > 0) {
    subject = parent_num;
    trial = std::max(1, first_number(fname));
  } else {
    subject = std::max(1, first_number(fname));
    trial = std::max(1, first_number(fname, 1));
  }
  subject = std::max(1, subject);
}

}  // namespace

Recording parse_recording(const std::filesystem::path& path, const ParseOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorCode::io_error, "cannot open " + path.string());

  Recording rec;
  rec.source_path = path.string();
  infer_ids(path, rec.subject_id, rec.trial_id);

  std::vector<double> times;
  std::vector<std::array<double, kChannelCount>> amps;
  std::vector<int> labels;

  std::string line;
  std::size_t line_no = 0;
  bool header_allowed = true;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (line.empty()) continue;
    SampleLine s;
    if (!parse_sample_line(line, s)) {
      if (header_allowed) {  // a single leading non-numeric line is a header
        header_allowed = false;
        continue;
      }
      raise(ErrorCode::malformed_line,
            path.string() + ":" + std::to_string(line_no) +
                ": expected 10 tab-separated numeric fields");
    }
    header_allowed = false;
    double integral;
    if (std::modf(s.cls, &integral) != 0.0)
      raise(ErrorCode::malformed_line,
            path.string() + ":" + std::to_string(line_no) + ": non-integral class value");
    int cls = static_cast<int>(integral);
    if (!GestureLabel::is_valid(cls)) {
      if (options.unknown_labels == UnknownLabelPolicy::error)
        raise(ErrorCode::unknown_label,
              path.string() + ":" + std::to_string(line_no) + ": class " +
                  std::to_string(cls) + " outside 0..6");
      cls = GestureLabel::kRest;
      ++rec.remapped_labels;
    }
    times.push_back(s.time);
    amps.push_back(s.amps);
    labels.push_back(cls);
  }

  if (labels.empty()) raise(ErrorCode::empty_file, path.string() + ": no data lines");

  rec.time_ms = std::move(times);
  rec.labels = std::move(labels);
  rec.channels.resize(static_cast<Eigen::Index>(amps.size()), kChannelCount);
  for (std::size_t i = 0; i < amps.size(); ++i)
    for (int c = 0; c < kChannelCount; ++c)
      rec.channels(static_cast<Eigen::Index>(i), c) = amps[i][static_cast<std::size_t>(c)];

  for (std::size_t i = 1; i < rec.time_ms.size(); ++i) {
    if (rec.time_ms[i] < rec.time_ms[i - 1]) {
      rec.non_monotonic_time = true;
      std::cerr << "emgkit: warning: non-monotone timestamps in " << path.string() << "\n";
      break;
    }
  }
  if (rec.remapped_labels > 0)
    std::cerr << "emgkit: warning: " << rec.remapped_labels
              << " samples with out-of-range class remapped to rest in " << path.string()
              << "\n";
  return rec;
}

void write_recording(const Recording& rec, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(ErrorCode::io_error, "cannot open " + path.string() + " for writing");
  out << "time";
  for (int c = 1; c <= kChannelCount; ++c) out << "\tchannel" << c;
  out << "\tclass\n";
  for (Eigen::Index i = 0; i < rec.samples(); ++i) {
    out << detail::format_double(rec.time_ms[static_cast<std::size_t>(i)]);
    for (int c = 0; c < kChannelCount; ++c)
      out << '\t' << detail::format_double(rec.channels(i, c));
    out << '\t' << rec.labels[static_cast<std::size_t>(i)] << '\n';
  }
  if (!out) raise(ErrorCode::io_error, "failed writing " + path.string());
}

namespace {

/// A file qualifies as a recording when, within its first two nonempty lines,
/// one parses as a sample line. Keeps stray readme/license files from
/// aborting a corpus load.
bool looks_like_recording(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::string line;
  int seen = 0;
  SampleLine s;
  while (seen < 2 && std::getline(in, line)) {
    strip_cr(line);
    if (line.empty()) continue;
    ++seen;
    if (parse_sample_line(line, s)) return true;
  }
  return false;
}

}  // namespace

std::vector<Recording> load_dataset(const std::filesystem::path& root,
                                    const ParseOptions& options) {
  if (!std::filesystem::is_directory(root))
    raise(ErrorCode::no_recordings_found, root.string() + " is not a directory");

  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::recursive_directory_iterator(root)) {
    if (!entry.is_regular_file()) continue;
    auto ext = entry.path().extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    if (ext == ".txt") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  std::vector<Recording> recordings;
  for (const auto& file : files) {
    if (!looks_like_recording(file)) {
      std::cerr << "emgkit: warning: skipping non-recording file " << file.string() << "\n";
      continue;
    }
    recordings.push_back(parse_recording(file, options));
  }
  if (recordings.empty())
    raise(ErrorCode::no_recordings_found, "no recordings under " + root.string());
  return recordings;
}

DatasetSummary summarize_dataset(const std::vector<Recording>& recordings) {
  DatasetSummary s;
  s.recordings = recordings.size();
  std::set<int> subjects;
  for (const auto& rec : recordings) {
    subjects.insert(rec.subject_id);
    s.samples += rec.samples();
    for (int lab : rec.labels) ++s.samples_per_label[lab];
  }
  s.subjects = subjects.size();
  return s;
}

}  // namespace emgkit

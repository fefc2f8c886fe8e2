#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "emgkit/dataset_io.hpp"
#include "emgkit/features.hpp"
#include "emgkit/knn.hpp"
#include "emgkit/trees.hpp"

namespace emgkit {

/// Rows = true label, columns = predicted label, both in `labels` order
/// (ascending gesture code).
struct ConfusionMatrix {
  std::vector<int> labels;
  Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> counts;

  std::int64_t total() const { return counts.sum(); }
  int index_of(int label) const;
};

/// Label set = union of truth and predictions, ascending.
ConfusionMatrix confusion(const std::vector<int>& truth, const std::vector<int>& predicted);
/// Fixed label set (every truth/prediction must be a member).
ConfusionMatrix confusion(const std::vector<int>& truth, const std::vector<int>& predicted,
                          const std::vector<int>& labels);

struct ClassMetrics {
  int label = 0;
  std::string name;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  double specificity = 0.0;
  bool undefined = false;  // some 0/0 ratio was resolved to 0
};

/// One-vs-rest metric suite of a confusion matrix.
struct MetricsSummary {
  std::vector<ClassMetrics> per_class;
  double accuracy = 0.0;  // trace / total
  double macro_precision = 0.0;
  double macro_recall = 0.0;
  double macro_f1 = 0.0;
  double macro_specificity = 0.0;
  double micro_precision = 0.0;  // == accuracy for single-label problems
  double micro_recall = 0.0;
  double micro_f1 = 0.0;
};

MetricsSummary metrics(const ConfusionMatrix& cm);

/// Stratified K-fold over labels: per-class proportions preserved within one
/// sample, folds disjoint and covering, deterministic in seed. Returns
/// (train_indices, test_indices) pairs with ascending indices.
std::vector<std::pair<std::vector<int>, std::vector<int>>> stratified_kfold(
    const std::vector<int>& labels, int folds, std::uint64_t seed);
std::vector<std::pair<std::vector<int>, std::vector<int>>> stratified_kfold(
    const FeatureMatrix& m, int folds, std::uint64_t seed);

/// Group-exclusive K-fold (leave-subjects-out): groups are dealt to folds
/// after a seeded shuffle; a row's fold is its group's fold.
std::vector<std::pair<std::vector<int>, std::vector<int>>> grouped_kfold(
    const std::vector<int>& groups, int folds, std::uint64_t seed);

/// Row subset of a feature matrix, order given by idx.
FeatureMatrix take_rows(const FeatureMatrix& m, const std::vector<int>& idx);

enum class FeatureMode { all, selected };
enum class SplitMode { stratified, subject };

struct PipelineConfig {
  std::string dataset_root;   // exactly one of dataset_root / features_csv
  std::string features_csv;
  Eigen::Index window_len = 200;  // 0 = whole-segment mode
  Eigen::Index stride = 100;
  ChannelMode channel_mode = ChannelMode::per_channel;
  UnknownLabelPolicy unknown_labels = UnknownLabelPolicy::treat_as_rest;

  std::string model = "knn";  // knn | gaussian_nb | decision_tree | random_forest | extra_trees
  FeatureMode feature_mode = FeatureMode::all;
  int top_k = 10;
  int folds = 5;
  SplitMode split = SplitMode::stratified;
  std::uint64_t seed = 42;

  KnnParams knn;
  bool tune_k = false;
  TreeHyperparams trees;
};

struct FoldResult {
  int fold = 0;
  double accuracy = 0.0;
  std::vector<std::string> selected;  // empty in all-features mode
  int tuned_k = 0;                    // 0 when tuning is off
};

struct EvaluationReport {
  PipelineConfig config;
  ConfusionMatrix cm;
  MetricsSummary summary;
  std::vector<FoldResult> folds;
  std::vector<std::string> selected_intersection;  // across folds, schema order
  Eigen::Index n_windows = 0;
};

/// Windowed feature extraction of a recording set, with per-window subject ids
/// for group splits.
struct WindowedFeatures {
  FeatureMatrix matrix;
  std::vector<int> subjects;
  std::vector<int> trials;
};

WindowedFeatures windowed_features(const std::vector<Recording>& recordings,
                                   Eigen::Index window_len, Eigen::Index stride,
                                   ChannelMode mode);

/// Cross-validated evaluation of a prepared matrix. Selection (when enabled)
/// runs inside each fold on the training rows only. `subjects` may be empty
/// for stratified splits.
EvaluationReport evaluate_matrix(const FeatureMatrix& m, const std::vector<int>& subjects,
                                 const PipelineConfig& config);

/// End-to-end: load (dataset root or features CSV), extract, evaluate.
EvaluationReport evaluate_pipeline(const PipelineConfig& config);

}  // namespace emgkit

#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

#include "emgkit/features.hpp"

namespace emgkit {

struct KnnParams {
  int k = 5;
  bool standardize = true;  // z-score with training-fold statistics
};

/// Brute-force Euclidean nearest neighbours over (optionally standardized)
/// training rows. Constant training features carry no information and are
/// excluded from the standardized distance.
struct KnnModel {
  KnnParams params;
  std::vector<std::string> feature_names;
  Eigen::MatrixXd train_rows;        // standardized when params.standardize
  std::vector<int> train_labels;
  Eigen::RowVectorXd offset;         // per-feature mean (zeros when raw)
  Eigen::RowVectorXd scale;          // 1/std, 0 for excluded constants (ones when raw)
  std::vector<int> constant_features;

  Eigen::Index n_train() const { return train_rows.rows(); }
};

KnnModel fit_knn(const FeatureMatrix& train, const KnnParams& params = {});

std::vector<int> predict_knn(const KnnModel& model,
                             const Eigen::Ref<const Eigen::MatrixXd>& rows);

/// Inner-CV grid search over odd k in [1, 15]; returns the accuracy argmax
/// (ties to the smaller k).
int tune_knn_k(const FeatureMatrix& train, bool standardize, int inner_folds,
               std::uint64_t seed);

}  // namespace emgkit

#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

#include "emgkit/features.hpp"

namespace emgkit {

/// Gaussian naive Bayes: per-class priors and per-class per-feature normal
/// parameters fitted by maximum likelihood, variances floored so the
/// log-densities stay finite.
struct GnbModel {
  std::vector<int> class_labels;   // sorted
  std::vector<std::string> feature_names;
  Eigen::VectorXd log_priors;      // per class
  Eigen::MatrixXd means;           // classes x features
  Eigen::MatrixXd variances;       // classes x features, >= variance_floor
  double variance_floor = 0.0;
};

GnbModel fit_gnb(const FeatureMatrix& train);

std::vector<int> predict_gnb(const GnbModel& model,
                             const Eigen::Ref<const Eigen::MatrixXd>& rows);

}  // namespace emgkit

#include "emgkit/naive_bayes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "emgkit/parallel.hpp"

namespace emgkit {

GnbModel fit_gnb(const FeatureMatrix& train) {
  if (train.rows() == 0) raise(ErrorCode::empty_class, "no training rows");
  std::set<int> distinct(train.labels.begin(), train.labels.end());

  GnbModel m;
  m.class_labels.assign(distinct.begin(), distinct.end());
  m.feature_names = train.names;

  const auto n_classes = static_cast<Eigen::Index>(m.class_labels.size());
  const Eigen::Index d = train.cols();
  const Eigen::Index n = train.rows();

  m.log_priors.resize(n_classes);
  m.means = Eigen::MatrixXd::Zero(n_classes, d);
  m.variances = Eigen::MatrixXd::Zero(n_classes, d);

  // Floor relative to the mean pooled feature variance; keeps zero-variance
  // class/feature cells from collapsing the densities.
  const Eigen::RowVectorXd global_mean = train.values.colwise().mean();
  const double mean_variance =
      (train.values.rowwise() - global_mean).array().square().mean();
  m.variance_floor = 1e-9 * mean_variance;
  if (!(m.variance_floor > 0.0)) m.variance_floor = 1e-12;

  for (Eigen::Index k = 0; k < n_classes; ++k) {
    const int label = m.class_labels[static_cast<std::size_t>(k)];
    std::vector<Eigen::Index> rows;
    for (Eigen::Index i = 0; i < n; ++i)
      if (train.labels[static_cast<std::size_t>(i)] == label) rows.push_back(i);
    if (rows.empty()) raise(ErrorCode::empty_class, "class with no samples");

    m.log_priors(k) = std::log(static_cast<double>(rows.size()) / static_cast<double>(n));
    Eigen::MatrixXd block(static_cast<Eigen::Index>(rows.size()), d);
    for (std::size_t i = 0; i < rows.size(); ++i) block.row(static_cast<Eigen::Index>(i)) = train.values.row(rows[i]);
    m.means.row(k) = block.colwise().mean();
    m.variances.row(k) =
        (block.rowwise() - Eigen::RowVectorXd(m.means.row(k))).array().square().colwise().mean();
  }
  m.variances = m.variances.cwiseMax(m.variance_floor);
  return m;
}

std::vector<int> predict_gnb(const GnbModel& model,
                             const Eigen::Ref<const Eigen::MatrixXd>& rows) {
  if (rows.cols() != model.means.cols())
    raise(ErrorCode::width_mismatch,
          "rows have " + std::to_string(rows.cols()) + " features, model expects " +
              std::to_string(model.means.cols()));
  const auto n_classes = static_cast<Eigen::Index>(model.class_labels.size());
  // Per-class constant term: -0.5 * sum(log(2 pi var)).
  Eigen::VectorXd log_norm(n_classes);
  for (Eigen::Index k = 0; k < n_classes; ++k)
    log_norm(k) =
        -0.5 * (model.variances.row(k).array() * 2.0 * std::numbers::pi).log().sum();

  std::vector<int> out(static_cast<std::size_t>(rows.rows()));
  parallel_for(out.size(), [&](std::size_t i) {
    const auto row = rows.row(static_cast<Eigen::Index>(i));
    int best = 0;
    double best_score = -std::numeric_limits<double>::infinity();
    for (Eigen::Index k = 0; k < n_classes; ++k) {
      const auto diff = (row - model.means.row(k)).array();
      const double score = model.log_priors(k) + log_norm(k) -
                           0.5 * (diff.square() / model.variances.row(k).array()).sum();
      if (score > best_score) {  // classes ascend by code: ties keep the smaller
        best_score = score;
        best = static_cast<int>(k);
      }
    }
    out[i] = model.class_labels[static_cast<std::size_t>(best)];
  });
  return out;
}

}  // namespace emgkit

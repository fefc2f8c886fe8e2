#include "emgkit/knn.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <map>

#include "emgkit/evaluation.hpp"
#include "emgkit/parallel.hpp"

namespace emgkit {

KnnModel fit_knn(const FeatureMatrix& train, const KnnParams& params) {
  if (train.rows() == 0) raise(ErrorCode::empty_training, "no training rows");
  if (params.k < 1) raise(ErrorCode::invalid_params, "k must be >= 1");
  if (params.k > train.rows())
    raise(ErrorCode::k_too_large, "k = " + std::to_string(params.k) + " exceeds " +
                                      std::to_string(train.rows()) + " training rows");

  KnnModel m;
  m.params = params;
  m.feature_names = train.names;
  m.train_labels = train.labels;

  const Eigen::Index d = train.cols();
  if (params.standardize) {
    m.offset = train.values.colwise().mean();
    Eigen::RowVectorXd var =
        (train.values.rowwise() - m.offset).array().square().colwise().mean();
    m.scale.resize(d);
    for (Eigen::Index j = 0; j < d; ++j) {
      const double sd = std::sqrt(var(j));
      if (sd > 0.0) {
        m.scale(j) = 1.0 / sd;
      } else {
        m.scale(j) = 0.0;  // constant feature: no information, drop from distance
        m.constant_features.push_back(static_cast<int>(j));
      }
    }
    if (!m.constant_features.empty())
      std::cerr << "emgkit: warning: " << m.constant_features.size()
                << " constant feature(s) excluded from KNN distance\n";
    m.train_rows =
        (train.values.rowwise() - m.offset).array().rowwise() * m.scale.array();
  } else {
    m.offset = Eigen::RowVectorXd::Zero(d);
    m.scale = Eigen::RowVectorXd::Ones(d);
    m.train_rows = train.values;
  }
  return m;
}

namespace {

int classify_query(const KnnModel& m, const Eigen::RowVectorXd& q,
                   const Eigen::VectorXd& train_sq_norms,
                   std::vector<std::pair<double, int>>& scratch) {
  const Eigen::Index n = m.n_train();
  // ||t - q||^2 = ||t||^2 - 2 t.q + ||q||^2; the q term is rank-invariant but
  // kept so reported distances are real ones.
  Eigen::VectorXd d2 = train_sq_norms - 2.0 * (m.train_rows * q.transpose());
  d2.array() += q.squaredNorm();

  scratch.clear();
  scratch.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i)
    scratch.emplace_back(std::max(0.0, d2(i)), static_cast<int>(i));
  const auto k = static_cast<std::ptrdiff_t>(m.params.k);
  std::partial_sort(scratch.begin(), scratch.begin() + k, scratch.end());

  // Vote among the k nearest; ties by smaller summed distance, then label code.
  std::map<int, std::pair<std::int64_t, double>> votes;  // label -> (count, dist sum)
  for (std::ptrdiff_t i = 0; i < k; ++i) {
    const auto& [dist_sq, idx] = scratch[static_cast<std::size_t>(i)];
    auto& v = votes[m.train_labels[static_cast<std::size_t>(idx)]];
    ++v.first;
    v.second += std::sqrt(dist_sq);
  }
  int best_label = 0;
  std::int64_t best_count = -1;
  double best_dist = 0.0;
  for (const auto& [label, v] : votes) {  // ascending label code
    if (v.first > best_count || (v.first == best_count && v.second < best_dist)) {
      best_label = label;
      best_count = v.first;
      best_dist = v.second;
    }
  }
  return best_label;
}

}  // namespace

std::vector<int> predict_knn(const KnnModel& model,
                             const Eigen::Ref<const Eigen::MatrixXd>& rows) {
  if (rows.cols() != model.train_rows.cols())
    raise(ErrorCode::width_mismatch,
          "rows have " + std::to_string(rows.cols()) + " features, model expects " +
              std::to_string(model.train_rows.cols()));
  const Eigen::VectorXd train_sq_norms = model.train_rows.rowwise().squaredNorm();
  std::vector<int> out(static_cast<std::size_t>(rows.rows()));
  parallel_for(out.size(), [&](std::size_t i) {
    Eigen::RowVectorXd q =
        (rows.row(static_cast<Eigen::Index>(i)) - model.offset).array() *
        model.scale.array();
    std::vector<std::pair<double, int>> scratch;
    out[i] = classify_query(model, q, train_sq_norms, scratch);
  });
  return out;
}

int tune_knn_k(const FeatureMatrix& train, bool standardize, int inner_folds,
               std::uint64_t seed) {
  const auto folds = stratified_kfold(train.labels, inner_folds, seed);
  int best_k = 1;
  double best_acc = -1.0;
  for (int k = 1; k <= 15; k += 2) {
    if (k > train.rows()) break;
    std::int64_t correct = 0, total = 0;
    for (const auto& [train_idx, test_idx] : folds) {
      FeatureMatrix inner = take_rows(train, train_idx);
      if (k > inner.rows()) continue;
      KnnParams params{k, standardize};
      const KnnModel m = fit_knn(inner, params);
      FeatureMatrix held = take_rows(train, test_idx);
      const auto pred = predict_knn(m, held.values);
      for (std::size_t i = 0; i < pred.size(); ++i) {
        correct += pred[i] == held.labels[i] ? 1 : 0;
        ++total;
      }
    }
    const double acc = total > 0 ? static_cast<double>(correct) / static_cast<double>(total) : 0.0;
    if (acc > best_acc) {  // strict: ties keep the smaller k
      best_acc = acc;
      best_k = k;
    }
  }
  return best_k;
}

}  // namespace emgkit

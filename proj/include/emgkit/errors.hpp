#pragma once

#include <stdexcept>
#include <string>

namespace emgkit {

/// Failure categories surfaced by the library. Each maps onto one of the
/// documented error conditions of the module that raises it.
enum class ErrorCode {
  // dataset_io
  malformed_line,
  unknown_label,
  empty_file,
  no_recordings_found,
  // preprocess
  invalid_windowing,
  // features
  empty_series,
  series_too_short,
  invalid_percent,
  empty_input,
  // trees
  empty_node,
  degenerate_data,
  width_mismatch,
  unfitted_forest,
  // selection
  k_out_of_range,
  unknown_feature,
  // classifiers
  k_too_large,
  empty_training,
  empty_class,
  // evaluation
  length_mismatch,
  empty_matrix,
  too_few_samples_per_class,
  // config / cli
  invalid_params,
  io_error,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace emgkit

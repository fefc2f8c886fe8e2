#include "emgkit/errors.hpp"

namespace emgkit {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::malformed_line: return "MalformedLine";
    case ErrorCode::unknown_label: return "UnknownLabel";
    case ErrorCode::empty_file: return "EmptyFile";
    case ErrorCode::no_recordings_found: return "NoRecordingsFound";
    case ErrorCode::invalid_windowing: return "InvalidWindowing";
    case ErrorCode::empty_series: return "EmptySeries";
    case ErrorCode::series_too_short: return "SeriesTooShort";
    case ErrorCode::invalid_percent: return "InvalidPercent";
    case ErrorCode::empty_input: return "EmptyInput";
    case ErrorCode::empty_node: return "EmptyNode";
    case ErrorCode::degenerate_data: return "DegenerateData";
    case ErrorCode::width_mismatch: return "WidthMismatch";
    case ErrorCode::unfitted_forest: return "UnfittedForest";
    case ErrorCode::k_out_of_range: return "KOutOfRange";
    case ErrorCode::unknown_feature: return "UnknownFeature";
    case ErrorCode::k_too_large: return "KTooLarge";
    case ErrorCode::empty_training: return "EmptyTraining";
    case ErrorCode::empty_class: return "EmptyClass";
    case ErrorCode::length_mismatch: return "LengthMismatch";
    case ErrorCode::empty_matrix: return "EmptyMatrix";
    case ErrorCode::too_few_samples_per_class: return "TooFewSamplesPerClass";
    case ErrorCode::invalid_params: return "InvalidParams";
    case ErrorCode::io_error: return "IoError";
  }
  return "UnknownError";
}

}  // namespace emgkit

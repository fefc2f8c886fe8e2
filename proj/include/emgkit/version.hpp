#pragma once

namespace emgkit {

inline constexpr const char* kToolVersion = "0.1.0";

// Bump when the corresponding on-disk layout changes.
inline constexpr int kFeatureSchemaVersion = 1;
inline constexpr int kModelSchemaVersion = 1;
inline constexpr int kReportSchemaVersion = 1;

}  // namespace emgkit

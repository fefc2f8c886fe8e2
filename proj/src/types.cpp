#include "emgkit/types.hpp"

namespace emgkit {

const std::array<std::string, kLabelCount>& GestureLabel::names() {
  static const std::array<std::string, kLabelCount> kNames = {
      "Intervals between gestures",
      "Wrist extension",
      "Grasped hand",
      "Resting hand",
      "Wrist flexion",
      "Radial deviation",
      "Ulnar deviation",
  };
  return kNames;
}

}  // namespace emgkit

#pragma once

namespace orbitcheck {

inline constexpr const char kToolVersion[] = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

}  // namespace orbitcheck

#pragma once

namespace cmtk {

inline constexpr const char* kToolName = "cmtk";
inline constexpr const char* kVersion = "0.1.0";

} // namespace cmtk

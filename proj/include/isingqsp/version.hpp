#pragma once

namespace isingqsp {

inline constexpr const char* library_version() { return "0.1.0"; }

}  // namespace isingqsp

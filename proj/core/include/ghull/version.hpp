#ifndef GHULL_VERSION_HPP
#define GHULL_VERSION_HPP

namespace ghull {
inline constexpr const char* kToolVersion = "0.1.0";
}

#endif

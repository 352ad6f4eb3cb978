#ifndef BOOLMAX_VERSION_HPP
#define BOOLMAX_VERSION_HPP

namespace boolmax {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace boolmax

#endif  // BOOLMAX_VERSION_HPP

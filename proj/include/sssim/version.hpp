#ifndef SSSIM_VERSION_HPP
#define SSSIM_VERSION_HPP

#include <string_view>

namespace sssim {

inline constexpr std::string_view kVersion = "0.1.0";

} // namespace sssim

#endif

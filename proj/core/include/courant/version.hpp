#ifndef COURANT_VERSION_HPP
#define COURANT_VERSION_HPP

namespace courant {

inline constexpr const char* kToolVersion = "courant 0.1.0";

} // namespace courant

#endif

#ifndef SYMJAC_VERSION_HPP
#define SYMJAC_VERSION_HPP

namespace symjac {

inline constexpr const char* version = "0.1.0";

}  // namespace symjac

#endif  // SYMJAC_VERSION_HPP

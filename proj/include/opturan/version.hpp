#ifndef OPTURAN_VERSION_HPP
#define OPTURAN_VERSION_HPP

namespace opturan {

/// Bump on any change that can alter search results; cached results
/// from other versions are discarded.
inline constexpr const char* kCodeVersion = "0.1.0";

}  // namespace opturan

#endif

#pragma once

// Canonical text rendering of outcome keys. Every key type usable in a Dist
// must have a `to_text` overload visible here or through ADL.

#include <cstddef>
#include <cstdint>
#include <string>

#include "gcmonad/prob.hpp"

namespace gcmonad {

template <class K>
class Dist;
template <class K>
class NECSet;

inline std::string to_text(bool b) { return b ? "true" : "false"; }
inline std::string to_text(std::int64_t i) { return std::to_string(i); }
inline std::string to_text(std::size_t i) { return std::to_string(i); }
inline std::string to_text(const Rat& r) { return r.str(); }
inline std::string to_text(const Prob& p) { return p.str(); }

template <class K>
std::string to_text(const Dist<K>& d);
template <class K>
std::string to_text(const NECSet<K>& s);

}  // namespace gcmonad

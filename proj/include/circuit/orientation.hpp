#ifndef CIRCUIT_ORIENTATION_HPP
#define CIRCUIT_ORIENTATION_HPP

#include <string>

namespace circuit {

// Cyclic reading direction of the curve labels around a disc or boundary
// component: ccw reads 1, 2, ..., n; cw reads the reverse.
enum class Orientation { ccw, cw };

inline Orientation opposite(Orientation o) {
  return o == Orientation::ccw ? Orientation::cw : Orientation::ccw;
}

inline const char* to_string(Orientation o) { return o == Orientation::ccw ? "ccw" : "cw"; }

}  // namespace circuit

#endif

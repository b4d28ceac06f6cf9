/*
  classify.hpp — isomorphism type of the twist group of a capped
  neighbourhood, by exact lookup on the surface's attachment data.
*/

#ifndef CIRCUIT_CLASSIFY_HPP
#define CIRCUIT_CLASSIFY_HPP

#include <string>

#include "circuit/surface.hpp"

namespace circuit {

enum class GroupKind { artin_a, artin_d, artin_atilde, sl2z, not_artin, unknown };

struct GroupAssignment {
  GroupKind kind = GroupKind::unknown;
  int rank = 0;           // subscript for the Artin families
  std::string reference;  // which classification fact produced the row

  std::string display() const;  // "A(D_5)", "SL(2,Z)", "not Artin", ...
};

GroupAssignment classify_group(const CircuitSurface& s);

const char* to_string(GroupKind k);

}  // namespace circuit

#endif

#include "circuit/classify.hpp"

#include <algorithm>

namespace circuit {

std::string GroupAssignment::display() const {
  switch (kind) {
    case GroupKind::artin_a: return "A(A_" + std::to_string(rank) + ")";
    case GroupKind::artin_d: return "A(D_" + std::to_string(rank) + ")";
    case GroupKind::artin_atilde: return "A(Atilde_" + std::to_string(rank) + ")";
    case GroupKind::sl2z: return "SL(2,Z)";
    case GroupKind::not_artin: return "not Artin";
    case GroupKind::unknown: return "unknown";
  }
  return "?";
}

const char* to_string(GroupKind k) {
  switch (k) {
    case GroupKind::artin_a: return "artin-a";
    case GroupKind::artin_d: return "artin-d";
    case GroupKind::artin_atilde: return "artin-atilde";
    case GroupKind::sl2z: return "sl2z";
    case GroupKind::not_artin: return "not-artin";
    case GroupKind::unknown: return "unknown";
  }
  return "?";
}

GroupAssignment classify_group(const CircuitSurface& s) {
  int n = s.curve_count();
  int caps_ccw = 0, caps_cw = 0, caps_2n = 0;
  for (const DiscAttachment& d : s.attached_discs()) {
    if (d.kind == DiscKind::D2)
      ++caps_2n;
    else if (d.orientation_class == Orientation::ccw)
      ++caps_ccw;
    else
      ++caps_cw;
  }
  // The two mirror images of a surface carry the same group.
  int hi = std::max(caps_ccw, caps_cw);
  int lo = std::min(caps_ccw, caps_cw);
  bool extras = s.marked_discs() > 0 || s.annuli() > 0;

  GroupAssignment g;
  if (hi == 0 && lo == 0) {
    g = {GroupKind::artin_atilde, n - 1,
         caps_2n == 0 ? "regular-neighbourhood" : "two-n-gon-caps-preserve-group"};
  } else if (caps_2n == 0 && lo == 0 && hi == 1) {
    g = {GroupKind::artin_d, n, "single-n-gon-cap"};
  } else if (caps_2n == 0 && lo == 0 && hi == 2) {
    g = {GroupKind::artin_a, n - 1, "double-n-gon-cap"};
  } else if (caps_2n == 1 && lo == 0 && hi == 1) {
    g = {GroupKind::not_artin, 0, "n-gon-plus-2n-gon-caps"};
  } else if (caps_2n == 1 && lo == 0 && hi == 2) {
    g = {GroupKind::not_artin, 0, "closed-odd-chain"};
  } else if (caps_2n == 0 && lo >= 1) {
    // Opposite-class caps exist only for even n.  At n = 4 curves become
    // isotopic and the group collapses; from n = 6 on the two-disc chain
    // relation is inhomogeneous.
    if (n == 4) {
      if (hi == 1 && lo == 1)
        g = {GroupKind::artin_a, 3, "n4-isotopic-curves"};
      else if (hi == 2 && lo == 1)
        g = {GroupKind::artin_a, 2, "n4-isotopic-curves"};
      else
        g = {GroupKind::sl2z, 0, "torus"};
    } else {
      g = {GroupKind::not_artin, 0, "opposite-caps-chain"};
    }
  } else {
    g = {GroupKind::unknown, 0, "off-table"};
  }

  if (extras) {
    // Marked discs and annuli do not change the affine group; elsewhere the
    // table makes no claim.
    if (g.kind == GroupKind::artin_atilde)
      g.reference += "+marked-points-and-annuli";
    else
      g = {GroupKind::unknown, 0, "off-table-extras"};
  }
  return g;
}

}  // namespace circuit

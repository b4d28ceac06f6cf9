/*
  report.hpp — the engine's verdict on a circuit surface: boundary data,
  disc-bounding, group assignment, cycle-relation status per orientation,
  and an independent normal-form certificate wherever one exists.

  Certificates:
    - surfaces with the affine group attach the type-B normal forms of both
      cycle relators, witnessing that neither relation holds;
    - a neighbourhood with exactly one n-gon cap attaches type-D normal
      forms showing the matching relator trivial and the opposite one not.
*/

#ifndef CIRCUIT_REPORT_HPP
#define CIRCUIT_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "circuit/classify.hpp"
#include "circuit/garside.hpp"
#include "circuit/surface.hpp"

namespace circuit {

struct CertificateEntry {
  Orientation orientation = Orientation::ccw;
  std::string route;    // "type-D quotient" or "type-B embedding"
  std::string relator;  // twist-word relator
  std::string image;    // word handed to the Garside engine
  NormalForm normal_form;
  bool trivial = false;
};

enum class CertificateKind { theorem_only, d_quotient, b_embedding };

struct Certificate {
  CertificateKind kind = CertificateKind::theorem_only;
  bool consistent = true;  // certificate verdicts match the theorem path
  std::vector<CertificateEntry> entries;
};

struct AnalysisReport {
  CircuitSurface surface;
  int euler = 0;
  int genus = 0;
  DiscBoundingInfo bounding;
  GroupAssignment group;
  bool relation_holds_ccw = false;
  bool relation_holds_cw = false;
  Certificate certificate;

  bool relation_holds(Orientation o) const {
    return o == Orientation::ccw ? relation_holds_ccw : relation_holds_cw;
  }
};

AnalysisReport decide_cycle_relation(const CircuitSurface& s);

// Surface spec JSON, e.g.
//   {"n":4, "kind":"N", "chirality":"ccw",
//    "discs":[{"boundary":0,"kind":"D1"}], "marked_discs":1, "annuli":0}
// Errors name the offending field.
CircuitSurface surface_from_json(const nlohmann::json& j);

nlohmann::json surface_to_json(const CircuitSurface& s);
nlohmann::json report_to_json(const AnalysisReport& r);
std::string report_to_text(const AnalysisReport& r);

nlohmann::json nf_to_json(const NormalForm& nf);

}  // namespace circuit

#endif

#include "circuit/report.hpp"

#include <sstream>
#include <stdexcept>

#include "circuit/affine.hpp"
#include "circuit/relations.hpp"

namespace circuit {

namespace {

CertificateEntry b_embedding_entry(int n, Orientation o) {
  CertificateEntry e;
  e.orientation = o;
  e.route = "type-B embedding";
  Word relator = cycle_relation(n, o).relator();
  e.relator = relator.str();
  Word b_image = to_b_word(affine_from_twist(relator));
  e.image = b_image.str();
  e.normal_form = engine_for(CoxType::B, n).normal_form(b_image);
  e.trivial = e.normal_form.is_identity();
  return e;
}

CertificateEntry d_quotient_entry(int n, Orientation o, Orientation capped_class) {
  CertificateEntry e;
  e.orientation = o;
  e.route = "type-D quotient";
  Word relator = cycle_relation(n, o).relator();
  e.relator = relator.str();
  // Mirroring the indices aligns a cw cap with the standard substitution.
  Word aligned = capped_class == Orientation::cw ? mirror_twist_word(relator) : relator;
  Word image = substitute(aligned, dn_substitution(n));
  e.image = image.str();
  e.normal_form = engine_for(CoxType::D, n).normal_form(image);
  e.trivial = e.normal_form.is_identity();
  return e;
}

}  // namespace

AnalysisReport decide_cycle_relation(const CircuitSurface& s) {
  AnalysisReport r{s, euler_characteristic(s), genus(s), bounds_embedded_disc(s),
                   classify_group(s),
                   /*ccw=*/has_d1_cap(s, Orientation::ccw),
                   /*cw=*/has_d1_cap(s, Orientation::cw), Certificate{}};

  int n = s.curve_count();
  const auto& discs = s.attached_discs();
  bool single_d1 = discs.size() == 1 && discs[0].kind == DiscKind::D1 &&
                   s.marked_discs() == 0 && s.annuli() == 0;

  if (r.group.kind == GroupKind::artin_atilde) {
    r.certificate.kind = CertificateKind::b_embedding;
    for (Orientation o : {Orientation::ccw, Orientation::cw}) {
      CertificateEntry e = b_embedding_entry(n, o);
      if (e.trivial != r.relation_holds(o)) r.certificate.consistent = false;
      r.certificate.entries.push_back(std::move(e));
    }
  } else if (single_d1) {
    r.certificate.kind = CertificateKind::d_quotient;
    Orientation capped = discs[0].orientation_class;
    for (Orientation o : {Orientation::ccw, Orientation::cw}) {
      CertificateEntry e = d_quotient_entry(n, o, capped);
      if (e.trivial != r.relation_holds(o)) r.certificate.consistent = false;
      r.certificate.entries.push_back(std::move(e));
    }
  }
  return r;
}

CircuitSurface surface_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("surface spec must be a JSON object");

  auto require_int = [&](const char* field, int min_value) {
    if (!j.contains(field)) throw std::invalid_argument(std::string("missing field: ") + field);
    if (!j[field].is_number_integer())
      throw std::invalid_argument(std::string("field must be an integer: ") + field);
    int v = j[field].get<int>();
    if (v < min_value)
      throw std::invalid_argument(std::string("field out of range: ") + field);
    return v;
  };

  int n = require_int("n", 3);

  Orientation chirality = Orientation::ccw;
  if (j.contains("chirality")) {
    std::string c = j["chirality"].is_string() ? j["chirality"].get<std::string>() : "";
    if (c == "ccw")
      chirality = Orientation::ccw;
    else if (c == "cw")
      chirality = Orientation::cw;
    else
      throw std::invalid_argument("field chirality must be \"ccw\" or \"cw\"");
  }

  CircuitSurface s = [&] {
    if (j.contains("twist_bits")) {
      if (!j["twist_bits"].is_array())
        throw std::invalid_argument("field twist_bits must be an array of booleans");
      std::vector<bool> bits;
      for (const auto& b : j["twist_bits"]) {
        if (b.is_boolean())
          bits.push_back(b.get<bool>());
        else if (b.is_number_integer())
          bits.push_back(b.get<int>() != 0);
        else
          throw std::invalid_argument("field twist_bits must hold booleans or 0/1");
      }
      return build_from_twist_bits(n, bits, chirality);
    }
    NeighbourhoodKind kind = NeighbourhoodKind::N;
    if (j.contains("kind")) {
      std::string k = j["kind"].is_string() ? j["kind"].get<std::string>() : "";
      if (k == "N")
        kind = NeighbourhoodKind::N;
      else if (k == "M")
        kind = NeighbourhoodKind::M;
      else
        throw std::invalid_argument("field kind must be \"N\" or \"M\"");
    }
    return build_neighbourhood(n, kind, chirality);
  }();

  if (j.contains("discs")) {
    if (!j["discs"].is_array()) throw std::invalid_argument("field discs must be an array");
    for (const auto& d : j["discs"]) {
      if (!d.is_object() || !d.contains("boundary") || !d.contains("kind"))
        throw std::invalid_argument("each disc needs fields boundary and kind");
      if (!d["boundary"].is_number_integer())
        throw std::invalid_argument("disc field boundary must be an integer");
      std::string k = d["kind"].is_string() ? d["kind"].get<std::string>() : "";
      DiscKind kind;
      if (k == "D1")
        kind = DiscKind::D1;
      else if (k == "D2")
        kind = DiscKind::D2;
      else
        throw std::invalid_argument("disc field kind must be \"D1\" or \"D2\"");
      s = attach_disc(s, d["boundary"].get<int>(), kind);
    }
  }

  int marked = 0, annuli = 0;
  if (j.contains("marked_discs")) marked = require_int("marked_discs", 0);
  if (j.contains("annuli")) annuli = require_int("annuli", 0);
  return s.with_extras(marked, annuli);
}

nlohmann::json surface_to_json(const CircuitSurface& s) {
  nlohmann::json discs = nlohmann::json::array();
  for (const DiscAttachment& d : s.attached_discs())
    discs.push_back({{"boundary", d.boundary_id},
                     {"kind", to_string(d.kind)},
                     {"orientation", to_string(d.orientation_class)}});
  return {{"n", s.curve_count()},
          {"kind", to_string(s.kind())},
          {"chirality", to_string(s.chirality())},
          {"description", s.describe()},
          {"discs", std::move(discs)},
          {"marked_discs", s.marked_discs()},
          {"annuli", s.annuli()}};
}

nlohmann::json nf_to_json(const NormalForm& nf) {
  nlohmann::json factors = nlohmann::json::array();
  for (const SignedPerm& f : nf.factors) factors.push_back(f.one_line());
  return {{"p", nf.inf}, {"factors", std::move(factors)}};
}

namespace {

nlohmann::json certificate_to_json(const Certificate& c) {
  const char* kind = c.kind == CertificateKind::theorem_only ? "theorem-only"
                     : c.kind == CertificateKind::d_quotient ? "d-garside-quotient"
                                                             : "b-garside-embedding";
  nlohmann::json entries = nlohmann::json::array();
  for (const CertificateEntry& e : c.entries)
    entries.push_back({{"orientation", to_string(e.orientation)},
                       {"route", e.route},
                       {"relator", e.relator},
                       {"image", e.image},
                       {"normal_form", nf_to_json(e.normal_form)},
                       {"trivial", e.trivial}});
  return {{"kind", kind}, {"consistent", c.consistent}, {"entries", std::move(entries)}};
}

}  // namespace

nlohmann::json report_to_json(const AnalysisReport& r) {
  nlohmann::json comps = nlohmann::json::array();
  for (const BoundaryComponent& c : r.surface.all_components()) {
    nlohmann::json jc = {{"id", c.id},
                         {"sides", c.sides},
                         {"polygon", to_string(c.polygon)},
                         {"capped", r.surface.is_capped(c.id)},
                         {"curve_labels", c.curve_labels}};
    if (c.orientation_class) jc["orientation"] = to_string(*c.orientation_class);
    comps.push_back(std::move(jc));
  }
  nlohmann::json bounding = {{"value", r.bounding.bounds}};
  if (r.bounding.orientation) bounding["orientation"] = to_string(*r.bounding.orientation);
  return {{"surface", surface_to_json(r.surface)},
          {"boundary_components", std::move(comps)},
          {"euler_characteristic", r.euler},
          {"genus", r.genus},
          {"bounds_embedded_disc", std::move(bounding)},
          {"group",
           {{"kind", to_string(r.group.kind)},
            {"rank", r.group.rank},
            {"display", r.group.display()},
            {"reference", r.group.reference}}},
          {"cycle_relation", {{"ccw", r.relation_holds_ccw}, {"cw", r.relation_holds_cw}}},
          {"certificate", certificate_to_json(r.certificate)}};
}

std::string report_to_text(const AnalysisReport& r) {
  std::ostringstream out;
  out << "surface:        " << r.surface.describe() << "\n";
  out << "boundary:      ";
  for (const BoundaryComponent& c : r.surface.all_components()) {
    out << " #" << c.id << "[" << c.sides << " sides, " << to_string(c.polygon);
    if (c.orientation_class) out << ", " << to_string(*c.orientation_class);
    if (r.surface.is_capped(c.id)) out << ", capped";
    out << "]";
  }
  out << "\n";
  out << "euler/genus:    " << r.euler << " / " << r.genus << "\n";
  out << "bounds disc:    " << (r.bounding.bounds ? "yes" : "no");
  if (r.bounding.orientation) out << " (" << to_string(*r.bounding.orientation) << ")";
  out << "\n";
  out << "group:          " << r.group.display() << "  [" << r.group.reference << "]\n";
  out << "cycle relation: ccw " << (r.relation_holds_ccw ? "holds" : "fails") << ", cw "
      << (r.relation_holds_cw ? "holds" : "fails") << "\n";
  const char* kind = r.certificate.kind == CertificateKind::theorem_only ? "theorem-only"
                     : r.certificate.kind == CertificateKind::d_quotient
                         ? "d-garside-quotient"
                         : "b-garside-embedding";
  out << "certificate:    " << kind
      << (r.certificate.entries.empty()
              ? ""
              : r.certificate.consistent ? " (consistent)" : " (INCONSISTENT)")
      << "\n";
  for (const CertificateEntry& e : r.certificate.entries) {
    out << "  " << to_string(e.orientation) << " relator via " << e.route << ": "
        << (e.trivial ? "trivial" : "non-trivial") << " (p=" << e.normal_form.inf
        << ", factors=" << e.normal_form.canonical_length() << ")\n";
  }
  return out.str();
}

}  // namespace circuit

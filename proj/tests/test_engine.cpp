#include <doctest.h>

#include <stdexcept>

#include <json.hpp>

#include "circuit/report.hpp"

using namespace circuit;

namespace {

CircuitSurface n_with_caps(int n, Orientation chirality, int d1_ccw, int d1_cw, int d2) {
  CircuitSurface s = build_neighbourhood(n, NeighbourhoodKind::N, chirality);
  int placed_ccw = 0, placed_cw = 0, placed_d2 = 0;
  for (const auto& c : s.all_components()) {
    if (c.polygon == PolygonClass::n_gon && c.orientation_class == Orientation::ccw &&
        placed_ccw < d1_ccw) {
      s = attach_disc(s, c.id, DiscKind::D1);
      ++placed_ccw;
    } else if (c.polygon == PolygonClass::n_gon && c.orientation_class == Orientation::cw &&
               placed_cw < d1_cw) {
      s = attach_disc(s, c.id, DiscKind::D1);
      ++placed_cw;
    } else if (c.polygon == PolygonClass::two_n_gon && placed_d2 < d2) {
      s = attach_disc(s, c.id, DiscKind::D2);
      ++placed_d2;
    }
  }
  REQUIRE(placed_ccw == d1_ccw);
  REQUIRE(placed_cw == d1_cw);
  REQUIRE(placed_d2 == d2);
  return s;
}

CircuitSurface m_with_caps(int n, int d2) {
  CircuitSurface s = build_neighbourhood(n, NeighbourhoodKind::M, Orientation::ccw);
  int placed = 0;
  for (const auto& c : s.all_components())
    if (placed < d2) {
      s = attach_disc(s, c.id, DiscKind::D2);
      ++placed;
    }
  REQUIRE(placed == d2);
  return s;
}

}  // namespace

TEST_CASE("classification table") {
  // Bare neighbourhoods carry the affine group.
  CHECK(classify_group(build_neighbourhood(5, NeighbourhoodKind::N, Orientation::ccw)).kind ==
        GroupKind::artin_atilde);
  CHECK(classify_group(build_neighbourhood(6, NeighbourhoodKind::M, Orientation::ccw)).rank == 5);

  // One n-gon cap gives type D.
  GroupAssignment d5 = classify_group(n_with_caps(5, Orientation::ccw, 1, 0, 0));
  CHECK(d5.kind == GroupKind::artin_d);
  CHECK(d5.rank == 5);
  CHECK(d5.display() == "A(D_5)");

  // Two same-class caps give the braid group.
  GroupAssignment a4 = classify_group(n_with_caps(5, Orientation::ccw, 2, 0, 0));
  CHECK(a4.kind == GroupKind::artin_a);
  CHECK(a4.rank == 4);

  // A 2n-gon cap keeps the affine group.
  GroupAssignment at = classify_group(m_with_caps(6, 1));
  CHECK(at.kind == GroupKind::artin_atilde);
  CHECK(at.rank == 5);
  CHECK(at.display() == "A(Atilde_5)");
  CHECK(classify_group(m_with_caps(6, 2)).kind == GroupKind::artin_atilde);
  CHECK(classify_group(n_with_caps(5, Orientation::ccw, 0, 0, 1)).kind ==
        GroupKind::artin_atilde);

  // Mixed caps on an odd neighbourhood leave no Artin group.
  CHECK(classify_group(n_with_caps(5, Orientation::ccw, 1, 0, 1)).kind == GroupKind::not_artin);
  CHECK(classify_group(n_with_caps(5, Orientation::ccw, 2, 0, 1)).kind == GroupKind::not_artin);

  // Opposite-class caps: special at four curves, non-Artin afterwards.
  CHECK(classify_group(n_with_caps(4, Orientation::ccw, 1, 1, 0)).kind == GroupKind::artin_a);
  CHECK(classify_group(n_with_caps(4, Orientation::ccw, 1, 1, 0)).rank == 3);
  CHECK(classify_group(n_with_caps(4, Orientation::ccw, 2, 1, 0)).rank == 2);
  GroupAssignment torus = classify_group(n_with_caps(4, Orientation::ccw, 2, 2, 0));
  CHECK(torus.kind == GroupKind::sl2z);
  CHECK(torus.display() == "SL(2,Z)");
  CHECK(classify_group(n_with_caps(6, Orientation::ccw, 1, 1, 0)).kind == GroupKind::not_artin);
  CHECK(classify_group(n_with_caps(6, Orientation::ccw, 2, 1, 0)).kind == GroupKind::not_artin);
  CHECK(classify_group(n_with_caps(6, Orientation::ccw, 2, 2, 0)).kind == GroupKind::not_artin);

  // Mirror images classify alike.
  CHECK(classify_group(n_with_caps(4, Orientation::ccw, 0, 1, 0)).kind == GroupKind::artin_d);
  CHECK(classify_group(n_with_caps(4, Orientation::ccw, 1, 2, 0)).rank == 2);

  // Extras only preserve the affine rows.
  CircuitSurface bare = build_neighbourhood(5, NeighbourhoodKind::N, Orientation::ccw);
  CHECK(classify_group(bare.with_extras(2, 1)).kind == GroupKind::artin_atilde);
  CHECK(classify_group(n_with_caps(5, Orientation::ccw, 1, 0, 0).with_extras(1, 0)).kind ==
        GroupKind::unknown);
}

TEST_CASE("cycle relation decisions with certificates") {
  SUBCASE("a ccw cap proves the standard relation and refutes the reverse") {
    AnalysisReport r = decide_cycle_relation(n_with_caps(4, Orientation::ccw, 1, 0, 0));
    CHECK(r.relation_holds_ccw);
    CHECK_FALSE(r.relation_holds_cw);
    CHECK(r.bounding.bounds);
    CHECK(r.group.display() == "A(D_4)");
    REQUIRE(r.certificate.kind == CertificateKind::d_quotient);
    CHECK(r.certificate.consistent);
    REQUIRE(r.certificate.entries.size() == 2);
    for (const CertificateEntry& e : r.certificate.entries) {
      if (e.orientation == Orientation::ccw) {
        CHECK(e.trivial);
        CHECK(e.normal_form.is_identity());
      } else {
        CHECK_FALSE(e.trivial);
      }
    }
  }

  SUBCASE("the bare M neighbourhood satisfies neither relation") {
    AnalysisReport r =
        decide_cycle_relation(build_neighbourhood(4, NeighbourhoodKind::M, Orientation::ccw));
    CHECK_FALSE(r.relation_holds_ccw);
    CHECK_FALSE(r.relation_holds_cw);
    CHECK(r.group.display() == "A(Atilde_3)");
    REQUIRE(r.certificate.kind == CertificateKind::b_embedding);
    CHECK(r.certificate.consistent);
    for (const CertificateEntry& e : r.certificate.entries) {
      CHECK_FALSE(e.trivial);
      CHECK(e.normal_form.canonical_length() > 0);
    }
  }

  SUBCASE("a cw cap proves the reverse relation only") {
    CircuitSurface s = build_neighbourhood(3, NeighbourhoodKind::N, Orientation::cw);
    int id = -1;
    for (const auto& c : s.all_components())
      if (c.polygon == PolygonClass::n_gon) id = c.id;
    AnalysisReport r = decide_cycle_relation(attach_disc(s, id, DiscKind::D1));
    CHECK_FALSE(r.relation_holds_ccw);
    CHECK(r.relation_holds_cw);
    CHECK(r.certificate.kind == CertificateKind::d_quotient);
    CHECK(r.certificate.consistent);
  }

  SUBCASE("the torus bounds discs of both orientations") {
    AnalysisReport r = decide_cycle_relation(n_with_caps(4, Orientation::ccw, 2, 2, 0));
    CHECK(r.relation_holds_ccw);
    CHECK(r.relation_holds_cw);
    CHECK(r.certificate.kind == CertificateKind::theorem_only);
  }
}

TEST_CASE("surface specs in JSON") {
  SUBCASE("round trip") {
    nlohmann::json spec = {{"n", 4},
                           {"kind", "N"},
                           {"chirality", "ccw"},
                           {"discs", {{{"boundary", 0}, {"kind", "D1"}}}},
                           {"marked_discs", 1},
                           {"annuli", 0}};
    CircuitSurface s = surface_from_json(spec);
    CHECK(s.curve_count() == 4);
    CHECK(s.attached_discs().size() == 1);
    CHECK(s.marked_discs() == 1);

    nlohmann::json echoed = surface_to_json(s);
    CHECK(echoed["n"] == 4);
    CHECK(echoed["kind"] == "N");
    CHECK(echoed["discs"].size() == 1);
  }

  SUBCASE("diagnostics name the field") {
    CHECK_THROWS_WITH_AS(surface_from_json(nlohmann::json{{"kind", "N"}}),
                         doctest::Contains("n"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(surface_from_json(nlohmann::json{{"n", 3}, {"kind", "Q"}}),
                         doctest::Contains("kind"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(surface_from_json(nlohmann::json{{"n", 3}, {"kind", "M"}}),
                         doctest::Contains("even"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        surface_from_json(nlohmann::json{{"n", 3}, {"chirality", "sideways"}}),
        doctest::Contains("chirality"), std::invalid_argument);
    nlohmann::json bad_disc = {{"n", 3}, {"discs", {{{"boundary", 0}}}}};
    CHECK_THROWS_WITH_AS(surface_from_json(bad_disc), doctest::Contains("kind"),
                         std::invalid_argument);
  }

  SUBCASE("twist bits select the attachment") {
    nlohmann::json spec = {{"n", 4}, {"twist_bits", {1, 0, 0, 0}}};
    CHECK(surface_from_json(spec).kind() == NeighbourhoodKind::M);
  }
}

TEST_CASE("report serialization") {
  AnalysisReport r = decide_cycle_relation(m_with_caps(4, 2));
  nlohmann::json j = report_to_json(r);

  CHECK(j["group"]["display"] == "A(Atilde_3)");
  CHECK(j["cycle_relation"]["ccw"] == false);
  CHECK(j["cycle_relation"]["cw"] == false);
  CHECK(j["euler_characteristic"] == -2);
  CHECK(j["bounds_embedded_disc"]["value"] == false);
  CHECK(j["certificate"]["kind"] == "b-garside-embedding");
  CHECK(j["certificate"]["consistent"] == true);
  REQUIRE(j["certificate"]["entries"].size() == 2);
  for (const auto& e : j["certificate"]["entries"]) {
    CHECK(e["trivial"] == false);
    CHECK(e["normal_form"].contains("p"));
    CHECK(e["normal_form"].contains("factors"));
  }

  std::string text = report_to_text(r);
  CHECK(text.find("A(Atilde_3)") != std::string::npos);
  CHECK(text.find("cycle relation") != std::string::npos);

  NormalForm nf{-1, {SignedPerm::from_images({2, -1, 3})}};
  nlohmann::json jnf = nf_to_json(nf);
  CHECK(jnf["p"] == -1);
  CHECK(jnf["factors"][0] == nlohmann::json::array({2, -1, 3}));
}

/*
  surface.hpp — ribbon-graph model of the regular neighbourhood of a circuit.

  The underlying graph has one 4-valent vertex per intersection point and
  two arcs per curve; the surface is the thickening given by a rotation
  system.  The two homeomorphism types of neighbourhood (N and M for even
  curve counts, the two mirror images of N for odd counts) differ in how
  the closing band attaches; the convention here is validated against the
  boundary-component counts rather than assumed.

  Boundary components are traced as faces of the combinatorial map.  A
  component passing each curve once is an n-gon and can be capped by a
  disc of kind D1; one passing each curve twice is a 2n-gon, capped by D2.
  Capping an n-gon is exactly what makes the circuit bound an embedded
  closed disc.
*/

#ifndef CIRCUIT_SURFACE_HPP
#define CIRCUIT_SURFACE_HPP

#include <optional>
#include <string>
#include <vector>

#include "circuit/orientation.hpp"

namespace circuit {

enum class NeighbourhoodKind { N, M };

enum class PolygonClass { n_gon, two_n_gon, other };

enum class DiscKind { D1, D2 };  // n-gon cap / 2n-gon cap

struct BoundaryComponent {
  int id = 0;
  int sides = 0;  // number of curve-arcs traversed
  PolygonClass polygon = PolygonClass::other;
  std::optional<Orientation> orientation_class;
  std::vector<int> curve_labels;  // 1-based labels in traced order
};

struct DiscAttachment {
  int boundary_id = 0;
  DiscKind kind = DiscKind::D1;
  Orientation orientation_class = Orientation::ccw;  // inherited from the boundary
};

class CircuitSurface {
 public:
  int curve_count() const { return n_; }
  NeighbourhoodKind kind() const { return kind_; }
  Orientation chirality() const { return chirality_; }

  const std::vector<BoundaryComponent>& all_components() const { return components_; }
  const std::vector<DiscAttachment>& attached_discs() const { return discs_; }
  bool is_capped(int boundary_id) const;

  // Image of a boundary component under the cross-involution.
  int iota_image(int boundary_id) const;

  int marked_discs() const { return marked_discs_; }
  int annuli() const { return annuli_; }

  // Marked discs and annuli change no invariant tracked here; they are
  // carried as counts.
  CircuitSurface with_extras(int marked_discs, int annuli) const;

  std::string describe() const;  // e.g. "N^4 + D1(ccw) + D1(cw)"

 private:
  friend CircuitSurface build_neighbourhood(int, NeighbourhoodKind, Orientation);
  friend CircuitSurface attach_disc(const CircuitSurface&, int, DiscKind);

  int n_ = 0;
  NeighbourhoodKind kind_ = NeighbourhoodKind::N;
  Orientation chirality_ = Orientation::ccw;
  std::vector<BoundaryComponent> components_;
  std::vector<int> iota_face_;  // cross-involution action on component ids
  std::vector<DiscAttachment> discs_;
  int marked_discs_ = 0;
  int annuli_ = 0;
};

// M requires even n; n >= 3 always.
CircuitSurface build_neighbourhood(int n, NeighbourhoodKind kind, Orientation chirality);

// Twist-bit form: only the total parity matters.  Even parity builds N;
// odd parity builds M for even n and the mirror-image N for odd n.
CircuitSurface build_from_twist_bits(int n, const std::vector<bool>& twist_bits,
                                     Orientation chirality);

// Open (uncapped) components only.
std::vector<BoundaryComponent> boundary_components(const CircuitSurface& s);

int euler_characteristic(const CircuitSurface& s);
int genus(const CircuitSurface& s);

// Rejects mismatched polygon kinds and already-capped components.
CircuitSurface attach_disc(const CircuitSurface& s, int boundary_id, DiscKind kind);

struct QuotientInfo {
  enum class Base { disc, annulus, sphere, other };
  Base base = Base::other;
  int marked_points = 0;
};

// Quotient by the cross-involution; defined for a bare neighbourhood or one
// with D2 caps only.  Returns nullopt when the involution does not extend
// in this model (any D1 cap present).
std::optional<QuotientInfo> quotient_type(const CircuitSurface& s);

struct DiscBoundingInfo {
  bool bounds = false;
  std::optional<Orientation> orientation;  // class of one capping n-gon
};

DiscBoundingInfo bounds_embedded_disc(const CircuitSurface& s);

// True when some attached D1 cap sits on a component of the given class.
bool has_d1_cap(const CircuitSurface& s, Orientation o);

const char* to_string(PolygonClass p);
const char* to_string(DiscKind k);
const char* to_string(NeighbourhoodKind k);
const char* to_string(QuotientInfo::Base b);

}  // namespace circuit

#endif

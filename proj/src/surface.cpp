#include "circuit/surface.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace circuit {

namespace {

/*
  Dart bookkeeping.  Curve i (1-based) contributes two arcs, both joining
  vertex v_{i-1} to vertex v_i (indices mod n): arc a_i runs forward, arc
  b_i back.  Arc indices: a_i = 2(i-1), b_i = 2(i-1)+1.  A dart is
  2*arc + end with end 0 = tail, 1 = head, so the partner dart of d is d^1
  and the cross-involution acts by d^3 (it swaps a_i and b_i end-for-end).
*/

struct RibbonGraph {
  int n;
  std::vector<std::vector<int>> rotation;  // per vertex 0..n-1, ccw dart list
};

int arc_a(int i) { return 2 * (i - 1); }
int arc_b(int i) { return 2 * (i - 1) + 1; }
int tail(int arc) { return 2 * arc; }
int head(int arc) { return 2 * arc + 1; }
int curve_of_dart(int d) { return d / 4 + 1; }  // 1-based curve label

RibbonGraph make_graph(int n, bool swapped_closing, Orientation chirality) {
  RibbonGraph g;
  g.n = n;
  g.rotation.resize(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) {
    int next = i == n ? 1 : i + 1;
    std::vector<int> slots;
    if (i == n && swapped_closing)
      slots = {tail(arc_b(i)), head(arc_b(next)), head(arc_a(i)), tail(arc_a(next))};
    else
      slots = {tail(arc_b(i)), tail(arc_a(next)), head(arc_a(i)), head(arc_b(next))};
    if (chirality == Orientation::ccw) std::reverse(slots.begin(), slots.end());
    g.rotation[static_cast<size_t>(i - 1)] = std::move(slots);
  }
  return g;
}

// Face tracing: successor of dart d is the rotation successor of its
// partner dart at the far vertex.
std::vector<BoundaryComponent> trace_faces(const RibbonGraph& g, std::vector<int>& face_of_dart) {
  int n = g.n;
  int dart_count = 4 * n;
  std::vector<int> next_at_vertex(static_cast<size_t>(dart_count), -1);
  std::vector<int> vertex_of(static_cast<size_t>(dart_count), -1);
  for (int v = 0; v < n; ++v) {
    const auto& rot = g.rotation[static_cast<size_t>(v)];
    for (size_t k = 0; k < rot.size(); ++k) {
      next_at_vertex[static_cast<size_t>(rot[k])] = rot[(k + 1) % rot.size()];
      vertex_of[static_cast<size_t>(rot[k])] = v;
    }
  }
  for (int d = 0; d < dart_count; ++d)
    if (vertex_of[static_cast<size_t>(d)] < 0)
      throw std::logic_error("dart missing from the rotation system");

  face_of_dart.assign(static_cast<size_t>(dart_count), -1);
  std::vector<BoundaryComponent> faces;
  for (int start = 0; start < dart_count; ++start) {
    if (face_of_dart[static_cast<size_t>(start)] >= 0) continue;
    BoundaryComponent comp;
    comp.id = static_cast<int>(faces.size());
    int d = start;
    do {
      face_of_dart[static_cast<size_t>(d)] = comp.id;
      comp.curve_labels.push_back(curve_of_dart(d));
      d = next_at_vertex[static_cast<size_t>(d ^ 1)];
    } while (d != start);
    comp.sides = static_cast<int>(comp.curve_labels.size());
    faces.push_back(std::move(comp));
  }
  return faces;
}

// ccw when the labels read 1..n cyclically (possibly repeated); cw when the
// forward reading is the descending cycle, i.e. the reverse direction reads
// 1..n.
std::optional<Orientation> classify_reading(const std::vector<int>& labels, int n) {
  int k = static_cast<int>(labels.size());
  if (k % n != 0) return std::nullopt;
  auto matches = [&](bool ascending) {
    for (int shift = 0; shift < k; ++shift) {
      bool ok = true;
      for (int j = 0; j < k && ok; ++j) {
        int expect = ascending ? (j % n) + 1 : n - (j % n);
        if (labels[static_cast<size_t>((shift + j) % k)] != expect) ok = false;
      }
      if (ok) return true;
    }
    return false;
  };
  if (matches(true)) return Orientation::ccw;
  if (matches(false)) return Orientation::cw;
  return std::nullopt;
}

void classify_component(BoundaryComponent& c, int n) {
  std::vector<int> counts(static_cast<size_t>(n) + 1, 0);
  for (int label : c.curve_labels) ++counts[static_cast<size_t>(label)];
  auto all_equal = [&](int k) {
    for (int i = 1; i <= n; ++i)
      if (counts[static_cast<size_t>(i)] != k) return false;
    return true;
  };
  if (c.sides == n && all_equal(1))
    c.polygon = PolygonClass::n_gon;
  else if (c.sides == 2 * n && all_equal(2))
    c.polygon = PolygonClass::two_n_gon;
  else
    c.polygon = PolygonClass::other;
  if (c.polygon != PolygonClass::other)
    c.orientation_class = classify_reading(c.curve_labels, n);
}

}  // namespace

bool CircuitSurface::is_capped(int boundary_id) const {
  for (const DiscAttachment& d : discs_)
    if (d.boundary_id == boundary_id) return true;
  return false;
}

int CircuitSurface::iota_image(int boundary_id) const {
  if (boundary_id < 0 || static_cast<size_t>(boundary_id) >= iota_face_.size())
    throw std::out_of_range("no boundary component with id " + std::to_string(boundary_id));
  return iota_face_[static_cast<size_t>(boundary_id)];
}

CircuitSurface CircuitSurface::with_extras(int marked_discs, int annuli) const {
  if (marked_discs < 0 || annuli < 0)
    throw std::invalid_argument("extras counts must be nonnegative");
  CircuitSurface s = *this;
  s.marked_discs_ = marked_discs;
  s.annuli_ = annuli;
  return s;
}

std::string CircuitSurface::describe() const {
  std::string out = std::string(to_string(kind_)) + "^" + std::to_string(n_);
  if (chirality_ == Orientation::cw) out += "(cw)";
  for (const DiscAttachment& d : discs_) {
    out += " + ";
    out += to_string(d.kind);
    out += "(";
    out += to_string(d.orientation_class);
    out += ")";
  }
  if (marked_discs_ > 0) out += " + " + std::to_string(marked_discs_) + " marked disc(s)";
  if (annuli_ > 0) out += " + " + std::to_string(annuli_) + " annulus/annuli";
  return out;
}

CircuitSurface build_neighbourhood(int n, NeighbourhoodKind kind, Orientation chirality) {
  if (n < 3) throw std::invalid_argument("a circuit has at least 3 curves");
  if (kind == NeighbourhoodKind::M && n % 2 != 0)
    throw std::invalid_argument("M requires even n");

  bool swapped = kind == NeighbourhoodKind::M;
  RibbonGraph g = make_graph(n, swapped, chirality);
  std::vector<int> face_of_dart;
  std::vector<BoundaryComponent> faces = trace_faces(g, face_of_dart);
  for (BoundaryComponent& c : faces) classify_component(c, n);

  // The convention is validated, not assumed: the traced profile must match
  // the expected boundary structure of the requested kind.
  std::vector<int> profile;
  for (const BoundaryComponent& c : faces) profile.push_back(c.sides);
  std::sort(profile.begin(), profile.end());
  std::vector<int> expected;
  if (kind == NeighbourhoodKind::M)
    expected = {2 * n, 2 * n};
  else if (n % 2 == 0)
    expected = {n, n, n, n};
  else
    expected = {n, n, 2 * n};
  if (profile != expected)
    throw std::logic_error("rotation convention yields the wrong boundary profile");

  CircuitSurface s;
  s.n_ = n;
  s.kind_ = kind;
  s.chirality_ = chirality;
  s.components_ = std::move(faces);
  s.iota_face_.assign(s.components_.size(), -1);
  for (int d = 0; d < 4 * n; ++d) {
    int from = face_of_dart[static_cast<size_t>(d)];
    int to = face_of_dart[static_cast<size_t>(d ^ 3)];
    if (s.iota_face_[static_cast<size_t>(from)] >= 0 &&
        s.iota_face_[static_cast<size_t>(from)] != to)
      throw std::logic_error("cross-involution does not act on boundary components");
    s.iota_face_[static_cast<size_t>(from)] = to;
  }
  return s;
}

CircuitSurface build_from_twist_bits(int n, const std::vector<bool>& twist_bits,
                                     Orientation chirality) {
  bool parity = false;
  for (bool b : twist_bits) parity ^= b;
  if (!parity) return build_neighbourhood(n, NeighbourhoodKind::N, chirality);
  if (n % 2 == 0) return build_neighbourhood(n, NeighbourhoodKind::M, chirality);
  return build_neighbourhood(n, NeighbourhoodKind::N, opposite(chirality));
}

std::vector<BoundaryComponent> boundary_components(const CircuitSurface& s) {
  std::vector<BoundaryComponent> open;
  for (const BoundaryComponent& c : s.all_components())
    if (!s.is_capped(c.id)) open.push_back(c);
  return open;
}

int euler_characteristic(const CircuitSurface& s) {
  // V - E for the thickened graph, plus one face per attached disc.
  return -s.curve_count() + static_cast<int>(s.attached_discs().size());
}

int genus(const CircuitSurface& s) {
  int chi = euler_characteristic(s);
  int b = static_cast<int>(s.all_components().size() - s.attached_discs().size());
  int twice_genus = 2 - chi - b;
  if (twice_genus < 0 || twice_genus % 2 != 0)
    throw std::logic_error("inconsistent Euler characteristic / boundary count");
  return twice_genus / 2;
}

CircuitSurface attach_disc(const CircuitSurface& s, int boundary_id, DiscKind kind) {
  const BoundaryComponent* target = nullptr;
  for (const BoundaryComponent& c : s.all_components())
    if (c.id == boundary_id) target = &c;
  if (target == nullptr)
    throw std::invalid_argument("no boundary component with id " + std::to_string(boundary_id));
  if (s.is_capped(boundary_id))
    throw std::invalid_argument("boundary " + std::to_string(boundary_id) +
                                " is already capped");
  PolygonClass need = kind == DiscKind::D1 ? PolygonClass::n_gon : PolygonClass::two_n_gon;
  if (target->polygon != need)
    throw std::invalid_argument(std::string("no such disc exists: ") + to_string(kind) +
                                " needs a " + to_string(need) + " but boundary " +
                                std::to_string(boundary_id) + " is a " +
                                to_string(target->polygon));
  if (!target->orientation_class)
    throw std::logic_error("capped boundary has no orientation class");

  CircuitSurface out = s;
  out.discs_.push_back({boundary_id, kind, *target->orientation_class});
  return out;
}

std::optional<QuotientInfo> quotient_type(const CircuitSurface& s) {
  int d2 = 0;
  for (const DiscAttachment& d : s.attached_discs()) {
    if (d.kind == DiscKind::D1) return std::nullopt;  // involution does not extend here
    // A D2 cap extends the involution only over an invariant component,
    // where it contributes one fixed point at the disc centre.
    if (s.iota_image(d.boundary_id) != d.boundary_id) return std::nullopt;
    ++d2;
  }

  int fixed_points = s.curve_count() + d2;
  int chi_quotient = (euler_characteristic(s) + fixed_points) / 2;

  // Boundary circles of the quotient: one per involution orbit of open
  // components.
  const auto& comps = s.all_components();
  std::vector<bool> counted(comps.size(), false);
  int open_orbits = 0;
  for (const BoundaryComponent& c : comps) {
    if (s.is_capped(c.id) || counted[static_cast<size_t>(c.id)]) continue;
    counted[static_cast<size_t>(c.id)] = true;
    int partner = s.iota_image(c.id);
    if (partner != c.id) {
      if (s.is_capped(partner)) return std::nullopt;  // asymmetric capping
      counted[static_cast<size_t>(partner)] = true;
    }
    ++open_orbits;
  }

  QuotientInfo info;
  info.marked_points = fixed_points;
  if (chi_quotient == 0 && open_orbits == 2)
    info.base = QuotientInfo::Base::annulus;
  else if (chi_quotient == 1 && open_orbits == 1)
    info.base = QuotientInfo::Base::disc;
  else if (chi_quotient == 2 && open_orbits == 0)
    info.base = QuotientInfo::Base::sphere;
  else
    info.base = QuotientInfo::Base::other;
  return info;
}

DiscBoundingInfo bounds_embedded_disc(const CircuitSurface& s) {
  DiscBoundingInfo info;
  for (const DiscAttachment& d : s.attached_discs()) {
    if (d.kind == DiscKind::D1) {
      info.bounds = true;
      if (!info.orientation) info.orientation = d.orientation_class;
    }
  }
  return info;
}

bool has_d1_cap(const CircuitSurface& s, Orientation o) {
  for (const DiscAttachment& d : s.attached_discs())
    if (d.kind == DiscKind::D1 && d.orientation_class == o) return true;
  return false;
}

const char* to_string(PolygonClass p) {
  switch (p) {
    case PolygonClass::n_gon: return "n-gon";
    case PolygonClass::two_n_gon: return "2n-gon";
    case PolygonClass::other: return "other";
  }
  return "?";
}

const char* to_string(DiscKind k) { return k == DiscKind::D1 ? "D1" : "D2"; }

const char* to_string(NeighbourhoodKind k) { return k == NeighbourhoodKind::N ? "N" : "M"; }

const char* to_string(QuotientInfo::Base b) {
  switch (b) {
    case QuotientInfo::Base::disc: return "disc";
    case QuotientInfo::Base::annulus: return "annulus";
    case QuotientInfo::Base::sphere: return "sphere";
    case QuotientInfo::Base::other: return "other";
  }
  return "?";
}

}  // namespace circuit

#include "circuit/diagram.hpp"

#include <stdexcept>

namespace circuit {

ArtinDiagram::ArtinDiagram(Alphabet vertices) : vertices_(std::move(vertices)) {}

void ArtinDiagram::set_weight(int u, int v, int w) {
  if (u == v) throw std::invalid_argument("diagram admits no self-edges");
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
    throw std::out_of_range("diagram vertex out of range");
  if (w != infinite_weight && w < 2) throw std::invalid_argument("weight must be >= 2");
  if (u > v) std::swap(u, v);
  weights_[{u, v}] = w;
}

int ArtinDiagram::weight(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = weights_.find({u, v});
  return it == weights_.end() ? 2 : it->second;
}

bool ArtinDiagram::operator==(const ArtinDiagram& o) const {
  if (vertices_ != o.vertices_) return false;
  for (int u = 0; u < vertex_count(); ++u)
    for (int v = u + 1; v < vertex_count(); ++v)
      if (weight(u, v) != o.weight(u, v)) return false;
  return true;
}

ArtinDiagram build_diagram(DiagramKind kind) {
  switch (kind.family) {
    case DiagramFamily::A: {
      if (kind.n < 1) throw std::invalid_argument("A(n) needs n >= 1");
      ArtinDiagram d(Alphabet::type_a(kind.n + 1));  // s1..sn on n+1 strands
      for (int i = 0; i + 1 < kind.n; ++i) d.set_weight(i, i + 1, 3);
      return d;
    }
    case DiagramFamily::B: {
      if (kind.n < 2) throw std::invalid_argument("B(n) needs n >= 2");
      ArtinDiagram d(Alphabet::type_b(kind.n));  // t, s1..s_{n-1}
      d.set_weight(0, 1, 4);
      for (int i = 1; i + 1 < kind.n; ++i) d.set_weight(i, i + 1, 3);
      return d;
    }
    case DiagramFamily::D: {
      if (kind.n < 3) throw std::invalid_argument("D(n) needs n >= 3");
      ArtinDiagram d(Alphabet::type_d(kind.n));  // s1, s2 fork onto s3, tail s3..sn
      d.set_weight(0, 2, 3);
      d.set_weight(1, 2, 3);
      for (int i = 2; i + 1 < kind.n; ++i) d.set_weight(i, i + 1, 3);
      return d;
    }
    case DiagramFamily::E: {
      if (kind.n < 6 || kind.n > 8) throw std::invalid_argument("E(n) needs n in {6,7,8}");
      // Path s1..s_{n-1} with the branch vertex sn attached to s3.
      std::vector<std::string> labels;
      for (int i = 1; i <= kind.n; ++i) labels.push_back("s" + std::to_string(i));
      ArtinDiagram d(Alphabet::custom(std::move(labels)));
      for (int i = 0; i + 2 < kind.n; ++i) d.set_weight(i, i + 1, 3);
      d.set_weight(2, kind.n - 1, 3);
      return d;
    }
    case DiagramFamily::ATilde: {
      if (kind.n < 2) throw std::invalid_argument("ATilde(n) needs n >= 2");
      int vertices = kind.n + 1;  // the (n+1)-cycle s1..s_{n+1}
      ArtinDiagram d(Alphabet::affine(vertices));
      for (int i = 0; i < vertices; ++i) d.set_weight(i, (i + 1) % vertices, 3);
      return d;
    }
  }
  throw std::logic_error("unreachable");
}

std::vector<Relation> relators(const ArtinDiagram& d) {
  std::vector<Relation> out;
  const Alphabet& a = d.vertices();
  for (int u = 0; u < d.vertex_count(); ++u) {
    for (int v = u + 1; v < d.vertex_count(); ++v) {
      int w = d.weight(u, v);
      if (w == ArtinDiagram::infinite_weight) continue;
      std::vector<Letter> lhs, rhs;
      for (int k = 0; k < w; ++k) {
        lhs.push_back({k % 2 == 0 ? u : v, 1});
        rhs.push_back({k % 2 == 0 ? v : u, 1});
      }
      out.emplace_back(Word(a, std::move(lhs)), Word(a, std::move(rhs)));
    }
  }
  return out;
}

bool is_irreducible(const ArtinDiagram& d) {
  int n = d.vertex_count();
  if (n == 0) return false;
  std::vector<int> seen(static_cast<size_t>(n), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v = 0; v < n; ++v) {
      if (v == u || seen[static_cast<size_t>(v)]) continue;
      int w = d.weight(u, v);
      bool edge = w == ArtinDiagram::infinite_weight || w >= 3;
      if (edge) {
        seen[static_cast<size_t>(v)] = 1;
        stack.push_back(v);
      }
    }
  }
  for (int v = 0; v < n; ++v)
    if (!seen[static_cast<size_t>(v)]) return false;
  return true;
}

}  // namespace circuit

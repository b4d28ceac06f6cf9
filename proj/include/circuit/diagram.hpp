/*
  diagram.hpp — catalog of Artin/Coxeter diagrams and their defining relations.

  A diagram is a finite multigraph given by edge weights: weight(s,t) is the
  common length of the two sides of the alternating relation between s and t.
  Weight 2 means "no edge" (commutation); weight 0 stands for infinitely many
  edges (no relation at all).  The catalog covers the families A, B, D, E and
  the affine n-cycle; user-supplied diagrams may use any weights.
*/

#ifndef CIRCUIT_DIAGRAM_HPP
#define CIRCUIT_DIAGRAM_HPP

#include <map>
#include <utility>
#include <vector>

#include "circuit/word.hpp"

namespace circuit {

enum class DiagramFamily { A, B, D, E, ATilde };

struct DiagramKind {
  DiagramFamily family;
  int n;  // subscript: the diagram has n vertices for A/B/D/E, n+1 for ATilde

  static DiagramKind A(int n) { return {DiagramFamily::A, n}; }
  static DiagramKind B(int n) { return {DiagramFamily::B, n}; }
  static DiagramKind D(int n) { return {DiagramFamily::D, n}; }
  static DiagramKind E(int n) { return {DiagramFamily::E, n}; }
  static DiagramKind ATilde(int n) { return {DiagramFamily::ATilde, n}; }
};

class ArtinDiagram {
 public:
  static constexpr int infinite_weight = 0;

  explicit ArtinDiagram(Alphabet vertices);

  const Alphabet& vertices() const { return vertices_; }
  int vertex_count() const { return vertices_.size(); }

  // weight >= 2, or infinite_weight; unordered, no self-edges.
  void set_weight(int u, int v, int weight);
  int weight(int u, int v) const;  // 2 when no edge was declared

  bool operator==(const ArtinDiagram& o) const;

 private:
  Alphabet vertices_;
  std::map<std::pair<int, int>, int> weights_;
};

// The standard diagram of the given kind, with the vertex labelling used
// throughout: B puts t at the weight-4 end, D makes s1 and s2 the fork.
ArtinDiagram build_diagram(DiagramKind kind);

// One alternating relation per finite-weight pair; infinite pairs contribute
// nothing.
std::vector<Relation> relators(const ArtinDiagram& d);

// Connectivity of the graph whose edges are the pairs of weight >= 3.
bool is_irreducible(const ArtinDiagram& d);

}  // namespace circuit

#endif

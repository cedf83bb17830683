#pragma once
// Knot diagrams as planar-diagram (PD) combinatorics.
//
// Crossing slots are numbered counterclockwise starting from the incoming
// under-strand:
//
//        c (under out)
//        ^
//   d <--+--> b      over strand through slots b,d
//        |
//        a (incoming under)
//
// sign +1 when the over strand enters at slot d, -1 when it enters at slot b.

#include <array>
#include <string>
#include <vector>

#include "knotcov/presentation.hpp"

namespace knotcov {

struct Crossing {
  std::array<int, 4> arcs{};  // edge labels at slots a,b,c,d
  int sign = 0;
};

struct KnotDiagram {
  std::vector<Crossing> crossings;
  int arc_count = 0;  // = 2c after canonicalization

  int crossing_count() const { return static_cast<int>(crossings.size()); }

  // Edge navigation (valid after canonicalization): edges labeled 1..2c in
  // traversal order; edge k runs into the crossing where it occurs as an
  // incoming slot (0 for under, 1 or 3 for over).
  struct EdgeEnd {
    int crossing = -1;
    int slot = -1;
  };
  std::vector<EdgeEnd> edge_head;  // index 1..2c: incoming occurrence
  std::vector<EdgeEnd> edge_tail;  // index 1..2c: outgoing occurrence

  // Wirtinger arc index (0..c-1) of each edge, by traversal order.
  std::vector<int> over_arc_of_edge;  // index 1..2c
};

// Validate raw crossings (arbitrary positive labels), orient, renumber arcs
// 1..2c by traversal order from the lowest label, rotate every crossing so the
// under-strand enters at slot 0, sort crossings by their slot-0 label, and
// fill navigation data. Throws std::invalid_argument on malformed input.
KnotDiagram canonicalize(std::vector<std::array<int, 4>> raw);

KnotDiagram parse_pd(const std::string& text);
std::string emit_pd(const KnotDiagram& d);
std::string emit_json(const KnotDiagram& d);

KnotDiagram parse_dt(const std::string& text);

// Closure of the braid (sigma_1 ... sigma_{u-1})^v on u strands: the (u,v)
// torus knot, v(u-1) crossings. Requires u,v >= 2 coprime.
KnotDiagram torus_diagram(int u, int v);

// c generators (one per over-arc), one conjugation relator per crossing.
GroupPresentation wirtinger_presentation(const KnotDiagram& d);

}  // namespace knotcov

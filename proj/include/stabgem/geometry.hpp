#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

#include "stabgem/bitvec.hpp"
#include "stabgem/pauli.hpp"

namespace stabgem {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

/* Qubit positions on a plane, optionally wrapped on a torus.  Both built-in
 * code families place qubits at integer coordinates (edges and vertices of a
 * doubled grid), which the rectangle and mesh helpers rely on; distances are
 * plain Euclidean on the minimal periodic image. */
struct Layout {
  std::vector<Vec2> pos;
  double period_x = 0.0;  // 0 means open along this axis
  double period_y = 0.0;

  std::size_t size() const { return pos.size(); }
  bool periodic() const { return period_x > 0.0 || period_y > 0.0; }

  // Displacement from a to b, each axis folded into (-period/2, period/2].
  Vec2 displacement(Vec2 a, Vec2 b) const;
  Vec2 displacement(std::size_t a, std::size_t b) const {
    return displacement(pos[a], pos[b]);
  }
  double dist(Vec2 a, Vec2 b) const {
    Vec2 d = displacement(a, b);
    return std::hypot(d.x, d.y);
  }
  double dist(std::size_t a, std::size_t b) const { return dist(pos[a], pos[b]); }
};

// Qubits q with pred(displacement(center, pos[q])) true.
BitVec region_where(const Layout& lay, Vec2 center, const std::function<bool(Vec2)>& pred);

BitVec disk_region(const Layout& lay, Vec2 center, double radius);

// Wrap-aware half-open box [origin, origin + size) on integer coordinates.
BitVec rect_region(const Layout& lay, Vec2 origin, Vec2 size);

// Region grown by Euclidean distance t (t < 0 returns the region unchanged).
BitVec thicken(const Layout& lay, const BitVec& region, double t);

// Mean position of an operator's support, unwrapped around its first qubit.
Vec2 support_centroid(const Layout& lay, const Pauli& p);

/* Square mesh: the union of horizontal and vertical bands of thickness
 * `band`, pitch `hole + band`, leaving hole x hole openings.  Periods must be
 * multiples of the pitch so the pattern closes on the torus. */
struct MeshSpec {
  long ox = 0, oy = 0;  // band corner offset
  long hole = 0;        // opening side length
  long band = 0;        // band thickness
  long pitch() const { return hole + band; }
};

BitVec mesh_region(const Layout& lay, const MeshSpec& m);

// One band x band square where a band of mesh 1 crosses a transverse band of
// mesh 2 (kind 0: horizontal band of 1 with vertical band of 2; kind 1: the
// other pairing).
struct CrossSquare {
  long u0 = 0, v0 = 0;
  long band = 0;
  int kind = 0;
  long col = 0, row = 0;
  Vec2 center() const { return {(double)u0 + band / 2.0, (double)v0 + band / 2.0}; }
};

std::vector<CrossSquare> crossing_squares(const MeshSpec& m1, const MeshSpec& m2, double period_x,
                                          double period_y);

BitVec cross_square_region(const Layout& lay, const CrossSquare& q);

/* Axis-aligned grid of square patches separated by gaps.  A patch equal to
 * the period covers that axis with one patch; a patch larger than the period
 * does not fit and the grid comes back empty (nx = ny = 0). */
struct PatchGrid {
  long patch = 0, gap = 0;
  long nx = 0, ny = 0;
  std::vector<Vec2> origins;    // row-major, ny rows of nx
  std::vector<BitVec> patches;  // same order
};

PatchGrid partition_into_patches(const Layout& lay, long patch, long gap);

}  // namespace stabgem

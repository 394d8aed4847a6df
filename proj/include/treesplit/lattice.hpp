#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "treesplit/drawing.hpp"
#include "treesplit/partition.hpp"
#include "treesplit/planar.hpp"
#include "treesplit/rng.hpp"
#include "treesplit/spanning_tree.hpp"
#include "treesplit/stats.hpp"

namespace treesplit {

enum class LatticeKind { square, triangular, hexagonal };

std::string to_string(LatticeKind kind);
/// Throws std::invalid_argument on an unknown name.
LatticeKind parse_lattice_kind(std::string_view name);

/// The lattice scaled to spacing 1/n, restricted to a patch covering the box
/// [lo,hi] with a margin of a few cells. Square lattice sites sit at
/// ((i+1/2)/n, (j+1/2)/n); vertex ids run row by row, bottom to top.
PlanarEmbedding lattice_patch(LatticeKind kind, int n, Point lo, Point hi);

/// A lattice clipped to the outer face of a drawing. The boundary cycle is a
/// cycle of dual vertices (face centroids) of the lattice; `omega` holds the
/// lattice vertices inside it and `dual` is omega's dual with the outside
/// wired into the root.
struct LatticeRegion {
  LatticeKind kind = LatticeKind::square;
  int n = 0;
  PlanarEmbedding omega;
  DualGraph dual;
  std::vector<Point> boundary_cycle;
  double boundary_distance = 0.0;  // Hausdorff distance to the drawing's outer boundary
};

/// Throws std::runtime_error (message includes the achieved distance) when the
/// traced boundary cycle is farther than delta from the drawing's outer
/// boundary, or when the clipped faces do not close into one cycle.
LatticeRegion build_lattice_region(LatticeKind kind, int n, const PlaneDrawing& d, double delta);

struct CompatibilityCheck {
  bool compatible = false;
  std::vector<double> max_distance;  // per class, to its matched face
  std::vector<int> face_of_class;
};

/// Is every vertex of class i within epsilon of face face_of_class[i]? With no
/// correspondence given, classes are matched to faces by minimising the total
/// vertex-to-face distance. Throws std::invalid_argument when the class count
/// differs from the face count.
CompatibilityCheck epsilon_compatible(std::span<const Point> coords, const Partition& p, const PlaneDrawing& d,
                                      double epsilon, std::span<const int> face_of_class = {});
CompatibilityCheck epsilon_compatible(const LatticeRegion& region, const Partition& p, const PlaneDrawing& d,
                                      double epsilon, std::span<const int> face_of_class = {});

/// Decides whether some k-1 edges of a spanning tree leave components that
/// can be matched one-to-one with the drawing's faces, each component within
/// epsilon of its face. Exact (tree DP over used-face masks); k <= 8.
class CompatibilityOracle {
 public:
  CompatibilityOracle(std::span<const Point> coords, const PlaneDrawing& d, double epsilon);

  int k() const { return k_; }
  /// Faces within epsilon of vertex v, as a bit mask.
  unsigned allowed(VertexId v) const { return allowed_[static_cast<std::size_t>(v)]; }
  bool splits(const SpanningTree& t) const;

 private:
  int k_;
  std::vector<unsigned> allowed_;
  mutable std::vector<unsigned char> table_;
};

struct CompatibilityEstimate {
  std::uint64_t successes = 0;
  std::uint64_t trials = 0;
  double frequency = 0.0;
  Interval ci;
};

/// Fraction of uniform spanning trees of the region (Wilson on the wired dual)
/// that the oracle accepts.
CompatibilityEstimate compatibility_experiment(const LatticeRegion& region, const PlaneDrawing& d, double epsilon,
                                               std::uint64_t trials, RngStream& rng);
CompatibilityEstimate compatibility_experiment(LatticeKind kind, int n, const PlaneDrawing& d, double delta,
                                               double epsilon, std::uint64_t trials, RngStream& rng);

}  // namespace treesplit

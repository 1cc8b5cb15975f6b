#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "ews/core.hpp"

namespace ews::geometry {

/// Surface patch x(u1, u2) over a parameter rectangle. Analytic partial
/// derivatives may be supplied; when absent they are replaced by fourth-order
/// central differences of the position map.
struct ParametricPatch {
  std::function<Vec3(double, double)> position;
  std::function<Vec3(double, double)> d1, d2;          // first partials
  std::function<Vec3(double, double)> d11, d12, d22;   // second partials
  std::array<double, 2> u1_range{0.0, 1.0};
  std::array<double, 2> u2_range{0.0, 1.0};

  bool has_first() const { return static_cast<bool>(d1) && static_cast<bool>(d2); }
  bool has_second() const {
    return static_cast<bool>(d11) && static_cast<bool>(d12) &&
           static_cast<bool>(d22);
  }
};

/// Mean and Gaussian curvature with the convention 2H = -div(nu): an
/// outward-parametrized sphere of radius R yields H = -1/R, K = 1/R^2.
struct PatchCurvature {
  double H = 0.0;
  double K = 0.0;
  Vec3 normal = Vec3::Zero();
};
PatchCurvature curvature_parametric(const ParametricPatch& patch, double u1,
                                    double u2);

/// Indexed triangle mesh; orientation consistency is validated.
struct TriMesh {
  std::vector<Vec3> vertices;
  std::vector<std::array<int, 3>> faces;
  std::vector<int> face_labels;  // empty, or one label per face

  void validate() const;
  static TriMesh load_obj(const std::string& path);
};

/// Quadric-fit curvature at a mesh vertex using its ring-depth neighborhood.
struct MeshCurvature {
  double H = 0.0;
  double K = 0.0;
  Vec3 normal = Vec3::Zero();
};
MeshCurvature curvature_mesh(const TriMesh& mesh, int vertex, int ring = 2);

/// Group faces into smooth pieces by normal continuity (BFS over shared
/// edges, joining faces whose normals differ by less than the threshold).
std::vector<int> segment_pieces(const TriMesh& mesh,
                                double dihedral_deg = 20.0);

/// Admissibility of a surface against the decoupling conditions:
///   kind IV : max |H| <= tol
///   kind III: max |H| <= tol and max |K| <= tol^2
struct CurvatureReport {
  struct Sample {
    Vec3 location;
    double H = 0.0;
    double K = 0.0;
    Vec3 normal = Vec3::Zero();
    bool regular = true;
  };
  std::vector<Sample> samples;
  double max_abs_H = 0.0;  // over regular samples
  double max_abs_K = 0.0;
  bool verdict_iv = false;
  bool verdict_iii = false;
  double tol = 0.0;
  std::vector<int> violations;  // indices of regular samples breaking the kind's bound
};

inline constexpr double kDefaultCurvatureTol = 1e-6;

CurvatureReport admissibility(const ParametricPatch& patch, BoundaryKind kind,
                              double tol = kDefaultCurvatureTol, int nu1 = 24,
                              int nu2 = 24);
CurvatureReport admissibility(const TriMesh& mesh, BoundaryKind kind,
                              double tol = kDefaultCurvatureTol, int ring = 2);

}  // namespace ews::geometry

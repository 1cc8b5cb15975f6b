#include "ews/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <fstream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ews::geometry {

namespace {

using Func = std::function<Vec3(double, double)>;

// Fourth-order central differences keep the FD fallback usable down to the
// 1e-8 curvature scale.
Vec3 fd1(const Func& f, double u, double v, bool along_u, double h) {
  auto at = [&](double s) {
    return along_u ? f(u + s, v) : f(u, v + s);
  };
  return (-at(2 * h) + 8.0 * at(h) - 8.0 * at(-h) + at(-2 * h)) / (12.0 * h);
}

Vec3 fd2_pure(const Func& f, double u, double v, bool along_u, double h) {
  auto at = [&](double s) {
    return along_u ? f(u + s, v) : f(u, v + s);
  };
  return (-at(2 * h) + 16.0 * at(h) - 30.0 * at(0.0) + 16.0 * at(-h) -
          at(-2 * h)) /
         (12.0 * h * h);
}

Vec3 fd2_mixed(const Func& f, double u, double v, double h) {
  auto du = [&](double vv) {
    auto at = [&](double s) { return f(u + s, vv); };
    return Vec3((-at(2 * h) + 8.0 * at(h) - 8.0 * at(-h) + at(-2 * h)) /
                (12.0 * h));
  };
  return (-du(v + 2 * h) + 8.0 * du(v + h) - 8.0 * du(v - h) +
          du(v - 2 * h)) /
         (12.0 * h);
}

struct Jet2 {
  Vec3 xu, xv, xuu, xuv, xvv;
};

Jet2 patch_jet(const ParametricPatch& p, double u, double v) {
  Jet2 j;
  const double hu = 1e-3 * (1.0 + std::abs(u));
  const double hv = 1e-3 * (1.0 + std::abs(v));
  j.xu = p.has_first() ? p.d1(u, v) : fd1(p.position, u, v, true, hu);
  j.xv = p.has_first() ? p.d2(u, v) : fd1(p.position, u, v, false, hv);
  if (p.has_second()) {
    j.xuu = p.d11(u, v);
    j.xuv = p.d12(u, v);
    j.xvv = p.d22(u, v);
  } else {
    j.xuu = fd2_pure(p.position, u, v, true, hu);
    j.xvv = fd2_pure(p.position, u, v, false, hv);
    j.xuv = fd2_mixed(p.position, u, v, std::sqrt(hu * hv));
  }
  return j;
}

}  // namespace

PatchCurvature curvature_parametric(const ParametricPatch& patch, double u1,
                                    double u2) {
  const Jet2 j = patch_jet(patch, u1, u2);
  const double E = j.xu.dot(j.xu);
  const double F = j.xu.dot(j.xv);
  const double G = j.xv.dot(j.xv);
  const Vec3 raw = j.xu.cross(j.xv);
  const double g = E * G - F * F;
  if (!(raw.norm() > 1e-10)) {
    throw std::domain_error("degenerate parametrization: first partials are "
                            "linearly dependent");
  }
  const Vec3 nu = raw / raw.norm();
  const double L = nu.dot(j.xuu);
  const double M = nu.dot(j.xuv);
  const double N = nu.dot(j.xvv);

  PatchCurvature out;
  out.normal = nu;
  out.H = (E * N - 2.0 * F * M + G * L) / (2.0 * g);
  out.K = (L * N - M * M) / g;
  return out;
}

void TriMesh::validate() const {
  const int nv = static_cast<int>(vertices.size());
  if (!face_labels.empty() && face_labels.size() != faces.size()) {
    throw std::invalid_argument("face label count does not match face count");
  }
  std::map<std::pair<int, int>, int> directed;
  for (size_t f = 0; f < faces.size(); ++f) {
    for (int e = 0; e < 3; ++e) {
      const int i = faces[f][e];
      const int j = faces[f][(e + 1) % 3];
      if (i < 0 || i >= nv || j < 0 || j >= nv) {
        throw std::invalid_argument("face references an invalid vertex index");
      }
      if (i == j) throw std::invalid_argument("degenerate face edge");
      if (++directed[{i, j}] > 1) {
        throw std::invalid_argument(
            "mesh is not consistently oriented: repeated directed edge");
      }
    }
  }
  for (const auto& [edge, count] : directed) {
    const auto rev = directed.find({edge.second, edge.first});
    const int total = count + (rev == directed.end() ? 0 : rev->second);
    if (total > 2) {
      throw std::invalid_argument("non-manifold edge in mesh");
    }
  }
}

TriMesh TriMesh::load_obj(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open mesh file: " + path);
  TriMesh mesh;
  std::map<std::string, int> label_ids;
  int current_label = -1;
  bool any_label = false;
  std::string line;
  int lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    std::istringstream ss(line);
    std::string tag;
    if (!(ss >> tag) || tag[0] == '#') continue;
    if (tag == "v") {
      double x, y, z;
      if (!(ss >> x >> y >> z)) {
        throw std::runtime_error("bad vertex record at line " +
                                 std::to_string(lineno));
      }
      mesh.vertices.emplace_back(x, y, z);
    } else if (tag == "f") {
      std::vector<int> poly;
      std::string item;
      while (ss >> item) {
        // accept v, v/t, v/t/n, v//n forms
        const size_t slash = item.find('/');
        const int idx = std::stoi(item.substr(0, slash));
        if (idx == 0) {
          throw std::runtime_error("zero face index at line " +
                                   std::to_string(lineno));
        }
        poly.push_back(idx > 0 ? idx - 1
                               : static_cast<int>(mesh.vertices.size()) + idx);
      }
      if (poly.size() < 3) {
        throw std::runtime_error("face with fewer than 3 vertices at line " +
                                 std::to_string(lineno));
      }
      for (size_t k = 1; k + 1 < poly.size(); ++k) {
        mesh.faces.push_back({poly[0], poly[k], poly[k + 1]});
        mesh.face_labels.push_back(current_label);
      }
    } else if (tag == "g" || tag == "o" || tag == "usemtl") {
      std::string name;
      ss >> name;
      auto [it, inserted] =
          label_ids.emplace(name, static_cast<int>(label_ids.size()));
      current_label = it->second;
      any_label = true;
    }
  }
  if (!any_label) {
    mesh.face_labels.clear();
  } else {
    // faces before the first group marker get their own label
    for (int& l : mesh.face_labels) {
      if (l < 0) l = static_cast<int>(label_ids.size());
    }
  }
  mesh.validate();
  return mesh;
}

namespace {

Vec3 face_normal(const TriMesh& mesh, size_t f) {
  const Vec3& p0 = mesh.vertices[mesh.faces[f][0]];
  const Vec3& p1 = mesh.vertices[mesh.faces[f][1]];
  const Vec3& p2 = mesh.vertices[mesh.faces[f][2]];
  return (p1 - p0).cross(p2 - p0);  // area-weighted
}

std::vector<std::vector<int>> vertex_faces(const TriMesh& mesh) {
  std::vector<std::vector<int>> vf(mesh.vertices.size());
  for (size_t f = 0; f < mesh.faces.size(); ++f) {
    for (int e = 0; e < 3; ++e) vf[mesh.faces[f][e]].push_back(static_cast<int>(f));
  }
  return vf;
}

// Vertices within `ring` edge hops of `vertex`, walking only across faces
// for which `face_ok` holds.
std::vector<int> ring_neighborhood(const TriMesh& mesh,
                                   const std::vector<std::vector<int>>& vf,
                                   int vertex, int ring,
                                   const std::function<bool(int)>& face_ok) {
  std::set<int> seen{vertex};
  std::deque<std::pair<int, int>> queue{{vertex, 0}};
  std::vector<int> out;
  while (!queue.empty()) {
    const auto [v, depth] = queue.front();
    queue.pop_front();
    if (depth == ring) continue;
    for (int f : vf[v]) {
      if (face_ok && !face_ok(f)) continue;
      for (int e = 0; e < 3; ++e) {
        const int w = mesh.faces[f][e];
        if (seen.insert(w).second) {
          out.push_back(w);
          queue.emplace_back(w, depth + 1);
        }
      }
    }
  }
  return out;
}

MeshCurvature quadric_fit(const TriMesh& mesh,
                          const std::vector<std::vector<int>>& vf, int vertex,
                          int ring, const std::function<bool(int)>& face_ok) {
  const std::vector<int> nbrs =
      ring_neighborhood(mesh, vf, vertex, ring, face_ok);
  if (static_cast<int>(nbrs.size()) < 5) {
    throw std::domain_error("insufficient neighborhood for curvature fit at "
                            "vertex " +
                            std::to_string(vertex));
  }

  Vec3 normal = Vec3::Zero();
  for (int f : vf[vertex]) {
    if (face_ok && !face_ok(f)) continue;
    normal += face_normal(mesh, f);
  }
  if (!(normal.norm() > 1e-14)) {
    throw std::domain_error("degenerate normal estimate at vertex " +
                            std::to_string(vertex));
  }
  normal.normalize();
  Vec3 t1 = normal.cross(std::abs(normal(0)) < 0.9 ? Vec3::UnitX()
                                                   : Vec3::UnitY());
  t1.normalize();
  const Vec3 t2 = normal.cross(t1);

  // Height-field quadric z = a x^2 + b xy + c y^2 + d x + e y + g over the
  // tangent frame; the linear terms absorb normal-estimate error.
  const Vec3& p0 = mesh.vertices[vertex];
  const int rows = static_cast<int>(nbrs.size()) + 1;
  Eigen::MatrixXd A(rows, 6);
  Eigen::VectorXd z(rows);
  for (int i = 0; i < rows; ++i) {
    const Vec3 q =
        (i == 0 ? Vec3::Zero() : Vec3(mesh.vertices[nbrs[i - 1]] - p0));
    const double x = q.dot(t1);
    const double y = q.dot(t2);
    A.row(i) << x * x, x * y, y * y, x, y, 1.0;
    z(i) = q.dot(normal);
  }
  const Eigen::VectorXd sol = A.colPivHouseholderQr().solve(z);
  const double fx = sol(3), fy = sol(4);
  const double fxx = 2.0 * sol(0), fxy = sol(1), fyy = 2.0 * sol(2);
  const double w = 1.0 + fx * fx + fy * fy;

  MeshCurvature out;
  out.normal = normal;
  out.H = ((1.0 + fy * fy) * fxx - 2.0 * fx * fy * fxy +
           (1.0 + fx * fx) * fyy) /
          (2.0 * std::pow(w, 1.5));
  out.K = (fxx * fyy - fxy * fxy) / (w * w);
  return out;
}

}  // namespace

MeshCurvature curvature_mesh(const TriMesh& mesh, int vertex, int ring) {
  if (vertex < 0 || vertex >= static_cast<int>(mesh.vertices.size())) {
    throw std::out_of_range("vertex index out of range");
  }
  return quadric_fit(mesh, vertex_faces(mesh), vertex, ring, nullptr);
}

std::vector<int> segment_pieces(const TriMesh& mesh, double dihedral_deg) {
  const double cos_thresh =
      std::cos(dihedral_deg * std::numbers::pi / 180.0);
  // face adjacency across shared undirected edges
  std::map<std::pair<int, int>, std::vector<int>> edge_faces;
  for (size_t f = 0; f < mesh.faces.size(); ++f) {
    for (int e = 0; e < 3; ++e) {
      int i = mesh.faces[f][e];
      int j = mesh.faces[f][(e + 1) % 3];
      if (i > j) std::swap(i, j);
      edge_faces[{i, j}].push_back(static_cast<int>(f));
    }
  }
  std::vector<Vec3> normals(mesh.faces.size());
  for (size_t f = 0; f < mesh.faces.size(); ++f) {
    normals[f] = face_normal(mesh, f).normalized();
  }
  std::vector<int> piece(mesh.faces.size(), -1);
  int next = 0;
  for (size_t seed = 0; seed < mesh.faces.size(); ++seed) {
    if (piece[seed] >= 0) continue;
    piece[seed] = next;
    std::deque<int> queue{static_cast<int>(seed)};
    while (!queue.empty()) {
      const int f = queue.front();
      queue.pop_front();
      for (int e = 0; e < 3; ++e) {
        int i = mesh.faces[f][e];
        int j = mesh.faces[f][(e + 1) % 3];
        if (i > j) std::swap(i, j);
        for (int g : edge_faces[{i, j}]) {
          if (piece[g] >= 0) continue;
          if (normals[f].dot(normals[g]) >= cos_thresh) {
            piece[g] = piece[f];
            queue.push_back(g);
          }
        }
      }
    }
    ++next;
  }
  return piece;
}

namespace {

CurvatureReport finish_report(CurvatureReport report, BoundaryKind kind,
                              double tol) {
  report.tol = tol;
  for (size_t i = 0; i < report.samples.size(); ++i) {
    const auto& s = report.samples[i];
    if (!s.regular) continue;
    report.max_abs_H = std::max(report.max_abs_H, std::abs(s.H));
    report.max_abs_K = std::max(report.max_abs_K, std::abs(s.K));
    const bool bad_iv = std::abs(s.H) > tol;
    const bool bad_iii = bad_iv || std::abs(s.K) > tol * tol;
    if (kind == BoundaryKind::IV ? bad_iv : bad_iii) {
      report.violations.push_back(static_cast<int>(i));
    }
  }
  report.verdict_iv = report.max_abs_H <= tol;
  report.verdict_iii = report.verdict_iv && report.max_abs_K <= tol * tol;
  return report;
}

}  // namespace

CurvatureReport admissibility(const ParametricPatch& patch, BoundaryKind kind,
                              double tol, int nu1, int nu2) {
  if (tol < 0.0) throw std::invalid_argument("tolerance must be nonnegative");
  CurvatureReport report;
  for (int i = 0; i < nu1; ++i) {
    for (int j = 0; j < nu2; ++j) {
      const double u =
          patch.u1_range[0] +
          (i + 0.5) * (patch.u1_range[1] - patch.u1_range[0]) / nu1;
      const double v =
          patch.u2_range[0] +
          (j + 0.5) * (patch.u2_range[1] - patch.u2_range[0]) / nu2;
      const PatchCurvature c = curvature_parametric(patch, u, v);
      report.samples.push_back(CurvatureReport::Sample{
          patch.position(u, v), c.H, c.K, c.normal, true});
    }
  }
  return finish_report(std::move(report), kind, tol);
}

CurvatureReport admissibility(const TriMesh& mesh, BoundaryKind kind,
                              double tol, int ring) {
  if (tol < 0.0) throw std::invalid_argument("tolerance must be nonnegative");
  mesh.validate();
  const std::vector<int> piece =
      mesh.face_labels.empty() ? segment_pieces(mesh) : mesh.face_labels;
  const std::vector<std::vector<int>> vf = vertex_faces(mesh);

  CurvatureReport report;
  for (size_t v = 0; v < mesh.vertices.size(); ++v) {
    CurvatureReport::Sample s;
    s.location = mesh.vertices[v];
    // a vertex is regular when all incident faces belong to one piece
    int vertex_piece = -1;
    bool regular = !vf[v].empty();
    for (int f : vf[v]) {
      if (vertex_piece < 0) vertex_piece = piece[f];
      if (piece[f] != vertex_piece) {
        regular = false;
        break;
      }
    }
    if (regular) {
      const auto face_ok = [&](int f) { return piece[f] == vertex_piece; };
      try {
        const MeshCurvature c =
            quadric_fit(mesh, vf, static_cast<int>(v), ring, face_ok);
        s.H = c.H;
        s.K = c.K;
        s.normal = c.normal;
      } catch (const std::domain_error&) {
        regular = false;  // too few in-piece neighbors (piece rim, tiny piece)
      }
    }
    s.regular = regular;
    report.samples.push_back(s);
  }
  return finish_report(std::move(report), kind, tol);
}

}  // namespace ews::geometry

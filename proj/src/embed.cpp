#include "trisect/embed.hpp"

#include <Eigen/Sparse>
#include <cmath>
#include <numbers>

namespace trisect {

namespace {

void require_disk(const Diagram& D, int tag) {
  std::set<int> verts, edges;
  int faces = 0;
  for (int f : D.faces_of(tag)) {
    ++faces;
    for (int s : D.cx.faces[f]) {
      verts.insert(D.tail(s));
      edges.insert(s >> 1);
    }
  }
  int chi = static_cast<int>(verts.size()) - static_cast<int>(edges.size()) + faces;
  if (faces == 0 || chi != 1 || binding_circles(D, {tag}).size() != 1)
    throw TopologyError("NotADisk", "surface " + std::to_string(tag) + " is not a disk");
}

double signed_area(const std::map<int, Point>& P, const Diagram& D, int f) {
  double a = 0;
  const auto& sides = D.cx.faces[f];
  for (int s : sides) {
    const Point &p = P.at(D.tail(s)), &q = P.at(D.head(s));
    a += p.x * q.y - q.x * p.y;
  }
  return a / 2;
}

}  // namespace

std::map<int, Point> binding_layout(const Diagram& D, int tag) {
  require_disk(D, tag);
  auto circle = binding_circles(D, {tag}).front();
  const int m = static_cast<int>(circle.sides.size());
  // Faces run along the binding in the order of `circle`; a disk whose faces
  // turn counterclockwise meets its boundary counterclockwise too.
  std::map<int, Point> out;
  for (int k = 0; k < m; ++k) {
    double a = 2 * std::numbers::pi * k / m;
    out[D.tail(circle.sides[k])] = {std::cos(a), std::sin(a)};
  }
  return out;
}

std::map<int, Point> disk_embedding(const Diagram& D, int tag, const std::map<int, Point>* boundary) {
  require_disk(D, tag);
  std::map<int, Point> fixed = boundary ? *boundary : binding_layout(D, tag);
  // Unknowns: interior vertices, then one centre per face with > 3 sides.
  std::map<int, int> var;
  std::map<int, std::set<int>> adj;
  auto link = [&](int a, int b) {
    adj[a].insert(b);
    adj[b].insert(a);
  };
  for (int f : D.faces_of(tag)) {
    const auto& sides = D.cx.faces[f];
    for (int s : sides) link(D.tail(s), D.head(s));
    if (sides.size() > 3)
      for (int s : sides) link(-1 - f, D.tail(s));
  }
  for (auto& [v, _] : adj)
    if (!fixed.count(v)) var.emplace(v, static_cast<int>(var.size()));
  const int n = static_cast<int>(var.size());
  std::map<int, Point> out;
  for (auto& [v, p] : fixed)
    if (adj.count(v)) out[v] = p;
  if (n > 0) {
    std::vector<Eigen::Triplet<double>> trip;
    Eigen::VectorXd bx = Eigen::VectorXd::Zero(n), by = Eigen::VectorXd::Zero(n);
    for (auto& [v, i] : var) {
      trip.emplace_back(i, i, static_cast<double>(adj[v].size()));
      for (int w : adj[v]) {
        auto it = var.find(w);
        if (it != var.end()) {
          trip.emplace_back(i, it->second, -1.0);
        } else {
          const Point& p = fixed.at(w);
          bx[i] += p.x;
          by[i] += p.y;
        }
      }
    }
    Eigen::SparseMatrix<double> A(n, n);
    A.setFromTriplets(trip.begin(), trip.end());
    Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(A);
    if (solver.info() != Eigen::Success) throw TopologyError("NotADisk", "surface " + std::to_string(tag) + " has a detached part");
    Eigen::VectorXd x = solver.solve(bx), y = solver.solve(by);
    for (auto& [v, i] : var)
      if (v >= 0) out[v] = {x[i], y[i]};
  }
  for (int f : D.faces_of(tag))
    if (signed_area(out, D, f) <= 0)
      throw TopologyError("NotADisk", "surface " + std::to_string(tag) + " does not embed with the given binding order");
  return out;
}

}  // namespace trisect

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "trisect/surfmap.hpp"

namespace trisect {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<BigInt>>;

struct SNFResult {
  std::vector<BigInt> diagonal;  // min(rows, cols) entries, d_1 | d_2 | ..., zeros last
  IntMatrix U, V;                // U * M * V = D
};

SNFResult smith_normal_form(const IntMatrix& M);
IntMatrix multiply(const IntMatrix& A, const IntMatrix& B);
BigInt determinant(const IntMatrix& A);

// Column-sparse integer matrix: cols[j] holds (row, value) pairs.
struct SparseMatrix {
  int rows = 0;
  int cols_count = 0;
  std::vector<std::vector<std::pair<int, long long>>> cols;

  SparseMatrix() = default;
  SparseMatrix(int r, int c) : rows(r), cols_count(c), cols(c) {}
  void add(int r, int c, long long v);
  IntMatrix dense() const;
};

// Nonzero invariant factors (so the rank is the length of the result).
std::vector<BigInt> invariant_factors(const SparseMatrix& M);

struct AbelianGroup {
  int rank = 0;
  std::vector<BigInt> torsion;
  bool operator==(const AbelianGroup&) const = default;
  bool is_free(int r) const { return rank == r && torsion.empty(); }
  bool cyclic() const { return (rank == 1 && torsion.empty()) || (rank == 0 && torsion.size() <= 1); }
  std::string str() const;
};

// Cellular chain complex in dimensions 0..3; boundary[n] maps C_n to C_{n-1}
// (boundary[0] is unused).
struct ChainComplex {
  std::array<int, 4> ranks{0, 0, 0, 0};
  std::array<SparseMatrix, 4> boundary;

  // Throws OrientationClash if some composite is nonzero.
  void check() const;
};

AbelianGroup homology(const ChainComplex& C, int n);
std::vector<AbelianGroup> homology_all(const ChainComplex& C);

// Is the 1-chain z (indexed like the edges of C) a boundary?
bool is_boundary(const ChainComplex& C, const std::vector<long long>& z);

// The 2-skeleton of a realization: faces tagged by the diagram surface they
// come from.
struct Skeleton {
  PolygonSet cells;
  std::vector<int> face_surface;
};

struct BallSpec {
  int minus_surface = 0;  // boundary of the ball is -minus + plus
  int plus_surface = 0;
};

struct Realization {
  ChainComplex complex;
  std::vector<int> vertex_index;  // skeleton vertex -> 0-cell or -1
  std::vector<int> edge_index;    // skeleton edge -> 1-cell or -1
};

// Disks are attached along closed side walks in the skeleton; each ball is
// bounded by the faces of two surfaces with signs (-, +) and meets every
// attached disk from both sides, so disks get coefficient 0.
Realization cw_from_realization(const Skeleton& W, const std::vector<std::vector<int>>& disk_attachments,
                                const std::vector<BallSpec>& balls);

}  // namespace trisect

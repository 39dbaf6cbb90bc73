#include "trisect/homology.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace trisect {

namespace {

BigInt babs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

void swap_rows(IntMatrix& A, size_t i, size_t j) {
  if (i != j) std::swap(A[i], A[j]);
}
void swap_cols(IntMatrix& A, size_t i, size_t j) {
  if (i == j) return;
  for (auto& row : A) std::swap(row[i], row[j]);
}
// row_i += q * row_j
void add_row(IntMatrix& A, size_t i, size_t j, const BigInt& q) {
  if (q == 0) return;
  for (size_t k = 0; k < A[i].size(); ++k)
    if (A[j][k] != 0) A[i][k] += q * A[j][k];
}
// col_i += q * col_j
void add_col(IntMatrix& A, size_t i, size_t j, const BigInt& q) {
  if (q == 0) return;
  for (auto& row : A)
    if (row[j] != 0) row[i] += q * row[j];
}

IntMatrix identity(size_t n) {
  IntMatrix I(n, std::vector<BigInt>(n, 0));
  for (size_t i = 0; i < n; ++i) I[i][i] = 1;
  return I;
}

// In-place Smith form; U and V (if given) receive the row/column operations.
void snf_in_place(IntMatrix& D, IntMatrix* U, IntMatrix* V) {
  const size_t m = D.size();
  const size_t n = m ? D[0].size() : 0;
  auto row_op = [&](size_t i, size_t j, const BigInt& q) {
    add_row(D, i, j, q);
    if (U) add_row(*U, i, j, q);
  };
  auto col_op = [&](size_t i, size_t j, const BigInt& q) {
    add_col(D, i, j, q);
    if (V) add_col(*V, i, j, q);
  };
  auto rswap = [&](size_t i, size_t j) {
    swap_rows(D, i, j);
    if (U) swap_rows(*U, i, j);
  };
  auto cswap = [&](size_t i, size_t j) {
    swap_cols(D, i, j);
    if (V) swap_cols(*V, i, j);
  };
  for (size_t t = 0; t < std::min(m, n); ++t) {
    // smallest nonzero |entry|, row-major tie-break
    size_t pi = m, pj = n;
    BigInt best = 0;
    for (size_t i = t; i < m; ++i)
      for (size_t j = t; j < n; ++j)
        if (D[i][j] != 0 && (best == 0 || babs(D[i][j]) < best)) {
          best = babs(D[i][j]);
          pi = i;
          pj = j;
        }
    if (best == 0) break;
    rswap(t, pi);
    cswap(t, pj);
    while (true) {
      bool clean = true;
      for (size_t i = t + 1; i < m; ++i) {
        if (D[i][t] == 0) continue;
        BigInt q = D[i][t] / D[t][t];
        row_op(i, t, -q);
        if (D[i][t] != 0) clean = false;
      }
      for (size_t j = t + 1; j < n; ++j) {
        if (D[t][j] == 0) continue;
        BigInt q = D[t][j] / D[t][t];
        col_op(j, t, -q);
        if (D[t][j] != 0) clean = false;
      }
      if (!clean) {
        // a remainder smaller than the pivot is left in row t or column t
        size_t bi = t, bj = t;
        BigInt b = babs(D[t][t]);
        for (size_t i = t + 1; i < m; ++i)
          if (D[i][t] != 0 && babs(D[i][t]) < b) {
            b = babs(D[i][t]);
            bi = i;
            bj = t;
          }
        for (size_t j = t + 1; j < n; ++j)
          if (D[t][j] != 0 && babs(D[t][j]) < b) {
            b = babs(D[t][j]);
            bi = t;
            bj = j;
          }
        if (bi != t) rswap(t, bi);
        if (bj != t) cswap(t, bj);
        continue;
      }
      bool divides = true;
      for (size_t i = t + 1; i < m && divides; ++i)
        for (size_t j = t + 1; j < n; ++j)
          if (D[i][j] % D[t][t] != 0) {
            row_op(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (D[t][t] < 0) {
      for (auto& x : D[t]) x = -x;
      if (U)
        for (auto& x : (*U)[t]) x = -x;
    }
  }
}

std::vector<BigInt> dense_factors(IntMatrix D) {
  snf_in_place(D, nullptr, nullptr);
  std::vector<BigInt> out;
  for (size_t t = 0; t < std::min(D.size(), D.empty() ? 0 : D[0].size()); ++t)
    if (D[t][t] != 0) out.push_back(D[t][t]);
  return out;
}

struct Overflow {};

long long checked(__int128 x) {
  const __int128 lim = (static_cast<__int128>(1) << 61);
  if (x > lim || x < -lim) throw Overflow{};
  return static_cast<long long>(x);
}

// Unit-pivot elimination on a sparse matrix, then dense Smith form on what is left.
std::vector<BigInt> sparse_factors(const SparseMatrix& M) {
  std::vector<std::map<int, long long>> R(M.rows);
  std::vector<std::set<int>> CR(M.cols_count);
  for (int c = 0; c < M.cols_count; ++c)
    for (auto [r, v] : M.cols[c]) {
      if (v == 0) continue;
      R[r][c] += v;
      if (R[r][c] == 0) {
        R[r].erase(c);
        CR[c].erase(r);
      } else {
        CR[c].insert(r);
      }
    }
  int units = 0;
  bool progress = true;
  while (progress) {
    progress = false;
    std::vector<int> order(M.cols_count);
    for (int c = 0; c < M.cols_count; ++c) order[c] = c;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return CR[a].size() < CR[b].size(); });
    for (int c : order) {
      if (CR[c].empty()) continue;
      int pr = -1;
      size_t best = 0;
      for (int r : CR[c]) {
        long long v = R[r].at(c);
        if ((v == 1 || v == -1) && (pr < 0 || R[r].size() < best)) {
          pr = r;
          best = R[r].size();
        }
      }
      if (pr < 0) continue;
      long long pv = R[pr].at(c);
      std::vector<int> others(CR[c].begin(), CR[c].end());
      for (int r : others) {
        if (r == pr) continue;
        long long f = R[r].at(c) * pv;
        for (auto [c2, v2] : R[pr]) {
          long long nv = checked(static_cast<__int128>(R[r].count(c2) ? R[r][c2] : 0) - static_cast<__int128>(f) * v2);
          if (nv == 0) {
            R[r].erase(c2);
            CR[c2].erase(r);
          } else {
            R[r][c2] = nv;
            CR[c2].insert(r);
          }
        }
      }
      for (auto [c2, v2] : R[pr]) CR[c2].erase(pr);
      R[pr].clear();
      ++units;
      progress = true;
    }
  }
  std::vector<int> rows, cols;
  std::set<int> colset;
  for (int r = 0; r < M.rows; ++r)
    if (!R[r].empty()) {
      rows.push_back(r);
      for (auto& [c, v] : R[r]) colset.insert(c);
    }
  cols.assign(colset.begin(), colset.end());
  std::map<int, int> cpos;
  for (size_t j = 0; j < cols.size(); ++j) cpos[cols[j]] = static_cast<int>(j);
  IntMatrix D(rows.size(), std::vector<BigInt>(cols.size(), 0));
  for (size_t i = 0; i < rows.size(); ++i)
    for (auto& [c, v] : R[rows[i]]) D[i][cpos[c]] = v;
  std::vector<BigInt> out(units, BigInt(1));
  auto rest = dense_factors(D);
  out.insert(out.end(), rest.begin(), rest.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

SNFResult smith_normal_form(const IntMatrix& M) {
  SNFResult r;
  const size_t m = M.size();
  const size_t n = m ? M[0].size() : 0;
  IntMatrix D = M;
  r.U = identity(m);
  r.V = identity(n);
  snf_in_place(D, &r.U, &r.V);
  for (size_t t = 0; t < std::min(m, n); ++t) r.diagonal.push_back(D[t][t]);
  return r;
}

IntMatrix multiply(const IntMatrix& A, const IntMatrix& B) {
  const size_t m = A.size(), k = B.size(), n = k ? B[0].size() : 0;
  IntMatrix C(m, std::vector<BigInt>(n, 0));
  for (size_t i = 0; i < m; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (A[i][l] == 0) continue;
      for (size_t j = 0; j < n; ++j) C[i][j] += A[i][l] * B[l][j];
    }
  return C;
}

// Bareiss elimination.
BigInt determinant(const IntMatrix& A0) {
  IntMatrix A = A0;
  const size_t n = A.size();
  if (n == 0) return 1;
  BigInt sign = 1, prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (A[k][k] == 0) {
      size_t p = k + 1;
      while (p < n && A[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(A[k], A[p]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) / prev;
    prev = A[k][k];
  }
  return sign * A[n - 1][n - 1];
}

void SparseMatrix::add(int r, int c, long long v) {
  if (v == 0) return;
  for (auto& [rr, vv] : cols[c])
    if (rr == r) {
      vv += v;
      return;
    }
  cols[c].push_back({r, v});
}

IntMatrix SparseMatrix::dense() const {
  IntMatrix D(rows, std::vector<BigInt>(cols_count, 0));
  for (int c = 0; c < cols_count; ++c)
    for (auto [r, v] : cols[c]) D[r][c] += v;
  return D;
}

std::vector<BigInt> invariant_factors(const SparseMatrix& M) {
  if (M.rows == 0 || M.cols_count == 0) return {};
  try {
    return sparse_factors(M);
  } catch (const Overflow&) {
    auto f = dense_factors(M.dense());
    std::sort(f.begin(), f.end());
    return f;
  }
}

std::string AbelianGroup::str() const {
  std::ostringstream os;
  bool any = false;
  if (rank > 0) {
    os << "Z";
    if (rank > 1) os << "^" << rank;
    any = true;
  }
  for (auto& t : torsion) {
    if (any) os << " + ";
    os << "Z/" << t;
    any = true;
  }
  if (!any) os << "0";
  return os.str();
}

void ChainComplex::check() const {
  for (int n = 2; n <= 3; ++n) {
    const auto& hi = boundary[n];
    const auto& lo = boundary[n - 1];
    for (int j = 0; j < hi.cols_count; ++j) {
      std::map<int, long long> acc;
      for (auto [r, v] : hi.cols[j])
        for (auto [r2, v2] : lo.cols[r]) acc[r2] += v * v2;
      for (auto& [r, v] : acc)
        if (v != 0) throw TopologyError("OrientationClash", "boundary of boundary is nonzero in dimension " + std::to_string(n));
    }
  }
}

namespace {

std::array<std::vector<BigInt>, 4> all_factors(const ChainComplex& C) {
  std::array<std::vector<BigInt>, 4> f;
  for (int n = 1; n <= 3; ++n) f[n] = invariant_factors(C.boundary[n]);
  return f;
}

AbelianGroup group_from(const ChainComplex& C, const std::array<std::vector<BigInt>, 4>& f, int n) {
  AbelianGroup g;
  int rk_out = n >= 1 ? static_cast<int>(f[n].size()) : 0;
  int rk_in = n + 1 <= 3 ? static_cast<int>(f[n + 1].size()) : 0;
  g.rank = C.ranks[n] - rk_out - rk_in;
  if (n + 1 <= 3)
    for (auto& d : f[n + 1])
      if (d > 1) g.torsion.push_back(d);
  return g;
}

}  // namespace

AbelianGroup homology(const ChainComplex& C, int n) {
  if (n < 0 || n > 3) throw TopologyError("DimensionOutOfRange", "dimension " + std::to_string(n));
  std::array<std::vector<BigInt>, 4> f;
  if (n >= 1) f[n] = invariant_factors(C.boundary[n]);
  if (n + 1 <= 3) f[n + 1] = invariant_factors(C.boundary[n + 1]);
  return group_from(C, f, n);
}

std::vector<AbelianGroup> homology_all(const ChainComplex& C) {
  auto f = all_factors(C);
  std::vector<AbelianGroup> out;
  for (int n = 0; n <= 3; ++n) out.push_back(group_from(C, f, n));
  return out;
}

bool is_boundary(const ChainComplex& C, const std::vector<long long>& z) {
  const auto& d2 = C.boundary[2];
  SparseMatrix aug(d2.rows, d2.cols_count + 1);
  aug.cols = d2.cols;
  aug.cols.emplace_back();
  for (int r = 0; r < static_cast<int>(z.size()); ++r)
    if (z[r] != 0) aug.cols.back().push_back({r, z[r]});
  auto a = invariant_factors(d2);
  auto b = invariant_factors(aug);
  if (a.size() != b.size()) return false;
  BigInt pa = 1, pb = 1;
  for (auto& x : a) pa *= x;
  for (auto& x : b) pb *= x;
  return pa == pb;
}

Realization cw_from_realization(const Skeleton& W, const std::vector<std::vector<int>>& disk_attachments,
                                const std::vector<BallSpec>& balls) {
  const auto& P = W.cells;
  Realization R;
  R.vertex_index.assign(P.num_vertices, -1);
  R.edge_index.assign(P.edges.size(), -1);
  int nv = 0, ne = 0;
  auto use_side = [&](int s) {
    int e = s >> 1;
    if (R.edge_index[e] < 0) R.edge_index[e] = ne++;
    for (int v : P.edges[e])
      if (R.vertex_index[v] < 0) R.vertex_index[v] = nv++;
  };
  for (auto& f : P.faces)
    for (int s : f) use_side(s);
  for (auto& loop : disk_attachments) {
    if (loop.empty()) throw TopologyError("NotALoop", "empty attaching curve");
    for (size_t j = 0; j < loop.size(); ++j) {
      if (P.head(loop[j]) != P.tail(loop[(j + 1) % loop.size()])) throw TopologyError("NotALoop", "attaching curve does not close");
      use_side(loop[j]);
    }
  }
  ChainComplex& C = R.complex;
  const int nfaces = static_cast<int>(P.faces.size());
  const int ncells2 = nfaces + static_cast<int>(disk_attachments.size());
  C.ranks = {nv, ne, ncells2, static_cast<int>(balls.size())};
  C.boundary[0] = SparseMatrix(0, nv);
  C.boundary[1] = SparseMatrix(nv, ne);
  for (size_t e = 0; e < P.edges.size(); ++e) {
    int i = R.edge_index[e];
    if (i < 0) continue;
    C.boundary[1].add(R.vertex_index[P.edges[e][0]], i, -1);
    C.boundary[1].add(R.vertex_index[P.edges[e][1]], i, 1);
  }
  C.boundary[2] = SparseMatrix(ne, ncells2);
  auto add_walk = [&](int col, const std::vector<int>& w) {
    for (int s : w) C.boundary[2].add(R.edge_index[s >> 1], col, (s & 1) ? -1 : 1);
  };
  for (int f = 0; f < nfaces; ++f) add_walk(f, P.faces[f]);
  for (size_t k = 0; k < disk_attachments.size(); ++k) add_walk(nfaces + static_cast<int>(k), disk_attachments[k]);
  C.boundary[3] = SparseMatrix(ncells2, static_cast<int>(balls.size()));
  for (size_t b = 0; b < balls.size(); ++b)
    for (int f = 0; f < nfaces; ++f) {
      if (W.face_surface[f] == balls[b].minus_surface) C.boundary[3].add(f, static_cast<int>(b), -1);
      if (W.face_surface[f] == balls[b].plus_surface) C.boundary[3].add(f, static_cast<int>(b), 1);
    }
  C.check();
  return R;
}

}  // namespace trisect

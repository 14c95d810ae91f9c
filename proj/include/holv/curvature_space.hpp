#pragma once

// The parametrized space of algebraic curvature endomorphisms taking values
// in the maximal parabolic subalgebra, the first Bianchi identity check, and
// the Berger-criterion span for an arbitrary subalgebra given by generators.

#include <array>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include <holv/g2star.hpp>
#include <holv/linalg.hpp>

namespace holv {

// The 26 exact parameters of the curvature space. The k_ prefix keeps them
// distinct from the coordinate names x1..x7 and the matrix-entry names
// s1..s14 used elsewhere.
struct KParams {
  KScalar k_r{}, k_r1{}, k_r2{}, k_r3{}, k_r4{};
  KScalar k_j1{}, k_j2{};
  KScalar k_t{}, k_t1{}, k_t2{}, k_t3{}, k_t4{}, k_t5{}, k_t6{};
  KScalar k_s1{}, k_s2{};
  KScalar k_x1{}, k_x2{}, k_x3{}, k_x4{}, k_x5{};
  KScalar k_y1{}, k_y2{}, k_y3{}, k_y4{}, k_y5{};

  static constexpr int kCount = 26;

  static const std::array<const char*, kCount>& names() {
    static const std::array<const char*, kCount> n = {
        "k_r",  "k_r1", "k_r2", "k_r3", "k_r4", "k_j1", "k_j2",
        "k_t",  "k_t1", "k_t2", "k_t3", "k_t4", "k_t5", "k_t6",
        "k_s1", "k_s2", "k_x1", "k_x2", "k_x3", "k_x4", "k_x5",
        "k_y1", "k_y2", "k_y3", "k_y4", "k_y5"};
    return n;
  }

  std::array<KScalar, kCount> as_array() const {
    return {k_r,  k_r1, k_r2, k_r3, k_r4, k_j1, k_j2, k_t,  k_t1,
            k_t2, k_t3, k_t4, k_t5, k_t6, k_s1, k_s2, k_x1, k_x2,
            k_x3, k_x4, k_x5, k_y1, k_y2, k_y3, k_y4, k_y5};
  }

  static KParams from_array(const std::array<KScalar, kCount>& a) {
    KParams p;
    p.k_r = a[0];
    p.k_r1 = a[1];
    p.k_r2 = a[2];
    p.k_r3 = a[3];
    p.k_r4 = a[4];
    p.k_j1 = a[5];
    p.k_j2 = a[6];
    p.k_t = a[7];
    p.k_t1 = a[8];
    p.k_t2 = a[9];
    p.k_t3 = a[10];
    p.k_t4 = a[11];
    p.k_t5 = a[12];
    p.k_t6 = a[13];
    p.k_s1 = a[14];
    p.k_s2 = a[15];
    p.k_x1 = a[16];
    p.k_x2 = a[17];
    p.k_x3 = a[18];
    p.k_x4 = a[19];
    p.k_x5 = a[20];
    p.k_y1 = a[21];
    p.k_y2 = a[22];
    p.k_y3 = a[23];
    p.k_y4 = a[24];
    p.k_y5 = a[25];
    return p;
  }

  // Unit vector in parameter direction i (canonical order of names()).
  static KParams basis(int i) {
    std::array<KScalar, kCount> a{};
    a[static_cast<size_t>(i)] = KScalar(1);
    return from_array(a);
  }
};

// Curvature table indexed by frame pairs (i, j) with 1 <= i < j <= 7.
struct AlgCurvature {
  std::map<std::pair<int, int>, G2Element> entries;

  static const std::vector<std::pair<int, int>>& pairs() {
    static const std::vector<std::pair<int, int>> ps = [] {
      std::vector<std::pair<int, int>> v;
      for (int i = 1; i <= 7; ++i)
        for (int j = i + 1; j <= 7; ++j) v.emplace_back(i, j);
      return v;
    }();
    return ps;
  }

  const G2Element& at(int i, int j) const {
    auto it = entries.find({i, j});
    if (it == entries.end()) throw std::out_of_range("AlgCurvature::at: pair not present");
    return it->second;
  }

  // R(b_i, b_j) for arbitrary indices, using antisymmetry.
  G2Element endo(int i, int j) const {
    if (i == j) return G2Element();
    if (i < j) return at(i, j);
    return -at(j, i);
  }
};

// Populate the curvature table from the 26 parameters: the nine generator
// pairs from their (A, z, c) columns, the four tied pairs by proportionality,
// the (3,5) pair as the difference of the (1,6) and (2,7) entries, and the
// remaining seven pairs identically zero. The (3,5) entry is forced by the
// first Bianchi identity: solving the full Bianchi system over all 21 pairs
// with parabolic values yields a 26-dimensional solution space on which
// R_35 = R_16 - R_27 holds identically, while a zero (3,5) entry would break
// the identity for generic parameters (e.g. the triple (3,5,6) in the x1
// direction).
inline AlgCurvature build_curvature(const KParams& p) {
  const KMat zero2 = KMat::Constant(2, 2, KScalar(0));
  auto mat2 = [](const KScalar& a, const KScalar& b, const KScalar& c, const KScalar& d) {
    KMat m(2, 2);
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = c;
    m(1, 1) = d;
    return m;
  };
  auto H = [](const KMat& A, const std::array<KScalar, 4>& z, const KScalar& c) {
    return h_of(HParams(A, z, c));
  };

  const KScalar s2 = KScalar::sqrt2();

  G2Element R16 = H(zero2, {p.k_x4, p.k_x3, p.k_x2, p.k_x1}, p.k_t + p.k_t1);
  G2Element R17 = H(zero2, {p.k_x5, p.k_x4, p.k_x3, p.k_x2}, p.k_t4 - p.k_t5);
  G2Element R26 = H(zero2, {p.k_y4, p.k_y3, p.k_y2, p.k_y1}, p.k_t2 - p.k_t3);
  G2Element R27 = H(zero2, {p.k_y5, p.k_y4, p.k_y3, p.k_y2}, p.k_t6 + p.k_t);
  G2Element R56 = H(mat2(p.k_x1, p.k_y1, p.k_x2, p.k_y2), {p.k_t6, p.k_t2, p.k_s2, p.k_j2}, p.k_r1);
  G2Element R57 = H(mat2(p.k_x2, p.k_y2, p.k_x3, p.k_y3), {p.k_t5, p.k_t1, p.k_t3, p.k_s2}, p.k_r2);
  G2Element R36 = H(mat2(p.k_x3, p.k_y3, p.k_x4, p.k_y4), {p.k_s1, p.k_t4, p.k_t1, p.k_t2}, p.k_r3);
  G2Element R37 = H(mat2(p.k_x4, p.k_y4, p.k_x5, p.k_y5), {p.k_j1, p.k_s1, p.k_t5, p.k_t6}, p.k_r4);
  G2Element R67 = H(mat2(p.k_t + p.k_t1, p.k_t2 - p.k_t3, p.k_t4 - p.k_t5, p.k_t6 + p.k_t),
                    {p.k_r4, p.k_r3, p.k_r2, p.k_r1}, p.k_r);

  AlgCurvature R;
  for (const auto& pr : AlgCurvature::pairs()) R.entries[pr] = G2Element();
  R.entries[{1, 6}] = R16;
  R.entries[{1, 7}] = R17;
  R.entries[{2, 6}] = R26;
  R.entries[{2, 7}] = R27;
  R.entries[{5, 6}] = R56;
  R.entries[{5, 7}] = R57;
  R.entries[{3, 6}] = R36;
  R.entries[{3, 7}] = R37;
  R.entries[{6, 7}] = R67;
  R.entries[{3, 4}] = s2 * R17;
  R.entries[{4, 5}] = -s2 * R26;
  R.entries[{4, 6}] = s2 * R57;
  R.entries[{4, 7}] = s2 * R36;
  R.entries[{3, 5}] = R16 - R27;
  return R;
}

// First Bianchi identity: R(b_i,b_j) b_k + R(b_j,b_k) b_i + R(b_k,b_i) b_j = 0
// for all 35 index triples, exactly.
inline bool bianchi_check(const AlgCurvature& R) {
  for (int i = 1; i <= 7; ++i) {
    for (int j = i + 1; j <= 7; ++j) {
      for (int k = j + 1; k <= 7; ++k) {
        const KMat& Mij = R.at(i, j).matrix();
        const KMat& Mjk = R.at(j, k).matrix();
        const KMat& Mik = R.at(i, k).matrix();
        for (int row = 0; row < 7; ++row) {
          KScalar acc = Mij(row, k - 1) + Mjk(row, i - 1) - Mik(row, j - 1);
          if (!acc.is_zero()) return false;
        }
      }
    }
  }
  return true;
}

// Result of solving {R_ij(p) lies in span(h) for every frame pair} over the
// 26-dimensional parameter space.
struct BergerSpan {
  std::vector<DenseVector<KScalar>> constrained_params;  // basis of the solution space
  std::vector<G2Element> span;  // curvature images over the solution basis
  int dim = 0;                  // exact rank of the span
  int solution_space_dim() const { return static_cast<int>(constrained_params.size()); }
};

inline BergerSpan berger_span(const std::vector<G2Element>& h) {
  for (const auto& g : h)
    if (!p2_member(g)) throw std::invalid_argument("berger_span: generator outside the parabolic subalgebra");

  // Annihilator of span(h) inside the 14-dimensional coefficient space.
  DenseMatrix<KScalar> gen_rows(static_cast<Eigen::Index>(h.size()), 14);
  for (size_t r = 0; r < h.size(); ++r) {
    const auto& s = h[r].s();
    for (int c = 0; c < 14; ++c) gen_rows(static_cast<Eigen::Index>(r), c) = s[static_cast<size_t>(c)];
  }
  DenseMatrix<KScalar> ann = annihilator(gen_rows);  // columns k with gen_rows * k = 0
  const Eigen::Index q = ann.cols();

  // Curvature tables in each parameter direction; build_curvature is linear.
  const auto& prs = AlgCurvature::pairs();
  std::vector<AlgCurvature> basis_curv;
  basis_curv.reserve(KParams::kCount);
  for (int a = 0; a < KParams::kCount; ++a) basis_curv.push_back(build_curvature(KParams::basis(a)));

  // Membership of every R_ij(p) in span(h) is equivalent to vanishing against
  // every annihilator vector; assemble the linear system over the parameters.
  DenseMatrix<KScalar> C(static_cast<Eigen::Index>(prs.size()) * q, KParams::kCount);
  C.setConstant(KScalar(0));
  for (size_t pi = 0; pi < prs.size(); ++pi) {
    for (Eigen::Index kk = 0; kk < q; ++kk) {
      const Eigen::Index row = static_cast<Eigen::Index>(pi) * q + kk;
      for (int a = 0; a < KParams::kCount; ++a) {
        const auto& s = basis_curv[static_cast<size_t>(a)].at(prs[pi].first, prs[pi].second).s();
        KScalar acc(0);
        for (int c = 0; c < 14; ++c) acc += ann(c, kk) * s[static_cast<size_t>(c)];
        C(row, a) = acc;
      }
    }
  }

  DenseMatrix<KScalar> sols = nullspace(C);  // 26 x d

  BergerSpan out;
  DenseMatrix<KScalar> span_rows(sols.cols() * static_cast<Eigen::Index>(prs.size()), 14);
  Eigen::Index nrows = 0;
  for (Eigen::Index b = 0; b < sols.cols(); ++b) {
    out.constrained_params.push_back(sols.col(b));
    std::array<KScalar, KParams::kCount> pa;
    for (int a = 0; a < KParams::kCount; ++a) pa[static_cast<size_t>(a)] = sols(a, b);
    AlgCurvature R = build_curvature(KParams::from_array(pa));
    for (const auto& pr : prs) {
      const G2Element& e = R.at(pr.first, pr.second);
      if (e.is_zero()) continue;
      out.span.push_back(e);
      const auto& s = e.s();
      for (int c = 0; c < 14; ++c) span_rows(nrows, c) = s[static_cast<size_t>(c)];
      ++nrows;
    }
  }
  out.dim = static_cast<int>(exact_rank(DenseMatrix<KScalar>(span_rows.topRows(nrows))));
  return out;
}

// Berger's criterion: the curvature images constrained to h span all of h.
inline bool berger_criterion_holds(const std::vector<G2Element>& h) {
  BergerSpan bs = berger_span(h);
  const Eigen::Index m = static_cast<Eigen::Index>(h.size());
  const Eigen::Index n = static_cast<Eigen::Index>(bs.span.size());
  DenseMatrix<KScalar> stacked(m + n, 14);
  for (Eigen::Index r = 0; r < m; ++r) {
    const auto& s = h[static_cast<size_t>(r)].s();
    for (int c = 0; c < 14; ++c) stacked(r, c) = s[static_cast<size_t>(c)];
  }
  for (Eigen::Index r = 0; r < n; ++r) {
    const auto& s = bs.span[static_cast<size_t>(r)].s();
    for (int c = 0; c < 14; ++c) stacked(m + r, c) = s[static_cast<size_t>(c)];
  }
  const int rank_h = static_cast<int>(exact_rank(DenseMatrix<KScalar>(stacked.topRows(m))));
  const int rank_union = static_cast<int>(exact_rank(stacked));
  return bs.dim == rank_h && rank_union == rank_h;
}

}  // namespace holv

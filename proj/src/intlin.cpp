#include "temperedkit/intlin.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tempered {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  }
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product shape mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Int& aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) {
        out.at(i, j) += aik * rhs.at(k, j);
      }
    }
  }
  return out;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& x) const {
  if (static_cast<int>(x.size()) != cols_) {
    throw std::invalid_argument("matrix apply shape mismatch");
  }
  std::vector<Int> y(rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      if (x[j] != 0) y[i] += at(i, j) * x[j];
    }
  }
  return y;
}

bool IntMatrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const Int& v) { return v == 0; });
}

IntMatrix IntMatrix::columns(const std::vector<int>& idx) const {
  IntMatrix out(rows_, static_cast<int>(idx.size()));
  for (int j = 0; j < out.cols(); ++j) {
    for (int i = 0; i < rows_; ++i) out.at(i, j) = at(i, idx[j]);
  }
  return out;
}

IntMatrix IntMatrix::hcat(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hcat shape mismatch");
  IntMatrix out(a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols(); ++j) out.at(i, a.cols() + j) = b.at(i, j);
  }
  return out;
}

std::vector<Int> SmithDecomposition::diagonal() const {
  std::vector<Int> out;
  int k = std::min(d.rows(), d.cols());
  out.reserve(k);
  for (int i = 0; i < k; ++i) out.push_back(d.at(i, i));
  return out;
}

namespace {

struct SmithWorker {
  IntMatrix a, u, u_inv, v, v_inv;

  explicit SmithWorker(const IntMatrix& m)
      : a(m),
        u(IntMatrix::identity(m.rows())),
        u_inv(IntMatrix::identity(m.rows())),
        v(IntMatrix::identity(m.cols())),
        v_inv(IntMatrix::identity(m.cols())) {}

  void swap_rows(int r1, int r2) {
    if (r1 == r2) return;
    for (int j = 0; j < a.cols(); ++j) std::swap(a.at(r1, j), a.at(r2, j));
    for (int j = 0; j < u.cols(); ++j) std::swap(u.at(r1, j), u.at(r2, j));
    for (int i = 0; i < u_inv.rows(); ++i) std::swap(u_inv.at(i, r1), u_inv.at(i, r2));
  }

  void swap_cols(int c1, int c2) {
    if (c1 == c2) return;
    for (int i = 0; i < a.rows(); ++i) std::swap(a.at(i, c1), a.at(i, c2));
    for (int i = 0; i < v.rows(); ++i) std::swap(v.at(i, c1), v.at(i, c2));
    for (int j = 0; j < v_inv.cols(); ++j) std::swap(v_inv.at(c1, j), v_inv.at(c2, j));
  }

  // row r1 -= q * row r2
  void add_row(int r1, int r2, const Int& q) {
    if (q == 0) return;
    for (int j = 0; j < a.cols(); ++j) a.at(r1, j) -= q * a.at(r2, j);
    for (int j = 0; j < u.cols(); ++j) u.at(r1, j) -= q * u.at(r2, j);
    for (int i = 0; i < u_inv.rows(); ++i) u_inv.at(i, r2) += q * u_inv.at(i, r1);
  }

  // col c1 -= q * col c2
  void add_col(int c1, int c2, const Int& q) {
    if (q == 0) return;
    for (int i = 0; i < a.rows(); ++i) a.at(i, c1) -= q * a.at(i, c2);
    for (int i = 0; i < v.rows(); ++i) v.at(i, c1) -= q * v.at(i, c2);
    for (int j = 0; j < v_inv.cols(); ++j) v_inv.at(c2, j) += q * v_inv.at(c1, j);
  }

  void negate_row(int r) {
    for (int j = 0; j < a.cols(); ++j) a.at(r, j) = -a.at(r, j);
    for (int j = 0; j < u.cols(); ++j) u.at(r, j) = -u.at(r, j);
    for (int i = 0; i < u_inv.rows(); ++i) u_inv.at(i, r) = -u_inv.at(i, r);
  }

  // Pivot with smallest nonzero absolute value, row-major tie break.
  bool find_pivot(int t, int& pi, int& pj) const {
    bool found = false;
    Int best;
    for (int i = t; i < a.rows(); ++i) {
      for (int j = t; j < a.cols(); ++j) {
        if (a.at(i, j) == 0) continue;
        Int mag = abs(a.at(i, j));
        if (!found || mag < best) {
          found = true;
          best = mag;
          pi = i;
          pj = j;
        }
      }
    }
    return found;
  }

  static Int nearest_quotient(const Int& num, const Int& den) {
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
  }

  void reduce() {
    const int steps = std::min(a.rows(), a.cols());
    for (int t = 0; t < steps; ++t) {
      int pi = t, pj = t;
      if (!find_pivot(t, pi, pj)) break;
      swap_rows(t, pi);
      swap_cols(t, pj);
      bool clean = false;
      while (!clean) {
        clean = true;
        for (int i = t + 1; i < a.rows(); ++i) {
          if (a.at(i, t) == 0) continue;
          Int q = nearest_quotient(a.at(i, t), a.at(t, t));
          add_row(i, t, q);
          if (a.at(i, t) != 0) {
            // Remainder became the smaller pivot.
            swap_rows(t, i);
            clean = false;
          }
        }
        for (int j = t + 1; j < a.cols(); ++j) {
          if (a.at(t, j) == 0) continue;
          Int q = nearest_quotient(a.at(t, j), a.at(t, t));
          add_col(j, t, q);
          if (a.at(t, j) != 0) {
            swap_cols(t, j);
            clean = false;
          }
        }
      }
      // Divisibility fix: pull any non-multiple into the working row.
      bool restart = false;
      for (int i = t + 1; i < a.rows() && !restart; ++i) {
        for (int j = t + 1; j < a.cols() && !restart; ++j) {
          if (a.at(i, j) % a.at(t, t) != 0) {
            add_row(t, i, Int(-1));
            restart = true;
          }
        }
      }
      if (restart) {
        --t;
        continue;
      }
      if (a.at(t, t) < 0) negate_row(t);
    }
  }
};

}  // namespace

SmithDecomposition smith(const IntMatrix& m) {
  SmithWorker w(m);
  w.reduce();
  SmithDecomposition out;
  out.u = std::move(w.u);
  out.u_inv = std::move(w.u_inv);
  out.v = std::move(w.v);
  out.v_inv = std::move(w.v_inv);
  out.d = std::move(w.a);
  out.rank = 0;
  int k = std::min(out.d.rows(), out.d.cols());
  for (int i = 0; i < k; ++i) {
    if (out.d.at(i, i) != 0) ++out.rank;
  }
  return out;
}

std::vector<Int> FinAbGroup::reduce(std::vector<Int> coords) const {
  if (static_cast<int>(coords.size()) != dim()) {
    throw std::invalid_argument("coordinate length does not match group dimension");
  }
  for (std::size_t k = 0; k < torsion.size(); ++k) {
    Int& c = coords[free_rank + k];
    mpz_mod(c.get_mpz_t(), c.get_mpz_t(), torsion[k].get_mpz_t());
  }
  return coords;
}

bool FinAbGroup::is_zero_element(const std::vector<Int>& coords) const {
  std::vector<Int> r = reduce(coords);
  return std::all_of(r.begin(), r.end(), [](const Int& v) { return v == 0; });
}

std::string FinAbGroup::describe() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank == 1) {
    os << "Z";
    first = false;
  } else if (free_rank > 1) {
    os << "Z^" << free_rank;
    first = false;
  }
  for (const Int& d : torsion) {
    if (!first) os << " + ";
    os << "Z/" << d.get_str();
    first = false;
  }
  return os.str();
}

bool iso_groups(const FinAbGroup& g, const FinAbGroup& h) {
  return g.free_rank == h.free_rank && g.torsion == h.torsion;
}

std::vector<Int> CokernelPresentation::project(const std::vector<Int>& ambient) const {
  if (static_cast<int>(ambient.size()) != ambient_rows) {
    throw std::invalid_argument("ambient vector length mismatch in cokernel projection");
  }
  std::vector<Int> w = u.apply(ambient);
  std::vector<Int> coords;
  coords.reserve(coord_rows.size());
  for (int row : coord_rows) coords.push_back(w[row]);
  return group.reduce(std::move(coords));
}

std::vector<Int> CokernelPresentation::lift_generator(int coordinate) const {
  std::vector<Int> out(ambient_rows);
  int row = coord_rows[coordinate];
  for (int i = 0; i < ambient_rows; ++i) out[i] = u_inv.at(i, row);
  return out;
}

CokernelPresentation cokernel(const IntMatrix& m) {
  SmithDecomposition s = smith(m);
  CokernelPresentation pres;
  pres.ambient_rows = m.rows();
  pres.u = std::move(s.u);
  pres.u_inv = std::move(s.u_inv);
  int k = std::min(m.rows(), m.cols());
  pres.diag.resize(k);
  for (int i = 0; i < k; ++i) pres.diag[i] = s.d.at(i, i);

  // Free coordinates first (zero diagonal or rows past the diagonal block),
  // then torsion coordinates in divisibility order.
  for (int i = 0; i < m.rows(); ++i) {
    if (i >= k || pres.diag[i] == 0) {
      pres.coord_rows.push_back(i);
      ++pres.group.free_rank;
    }
  }
  for (int i = 0; i < k; ++i) {
    if (pres.diag[i] > 1) {
      pres.coord_rows.push_back(i);
      pres.group.torsion.push_back(pres.diag[i]);
    }
  }
  return pres;
}

IntMatrix kernel_basis(const IntMatrix& m) {
  SmithDecomposition s = smith(m);
  std::vector<int> free_cols;
  for (int j = s.rank; j < m.cols(); ++j) free_cols.push_back(j);
  return s.v.columns(free_cols);
}

KernelPresentation kernel_presentation(const IntMatrix& m) {
  KernelPresentation out;
  out.basis = kernel_basis(m);
  out.group.free_rank = out.basis.cols();
  return out;
}

std::optional<std::vector<Int>> solve_exact(const IntMatrix& a, const std::vector<Int>& b) {
  if (static_cast<int>(b.size()) != a.rows()) {
    throw std::invalid_argument("solve_exact shape mismatch");
  }
  SmithDecomposition s = smith(a);
  std::vector<Int> ub = s.u.apply(b);
  std::vector<Int> y(a.cols());
  int k = std::min(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i) {
    const Int d = i < k ? s.d.at(i, i) : Int(0);
    if (d == 0) {
      if (ub[i] != 0) return std::nullopt;
      continue;
    }
    if (ub[i] % d != 0) return std::nullopt;
    y[i] = ub[i] / d;
  }
  return s.v.apply(y);
}

bool lattice_contains(const IntMatrix& a, const IntMatrix& b) {
  for (int j = 0; j < b.cols(); ++j) {
    std::vector<Int> col(b.rows());
    for (int i = 0; i < b.rows(); ++i) col[i] = b.at(i, j);
    if (!solve_exact(a, col)) return false;
  }
  return true;
}

bool lattice_equal(const IntMatrix& a, const IntMatrix& b) {
  return lattice_contains(a, b) && lattice_contains(b, a);
}

std::vector<Int> GroupHom::apply(const std::vector<Int>& x) const {
  return target.reduce(matrix.apply(source.reduce(x)));
}

GroupHom zero_hom(const FinAbGroup& source, const FinAbGroup& target) {
  return {source, target, IntMatrix(target.dim(), source.dim())};
}

GroupHom identity_hom(const FinAbGroup& g) {
  return {g, g, IntMatrix::identity(g.dim())};
}

GroupHom compose(const GroupHom& outer, const GroupHom& inner) {
  if (!iso_groups(outer.source, inner.target) ||
      outer.source.dim() != inner.target.dim()) {
    throw std::invalid_argument("hom composition endpoint mismatch");
  }
  GroupHom out;
  out.source = inner.source;
  out.target = outer.target;
  out.matrix = outer.matrix * inner.matrix;
  return out;
}

IntMatrix relation_columns(const FinAbGroup& g) {
  IntMatrix rel(g.dim(), static_cast<int>(g.torsion.size()));
  for (std::size_t k = 0; k < g.torsion.size(); ++k) {
    rel.at(g.free_rank + static_cast<int>(k), static_cast<int>(k)) = g.torsion[k];
  }
  return rel;
}

bool hom_equal(const GroupHom& f, const GroupHom& g) {
  if (f.source.dim() != g.source.dim() || f.target.dim() != g.target.dim()) return false;
  for (int j = 0; j < f.matrix.cols(); ++j) {
    std::vector<Int> diff(f.matrix.rows());
    for (int i = 0; i < f.matrix.rows(); ++i) diff[i] = f.matrix.at(i, j) - g.matrix.at(i, j);
    if (!f.target.is_zero_element(diff)) return false;
  }
  return true;
}

bool is_zero_hom(const GroupHom& f) {
  return hom_equal(f, zero_hom(f.source, f.target));
}

bool is_well_defined(const GroupHom& f) {
  for (std::size_t k = 0; k < f.source.torsion.size(); ++k) {
    int j = f.source.free_rank + static_cast<int>(k);
    std::vector<Int> image(f.matrix.rows());
    for (int i = 0; i < f.matrix.rows(); ++i) {
      image[i] = f.matrix.at(i, j) * f.source.torsion[k];
    }
    if (!f.target.is_zero_element(image)) return false;
  }
  return true;
}

namespace {

// Lattice of {x : g(x) = 0 in target}, inside the covering lattice Z^dim of
// the source group.
IntMatrix kernel_lattice(const GroupHom& g) {
  IntMatrix stacked = IntMatrix::hcat(g.matrix, relation_columns(g.target));
  IntMatrix full_kernel = kernel_basis(stacked);
  IntMatrix out(g.source.dim(), full_kernel.cols());
  for (int j = 0; j < full_kernel.cols(); ++j) {
    for (int i = 0; i < g.source.dim(); ++i) out.at(i, j) = full_kernel.at(i, j);
  }
  return IntMatrix::hcat(out, relation_columns(g.source));
}

IntMatrix image_lattice(const GroupHom& f) {
  return IntMatrix::hcat(f.matrix, relation_columns(f.target));
}

}  // namespace

bool exact_at(const GroupHom& f, const GroupHom& g) {
  if (f.target.dim() != g.source.dim()) {
    throw std::invalid_argument("exactness check needs composable homs");
  }
  return lattice_equal(image_lattice(f), kernel_lattice(g));
}

bool is_isomorphism(const GroupHom& f) {
  if (!iso_groups(f.source, f.target)) return false;
  if (!is_well_defined(f)) return false;
  // Surjective: the image lattice covers all of Z^dim(target).
  if (!lattice_contains(image_lattice(f), IntMatrix::identity(f.target.dim()))) {
    return false;
  }
  // Injective: the kernel lattice is no bigger than the relation lattice.
  IntMatrix rel = relation_columns(f.source);
  IntMatrix ker = kernel_lattice(f);
  return lattice_contains(rel, ker);
}

GroupHom invert_isomorphism(const GroupHom& f) {
  GroupHom out;
  out.source = f.target;
  out.target = f.source;
  out.matrix = IntMatrix(f.source.dim(), f.target.dim());
  IntMatrix stacked = IntMatrix::hcat(f.matrix, relation_columns(f.target));
  for (int k = 0; k < f.target.dim(); ++k) {
    std::vector<Int> e(f.target.dim());
    e[k] = 1;
    auto sol = solve_exact(stacked, e);
    if (!sol) throw std::invalid_argument("hom is not invertible");
    std::vector<Int> pre(sol->begin(), sol->begin() + f.source.dim());
    pre = f.source.reduce(std::move(pre));
    for (int i = 0; i < f.source.dim(); ++i) out.matrix.at(i, k) = pre[i];
  }
  return out;
}

GroupHom induced_on_cokernels(const IntMatrix& f_rows, const CokernelPresentation& src,
                              const CokernelPresentation& dst) {
  GroupHom out;
  out.source = src.group;
  out.target = dst.group;
  out.matrix = IntMatrix(dst.group.dim(), src.group.dim());
  for (int j = 0; j < src.group.dim(); ++j) {
    std::vector<Int> image = dst.project(f_rows.apply(src.lift_generator(j)));
    for (int i = 0; i < dst.group.dim(); ++i) out.matrix.at(i, j) = image[i];
  }
  return out;
}

GroupHom induced_on_kernels(const IntMatrix& f_cols, const KernelPresentation& src,
                            const KernelPresentation& dst) {
  GroupHom out;
  out.source = src.group;
  out.target = dst.group;
  out.matrix = IntMatrix(dst.group.dim(), src.group.dim());
  for (int j = 0; j < src.group.dim(); ++j) {
    std::vector<Int> col(src.basis.rows());
    for (int i = 0; i < src.basis.rows(); ++i) col[i] = src.basis.at(i, j);
    std::vector<Int> mapped = f_cols.apply(col);
    auto coords = solve_exact(dst.basis, mapped);
    if (!coords) {
      throw NonCommutingError("mapped kernel element leaves the target kernel");
    }
    for (int i = 0; i < dst.group.dim(); ++i) out.matrix.at(i, j) = (*coords)[i];
  }
  return out;
}

InducedPair induced_map(const IntMatrix& f_rows, const IntMatrix& f_cols,
                        const IntMatrix& m_src, const IntMatrix& m_dst) {
  if (f_rows.rows() != m_dst.rows() || f_rows.cols() != m_src.rows() ||
      f_cols.rows() != m_dst.cols() || f_cols.cols() != m_src.cols()) {
    throw std::invalid_argument("induced_map shape mismatch");
  }
  if (!(f_rows * m_src == m_dst * f_cols)) {
    throw NonCommutingError("square does not commute; no induced map exists");
  }
  InducedPair out;
  out.on_cokernels = induced_on_cokernels(f_rows, cokernel(m_src), cokernel(m_dst));
  out.on_kernels =
      induced_on_kernels(f_cols, kernel_presentation(m_src), kernel_presentation(m_dst));
  return out;
}

namespace {

void require_exact_rows(const IntMatrix& iota, const IntMatrix& pi) {
  if (kernel_basis(iota).cols() != 0) {
    throw NotExactError("row fails exactness: inclusion is not injective");
  }
  if (!cokernel(pi).group.is_trivial()) {
    throw NotExactError("row fails exactness: projection is not surjective");
  }
  if (!(pi * iota).is_zero()) {
    throw NotExactError("row fails exactness: projection of inclusion is nonzero");
  }
  if (!lattice_equal(iota, kernel_basis(pi))) {
    throw NotExactError("row fails exactness: image of inclusion differs from kernel");
  }
}

}  // namespace

GroupHom snake_connecting(const ComplexTriple& t) {
  return snake_connecting(t, kernel_presentation(t.m3), cokernel(t.m1));
}

GroupHom snake_connecting(const ComplexTriple& t, const KernelPresentation& ker3,
                          const CokernelPresentation& coker1) {
  if (!(t.iota_rows * t.m1 == t.m2 * t.iota_cols)) {
    throw NonCommutingError("ideal square does not commute");
  }
  if (!(t.pi_rows * t.m2 == t.m3 * t.pi_cols)) {
    throw NonCommutingError("quotient square does not commute");
  }
  require_exact_rows(t.iota_cols, t.pi_cols);
  require_exact_rows(t.iota_rows, t.pi_rows);

  GroupHom out;
  out.source = ker3.group;
  out.target = coker1.group;
  out.matrix = IntMatrix(coker1.group.dim(), ker3.group.dim());
  for (int j = 0; j < ker3.group.dim(); ++j) {
    std::vector<Int> k(ker3.basis.rows());
    for (int i = 0; i < ker3.basis.rows(); ++i) k[i] = ker3.basis.at(i, j);
    auto lift = solve_exact(t.pi_cols, k);
    if (!lift) throw NotExactError("cannot lift kernel element through projection");
    std::vector<Int> mid = t.m2.apply(*lift);
    auto pulled = solve_exact(t.iota_rows, mid);
    if (!pulled) throw NotExactError("middle image does not come from the ideal row");
    std::vector<Int> coords = coker1.project(*pulled);
    for (int i = 0; i < coker1.group.dim(); ++i) out.matrix.at(i, j) = coords[i];
  }
  return out;
}

}  // namespace tempered

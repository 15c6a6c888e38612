#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "temperedkit/errors.hpp"

namespace tempered {

using Int = mpz_class;

// Dense integer matrix with arbitrary-precision entries. Zero-dimensional
// matrices are legal and show up as presentations of free and trivial groups.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& at(int i, int j) { return e_[i * cols_ + j]; }
  const Int& at(int i, int j) const { return e_[i * cols_ + j]; }

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  std::vector<Int> apply(const std::vector<Int>& x) const;
  bool is_zero() const;
  IntMatrix columns(const std::vector<int>& idx) const;
  static IntMatrix hcat(const IntMatrix& a, const IntMatrix& b);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Int> e_;
};

// U * M * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ...
// The inverses are accumulated during the reduction so callers can move
// between ambient and normal-form coordinates exactly.
struct SmithDecomposition {
  IntMatrix u, u_inv, d, v, v_inv;
  int rank = 0;
  std::vector<Int> diagonal() const;
};

SmithDecomposition smith(const IntMatrix& m);

// Finitely generated abelian group Z^free_rank + Z/d_1 + ... with d_i >= 2
// forming a divisibility chain. Elements are coordinate vectors: free
// coordinates first, then one residue per invariant factor.
struct FinAbGroup {
  int free_rank = 0;
  std::vector<Int> torsion;
  std::vector<std::vector<Int>> generator_images;

  int dim() const { return free_rank + static_cast<int>(torsion.size()); }
  bool is_trivial() const { return dim() == 0; }
  std::vector<Int> reduce(std::vector<Int> coords) const;
  bool is_zero_element(const std::vector<Int>& coords) const;
  std::string describe() const;  // e.g. "Z^2 + Z/2 + Z/6", "0"
};

bool iso_groups(const FinAbGroup& g, const FinAbGroup& h);

// coker(M) = Z^rows / im(M) together with the projection map from ambient
// vectors to group coordinates.
struct CokernelPresentation {
  FinAbGroup group;
  IntMatrix u;           // from smith(M)
  IntMatrix u_inv;
  std::vector<Int> diag;
  int ambient_rows = 0;
  std::vector<int> coord_rows;  // SNF row index per group coordinate

  std::vector<Int> project(const std::vector<Int>& ambient) const;
  std::vector<Int> lift_generator(int coordinate) const;
};

CokernelPresentation cokernel(const IntMatrix& m);

// Columns form a Z-basis of ker(M); the kernel is a direct summand, so any
// kernel element has unique integer coordinates in this basis.
IntMatrix kernel_basis(const IntMatrix& m);

// One integer solution of A x = b, or nothing when none exists.
std::optional<std::vector<Int>> solve_exact(const IntMatrix& a, const std::vector<Int>& b);

// Does the column lattice of `a` contain every column of `b`?
bool lattice_contains(const IntMatrix& a, const IntMatrix& b);
bool lattice_equal(const IntMatrix& a, const IntMatrix& b);

// Homomorphism between groups in their SNF coordinates.
struct GroupHom {
  FinAbGroup source;
  FinAbGroup target;
  IntMatrix matrix;  // target.dim() x source.dim()

  std::vector<Int> apply(const std::vector<Int>& x) const;
};

GroupHom zero_hom(const FinAbGroup& source, const FinAbGroup& target);
GroupHom identity_hom(const FinAbGroup& g);
GroupHom compose(const GroupHom& outer, const GroupHom& inner);
bool hom_equal(const GroupHom& f, const GroupHom& g);
bool is_zero_hom(const GroupHom& f);
bool is_well_defined(const GroupHom& f);
bool is_isomorphism(const GroupHom& f);
GroupHom invert_isomorphism(const GroupHom& f);

// Generators of the relation lattice of a group (d_i e_i for torsion coords).
IntMatrix relation_columns(const FinAbGroup& g);

// Is im(f) equal to ker(g) inside the shared middle group?
bool exact_at(const GroupHom& f, const GroupHom& g);

// Induced maps on cokernels and kernels of a commuting square
//   Z^{cols_src} --m_src--> Z^{rows_src}
//        |f_cols                |f_rows
//   Z^{cols_dst} --m_dst--> Z^{rows_dst}
// Throws NonCommutingError when the square fails.
// Free group of rank equal to the kernel dimension, plus its ambient basis.
struct KernelPresentation {
  FinAbGroup group;
  IntMatrix basis;  // columns in Z^{cols(M)}
};
KernelPresentation kernel_presentation(const IntMatrix& m);

struct InducedPair {
  GroupHom on_cokernels;
  GroupHom on_kernels;
};
InducedPair induced_map(const IntMatrix& f_rows, const IntMatrix& f_cols,
                        const IntMatrix& m_src, const IntMatrix& m_dst);

// Same maps against presentations the caller already holds, so repeated
// squares over one stratum stay in identical coordinates.
GroupHom induced_on_cokernels(const IntMatrix& f_rows, const CokernelPresentation& src,
                              const CokernelPresentation& dst);
GroupHom induced_on_kernels(const IntMatrix& f_cols, const KernelPresentation& src,
                            const KernelPresentation& dst);

// Short exact sequence of two-term complexes
//   0 -> (M1: Z^{c1}->Z^{r1}) -> (M2) -> (M3) -> 0.
struct ComplexTriple {
  IntMatrix m1, m2, m3;
  IntMatrix iota_rows, iota_cols;  // ideal -> total
  IntMatrix pi_rows, pi_cols;      // total -> quotient
};

// Snake-lemma connecting homomorphism ker(M3) -> coker(M1). Verifies the
// squares commute and the rows are exact first.
GroupHom snake_connecting(const ComplexTriple& triple);
GroupHom snake_connecting(const ComplexTriple& triple, const KernelPresentation& ker3,
                          const CokernelPresentation& coker1);

}  // namespace tempered

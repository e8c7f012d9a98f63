#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symcat/catalog.hpp"
#include "symcat/curvature.hpp"
#include "symcat/rational.hpp"

namespace symcat::oracle {

using SparseMat = Eigen::SparseMatrix<double>;

enum class AlgebraKind { so, su, sp, u };

std::string kind_name(AlgebraKind k);

/// Real matrix Lie algebra given by a Frobenius-orthogonal basis.
/// so(n) acts on R^n, su(n) and u(n) on R^{2n} through Z = A + iB -> [[A,-B],[B,A]],
/// sp(n) on R^{4n} through the complex 2n×2n form [[A,-conj B],[B,conj A]].
struct MatrixLieAlgebra {
  AlgebraKind kind = AlgebraKind::so;
  int n = 0;
  int ambient_dim = 0;
  std::vector<SparseMat> basis;

  int dim() const { return static_cast<int>(basis.size()); }
};

/// Largest real matrix size accepted by build_algebra.
inline constexpr int kMaxAmbient = 128;

MatrixLieAlgebra build_algebra(AlgebraKind kind, int n);

SparseMat bracket(const SparseMat& x, const SparseMat& y);
double frobenius(const SparseMat& x, const SparseMat& y);

/// c^k_{ij} with [e_i, e_j] = Σ_k c^k_{ij} e_k, stored at (i·dim + j)·dim + k.
std::vector<double> structure_constants(const MatrixLieAlgebra& a);

struct ClosureReport {
  double closure_residual = 0;       // max |[e_i,e_j] - projection onto span|
  double antisymmetry_residual = 0;
  double jacobi_residual = 0;
};

ClosureReport check_closure(const MatrixLieAlgebra& a);

struct KillingFit {
  double c = 0;              // B(X,Y) = -c <X,Y>_F = c tr(XY) in the real realization
  double residual = 0;       // max relative deviation over basis pairs
  double trace_factor = 1;   // real trace / the standard complex or real trace
  double standard() const { return c * trace_factor; }  // 2n, 2(n+1), n-2
};

/// Fits B(e_i,e_j) = c tr(e_i e_j) over all basis pairs.
/// Throws NonProportional when the relative residual exceeds 1e-8.
KillingFit killing_constant(const MatrixLieAlgebra& a);

/// g = h ⊕ p with both bases Frobenius-orthonormal. The involution is
/// X -> M X M^T for the signed permutation matrix M.
struct SymmetricPair {
  SpaceDescriptor space;
  MatrixLieAlgebra g;
  Eigen::MatrixXd involution;
  std::vector<SparseMat> h;
  std::vector<SparseMat> p;
  double killing_c = 0;  // -B_g = killing_c · Frobenius on g
};

bool in_scope(const SpaceDescriptor& s);

/// Throws UnsupportedFamily outside in_scope or when dim p exceeds max_dim_p.
SymmetricPair symmetric_pair(const SpaceDescriptor& s, int max_dim_p = 60);

struct CartanReport {
  double involutive = 0;  // max |θ²X - X|
  double hh = 0;          // max p-component of [h,h]
  double hp = 0;          // max h-component of [h,p]
  double pp = 0;          // max p-component of [p,p]
  double orthogonality = 0;
  double max() const;
};

CartanReport check_cartan(const SymmetricPair& pair);

/// Coordinates of [e_i, e_j] (i < j, pairs in lexicographic order) in a
/// -B_g-orthonormal basis of h, scaled so that R = A^T A on Λ²p.
SparseMat bracket_coordinates(const SymmetricPair& pair);

/// Full C(d,2)×C(d,2) curvature operator in the basis e_i∧e_j/√2.
Eigen::MatrixXd curvature_matrix(const SymmetricPair& pair);

/// ½(I - P) on h with P = -B_h in a -B_g-orthonormal basis of h.
Eigen::MatrixXd p_route_matrix(const SymmetricPair& pair);

struct RecognizedValue {
  Rational value;
  long mult = 0;
  double max_dev = 0;
};

struct NumericSpectrum {
  std::vector<double> eigenvalues;  // nonzero part, ascending
  long zero_count = 0;              // C(d,2) - number of nonzero eigenvalues
  std::vector<RecognizedValue> recognized;  // ascending, 0 included
  bool all_recognized = true;
  double max_dev = 0;
};

/// Nearest rational with denominator <= max_den from the continued-fraction
/// convergents, or nullopt if none is within tol.
std::optional<Rational> recognize(double x, long max_den = 1000, double tol = 1e-8);

/// Groups floats whose recognized rationals agree.
NumericSpectrum recognize_spectrum(std::vector<double> nonzero, long zero_count, double tol = 1e-8);

/// Spectrum of R on Λ²p, computed on the h-sized side and split along
/// the sparsity blocks of A A^T.
NumericSpectrum numeric_spectrum(const SymmetricPair& pair, double tol = 1e-8);

/// Sorted eigenvalues of a dense symmetric matrix.
std::vector<double> symmetric_eigenvalues(const Eigen::MatrixXd& m);

struct CompareReport {
  SpaceDescriptor space;
  NumericSpectrum numeric;
  std::vector<std::pair<Rational, long>> closed_form;  // ascending, 0 included
  bool match = false;
  std::string diff;  // empty on a match
  double seconds = 0;
};

/// Compares the oracle spectrum with curvature::spectrum(s). Throws
/// SpectrumMismatch with the diff unless throw_on_mismatch is false.
CompareReport compare(const SpaceDescriptor& s, double tol = 1e-8, int max_dim_p = 60,
                      bool throw_on_mismatch = true);

struct NearlyKahlerReport {
  Eigen::MatrixXd matrix;  // 15×15
  std::vector<double> eigenvalues;
  std::vector<RecognizedValue> recognized;
  double max_dev = 0;
  double symmetry_residual = 0;
  double matrix_trace = 0;
  Rational recognized_trace;
  double ricci = 0;        // common value of Ric(e_i, e_i)
  double ricci_spread = 0; // max deviation of Ric from ricci·g
  bool match = false;
};

/// S³×S³ = SU(2)³/ΔSU(2) with the normal metric of -B_g. Expected spectrum
/// {7/24 ×3, 1/12 ×7, -1/24 ×5}, Einstein constant 5/12.
NearlyKahlerReport nearly_kahler_s3s3(double tol = 1e-8);

}  // namespace symcat::oracle

#include "symcat/oracle.hpp"

#include <Eigen/Eigenvalues>

#include <chrono>
#include <cmath>
#include <functional>
#include <complex>
#include <map>
#include <numeric>
#include <stdexcept>

#include "symcat/errors.hpp"

namespace symcat::oracle {

namespace {

using Triplet = Eigen::Triplet<double>;
using cd = std::complex<double>;

constexpr double kExact = 1e-12;

struct ComplexEntry {
  int row;
  int col;
  cd value;
};
using ComplexMatrix = std::vector<ComplexEntry>;

// Z = A + iB on C^n  ->  [[A, -B], [B, A]] on R^{2n}.
SparseMat realize(const ComplexMatrix& z, int n) {
  std::vector<Triplet> t;
  for (const auto& e : z) {
    const double re = e.value.real(), im = e.value.imag();
    if (re != 0) {
      t.emplace_back(e.row, e.col, re);
      t.emplace_back(e.row + n, e.col + n, re);
    }
    if (im != 0) {
      t.emplace_back(e.row, e.col + n, -im);
      t.emplace_back(e.row + n, e.col, im);
    }
  }
  SparseMat m(2 * n, 2 * n);
  m.setFromTriplets(t.begin(), t.end());
  return m;
}

Eigen::MatrixXd realize_dense(const Eigen::MatrixXcd& z) {
  const auto n = z.rows();
  Eigen::MatrixXd m(2 * n, 2 * n);
  m << z.real(), -z.imag(), z.imag(), z.real();
  return m;
}

void prune(SparseMat& m) {
  m.prune([](const Eigen::Index&, const Eigen::Index&, const double& v) { return std::abs(v) > 1e-14; });
}

// Complex basis of u(n) (with_center) or su(n).
std::vector<ComplexMatrix> unitary_basis(int n, bool with_center) {
  std::vector<ComplexMatrix> out;
  const cd i(0, 1);
  for (int r = 0; r < n; ++r)
    for (int c = r + 1; c < n; ++c) {
      out.push_back({{r, c, 1.0}, {c, r, -1.0}});
      out.push_back({{r, c, i}, {c, r, i}});
    }
  for (int k = 1; k < n; ++k) {
    ComplexMatrix h;
    for (int r = 0; r < k; ++r) h.push_back({r, r, i});
    h.push_back({k, k, -double(k) * i});
    out.push_back(std::move(h));
  }
  if (with_center) {
    ComplexMatrix h;
    for (int r = 0; r < n; ++r) h.push_back({r, r, i});
    out.push_back(std::move(h));
  }
  return out;
}

// sp(n) inside u(2n): [[A, -conj B], [B, conj A]], A in u(n), B symmetric.
std::vector<ComplexMatrix> symplectic_basis(int n) {
  std::vector<ComplexMatrix> out;
  for (const auto& a : unitary_basis(n, true)) {
    ComplexMatrix x;
    for (const auto& e : a) {
      x.push_back(e);
      x.push_back({e.row + n, e.col + n, std::conj(e.value)});
    }
    out.push_back(std::move(x));
  }
  const cd i(0, 1);
  for (int r = 0; r < n; ++r)
    for (int c = r; c < n; ++c) {
      ComplexMatrix re, im;
      auto put = [&](int rr, int cc) {
        re.push_back({rr + n, cc, 1.0});
        re.push_back({rr, cc + n, -1.0});
        im.push_back({rr + n, cc, i});
        im.push_back({rr, cc + n, i});
      };
      put(r, c);
      if (c != r) put(c, r);
      out.push_back(std::move(re));
      out.push_back(std::move(im));
    }
  return out;
}

SparseMat embed(const SparseMat& x, int offset, int size) {
  std::vector<Triplet> t;
  for (int k = 0; k < x.outerSize(); ++k)
    for (SparseMat::InnerIterator it(x, k); it; ++it)
      t.emplace_back(it.row() + offset, it.col() + offset, it.value());
  SparseMat m(size, size);
  m.setFromTriplets(t.begin(), t.end());
  return m;
}

SparseMat conjugate(const SparseMat& m_sparse, const SparseMat& x) {
  SparseMat t = m_sparse * x * SparseMat(m_sparse.transpose());
  prune(t);
  return t;
}

// Orthonormalizes candidates against `out` and appends the independent ones.
void gram_schmidt_append(std::vector<SparseMat>& out, const std::vector<SparseMat>& cands,
                         std::size_t first) {
  for (SparseMat v : cands) {
    for (std::size_t k = first; k < out.size(); ++k) {
      const double s = frobenius(v, out[k]);
      if (std::abs(s) > kExact) v = v - s * out[k];
    }
    prune(v);
    const double nv = v.norm();
    if (nv > 1e-9) out.push_back(v / nv);
  }
}

std::vector<double> coordinates(const MatrixLieAlgebra& a, const SparseMat& x,
                                const std::vector<double>& norms2) {
  std::vector<double> c(a.basis.size());
  for (std::size_t k = 0; k < a.basis.size(); ++k) c[k] = frobenius(x, a.basis[k]) / norms2[k];
  return c;
}

std::vector<double> squared_norms(const MatrixLieAlgebra& a) {
  std::vector<double> n(a.basis.size());
  for (std::size_t k = 0; k < a.basis.size(); ++k) n[k] = a.basis[k].squaredNorm();
  return n;
}

// -B(X,X) / |X|^2 over an orthogonal basis of g.
double killing_ratio(const std::vector<SparseMat>& g_basis, const SparseMat& x) {
  double b = 0;
  for (const auto& e : g_basis) b += frobenius(e, bracket(x, bracket(x, e))) / e.squaredNorm();
  return -b / x.squaredNorm();
}

Eigen::MatrixXd signs(const std::vector<std::pair<int, double>>& blocks) {
  int n = 0;
  for (auto [len, _] : blocks) n += len;
  Eigen::VectorXd d(n);
  int at = 0;
  for (auto [len, s] : blocks) {
    d.segment(at, len).setConstant(s);
    at += len;
  }
  return d.asDiagonal();
}

Eigen::MatrixXd complex_structure(int n) {
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  j.block(n, 0, n, n).setIdentity();
  j.block(0, n, n, n) = -Eigen::MatrixXd::Identity(n, n);
  return j;
}

long choose2(long d) { return d * (d - 1) / 2; }

}  // namespace

std::string kind_name(AlgebraKind k) {
  switch (k) {
    case AlgebraKind::so: return "so";
    case AlgebraKind::su: return "su";
    case AlgebraKind::sp: return "sp";
    case AlgebraKind::u: return "u";
  }
  return "?";
}

SparseMat bracket(const SparseMat& x, const SparseMat& y) {
  SparseMat r = SparseMat(x * y) - SparseMat(y * x);
  prune(r);
  return r;
}

double frobenius(const SparseMat& x, const SparseMat& y) { return x.cwiseProduct(y).sum(); }

MatrixLieAlgebra build_algebra(AlgebraKind kind, int n) {
  const int min_n = kind == AlgebraKind::so || kind == AlgebraKind::su ? 2 : 1;
  const int scale = kind == AlgebraKind::so ? 1 : kind == AlgebraKind::sp ? 4 : 2;
  if (n < min_n || n * scale > kMaxAmbient)
    throw std::invalid_argument(kind_name(kind) + "(" + std::to_string(n) + "): need n >= " + std::to_string(min_n) +
                                " and a real realization of size <= " + std::to_string(kMaxAmbient));
  MatrixLieAlgebra a;
  a.kind = kind;
  a.n = n;
  switch (kind) {
    case AlgebraKind::so: {
      a.ambient_dim = n;
      for (int r = 0; r < n; ++r)
        for (int c = r + 1; c < n; ++c) {
          std::vector<Triplet> t{{r, c, 1.0}, {c, r, -1.0}};
          SparseMat m(n, n);
          m.setFromTriplets(t.begin(), t.end());
          a.basis.push_back(m);
        }
      break;
    }
    case AlgebraKind::su:
    case AlgebraKind::u:
      a.ambient_dim = 2 * n;
      for (const auto& z : unitary_basis(n, kind == AlgebraKind::u)) a.basis.push_back(realize(z, n));
      break;
    case AlgebraKind::sp:
      a.ambient_dim = 4 * n;
      for (const auto& z : symplectic_basis(n)) a.basis.push_back(realize(z, 2 * n));
      break;
  }
  return a;
}

std::vector<double> structure_constants(const MatrixLieAlgebra& a) {
  const std::size_t d = a.basis.size();
  const auto norms2 = squared_norms(a);
  std::vector<double> c(d * d * d, 0.0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const auto coords = coordinates(a, bracket(a.basis[i], a.basis[j]), norms2);
      for (std::size_t k = 0; k < d; ++k) c[(i * d + j) * d + k] = coords[k];
    }
  return c;
}

ClosureReport check_closure(const MatrixLieAlgebra& a) {
  const std::size_t d = a.basis.size();
  const auto norms2 = squared_norms(a);
  const auto c = structure_constants(a);
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) { return c[(i * d + j) * d + k]; };
  ClosureReport r;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      SparseMat rest = bracket(a.basis[i], a.basis[j]);
      for (std::size_t k = 0; k < d; ++k) {
        if (at(i, j, k) != 0) rest = rest - at(i, j, k) * a.basis[k];
        r.antisymmetry_residual = std::max(r.antisymmetry_residual, std::abs(at(i, j, k) + at(j, i, k)));
      }
      r.closure_residual = std::max(r.closure_residual, rest.norm());
    }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t l = j + 1; l < d; ++l)
        for (std::size_t k = 0; k < d; ++k) {
          double s = 0;
          for (std::size_t m = 0; m < d; ++m)
            s += at(i, j, m) * at(m, l, k) + at(j, l, m) * at(m, i, k) + at(l, i, m) * at(m, j, k);
          r.jacobi_residual = std::max(r.jacobi_residual, std::abs(s));
        }
  (void)norms2;
  return r;
}

KillingFit killing_constant(const MatrixLieAlgebra& a) {
  const auto d = static_cast<Eigen::Index>(a.basis.size());
  const auto norms2 = squared_norms(a);
  std::vector<Eigen::MatrixXd> ad(static_cast<std::size_t>(d), Eigen::MatrixXd::Zero(d, d));
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index b = 0; b < d; ++b) {
      const auto coords = coordinates(a, bracket(a.basis[i], a.basis[b]), norms2);
      for (Eigen::Index k = 0; k < d; ++k) ad[i](k, b) = coords[k];
    }
  Eigen::MatrixXd kill(d, d), trace(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) {
      kill(i, j) = (ad[i] * ad[j]).trace();
      trace(i, j) = -frobenius(a.basis[i], a.basis[j]);  // tr(XY) for antisymmetric X
    }
  KillingFit fit;
  fit.c = (kill.array() * trace.array()).sum() / trace.squaredNorm();
  const double scale = std::abs(fit.c) * trace.cwiseAbs().maxCoeff();
  fit.residual = scale == 0 ? INFINITY : (kill - fit.c * trace).cwiseAbs().maxCoeff() / scale;
  fit.trace_factor = a.kind == AlgebraKind::so ? 1.0 : 2.0;
  if (!(fit.residual < 1e-8))
    throw NonProportional(kind_name(a.kind) + "(" + std::to_string(a.n) +
                          "): Killing form is not proportional to the trace form (residual " +
                          std::to_string(fit.residual) + ")");
  return fit;
}

bool in_scope(const SpaceDescriptor& s) {
  switch (s.family) {
    case Family::TypeII:
      return s.group.series == Series::A || s.group.series == Series::B || s.group.series == Series::C ||
             s.group.series == Series::D;
    case Family::Sphere:
    case Family::CpxGrass:
    case Family::QuatGrass:
    case Family::RealGrassB:
    case Family::RealGrassDOdd:
    case Family::RealGrassDEven:
    case Family::AI:
    case Family::AII:
    case Family::CnI:
    case Family::DnIII: return true;
    default: return false;
  }
}

SymmetricPair symmetric_pair(const SpaceDescriptor& s, int max_dim_p) {
  validate(s);
  if (!in_scope(s)) throw UnsupportedFamily(space_id(s) + ": no matrix model in the oracle");
  if (dimension(s) > max_dim_p)
    throw UnsupportedFamily(space_id(s) + ": dim p = " + std::to_string(dimension(s)) +
                            " exceeds the oracle cap " + std::to_string(max_dim_p));
  SymmetricPair pair;
  pair.space = s;
  const int a = s.a, b = s.b;
  auto so = [&](int n) { pair.g = build_algebra(AlgebraKind::so, n); };
  auto su = [&](int n) { pair.g = build_algebra(AlgebraKind::su, n); };
  auto sp = [&](int n) { pair.g = build_algebra(AlgebraKind::sp, n); };
  Eigen::MatrixXd& m = pair.involution;

  switch (s.family) {
    case Family::TypeII: {
      const int r = s.group.rank;
      switch (s.group.series) {
        case Series::A: su(r + 1); break;
        case Series::B: so(2 * r + 1); break;
        case Series::C: sp(r); break;
        default: so(2 * r); break;
      }
      const int n = pair.g.ambient_dim;
      std::vector<SparseMat> doubled;
      for (const auto& x : pair.g.basis) doubled.push_back(embed(x, 0, 2 * n));
      for (const auto& x : pair.g.basis) doubled.push_back(embed(x, n, 2 * n));
      pair.g.basis = std::move(doubled);
      pair.g.ambient_dim = 2 * n;
      m = Eigen::MatrixXd::Zero(2 * n, 2 * n);
      m.block(0, n, n, n).setIdentity();
      m.block(n, 0, n, n).setIdentity();
      break;
    }
    case Family::Sphere:
      so(a + 1);
      m = signs({{a, 1.0}, {1, -1.0}});
      break;
    case Family::RealGrassB:
      so(2 * a + 2 * b + 1);
      m = signs({{2 * a, 1.0}, {2 * b + 1, -1.0}});
      break;
    case Family::RealGrassDOdd:
      so(2 * a + 2 * b + 2);
      m = signs({{2 * a + 1, 1.0}, {2 * b + 1, -1.0}});
      break;
    case Family::RealGrassDEven:
      so(2 * a + 2 * b);
      m = signs({{2 * a, 1.0}, {2 * b, -1.0}});
      break;
    case Family::CpxGrass:
      su(a + b);
      m = signs({{a, 1.0}, {b, -1.0}, {a, 1.0}, {b, -1.0}});
      break;
    case Family::QuatGrass:
      sp(a + b);
      m = signs({{a, 1.0}, {b, -1.0}, {a, 1.0}, {b, -1.0}, {a, 1.0}, {b, -1.0}, {a, 1.0}, {b, -1.0}});
      break;
    case Family::AI:
      su(a);
      m = signs({{a, 1.0}, {a, -1.0}});  // complex conjugation
      break;
    case Family::AII: {
      su(2 * a);
      const Eigen::MatrixXd j = realize_dense(complex_structure(a).cast<cd>());
      m = j * signs({{2 * a, 1.0}, {2 * a, -1.0}});
      break;
    }
    case Family::CnI: {
      sp(a);
      Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(2 * a, 2 * a);
      for (int r = 0; r < a; ++r) {
        d(r, r) = cd(0, 1);
        d(r + a, r + a) = cd(0, -1);
      }
      m = realize_dense(d);
      break;
    }
    case Family::DnIII:
      so(2 * a);
      m = complex_structure(a);
      break;
    default: throw UnsupportedFamily(space_id(s));
  }

  const SparseMat ms = m.sparseView();
  std::vector<SparseMat> h_mixed, p_mixed;
  for (const auto& e : pair.g.basis) {
    const SparseMat t = conjugate(ms, e);
    const double nrm = e.norm();
    if ((t - e).norm() < kExact * nrm) {
      pair.h.push_back(e / nrm);
    } else if ((t + e).norm() < kExact * nrm) {
      pair.p.push_back(e / nrm);
    } else {
      h_mixed.push_back(0.5 * (e + t));
      p_mixed.push_back(0.5 * (e - t));
    }
  }
  const std::size_t h_pure = pair.h.size(), p_pure = pair.p.size();
  gram_schmidt_append(pair.h, h_mixed, h_pure);
  gram_schmidt_append(pair.p, p_mixed, p_pure);

  if (static_cast<int>(pair.p.size()) != dimension(s) ||
      static_cast<int>(pair.h.size()) != isotropy(s).total_dim())
    throw std::logic_error(space_id(s) + ": eigenspaces have dimensions " + std::to_string(pair.h.size()) +
                           " + " + std::to_string(pair.p.size()) + ", catalog expects " +
                           std::to_string(isotropy(s).total_dim()) + " + " + std::to_string(dimension(s)));

  const double ch = killing_ratio(pair.g.basis, pair.h.front());
  const double cp = killing_ratio(pair.g.basis, pair.p.front());
  if (std::abs(ch - cp) > 1e-8 * std::abs(ch))
    throw NonProportional(space_id(s) + ": Killing form differs on h and p");
  pair.killing_c = ch;
  return pair;
}

double CartanReport::max() const { return std::max({involutive, hh, hp, pp, orthogonality}); }

CartanReport check_cartan(const SymmetricPair& pair) {
  CartanReport r;
  const SparseMat ms = pair.involution.sparseView();
  for (const auto& x : pair.g.basis)
    r.involutive = std::max(r.involutive, (conjugate(ms, conjugate(ms, x)) - x).norm());
  auto component = [](const SparseMat& x, const std::vector<SparseMat>& onto) {
    double s = 0;
    for (const auto& u : onto) s += std::pow(frobenius(x, u), 2);
    return std::sqrt(s);
  };
  for (std::size_t i = 0; i < pair.h.size(); ++i) {
    for (std::size_t j = i + 1; j < pair.h.size(); ++j)
      r.hh = std::max(r.hh, component(bracket(pair.h[i], pair.h[j]), pair.p));
    for (const auto& y : pair.p) {
      r.hp = std::max(r.hp, component(bracket(pair.h[i], y), pair.h));
      r.orthogonality = std::max(r.orthogonality, std::abs(frobenius(pair.h[i], y)));
    }
  }
  for (std::size_t i = 0; i < pair.p.size(); ++i)
    for (std::size_t j = i + 1; j < pair.p.size(); ++j)
      r.pp = std::max(r.pp, component(bracket(pair.p[i], pair.p[j]), pair.p));
  return r;
}

SparseMat bracket_coordinates(const SymmetricPair& pair) {
  const long n = pair.g.ambient_dim;
  const long d = static_cast<long>(pair.p.size());
  auto flat = [&](const std::vector<SparseMat>& cols) {
    std::vector<Triplet> t;
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (int k = 0; k < cols[c].outerSize(); ++k)
        for (SparseMat::InnerIterator it(cols[c], k); it; ++it)
          t.emplace_back(static_cast<int>(it.row() + it.col() * n), static_cast<int>(c), it.value());
    SparseMat m(n * n, static_cast<long>(cols.size()));
    m.setFromTriplets(t.begin(), t.end());
    return m;
  };
  std::vector<SparseMat> brackets;
  brackets.reserve(static_cast<std::size_t>(choose2(d)));
  for (long i = 0; i < d; ++i)
    for (long j = i + 1; j < d; ++j) brackets.push_back(bracket(pair.p[i], pair.p[j]));
  const SparseMat hmat = flat(pair.h);
  const SparseMat bmat = flat(brackets);
  SparseMat a = SparseMat(hmat.transpose()) * bmat;
  a /= std::sqrt(pair.killing_c);
  prune(a);
  return a;
}

Eigen::MatrixXd curvature_matrix(const SymmetricPair& pair) {
  const Eigen::MatrixXd a = Eigen::MatrixXd(bracket_coordinates(pair));
  return a.transpose() * a;
}

Eigen::MatrixXd p_route_matrix(const SymmetricPair& pair) {
  const auto dh = static_cast<Eigen::Index>(pair.h.size());
  std::vector<Eigen::MatrixXd> ad(static_cast<std::size_t>(dh), Eigen::MatrixXd::Zero(dh, dh));
  for (Eigen::Index a = 0; a < dh; ++a)
    for (Eigen::Index l = 0; l < dh; ++l) {
      const SparseMat x = bracket(pair.h[a], pair.h[l]);
      if (x.nonZeros() == 0) continue;
      for (Eigen::Index k = 0; k < dh; ++k) ad[a](k, l) = frobenius(pair.h[k], x);
    }
  Eigen::MatrixXd bh(dh, dh);
  for (Eigen::Index a = 0; a < dh; ++a)
    for (Eigen::Index b = 0; b < dh; ++b) bh(a, b) = (ad[a] * ad[b]).trace();
  const Eigen::MatrixXd p = -bh / pair.killing_c;
  return 0.5 * (Eigen::MatrixXd::Identity(dh, dh) - p);
}

std::optional<Rational> recognize(double x, long max_den, double tol) {
  if (!std::isfinite(x)) return std::nullopt;
  if (std::abs(x) < tol) return Rational(0);
  const double y = std::abs(x);
  long h1 = 1, h2 = 0, k1 = 0, k2 = 1;
  double frac = y;
  std::optional<Rational> best;
  for (int step = 0; step < 64; ++step) {
    const double fl = std::floor(frac);
    const long an = static_cast<long>(fl);
    const long h = an * h1 + h2, k = an * k1 + k2;
    if (k > max_den) break;
    if (std::abs(y - double(h) / double(k)) < tol) {
      best = make_rational(x < 0 ? -h : h, k);
      break;
    }
    h2 = h1;
    h1 = h;
    k2 = k1;
    k1 = k;
    if (frac - fl < 1e-15) break;
    frac = 1.0 / (frac - fl);
  }
  return best;
}

NumericSpectrum recognize_spectrum(std::vector<double> nonzero, long zero_count, double tol) {
  NumericSpectrum ns;
  std::sort(nonzero.begin(), nonzero.end());
  ns.eigenvalues = nonzero;
  ns.zero_count = zero_count;
  std::map<Rational, RecognizedValue> groups;
  if (zero_count > 0) groups[Rational(0)] = {Rational(0), zero_count, 0.0};
  for (double x : nonzero) {
    const auto r = recognize(x, 1000, tol);
    if (!r) {
      ns.all_recognized = false;
      continue;
    }
    auto& g = groups[*r];
    g.value = *r;
    g.mult += 1;
    g.max_dev = std::max(g.max_dev, std::abs(x - r->get_d()));
    ns.max_dev = std::max(ns.max_dev, g.max_dev);
  }
  for (auto& [_, g] : groups) ns.recognized.push_back(g);
  return ns;
}

std::vector<double> symmetric_eigenvalues(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

NumericSpectrum numeric_spectrum(const SymmetricPair& pair, double tol) {
  const SparseMat a = bracket_coordinates(pair);
  const SparseMat gram = a * SparseMat(a.transpose());
  const auto n = static_cast<int>(gram.rows());

  // Connected components of the sparsity graph; each is an invariant block.
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (int k = 0; k < gram.outerSize(); ++k)
    for (SparseMat::InnerIterator it(gram, k); it; ++it)
      if (std::abs(it.value()) > 1e-13) parent[find(static_cast<int>(it.row()))] = find(static_cast<int>(it.col()));
  std::map<int, std::vector<int>> blocks;
  for (int i = 0; i < n; ++i) blocks[find(i)].push_back(i);

  const Eigen::MatrixXd dense = n <= 4000 ? Eigen::MatrixXd(gram) : Eigen::MatrixXd();
  std::vector<double> nonzero;
  for (const auto& [_, idx] : blocks) {
    const auto m = static_cast<Eigen::Index>(idx.size());
    Eigen::MatrixXd sub(m, m);
    for (Eigen::Index r = 0; r < m; ++r)
      for (Eigen::Index c = 0; c < m; ++c) sub(r, c) = dense(idx[r], idx[c]);
    for (double x : symmetric_eigenvalues(sub))
      if (std::abs(x) > 1e-9) nonzero.push_back(x);
  }
  const long zeros = choose2(static_cast<long>(pair.p.size())) - static_cast<long>(nonzero.size());
  return recognize_spectrum(std::move(nonzero), zeros, tol);
}

CompareReport compare(const SpaceDescriptor& s, double tol, int max_dim_p, bool throw_on_mismatch) {
  const auto start = std::chrono::steady_clock::now();
  CompareReport r;
  r.space = s;
  const auto pair = symmetric_pair(s, max_dim_p);
  r.numeric = numeric_spectrum(pair, tol);

  std::map<Rational, long> closed;
  const auto sp = spectrum(s);
  for (const auto& e : sp.entries) closed[e.value] += e.mult;
  if (sp.zero_multiplicity > 0) closed[Rational(0)] += sp.zero_multiplicity;
  for (const auto& [v, m] : closed) r.closed_form.emplace_back(v, m);

  std::map<Rational, long> numeric;
  for (const auto& g : r.numeric.recognized) numeric[g.value] = g.mult;

  std::string diff;
  if (!r.numeric.all_recognized) diff += "unrecognized eigenvalues present; ";
  if (!(r.numeric.max_dev < tol)) diff += "float deviation " + std::to_string(r.numeric.max_dev) + "; ";
  std::map<Rational, std::pair<long, long>> both;
  for (const auto& [v, m] : closed) both[v].first = m;
  for (const auto& [v, m] : numeric) both[v].second = m;
  for (const auto& [v, m] : both)
    if (m.first != m.second)
      diff += to_string(v) + ": closed form ×" + std::to_string(m.first) + ", oracle ×" +
              std::to_string(m.second) + "; ";
  r.match = diff.empty();
  if (!r.match) r.diff = diff.substr(0, diff.size() - 2);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!r.match && throw_on_mismatch) throw SpectrumMismatch(space_id(s) + ": " + r.diff);
  return r;
}

NearlyKahlerReport nearly_kahler_s3s3(double tol) {
  using Mat = Eigen::MatrixXd;
  const auto so3 = build_algebra(AlgebraKind::so, 3);
  std::vector<Mat> l;
  for (const auto& x : so3.basis) l.push_back(Mat(x) / x.norm());

  auto block = [](const Mat& x, const Mat& y, const Mat& z) {
    Mat m = Mat::Zero(9, 9);
    m.block(0, 0, 3, 3) = x;
    m.block(3, 3, 3, 3) = y;
    m.block(6, 6, 3, 3) = z;
    return m;
  };
  const Mat zero = Mat::Zero(3, 3);
  std::vector<Mat> g_basis, h, p;
  for (const auto& x : l) {
    g_basis.push_back(block(x, zero, zero));
    g_basis.push_back(block(zero, x, zero));
    g_basis.push_back(block(zero, zero, x));
    h.push_back(block(x, x, x) / std::sqrt(3.0));
    p.push_back(block(x, -x, zero) / std::sqrt(2.0));
    p.push_back(block(x, x, -2 * x) / std::sqrt(6.0));
  }
  auto br = [](const Mat& x, const Mat& y) -> Mat { return x * y - y * x; };
  auto ip = [](const Mat& x, const Mat& y) { return (x.array() * y.array()).sum(); };

  // -B_g = c · Frobenius; every factor is so(3), so one element fixes c.
  double bxx = 0;
  for (const auto& e : g_basis) bxx += ip(e, br(g_basis[0], br(g_basis[0], e)));
  const double c = -bxx / g_basis[0].squaredNorm();

  auto proj_h = [&](const Mat& x) {
    Mat r = Mat::Zero(9, 9);
    for (const auto& u : h) r += ip(x, u) * u;
    return r;
  };
  auto proj_p = [&](const Mat& x) -> Mat { return x - proj_h(x); };
  auto lambda = [&](const Mat& x, const Mat& z) -> Mat { return 0.5 * proj_p(br(x, z)); };
  auto curv = [&](const Mat& x, const Mat& y, const Mat& z) -> Mat {
    const Mat xy = br(x, y);
    return lambda(x, lambda(y, z)) - lambda(y, lambda(x, z)) - lambda(proj_p(xy), z) - br(proj_h(xy), z);
  };
  // -B_g-orthonormal basis of p.
  std::vector<Mat> e;
  for (const auto& x : p) e.push_back(x / std::sqrt(c));
  auto metric = [&](const Mat& x, const Mat& y) { return c * ip(x, y); };

  const int d = static_cast<int>(e.size());
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) pairs.emplace_back(i, j);
  NearlyKahlerReport r;
  const auto np = static_cast<Eigen::Index>(pairs.size());
  r.matrix = Mat(np, np);
  for (Eigen::Index a = 0; a < np; ++a)
    for (Eigen::Index b = 0; b < np; ++b) {
      const auto [i, j] = pairs[a];
      const auto [k, q] = pairs[b];
      r.matrix(a, b) = metric(curv(e[i], e[j], e[q]), e[k]);
    }
  r.symmetry_residual = (r.matrix - r.matrix.transpose()).cwiseAbs().maxCoeff();
  r.matrix_trace = r.matrix.trace();
  r.eigenvalues = symmetric_eigenvalues(0.5 * (r.matrix + r.matrix.transpose()));

  std::vector<double> nonzero;
  long zeros = 0;
  for (double x : r.eigenvalues) {
    if (std::abs(x) > 1e-9)
      nonzero.push_back(x);
    else
      ++zeros;
  }
  const auto ns = recognize_spectrum(nonzero, zeros, tol);
  r.recognized = ns.recognized;
  r.max_dev = ns.max_dev;
  r.recognized_trace = 0;
  for (const auto& g : r.recognized) r.recognized_trace += g.value * g.mult;

  Mat ric(d, d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      double s = 0;
      for (int i = 0; i < d; ++i) s += metric(curv(e[i], e[a], e[b]), e[i]);
      ric(a, b) = s;
    }
  r.ricci = ric.trace() / d;
  r.ricci_spread = (ric - r.ricci * Mat::Identity(d, d)).cwiseAbs().maxCoeff();

  const std::map<Rational, long> expected{
      {make_rational(7, 24), 3}, {make_rational(1, 12), 7}, {make_rational(-1, 24), 5}};
  std::map<Rational, long> got;
  for (const auto& g : r.recognized) got[g.value] = g.mult;
  r.match = ns.all_recognized && ns.max_dev < tol && got == expected && r.symmetry_residual < tol;
  return r;
}

}  // namespace symcat::oracle

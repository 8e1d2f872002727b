#include "nhk/module_slice.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

#include "nhk/poly.hpp"
#include "nhk/weyl.hpp"

namespace nhk {

namespace {

std::vector<Monomial> monomials_of_degree(int nvars, int rank, int degree) {
  std::vector<Monomial> out;
  std::vector<int> exps(nvars, 0);
  std::function<void(int, int)> rec = [&](int var, int remaining) {
    if (var == rank) {
      if (remaining == 0) out.push_back(Monomial{exps});
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      exps[var] = k;
      rec(var + 1, remaining - k);
    }
    exps[var] = 0;
  };
  rec(0, degree);
  return out;
}

QMat solve_columns(const QMat& basis, const QMat& image, bool* consistent) {
  // Y with basis * Y = image, column by column.
  QMat y(basis.cols(), image.cols());
  *consistent = true;
  for (int j = 0; j < image.cols(); ++j) {
    std::vector<Rational> b(image.rows());
    for (int i = 0; i < image.rows(); ++i) b[i] = image.at(i, j);
    auto sol = basis.solve(b);
    if (!sol) {
      *consistent = false;
      return y;
    }
    for (int i = 0; i < basis.cols(); ++i) y.at(i, j) = (*sol)[i];
  }
  return y;
}

QMat basis_matrix(const std::vector<std::vector<Rational>>& vectors, int dim) {
  QMat b(dim, static_cast<int>(vectors.size()));
  for (int j = 0; j < static_cast<int>(vectors.size()); ++j)
    for (int i = 0; i < dim; ++i) b.at(i, j) = vectors[j][i];
  return b;
}

QMat inverse_square(const QMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("not square");
  int n = m.rows();
  QMat aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  auto pivots = aug.rref();
  if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1)
    throw std::invalid_argument("matrix not invertible");
  QMat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

}  // namespace

void GradedModuleSlice::validate(const RootDatum& d) const {
  const int r = d.rank();
  auto fail = [](const std::string& why) {
    throw std::invalid_argument("malformed module slice: " + why);
  };
  if (static_cast<int>(dims.size()) != max_degree + 1) fail("dims size");
  if (static_cast<int>(s.size()) != r || static_cast<int>(x.size()) != r)
    fail("matrix family count");
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(s[i].size()) != max_degree + 1) fail("s family size");
    if (static_cast<int>(x[i].size()) != max_degree) fail("x family size");
    for (int deg = 0; deg <= max_degree; ++deg)
      if (s[i][deg].rows() != dims[deg] || s[i][deg].cols() != dims[deg])
        fail("s matrix shape");
    for (int deg = 0; deg < max_degree; ++deg)
      if (x[i][deg].rows() != dims[deg + 1] || x[i][deg].cols() != dims[deg])
        fail("x matrix shape");
  }
  for (int i = 0; i < r; ++i)
    for (int deg = 0; deg <= max_degree; ++deg)
      if (!(s[i][deg] * s[i][deg] == QMat::identity(dims[deg])))
        fail("s_i is not an involution");
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      int m = braid_order(d, i + 1, j + 1);
      for (int deg = 0; deg <= max_degree; ++deg) {
        QMat prod = QMat::identity(dims[deg]);
        for (int k = 0; k < m; ++k) prod = prod * (s[i][deg] * s[j][deg]);
        if (!(prod == QMat::identity(dims[deg]))) fail("braid relation");
      }
    }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int deg = 0; deg + 2 <= max_degree; ++deg)
        if (!(x[i][deg + 1] * x[j][deg] == x[j][deg + 1] * x[i][deg]))
          fail("coordinate multiplications do not commute");
  // s_j x_i s_j^{-1} = x_{s_j(coroot_i)} with s_j(coroot_i) =
  // coroot_i - cartan[i][j] coroot_j.
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int deg = 0; deg < max_degree; ++deg) {
        QMat lhs = s[j][deg + 1] * x[i][deg];
        QMat rhs = x[i][deg] * s[j][deg];
        long long c = d.cartan().at(i, j);
        if (c != 0) rhs = rhs - (x[j][deg] * s[j][deg]).scaled(rat(c));
        if (!(lhs == rhs)) fail("reflection/multiplication intertwining");
      }
}

GradedModuleSlice GradedModuleSlice::sym_t(const RootDatum& d, int max_degree) {
  const int r = d.rank();
  const int nvars = r + 1;
  GradedModuleSlice m;
  m.max_degree = max_degree;
  std::vector<std::vector<Monomial>> bases;
  std::vector<std::map<Monomial, int>> index(max_degree + 1);
  for (int deg = 0; deg <= max_degree; ++deg) {
    bases.push_back(monomials_of_degree(nvars, r, deg));
    for (int i = 0; i < static_cast<int>(bases[deg].size()); ++i)
      index[deg].emplace(bases[deg][i], i);
    m.dims.push_back(static_cast<int>(bases[deg].size()));
  }
  m.s.assign(r, {});
  m.x.assign(r, {});
  EvalContext ctx = generic_context(d);
  for (int i = 0; i < r; ++i) {
    ExtAffine refl = ExtAffine::simple_reflection(d, i + 1);
    auto pm = refl.inverse_point_map();
    for (int deg = 0; deg <= max_degree; ++deg) {
      QMat mat(m.dims[deg], m.dims[deg]);
      for (int col = 0; col < m.dims[deg]; ++col) {
        SparsePoly f(nvars);
        f.add_term(bases[deg][col], 1);
        SparsePoly img = f.substitute_linear(pm.matrix, pm.hbar_shift, ctx.hbar);
        for (const auto& [mono, c] : img.terms())
          mat.at(index[deg].at(mono), col) = c;
      }
      m.s[i].push_back(std::move(mat));
    }
    for (int deg = 0; deg < max_degree; ++deg) {
      QMat mat(m.dims[deg + 1], m.dims[deg]);
      for (int col = 0; col < m.dims[deg]; ++col) {
        Monomial mono = bases[deg][col];
        mono.e[i] += 1;
        mat.at(index[deg + 1].at(mono), col) = 1;
      }
      m.x[i].push_back(std::move(mat));
    }
  }
  return m;
}

GradedModuleSlice GradedModuleSlice::sym_t_double_swap(const RootDatum& d,
                                                       int max_degree) {
  GradedModuleSlice base = sym_t(d, max_degree);
  GradedModuleSlice m;
  m.max_degree = max_degree;
  for (int deg = 0; deg <= max_degree; ++deg) m.dims.push_back(2 * base.dims[deg]);
  m.s.assign(d.rank(), {});
  m.x.assign(d.rank(), {});
  for (int i = 0; i < d.rank(); ++i) {
    for (int deg = 0; deg <= max_degree; ++deg) {
      int n = base.dims[deg];
      QMat mat(2 * n, 2 * n);
      // (m1, m2) |-> (s m2, s m1)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          mat.at(a, n + b) = base.s[i][deg].at(a, b);
          mat.at(n + a, b) = base.s[i][deg].at(a, b);
        }
      m.s[i].push_back(std::move(mat));
    }
    for (int deg = 0; deg < max_degree; ++deg) {
      int rows = base.dims[deg + 1], cols = base.dims[deg];
      QMat mat(2 * rows, 2 * cols);
      for (int a = 0; a < rows; ++a)
        for (int b = 0; b < cols; ++b) {
          mat.at(a, b) = base.x[i][deg].at(a, b);
          mat.at(rows + a, cols + b) = base.x[i][deg].at(a, b);
        }
      m.x[i].push_back(std::move(mat));
    }
  }
  return m;
}

ExtensionReport module_extension_check(const RootDatum& d,
                                       const GradedModuleSlice& slice,
                                       int alpha_index) {
  slice.validate(d);
  if (alpha_index < 1 || alpha_index > d.rank())
    throw std::invalid_argument("alpha_index out of range");
  const int a = alpha_index - 1;
  const int D = slice.max_degree;
  ExtensionReport report;

  // Eigenbases of s_alpha per degree.
  std::vector<QMat> plus, minus;
  for (int deg = 0; deg <= D; ++deg) {
    QMat sm = slice.s[a][deg];
    QMat sp = sm - QMat::identity(slice.dims[deg]);          // ker -> +1
    QMat sn = sm + QMat::identity(slice.dims[deg]);          // ker -> -1
    plus.push_back(basis_matrix(sp.nullspace(), slice.dims[deg]));
    minus.push_back(basis_matrix(sn.nullspace(), slice.dims[deg]));
  }

  std::vector<QMat> y(D);  // coords of coroot-mult M_d^+ -> M_{d+1}^-
  bool all_bijective = true;
  for (int deg = 0; deg < D; ++deg) {
    const QMat& xm = slice.x[a][deg];
    QMat image = xm * plus[deg];
    bool consistent = true;
    y[deg] = solve_columns(minus[deg + 1], image, &consistent);
    if (!consistent)
      throw std::logic_error("coroot multiplication left the minus eigenspace");
    DegreeReport dr;
    dr.degree = deg;
    dr.dim_plus = plus[deg].cols();
    dr.dim_minus = minus[deg + 1].cols();
    dr.injective = y[deg].rank() == dr.dim_plus;
    dr.surjective = y[deg].rank() == dr.dim_minus;
    report.degrees.push_back(dr);
    all_bijective = all_bijective && dr.bijective();
  }
  report.bijective_on_range = all_bijective;

  std::ostringstream summary;
  if (D == 0) {
    report.summary =
        "empty examined range: the slice stops at degree 0, nothing checkable";
    return report;
  }
  summary << "degrees 0.." << (D - 1) << ": "
          << (all_bijective ? "coroot multiplication bijective on the examined range"
                            : "coroot multiplication NOT bijective on the range");
  // Defining theta on M_0 needs (s - 1) M_0 = 0, i.e. M_0^- = 0; the window
  // carries no data below degree 0.
  bool bottom_closed = minus[0].cols() == 0;
  if (!all_bijective || !bottom_closed) {
    if (!bottom_closed)
      summary << "; M_0 has a nonzero minus eigenspace, theta not emitted";
    report.summary = summary.str();
    return report;
  }

  // theta_d : M_d -> M_{d-1}: invert the coroot map on eigen-coordinates and
  // compose with (s - 1).
  std::vector<QMat> theta(D + 1);
  theta[0] = QMat(0, slice.dims[0]);
  for (int deg = 1; deg <= D; ++deg) {
    QMat s_minus_1 = slice.s[a][deg] - QMat::identity(slice.dims[deg]);
    bool consistent = true;
    QMat coords = solve_columns(minus[deg], s_minus_1, &consistent);
    if (!consistent)
      throw std::logic_error("(s - 1) left the minus eigenspace");
    theta[deg] = plus[deg - 1] * inverse_square(y[deg - 1]) * coords;
  }
  report.theta = theta;

  report.theta_square_zero = true;
  for (int deg = 2; deg <= D; ++deg)
    if (!(theta[deg - 1] * theta[deg]).is_zero()) report.theta_square_zero = false;

  // Twisted commutator on the range: theta s(h) - h theta = <alpha, h> for
  // h in the coroot basis, as maps M_d -> M_d for 1 <= d <= D - 1.
  report.commutation_ok = true;
  for (int k = 0; k < d.rank(); ++k) {
    long long pair_ak = d.cartan().at(k, a);  // <alpha_a, coroot_k>
    for (int deg = 0; deg < D; ++deg) {
      // s_a(coroot_k) multiplication: x_k - <alpha_a, coroot_k> x_a.
      QMat xs = slice.x[k][deg];
      if (pair_ak != 0) xs = xs - slice.x[a][deg].scaled(rat(pair_ak));
      QMat lhs = theta[deg + 1] * xs;
      if (deg >= 1) lhs = lhs - slice.x[k][deg - 1] * theta[deg];
      QMat rhs = QMat::identity(slice.dims[deg]).scaled(rat(pair_ak));
      if (!(lhs == rhs)) report.commutation_ok = false;
    }
  }

  summary << "; theta emitted (theta^2 = 0: " << (report.theta_square_zero ? "yes" : "no")
          << ", commutation: " << (report.commutation_ok ? "yes" : "no") << ")";
  report.summary = summary.str();
  return report;
}

}  // namespace nhk

#include "padicft/fourier_matrix.hpp"

#include <algorithm>

#include "padicft/qcalc.hpp"

namespace padicft {

namespace {

LaurentPoly signed_poly(const LaurentPoly& a, long parity) { return parity % 2 == 0 ? a : -a; }

CycNumber signed_cyc(CycNumber a, long parity) { return parity % 2 == 0 ? a : -a; }

// (tU * D * U)_{i,j} = sum_{k <= min(i,j)} U_{k,i} D_k U_{k,j}
template <class T>
T ldu_entry(const Matrix<T>& u, const Matrix<T>& du, std::size_t i, std::size_t j) {
  T acc = u(0, i) * du(0, j);
  for (std::size_t k = 1; k <= std::min(i, j); ++k) acc += u(k, i) * du(k, j);
  return acc;
}

// (V * tU)_{n,m} = sum_{m <= k <= n} V_{n,k} U_{m,k}
template <class T>
T inverse_entry(const Matrix<T>& v, const Matrix<T>& u, std::size_t n, std::size_t m) {
  T acc = v(n, 0) * u(m, 0);
  for (std::size_t k = 1; k <= n; ++k) {
    if (k < m) continue;
    acc += v(n, k) * u(m, k);
  }
  return acc;
}

template <class T>
void check_ldu(IdentityReport& report, const Matrix<T>& z, const Matrix<T>& u, const Matrix<T>& v,
               const Matrix<T>& dmat, const T& zero, const T& one) {
  const std::size_t d = z.dim();
  report.dim = d;
  report.identities = {"V * transpose(U) == I", "transpose(U) * D * U == Z"};
  for (std::size_t n = 0; n < d; ++n) {
    for (std::size_t m = 0; m < d; ++m) {
      const T& expected = n == m ? one : zero;
      if (!(inverse_entry(v, u, n, m) == expected)) report.failures.push_back({report.identities[0], n, m});
    }
  }
  Matrix<T> du = u;
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t j = 0; j < d; ++j) du(k, j) = dmat(k, k) * u(k, j);
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (!(ldu_entry(u, du, i, j) == z(i, j))) report.failures.push_back({report.identities[1], i, j});
    }
  }
}

}  // namespace

std::string to_string(MatrixKind kind) {
  switch (kind) {
    case MatrixKind::Z: return "Z";
    case MatrixKind::U: return "U";
    case MatrixKind::V: return "V";
    case MatrixKind::D: return "D";
    case MatrixKind::L: return "L";
  }
  return "?";
}

SymbolicMatrix build_symbolic_matrix(MatrixKind kind, std::size_t d) {
  if (kind == MatrixKind::L) {
    throw std::invalid_argument("L has (q;q)_n denominators; build V and D instead or specialize at zeta");
  }
  SymbolicMatrix out(d, LaurentPoly{});
  const long dim = static_cast<long>(d);
  if (kind == MatrixKind::Z) {
    for (long i = 0; i < dim; ++i) {
      for (long j = 0; j < dim; ++j) out(i, j) = LaurentPoly::monomial(1, i * j);
    }
    return out;
  }
  const QBinomTable table(dim - 1);
  for (long n = 0; n < dim; ++n) {
    switch (kind) {
      case MatrixKind::U:
        for (long k = n; k < dim; ++k) out(n, k) = table(k, n);
        break;
      case MatrixKind::V:
        for (long k = 0; k <= n; ++k) out(n, k) = signed_poly(table(n, k).shifted(choose2(n - k)), n - k);
        break;
      case MatrixKind::D:
        out(n, n) = signed_poly(pochhammer(n, LaurentPoly::monomial(1, 1)).shifted(choose2(n)), n);
        break;
      default:
        break;
    }
  }
  return out;
}

ZetaMatrix build_zeta_matrix(MatrixKind kind, std::size_t d, const ContextPtr& ctx) {
  if (!ctx) throw std::invalid_argument("specialized matrices need a cyclotomic context");
  const long dim = static_cast<long>(d);
  ZetaMatrix out(d, CycNumber::zero(ctx));
  if (kind == MatrixKind::Z) {
    for (long i = 0; i < dim; ++i) {
      for (long j = 0; j < dim; ++j) out(i, j) = CycNumber::zeta_power(ctx, i * j);
    }
    return out;
  }
  if (kind == MatrixKind::L && dim > ctx->order()) {
    throw std::invalid_argument("L needs d <= order of zeta, otherwise (zeta;zeta)_n vanishes");
  }
  const ZetaBinomialTable table(ctx, dim - 1);
  const auto poch = zeta_pochhammers(ctx, dim - 1);
  for (long n = 0; n < dim; ++n) {
    switch (kind) {
      case MatrixKind::U:
        for (long k = n; k < dim; ++k) out(n, k) = table(k, n);
        break;
      case MatrixKind::V:
        for (long k = 0; k <= n; ++k) {
          out(n, k) = signed_cyc(table(n, k).times_zeta_power(choose2(n - k)), n - k);
        }
        break;
      case MatrixKind::D:
        out(n, n) = signed_cyc(poch[static_cast<std::size_t>(n)].times_zeta_power(choose2(n)), n);
        break;
      case MatrixKind::L: {
        const CycNumber d_inv =
            signed_cyc(poch[static_cast<std::size_t>(n)].times_zeta_power(choose2(n)), n).inverse();
        for (long k = 0; k <= n; ++k) {
          out(n, k) = d_inv * signed_cyc(table(n, k).times_zeta_power(choose2(n - k)), n - k);
        }
        break;
      }
      default:
        break;
    }
  }
  return out;
}

IdentityReport verify_ldu_decomposition(std::size_t d, const VerifyOptions& options) {
  if (d > options.symbolic_cap) {
    throw std::invalid_argument("symbolic verification refused above the configured dimension cap");
  }
  IdentityReport report;
  report.name = "symbolic LDU decomposition of the Vandermonde matrix";
  check_ldu(report, build_symbolic_matrix(MatrixKind::Z, d), build_symbolic_matrix(MatrixKind::U, d),
            build_symbolic_matrix(MatrixKind::V, d), build_symbolic_matrix(MatrixKind::D, d), LaurentPoly{},
            LaurentPoly::constant(1));
  return report;
}

IdentityReport verify_ldu_decomposition(std::size_t d, const ContextPtr& ctx) {
  IdentityReport report;
  report.name = "LDU decomposition of the Vandermonde matrix at zeta";
  check_ldu(report, build_zeta_matrix(MatrixKind::Z, d, ctx), build_zeta_matrix(MatrixKind::U, d, ctx),
            build_zeta_matrix(MatrixKind::V, d, ctx), build_zeta_matrix(MatrixKind::D, d, ctx),
            CycNumber::zero(ctx), CycNumber::one(ctx));
  return report;
}

IdentityReport verify_lower_factor_identity(std::size_t d, const ContextPtr& ctx) {
  IdentityReport report;
  report.name = "lower factor identity at zeta";
  report.dim = d;
  report.identities = {"L * Z == U"};
  const ZetaMatrix l = build_zeta_matrix(MatrixKind::L, d, ctx);
  const ZetaMatrix u = build_zeta_matrix(MatrixKind::U, d, ctx);
  const long dim = static_cast<long>(d);
  for (long n = 0; n < dim; ++n) {
    for (long k = 0; k < dim; ++k) {
      // Z is monomial, so each term is a shifted copy of an L entry.
      CycNumber acc = CycNumber::zero(ctx);
      for (long j = 0; j <= n; ++j) acc.add_zeta_multiple(l(n, j), j * k);
      if (!(acc == u(n, k))) report.failures.push_back({report.identities[0], std::size_t(n), std::size_t(k)});
    }
  }
  return report;
}

IdentityReport verify_matrix_structure(const ContextPtr& ctx) {
  IdentityReport report;
  report.name = "structure of the level matrices at zeta";
  if (ctx->m() % 2 != 0) throw std::invalid_argument("context order must be p^(2r)");
  const int r = ctx->m() / 2;
  const long dim = ctx->order();
  const auto d = static_cast<std::size_t>(dim);
  report.dim = d;
  report.identities = {"Z symmetric",
                       "U upper unipotent",
                       "V lower unipotent",
                       "D diagonal",
                       "U integral",
                       "transpose(V) integral",
                       "Z * Z == d * R",
                       "Z * J == p^r J"};
  const auto& names = report.identities;
  auto fail = [&](std::size_t which, long i, long j) {
    report.failures.push_back({names[which], std::size_t(i), std::size_t(j)});
  };
  const ZetaMatrix z = build_zeta_matrix(MatrixKind::Z, d, ctx);
  const ZetaMatrix u = build_zeta_matrix(MatrixKind::U, d, ctx);
  const ZetaMatrix v = build_zeta_matrix(MatrixKind::V, d, ctx);
  const ZetaMatrix dm = build_zeta_matrix(MatrixKind::D, d, ctx);
  const CycNumber one = CycNumber::one(ctx);
  for (long i = 0; i < dim; ++i) {
    for (long j = 0; j < dim; ++j) {
      if (!(z(i, j) == z(j, i))) fail(0, i, j);
      if (i > j && !u(i, j).is_zero()) fail(1, i, j);
      if (i == j && !(u(i, j) == one)) fail(1, i, j);
      if (i < j && !v(i, j).is_zero()) fail(2, i, j);
      if (i == j && !(v(i, j) == one)) fail(2, i, j);
      if (i != j && !dm(i, j).is_zero()) fail(3, i, j);
      if (!u(i, j).is_integral()) fail(4, i, j);
      if (!v(j, i).is_integral()) fail(5, i, j);
    }
  }
  const CycNumber d_scalar = CycNumber::integer(ctx, dim);
  for (long i = 0; i < dim; ++i) {
    for (long j = 0; j < dim; ++j) {
      CycNumber acc = CycNumber::zero(ctx);
      for (long k = 0; k < dim; ++k) acc.add_zeta_multiple(one, k * (i + j));
      const bool reflected = (i + j) % dim == 0;
      if (!(acc == (reflected ? d_scalar : CycNumber::zero(ctx)))) fail(6, i, j);
    }
  }
  const long block = ipow(ctx->p(), r);
  for (long i = 0; i < dim; ++i) {
    CycNumber acc = CycNumber::zero(ctx);
    for (long j = 0; j < dim; j += block) acc.add_zeta_multiple(one, i * j);
    const CycNumber expected = i % block == 0 ? CycNumber::integer(ctx, block) : CycNumber::zero(ctx);
    if (!(acc == expected)) fail(7, i, 0);
  }
  return report;
}

}  // namespace padicft

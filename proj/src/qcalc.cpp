#include "padicft/qcalc.hpp"

#include <stdexcept>

namespace padicft {

namespace {

int level_of(const CyclotomicContext& ctx) {
  if (ctx.m() % 2 != 0) {
    throw std::invalid_argument("context order must be an even power p^(2r)");
  }
  return ctx.m() / 2;
}

void require_index(long p, int r, long n) {
  if (n < 0 || n >= ipow(p, 2 * r)) {
    throw std::invalid_argument("index n must satisfy 0 <= n < p^(2r)");
  }
}

}  // namespace

QBinomTable::QBinomTable(long max_n) : max_n_(max_n) {
  if (max_n < 0) throw std::invalid_argument("QBinomTable: negative size");
  rows_.reserve(static_cast<std::size_t>(max_n + 1));
  rows_.push_back({LaurentPoly::constant(1)});
  for (long n = 0; n < max_n; ++n) {
    const auto& prev = rows_.back();
    std::vector<LaurentPoly> next;
    next.reserve(static_cast<std::size_t>(n + 2));
    next.push_back(LaurentPoly::constant(1));
    for (long k = 1; k <= n; ++k) {
      next.push_back(prev[static_cast<std::size_t>(k)] + prev[static_cast<std::size_t>(k - 1)].shifted(n + 1 - k));
    }
    next.push_back(LaurentPoly::constant(1));
    rows_.push_back(std::move(next));
  }
}

const LaurentPoly& QBinomTable::operator()(long n, long k) const {
  if (n > max_n_) throw std::out_of_range("QBinomTable: row beyond table");
  if (n < 0 || k < 0 || k > n) return zero_;
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

LaurentPoly q_binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return {};
  return QBinomTable(n)(n, k);
}

LaurentPoly pochhammer(long n, const LaurentPoly& x) {
  LaurentPoly out = LaurentPoly::constant(1);
  const LaurentPoly one = LaurentPoly::constant(1);
  for (long k = 0; k < n; ++k) out = out * (one - x.shifted(k));
  return out;
}

std::vector<LaurentPoly> pochhammer_in_x(long n, const LaurentPoly& scale) {
  std::vector<LaurentPoly> coeffs{LaurentPoly::constant(1)};
  for (long k = 0; k < n; ++k) {
    const LaurentPoly factor = scale.shifted(k);
    coeffs.emplace_back();
    for (std::size_t j = coeffs.size() - 1; j >= 1; --j) coeffs[j] -= factor * coeffs[j - 1];
  }
  return coeffs;
}

std::vector<LaurentPoly> q_binomial_theorem_coeffs(long n) {
  if (n < 0) throw std::invalid_argument("q_binomial_theorem_coeffs: negative n");
  QBinomTable table(n);
  std::vector<LaurentPoly> out;
  out.reserve(static_cast<std::size_t>(n + 1));
  for (long k = 0; k <= n; ++k) {
    LaurentPoly term = table(n, k).shifted(choose2(k + 1));
    out.push_back(k % 2 == 0 ? term : -term);
  }
  return out;
}

LaurentPoly omega_poly(long p, int r, long n, const QBinomTable& table) {
  require_index(p, r, n);
  const long block = ipow(p, r);
  LaurentPoly sum;
  for (long k = 0; k * block <= n; ++k) {
    const long kb = k * block;
    LaurentPoly term = table(n, kb).shifted(choose2(kb + 1) - n * kb);
    if (kb % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

LaurentPoly omega_poly(long p, int r, long n) {
  require_index(p, r, n);
  return omega_poly(p, r, n, QBinomTable(n));
}

std::vector<CycNumber> omega_roots_average_all(const ContextPtr& ctx) {
  const int r = level_of(*ctx);
  const long d = ctx->order();
  const long block = ipow(ctx->p(), r);
  std::vector<CycNumber> sums(static_cast<std::size_t>(d), CycNumber::zero(ctx));
  for (long k = 0; k < block; ++k) {
    // running prod_{l<n} (1 - zeta^(k*block - l))
    CycNumber prod = CycNumber::one(ctx);
    for (long n = 0; n < d; ++n) {
      sums[static_cast<std::size_t>(n)] += prod;
      const CycNumber prev = prod;
      prod.add_zeta_multiple(prev, k * block - n, -1);
    }
  }
  const CycNumber scale = CycNumber::rational(ctx, Rational(1, block));
  for (auto& s : sums) s *= scale;
  return sums;
}

OmegaEvaluations omega_roots_check(const ContextPtr& ctx, long n, const QBinomTable& table) {
  const int r = level_of(*ctx);
  const long p = ctx->p();
  require_index(p, r, n);
  CycNumber from_poly = cyc_reduce(ctx, omega_poly(p, r, n, table));

  const long block = ipow(p, r);
  CycNumber sum = CycNumber::zero(ctx);
  for (long k = 0; k < block; ++k) {
    CycNumber prod = CycNumber::one(ctx);
    for (long l = 0; l < n; ++l) {
      const CycNumber prev = prod;
      prod.add_zeta_multiple(prev, k * block - l, -1);
    }
    sum += prod;
  }
  sum *= CycNumber::rational(ctx, Rational(1, block));
  return {std::move(from_poly), std::move(sum)};
}

OmegaEvaluations omega_roots_check(const ContextPtr& ctx, long n) {
  return omega_roots_check(ctx, n, QBinomTable(n));
}

DivisibilityReport check_cyclotomic_divisibility(long p, int r, long n, const QBinomTable& table) {
  DivisibilityReport report;
  report.p = p;
  report.r = r;
  report.n = n;
  report.dividend = omega_poly(p, r, n, table);
  report.divisor = LaurentPoly::constant(1);
  for (int j = r; j <= 2 * r - 1; ++j) {
    report.divisor = report.divisor * pow(phi_prime_power(p, j), n / ipow(p, j));
  }
  if (auto quotient = laurent_divexact(report.dividend, report.divisor)) {
    report.divides = true;
    report.quotient = std::move(*quotient);
  }
  return report;
}

DivisibilityReport check_cyclotomic_divisibility(long p, int r, long n) {
  require_index(p, r, n);
  return check_cyclotomic_divisibility(p, r, n, QBinomTable(n));
}

void for_each_zeta_binomial_row(const ContextPtr& ctx, long max_n,
                                const std::function<void(long, const std::vector<CycNumber>&)>& row_fn) {
  std::vector<CycNumber> row{CycNumber::one(ctx)};
  row_fn(0, row);
  for (long n = 0; n < max_n; ++n) {
    // row n -> row n+1 in place, high k first so row[k-1] is still old
    for (long k = n; k >= 1; --k) {
      row[static_cast<std::size_t>(k)].add_zeta_multiple(row[static_cast<std::size_t>(k - 1)], n + 1 - k);
    }
    row.push_back(CycNumber::one(ctx));
    row_fn(n + 1, row);
  }
}

ZetaBinomialTable::ZetaBinomialTable(ContextPtr ctx, long max_n)
    : ctx_(std::move(ctx)), max_n_(max_n), zero_(CycNumber::zero(ctx_)) {
  rows_.reserve(static_cast<std::size_t>(max_n + 1));
  for_each_zeta_binomial_row(ctx_, max_n, [this](long, const std::vector<CycNumber>& row) { rows_.push_back(row); });
}

const CycNumber& ZetaBinomialTable::operator()(long n, long k) const {
  if (n > max_n_) throw std::out_of_range("ZetaBinomialTable: row beyond table");
  if (n < 0 || k < 0 || k > n) return zero_;
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

std::vector<CycNumber> zeta_pochhammers(const ContextPtr& ctx, long max_n) {
  std::vector<CycNumber> out;
  out.reserve(static_cast<std::size_t>(max_n + 1));
  out.push_back(CycNumber::one(ctx));
  for (long n = 1; n <= max_n; ++n) {
    CycNumber next = out.back();
    next.add_zeta_multiple(out.back(), n, -1);
    out.push_back(std::move(next));
  }
  return out;
}

}  // namespace padicft

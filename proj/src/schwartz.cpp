#include "padicft/schwartz.hpp"

#include <algorithm>
#include <stdexcept>

#include "padicft/attainability.hpp"
#include "padicft/qcalc.hpp"

namespace padicft {

namespace {

CycNumber signed_cyc(CycNumber a, long parity) { return parity % 2 == 0 ? a : -a; }

long grid_index(const Rational& x, long scale, long modulus, const char* what) {
  const Rational scaled = x * scale;
  if (scaled.get_den() != 1) {
    throw std::invalid_argument(std::string("heisenberg_act: ") + what + " is off the level grid");
  }
  Integer idx = scaled.get_num();
  idx %= modulus;
  if (idx < 0) idx += modulus;
  return idx.get_si();
}

}  // namespace

SchwartzVec::SchwartzVec(ContextPtr ctx, std::vector<CycNumber> coeffs)
    : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
  if (ctx_->m() % 2 != 0) throw std::invalid_argument("SchwartzVec: context order must be p^(2r)");
  if (static_cast<long>(coeffs_.size()) != ctx_->order()) {
    throw std::invalid_argument("SchwartzVec: need exactly p^(2r) coefficients");
  }
}

SchwartzVec SchwartzVec::zero(const ContextPtr& ctx) {
  return SchwartzVec(ctx, std::vector<CycNumber>(static_cast<std::size_t>(ctx->order()), CycNumber::zero(ctx)));
}

SchwartzVec SchwartzVec::basis(const ContextPtr& ctx, long i) {
  SchwartzVec out = zero(ctx);
  out.coeffs_.at(static_cast<std::size_t>(i)) = CycNumber::one(ctx);
  return out;
}

bool SchwartzVec::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const CycNumber& c) { return c.is_zero(); });
}

SchwartzVec& SchwartzVec::operator+=(const SchwartzVec& rhs) {
  if (rhs.coeffs_.size() != coeffs_.size()) throw std::invalid_argument("SchwartzVec: level mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

SchwartzVec& SchwartzVec::operator-=(const SchwartzVec& rhs) {
  if (rhs.coeffs_.size() != coeffs_.size()) throw std::invalid_argument("SchwartzVec: level mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

SchwartzVec operator*(const CycNumber& c, const SchwartzVec& a) {
  SchwartzVec out = a;
  for (auto& x : out.coeffs_) x *= c;
  return out;
}

bool operator==(const SchwartzVec& a, const SchwartzVec& b) {
  return *a.ctx_ == *b.ctx_ && a.coeffs_ == b.coeffs_;
}

PValuation sup_norm_exponent(const SchwartzVec& phi) {
  PValuation out = PValuation::infinity();
  for (const auto& c : phi.coeffs()) out = min(out, cyc_valuation(c));
  return out;
}

SchwartzVec indicator_of_integers(const ContextPtr& ctx) {
  SchwartzVec out = SchwartzVec::zero(ctx);
  const long block = ipow(ctx->p(), ctx->m() / 2);
  std::vector<CycNumber> coeffs = out.coeffs();
  for (long j = 0; j < ctx->order(); j += block) coeffs[static_cast<std::size_t>(j)] = CycNumber::one(ctx);
  return SchwartzVec(ctx, std::move(coeffs));
}

SchwartzVec fourier(const SchwartzVec& phi) {
  const auto& ctx = phi.context();
  const long d = phi.size();
  const long e = ctx->degree();
  // Bring every value over one denominator so the transform runs in Z[zeta].
  Integer common = 1;
  for (const auto& c : phi.coeffs()) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), c.den().get_mpz_t());
  std::vector<std::vector<Integer>> scaled;
  scaled.reserve(static_cast<std::size_t>(d));
  for (const auto& c : phi.coeffs()) {
    const Integer factor = common / c.den();
    std::vector<Integer> v = c.num();
    for (auto& x : v) x *= factor;
    scaled.push_back(std::move(v));
  }
  const Integer den = common * ipow(ctx->p(), phi.level());
  std::vector<CycNumber> out;
  out.reserve(static_cast<std::size_t>(d));
  for (long i = 0; i < d; ++i) {
    std::vector<Integer> acc(static_cast<std::size_t>(e), Integer(0));
    for (long j = 0; j < d; ++j) {
      const auto& v = scaled[static_cast<std::size_t>(j)];
      const long shift = (i * j) % d;
      for (long k = 0; k < e; ++k) {
        if (v[static_cast<std::size_t>(k)] != 0) ctx->add_monomial(acc, k + shift, v[static_cast<std::size_t>(k)]);
      }
    }
    out.emplace_back(ctx, std::move(acc), den);
  }
  return SchwartzVec(ctx, std::move(out));
}

SchwartzVec reflect(const SchwartzVec& phi) {
  const long d = phi.size();
  std::vector<CycNumber> out;
  out.reserve(static_cast<std::size_t>(d));
  for (long i = 0; i < d; ++i) out.push_back(phi[(d - i) % d]);
  return SchwartzVec(phi.context(), std::move(out));
}

SupportMesh support_mesh(const SchwartzVec& phi) {
  if (phi.is_zero()) throw std::invalid_argument("support_mesh: the zero function has no support or mesh");
  const int r = phi.level();
  const long p = phi.context()->p();
  const long d = phi.size();
  // smallest p-adic order among nonzero indices, index 0 counting as 2r
  long min_order = 2 * r;
  for (long i = 1; i < d; ++i) {
    if (phi[i].is_zero()) continue;
    long order = 0;
    for (long x = i; x % p == 0; x /= p) ++order;
    min_order = std::min(min_order, order);
  }
  SupportMesh out{static_cast<int>(std::max<long>(-r, r - min_order)), r};
  for (int n = -r; n < r; ++n) {
    const long step = ipow(p, n + r);
    bool invariant = true;
    for (long i = 0; i < d && invariant; ++i) invariant = phi[i] == phi[(i + step) % d];
    if (invariant) {
      out.mesh = n;
      break;
    }
  }
  return out;
}

SchwartzVec heisenberg_act(const HeisenbergElement& g, const SchwartzVec& phi) {
  const auto& ctx = phi.context();
  const long d = phi.size();
  const long block = ipow(ctx->p(), phi.level());
  const long a = grid_index(g.t, d, d, "t");
  const long k = grid_index(g.b, block, d, "b");
  const long j = grid_index(g.b_prime, block, d, "b'");
  std::vector<CycNumber> out;
  out.reserve(static_cast<std::size_t>(d));
  for (long i = 0; i < d; ++i) out.push_back(phi[(i + j) % d].times_zeta_power(a + k * i));
  return SchwartzVec(ctx, std::move(out));
}

HeisenbergElement fourier_conjugate(const HeisenbergElement& g) {
  return {Rational(g.t - g.b * g.b_prime), Rational(-g.b_prime), g.b};
}

std::variant<WitnessRecord, NotAttainable> build_witness(const ContextPtr& ctx, const Rational& e) {
  if (e < 0) throw std::invalid_argument("build_witness: epsilon exponent must be nonnegative");
  const LevelData data = LevelData::compute(ctx);
  const int r = data.r;
  const long d = data.d;
  const PValuation target(e);
  const CycNumber scale = CycNumber::integer(ctx, data.block);
  const SchwartzVec indicator = indicator_of_integers(ctx);

  std::vector<CycNumber> y(static_cast<std::size_t>(d), CycNumber::zero(ctx));
  std::vector<CycNumber> x_lower(static_cast<std::size_t>(d), CycNumber::zero(ctx));
  PValuation lower_exponent = PValuation::infinity();
  std::optional<NotAttainable> failure;

  for_each_zeta_binomial_row(ctx, d - 1, [&](long n, const std::vector<CycNumber>& row) {
    if (failure) return;
    const auto idx = static_cast<std::size_t>(n);
    // T_n: the n-th bracket of L(y + J) before y_n is chosen
    CycNumber t = data.omega[idx];
    for (long k = 0; k < n; ++k) {
      const auto& yk = y[static_cast<std::size_t>(k)];
      if (yk.is_zero()) continue;
      t += signed_cyc(row[static_cast<std::size_t>(k)] * yk, k).times_zeta_power(choose2(k + 1) - n * k);
    }
    const PValuation v_t = cyc_valuation(t);
    const PValuation v_poch = pochhammer_valuation(ctx, n);
    if (v_t >= target) {
      // cancel: y_n = -c_n^-1 T_n with the unit c_n = (-1)^n zeta^(C(n+1,2) - n^2)
      y[idx] = signed_cyc(t, n + 1).times_zeta_power(n * n - choose2(n + 1));
    } else if (v_t - v_poch.value() < PValuation(Rational(e - r))) {
      Rational slack = r - v_poch.value();
      if (slack < 0) slack = 0;
      failure = NotAttainable{n, Rational(e - (v_t.value() + slack))};
      return;
    }
    // independent second route: bracket of L(y + J) straight from y + J
    CycNumber bracket = CycNumber::zero(ctx);
    for (long k = 0; k <= n; ++k) {
      CycNumber yj = y[static_cast<std::size_t>(k)] + indicator[k];
      if (yj.is_zero()) continue;
      bracket += signed_cyc(row[static_cast<std::size_t>(k)] * yj, k).times_zeta_power(choose2(k + 1) - n * k);
    }
    lower_exponent = min(lower_exponent, cyc_valuation(bracket) - v_poch.value());
    const CycNumber w = scale * bracket / data.pochhammer[idx];
    // x_m += V_{n,m} w_n, V_{n,m} = (-1)^(n-m) zeta^C(n-m,2) [n m]
    if (!w.is_zero()) {
      for (long m = 0; m <= n; ++m) {
        x_lower[static_cast<std::size_t>(m)] +=
            signed_cyc(row[static_cast<std::size_t>(m)] * w, n - m).times_zeta_power(choose2(n - m));
      }
    }
  });
  if (failure) return *failure;

  std::vector<CycNumber> y_plus_j = y;
  for (long i = 0; i < d; ++i) y_plus_j[static_cast<std::size_t>(i)] += indicator[i];
  const SchwartzVec x = reflect(fourier(SchwartzVec(ctx, std::move(y_plus_j))));
  const SchwartzVec x_alt(ctx, std::move(x_lower));
  const SchwartzVec y_vec(ctx, y);

  WitnessRecord w{ctx->p(), r, e, std::move(y), indicator - x,
                  WitnessChecks{sup_norm_exponent(x), sup_norm_exponent(y_vec)}, lower_exponent, x == x_alt};
  return w;
}

WitnessVerification verify_witness(const WitnessRecord& w) {
  WitnessVerification out;
  const auto& ctx = w.phi.context();
  out.recomputed.dist_to_phi0_exponent = sup_norm_exponent(w.phi - indicator_of_integers(ctx));
  out.recomputed.fourier_norm_exponent = sup_norm_exponent(fourier(w.phi));
  out.matches_record = out.recomputed == w.checks;
  const PValuation target(w.e);
  out.bounds_hold = out.recomputed.dist_to_phi0_exponent >= target && out.recomputed.fourier_norm_exponent >= target;
  return out;
}

}  // namespace padicft

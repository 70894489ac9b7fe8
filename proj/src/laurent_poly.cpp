#include "padicft/laurent_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace padicft {

LaurentPoly::LaurentPoly(std::vector<Integer> coeffs, long min_deg)
    : coeffs_(std::move(coeffs)), min_deg_(min_deg) {
  canonicalize();
}

LaurentPoly LaurentPoly::constant(const Integer& c) { return LaurentPoly({c}, 0); }

LaurentPoly LaurentPoly::monomial(const Integer& c, long degree) { return LaurentPoly({c}, degree); }

void LaurentPoly::canonicalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c != 0; });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    min_deg_ = 0;
    return;
  }
  const auto lead = first - coeffs_.begin();
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), first);
    min_deg_ += lead;
  }
}

Integer LaurentPoly::coeff(long degree) const {
  if (is_zero() || degree < min_deg_ || degree > max_deg()) return 0;
  return coeffs_[static_cast<std::size_t>(degree - min_deg_)];
}

Integer LaurentPoly::eval_at_one() const {
  Integer s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

LaurentPoly LaurentPoly::shifted(long k) const {
  LaurentPoly out = *this;
  if (!out.is_zero()) out.min_deg_ += k;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  const long lo = std::min(min_deg_, rhs.min_deg_);
  const long hi = std::max(max_deg(), rhs.max_deg());
  if (lo < min_deg_) {
    coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(min_deg_ - lo), Integer(0));
    min_deg_ = lo;
  }
  coeffs_.resize(static_cast<std::size_t>(hi - lo + 1), Integer(0));
  const auto offset = static_cast<std::size_t>(rhs.min_deg_ - lo);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[offset + i] += rhs.coeffs_[i];
  canonicalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) { return *this += -rhs; }

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly out = a;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return LaurentPoly(std::move(out), a.min_deg_ + b.min_deg_);
}

LaurentPoly operator*(const Integer& c, const LaurentPoly& a) {
  std::vector<Integer> out = a.coeffs_;
  for (auto& x : out) x *= c;
  return LaurentPoly(std::move(out), a.min_deg_);
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    const long deg = min_deg_ + static_cast<long>(i);
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (deg == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    os << "q";
    if (deg != 1) os << "^" << deg;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& a) { return os << a.to_string(); }

std::optional<LaurentPoly> laurent_divexact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("laurent_divexact: division by zero");
  if (a.is_zero()) return LaurentPoly{};
  // Both coefficient vectors start at a nonzero constant term once the unit
  // q^min_deg is cleared, so ordinary long division in Z[q] decides.
  const auto& divisor = b.coeffs();
  std::vector<Integer> rem = a.coeffs();
  if (rem.size() < divisor.size()) return std::nullopt;
  const std::size_t qlen = rem.size() - divisor.size() + 1;
  std::vector<Integer> quot(qlen, Integer(0));
  const Integer& lead = divisor.back();
  Integer r;
  for (std::size_t step = qlen; step-- > 0;) {
    Integer& top = rem[step + divisor.size() - 1];
    if (top == 0) continue;
    mpz_tdiv_qr(quot[step].get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    if (r != 0) return std::nullopt;
    for (std::size_t j = 0; j < divisor.size(); ++j) {
      mpz_submul(rem[step + j].get_mpz_t(), quot[step].get_mpz_t(), divisor[j].get_mpz_t());
    }
  }
  for (const auto& c : rem) {
    if (c != 0) return std::nullopt;
  }
  return LaurentPoly(std::move(quot), a.min_deg() - b.min_deg());
}

LaurentPoly phi_prime_power(long p, int j) {
  if (j < 1) throw std::invalid_argument("phi_prime_power: exponent must be positive");
  const long stride = ipow(p, j - 1);
  std::vector<Integer> c(static_cast<std::size_t>((p - 1) * stride + 1), Integer(0));
  for (long i = 0; i < p; ++i) c[static_cast<std::size_t>(i * stride)] = 1;
  return LaurentPoly(std::move(c), 0);
}

LaurentPoly pow(const LaurentPoly& a, long k) {
  if (k < 0) throw std::invalid_argument("pow: negative exponent");
  LaurentPoly out = LaurentPoly::constant(1);
  for (long i = 0; i < k; ++i) out = out * a;
  return out;
}

}  // namespace padicft

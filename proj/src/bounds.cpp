#include "shirshov/bounds.hpp"

#include <cmath>
#include <cstring>
#include <memory>
#include <stdexcept>
#include <string>

#include <gmp.h>
#include <mpfr.h>

namespace shirshov {

void BoundParams::validate() const {
  if (n < 2) throw std::invalid_argument("bound parameter n must be at least 2");
  if (d < 2) throw std::invalid_argument("bound parameter d must be at least 2");
  if (l < 1) throw std::invalid_argument("bound parameter l must be at least 1");
}

std::optional<std::size_t> exact_log(std::uint64_t base, std::uint64_t x) {
  if (base < 2 || x == 0) return std::nullopt;
  std::size_t j = 0;
  while (x % base == 0) {
    x /= base;
    ++j;
  }
  if (x != 1) return std::nullopt;
  return j;
}

std::size_t ceil_log(std::uint64_t base, std::uint64_t x) {
  if (base < 2 || x == 0) throw std::invalid_argument("ceil_log domain");
  std::size_t j = 0;
  BigInt p = 1;
  while (p < x) {
    p *= base;
    ++j;
  }
  return j;
}

namespace {

BigInt ipow(BigInt base, std::size_t e) { return boost::multiprecision::pow(base, static_cast<unsigned>(e)); }

class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

BigInt mpfr_to_bigint(mpfr_ptr x) {
  mpz_t z;
  mpz_init(z);
  mpfr_get_z(z, x, MPFR_RNDN);
  std::unique_ptr<char, void (*)(void*)> s(mpz_get_str(nullptr, 10, z), [](void* p) {
    void (*freefunc)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefunc);
    freefunc(p, std::strlen(static_cast<char*>(p)) + 1);
  });
  mpz_clear(z);
  return BigInt(s.get());
}

// coeff * base^{a log_b(base) + c log_b(log_b(base)) + e} for a base that is
// not a power of b.  `round_up` selects ceiling, otherwise floor.
BigInt round_irrational(const BigInt& coeff, std::uint64_t base, std::uint64_t b, long a, long c, long e,
                        bool round_up) {
  const double lb = std::log(static_cast<double>(base)) / std::log(static_cast<double>(b));
  const double expo = a * lb + (c != 0 ? c * std::log(lb) / std::log(static_cast<double>(b)) : 0.0) + e;
  const double bits_estimate =
      static_cast<double>(boost::multiprecision::msb(coeff) + 1) + expo * std::log2(static_cast<double>(base));

  auto evaluate = [&](mpfr_prec_t prec, bool& near_integer) {
    Mpfr lnb(prec), lnB(prec), t(prec), ex(prec), v(prec), frac(prec);
    mpfr_set_ui(lnb.get(), b, MPFR_RNDN);
    mpfr_log(lnb.get(), lnb.get(), MPFR_RNDN);
    mpfr_set_ui(lnB.get(), base, MPFR_RNDN);
    mpfr_log(lnB.get(), lnB.get(), MPFR_RNDN);
    // ex = a*lB/lb + c*log(lB/lb)/lb + e
    mpfr_div(t.get(), lnB.get(), lnb.get(), MPFR_RNDN);  // log_b(base)
    mpfr_mul_si(ex.get(), t.get(), a, MPFR_RNDN);
    if (c != 0) {
      mpfr_log(t.get(), t.get(), MPFR_RNDN);
      mpfr_div(t.get(), t.get(), lnb.get(), MPFR_RNDN);
      mpfr_mul_si(t.get(), t.get(), c, MPFR_RNDN);
      mpfr_add(ex.get(), ex.get(), t.get(), MPFR_RNDN);
    }
    mpfr_add_si(ex.get(), ex.get(), e, MPFR_RNDN);
    mpfr_mul(t.get(), ex.get(), lnB.get(), MPFR_RNDN);
    mpfr_exp(v.get(), t.get(), MPFR_RNDN);
    const std::string cs = coeff.str();
    mpfr_set_str(t.get(), cs.c_str(), 10, MPFR_RNDN);
    mpfr_mul(v.get(), v.get(), t.get(), MPFR_RNDN);
    mpfr_frac(frac.get(), v.get(), MPFR_RNDN);
    const double f = mpfr_get_d(frac.get(), MPFR_RNDN);
    near_integer = f < 1e-12 || f > 1.0 - 1e-12;
    if (round_up) {
      mpfr_ceil(v.get(), v.get());
    } else {
      mpfr_floor(v.get(), v.get());
    }
    return mpfr_to_bigint(v.get());
  };

  const auto prec = static_cast<mpfr_prec_t>(std::max(128.0, bits_estimate + 128.0));
  bool near1 = false;
  bool near2 = false;
  BigInt r1 = evaluate(prec, near1);
  BigInt r2 = evaluate(prec + 128, near2);
  if (r1 != r2 || near1 || near2) {
    throw std::runtime_error("bound evaluation could not certify rounding");
  }
  return r1;
}

// coeff * base^{a log_b(base) + c log_b log_b(base) + e}, rounded up.
BigInt log_power_bound(const BigInt& coeff, std::uint64_t base, std::uint64_t b, long a, long c, long e) {
  if (auto j = exact_log(b, base); j && *j >= 1) {
    // base^{c log_b j} = j^{c j}
    BigInt out = coeff * ipow(BigInt(base), static_cast<std::size_t>(a * static_cast<long>(*j) + e));
    if (c != 0) out *= ipow(BigInt(*j), static_cast<std::size_t>(c * static_cast<long>(*j)));
    return out;
  }
  return round_irrational(coeff, base, b, a, c, e, true);
}

}  // namespace

BigInt psi_bound(const BoundParams& p) {
  p.validate();
  const std::uint64_t nd = p.n * p.d;
  if (nd < 3) throw std::invalid_argument("psi bound needs nd >= 3");
  return log_power_bound((BigInt(1) << 27) * p.l, nd, 3, 3, 9, 36);
}

BigInt psi_log2_bound(const BoundParams& p) {
  p.validate();
  const std::uint64_t nd = p.n * p.d;
  return log_power_bound(BigInt(256) * p.l * p.d * p.d, nd, 2, 2, 0, 10);
}

BigInt phi_bound(std::size_t n, std::size_t l) {
  if (n < 3) throw std::invalid_argument("phi bound needs n >= 3");
  if (l < 1) throw std::invalid_argument("phi bound needs l >= 1");
  return log_power_bound((BigInt(1) << 96) * l, n, 3, 12, 36, 91);
}

BigInt upsilon_bound(std::size_t n, std::size_t l) {
  if (n < 2 || l < 1) throw std::invalid_argument("upsilon bound needs n >= 2, l >= 1");
  return 2 * ipow(BigInt(n), 3 * ceil_log(3, n) + 4) * l;
}

BigInt upsilon_coding_bound(std::size_t n, std::size_t l) {
  if (n < 2 || l < 1) throw std::invalid_argument("upsilon coding bound needs n >= 2, l >= 1");
  return 8 * ipow(BigInt(l + 1), n) * ipow(BigInt(n), 5) * (n - 1);
}

BigInt p_nd(std::size_t n, std::size_t d) {
  if (n < 1 || d < 1) throw std::invalid_argument("p_nd needs n, d >= 1");
  const std::uint64_t nd = n * d;
  const BigInt base = BigInt(3) * (n + 1) * d;
  if (auto j = exact_log(3, nd)) return base * (*j + 2) / 2;
  // log_3(nd) is irrational here, so the floor is never at an integer.
  const mpfr_prec_t prec = 256;
  auto eval = [&](mpfr_prec_t pr) {
    Mpfr x(pr), y(pr), frac(pr);
    mpfr_set_ui(x.get(), nd, MPFR_RNDN);
    mpfr_log(x.get(), x.get(), MPFR_RNDN);
    mpfr_set_ui(y.get(), 3, MPFR_RNDN);
    mpfr_log(y.get(), y.get(), MPFR_RNDN);
    mpfr_div(x.get(), x.get(), y.get(), MPFR_RNDN);
    mpfr_add_ui(x.get(), x.get(), 2, MPFR_RNDN);
    mpfr_mul_ui(x.get(), x.get(), static_cast<unsigned long>(3 * (n + 1) * d), MPFR_RNDN);
    mpfr_div_ui(x.get(), x.get(), 2, MPFR_RNDN);
    mpfr_frac(frac.get(), x.get(), MPFR_RNDN);
    const double f = mpfr_get_d(frac.get(), MPFR_RNDN);
    if (f < 1e-30 || f > 1.0 - 1e-30) throw std::runtime_error("p_nd rounding could not be certified");
    mpfr_floor(x.get(), x.get());
    return mpfr_to_bigint(x.get());
  };
  BigInt a = eval(prec);
  if (a != eval(prec * 2)) throw std::runtime_error("p_nd rounding could not be certified");
  return a;
}

std::size_t q_n(std::size_t n) {
  if (n < 1) throw std::invalid_argument("q_n needs n >= 1");
  return n - 1;
}

BigInt beth_bound(PeriodFamily family, std::size_t l, std::size_t n) {
  if (n < 3) throw std::invalid_argument("beth bound needs n >= 3");
  if (l < 1) throw std::invalid_argument("beth bound needs l >= 1");
  const BigInt two_l_minus_one = BigInt(2 * l) - 1;
  switch (family) {
    case PeriodFamily::two: return two_l_minus_one * (n - 1) * (n - 2) / 2;
    case PeriodFamily::three: return two_l_minus_one * (n - 1) * (n - 2);
    case PeriodFamily::degree_minus_one: return (BigInt(l) - 2) * (n - 1);
  }
  throw std::invalid_argument("unsupported period family");
}

BigInt alpha_lower(std::size_t n, std::size_t l) {
  if (n < 3) throw std::invalid_argument("alpha needs n >= 3");
  return (BigInt(l) - (BigInt(1) << (n - 1))) * (n - 2) * (n - 3) / 2;
}

}  // namespace shirshov

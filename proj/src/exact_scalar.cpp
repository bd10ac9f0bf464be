#include "gv/exact_scalar.hpp"

#include <cstdlib>
#include <sstream>

namespace gv {

namespace {

constexpr long kFactorBound = 1'000'000;

// 60 fractional digits of pi, enough guard for any sane `digits` request.
const char* kPiDigits =
    "3.141592653589793238462643383279502884197169399375105820974944";

std::map<long, long> factor2(Int n) {
  // n > 0; returns prime -> doubled exponent.
  std::map<long, long> out;
  for (long p = 2; p <= kFactorBound && n > 1; p == 2 ? p = 3 : p += 2) {
    if (!mpz_divisible_ui_p(n.get_mpz_t(), p)) continue;
    long e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
      ++e;
    }
    out[p] = 2 * e;
    // Once p*p > n the remainder is prime.
    if (n > 1 && Int(p) * p > n) break;
  }
  if (n > 1) {
    if (!n.fits_slong_p() || mpz_probab_prime_p(n.get_mpz_t(), 40) == 0)
      throw UsageError("ExactScalar: prime factor exceeds the supported bound");
    out[n.get_si()] += 2;
  }
  return out;
}

std::string exponent_str(long e2) {
  std::ostringstream os;
  if (e2 % 2 == 0) {
    os << e2 / 2;
  } else {
    os << "(" << e2 << "/2)";
  }
  return os.str();
}

}  // namespace

ExactScalar ExactScalar::zero() {
  ExactScalar s;
  s.sign_ = 0;
  return s;
}

ExactScalar ExactScalar::integer(long v) { return from_rational(Rat(v)); }

ExactScalar ExactScalar::from_rational(const Rat& v) {
  if (v == 0) return zero();
  ExactScalar s;
  s.sign_ = sgn(v) > 0 ? 1 : -1;
  Rat a = ::abs(v);
  for (auto& [p, e2] : factor2(a.get_num())) s.e2_[p] += e2;
  for (auto& [p, e2] : factor2(a.get_den())) s.e2_[p] -= e2;
  std::erase_if(s.e2_, [](const auto& kv) { return kv.second == 0; });
  return s;
}

ExactScalar ExactScalar::pi_power(long m) {
  ExactScalar s;
  s.pi_ = m;
  return s;
}

ExactScalar ExactScalar::prime_power(long p, long e2) {
  ExactScalar s;
  if (e2 != 0) s.e2_[p] = e2;
  return s;
}

ExactScalar ExactScalar::sqrt_rational(const Rat& v) {
  if (v <= 0) throw UsageError("ExactScalar: sqrt of a nonpositive value");
  ExactScalar s = from_rational(v);
  for (auto& [p, e2] : s.e2_) e2 /= 2;
  return s;
}

bool ExactScalar::is_rational() const {
  if (is_zero()) return true;
  if (pi_ != 0) return false;
  for (auto& [p, e2] : e2_)
    if (e2 % 2 != 0) return false;
  return true;
}

Rat ExactScalar::rational_value() const {
  if (!is_rational()) throw UsageError("ExactScalar: not a rational value");
  if (is_zero()) return Rat(0);
  Rat v(sign_);
  for (auto& [p, e2] : e2_) {
    Int pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), p, std::labs(e2) / 2);
    if (e2 > 0)
      v *= Rat(pw);
    else
      v /= Rat(pw);
  }
  return v;
}

void ExactScalar::mul_prime(long p, long e2) {
  auto it = e2_.find(p);
  if (it == e2_.end()) {
    if (e2 != 0) e2_[p] = e2;
  } else {
    it->second += e2;
    if (it->second == 0) e2_.erase(it);
  }
}

ExactScalar ExactScalar::operator*(const ExactScalar& o) const {
  if (is_zero() || o.is_zero()) return zero();
  ExactScalar s = *this;
  s.sign_ *= o.sign_;
  s.pi_ += o.pi_;
  for (auto& [p, e2] : o.e2_) s.mul_prime(p, e2);
  return s;
}

ExactScalar ExactScalar::inverse() const {
  if (is_zero()) throw UsageError("ExactScalar: division by zero");
  ExactScalar s;
  s.sign_ = sign_;
  s.pi_ = -pi_;
  for (auto& [p, e2] : e2_) s.e2_[p] = -e2;
  return s;
}

ExactScalar ExactScalar::operator/(const ExactScalar& o) const {
  return *this * o.inverse();
}

ExactScalar ExactScalar::operator-() const {
  ExactScalar s = *this;
  s.sign_ = -s.sign_;
  return s;
}

ExactScalar ExactScalar::abs() const {
  ExactScalar s = *this;
  if (s.sign_ < 0) s.sign_ = 1;
  return s;
}

ExactScalar ExactScalar::pow(long k) const {
  if (is_zero()) {
    if (k <= 0) throw UsageError("ExactScalar: 0 to a nonpositive power");
    return zero();
  }
  ExactScalar s;
  s.sign_ = (sign_ < 0 && (k % 2 != 0)) ? -1 : 1;
  s.pi_ = pi_ * k;
  for (auto& [p, e2] : e2_)
    if (e2 * k != 0) s.e2_[p] = e2 * k;
  return s;
}

ExactScalar ExactScalar::pow_half(long k) const {
  if (is_zero()) {
    if (k <= 0) throw UsageError("ExactScalar: 0 to a nonpositive power");
    return zero();
  }
  if (sign_ < 0 && k % 2 != 0)
    throw UsageError("ExactScalar: half power of a negative value");
  if (pi_ * k % 2 != 0)
    throw UsageError("ExactScalar: half power would leave a fractional pi exponent");
  ExactScalar s;
  s.sign_ = (sign_ < 0 && (k / 2) % 2 != 0) ? -1 : 1;
  s.pi_ = pi_ * k / 2;
  for (auto& [p, e2] : e2_)
    if (e2 * k != 0) s.e2_[p] = e2 * k / 2;  // doubled exponent halves exactly
  return s;
}

bool ExactScalar::operator==(const ExactScalar& o) const {
  return sign_ == o.sign_ && pi_ == o.pi_ && e2_ == o.e2_;
}

std::string ExactScalar::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  if (sign_ < 0) os << "-";
  bool wrote = false;
  for (auto& [p, e2] : e2_) {
    if (wrote) os << "*";
    os << p;
    if (e2 != 2) os << "^" << exponent_str(e2);
    wrote = true;
  }
  if (pi_ != 0) {
    if (wrote) os << "*";
    os << "pi";
    if (pi_ != 1) os << "^" << pi_;
    wrote = true;
  }
  if (!wrote) os << "1";
  return os.str();
}

ExactScalar ExactScalar::parse(const std::string& s) {
  std::string t = s;
  if (t.empty()) throw UsageError("ExactScalar: empty string");
  ExactScalar out = one();
  std::size_t pos = 0;
  if (t[pos] == '-') {
    out = -out;
    ++pos;
  }
  if (t.substr(pos) == "0") return zero();
  std::string body = t.substr(pos);
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t end = body.find('*', start);
    std::string tok = body.substr(start, end == std::string::npos ? end : end - start);
    if (tok.empty()) throw UsageError("ExactScalar: malformed token");
    std::string base = tok, exp = "2";  // doubled
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      base = tok.substr(0, caret);
      std::string e = tok.substr(caret + 1);
      if (!e.empty() && e.front() == '(') {
        if (e.size() < 4 || e.substr(e.size() - 3) != "/2)")
          throw UsageError("ExactScalar: malformed half exponent");
        exp = e.substr(1, e.size() - 4);
      } else {
        exp = std::to_string(2 * std::stol(e));
      }
    }
    const long e2 = std::stol(exp);
    if (base == "pi") {
      if (e2 % 2 != 0) throw UsageError("ExactScalar: fractional pi exponent");
      out = out * pi_power(e2 / 2);
    } else if (base == "1") {
      // multiplicative identity token
    } else {
      Int n(base);
      if (n <= 0) throw UsageError("ExactScalar: nonpositive base");
      for (auto& [p, pe2] : factor2(n)) out.mul_prime(p, (pe2 / 2) * e2);
    }
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

std::string ExactScalar::decimal(int digits) const {
  if (digits < 0) throw UsageError("ExactScalar: negative digit count");
  if (is_zero()) return "0";
  const long prec_bits = 64 + 4 * (digits + 40);
  mpf_class v(1, prec_bits);
  for (auto& [p, e2] : e2_) {
    mpf_class pf(p, prec_bits);
    mpf_class pw(1, prec_bits);
    for (long i = 0; i < std::labs(e2) / 2; ++i) pw *= pf;
    if (e2 % 2 != 0) {
      mpf_class r(0, prec_bits);
      mpf_sqrt(r.get_mpf_t(), pf.get_mpf_t());
      pw *= r;
    }
    if (e2 > 0)
      v *= pw;
    else
      v /= pw;
  }
  if (pi_ != 0) {
    mpf_class pi(kPiDigits, prec_bits);
    for (long i = 0; i < std::labs(pi_); ++i)
      if (pi_ > 0)
        v *= pi;
      else
        v /= pi;
  }
  // Round half away from zero at the requested fractional digit.
  mpf_class scale(1, prec_bits);
  for (int i = 0; i < digits; ++i) scale *= 10;
  v = v * scale + mpf_class(0.5, prec_bits);
  Int n;
  mpz_set_f(n.get_mpz_t(), v.get_mpf_t());
  std::string ds = n.get_str();
  if (digits == 0) return (sign_ < 0 ? "-" : "") + ds;
  if ((long)ds.size() <= digits) ds.insert(0, digits + 1 - ds.size(), '0');
  ds.insert(ds.size() - digits, ".");
  return (sign_ < 0 ? "-" : "") + ds;
}

std::string ExactScalar::json() const {
  std::ostringstream os;
  os << "{\"sign\":" << sign_ << ",\"primes\":{";
  bool first = true;
  for (auto& [p, e2] : e2_) {
    if (!first) os << ",";
    os << "\"" << p << "\":\"";
    if (e2 % 2 == 0)
      os << e2 / 2;
    else
      os << e2 << "/2";
    os << "\"";
    first = false;
  }
  os << "},\"pi\":" << pi_ << "}";
  return os.str();
}

}  // namespace gv

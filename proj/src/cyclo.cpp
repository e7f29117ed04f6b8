#include "dunkl/cyclo.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace dunkl {

UniPoly uni_trim(UniPoly p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
  if (a.empty() || b.empty()) return {};
  UniPoly r(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return uni_trim(std::move(r));
}

UniPoly uni_sub(UniPoly a, const UniPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rat(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  return uni_trim(std::move(a));
}

std::pair<UniPoly, UniPoly> uni_divmod(UniPoly a, const UniPoly& b) {
  if (b.empty()) throw AlgebraError("uni_divmod: division by zero");
  UniPoly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rat(0));
  const Rat lb = b.back();
  while (a.size() >= b.size()) {
    Rat f = a.back() / lb;
    size_t shift = a.size() - b.size();
    q[shift] = f;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a = uni_trim(std::move(a));
    if (a.empty()) break;
    if (a.size() < b.size()) break;
  }
  return {uni_trim(std::move(q)), std::move(a)};
}

UniPoly uni_exact_div(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = uni_divmod(a, b);
  if (!r.empty()) throw InexactDivision("uni_exact_div: nonzero remainder");
  return q;
}

int totient(int m) {
  int result = m, n = m;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

UniPoly cyclotomic_polynomial(int m) {
  if (m < 1) throw AlgebraError("cyclotomic_polynomial: m must be positive");
  static std::map<int, UniPoly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  // t^m - 1 divided by Phi_d for all proper divisors d of m.
  std::function<UniPoly(int)> build = [&](int k) -> UniPoly {
    auto hit = cache.find(k);
    if (hit != cache.end()) return hit->second;
    UniPoly num(static_cast<size_t>(k) + 1, Rat(0));
    num[0] = Rat(-1);
    num[static_cast<size_t>(k)] = Rat(1);
    for (int d = 1; d < k; ++d)
      if (k % d == 0) num = uni_exact_div(num, build(d));
    cache.emplace(k, num);
    return num;
  };
  UniPoly p = build(m);
  return p;
}

Cyclo::Cyclo(int m, std::vector<Rat> coeffs) : m_(m), c_(std::move(coeffs)) {
  const size_t want = static_cast<size_t>(totient(m));
  if (c_.size() != want)
    throw AlgebraError("Cyclo: coefficient vector has wrong length");
}

Cyclo Cyclo::zeta_power(int m, long power) {
  if (m < 1) throw AlgebraError("Cyclo: order must be positive");
  long p = ((power % m) + m) % m;
  if (m == 1) return Cyclo(Rat(1));
  UniPoly t(static_cast<size_t>(p) + 1, Rat(0));
  t[static_cast<size_t>(p)] = Rat(1);
  auto [q, r] = uni_divmod(std::move(t), cyclotomic_polynomial(m));
  std::vector<Rat> c(static_cast<size_t>(totient(m)), Rat(0));
  for (size_t i = 0; i < r.size(); ++i) c[i] = r[i];
  return Cyclo(m, std::move(c));
}

bool Cyclo::is_zero() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

bool Cyclo::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return false;
  return true;
}

Rat Cyclo::rational_value() const {
  if (!is_rational()) throw AlgebraError("Cyclo: element is not rational");
  return c_.empty() ? Rat(0) : c_[0];
}

Cyclo Cyclo::lifted_to(int m) const {
  if (m_ == m) return *this;
  if (m_ != 1) throw DomainMismatch("Cyclo: mixed cyclotomic orders");
  std::vector<Rat> c(static_cast<size_t>(totient(m)), Rat(0));
  c[0] = c_.empty() ? Rat(0) : c_[0];
  return Cyclo(m, std::move(c));
}

Cyclo Cyclo::operator-() const {
  Cyclo r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
  if (m_ != o.m_) {
    if (m_ == 1)
      *this = lifted_to(o.m_);
    else
      return *this += o.lifted_to(m_);
  }
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) { return *this += -o; }

Cyclo& Cyclo::operator*=(const Cyclo& o) {
  if (m_ != o.m_) {
    if (m_ == 1)
      *this = lifted_to(o.m_);
    else
      return *this *= o.lifted_to(m_);
  }
  if (m_ == 1) {
    c_[0] = (c_.empty() ? Rat(0) : c_[0]) * (o.c_.empty() ? Rat(0) : o.c_[0]);
    return *this;
  }
  UniPoly prod = uni_mul(uni_trim(c_), uni_trim(o.c_));
  auto [q, r] = uni_divmod(std::move(prod), cyclotomic_polynomial(m_));
  std::vector<Rat> c(c_.size(), Rat(0));
  for (size_t i = 0; i < r.size(); ++i) c[i] = r[i];
  c_ = std::move(c);
  return *this;
}

Cyclo Cyclo::inv() const {
  if (is_zero()) throw AlgebraError("Cyclo: inverse of zero");
  if (m_ == 1) return Cyclo(c_[0].inv());
  // Extended Euclid: u * this + v * Phi_m = 1 in Q[t].
  UniPoly a = uni_trim(c_), b = cyclotomic_polynomial(m_);
  UniPoly u0{Rat(1)}, u1{};
  UniPoly r0 = a, r1 = b;
  while (!r1.empty()) {
    auto [q, r] = uni_divmod(r0, r1);
    UniPoly u2 = uni_sub(u0, uni_mul(q, u1));
    r0 = std::move(r1);
    r1 = std::move(r);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  // r0 = gcd (a nonzero constant since Phi_m is irreducible over Q).
  if (r0.size() != 1)
    throw AlgebraError("Cyclo: inverse failed (gcd not constant)");
  Rat scale = r0[0].inv();
  auto [q, rem] = uni_divmod(uni_mul(u0, {scale}), b);
  std::vector<Rat> c(c_.size(), Rat(0));
  for (size_t i = 0; i < rem.size(); ++i) c[i] = rem[i];
  return Cyclo(m_, std::move(c));
}

bool operator==(const Cyclo& a, const Cyclo& b) {
  if (a.m_ == b.m_) return a.c_ == b.c_;
  if (a.m_ == 1) return a.lifted_to(b.m_) == b;
  if (b.m_ == 1) return a == b.lifted_to(a.m_);
  return false;
}

std::string Cyclo::str() const {
  if (is_rational()) return (c_.empty() ? Rat(0) : c_[0]).str();
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    std::string cs = c_[i].str();
    bool neg = cs[0] == '-';
    if (first) {
      if (neg) { os << "-"; cs = cs.substr(1); }
    } else {
      os << (neg ? " - " : " + ");
      if (neg) cs = cs.substr(1);
    }
    first = false;
    if (i == 0) {
      os << cs;
    } else {
      if (cs != "1") os << cs << "*";
      os << "zeta";
      if (i > 1) os << "^" << i;
    }
  }
  std::string s = os.str();
  return s.empty() ? "0" : ("(" + s + ")");
}

}  // namespace dunkl

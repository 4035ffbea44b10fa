#include "stringy/poly.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace stringy {

Poly Poly::constant(Int c) { return monomial(std::move(c), 0, 0); }

Poly Poly::monomial(Int c, long a, long b) {
  Poly p;
  if (c != 0) p.terms_.emplace(Key{a, b}, std::move(c));
  return p;
}

bool Poly::is_univariate() const {
  for (const auto& [k, c] : terms_)
    if (k.second != 0) return false;
  return true;
}

bool Poly::is_polynomial() const {
  for (const auto& [k, c] : terms_)
    if (k.first < 0 || k.second < 0) return false;
  return true;
}

bool Poly::is_homogeneous(long total) const {
  for (const auto& [k, c] : terms_)
    if (k.first + k.second != total) return false;
  return true;
}

long Poly::u_min() const {
  long m = 0;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (first || k.first < m) m = k.first;
    first = false;
  }
  return m;
}

long Poly::u_max() const {
  long m = 0;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (first || k.first > m) m = k.first;
    first = false;
  }
  return m;
}

long Poly::v_min() const {
  long m = 0;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (first || k.second < m) m = k.second;
    first = false;
  }
  return m;
}

long Poly::v_max() const {
  long m = 0;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (first || k.second > m) m = k.second;
    first = false;
  }
  return m;
}

long Poly::total_degree() const {
  long m = -1;
  for (const auto& [k, c] : terms_) m = std::max(m, k.first + k.second);
  return m;
}

Int Poly::coeff(long a, long b) const {
  auto it = terms_.find(Key{a, b});
  return it == terms_.end() ? Int(0) : it->second;
}

void Poly::add_term(long a, long b, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(Key{a, b}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_)
      r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return r;
}

Poly Poly::pow(long e) const {
  if (e < 0) throw DimensionError("Poly::pow: negative exponent");
  Poly r = constant(1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

Poly Poly::subst(const Monomial& fu, const Monomial& fv) const {
  Poly r;
  for (const auto& [k, c] : terms_) {
    long a = k.first, b = k.second;
    int sign = 1;
    if (fu.sign < 0 && (a & 1)) sign = -sign;
    if (fv.sign < 0 && (b & 1)) sign = -sign;
    r.add_term(a * fu.du + b * fv.du, a * fu.dv + b * fv.dv, sign < 0 ? Int(-c) : c);
  }
  return r;
}

Poly Poly::truncate_below(long bound) const {
  require_univariate("truncate_below");
  Poly r;
  for (const auto& [k, c] : terms_)
    if (k.first < bound) r.terms_.emplace(k, c);
  return r;
}

Poly Poly::truncate_below_half(long n) const {
  require_univariate("truncate_below_half");
  Poly r;
  for (const auto& [k, c] : terms_)
    if (2 * k.first < n) r.terms_.emplace(k, c);
  return r;
}

void Poly::require_univariate(const char* what) const {
  if (!is_univariate())
    throw DimensionError(std::string(what) + ": univariate polynomial required");
}

Poly Poly::exact_div(const Poly& p, const Poly& q) {
  if (q.is_zero()) throw IntegrityError("exact_div: division by zero");
  if (p.is_zero()) return Poly();
  // Shift both into the honest polynomial ring; undo the shift at the end.
  long pu = -std::min(0L, p.u_min()), pv = -std::min(0L, p.v_min());
  long qu = -std::min(0L, q.u_min()), qv = -std::min(0L, q.v_min());
  Poly pp = Poly::monomial(1, pu, pv) * p;
  Poly qq = Poly::monomial(1, qu, qv) * q;
  long shift_u = pu - qu;
  long shift_v = pv - qv;

  // Leading term under lex order (u then v) = last entry of the map.
  auto leading = [](const Poly& x) { return *x.terms_.rbegin(); };
  const auto [kq, cq] = leading(qq);

  Poly quot;
  Poly rem = pp;
  while (!rem.is_zero()) {
    const auto [kr, cr] = leading(rem);
    if (kr.first < kq.first || kr.second < kq.second || cr % cq != 0)
      throw IntegrityError("exact_div: non-exact division");
    Poly m = Poly::monomial(cr / cq, kr.first - kq.first, kr.second - kq.second);
    quot += m;
    rem -= m * qq;
  }
  return Poly::monomial(1, -shift_u, -shift_v) * quot;
}

std::string Poly::str(const char* uname, const char* vname) const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Key, Int>> ts(terms_.begin(), terms_.end());
  std::sort(ts.begin(), ts.end(), [](const auto& x, const auto& y) {
    long tx = x.first.first + x.first.second;
    long ty = y.first.first + y.first.second;
    if (tx != ty) return tx < ty;
    return x.first.first > y.first.first;
  });
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : ts) {
    Int mag = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    std::string mono;
    auto var = [&mono](const char* name, long e) {
      if (e == 0) return;
      if (!mono.empty()) mono += "*";
      mono += name;
      if (e != 1) mono += "^" + std::to_string(e);
    };
    var(uname, k.first);
    var(vname, k.second);
    if (mono.empty()) {
      out << mag.str();
    } else if (mag == 1) {
      out << mono;
    } else {
      out << mag.str() << "*" << mono;
    }
  }
  return out.str();
}

}  // namespace stringy

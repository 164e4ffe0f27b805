#include "refl/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace refl {

long euler_phi(long n) {
  long r = 0;
  for (long k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) ++r;
  return r;
}

namespace {

// exact division of integer polynomials, remainder must vanish
std::vector<long> poly_div_exact(std::vector<long> a, const std::vector<long>& b) {
  long db = static_cast<long>(b.size()) - 1;
  long lb = b.back();
  std::vector<long> q(a.size() - db, 0);
  for (long i = static_cast<long>(a.size()) - 1; i >= db; --i) {
    long c = a[i];
    if (c == 0) continue;
    if (c % lb != 0) throw Error("cyclotomic polynomial division not exact");
    long f = c / lb;
    q[i - db] = f;
    for (long j = 0; j <= db; ++j) a[i - db + j] -= f * b[j];
  }
  for (long x : a)
    if (x != 0) throw Error("cyclotomic polynomial division left a remainder");
  return q;
}

std::vector<long> cyclotomic_poly(long n, const std::map<long, std::vector<long>>& memo) {
  std::vector<long> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (long d = 1; d < n; ++d)
    if (n % d == 0) num = poly_div_exact(std::move(num), memo.at(d));
  return num;
}

ConductorData build_conductor_data(long n, const std::map<long, std::vector<long>>& polys) {
  ConductorData cd;
  cd.n = n;
  cd.phi = euler_phi(n);
  cd.cyclo_poly = polys.at(n);
  long phi = cd.phi;
  // z^(phi+i) rows via the relation z^phi = -(Phi[0] + ... + Phi[phi-1] z^(phi-1))
  std::vector<long> cur(phi, 0);
  if (phi >= 1) {
    for (long i = 0; i < phi; ++i) cur[i] = -cd.cyclo_poly[i];
  }
  for (long i = 0; i + 1 < phi; ++i) {
    cd.red_rows.push_back(cur);
    std::vector<long> nxt(phi, 0);
    long top = cur[phi - 1];
    for (long j = 0; j + 1 < phi; ++j) nxt[j + 1] = cur[j];
    if (top != 0)
      for (long j = 0; j < phi; ++j) nxt[j] -= top * cd.cyclo_poly[j];
    cur = std::move(nxt);
  }
  if (phi == 1) cd.red_rows.clear();
  // powers of z for k in [0, n)
  std::vector<long> p(phi, 0);
  p[0] = 1;
  cd.powers.push_back(p);
  for (long k = 1; k < n; ++k) {
    std::vector<long> nxt(phi, 0);
    long top = p[phi - 1];
    for (long j = 0; j + 1 < phi; ++j) nxt[j + 1] = p[j];
    if (top != 0)
      for (long j = 0; j < phi; ++j) nxt[j] -= top * cd.cyclo_poly[j];
    p = std::move(nxt);
    cd.powers.push_back(p);
  }
  return cd;
}

std::mutex g_cache_mutex;
std::map<long, ConductorData>& cache() {
  static std::map<long, ConductorData> c;
  return c;
}
std::map<long, std::vector<long>>& poly_cache() {
  static std::map<long, std::vector<long>> c;
  return c;
}

void ensure_polys_upto(long n) {
  auto& pc = poly_cache();
  for (long d = 1; d <= n; ++d) {
    if (n % d == 0 && !pc.count(d)) pc[d] = cyclotomic_poly(d, pc);
  }
}

}  // namespace

const ConductorData& conductor_data(long n) {
  if (n < 1) throw UsageError("conductor must be positive");
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  auto& c = cache();
  auto it = c.find(n);
  if (it != c.end()) return it->second;
  ensure_polys_upto(n);
  auto [pos, ok] = c.emplace(n, build_conductor_data(n, poly_cache()));
  return pos->second;
}

Cyclotomic Cyclotomic::zero(long conductor) {
  const auto& cd = conductor_data(conductor);
  return Cyclotomic(conductor, std::vector<Rational>(cd.phi));
}

Cyclotomic Cyclotomic::one(long conductor) {
  auto v = zero(conductor);
  v.coeffs_[0] = Rational(1);
  return v;
}

Cyclotomic Cyclotomic::from_rational(long conductor, const Rational& q) {
  auto v = zero(conductor);
  v.coeffs_[0] = q;
  return v;
}

Cyclotomic Cyclotomic::root_of_unity(long conductor, long k) {
  const auto& cd = conductor_data(conductor);
  k %= conductor;
  if (k < 0) k += conductor;
  std::vector<Rational> out(cd.phi);
  const auto& row = cd.powers[k];
  for (long i = 0; i < cd.phi; ++i) out[i] = Rational(row[i]);
  return Cyclotomic(conductor, std::move(out));
}

Cyclotomic Cyclotomic::canonicalize(long conductor, std::span<const Rational> raw) {
  const auto& cd = conductor_data(conductor);
  std::vector<Rational> out(cd.phi);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i].is_zero()) continue;
    const auto& row = cd.powers[static_cast<long>(i) % conductor];
    for (long j = 0; j < cd.phi; ++j)
      if (row[j] != 0) out[j] += raw[i] * Rational(row[j]);
  }
  return Cyclotomic(conductor, std::move(out));
}

bool Cyclotomic::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return q.is_zero(); });
}

bool Cyclotomic::is_one() const {
  if (!coeffs_[0].is_one()) return false;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return false;
  return true;
}

namespace {
// binary op with automatic embedding
std::pair<Cyclotomic, Cyclotomic> aligned(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor() == b.conductor()) return {a, b};
  long m = std::lcm(a.conductor(), b.conductor());
  return {a.embedded(m), b.embedded(m)};
}
}  // namespace

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  auto [a, b] = aligned(*this, o);
  std::vector<Rational> out = a.coeffs_;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b.coeffs_[i];
  return Cyclotomic(a.conductor_, std::move(out));
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
  auto [a, b] = aligned(*this, o);
  std::vector<Rational> out = a.coeffs_;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b.coeffs_[i];
  return Cyclotomic(a.conductor_, std::move(out));
}

Cyclotomic Cyclotomic::operator-() const {
  std::vector<Rational> out(coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = -coeffs_[i];
  return Cyclotomic(conductor_, std::move(out));
}

Cyclotomic Cyclotomic::scaled(const Rational& q) const {
  std::vector<Rational> out(coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeffs_[i] * q;
  return Cyclotomic(conductor_, std::move(out));
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  auto [a, b] = aligned(*this, o);
  const auto& cd = conductor_data(a.conductor_);
  long phi = cd.phi;
  std::vector<Rational> conv(2 * phi - 1);
  for (long i = 0; i < phi; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (long j = 0; j < phi; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      conv[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  std::vector<Rational> out(conv.begin(), conv.begin() + phi);
  for (long k = phi; k < 2 * phi - 1; ++k) {
    if (conv[k].is_zero()) continue;
    const auto& row = cd.red_rows[k - phi];
    for (long j = 0; j < phi; ++j)
      if (row[j] != 0) out[j] += conv[k] * Rational(row[j]);
  }
  return Cyclotomic(a.conductor_, std::move(out));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw DivisionByZero("inverting zero cyclotomic");
  const auto& cd = conductor_data(conductor_);
  long phi = cd.phi;
  if (phi == 1) return from_rational(conductor_, Rational(1) / coeffs_[0]);
  // extended euclid over Q[x] against Phi_n: find s with s*a = 1 (mod Phi)
  using Poly = std::vector<Rational>;
  auto deg = [](const Poly& p) {
    long d = static_cast<long>(p.size()) - 1;
    while (d >= 0 && p[d].is_zero()) --d;
    return d;
  };
  Poly r0(cd.cyclo_poly.size());
  for (std::size_t i = 0; i < cd.cyclo_poly.size(); ++i) r0[i] = Rational(cd.cyclo_poly[i]);
  Poly r1(coeffs_.begin(), coeffs_.end());
  Poly s0{Rational(0)}, s1{Rational(1)};
  while (deg(r1) > 0) {
    Poly rem = r0, s = s0;
    long d1 = deg(r1);
    const Rational lead_inv = Rational(1) / r1[d1];
    while (deg(rem) >= d1) {
      long dr = deg(rem);
      Rational c = rem[dr] * lead_inv;
      long shift = dr - d1;
      if (static_cast<long>(s.size()) < static_cast<long>(s1.size()) + shift)
        s.resize(s1.size() + shift);
      for (long i = 0; i <= d1; ++i) rem[i + shift] -= c * r1[i];
      for (std::size_t i = 0; i < s1.size(); ++i) s[i + shift] -= c * s1[i];
    }
    r0 = std::move(r1);
    s0 = std::move(s1);
    r1 = std::move(rem);
    s1 = std::move(s);
  }
  if (deg(r1) != 0) throw Error("cyclotomic inverse: gcd not constant");
  Rational lead = r1[deg(r1)];
  std::vector<Rational> raw(s1.size());
  for (std::size_t i = 0; i < s1.size(); ++i) raw[i] = s1[i] / lead;
  return canonicalize(conductor_, raw);
}

Cyclotomic Cyclotomic::galois(long k) const {
  long n = conductor_;
  k %= n;
  if (k < 0) k += n;
  if (std::gcd(k, n) != 1) throw UsageError("galois exponent not coprime to conductor");
  const auto& cd = conductor_data(n);
  std::vector<Rational> out(cd.phi);
  for (long i = 0; i < cd.phi; ++i) {
    if (coeffs_[i].is_zero()) continue;
    const auto& row = cd.powers[(i * k) % n];
    for (long j = 0; j < cd.phi; ++j)
      if (row[j] != 0) out[j] += coeffs_[i] * Rational(row[j]);
  }
  return Cyclotomic(n, std::move(out));
}

Cyclotomic Cyclotomic::conjugate() const {
  if (conductor_ == 1) return *this;
  return galois(conductor_ - 1);
}

Cyclotomic Cyclotomic::embedded(long m) const {
  if (m == conductor_) return *this;
  if (m % conductor_ != 0) throw UsageError("embedding target is not a multiple conductor");
  const auto& cd = conductor_data(m);
  long stride = m / conductor_;
  std::vector<Rational> out(cd.phi);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    const auto& row = cd.powers[(static_cast<long>(i) * stride) % m];
    for (long j = 0; j < cd.phi; ++j)
      if (row[j] != 0) out[j] += coeffs_[i] * Rational(row[j]);
  }
  return Cyclotomic(m, std::move(out));
}

namespace {

// Solve E x = c over Q where E has full column rank; nullopt when inconsistent.
std::optional<std::vector<Rational>> solve_exact(std::vector<std::vector<Rational>> E,
                                                 std::vector<Rational> c, long cols) {
  long rows = static_cast<long>(E.size());
  std::vector<long> pivot_row(cols, -1);
  long prow = 0;
  for (long col = 0; col < cols && prow < rows; ++col) {
    long sel = -1;
    for (long i = prow; i < rows; ++i)
      if (!E[i][col].is_zero()) { sel = i; break; }
    if (sel < 0) continue;
    std::swap(E[sel], E[prow]);
    std::swap(c[sel], c[prow]);
    Rational inv = Rational(1) / E[prow][col];
    for (long j = col; j < cols; ++j) E[prow][j] *= inv;
    c[prow] *= inv;
    for (long i = 0; i < rows; ++i) {
      if (i == prow || E[i][col].is_zero()) continue;
      Rational f = E[i][col];
      for (long j = col; j < cols; ++j) E[i][j] -= f * E[prow][j];
      c[i] -= f * c[prow];
    }
    pivot_row[col] = prow;
    ++prow;
  }
  // consistency: rows below prow must have zero rhs
  for (long i = prow; i < rows; ++i)
    if (!c[i].is_zero()) return std::nullopt;
  std::vector<Rational> x(cols);
  for (long col = 0; col < cols; ++col) {
    if (pivot_row[col] < 0) return std::nullopt;  // shouldn't happen: basis columns independent
    x[col] = c[pivot_row[col]];
  }
  return x;
}

}  // namespace

Cyclotomic Cyclotomic::minimized() const {
  long n = conductor_;
  if (n == 1) return *this;
  if (is_rational()) return from_rational(1, coeffs_[0]);
  const auto& cd = conductor_data(n);
  for (long m = 2; m < n; ++m) {
    if (n % m != 0) continue;
    long phim = euler_phi(m);
    // columns: zeta_m^j embedded at n
    std::vector<std::vector<Rational>> E(cd.phi, std::vector<Rational>(phim));
    long stride = n / m;
    for (long j = 0; j < phim; ++j) {
      const auto& row = cd.powers[(j * stride) % n];
      for (long i = 0; i < cd.phi; ++i) E[i][j] = Rational(row[i]);
    }
    auto x = solve_exact(std::move(E), coeffs_, phim);
    if (x) return Cyclotomic(m, std::move(*x));
  }
  return *this;
}

std::optional<long> Cyclotomic::root_of_unity_order() const {
  if (is_zero()) return std::nullopt;
  long bound = std::lcm(2L, conductor_);
  Cyclotomic p = *this;
  for (long k = 1; k <= bound; ++k) {
    if (p.is_one()) return k;
    p = p * *this;
  }
  return std::nullopt;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  if (conductor_ == o.conductor_) return coeffs_ == o.coeffs_;
  Cyclotomic a = minimized(), b = o.minimized();
  return a.conductor_ == b.conductor_ && a.coeffs_ == b.coeffs_;
}

int Cyclotomic::compare(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ != b.conductor_)
    throw UsageError("canonical comparison requires a common conductor");
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    int c = Rational::compare(a.coeffs_[i], b.coeffs_[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::size_t Cyclotomic::hash() const {
  std::size_t h = static_cast<std::size_t>(conductor_) * 0x9e3779b97f4a7c15ULL;
  for (const auto& q : coeffs_) h = hash_combine(h, q.hash());
  return h;
}

std::string Cyclotomic::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    std::string t = coeffs_[i].str();
    if (!first) {
      if (t[0] == '-') {
        os << " - ";
        t = t.substr(1);
      } else {
        os << " + ";
      }
    }
    if (i == 0) {
      os << t;
    } else {
      if (t == "1")
        os << "z";
      else if (t == "-1" && first)
        os << "-z";
      else
        os << t << "*z";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  if (first) return "0";
  return os.str();
}

std::vector<std::string> Cyclotomic::coeff_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& q : coeffs_) out.push_back(q.str());
  return out;
}

}  // namespace refl

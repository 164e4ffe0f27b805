#include "refl/element.hpp"

#include <algorithm>

#include "refl/errors.hpp"

namespace refl {

long element_rank(const Element& e) {
  if (const auto* m = std::get_if<MonomialElement>(&e)) return static_cast<long>(m->perm.size());
  return std::get<DenseElement>(e).rank;
}

bool is_identity(const Element& e) {
  if (const auto* m = std::get_if<MonomialElement>(&e)) {
    for (std::size_t i = 0; i < m->perm.size(); ++i)
      if (m->perm[i] != i || m->exps[i] != 0) return false;
    return true;
  }
  const auto& d = std::get<DenseElement>(e);
  for (long i = 0; i < d.rank; ++i)
    for (long j = 0; j < d.rank; ++j) {
      if (i == j && !d.at(i, j).is_one()) return false;
      if (i != j && !d.at(i, j).is_zero()) return false;
    }
  return true;
}

Element identity_like(const Element& e) {
  if (const auto* m = std::get_if<MonomialElement>(&e)) {
    MonomialElement id;
    id.modulus = m->modulus;
    id.perm.resize(m->perm.size());
    id.exps.assign(m->exps.size(), 0);
    for (std::size_t i = 0; i < id.perm.size(); ++i) id.perm[i] = static_cast<std::uint16_t>(i);
    return id;
  }
  const auto& d = std::get<DenseElement>(e);
  DenseElement id;
  id.conductor = d.conductor;
  id.rank = d.rank;
  id.entries.assign(d.rank * d.rank, Cyclotomic::zero(d.conductor));
  for (long i = 0; i < d.rank; ++i) id.at(i, i) = Cyclotomic::one(d.conductor);
  return id;
}

Element multiply(const Element& a, const Element& b) {
  if (std::holds_alternative<MonomialElement>(a)) {
    const auto& x = std::get<MonomialElement>(a);
    const auto& y = std::get<MonomialElement>(b);
    // (xy) e_i = x (z^{ky_i} e_{sy(i)}) = z^{ky_i + kx_{sy(i)}} e_{sx(sy(i))}
    MonomialElement out;
    out.modulus = x.modulus;
    std::size_t r = x.perm.size();
    out.perm.resize(r);
    out.exps.resize(r);
    for (std::size_t i = 0; i < r; ++i) {
      std::uint16_t mid = y.perm[i];
      out.perm[i] = x.perm[mid];
      out.exps[i] = static_cast<std::uint16_t>((y.exps[i] + x.exps[mid]) % x.modulus);
    }
    return out;
  }
  const auto& x = std::get<DenseElement>(a);
  const auto& y = std::get<DenseElement>(b);
  DenseElement out;
  out.conductor = x.conductor;
  out.rank = x.rank;
  out.entries.assign(x.rank * x.rank, Cyclotomic::zero(x.conductor));
  for (long i = 0; i < x.rank; ++i)
    for (long k = 0; k < x.rank; ++k) {
      if (x.at(i, k).is_zero()) continue;
      for (long j = 0; j < x.rank; ++j) {
        if (y.at(k, j).is_zero()) continue;
        out.at(i, j) = out.at(i, j) + x.at(i, k) * y.at(k, j);
      }
    }
  return out;
}

Element inverse(const Element& e) {
  if (const auto* m = std::get_if<MonomialElement>(&e)) {
    MonomialElement out;
    out.modulus = m->modulus;
    std::size_t r = m->perm.size();
    out.perm.resize(r);
    out.exps.resize(r);
    for (std::size_t i = 0; i < r; ++i) {
      out.perm[m->perm[i]] = static_cast<std::uint16_t>(i);
      out.exps[m->perm[i]] =
          static_cast<std::uint16_t>((m->modulus - m->exps[i]) % m->modulus);
    }
    return out;
  }
  // Gauss-Jordan over the cyclotomic field
  const auto& d = std::get<DenseElement>(e);
  long r = d.rank;
  std::vector<std::vector<Cyclotomic>> M(r);
  for (long i = 0; i < r; ++i) {
    M[i].reserve(2 * r);
    for (long j = 0; j < r; ++j) M[i].push_back(d.at(i, j));
    for (long j = 0; j < r; ++j)
      M[i].push_back(i == j ? Cyclotomic::one(d.conductor) : Cyclotomic::zero(d.conductor));
  }
  for (long col = 0; col < r; ++col) {
    long piv = -1;
    for (long i = col; i < r; ++i)
      if (!M[i][col].is_zero()) { piv = i; break; }
    if (piv < 0) throw UsageError("inverting a singular matrix");
    std::swap(M[col], M[piv]);
    Cyclotomic inv = M[col][col].inverse();
    for (long j = 0; j < 2 * r; ++j) M[col][j] = M[col][j] * inv;
    for (long i = 0; i < r; ++i) {
      if (i == col || M[i][col].is_zero()) continue;
      Cyclotomic f = M[i][col];
      for (long j = col; j < 2 * r; ++j) M[i][j] = M[i][j] - f * M[col][j];
    }
  }
  DenseElement out;
  out.conductor = d.conductor;
  out.rank = r;
  out.entries.reserve(r * r);
  for (long i = 0; i < r; ++i)
    for (long j = 0; j < r; ++j) out.entries.push_back(M[i][j + r]);
  return out;
}

namespace {
int perm_sign(const std::vector<std::uint16_t>& p) {
  std::vector<bool> seen(p.size(), false);
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::size_t j = i, len = 0;
    while (!seen[j]) {
      seen[j] = true;
      j = p[j];
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}
}  // namespace

Cyclotomic determinant(const Element& e) {
  if (const auto* m = std::get_if<MonomialElement>(&e)) {
    long s = 0;
    for (auto k : m->exps) s += k;
    Cyclotomic z = Cyclotomic::root_of_unity(m->modulus, s);
    return perm_sign(m->perm) > 0 ? z : -z;
  }
  // fraction-free enough for rank <= 8: plain elimination with exact division
  DenseElement d = std::get<DenseElement>(e);
  long r = d.rank;
  Cyclotomic det = Cyclotomic::one(d.conductor);
  for (long col = 0; col < r; ++col) {
    long piv = -1;
    for (long i = col; i < r; ++i)
      if (!d.at(i, col).is_zero()) { piv = i; break; }
    if (piv < 0) return Cyclotomic::zero(d.conductor);
    if (piv != col) {
      for (long j = 0; j < r; ++j) std::swap(d.at(col, j), d.at(piv, j));
      det = -det;
    }
    det = det * d.at(col, col);
    Cyclotomic inv = d.at(col, col).inverse();
    for (long i = col + 1; i < r; ++i) {
      if (d.at(i, col).is_zero()) continue;
      Cyclotomic f = d.at(i, col) * inv;
      for (long j = col; j < r; ++j) d.at(i, j) = d.at(i, j) - f * d.at(col, j);
    }
  }
  return det;
}

DenseElement to_dense(const Element& e, long conductor) {
  if (const auto* d = std::get_if<DenseElement>(&e)) {
    if (d->conductor == conductor) return *d;
    DenseElement out;
    out.conductor = conductor;
    out.rank = d->rank;
    out.entries.reserve(d->entries.size());
    for (const auto& x : d->entries) out.entries.push_back(x.embedded(conductor));
    return out;
  }
  const auto& m = std::get<MonomialElement>(e);
  long r = static_cast<long>(m.perm.size());
  DenseElement out;
  out.conductor = conductor;
  out.rank = r;
  out.entries.assign(r * r, Cyclotomic::zero(conductor));
  if (conductor % m.modulus != 0) throw UsageError("conductor incompatible with modulus");
  for (long i = 0; i < r; ++i) {
    long k = (static_cast<long>(m.exps[i]) * conductor) / m.modulus;
    out.at(m.perm[i], i) = Cyclotomic::root_of_unity(conductor, k);
  }
  return out;
}

std::vector<Cyclotomic> apply(const Element& e, const std::vector<Cyclotomic>& v) {
  if (const auto* m = std::get_if<MonomialElement>(&e)) {
    std::size_t r = m->perm.size();
    std::vector<Cyclotomic> out(r, Cyclotomic::zero(v[0].conductor()));
    for (std::size_t i = 0; i < r; ++i) {
      if (v[i].is_zero()) continue;
      long cond = v[i].conductor();
      if (cond % m->modulus != 0)
        throw UsageError("vector conductor incompatible with monomial modulus");
      long k = (static_cast<long>(m->exps[i]) * cond) / m->modulus;
      out[m->perm[i]] = out[m->perm[i]] + v[i] * Cyclotomic::root_of_unity(cond, k);
    }
    return out;
  }
  const auto& d = std::get<DenseElement>(e);
  std::vector<Cyclotomic> out(d.rank, Cyclotomic::zero(d.conductor));
  for (long i = 0; i < d.rank; ++i)
    for (long j = 0; j < d.rank; ++j) {
      if (d.at(i, j).is_zero() || v[j].is_zero()) continue;
      out[i] = out[i] + d.at(i, j) * v[j];
    }
  return out;
}

std::vector<Cyclotomic> act_on_form(const Element& e, const std::vector<Cyclotomic>& alpha) {
  Element ei = inverse(e);
  // (g.alpha)_j = sum_i alpha_i * (g^{-1})_{ij}
  if (const auto* m = std::get_if<MonomialElement>(&ei)) {
    std::size_t r = m->perm.size();
    std::vector<Cyclotomic> out(r, Cyclotomic::zero(alpha[0].conductor()));
    for (std::size_t j = 0; j < r; ++j) {
      const Cyclotomic& a = alpha[m->perm[j]];
      if (a.is_zero()) continue;
      long cond = a.conductor();
      if (cond % m->modulus != 0)
        throw UsageError("form conductor incompatible with monomial modulus");
      long k = (static_cast<long>(m->exps[j]) * cond) / m->modulus;
      out[j] = a * Cyclotomic::root_of_unity(cond, k);
    }
    return out;
  }
  const auto& d = std::get<DenseElement>(ei);
  std::vector<Cyclotomic> out(d.rank, Cyclotomic::zero(d.conductor));
  for (long j = 0; j < d.rank; ++j)
    for (long i = 0; i < d.rank; ++i) {
      if (alpha[i].is_zero() || d.at(i, j).is_zero()) continue;
      out[j] = out[j] + alpha[i] * d.at(i, j);
    }
  return out;
}

Cyclotomic normalize_projective(std::vector<Cyclotomic>& v) {
  for (auto& x : v) {
    if (x.is_zero()) continue;
    Cyclotomic c = x;
    Cyclotomic inv = c.inverse();
    for (auto& y : v) y = y * inv;
    return c;
  }
  throw UsageError("normalizing the zero vector");
}

std::optional<ReflectionData> reflection_data(const Element& e, long conductor) {
  if (const auto* m = std::get_if<MonomialElement>(&e)) {
    // diag part: reflection iff exactly one nonzero exponent on a fixed point
    // transposition part: one 2-cycle with exponent sum 0 mod modulus
    std::size_t r = m->perm.size();
    std::vector<std::size_t> moved;
    for (std::size_t i = 0; i < r; ++i)
      if (m->perm[i] != i) moved.push_back(i);
    auto zero = Cyclotomic::zero(conductor);
    if (moved.empty()) {
      long nz = -1;
      for (std::size_t i = 0; i < r; ++i) {
        if (m->exps[i] != 0) {
          if (nz >= 0) return std::nullopt;
          nz = static_cast<long>(i);
        }
      }
      if (nz < 0) return std::nullopt;  // identity
      std::vector<Cyclotomic> alpha(r, zero), line(r, zero);
      alpha[nz] = Cyclotomic::one(conductor);
      line[nz] = Cyclotomic::one(conductor);
      return ReflectionData{std::move(alpha), std::move(line)};
    }
    if (moved.size() != 2) return std::nullopt;
    std::size_t i = moved[0], j = moved[1];
    if (m->perm[i] != j || m->perm[j] != i) return std::nullopt;
    for (std::size_t k = 0; k < r; ++k)
      if (k != i && k != j && m->exps[k] != 0) return std::nullopt;
    if ((m->exps[i] + m->exps[j]) % m->modulus != 0) return std::nullopt;
    // block [[0, z^kj],[z^ki, 0]] on (i,j): row space of (s - id) is spanned
    // by x_i - z^kj x_j, the image (= the line D) by e_i - z^ki e_j
    long cond = conductor;
    if (cond % m->modulus != 0) throw UsageError("conductor incompatible with modulus");
    long kj = (static_cast<long>(m->exps[j]) * cond) / m->modulus;
    long ki = (static_cast<long>(m->exps[i]) * cond) / m->modulus;
    std::vector<Cyclotomic> alpha(r, zero), line(r, zero);
    alpha[i] = Cyclotomic::one(cond);
    alpha[j] = -Cyclotomic::root_of_unity(cond, kj);
    line[i] = Cyclotomic::one(cond);
    line[j] = -Cyclotomic::root_of_unity(cond, ki);
    return ReflectionData{std::move(alpha), std::move(line)};
  }
  const auto& d = std::get<DenseElement>(e);
  long r = d.rank;
  // M - id must have rank exactly 1
  std::vector<std::vector<Cyclotomic>> MI(r, std::vector<Cyclotomic>(r, Cyclotomic::zero(d.conductor)));
  bool any = false;
  for (long i = 0; i < r; ++i)
    for (long j = 0; j < r; ++j) {
      Cyclotomic v = d.at(i, j);
      if (i == j) v = v - Cyclotomic::one(d.conductor);
      if (!v.is_zero()) any = true;
      MI[i][j] = std::move(v);
    }
  if (!any) return std::nullopt;
  long arow = -1;
  for (long i = 0; i < r; ++i)
    if (std::any_of(MI[i].begin(), MI[i].end(), [](const Cyclotomic& x) { return !x.is_zero(); })) {
      arow = i;
      break;
    }
  long j0 = -1;
  for (long j = 0; j < r; ++j)
    if (!MI[arow][j].is_zero()) { j0 = j; break; }
  Cyclotomic inv0 = MI[arow][j0].inverse();
  // all rows must be multiples of row arow
  for (long i = 0; i < r; ++i) {
    Cyclotomic f = MI[i][j0] * inv0;
    for (long j = 0; j < r; ++j)
      if (!(MI[i][j] - f * MI[arow][j]).is_zero()) return std::nullopt;
  }
  std::vector<Cyclotomic> alpha(MI[arow].begin(), MI[arow].end());
  std::vector<Cyclotomic> line(r, Cyclotomic::zero(d.conductor));
  for (long i = 0; i < r; ++i) line[i] = MI[i][j0];
  normalize_projective(alpha);
  normalize_projective(line);
  return ReflectionData{std::move(alpha), std::move(line)};
}

int element_compare(const Element& a, const Element& b) {
  if (const auto* x = std::get_if<MonomialElement>(&a)) {
    const auto& y = std::get<MonomialElement>(b);
    if (x->perm != y.perm) return x->perm < y.perm ? -1 : 1;
    if (x->exps != y.exps) return x->exps < y.exps ? -1 : 1;
    return 0;
  }
  const auto& x = std::get<DenseElement>(a);
  const auto& y = std::get<DenseElement>(b);
  for (std::size_t i = 0; i < x.entries.size(); ++i) {
    int c = Cyclotomic::compare(x.entries[i], y.entries[i]);
    if (c != 0) return c;
  }
  return 0;
}

bool element_equal(const Element& a, const Element& b) {
  if (a.index() != b.index()) return false;
  if (const auto* x = std::get_if<MonomialElement>(&a))
    return *x == std::get<MonomialElement>(b);
  return std::get<DenseElement>(a) == std::get<DenseElement>(b);
}

std::size_t element_hash(const Element& e) {
  if (const auto* m = std::get_if<MonomialElement>(&e)) {
    std::size_t h = 0x2545f4914f6cdd1dULL;
    for (std::size_t i = 0; i < m->perm.size(); ++i) {
      h = hash_combine(h, m->perm[i]);
      h = hash_combine(h, m->exps[i]);
    }
    return h;
  }
  const auto& d = std::get<DenseElement>(e);
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto& x : d.entries) h = hash_combine(h, x.hash());
  return h;
}

}  // namespace refl

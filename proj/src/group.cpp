#include "refl/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "refl/errors.hpp"

namespace refl {

namespace {

long gde_order(long d, long e, long r) {
  // (de)^r * r! / e, guarded against overflow by the caller's bound check
  long de = d * e;
  long v = 1;
  for (long i = 0; i < r; ++i) v *= de;
  for (long i = 2; i <= r; ++i) v *= i;
  return v / e;
}

double gde_order_estimate(long d, long e, long r) {
  double v = 1;
  for (long i = 0; i < r; ++i) v *= static_cast<double>(d) * e;
  for (long i = 2; i <= r; ++i) v *= i;
  return v / e;
}

}  // namespace

void ReflectionGroup::finalize() {
  std::sort(elements_.begin(), elements_.end(),
            [](const Element& a, const Element& b) { return element_compare(a, b) < 0; });
  index_.reserve(elements_.size() * 2);
  for (Index i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
  identity_ = kNoIndex;
  for (Index i = 0; i < elements_.size(); ++i)
    if (is_identity(elements_[i])) { identity_ = i; break; }
  if (identity_ == kNoIndex) throw Error("group table has no identity");
  inverse_.assign(elements_.size(), kNoIndex);
  for (Index i = 0; i < elements_.size(); ++i) {
    if (inverse_[i] != kNoIndex) continue;
    Index j = index_of(inverse(elements_[i]));
    if (j == kNoIndex) throw Error("group table not closed under inversion");
    inverse_[i] = j;
    inverse_[j] = i;
  }
}

Index ReflectionGroup::index_of(const Element& e) const {
  auto it = index_.find(e);
  return it == index_.end() ? kNoIndex : it->second;
}

Index ReflectionGroup::mul(Index a, Index b) const {
  Index i = index_of(multiply(elements_[a], elements_[b]));
  if (i == kNoIndex) throw Error("product escaped the group table");
  return i;
}

Index ReflectionGroup::conjugate(Index g, Index x) const {
  return mul(mul(g, x), inverse_[g]);
}

long ReflectionGroup::element_order(Index a) const {
  long o = 1;
  Index c = a;
  while (c != identity_) {
    c = mul(c, a);
    ++o;
  }
  return o;
}

std::string ReflectionGroup::family_label() const {
  if (const auto* f = std::get_if<GdeFamily>(&family_)) {
    std::ostringstream os;
    os << "G(" << f->d * f->e << "," << f->e << "," << f->r << ")";
    return os.str();
  }
  return std::get<ExceptionalFamily>(family_).name;
}

ReflectionGroup ReflectionGroup::build_gde(long d, long e, long r, const BuildOptions& opts) {
  if (d < 1 || e < 1 || r < 1) throw UsageError("G(de,e,r) parameters must be positive");
  if (gde_order_estimate(d, e, r) > static_cast<double>(opts.order_bound)) {
    std::ostringstream os;
    os << "G(" << d * e << "," << e << "," << r << ") exceeds order bound " << opts.order_bound;
    throw GroupTooLarge(os.str());
  }
  long de = d * e;
  long n = gde_order(d, e, r);
  ReflectionGroup g;
  g.family_ = GdeFamily{d, e, r};
  g.rank_ = r;
  g.conductor_ = de;
  g.elements_.reserve(n);
  // enumerate permutations in lexicographic order, exponent vectors likewise
  std::vector<std::uint16_t> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<std::uint16_t> exps(r, 0);
    // odometer over exponent vectors with sum == 0 mod e
    while (true) {
      long sum = 0;
      for (auto k : exps) sum += k;
      if (sum % e == 0) {
        MonomialElement m;
        m.modulus = static_cast<std::uint32_t>(de);
        m.perm = perm;
        m.exps = exps;
        g.elements_.push_back(std::move(m));
      }
      long pos = r - 1;
      while (pos >= 0 && exps[pos] == de - 1) {
        exps[pos] = 0;
        --pos;
      }
      if (pos < 0) break;
      ++exps[pos];
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (static_cast<long>(g.elements_.size()) != n)
    throw Error("G(de,e,r) enumeration produced a wrong count");
  g.finalize();
  // standard generators: diag(zeta_d) (d > 1), the twisted transposition
  // (e > 1, r >= 2), adjacent transpositions (r >= 2)
  auto push_gen = [&](MonomialElement m) {
    Index i = g.index_of(Element(std::move(m)));
    if (i == kNoIndex) throw Error("standard generator missing from table");
    g.generators_.push_back(i);
  };
  auto mono = [&](std::vector<std::uint16_t> p, std::vector<std::uint16_t> k) {
    MonomialElement m;
    m.modulus = static_cast<std::uint32_t>(de);
    m.perm = std::move(p);
    m.exps = std::move(k);
    return m;
  };
  std::vector<std::uint16_t> idp(r);
  std::iota(idp.begin(), idp.end(), 0);
  if (d > 1) {
    std::vector<std::uint16_t> k(r, 0);
    k[0] = static_cast<std::uint16_t>(e);
    push_gen(mono(idp, k));
  }
  if (r >= 2) {
    if (e > 1) {
      auto p = idp;
      p[0] = 1;
      p[1] = 0;
      std::vector<std::uint16_t> k(r, 0);
      k[0] = 1;
      k[1] = static_cast<std::uint16_t>(de - 1);
      push_gen(mono(p, k));
    }
    for (long i = 0; i + 1 < r; ++i) {
      auto p = idp;
      std::swap(p[i], p[i + 1]);
      push_gen(mono(p, std::vector<std::uint16_t>(r, 0)));
    }
  }
  return g;
}

ReflectionGroup ReflectionGroup::build_from_matrices(const ExceptionalRecord& rec,
                                                     const BuildOptions& opts) {
  if (rec.declared_order < 1) throw DataError("declared_order must be positive");
  if (rec.declared_order > opts.order_bound) {
    std::ostringstream os;
    os << rec.name << " declares order " << rec.declared_order << " above bound "
       << opts.order_bound;
    throw GroupTooLarge(os.str());
  }
  for (const auto& m : rec.generators) {
    if (m.rank != rec.rank) throw DataError(rec.name + ": generator rank mismatch");
    if (determinant(Element(m)).is_zero())
      throw DataError(rec.name + ": singular generator matrix");
  }
  ReflectionGroup g;
  g.family_ = ExceptionalFamily{rec.name, rec.source, rec.declared_order};
  g.rank_ = rec.rank;
  g.conductor_ = rec.conductor;
  DenseElement id;
  id.conductor = rec.conductor;
  id.rank = rec.rank;
  id.entries.assign(rec.rank * rec.rank, Cyclotomic::zero(rec.conductor));
  for (long i = 0; i < rec.rank; ++i) id.at(i, i) = Cyclotomic::one(rec.conductor);

  std::unordered_map<Element, Index, ElementHash, ElementEq> seen;
  std::vector<Element> table;
  table.push_back(Element(id));
  seen.emplace(table.back(), 0);
  std::vector<Element> gens;
  for (const auto& m : rec.generators) gens.push_back(Element(m));
  std::size_t head = 0;
  while (head < table.size()) {
    Element cur = table[head++];
    for (const auto& gen : gens) {
      Element p = multiply(cur, gen);
      if (seen.count(p)) continue;
      if (static_cast<long>(table.size()) >= rec.declared_order) {
        std::ostringstream os;
        os << rec.name << ": closure exceeds declared order " << rec.declared_order;
        throw ClosureMismatch(os.str());
      }
      seen.emplace(p, static_cast<Index>(table.size()));
      table.push_back(std::move(p));
    }
  }
  if (static_cast<long>(table.size()) != rec.declared_order) {
    std::ostringstream os;
    os << rec.name << ": closure has order " << table.size() << ", declared "
       << rec.declared_order;
    throw ClosureMismatch(os.str());
  }
  g.elements_ = std::move(table);
  g.finalize();
  for (const auto& gen : gens) {
    Index i = g.index_of(gen);
    if (i == kNoIndex) throw Error("generator missing after finalize");
    g.generators_.push_back(i);
  }
  return g;
}

std::vector<Index> close_indices(const ReflectionGroup& g, const std::vector<Index>& gens) {
  std::vector<std::uint8_t> mask(g.order(), 0);
  std::vector<Index> out;
  out.push_back(g.identity());
  mask[g.identity()] = 1;
  std::size_t head = 0;
  while (head < out.size()) {
    Index cur = out[head++];
    for (Index gen : gens) {
      Index p = g.mul(cur, gen);
      if (!mask[p]) {
        mask[p] = 1;
        out.push_back(p);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup Subgroup::generated(const ReflectionGroup& g, std::vector<Index> gens) {
  Subgroup s;
  s.parent_ = &g;
  s.members_ = close_indices(g, gens);
  s.mask_.assign(g.order(), 0);
  for (Index i : s.members_) s.mask_[i] = 1;
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  s.generators_ = std::move(gens);
  s.has_generators_ = true;
  return s;
}

Subgroup Subgroup::from_members(const ReflectionGroup& g, std::vector<Index> members) {
  Subgroup s;
  s.parent_ = &g;
  std::sort(members.begin(), members.end());
  s.members_ = std::move(members);
  s.mask_.assign(g.order(), 0);
  for (Index i : s.members_) s.mask_[i] = 1;
  // greedy generating set in canonical order
  std::vector<std::uint8_t> closed(g.order(), 0);
  closed[g.identity()] = 1;
  std::size_t closed_count = 1;
  for (Index m : s.members_) {
    if (closed[m]) continue;
    s.generators_.push_back(m);
    // re-close incrementally
    std::vector<Index> frontier{m};
    closed[m] = 1;
    ++closed_count;
    std::vector<Index> bfs;
    for (Index i : s.members_)
      if (closed[i]) bfs.push_back(i);
    std::size_t head = 0;
    while (head < bfs.size()) {
      Index cur = bfs[head++];
      for (Index gen : s.generators_) {
        Index p = g.mul(cur, gen);
        if (!closed[p]) {
          closed[p] = 1;
          ++closed_count;
          bfs.push_back(p);
        }
      }
    }
    if (closed_count == s.members_.size()) break;
  }
  s.has_generators_ = true;
  // sanity: generators must generate exactly the members
  if (closed_count != s.members_.size())
    throw Error("subgroup member list is not closed");
  return s;
}

Subgroup Subgroup::from_members_raw(const ReflectionGroup& g, std::vector<Index> members) {
  Subgroup s;
  s.parent_ = &g;
  std::sort(members.begin(), members.end());
  s.members_ = std::move(members);
  s.mask_.assign(g.order(), 0);
  for (Index i : s.members_) s.mask_[i] = 1;
  s.generators_ = s.members_;
  s.has_generators_ = false;
  return s;
}

Subgroup Subgroup::full(const ReflectionGroup& g) {
  std::vector<Index> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  Subgroup s;
  s.parent_ = &g;
  s.members_ = std::move(all);
  s.mask_.assign(g.order(), 1);
  s.generators_ = g.generators();
  std::sort(s.generators_.begin(), s.generators_.end());
  s.has_generators_ = !s.generators_.empty();
  if (!s.has_generators_) s.generators_ = s.members_;
  return s;
}

Subgroup Subgroup::trivial(const ReflectionGroup& g) {
  Subgroup s;
  s.parent_ = &g;
  s.members_ = {g.identity()};
  s.mask_.assign(g.order(), 0);
  s.mask_[g.identity()] = 1;
  s.generators_ = {};
  s.has_generators_ = true;
  return s;
}

bool Subgroup::is_subset_of(const Subgroup& o) const {
  for (Index i : members_)
    if (!o.contains(i)) return false;
  return true;
}

Cyclotomic pi(const ReflectionGroup& g, Index i) {
  const auto* m = std::get_if<MonomialElement>(&g.element(i));
  if (!m) throw UsageError("pi is defined for monomial elements only");
  long s = 0;
  for (auto k : m->exps) s += k;
  return Cyclotomic::root_of_unity(m->modulus, s);
}

Subgroup subgroup_generated(const ReflectionGroup& g, const std::vector<Index>& gens) {
  return Subgroup::generated(g, gens);
}

Subgroup centralizer(const ReflectionGroup& g, Index x) {
  std::vector<Index> members;
  for (Index w = 0; w < g.order(); ++w)
    if (g.mul(w, x) == g.mul(x, w)) members.push_back(w);
  return Subgroup::from_members(g, std::move(members));
}

}  // namespace refl

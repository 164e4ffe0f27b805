#include "refl/hyperplane.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "refl/errors.hpp"
#include "refl/parallel.hpp"

namespace refl {

std::string Hyperplane::label_str() const {
  std::ostringstream os;
  if (label) {
    if (label->kind == SeriesLabel::Kind::Coordinate) {
      os << "H_" << label->i;
    } else {
      os << "H_{" << label->i << "," << label->j << ",z^" << label->zeta_exp << "}";
    }
    return os.str();
  }
  os << "[";
  for (std::size_t i = 0; i < normal.size(); ++i) {
    if (i) os << ", ";
    os << normal[i].str();
  }
  os << "]";
  return os.str();
}

namespace {

std::optional<SeriesLabel> series_label(const ReflectionGroup& g,
                                        const std::vector<Cyclotomic>& normal) {
  const auto* fam = std::get_if<GdeFamily>(&g.family());
  if (!fam) return std::nullopt;
  long de = fam->d * fam->e;
  std::vector<long> nz;
  for (long i = 0; i < static_cast<long>(normal.size()); ++i)
    if (!normal[i].is_zero()) nz.push_back(i);
  if (nz.size() == 1) {
    SeriesLabel l;
    l.kind = SeriesLabel::Kind::Coordinate;
    l.i = nz[0] + 1;
    return l;
  }
  if (nz.size() == 2 && normal[nz[0]].is_one()) {
    Cyclotomic c = -normal[nz[1]];
    for (long k = 0; k < de; ++k) {
      if (c == Cyclotomic::root_of_unity(g.conductor(), (k * g.conductor()) / de)) {
        SeriesLabel l;
        l.kind = SeriesLabel::Kind::Difference;
        l.i = nz[0] + 1;
        l.j = nz[1] + 1;
        l.zeta_exp = k;
        return l;
      }
    }
  }
  return std::nullopt;
}

int normal_compare(const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    int c = Cyclotomic::compare(a[i], b[i]);
    if (c != 0) return c;
  }
  return 0;
}

}  // namespace

Arrangement Arrangement::find_hyperplanes(const ReflectionGroup& g) {
  Arrangement arr;
  arr.refl_mask_.assign(g.order(), 0);
  // group reflections by canonical hyperplane
  std::unordered_map<std::vector<Cyclotomic>, std::vector<Index>, VecHash, VecEq> groups;
  for (Index i = 0; i < g.order(); ++i) {
    if (i == g.identity()) continue;
    auto rd = reflection_data(g.element(i), g.conductor());
    if (!rd) continue;
    arr.refl_mask_[i] = 1;
    groups[rd->alpha].push_back(i);
  }
  std::vector<std::vector<Cyclotomic>> normals;
  normals.reserve(groups.size());
  for (auto& [k, v] : groups) normals.push_back(k);
  std::sort(normals.begin(), normals.end(),
            [](const auto& a, const auto& b) { return normal_compare(a, b) < 0; });
  for (const auto& n : normals) {
    HyperplaneRecord rec;
    rec.hyperplane.normal = n;
    rec.hyperplane.label = series_label(g, n);
    auto members = groups.at(n);
    members.push_back(g.identity());
    rec.fixator = Subgroup::from_members(g, std::move(members));
    rec.e = static_cast<long>(rec.fixator.size());
    // the distinguished reflection: determinant exp(2 i pi / e), and its
    // powers must exhaust the fixator
    Cyclotomic zeta_e = Cyclotomic::root_of_unity(rec.e, 1);
    for (Index m : rec.fixator.members()) {
      if (m == g.identity()) continue;
      if (determinant(g.element(m)) == zeta_e) {
        rec.distinguished = m;
        break;
      }
    }
    if (rec.distinguished == kNoIndex)
      throw NotCyclicFixator("no generator with determinant exp(2i pi/e) for hyperplane " +
                             rec.hyperplane.label_str());
    // cyclicity: powers of s_H give the whole fixator
    {
      Index c = rec.distinguished;
      long cnt = 1;
      while (c != g.identity()) {
        if (!rec.fixator.contains(c))
          throw NotCyclicFixator("fixator power escaped for " + rec.hyperplane.label_str());
        c = g.mul(c, rec.distinguished);
        ++cnt;
      }
      if (cnt != rec.e)
        throw NotCyclicFixator("fixator is not generated by s_H for " +
                               rec.hyperplane.label_str());
    }
    auto rd = reflection_data(g.element(rec.distinguished), g.conductor());
    rec.line = rd->line;
    arr.by_normal_.emplace(n, static_cast<HypId>(arr.records_.size()));
    arr.records_.push_back(std::move(rec));
  }
  return arr;
}

HypId Arrangement::id_of_normal(const std::vector<Cyclotomic>& normal) const {
  auto it = by_normal_.find(normal);
  if (it == by_normal_.end()) throw Error("unknown hyperplane normal");
  return it->second;
}

HypId Arrangement::act(const ReflectionGroup& g, Index w, HypId h) const {
  auto img = act_on_form(g.element(w), records_[h].hyperplane.normal);
  normalize_projective(img);
  return id_of_normal(img);
}

std::vector<Index> Arrangement::reflections() const {
  std::vector<Index> out;
  for (Index i = 0; i < refl_mask_.size(); ++i)
    if (refl_mask_[i]) out.push_back(i);
  return out;
}

void stabilizer_data(const ReflectionGroup& g, Arrangement& arr, HypId h) {
  auto& rec = arr.record(h);
  const auto& dvec = rec.line;
  long r = g.rank();
  long k0 = -1;
  for (long i = 0; i < r; ++i)
    if (!dvec[i].is_zero()) { k0 = i; break; }
  std::vector<Index> nmem, cmem;
  std::vector<std::pair<Cyclotomic, long>> seen_eigs;  // eigenvalue -> order memo
  long f = 1;
  std::vector<std::pair<Index, long>> eig_orders;
  for (Index w = 0; w < g.order(); ++w) {
    auto img = apply(g.element(w), dvec);
    if (img[k0].is_zero()) continue;
    const Cyclotomic& lam = img[k0];
    bool proportional = true;
    for (long i = 0; i < r && proportional; ++i) {
      if (!(img[i] - lam * dvec[i]).is_zero()) proportional = false;
    }
    if (!proportional) continue;
    nmem.push_back(w);
    // order of the eigenvalue, memoized across the scan
    long o = -1;
    for (const auto& [val, ord] : seen_eigs)
      if (val == lam) { o = ord; break; }
    if (o < 0) {
      auto oo = lam.root_of_unity_order();
      if (!oo)
        throw EigenvalueNotRootOfUnity("eigenvalue on D is not a root of unity for " +
                                       rec.hyperplane.label_str());
      o = *oo;
      seen_eigs.emplace_back(lam, o);
    }
    if (o == 1) cmem.push_back(w);
    f = std::lcm(f, o);
    eig_orders.emplace_back(w, o);
  }
  rec.stabilizer = Subgroup::from_members(g, std::move(nmem));
  rec.parabolic = Subgroup::from_members(g, std::move(cmem));
  rec.f = f;
  if (f % rec.e != 0)
    throw Error("e_H does not divide f_H for " + rec.hyperplane.label_str());
  rec.ramification = f / rec.e;
  for (const auto& [w, o] : eig_orders)
    if (o == f) { rec.witness = w; break; }
  if (rec.witness == kNoIndex)
    throw Error("no element realizes the ramification for " + rec.hyperplane.label_str());
  rec.completed = true;
}

std::vector<HypId> commuting_set(const ReflectionGroup& g, const Arrangement& arr, HypId h) {
  std::vector<HypId> out;
  Index s = arr.record(h).distinguished;
  for (HypId k = 0; k < arr.size(); ++k) {
    Index t = arr.record(k).distinguished;
    if (g.mul(s, t) == g.mul(t, s)) out.push_back(k);
  }
  return out;  // ids ascend, includes h itself
}

void complete_arrangement(const ReflectionGroup& g, Arrangement& arr, unsigned threads) {
  parallel_for(arr.size(), threads, [&](std::size_t i) {
    stabilizer_data(g, arr, static_cast<HypId>(i));
  });
  for (HypId h = 0; h < arr.size(); ++h) arr.record(h).commuting = commuting_set(g, arr, h);
}

std::vector<std::vector<HypId>> orbit_decomposition(const ReflectionGroup& g,
                                                    const Arrangement& arr, const Subgroup& s,
                                                    const std::vector<HypId>& hyps) {
  std::vector<std::uint8_t> in_set(arr.size(), 0);
  for (HypId h : hyps) in_set[h] = 1;
  std::vector<std::uint8_t> done(arr.size(), 0);
  std::vector<std::vector<HypId>> orbits;
  const auto& actors = s.generator_set();
  for (HypId h0 : hyps) {
    if (done[h0]) continue;
    std::vector<HypId> orbit{h0};
    done[h0] = 1;
    std::size_t head = 0;
    while (head < orbit.size()) {
      HypId cur = orbit[head++];
      for (Index w : actors) {
        HypId img = arr.act(g, w, cur);
        if (!in_set[img])
          throw OrbitEscape("subgroup action leaves the hyperplane set");
        if (!done[img]) {
          done[img] = 1;
          orbit.push_back(img);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  std::sort(orbits.begin(), orbits.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return orbits;
}

bool same_orbits(const ReflectionGroup& g, const Arrangement& arr, const Subgroup& a,
                 const Subgroup& b, const std::vector<HypId>& hyps) {
  return orbit_decomposition(g, arr, a, hyps) == orbit_decomposition(g, arr, b, hyps);
}

}  // namespace refl

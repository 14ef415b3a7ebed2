#include "steiner/sts.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace steiner {

namespace {

std::string triple_str(const Triple& t) {
  return "{" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
         std::to_string(t[2]) + "}";
}

}  // namespace

int SteinerTripleSystem::pair_triple(int p, int q) const {
  if (p == q) fail(Errc::same_point, "pair requires two distinct points");
  if (p < 0 || q < 0 || p >= v_ || q >= v_)
    fail(Errc::bad_argument, "point out of range");
  return pair_triple_[p * v_ + q];
}

int SteinerTripleSystem::third_point(int p, int q) const {
  pair_triple(p, q);  // range and distinctness checks
  return third_[p * v_ + q];
}

std::optional<int> SteinerTripleSystem::triple_index(Triple t) const {
  std::sort(t.begin(), t.end());
  for (int x : t)
    if (x < 0 || x >= v_) return std::nullopt;
  if (t[0] == t[1] || t[1] == t[2]) return std::nullopt;
  int i = pair_triple_[t[0] * v_ + t[1]];
  if (i >= 0 && triples_[i] == t) return i;
  return std::nullopt;
}

SteinerTripleSystem validate_sts(int v, const std::vector<Triple>& raw_triples) {
  if (!SteinerTripleSystem::admissible(v))
    fail(Errc::not_admissible,
         "order " + std::to_string(v) + " is not 1 or 3 mod 6");

  std::vector<Triple> triples;
  triples.reserve(raw_triples.size());
  for (Triple t : raw_triples) {
    std::sort(t.begin(), t.end());
    if (t[0] < 0 || t[2] >= v)
      fail(Errc::bad_triple, "point out of range in " + triple_str(t));
    if (t[0] == t[1] || t[1] == t[2])
      fail(Errc::bad_triple, "repeated point in " + triple_str(t));
    triples.push_back(t);
  }
  std::sort(triples.begin(), triples.end());

  SteinerTripleSystem sts;
  sts.v_ = v;
  sts.triples_ = std::move(triples);
  sts.pair_triple_.assign(static_cast<size_t>(v) * v, -1);
  sts.third_.assign(static_cast<size_t>(v) * v, -1);
  sts.through_.assign(v, {});

  auto cover = [&](int p, int q, int r, int idx) {
    int& slot = sts.pair_triple_[p * v + q];
    if (slot != -1)
      fail(Errc::pair_duplicated, "pair {" + std::to_string(p) + "," +
                                      std::to_string(q) +
                                      "} covered more than once");
    slot = idx;
    sts.third_[p * v + q] = r;
  };
  for (int i = 0; i < sts.b(); ++i) {
    const Triple& t = sts.triples_[i];
    cover(t[0], t[1], t[2], i);
    cover(t[1], t[0], t[2], i);
    cover(t[0], t[2], t[1], i);
    cover(t[2], t[0], t[1], i);
    cover(t[1], t[2], t[0], i);
    cover(t[2], t[1], t[0], i);
    for (int x : t) sts.through_[x].push_back(i);
  }
  for (int p = 0; p < v; ++p)
    for (int q = p + 1; q < v; ++q)
      if (sts.pair_triple_[p * v + q] == -1)
        fail(Errc::pair_missing, "pair {" + std::to_string(p) + "," +
                                     std::to_string(q) + "} is not covered");
  return sts;
}

PaschConfiguration pasch_from_points(const SteinerTripleSystem& sts, int x,
                                     int a, int b, int c, int d, int t) {
  std::set<int> pts{x, a, b, c, d, t};
  if (pts.size() != 6) fail(Errc::not_a_pasch, "points are not distinct");
  // Regroup {a,b,c,d} into the two triples through x; the switch moves
  // points between the triples, so a previously-switched tuple still names
  // the same configuration.
  int partner = sts.third_point(x, a);
  if (partner != b && partner != c && partner != d)
    fail(Errc::not_a_pasch, "triples through x are absent");
  std::vector<int> rest;
  for (int p : {b, c, d})
    if (p != partner) rest.push_back(p);
  if (sts.third_point(x, rest[0]) != rest[1])
    fail(Errc::not_a_pasch, "triples through x are absent");
  int na = a, nb = partner, nc = rest[0], nd = rest[1];
  if (!sts.has_triple({t, na, nc})) std::swap(nc, nd);
  if (!sts.has_triple({t, na, nc}) || !sts.has_triple({t, nb, nd}))
    fail(Errc::not_a_pasch, "completing triples through t are absent");
  return {x, na, nb, nc, nd, t};
}

namespace {

// Labels a 4-set of triple indices as (x,a,b,c,d,t): x is the minimum of the
// six points, t its opposite, and (a,b) come from the lexicographically
// smaller triple through x.
PaschConfiguration label_configuration(const SteinerTripleSystem& sts,
                                       const std::array<int, 4>& quad) {
  int x = sts.v();
  for (int i : quad) x = std::min(x, sts.triple(i)[0]);
  Triple t1{-1, -1, -1}, t2{-1, -1, -1};
  int t = -1;
  for (int i : quad) {
    const Triple& tr = sts.triple(i);
    if (std::find(tr.begin(), tr.end(), x) != tr.end()) {
      if (t1[0] < 0)
        t1 = tr;
      else
        t2 = tr;
    }
  }
  if (t2 < t1) std::swap(t1, t2);
  // t is the unique point of the configuration in neither triple through x.
  for (int i : quad) {
    const Triple& tr = sts.triple(i);
    for (int p : tr) {
      bool in1 = std::find(t1.begin(), t1.end(), p) != t1.end();
      bool in2 = std::find(t2.begin(), t2.end(), p) != t2.end();
      if (!in1 && !in2) t = p;
    }
  }
  int a = t1[0] == x ? t1[1] : t1[0];
  int b = t1[2] == x ? t1[1] : t1[2];
  if (a > b) std::swap(a, b);
  int c = t2[0] == x ? t2[1] : t2[0];
  int d = t2[2] == x ? t2[1] : t2[2];
  if (!sts.has_triple({t, a, c})) std::swap(c, d);
  return {x, a, b, c, d, t};
}

}  // namespace

std::vector<PaschConfiguration> find_pasch_configurations(
    const SteinerTripleSystem& sts) {
  std::set<std::array<int, 4>> quads;
  for (int x = 0; x < sts.v(); ++x) {
    const auto& through = sts.triples_through(x);
    for (size_t i = 0; i < through.size(); ++i) {
      for (size_t j = i + 1; j < through.size(); ++j) {
        const Triple& t1 = sts.triple(through[i]);
        const Triple& t2 = sts.triple(through[j]);
        int a = t1[0] == x ? t1[1] : t1[0];
        int b = t1[2] == x ? t1[1] : t1[2];
        int c = t2[0] == x ? t2[1] : t2[0];
        int d = t2[2] == x ? t2[1] : t2[2];
        for (int swap = 0; swap < 2; ++swap) {
          int u = sts.third_point(a, c);
          if (u != x && u == sts.third_point(b, d)) {
            std::array<int, 4> q{through[i], through[j],
                                 sts.pair_triple(a, c), sts.pair_triple(b, d)};
            std::sort(q.begin(), q.end());
            quads.insert(q);
          }
          std::swap(c, d);
        }
      }
    }
  }
  std::vector<PaschConfiguration> out;
  out.reserve(quads.size());
  for (const auto& q : quads) out.push_back(label_configuration(sts, q));
  return out;
}

std::vector<int> pasch_point_counts(const SteinerTripleSystem& sts) {
  std::vector<int> counts(sts.v(), 0);
  for (const auto& cfg : find_pasch_configurations(sts))
    for (int p : {cfg.x, cfg.a, cfg.b, cfg.c, cfg.d, cfg.t}) ++counts[p];
  return counts;
}

SteinerTripleSystem pasch_switch(const SteinerTripleSystem& sts,
                                 const PaschConfiguration& cfg) {
  std::array<Triple, 4> old_triples{Triple{cfg.x, cfg.a, cfg.b},
                                    Triple{cfg.x, cfg.c, cfg.d},
                                    Triple{cfg.t, cfg.a, cfg.c},
                                    Triple{cfg.t, cfg.b, cfg.d}};
  std::set<int> removed;
  for (const Triple& t : old_triples) {
    auto idx = sts.triple_index(t);
    if (!idx) fail(Errc::not_a_pasch, "configuration triple is absent");
    removed.insert(*idx);
  }
  if (removed.size() != 4) fail(Errc::not_a_pasch, "triples are not distinct");

  std::vector<Triple> next;
  next.reserve(sts.b());
  for (int i = 0; i < sts.b(); ++i)
    if (!removed.count(i)) next.push_back(sts.triple(i));
  next.push_back({cfg.x, cfg.a, cfg.c});
  next.push_back({cfg.x, cfg.b, cfg.d});
  next.push_back({cfg.t, cfg.a, cfg.b});
  next.push_back({cfg.t, cfg.c, cfg.d});
  return validate_sts(sts.v(), next);
}

bool is_veblen_point(const SteinerTripleSystem& sts, int x) {
  if (x < 0 || x >= sts.v()) fail(Errc::bad_argument, "point out of range");
  const auto& through = sts.triples_through(x);
  for (size_t i = 0; i < through.size(); ++i) {
    for (size_t j = i + 1; j < through.size(); ++j) {
      const Triple& t1 = sts.triple(through[i]);
      const Triple& t2 = sts.triple(through[j]);
      int a = t1[0] == x ? t1[1] : t1[0];
      int b = t1[2] == x ? t1[1] : t1[2];
      int c = t2[0] == x ? t2[1] : t2[0];
      int d = t2[2] == x ? t2[1] : t2[2];
      if (sts.third_point(a, c) != sts.third_point(b, d)) return false;
      if (sts.third_point(a, d) != sts.third_point(b, c)) return false;
    }
  }
  return true;
}

std::vector<int> veblen_points(const SteinerTripleSystem& sts) {
  std::vector<int> out;
  for (int x = 0; x < sts.v(); ++x)
    if (is_veblen_point(sts, x)) out.push_back(x);
  return out;
}

int max_veblen_count(int v, bool projective_allowed) {
  if (!SteinerTripleSystem::admissible(v))
    fail(Errc::not_admissible,
         "order " + std::to_string(v) + " is not 1 or 3 mod 6");
  if (projective_allowed && ((v + 1) & v) == 0) return v;
  int best = 0;
  for (int c = 0; (v + 1) % (1 << c) == 0; ++c) {
    int index = (v + 1) >> c;
    if (index % 6 != 2 && index % 6 != 4) continue;
    int count = (1 << c) - 1;
    if (!projective_allowed && count > (v - 7) / 8) continue;
    best = std::max(best, count);
  }
  return best;
}

SteinerTripleSystem relabel(const SteinerTripleSystem& sts,
                            const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != sts.v())
    fail(Errc::size_mismatch, "permutation size differs from point count");
  std::vector<Triple> mapped;
  mapped.reserve(sts.b());
  for (const Triple& t : sts.triples())
    mapped.push_back({perm[t[0]], perm[t[1]], perm[t[2]]});
  return validate_sts(sts.v(), mapped);
}

}  // namespace steiner

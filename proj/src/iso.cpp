#include "steiner/iso.hpp"

#include <algorithm>

namespace steiner {

namespace {

// Maps points of A to points of B, propagating thirds: once p and p' have
// images, third(p,p') is forced.  An undo trail keeps backtracking cheap.
struct IsoSearch {
  const SteinerTripleSystem& A;
  const SteinerTripleSystem& B;
  const std::function<bool(const std::vector<int>&)>& emit;
  std::vector<int> inv_a, inv_b;  // Pasch count through each point
  std::vector<int> img, pre;
  std::vector<std::pair<int, int>> trail;
  bool stopped = false;

  IsoSearch(const SteinerTripleSystem& a, const SteinerTripleSystem& b,
            const std::function<bool(const std::vector<int>&)>& fn)
      : A(a),
        B(b),
        emit(fn),
        inv_a(pasch_point_counts(a)),
        inv_b(pasch_point_counts(b)),
        img(a.v(), -1),
        pre(b.v(), -1) {}

  bool compatible() const {
    auto sa = inv_a, sb = inv_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    return sa == sb;
  }

  bool assign(int p, int q) {
    if (img[p] != -1) return img[p] == q;
    if (pre[q] != -1 || inv_a[p] != inv_b[q]) return false;
    img[p] = q;
    pre[q] = p;
    trail.emplace_back(p, q);
    for (int p2 = 0; p2 < A.v(); ++p2) {
      if (p2 == p || img[p2] == -1) continue;
      if (!assign(A.third_point(p, p2), B.third_point(q, img[p2])))
        return false;
    }
    return true;
  }

  void rollback(size_t mark) {
    while (trail.size() > mark) {
      auto [p, q] = trail.back();
      trail.pop_back();
      img[p] = -1;
      pre[q] = -1;
    }
  }

  void extend() {
    if (stopped) return;
    int p = -1;
    for (int i = 0; i < A.v(); ++i)
      if (img[i] == -1) {
        p = i;
        break;
      }
    if (p == -1) {
      if (!emit(img)) stopped = true;
      return;
    }
    for (int q = 0; q < B.v() && !stopped; ++q) {
      if (pre[q] != -1) continue;
      size_t mark = trail.size();
      if (assign(p, q)) extend();
      rollback(mark);
    }
  }
};

}  // namespace

void for_each_isomorphism(
    const SteinerTripleSystem& a, const SteinerTripleSystem& b,
    const std::function<bool(const std::vector<int>&)>& fn) {
  if (a.v() != b.v())
    fail(Errc::size_mismatch, "systems have different orders");
  IsoSearch search(a, b, fn);
  if (!search.compatible()) return;
  search.extend();
}

std::optional<std::vector<int>> are_isomorphic(const SteinerTripleSystem& a,
                                               const SteinerTripleSystem& b) {
  std::optional<std::vector<int>> found;
  for_each_isomorphism(a, b, [&](const std::vector<int>& img) {
    found = img;
    return false;
  });
  return found;
}

namespace {

struct CanonSearch {
  const SteinerTripleSystem& sts;
  std::vector<Triple> best;
  bool have_best = false;

  explicit CanonSearch(const SteinerTripleSystem& s) : sts(s) {}

  // Assigns forced labels (thirds of already-labeled pairs) until stuck,
  // scanning pairs in a fixed label order so the closure is deterministic.
  void close(std::vector<int>& new_of_old, std::vector<int>& old_of_new) {
    bool progress = true;
    while (progress) {
      progress = false;
      int k = static_cast<int>(old_of_new.size());
      for (int j = 1; j < k && !progress; ++j) {
        for (int i = 0; i < j && !progress; ++i) {
          int r = sts.third_point(old_of_new[i], old_of_new[j]);
          if (new_of_old[r] == -1) {
            new_of_old[r] = k;
            old_of_new.push_back(r);
            progress = true;
          }
        }
      }
    }
  }

  void leaf(const std::vector<int>& new_of_old) {
    std::vector<Triple> form;
    form.reserve(sts.b());
    for (const Triple& t : sts.triples()) {
      Triple m{new_of_old[t[0]], new_of_old[t[1]], new_of_old[t[2]]};
      std::sort(m.begin(), m.end());
      form.push_back(m);
    }
    std::sort(form.begin(), form.end());
    if (!have_best || form < best) {
      best = std::move(form);
      have_best = true;
    }
  }

  void grow(std::vector<int> new_of_old, std::vector<int> old_of_new) {
    close(new_of_old, old_of_new);
    if (static_cast<int>(old_of_new.size()) == sts.v()) {
      leaf(new_of_old);
      return;
    }
    // Stuck on a proper subsystem: branch over every injection.
    for (int u = 0; u < sts.v(); ++u) {
      if (new_of_old[u] != -1) continue;
      auto no = new_of_old;
      auto on = old_of_new;
      no[u] = static_cast<int>(on.size());
      on.push_back(u);
      grow(std::move(no), std::move(on));
    }
  }

  std::vector<Triple> run() {
    for (int p = 0; p < sts.v(); ++p) {
      for (int q = 0; q < sts.v(); ++q) {
        if (p == q) continue;
        std::vector<int> new_of_old(sts.v(), -1);
        std::vector<int> old_of_new;
        new_of_old[p] = 0;
        old_of_new.push_back(p);
        new_of_old[q] = 1;
        old_of_new.push_back(q);
        grow(std::move(new_of_old), std::move(old_of_new));
      }
    }
    return best;
  }
};

}  // namespace

std::vector<Triple> canonical_form(const SteinerTripleSystem& sts) {
  return CanonSearch(sts).run();
}

}  // namespace steiner

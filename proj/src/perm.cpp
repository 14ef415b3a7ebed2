#include "steiner/perm.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace steiner {

Perm perm_identity(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

bool perm_valid(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  for (int x : p) {
    if (x < 0 || x >= static_cast<int>(p.size()) || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

Perm perm_mul(const Perm& f, const Perm& g) {
  if (f.size() != g.size())
    fail(Errc::size_mismatch, "permutation sizes differ");
  Perm out(f.size());
  for (size_t x = 0; x < f.size(); ++x) out[x] = f[g[x]];
  return out;
}

Perm perm_inverse(const Perm& p) {
  Perm out(p.size());
  for (size_t x = 0; x < p.size(); ++x) out[p[x]] = static_cast<int>(x);
  return out;
}

std::string perm_cycles(const Perm& p) {
  std::string out;
  std::vector<bool> done(p.size(), false);
  for (size_t start = 0; start < p.size(); ++start) {
    if (done[start] || p[start] == static_cast<int>(start)) continue;
    out += "(";
    int x = static_cast<int>(start);
    bool first = true;
    while (!done[x]) {
      done[x] = true;
      if (!first) out += " ";
      out += std::to_string(x);
      first = false;
      x = p[x];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

Perm perm_from_cycles(const std::string& text, int n) {
  Perm p = perm_identity(n);
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') fail(Errc::io_error, "expected '(' in cycle notation");
    ++i;
    std::vector<int> cycle;
    while (true) {
      skip_ws();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
        ++j;
      if (j == i) fail(Errc::io_error, "expected a point label in cycle");
      int x = std::stoi(text.substr(i, j - i));
      if (x < 0 || x >= n) fail(Errc::io_error, "cycle label out of range");
      cycle.push_back(x);
      i = j;
    }
    for (size_t k = 0; k + 1 < cycle.size(); ++k) p[cycle[k]] = cycle[k + 1];
    if (cycle.size() > 1) p[cycle.back()] = cycle.front();
    skip_ws();
  }
  if (!perm_valid(p)) fail(Errc::io_error, "cycles overlap");
  return p;
}

std::vector<Perm> closure_elements(const std::vector<Perm>& gens, int n) {
  std::set<Perm> seen;
  std::vector<Perm> queue;
  queue.push_back(perm_identity(n));
  seen.insert(queue.front());
  for (size_t head = 0; head < queue.size(); ++head) {
    Perm cur = queue[head];
    for (const Perm& g : gens) {
      Perm next = perm_mul(g, cur);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return queue;
}

std::uint64_t closure_order(const std::vector<Perm>& gens, int n) {
  return closure_elements(gens, n).size();
}

std::vector<Perm> reduce_generators(const std::vector<Perm>& elements, int n) {
  std::vector<Perm> gens;
  std::set<Perm> closed;
  closed.insert(perm_identity(n));
  for (const Perm& e : elements) {
    if (closed.count(e)) continue;
    gens.push_back(e);
    for (const Perm& x : closure_elements(gens, n)) closed.insert(x);
  }
  return gens;
}

}  // namespace steiner

#include "brickforge/canonical.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace brickforge {

namespace {

constexpr int kMaxCanonVertices = 16;

struct Canonizer {
  int n = 0;
  std::array<std::array<std::uint8_t, kMaxCanonVertices>, kMaxCanonVertices> a{};
  std::vector<int> color;       // refined, isomorphism-invariant vertex colors
  std::vector<int> cand_order;  // vertex indices sorted by (color, index)

  std::vector<std::uint8_t> best;
  std::vector<int> best_order;
  bool has_best = false;
  long best_version = 0;

  std::vector<std::uint8_t> code;
  std::vector<int> order;
  std::vector<char> used;

  void refine() {
    color.assign(n, 0);
    for (int round = 0; round < n; ++round) {
      std::vector<std::pair<std::vector<int>, int>> keys(n);
      for (int v = 0; v < n; ++v) {
        std::vector<int> key;
        key.push_back(color[v]);
        std::vector<std::pair<int, int>> nb;
        for (int w = 0; w < n; ++w)
          if (a[v][w]) nb.emplace_back(color[w], a[v][w]);
        std::sort(nb.begin(), nb.end());
        for (auto& [c, mult] : nb) {
          key.push_back(c);
          key.push_back(mult);
        }
        keys[v] = {std::move(key), v};
      }
      std::map<std::vector<int>, int> rank;
      for (const auto& [key, v] : keys) rank.emplace(key, 0);
      int next = 0;
      for (auto& [key, r] : rank) r = next++;
      std::vector<int> fresh(n);
      for (const auto& [key, v] : keys) fresh[v] = rank[key];
      if (fresh == color) break;
      color = fresh;
    }
    cand_order.resize(n);
    for (int v = 0; v < n; ++v) cand_order[v] = v;
    std::sort(cand_order.begin(), cand_order.end(), [&](int x, int y) {
      if (color[x] != color[y]) return color[x] < color[y];
      return x < y;
    });
  }

  // tied: the code so far equals the best code's prefix (vacuous until a best
  // exists). Whenever a descendant improves the best, the current prefix is a
  // prefix of the new best, so the tie is restored for remaining siblings.
  void dfs(int depth, bool tied) {
    if (depth == n) {
      if (!has_best || !tied) {
        best = code;
        best_order = order;
        has_best = true;
        ++best_version;
      }
      return;
    }
    for (int v : cand_order) {
      if (used[v]) continue;
      size_t start = code.size();
      bool prune = false;
      bool child_tied = tied;
      for (int i = 0; i < depth; ++i) {
        std::uint8_t entry = a[order[i]][v];
        if (child_tied && has_best) {
          std::uint8_t ref = best[start + static_cast<size_t>(i)];
          if (entry > ref) {
            prune = true;
            break;
          }
          if (entry < ref) child_tied = false;
        }
        code.push_back(entry);
      }
      if (prune) {
        code.resize(start);
        continue;
      }
      used[v] = 1;
      order.push_back(v);
      long version_before = best_version;
      dfs(depth + 1, child_tied);
      if (best_version != version_before) tied = true;
      order.pop_back();
      used[v] = 0;
      code.resize(start);
    }
  }
};

Canonizer make_canonizer(const Multigraph& g, CanonMode mode) {
  if (g.n() > kMaxCanonVertices)
    raise(ErrorCode::TooLarge, "canonical form limited to " +
                                   std::to_string(kMaxCanonVertices) + " vertices");
  Canonizer cz;
  cz.n = g.n();
  std::map<int, int> index;
  for (int v : g.vertices()) {
    int k = static_cast<int>(index.size());
    index[v] = k;
  }
  for (const Edge& e : g.edges()) {
    int u = index[e.u], v = index[e.v];
    if (mode == CanonMode::SimpleUnderlying) {
      cz.a[u][v] = cz.a[v][u] = 1;
    } else {
      if (cz.a[u][v] == 255) raise(ErrorCode::TooLarge, "multiplicity overflow");
      ++cz.a[u][v];
      cz.a[v][u] = cz.a[u][v];
    }
  }
  cz.refine();
  cz.used.assign(cz.n, 0);
  if (cz.n > 0) cz.code.reserve(static_cast<size_t>(cz.n) * (cz.n - 1) / 2);
  cz.dfs(0, true);
  return cz;
}

}  // namespace

std::string CanonicalForm::key() const {
  static const char* hex = "0123456789abcdef";
  std::string s;
  s += (mode == CanonMode::SimpleUnderlying) ? 's' : 'm';
  s += std::to_string(n);
  s += ':';
  for (std::uint8_t b : code) {
    s += hex[b >> 4];
    s += hex[b & 15];
  }
  return s;
}

CanonicalForm canonical_form(const Multigraph& g, CanonMode mode) {
  Canonizer cz = make_canonizer(g, mode);
  CanonicalForm form;
  form.n = g.n();
  form.mode = mode;
  form.code = std::move(cz.best);
  return form;
}

bool isomorphic(const Multigraph& a, const Multigraph& b, CanonMode mode) {
  if (a.n() != b.n()) return false;
  if (mode == CanonMode::WithMultiplicity && a.m() != b.m()) return false;
  return canonical_form(a, mode) == canonical_form(b, mode);
}

Multigraph canonical_representative(const Multigraph& g, CanonMode mode) {
  Canonizer cz = make_canonizer(g, mode);
  std::vector<std::pair<int, int>> edge_list;
  for (int j = 1; j < cz.n; ++j)
    for (int i = 0; i < j; ++i) {
      int mult = cz.a[cz.best_order[i]][cz.best_order[j]];
      for (int k = 0; k < mult; ++k) edge_list.emplace_back(i, j);
    }
  return Multigraph::build(cz.n, edge_list);
}

}  // namespace brickforge

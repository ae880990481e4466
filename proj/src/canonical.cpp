#include "evako/canonical.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

namespace evako {

namespace {

struct LeafBudgetExceeded {};

class Canonicalizer {
 public:
  Canonicalizer(const Graph& g, std::size_t leaf_budget)
      : g_(g), n_(g.order()), adj_(n_ * n_, 0), budget_(leaf_budget) {
    nbrs_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (Vertex w : g.neighbors(g.vertices()[i])) {
        auto j = g.index_of(w);
        adj_[i * n_ + j] = 1;
        nbrs_[i].push_back(j);
      }
    }
    compute_twins();
  }

  CanonicalForm run() {
    std::vector<int> colors(n_, 0);
    refine(colors);
    if (n_ == 0) return {"E0:", {}, true};
    try {
      search(colors);
    } catch (const LeafBudgetExceeded&) {
      return fallback(colors);
    }
    CanonicalForm out;
    out.exact = true;
    out.order.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) out.order[best_positions_[i]] = g_.vertices()[i];
    out.key = "E" + std::to_string(n_) + ":";
    out.key.append(best_bits_.begin(), best_bits_.end());
    return out;
  }

 private:
  // Twins u, v share a cell and have N(u)\{v} == N(v)\{u}; swapping them is
  // an automorphism of every coloring that keeps them in the same cell.
  void compute_twins() {
    twin_class_.resize(n_);
    std::iota(twin_class_.begin(), twin_class_.end(), 0);
    for (std::size_t u = 0; u < n_; ++u) {
      if (twin_class_[u] != u) continue;
      for (std::size_t v = u + 1; v < n_; ++v) {
        if (twin_class_[v] != v) continue;
        bool twins = true;
        for (std::size_t w = 0; w < n_ && twins; ++w) {
          if (w == u || w == v) continue;
          twins = adj_[u * n_ + w] == adj_[v * n_ + w];
        }
        if (twins) twin_class_[v] = u;
      }
    }
  }

  // Colour refinement to the coarsest equitable partition finer than the
  // input. Colours are re-ranked by sorted signature so the result is
  // invariant under relabeling.
  void refine(std::vector<int>& colors) const {
    std::size_t classes = count_classes(colors);
    while (true) {
      std::vector<std::vector<int>> sig(n_);
      for (std::size_t v = 0; v < n_; ++v) {
        sig[v].reserve(nbrs_[v].size() + 1);
        for (auto w : nbrs_[v]) sig[v].push_back(colors[w]);
        std::sort(sig[v].begin(), sig[v].end());
        sig[v].insert(sig[v].begin(), colors[v]);
      }
      std::vector<std::vector<int>> uniq = sig;
      std::sort(uniq.begin(), uniq.end());
      uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
      for (std::size_t v = 0; v < n_; ++v)
        colors[v] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sig[v]) - uniq.begin());
      if (uniq.size() == classes) return;
      classes = uniq.size();
    }
  }

  static std::size_t count_classes(const std::vector<int>& colors) {
    std::vector<int> c = colors;
    std::sort(c.begin(), c.end());
    return static_cast<std::size_t>(std::unique(c.begin(), c.end()) - c.begin());
  }

  void search(std::vector<int> colors) {
    refine(colors);
    std::vector<std::size_t> cell_size(n_, 0);
    for (int c : colors) ++cell_size[c];
    int target = -1;
    for (std::size_t c = 0; c < n_; ++c)
      if (cell_size[c] > 1) {
        target = static_cast<int>(c);
        break;
      }
    if (target < 0) {
      leaf(colors);
      return;
    }
    std::vector<std::size_t> tried;
    for (std::size_t v = 0; v < n_; ++v) {
      if (colors[v] != target) continue;
      bool redundant = std::any_of(tried.begin(), tried.end(),
                                   [&](std::size_t t) { return twin_class_[t] == twin_class_[v]; });
      if (redundant) continue;
      tried.push_back(v);
      std::vector<int> next(n_);
      for (std::size_t w = 0; w < n_; ++w) next[w] = 2 * colors[w] + (w == v ? 0 : 1);
      search(std::move(next));
    }
  }

  void leaf(const std::vector<int>& colors) {
    if (++leaves_ > budget_) throw LeafBudgetExceeded{};
    std::vector<std::size_t> at(n_);
    for (std::size_t v = 0; v < n_; ++v) at[colors[v]] = v;
    std::vector<char> bits;
    bits.reserve(n_ * (n_ - 1) / 16 + 1);
    char byte = 0;
    int filled = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) {
        byte = static_cast<char>(byte << 1 | adj_[at[i] * n_ + at[j]]);
        if (++filled == 8) {
          bits.push_back(byte);
          byte = 0;
          filled = 0;
        }
      }
    }
    if (filled) bits.push_back(static_cast<char>(byte << (8 - filled)));
    if (best_bits_.empty() && !have_best_) {
      have_best_ = true;
    } else if (!(bits < best_bits_)) {
      return;
    }
    best_bits_ = std::move(bits);
    best_positions_.assign(colors.begin(), colors.end());
  }

  // Invariant hash: size, edge count, and the quotient matrix of the
  // equitable partition.
  CanonicalForm fallback(const std::vector<int>& colors) const {
    std::size_t k = count_classes(colors);
    std::vector<std::size_t> cell(k, 0);
    std::vector<std::vector<std::size_t>> quotient(k, std::vector<std::size_t>(k, 0));
    std::vector<bool> seen(k, false);
    for (std::size_t v = 0; v < n_; ++v) {
      ++cell[colors[v]];
      if (seen[colors[v]]) continue;
      seen[colors[v]] = true;
      for (auto w : nbrs_[v]) ++quotient[colors[v]][colors[w]];
    }
    std::string key = "H" + std::to_string(n_) + ":" + std::to_string(g_.size()) + ":";
    for (std::size_t c = 0; c < k; ++c) {
      key += std::to_string(cell[c]) + "[";
      for (std::size_t d = 0; d < k; ++d)
        if (quotient[c][d]) key += std::to_string(d) + "x" + std::to_string(quotient[c][d]) + ",";
      key += "]";
    }
    return {key, g_.vertex_set(), false};
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<std::uint8_t> adj_;
  std::vector<std::vector<std::size_t>> nbrs_;
  std::vector<std::size_t> twin_class_;
  std::size_t budget_;
  std::size_t leaves_ = 0;
  bool have_best_ = false;
  std::vector<char> best_bits_;
  std::vector<int> best_positions_;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g, std::size_t leaf_budget) {
  if (g.order() <= kExactCanonicalVertices) leaf_budget = std::numeric_limits<std::size_t>::max();
  return Canonicalizer(g, leaf_budget).run();
}

std::string canonical_key(const Graph& g) { return canonical_form(g).key; }

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  auto unlimited = std::numeric_limits<std::size_t>::max();
  return canonical_form(a, unlimited).key == canonical_form(b, unlimited).key;
}

}  // namespace evako

#include "lozenge/oracle.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <unordered_map>

namespace lozenge {

namespace {

// Backtracking over lozenge placements. Triangles are indexed in (y,x,orient)
// order; before every branch, degree-1 triangles commit their unique partner,
// and a triangle with no remaining partner aborts the branch.
class Search {
 public:
  explicit Search(const Region& r) : n_(static_cast<int>(r.size())) {
    const auto& tris = r.triangles();
    auto index_of = [&](const TriRef& t) -> int {
      auto it = std::lower_bound(tris.begin(), tris.end(), t);
      return (it != tris.end() && *it == t) ? static_cast<int>(it - tris.begin()) : -1;
    };
    weighted_ = r.has_weights();
    nbr_.assign(n_, {-1, -1, -1});
    wt_.resize(n_);
    covered_.assign(n_, 0);
    deg_.assign(n_, 0);
    for (int i = 0; i < n_; ++i) {
      const TriRef& t = tris[i];
      int cnt = 0;
      for (const TriRef& a : adjacent(t)) {
        int j = index_of(a);
        if (j < 0) continue;
        nbr_[i][cnt] = j;
        wt_[i][cnt] = weighted_ ? r.weight(LozengeRef::of(t, a)) : Rat(1);
        ++cnt;
      }
      deg_[i] = cnt;
    }
  }

  // visit(weight) is called once per complete tiling, with the chosen pairs
  // available through moves(). Returning false stops the whole search.
  template <typename Visit>
  void run(Visit&& visit) {
    stopped_ = false;
    uncovered_ = n_;
    weight_ = 1;
    if (n_ == 0) {
      visit(weight_);
      return;
    }
    dfs(0, visit);
  }

  const std::vector<std::pair<int, int>>& moves() const { return trail_; }

 private:
  template <typename Visit>
  void dfs(int hint, Visit&& visit) {
    std::size_t mark = trail_.size();
    if (propagate()) {
      if (uncovered_ == 0) {
        if (!visit(weight_)) stopped_ = true;
      } else {
        int t = hint;
        while (covered_[t]) ++t;
        // Partner slots in ascending partner-index order: deterministic
        // lexicographic choice sequence.
        std::array<int, 3> slots{};
        int pc = 0;
        for (int k = 0; k < 3; ++k)
          if (nbr_[t][k] >= 0 && !covered_[nbr_[t][k]]) slots[pc++] = k;
        std::sort(slots.begin(), slots.begin() + pc,
                  [&](int a, int b) { return nbr_[t][a] < nbr_[t][b]; });
        for (int i = 0; i < pc && !stopped_; ++i) {
          std::size_t inner = trail_.size();
          if (cover_pair(t, slots[i])) dfs(t + 1, visit);
          unwind(inner);
          forced_.clear();
        }
      }
    }
    unwind(mark);
    forced_.clear();
  }

  // Covers t together with its k-th neighbor. Returns false if some uncovered
  // triangle lost its last partner.
  bool cover_pair(int t, int k) {
    int u = nbr_[t][k];
    if (weighted_ && wt_[t][k] != 1) weight_ *= wt_[t][k];
    trail_.emplace_back(t, u);
    covered_[t] = covered_[u] = 1;
    uncovered_ -= 2;
    bool ok = true;
    for (int v : {t, u})
      for (int q : nbr_[v]) {
        if (q < 0 || covered_[q]) continue;
        if (--deg_[q] == 0) ok = false;
        else if (deg_[q] == 1) forced_.push_back(q);
      }
    return ok;
  }

  bool propagate() {
    while (!forced_.empty()) {
      int q = forced_.back();
      forced_.pop_back();
      if (covered_[q] || deg_[q] != 1) continue;  // stale entry
      int slot = -1;
      for (int k = 0; k < 3; ++k)
        if (nbr_[q][k] >= 0 && !covered_[nbr_[q][k]]) slot = k;
      if (slot < 0 || !cover_pair(q, slot)) return false;
    }
    return true;
  }

  void unwind(std::size_t mark) {
    while (trail_.size() > mark) {
      auto [t, u] = trail_.back();
      trail_.pop_back();
      // Mirror of cover_pair: t and u are both still marked covered while the
      // neighbor degrees are restored, then they rejoin the uncovered set.
      for (int v : {t, u})
        for (int q : nbr_[v])
          if (q >= 0 && !covered_[q]) ++deg_[q];
      covered_[t] = covered_[u] = 0;
      uncovered_ += 2;
      for (int v : {t, u}) {
        int d = 0;
        for (int q : nbr_[v])
          if (q >= 0 && !covered_[q]) ++d;
        deg_[v] = d;
      }
      if (weighted_) {
        int k = 0;
        while (nbr_[t][k] != u) ++k;
        if (wt_[t][k] != 1) weight_ /= wt_[t][k];
      }
    }
  }

  int n_;
  bool weighted_ = false;
  bool stopped_ = false;
  int uncovered_ = 0;
  Rat weight_;
  std::vector<std::array<int, 3>> nbr_;
  std::vector<std::array<Rat, 3>> wt_;
  std::vector<char> covered_;
  std::vector<int> deg_;
  std::vector<std::pair<int, int>> trail_;
  std::vector<int> forced_;
};

// Exact sliding-window profile count. Triangles are scanned in (y,x,orient)
// order; a state records which triangles in the lookahead window are already
// covered by a previously placed lozenge. Returns nothing when some forward
// gap exceeds the 63-bit window (caller falls back to plain backtracking).
std::optional<Rat> profile_count(const Region& r) {
  const auto& tris = r.triangles();
  const int n = static_cast<int>(tris.size());
  if (n == 0) return Rat(1);
  auto index_of = [&](const TriRef& t) -> int {
    auto it = std::lower_bound(tris.begin(), tris.end(), t);
    return (it != tris.end() && *it == t) ? static_cast<int>(it - tris.begin()) : -1;
  };
  const bool weighted = r.has_weights();
  // Forward neighbors and their lozenge weights per triangle.
  std::vector<std::array<int, 2>> fwd(n, {-1, -1});
  std::vector<std::array<Rat, 2>> fw(n);
  for (int i = 0; i < n; ++i) {
    int cnt = 0;
    for (const TriRef& a : adjacent(tris[i])) {
      int j = index_of(a);
      if (j <= i) continue;
      if (j - i > 63) return std::nullopt;
      fwd[i][cnt] = j;
      if (weighted) fw[i][cnt] = r.weight(LozengeRef::of(tris[i], a));
      ++cnt;  // a triangle has at most 2 forward neighbors in this order
    }
  }

  // mask bit k <=> triangle (i + k) is already covered.
  std::unordered_map<std::uint64_t, Rat> states, next;
  states.emplace(0, Rat(1));
  for (int i = 0; i < n; ++i) {
    next.clear();
    for (const auto& [mask, w] : states) {
      if (mask & 1) {
        auto [it, fresh] = next.try_emplace(mask >> 1, w);
        if (!fresh) it->second += w;
        continue;
      }
      for (int s = 0; s < 2; ++s) {
        int j = fwd[i][s];
        if (j < 0) break;
        std::uint64_t bit = std::uint64_t(1) << (j - i);
        if (mask & bit) continue;
        Rat nw = w;
        if (weighted && fw[i][s] != 1) nw *= fw[i][s];
        auto [it, fresh] = next.try_emplace((mask | bit) >> 1, nw);
        if (!fresh) it->second += nw;
      }
    }
    states.swap(next);
    if (states.empty()) return Rat(0);
  }
  Rat total = 0;
  for (const auto& [mask, w] : states)
    if (mask == 0) total += w;
  return total;
}

}  // namespace

Rat count_tilings(const Region& r) {
  if (!is_balanced(r)) return Rat(0);
  if (auto fast = profile_count(r)) return *fast;
  Search s(r);
  if (r.has_weights()) {
    Rat total = 0;
    s.run([&](const Rat& w) {
      total += w;
      return true;
    });
    return total;
  }
  Int total = 0;
  s.run([&](const Rat&) {
    ++total;
    return true;
  });
  return Rat(total);
}

void for_each_tiling(const Region& r, const std::function<bool(const Tiling&)>& visit) {
  if (!is_balanced(r)) return;
  Search s(r);
  const auto& tris = r.triangles();
  s.run([&](const Rat& w) {
    Tiling t;
    t.weight = w;
    t.lozenges.reserve(s.moves().size());
    for (auto [i, j] : s.moves()) t.lozenges.push_back(LozengeRef::of(tris[i], tris[j]));
    std::sort(t.lozenges.begin(), t.lozenges.end());
    return visit(t);
  });
}

std::vector<Tiling> enumerate_tilings(const Region& r, std::size_t limit) {
  if (r.size() > limit)
    throw precondition_error("region has " + std::to_string(r.size()) +
                             " triangles, above the enumeration limit of " +
                             std::to_string(limit));
  std::vector<Tiling> out;
  for_each_tiling(r, [&](const Tiling& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

namespace {

template <typename Mirror>
Rat count_symmetric(const Region& r, Mirror&& mirror) {
  Rat total = 0;
  for_each_tiling(r, [&](const Tiling& t) {
    for (const LozengeRef& l : t.lozenges)
      if (!std::binary_search(t.lozenges.begin(), t.lozenges.end(), mirror(l))) return true;
    total += t.weight;
    return true;
  });
  return total;
}

}  // namespace

Rat count_symmetric_vertical(const Region& r, int axis2) {
  if (!(reflect_vertical(r, axis2) == r))
    throw precondition_error("region is not symmetric about the vertical axis X = " +
                             std::to_string(axis2) + "/2");
  return count_symmetric(r, [&](const LozengeRef& l) { return reflect_vertical(l, axis2); });
}

Rat count_symmetric_horizontal(const Region& r, int line2) {
  if (line2 % 2 != 0 || !(reflect_horizontal(r, line2) == r))
    throw precondition_error("region is not symmetric about the horizontal line at height " +
                             std::to_string(line2) + "/2");
  return count_symmetric(r, [&](const LozengeRef& l) { return reflect_horizontal(l, line2); });
}

bool is_tileable(const Region& r) {
  if (!is_balanced(r)) return false;
  Search s(r);
  bool found = false;
  s.run([&](const Rat&) {
    found = true;
    return false;
  });
  return found;
}

}  // namespace lozenge

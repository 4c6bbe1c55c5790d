#include "sumint/extremal_search.hpp"

#include <algorithm>
#include <bit>
#include <charconv>

#include "sumint/error.hpp"

namespace sumint {

namespace {

// Largest n the clique engine accepts even when the caller raises the cap.
constexpr unsigned kHardSearchLimit = 10;

class Bitset {
 public:
  explicit Bitset(std::size_t bits = 0) : words_((bits + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return words_[i / 64] >> (i % 64) & 1U; }
  bool any() const {
    return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  std::size_t first() const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k]) return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
    return words_.size() * 64;
  }
  Bitset& operator&=(const Bitset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  void and_not(const Bitset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
  }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

 private:
  std::vector<std::uint64_t> words_;
};

// Maximum clique by colour-bounded branch and bound on bitsets.
class CliqueSolver {
 public:
  explicit CliqueSolver(std::vector<Bitset> adjacency) : adj_(std::move(adjacency)), size_(adj_.size()) {}

  std::size_t vertex_count() const { return size_; }
  const Bitset& neighbours(std::size_t v) const { return adj_[v]; }

  // Size of the largest clique inside `candidates`, stopping early once
  // `target` is reached (target 0 means no early stop).
  std::size_t max_clique(Bitset candidates, std::size_t target = 0) {
    best_ = 0;
    target_ = target;
    expand(std::move(candidates), 0);
    return best_;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  bool done() const { return target_ != 0 && best_ >= target_; }

  void expand(Bitset p, std::size_t depth) {
    ++nodes_;
    std::vector<std::size_t> order;
    std::vector<std::size_t> colour;
    Bitset uncoloured = p;
    std::size_t c = 0;
    while (uncoloured.any()) {
      ++c;
      Bitset q = uncoloured;
      while (q.any()) {
        const std::size_t v = q.first();
        q.reset(v);
        uncoloured.reset(v);
        q.and_not(adj_[v]);
        order.push_back(v);
        colour.push_back(c);
      }
    }
    for (std::size_t i = order.size(); i-- > 0;) {
      if (depth + colour[i] <= best_ || done()) return;
      const std::size_t v = order[i];
      Bitset next = p & adj_[v];
      if (next.any()) {
        expand(std::move(next), depth + 1);
      } else if (depth + 1 > best_) {
        best_ = depth + 1;
      }
      p.reset(v);
    }
  }

  std::vector<Bitset> adj_;
  std::size_t size_;
  std::size_t best_ = 0;
  std::size_t target_ = 0;
  std::uint64_t nodes_ = 0;
};

// Vertices re-indexed so that the vertex removed first in a minimum-degree
// peel sits last. Ties go to the smaller original index.
std::vector<std::size_t> degeneracy_order(const std::vector<Bitset>& adj) {
  const std::size_t n = adj.size();
  std::vector<std::size_t> degree(n);
  for (std::size_t v = 0; v < n; ++v) degree[v] = adj[v].count();
  std::vector<bool> removed(n, false);
  std::vector<std::size_t> peel;
  peel.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = n;
    for (std::size_t v = 0; v < n; ++v)
      if (!removed[v] && (pick == n || degree[v] < degree[pick])) pick = v;
    removed[pick] = true;
    peel.push_back(pick);
    for (std::size_t u = 0; u < n; ++u)
      if (!removed[u] && adj[pick].test(u)) --degree[u];
  }
  std::reverse(peel.begin(), peel.end());
  return peel;
}

bool sum_pattern(std::uint64_t a) {
  for (std::uint64_t rest = a; rest; rest &= rest - 1) {
    const unsigned x = static_cast<unsigned>(std::countr_zero(rest)) + 1;
    if ((a << x) & a) return true;  // some y with y + x in a
  }
  return false;
}

bool distinct_sum_pattern(std::uint64_t a) {
  for (std::uint64_t rest = a; rest; rest &= rest - 1) {
    const unsigned x = static_cast<unsigned>(std::countr_zero(rest)) + 1;
    // y > x with x + y in a: shift the elements above x
    const std::uint64_t above = x >= 64 ? 0 : a & ~((std::uint64_t{2} << (x - 1)) - 1);
    if ((above << x) & a) return true;
  }
  return false;
}

bool k_sum_pattern(std::uint64_t a, unsigned k) {
  std::uint64_t reach = a;  // bit s-1 set when s is a sum of i elements
  for (unsigned i = 1; i < k && reach; ++i) {
    std::uint64_t next = 0;
    for (std::uint64_t rest = a; rest; rest &= rest - 1) {
      const unsigned x = static_cast<unsigned>(std::countr_zero(rest)) + 1;
      next |= reach << x;
    }
    reach = next;
  }
  return (reach & a) != 0;
}

std::string pattern_name(const IntersectionPredicate& p) { return p.name(); }

}  // namespace

IntersectionPredicate IntersectionPredicate::k_sum(unsigned k) {
  if (k < 2) fail(ErrorCode::InvalidArgument, "k-sum needs k >= 2");
  return k == 2 ? sum() : IntersectionPredicate{PatternKind::KSum, k};
}

IntersectionPredicate IntersectionPredicate::parse(std::string_view text) {
  if (text == "sum") return sum();
  if (text == "distinct-sum") return distinct_sum();
  if (text.starts_with("ksum:")) {
    const std::string_view num = text.substr(5);
    unsigned k = 0;
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), k);
    if (ec == std::errc() && ptr == num.data() + num.size()) return k_sum(k);
  }
  fail(ErrorCode::InvalidArgument, "unknown predicate '" + std::string(text) + "' (sum, distinct-sum, ksum:K)");
}

std::string IntersectionPredicate::name() const {
  switch (kind) {
    case PatternKind::Sum: return "sum";
    case PatternKind::DistinctSum: return "distinct-sum";
    case PatternKind::KSum: return "ksum:" + std::to_string(k);
  }
  return "sum";
}

bool contains_pattern(std::uint64_t mask, const IntersectionPredicate& pred) {
  if (mask >> 63) return contains_pattern(IntSet::from_mask(mask), pred);
  switch (pred.kind) {
    case PatternKind::Sum: return sum_pattern(mask);
    case PatternKind::DistinctSum: return distinct_sum_pattern(mask);
    case PatternKind::KSum: return k_sum_pattern(mask, pred.k);
  }
  return false;
}

bool contains_pattern(const IntSet& a, const IntersectionPredicate& pred) {
  if (a.max() <= 63) return contains_pattern(a.to_mask(), pred);
  const auto top = a.max();
  switch (pred.kind) {
    case PatternKind::Sum:
    case PatternKind::DistinctSum:
      for (auto x : a)
        for (auto y : a) {
          if (y < x || (pred.kind == PatternKind::DistinctSum && y == x)) continue;
          if (x + y > top) break;
          if (a.contains(x + y)) return true;
        }
      return false;
    case PatternKind::KSum: {
      std::vector<bool> reach(top + 1, false);
      for (auto x : a) reach[x] = true;
      for (unsigned i = 1; i < pred.k; ++i) {
        std::vector<bool> next(top + 1, false);
        for (std::uint64_t s = 1; s <= top; ++s)
          if (reach[s])
            for (auto x : a) {
              if (s + x > top) break;
              next[s + x] = true;
            }
        reach = std::move(next);
      }
      for (auto x : a)
        if (reach[x]) return true;
      return false;
    }
  }
  return false;
}

bool is_valid_family(const SetFamily& family, const IntersectionPredicate& pred) {
  const auto& m = family.members;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i; j < m.size(); ++j)
      if (!contains_pattern(m[i] & m[j], pred)) return false;
  return true;
}

SetFamily canonical_family(unsigned n, const IntSet& base, const IntersectionPredicate& pred) {
  if (n > 63) fail(ErrorCode::CapExceeded, "dimension " + std::to_string(n) + " exceeds 63");
  if (base.max() > n) fail(ErrorCode::InvalidArgument, "base {" + base.str() + "} is not inside [" + std::to_string(n) + "]");
  if (!contains_pattern(base, pred))
    fail(ErrorCode::InvalidArgument, "base {" + base.str() + "} does not contain a " + pattern_name(pred) + " pattern");
  if (n - base.size() > 24) fail(ErrorCode::CapExceeded, "canonical family too large to materialise");
  const std::uint64_t b = base.to_mask();
  const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  const std::uint64_t free = full & ~b;
  std::vector<std::uint64_t> members;
  // enumerate subsets of the free bits in increasing order
  for (std::uint64_t sub = 0;; sub = (sub - free) & free) {
    members.push_back(b | sub);
    if (sub == free) break;
  }
  return SetFamily::from_masks(n, std::move(members));
}

SearchResult max_family(unsigned n, const IntersectionPredicate& pred, unsigned cap) {
  if (n > std::min(cap, kHardSearchLimit))
    fail(ErrorCode::CapExceeded,
         "n = " + std::to_string(n) + " exceeds the search cap " + std::to_string(std::min(cap, kHardSearchLimit)));
  SearchResult r;
  r.n = n;
  r.predicate = pred;

  switch (pred.kind) {
    case PatternKind::Sum:
      r.conjectured = Rational(1, 4);
      if (n >= 2) r.construction_size = std::uint64_t{1} << (n - 2);
      break;
    case PatternKind::DistinctSum:
      r.conjectured = Rational(1, 8);
      if (n >= 3) r.construction_size = std::uint64_t{1} << (n - 3);
      break;
    case PatternKind::KSum:
      r.conjectured = Rational(1, 4);
      if (n >= pred.k) r.construction_size = std::uint64_t{1} << (n - 2);
      break;
  }

  // Vertices in increasing bitmask order, so vertex index order is witness order.
  std::vector<std::uint64_t> masks;
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a)
    if (contains_pattern(a, pred)) masks.push_back(a);
  const std::size_t nv = masks.size();
  r.vertex_count = nv;
  r.witness.n = n;
  if (nv == 0) return r;

  // Relabel by degeneracy order for the search itself.
  std::vector<Bitset> raw(nv, Bitset(nv));
  for (std::size_t i = 0; i < nv; ++i)
    for (std::size_t j = i + 1; j < nv; ++j)
      if (contains_pattern(masks[i] & masks[j], pred)) {
        raw[i].set(j);
        raw[j].set(i);
      }
  const std::vector<std::size_t> order = degeneracy_order(raw);
  std::vector<std::size_t> pos(nv);
  for (std::size_t k = 0; k < nv; ++k) pos[order[k]] = k;
  std::vector<Bitset> adj(nv, Bitset(nv));
  for (std::size_t i = 0; i < nv; ++i)
    for (std::size_t j = 0; j < nv; ++j)
      if (raw[i].test(j)) adj[pos[i]].set(pos[j]);
  CliqueSolver solver(std::move(adj));

  Bitset all(nv);
  for (std::size_t k = 0; k < nv; ++k) all.set(k);
  const std::size_t omega = solver.max_clique(all);
  r.max_size = omega;
  r.node_count = solver.nodes();

  // Lexicographically least maximum clique: fix members one at a time in
  // increasing mask order, keeping a completion of size omega possible.
  std::vector<std::uint64_t> chosen;
  Bitset cand = all;  // in solver labels
  std::size_t after = 0;  // original index bound: only vertices > last chosen
  for (std::size_t t = 0; t < omega; ++t) {
    bool placed = false;
    for (std::size_t v = after; v < nv && !placed; ++v) {
      const std::size_t sv = pos[v];
      if (!cand.test(sv)) continue;
      Bitset rest = cand & solver.neighbours(sv);
      for (std::size_t u = 0; u <= v; ++u) rest.reset(pos[u]);
      const std::size_t need = omega - t - 1;
      if (need == 0 || solver.max_clique(rest, need) >= need) {
        chosen.push_back(masks[v]);
        cand = std::move(rest);
        after = v + 1;
        placed = true;
      }
    }
    if (!placed) fail(ErrorCode::Internal, "witness reconstruction lost the maximum clique");
  }
  r.witness = SetFamily::from_masks(n, std::move(chosen));
  if (!is_valid_family(r.witness, pred) || r.witness.size() != omega)
    fail(ErrorCode::Internal, "clique witness failed family re-validation");
  return r;
}

}  // namespace sumint

#include "hcob/coset.hpp"

#include <cstdlib>

#include "hcob/errors.hpp"

namespace hcob {

std::vector<int> reduce_word(const std::vector<int>& word, bool cyclic) {
  std::vector<int> out;
  for (int l : word) {
    if (l == 0) throw InputError("word contains the letter 0");
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  if (cyclic) {
    std::size_t a = 0, b = out.size();
    while (b - a >= 2 && out[a] == -out[b - 1]) {
      ++a;
      --b;
    }
    out = std::vector<int>(out.begin() + static_cast<long>(a), out.begin() + static_cast<long>(b));
  }
  return out;
}

namespace {

constexpr int kUndefined = -1;

class CosetTable {
 public:
  CosetTable(int generators, std::size_t limit) : columns_(2 * generators), limit_(limit) { add_row(); }

  bool overflow() const { return overflow_; }
  std::size_t live() const { return live_; }
  std::size_t defined() const { return parent_.size(); }
  std::size_t max_live() const { return max_live_; }
  bool is_live(int c) const { return parent_[c] == c; }

  int& entry(int c, int col) { return table_[static_cast<std::size_t>(c) * columns_ + col]; }

  // Column of a signed letter; the inverse letter lives in column ^ 1.
  static int column(int letter) { return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1; }

  bool define(int c, int col) {
    if (live_ >= limit_) {
      overflow_ = true;
      return false;
    }
    const int n = add_row();
    entry(c, col) = n;
    entry(n, col ^ 1) = c;
    return true;
  }

  // Trace w from c forwards and backwards, filling gaps. Returns false on
  // overflow.
  bool scan_and_fill(int c, const std::vector<int>& w) {
    const int len = static_cast<int>(w.size());
    int f = c, b = c;
    int i = 0, j = len - 1;
    while (true) {
      while (i <= j && entry(f, column(w[i])) != kUndefined) {
        f = entry(f, column(w[i]));
        ++i;
      }
      if (i > j) {
        if (f != b) coincidence(f, b);
        return true;
      }
      while (j >= i && entry(b, column(w[j]) ^ 1) != kUndefined) {
        b = entry(b, column(w[j]) ^ 1);
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return true;
      }
      if (i == j) {
        entry(f, column(w[i])) = b;
        entry(b, column(w[i]) ^ 1) = f;
        return true;
      }
      if (!define(f, column(w[i]))) return false;
    }
  }

  int columns() const { return columns_; }

 private:
  int add_row() {
    const int n = static_cast<int>(parent_.size());
    parent_.push_back(n);
    table_.resize(table_.size() + columns_, kUndefined);
    ++live_;
    if (live_ > max_live_) max_live_ = live_;
    return n;
  }

  int rep(int k) {
    int r = k;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[k] != r) {
      const int next = parent_[k];
      parent_[k] = r;
      k = next;
    }
    return r;
  }

  void merge(int k, int l, std::vector<int>& queue) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    if (k > l) std::swap(k, l);
    parent_[l] = k;
    --live_;
    queue.push_back(l);
  }

  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const int g = queue[i];
      for (int x = 0; x < columns_; ++x) {
        const int d = entry(g, x);
        if (d == kUndefined) continue;
        entry(d, x ^ 1) = kUndefined;
        const int mu = rep(g);
        const int nu = rep(d);
        if (entry(mu, x) != kUndefined) {
          merge(nu, entry(mu, x), queue);
        } else if (entry(nu, x ^ 1) != kUndefined) {
          merge(mu, entry(nu, x ^ 1), queue);
        } else {
          entry(mu, x) = nu;
          entry(nu, x ^ 1) = mu;
        }
      }
    }
  }

  int columns_;
  std::size_t limit_;
  std::vector<int> parent_;
  std::vector<int> table_;
  std::size_t live_ = 0;
  std::size_t max_live_ = 0;
  bool overflow_ = false;
};

}  // namespace

CosetEnumeration coset_enumeration(const GroupPresentation& p, std::size_t limit) {
  if (p.generators < 0) throw InputError("negative generator count");
  if (limit == 0) throw InputError("coset limit must be positive");
  std::vector<std::vector<int>> relators;
  for (const auto& r : p.relators) {
    for (int l : r)
      if (l == 0 || std::abs(l) > p.generators) throw InputError("relator letter out of range");
    auto w = reduce_word(r, /*cyclic=*/true);
    if (!w.empty()) relators.push_back(std::move(w));
  }

  CosetTable t(p.generators, limit);
  CosetEnumeration out;
  for (int c = 0; c < static_cast<int>(t.defined()); ++c) {
    for (const auto& r : relators) {
      if (!t.is_live(c)) break;
      if (!t.scan_and_fill(c, r)) {
        out.cosets_defined = t.defined();
        out.max_live = t.max_live();
        return out;
      }
    }
    for (int x = 0; x < t.columns() && t.is_live(c); ++x) {
      if (t.entry(c, x) != kUndefined) continue;
      if (!t.define(c, x)) {
        out.cosets_defined = t.defined();
        out.max_live = t.max_live();
        return out;
      }
    }
  }
  out.order = t.live();
  out.cosets_defined = t.defined();
  out.max_live = t.max_live();
  return out;
}

Abelianization abelianization(const GroupPresentation& p) {
  if (p.generators < 0) throw InputError("negative generator count");
  IntMatrix m(p.relators.size(), static_cast<std::size_t>(p.generators));
  for (std::size_t i = 0; i < p.relators.size(); ++i)
    for (int l : p.relators[i]) {
      if (l == 0 || std::abs(l) > p.generators) throw InputError("relator letter out of range");
      m(i, static_cast<std::size_t>(std::abs(l) - 1)) += l > 0 ? 1 : -1;
    }
  Abelianization out;
  const auto factors = invariant_factors(m);
  out.free_rank = static_cast<std::size_t>(p.generators) - factors.size();
  for (const auto& f : factors)
    if (f > 1) out.torsion.push_back(f);
  return out;
}

}  // namespace hcob

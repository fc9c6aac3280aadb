// Reference executors for the 28 sorting tasks (categories 1-3).
//
// Event conventions shared by every sorting oracle:
//   compare [x, y]   one evaluation of the key-order predicate on values
//   swap    [i, j]   exchange of positions i and j
//   write   [i, v]   assignment a[i] = v
// plus per-algorithm structural events (pivot, gap, merge, reverse, ...).
// A "comparison" is every evaluation of the order predicate, including
// pass-terminating checks; totals are defined by this convention.

#include <cmath>
#include <deque>
#include <list>
#include <queue>

#include "common.hpp"

namespace prime::oracles {
namespace {

class SortOps {
 public:
  SortOps(std::vector<i64> a, Emitter& em) : a_(std::move(a)), em_(em) {}

  std::vector<i64>& arr() { return a_; }
  std::size_t size() const { return a_.size(); }
  i64 at(std::size_t i) const { return a_[i]; }

  // Order predicate on raw values; one compare event per call.
  bool less(i64 x, i64 y) {
    em_.emit("compare", {x, y});
    return x < y;
  }
  bool less_eq(i64 x, i64 y) {
    em_.emit("compare", {x, y});
    return x <= y;
  }
  bool greater(i64 x, i64 y) {
    em_.emit("compare", {x, y});
    return x > y;
  }
  bool greater_at(std::size_t i, std::size_t j) { return greater(a_[i], a_[j]); }

  void swap_at(std::size_t i, std::size_t j) {
    std::swap(a_[i], a_[j]);
    em_.emit("swap", {static_cast<i64>(i), static_cast<i64>(j)});
    em_.snapshot_with([&] { return vec_state(a_); });
  }

  void write_at(std::size_t i, i64 v) {
    a_[i] = v;
    em_.emit("write", {static_cast<i64>(i), v});
    em_.snapshot_with([&] { return vec_state(a_); });
  }

  void structural(const char* kind, std::initializer_list<i64> args,
                  std::string note = {}) {
    em_.emit(kind, args, std::move(note));
    em_.snapshot_with([&] { return vec_state(a_); });
  }

  Emitter& em() { return em_; }

 private:
  std::vector<i64> a_;
  Emitter& em_;
};

// ---------------------------------------------------------------------------
// Category 1: comparison-based sorts

void bubble_sort(SortOps& s) {
  const std::size_t n = s.size();
  for (std::size_t pass = 1; pass < n || n <= 1; ++pass) {
    bool swapped = false;
    for (std::size_t i = 0; i + pass < n; ++i) {
      if (s.greater_at(i, i + 1)) {
        s.swap_at(i, i + 1);
        swapped = true;
      }
    }
    if (!swapped || n <= 1) break;
  }
}

void selection_sort(SortOps& s) {
  const std::size_t n = s.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    std::size_t min_idx = i;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (s.less(s.at(j), s.at(min_idx))) min_idx = j;
    }
    s.structural("select", {static_cast<i64>(i), static_cast<i64>(min_idx)});
    if (min_idx != i) s.swap_at(i, min_idx);
  }
}

void insertion_sort_range(SortOps& s, std::size_t lo, std::size_t hi) {
  for (std::size_t i = lo + 1; i <= hi; ++i) {
    const i64 key = s.at(i);
    std::size_t j = i;
    bool moved = false;
    while (j > lo && s.greater(s.at(j - 1), key)) {
      s.write_at(j, s.at(j - 1));
      --j;
      moved = true;
    }
    if (moved) s.write_at(j, key);
  }
}

void insertion_sort(SortOps& s) {
  if (s.size() > 1) insertion_sort_range(s, 0, s.size() - 1);
}

void shell_sort(SortOps& s) {
  const std::size_t n = s.size();
  if (n <= 1) return;
  // Knuth sequence: h = 3h + 1 while h < n/3.
  std::size_t h = 1;
  while (h < n / 3) h = 3 * h + 1;
  for (; h >= 1; h = (h - 1) / 3) {
    s.structural("gap", {static_cast<i64>(h)});
    for (std::size_t i = h; i < n; ++i) {
      const i64 key = s.at(i);
      std::size_t j = i;
      bool moved = false;
      while (j >= h && s.greater(s.at(j - h), key)) {
        s.write_at(j, s.at(j - h));
        j -= h;
        moved = true;
      }
      if (moved) s.write_at(j, key);
    }
    if (h == 1) break;
  }
}

void merge_ranges(SortOps& s, std::size_t lo, std::size_t mid, std::size_t hi) {
  s.structural("merge", {static_cast<i64>(lo), static_cast<i64>(mid),
                         static_cast<i64>(hi)});
  std::vector<i64> left(s.arr().begin() + lo, s.arr().begin() + mid + 1);
  std::vector<i64> right(s.arr().begin() + mid + 1, s.arr().begin() + hi + 1);
  std::size_t i = 0, j = 0, k = lo;
  while (i < left.size() && j < right.size()) {
    if (s.less_eq(left[i], right[j])) {  // <= keeps equal keys stable
      s.write_at(k++, left[i++]);
    } else {
      s.write_at(k++, right[j++]);
    }
  }
  while (i < left.size()) s.write_at(k++, left[i++]);
  while (j < right.size()) s.write_at(k++, right[j++]);
}

void merge_sort_rec(SortOps& s, std::size_t lo, std::size_t hi) {
  if (lo >= hi) return;
  const std::size_t mid = lo + (hi - lo) / 2;
  s.em().emit("split", {static_cast<i64>(lo), static_cast<i64>(mid),
                        static_cast<i64>(hi)});
  merge_sort_rec(s, lo, mid);
  merge_sort_rec(s, mid + 1, hi);
  merge_ranges(s, lo, mid, hi);
}

void merge_sort(SortOps& s) {
  if (s.size() > 1) merge_sort_rec(s, 0, s.size() - 1);
}

// Lomuto partition with last-element pivot.
std::size_t lomuto_partition(SortOps& s, std::size_t lo, std::size_t hi) {
  const i64 pivot = s.at(hi);
  s.structural("pivot", {static_cast<i64>(hi), pivot});
  std::size_t i = lo;
  for (std::size_t j = lo; j < hi; ++j) {
    if (s.less(s.at(j), pivot)) {
      if (i != j) s.swap_at(i, j);
      ++i;
    }
  }
  if (i != hi) s.swap_at(i, hi);
  return i;
}

void quick_sort_rec(SortOps& s, std::size_t lo, std::size_t hi) {
  if (lo >= hi) return;
  const std::size_t p = lomuto_partition(s, lo, hi);
  if (p > lo) quick_sort_rec(s, lo, p - 1);
  quick_sort_rec(s, p + 1, hi);
}

void quick_sort(SortOps& s) {
  if (s.size() > 1) quick_sort_rec(s, 0, s.size() - 1);
}

void max_heapify(SortOps& s, std::size_t i, std::size_t heap_size) {
  for (;;) {
    const std::size_t l = 2 * i + 1, r = 2 * i + 2;
    std::size_t largest = i;
    if (l < heap_size && s.greater_at(l, largest)) largest = l;
    if (r < heap_size && s.greater_at(r, largest)) largest = r;
    if (largest == i) return;
    s.swap_at(i, largest);
    i = largest;
  }
}

void heap_sort(SortOps& s) {
  const std::size_t n = s.size();
  if (n <= 1) return;
  for (std::size_t i = n / 2; i-- > 0;) {
    s.em().emit("heapify", {static_cast<i64>(i)});
    max_heapify(s, i, n);
  }
  for (std::size_t end = n - 1; end > 0; --end) {
    s.swap_at(0, end);
    s.em().emit("extract", {s.at(end)});
    max_heapify(s, 0, end);
  }
}

// Tree sort: BST insertion (equal keys to the right for stability) followed
// by inorder traversal.
void tree_sort(SortOps& s) {
  struct Node {
    i64 key;
    int left = -1, right = -1;
  };
  const std::size_t n = s.size();
  if (n <= 1) return;
  std::vector<Node> pool;
  pool.reserve(n);
  pool.push_back({s.at(0)});
  s.em().emit("insert", {s.at(0)}, "root");
  for (std::size_t i = 1; i < n; ++i) {
    const i64 key = s.at(i);
    int cur = 0;
    for (;;) {
      if (s.less(key, pool[cur].key)) {
        if (pool[cur].left < 0) {
          pool[cur].left = static_cast<int>(pool.size());
          pool.push_back({key});
          break;
        }
        cur = pool[cur].left;
      } else {
        if (pool[cur].right < 0) {
          pool[cur].right = static_cast<int>(pool.size());
          pool.push_back({key});
          break;
        }
        cur = pool[cur].right;
      }
    }
    s.em().emit("insert", {key});
  }
  // Iterative inorder writeback.
  std::vector<int> stack;
  int cur = 0;
  std::size_t out = 0;
  while (cur >= 0 || !stack.empty()) {
    while (cur >= 0) {
      stack.push_back(cur);
      cur = pool[cur].left;
    }
    cur = stack.back();
    stack.pop_back();
    s.write_at(out++, pool[cur].key);
    cur = pool[cur].right;
  }
}

void cocktail_shaker_sort(SortOps& s) {
  if (s.size() <= 1) return;
  std::size_t lo = 0, hi = s.size() - 1;
  bool swapped = true;
  while (swapped && lo < hi) {
    swapped = false;
    for (std::size_t i = lo; i < hi; ++i) {
      if (s.greater_at(i, i + 1)) {
        s.swap_at(i, i + 1);
        swapped = true;
      }
    }
    if (!swapped) break;
    --hi;
    swapped = false;
    for (std::size_t i = hi; i-- > lo;) {
      if (s.greater_at(i, i + 1)) {
        s.swap_at(i, i + 1);
        swapped = true;
      }
    }
    ++lo;
  }
}

void comb_sort(SortOps& s) {
  const std::size_t n = s.size();
  if (n <= 1) return;
  std::size_t gap = n;
  bool swapped = true;
  while (gap > 1 || swapped) {
    gap = std::max<std::size_t>(1, gap * 10 / 13);  // shrink factor 1.3
    s.em().emit("gap", {static_cast<i64>(gap)});
    swapped = false;
    for (std::size_t i = 0; i + gap < n; ++i) {
      if (s.greater_at(i, i + gap)) {
        s.swap_at(i, i + gap);
        swapped = true;
      }
    }
  }
}

void gnome_sort(SortOps& s) {
  const std::size_t n = s.size();
  std::size_t pos = 0;
  while (pos < n) {
    if (pos == 0 || !s.greater_at(pos - 1, pos)) {
      ++pos;
    } else {
      s.swap_at(pos - 1, pos);
      --pos;
    }
  }
}

void odd_even_sort(SortOps& s) {
  const std::size_t n = s.size();
  if (n <= 1) return;
  bool sorted = false;
  while (!sorted) {
    sorted = true;
    for (std::size_t i = 1; i + 1 < n; i += 2) {
      if (s.greater_at(i, i + 1)) {
        s.swap_at(i, i + 1);
        sorted = false;
      }
    }
    for (std::size_t i = 0; i + 1 < n; i += 2) {
      if (s.greater_at(i, i + 1)) {
        s.swap_at(i, i + 1);
        sorted = false;
      }
    }
  }
}

void pancake_flip(SortOps& s, std::size_t k) {
  s.structural("reverse", {static_cast<i64>(k)});
  for (std::size_t i = 0, j = k - 1; i < j; ++i, --j) {
    std::swap(s.arr()[i], s.arr()[j]);
  }
  s.em().snapshot_with([&] { return vec_state(s.arr()); });
}

void pancake_sort(SortOps& s) {
  for (std::size_t size = s.size(); size > 1; --size) {
    std::size_t max_idx = 0;
    for (std::size_t i = 1; i < size; ++i) {
      if (s.greater_at(i, max_idx)) max_idx = i;
    }
    if (max_idx == size - 1) continue;
    if (max_idx != 0) pancake_flip(s, max_idx + 1);
    pancake_flip(s, size);
  }
}

void cycle_sort(SortOps& s) {
  const std::size_t n = s.size();
  for (std::size_t start = 0; n > 1 && start + 1 < n; ++start) {
    i64 item = s.at(start);
    std::size_t pos = start;
    for (std::size_t i = start + 1; i < n; ++i) {
      if (s.less(s.at(i), item)) ++pos;
    }
    if (pos == start) continue;
    while (item == s.at(pos)) ++pos;
    std::swap(item, s.arr()[pos]);
    s.structural("write", {static_cast<i64>(pos), s.at(pos)}, "cycle");
    while (pos != start) {
      pos = start;
      for (std::size_t i = start + 1; i < n; ++i) {
        if (s.less(s.at(i), item)) ++pos;
      }
      while (item == s.at(pos)) ++pos;
      std::swap(item, s.arr()[pos]);
      s.structural("write", {static_cast<i64>(pos), s.at(pos)}, "cycle");
    }
  }
}

void stooge_sort_rec(SortOps& s, std::size_t lo, std::size_t hi) {
  if (s.greater_at(lo, hi)) s.swap_at(lo, hi);
  if (hi - lo + 1 > 2) {
    const std::size_t t = (hi - lo + 1) / 3;
    stooge_sort_rec(s, lo, hi - t);
    stooge_sort_rec(s, lo + t, hi);
    stooge_sort_rec(s, lo, hi - t);
  }
}

void stooge_sort(SortOps& s) {
  if (s.size() > 1) stooge_sort_rec(s, 0, s.size() - 1);
}

// ---------------------------------------------------------------------------
// Category 2: non-comparison sorts

std::string counting_sort_run(const json& payload, TraceSink& sink) {
  Emitter em(sink);
  std::vector<i64> a = to_vec(payload.at("array"));
  const i64 k = payload.at("k").get<i64>();
  std::vector<i64> counts(static_cast<std::size_t>(k) + 1, 0);
  for (i64 v : a) {
    counts[static_cast<std::size_t>(v)]++;
    em.emit("count", {v, counts[static_cast<std::size_t>(v)]});
  }
  i64 running = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    running += counts[i];
    counts[i] = running;
    em.emit("cumulate", {static_cast<i64>(i), running});
  }
  std::vector<i64> out(a.size(), 0);
  for (std::size_t i = a.size(); i-- > 0;) {  // reverse scan keeps stability
    const i64 v = a[i];
    const i64 pos = --counts[static_cast<std::size_t>(v)];
    out[static_cast<std::size_t>(pos)] = v;
    em.emit("place", {pos, v});
  }
  em.snapshot_with([&] { return vec_state(out); });
  return answer_array(out);
}

std::string radix_sort_run(const json& payload, TraceSink& sink) {
  Emitter em(sink);
  std::vector<i64> a = to_vec(payload.at("array"));
  const int digits = payload.at("digits").get<int>();
  std::vector<i64> out(a.size());
  i64 divisor = 1;
  for (int d = 0; d < digits; ++d, divisor *= 10) {
    em.emit("digit", {d});
    std::array<i64, 10> counts{};
    for (i64 v : a) {
      const int dig = static_cast<int>((v / divisor) % 10);
      counts[dig]++;
      em.emit("count", {dig, counts[dig]});
    }
    i64 running = 0;
    for (int i = 0; i < 10; ++i) {
      running += counts[i];
      counts[i] = running;
    }
    for (std::size_t i = a.size(); i-- > 0;) {
      const int dig = static_cast<int>((a[i] / divisor) % 10);
      const i64 pos = --counts[dig];
      out[static_cast<std::size_t>(pos)] = a[i];
      em.emit("place", {pos, a[i]});
    }
    a.swap(out);
    em.snapshot_with([&] { return vec_state(a); });
  }
  return answer_array(a);
}

// Keys are fixed-precision decimals in [0,1) serialized as "0.dddddd";
// comparisons run on the integer millionths value.
std::string bucket_sort_run(const json& payload, TraceSink& sink) {
  Emitter em(sink);
  std::vector<std::string> keys;
  for (const auto& k : payload.at("keys")) keys.push_back(k.get<std::string>());
  const std::size_t n = keys.size();
  auto millionths = [](const std::string& k) {
    return static_cast<i64>(std::stoll(k.substr(2)));
  };
  std::vector<std::vector<std::string>> buckets(n);
  for (const auto& k : keys) {
    const std::size_t b =
        static_cast<std::size_t>(millionths(k) * static_cast<i64>(n) / 1000000);
    buckets[b].push_back(k);
    em.emit("bucket", {static_cast<i64>(b), millionths(k)}, k);
  }
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t b = 0; b < n; ++b) {
    auto& bucket = buckets[b];
    for (std::size_t i = 1; i < bucket.size(); ++i) {  // insertion sort
      std::string key = bucket[i];
      std::size_t j = i;
      while (j > 0) {
        em.emit("compare", {millionths(bucket[j - 1]), millionths(key)});
        if (millionths(bucket[j - 1]) <= millionths(key)) break;
        bucket[j] = bucket[j - 1];
        --j;
      }
      bucket[j] = key;
    }
    for (const auto& k : bucket) {
      em.emit("place", {static_cast<i64>(out.size())}, k);
      out.push_back(k);
    }
  }
  json ans = json::array();
  for (const auto& k : out) ans.push_back(k);
  return ans.dump();
}

// ---------------------------------------------------------------------------
// Category 3: advanced / hybrid sorts

std::size_t timsort_minrun(std::size_t n) {
  std::size_t r = 0;
  while (n >= 64) {
    r |= n & 1;
    n >>= 1;
  }
  return n + r;
}

// Binary insertion used to extend short runs to minrun.
void binary_insertion(SortOps& s, std::size_t lo, std::size_t start,
                      std::size_t hi) {
  for (std::size_t i = start; i <= hi; ++i) {
    const i64 key = s.at(i);
    std::size_t left = lo, right = i;
    while (left < right) {
      const std::size_t mid = (left + right) / 2;
      if (s.less(key, s.at(mid))) {
        right = mid;
      } else {
        left = mid + 1;
      }
    }
    for (std::size_t j = i; j > left; --j) s.write_at(j, s.at(j - 1));
    if (left != i) s.write_at(left, key);
  }
}

struct TimRun {
  std::size_t base, len;
};

// Gallop: exponential then binary search for how many elements of `src`
// starting at `from` are taken before `key` under the given strictness.
std::size_t gallop_count(SortOps& s, const std::vector<i64>& src,
                         std::size_t from, i64 key, bool take_equal) {
  std::size_t count = 0;
  auto takes = [&](i64 v) {
    return take_equal ? s.less_eq(v, key) : s.less(v, key);
  };
  while (from + count < src.size() && takes(src[from + count])) ++count;
  return count;
}

void tim_merge(SortOps& s, TimRun a, TimRun b) {
  s.structural("merge", {static_cast<i64>(a.base), static_cast<i64>(a.len),
                         static_cast<i64>(b.len)});
  std::vector<i64> left(s.arr().begin() + a.base,
                        s.arr().begin() + a.base + a.len);
  std::vector<i64> right(s.arr().begin() + b.base,
                         s.arr().begin() + b.base + b.len);
  std::size_t i = 0, j = 0, k = a.base;
  int streak_left = 0, streak_right = 0;
  constexpr int kGallopThreshold = 7;
  while (i < left.size() && j < right.size()) {
    if (s.less_eq(left[i], right[j])) {
      s.write_at(k++, left[i++]);
      if (++streak_left >= kGallopThreshold && i < left.size()) {
        const std::size_t take = gallop_count(s, left, i, right[j], true);
        if (take > 0) s.em().emit("gallop", {static_cast<i64>(take)}, "left");
        for (std::size_t t = 0; t < take; ++t) s.write_at(k++, left[i++]);
        streak_left = 0;
      }
      streak_right = 0;
    } else {
      s.write_at(k++, right[j++]);
      if (++streak_right >= kGallopThreshold && j < right.size()) {
        const std::size_t take = gallop_count(s, right, j, left[i], false);
        if (take > 0) s.em().emit("gallop", {static_cast<i64>(take)}, "right");
        for (std::size_t t = 0; t < take; ++t) s.write_at(k++, right[j++]);
        streak_right = 0;
      }
      streak_left = 0;
    }
  }
  while (i < left.size()) s.write_at(k++, left[i++]);
  while (j < right.size()) s.write_at(k++, right[j++]);
}

void tim_sort(SortOps& s) {
  const std::size_t n = s.size();
  if (n <= 1) return;
  const std::size_t minrun = timsort_minrun(n);
  std::vector<TimRun> stack;

  auto merge_collapse = [&] {
    while (stack.size() > 1) {
      const std::size_t m = stack.size();
      const bool inv1 = m >= 3 && stack[m - 3].len <= stack[m - 2].len + stack[m - 1].len;
      const bool inv2 = stack[m - 2].len <= stack[m - 1].len;
      if (inv1 && stack[m - 3].len < stack[m - 1].len) {
        tim_merge(s, stack[m - 3], stack[m - 2]);
        stack[m - 3].len += stack[m - 2].len;
        stack.erase(stack.begin() + static_cast<long>(m) - 2);
      } else if (inv1 || inv2) {
        tim_merge(s, stack[m - 2], stack[m - 1]);
        stack[m - 2].len += stack[m - 1].len;
        stack.pop_back();
      } else {
        break;
      }
    }
  };

  std::size_t i = 0;
  while (i < n) {
    std::size_t run_end = i + 1;
    if (run_end < n) {
      if (s.less(s.at(run_end), s.at(run_end - 1))) {  // strictly descending
        while (run_end < n && s.less(s.at(run_end), s.at(run_end - 1))) ++run_end;
        for (std::size_t l = i, r = run_end - 1; l < r; ++l, --r) s.swap_at(l, r);
      } else {
        while (run_end < n && !s.less(s.at(run_end), s.at(run_end - 1))) ++run_end;
      }
    }
    std::size_t run_len = run_end - i;
    if (run_len < minrun) {
      const std::size_t forced = std::min(minrun, n - i);
      binary_insertion(s, i, i + run_len, i + forced - 1);
      run_len = forced;
    }
    s.em().emit("run", {static_cast<i64>(i), static_cast<i64>(run_len)});
    stack.push_back({i, run_len});
    merge_collapse();
    i += run_len;
  }
  while (stack.size() > 1) {
    const std::size_t m = stack.size();
    tim_merge(s, stack[m - 2], stack[m - 1]);
    stack[m - 2].len += stack[m - 1].len;
    stack.pop_back();
  }
}

void intro_sort_rec(SortOps& s, std::size_t lo, std::size_t hi, int depth_left) {
  while (lo < hi) {
    if (hi - lo + 1 <= 16) {
      insertion_sort_range(s, lo, hi);
      return;
    }
    if (depth_left == 0) {
      // Heapsort on [lo, hi] via offset indexing.
      const std::size_t len = hi - lo + 1;
      s.em().emit("heapify", {static_cast<i64>(lo)}, "depth_limit");
      auto sift = [&](std::size_t root, std::size_t size) {
        for (;;) {
          std::size_t largest = root;
          const std::size_t l = 2 * root + 1, r = 2 * root + 2;
          if (l < size && s.greater(s.at(lo + l), s.at(lo + largest))) largest = l;
          if (r < size && s.greater(s.at(lo + r), s.at(lo + largest))) largest = r;
          if (largest == root) return;
          s.swap_at(lo + root, lo + largest);
          root = largest;
        }
      };
      for (std::size_t i = len / 2; i-- > 0;) sift(i, len);
      for (std::size_t end = len - 1; end > 0; --end) {
        s.swap_at(lo, lo + end);
        sift(0, end);
      }
      return;
    }
    --depth_left;
    const std::size_t p = lomuto_partition(s, lo, hi);
    if (p > lo) intro_sort_rec(s, lo, p - 1, depth_left);
    lo = p + 1;
  }
}

void intro_sort(SortOps& s) {
  if (s.size() <= 1) return;
  const int depth = 2 * static_cast<int>(std::floor(std::log2(s.size())));
  intro_sort_rec(s, 0, s.size() - 1, depth);
}

void patience_sort(SortOps& s) {
  const std::size_t n = s.size();
  if (n <= 1) return;
  std::vector<std::vector<i64>> piles;
  for (std::size_t i = 0; i < n; ++i) {
    const i64 v = s.at(i);
    // Binary search the leftmost pile whose top is >= v.
    std::size_t left = 0, right = piles.size();
    while (left < right) {
      const std::size_t mid = (left + right) / 2;
      if (s.less(piles[mid].back(), v)) {
        left = mid + 1;
      } else {
        right = mid;
      }
    }
    if (left == piles.size()) piles.emplace_back();
    piles[left].push_back(v);
    s.em().emit("pile", {static_cast<i64>(left), v});
  }
  // K-way merge over pile tops.
  using Entry = std::pair<i64, std::size_t>;  // (value, pile)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  for (std::size_t p = 0; p < piles.size(); ++p) {
    heap.push({piles[p].back(), p});
    piles[p].pop_back();
  }
  std::size_t out = 0;
  while (!heap.empty()) {
    auto [v, p] = heap.top();
    heap.pop();
    s.write_at(out++, v);
    if (!piles[p].empty()) {
      heap.push({piles[p].back(), p});
      piles[p].pop_back();
    }
  }
}

void strand_sort(SortOps& s) {
  std::list<i64> input(s.arr().begin(), s.arr().end());
  std::list<i64> result;
  int strand_idx = 0;
  while (!input.empty()) {
    std::list<i64> strand;
    strand.push_back(input.front());
    input.pop_front();
    for (auto it = input.begin(); it != input.end();) {
      if (s.less_eq(strand.back(), *it)) {
        strand.push_back(*it);
        it = input.erase(it);
      } else {
        ++it;
      }
    }
    s.em().emit("strand", {strand_idx++, static_cast<i64>(strand.size())});
    // Merge strand into result.
    std::list<i64> merged;
    auto a = result.begin();
    auto b = strand.begin();
    while (a != result.end() && b != strand.end()) {
      if (s.less_eq(*a, *b)) {
        merged.push_back(*a++);
      } else {
        merged.push_back(*b++);
      }
    }
    merged.insert(merged.end(), a, result.end());
    merged.insert(merged.end(), b, strand.end());
    result.swap(merged);
  }
  std::size_t i = 0;
  for (i64 v : result) s.write_at(i++, v);
}

void bitonic_sort(SortOps& s) {
  const std::size_t n = s.size();  // power of two by generation
  for (std::size_t k = 2; k <= n; k <<= 1) {
    for (std::size_t j = k >> 1; j > 0; j >>= 1) {
      s.em().emit("stage", {static_cast<i64>(k), static_cast<i64>(j)});
      for (std::size_t i = 0; i < n; ++i) {
        const std::size_t l = i ^ j;
        if (l > i) {
          const bool ascending = (i & k) == 0;
          const bool out_of_order =
              ascending ? s.greater_at(i, l) : s.less(s.at(i), s.at(l));
          if (out_of_order) s.swap_at(i, l);
        }
      }
    }
  }
}

void batcher_odd_even_sort(SortOps& s) {
  const std::size_t n = s.size();  // power of two by generation
  for (std::size_t p = 1; p < n; p <<= 1) {
    for (std::size_t k = p; k >= 1; k >>= 1) {
      s.em().emit("stage", {static_cast<i64>(p), static_cast<i64>(k)});
      for (std::size_t j = k % p; j + k < n; j += 2 * k) {
        for (std::size_t i = 0; i < k; ++i) {
          if (j + i + k >= n) break;
          if ((j + i) / (2 * p) == (j + i + k) / (2 * p)) {
            if (s.greater_at(j + i, j + i + k)) s.swap_at(j + i, j + i + k);
          }
        }
      }
    }
  }
}

// Library sort: gapped array of 2n+1 slots, binary insertion over occupied
// prefix order, local shifting into gaps, rebalance after each round.
void library_sort(SortOps& s) {
  const std::size_t n = s.size();
  if (n <= 1) return;
  constexpr i64 kGap = INT64_MIN;  // sentinel, outside the value range
  std::vector<i64> shelf(2 * n + 1, kGap);
  std::size_t placed = 0;

  auto rebalance = [&](std::size_t count) {
    std::vector<i64> vals;
    vals.reserve(count);
    for (i64 v : shelf) {
      if (v != kGap) vals.push_back(v);
    }
    std::fill(shelf.begin(), shelf.end(), kGap);
    for (std::size_t i = 0; i < vals.size(); ++i) shelf[2 * i + 1] = vals[i];
    s.em().emit("rebalance", {static_cast<i64>(count)});
  };

  shelf[1] = s.at(0);
  placed = 1;
  std::size_t round_target = 1;
  for (std::size_t i = 1; i < n; ++i) {
    const i64 key = s.at(i);
    // Binary search over shelf positions; probe the nearest occupied slot.
    std::size_t left = 0, right = shelf.size();
    while (left < right) {
      const std::size_t mid = (left + right) / 2;
      std::size_t probe = mid;
      while (probe > left && shelf[probe] == kGap) --probe;
      if (shelf[probe] == kGap || s.less_eq(shelf[probe], key)) {
        left = mid + 1;
      } else {
        right = mid;
      }
    }
    // Find the nearest gap at or right of `left`, shifting if needed.
    std::size_t slot = left;
    while (slot < shelf.size() && shelf[slot] != kGap) ++slot;
    if (slot == shelf.size()) {
      rebalance(placed);
      --i;  // retry this key on the rebalanced shelf
      continue;
    }
    for (std::size_t j = slot; j > left; --j) shelf[j] = shelf[j - 1];
    shelf[left] = key;
    ++placed;
    s.em().emit("insert", {key, static_cast<i64>(left)});
    if (placed == round_target * 2 && placed < n) {
      rebalance(placed);
      round_target = placed;
    }
  }
  std::size_t out = 0;
  for (i64 v : shelf) {
    if (v != kGap) s.write_at(out++, v);
  }
}

// Smoothsort with Leonardo heaps (Dijkstra). The forest is kept as an
// explicit list of tree orders, left to right; roots are ascending.
void smooth_sort(SortOps& s) {
  const std::size_t n = s.size();
  if (n <= 1) return;
  std::vector<i64> leo = {1, 1};
  while (static_cast<u64>(leo.back()) < n + 2) {
    leo.push_back(leo[leo.size() - 1] + leo[leo.size() - 2] + 1);
  }
  std::vector<int> orders;  // orders[j] = Leonardo order of j-th tree

  auto root_pos = [&](std::size_t t) {
    i64 pos = -1;
    for (std::size_t j = 0; j <= t; ++j) pos += leo[static_cast<std::size_t>(orders[j])];
    return static_cast<std::size_t>(pos);
  };

  auto sift = [&](std::size_t root, int order) {
    while (order >= 2) {
      const std::size_t right = root - 1;
      const std::size_t left =
          root - 1 - static_cast<std::size_t>(leo[static_cast<std::size_t>(order) - 2]);
      std::size_t next = root;
      int next_order = order;
      if (s.greater(s.at(left), s.at(next))) {
        next = left;
        next_order = order - 1;
      }
      if (s.greater(s.at(right), s.at(next))) {
        next = right;
        next_order = order - 2;
      }
      if (next == root) return;
      s.swap_at(root, next);
      root = next;
      order = next_order;
    }
  };

  // Restore the ascending-roots invariant ending at tree t, then sift.
  auto trinkle = [&](std::size_t t) {
    std::size_t pos = root_pos(t);
    while (t > 0) {
      const std::size_t left_root =
          pos - static_cast<std::size_t>(leo[static_cast<std::size_t>(orders[t])]);
      if (!s.greater(s.at(left_root), s.at(pos))) break;
      if (orders[t] >= 2) {
        const std::size_t right_child = pos - 1;
        const std::size_t left_child =
            pos - 1 -
            static_cast<std::size_t>(leo[static_cast<std::size_t>(orders[t]) - 2]);
        // When a child dominates the left neighbor, sifting locally suffices.
        if (!s.less(s.at(right_child), s.at(left_root)) ||
            !s.less(s.at(left_child), s.at(left_root))) {
          break;
        }
      }
      s.swap_at(pos, left_root);
      pos = left_root;
      --t;
    }
    sift(pos, orders[t]);
  };

  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t m = orders.size();
    if (m >= 2 && orders[m - 2] == orders[m - 1] + 1) {
      orders.pop_back();
      orders.back() += 1;
    } else if (m >= 1 && orders.back() == 1) {
      orders.push_back(0);
    } else {
      orders.push_back(1);
    }
    trinkle(orders.size() - 1);
  }

  for (std::size_t i = n; i-- > 1;) {
    if (orders.back() <= 1) {
      orders.pop_back();
    } else {
      const int k = orders.back();
      orders.pop_back();
      orders.push_back(k - 1);
      orders.push_back(k - 2);
      trinkle(orders.size() - 2);
      trinkle(orders.size() - 1);
    }
  }
}

// Block sort: stable bottom-up merge using binary search + rotations.
void rotate_range(SortOps& s, std::size_t lo, std::size_t mid, std::size_t hi) {
  if (lo == mid || mid == hi) return;
  s.structural("rotate", {static_cast<i64>(lo), static_cast<i64>(mid),
                          static_cast<i64>(hi)});
  std::rotate(s.arr().begin() + lo, s.arr().begin() + mid, s.arr().begin() + hi);
  s.em().snapshot_with([&] { return vec_state(s.arr()); });
}

void inplace_merge_rec(SortOps& s, std::size_t lo, std::size_t mid,
                       std::size_t hi) {
  if (lo >= mid || mid >= hi) return;
  if (mid - lo == 1 && hi - mid == 1) {
    if (s.greater_at(lo, mid)) s.swap_at(lo, mid);
    return;
  }
  std::size_t cut1, cut2;
  if (mid - lo >= hi - mid) {
    cut1 = lo + (mid - lo) / 2;
    const i64 key = s.at(cut1);
    std::size_t left = mid, right = hi;
    while (left < right) {
      const std::size_t m = (left + right) / 2;
      if (s.less(s.at(m), key)) {
        left = m + 1;
      } else {
        right = m;
      }
    }
    cut2 = left;
  } else {
    cut2 = mid + (hi - mid) / 2;
    const i64 key = s.at(cut2);
    std::size_t left = lo, right = mid;
    while (left < right) {
      const std::size_t m = (left + right) / 2;
      if (s.less_eq(s.at(m), key)) {
        left = m + 1;
      } else {
        right = m;
      }
    }
    cut1 = left;
    ++cut2;
  }
  rotate_range(s, cut1, mid, cut2);
  const std::size_t new_mid = cut1 + (cut2 - mid);
  inplace_merge_rec(s, lo, cut1, new_mid);
  inplace_merge_rec(s, new_mid, cut2, hi);
}

void block_sort(SortOps& s) {
  const std::size_t n = s.size();
  if (n <= 1) return;
  constexpr std::size_t kBlock = 16;
  for (std::size_t lo = 0; lo < n; lo += kBlock) {
    insertion_sort_range(s, lo, std::min(lo + kBlock, n) - 1);
  }
  for (std::size_t width = kBlock; width < n; width *= 2) {
    for (std::size_t lo = 0; lo + width < n; lo += 2 * width) {
      inplace_merge_rec(s, lo, lo + width, std::min(lo + 2 * width, n));
    }
  }
}

void tournament_sort(SortOps& s) {
  const std::size_t n = s.size();
  if (n <= 1) return;
  std::size_t leaves = 1;
  while (leaves < n) leaves <<= 1;
  constexpr i64 kInf = INT64_MAX;
  // tree[i] holds the LEAF INDEX of the winner; values live in vals[].
  std::vector<i64> vals(leaves, kInf);
  for (std::size_t i = 0; i < n; ++i) vals[i] = s.at(i);
  std::vector<std::size_t> tree(2 * leaves, 0);
  for (std::size_t i = 0; i < leaves; ++i) tree[leaves + i] = i;
  auto winner = [&](std::size_t a, std::size_t b) {
    if (vals[a] == kInf) return b;
    if (vals[b] == kInf) return a;
    // Lower leaf index wins ties: stable extraction order.
    return s.less_eq(vals[std::min(a, b)], vals[std::max(a, b)])
               ? std::min(a, b)
               : std::max(a, b);
  };
  for (std::size_t i = leaves; i-- > 1;) {
    tree[i] = winner(tree[2 * i], tree[2 * i + 1]);
  }
  for (std::size_t out = 0; out < n; ++out) {
    const std::size_t w = tree[1];
    s.em().emit("extract", {vals[w], static_cast<i64>(w)});
    s.write_at(out, vals[w]);
    vals[w] = kInf;
    for (std::size_t i = (leaves + w) / 2; i >= 1; i /= 2) {
      tree[i] = winner(tree[2 * i], tree[2 * i + 1]);
      if (i == 1) break;
    }
  }
}

// ---------------------------------------------------------------------------
// Driver assembly

using SortFn = void (*)(SortOps&);

std::string run_sort(SortFn fn, const json& payload, TraceSink& sink) {
  Emitter em(sink);
  SortOps ops(to_vec(payload.at("array")), em);
  fn(ops);
  return answer_array(ops.arr());
}

json gen_array_payload(Rng& rng, const std::vector<int>& sizes, i64 lo, i64 hi,
                       bool duplicates_note = false) {
  const int n = sizes[static_cast<std::size_t>(rng.next_below(sizes.size()))];
  std::vector<i64> a(static_cast<std::size_t>(n));
  for (auto& v : a) v = rng.next_int(lo, hi);
  // Selection sort spec: 20% of instances carry injected duplicates,
  // inserted by post-hoc replacement of ceil(0.2 n) positions.
  if (duplicates_note && rng.next_below(5) == 0) {
    const int dup_count = (n + 4) / 5;
    for (int d = 0; d < dup_count; ++d) {
      const auto dst = static_cast<std::size_t>(rng.next_below(a.size()));
      const auto src = static_cast<std::size_t>(rng.next_below(a.size()));
      a[dst] = a[src];
    }
  }
  json payload;
  payload["array"] = to_json_array(a);
  return payload;
}

bool array_sorted(const json& payload) {
  const auto& arr = payload.at("array");
  for (std::size_t i = 1; i < arr.size(); ++i) {
    if (arr[i - 1].get<i64>() > arr[i].get<i64>()) return false;
  }
  return true;
}

u64 quadratic_floor(const json& payload) {
  const u64 n = payload.at("array").size();
  return n * n / 4;
}

u64 linearithmic_floor(const json& payload) {
  const u64 n = payload.at("array").size();
  u64 lg = 0;
  while ((1ull << (lg + 1)) <= n) ++lg;
  return n * lg / 2;
}

TaskDriver make_sort_driver(int ordinal, int category, int task_index,
                            std::string name, SortFn fn,
                            std::vector<int> sizes, bool quadratic,
                            bool duplicates = false) {
  TaskDriver d;
  d.id = {ordinal, category, task_index, std::move(name)};
  d.vocab = {"compare", "swap",  "write",   "select",  "pivot",   "gap",
             "merge",   "split", "heapify", "extract", "reverse", "insert",
             "pile",    "run",   "gallop",  "stage",   "strand",  "rotate",
             "rebalance"};
  d.generate = [sizes, duplicates](Rng& rng) {
    return gen_array_payload(rng, sizes, -1000, 1000, duplicates);
  };
  d.trivial = array_sorted;
  d.run = [fn](const json& payload, TraceSink& sink) {
    return run_sort(fn, payload, sink);
  };
  d.size_param = [](const json& payload) {
    return static_cast<i64>(payload.at("array").size());
  };
  d.full_snapshot_limit = 32;
  d.min_steps = quadratic ? quadratic_floor : linearithmic_floor;
  return d;
}

}  // namespace

void register_sorting(std::vector<TaskDriver>& out) {
  int o = static_cast<int>(out.size());
  const std::vector<int> small = {8, 12, 16, 20, 25};

  out.push_back(make_sort_driver(o++, 1, 1, "bubble_sort", bubble_sort, small, true));
  out.push_back(make_sort_driver(o++, 1, 2, "selection_sort", selection_sort,
                                 small, true, /*duplicates=*/true));
  out.push_back(make_sort_driver(o++, 1, 3, "insertion_sort", insertion_sort,
                                 small, true));
  out.push_back(make_sort_driver(o++, 1, 4, "shell_sort", shell_sort,
                                 {16, 32, 64, 128, 256}, false));
  out.push_back(make_sort_driver(o++, 1, 5, "merge_sort", merge_sort,
                                 {8, 16, 32, 64, 128}, false));
  out.push_back(make_sort_driver(o++, 1, 6, "quick_sort", quick_sort,
                                 {8, 16, 32, 64, 128}, false));
  out.push_back(make_sort_driver(o++, 1, 7, "heap_sort", heap_sort,
                                 {8, 16, 32, 64, 128}, false));
  out.push_back(make_sort_driver(o++, 1, 8, "tree_sort", tree_sort,
                                 {8, 16, 32, 64}, false));
  out.push_back(make_sort_driver(o++, 1, 9, "cocktail_shaker_sort",
                                 cocktail_shaker_sort, small, true));
  out.push_back(make_sort_driver(o++, 1, 10, "comb_sort", comb_sort,
                                 {16, 32, 64, 128}, false));
  out.push_back(make_sort_driver(o++, 1, 11, "gnome_sort", gnome_sort,
                                 {8, 12, 16, 20}, true));
  out.push_back(make_sort_driver(o++, 1, 12, "odd_even_sort", odd_even_sort,
                                 {8, 16, 24, 32}, true));
  out.push_back(make_sort_driver(o++, 1, 13, "pancake_sort", pancake_sort,
                                 {6, 8, 10, 12}, true));
  out.push_back(make_sort_driver(o++, 1, 14, "cycle_sort", cycle_sort,
                                 {8, 12, 16, 20}, true));
  out.push_back(make_sort_driver(o++, 1, 15, "stooge_sort", stooge_sort,
                                 {8, 12, 16}, true));

  // Category 2: non-comparison sorts.
  {
    TaskDriver d;
    d.id = {o++, 2, 1, "counting_sort"};
    d.vocab = {"count", "cumulate", "place"};
    d.generate = [](Rng& rng) {
      const std::vector<int> sizes = {100, 500, 1000, 2500, 5000};
      const int n = sizes[static_cast<std::size_t>(rng.next_below(sizes.size()))];
      const i64 k = 1000;
      std::vector<i64> a(static_cast<std::size_t>(n));
      for (auto& v : a) v = rng.next_int(0, k);
      json payload;
      payload["array"] = to_json_array(a);
      payload["k"] = k;
      return payload;
    };
    d.trivial = array_sorted;
    d.run = counting_sort_run;
    d.size_param = [](const json& p) { return static_cast<i64>(p.at("array").size()); };
    d.min_steps = [](const json& p) { return static_cast<u64>(p.at("array").size()); };
    out.push_back(std::move(d));
  }
  {
    TaskDriver d;
    d.id = {o++, 2, 2, "radix_sort"};
    d.vocab = {"digit", "count", "place"};
    d.generate = [](Rng& rng) {
      const std::vector<int> sizes = {100, 250, 500, 1000};
      const int n = sizes[static_cast<std::size_t>(rng.next_below(sizes.size()))];
      std::vector<i64> a(static_cast<std::size_t>(n));
      for (auto& v : a) v = rng.next_int(0, 999999);
      json payload;
      payload["array"] = to_json_array(a);
      payload["digits"] = 6;
      return payload;
    };
    d.trivial = array_sorted;
    d.run = radix_sort_run;
    d.size_param = [](const json& p) { return static_cast<i64>(p.at("array").size()); };
    d.min_steps = [](const json& p) { return static_cast<u64>(p.at("array").size()); };
    out.push_back(std::move(d));
  }
  {
    TaskDriver d;
    d.id = {o++, 2, 3, "bucket_sort"};
    d.vocab = {"bucket", "compare", "place"};
    d.generate = [](Rng& rng) {
      const std::vector<int> sizes = {100, 250, 500, 1000};
      const int n = sizes[static_cast<std::size_t>(rng.next_below(sizes.size()))];
      json keys = json::array();
      for (int i = 0; i < n; ++i) {
        char buf[16];
        std::snprintf(buf, sizeof(buf), "0.%06lld",
                      static_cast<long long>(rng.next_below(1000000)));
        keys.push_back(std::string(buf));
      }
      json payload;
      payload["keys"] = keys;
      return payload;
    };
    d.trivial = [](const json& p) {
      const auto& keys = p.at("keys");
      for (std::size_t i = 1; i < keys.size(); ++i) {
        if (keys[i - 1].get<std::string>() > keys[i].get<std::string>()) return false;
      }
      return true;
    };
    d.run = bucket_sort_run;
    d.size_param = [](const json& p) { return static_cast<i64>(p.at("keys").size()); };
    d.min_steps = [](const json& p) { return static_cast<u64>(p.at("keys").size()); };
    out.push_back(std::move(d));
  }

  // Category 3: advanced / hybrid sorts.
  out.push_back(make_sort_driver(o++, 3, 1, "timsort", tim_sort,
                                 {64, 128, 256, 512}, false));
  out.push_back(make_sort_driver(o++, 3, 2, "introsort", intro_sort,
                                 {64, 128, 256, 512}, false));
  out.push_back(make_sort_driver(o++, 3, 3, "patience_sort", patience_sort,
                                 {32, 64, 128}, false));
  out.push_back(make_sort_driver(o++, 3, 4, "strand_sort", strand_sort,
                                 {32, 64, 128}, true));
  out.push_back(make_sort_driver(o++, 3, 5, "bitonic_sort", bitonic_sort,
                                 {16, 32, 64}, false));
  out.push_back(make_sort_driver(o++, 3, 6, "batcher_odd_even_sort",
                                 batcher_odd_even_sort, {16, 32, 64}, false));
  out.push_back(make_sort_driver(o++, 3, 7, "library_sort", library_sort,
                                 {64, 128, 256}, false));
  out.push_back(make_sort_driver(o++, 3, 8, "smoothsort", smooth_sort,
                                 {64, 128, 256}, false));
  out.push_back(make_sort_driver(o++, 3, 9, "block_sort", block_sort,
                                 {64, 128, 256}, false));
  out.push_back(make_sort_driver(o++, 3, 10, "tournament_sort", tournament_sort,
                                 {32, 64, 128}, false));
}

}  // namespace prime::oracles

// Reference executors for the five tree tasks (category 5).

#include <queue>
#include <set>

#include "common.hpp"

namespace prime::oracles {
namespace {

// --- Plain BST --------------------------------------------------------------

struct BstNode {
  i64 key;
  int left = -1, right = -1;
};

int bst_insert_key(std::vector<BstNode>& pool, Emitter& em, i64 key) {
  if (pool.empty()) {
    pool.push_back({key});
    em.emit("place", {key}, "root");
    return 0;
  }
  int cur = 0;
  int depth = 1;
  for (;;) {
    em.emit("compare", {key, pool[static_cast<std::size_t>(cur)].key});
    ++depth;
    if (key < pool[static_cast<std::size_t>(cur)].key) {
      if (pool[static_cast<std::size_t>(cur)].left < 0) {
        pool[static_cast<std::size_t>(cur)].left = static_cast<int>(pool.size());
        pool.push_back({key});
        em.emit("place", {key, depth}, "left");
        return depth;
      }
      cur = pool[static_cast<std::size_t>(cur)].left;
    } else {
      if (pool[static_cast<std::size_t>(cur)].right < 0) {
        pool[static_cast<std::size_t>(cur)].right = static_cast<int>(pool.size());
        pool.push_back({key});
        em.emit("place", {key, depth}, "right");
        return depth;
      }
      cur = pool[static_cast<std::size_t>(cur)].right;
    }
  }
}

void bst_preorder(const std::vector<BstNode>& pool, int node, std::vector<i64>& out) {
  if (node < 0) return;
  out.push_back(pool[static_cast<std::size_t>(node)].key);
  bst_preorder(pool, pool[static_cast<std::size_t>(node)].left, out);
  bst_preorder(pool, pool[static_cast<std::size_t>(node)].right, out);
}

std::string bst_insert_run(const json& payload, TraceSink& sink) {
  Emitter em(sink);
  std::vector<BstNode> pool;
  int height = 0;
  for (const auto& k : payload.at("keys")) {
    const int depth = bst_insert_key(pool, em, k.get<i64>());
    height = std::max(height, depth);
    em.emit("height", {height});
  }
  std::vector<i64> pre;
  bst_preorder(pool, pool.empty() ? -1 : 0, pre);
  json ans;
  ans["preorder"] = to_json_array(pre);
  ans["height"] = height;
  return ans.dump();
}

std::string bst_inorder_run(const json& payload, TraceSink& sink) {
  Emitter em(sink);
  std::vector<BstNode> pool;
  for (const auto& k : payload.at("keys")) {
    bst_insert_key(pool, em, k.get<i64>());
  }
  // Iterative inorder with an explicit stack.
  std::vector<i64> out;
  std::vector<int> stack;
  int cur = pool.empty() ? -1 : 0;
  while (cur >= 0 || !stack.empty()) {
    while (cur >= 0) {
      em.emit("push", {pool[static_cast<std::size_t>(cur)].key});
      stack.push_back(cur);
      cur = pool[static_cast<std::size_t>(cur)].left;
    }
    cur = stack.back();
    stack.pop_back();
    em.emit("pop", {pool[static_cast<std::size_t>(cur)].key});
    out.push_back(pool[static_cast<std::size_t>(cur)].key);
    em.emit("visit", {pool[static_cast<std::size_t>(cur)].key});
    cur = pool[static_cast<std::size_t>(cur)].right;
  }
  json ans;
  ans["inorder"] = to_json_array(out);
  return ans.dump();
}

// --- Red-black tree ----------------------------------------------------------

struct RbTree {
  struct Node {
    i64 key;
    bool red = true;
    int left = -1, right = -1, parent = -1;
  };
  std::vector<Node> nodes;
  int root = -1;
  Emitter& em;

  explicit RbTree(Emitter& e) : em(e) {}

  bool is_red(int n) const { return n >= 0 && nodes[static_cast<std::size_t>(n)].red; }
  Node& at(int n) { return nodes[static_cast<std::size_t>(n)]; }

  void rotate_left(int x) {
    em.emit("rotate_left", {at(x).key});
    const int y = at(x).right;
    at(x).right = at(y).left;
    if (at(y).left >= 0) at(at(y).left).parent = x;
    at(y).parent = at(x).parent;
    if (at(x).parent < 0) {
      root = y;
    } else if (at(at(x).parent).left == x) {
      at(at(x).parent).left = y;
    } else {
      at(at(x).parent).right = y;
    }
    at(y).left = x;
    at(x).parent = y;
  }

  void rotate_right(int x) {
    em.emit("rotate_right", {at(x).key});
    const int y = at(x).left;
    at(x).left = at(y).right;
    if (at(y).right >= 0) at(at(y).right).parent = x;
    at(y).parent = at(x).parent;
    if (at(x).parent < 0) {
      root = y;
    } else if (at(at(x).parent).right == x) {
      at(at(x).parent).right = y;
    } else {
      at(at(x).parent).left = y;
    }
    at(y).right = x;
    at(x).parent = y;
  }

  void insert(i64 key) {
    em.emit("insert", {key});
    int parent = -1;
    int cur = root;
    while (cur >= 0) {
      em.emit("compare", {key, at(cur).key});
      parent = cur;
      cur = key < at(cur).key ? at(cur).left : at(cur).right;
    }
    const int z = static_cast<int>(nodes.size());
    nodes.push_back({key});
    at(z).parent = parent;
    if (parent < 0) {
      root = z;
    } else if (key < at(parent).key) {
      at(parent).left = z;
    } else {
      at(parent).right = z;
    }
    fixup(z);
    at(root).red = false;
    em.snapshot_with([&] { return serialize(); });
  }

  void fixup(int z) {
    while (at(z).parent >= 0 && is_red(at(z).parent)) {
      const int parent = at(z).parent;
      const int grand = at(parent).parent;
      if (grand < 0) break;
      if (parent == at(grand).left) {
        const int uncle = at(grand).right;
        if (is_red(uncle)) {
          em.emit("recolor", {at(grand).key}, "case1");
          at(parent).red = false;
          at(uncle).red = false;
          at(grand).red = true;
          z = grand;
        } else {
          if (z == at(parent).right) {
            em.emit("recolor", {at(parent).key}, "case2");
            z = parent;
            rotate_left(z);
          }
          em.emit("recolor", {at(at(z).parent).key}, "case3");
          at(at(z).parent).red = false;
          at(at(at(z).parent).parent).red = true;
          rotate_right(at(at(z).parent).parent);
        }
      } else {
        const int uncle = at(grand).left;
        if (is_red(uncle)) {
          em.emit("recolor", {at(grand).key}, "case1");
          at(parent).red = false;
          at(uncle).red = false;
          at(grand).red = true;
          z = grand;
        } else {
          if (z == at(parent).left) {
            em.emit("recolor", {at(parent).key}, "case2");
            z = parent;
            rotate_right(z);
          }
          em.emit("recolor", {at(at(z).parent).key}, "case3");
          at(at(z).parent).red = false;
          at(at(at(z).parent).parent).red = true;
          rotate_left(at(at(z).parent).parent);
        }
      }
    }
  }

  // Preorder "key:color" list; canonical across runs.
  std::string serialize() const {
    std::string out;
    serialize_rec(root, out);
    return out.empty() ? "empty" : out;
  }
  void serialize_rec(int n, std::string& out) const {
    if (n < 0) return;
    if (!out.empty()) out.push_back(' ');
    out += std::to_string(nodes[static_cast<std::size_t>(n)].key);
    out.push_back(nodes[static_cast<std::size_t>(n)].red ? 'R' : 'B');
    serialize_rec(nodes[static_cast<std::size_t>(n)].left, out);
    serialize_rec(nodes[static_cast<std::size_t>(n)].right, out);
  }
};

std::string rb_insert_run(const json& payload, TraceSink& sink) {
  Emitter em(sink);
  RbTree tree(em);
  for (const auto& k : payload.at("keys")) tree.insert(k.get<i64>());
  json ans;
  ans["tree"] = tree.serialize();
  return ans.dump();
}

// --- Huffman coding -----------------------------------------------------------

std::string huffman_run(const json& payload, TraceSink& sink) {
  Emitter em(sink);
  struct HuffNode {
    i64 freq;
    int symbol;  // -1 internal
    int left = -1, right = -1;
  };
  std::vector<HuffNode> pool;
  // Heap ordered by (freq, creation order) for a unique canonical tree.
  using Entry = std::pair<i64, int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  const auto& freqs = payload.at("freqs");
  for (std::size_t i = 0; i < freqs.size(); ++i) {
    pool.push_back({freqs[i].get<i64>(), static_cast<int>(i)});
    heap.push({pool.back().freq, static_cast<int>(i)});
  }
  while (heap.size() > 1) {
    auto [f1, n1] = heap.top();
    heap.pop();
    auto [f2, n2] = heap.top();
    heap.pop();
    const int parent = static_cast<int>(pool.size());
    pool.push_back({f1 + f2, -1, n1, n2});
    em.emit("merge", {f1, f2, f1 + f2});
    heap.push({f1 + f2, parent});
  }
  std::vector<std::string> codes(freqs.size());
  if (!pool.empty()) {
    // Iterative DFS assigning 0 to left edges, 1 to right edges.
    std::vector<std::pair<int, std::string>> stack = {{static_cast<int>(pool.size()) - 1, ""}};
    while (!stack.empty()) {
      auto [node, code] = stack.back();
      stack.pop_back();
      const auto& hn = pool[static_cast<std::size_t>(node)];
      if (hn.symbol >= 0) {
        codes[static_cast<std::size_t>(hn.symbol)] = code;
        em.emit("code", {hn.symbol, static_cast<i64>(code.size())}, code);
      } else {
        stack.push_back({hn.right, code + "1"});
        stack.push_back({hn.left, code + "0"});
      }
    }
  }
  i64 wpl = 0;
  for (std::size_t i = 0; i < freqs.size(); ++i) {
    wpl += freqs[i].get<i64>() * static_cast<i64>(codes[i].size());
  }
  json ans;
  json codes_json = json::array();
  for (const auto& c : codes) codes_json.push_back(c);
  ans["codes"] = codes_json;
  ans["weighted_length"] = wpl;
  return ans.dump();
}

// --- Binary max-heap operation scripts -----------------------------------------

std::string heap_ops_run(const json& payload, TraceSink& sink) {
  Emitter em(sink);
  std::vector<i64> heap;
  std::vector<i64> outputs;
  auto state = [&] { return vec_state(heap); };
  for (const auto& op : payload.at("script")) {
    const std::string name = op[0].get<std::string>();
    if (name == "insert") {
      const i64 v = op[1].get<i64>();
      heap.push_back(v);
      em.emit("insert", {v});
      std::size_t i = heap.size() - 1;
      while (i > 0) {
        const std::size_t parent = (i - 1) / 2;
        em.emit("compare", {heap[i], heap[parent]});
        if (heap[i] <= heap[parent]) break;
        std::swap(heap[i], heap[parent]);
        em.emit("swap", {static_cast<i64>(i), static_cast<i64>(parent)});
        i = parent;
      }
      em.snapshot_with(state);
    } else {  // extract
      if (heap.empty()) {
        em.emit("underflow", {});
        outputs.push_back(INT64_MIN);
        continue;
      }
      const i64 top = heap[0];
      outputs.push_back(top);
      em.emit("extract", {top});
      heap[0] = heap.back();
      heap.pop_back();
      std::size_t i = 0;
      for (;;) {
        const std::size_t l = 2 * i + 1, r = 2 * i + 2;
        std::size_t largest = i;
        if (l < heap.size()) {
          em.emit("compare", {heap[l], heap[largest]});
          if (heap[l] > heap[largest]) largest = l;
        }
        if (r < heap.size()) {
          em.emit("compare", {heap[r], heap[largest]});
          if (heap[r] > heap[largest]) largest = r;
        }
        if (largest == i) break;
        std::swap(heap[i], heap[largest]);
        em.emit("swap", {static_cast<i64>(i), static_cast<i64>(largest)});
        i = largest;
      }
      em.snapshot_with(state);
    }
  }
  json ans;
  ans["outputs"] = to_json_array(outputs);
  ans["heap"] = to_json_array(heap);
  return ans.dump();
}

// --- Generators -----------------------------------------------------------------

json gen_keys(Rng& rng, const std::vector<int>& sizes, bool unique) {
  const int n = sizes[static_cast<std::size_t>(rng.next_below(sizes.size()))];
  std::vector<i64> keys;
  if (unique) {
    std::set<i64> used;
    while (static_cast<int>(keys.size()) < n) {
      const i64 k = rng.next_int(-1000, 1000);
      if (used.insert(k).second) keys.push_back(k);
    }
  } else {
    for (int i = 0; i < n; ++i) keys.push_back(rng.next_int(-1000, 1000));
  }
  json payload;
  payload["keys"] = to_json_array(keys);
  return payload;
}

}  // namespace

void register_tree(std::vector<TaskDriver>& out) {
  int o = static_cast<int>(out.size());
  {
    TaskDriver d;
    d.id = {o++, 5, 1, "bst_insert"};
    d.vocab = {"compare", "place", "height"};
    d.generate = [](Rng& rng) { return gen_keys(rng, {10, 25, 50, 100}, false); };
    d.trivial = [](const json&) { return false; };
    d.run = bst_insert_run;
    d.size_param = [](const json& p) { return static_cast<i64>(p.at("keys").size()); };
    d.min_steps = [](const json& p) { return static_cast<u64>(p.at("keys").size()); };
    out.push_back(std::move(d));
  }
  {
    TaskDriver d;
    d.id = {o++, 5, 2, "bst_inorder"};
    d.vocab = {"compare", "place", "push", "pop", "visit"};
    d.generate = [](Rng& rng) { return gen_keys(rng, {10, 25, 50, 100}, false); };
    d.trivial = [](const json&) { return false; };
    d.run = bst_inorder_run;
    d.size_param = [](const json& p) { return static_cast<i64>(p.at("keys").size()); };
    d.min_steps = [](const json& p) { return static_cast<u64>(p.at("keys").size()); };
    out.push_back(std::move(d));
  }
  {
    TaskDriver d;
    d.id = {o++, 5, 3, "rb_insert"};
    d.vocab = {"insert", "compare", "recolor", "rotate_left", "rotate_right"};
    d.generate = [](Rng& rng) { return gen_keys(rng, {5, 15, 30, 50}, true); };
    d.trivial = [](const json&) { return false; };
    d.run = rb_insert_run;
    d.size_param = [](const json& p) { return static_cast<i64>(p.at("keys").size()); };
    d.min_steps = [](const json& p) { return static_cast<u64>(p.at("keys").size()); };
    out.push_back(std::move(d));
  }
  {
    TaskDriver d;
    d.id = {o++, 5, 4, "huffman"};
    d.vocab = {"merge", "code"};
    d.generate = [](Rng& rng) {
      const std::vector<int> sizes = {8, 16, 26, 50};
      const int n = sizes[static_cast<std::size_t>(rng.next_below(sizes.size()))];
      json freqs = json::array();
      for (int i = 0; i < n; ++i) freqs.push_back(rng.next_int(1, 100));
      json payload;
      payload["freqs"] = freqs;
      return payload;
    };
    d.trivial = [](const json&) { return false; };
    d.run = huffman_run;
    d.size_param = [](const json& p) { return static_cast<i64>(p.at("freqs").size()); };
    d.min_steps = [](const json& p) { return static_cast<u64>(p.at("freqs").size()) - 1; };
    out.push_back(std::move(d));
  }
  {
    TaskDriver d;
    d.id = {o++, 5, 5, "heap_ops"};
    d.vocab = {"insert", "extract", "compare", "swap", "underflow"};
    d.generate = [](Rng& rng) {
      const std::vector<int> sizes = {20, 60, 120, 200};
      const int ops = sizes[static_cast<std::size_t>(rng.next_below(sizes.size()))];
      json script = json::array();
      int live = 0;
      for (int i = 0; i < ops; ++i) {
        if (live > 0 && rng.next_below(10) < 4) {
          script.push_back(json::array({"extract"}));
          --live;
        } else {
          script.push_back(json::array({"insert", rng.next_int(-1000, 1000)}));
          ++live;
        }
      }
      json payload;
      payload["script"] = script;
      return payload;
    };
    d.trivial = [](const json&) { return false; };
    d.run = heap_ops_run;
    d.size_param = [](const json& p) { return static_cast<i64>(p.at("script").size()); };
    d.min_steps = [](const json& p) { return static_cast<u64>(p.at("script").size()); };
    out.push_back(std::move(d));
  }
}

}  // namespace prime::oracles

// Reference executors for the six data-structure tasks (category 11).
// Script-level faults (pop on empty, full queue) are trace events and
// recorded results, never execution failures.

#include <list>
#include <map>
#include <set>

#include "common.hpp"

namespace prime::oracles {
namespace {

// --- Bounded stack ---------------------------------------------------------------

std::string stack_run(const json& payload, TraceSink& sink) {
  Emitter em(sink);
  const i64 capacity = payload.at("capacity").get<i64>();
  std::vector<i64> stack;
  std::vector<i64> outputs;
  for (const auto& op : payload.at("script")) {
    const std::string name = op[0].get<std::string>();
    if (name == "push") {
      const i64 v = op[1].get<i64>();
      if (static_cast<i64>(stack.size()) >= capacity) {
        em.emit("overflow", {v});
        outputs.push_back(-2);
      } else {
        stack.push_back(v);
        em.emit("push", {v});
        outputs.push_back(v);
      }
    } else if (name == "pop") {
      if (stack.empty()) {
        em.emit("underflow", {});
        outputs.push_back(-1);
      } else {
        outputs.push_back(stack.back());
        em.emit("pop", {stack.back()});
        stack.pop_back();
      }
    } else {  // peek
      if (stack.empty()) {
        em.emit("underflow", {});
        outputs.push_back(-1);
      } else {
        outputs.push_back(stack.back());
        em.emit("peek", {stack.back()});
      }
    }
    em.snapshot_with([&] { return vec_state(stack); });
  }
  json ans;
  ans["outputs"] = to_json_array(outputs);
  ans["stack"] = to_json_array(stack);
  return ans.dump();
}

// --- Circular queue ----------------------------------------------------------------

std::string circular_queue_run(const json& payload, TraceSink& sink) {
  Emitter em(sink);
  const auto capacity = payload.at("capacity").get<std::size_t>();
  std::vector<i64> buf(capacity, 0);
  std::size_t head = 0, count = 0;
  std::vector<i64> outputs;
  for (const auto& op : payload.at("script")) {
    const std::string name = op[0].get<std::string>();
    if (name == "enqueue") {
      const i64 v = op[1].get<i64>();
      if (count == capacity) {
        em.emit("full", {v});
        outputs.push_back(-2);
      } else {
        const std::size_t tail = (head + count) % capacity;
        buf[tail] = v;
        ++count;
        em.emit("enqueue", {v, static_cast<i64>(tail)},
                tail < head ? "wrap" : "");
        outputs.push_back(v);
      }
    } else {  // dequeue
      if (count == 0) {
        em.emit("empty", {});
        outputs.push_back(-1);
      } else {
        const i64 v = buf[head];
        em.emit("dequeue", {v, static_cast<i64>(head)});
        head = (head + 1) % capacity;
        --count;
        outputs.push_back(v);
      }
    }
  }
  std::vector<i64> content;
  for (std::size_t i = 0; i < count; ++i) content.push_back(buf[(head + i) % capacity]);
  json ans;
  ans["outputs"] = to_json_array(outputs);
  ans["queue"] = to_json_array(content);
  return ans.dump();
}

// --- Doubly linked list ---------------------------------------------------------------

std::string dll_run(const json& payload, TraceSink& sink) {
  Emitter em(sink);
  std::list<i64> lst;
  std::vector<i64> outputs;
  for (const auto& op : payload.at("script")) {
    const std::string name = op[0].get<std::string>();
    if (name == "push_front") {
      lst.push_front(op[1].get<i64>());
      em.emit("push_front", {op[1].get<i64>()});
    } else if (name == "push_back") {
      lst.push_back(op[1].get<i64>());
      em.emit("push_back", {op[1].get<i64>()});
    } else if (name == "delete") {
      const i64 v = op[1].get<i64>();
      const auto it = std::find(lst.begin(), lst.end(), v);
      if (it == lst.end()) {
        em.emit("miss", {v});
        outputs.push_back(0);
      } else {
        lst.erase(it);
        em.emit("unlink", {v});
        outputs.push_back(1);
      }
    } else if (name == "insert_after") {
      const i64 anchor = op[1].get<i64>();
      const i64 v = op[2].get<i64>();
      const auto it = std::find(lst.begin(), lst.end(), anchor);
      if (it == lst.end()) {
        em.emit("miss", {anchor});
        outputs.push_back(0);
      } else {
        auto next = it;
        ++next;
        lst.insert(next, v);
        em.emit("link", {anchor, v});
        outputs.push_back(1);
      }
    } else {  // traverse: forward then backward consistency probe
      i64 checksum = 0;
      for (i64 v : lst) checksum = checksum * 31 + v;
      for (auto it = lst.rbegin(); it != lst.rend(); ++it) checksum = checksum * 17 + *it;
      em.emit("traverse", {static_cast<i64>(lst.size()), checksum});
      outputs.push_back(checksum);
    }
    em.snapshot_with([&] {
      std::vector<i64> v(lst.begin(), lst.end());
      return vec_state(v);
    });
  }
  std::vector<i64> forward(lst.begin(), lst.end());
  json ans;
  ans["outputs"] = to_json_array(outputs);
  ans["list"] = to_json_array(forward);
  return ans.dump();
}

// --- Hash table with linear probing -------------------------------------------------------

std::string hash_lp_run(const json& payload, TraceSink& sink) {
  Emitter em(sink);
  const auto capacity = payload.at("capacity").get<std::size_t>();
  constexpr i64 kEmpty = INT64_MIN, kTombstone = INT64_MIN + 1;
  std::vector<i64> table(capacity, kEmpty);
  std::vector<i64> outputs;
  auto slot_of = [&](i64 key) {
    return static_cast<std::size_t>(((key % static_cast<i64>(capacity)) +
                                     static_cast<i64>(capacity)) %
                                    static_cast<i64>(capacity));
  };
  for (const auto& op : payload.at("script")) {
    const std::string name = op[0].get<std::string>();
    const i64 key = op[1].get<i64>();
    std::size_t slot = slot_of(key);
    if (name == "insert") {
      std::size_t probes = 0;
      std::size_t target = capacity;
      while (probes < capacity) {
        em.emit("probe", {key, static_cast<i64>(slot),
                          table[slot] == kEmpty ? 0 : (table[slot] == kTombstone ? 2 : 1)});
        if (table[slot] == key) {
          target = slot;  // already present
          break;
        }
        if (table[slot] == kEmpty || table[slot] == kTombstone) {
          target = slot;
          break;
        }
        slot = (slot + 1) % capacity;
        ++probes;
      }
      if (target == capacity) {
        em.emit("full", {key});
        outputs.push_back(0);
      } else {
        table[target] = key;
        em.emit("store", {key, static_cast<i64>(target)});
        outputs.push_back(1);
      }
    } else if (name == "search") {
      std::size_t probes = 0;
      i64 found = 0;
      while (probes < capacity && table[slot] != kEmpty) {
        em.emit("probe", {key, static_cast<i64>(slot),
                          table[slot] == kTombstone ? 2 : 1});
        if (table[slot] == key) {
          found = 1;
          break;
        }
        slot = (slot + 1) % capacity;
        ++probes;
      }
      em.emit(found ? "hit" : "miss", {key});
      outputs.push_back(found);
    } else {  // delete (tombstone)
      std::size_t probes = 0;
      i64 removed = 0;
      while (probes < capacity && table[slot] != kEmpty) {
        em.emit("probe", {key, static_cast<i64>(slot),
                          table[slot] == kTombstone ? 2 : 1});
        if (table[slot] == key) {
          table[slot] = kTombstone;
          removed = 1;
          em.emit("erase", {key, static_cast<i64>(slot)});
          break;
        }
        slot = (slot + 1) % capacity;
        ++probes;
      }
      if (removed == 0) em.emit("miss", {key});
      outputs.push_back(removed);
    }
  }
  json ans;
  ans["outputs"] = to_json_array(outputs);
  json final_table = json::array();
  for (i64 v : table) {
    if (v == kEmpty) {
      final_table.push_back(nullptr);
    } else if (v == kTombstone) {
      final_table.push_back("tomb");
    } else {
      final_table.push_back(v);
    }
  }
  ans["table"] = final_table;
  return ans.dump();
}

// --- LRU cache ----------------------------------------------------------------------------

std::string lru_run(const json& payload, TraceSink& sink) {
  Emitter em(sink);
  const auto capacity = payload.at("capacity").get<std::size_t>();
  std::list<std::pair<i64, i64>> order;  // front = most recent
  std::map<i64, std::list<std::pair<i64, i64>>::iterator> index;
  std::vector<i64> outputs;
  for (const auto& op : payload.at("script")) {
    const std::string name = op[0].get<std::string>();
    const i64 key = op[1].get<i64>();
    if (name == "put") {
      const i64 value = op[2].get<i64>();
      const auto it = index.find(key);
      if (it != index.end()) {
        order.erase(it->second);
        index.erase(it);
      } else if (index.size() == capacity) {
        const auto victim = order.back();
        order.pop_back();
        index.erase(victim.first);
        em.emit("evict", {victim.first});
      }
      order.push_front({key, value});
      index[key] = order.begin();
      em.emit("put", {key, value});
    } else {  // get
      const auto it = index.find(key);
      if (it == index.end()) {
        em.emit("miss", {key});
        outputs.push_back(-1);
      } else {
        const auto kv = *it->second;
        order.erase(it->second);
        order.push_front(kv);
        index[key] = order.begin();
        em.emit("hit", {key, kv.second});
        outputs.push_back(kv.second);
      }
    }
  }
  json ans;
  ans["outputs"] = to_json_array(outputs);
  json recency = json::array();
  for (const auto& [k, v] : order) recency.push_back(json::array({k, v}));
  ans["cache"] = recency;
  return ans.dump();
}

// --- Union-find with path compression and union by rank -------------------------------------

std::string union_find_run(const json& payload, TraceSink& sink) {
  Emitter em(sink);
  const auto n = payload.at("n").get<std::size_t>();
  std::vector<i64> parent(n);
  std::vector<i64> rank_of(n, 0);
  for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<i64>(i);
  std::vector<i64> outputs;

  std::function<i64(i64)> find = [&](i64 x) {
    std::vector<i64> path;
    while (parent[static_cast<std::size_t>(x)] != x) {
      path.push_back(x);
      x = parent[static_cast<std::size_t>(x)];
    }
    for (i64 node : path) {
      if (parent[static_cast<std::size_t>(node)] != x) {
        parent[static_cast<std::size_t>(node)] = x;
        em.emit("compress", {node, x});
      }
    }
    return x;
  };

  for (const auto& op : payload.at("script")) {
    const std::string name = op[0].get<std::string>();
    if (name == "union") {
      const i64 a = op[1].get<i64>(), b = op[2].get<i64>();
      const i64 ra = find(a), rb = find(b);
      em.emit("find", {a, ra});
      em.emit("find", {b, rb});
      if (ra == rb) {
        em.emit("same", {ra});
        continue;
      }
      i64 big = ra, small = rb;
      if (rank_of[static_cast<std::size_t>(ra)] < rank_of[static_cast<std::size_t>(rb)]) {
        std::swap(big, small);
      }
      parent[static_cast<std::size_t>(small)] = big;
      if (rank_of[static_cast<std::size_t>(big)] == rank_of[static_cast<std::size_t>(small)]) {
        rank_of[static_cast<std::size_t>(big)]++;
      }
      em.emit("link", {small, big});
    } else {  // find
      const i64 a = op[1].get<i64>();
      const i64 root = find(a);
      em.emit("find", {a, root});
      outputs.push_back(root);
    }
  }
  std::set<i64> roots;
  for (std::size_t i = 0; i < n; ++i) roots.insert(find(static_cast<i64>(i)));
  json ans;
  ans["outputs"] = to_json_array(outputs);
  ans["components"] = static_cast<i64>(roots.size());
  return ans.dump();
}

// --- Generators --------------------------------------------------------------------------------

json gen_script_sizes(Rng& rng, const std::vector<int>& sizes) {
  json payload;
  payload["ops"] = sizes[static_cast<std::size_t>(rng.next_below(sizes.size()))];
  return payload;
}

json gen_stack(Rng& rng) {
  const std::vector<int> sizes = {20, 100, 250, 500};
  const int ops = sizes[static_cast<std::size_t>(rng.next_below(sizes.size()))];
  json script = json::array();
  for (int i = 0; i < ops; ++i) {
    switch (rng.next_below(5)) {
      case 0:
      case 1:
      case 2: script.push_back(json::array({"push", rng.next_int(-1000, 1000)})); break;
      case 3: script.push_back(json::array({"pop"})); break;
      default: script.push_back(json::array({"peek"}));
    }
  }
  json payload;
  payload["capacity"] = rng.next_int(8, 64);
  payload["script"] = script;
  return payload;
}

json gen_circular_queue(Rng& rng) {
  const std::vector<int> sizes = {20, 100, 250, 500};
  const int ops = sizes[static_cast<std::size_t>(rng.next_below(sizes.size()))];
  json script = json::array();
  for (int i = 0; i < ops; ++i) {
    if (rng.next_below(5) < 3) {
      script.push_back(json::array({"enqueue", rng.next_int(-1000, 1000)}));
    } else {
      script.push_back(json::array({"dequeue"}));
    }
  }
  json payload;
  payload["capacity"] = rng.next_int(4, 32);
  payload["script"] = script;
  return payload;
}

json gen_dll(Rng& rng) {
  const std::vector<int> sizes = {20, 60, 120, 200};
  const int ops = sizes[static_cast<std::size_t>(rng.next_below(sizes.size()))];
  json script = json::array();
  for (int i = 0; i < ops; ++i) {
    switch (rng.next_below(6)) {
      case 0:
      case 1: script.push_back(json::array({"push_back", rng.next_int(0, 100)})); break;
      case 2: script.push_back(json::array({"push_front", rng.next_int(0, 100)})); break;
      case 3: script.push_back(json::array({"delete", rng.next_int(0, 100)})); break;
      case 4:
        script.push_back(json::array({"insert_after", rng.next_int(0, 100),
                                      rng.next_int(0, 100)}));
        break;
      default: script.push_back(json::array({"traverse"}));
    }
  }
  json payload;
  payload["script"] = script;
  return payload;
}

json gen_hash_lp(Rng& rng) {
  const std::vector<int> sizes = {20, 60, 120, 200};
  const int ops = sizes[static_cast<std::size_t>(rng.next_below(sizes.size()))];
  json script = json::array();
  for (int i = 0; i < ops; ++i) {
    const i64 key = rng.next_int(0, 200);
    switch (rng.next_below(5)) {
      case 0:
      case 1:
      case 2: script.push_back(json::array({"insert", key})); break;
      case 3: script.push_back(json::array({"search", key})); break;
      default: script.push_back(json::array({"delete", key}));
    }
  }
  json payload;
  payload["capacity"] = 257;  // prime, larger than max live keys
  payload["script"] = script;
  return payload;
}

json gen_lru(Rng& rng) {
  const std::vector<int> sizes = {50, 150, 300, 500};
  const int ops = sizes[static_cast<std::size_t>(rng.next_below(sizes.size()))];
  json script = json::array();
  const i64 key_space = rng.next_int(6, 30);
  for (int i = 0; i < ops; ++i) {
    const i64 key = rng.next_below(static_cast<u64>(key_space));
    if (rng.next_below(2) == 0) {
      script.push_back(json::array({"put", key, rng.next_int(0, 1000)}));
    } else {
      script.push_back(json::array({"get", key}));
    }
  }
  json payload;
  payload["capacity"] = rng.next_int(2, 10);
  payload["script"] = script;
  return payload;
}

json gen_union_find(Rng& rng) {
  const std::vector<int> sizes = {50, 150, 300, 500};
  const int ops = sizes[static_cast<std::size_t>(rng.next_below(sizes.size()))];
  const int n = static_cast<int>(rng.next_int(10, 100));
  json script = json::array();
  for (int i = 0; i < ops; ++i) {
    if (rng.next_below(2) == 0) {
      script.push_back(json::array({"union",
                                    static_cast<i64>(rng.next_below(static_cast<u64>(n))),
                                    static_cast<i64>(rng.next_below(static_cast<u64>(n)))}));
    } else {
      script.push_back(json::array({"find",
                                    static_cast<i64>(rng.next_below(static_cast<u64>(n)))}));
    }
  }
  json payload;
  payload["n"] = n;
  payload["script"] = script;
  return payload;
}

TaskDriver make_ds_driver(int ordinal, int task_index, std::string name,
                          std::set<std::string> vocab,
                          std::function<json(Rng&)> gen,
                          std::function<std::string(const json&, TraceSink&)> run) {
  TaskDriver d;
  d.id = {ordinal, 11, task_index, std::move(name)};
  d.vocab = std::move(vocab);
  d.generate = std::move(gen);
  d.trivial = [](const json&) { return false; };
  d.run = std::move(run);
  d.size_param = [](const json& p) { return static_cast<i64>(p.at("script").size()); };
  d.full_snapshot_limit = 32;
  d.min_steps = [](const json& p) { return static_cast<u64>(p.at("script").size()) / 2; };
  return d;
}

}  // namespace

void register_datastructure(std::vector<TaskDriver>& out) {
  int o = static_cast<int>(out.size());
  out.push_back(make_ds_driver(o++, 1, "stack",
                               {"push", "pop", "peek", "underflow", "overflow"},
                               gen_stack, stack_run));
  out.push_back(make_ds_driver(o++, 2, "circular_queue",
                               {"enqueue", "dequeue", "full", "empty"},
                               gen_circular_queue, circular_queue_run));
  out.push_back(make_ds_driver(
      o++, 3, "dll", {"push_front", "push_back", "unlink", "link", "miss", "traverse"},
      gen_dll, dll_run));
  out.push_back(make_ds_driver(
      o++, 4, "hash_lp", {"probe", "store", "erase", "hit", "miss", "full"},
      gen_hash_lp, hash_lp_run));
  out.push_back(make_ds_driver(o++, 5, "lru", {"put", "get", "hit", "miss", "evict"},
                               gen_lru, lru_run));
  out.push_back(make_ds_driver(o++, 6, "union_find",
                               {"find", "union", "link", "same", "compress"},
                               gen_union_find, union_find_run));
}

}  // namespace prime::oracles

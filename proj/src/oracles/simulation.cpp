// Reference executors for the eight system-simulation tasks (category 12).
// Constraint-violating script entries produce rejection events and recorded
// results, never execution failures.

#include <map>
#include <queue>
#include <set>

#include "common.hpp"
#include "prime/digest.hpp"

namespace prime::oracles {
namespace {

// --- In-memory filesystem -----------------------------------------------------------

struct FsNode {
  bool dir = true;
  std::map<std::string, int> children;  // name -> node index
};

std::string filesystem_run(const json& payload, TraceSink& sink) {
  Emitter em(sink);
  std::vector<FsNode> nodes(1);  // node 0 = root
  std::vector<std::string> outputs;

  auto split = [](const std::string& path) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : path) {
      if (ch == '/') {
        if (!cur.empty()) parts.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(ch);
      }
    }
    if (!cur.empty()) parts.push_back(cur);
    return parts;
  };
  // Resolve to parent dir of the last component; -1 when a segment is missing.
  auto resolve_parent = [&](const std::vector<std::string>& parts) {
    int cur = 0;
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
      const auto it = nodes[static_cast<std::size_t>(cur)].children.find(parts[i]);
      if (it == nodes[static_cast<std::size_t>(cur)].children.end() ||
          !nodes[static_cast<std::size_t>(it->second)].dir) {
        return -1;
      }
      cur = it->second;
      em.emit("resolve", {cur}, parts[i]);
    }
    return cur;
  };

  for (const auto& op : payload.at("script")) {
    const std::string name = op[0].get<std::string>();
    const std::string path = op[1].get<std::string>();
    const auto parts = split(path);
    const int parent = parts.empty() ? -1 : resolve_parent(parts);
    if (name == "mkdir" || name == "create") {
      if (parent < 0 || nodes[static_cast<std::size_t>(parent)].children.count(parts.back()) > 0) {
        em.emit("error", {}, name + " " + path);
        outputs.push_back("error");
        continue;
      }
      nodes.push_back({name == "mkdir", {}});
      nodes[static_cast<std::size_t>(parent)].children[parts.back()] =
          static_cast<int>(nodes.size()) - 1;
      em.emit(name == "mkdir" ? "mkdir" : "create", {static_cast<i64>(nodes.size()) - 1}, path);
      outputs.push_back("ok");
    } else if (name == "rm") {
      if (parent < 0) {
        em.emit("error", {}, "rm " + path);
        outputs.push_back("error");
        continue;
      }
      const auto it = nodes[static_cast<std::size_t>(parent)].children.find(parts.back());
      if (it == nodes[static_cast<std::size_t>(parent)].children.end()) {
        em.emit("error", {}, "rm " + path);
        outputs.push_back("error");
      } else {
        nodes[static_cast<std::size_t>(parent)].children.erase(it);
        em.emit("rm", {}, path);
        outputs.push_back("ok");
      }
    } else {  // ls
      int target = 0;
      if (!parts.empty()) {
        const int par = resolve_parent(parts);
        if (par < 0) {
          em.emit("error", {}, "ls " + path);
          outputs.push_back("error");
          continue;
        }
        const auto it = nodes[static_cast<std::size_t>(par)].children.find(parts.back());
        if (it == nodes[static_cast<std::size_t>(par)].children.end()) {
          em.emit("error", {}, "ls " + path);
          outputs.push_back("error");
          continue;
        }
        target = it->second;
      }
      std::string listing;
      if (nodes[static_cast<std::size_t>(target)].dir) {
        for (const auto& [child, idx] : nodes[static_cast<std::size_t>(target)].children) {
          if (!listing.empty()) listing.push_back(' ');
          listing += child;
          if (nodes[static_cast<std::size_t>(idx)].dir) listing.push_back('/');
        }
      } else {
        listing = parts.back();
      }
      em.emit("ls", {}, listing);
      outputs.push_back(listing);
    }
  }
  json ans;
  ans["outputs"] = outputs;
  return ans.dump();
}

// --- Blockchain ledger ------------------------------------------------------------------

std::string blockchain_run(const json& payload, TraceSink& sink) {
  Emitter em(sink);
  std::vector<i64> balances = to_vec(payload.at("initial"));
  std::string prev_digest(64, '0');
  const auto& txns = payload.at("txns");
  const std::size_t block_size = 4;
  i64 block_idx = 0;
  std::string block_body;
  std::size_t in_block = 0;
  i64 applied = 0;

  auto seal_block = [&] {
    if (in_block == 0) return;
    const std::string digest = sha256_hex(prev_digest + "|" + block_body);
    em.emit("block", {block_idx}, digest);
    prev_digest = digest;
    ++block_idx;
    block_body.clear();
    in_block = 0;
  };

  for (const auto& t : txns) {
    const i64 from = t[0].get<i64>();
    const i64 to = t[1].get<i64>();
    const i64 amount = t[2].get<i64>();
    if (balances[static_cast<std::size_t>(from)] < amount) {
      em.emit("tx", {from, to, amount}, "insufficient");
    } else {
      balances[static_cast<std::size_t>(from)] -= amount;
      balances[static_cast<std::size_t>(to)] += amount;
      em.emit("tx", {from, to, amount}, "ok");
      ++applied;
      block_body += std::to_string(from) + ">" + std::to_string(to) + ":" +
                    std::to_string(amount) + ";";
      if (++in_block == block_size) seal_block();
    }
    em.snapshot_with([&] { return vec_state(balances); });
  }
  seal_block();
  json ans;
  ans["balances"] = to_json_array(balances);
  ans["head"] = prev_digest;
  ans["blocks"] = block_idx;
  ans["applied"] = applied;
  return ans.dump();
}

// --- Railway single-track scheduling -------------------------------------------------------

std::string railway_run(const json& payload, TraceSink& sink) {
  Emitter em(sink);
  // Accepted reservations per track as (enter, exit) half-open intervals.
  std::map<i64, std::vector<std::pair<i64, i64>>> reserved;
  json accepted = json::array();
  i64 train_id = 0;
  for (const auto& t : payload.at("trains")) {
    const i64 track = t[0].get<i64>();
    const i64 enter = t[1].get<i64>();
    const i64 exit = t[2].get<i64>();
    em.emit("request", {train_id, track, enter, exit});
    bool conflict = false;
    for (const auto& [s, e] : reserved[track]) {
      if (enter < e && s < exit) {
        conflict = true;
        break;
      }
    }
    if (conflict) {
      em.emit("reject", {train_id}, "overlap");
      accepted.push_back(false);
    } else {
      reserved[track].push_back({enter, exit});
      em.emit("accept", {train_id});
      accepted.push_back(true);
    }
    ++train_id;
  }
  json ans;
  ans["accepted"] = accepted;
  return ans.dump();
}

// --- Meeting room booking --------------------------------------------------------------------

std::string meeting_run(const json& payload, TraceSink& sink) {
  Emitter em(sink);
  std::vector<i64> capacity = to_vec(payload.at("rooms"));
  std::vector<std::vector<std::pair<i64, i64>>> booked(capacity.size());
  json accepted = json::array();
  i64 req_id = 0;
  for (const auto& r : payload.at("requests")) {
    const auto room = r[0].get<std::size_t>();
    const i64 start = r[1].get<i64>();
    const i64 end = r[2].get<i64>();
    const i64 size = r[3].get<i64>();
    em.emit("request", {req_id, static_cast<i64>(room), start, end, size});
    if (size > capacity[room]) {
      em.emit("reject", {req_id}, "capacity");
      accepted.push_back(false);
    } else {
      bool conflict = false;
      for (const auto& [s, e] : booked[room]) {
        if (start < e && s < end) {
          conflict = true;
          break;
        }
      }
      if (conflict) {
        em.emit("reject", {req_id}, "double_booked");
        accepted.push_back(false);
      } else {
        booked[room].push_back({start, end});
        em.emit("book", {req_id});
        accepted.push_back(true);
      }
    }
    ++req_id;
  }
  json ans;
  ans["accepted"] = accepted;
  return ans.dump();
}

// --- Elevator (SCAN) ---------------------------------------------------------------------------

std::string elevator_run(const json& payload, TraceSink& sink) {
  Emitter em(sink);
  const i64 floors = payload.at("floors").get<i64>();
  i64 current = payload.at("start").get<i64>();
  bool up = payload.at("direction").get<std::string>() == "up";
  std::set<i64> pending;
  for (const auto& c : payload.at("calls")) pending.insert(c.get<i64>());
  std::vector<i64> served;
  i64 distance = 0;
  if (pending.count(current) > 0) {
    served.push_back(current);
    em.emit("serve", {current});
    pending.erase(current);
  }
  while (!pending.empty()) {
    const i64 next = current + (up ? 1 : -1);
    if (next < 0 || next >= floors) {
      up = !up;
      em.emit("reverse", {current});
      continue;
    }
    // Reverse early when no pending call remains in the travel direction.
    bool any_ahead = false;
    for (i64 f : pending) {
      if ((up && f > current) || (!up && f < current)) {
        any_ahead = true;
        break;
      }
    }
    if (!any_ahead) {
      up = !up;
      em.emit("reverse", {current});
      continue;
    }
    current = next;
    ++distance;
    em.emit("move", {current});
    if (pending.count(current) > 0) {
      served.push_back(current);
      em.emit("serve", {current});
      pending.erase(current);
    }
  }
  json ans;
  ans["served"] = to_json_array(served);
  ans["distance"] = distance;
  return ans.dump();
}

// --- Network routing with TTL -------------------------------------------------------------------

std::string routing_run(const json& payload, TraceSink& sink) {
  Emitter em(sink);
  const int n = payload.at("n").get<int>();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const auto& e : payload.at("edges")) {
    adj[e[0].get<std::size_t>()].push_back(e[1].get<int>());
    adj[e[1].get<std::size_t>()].push_back(e[0].get<int>());
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  // Next-hop tables from all-destination BFS (lowest-id tie break).
  std::vector<std::vector<int>> next_hop(static_cast<std::size_t>(n),
                                         std::vector<int>(static_cast<std::size_t>(n), -1));
  for (int dst = 0; dst < n; ++dst) {
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    std::queue<int> q;
    dist[static_cast<std::size_t>(dst)] = 0;
    q.push(dst);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int v : adj[static_cast<std::size_t>(u)]) {
        if (dist[static_cast<std::size_t>(v)] < 0) {
          dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
          q.push(v);
        }
      }
    }
    for (int src = 0; src < n; ++src) {
      if (src == dst || dist[static_cast<std::size_t>(src)] < 0) continue;
      for (int v : adj[static_cast<std::size_t>(src)]) {
        if (dist[static_cast<std::size_t>(v)] ==
            dist[static_cast<std::size_t>(src)] - 1) {
          next_hop[static_cast<std::size_t>(src)][static_cast<std::size_t>(dst)] = v;
          break;  // lowest id (adjacency sorted)
        }
      }
    }
  }
  json status = json::array();
  i64 packet_id = 0;
  for (const auto& p : payload.at("packets")) {
    const int src = p[0].get<int>();
    const int dst = p[1].get<int>();
    i64 ttl = p[2].get<i64>();
    int at = src;
    std::string result;
    while (true) {
      if (at == dst) {
        em.emit("deliver", {packet_id, at});
        result = "delivered";
        break;
      }
      const int hop = next_hop[static_cast<std::size_t>(at)][static_cast<std::size_t>(dst)];
      if (hop < 0) {
        em.emit("drop", {packet_id, at}, "unreachable");
        result = "unreachable";
        break;
      }
      if (ttl <= 0) {
        em.emit("drop", {packet_id, at}, "ttl_expired");
        result = "ttl_expired";
        break;
      }
      --ttl;
      at = hop;
      em.emit("hop", {packet_id, at, ttl});
    }
    status.push_back(result);
    ++packet_id;
  }
  json ans;
  ans["status"] = status;
  return ans.dump();
}

// --- Assembly line fault propagation ---------------------------------------------------------------

std::string assembly_run(const json& payload, TraceSink& sink) {
  Emitter em(sink);
  const i64 stages = payload.at("stages").get<i64>();
  const i64 items = payload.at("items").get<i64>();
  std::set<std::pair<i64, i64>> faults;  // (stage, time)
  for (const auto& f : payload.at("faults")) {
    faults.insert({f[0].get<i64>(), f[1].get<i64>()});
  }
  json status = json::array();
  for (i64 item = 0; item < items; ++item) {
    bool defective = false;
    for (i64 stage = 0; stage < stages; ++stage) {
      const i64 t = item + stage;  // pipeline: one item enters per tick
      const bool hit = faults.count({stage, t}) > 0;
      defective = defective || hit;
      em.emit("process", {item, stage, t}, hit ? "fault" : (defective ? "defective" : "ok"));
    }
    status.push_back(defective ? "defect" : "ok");
  }
  json ans;
  ans["status"] = status;
  return ans.dump();
}

// --- Chemical reaction steps with element conservation ----------------------------------------------

std::string chemistry_run(const json& payload, TraceSink& sink) {
  Emitter em(sink);
  std::vector<i64> inventory = to_vec(payload.at("inventory"));
  const auto& reactions = payload.at("reactions");
  json applied = json::array();
  for (const auto& step : payload.at("steps")) {
    const auto r = step[0].get<std::size_t>();
    const i64 times = step[1].get<i64>();
    const auto& reaction = reactions[r];
    bool ok = true;
    for (const auto& in : reaction.at("in")) {
      if (inventory[in[0].get<std::size_t>()] < in[1].get<i64>() * times) {
        ok = false;
        break;
      }
    }
    if (!ok) {
      em.emit("react", {static_cast<i64>(r), times}, "insufficient");
      applied.push_back(false);
    } else {
      for (const auto& in : reaction.at("in")) {
        inventory[in[0].get<std::size_t>()] -= in[1].get<i64>() * times;
      }
      for (const auto& out : reaction.at("out")) {
        inventory[out[0].get<std::size_t>()] += out[1].get<i64>() * times;
      }
      em.emit("react", {static_cast<i64>(r), times}, "ok");
      applied.push_back(true);
    }
    em.snapshot_with([&] { return vec_state(inventory); });
  }
  json ans;
  ans["inventory"] = to_json_array(inventory);
  ans["applied"] = applied;
  return ans.dump();
}

// --- Generators ----------------------------------------------------------------------------------------

json gen_filesystem(Rng& rng) {
  const int ops = static_cast<int>(rng.next_int(20, 100));
  json script = json::array();
  std::vector<std::string> known_dirs = {""};
  std::vector<std::string> known_files;
  for (int i = 0; i < ops; ++i) {
    const std::string base = known_dirs[static_cast<std::size_t>(rng.next_below(known_dirs.size()))];
    const std::string fresh = "n" + std::to_string(i);
    switch (rng.next_below(6)) {
      case 0:
      case 1: {
        const std::string path = base + "/" + fresh;
        script.push_back(json::array({"mkdir", path}));
        known_dirs.push_back(path);
        break;
      }
      case 2: {
        const std::string path = base + "/" + fresh + ".txt";
        script.push_back(json::array({"create", path}));
        known_files.push_back(path);
        break;
      }
      case 3: {
        if (!known_files.empty()) {
          script.push_back(json::array(
              {"rm", known_files[static_cast<std::size_t>(rng.next_below(known_files.size()))]}));
        } else {
          script.push_back(json::array({"ls", "/"}));
        }
        break;
      }
      case 4: {
        // Bad path exercises the error branch.
        script.push_back(json::array({"ls", "/missing" + std::to_string(i) + "/x"}));
        break;
      }
      default:
        script.push_back(json::array(
            {"ls", known_dirs[static_cast<std::size_t>(rng.next_below(known_dirs.size()))] + "/"}));
    }
  }
  json payload;
  payload["script"] = script;
  return payload;
}

json gen_blockchain(Rng& rng) {
  const int accounts = static_cast<int>(rng.next_int(3, 8));
  const int txns = static_cast<int>(rng.next_int(20, 100));
  json initial = json::array();
  for (int a = 0; a < accounts; ++a) initial.push_back(rng.next_int(50, 200));
  json ts = json::array();
  for (int t = 0; t < txns; ++t) {
    const int from = static_cast<int>(rng.next_below(static_cast<u64>(accounts)));
    int to = static_cast<int>(rng.next_below(static_cast<u64>(accounts)));
    if (to == from) to = (to + 1) % accounts;
    ts.push_back(json::array({from, to, rng.next_int(1, 80)}));
  }
  json payload;
  payload["initial"] = initial;
  payload["txns"] = ts;
  return payload;
}

json gen_railway(Rng& rng) {
  const int tracks = static_cast<int>(rng.next_int(2, 6));
  const int trains = static_cast<int>(rng.next_int(5, 20));
  json ts = json::array();
  for (int t = 0; t < trains; ++t) {
    const i64 enter = rng.next_int(0, 80);
    ts.push_back(json::array({static_cast<i64>(rng.next_below(static_cast<u64>(tracks))),
                              enter, enter + rng.next_int(5, 20)}));
  }
  json payload;
  payload["tracks"] = tracks;
  payload["trains"] = ts;
  return payload;
}

json gen_meeting(Rng& rng) {
  const int rooms = static_cast<int>(rng.next_int(2, 6));
  const int requests = static_cast<int>(rng.next_int(20, 100));
  json caps = json::array();
  for (int r = 0; r < rooms; ++r) caps.push_back(rng.next_int(4, 20));
  json reqs = json::array();
  for (int i = 0; i < requests; ++i) {
    const i64 start = rng.next_int(0, 90);
    reqs.push_back(json::array({static_cast<i64>(rng.next_below(static_cast<u64>(rooms))),
                                start, start + rng.next_int(1, 8),
                                rng.next_int(1, 25)}));
  }
  json payload;
  payload["rooms"] = caps;
  payload["requests"] = reqs;
  return payload;
}

json gen_elevator(Rng& rng) {
  const i64 floors = rng.next_int(8, 30);
  const int calls = static_cast<int>(rng.next_int(50, 200));
  std::set<i64> unique_calls;
  for (int c = 0; c < calls; ++c) unique_calls.insert(static_cast<i64>(rng.next_below(static_cast<u64>(floors))));
  json cs = json::array();
  for (i64 f : unique_calls) cs.push_back(f);
  json payload;
  payload["floors"] = floors;
  payload["start"] = static_cast<i64>(rng.next_below(static_cast<u64>(floors)));
  payload["direction"] = rng.next_below(2) == 0 ? "up" : "down";
  payload["calls"] = cs;
  return payload;
}

json gen_routing(Rng& rng) {
  const int n = static_cast<int>(rng.next_int(5, 15));
  std::set<std::pair<int, int>> used;
  for (int v = 1; v < n; ++v) {
    const int u = static_cast<int>(rng.next_below(static_cast<u64>(v)));
    used.insert({u, v});
  }
  const u64 extra = rng.next_below(static_cast<u64>(n));
  for (u64 k = 0; k < extra; ++k) {
    const int u = static_cast<int>(rng.next_below(static_cast<u64>(n)));
    const int v = static_cast<int>(rng.next_below(static_cast<u64>(n)));
    if (u < v) used.insert({u, v});
  }
  json edges = json::array();
  for (auto [u, v] : used) edges.push_back(json::array({u, v}));
  const int packets = static_cast<int>(rng.next_int(100, 500));
  json ps = json::array();
  for (int p = 0; p < packets; ++p) {
    const int src = static_cast<int>(rng.next_below(static_cast<u64>(n)));
    int dst = static_cast<int>(rng.next_below(static_cast<u64>(n)));
    if (dst == src) dst = (dst + 1) % n;
    ps.push_back(json::array({src, dst, rng.next_int(1, 12)}));
  }
  json payload;
  payload["n"] = n;
  payload["edges"] = edges;
  payload["packets"] = ps;
  return payload;
}

json gen_assembly(Rng& rng) {
  const i64 stages = rng.next_int(5, 15);
  const i64 items = rng.next_int(10, 40);
  const int n_faults = static_cast<int>(rng.next_int(2, 10));
  json faults = json::array();
  for (int f = 0; f < n_faults; ++f) {
    faults.push_back(json::array({static_cast<i64>(rng.next_below(static_cast<u64>(stages))),
                                  static_cast<i64>(rng.next_below(static_cast<u64>(items + stages)))}));
  }
  json payload;
  payload["stages"] = stages;
  payload["items"] = items;
  payload["faults"] = faults;
  return payload;
}

json gen_chemistry(Rng& rng) {
  // Species 0..k-1 are elements; compounds are element multisets. Reactions
  // combine two species into their union compound, conserving atoms.
  const int elements = static_cast<int>(rng.next_int(2, 4));
  const int compounds = static_cast<int>(rng.next_int(2, 5));
  const int species = elements + compounds;
  std::vector<std::map<int, i64>> formula(static_cast<std::size_t>(species));
  for (int e = 0; e < elements; ++e) formula[static_cast<std::size_t>(e)][e] = 1;
  json reactions = json::array();
  for (int c = 0; c < compounds; ++c) {
    const int a = static_cast<int>(rng.next_below(static_cast<u64>(elements + c)));
    const int b = static_cast<int>(rng.next_below(static_cast<u64>(elements + c)));
    const int id = elements + c;
    for (auto [el, n] : formula[static_cast<std::size_t>(a)]) formula[static_cast<std::size_t>(id)][el] += n;
    for (auto [el, n] : formula[static_cast<std::size_t>(b)]) formula[static_cast<std::size_t>(id)][el] += n;
    json reaction;
    if (a == b) {
      reaction["in"] = json::array({json::array({a, 2})});
    } else {
      reaction["in"] = json::array({json::array({a, 1}), json::array({b, 1})});
    }
    reaction["out"] = json::array({json::array({id, 1})});
    reactions.push_back(reaction);
  }
  json inventory = json::array();
  for (int s = 0; s < species; ++s) inventory.push_back(s < elements ? rng.next_int(20, 100) : 0);
  const int n_steps = static_cast<int>(rng.next_int(50, 200));
  json steps = json::array();
  for (int s = 0; s < n_steps; ++s) {
    steps.push_back(json::array({static_cast<i64>(rng.next_below(static_cast<u64>(compounds))),
                                 rng.next_int(1, 3)}));
  }
  json formulas = json::array();
  for (const auto& f : formula) {
    json fm = json::object();
    for (auto [el, n] : f) fm[std::to_string(el)] = n;
    formulas.push_back(fm);
  }
  json payload;
  payload["elements"] = elements;
  payload["formulas"] = formulas;
  payload["inventory"] = inventory;
  payload["reactions"] = reactions;
  payload["steps"] = steps;
  return payload;
}

TaskDriver make_sim_driver(int ordinal, int task_index, std::string name,
                           std::set<std::string> vocab,
                           std::function<json(Rng&)> gen,
                           std::function<std::string(const json&, TraceSink&)> run,
                           std::function<i64(const json&)> size_param) {
  TaskDriver d;
  d.id = {ordinal, 12, task_index, std::move(name)};
  d.vocab = std::move(vocab);
  d.generate = std::move(gen);
  d.trivial = [](const json&) { return false; };
  d.run = std::move(run);
  d.size_param = std::move(size_param);
  d.full_snapshot_limit = 32;
  d.min_steps = [](const json&) { return 2; };
  return d;
}

}  // namespace

void register_simulation(std::vector<TaskDriver>& out) {
  int o = static_cast<int>(out.size());
  out.push_back(make_sim_driver(
      o++, 1, "filesystem", {"resolve", "mkdir", "create", "rm", "ls", "error"},
      gen_filesystem, filesystem_run,
      [](const json& p) { return static_cast<i64>(p.at("script").size()); }));
  out.push_back(make_sim_driver(
      o++, 2, "blockchain", {"tx", "block"}, gen_blockchain, blockchain_run,
      [](const json& p) { return static_cast<i64>(p.at("txns").size()); }));
  out.push_back(make_sim_driver(
      o++, 3, "railway", {"request", "accept", "reject"}, gen_railway, railway_run,
      [](const json& p) { return static_cast<i64>(p.at("trains").size()); }));
  out.push_back(make_sim_driver(
      o++, 4, "meeting", {"request", "book", "reject"}, gen_meeting, meeting_run,
      [](const json& p) { return static_cast<i64>(p.at("requests").size()); }));
  out.push_back(make_sim_driver(
      o++, 5, "elevator", {"move", "serve", "reverse"}, gen_elevator, elevator_run,
      [](const json& p) { return p.at("floors").get<i64>(); }));
  out.push_back(make_sim_driver(
      o++, 6, "routing", {"hop", "deliver", "drop"}, gen_routing, routing_run,
      [](const json& p) { return p.at("n").get<i64>(); }));
  out.push_back(make_sim_driver(
      o++, 7, "assembly", {"process"}, gen_assembly, assembly_run,
      [](const json& p) { return p.at("stages").get<i64>(); }));
  out.push_back(make_sim_driver(
      o++, 8, "chemistry", {"react"}, gen_chemistry, chemistry_run,
      [](const json& p) { return static_cast<i64>(p.at("steps").size()); }));
}

}  // namespace prime::oracles

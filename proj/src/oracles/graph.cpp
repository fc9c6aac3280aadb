// Reference executors for the six graph-traversal tasks (category 4).
//
// Graph payloads use edge lists; adjacency is always scanned in ascending
// target-id order and priority ties break toward the lowest vertex id, so
// every trace is unique and reproducible.

#include <queue>
#include <set>

#include "common.hpp"

namespace prime::oracles {
namespace {

constexpr i64 kInf = INT64_MAX / 4;

struct Adjacency {
  std::vector<std::vector<std::pair<int, i64>>> out;  // (target, weight)

  Adjacency(int n, const json& edges, bool undirected, bool weighted)
      : out(static_cast<std::size_t>(n)) {
    for (const auto& e : edges) {
      const int u = e[0].get<int>();
      const int v = e[1].get<int>();
      const i64 w = weighted ? e[2].get<i64>() : 1;
      out[static_cast<std::size_t>(u)].push_back({v, w});
      if (undirected) out[static_cast<std::size_t>(v)].push_back({u, w});
    }
    for (auto& adj : out) std::sort(adj.begin(), adj.end());
  }
};

// --- DFS with discovery/finish times and edge classification --------------

std::string dfs_run(const json& payload, TraceSink& sink) {
  Emitter em(sink);
  const int n = payload.at("n").get<int>();
  Adjacency adj(n, payload.at("edges"), false, false);
  std::vector<int> discovery(static_cast<std::size_t>(n), 0);
  std::vector<int> finish(static_cast<std::size_t>(n), 0);
  std::vector<int> color(static_cast<std::size_t>(n), 0);  // 0 white 1 gray 2 black
  std::vector<int> order;
  int time = 0;

  // Iterative DFS: explicit stack of (vertex, next-neighbor cursor).
  auto visit_root = [&](int root) {
    std::vector<std::pair<int, std::size_t>> stack;
    color[static_cast<std::size_t>(root)] = 1;
    discovery[static_cast<std::size_t>(root)] = ++time;
    order.push_back(root);
    em.emit("discover", {root, time});
    stack.push_back({root, 0});
    while (!stack.empty()) {
      auto& [u, cursor] = stack.back();
      const auto& nbrs = adj.out[static_cast<std::size_t>(u)];
      if (cursor < nbrs.size()) {
        const int v = nbrs[cursor].first;
        ++cursor;
        if (color[static_cast<std::size_t>(v)] == 0) {
          em.emit("edge", {u, v}, "tree");
          color[static_cast<std::size_t>(v)] = 1;
          discovery[static_cast<std::size_t>(v)] = ++time;
          order.push_back(v);
          em.emit("discover", {v, time});
          stack.push_back({v, 0});
        } else if (color[static_cast<std::size_t>(v)] == 1) {
          em.emit("edge", {u, v}, "back");
        } else if (discovery[static_cast<std::size_t>(u)] <
                   discovery[static_cast<std::size_t>(v)]) {
          em.emit("edge", {u, v}, "forward");
        } else {
          em.emit("edge", {u, v}, "cross");
        }
      } else {
        color[static_cast<std::size_t>(u)] = 2;
        finish[static_cast<std::size_t>(u)] = ++time;
        em.emit("finish", {u, time});
        stack.pop_back();
      }
    }
  };

  for (int r = 0; r < n; ++r) {
    if (color[static_cast<std::size_t>(r)] == 0) visit_root(r);
  }
  json ans;
  ans["order"] = order;
  ans["discovery"] = discovery;
  ans["finish"] = finish;
  return ans.dump();
}

// --- BFS with level assignments --------------------------------------------

std::string bfs_run(const json& payload, TraceSink& sink) {
  Emitter em(sink);
  const int n = payload.at("n").get<int>();
  const int source = payload.at("source").get<int>();
  Adjacency adj(n, payload.at("edges"), true, false);
  std::vector<i64> level(static_cast<std::size_t>(n), -1);
  std::vector<i64> parent(static_cast<std::size_t>(n), -1);
  std::queue<int> queue;
  level[static_cast<std::size_t>(source)] = 0;
  queue.push(source);
  em.emit("visit", {source, 0});
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop();
    for (auto [v, w] : adj.out[static_cast<std::size_t>(u)]) {
      (void)w;
      if (level[static_cast<std::size_t>(v)] < 0) {
        level[static_cast<std::size_t>(v)] = level[static_cast<std::size_t>(u)] + 1;
        parent[static_cast<std::size_t>(v)] = u;
        em.emit("visit", {v, level[static_cast<std::size_t>(v)]}, "tree_edge");
        queue.push(v);
      }
    }
  }
  json ans;
  ans["level"] = level;
  ans["parent"] = parent;
  return ans.dump();
}

// --- Dijkstra with relaxation log ------------------------------------------

std::string dijkstra_run(const json& payload, TraceSink& sink) {
  Emitter em(sink);
  const int n = payload.at("n").get<int>();
  const int source = payload.at("source").get<int>();
  Adjacency adj(n, payload.at("edges"), false, true);
  for (const auto& e : payload.at("edges")) {
    if (e[2].get<i64>() < 0) throw std::invalid_argument("dijkstra: negative weight");
  }
  std::vector<i64> dist(static_cast<std::size_t>(n), kInf);
  std::vector<i64> prev(static_cast<std::size_t>(n), -1);
  std::vector<bool> done(static_cast<std::size_t>(n), false);
  using Entry = std::pair<i64, int>;  // (dist, vertex): ties pop lowest id
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  dist[static_cast<std::size_t>(source)] = 0;
  heap.push({0, source});
  std::vector<int> extraction_order;
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (done[static_cast<std::size_t>(u)]) continue;
    done[static_cast<std::size_t>(u)] = true;
    extraction_order.push_back(u);
    em.emit("extract", {u, d});
    for (auto [v, w] : adj.out[static_cast<std::size_t>(u)]) {
      const i64 candidate = d + w;
      // Every edge scan is logged, improving or not, as in the canonical
      // worked trace.
      if (candidate < dist[static_cast<std::size_t>(v)]) {
        dist[static_cast<std::size_t>(v)] = candidate;
        prev[static_cast<std::size_t>(v)] = u;
        em.emit("relax", {u, v, candidate}, "improve");
        heap.push({candidate, v});
      } else {
        em.emit("relax", {u, v, candidate}, "keep");
      }
    }
  }
  json ans;
  json dist_json = json::array();
  for (i64 d : dist) dist_json.push_back(d >= kInf ? -1 : d);
  ans["dist"] = dist_json;
  ans["prev"] = prev;
  ans["extraction_order"] = extraction_order;
  return ans.dump();
}

// --- A* on a grid with Manhattan heuristic ---------------------------------

std::string astar_run(const json& payload, TraceSink& sink) {
  Emitter em(sink);
  const int rows = payload.at("rows").get<int>();
  const int cols = payload.at("cols").get<int>();
  const int sr = payload.at("start")[0].get<int>();
  const int sc = payload.at("start")[1].get<int>();
  const int gr = payload.at("goal")[0].get<int>();
  const int gc = payload.at("goal")[1].get<int>();
  std::vector<std::vector<bool>> wall(static_cast<std::size_t>(rows),
                                      std::vector<bool>(static_cast<std::size_t>(cols), false));
  for (const auto& w : payload.at("walls")) {
    wall[w[0].get<std::size_t>()][w[1].get<std::size_t>()] = true;
  }
  auto h = [&](int r, int c) {
    return static_cast<i64>(std::abs(r - gr) + std::abs(c - gc));
  };
  auto id = [&](int r, int c) { return static_cast<std::size_t>(r * cols + c); };
  const std::size_t cells = static_cast<std::size_t>(rows * cols);
  std::vector<i64> g(cells, kInf);
  std::vector<i64> came(cells, -1);
  std::vector<bool> closed(cells, false);
  using Entry = std::tuple<i64, int, int>;  // (f, row, col): lexicographic ties
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;
  g[id(sr, sc)] = 0;
  open.push({h(sr, sc), sr, sc});
  const int dr[4] = {0, 1, 0, -1};
  const int dc[4] = {1, 0, -1, 0};  // right, down, left, up
  bool found = false;
  while (!open.empty()) {
    auto [f, r, c] = open.top();
    open.pop();
    if (closed[id(r, c)]) continue;
    closed[id(r, c)] = true;
    em.emit("expand", {r, c, g[id(r, c)], h(r, c)});
    if (r == gr && c == gc) {
      found = true;
      break;
    }
    for (int k = 0; k < 4; ++k) {
      const int nr = r + dr[k], nc = c + dc[k];
      if (nr < 0 || nr >= rows || nc < 0 || nc >= cols) continue;
      if (wall[static_cast<std::size_t>(nr)][static_cast<std::size_t>(nc)]) continue;
      const i64 ng = g[id(r, c)] + 1;
      if (ng < g[id(nr, nc)]) {
        g[id(nr, nc)] = ng;
        came[id(nr, nc)] = static_cast<i64>(id(r, c));
        em.emit("open", {nr, nc, ng + h(nr, nc)});
        open.push({ng + h(nr, nc), nr, nc});
      }
    }
  }
  json ans;
  if (!found) {
    ans["reachable"] = false;
    return ans.dump();
  }
  std::vector<std::pair<int, int>> path;
  for (i64 cur = static_cast<i64>(id(gr, gc)); cur >= 0;
       cur = came[static_cast<std::size_t>(cur)]) {
    path.push_back({static_cast<int>(cur) / cols, static_cast<int>(cur) % cols});
  }
  std::reverse(path.begin(), path.end());
  ans["reachable"] = true;
  ans["cost"] = g[id(gr, gc)];
  json path_json = json::array();
  for (auto [r, c] : path) path_json.push_back(json::array({r, c}));
  ans["path"] = path_json;
  return ans.dump();
}

// --- Floyd-Warshall ---------------------------------------------------------

std::string floyd_warshall_run(const json& payload, TraceSink& sink) {
  Emitter em(sink);
  const int n = payload.at("n").get<int>();
  std::vector<std::vector<i64>> dist(
      static_cast<std::size_t>(n), std::vector<i64>(static_cast<std::size_t>(n), kInf));
  for (int i = 0; i < n; ++i) dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 0;
  for (const auto& e : payload.at("edges")) {
    const auto u = e[0].get<std::size_t>();
    const auto v = e[1].get<std::size_t>();
    const i64 w = e[2].get<i64>();
    dist[u][v] = std::min(dist[u][v], w);
  }
  for (int k = 0; k < n; ++k) {
    em.emit("phase", {k});
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const i64 through =
            dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] == kInf ||
                    dist[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] == kInf
                ? kInf
                : dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] +
                      dist[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
        if (through < dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
          dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = through;
          em.emit("update", {k, i, j, through});
        }
      }
    }
  }
  json matrix = json::array();
  for (int i = 0; i < n; ++i) {
    json row = json::array();
    for (int j = 0; j < n; ++j) {
      const i64 d = dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      row.push_back(d >= kInf ? -1 : d);
    }
    matrix.push_back(row);
  }
  json ans;
  ans["dist"] = matrix;
  return ans.dump();
}

// --- Kahn's topological sort ------------------------------------------------

std::string topological_run(const json& payload, TraceSink& sink) {
  Emitter em(sink);
  const int n = payload.at("n").get<int>();
  Adjacency adj(n, payload.at("edges"), false, false);
  std::vector<i64> indegree(static_cast<std::size_t>(n), 0);
  for (const auto& e : payload.at("edges")) {
    indegree[e[1].get<std::size_t>()]++;
  }
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int v = 0; v < n; ++v) {
    em.emit("indegree", {v, indegree[static_cast<std::size_t>(v)]});
    if (indegree[static_cast<std::size_t>(v)] == 0) ready.push(v);
  }
  std::vector<int> order;
  while (!ready.empty()) {
    const int u = ready.top();
    ready.pop();
    order.push_back(u);
    em.emit("order", {u});
    for (auto [v, w] : adj.out[static_cast<std::size_t>(u)]) {
      (void)w;
      if (--indegree[static_cast<std::size_t>(v)] == 0) {
        ready.push(v);
      }
      em.emit("decrement", {v, indegree[static_cast<std::size_t>(v)]});
    }
  }
  json ans;
  if (static_cast<int>(order.size()) != n) {
    // Cycle detection is a normal result, not an error.
    ans["cycle"] = true;
    ans["processed"] = order;
  } else {
    ans["cycle"] = false;
    ans["order"] = order;
  }
  return ans.dump();
}

// --- Generators -------------------------------------------------------------

json gen_dfs(Rng& rng) {
  const std::vector<int> sizes = {50, 100, 250, 500, 1000};
  const int n = sizes[static_cast<std::size_t>(rng.next_below(sizes.size()))];
  json edges = json::array();
  for (int v = 1; v < n; ++v) {
    const int parent = static_cast<int>(rng.next_below(static_cast<u64>(v)));
    edges.push_back(json::array({parent, v}));
  }
  json payload;
  payload["n"] = n;
  payload["edges"] = edges;
  return payload;
}

json gen_connected(Rng& rng, const std::vector<int>& sizes, int max_degree_factor,
                   bool weighted, i64 wlo, i64 whi) {
  const int n = sizes[static_cast<std::size_t>(rng.next_below(sizes.size()))];
  json edges = json::array();
  std::set<std::pair<int, int>> used;
  for (int v = 1; v < n; ++v) {  // spanning tree first
    const int u = static_cast<int>(rng.next_below(static_cast<u64>(v)));
    used.insert({std::min(u, v), std::max(u, v)});
  }
  const int extra = static_cast<int>(
      rng.next_below(static_cast<u64>(std::max(1, (max_degree_factor - 1) * n -
                                                      (n - 1)))));
  for (int k = 0; k < extra; ++k) {
    const int u = static_cast<int>(rng.next_below(static_cast<u64>(n)));
    const int v = static_cast<int>(rng.next_below(static_cast<u64>(n)));
    if (u == v) continue;
    used.insert({std::min(u, v), std::max(u, v)});
  }
  for (auto [u, v] : used) {
    if (weighted) {
      edges.push_back(json::array({u, v, rng.next_int(wlo, whi)}));
    } else {
      edges.push_back(json::array({u, v}));
    }
  }
  json payload;
  payload["n"] = n;
  payload["edges"] = edges;
  payload["source"] = 0;
  return payload;
}

json gen_dijkstra(Rng& rng) {
  const std::vector<int> sizes = {20, 40, 70, 100};
  const int n = sizes[static_cast<std::size_t>(rng.next_below(sizes.size()))];
  json edges = json::array();
  std::set<std::pair<int, int>> used;
  for (int v = 1; v < n; ++v) {
    const int u = static_cast<int>(rng.next_below(static_cast<u64>(v)));
    used.insert({u, v});
  }
  const u64 extra = rng.next_below(static_cast<u64>(3 * n));
  for (u64 k = 0; k < extra; ++k) {
    const int u = static_cast<int>(rng.next_below(static_cast<u64>(n)));
    const int v = static_cast<int>(rng.next_below(static_cast<u64>(n)));
    if (u != v) used.insert({u, v});
  }
  for (auto [u, v] : used) {
    edges.push_back(json::array({u, v, rng.next_int(1, 20)}));
  }
  json payload;
  payload["n"] = n;
  payload["edges"] = edges;
  payload["source"] = 0;
  return payload;
}

json gen_astar(Rng& rng) {
  const std::vector<int> sizes = {10, 15, 20, 25, 30};
  const int side = sizes[static_cast<std::size_t>(rng.next_below(sizes.size()))];
  json walls = json::array();
  for (int r = 0; r < side; ++r) {
    for (int c = 0; c < side; ++c) {
      if ((r == 0 && c == 0) || (r == side - 1 && c == side - 1)) continue;
      if (rng.next_below(100) < 25) walls.push_back(json::array({r, c}));
    }
  }
  json payload;
  payload["rows"] = side;
  payload["cols"] = side;
  payload["walls"] = walls;
  payload["start"] = json::array({0, 0});
  payload["goal"] = json::array({side - 1, side - 1});
  return payload;
}

json gen_floyd(Rng& rng) {
  const std::vector<int> sizes = {8, 12, 18, 25};
  const int n = sizes[static_cast<std::size_t>(rng.next_below(sizes.size()))];
  json edges = json::array();
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v && rng.next_below(100) < 40) {
        edges.push_back(json::array({u, v, rng.next_int(1, 20)}));
      }
    }
  }
  json payload;
  payload["n"] = n;
  payload["edges"] = edges;
  return payload;
}

json gen_topological(Rng& rng) {
  const std::vector<int> sizes = {20, 50, 100, 200};
  const int n = sizes[static_cast<std::size_t>(rng.next_below(sizes.size()))];
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  rng.shuffle(perm);
  std::set<std::pair<int, int>> used;
  const u64 target_edges = static_cast<u64>(n) + rng.next_below(static_cast<u64>(n));
  while (used.size() < target_edges) {
    const auto a = rng.next_below(static_cast<u64>(n));
    const auto b = rng.next_below(static_cast<u64>(n));
    if (a == b) continue;
    const auto [lo, hi] = std::minmax(a, b);
    used.insert({perm[lo], perm[hi]});  // forward in perm order: acyclic
  }
  json edges = json::array();
  for (auto [u, v] : used) edges.push_back(json::array({u, v}));
  // A quarter of the instances get one cycle-closing back edge.
  if (rng.next_below(4) == 0 && n >= 2) {
    const auto a = rng.next_below(static_cast<u64>(n - 1));
    const auto b = a + 1 + rng.next_below(static_cast<u64>(n) - a - 1);
    edges.push_back(json::array({perm[b], perm[a]}));
  }
  json payload;
  payload["n"] = n;
  payload["edges"] = edges;
  return payload;
}

TaskDriver make_graph_driver(int ordinal, int task_index, std::string name,
                             std::set<std::string> vocab,
                             std::function<json(Rng&)> gen,
                             std::function<std::string(const json&, TraceSink&)> run) {
  TaskDriver d;
  d.id = {ordinal, 4, task_index, std::move(name)};
  d.vocab = std::move(vocab);
  d.generate = std::move(gen);
  d.trivial = [](const json&) { return false; };
  d.run = std::move(run);
  d.size_param = [](const json& p) {
    if (p.contains("n")) return p.at("n").get<i64>();
    return p.at("rows").get<i64>() * p.at("cols").get<i64>();
  };
  d.full_snapshot_limit = 50;
  d.min_steps = [](const json& p) {
    return p.contains("n") ? static_cast<u64>(p.at("n").get<i64>()) : 4;
  };
  return d;
}

}  // namespace

void register_graph(std::vector<TaskDriver>& out) {
  int o = static_cast<int>(out.size());
  out.push_back(make_graph_driver(o++, 1, "dfs",
                                  {"discover", "finish", "edge"}, gen_dfs, dfs_run));
  out.push_back(make_graph_driver(
      o++, 2, "bfs", {"visit"},
      [](Rng& rng) { return gen_connected(rng, {20, 50, 100, 200}, 3, false, 0, 0); },
      bfs_run));
  out.push_back(make_graph_driver(o++, 3, "dijkstra", {"extract", "relax"},
                                  gen_dijkstra, dijkstra_run));
  {
    auto d = make_graph_driver(o++, 4, "astar", {"expand", "open"}, gen_astar,
                               astar_run);
    // Unreachable goals are rejected at generation (answers must be solvable).
    d.trivial = [](const json& p) {
      const int rows = p.at("rows").get<int>();
      const int cols = p.at("cols").get<int>();
      std::vector<bool> blocked(static_cast<std::size_t>(rows * cols), false);
      for (const auto& w : p.at("walls")) {
        blocked[w[0].get<std::size_t>() * static_cast<std::size_t>(cols) +
                w[1].get<std::size_t>()] = true;
      }
      std::vector<bool> seen(blocked.size(), false);
      std::queue<int> q;
      q.push(0);
      seen[0] = true;
      while (!q.empty()) {
        const int cur = q.front();
        q.pop();
        const int r = cur / cols, c = cur % cols;
        const int dr[4] = {0, 1, 0, -1}, dc[4] = {1, 0, -1, 0};
        for (int k = 0; k < 4; ++k) {
          const int nr = r + dr[k], nc = c + dc[k];
          if (nr < 0 || nr >= rows || nc < 0 || nc >= cols) continue;
          const auto idx = static_cast<std::size_t>(nr * cols + nc);
          if (!blocked[idx] && !seen[idx]) {
            seen[idx] = true;
            q.push(nr * cols + nc);
          }
        }
      }
      return !seen[static_cast<std::size_t>(rows * cols - 1)];
    };
    out.push_back(std::move(d));
  }
  out.push_back(make_graph_driver(o++, 5, "floyd_warshall", {"phase", "update"},
                                  gen_floyd, floyd_warshall_run));
  out.push_back(make_graph_driver(o++, 6, "topological",
                                  {"indegree", "order", "decrement"},
                                  gen_topological, topological_run));
}

}  // namespace prime::oracles

// Reference executors for the six classic-puzzle tasks (category 6).

#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "common.hpp"
#include "prime/oracles.hpp"

namespace prime::oracles {
namespace {

// --- Tower of Hanoi -----------------------------------------------------------

std::string hanoi_run(const json& payload, TraceSink& sink) {
  Emitter em(sink);
  const int n = payload.at("n").get<int>();
  std::vector<std::vector<int>> pegs(3);
  for (int d = n; d >= 1; --d) pegs[0].push_back(d);

  auto peg_state = [&] {
    std::string s;
    for (int p = 0; p < 3; ++p) {
      if (p) s.push_back('/');
      for (std::size_t i = 0; i < pegs[static_cast<std::size_t>(p)].size(); ++i) {
        if (i) s.push_back(',');
        s += std::to_string(pegs[static_cast<std::size_t>(p)][i]);
      }
    }
    return s;
  };

  u64 moves = 0;
  std::function<void(int, int, int, int)> solve = [&](int k, int from, int to,
                                                      int aux) {
    if (k == 0) return;
    solve(k - 1, from, aux, to);
    pegs[static_cast<std::size_t>(to)].push_back(pegs[static_cast<std::size_t>(from)].back());
    pegs[static_cast<std::size_t>(from)].pop_back();
    ++moves;
    em.emit("move", {k, from, to});
    em.snapshot_with(peg_state);
    solve(k - 1, aux, to, from);
  };
  solve(n, 0, 2, 1);

  json ans;
  ans["moves"] = moves;
  ans["final_peg"] = 2;
  return ans.dump();
}

// --- N-Queens next-step (and enumeration support) -----------------------------

bool queens_valid(const std::vector<int>& cols, int row, int col) {
  for (int i = 0; i < row; ++i) {
    if (cols[static_cast<std::size_t>(i)] == col) return false;
    if (std::abs(row - i) == std::abs(col - cols[static_cast<std::size_t>(i)])) return false;
  }
  return true;
}

std::string nqueens_run(const json& payload, TraceSink& sink) {
  Emitter em(sink);
  const int n = payload.at("n").get<int>();
  std::vector<int> queens;  // 1-based columns for rows 1..n-1
  for (const auto& c : payload.at("queens")) queens.push_back(c.get<int>());

  std::vector<int> valid;
  for (int c = 1; c <= n; ++c) {
    bool ok = true;
    for (int i = 1; i < n && ok; ++i) {
      const int ci = queens[static_cast<std::size_t>(i - 1)];
      const bool col_ok = c != ci;
      const bool diag_ok = std::abs(n - i) != std::abs(c - ci);
      em.emit("check", {c, i, ci}, col_ok ? (diag_ok ? "ok" : "diag") : "col");
      ok = col_ok && diag_ok;
    }
    if (ok) {
      valid.push_back(c);
      em.emit("valid", {c});
    }
  }
  if (valid.empty()) throw NoValidColumn();
  if (valid.size() > 1) throw MultipleValidColumns();
  em.emit("place", {n, valid[0]});
  json ans;
  ans["column"] = valid[0];
  return ans.dump();
}

// --- Blind maze: DFS exploration with bump events ------------------------------

std::string blind_maze_run(const json& payload, TraceSink& sink) {
  Emitter em(sink);
  const int rows = payload.at("rows").get<int>();
  const int cols = payload.at("cols").get<int>();
  std::vector<bool> wall(static_cast<std::size_t>(rows * cols), false);
  for (const auto& w : payload.at("walls")) {
    wall[w[0].get<std::size_t>() * static_cast<std::size_t>(cols) +
         w[1].get<std::size_t>()] = true;
  }
  const int gr = payload.at("goal")[0].get<int>();
  const int gc = payload.at("goal")[1].get<int>();
  const int dr[4] = {-1, 0, 1, 0};
  const int dc[4] = {0, 1, 0, -1};  // N, E, S, W
  const char* dir_names = "NESW";

  std::vector<bool> visited(static_cast<std::size_t>(rows * cols), false);
  std::string path;
  bool found = false;
  std::function<void(int, int)> explore = [&](int r, int c) {
    visited[static_cast<std::size_t>(r * cols + c)] = true;
    if (r == gr && c == gc) {
      found = true;
      em.emit("reach", {r, c});
      return;
    }
    for (int k = 0; k < 4 && !found; ++k) {
      const int nr = r + dr[k], nc = c + dc[k];
      em.emit("try", {r, c, k}, std::string(1, dir_names[k]));
      if (nr < 0 || nr >= rows || nc < 0 || nc >= cols ||
          wall[static_cast<std::size_t>(nr * cols + nc)]) {
        em.emit("bump", {r, c, k});
        continue;
      }
      if (visited[static_cast<std::size_t>(nr * cols + nc)]) continue;
      em.emit("move", {nr, nc});
      path.push_back(dir_names[k]);
      explore(nr, nc);
      if (!found) {
        em.emit("backtrack", {r, c});
        path.pop_back();
      }
    }
  };
  explore(payload.at("start")[0].get<int>(), payload.at("start")[1].get<int>());

  json ans;
  ans["found"] = found;
  ans["path"] = path;
  ans["length"] = path.size();
  return ans.dump();
}

// --- Logic grid (zebra-style) ---------------------------------------------------
//
// k positions, 3 attribute categories; each category's values are a
// permutation over positions. Clues: at / same / left_of / not_at.

struct LogicClue {
  std::string kind;  // "at", "same", "left_of", "not_at"
  int attr_a, val_a;
  int attr_b = 0, val_b = 0;  // position for at/not_at
};

std::vector<LogicClue> parse_clues(const json& payload) {
  std::vector<LogicClue> clues;
  for (const auto& c : payload.at("clues")) {
    LogicClue clue;
    clue.kind = c[0].get<std::string>();
    clue.attr_a = c[1].get<int>();
    clue.val_a = c[2].get<int>();
    clue.attr_b = c[3].get<int>();
    if (c.size() > 4) clue.val_b = c[4].get<int>();
    clues.push_back(clue);
  }
  return clues;
}

// Candidate grids: cand[attr][val] = bitset of possible positions.
using LogicCand = std::vector<std::vector<unsigned>>;

// Count solutions (early exit at 2) by backtracking over (attr, val) cells
// with unary clues folded into position masks and binary clues checked as
// soon as both endpoints are placed.
int logic_count_solutions(const std::vector<LogicClue>& clues, int k,
                          std::vector<std::vector<int>>* found) {
  const unsigned all = (1u << k) - 1;
  std::vector<std::vector<unsigned>> masks(3, std::vector<unsigned>(static_cast<std::size_t>(k), all));
  for (const auto& c : clues) {
    auto& m = masks[static_cast<std::size_t>(c.attr_a)][static_cast<std::size_t>(c.val_a)];
    if (c.kind == "at") m &= 1u << c.attr_b;
    if (c.kind == "not_at") m &= ~(1u << c.attr_b);
  }
  std::vector<std::vector<int>> pos(3, std::vector<int>(static_cast<std::size_t>(k), -1));
  std::array<unsigned, 3> used{};
  int count = 0;

  auto binary_ok = [&] {
    for (const auto& c : clues) {
      if (c.kind == "same" || c.kind == "left_of") {
        const int pa = pos[static_cast<std::size_t>(c.attr_a)][static_cast<std::size_t>(c.val_a)];
        const int pb = pos[static_cast<std::size_t>(c.attr_b)][static_cast<std::size_t>(c.val_b)];
        if (pa < 0 || pb < 0) continue;
        if (c.kind == "same" && pa != pb) return false;
        if (c.kind == "left_of" && pa + 1 != pb) return false;
      }
    }
    return true;
  };

  std::function<void(int)> rec = [&](int cell) {
    if (count >= 2) return;
    if (cell == 3 * k) {
      if (found != nullptr && count == 0) *found = pos;
      ++count;
      return;
    }
    const int attr = cell / k, val = cell % k;
    unsigned avail = masks[static_cast<std::size_t>(attr)][static_cast<std::size_t>(val)] &
                     ~used[static_cast<std::size_t>(attr)];
    while (avail != 0 && count < 2) {
      const int p = __builtin_ctz(avail);
      avail &= avail - 1;
      pos[static_cast<std::size_t>(attr)][static_cast<std::size_t>(val)] = p;
      if (binary_ok()) {
        used[static_cast<std::size_t>(attr)] |= 1u << p;
        rec(cell + 1);
        used[static_cast<std::size_t>(attr)] &= ~(1u << p);
      }
      pos[static_cast<std::size_t>(attr)][static_cast<std::size_t>(val)] = -1;
    }
  };
  rec(0);
  return count;
}

std::string logic_grid_run(const json& payload, TraceSink& sink) {
  Emitter em(sink);
  const int k = payload.at("k").get<int>();
  const auto clues = parse_clues(payload);

  // Constraint propagation over candidate sets, with deduction events.
  LogicCand cand(3, std::vector<unsigned>(static_cast<std::size_t>(k),
                                          (1u << k) - 1));
  bool changed = true;
  auto eliminate = [&](int attr, int val, int posn, const char* why) {
    auto& mask = cand[static_cast<std::size_t>(attr)][static_cast<std::size_t>(val)];
    if (mask & (1u << posn)) {
      mask &= ~(1u << posn);
      em.emit("eliminate", {attr, val, posn}, why);
      changed = true;
    }
  };
  auto fix = [&](int attr, int val, int posn, const char* why) {
    auto& mask = cand[static_cast<std::size_t>(attr)][static_cast<std::size_t>(val)];
    const unsigned want = 1u << posn;
    if (mask != want) {
      mask = want;
      em.emit("assign", {attr, val, posn}, why);
      changed = true;
    }
  };

  while (changed) {
    changed = false;
    for (const auto& c : clues) {
      if (c.kind == "at") {
        fix(c.attr_a, c.val_a, c.attr_b, "clue_at");
      } else if (c.kind == "not_at") {
        eliminate(c.attr_a, c.val_a, c.attr_b, "clue_not_at");
      } else if (c.kind == "same") {
        const unsigned joint =
            cand[static_cast<std::size_t>(c.attr_a)][static_cast<std::size_t>(c.val_a)] &
            cand[static_cast<std::size_t>(c.attr_b)][static_cast<std::size_t>(c.val_b)];
        for (int p = 0; p < k; ++p) {
          if (!(joint & (1u << p))) {
            eliminate(c.attr_a, c.val_a, p, "clue_same");
            eliminate(c.attr_b, c.val_b, p, "clue_same");
          }
        }
      } else if (c.kind == "left_of") {
        for (int p = 0; p < k; ++p) {
          const bool a_ok =
              p + 1 < k &&
              (cand[static_cast<std::size_t>(c.attr_b)][static_cast<std::size_t>(c.val_b)] &
               (1u << (p + 1)));
          if (!a_ok) eliminate(c.attr_a, c.val_a, p, "clue_left_of");
          const bool b_ok =
              p >= 1 &&
              (cand[static_cast<std::size_t>(c.attr_a)][static_cast<std::size_t>(c.val_a)] &
               (1u << (p - 1)));
          if (!b_ok) eliminate(c.attr_b, c.val_b, p, "clue_left_of");
        }
      }
    }
    // Uniqueness within each attribute: a value pinned to one position
    // removes that position from its siblings.
    for (int attr = 0; attr < 3; ++attr) {
      for (int val = 0; val < k; ++val) {
        const unsigned mask = cand[static_cast<std::size_t>(attr)][static_cast<std::size_t>(val)];
        if (__builtin_popcount(mask) == 1) {
          const int posn = __builtin_ctz(mask);
          for (int other = 0; other < k; ++other) {
            if (other != val) eliminate(attr, other, posn, "unique");
          }
        }
      }
    }
  }

  // Whatever propagation left open is resolved by brute force (the
  // generator guarantees a unique solution).
  std::vector<std::vector<int>> solution;
  const int count = logic_count_solutions(clues, k, &solution);
  if (count != 1) throw std::runtime_error("logic_grid: unsolvable payload");
  for (int attr = 0; attr < 3; ++attr) {
    for (int val = 0; val < k; ++val) {
      em.emit("conclude", {attr, val,
                           solution[static_cast<std::size_t>(attr)][static_cast<std::size_t>(val)]});
    }
  }
  json ans;
  ans["positions"] = solution;
  return ans.dump();
}

// --- Sudoku ----------------------------------------------------------------------

struct SudokuBoard {
  std::array<int, 81> cells{};  // 0 empty

  bool can_place(int idx, int v) const {
    const int r = idx / 9, c = idx % 9;
    for (int i = 0; i < 9; ++i) {
      if (cells[static_cast<std::size_t>(r * 9 + i)] == v) return false;
      if (cells[static_cast<std::size_t>(i * 9 + c)] == v) return false;
    }
    const int br = (r / 3) * 3, bc = (c / 3) * 3;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        if (cells[static_cast<std::size_t>((br + i) * 9 + bc + j)] == v) return false;
      }
    }
    return true;
  }
};

// Solver used by generation to count solutions (stops at `limit`).
int sudoku_count(SudokuBoard& b, int limit) {
  int best_idx = -1, best_count = 10;
  for (int idx = 0; idx < 81; ++idx) {
    if (b.cells[static_cast<std::size_t>(idx)] != 0) continue;
    int count = 0;
    for (int v = 1; v <= 9; ++v) {
      if (b.can_place(idx, v)) ++count;
    }
    if (count == 0) return 0;
    if (count < best_count) {
      best_count = count;
      best_idx = idx;
    }
  }
  if (best_idx < 0) return 1;
  int total = 0;
  for (int v = 1; v <= 9 && total < limit; ++v) {
    if (b.can_place(best_idx, v)) {
      b.cells[static_cast<std::size_t>(best_idx)] = v;
      total += sudoku_count(b, limit - total);
      b.cells[static_cast<std::size_t>(best_idx)] = 0;
    }
  }
  return total;
}

std::string sudoku_run(const json& payload, TraceSink& sink) {
  Emitter em(sink);
  SudokuBoard board;
  const std::string givens = payload.at("givens").get<std::string>();
  for (int i = 0; i < 81; ++i) {
    board.cells[static_cast<std::size_t>(i)] = givens[static_cast<std::size_t>(i)] - '0';
  }
  auto board_state = [&] {
    std::string s(81, '0');
    for (int i = 0; i < 81; ++i) {
      s[static_cast<std::size_t>(i)] =
          static_cast<char>('0' + board.cells[static_cast<std::size_t>(i)]);
    }
    return s;
  };

  // Naked singles until fixpoint, then minimum-candidates backtracking.
  std::function<bool()> solve = [&]() -> bool {
    bool progressed = true;
    std::vector<int> filled;
    while (progressed) {
      progressed = false;
      for (int idx = 0; idx < 81; ++idx) {
        if (board.cells[static_cast<std::size_t>(idx)] != 0) continue;
        int candidate = 0, count = 0;
        for (int v = 1; v <= 9; ++v) {
          if (board.can_place(idx, v)) {
            candidate = v;
            ++count;
          }
        }
        if (count == 0) {
          for (auto it = filled.rbegin(); it != filled.rend(); ++it) {
            board.cells[static_cast<std::size_t>(*it)] = 0;
          }
          return false;
        }
        if (count == 1) {
          board.cells[static_cast<std::size_t>(idx)] = candidate;
          filled.push_back(idx);
          em.emit("fill", {idx / 9, idx % 9, candidate}, "single");
          em.snapshot_with(board_state);
          progressed = true;
        }
      }
    }
    int best_idx = -1, best_count = 10;
    for (int idx = 0; idx < 81; ++idx) {
      if (board.cells[static_cast<std::size_t>(idx)] != 0) continue;
      int count = 0;
      for (int v = 1; v <= 9; ++v) {
        if (board.can_place(idx, v)) ++count;
      }
      if (count < best_count) {
        best_count = count;
        best_idx = idx;
      }
    }
    if (best_idx < 0) return true;
    for (int v = 1; v <= 9; ++v) {
      if (!board.can_place(best_idx, v)) continue;
      board.cells[static_cast<std::size_t>(best_idx)] = v;
      em.emit("branch", {best_idx / 9, best_idx % 9, v});
      if (solve()) return true;
      board.cells[static_cast<std::size_t>(best_idx)] = 0;
      em.emit("undo", {best_idx / 9, best_idx % 9, v});
    }
    for (auto it = filled.rbegin(); it != filled.rend(); ++it) {
      board.cells[static_cast<std::size_t>(*it)] = 0;
    }
    return false;
  };

  if (!solve()) throw std::runtime_error("sudoku: unsolvable payload");
  json ans;
  ans["grid"] = board_state();
  return ans.dump();
}

// --- 24-game over rationals -------------------------------------------------------

struct Frac {
  i64 num, den;  // den > 0, reduced

  static Frac of(i64 n, i64 d = 1) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    const i64 g = std::gcd(n < 0 ? -n : n, d);
    return {g ? n / g : n, g ? d / g : d};
  }
  bool operator==(const Frac& o) const { return num == o.num && den == o.den; }
  bool operator<(const Frac& o) const {
    return num * o.den < o.num * den;  // values stay small in this task
  }
};

struct Game24Item {
  Frac value;
  std::string expr;
};

bool game24_search(std::vector<Game24Item> items, const Frac& target, Emitter& em,
                   u64& budget, std::string& expr_out) {
  if (budget == 0) return false;
  --budget;
  if (items.size() == 1) {
    if (items[0].value == target) {
      expr_out = items[0].expr;
      return true;
    }
    return false;
  }
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t j = 0; j < items.size(); ++j) {
      if (i == j) continue;
      const Frac a = items[i].value, b = items[j].value;
      // Commutative ops only for i < j; both orders for - and /.
      struct Candidate {
        bool ok;
        Frac v;
        char op;
      };
      std::vector<Candidate> cands;
      if (i < j) {
        cands.push_back({true, Frac::of(a.num * b.den + b.num * a.den, a.den * b.den), '+'});
        cands.push_back({true, Frac::of(a.num * b.num, a.den * b.den), '*'});
      }
      cands.push_back({true, Frac::of(a.num * b.den - b.num * a.den, a.den * b.den), '-'});
      cands.push_back({b.num != 0, b.num == 0 ? Frac{0, 1} : Frac::of(a.num * b.den, a.den * b.num), '/'});
      for (const auto& cand : cands) {
        if (!cand.ok) continue;
        em.emit("try", {a.num, a.den, b.num, b.den}, std::string(1, cand.op));
        std::vector<Game24Item> next;
        for (std::size_t t = 0; t < items.size(); ++t) {
          if (t != i && t != j) next.push_back(items[t]);
        }
        next.push_back({cand.v, "(" + items[i].expr + cand.op + items[j].expr + ")"});
        if (game24_search(std::move(next), target, em, budget, expr_out)) return true;
      }
    }
  }
  return false;
}

std::string game24_run(const json& payload, TraceSink& sink) {
  Emitter em(sink);
  std::vector<Game24Item> items;
  for (const auto& v : payload.at("numbers")) {
    items.push_back({Frac::of(v.get<i64>()), std::to_string(v.get<i64>())});
  }
  const Frac target = Frac::of(payload.at("target").get<i64>());
  u64 budget = 2'000'000;
  std::string expr;
  const bool found = game24_search(items, target, em, budget, expr);
  json ans;
  ans["solvable"] = found;
  if (found) ans["expression"] = expr;
  return ans.dump();
}

// --- Generators ---------------------------------------------------------------------

json gen_hanoi(Rng& rng) {
  json payload;
  payload["n"] = static_cast<int>(rng.next_int(3, 20));
  return payload;
}

json gen_nqueens(Rng& rng) {
  // Draw a full solution by backtracking with seeded column order, drop the
  // last row, and keep only boards with exactly one valid completion.
  for (;;) {
    const int n = static_cast<int>(rng.next_int(4, 12));
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 1);
    rng.shuffle(order);
    std::vector<int> cols;
    std::function<bool(int)> place = [&](int row) {
      if (row == n) return true;
      for (int c : order) {
        if (queens_valid(cols, row, c)) {
          cols.push_back(c);
          if (place(row + 1)) return true;
          cols.pop_back();
        }
      }
      return false;
    };
    if (!place(0)) continue;
    // Uniqueness of the final column given rows 1..n-1.
    int valid_count = 0;
    for (int c = 1; c <= n; ++c) {
      if (queens_valid(cols, n - 1, c)) ++valid_count;
    }
    if (valid_count != 1) continue;
    json payload;
    payload["n"] = n;
    json queens = json::array();
    for (int i = 0; i + 1 < n; ++i) queens.push_back(cols[static_cast<std::size_t>(i)]);
    payload["queens"] = queens;
    return payload;
  }
}

json gen_blind_maze(Rng& rng) {
  // Recursive-backtracker maze on odd coordinates: always solvable.
  const std::vector<int> sizes = {11, 15, 21, 25, 29};
  const int side = sizes[static_cast<std::size_t>(rng.next_below(sizes.size()))];
  std::vector<std::vector<bool>> open(static_cast<std::size_t>(side),
                                      std::vector<bool>(static_cast<std::size_t>(side), false));
  std::vector<std::pair<int, int>> stack = {{0, 0}};
  open[0][0] = true;
  const int dr[4] = {-2, 0, 2, 0};
  const int dc[4] = {0, 2, 0, -2};
  while (!stack.empty()) {
    auto [r, c] = stack.back();
    std::vector<int> dirs;
    for (int k = 0; k < 4; ++k) {
      const int nr = r + dr[k], nc = c + dc[k];
      if (nr >= 0 && nr < side && nc >= 0 && nc < side &&
          !open[static_cast<std::size_t>(nr)][static_cast<std::size_t>(nc)]) {
        dirs.push_back(k);
      }
    }
    if (dirs.empty()) {
      stack.pop_back();
      continue;
    }
    const int k = dirs[static_cast<std::size_t>(rng.next_below(dirs.size()))];
    const int nr = r + dr[k], nc = c + dc[k];
    open[static_cast<std::size_t>((r + nr) / 2)][static_cast<std::size_t>((c + nc) / 2)] = true;
    open[static_cast<std::size_t>(nr)][static_cast<std::size_t>(nc)] = true;
    stack.push_back({nr, nc});
  }
  json walls = json::array();
  for (int r = 0; r < side; ++r) {
    for (int c = 0; c < side; ++c) {
      if (!open[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]) {
        walls.push_back(json::array({r, c}));
      }
    }
  }
  json payload;
  payload["rows"] = side;
  payload["cols"] = side;
  payload["walls"] = walls;
  payload["start"] = json::array({0, 0});
  const int goal = side % 2 == 1 ? side - 1 : side - 2;
  payload["goal"] = json::array({goal, goal});
  return payload;
}

json gen_logic_grid(Rng& rng) {
  for (;;) {
    const int k = static_cast<int>(rng.next_int(4, 6));
    std::vector<std::vector<int>> pos(3, std::vector<int>(static_cast<std::size_t>(k)));
    for (auto& perm : pos) {
      std::iota(perm.begin(), perm.end(), 0);
      rng.shuffle(perm);
    }
    // Add random true clues until the solution is unique.
    std::vector<LogicClue> clues;
    json clues_json = json::array();
    bool unique = false;
    for (int round = 0; round < 40 && !unique; ++round) {
      LogicClue c;
      const int pick = static_cast<int>(rng.next_below(4));
      c.attr_a = static_cast<int>(rng.next_below(3));
      c.val_a = static_cast<int>(rng.next_below(static_cast<u64>(k)));
      const int pa = pos[static_cast<std::size_t>(c.attr_a)][static_cast<std::size_t>(c.val_a)];
      if (pick == 0) {
        c.kind = "at";
        c.attr_b = pa;
      } else if (pick == 1) {
        c.kind = "not_at";
        c.attr_b = static_cast<int>(rng.next_below(static_cast<u64>(k)));
        if (c.attr_b == pa) continue;
      } else if (pick == 2) {
        c.kind = "same";
        c.attr_b = static_cast<int>(rng.next_below(3));
        if (c.attr_b == c.attr_a) continue;
        c.val_b = -1;
        for (int v = 0; v < k; ++v) {
          if (pos[static_cast<std::size_t>(c.attr_b)][static_cast<std::size_t>(v)] == pa) c.val_b = v;
        }
      } else {
        c.kind = "left_of";
        if (pa + 1 >= k) continue;
        c.attr_b = static_cast<int>(rng.next_below(3));
        c.val_b = -1;
        for (int v = 0; v < k; ++v) {
          if (pos[static_cast<std::size_t>(c.attr_b)][static_cast<std::size_t>(v)] == pa + 1) c.val_b = v;
        }
      }
      clues.push_back(c);
      if (c.kind == "at" || c.kind == "not_at") {
        clues_json.push_back(json::array({c.kind, c.attr_a, c.val_a, c.attr_b}));
      } else {
        clues_json.push_back(json::array({c.kind, c.attr_a, c.val_a, c.attr_b, c.val_b}));
      }
      if (clues.size() >= 3 && logic_count_solutions(clues, k, nullptr) == 1) {
        unique = true;
      }
    }
    if (!unique) continue;
    json payload;
    payload["k"] = k;
    payload["clues"] = clues_json;
    return payload;
  }
}

json gen_sudoku(Rng& rng) {
  // Base pattern grid, then seeded relabeling and band/stack shuffles.
  std::array<int, 81> grid{};
  for (int r = 0; r < 9; ++r) {
    for (int c = 0; c < 9; ++c) {
      grid[static_cast<std::size_t>(r * 9 + c)] = (r * 3 + r / 3 + c) % 9 + 1;
    }
  }
  std::vector<int> relabel(9);
  std::iota(relabel.begin(), relabel.end(), 1);
  rng.shuffle(relabel);
  for (auto& v : grid) v = relabel[static_cast<std::size_t>(v - 1)];
  // Shuffle rows within bands and columns within stacks.
  std::array<int, 81> shuffled{};
  std::vector<int> row_map(9), col_map(9);
  for (int band = 0; band < 3; ++band) {
    std::vector<int> rows = {0, 1, 2};
    rng.shuffle(rows);
    for (int i = 0; i < 3; ++i) row_map[static_cast<std::size_t>(band * 3 + i)] = band * 3 + rows[static_cast<std::size_t>(i)];
    std::vector<int> cols = {0, 1, 2};
    rng.shuffle(cols);
    for (int i = 0; i < 3; ++i) col_map[static_cast<std::size_t>(band * 3 + i)] = band * 3 + cols[static_cast<std::size_t>(i)];
  }
  for (int r = 0; r < 9; ++r) {
    for (int c = 0; c < 9; ++c) {
      shuffled[static_cast<std::size_t>(r * 9 + c)] =
          grid[static_cast<std::size_t>(row_map[static_cast<std::size_t>(r)] * 9 +
                                        col_map[static_cast<std::size_t>(c)])];
    }
  }
  // Remove cells while the solution stays unique and givens >= target.
  const int target_givens = static_cast<int>(rng.next_int(24, 35));
  std::vector<int> order(81);
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);
  int givens = 81;
  for (int idx : order) {
    if (givens <= target_givens) break;
    const int saved = shuffled[static_cast<std::size_t>(idx)];
    shuffled[static_cast<std::size_t>(idx)] = 0;
    SudokuBoard probe;
    probe.cells = shuffled;
    if (sudoku_count(probe, 2) != 1) {
      shuffled[static_cast<std::size_t>(idx)] = saved;
    } else {
      --givens;
    }
  }
  std::string s(81, '0');
  for (int i = 0; i < 81; ++i) {
    s[static_cast<std::size_t>(i)] = static_cast<char>('0' + shuffled[static_cast<std::size_t>(i)]);
  }
  json payload;
  payload["givens"] = s;
  return payload;
}

json gen_game24(Rng& rng) {
  // Build a solvable instance from a random expression over the numbers.
  for (;;) {
    const int n = static_cast<int>(rng.next_int(4, 7));
    std::vector<i64> numbers;
    for (int i = 0; i < n; ++i) numbers.push_back(rng.next_int(1, 13));
    std::vector<Frac> vals;
    for (i64 v : numbers) vals.push_back(Frac::of(v));
    bool degenerate = false;
    while (vals.size() > 1) {
      const auto i = rng.next_below(vals.size());
      auto a = vals[i];
      vals.erase(vals.begin() + static_cast<long>(i));
      const auto j = rng.next_below(vals.size());
      auto b = vals[j];
      vals.erase(vals.begin() + static_cast<long>(j));
      Frac r;
      switch (rng.next_below(4)) {
        case 0: r = Frac::of(a.num * b.den + b.num * a.den, a.den * b.den); break;
        case 1: r = Frac::of(a.num * b.den - b.num * a.den, a.den * b.den); break;
        case 2: r = Frac::of(a.num * b.num, a.den * b.den); break;
        default:
          if (b.num == 0) {
            degenerate = true;
            r = a;
          } else {
            r = Frac::of(a.num * b.den, a.den * b.num);
          }
      }
      if (std::abs(r.num) > 100000 || r.den > 100000) degenerate = true;
      vals.push_back(r);
      if (degenerate) break;
    }
    if (degenerate || !(vals[0] == Frac::of(24))) continue;
    json payload;
    payload["numbers"] = to_json_array(numbers);
    payload["target"] = 24;
    return payload;
  }
}

}  // namespace

int nqueens_next_step_impl(const std::vector<int>& queen_columns) {
  const int n = static_cast<int>(queen_columns.size()) + 1;
  std::vector<int> valid;
  for (int c = 1; c <= n; ++c) {
    bool ok = true;
    for (int i = 1; i < n && ok; ++i) {
      const int ci = queen_columns[static_cast<std::size_t>(i - 1)];
      if (c == ci || std::abs(n - i) == std::abs(c - ci)) ok = false;
    }
    if (ok) valid.push_back(c);
  }
  if (valid.empty()) throw NoValidColumn();
  if (valid.size() > 1) throw MultipleValidColumns();
  return valid[0];
}

std::vector<std::vector<int>> nqueens_enumerate_impl(int n) {
  std::vector<std::vector<int>> solutions;
  std::vector<int> cols;
  std::function<void(int)> place = [&](int row) {
    if (row == n) {
      solutions.push_back(cols);
      return;
    }
    for (int c = 1; c <= n; ++c) {
      if (queens_valid(cols, row, c)) {
        cols.push_back(c);
        place(row + 1);
        cols.pop_back();
      }
    }
  };
  place(0);
  return solutions;
}

void register_puzzle(std::vector<TaskDriver>& out) {
  int o = static_cast<int>(out.size());
  {
    TaskDriver d;
    d.id = {o++, 6, 1, "hanoi"};
    d.vocab = {"move"};
    d.generate = gen_hanoi;
    d.trivial = [](const json&) { return false; };
    d.run = hanoi_run;
    d.size_param = [](const json& p) { return p.at("n").get<i64>(); };
    d.min_steps = [](const json&) { return 7; };
    d.exact_steps = [](const json& p) {
      return (1ull << static_cast<unsigned>(p.at("n").get<int>())) - 1;
    };
    out.push_back(std::move(d));
  }
  {
    TaskDriver d;
    d.id = {o++, 6, 2, "nqueens"};
    d.vocab = {"check", "valid", "place"};
    d.generate = gen_nqueens;
    d.trivial = [](const json&) { return false; };
    d.run = nqueens_run;
    d.size_param = [](const json& p) { return p.at("n").get<i64>(); };
    d.min_steps = [](const json& p) { return static_cast<u64>(p.at("n").get<i64>()); };
    out.push_back(std::move(d));
  }
  {
    TaskDriver d;
    d.id = {o++, 6, 3, "blind_maze"};
    d.vocab = {"try", "bump", "move", "backtrack", "reach"};
    d.generate = gen_blind_maze;
    d.trivial = [](const json&) { return false; };
    d.run = blind_maze_run;
    d.size_param = [](const json& p) { return p.at("rows").get<i64>(); };
    d.full_snapshot_limit = 50;
    d.min_steps = [](const json& p) { return static_cast<u64>(p.at("rows").get<i64>()); };
    out.push_back(std::move(d));
  }
  {
    TaskDriver d;
    d.id = {o++, 6, 4, "logic_grid"};
    d.vocab = {"eliminate", "assign", "conclude"};
    d.generate = gen_logic_grid;
    d.trivial = [](const json&) { return false; };
    d.run = logic_grid_run;
    d.size_param = [](const json& p) { return p.at("k").get<i64>(); };
    d.min_steps = [](const json& p) { return static_cast<u64>(p.at("k").get<i64>()); };
    out.push_back(std::move(d));
  }
  {
    TaskDriver d;
    d.id = {o++, 6, 5, "sudoku"};
    d.vocab = {"fill", "branch", "undo"};
    d.generate = gen_sudoku;
    d.trivial = [](const json&) { return false; };
    d.run = sudoku_run;
    d.size_param = [](const json&) { return 81; };
    d.min_steps = [](const json& p) {
      const auto& g = p.at("givens").get_ref<const std::string&>();
      return static_cast<u64>(std::count(g.begin(), g.end(), '0'));
    };
    out.push_back(std::move(d));
  }
  {
    TaskDriver d;
    d.id = {o++, 6, 6, "game24"};
    d.vocab = {"try"};
    d.generate = gen_game24;
    d.trivial = [](const json&) { return false; };
    d.run = game24_run;
    d.size_param = [](const json& p) { return static_cast<i64>(p.at("numbers").size()); };
    d.min_steps = [](const json& p) { return p.at("numbers").size(); };
    out.push_back(std::move(d));
  }
}

}  // namespace prime::oracles

namespace prime {

int nqueens_next_step(const std::vector<int>& queen_columns) {
  return oracles::nqueens_next_step_impl(queen_columns);
}

std::vector<std::vector<int>> nqueens_enumerate(int n) {
  return oracles::nqueens_enumerate_impl(n);
}

}  // namespace prime

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "prime/oracles.hpp"
#include "prime/rng.hpp"
#include "prime/taskgen.hpp"

using namespace prime;

TEST_CASE("hanoi n=3 takes exactly 7 moves") {
  json payload;
  payload["n"] = 3;
  const ExecutionTrace trace = puzzle_trace("hanoi", payload);
  CHECK(trace.events.size() == 7);
  const json answer = json::parse(trace.final_state);
  CHECK(answer.at("moves") == 7);
}

TEST_CASE("hanoi trace length is 2^n - 1 and every move is legal, n = 3..20") {
  for (int n = 3; n <= 20; ++n) {
    json payload;
    payload["n"] = n;
    const ExecutionTrace trace = puzzle_trace("hanoi", payload);
    REQUIRE(trace.events.size() == (1ull << n) - 1);
    // Replay the moves; a larger disk must never land on a smaller one.
    std::vector<std::vector<int>> pegs(3);
    for (int d = n; d >= 1; --d) pegs[0].push_back(d);
    for (const auto& ev : trace.events) {
      REQUIRE(ev.kind == "move");
      const auto from = static_cast<std::size_t>(ev.args[1]);
      const auto to = static_cast<std::size_t>(ev.args[2]);
      REQUIRE(!pegs[from].empty());
      const int disk = pegs[from].back();
      REQUIRE(disk == ev.args[0]);
      if (!pegs[to].empty()) REQUIRE(pegs[to].back() > disk);
      pegs[from].pop_back();
      pegs[to].push_back(disk);
    }
    REQUIRE(pegs[2].size() == static_cast<std::size_t>(n));
  }
}

TEST_CASE("nqueens N=4 admits exactly two complete solutions") {
  const auto solutions = nqueens_enumerate(4);
  REQUIRE(solutions.size() == 2);
  CHECK(solutions[0] == std::vector<int>{2, 4, 1, 3});
  CHECK(solutions[1] == std::vector<int>{3, 1, 4, 2});
}

TEST_CASE("nqueens next step: brute-force derived examples") {
  // N=4, rows 1..3 at columns (2,4,1): the unique valid column is 3.
  CHECK(nqueens_next_step({2, 4, 1}) == 3);
  // Mirror solution.
  CHECK(nqueens_next_step({3, 1, 4}) == 2);
}

TEST_CASE("nqueens next step agrees with brute force on generated boards") {
  Rng rng(4004);
  const TaskDriver& driver = TaskRegistry::instance().by_name("nqueens");
  for (int round = 0; round < 200; ++round) {
    const json payload = driver.generate(rng);
    const int n = payload.at("n").get<int>();
    std::vector<int> queens;
    for (const auto& c : payload.at("queens")) queens.push_back(c.get<int>());
    // Brute force over all columns, checking the validity conjunction.
    std::vector<int> valid;
    for (int c = 1; c <= n; ++c) {
      bool ok = true;
      for (int i = 1; i < n && ok; ++i) {
        const int ci = queens[static_cast<std::size_t>(i - 1)];
        if (c == ci || std::abs(n - i) == std::abs(c - ci)) ok = false;
      }
      if (ok) valid.push_back(c);
    }
    REQUIRE(valid.size() == 1);
    REQUIRE(nqueens_next_step(queens) == valid[0]);
    const json answer = json::parse(puzzle_trace("nqueens", payload).final_state);
    REQUIRE(answer.at("column").get<int>() == valid[0]);
  }
}

TEST_CASE("nqueens malformed boards raise the validity signals") {
  // Candidate equal to an existing column is never valid: (1,3) for N=3
  // leaves no valid column at all.
  CHECK_THROWS_AS(nqueens_next_step({1, 3}), NoValidColumn);
  // An empty row-set (N=1) trivially has one valid column, not multiple.
  CHECK(nqueens_next_step({}) == 1);
}

TEST_CASE("blind maze explorer reaches the goal on generated mazes") {
  Rng rng(5005);
  const TaskDriver& driver = TaskRegistry::instance().by_name("blind_maze");
  for (int round = 0; round < 25; ++round) {
    const json payload = driver.generate(rng);
    const ExecutionTrace trace = puzzle_trace("blind_maze", payload);
    const json answer = json::parse(trace.final_state);
    REQUIRE(answer.at("found") == true);
    // Replay the final path from start; it must reach the goal without
    // crossing walls.
    std::set<std::pair<int, int>> walls;
    for (const auto& w : payload.at("walls")) {
      walls.insert({w[0].get<int>(), w[1].get<int>()});
    }
    int r = payload.at("start")[0].get<int>();
    int c = payload.at("start")[1].get<int>();
    for (char step : answer.at("path").get<std::string>()) {
      if (step == 'N') --r;
      if (step == 'S') ++r;
      if (step == 'E') ++c;
      if (step == 'W') --c;
      REQUIRE(walls.count({r, c}) == 0);
    }
    REQUIRE(r == payload.at("goal")[0].get<int>());
    REQUIRE(c == payload.at("goal")[1].get<int>());
  }
}

TEST_CASE("logic grid instances have unique solutions matching the clues") {
  Rng rng(6006);
  const TaskDriver& driver = TaskRegistry::instance().by_name("logic_grid");
  for (int round = 0; round < 25; ++round) {
    const json payload = driver.generate(rng);
    const json answer = json::parse(puzzle_trace("logic_grid", payload).final_state);
    const auto& pos = answer.at("positions");
    const int k = payload.at("k").get<int>();
    // Each attribute assignment is a permutation of positions.
    for (int attr = 0; attr < 3; ++attr) {
      std::set<int> seen;
      for (int val = 0; val < k; ++val) {
        seen.insert(pos[static_cast<std::size_t>(attr)][static_cast<std::size_t>(val)].get<int>());
      }
      REQUIRE(static_cast<int>(seen.size()) == k);
    }
    // Every clue holds in the reported solution.
    for (const auto& clue : payload.at("clues")) {
      const std::string kind = clue[0].get<std::string>();
      const int pa = pos[clue[1].get<std::size_t>()][clue[2].get<std::size_t>()].get<int>();
      if (kind == "at") REQUIRE(pa == clue[3].get<int>());
      if (kind == "not_at") REQUIRE(pa != clue[3].get<int>());
      if (kind == "same") {
        REQUIRE(pa == pos[clue[3].get<std::size_t>()][clue[4].get<std::size_t>()].get<int>());
      }
      if (kind == "left_of") {
        REQUIRE(pa + 1 == pos[clue[3].get<std::size_t>()][clue[4].get<std::size_t>()].get<int>());
      }
    }
  }
}

TEST_CASE("sudoku fills satisfy row/column/box uniqueness and the givens") {
  Rng rng(7007);
  const TaskDriver& driver = TaskRegistry::instance().by_name("sudoku");
  for (int round = 0; round < 10; ++round) {
    const json payload = driver.generate(rng);
    const std::string givens = payload.at("givens").get<std::string>();
    const json answer = json::parse(puzzle_trace("sudoku", payload).final_state);
    const std::string grid = answer.at("grid").get<std::string>();
    REQUIRE(grid.size() == 81);
    for (int i = 0; i < 81; ++i) {
      if (givens[static_cast<std::size_t>(i)] != '0') {
        REQUIRE(grid[static_cast<std::size_t>(i)] == givens[static_cast<std::size_t>(i)]);
      }
      REQUIRE(grid[static_cast<std::size_t>(i)] >= '1');
      REQUIRE(grid[static_cast<std::size_t>(i)] <= '9');
    }
    auto group_ok = [&](std::vector<int> cells) {
      std::set<char> seen;
      for (int idx : cells) seen.insert(grid[static_cast<std::size_t>(idx)]);
      return seen.size() == 9;
    };
    for (int r = 0; r < 9; ++r) {
      std::vector<int> row, col;
      for (int i = 0; i < 9; ++i) {
        row.push_back(r * 9 + i);
        col.push_back(i * 9 + r);
      }
      REQUIRE(group_ok(row));
      REQUIRE(group_ok(col));
    }
    for (int br = 0; br < 3; ++br) {
      for (int bc = 0; bc < 3; ++bc) {
        std::vector<int> box;
        for (int i = 0; i < 3; ++i) {
          for (int j = 0; j < 3; ++j) box.push_back((br * 3 + i) * 9 + bc * 3 + j);
        }
        REQUIRE(group_ok(box));
      }
    }
  }
}

TEST_CASE("game24 finds an expression that evaluates to the target") {
  json payload;
  payload["numbers"] = json::array({4, 6, 8, 8});
  payload["target"] = 24;
  const json answer = json::parse(puzzle_trace("game24", payload).final_state);
  REQUIRE(answer.at("solvable") == true);
  // (8/8)*4*6... whatever form: check the reported expression evaluates to
  // 24 by a tiny recursive descent evaluator over (+-*/) and parentheses.
  const std::string expr = answer.at("expression").get<std::string>();
  struct Parser {
    const std::string& s;
    std::size_t pos = 0;
    double parse_expr() {
      double v = parse_atom();
      while (pos < s.size() && (s[pos] == '+' || s[pos] == '-' || s[pos] == '*' ||
                                s[pos] == '/')) {
        const char op = s[pos++];
        const double rhs = parse_atom();
        if (op == '+') v += rhs;
        if (op == '-') v -= rhs;
        if (op == '*') v *= rhs;
        if (op == '/') v /= rhs;
      }
      return v;
    }
    double parse_atom() {
      if (s[pos] == '(') {
        ++pos;
        const double v = parse_expr();
        ++pos;  // ')'
        return v;
      }
      std::size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      return std::stod(s.substr(start, pos - start));
    }
  };
  Parser parser{expr};
  CHECK(parser.parse_expr() == doctest::Approx(24.0));
}

TEST_CASE("generated game24 instances are always solvable") {
  Rng rng(8008);
  const TaskDriver& driver = TaskRegistry::instance().by_name("game24");
  for (int round = 0; round < 10; ++round) {
    const json payload = driver.generate(rng);
    const json answer = json::parse(puzzle_trace("game24", payload).final_state);
    REQUIRE(answer.at("solvable") == true);
  }
}

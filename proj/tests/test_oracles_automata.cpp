#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "prime/oracles.hpp"
#include "prime/rng.hpp"
#include "prime/taskgen.hpp"

using namespace prime;

TEST_CASE("turing machine accepts 0011 at step 15 with final tape XXYY") {
  json payload;
  payload["machine"] = "zeros_ones";
  payload["input"] = "0011";
  payload["budget"] = 1000;
  const ExecutionTrace trace = automaton_trace("turing_machine", payload);
  const json answer = json::parse(trace.final_state);
  CHECK(answer.at("accept") == true);
  CHECK(answer.at("steps") == 15);
  CHECK(answer.at("tape") == "XXYY");
}

TEST_CASE("turing machine rejects 011 (counts differ)") {
  json payload;
  payload["machine"] = "zeros_ones";
  payload["input"] = "011";
  payload["budget"] = 1000;
  const json answer = json::parse(automaton_trace("turing_machine", payload).final_state);
  CHECK(answer.at("accept") == false);
  CHECK(answer.at("halted") == true);
}

TEST_CASE("turing machine verdict matches the language over small inputs") {
  // Exhaustive strings over {0,1} up to length 8.
  for (int len = 1; len <= 8; ++len) {
    for (int bits = 0; bits < (1 << len); ++bits) {
      std::string input;
      for (int i = 0; i < len; ++i) input.push_back((bits >> i) & 1 ? '1' : '0');
      json payload;
      payload["machine"] = "zeros_ones";
      payload["input"] = input;
      payload["budget"] = 10000;
      const json answer =
          json::parse(automaton_trace("turing_machine", payload).final_state);
      // Language oracle: 0^n 1^n with n >= 1.
      bool in_language = len % 2 == 0;
      if (in_language) {
        for (int i = 0; i < len / 2 && in_language; ++i) {
          if (input[static_cast<std::size_t>(i)] != '0') in_language = false;
        }
        for (int i = len / 2; i < len && in_language; ++i) {
          if (input[static_cast<std::size_t>(i)] != '1') in_language = false;
        }
      }
      REQUIRE(answer.at("halted") == true);
      REQUIRE(answer.at("accept").get<bool>() == in_language);
    }
  }
}

TEST_CASE("turing machine reports non-halting runs within budget") {
  json payload;
  payload["machine"] = "zeros_ones";
  payload["input"] = "000000001";
  payload["budget"] = 5;  // far below the needed steps
  const json answer = json::parse(automaton_trace("turing_machine", payload).final_state);
  CHECK(answer.at("halted") == false);
  CHECK(answer.at("steps") == 5);
}

TEST_CASE("pda accepts abba with the stack returning to Z0") {
  json payload;
  payload["machine"] = "wwr";
  payload["input"] = "abba";
  const ExecutionTrace trace = automaton_trace("pda", payload);
  const json answer = json::parse(trace.final_state);
  CHECK(answer.at("accept") == true);
  // ID sequence: init, push a, push b, guess middle, pop b, pop a, accept.
  REQUIRE(trace.events.size() == 7);
  CHECK(trace.events[1].kind == "push");
  CHECK(trace.events[3].kind == "guess_middle");
  CHECK(trace.events[6].kind == "accept");
  CHECK(trace.events[6].note == "stack=Z");
}

TEST_CASE("pda templates agree with the language definitions") {
  Rng rng(91);
  for (int round = 0; round < 300; ++round) {
    const int len = static_cast<int>(rng.next_int(1, 12));
    std::string s;
    for (int i = 0; i < len; ++i) s.push_back(rng.next_below(2) ? 'b' : 'a');
    json payload;
    payload["machine"] = "wwr";
    payload["input"] = s;
    const json answer = json::parse(automaton_trace("pda", payload).final_state);
    const bool palindrome =
        len % 2 == 0 &&
        std::equal(s.begin(), s.begin() + len / 2, s.rbegin());
    REQUIRE(answer.at("accept").get<bool>() == palindrome);
  }
}

TEST_CASE("dfa trace is the exact state sequence of the transition function") {
  json payload;
  payload["states"] = 3;
  // delta[state] = [on '0', on '1']; accepts strings with odd # of 1s
  payload["delta"] = json::array({json::array({0, 1}), json::array({1, 0}),
                                  json::array({2, 2})});
  payload["start"] = 0;
  payload["accept"] = json::array({1});
  payload["input"] = "10110";
  const ExecutionTrace trace = automaton_trace("dfa", payload);
  const json answer = json::parse(trace.final_state);
  CHECK(answer.at("accept") == true);
  CHECK(answer.at("final_state") == 1);
  REQUIRE(trace.events.size() == 5);
  std::vector<std::int64_t> states;
  for (const auto& ev : trace.events) states.push_back(ev.args[2]);
  CHECK(states == std::vector<std::int64_t>{1, 1, 0, 1, 1});
}

TEST_CASE("nfa subset simulation matches a brute-force path search") {
  Rng rng(92);
  for (int round = 0; round < 100; ++round) {
    const int states = static_cast<int>(rng.next_int(3, 6));
    json delta = json::array();
    for (int e = 0; e < states * 2; ++e) {
      delta.push_back(json::array(
          {static_cast<int>(rng.next_below(static_cast<std::uint64_t>(states))),
           static_cast<int>(rng.next_below(3)) - 1,
           static_cast<int>(rng.next_below(static_cast<std::uint64_t>(states)))}));
    }
    const int len = static_cast<int>(rng.next_int(1, 6));
    std::string input;
    for (int i = 0; i < len; ++i) input.push_back(rng.next_below(2) ? '1' : '0');
    json payload;
    payload["states"] = states;
    payload["delta"] = delta;
    payload["start"] = 0;
    payload["accept"] = json::array({states - 1});
    payload["input"] = input;
    const json answer = json::parse(automaton_trace("nfa", payload).final_state);

    // Brute force: BFS over (state, position) with epsilon edges.
    std::set<std::pair<int, int>> seen;
    std::vector<std::pair<int, int>> work = {{0, 0}};
    bool accept = false;
    while (!work.empty()) {
      const auto [q, pos] = work.back();
      work.pop_back();
      if (!seen.insert({q, pos}).second) continue;
      if (pos == len && q == states - 1) accept = true;
      for (const auto& t : delta) {
        if (t[0].get<int>() != q) continue;
        const int sym = t[1].get<int>();
        if (sym < 0) {
          work.push_back({t[2].get<int>(), pos});
        } else if (pos < len && input[static_cast<std::size_t>(pos)] - '0' == sym) {
          work.push_back({t[2].get<int>(), pos + 1});
        }
      }
    }
    REQUIRE(answer.at("accept").get<bool>() == accept);
  }
}

TEST_CASE("register machine templates halt with the expected register sums") {
  Rng rng(93);
  const TaskDriver& driver = TaskRegistry::instance().by_name("register_machine");
  for (int round = 0; round < 50; ++round) {
    const json payload = driver.generate(rng);
    const json answer =
        json::parse(automaton_trace("register_machine", payload).final_state);
    REQUIRE(answer.at("halted") == true);
    // The templates move counts around; total mass in r0+r1 is conserved
    // relative to the initial r0 value.
    const std::int64_t initial = payload.at("regs")[0].get<std::int64_t>();
    const auto& regs = answer.at("regs");
    REQUIRE(regs[0].get<std::int64_t>() + regs[1].get<std::int64_t>() == initial);
  }
}

TEST_CASE("petri net firings conserve tokens per rule and stop on deadlock") {
  Rng rng(94);
  const TaskDriver& driver = TaskRegistry::instance().by_name("petri_net");
  for (int round = 0; round < 50; ++round) {
    const json payload = driver.generate(rng);
    const ExecutionTrace trace = automaton_trace("petri_net", payload);
    // Replay the firing sequence: markings must stay non-negative and
    // follow the in/out arc arithmetic exactly.
    std::vector<std::int64_t> marking;
    for (const auto& m : payload.at("marking")) marking.push_back(m.get<std::int64_t>());
    const auto& transitions = payload.at("transitions");
    for (const auto& ev : trace.events) {
      if (ev.kind != "fire") continue;
      const auto& t = transitions[static_cast<std::size_t>(ev.args[0])];
      for (const auto& arc : t.at("in")) {
        marking[arc[0].get<std::size_t>()] -= arc[1].get<std::int64_t>();
        REQUIRE(marking[arc[0].get<std::size_t>()] >= 0);
      }
      for (const auto& arc : t.at("out")) {
        marking[arc[0].get<std::size_t>()] += arc[1].get<std::int64_t>();
      }
    }
    const json answer = json::parse(trace.final_state);
    json final_marking = json::array();
    for (auto m : marking) final_marking.push_back(m);
    REQUIRE(answer.at("marking") == final_marking);
  }
}

TEST_CASE("cellular automaton rule 90 is additive (xor of neighbours)") {
  json payload;
  payload["rule"] = 90;
  payload["cells"] = "0001000";
  payload["generations"] = 3;
  const json answer = json::parse(automaton_trace("cellular_automaton", payload).final_state);
  // Rule 90: next = left xor right, wrap-around. Hand-computed:
  // 0001000 -> 0010100 -> 0100010 -> 1010101
  CHECK(answer.at("cells") == "1010101");
}

TEST_CASE("markov chain sampling is reproducible from the instance seed") {
  Rng rng(95);
  const TaskDriver& driver = TaskRegistry::instance().by_name("markov_chain");
  const json payload = driver.generate(rng);
  const json a = json::parse(automaton_trace("markov_chain", payload).final_state);
  const json b = json::parse(automaton_trace("markov_chain", payload).final_state);
  CHECK(a == b);
  // Visits sum to steps + 1 (initial state counted).
  std::int64_t total = 0;
  for (const auto& v : a.at("visits")) total += v.get<std::int64_t>();
  CHECK(total == payload.at("steps").get<std::int64_t>() + 1);
}

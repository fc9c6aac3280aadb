#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <regex>

#include "prime/oracles.hpp"
#include "prime/rng.hpp"
#include "prime/taskgen.hpp"

using namespace prime;

TEST_CASE("kmp: pattern aaa over text aaaa") {
  json payload;
  payload["pattern"] = "aaa";
  payload["text"] = "aaaa";
  const json answer = json::parse(string_trace("kmp", payload).final_state);
  CHECK(answer.at("failure") == json::array({0, 1, 2}));
  CHECK(answer.at("matches") == json::array({0, 1}));
}

TEST_CASE("kmp: empty pattern matches at every position by convention") {
  json payload;
  payload["pattern"] = "";
  payload["text"] = "abc";
  const json answer = json::parse(string_trace("kmp", payload).final_state);
  CHECK(answer.at("matches") == json::array({0, 1, 2, 3}));
}

TEST_CASE("kmp matches equal brute-force alignment search") {
  Rng rng(111);
  for (int round = 0; round < 300; ++round) {
    const int n = static_cast<int>(rng.next_int(5, 200));
    const int m = static_cast<int>(rng.next_int(1, 6));
    std::string text(static_cast<std::size_t>(n), 'a');
    for (auto& ch : text) ch = static_cast<char>('a' + rng.next_below(2));
    std::string pattern(static_cast<std::size_t>(m), 'a');
    for (auto& ch : pattern) ch = static_cast<char>('a' + rng.next_below(2));
    json payload;
    payload["pattern"] = pattern;
    payload["text"] = text;
    const json answer = json::parse(string_trace("kmp", payload).final_state);
    // Brute force over all alignments.
    json expected = json::array();
    for (int i = 0; i + m <= n; ++i) {
      if (text.compare(static_cast<std::size_t>(i), static_cast<std::size_t>(m),
                       pattern) == 0) {
        expected.push_back(i);
      }
    }
    REQUIRE(answer.at("matches") == expected);
    // Failure function: longest proper prefix-suffix per position.
    const auto& fail = answer.at("failure");
    for (int i = 0; i < m; ++i) {
      int best = 0;
      for (int len = 1; len <= i; ++len) {
        if (pattern.compare(0, static_cast<std::size_t>(len),
                            pattern, static_cast<std::size_t>(i - len + 1),
                            static_cast<std::size_t>(len)) == 0) {
          best = len;
        }
      }
      REQUIRE(fail[static_cast<std::size_t>(i)].get<int>() == best);
    }
  }
}

TEST_CASE("cfg derivation: S => aSb => aabb for the anbn grammar") {
  json payload;
  payload["grammar"] = "anbn";
  payload["target"] = "aabb";
  payload["max_depth"] = 20;
  const ExecutionTrace trace = string_trace("cfg_derivation", payload);
  const json answer = json::parse(trace.final_state);
  REQUIRE(answer.at("derivable") == true);
  // Rules: 0 = S->aSb, 1 = S->epsilon. Derivation: S => aSb => aaSbb => aabb.
  CHECK(answer.at("rules") == json::array({0, 0, 1}));
  // Sentential form snapshots walk through the leftmost derivation.
  std::vector<std::string> forms;
  for (const auto& ev : trace.events) {
    if (!ev.state.empty()) forms.push_back(ev.state);
  }
  CHECK(forms == std::vector<std::string>{"aSb", "aaSbb", "aabb"});
}

TEST_CASE("cfg reports underivable targets as a normal result") {
  json payload;
  payload["grammar"] = "anbn";
  payload["target"] = "aab";
  payload["max_depth"] = 20;
  const json answer = json::parse(string_trace("cfg_derivation", payload).final_state);
  CHECK(answer.at("derivable") == false);
}

TEST_CASE("cfg derivations replay to the target string on generated instances") {
  Rng rng(222);
  const TaskDriver& driver = TaskRegistry::instance().by_name("cfg_derivation");
  for (int round = 0; round < 100; ++round) {
    const json payload = driver.generate(rng);
    if (payload.at("target").get<std::string>().empty()) continue;
    const json answer = json::parse(string_trace("cfg_derivation", payload).final_state);
    REQUIRE(answer.at("derivable") == true);
  }
}

TEST_CASE("regex nfa agrees with std::regex on random inputs") {
  Rng rng(333);
  const TaskDriver& driver = TaskRegistry::instance().by_name("regex_nfa");
  for (int round = 0; round < 100; ++round) {
    json payload = driver.generate(rng);
    // Short inputs keep std::regex comparisons cheap.
    std::string input;
    const int len = static_cast<int>(rng.next_int(0, 12));
    for (int i = 0; i < len; ++i) input.push_back(rng.next_below(2) ? 'b' : 'a');
    payload["input"] = input;
    const json answer = json::parse(string_trace("regex_nfa", payload).final_state);
    const std::regex re(payload.at("regex").get<std::string>(),
                        std::regex_constants::extended);
    REQUIRE(answer.at("match").get<bool>() ==
            std::regex_match(input, re));
  }
}

TEST_CASE("translation chain applies invertible shifts per language") {
  json payload;
  payload["sentence"] = json::array({"abc", "xyz"});
  payload["shifts"] = json::array({1, 2});
  const ExecutionTrace trace = string_trace("translation_chain", payload);
  const json answer = json::parse(trace.final_state);
  // Shift 1 then 2 = total 3: abc -> def, xyz -> abc... each letter +3 mod 26.
  CHECK(answer.at("sentence") == "def abc");
  CHECK(trace.counters.at("translate") == 4);  // 2 words x 2 languages
}

TEST_CASE("translation chain round-trips under the inverse shifts") {
  Rng rng(444);
  const TaskDriver& driver = TaskRegistry::instance().by_name("translation_chain");
  for (int round = 0; round < 50; ++round) {
    const json payload = driver.generate(rng);
    const json answer = json::parse(string_trace("translation_chain", payload).final_state);
    // Apply the inverse chain to the output and recover the input.
    std::string sentence = answer.at("sentence").get<std::string>();
    int total = 0;
    for (const auto& s : payload.at("shifts")) total += s.get<int>();
    std::string recovered;
    for (char ch : sentence) {
      if (ch == ' ') {
        recovered.push_back(' ');
      } else {
        recovered.push_back(
            static_cast<char>('a' + ((ch - 'a') + 26 * 26 - total) % 26));
      }
    }
    std::string original;
    for (const auto& w : payload.at("sentence")) {
      if (!original.empty()) original.push_back(' ');
      original += w.get<std::string>();
    }
    REQUIRE(recovered == original);
  }
}

TEST_CASE("ascii parse recovers every planted box and point") {
  Rng rng(555);
  const TaskDriver& driver = TaskRegistry::instance().by_name("ascii_parse");
  for (int round = 0; round < 50; ++round) {
    const json payload = driver.generate(rng);
    const json answer = json::parse(string_trace("ascii_parse", payload).final_state);
    // Re-derive ground truth from the grid itself: corners are exactly the
    // '+' cells; stars are points.
    const auto& grid = payload.at("grid");
    int plus_count = 0, star_count = 0;
    for (const auto& row : grid) {
      for (char ch : row.get<std::string>()) {
        if (ch == '+') ++plus_count;
        if (ch == '*') ++star_count;
      }
    }
    REQUIRE(static_cast<int>(answer.at("boxes").size()) * 4 == plus_count);
    REQUIRE(static_cast<int>(answer.at("points").size()) == star_count);
    // Every reported box has '+' at all four corners.
    for (const auto& b : answer.at("boxes")) {
      const auto top = b[0].get<std::size_t>(), left = b[1].get<std::size_t>();
      const auto bottom = b[2].get<std::size_t>(), right = b[3].get<std::size_t>();
      REQUIRE(grid[top].get<std::string>()[left] == '+');
      REQUIRE(grid[top].get<std::string>()[right] == '+');
      REQUIRE(grid[bottom].get<std::string>()[left] == '+');
      REQUIRE(grid[bottom].get<std::string>()[right] == '+');
    }
  }
}

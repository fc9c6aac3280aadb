#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <map>

#include "prime/oracles.hpp"
#include "prime/rng.hpp"
#include "prime/taskgen.hpp"

using namespace prime;

namespace {

bool brute_force_sat(int num_vars, const json& clauses) {
  for (int mask = 0; mask < (1 << num_vars); ++mask) {
    bool all = true;
    for (const auto& clause : clauses) {
      bool sat = false;
      for (const auto& lj : clause) {
        const int lit = lj.get<int>();
        const int var = std::abs(lit) - 1;
        const bool value = (mask >> var) & 1;
        if ((lit > 0) == value) {
          sat = true;
          break;
        }
      }
      if (!sat) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

bool check_assignment(const json& clauses, const json& assignment) {
  for (const auto& clause : clauses) {
    bool sat = false;
    for (const auto& lj : clause) {
      const int lit = lj.get<int>();
      const int value = assignment[static_cast<std::size_t>(std::abs(lit) - 1)].get<int>();
      if ((lit > 0) == (value == 1)) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("dpll golden formula: SAT with x1=T, x2=F, x3=T") {
  json payload;
  payload["num_vars"] = 3;
  payload["clauses"] = json::array({json::array({1, 2}), json::array({-1, 3}),
                                    json::array({-2, -3}), json::array({1, 3})});
  const ExecutionTrace trace = logic_trace("dpll", payload);
  const json answer = json::parse(trace.final_state);
  CHECK(answer.at("sat") == true);
  CHECK(answer.at("assignment") == json::array({1, 0, 1}));
  // Branch on x1=T, then unit-propagate x3=T and x2=F, in that order.
  std::vector<std::string> ops;
  for (const auto& ev : trace.events) ops.push_back(ev.kind);
  CHECK(ops == std::vector<std::string>{"decide", "unit", "unit"});
}

TEST_CASE("dpll: single unit clause propagates immediately") {
  json payload;
  payload["num_vars"] = 1;
  payload["clauses"] = json::array({json::array({1})});
  const ExecutionTrace trace = logic_trace("dpll", payload);
  const json answer = json::parse(trace.final_state);
  CHECK(answer.at("sat") == true);
  CHECK(answer.at("assignment") == json::array({1}));
  CHECK(trace.events.front().kind == "unit");
}

TEST_CASE("dpll: immediate contradiction is UNSAT") {
  json payload;
  payload["num_vars"] = 1;
  payload["clauses"] = json::array({json::array({1}), json::array({-1})});
  const json answer = json::parse(logic_trace("dpll", payload).final_state);
  CHECK(answer.at("sat") == false);
}

TEST_CASE("dpll verdict equals brute force on 500 random formulas") {
  Rng rng(1337);
  for (int round = 0; round < 500; ++round) {
    const int vars = static_cast<int>(rng.next_int(3, 12));
    const int clauses = static_cast<int>(rng.next_int(3, 40));
    json cs = json::array();
    for (int c = 0; c < clauses; ++c) {
      json clause = json::array();
      const int width = static_cast<int>(rng.next_int(1, 3));
      for (int l = 0; l < width; ++l) {
        const int v = static_cast<int>(rng.next_int(1, vars));
        clause.push_back(rng.next_below(2) ? v : -v);
      }
      cs.push_back(clause);
    }
    json payload;
    payload["num_vars"] = vars;
    payload["clauses"] = cs;
    const json answer = json::parse(logic_trace("dpll", payload).final_state);
    const bool expected = brute_force_sat(vars, cs);
    REQUIRE(answer.at("sat").get<bool>() == expected);
    if (expected) {
      REQUIRE(check_assignment(cs, answer.at("assignment")));
    }
  }
}

TEST_CASE("resolution refutes chain instances and witnesses satisfiable ones") {
  Rng rng(2337);
  const TaskDriver& driver = TaskRegistry::instance().by_name("resolution");
  int refuted = 0, witnessed = 0;
  for (int round = 0; round < 100; ++round) {
    const json payload = driver.generate(rng);
    const ExecutionTrace trace = logic_trace("resolution", payload);
    const json answer = json::parse(trace.final_state);
    if (!answer.at("sat").get<bool>()) {
      // The trace must contain resolution steps ending in the empty clause.
      bool saw_empty = false;
      for (const auto& ev : trace.events) {
        if (ev.kind == "empty_clause") saw_empty = true;
      }
      REQUIRE(saw_empty);
      ++refuted;
      // Cross-check with brute force on small instances.
      if (payload.at("num_vars").get<int>() <= 16) {
        REQUIRE(!brute_force_sat(payload.at("num_vars").get<int>(),
                                 payload.at("clauses")));
      }
    } else {
      REQUIRE(check_assignment(payload.at("clauses"), answer.at("assignment")));
      ++witnessed;
    }
  }
  CHECK(refuted > 10);
  CHECK(witnessed > 10);
}

TEST_CASE("unification: f(X, a) with f(b, Y) binds X:=b, Y:=a") {
  json payload;
  payload["t1"] = json{{"f", "f"},
                       {"args", json::array({json{{"var", "X"}}, json{{"const", "a"}}})}};
  payload["t2"] = json{{"f", "f"},
                       {"args", json::array({json{{"const", "b"}}, json{{"var", "Y"}}})}};
  const json answer = json::parse(logic_trace("unification", payload).final_state);
  CHECK(answer.at("unifiable") == true);
  CHECK(answer.at("mgu").at("X") == "b");
  CHECK(answer.at("mgu").at("Y") == "a");
}

TEST_CASE("unification: occurs check rejects X = f(X)") {
  json payload;
  payload["t1"] = json{{"var", "X"}};
  payload["t2"] = json{{"f", "f"}, {"args", json::array({json{{"var", "X"}}})}};
  const ExecutionTrace trace = logic_trace("unification", payload);
  const json answer = json::parse(trace.final_state);
  CHECK(answer.at("unifiable") == false);
  CHECK(trace.events.back().kind == "occurs_check");
}

TEST_CASE("unification mgu substitution makes both terms identical") {
  Rng rng(3437);
  const TaskDriver& driver = TaskRegistry::instance().by_name("unification");
  std::function<std::string(const json&, const json&)> apply =
      [&](const json& term, const json& mgu) -> std::string {
    if (term.contains("var")) {
      const std::string v = term.at("var").get<std::string>();
      if (mgu.contains(v)) return mgu.at(v).get<std::string>();
      return v;
    }
    if (term.contains("const")) return term.at("const").get<std::string>();
    std::string s = term.at("f").get<std::string>() + "(";
    const auto& args = term.at("args");
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (i) s.push_back(',');
      s += apply(args[i], mgu);
    }
    return s + ")";
  };
  int unified = 0;
  for (int round = 0; round < 200; ++round) {
    const json payload = driver.generate(rng);
    const json answer = json::parse(logic_trace("unification", payload).final_state);
    if (!answer.at("unifiable").get<bool>()) continue;
    ++unified;
    // The recorded mgu maps variables to fully substituted term strings, so
    // one application suffices for identity.
    REQUIRE(apply(payload.at("t1"), answer.at("mgu")) ==
            apply(payload.at("t2"), answer.at("mgu")));
  }
  CHECK(unified > 30);
}

TEST_CASE("type inference: identity lambda and simple arithmetic") {
  json id_term;
  id_term["lam"] = "x";
  id_term["body"] = json{{"var", "x"}};
  json payload;
  payload["term"] = id_term;
  json answer = json::parse(logic_trace("type_infer", payload).final_state);
  CHECK(answer.at("type") == "(t0->t0)");

  json plus_term;
  plus_term["plus"] = json::array({json{{"int", 1}}, json{{"int", 2}}});
  payload["term"] = plus_term;
  answer = json::parse(logic_trace("type_infer", payload).final_state);
  CHECK(answer.at("type") == "Int");

  // Ill-typed: 1 + true.
  json bad;
  bad["plus"] = json::array({json{{"int", 1}}, json{{"bool", true}}});
  payload["term"] = bad;
  answer = json::parse(logic_trace("type_infer", payload).final_state);
  CHECK(answer.at("error") == "mismatch");
}

TEST_CASE("type inference: self-application fails the occurs check") {
  json self;
  self["lam"] = "x";
  self["body"] = json{{"app", json::array({json{{"var", "x"}}, json{{"var", "x"}}})}};
  json payload;
  payload["term"] = self;
  const json answer = json::parse(logic_trace("type_infer", payload).final_state);
  CHECK(answer.at("error") == "occurs");
}

TEST_CASE("lambda reduction: church arithmetic normalizes to the right numeral") {
  Rng rng(4437);
  const TaskDriver& driver = TaskRegistry::instance().by_name("lambda");
  // church(n) prints as \.\.(1 (1 ... (1 0)))
  auto church_str = [](int n) {
    std::string body = "0";
    for (int i = 0; i < n; ++i) body = "(1 " + body + ")";
    return "\\.\\." + body;
  };
  for (int round = 0; round < 40; ++round) {
    const json payload = driver.generate(rng);
    const json answer = json::parse(logic_trace("lambda", payload).final_state);
    REQUIRE(answer.at("normalized") == true);
    const std::string nf = answer.at("normal_form").get<std::string>();
    bool matched = false;
    for (int n = 0; n <= 25 && !matched; ++n) {
      matched = nf == church_str(n);
    }
    REQUIRE(matched);
  }
}

TEST_CASE("package resolution orders dependencies before dependents") {
  json payload;
  payload["packages"] = 5;
  payload["deps"] = json::array({json::array({3, 1, 2}), json::array({2, 0})});
  payload["conflicts"] = json::array();
  payload["targets"] = json::array({3});
  const json answer = json::parse(logic_trace("package_sat", payload).final_state);
  REQUIRE(answer.contains("order"));
  const auto& order = answer.at("order");
  std::map<int, int> position;
  for (std::size_t i = 0; i < order.size(); ++i) {
    position[order[i].get<int>()] = static_cast<int>(i);
  }
  REQUIRE(position.count(3) == 1);
  CHECK(position[1] < position[3]);
  CHECK(position[2] < position[3]);
  CHECK(position[0] < position[2]);
}

TEST_CASE("package resolution reports conflicts inside the closure") {
  json payload;
  payload["packages"] = 4;
  payload["deps"] = json::array({json::array({1, 0})});
  payload["conflicts"] = json::array({json::array({0, 2})});
  payload["targets"] = json::array({1, 2});
  const json answer = json::parse(logic_trace("package_sat", payload).final_state);
  CHECK(answer.at("conflict") == json::array({0, 2}));
}

TEST_CASE("package resolution on generated instances is order-consistent") {
  Rng rng(5437);
  const TaskDriver& driver = TaskRegistry::instance().by_name("package_sat");
  for (int round = 0; round < 50; ++round) {
    const json payload = driver.generate(rng);
    const json answer = json::parse(logic_trace("package_sat", payload).final_state);
    if (!answer.contains("order")) continue;
    std::map<int, int> position;
    const auto& order = answer.at("order");
    for (std::size_t i = 0; i < order.size(); ++i) {
      position[order[i].get<int>()] = static_cast<int>(i);
    }
    for (const auto& d : payload.at("deps")) {
      const int p = d[0].get<int>();
      if (position.count(p) == 0) continue;
      for (std::size_t i = 1; i < d.size(); ++i) {
        REQUIRE(position.at(d[i].get<int>()) < position.at(p));
      }
    }
  }
}

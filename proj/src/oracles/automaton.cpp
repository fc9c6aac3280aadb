// Reference executors for the eight automata tasks (category 7).

#include <map>
#include <set>

#include "common.hpp"
#include "prime/rng.hpp"

namespace prime::oracles {
namespace {

// --- DFA -----------------------------------------------------------------------

std::string dfa_run(const json& payload, TraceSink& sink) {
  Emitter em(sink);
  const auto& delta = payload.at("delta");  // delta[state][symbol] -> state
  const std::string& input = payload.at("input").get_ref<const std::string&>();
  std::set<int> accept;
  for (const auto& f : payload.at("accept")) accept.insert(f.get<int>());
  int state = payload.at("start").get<int>();
  for (char ch : input) {
    const int sym = ch - '0';
    const int next = delta[static_cast<std::size_t>(state)][static_cast<std::size_t>(sym)].get<int>();
    em.emit("transition", {state, sym, next});
    state = next;
  }
  json ans;
  ans["accept"] = accept.count(state) > 0;
  ans["final_state"] = state;
  return ans.dump();
}

// --- NFA with epsilon transitions ------------------------------------------------

std::string nfa_run(const json& payload, TraceSink& sink) {
  Emitter em(sink);
  const int n = payload.at("states").get<int>();
  // moves[state][symbol] -> set of states; symbol 2 means epsilon.
  std::vector<std::array<std::vector<int>, 3>> moves(static_cast<std::size_t>(n));
  for (const auto& t : payload.at("delta")) {
    const int from = t[0].get<int>();
    const int sym = t[1].get<int>();  // 0, 1, or -1 for epsilon
    const int to = t[2].get<int>();
    moves[static_cast<std::size_t>(from)][sym < 0 ? 2 : static_cast<std::size_t>(sym)].push_back(to);
  }
  const std::string& input = payload.at("input").get_ref<const std::string&>();
  std::set<int> accept;
  for (const auto& f : payload.at("accept")) accept.insert(f.get<int>());

  auto closure = [&](std::set<int> states) {
    std::vector<int> work(states.begin(), states.end());
    while (!work.empty()) {
      const int s = work.back();
      work.pop_back();
      for (int t : moves[static_cast<std::size_t>(s)][2]) {
        if (states.insert(t).second) work.push_back(t);
      }
    }
    return states;
  };
  auto emit_set = [&](const char* kind, const std::set<int>& states, i64 extra) {
    std::vector<i64> args = {extra};
    for (int s : states) args.push_back(s);
    em.emit_vec(kind, args);
  };

  std::set<int> current = closure({payload.at("start").get<int>()});
  emit_set("closure", current, -1);
  for (std::size_t i = 0; i < input.size(); ++i) {
    const int sym = input[i] - '0';
    std::set<int> next;
    for (int s : current) {
      for (int t : moves[static_cast<std::size_t>(s)][static_cast<std::size_t>(sym)]) next.insert(t);
    }
    current = closure(std::move(next));
    emit_set("step", current, sym);
    if (current.empty()) break;
  }
  bool ok = false;
  for (int s : current) ok = ok || accept.count(s) > 0;
  json ans;
  ans["accept"] = ok;
  ans["final_states"] = std::vector<int>(current.begin(), current.end());
  return ans.dump();
}

// --- PDA (template machines) ------------------------------------------------------

// Instantaneous descriptions for three classic context-free languages. The
// trace is the accepting run when one exists, otherwise the canonical
// rejecting attempt.
std::string pda_run(const json& payload, TraceSink& sink) {
  Emitter em(sink);
  const std::string machine = payload.at("machine").get<std::string>();
  const std::string& input = payload.at("input").get_ref<const std::string&>();
  std::string stack = "Z";  // top at the back
  auto id_state = [&](int q, std::size_t pos) {
    std::string s = "q" + std::to_string(q) + "|";
    s.append(stack.rbegin(), stack.rend());
    s += "|";
    s += input.substr(pos);
    return s;
  };
  bool accept = false;
  if (machine == "wwr") {
    const std::size_t n = input.size();
    const bool palindrome =
        n % 2 == 0 &&
        std::equal(input.begin(), input.begin() + static_cast<long>(n / 2),
                   input.rbegin());
    em.emit("init", {}, id_state(0, 0));
    std::size_t pos = 0;
    for (; pos < n / 2; ++pos) {
      stack.push_back(input[pos]);
      em.emit("push", {input[pos]}, id_state(0, pos + 1));
    }
    em.emit("guess_middle", {}, id_state(1, pos));
    for (; pos < n; ++pos) {
      if (stack.size() <= 1 || stack.back() != input[pos]) break;
      stack.pop_back();
      em.emit("pop", {input[pos]}, id_state(1, pos + 1));
    }
    accept = palindrome && pos == n && stack == "Z";
  } else if (machine == "anbn") {
    std::size_t pos = 0;
    em.emit("init", {}, id_state(0, 0));
    while (pos < input.size() && input[pos] == 'a') {
      stack.push_back('A');
      em.emit("push", {'a'}, id_state(0, pos + 1));
      ++pos;
    }
    while (pos < input.size() && input[pos] == 'b' && stack.back() == 'A') {
      stack.pop_back();
      em.emit("pop", {'b'}, id_state(1, pos + 1));
      ++pos;
    }
    accept = pos == input.size() && stack == "Z" && !input.empty();
  } else {  // "paren": balanced ( )
    std::size_t pos = 0;
    em.emit("init", {}, id_state(0, 0));
    bool stuck = false;
    for (; pos < input.size() && !stuck; ++pos) {
      if (input[pos] == '(') {
        stack.push_back('P');
        em.emit("push", {'('}, id_state(0, pos + 1));
      } else if (stack.back() == 'P') {
        stack.pop_back();
        em.emit("pop", {')'}, id_state(0, pos + 1));
      } else {
        stuck = true;
      }
    }
    accept = !stuck && pos == input.size() && stack == "Z";
  }
  em.emit(accept ? "accept" : "reject", {}, "stack=" + stack);
  json ans;
  ans["accept"] = accept;
  return ans.dump();
}

// --- Turing machine (template machines, moves L/R/S) -------------------------------

struct TmRule {
  char write;
  int move;  // -1 L, 0 S, +1 R
  int next;
};

// Machine for {0^n 1^n}: mark 0 as X, matching 1 as Y, verify, accept.
// States: 0 scan-left, 1 seek-one, 2 wrote-Y, 3 seek-X, 4 verify.
std::map<std::pair<int, char>, TmRule> zeros_ones_rules() {
  return {
      {{0, '0'}, {'X', +1, 1}}, {{0, 'Y'}, {'Y', +1, 4}},
      {{1, '0'}, {'0', +1, 1}}, {{1, 'Y'}, {'Y', +1, 1}}, {{1, '1'}, {'Y', 0, 2}},
      {{2, 'Y'}, {'Y', -1, 3}},
      {{3, '0'}, {'0', -1, 3}}, {{3, 'Y'}, {'Y', -1, 3}}, {{3, 'X'}, {'X', +1, 0}},
      {{4, 'Y'}, {'Y', +1, 4}}, {{4, '_'}, {'_', 0, 100}},
  };
}

// Binary increment: head starts at the rightmost bit; flip trailing 1s.
std::map<std::pair<int, char>, TmRule> increment_rules() {
  return {
      {{0, '1'}, {'0', -1, 0}},
      {{0, '0'}, {'1', 0, 100}},
      {{0, '_'}, {'1', 0, 100}},
  };
}

std::string turing_run(const json& payload, TraceSink& sink) {
  Emitter em(sink);
  const std::string machine = payload.at("machine").get<std::string>();
  const std::string& input = payload.at("input").get_ref<const std::string&>();
  const u64 budget = payload.at("budget").get<u64>();
  auto rules = machine == "zeros_ones" ? zeros_ones_rules() : increment_rules();

  std::string tape = input.empty() ? "_" : input;
  long head = machine == "increment" ? static_cast<long>(tape.size()) - 1 : 0;
  int state = 0;
  constexpr int kAccept = 100;
  u64 steps = 0;
  bool halted = false, accepted = false;

  auto tape_state = [&] {
    return "q" + std::to_string(state) + "@" + std::to_string(head) + ":" + tape;
  };
  while (steps < budget) {
    const char sym = tape[static_cast<std::size_t>(head)];
    const auto it = rules.find({state, sym});
    if (it == rules.end()) {
      halted = true;  // implicit reject
      break;
    }
    const TmRule& r = it->second;
    tape[static_cast<std::size_t>(head)] = r.write;
    head += r.move;
    if (head < 0) {
      tape.insert(tape.begin(), '_');
      head = 0;
    } else if (head >= static_cast<long>(tape.size())) {
      tape.push_back('_');
    }
    const int prev = state;
    state = r.next;
    ++steps;
    em.emit("transition", {prev, sym, state, head});
    em.snapshot_with(tape_state);
    if (state == kAccept) {
      halted = true;
      accepted = true;
      break;
    }
  }
  while (!tape.empty() && tape.back() == '_') tape.pop_back();
  json ans;
  ans["halted"] = halted;  // false: non-halting within budget
  ans["accept"] = accepted;
  ans["steps"] = steps;
  ans["tape"] = tape;
  return ans.dump();
}

// --- Register machine ----------------------------------------------------------------

// Instructions: ["inc", r], ["dec", r], ["jz", r, addr], ["jmp", addr], ["halt"]
std::string register_machine_run(const json& payload, TraceSink& sink) {
  Emitter em(sink);
  const auto& program = payload.at("program");
  std::vector<i64> regs = to_vec(payload.at("regs"));
  const u64 budget = payload.at("budget").get<u64>();
  std::size_t pc = 0;
  u64 steps = 0;
  bool halted = false;
  auto reg_state = [&] { return vec_state(regs); };
  while (steps < budget && pc < program.size()) {
    const auto& instr = program[pc];
    const std::string op = instr[0].get<std::string>();
    ++steps;
    if (op == "inc") {
      const auto r = instr[1].get<std::size_t>();
      regs[r]++;
      em.emit("exec", {static_cast<i64>(pc), 0, static_cast<i64>(r)}, "inc");
      ++pc;
    } else if (op == "dec") {
      const auto r = instr[1].get<std::size_t>();
      if (regs[r] > 0) regs[r]--;
      em.emit("exec", {static_cast<i64>(pc), 1, static_cast<i64>(r)}, "dec");
      ++pc;
    } else if (op == "jz") {
      const auto r = instr[1].get<std::size_t>();
      const auto addr = instr[2].get<std::size_t>();
      const bool taken = regs[r] == 0;
      em.emit("exec", {static_cast<i64>(pc), 2, static_cast<i64>(r), taken ? 1 : 0}, "jz");
      pc = taken ? addr : pc + 1;
    } else if (op == "jmp") {
      const auto addr = instr[1].get<std::size_t>();
      em.emit("exec", {static_cast<i64>(pc), 3, static_cast<i64>(addr)}, "jmp");
      pc = addr;
    } else {
      em.emit("exec", {static_cast<i64>(pc), 4}, "halt");
      halted = true;
      break;
    }
    em.snapshot_with(reg_state);
  }
  json ans;
  ans["halted"] = halted;
  ans["regs"] = to_json_array(regs);
  ans["steps"] = steps;
  return ans.dump();
}

// --- Petri net -------------------------------------------------------------------------

std::string petri_run(const json& payload, TraceSink& sink) {
  Emitter em(sink);
  std::vector<i64> marking = to_vec(payload.at("marking"));
  const auto& transitions = payload.at("transitions");
  const u64 max_firings = payload.at("max_firings").get<u64>();
  u64 fired = 0;
  auto mark_state = [&] { return vec_state(marking); };
  while (fired < max_firings) {
    // Deterministic policy: lowest-index enabled transition fires.
    int enabled = -1;
    for (std::size_t t = 0; t < transitions.size() && enabled < 0; ++t) {
      bool ok = true;
      for (const auto& arc : transitions[t].at("in")) {
        if (marking[arc[0].get<std::size_t>()] < arc[1].get<i64>()) {
          ok = false;
          break;
        }
      }
      if (ok) enabled = static_cast<int>(t);
    }
    if (enabled < 0) {
      em.emit("deadlock", {});
      break;
    }
    for (const auto& arc : transitions[static_cast<std::size_t>(enabled)].at("in")) {
      marking[arc[0].get<std::size_t>()] -= arc[1].get<i64>();
    }
    for (const auto& arc : transitions[static_cast<std::size_t>(enabled)].at("out")) {
      marking[arc[0].get<std::size_t>()] += arc[1].get<i64>();
    }
    ++fired;
    em.emit("fire", {enabled});
    em.snapshot_with(mark_state);
  }
  json ans;
  ans["marking"] = to_json_array(marking);
  ans["fired"] = fired;
  return ans.dump();
}

// --- Elementary cellular automaton -----------------------------------------------------

std::string cellular_run(const json& payload, TraceSink& sink) {
  Emitter em(sink);
  const int rule = payload.at("rule").get<int>();
  std::string cells = payload.at("cells").get<std::string>();
  const int generations = payload.at("generations").get<int>();
  const std::size_t n = cells.size();
  std::string next(n, '0');
  for (int g = 1; g <= generations; ++g) {
    for (std::size_t i = 0; i < n; ++i) {
      const int left = cells[(i + n - 1) % n] - '0';
      const int mid = cells[i] - '0';
      const int right = cells[(i + 1) % n] - '0';
      const int idx = (left << 2) | (mid << 1) | right;
      next[i] = ((rule >> idx) & 1) != 0 ? '1' : '0';
    }
    cells.swap(next);
    em.emit("generation", {g});
    em.snapshot_with([&] { return cells; });
  }
  json ans;
  ans["cells"] = cells;
  return ans.dump();
}

// --- Markov chain (seeded sampling) -----------------------------------------------------

std::string markov_run(const json& payload, TraceSink& sink) {
  Emitter em(sink);
  const auto& weights = payload.at("weights");  // integer weight matrix
  const int steps = payload.at("steps").get<int>();
  int state = payload.at("start").get<int>();
  Rng rng(payload.at("sample_seed").get<u64>());
  std::vector<i64> visits(weights.size(), 0);
  visits[static_cast<std::size_t>(state)]++;
  for (int t = 0; t < steps; ++t) {
    const auto& row = weights[static_cast<std::size_t>(state)];
    i64 total = 0;
    for (const auto& w : row) total += w.get<i64>();
    const i64 draw = static_cast<i64>(rng.next_below(static_cast<u64>(total)));
    i64 acc = 0;
    int next = 0;
    for (std::size_t j = 0; j < row.size(); ++j) {
      acc += row[j].get<i64>();
      if (draw < acc) {
        next = static_cast<int>(j);
        break;
      }
    }
    em.emit("sample", {state, draw, next});
    state = next;
    visits[static_cast<std::size_t>(state)]++;
  }
  json ans;
  ans["final"] = state;
  ans["visits"] = to_json_array(visits);
  return ans.dump();
}

// --- Generators -------------------------------------------------------------------------

json gen_dfa(Rng& rng) {
  const int states = static_cast<int>(rng.next_int(5, 20));
  const std::vector<int> lengths = {100, 500, 2000, 10000};
  const int len = lengths[static_cast<std::size_t>(rng.next_below(lengths.size()))];
  json delta = json::array();
  for (int s = 0; s < states; ++s) {
    delta.push_back(json::array({static_cast<int>(rng.next_below(static_cast<u64>(states))),
                                 static_cast<int>(rng.next_below(static_cast<u64>(states)))}));
  }
  json accept = json::array();
  for (int s = 0; s < states; ++s) {
    if (rng.next_below(3) == 0) accept.push_back(s);
  }
  if (accept.empty()) accept.push_back(static_cast<int>(rng.next_below(static_cast<u64>(states))));
  std::string input(static_cast<std::size_t>(len), '0');
  for (auto& ch : input) ch = rng.next_below(2) ? '1' : '0';
  json payload;
  payload["states"] = states;
  payload["delta"] = delta;
  payload["start"] = 0;
  payload["accept"] = accept;
  payload["input"] = input;
  return payload;
}

json gen_nfa(Rng& rng) {
  const int states = static_cast<int>(rng.next_int(10, 30));
  const std::vector<int> lengths = {50, 150, 400, 1000};
  const int len = lengths[static_cast<std::size_t>(rng.next_below(lengths.size()))];
  json delta = json::array();
  const int edges = states * 3;
  for (int e = 0; e < edges; ++e) {
    const int from = static_cast<int>(rng.next_below(static_cast<u64>(states)));
    const int sym = static_cast<int>(rng.next_below(4)) - 1;  // epsilon 25%
    const int to = static_cast<int>(rng.next_below(static_cast<u64>(states)));
    delta.push_back(json::array({from, sym < 0 ? -1 : sym % 2, to}));
  }
  json accept = json::array();
  for (int s = 0; s < states; ++s) {
    if (rng.next_below(4) == 0) accept.push_back(s);
  }
  if (accept.empty()) accept.push_back(states - 1);
  std::string input(static_cast<std::size_t>(len), '0');
  for (auto& ch : input) ch = rng.next_below(2) ? '1' : '0';
  json payload;
  payload["states"] = states;
  payload["delta"] = delta;
  payload["start"] = 0;
  payload["accept"] = accept;
  payload["input"] = input;
  return payload;
}

json gen_pda(Rng& rng) {
  const char* machines[3] = {"wwr", "anbn", "paren"};
  const std::string machine = machines[rng.next_below(3)];
  const int half = static_cast<int>(rng.next_int(10, 250));
  std::string input;
  const bool in_language = rng.next_below(2) == 0;
  if (machine == "wwr") {
    std::string w;
    for (int i = 0; i < half; ++i) w.push_back(rng.next_below(2) ? 'b' : 'a');
    input = w;
    std::string r(w.rbegin(), w.rend());
    if (!in_language) {
      r[static_cast<std::size_t>(rng.next_below(r.size()))] ^= 'a' ^ 'b';
    }
    input += r;
  } else if (machine == "anbn") {
    const int n = half;
    input = std::string(static_cast<std::size_t>(n), 'a') +
            std::string(static_cast<std::size_t>(in_language ? n : n + 1), 'b');
  } else {
    std::string s;
    int depth = 0;
    for (int i = 0; i < 2 * half; ++i) {
      if (depth == 0 || (depth < half && rng.next_below(2) == 0)) {
        s.push_back('(');
        ++depth;
      } else {
        s.push_back(')');
        --depth;
      }
    }
    while (depth-- > 0) s.push_back(')');
    if (!in_language) s.push_back(')');
    input = s;
  }
  json payload;
  payload["machine"] = machine;
  payload["input"] = input;
  return payload;
}

json gen_turing(Rng& rng) {
  json payload;
  if (rng.next_below(2) == 0) {
    payload["machine"] = "zeros_ones";
    const int n = static_cast<int>(rng.next_int(5, 50));
    const bool in_language = rng.next_below(2) == 0;
    const int ones = in_language ? n : n + 1 + static_cast<int>(rng.next_below(3));
    payload["input"] = std::string(static_cast<std::size_t>(n), '0') +
                       std::string(static_cast<std::size_t>(ones), '1');
  } else {
    payload["machine"] = "increment";
    const int bits = static_cast<int>(rng.next_int(10, 100));
    std::string s(static_cast<std::size_t>(bits), '0');
    for (auto& ch : s) ch = rng.next_below(2) ? '1' : '0';
    if (s[0] == '0') s[0] = '1';
    payload["input"] = s;
  }
  payload["budget"] = 200000;
  return payload;
}

json gen_register(Rng& rng) {
  // Template: move r0 to r1 while adding to r2 (halts by construction):
  //   loop: jz r0 -> end; dec r0; inc r1; inc r2; jmp loop; end: halt
  // Registers start small enough to stay within the step budget.
  const int regs = static_cast<int>(rng.next_int(2, 4));
  json program = json::array();
  program.push_back(json::array({"jz", 0, 5}));
  program.push_back(json::array({"dec", 0}));
  program.push_back(json::array({"inc", 1}));
  program.push_back(json::array({"inc", regs - 1}));
  program.push_back(json::array({"jmp", 0}));
  program.push_back(json::array({"halt"}));
  // A second countdown loop doubles the trace variety.
  if (rng.next_below(2) == 0) {
    program[0] = json::array({"jz", 0, 5});
    program[5] = json::array({"jz", 1, 10});
    program.push_back(json::array({"dec", 1}));
    program.push_back(json::array({"inc", 0}));
    program.push_back(json::array({"jmp", 5}));
    program.push_back(json::array({"halt"}));
    program.push_back(json::array({"halt"}));
  }
  json init = json::array();
  init.push_back(rng.next_int(3, 40));
  for (int r = 1; r < regs; ++r) init.push_back(0);
  json payload;
  payload["program"] = program;
  payload["regs"] = init;
  payload["budget"] = 5000;
  return payload;
}

json gen_petri(Rng& rng) {
  const int places = static_cast<int>(rng.next_int(5, 20));
  const int transitions = static_cast<int>(rng.next_int(3, 8));
  json ts = json::array();
  for (int t = 0; t < transitions; ++t) {
    json in = json::array();
    json out = json::array();
    const int ins = static_cast<int>(rng.next_int(1, 2));
    for (int i = 0; i < ins; ++i) {
      in.push_back(json::array({static_cast<int>(rng.next_below(static_cast<u64>(places))), 1}));
    }
    const int outs = static_cast<int>(rng.next_int(1, 2));
    for (int i = 0; i < outs; ++i) {
      out.push_back(json::array({static_cast<int>(rng.next_below(static_cast<u64>(places))), 1}));
    }
    json tr;
    tr["in"] = in;
    tr["out"] = out;
    ts.push_back(tr);
  }
  json marking = json::array();
  for (int p = 0; p < places; ++p) marking.push_back(rng.next_int(0, 5));
  json payload;
  payload["places"] = places;
  payload["transitions"] = ts;
  payload["marking"] = marking;
  payload["max_firings"] = rng.next_int(50, 200);
  return payload;
}

json gen_cellular(Rng& rng) {
  const int interesting_rules[] = {30, 54, 60, 90, 102, 110, 150, 182, 220, 250};
  const int cells = static_cast<int>(rng.next_int(50, 200));
  const int generations = static_cast<int>(rng.next_int(100, 1000));
  std::string init(static_cast<std::size_t>(cells), '0');
  for (auto& ch : init) ch = rng.next_below(2) ? '1' : '0';
  json payload;
  payload["rule"] = interesting_rules[rng.next_below(10)];
  payload["cells"] = init;
  payload["generations"] = generations;
  return payload;
}

json gen_markov(Rng& rng) {
  const int states = static_cast<int>(rng.next_int(5, 10));
  json weights = json::array();
  for (int i = 0; i < states; ++i) {
    json row = json::array();
    for (int j = 0; j < states; ++j) row.push_back(rng.next_int(1, 9));
    weights.push_back(row);
  }
  json payload;
  payload["weights"] = weights;
  payload["start"] = static_cast<int>(rng.next_below(static_cast<u64>(states)));
  payload["steps"] = rng.next_int(100, 1000);
  payload["sample_seed"] = rng.next_u64();
  return payload;
}

TaskDriver make_automaton_driver(int ordinal, int task_index, std::string name,
                                 std::set<std::string> vocab,
                                 std::function<json(Rng&)> gen,
                                 std::function<std::string(const json&, TraceSink&)> run) {
  TaskDriver d;
  d.id = {ordinal, 7, task_index, std::move(name)};
  d.vocab = std::move(vocab);
  d.generate = std::move(gen);
  d.trivial = [](const json&) { return false; };
  d.run = std::move(run);
  d.size_param = [](const json& p) {
    if (p.contains("input")) return static_cast<i64>(p.at("input").get_ref<const std::string&>().size());
    if (p.contains("cells")) return static_cast<i64>(p.at("cells").get_ref<const std::string&>().size());
    if (p.contains("steps")) return p.at("steps").get<i64>();
    if (p.contains("marking")) return static_cast<i64>(p.at("marking").size());
    return static_cast<i64>(p.at("regs").size());
  };
  d.full_snapshot_limit = 50;
  d.min_steps = [](const json&) { return 1; };
  return d;
}

}  // namespace

void register_automaton(std::vector<TaskDriver>& out) {
  int o = static_cast<int>(out.size());
  {
    auto d = make_automaton_driver(o++, 1, "dfa", {"transition"}, gen_dfa, dfa_run);
    d.exact_steps = [](const json& p) {
      return static_cast<u64>(p.at("input").get_ref<const std::string&>().size());
    };
    out.push_back(std::move(d));
  }
  out.push_back(make_automaton_driver(o++, 2, "nfa", {"closure", "step"}, gen_nfa, nfa_run));
  out.push_back(make_automaton_driver(
      o++, 3, "pda", {"init", "push", "pop", "guess_middle", "accept", "reject"},
      gen_pda, pda_run));
  out.push_back(make_automaton_driver(o++, 4, "turing_machine", {"transition"},
                                      gen_turing, turing_run));
  out.push_back(make_automaton_driver(o++, 5, "register_machine", {"exec"},
                                      gen_register, register_machine_run));
  out.push_back(make_automaton_driver(o++, 6, "petri_net", {"fire", "deadlock"},
                                      gen_petri, petri_run));
  {
    auto d = make_automaton_driver(o++, 7, "cellular_automaton", {"generation"},
                                   gen_cellular, cellular_run);
    d.exact_steps = [](const json& p) {
      return static_cast<u64>(p.at("generations").get<int>());
    };
    out.push_back(std::move(d));
  }
  out.push_back(make_automaton_driver(o++, 8, "markov_chain", {"sample"},
                                      gen_markov, markov_run));
}

}  // namespace prime::oracles

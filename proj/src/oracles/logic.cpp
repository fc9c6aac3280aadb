// Reference executors for the six logic tasks (category 10).

#include <functional>
#include <map>
#include <queue>
#include <set>

#include "common.hpp"

namespace prime::oracles {
namespace {

// --- DPLL -----------------------------------------------------------------------
//
// Literals: +v / -v, variables 1-based. Branching picks the lowest
// unassigned variable, true first.

struct DpllState {
  std::vector<json> clauses;          // each a list of literals
  std::vector<int> assignment;        // 0 unknown, +1 true, -1 false
  Emitter& em;

  DpllState(const json& payload, Emitter& e)
      : assignment(payload.at("num_vars").get<std::size_t>() + 1, 0), em(e) {
    for (const auto& c : payload.at("clauses")) clauses.push_back(c);
  }

  int value(i64 lit) const {
    const int v = assignment[static_cast<std::size_t>(std::abs(lit))];
    if (v == 0) return 0;
    return (lit > 0) == (v > 0) ? 1 : -1;
  }

  // Returns 1 satisfied, -1 conflict, 0 undetermined; finds unit literals.
  int scan(std::vector<i64>* units) const {
    bool all_sat = true;
    for (const auto& clause : clauses) {
      bool sat = false;
      int open = 0;
      i64 last_open = 0;
      for (const auto& lj : clause) {
        const i64 lit = lj.get<i64>();
        const int v = value(lit);
        if (v == 1) {
          sat = true;
          break;
        }
        if (v == 0) {
          ++open;
          last_open = lit;
        }
      }
      if (sat) continue;
      if (open == 0) return -1;
      all_sat = false;
      if (open == 1 && units != nullptr) units->push_back(last_open);
    }
    return all_sat ? 1 : 0;
  }

  bool solve() {
    // Unit propagation to fixpoint.
    std::vector<std::pair<std::size_t, int>> trail;
    for (;;) {
      std::vector<i64> units;
      const int status = scan(&units);
      if (status == 1) return true;
      if (status == -1) {
        for (auto& [var, old] : trail) assignment[var] = old;
        return false;
      }
      if (!units.empty()) {
        const i64 lit = units.front();
        const auto var = static_cast<std::size_t>(std::abs(lit));
        trail.push_back({var, assignment[var]});
        assignment[var] = lit > 0 ? 1 : -1;
        em.emit("unit", {static_cast<i64>(var), lit > 0 ? 1 : 0});
        continue;
      }
      // Pure literal elimination.
      std::vector<int> polarity(assignment.size(), 0);  // 1 pos, 2 neg, 3 both
      for (const auto& clause : clauses) {
        bool sat = false;
        for (const auto& lj : clause) {
          if (value(lj.get<i64>()) == 1) {
            sat = true;
            break;
          }
        }
        if (sat) continue;
        for (const auto& lj : clause) {
          const i64 lit = lj.get<i64>();
          if (value(lit) == 0) {
            polarity[static_cast<std::size_t>(std::abs(lit))] |= lit > 0 ? 1 : 2;
          }
        }
      }
      i64 pure = 0;
      for (std::size_t v = 1; v < polarity.size(); ++v) {
        if (assignment[v] == 0 && (polarity[v] == 1 || polarity[v] == 2)) {
          pure = polarity[v] == 1 ? static_cast<i64>(v) : -static_cast<i64>(v);
          break;
        }
      }
      if (pure != 0) {
        const auto var = static_cast<std::size_t>(std::abs(pure));
        trail.push_back({var, assignment[var]});
        assignment[var] = pure > 0 ? 1 : -1;
        em.emit("pure", {static_cast<i64>(var), pure > 0 ? 1 : 0});
        continue;
      }
      break;  // branch
    }
    std::size_t branch_var = 0;
    for (std::size_t v = 1; v < assignment.size(); ++v) {
      if (assignment[v] == 0) {
        branch_var = v;
        break;
      }
    }
    if (branch_var == 0) {
      const bool ok = scan(nullptr) == 1;
      if (!ok) {
        for (auto& [var, old] : trail) assignment[var] = old;
      }
      return ok;
    }
    for (int choice : {1, -1}) {
      em.emit("decide", {static_cast<i64>(branch_var), choice > 0 ? 1 : 0});
      assignment[branch_var] = choice;
      if (solve()) return true;
      assignment[branch_var] = 0;
      em.emit("backtrack", {static_cast<i64>(branch_var)});
    }
    for (auto& [var, old] : trail) assignment[var] = old;
    return false;
  }
};

std::string dpll_run(const json& payload, TraceSink& sink) {
  Emitter em(sink);
  DpllState state(payload, em);
  const bool sat = state.solve();
  json ans;
  ans["sat"] = sat;
  if (sat) {
    // Unconstrained variables default to false for a canonical witness.
    json assign = json::array();
    for (std::size_t v = 1; v < state.assignment.size(); ++v) {
      assign.push_back(state.assignment[v] > 0 ? 1 : 0);
    }
    ans["assignment"] = assign;
  }
  return ans.dump();
}

// --- Resolution refutation ---------------------------------------------------------
//
// SAT instances answer with a DPLL witness; UNSAT instances derive the
// empty clause by unit resolution (generated instances are chain-refutable).

std::string resolution_run(const json& payload, TraceSink& sink) {
  Emitter em(sink);
  std::vector<std::set<i64>> clauses;
  for (const auto& c : payload.at("clauses")) {
    std::set<i64> clause;
    for (const auto& l : c) clause.insert(l.get<i64>());
    clauses.push_back(std::move(clause));
  }
  json ans;

  // Unit resolution saturation with subsumption of resolved units.
  std::vector<std::set<i64>> derived = clauses;
  std::queue<std::size_t> unit_queue;
  for (std::size_t i = 0; i < derived.size(); ++i) {
    if (derived[i].size() == 1) unit_queue.push(i);
  }
  bool refuted = false;
  std::size_t guard = 0;
  while (!unit_queue.empty() && !refuted && guard++ < 100000) {
    const std::size_t ui = unit_queue.front();
    unit_queue.pop();
    const i64 unit = *derived[ui].begin();
    for (std::size_t j = 0; j < derived.size() && !refuted; ++j) {
      if (j == ui || derived[j].count(-unit) == 0) continue;
      std::set<i64> resolvent = derived[j];
      resolvent.erase(-unit);
      em.emit("resolve", {static_cast<i64>(ui), static_cast<i64>(j),
                          static_cast<i64>(resolvent.size())});
      if (resolvent.empty()) {
        em.emit("empty_clause", {});
        refuted = true;
        break;
      }
      bool known = false;
      for (const auto& existing : derived) {
        if (existing == resolvent) {
          known = true;
          break;
        }
      }
      if (!known) {
        derived.push_back(resolvent);
        if (resolvent.size() == 1) unit_queue.push(derived.size() - 1);
      }
    }
  }
  if (refuted) {
    ans["sat"] = false;
    ans["derived_clauses"] = static_cast<i64>(derived.size());
    return ans.dump();
  }
  // Not refuted by unit resolution: decide satisfiability with DPLL and
  // report the witness.
  json dpll_payload;
  dpll_payload["num_vars"] = payload.at("num_vars");
  dpll_payload["clauses"] = payload.at("clauses");
  DpllState state(dpll_payload, em);
  const bool sat = state.solve();
  ans["sat"] = sat;
  if (sat) {
    json assign = json::array();
    for (std::size_t v = 1; v < state.assignment.size(); ++v) {
      assign.push_back(state.assignment[v] > 0 ? 1 : 0);
    }
    ans["assignment"] = assign;
  }
  return ans.dump();
}

// --- First-order unification -----------------------------------------------------------
//
// Terms in JSON: {"var": "X"}, {"const": "a"}, {"f": name, "args": [...]}.

struct UnifyError {};

json substitute(const json& term, const std::map<std::string, json>& subst) {
  if (term.contains("var")) {
    const auto it = subst.find(term.at("var").get<std::string>());
    if (it == subst.end()) return term;
    return substitute(it->second, subst);
  }
  if (term.contains("f")) {
    json out;
    out["f"] = term.at("f");
    json args = json::array();
    for (const auto& a : term.at("args")) args.push_back(substitute(a, subst));
    out["args"] = args;
    return out;
  }
  return term;
}

std::string term_str(const json& term) {
  if (term.contains("var")) return term.at("var").get<std::string>();
  if (term.contains("const")) return term.at("const").get<std::string>();
  std::string s = term.at("f").get<std::string>() + "(";
  const auto& args = term.at("args");
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) s.push_back(',');
    s += term_str(args[i]);
  }
  s.push_back(')');
  return s;
}

bool occurs(const std::string& var, const json& term,
            const std::map<std::string, json>& subst) {
  if (term.contains("var")) {
    const std::string name = term.at("var").get<std::string>();
    if (name == var) return true;
    const auto it = subst.find(name);
    return it != subst.end() && occurs(var, it->second, subst);
  }
  if (term.contains("f")) {
    for (const auto& a : term.at("args")) {
      if (occurs(var, a, subst)) return true;
    }
  }
  return false;
}

bool unify(const json& a, const json& b, std::map<std::string, json>& subst,
           Emitter& em) {
  const json ra = substitute(a, subst);
  const json rb = substitute(b, subst);
  if (ra.contains("var")) {
    const std::string v = ra.at("var").get<std::string>();
    if (rb.contains("var") && rb.at("var").get<std::string>() == v) return true;
    if (occurs(v, rb, subst)) {
      em.emit("occurs_check", {}, v);
      return false;
    }
    subst[v] = rb;
    em.emit("bind", {}, v + ":=" + term_str(rb));
    return true;
  }
  if (rb.contains("var")) return unify(rb, ra, subst, em);
  if (ra.contains("const") || rb.contains("const")) {
    const bool ok = ra.contains("const") && rb.contains("const") &&
                    ra.at("const") == rb.at("const");
    if (!ok) em.emit("clash", {}, term_str(ra) + "!=" + term_str(rb));
    return ok;
  }
  if (ra.at("f") != rb.at("f") || ra.at("args").size() != rb.at("args").size()) {
    em.emit("clash", {}, term_str(ra) + "!=" + term_str(rb));
    return false;
  }
  em.emit("decompose", {static_cast<i64>(ra.at("args").size())},
          ra.at("f").get<std::string>());
  for (std::size_t i = 0; i < ra.at("args").size(); ++i) {
    if (!unify(ra.at("args")[i], rb.at("args")[i], subst, em)) return false;
  }
  return true;
}

std::string unification_run(const json& payload, TraceSink& sink) {
  Emitter em(sink);
  std::map<std::string, json> subst;
  const bool ok = unify(payload.at("t1"), payload.at("t2"), subst, em);
  json ans;
  ans["unifiable"] = ok;
  if (ok) {
    json mgu;
    for (const auto& [v, t] : subst) mgu[v] = term_str(substitute(t, subst));
    ans["mgu"] = mgu;
  }
  return ans.dump();
}

// --- Hindley-Milner type inference (mini-lambda) ------------------------------------------
//
// Terms: {"var": name}, {"int": k}, {"bool": b}, {"lam": name, "body": t},
// {"app": [f, x]}, {"plus": [a, b]}, {"if": [c, t, e]}, {"let": name, "val": v, "body": b}.

struct TypeError {
  std::string reason;
};

struct TypeInfer {
  Emitter& em;
  int fresh_counter = 0;
  std::map<int, json> bindings;  // type-var id -> type

  explicit TypeInfer(Emitter& e) : em(e) {}

  json fresh() {
    json t;
    t["tvar"] = fresh_counter;
    em.emit("fresh", {fresh_counter});
    ++fresh_counter;
    return t;
  }

  json resolve(const json& t) {
    if (t.contains("tvar")) {
      const auto it = bindings.find(t.at("tvar").get<int>());
      if (it != bindings.end()) return resolve(it->second);
    }
    return t;
  }

  bool occurs_tv(int id, const json& t) {
    const json r = resolve(t);
    if (r.contains("tvar")) return r.at("tvar").get<int>() == id;
    if (r.contains("arrow")) {
      return occurs_tv(id, r.at("arrow")[0]) || occurs_tv(id, r.at("arrow")[1]);
    }
    return false;
  }

  void unify_types(const json& a, const json& b) {
    const json ra = resolve(a);
    const json rb = resolve(b);
    em.emit("constraint", {}, type_str(ra) + "=" + type_str(rb));
    if (ra.contains("tvar")) {
      const int id = ra.at("tvar").get<int>();
      if (rb.contains("tvar") && rb.at("tvar").get<int>() == id) return;
      if (occurs_tv(id, rb)) throw TypeError{"occurs"};
      bindings[id] = rb;
      return;
    }
    if (rb.contains("tvar")) {
      unify_types(rb, ra);
      return;
    }
    if (ra.contains("base") && rb.contains("base")) {
      if (ra.at("base") != rb.at("base")) throw TypeError{"mismatch"};
      return;
    }
    if (ra.contains("arrow") && rb.contains("arrow")) {
      unify_types(ra.at("arrow")[0], rb.at("arrow")[0]);
      unify_types(ra.at("arrow")[1], rb.at("arrow")[1]);
      return;
    }
    throw TypeError{"mismatch"};
  }

  std::string type_str(const json& t) {
    const json r = resolve(t);
    if (r.contains("tvar")) return "t" + std::to_string(r.at("tvar").get<int>());
    if (r.contains("base")) return r.at("base").get<std::string>();
    return "(" + type_str(r.at("arrow")[0]) + "->" + type_str(r.at("arrow")[1]) + ")";
  }

  json infer(const json& term, std::map<std::string, json>& env) {
    if (term.contains("int")) return json{{"base", "Int"}};
    if (term.contains("bool")) return json{{"base", "Bool"}};
    if (term.contains("var")) {
      const auto it = env.find(term.at("var").get<std::string>());
      if (it == env.end()) throw TypeError{"unbound"};
      return it->second;
    }
    if (term.contains("lam")) {
      json arg = fresh();
      auto saved = env;
      env[term.at("lam").get<std::string>()] = arg;
      const json body = infer(term.at("body"), env);
      env = saved;
      json t;
      t["arrow"] = json::array({arg, body});
      return t;
    }
    if (term.contains("app")) {
      const json f = infer(term.at("app")[0], env);
      const json x = infer(term.at("app")[1], env);
      json result = fresh();
      json want;
      want["arrow"] = json::array({x, result});
      unify_types(f, want);
      return result;
    }
    if (term.contains("plus")) {
      unify_types(infer(term.at("plus")[0], env), json{{"base", "Int"}});
      unify_types(infer(term.at("plus")[1], env), json{{"base", "Int"}});
      return json{{"base", "Int"}};
    }
    if (term.contains("if")) {
      unify_types(infer(term.at("if")[0], env), json{{"base", "Bool"}});
      const json t1 = infer(term.at("if")[1], env);
      const json t2 = infer(term.at("if")[2], env);
      unify_types(t1, t2);
      return t1;
    }
    // let (monomorphic: value type bound directly)
    const json val = infer(term.at("val"), env);
    auto saved = env;
    env[term.at("let").get<std::string>()] = val;
    const json body = infer(term.at("body"), env);
    env = saved;
    return body;
  }

  // Canonical renaming of residual type variables.
  std::string canonical(const json& t) {
    std::map<int, int> rename;
    std::function<std::string(const json&)> rec = [&](const json& ty) -> std::string {
      const json r = resolve(ty);
      if (r.contains("tvar")) {
        const int id = r.at("tvar").get<int>();
        if (rename.find(id) == rename.end()) {
          const int next = static_cast<int>(rename.size());
          rename[id] = next;
        }
        return "t" + std::to_string(rename[id]);
      }
      if (r.contains("base")) return r.at("base").get<std::string>();
      return "(" + rec(r.at("arrow")[0]) + "->" + rec(r.at("arrow")[1]) + ")";
    };
    return rec(t);
  }
};

std::string type_infer_run(const json& payload, TraceSink& sink) {
  Emitter em(sink);
  TypeInfer ti(em);
  std::map<std::string, json> env;
  json ans;
  try {
    const json t = ti.infer(payload.at("term"), env);
    ans["type"] = ti.canonical(t);
  } catch (const TypeError& e) {
    em.emit("type_error", {}, e.reason);
    ans["error"] = e.reason;
  }
  return ans.dump();
}

// --- Normal-order lambda reduction (de Bruijn indices) --------------------------------------
//
// Terms: {"idx": k}, {"lam": body}, {"app": [f, x]}.

json shift(const json& t, int by, int cutoff) {
  if (t.contains("idx")) {
    const int k = t.at("idx").get<int>();
    return json{{"idx", k >= cutoff ? k + by : k}};
  }
  if (t.contains("lam")) return json{{"lam", shift(t.at("lam"), by, cutoff + 1)}};
  return json{{"app", json::array({shift(t.at("app")[0], by, cutoff),
                                   shift(t.at("app")[1], by, cutoff)})}};
}

json subst_idx(const json& t, int idx, const json& value) {
  if (t.contains("idx")) {
    const int k = t.at("idx").get<int>();
    if (k == idx) return value;
    return json{{"idx", k > idx ? k - 1 : k}};
  }
  if (t.contains("lam")) {
    return json{{"lam", subst_idx(t.at("lam"), idx + 1, shift(value, 1, 0))}};
  }
  return json{{"app", json::array({subst_idx(t.at("app")[0], idx, value),
                                   subst_idx(t.at("app")[1], idx, value)})}};
}

// Leftmost-outermost redex reduction; returns true if one step happened.
bool reduce_step(json& t) {
  if (t.contains("app")) {
    json& f = t.at("app")[0];
    if (f.contains("lam")) {
      t = subst_idx(f.at("lam"), 0, t.at("app")[1]);
      return true;
    }
    if (reduce_step(f)) return true;
    return reduce_step(t.at("app")[1]);
  }
  if (t.contains("lam")) return reduce_step(t.at("lam"));
  return false;
}

std::string lambda_str(const json& t) {
  if (t.contains("idx")) return std::to_string(t.at("idx").get<int>());
  if (t.contains("lam")) return "\\." + lambda_str(t.at("lam"));
  return "(" + lambda_str(t.at("app")[0]) + " " + lambda_str(t.at("app")[1]) + ")";
}

std::string lambda_run(const json& payload, TraceSink& sink) {
  Emitter em(sink);
  json term = payload.at("term");
  const u64 budget = payload.at("budget").get<u64>();
  u64 steps = 0;
  while (steps < budget) {
    json before = term;
    if (!reduce_step(term)) break;
    ++steps;
    em.emit("beta", {static_cast<i64>(steps)});
    em.snapshot_with([&] { return lambda_str(term); });
  }
  json ans;
  ans["normal_form"] = lambda_str(term);
  ans["steps"] = steps;
  ans["normalized"] = steps < budget;
  return ans.dump();
}

// --- Package dependency resolution ------------------------------------------------------------

std::string package_sat_run(const json& payload, TraceSink& sink) {
  Emitter em(sink);
  const int n = payload.at("packages").get<int>();
  std::vector<std::vector<int>> deps(static_cast<std::size_t>(n));
  for (const auto& d : payload.at("deps")) {
    const int p = d[0].get<int>();
    for (std::size_t i = 1; i < d.size(); ++i) {
      deps[static_cast<std::size_t>(p)].push_back(d[i].get<int>());
    }
  }
  // Closure of targets under dependencies.
  std::set<int> need;
  std::vector<int> work;
  for (const auto& t : payload.at("targets")) {
    const int p = t.get<int>();
    if (need.insert(p).second) {
      work.push_back(p);
      em.emit("need", {p}, "target");
    }
  }
  while (!work.empty()) {
    const int p = work.back();
    work.pop_back();
    for (int d : deps[static_cast<std::size_t>(p)]) {
      if (need.insert(d).second) {
        work.push_back(d);
        em.emit("need", {d}, "dep_of_" + std::to_string(p));
      }
    }
  }
  json ans;
  for (const auto& c : payload.at("conflicts")) {
    const int a = c[0].get<int>(), b = c[1].get<int>();
    if (need.count(a) > 0 && need.count(b) > 0) {
      em.emit("conflict", {a, b});
      ans["conflict"] = json::array({a, b});
      return ans.dump();
    }
  }
  // Kahn order over dependency edges (dep before dependent), min-id first.
  std::map<int, int> indegree;
  for (int p : need) indegree[p] = 0;
  for (int p : need) {
    for (int d : deps[static_cast<std::size_t>(p)]) {
      if (need.count(d) > 0) indegree[p]++;
    }
  }
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (auto [p, deg] : indegree) {
    if (deg == 0) ready.push(p);
  }
  std::vector<int> order;
  while (!ready.empty()) {
    const int p = ready.top();
    ready.pop();
    order.push_back(p);
    em.emit("install", {p});
    for (int q : need) {
      for (int d : deps[static_cast<std::size_t>(q)]) {
        if (d == p && --indegree[q] == 0) ready.push(q);
      }
    }
  }
  if (order.size() != need.size()) {
    ans["conflict"] = json::array({-1, -1});  // dependency cycle
    return ans.dump();
  }
  ans["order"] = order;
  return ans.dump();
}

// --- Generators ---------------------------------------------------------------------------------

json gen_dpll(Rng& rng) {
  const int vars = static_cast<int>(rng.next_int(10, 40));
  // Clause ratio near 3.5 mixes SAT and UNSAT instances.
  const int clauses = static_cast<int>(static_cast<double>(vars) *
                                       (2.5 + rng.next_double() * 2.0));
  json cs = json::array();
  for (int c = 0; c < clauses; ++c) {
    std::set<i64> clause;
    const int width = 3;
    while (static_cast<int>(clause.size()) < width) {
      const i64 v = rng.next_int(1, vars);
      clause.insert(rng.next_below(2) ? v : -v);
    }
    cs.push_back(std::vector<i64>(clause.begin(), clause.end()));
  }
  json payload;
  payload["num_vars"] = vars;
  payload["clauses"] = cs;
  return payload;
}

json gen_resolution(Rng& rng) {
  const int vars = static_cast<int>(rng.next_int(10, 50));
  json cs = json::array();
  const bool unsat = rng.next_below(2) == 0;
  if (unsat) {
    // Implication chain x1, x1->x2, ..., x_{k-1}->x_k, !x_k plus noise.
    const int k = static_cast<int>(rng.next_int(5, static_cast<i64>(vars)));
    cs.push_back(json::array({1}));
    for (int i = 1; i < k; ++i) {
      cs.push_back(json::array({-i, i + 1}));
    }
    cs.push_back(json::array({-k}));
  }
  const int noise = static_cast<int>(rng.next_int(5, 20));
  for (int c = 0; c < noise; ++c) {
    std::set<i64> clause;
    while (static_cast<int>(clause.size()) < 2) {
      const i64 v = rng.next_int(1, vars);
      // Noise clauses stay positive so they cannot interfere with the chain.
      clause.insert(v);
    }
    cs.push_back(std::vector<i64>(clause.begin(), clause.end()));
  }
  json payload;
  payload["num_vars"] = vars;
  payload["clauses"] = cs;
  return payload;
}

json gen_term(Rng& rng, int depth, int next_var) {
  if (depth == 0 || rng.next_below(3) == 0) {
    if (rng.next_below(2) == 0) {
      json t;
      t["var"] = std::string(1, static_cast<char>('X' + rng.next_below(3)));
      return t;
    }
    json t;
    t["const"] = std::string(1, static_cast<char>('a' + rng.next_below(3)));
    return t;
  }
  json t;
  t["f"] = std::string(1, static_cast<char>('f' + rng.next_below(2)));
  json args = json::array();
  const int arity = static_cast<int>(rng.next_int(1, 2));
  for (int i = 0; i < arity; ++i) args.push_back(gen_term(rng, depth - 1, next_var));
  t["args"] = args;
  return t;
}

json gen_unification(Rng& rng) {
  json payload;
  payload["t1"] = gen_term(rng, 3, 0);
  payload["t2"] = gen_term(rng, 3, 0);
  return payload;
}

json gen_type_term(Rng& rng, int depth, std::vector<std::string>& scope) {
  if (depth == 0 || (rng.next_below(3) == 0 && !scope.empty())) {
    if (!scope.empty() && rng.next_below(2) == 0) {
      json t;
      t["var"] = scope[static_cast<std::size_t>(rng.next_below(scope.size()))];
      return t;
    }
    if (rng.next_below(2) == 0) return json{{"int", static_cast<int>(rng.next_below(10))}};
    return json{{"bool", rng.next_below(2) == 0}};
  }
  switch (rng.next_below(5)) {
    case 0: {
      const std::string name = "v" + std::to_string(scope.size());
      scope.push_back(name);
      json body = gen_type_term(rng, depth - 1, scope);
      scope.pop_back();
      json t;
      t["lam"] = name;
      t["body"] = body;
      return t;
    }
    case 1: {
      // Application of an immediate lambda keeps most instances well-typed.
      const std::string name = "v" + std::to_string(scope.size());
      scope.push_back(name);
      json body = gen_type_term(rng, depth - 1, scope);
      scope.pop_back();
      json lam;
      lam["lam"] = name;
      lam["body"] = body;
      json t;
      t["app"] = json::array({lam, gen_type_term(rng, depth - 1, scope)});
      return t;
    }
    case 2: {
      json t;
      t["plus"] = json::array({gen_type_term(rng, depth - 1, scope),
                               gen_type_term(rng, depth - 1, scope)});
      return t;
    }
    case 3: {
      json t;
      t["if"] = json::array({json{{"bool", true}},
                             gen_type_term(rng, depth - 1, scope),
                             gen_type_term(rng, depth - 1, scope)});
      return t;
    }
    default: {
      const std::string name = "v" + std::to_string(scope.size());
      json val = gen_type_term(rng, depth - 1, scope);
      scope.push_back(name);
      json body = gen_type_term(rng, depth - 1, scope);
      scope.pop_back();
      json t;
      t["let"] = name;
      t["val"] = val;
      t["body"] = body;
      return t;
    }
  }
}

json gen_type_infer(Rng& rng) {
  std::vector<std::string> scope;
  json payload;
  payload["term"] = gen_type_term(rng, static_cast<int>(rng.next_int(3, 6)), scope);
  return payload;
}

// Church numeral n as de Bruijn term \f.\x. f^n x.
json church(int n) {
  json body = json{{"idx", 0}};
  for (int i = 0; i < n; ++i) {
    body = json{{"app", json::array({json{{"idx", 1}}, body})}};
  }
  return json{{"lam", json{{"lam", body}}}};
}

json gen_lambda(Rng& rng) {
  // plus = \m.\n.\f.\x. m f (n f x); mult = \m.\n.\f. m (n f)
  const json plus = json{
      {"lam",
       json{{"lam",
             json{{"lam",
                   json{{"lam",
                         json{{"app",
                               json::array(
                                   {json{{"app", json::array({json{{"idx", 3}},
                                                              json{{"idx", 1}}})}},
                                    json{{"app",
                                          json::array(
                                              {json{{"app",
                                                     json::array({json{{"idx", 2}},
                                                                  json{{"idx", 1}}})}},
                                               json{{"idx", 0}}})}}})}}}}}}}}}};
  const json mult = json{
      {"lam",
       json{{"lam",
             json{{"lam",
                   json{{"app",
                         json::array(
                             {json{{"idx", 2}},
                              json{{"app", json::array({json{{"idx", 1}},
                                                        json{{"idx", 0}}})}}})}}}}}}}};
  const int a = static_cast<int>(rng.next_int(1, 5));
  const int b = static_cast<int>(rng.next_int(1, 5));
  const json op = rng.next_below(2) == 0 ? plus : mult;
  json term;
  term["app"] = json::array({json{{"app", json::array({op, church(a)})}}, church(b)});
  json payload;
  payload["term"] = term;
  payload["budget"] = 2000;
  return payload;
}

json gen_package(Rng& rng) {
  const int n = static_cast<int>(rng.next_int(20, 100));
  json deps = json::array();
  for (int p = 1; p < n; ++p) {
    if (rng.next_below(2) == 0) continue;
    json d = json::array();
    d.push_back(p);
    const int count = static_cast<int>(rng.next_int(1, 3));
    for (int i = 0; i < count; ++i) {
      d.push_back(static_cast<int>(rng.next_below(static_cast<u64>(p))));
    }
    deps.push_back(d);
  }
  json conflicts = json::array();
  const int n_conf = static_cast<int>(rng.next_int(1, 5));
  for (int i = 0; i < n_conf; ++i) {
    const int a = static_cast<int>(rng.next_below(static_cast<u64>(n)));
    const int b = static_cast<int>(rng.next_below(static_cast<u64>(n)));
    if (a != b) conflicts.push_back(json::array({a, b}));
  }
  json targets = json::array();
  const int n_targets = static_cast<int>(rng.next_int(2, 6));
  std::set<int> seen;
  for (int i = 0; i < n_targets; ++i) {
    const int t = static_cast<int>(rng.next_below(static_cast<u64>(n)));
    if (seen.insert(t).second) targets.push_back(t);
  }
  json payload;
  payload["packages"] = n;
  payload["deps"] = deps;
  payload["conflicts"] = conflicts;
  payload["targets"] = targets;
  return payload;
}

TaskDriver make_logic_driver(int ordinal, int task_index, std::string name,
                             std::set<std::string> vocab,
                             std::function<json(Rng&)> gen,
                             std::function<std::string(const json&, TraceSink&)> run,
                             std::function<i64(const json&)> size_param) {
  TaskDriver d;
  d.id = {ordinal, 10, task_index, std::move(name)};
  d.vocab = std::move(vocab);
  d.generate = std::move(gen);
  d.trivial = [](const json&) { return false; };
  d.run = std::move(run);
  d.size_param = std::move(size_param);
  d.full_snapshot_limit = 32;
  d.min_steps = [](const json&) { return 1; };
  return d;
}

}  // namespace

void register_logic(std::vector<TaskDriver>& out) {
  int o = static_cast<int>(out.size());
  out.push_back(make_logic_driver(
      o++, 1, "dpll", {"unit", "pure", "decide", "backtrack"}, gen_dpll, dpll_run,
      [](const json& p) { return p.at("num_vars").get<i64>(); }));
  out.push_back(make_logic_driver(
      o++, 2, "resolution",
      {"resolve", "empty_clause", "unit", "pure", "decide", "backtrack"},
      gen_resolution, resolution_run,
      [](const json& p) { return p.at("num_vars").get<i64>(); }));
  out.push_back(make_logic_driver(
      o++, 3, "unification", {"decompose", "bind", "clash", "occurs_check"},
      gen_unification, unification_run, [](const json&) { return 8; }));
  out.push_back(make_logic_driver(
      o++, 4, "type_infer", {"fresh", "constraint", "type_error"}, gen_type_infer,
      type_infer_run, [](const json&) { return 16; }));
  out.push_back(make_logic_driver(
      o++, 5, "lambda", {"beta"}, gen_lambda, lambda_run,
      [](const json&) { return 16; }));
  out.push_back(make_logic_driver(
      o++, 6, "package_sat", {"need", "conflict", "install"}, gen_package,
      package_sat_run,
      [](const json& p) { return p.at("packages").get<i64>(); }));
}

}  // namespace prime::oracles

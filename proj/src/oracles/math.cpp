// Reference executors for the eight mathematical tasks (category 9).
// Exact arithmetic throughout: arbitrary-precision integers and rationals;
// no floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include <functional>
#include <map>
#include <numeric>

#include "common.hpp"

namespace prime::oracles {
namespace {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

std::string rat_str(const BigRat& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

// --- Long division (schoolbook, digit by digit) ---------------------------------

std::string long_division_run(const json& payload, TraceSink& sink) {
  Emitter em(sink);
  const std::string& dividend = payload.at("dividend").get_ref<const std::string&>();
  const BigInt divisor(payload.at("divisor").get<std::string>());
  BigInt remainder = 0;
  std::string quotient;
  for (char ch : dividend) {
    remainder = remainder * 10 + (ch - '0');
    em.emit("bring", {ch - '0'}, remainder.str());
    int q = 0;
    while (remainder >= divisor) {
      remainder -= divisor;
      ++q;
    }
    em.emit("qdigit", {q}, remainder.str());
    quotient.push_back(static_cast<char>('0' + q));
  }
  const std::size_t nz = quotient.find_first_not_of('0');
  quotient = nz == std::string::npos ? "0" : quotient.substr(nz);
  json ans;
  ans["quotient"] = quotient;
  ans["remainder"] = remainder.str();
  return ans.dump();
}

// --- Matrix multiplication --------------------------------------------------------

std::string matmul_run(const json& payload, TraceSink& sink) {
  Emitter em(sink);
  const auto& a = payload.at("a");
  const auto& b = payload.at("b");
  const int n = static_cast<int>(a.size());
  json result = json::array();
  for (int i = 0; i < n; ++i) {
    json row = json::array();
    for (int j = 0; j < n; ++j) {
      i64 acc = 0;
      for (int k = 0; k < n; ++k) {
        const i64 x = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)].get<i64>();
        const i64 y = b[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)].get<i64>();
        acc += x * y;
        em.emit("mul", {i, j, k, x * y});
      }
      em.emit("entry", {i, j, acc});
      row.push_back(acc);
    }
    result.push_back(row);
  }
  json ans;
  ans["product"] = result;
  return ans.dump();
}

// --- Gaussian elimination over exact rationals --------------------------------------
//
// Natural pivot order; rows swapped only when a pivot is zero. Matches the
// canonical worked elimination.

std::string gauss_run(const json& payload, TraceSink& sink) {
  Emitter em(sink);
  const auto& m = payload.at("matrix");  // n rows of n+1 integers (augmented)
  const int n = static_cast<int>(m.size());
  std::vector<std::vector<BigRat>> a(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= n; ++j) {
      a[static_cast<std::size_t>(i)].push_back(
          BigRat(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].get<i64>()));
    }
  }
  auto matrix_state = [&] {
    std::string s;
    for (int i = 0; i < n; ++i) {
      if (i) s.push_back(';');
      for (int j = 0; j <= n; ++j) {
        if (j) s.push_back(',');
        s += rat_str(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
      }
    }
    return s;
  };

  for (int col = 0; col < n; ++col) {
    if (a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)] == 0) {
      int found = -1;
      for (int r = col + 1; r < n; ++r) {
        if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
          found = r;
          break;
        }
      }
      if (found < 0) throw std::domain_error("gauss: singular system");
      std::swap(a[static_cast<std::size_t>(col)], a[static_cast<std::size_t>(found)]);
      em.emit("swap_rows", {col, found});
      em.snapshot_with(matrix_state);
    }
    em.emit("pivot", {col}, rat_str(a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)]));
    for (int row = col + 1; row < n; ++row) {
      const BigRat factor = a[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] /
                            a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
      if (factor == 0) continue;
      for (int j = col; j <= n; ++j) {
        a[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] -=
            factor * a[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)];
      }
      em.emit("eliminate", {row, col}, rat_str(factor));
      em.snapshot_with(matrix_state);
    }
  }
  std::vector<BigRat> x(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    BigRat sum = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(n)];
    for (int j = i + 1; j < n; ++j) {
      sum -= a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(j)];
    }
    x[static_cast<std::size_t>(i)] = sum / a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
    em.emit("back_substitute", {i}, rat_str(x[static_cast<std::size_t>(i)]));
  }
  json ans;
  json sol = json::array();
  for (const auto& v : x) sol.push_back(rat_str(v));
  ans["solution"] = sol;
  return ans.dump();
}

// --- Extended Euclid -----------------------------------------------------------------

std::string gcd_run(const json& payload, TraceSink& sink) {
  Emitter em(sink);
  const i64 a0 = payload.at("a").get<i64>();
  const i64 b0 = payload.at("b").get<i64>();
  BigInt old_r = a0, r = b0;
  BigInt old_s = 1, s = 0;
  BigInt old_t = 0, t = 1;
  while (r != 0) {
    const BigInt q = old_r / r;
    em.emit("divide", {static_cast<i64>(old_r), static_cast<i64>(r), static_cast<i64>(q),
                       static_cast<i64>(old_r - q * r)});
    BigInt tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  json ans;
  ans["gcd"] = static_cast<i64>(old_r);
  ans["x"] = static_cast<i64>(old_s);
  ans["y"] = static_cast<i64>(old_t);
  return ans.dump();
}

// --- Simplex (max c.x, Ax <= b, x >= 0; Bland's rule; exact rationals) -----------------

std::string simplex_run(const json& payload, TraceSink& sink) {
  Emitter em(sink);
  const auto& aj = payload.at("A");
  const auto& bj = payload.at("b");
  const auto& cj = payload.at("c");
  const int m = static_cast<int>(aj.size());
  const int n = static_cast<int>(cj.size());
  // Tableau: m rows of (n structural + m slack + 1 rhs); objective row last.
  const int width = n + m + 1;
  std::vector<std::vector<BigRat>> tab(static_cast<std::size_t>(m + 1),
                                       std::vector<BigRat>(static_cast<std::size_t>(width), BigRat(0)));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      tab[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          BigRat(aj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].get<i64>());
    }
    tab[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + i)] = 1;
    tab[static_cast<std::size_t>(i)][static_cast<std::size_t>(width - 1)] =
        BigRat(bj[static_cast<std::size_t>(i)].get<i64>());
  }
  for (int j = 0; j < n; ++j) {
    tab[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)] =
        -BigRat(cj[static_cast<std::size_t>(j)].get<i64>());
  }
  std::vector<int> basis(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) basis[static_cast<std::size_t>(i)] = n + i;

  for (int iter = 0; iter < 500; ++iter) {
    // Bland: entering = lowest index with negative objective coefficient.
    int enter = -1;
    for (int j = 0; j < width - 1; ++j) {
      if (tab[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)] < 0) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;  // optimal
    int leave = -1;
    BigRat best_ratio = 0;
    for (int i = 0; i < m; ++i) {
      const BigRat& coef = tab[static_cast<std::size_t>(i)][static_cast<std::size_t>(enter)];
      if (coef > 0) {
        const BigRat ratio = tab[static_cast<std::size_t>(i)][static_cast<std::size_t>(width - 1)] / coef;
        if (leave < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis[static_cast<std::size_t>(i)] <
                                        basis[static_cast<std::size_t>(leave)])) {
          leave = i;
          best_ratio = ratio;
        }
      }
    }
    if (leave < 0) throw std::domain_error("simplex: unbounded");
    // Pivot on (leave, enter).
    em.emit("pivot_op", {leave, enter});
    const BigRat pivot = tab[static_cast<std::size_t>(leave)][static_cast<std::size_t>(enter)];
    for (auto& v : tab[static_cast<std::size_t>(leave)]) v /= pivot;
    for (int i = 0; i <= m; ++i) {
      if (i == leave) continue;
      const BigRat f = tab[static_cast<std::size_t>(i)][static_cast<std::size_t>(enter)];
      if (f == 0) continue;
      for (int j = 0; j < width; ++j) {
        tab[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
            f * tab[static_cast<std::size_t>(leave)][static_cast<std::size_t>(j)];
      }
    }
    basis[static_cast<std::size_t>(leave)] = enter;
    em.snapshot_with([&] {
      std::string s = "z=" + rat_str(tab[static_cast<std::size_t>(m)][static_cast<std::size_t>(width - 1)]);
      return s;
    });
  }
  std::vector<BigRat> x(static_cast<std::size_t>(n), BigRat(0));
  for (int i = 0; i < m; ++i) {
    if (basis[static_cast<std::size_t>(i)] < n) {
      x[static_cast<std::size_t>(basis[static_cast<std::size_t>(i)])] =
          tab[static_cast<std::size_t>(i)][static_cast<std::size_t>(width - 1)];
    }
  }
  json ans;
  ans["optimal"] = rat_str(tab[static_cast<std::size_t>(m)][static_cast<std::size_t>(width - 1)]);
  json xs = json::array();
  for (const auto& v : x) xs.push_back(rat_str(v));
  ans["x"] = xs;
  return ans.dump();
}

// --- Polynomial GCD over rationals (Euclid, monic result) -------------------------------

using Poly = std::vector<BigRat>;  // coefficient of x^i at index i

Poly poly_trim(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

std::string poly_str(const Poly& p) {
  if (p.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s.push_back(',');
    s += rat_str(p[i]);
  }
  return s;
}

std::string poly_gcd_run(const json& payload, TraceSink& sink) {
  Emitter em(sink);
  auto read_poly = [](const json& arr) {
    Poly p;
    for (const auto& c : arr) p.push_back(BigRat(c.get<i64>()));
    return poly_trim(p);
  };
  Poly a = read_poly(payload.at("p"));
  Poly b = read_poly(payload.at("q"));
  while (!b.empty()) {
    // r = a mod b via long division.
    Poly r = a;
    while (r.size() >= b.size() && !r.empty()) {
      const BigRat coef = r.back() / b.back();
      const std::size_t shift = r.size() - b.size();
      em.emit("divide", {static_cast<i64>(r.size()) - 1, static_cast<i64>(b.size()) - 1},
              rat_str(coef));
      for (std::size_t i = 0; i < b.size(); ++i) {
        r[shift + i] -= coef * b[i];
      }
      r = poly_trim(std::move(r));
    }
    em.emit("remainder", {static_cast<i64>(r.size())}, poly_str(r));
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {  // normalize to monic
    const BigRat lead = a.back();
    for (auto& c : a) c /= lead;
  }
  json ans;
  ans["gcd"] = poly_str(a);
  return ans.dump();
}

// --- Continued fractions -------------------------------------------------------------------

std::string cont_frac_run(const json& payload, TraceSink& sink) {
  Emitter em(sink);
  i64 p = payload.at("p").get<i64>();
  i64 q = payload.at("q").get<i64>();
  std::vector<i64> terms;
  BigInt h0 = 1, h1 = 0, k0 = 0, k1 = 1;  // convergent recurrences
  json convergents = json::array();
  while (q != 0) {
    const i64 a = p / q;
    terms.push_back(a);
    em.emit("term", {a});
    const BigInt h = a * h0 + h1;
    const BigInt k = a * k0 + k1;
    h1 = h0;
    h0 = h;
    k1 = k0;
    k0 = k;
    em.emit("convergent", {static_cast<i64>(h), static_cast<i64>(k)});
    convergents.push_back(json::array({static_cast<i64>(h), static_cast<i64>(k)}));
    const i64 r = p % q;
    p = q;
    q = r;
  }
  json ans;
  ans["terms"] = to_json_array(terms);
  ans["convergents"] = convergents;
  return ans.dump();
}

// --- Symbolic differentiation -----------------------------------------------------------------
//
// Expression AST in JSON: {"op": "+"|"-"|"*"|"/", "l":..., "r":...},
// {"fn": "sin"|"cos"|"exp", "arg":...}, {"var": "x"}, {"const": c},
// {"op": "^", "l":..., "exp": k}. Answers are canonical prefix strings.

struct Expr {
  std::string to_string() const { return repr; }
  std::string repr;
};

Expr make_const(i64 c) { return {std::to_string(c)}; }
bool is_const(const Expr& e, i64 c) { return e.repr == std::to_string(c); }

Expr make_add(const Expr& a, const Expr& b) {
  if (is_const(a, 0)) return b;
  if (is_const(b, 0)) return a;
  return {"(+ " + a.repr + " " + b.repr + ")"};
}
Expr make_sub(const Expr& a, const Expr& b) {
  if (is_const(b, 0)) return a;
  return {"(- " + a.repr + " " + b.repr + ")"};
}
Expr make_mul(const Expr& a, const Expr& b) {
  if (is_const(a, 0) || is_const(b, 0)) return make_const(0);
  if (is_const(a, 1)) return b;
  if (is_const(b, 1)) return a;
  return {"(* " + a.repr + " " + b.repr + ")"};
}
Expr make_div(const Expr& a, const Expr& b) {
  if (is_const(a, 0)) return make_const(0);
  if (is_const(b, 1)) return a;
  return {"(/ " + a.repr + " " + b.repr + ")"};
}
Expr make_pow(const Expr& a, i64 k) {
  if (k == 0) return make_const(1);
  if (k == 1) return a;
  return {"(^ " + a.repr + " " + std::to_string(k) + ")"};
}
Expr make_fn(const std::string& fn, const Expr& a) {
  return {"(" + fn + " " + a.repr + ")"};
}

Expr expr_of(const json& node) {
  if (node.contains("const")) return make_const(node.at("const").get<i64>());
  if (node.contains("var")) return {"x"};
  if (node.contains("fn")) return make_fn(node.at("fn").get<std::string>(), expr_of(node.at("arg")));
  const std::string op = node.at("op").get<std::string>();
  if (op == "^") return make_pow(expr_of(node.at("l")), node.at("exp").get<i64>());
  const Expr l = expr_of(node.at("l"));
  const Expr r = expr_of(node.at("r"));
  if (op == "+") return make_add(l, r);
  if (op == "-") return make_sub(l, r);
  if (op == "*") return make_mul(l, r);
  return make_div(l, r);
}

Expr differentiate(const json& node, Emitter& em, int& counter) {
  const int id = counter++;
  if (node.contains("const")) {
    em.emit("rule", {id}, "const");
    return make_const(0);
  }
  if (node.contains("var")) {
    em.emit("rule", {id}, "var");
    return make_const(1);
  }
  if (node.contains("fn")) {
    const std::string fn = node.at("fn").get<std::string>();
    const Expr u = expr_of(node.at("arg"));
    const Expr du = differentiate(node.at("arg"), em, counter);
    em.emit("rule", {id}, "chain_" + fn);
    if (fn == "sin") return make_mul(make_fn("cos", u), du);
    if (fn == "cos") return make_mul(make_sub(make_const(0), make_fn("sin", u)), du);
    return make_mul(make_fn("exp", u), du);  // exp
  }
  const std::string op = node.at("op").get<std::string>();
  if (op == "^") {
    const i64 k = node.at("exp").get<i64>();
    const Expr u = expr_of(node.at("l"));
    const Expr du = differentiate(node.at("l"), em, counter);
    em.emit("rule", {id}, "power");
    return make_mul(make_mul(make_const(k), make_pow(u, k - 1)), du);
  }
  const Expr u = expr_of(node.at("l"));
  const Expr v = expr_of(node.at("r"));
  const Expr du = differentiate(node.at("l"), em, counter);
  const Expr dv = differentiate(node.at("r"), em, counter);
  if (op == "+") {
    em.emit("rule", {id}, "sum");
    return make_add(du, dv);
  }
  if (op == "-") {
    em.emit("rule", {id}, "difference");
    return make_sub(du, dv);
  }
  if (op == "*") {
    em.emit("rule", {id}, "product");
    return make_add(make_mul(du, v), make_mul(u, dv));
  }
  em.emit("rule", {id}, "quotient");
  return make_div(make_sub(make_mul(du, v), make_mul(u, dv)), make_pow(v, 2));
}

std::string symdiff_run(const json& payload, TraceSink& sink) {
  Emitter em(sink);
  int counter = 0;
  const Expr d = differentiate(payload.at("expr"), em, counter);
  json ans;
  ans["derivative"] = d.to_string();
  return ans.dump();
}

// --- Generators ---------------------------------------------------------------------------------

json gen_long_division(Rng& rng) {
  const int digits = static_cast<int>(rng.next_int(20, 60));
  std::string dividend(static_cast<std::size_t>(digits), '0');
  dividend[0] = static_cast<char>('1' + rng.next_below(9));
  for (std::size_t i = 1; i < dividend.size(); ++i) {
    dividend[i] = static_cast<char>('0' + rng.next_below(10));
  }
  const int dlen = static_cast<int>(rng.next_int(2, 5));
  std::string divisor(static_cast<std::size_t>(dlen), '0');
  divisor[0] = static_cast<char>('1' + rng.next_below(9));
  for (std::size_t i = 1; i < divisor.size(); ++i) {
    divisor[i] = static_cast<char>('0' + rng.next_below(10));
  }
  json payload;
  payload["dividend"] = dividend;
  payload["divisor"] = divisor;
  return payload;
}

json gen_matmul(Rng& rng) {
  const int n = static_cast<int>(rng.next_int(3, 8));
  auto gen_matrix = [&] {
    json m = json::array();
    for (int i = 0; i < n; ++i) {
      json row = json::array();
      for (int j = 0; j < n; ++j) row.push_back(rng.next_int(-20, 20));
      m.push_back(row);
    }
    return m;
  };
  json payload;
  payload["a"] = gen_matrix();
  payload["b"] = gen_matrix();
  return payload;
}

json gen_gauss(Rng& rng) {
  // Build from a known integer solution; retry until the natural pivots are
  // nonzero so elimination needs no row swaps.
  for (;;) {
    const int n = static_cast<int>(rng.next_int(3, 8));
    std::vector<i64> sol(static_cast<std::size_t>(n));
    for (auto& v : sol) v = rng.next_int(-9, 9);
    std::vector<std::vector<i64>> a(static_cast<std::size_t>(n),
                                    std::vector<i64>(static_cast<std::size_t>(n) + 1, 0));
    for (int i = 0; i < n; ++i) {
      i64 rhs = 0;
      for (int j = 0; j < n; ++j) {
        const i64 coef = rng.next_int(-9, 9);
        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = coef;
        rhs += coef * sol[static_cast<std::size_t>(j)];
      }
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(n)] = rhs;
    }
    // Check natural pivots stay nonzero under exact elimination.
    std::vector<std::vector<BigRat>> probe(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j <= n; ++j) {
        probe[static_cast<std::size_t>(i)].push_back(
            BigRat(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
      }
    }
    bool ok = true;
    for (int col = 0; col < n && ok; ++col) {
      if (probe[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)] == 0) {
        ok = false;
        break;
      }
      for (int row = col + 1; row < n; ++row) {
        const BigRat f = probe[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] /
                         probe[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
        for (int j = col; j <= n; ++j) {
          probe[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] -=
              f * probe[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)];
        }
      }
    }
    if (!ok) continue;
    json payload;
    json rows = json::array();
    for (const auto& row : a) rows.push_back(to_json_array(row));
    payload["matrix"] = rows;
    return payload;
  }
}

json gen_gcd(Rng& rng) {
  json payload;
  payload["a"] = static_cast<i64>(rng.next_below(1000000000000ull)) + 1;
  payload["b"] = static_cast<i64>(rng.next_below(1000000000000ull));
  return payload;
}

json gen_simplex(Rng& rng) {
  const int n = static_cast<int>(rng.next_int(3, 6));  // variables
  const int m = static_cast<int>(rng.next_int(3, 6));  // constraints
  json a = json::array();
  for (int i = 0; i < m; ++i) {
    json row = json::array();
    for (int j = 0; j < n; ++j) row.push_back(rng.next_int(1, 9));
    a.push_back(row);
  }
  json b = json::array();
  for (int i = 0; i < m; ++i) b.push_back(rng.next_int(10, 99));
  json c = json::array();
  for (int j = 0; j < n; ++j) c.push_back(rng.next_int(1, 9));
  json payload;
  payload["A"] = a;
  payload["b"] = b;
  payload["c"] = c;
  return payload;
}

json gen_poly_gcd(Rng& rng) {
  // p = g*u, q = g*v for random integer polynomials: nontrivial gcd.
  auto random_poly = [&rng](int degree) {
    std::vector<i64> p(static_cast<std::size_t>(degree) + 1);
    for (auto& c : p) c = rng.next_int(-5, 5);
    while (p.back() == 0) p.back() = rng.next_int(-5, 5);
    return p;
  };
  auto mul = [](const std::vector<i64>& x, const std::vector<i64>& y) {
    std::vector<i64> r(x.size() + y.size() - 1, 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
      for (std::size_t j = 0; j < y.size(); ++j) r[i + j] += x[i] * y[j];
    }
    return r;
  };
  const int dg = static_cast<int>(rng.next_int(1, 3));
  const int du = static_cast<int>(rng.next_int(1, 4));
  const int dv = static_cast<int>(rng.next_int(1, 4));
  const auto g = random_poly(dg);
  json payload;
  payload["p"] = to_json_array(mul(g, random_poly(du)));
  payload["q"] = to_json_array(mul(g, random_poly(dv)));
  return payload;
}

json gen_cont_frac(Rng& rng) {
  json payload;
  payload["p"] = static_cast<i64>(rng.next_below(1000000000)) + 1;
  payload["q"] = static_cast<i64>(rng.next_below(999999999)) + 1;
  return payload;
}

json gen_symdiff_node(Rng& rng, int depth) {
  if (depth == 0 || rng.next_below(4) == 0) {
    json leaf;
    if (rng.next_below(2) == 0) {
      leaf["var"] = "x";
    } else {
      leaf["const"] = rng.next_int(1, 9);
    }
    return leaf;
  }
  json node;
  switch (rng.next_below(8)) {
    case 0:
    case 1: {
      node["op"] = "+";
      node["l"] = gen_symdiff_node(rng, depth - 1);
      node["r"] = gen_symdiff_node(rng, depth - 1);
      break;
    }
    case 2: {
      node["op"] = "-";
      node["l"] = gen_symdiff_node(rng, depth - 1);
      node["r"] = gen_symdiff_node(rng, depth - 1);
      break;
    }
    case 3:
    case 4: {
      node["op"] = "*";
      node["l"] = gen_symdiff_node(rng, depth - 1);
      node["r"] = gen_symdiff_node(rng, depth - 1);
      break;
    }
    case 5: {
      node["op"] = "/";
      node["l"] = gen_symdiff_node(rng, depth - 1);
      node["r"] = gen_symdiff_node(rng, depth - 1);
      break;
    }
    case 6: {
      node["op"] = "^";
      node["l"] = gen_symdiff_node(rng, depth - 1);
      node["exp"] = rng.next_int(2, 5);
      break;
    }
    default: {
      const char* fns[3] = {"sin", "cos", "exp"};
      node["fn"] = fns[rng.next_below(3)];
      node["arg"] = gen_symdiff_node(rng, depth - 1);
    }
  }
  return node;
}

json gen_symdiff(Rng& rng) {
  json payload;
  payload["expr"] = gen_symdiff_node(rng, static_cast<int>(rng.next_int(3, 8)));
  return payload;
}

TaskDriver make_math_driver(int ordinal, int task_index, std::string name,
                            std::set<std::string> vocab,
                            std::function<json(Rng&)> gen,
                            std::function<std::string(const json&, TraceSink&)> run,
                            std::function<i64(const json&)> size_param) {
  TaskDriver d;
  d.id = {ordinal, 9, task_index, std::move(name)};
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

void register_math(std::vector<TaskDriver>& out) {
  int o = static_cast<int>(out.size());
  out.push_back(make_math_driver(
      o++, 1, "long_division", {"bring", "qdigit"}, gen_long_division,
      long_division_run, [](const json& p) {
        return static_cast<i64>(p.at("dividend").get_ref<const std::string&>().size());
      }));
  out.push_back(make_math_driver(o++, 2, "matmul", {"mul", "entry"}, gen_matmul,
                                 matmul_run, [](const json& p) {
                                   return static_cast<i64>(p.at("a").size());
                                 }));
  out.push_back(make_math_driver(
      o++, 3, "gauss",
      {"pivot", "swap_rows", "eliminate", "back_substitute"}, gen_gauss, gauss_run,
      [](const json& p) { return static_cast<i64>(p.at("matrix").size()); }));
  out.push_back(make_math_driver(o++, 4, "gcd", {"divide"}, gen_gcd, gcd_run,
                                 [](const json&) { return 2; }));
  out.push_back(make_math_driver(o++, 5, "simplex", {"pivot_op"}, gen_simplex,
                                 simplex_run, [](const json& p) {
                                   return static_cast<i64>(p.at("c").size());
                                 }));
  out.push_back(make_math_driver(o++, 6, "poly_gcd", {"divide", "remainder"},
                                 gen_poly_gcd, poly_gcd_run, [](const json& p) {
                                   return static_cast<i64>(p.at("p").size());
                                 }));
  out.push_back(make_math_driver(o++, 7, "cont_frac", {"term", "convergent"},
                                 gen_cont_frac, cont_frac_run,
                                 [](const json&) { return 2; }));
  out.push_back(make_math_driver(o++, 8, "symdiff", {"rule"}, gen_symdiff,
                                 symdiff_run, [](const json&) { return 8; }));
}

}  // namespace prime::oracles

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>

#include "prime/oracles.hpp"
#include "prime/rng.hpp"
#include "prime/taskgen.hpp"

using namespace prime;
using BigInt = boost::multiprecision::cpp_int;

TEST_CASE("gauss golden system solves to (2, 3, -1)") {
  json payload;
  payload["matrix"] = json::array({json::array({2, 1, -1, 8}),
                                   json::array({-3, -1, 2, -11}),
                                   json::array({-2, 1, 2, -3})});
  const ExecutionTrace trace = math_trace("gauss", payload);
  const json answer = json::parse(trace.final_state);
  CHECK(answer.at("solution") == json::array({"2", "3", "-1"}));
  // Exact rational elimination factors: R2 - (-3/2)R1 and R3 - (-1)R1.
  std::vector<std::string> factors;
  for (const auto& ev : trace.events) {
    if (ev.kind == "eliminate") factors.push_back(ev.note);
  }
  REQUIRE(factors.size() == 3);
  CHECK(factors[0] == "-3/2");
  CHECK(factors[1] == "-1");
  CHECK(factors[2] == "4");  // R3 - 4*R2 after the first column clears
}

TEST_CASE("gauss rejects singular systems") {
  json payload;
  payload["matrix"] = json::array({json::array({1, 1, 2}),
                                   json::array({2, 2, 4})});
  CHECK_THROWS_AS(math_trace("gauss", payload), std::domain_error);
}

TEST_CASE("gauss solutions satisfy the original system on random instances") {
  Rng rng(1111);
  const TaskDriver& driver = TaskRegistry::instance().by_name("gauss");
  for (int round = 0; round < 50; ++round) {
    const json payload = driver.generate(rng);
    const json answer = json::parse(math_trace("gauss", payload).final_state);
    // Parse fraction strings and substitute back exactly.
    using BigRat = boost::multiprecision::cpp_rational;
    auto parse_rat = [](const std::string& s) {
      const auto slash = s.find('/');
      if (slash == std::string::npos) return BigRat(BigInt(s));
      return BigRat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    };
    const auto& m = payload.at("matrix");
    const int n = static_cast<int>(m.size());
    std::vector<BigRat> x;
    for (const auto& s : answer.at("solution")) {
      x.push_back(parse_rat(s.get<std::string>()));
    }
    for (int i = 0; i < n; ++i) {
      BigRat lhs = 0;
      for (int j = 0; j < n; ++j) {
        lhs += BigRat(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].get<std::int64_t>()) *
               x[static_cast<std::size_t>(j)];
      }
      REQUIRE(lhs == BigRat(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(n)].get<std::int64_t>()));
    }
  }
}

TEST_CASE("long division: multiply-back identity on 40-digit dividends") {
  Rng rng(2222);
  for (int round = 0; round < 100; ++round) {
    std::string dividend = "1";
    for (int i = 1; i < 40; ++i) {
      dividend.push_back(static_cast<char>('0' + rng.next_below(10)));
    }
    const std::int64_t divisor = rng.next_int(2, 99999);
    json payload;
    payload["dividend"] = dividend;
    payload["divisor"] = std::to_string(divisor);
    const json answer = json::parse(math_trace("long_division", payload).final_state);
    const BigInt q(answer.at("quotient").get<std::string>());
    const BigInt r(answer.at("remainder").get<std::string>());
    REQUIRE(q * divisor + r == BigInt(dividend));
    REQUIRE(r >= 0);
    REQUIRE(r < divisor);
  }
}

TEST_CASE("gcd: base case (a, 0) has an empty quotient chain") {
  json payload;
  payload["a"] = 48;
  payload["b"] = 0;
  const ExecutionTrace trace = math_trace("gcd", payload);
  const json answer = json::parse(trace.final_state);
  CHECK(answer.at("gcd") == 48);
  CHECK(trace.events.empty());
}

TEST_CASE("gcd divides both inputs and Bezout identity holds") {
  Rng rng(3333);
  for (int round = 0; round < 200; ++round) {
    const std::int64_t a = static_cast<std::int64_t>(rng.next_below(1000000000000ull)) + 1;
    const std::int64_t b = static_cast<std::int64_t>(rng.next_below(1000000000000ull));
    json payload;
    payload["a"] = a;
    payload["b"] = b;
    const json answer = json::parse(math_trace("gcd", payload).final_state);
    const std::int64_t g = answer.at("gcd").get<std::int64_t>();
    REQUIRE(g == std::gcd(a, b));
    const BigInt x = answer.at("x").get<std::int64_t>();
    const BigInt y = answer.at("y").get<std::int64_t>();
    REQUIRE(BigInt(a) * x + BigInt(b) * y == g);
  }
}

TEST_CASE("matmul result equals a reference triple loop") {
  Rng rng(4444);
  const TaskDriver& driver = TaskRegistry::instance().by_name("matmul");
  for (int round = 0; round < 50; ++round) {
    const json payload = driver.generate(rng);
    const json answer = json::parse(math_trace("matmul", payload).final_state);
    const auto& a = payload.at("a");
    const auto& b = payload.at("b");
    const int n = static_cast<int>(a.size());
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        std::int64_t acc = 0;
        for (int k = 0; k < n; ++k) {
          acc += a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)].get<std::int64_t>() *
                 b[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)].get<std::int64_t>();
        }
        REQUIRE(answer.at("product")[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == acc);
      }
    }
  }
}

TEST_CASE("simplex optimum is feasible and beats random feasible points") {
  Rng rng(5555);
  const TaskDriver& driver = TaskRegistry::instance().by_name("simplex");
  for (int round = 0; round < 30; ++round) {
    const json payload = driver.generate(rng);
    const json answer = json::parse(math_trace("simplex", payload).final_state);
    using BigRat = boost::multiprecision::cpp_rational;
    auto parse_rat = [](const std::string& s) {
      const auto slash = s.find('/');
      if (slash == std::string::npos) return BigRat(BigInt(s));
      return BigRat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    };
    const auto& a = payload.at("A");
    const auto& b = payload.at("b");
    const auto& c = payload.at("c");
    std::vector<BigRat> x;
    for (const auto& s : answer.at("x")) x.push_back(parse_rat(s.get<std::string>()));
    // Feasibility: Ax <= b, x >= 0.
    BigRat objective = 0;
    for (std::size_t j = 0; j < x.size(); ++j) {
      REQUIRE(x[j] >= 0);
      objective += BigRat(c[j].get<std::int64_t>()) * x[j];
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
      BigRat lhs = 0;
      for (std::size_t j = 0; j < x.size(); ++j) {
        lhs += BigRat(a[i][j].get<std::int64_t>()) * x[j];
      }
      REQUIRE(lhs <= BigRat(b[i].get<std::int64_t>()));
    }
    REQUIRE(parse_rat(answer.at("optimal").get<std::string>()) == objective);
    // No random axis-scaled feasible point beats the reported optimum.
    for (int probe = 0; probe < 20; ++probe) {
      std::vector<BigRat> y(x.size(), BigRat(0));
      const auto axis = rng.next_below(x.size());
      // Largest feasible step along one axis.
      BigRat limit = -1;
      for (std::size_t i = 0; i < a.size(); ++i) {
        const std::int64_t coef = a[i][axis].get<std::int64_t>();
        if (coef > 0) {
          const BigRat bound = BigRat(b[i].get<std::int64_t>()) / coef;
          if (limit < 0 || bound < limit) limit = bound;
        }
      }
      y[axis] = limit;
      BigRat obj = BigRat(c[axis].get<std::int64_t>()) * limit;
      REQUIRE(obj <= objective);
    }
  }
}

TEST_CASE("polynomial gcd divides both inputs exactly") {
  Rng rng(6666);
  const TaskDriver& driver = TaskRegistry::instance().by_name("poly_gcd");
  using BigRat = boost::multiprecision::cpp_rational;
  auto parse_poly = [](const std::string& s) {
    std::vector<BigRat> p;
    std::size_t pos = 0;
    while (pos < s.size()) {
      auto comma = s.find(',', pos);
      if (comma == std::string::npos) comma = s.size();
      const std::string tok = s.substr(pos, comma - pos);
      const auto slash = tok.find('/');
      if (slash == std::string::npos) {
        p.push_back(BigRat(BigInt(tok)));
      } else {
        p.push_back(BigRat(BigInt(tok.substr(0, slash)), BigInt(tok.substr(slash + 1))));
      }
      pos = comma + 1;
    }
    return p;
  };
  auto divides = [](const std::vector<BigRat>& g, std::vector<BigRat> p) {
    if (g.empty()) return p.empty();
    while (p.size() >= g.size()) {
      const BigRat coef = p.back() / g.back();
      const std::size_t shift = p.size() - g.size();
      for (std::size_t i = 0; i < g.size(); ++i) p[shift + i] -= coef * g[i];
      while (!p.empty() && p.back() == 0) p.pop_back();
      if (p.empty()) return true;
    }
    return p.empty();
  };
  for (int round = 0; round < 50; ++round) {
    const json payload = driver.generate(rng);
    const json answer = json::parse(math_trace("poly_gcd", payload).final_state);
    const auto g = parse_poly(answer.at("gcd").get<std::string>());
    REQUIRE(!g.empty());
    REQUIRE(g.back() == 1);  // monic
    auto to_rat = [](const json& arr) {
      std::vector<BigRat> p;
      for (const auto& v : arr) p.push_back(BigRat(v.get<std::int64_t>()));
      while (!p.empty() && p.back() == 0) p.pop_back();
      return p;
    };
    REQUIRE(divides(g, to_rat(payload.at("p"))));
    REQUIRE(divides(g, to_rat(payload.at("q"))));
    // The planted common factor has degree >= 1, so must the gcd.
    REQUIRE(g.size() >= 2);
  }
}

TEST_CASE("continued fraction convergents reproduce p/q exactly") {
  Rng rng(7777);
  for (int round = 0; round < 200; ++round) {
    const std::int64_t p = static_cast<std::int64_t>(rng.next_below(1000000000)) + 1;
    const std::int64_t q = static_cast<std::int64_t>(rng.next_below(999999999)) + 1;
    json payload;
    payload["p"] = p;
    payload["q"] = q;
    const json answer = json::parse(math_trace("cont_frac", payload).final_state);
    const auto& conv = answer.at("convergents");
    REQUIRE(!conv.empty());
    const std::int64_t h = conv.back()[0].get<std::int64_t>();
    const std::int64_t k = conv.back()[1].get<std::int64_t>();
    const std::int64_t g = std::gcd(p, q);
    REQUIRE(h == p / g);
    REQUIRE(k == q / g);
  }
}

namespace {

// Numeric evaluation of the canonical prefix form, as the derivative oracle.
double eval_prefix(const std::string& s, std::size_t& pos, double x) {
  while (pos < s.size() && s[pos] == ' ') ++pos;
  if (s[pos] == '(') {
    ++pos;
    std::string op;
    while (s[pos] != ' ') op.push_back(s[pos++]);
    ++pos;
    const double a = eval_prefix(s, pos, x);
    double result = 0;
    if (op == "sin") {
      result = std::sin(a);
    } else if (op == "cos") {
      result = std::cos(a);
    } else if (op == "exp") {
      result = std::exp(a);
    } else {
      const double b = eval_prefix(s, pos, x);
      if (op == "+") result = a + b;
      if (op == "-") result = a - b;
      if (op == "*") result = a * b;
      if (op == "/") result = a / b;
      if (op == "^") result = std::pow(a, b);
    }
    while (pos < s.size() && s[pos] == ' ') ++pos;
    ++pos;  // ')'
    return result;
  }
  std::string token;
  while (pos < s.size() && s[pos] != ' ' && s[pos] != ')') token.push_back(s[pos++]);
  if (token == "x") return x;
  return std::stod(token);
}

double eval_expr_json(const json& node, double x) {
  if (node.contains("const")) return node.at("const").get<double>();
  if (node.contains("var")) return x;
  if (node.contains("fn")) {
    const double a = eval_expr_json(node.at("arg"), x);
    const std::string fn = node.at("fn").get<std::string>();
    if (fn == "sin") return std::sin(a);
    if (fn == "cos") return std::cos(a);
    return std::exp(a);
  }
  const std::string op = node.at("op").get<std::string>();
  if (op == "^") {
    return std::pow(eval_expr_json(node.at("l"), x), node.at("exp").get<double>());
  }
  const double l = eval_expr_json(node.at("l"), x);
  const double r = eval_expr_json(node.at("r"), x);
  if (op == "+") return l + r;
  if (op == "-") return l - r;
  if (op == "*") return l * r;
  return l / r;
}

}  // namespace

TEST_CASE("symbolic derivative agrees with central finite differences") {
  Rng rng(8888);
  const TaskDriver& driver = TaskRegistry::instance().by_name("symdiff");
  int checked = 0;
  for (int round = 0; round < 200 && checked < 60; ++round) {
    const json payload = driver.generate(rng);
    const json answer = json::parse(math_trace("symdiff", payload).final_state);
    const std::string derivative = answer.at("derivative").get<std::string>();
    for (double x : {0.3, 0.7, 1.1}) {
      const double h = 1e-6;
      const double f1 = eval_expr_json(payload.at("expr"), x + h);
      const double f0 = eval_expr_json(payload.at("expr"), x - h);
      if (!std::isfinite(f1) || !std::isfinite(f0)) continue;
      const double numeric = (f1 - f0) / (2 * h);
      if (std::abs(numeric) > 1e4) continue;  // steep regions: skip
      std::size_t pos = 0;
      const double symbolic = eval_prefix(derivative, pos, x);
      if (!std::isfinite(symbolic)) continue;
      REQUIRE(symbolic == doctest::Approx(numeric).epsilon(1e-3).scale(1.0));
      ++checked;
    }
  }
  CHECK(checked >= 60);
}

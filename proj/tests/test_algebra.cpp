#include <doctest.h>

#include <algorithm>
#include <map>

#include "uqrs/algebra.hpp"
#include "uqrs/cli.hpp"
#include "uqrs/suites.hpp"

using namespace uqrs;

namespace {

Scalar mono(const Rational& a, const Rational& b) { return Scalar(rs_monomial(a, b)); }

FockState state_with(int n, std::vector<Creator> creators) {
  FockState s = vacuum_state(n);
  for (Creator c : creators) insert_creator(s.creators, c);
  return s;
}

}  // namespace

TEST_CASE("twisted bracket evaluates as AB - vBA") {
  VertexEngine<SymbolicField> engine(2, SymbolicField{});
  Evaluator<SymbolicField> ev(engine);
  const Op a = op_mode(1, 1, 0), b = op_mode(2, 1, 1);
  const Scalar v = mono(Rational(1, 2), -1);
  const FockState s = state_with(2, {encode_creator(Family::A, 1, 1)});
  auto expected = ev.apply(a * b, s);
  expected.axpy(-v, ev.apply(b * a, s));
  CHECK(ev.apply(qbracket(a, b, v), s) == expected);
  CHECK(ev.apply(commutator(a, a), s).is_zero());
}

TEST_CASE("nested brackets") {
  const Op a = op_mode(1, 1, 0), b = op_mode(2, 1, 0), c = op_mode(1, -1, 1);
  const Scalar u = mono(1, 0), v = mono(0, 1);
  VertexEngine<SymbolicField> engine(2, SymbolicField{});
  Evaluator<SymbolicField> ev(engine);
  const FockState s = vacuum_state(2);
  CHECK(ev.apply(nested_bracket({a, b, c}, {u, v}, Nesting::Right), s) == ev.apply(qbracket(a, qbracket(b, c, u), v), s));
  CHECK(ev.apply(nested_bracket({a, b, c}, {u, v}, Nesting::Left), s) == ev.apply(qbracket(qbracket(a, b, u), c, v), s));
  CHECK_THROWS_AS(nested_bracket({a, b}, {}, Nesting::Right), std::invalid_argument);
  CHECK_THROWS_AS(nested_bracket({}, {}, Nesting::Left), std::invalid_argument);
  CHECK(nested_bracket({a}, {}, Nesting::Right) == a);
}

TEST_CASE("symmetrization sums all orderings") {
  int calls = 0;
  const Op sym = symmetrize({0, 1, 1}, [&](const std::vector<int>& d) {
    ++calls;
    return op_product({op_mode(1, 1, d[0]), op_mode(1, 1, d[1]), op_mode(1, 1, d[2])});
  });
  CHECK(calls == 3);
  REQUIRE(sym->children.size() == 3);
  for (const auto& w : sym->weights) CHECK(w == Scalar(Rational(2)));
  VertexEngine<NumericField> engine(2, NumericField(2, 3));
  Evaluator<NumericField> ev(engine);
  std::vector<std::pair<Scalar, Op>> literal;
  for (auto d : std::vector<std::vector<int>>{{0, 1, 1}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}, {1, 0, 1}, {1, 1, 0}})
    literal.emplace_back(Scalar(Rational(1)), op_product({op_mode(1, 1, d[0]), op_mode(1, 1, d[1]), op_mode(1, 1, d[2])}));
  const FockState s = vacuum_state(2);
  CHECK(ev.apply(sym, s) == ev.apply(op_sum(literal), s));
}

TEST_CASE("test state generation") {
  const RootData roots(2);
  const auto only_vacuum = generate_test_states(roots, 0, 0);
  REQUIRE(only_vacuum.size() == 1);
  CHECK(only_vacuum[0] == vacuum_state(2));

  const auto deg1 = generate_test_states(roots, 1, 0);
  // vacuum, a1(-1), a1(-1)^2, a1(-2), a1(-1) b1(-1), a2(-1), b1(-1), b1(-1)^2, b1(-2)
  CHECK(deg1.size() == 9);
  CHECK(std::find(deg1.begin(), deg1.end(), state_with(2, {encode_creator(Family::A, 2, 1)})) != deg1.end());
  CHECK(std::find(deg1.begin(), deg1.end(), state_with(2, {encode_creator(Family::B, 1, 1)})) != deg1.end());
  CHECK(std::find(deg1.begin(), deg1.end(), state_with(2, {encode_creator(Family::A, 2, 2)})) == deg1.end());
  for (const auto& s : deg1) CHECK(weighted_degree(roots, s) <= 1);

  const auto shifted = generate_test_states(RootData(3), 1, 1);
  for (const auto& s : shifted) CHECK(is_admissible(RootData(3), s.point));
  CHECK(generate_test_states(RootData(3), 1, 1) == shifted);
}

TEST_CASE("principal degree counts creator depths") {
  const FockState s = state_with(3, {encode_creator(Family::A, 3, 2), encode_creator(Family::B, 1, 1)});
  CHECK(principal_degree(s) == 3);
  CHECK(weighted_degree(RootData(3), s) == Rational(5, 2));
}

TEST_CASE("identity runner: serial and parallel agree") {
  VertexEngine<NumericField> engine(2, NumericField(2, 3));
  const auto states = generate_test_states(engine.roots(), 1, 1);
  const Op a1 = op_boson(Family::A, 1, 1), a1m = op_boson(Family::A, 1, -1);
  const Scalar c = heisenberg_commutator(engine.roots(), 1, 1, 1);
  std::vector<OperatorIdentity> ids;
  ids.push_back(OperatorIdentity{"heisenberg pair", commutator(a1, a1m), op_scale(c, op_identity()), false, {}});
  ids.push_back(OperatorIdentity{"wrong constant", commutator(a1, a1m), op_scale(c + Scalar(Rational(1)), op_identity()),
                                 true, {}});
  ids.push_back(OperatorIdentity{"orthogonal modes",
                                 commutator(op_mode(1, 1, 0), op_mode(2, -1, 0)), op_sum({}), false, {}});
  const auto par = run_identities(engine, ids, states, true);
  const auto ser = run_identities(engine, ids, states, false);
  REQUIRE(par.instances.size() == ser.instances.size());
  for (std::size_t k = 0; k < par.instances.size(); ++k) {
    CHECK(par.instances[k].passed == ser.instances[k].passed);
    CHECK(par.instances[k].detail == ser.instances[k].detail);
  }
  CHECK(par.instances[0].passed);
  CHECK_FALSE(par.instances[1].passed);
  CHECK(par.instances[2].passed);
  CHECK(par.passed());
}

TEST_CASE("suite registry and windows") {
  SuiteConfig cfg;
  CHECK(suite_ids().size() == 15);
  CHECK_THROWS_AS(run_suite("no_such_suite", cfg), std::invalid_argument);
  CHECK(resolve_window("serre_cubic", cfg).max_degree == 1);
  cfg.max_degree = Rational(1, 2);
  cfg.mode_window = std::make_pair(-3, 4);
  const auto w = resolve_window("heisenberg", cfg);
  CHECK(w.max_degree == Rational(1, 2));
  CHECK(w.mode_lo == -3);
  CHECK(w.mode_hi == 4);
  CHECK_FALSE(suite_uses_fock_space("cocycle"));
  CHECK(suite_uses_fock_space("drinfeld_images"));
}

TEST_CASE("small suites pass") {
  SuiteConfig cfg;
  cfg.rank = 2;
  CHECK(run_suite("structure_constants", cfg).passed());
  CHECK(run_suite("quadratic_identity", cfg).passed());
  cfg.max_degree = Rational(1, 2);
  cfg.max_shifts = 0;
  const auto serre = run_suite("serre_quartic", cfg);
  CHECK(serre.passed());
  CHECK(serre.suite == "serre_quartic");
  CHECK(serre.window.find("rank=2") != std::string::npos);
}

TEST_CASE("command-line parsing") {
  {
    const char* argv[] = {"uqrs_verify", "--rank", "3", "--numeric", "2", "3/5", "--suite", "cocycle",
                          "--mode-window", "-1..2", "--max-degree", "3/2"};
    const auto out = parse_command_line(12, argv);
    REQUIRE(out.ok);
    CHECK(out.config.suite.rank == 3);
    CHECK(out.config.suite.numeric);
    CHECK(out.config.suite.q0 == Rational(3, 5));
    CHECK(out.config.suite.mode_window == std::make_pair(-1, 2));
    CHECK(*out.config.suite.max_degree == Rational(3, 2));
    CHECK(out.config.suites == std::vector<std::string>{"cocycle"});
  }
  {
    const char* argv[] = {"uqrs_verify", "--numeric", "2", "-2"};
    const auto out = parse_command_line(4, argv);
    CHECK_FALSE(out.ok);
    CHECK(out.exit_code == kExitConfigError);
  }
  {
    const char* argv[] = {"uqrs_verify", "--suite", "bogus"};
    CHECK(parse_command_line(3, argv).exit_code == kExitConfigError);
  }
  {
    const char* argv[] = {"uqrs_verify", "--rank", "1"};
    CHECK(parse_command_line(3, argv).exit_code == kExitConfigError);
  }
  {
    const char* argv[] = {"uqrs_verify", "--help"};
    const auto out = parse_command_line(2, argv);
    CHECK_FALSE(out.ok);
    CHECK(out.exit_code == kExitPass);
  }
  CHECK_THROWS(parse_mode_window("2..1"));
  CHECK_THROWS(parse_mode_window("1-2"));
  CHECK(parse_mode_window("-2..-1") == std::make_pair(-2, -1));
}

TEST_CASE("batch report is deterministic apart from timings") {
  RunConfig cfg;
  cfg.suite.rank = 2;
  cfg.suites = {"structure_constants", "quadratic_identity"};
  const auto a = run_batch(cfg);
  const auto b = run_batch(cfg);
  CHECK(a.exit_code == kExitPass);
  auto strip = [](const std::string& s) { return s.substr(0, s.find("\"timings\"")); };
  CHECK(strip(a.report) == strip(b.report));
  CHECK(a.report.find("\"schema\"") != std::string::npos);
}

TEST_CASE("swapping p and q preserves the pass/fail pattern on symmetric windows") {
  auto pattern = [](const RelationReport& r) {
    std::map<std::pair<bool, bool>, int> counts;
    for (const auto& inst : r.instances) ++counts[{inst.informational, inst.passed}];
    return counts;
  };
  for (const char* id : {"boson_current", "current_exchange", "serre_cubic"}) {
    SuiteConfig a;
    a.rank = 2;
    a.numeric = true;
    a.max_degree = Rational(1, 2);
    a.max_shifts = 1;
    a.mode_window = std::make_pair(-1, 1);
    SuiteConfig b = a;
    b.p0 = a.q0;
    b.q0 = a.p0;
    const auto ra = run_suite(id, a), rb = run_suite(id, b);
    CAPTURE(id);
    CHECK(ra.passed());
    CHECK(rb.passed());
    CHECK(pattern(ra) == pattern(rb));
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "gridarith/chain.hpp"
#include "gridarith/oracle.hpp"

using namespace gridarith::chain;

namespace {

Rational q(long n, long d) { return Rational(Integer(n), Integer(d)); }

DivisorPartition parts(std::vector<long> ds, long divisor) {
  std::vector<Integer> v(ds.begin(), ds.end());
  return DivisorPartition(std::move(v), Integer(divisor));
}

DivisorPartition random_partition(std::mt19937_64& rng, long divisor, long max_parts) {
  const long k = 1 + static_cast<long>(rng() % static_cast<unsigned long>(std::min(max_parts, divisor)));
  std::vector<Integer> out;
  long left = divisor;
  for (long i = k; i > 1; --i) {
    const long most = left - (i - 1);
    const long d = 1 + static_cast<long>(rng() % static_cast<unsigned long>(most));
    out.emplace_back(d);
    left -= d;
  }
  out.emplace_back(left);
  return DivisorPartition(std::move(out), Integer(divisor));
}

}  // namespace

TEST_CASE("rationals") {
  CHECK(q(10, -4).to_string() == "-5/2");
  CHECK(q(10, -4).denominator() == 2);
  CHECK(q(6, 3).is_integer());
  CHECK(q(1, 3) + q(1, 6) == q(1, 2));
  CHECK(q(1, 3) < q(1, 2));
  CHECK(-q(1, 3) == q(-1, 3));
  CHECK_THROWS_AS(q(1, 0), ChainError);
  CHECK_THROWS_AS(q(1, 2) / Rational(), ChainError);
}

TEST_CASE("partitions") {
  CHECK(parts({13, 10}, 23).size() == 2);
  CHECK(DivisorPartition::of({Integer(12), Integer(9), Integer(2)}).divisor() == 23);
  CHECK_THROWS_AS(parts({13, 9}, 23), ChainError);
  CHECK_THROWS_AS(parts({23, 0}, 23), ChainError);
  CHECK_THROWS_AS(parts({24, -1}, 23), ChainError);
  CHECK_THROWS_AS(parts({}, 0), ChainError);
}

TEST_CASE("two-part chain of 425 / 23") {
  const ChainResult cr = chain_divide(Integer(425), Integer(23), parts({13, 10}, 23));
  REQUIRE(cr.steps.size() == 2);
  CHECK(cr.steps[0].residue == q(425, 13));
  CHECK(cr.steps[1].residue == q(4250, 299));
  CHECK(cr.result == q(425, 23));
  const RoundedChain r = evaluate_rounded(cr, {2, Rounding::truncate});
  CHECK(format_decimal(r.residues[0], 2, Rounding::truncate) == "32.69");
  CHECK(format_decimal(r.residues[1], 2, Rounding::truncate) == "14.21");
  CHECK(format_decimal(r.result, 2, Rounding::truncate) == "18.48");

  const Rational residual = fit_residual(cr, RoundingSpec{2, Rounding::truncate});
  CHECK(residual <= q(1, 10));
  CHECK(residual == r.result - q(425, 23));
  CHECK(fit_residual(cr, std::nullopt) == Rational());
}

TEST_CASE("three-part chain of 425 / 23") {
  const ChainResult cr = chain_divide(Integer(425), Integer(23), parts({12, 9, 2}, 23));
  CHECK(cr.result == q(425, 23));
  const RoundedChain r = evaluate_rounded(cr, {3, Rounding::truncate});
  CHECK(format_decimal(r.residues[0], 3, Rounding::truncate) == "35.416");
  CHECK(format_decimal(r.residues[1], 3, Rounding::truncate) == "13.858");
  CHECK(format_decimal(r.residues[2], 3, Rounding::truncate) == "3.079");
  CHECK(format_decimal(r.result, 3, Rounding::truncate) == "18.479");
  CHECK(format_decimal(r.result, 2, Rounding::half_up) == "18.48");
  CHECK(transitions(cr).monotone_decreasing_r);
}

TEST_CASE("single-part chain is direct division") {
  const ChainResult cr = chain_divide(Integer(1000), Integer(7), parts({7}, 7));
  REQUIRE(cr.steps.size() == 1);
  CHECK(cr.result == q(1000, 7));
  CHECK_THROWS_AS(transitions(cr), ChainError);
  CHECK(expand_chain(cr, [](int, const Integer& d) { return parts({1}, d.get_si()); }, 3).depth() == 0);
}

TEST_CASE("chain_divide rejects bad input") {
  CHECK_THROWS_AS(chain_divide(Integer(5), Integer(0), DivisorPartition()), ChainError);
  CHECK_THROWS_AS(chain_divide(Integer(5), Integer(23), parts({13, 9}, 22)), ChainError);
}

TEST_CASE("expansion keeps the value") {
  const ChainResult cr = chain_divide(Integer(425), Integer(23), parts({13, 10}, 23));
  const auto same = [](int, const Integer&) { return parts({13, 10}, 23); };
  const ChainNode flat = expand_chain(cr, same, 0);
  CHECK(flat.expansion.empty());
  CHECK(flat.chain.result == cr.result);
  const ChainNode once = expand_chain(cr, same, 1);
  CHECK(once.depth() == 1);
  CHECK(once.chain.result == q(425, 23));
  CHECK(once.expansion[0].chain.dividend == q(4250, 13));
  CHECK(once.expansion[0].chain.result == q(4250, 299));

  CHECK_THROWS_AS(expand_chain(cr, [](int, const Integer&) { return parts({13, 9}, 22); }, 1), ChainError);
  CHECK_THROWS_AS(expand_chain(cr, same, -1), ChainError);

  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const long n = 1 + static_cast<long>(rng() % 1'000'000'000'000UL);
    const long d = 1 + static_cast<long>(rng() % 1'000'000UL);
    const ChainResult c = chain_divide(Integer(n), Integer(d), random_partition(rng, d, 16));
    for (int depth = 0; depth <= 4; ++depth) {
      const ChainNode tree = expand_chain(
          c, [&rng](int, const Integer& divisor) { return random_partition(rng, divisor.get_si(), 16); }, depth);
      REQUIRE(tree.chain.result == q(n, d));
      if (c.steps.size() > 1) REQUIRE(tree.depth() <= depth);
    }
  }
}

TEST_CASE("chain identity, partition invariance and the residue recurrence") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 1000; ++i) {
    const long n = 1 + static_cast<long>(rng() % 1'000'000'000'000UL);
    const long d = 1 + static_cast<long>(rng() % 1'000'000UL);
    const ChainResult a = chain_divide(Integer(n), Integer(d), random_partition(rng, d, 16));
    const ChainResult b = chain_divide(Integer(n), Integer(d), random_partition(rng, d, 16));
    REQUIRE(a.result == b.result);
    // Independent check through the oracle's own rationals.
    const gridarith::oracle::Rational expected{gridarith::oracle::BigInteger(n), gridarith::oracle::BigInteger(d)};
    REQUIRE(a.result.numerator().get_str() == expected.numerator().to_string());
    REQUIRE(a.result.denominator().get_str() == expected.denominator().to_string());

    const auto& s = a.steps;
    REQUIRE(s[0].residue == Rational(Integer(n)) / Rational(s[0].divisor_part));
    for (std::size_t k = 1; k < s.size(); ++k) {
      const Integer& below = k == 1 ? a.partition.divisor() : s[k - 1].divisor_part;
      REQUIRE(s[k].residue == s[k - 1].residue * Rational(s[k].divisor_part) / Rational(below));
      REQUIRE(s[k].index == k + 1);
    }
  }
}

TEST_CASE("transitions") {
  const TransitionReport even = transitions(chain_divide(Integer(100), Integer(8), parts({4, 4}, 8)));
  CHECK(even.d_deltas == std::vector<Integer>{0});
  REQUIRE(even.r_deltas.size() == 1);
  CHECK(even.r_deltas[0] == q(25, 2) - q(25, 1));

  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    const long d = 2 + static_cast<long>(rng() % 10'000UL);
    const ChainResult cr = chain_divide(Integer(99991), Integer(d), random_partition(rng, d, 16));
    if (cr.steps.size() < 2) continue;
    const TransitionReport t = transitions(cr);
    REQUIRE(t.r_deltas.size() == cr.steps.size() - 1);
    REQUIRE(t.d_deltas.size() == cr.steps.size() - 1);
    Rational biggest;
    bool decreasing = true;
    for (std::size_t k = 1; k < cr.steps.size(); ++k) {
      const Rational delta = cr.steps[k].residue - cr.steps[k - 1].residue;
      REQUIRE(t.r_deltas[k - 1] == delta);
      biggest = std::max(biggest, delta.abs());
      decreasing = decreasing && cr.steps[k].residue < cr.steps[k - 1].residue;
    }
    REQUIRE(t.max_abs_r_delta == biggest);
    REQUIRE(t.monotone_decreasing_r == decreasing);
  }
}

TEST_CASE("decreasing partitions and decreasing residues (observed, not asserted)") {
  std::mt19937_64 rng(29);
  int decreasing_partitions = 0;
  int decreasing_residues = 0;
  for (int i = 0; i < 500; ++i) {
    const long d = 3 + static_cast<long>(rng() % 5000UL);
    DivisorPartition p = random_partition(rng, d, 8);
    std::vector<Integer> sorted = p.parts();
    std::sort(sorted.begin(), sorted.end(), [](const Integer& a, const Integer& b) { return a > b; });
    if (sorted.size() < 2 || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
    ++decreasing_partitions;
    const ChainResult cr = chain_divide(Integer(1'000'003), Integer(d), DivisorPartition(sorted, Integer(d)));
    decreasing_residues += transitions(cr).monotone_decreasing_r;
  }
  MESSAGE("strictly decreasing partitions: " << decreasing_partitions
                                             << ", with strictly decreasing residues: " << decreasing_residues);
  CHECK(decreasing_partitions > 0);
}

TEST_CASE("decimal formatting") {
  CHECK(format_decimal(q(1, 8), 2, Rounding::half_up) == "0.13");
  CHECK(format_decimal(q(1, 8), 2, Rounding::truncate) == "0.12");
  CHECK(format_decimal(q(-1, 8), 2, Rounding::half_up) == "-0.13");
  CHECK(format_decimal(q(-1, 8), 2, Rounding::truncate) == "-0.12");
  CHECK(format_decimal(q(-1, 1000), 2, Rounding::truncate) == "0.00");
  CHECK(format_decimal(q(1, 20), 2, Rounding::truncate) == "0.05");
  CHECK(format_decimal(q(7, 2), 0, Rounding::half_up) == "4");
  CHECK(format_decimal(q(7, 2), 0, Rounding::truncate) == "3");
  CHECK(format_decimal(q(255, 16), 1, Rounding::truncate, 16) == "F.F");
  CHECK(format_decimal(q(1, 3), 4, Rounding::truncate, 2) == "0.0101");
  CHECK(round_to(q(425, 13), 2, Rounding::truncate) == q(3269, 100));
  CHECK_THROWS_AS(format_decimal(q(1, 3), -1, Rounding::truncate), ChainError);
  CHECK_THROWS_AS(format_decimal(q(1, 3), 2, Rounding::truncate, 40), ChainError);
}

TEST_CASE("CSV export") {
  const ChainResult cr = chain_divide(Integer(425), Integer(23), parts({13, 10}, 23));
  std::ostringstream out;
  write_csv(out, cr, {2, Rounding::truncate});
  CHECK(out.str() ==
        "i,d,r_num,r_den,r_decimal\n"
        "1,13,425,13,32.69\n"
        "2,10,4250,299,14.21\n");
}

#include <doctest.h>

#include <variant>

#include "golden.hpp"
#include "kummer/errors.hpp"
#include "kummer/pairs.hpp"
#include "kummer/primes.hpp"
#include "kummer/zeta.hpp"
#include "synthetic.hpp"

using namespace kummer;
namespace kt = kummer::testing;

TEST_CASE("scanning for irregular pairs") {
    CHECK(scan_irregular(5).empty());
    CHECK(scan_irregular(37) == std::vector<std::uint64_t>{32});
    CHECK(scan_irregular(157) == std::vector<std::uint64_t>{62, 110});

    const auto rows = kt::load_a3_rows();
    const auto pairs = irregular_pairs_up_to(1000);
    REQUIRE(pairs.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(pairs[i].p == rows[i].p);
        CHECK(pairs[i].l == rows[i].l);
        CHECK(pairs[i].order == 1);
    }
}

TEST_CASE("pair construction checks shape, certify checks membership") {
    CHECK_THROWS_AS(IrregularPair(37, 33), PreconditionError);
    CHECK_THROWS_AS(IrregularPair(37, 36), PreconditionError);
    CHECK_NOTHROW(IrregularPair(37, 34));
    CHECK_FALSE(is_member(IrregularPair(37, 34)));
    CHECK_THROWS_AS(certify(37, 34), PreconditionError);
    CHECK(certify(37, 284, 2) == IrregularPair(37, 284, 2));
    CHECK(certify(37, 37580, 3) == IrregularPair(37, 37580, 3));
}

TEST_CASE("Delta values") {
    CHECK(delta(IrregularPair(37, 32)).value == 21);
    CHECK(delta(IrregularPair(59, 44)).value == 26);
    CHECK(delta(IrregularPair(157, 62)).value == 48);
    CHECK_FALSE(delta(IrregularPair(37, 32)).singular());
    CHECK_THROWS_AS(delta(IrregularPair(37, 34)), PreconditionError);
}

TEST_CASE("lambda map and chains") {
    CHECK(lambda_map(IrregularPair(37, 284, 2)) == IrregularPair(37, 32, 1));
    CHECK(lambda_map(IrregularPair(37, 20, 2)) == IrregularPair(37, 20, 1));
    CHECK(lambda_map(IrregularPair(37, 37580, 3)) == IrregularPair(37, 284, 2));
    CHECK_THROWS_AS(lambda_map(IrregularPair(37, 32, 1)), PreconditionError);

    const auto chain = chain_of_pair(IrregularPair(37, 325656968, 6));
    REQUIRE(chain.size() == 6);
    CHECK(chain[1] == IrregularPair(37, 55777784, 5));
    CHECK(chain[2] == IrregularPair(37, 1072544, 4));
    CHECK(chain[5] == IrregularPair(37, 32, 1));
    for (std::size_t i = 1; i < chain.size(); ++i) CHECK(chain[i].l <= chain[i - 1].l);
    CHECK(chain_of_pair(IrregularPair(37, 32)).size() == 1);
    CHECK(chain_of_pair(IrregularPair(37, 284, 2)) ==
          std::vector<IrregularPair>{IrregularPair(37, 284, 2), IrregularPair(37, 32, 1)});
}

TEST_CASE("next order on real data") {
    const NextOrder n = next_order(IrregularPair(37, 32));
    REQUIRE(std::holds_alternative<UniqueChild>(n));
    CHECK(std::get<UniqueChild>(n).s == 7);
    CHECK(std::get<UniqueChild>(n).child == IrregularPair(37, 284, 2));

    // the (157,62) chain has s_7 = 0
    IrregularPair pair(157, 62);
    std::vector<std::uint64_t> digits;
    for (int i = 0; i < 6; ++i) {
        const NextOrder step = next_order(pair, hybrid_oracle());
        REQUIRE(std::holds_alternative<UniqueChild>(step));
        digits.push_back(std::get<UniqueChild>(step).s);
        pair = std::get<UniqueChild>(step).child;
    }
    CHECK(digits == std::vector<std::uint64_t>{40, 145, 67, 29, 69, 0});
}

TEST_CASE("next order on synthetic oracles covers all three cases") {
    const IrregularPair root(5, 2);
    // alpha_0 a unit, Delta = 0
    CHECK(std::holds_alternative<NoDescendant>(next_order(root, kt::FlatOracle(5, 2, 1))));
    // alpha_0 = alpha_1 = 0
    const NextOrder all = next_order(root, kt::FlatOracle(5, 2, 2));
    REQUIRE(std::holds_alternative<AllChildren>(all));
    const auto& kids = std::get<AllChildren>(all).children;
    REQUIRE(kids.size() == 5);
    for (std::uint64_t nu = 0; nu < 5; ++nu) CHECK(kids[nu] == IrregularPair(5, 2 + 4 * nu, 2));
    // Delta = 1 with the zero at t
    for (std::uint64_t t = 0; t < 5; ++t) {
        const NextOrder u = next_order(root, kt::LinearOracle(5, 2, t));
        REQUIRE(std::holds_alternative<UniqueChild>(u));
        CHECK(std::get<UniqueChild>(u).s == t);
        CHECK(delta(root, kt::LinearOracle(5, 2, t)).value == 1);
    }
}

TEST_CASE("lifting by the stepwise algorithm") {
    LiftTrace trace;
    const DigitPair three = lift_order(IrregularPair(37, 32), 3, exact_oracle(), &trace);
    CHECK(three.digits == std::vector<std::uint64_t>{32, 7, 28});
    CHECK(three.index() == 37580);
    CHECK(from_base_p_digits(trace.digits, 37) == 1043);
    CHECK(trace.delta == 21);

    const IrregularPair l3(37, 37580, 3);
    const DigitPair six = lift_order(l3, 2, hybrid_oracle(), &trace);
    CHECK(six.digits == std::vector<std::uint64_t>{32, 7, 28, 21, 30, 4});
    CHECK(six.index() == 325656968);
    CHECK(from_base_p_digits(trace.digits, 37) == 6607);

    const DigitPair twelve = lift_order(l3, 4, hybrid_oracle());
    CHECK(twelve.order() == 12);
    CHECK(twelve.digits == std::vector<std::uint64_t>{32, 7, 28, 21, 30, 4, 17, 26, 13, 32, 35, 27});

    CHECK_THROWS_AS(lift_order(IrregularPair(691, 12), 14), PreconditionError);
    CHECK_THROWS_AS(lift_order(IrregularPair(5, 2), 2, kt::FlatOracle(5, 2, 2)), SingularDeltaError);
}

TEST_CASE("lifting with an index shift") {
    const DigitPair a = lift_with_shift(IrregularPair(691, 12), 10);
    CHECK(a.digits == std::vector<std::uint64_t>{12, 496, 104, 197, 607, 590, 303, 96, 461, 152});

    ShiftOptions none;
    none.forced_shift = 0;
    CHECK(lift_with_shift(IrregularPair(37, 32), 3, exact_oracle(), none) == lift_order(IrregularPair(37, 32), 3));

    const DigitPair b = lift_with_shift(IrregularPair(103, 24), 10);
    REQUIRE(b.digits.size() == 10);
    CHECK(std::vector<std::uint64_t>(b.digits.begin(), b.digits.begin() + 4) ==
          std::vector<std::uint64_t>{24, 2, 87, 55});
}

TEST_CASE("digit notation round-trips for every tabulated row") {
    for (const auto& row : kt::load_a3_rows()) {
        const DigitPair d(row.p, row.digits);
        const IrregularPair pair = d.pair();
        CHECK(pair.order == 10);
        CHECK(DigitPair::from_pair(pair) == d);
        CHECK(mod_floor(pair.l, Integer(row.p - 1)) == row.l);
        CHECK(d.truncated(1).index() == row.l);
    }
    CHECK_THROWS_AS(DigitPair(37, {3, 1}), PreconditionError);
    CHECK_THROWS_AS(DigitPair(37, {32, 37}), PreconditionError);
}

TEST_CASE("Delta is constant along chains up to order 5") {
    for (const auto& root : irregular_pairs_up_to(300)) {
        const std::uint64_t d1 = delta(root).value;
        IrregularPair pair = root;
        for (unsigned n = 2; n <= 5; ++n) {
            const NextOrder step = next_order(pair, hybrid_oracle());
            REQUIRE(std::holds_alternative<UniqueChild>(step));
            const IrregularPair child = std::get<UniqueChild>(step).child;
            CHECK(child.l >= pair.l);
            pair = child;
            CAPTURE(pair.str());
            CHECK(delta(pair, hybrid_oracle()).value == d1);
        }
    }
}

TEST_CASE("stepwise lifting agrees with repeated next order") {
    for (const auto& root : irregular_pairs_up_to(100)) {
        std::vector<std::uint64_t> digits{to_u64(root.l)};
        IrregularPair pair = root;
        for (unsigned n = 2; n <= 5; ++n) {
            const auto step = std::get<UniqueChild>(next_order(pair, hybrid_oracle()));
            digits.push_back(step.s);
            pair = step.child;
        }
        CAPTURE(root.str());
        CHECK(lift_with_shift(root, 5).digits == digits);
    }
}

TEST_CASE("alpha mod p runs through an arithmetic progression with step Delta") {
    for (const auto& pair : irregular_pairs_up_to(100)) {
        const std::uint64_t p = pair.p;
        const std::uint64_t d = delta(pair).value;
        const auto alpha = alpha_sequence(pair, 0, 2 * p + 1, 1);
        int zeros = 0;
        for (std::size_t j = 0; j < alpha.size(); ++j) {
            CAPTURE(pair.str());
            CAPTURE(j);
            if (j > 0) CHECK(mod_u64((alpha[j] - alpha[j - 1]).residue(), p) == d);
            if (j < p && alpha[j].is_zero()) ++zeros;
        }
        CHECK(zeros == 1);
    }
}

TEST_CASE("every irregular pair below 1000 has exactly one order-2 successor") {
    std::size_t order_one = 0, order_two = 0;
    for (const auto& pair : irregular_pairs_up_to(1000)) {
        ++order_one;
        const NextOrder step = next_order(pair);
        REQUIRE(std::holds_alternative<UniqueChild>(step));
        if (is_member(std::get<UniqueChild>(step).child, hybrid_oracle())) ++order_two;
    }
    CHECK(order_one == 81);
    CHECK(order_two == order_one);
}

TEST_CASE("singular trees on synthetic data") {
    const IrregularPair root(5, 2);
    const SingularTree trivial = build_singular_tree(root, 4, kt::FlatOracle(5, 2, 1));
    CHECK(trivial.height() == 0);
    CHECK(trivial.leaf_count() == 1);

    const kt::FlatOracle one_level(5, 2, 2);
    const SingularTree t1 = build_singular_tree(root, 4, one_level);
    CHECK(t1.height() == 1);
    CHECK(t1.leaf_count() == 5);
    for (const auto& c : t1.children) {
        CHECK(c.node.order == 2);
        CHECK(is_member(c.node, one_level));
        CHECK(delta(c.node, one_level).value == 0);
    }
    for (std::uint64_t n = 2; n < 200; n += 4) CHECK(singular_height(t1, Integer(n)) == 1);
    CHECK_THROWS_AS(singular_height(t1, Integer(4)), PreconditionError);

    const kt::FlatOracle two_levels(5, 2, 3);
    const SingularTree t2 = build_singular_tree(root, 4, two_levels);
    CHECK(t2.height() == 2);
    CHECK(t2.leaf_count() == 25);
    for (const auto& c : t2.children)
        for (const auto& g : c.children) {
            CHECK(g.node.order == 3);
            CHECK(delta(g.node, two_levels).value == 0);
        }
    // depth caps the expansion
    CHECK(build_singular_tree(root, 1, two_levels).height() == 1);

    CHECK_THROWS_AS(build_singular_tree(IrregularPair(37, 32), 2), PreconditionError);
    CHECK_THROWS_AS(build_singular_tree(root, 2, kt::LinearOracle(5, 2, 1)), PreconditionError);
}

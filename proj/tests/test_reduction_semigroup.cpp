#include <doctest.h>

#include "sauto/reduction_semigroup.hpp"
#include "test_support.hpp"

using namespace sauto;
using namespace sauto::testing;

TEST_CASE("instance validation") {
    PcpInstance good = sgr_solv();
    CHECK_NOTHROW(good.check());
    CHECK(good.max_tile_length() == 1);
    CHECK(good.index_symbols() == std::vector<std::string>{"1"});
    CHECK(good.is_solution({"1"}));
    CHECK_FALSE(good.is_solution({}));
    CHECK_FALSE(sgr_unsolv().is_solution({"1"}));
    CHECK_FALSE(sgr_unsolv().is_solution({"1", "1"}));

    PcpInstance empty_tile = good;
    empty_tile.phi[0] = {};
    CHECK_THROWS_AS(empty_tile.check(), std::invalid_argument);

    PcpInstance clash = good;
    clash.lambda = {"1", "y"};
    clash.phi = {{"1"}};
    clash.psi = {{"1"}};
    CHECK_THROWS_AS(clash.check(), std::invalid_argument);

    PcpInstance small = good;
    small.lambda = {"x"};
    CHECK_THROWS_AS(small.check(), std::invalid_argument);

    PcpInstance same_marks = good;
    same_marks.lambda_sharp = "x";
    same_marks.lambda_r = "x";
    CHECK_THROWS_AS(same_marks.check(), std::invalid_argument);
}

TEST_CASE("build produces the expected shape for the solvable fixture") {
    SemigroupReduction red = SemigroupReduction::build(sgr_solv());
    const Transducer& t = red.automaton();

    CHECK(t.state_count() == 5); // x, y, 1, #1, #2
    CHECK(t.letter_count() == 13);
    CHECK(validate(t.spec()).ok());

    const SemigroupSymbols& sym = red.symbols();
    CHECK(sym.lambda_sharp == "x"); // smallest lambda symbol
    CHECK(sym.lambda_r == "y");
    CHECK(sym.gamma == std::vector<std::string>{"x", "y", "1"});

    // the probe letter tells the two markers apart
    StateId m1 = t.state(sym.mark1), m2 = t.state(sym.mark2);
    LetterId iota = t.letter(sym.iota);
    CHECK(t.letter_name(t.output(m1, iota)) == sym.alpha);
    CHECK(t.letter_name(t.output(m2, iota)) == sym.beta);
    CHECK(t.state_name(t.next(m1, iota)) == sym.lambda_sharp);

    // index state 1 starts the tile chain on alpha
    StateId one = t.state("1");
    LetterId alpha = t.letter(sym.alpha);
    CHECK(t.letter_name(t.output(one, alpha)) == sym.alpha_prime);
    CHECK(t.state_name(t.next(one, alpha)) == "x"); // phi(1)

    // markers copy the duplicated letter on the base alphabet
    StateId sharp = t.state(sym.lambda_sharp);
    for (const auto& c : sym.gamma) {
        LetterId a = t.letter(c);
        CHECK(t.output(m1, a) == t.output(sharp, a));
        CHECK(t.next(m1, a) == t.next(sharp, a));
        CHECK(t.output(m2, a) == t.output(sharp, a));
        CHECK(t.next(m2, a) == t.next(sharp, a));
    }
}

TEST_CASE("building requires a supported free basis") {
    PcpInstance longer = sgr_solv();
    longer.phi = {{"x", "x"}};
    longer.psi = {{"x"}};
    CHECK(longer.max_tile_length() == 2);
    CHECK_THROWS_AS((void)SemigroupReduction::build(longer), UnsupportedOperation);
}

TEST_CASE("projections") {
    SemigroupReduction red = SemigroupReduction::build(sgr_solv());
    const Transducer& t = red.automaton();

    CHECK(red.pi(seq(t, "x,1,y")) == std::vector<std::string>{"x", "1", "y"});
    CHECK(red.pi(StateSeq{}).empty());
    CHECK(red.r_len(StateSeq{}) == 0);
    CHECK(red.r_len(seq(t, "x,y")) == 2);
    CHECK(red.r_equiv(seq(t, "x,y"), seq(t, "x,y")));
    CHECK_FALSE(red.r_equiv(seq(t, "x"), seq(t, "y")));
    CHECK_THROWS_AS((void)red.pi(seq(t, "#1")), std::invalid_argument);

    CHECK(red.mark_projection(seq(t, "#1,1,#2")) == std::vector<int>{1, 2});
    CHECK(red.mark_projection(seq(t, "x,y,1")).empty());
    CHECK(red.pi_prime(seq(t, "#1,1,#2")) == std::vector<std::string>{"#1", "1", "#2"});
    CHECK(red.pi_prime(StateSeq{}).empty());
}

TEST_CASE("pi flattens composite word-states") {
    // the projection itself is independent of the automaton, so a synthetic
    // basis with a length-2 word-state exercises the flattening
    FreeBasis basis = union_of_powers_basis(f2(), 2);
    CHECK(basis.pi_seq({basis.automaton.state("(x,y)"), basis.automaton.state("x")}) ==
          std::vector<std::string>{"x", "y", "x"});
    CHECK(basis.pi_seq({basis.automaton.state("(x,y)")}) ==
          basis.pi_seq({basis.automaton.state("x"), basis.automaton.state("y")}));
}

TEST_CASE("block factorization") {
    SemigroupReduction red = SemigroupReduction::build(sgr_solv());
    const Transducer& t = red.automaton();

    BlockFactorization f1 = red.factorize_blocks(seq(t, "#1"));
    CHECK(f1.mark_count() == 1);
    CHECK(f1.marks == std::vector<int>{1});
    CHECK(f1.blocks[0].empty());
    CHECK(f1.blocks[1].empty());

    BlockFactorization f2 = red.factorize_blocks(seq(t, "x,#2,y,1"));
    CHECK(f2.mark_count() == 1);
    CHECK(f2.marks == std::vector<int>{2});
    CHECK(f2.blocks[1] == seq(t, "x"));
    CHECK(f2.blocks[0] == seq(t, "y,1"));

    BlockFactorization f3 = red.factorize_blocks(seq(t, "x,y"));
    CHECK(f3.mark_count() == 0);
    CHECK(f3.blocks[0] == seq(t, "x,y"));

    // marks are numbered from the right
    BlockFactorization f4 = red.factorize_blocks(seq(t, "#2,x,#1"));
    CHECK(f4.marks == std::vector<int>{1, 2});
    CHECK(f4.blocks[1] == seq(t, "x"));
}

TEST_CASE("compatibility") {
    SemigroupReduction red = SemigroupReduction::build(sgr_solv());
    const Transducer& t = red.automaton();

    CHECK(red.compatible(seq(t, "#1,1,#1"), seq(t, "#1,1,#2")));
    CHECK_FALSE(red.compatible(seq(t, "#1"), seq(t, "#1,#1")));
    CHECK(red.compatible(seq(t, "x,y"), seq(t, "x,y")));
    CHECK_FALSE(red.compatible(seq(t, "#1,x"), seq(t, "#1,y")));
    CHECK(red.compatible(StateSeq{}, StateSeq{}));
}

TEST_CASE("shift law closed form") {
    SemigroupReduction red = SemigroupReduction::build(sgr_solv());
    const Transducer& t = red.automaton();

    // single marker: everything collapses to the duplicated letter
    CHECK(red.shift_law(seq(t, "#1"), 1) == seq(t, "x"));
    // x #1 y: block y feeds one filler
    CHECK(red.shift_law(seq(t, "x,#1,y"), 1) == seq(t, "x,x,y"));
    // two markers removed: lambda_sharp then one filler
    CHECK(red.shift_law(seq(t, "#2,#1"), 2) == seq(t, "x,y"));

    CHECK_THROWS_AS((void)red.shift_law(seq(t, "#1"), 0), std::invalid_argument);
    CHECK_THROWS_AS((void)red.shift_law(seq(t, "#1"), 2), std::invalid_argument);
    CHECK_THROWS_AS((void)red.shift_law(seq(t, "x,y"), 1), std::invalid_argument);

    // the closed form agrees with the dual action for every sequence and shift
    LetterId a = t.letter(red.symbols().a);
    StateSeq p;
    for (bool more = true; more; more = next_sequence(p, t.state_count(), 4)) {
        std::size_t marks = red.factorize_blocks(p).mark_count();
        for (unsigned mu = 1; mu <= marks; ++mu) {
            CHECK(red.shift_law(p, mu) == t.dual_act(p, Word(mu, a)));
        }
    }
}

TEST_CASE("witness relation and separation of the markers") {
    SemigroupReduction red = SemigroupReduction::build(sgr_solv());
    const Transducer& t = red.automaton();

    Relation rel = red.witness_relation({"1"});
    CHECK(rel.left == seq(t, "#1,1,#1"));
    CHECK(rel.right == seq(t, "#1,1,#2"));
    CHECK(decide_equal(t, rel.left, rel.right).equal);

    // yet the markers themselves are separated, by the probe letter
    Decision d = decide_equal(t, seq(t, "#1"), seq(t, "#2"));
    REQUIRE_FALSE(d.equal);
    CHECK(d.separator == Word{t.letter(red.symbols().iota)});

    CHECK_THROWS_AS((void)red.witness_relation({}), std::invalid_argument);

    SemigroupReduction neg = SemigroupReduction::build(sgr_unsolv());
    CHECK_THROWS_AS((void)neg.witness_relation({"1"}), std::invalid_argument);
}

TEST_CASE("solution extraction") {
    SemigroupReduction red = SemigroupReduction::build(sgr_solv());
    const Transducer& t = red.automaton();

    Relation rel = red.witness_relation({"1"});
    CHECK(red.extract_solution(rel.left, rel.right) == std::vector<std::string>{"1"});
    CHECK(red.extract_solution(rel.right, rel.left) == std::vector<std::string>{"1"});

    // a trailing block below the differing markers
    StateSeq left = seq(t, "#1,1,#1,y");
    StateSeq right = seq(t, "#1,1,#2,y");
    REQUIRE(decide_equal(t, left, right).equal);
    CHECK(red.extract_solution(left, right) == std::vector<std::string>{"1"});

    // markers differing above the bottom one force a shift first
    StateSeq deep_left = seq(t, "#1,1,#1,#2");
    StateSeq deep_right = seq(t, "#1,1,#2,#2");
    REQUIRE(decide_equal(t, deep_left, deep_right).equal);
    CHECK(red.extract_solution(deep_left, deep_right) == std::vector<std::string>{"1"});

    // equal marker projections are rejected
    CHECK_THROWS_AS((void)red.extract_solution(seq(t, "x"), seq(t, "x")), std::invalid_argument);
    // non-equal sequences are rejected
    CHECK_THROWS_AS((void)red.extract_solution(seq(t, "#1"), seq(t, "#2")), std::invalid_argument);
}

TEST_CASE("length value") {
    SemigroupReduction red = SemigroupReduction::build(sgr_solv());
    const Transducer& t = red.automaton();
    CHECK(red.length_value(seq(t, "#1,1,#2")) == 3);
    CHECK(red.length_value(StateSeq{}) == 0);
    CHECK(red.length_value(seq(t, "x,y,1")) == 3);
}

TEST_CASE("equal projections imply equal action") {
    // over marker-free sequences, projection equality is action equality
    SemigroupReduction red = SemigroupReduction::build(sgr_solv());
    const Transducer& t = red.automaton();
    StateSeq markless;
    std::vector<StateSeq> rhat_seqs;
    StateSeq p;
    while (next_sequence(p, 3, 3)) rhat_seqs.push_back(p); // states 0..2 are x, y, 1
    for (const StateSeq& u : rhat_seqs) {
        for (const StateSeq& v : rhat_seqs) {
            if (red.r_equiv(u, v)) CHECK(decide_equal(t, u, v).equal);
        }
    }
}

TEST_CASE("every relation is compatible and preserves the length value") {
    for (const PcpInstance& instance : {sgr_solv(), sgr_unsolv()}) {
        SemigroupReduction red = SemigroupReduction::build(instance);
        for (const Relation& rel : enumerate_relations(red.automaton(), 3)) {
            CHECK(red.compatible(rel.left, rel.right));
            CHECK(red.length_value(rel.left) == red.length_value(rel.right));
        }
    }
}

TEST_CASE("compatible sequences with equal marker projections are equal") {
    SemigroupReduction red = SemigroupReduction::build(sgr_solv());
    const Transducer& t = red.automaton();
    std::mt19937 rng(97);
    int hits = 0;
    for (int i = 0; i < 4000 && hits < 200; ++i) {
        StateSeq u = random_seq(t, rng, 4);
        StateSeq v = random_seq(t, rng, 4);
        if (red.compatible(u, v) && red.mark_projection(u) == red.mark_projection(v)) {
            ++hits;
            CHECK(decide_equal(t, u, v).equal);
        }
    }
    CHECK(hits > 0);
}

TEST_CASE("unsolvable fixture has no relations at all") {
    SemigroupReduction red = SemigroupReduction::build(sgr_unsolv());
    std::vector<Relation> relations = enumerate_relations(red.automaton(), 3);
    for (const Relation& rel : relations) {
        CHECK(red.pi_prime(rel.left) == red.pi_prime(rel.right));
    }
    // with single-letter tiles the projection is injective, so none exist
    CHECK(relations.empty());
}

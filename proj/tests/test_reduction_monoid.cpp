#include <doctest.h>

#include "sauto/reduction_monoid.hpp"
#include "test_support.hpp"

using namespace sauto;
using namespace sauto::testing;

TEST_CASE("padding a plain instance") {
    PcpInstance plain = sgr_solv(); // single tile x / x
    EpcpInstance padded = pad_instance(plain, "e");
    CHECK(padded.length() == 2);
    CHECK(padded.phi == std::vector<std::vector<std::string>>{{"x", "e"}});
    CHECK(padded.psi == std::vector<std::vector<std::string>>{{"x", "e"}});

    PcpInstance two = sgr_solv();
    two.phi = {{"x", "x"}, {"y"}};
    two.psi = {{"x"}, {"x", "y"}};
    EpcpInstance padded2 = pad_instance(two, "e");
    CHECK(padded2.phi == std::vector<std::vector<std::string>>{{"x", "x"}, {"y", "e"}});
    CHECK(padded2.psi == std::vector<std::vector<std::string>>{{"x", "e"}, {"x", "y"}});

    // stripping the padding recovers the original tiles
    for (std::size_t i = 0; i < two.phi.size(); ++i) {
        CHECK(padded2.strip(padded2.phi[i]) == two.phi[i]);
        CHECK(padded2.strip(padded2.psi[i]) == two.psi[i]);
    }

    PcpInstance clash = sgr_solv();
    clash.lambda = {"x", "e"};
    CHECK_THROWS_AS((void)pad_instance(clash, "e"), std::invalid_argument);
}

TEST_CASE("padded equality") {
    EpcpInstance inst = mon_solv();
    CHECK(inst.padded_equal({"x", "e"}, {"x"}));
    CHECK(inst.padded_equal({"e"}, {}));
    CHECK_FALSE(inst.padded_equal({"x"}, {"y"}));
    CHECK(inst.is_solution({"1", "2"}));
    CHECK_FALSE(inst.is_solution({"1"}));
    CHECK_FALSE(inst.is_solution({"2"}));
    CHECK(mon_triv().is_solution({"1"}));
    CHECK_FALSE(mon_unsolv().is_solution({"1", "1", "1"}));
}

TEST_CASE("instance validation") {
    EpcpInstance ragged = mon_solv();
    ragged.phi[0] = {"x"};
    CHECK_THROWS_AS(ragged.check(), std::invalid_argument);

    EpcpInstance short_tiles = mon_solv();
    short_tiles.phi = {{"x"}, {"y"}};
    short_tiles.psi = {{"x"}, {"x"}};
    CHECK_THROWS_AS(short_tiles.check(), std::invalid_argument); // length must be >= 2

    EpcpInstance pad_in_lambda = mon_solv();
    pad_in_lambda.lambda = {"x", "y", "e"};
    CHECK_THROWS_AS(pad_in_lambda.check(), std::invalid_argument);
}

TEST_CASE("build produces the expected shape") {
    MonoidReduction red = MonoidReduction::build(mon_solv());
    const Transducer& t = red.automaton();

    CHECK(t.state_count() == 7); // x, y, 1, 2, e, #1, #2
    CHECK(validate(t.spec()).ok());
    // gamma (4) + a, b (2) + iota, f_alpha, f_beta, f (4)
    // + alpha_0, alpha_L, beta_0, beta_L (4) + per-index chain letters (4)
    CHECK(t.letter_count() == 18);

    const MonoidSymbols& sym = red.symbols();
    CHECK(acts_as_identity(t, seq(t, "e")));

    StateId m1 = t.state(sym.mark1), m2 = t.state(sym.mark2);
    LetterId iota = t.letter(sym.iota);
    CHECK(t.letter_name(t.output(m1, iota)) == sym.alpha0);
    CHECK(t.letter_name(t.output(m2, iota)) == sym.beta0);

    // markers act like the identity on the base alphabet
    for (const auto& c : sym.gamma) {
        LetterId a = t.letter(c);
        CHECK(t.output(m1, a) == a);
        CHECK(t.state_name(t.next(m1, a)) == sym.padding);
        CHECK(t.output(m2, a) == a);
    }
}

TEST_CASE("tile chains consume an index L times") {
    MonoidReduction red = MonoidReduction::build(mon_solv());
    const Transducer& t = red.automaton();
    const MonoidSymbols& sym = red.symbols();
    const EpcpInstance& inst = red.instance();

    // L(i) o alpha = alpha_L and L(i) . alpha = phi(i), for both entry letters
    for (const std::string& i : inst.index_symbols()) {
        StateSeq chain(inst.length(), t.state(i));
        std::size_t n = std::stoul(i);
        for (const std::string& entry : {sym.alpha0, sym.alphaL}) {
            Word probe{t.letter(entry)};
            CHECK(t.act(chain, probe) == Word{t.letter(sym.alphaL)});
            CHECK(t.dual_act(chain, probe) == parse_state_seq(t, inst.phi[n - 1][0] + "," +
                                                                     inst.phi[n - 1][1]));
        }
        for (const std::string& entry : {sym.beta0, sym.betaL}) {
            Word probe{t.letter(entry)};
            CHECK(t.act(chain, probe) == Word{t.letter(sym.betaL)});
            CHECK(t.dual_act(chain, probe) == parse_state_seq(t, inst.psi[n - 1][0] + "," +
                                                                     inst.psi[n - 1][1]));
        }
    }

    // an incomplete chain is absorbed into the failure letter
    StateSeq half{t.state("1")};
    Word out = t.act(half, Word{t.letter(sym.alpha0)});
    CHECK(t.letter_name(out[0]) == sym.alpha_chain.at({"1", 1}));
    StateSeq mark_after{t.state(sym.mark1)};
    CHECK(t.act(mark_after, Word{t.letter(sym.alpha_chain.at({"1", 1}))}) ==
          Word{t.letter(sym.f_alpha)});
    // a completed chain hitting a marker yields the accept letter
    CHECK(t.act(mark_after, Word{t.letter(sym.alphaL)}) == Word{t.letter(sym.f)});
}

TEST_CASE("repeat homomorphism") {
    MonoidReduction red = MonoidReduction::build(mon_solv());
    CHECK(red.repeat_hom({"1", "2"}) == std::vector<std::string>{"1", "1", "2", "2"});
    CHECK(red.repeat_hom({}).empty());

    MonoidReduction triv = MonoidReduction::build(mon_triv());
    CHECK(triv.repeat_hom({"1"}) == std::vector<std::string>{"1", "1"});
}

TEST_CASE("block factorization and compatibility with padding") {
    MonoidReduction red = MonoidReduction::build(mon_solv());
    const Transducer& t = red.automaton();

    CHECK(red.compatible(seq(t, "#1,e,1"), seq(t, "#1,1")));
    CHECK(red.compatible(seq(t, "#1"), seq(t, "#2"))); // blocks empty; marks may differ
    CHECK(red.compatible(seq(t, "e"), StateSeq{}));
    CHECK_FALSE(red.compatible(seq(t, "#1,x"), seq(t, "#1,y")));
    CHECK_FALSE(red.compatible(seq(t, "#1"), seq(t, "#1,#1")));

    BlockFactorization f = red.factorize_blocks(seq(t, "x,#2,e,1"));
    CHECK(f.mark_count() == 1);
    CHECK(f.marks == std::vector<int>{2});
    CHECK(f.blocks[1] == seq(t, "x"));
    CHECK(f.blocks[0] == seq(t, "e,1"));
}

TEST_CASE("shift law closed form") {
    MonoidReduction red = MonoidReduction::build(mon_solv());
    const Transducer& t = red.automaton();

    CHECK(red.shift_law(seq(t, "#1"), 1) == seq(t, "e"));
    CHECK(red.shift_law(seq(t, "x,#2,1"), 1) == seq(t, "x,e,e"));
    CHECK(red.shift_law(seq(t, "x,#2,1"), 0) == seq(t, "x,#2,1")); // empty shift

    CHECK_THROWS_AS((void)red.shift_law(seq(t, "#1"), 2), std::invalid_argument);

    LetterId a = t.letter(red.symbols().a);
    StateSeq p;
    for (bool more = true; more; more = next_sequence(p, t.state_count(), 4)) {
        std::size_t marks = red.factorize_blocks(p).mark_count();
        for (unsigned mu = 0; mu <= marks; ++mu) {
            CHECK(red.shift_law(p, mu) == t.dual_act(p, Word(mu, a)));
        }
    }
}

TEST_CASE("witness relation") {
    MonoidReduction triv = MonoidReduction::build(mon_triv());
    const Transducer& tt = triv.automaton();
    Relation rel_triv = triv.witness_relation({"1"});
    CHECK(rel_triv.left == seq(tt, "#1,1,1,#1"));
    CHECK(rel_triv.right == seq(tt, "#1,1,1,#2"));
    CHECK(decide_equal(tt, rel_triv.left, rel_triv.right).equal);

    MonoidReduction red = MonoidReduction::build(mon_solv());
    const Transducer& t = red.automaton();
    Relation rel = red.witness_relation({"1", "2"});
    CHECK(rel.left == seq(t, "#1,1,1,2,2,#1"));
    CHECK(rel.right == seq(t, "#1,1,1,2,2,#2"));
    CHECK(decide_equal(t, rel.left, rel.right).equal);

    CHECK_THROWS_AS((void)red.witness_relation({"1"}), std::invalid_argument);
    CHECK_THROWS_AS((void)MonoidReduction::build(mon_unsolv()).witness_relation({"1"}),
                    std::invalid_argument);

    // markers stay separated
    Decision d = decide_equal(t, seq(t, "#1"), seq(t, "#2"));
    REQUIRE_FALSE(d.equal);
    CHECK(d.separator == Word{t.letter(red.symbols().iota)});
}

TEST_CASE("solution extraction") {
    MonoidReduction red = MonoidReduction::build(mon_solv());
    const Transducer& t = red.automaton();

    Relation rel = red.witness_relation({"1", "2"});
    std::vector<std::string> decoded = red.extract_solution(rel.left, rel.right);
    CHECK(red.instance().is_solution(decoded));
    CHECK(decoded == std::vector<std::string>{"1", "2"});

    MonoidReduction triv = MonoidReduction::build(mon_triv());
    Relation rel2 = triv.witness_relation({"1"});
    CHECK(triv.extract_solution(rel2.left, rel2.right) == std::vector<std::string>{"1"});

    // padding inside the decoded block is ignored
    StateSeq left = parse_state_seq(t, "#1,1,e,1,2,2,#1");
    StateSeq right = parse_state_seq(t, "#1,1,1,e,2,2,#2");
    REQUIRE(decide_equal(t, left, right).equal);
    CHECK(red.extract_solution(left, right) == std::vector<std::string>{"1", "2"});

    // a deeper differing marker needs a shift first
    StateSeq deep_left = parse_state_seq(t, "#1,1,1,2,2,#1,#2");
    StateSeq deep_right = parse_state_seq(t, "#1,1,1,2,2,#2,#2");
    REQUIRE(decide_equal(t, deep_left, deep_right).equal);
    CHECK(red.extract_solution(deep_left, deep_right) == std::vector<std::string>{"1", "2"});

    CHECK_THROWS_AS((void)red.extract_solution(seq(t, "e"), StateSeq{}), std::invalid_argument);
    CHECK_THROWS_AS((void)red.extract_solution(seq(t, "#1"), seq(t, "#2")), std::invalid_argument);
}

TEST_CASE("free presentation check") {
    MonoidReduction unsolv = MonoidReduction::build(mon_unsolv());
    auto r1 = unsolv.check_free_presentation(3);
    CHECK(r1.consistent);
    CHECK_FALSE(r1.violation.has_value());

    MonoidReduction triv = MonoidReduction::build(mon_triv());
    auto r2 = triv.check_free_presentation(4);
    REQUIRE_FALSE(r2.consistent);
    REQUIRE(r2.violation.has_value());
    CHECK(decide_equal(triv.automaton(), r2.violation->left, r2.violation->right).equal);
    CHECK(triv.mark_projection(r2.violation->left) != triv.mark_projection(r2.violation->right));

    // no length-1 sequences can relate differing marker projections
    CHECK(triv.check_free_presentation(1).consistent);
    CHECK(MonoidReduction::build(mon_solv()).check_free_presentation(1).consistent);
}

TEST_CASE("relations are compatible and transparent to padding") {
    for (const EpcpInstance& instance : {mon_triv(), mon_unsolv()}) {
        MonoidReduction red = MonoidReduction::build(instance);
        const Transducer& t = red.automaton();
        std::vector<Relation> relations = enumerate_relations(t, 3);
        CHECK_FALSE(relations.empty()); // padding alone produces relations
        for (const Relation& rel : relations) {
            CHECK(red.compatible(rel.left, rel.right));
        }

        // inserting the padding state anywhere never changes any verdict
        std::mt19937 rng(11);
        StateId pad = t.state(red.symbols().padding);
        for (int i = 0; i < 150; ++i) {
            StateSeq p = random_seq(t, rng, 3);
            StateSeq q = random_seq(t, rng, 3);
            bool before = decide_equal(t, p, q).equal;
            StateSeq padded = p;
            std::uniform_int_distribution<std::size_t> pos(0, padded.size());
            padded.insert(padded.begin() + pos(rng), pad);
            CHECK(decide_equal(t, padded, q).equal == before);
        }
    }
}

TEST_CASE("compatible sequences with equal marker projections are equal") {
    MonoidReduction red = MonoidReduction::build(mon_solv());
    const Transducer& t = red.automaton();
    std::mt19937 rng(101);
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

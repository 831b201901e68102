#include <doctest.h>

#include "sauto/free_constructions.hpp"
#include "test_support.hpp"

using namespace sauto;
using namespace sauto::testing;

TEST_CASE("adding machine increments reverse-binary numbers") {
    Transducer am = adding_machine();
    CHECK(am.state_count() == 2);
    CHECK(am.letter_count() == 2);

    CHECK(am.act(seq(am, "q"), word(am, "0,0,0")) == word(am, "1,0,0"));
    CHECK(am.act(seq(am, "q"), word(am, "1,1,0")) == word(am, "0,0,1"));

    // id acts like the identity on all short words
    Word u;
    for (bool more = true; more; more = next_sequence(u, am.letter_count(), 6)) {
        CHECK(am.act(seq(am, "id"), u) == u);
    }

    // q^i applied to zeros spells out i in binary, least significant bit first
    for (unsigned i = 0; i < 64; ++i) {
        Word out = am.act(StateSeq(i, am.state("q")), Word(6, am.letter("0")));
        unsigned value = 0;
        for (std::size_t j = 0; j < out.size(); ++j) {
            if (am.letter_name(out[j]) == "1") value |= 1u << j;
        }
        CHECK(value == i);
    }
}

TEST_CASE("free_semigroup_automaton separates distinct sequences") {
    CHECK_THROWS_AS((void)free_semigroup_automaton({"x"}), std::invalid_argument);

    Transducer t = f2();
    CHECK(t.act(seq(t, "x"), word(t, "y")) == word(t, "x"));
    CHECK(t.dual_act(seq(t, "x"), word(t, "y")) == seq(t, "y"));
    CHECK(t.act(seq(t, "y,x"), word(t, "x,x")) == word(t, "y,x"));
    CHECK_FALSE(decide_equal(t, seq(t, "x"), seq(t, "y")).equal);

    // all pairs of distinct sequences up to length 5 are separated
    StateSeq p;
    for (bool mp = true; mp; mp = next_sequence(p, t.state_count(), 5)) {
        StateSeq q;
        for (bool mq = true; mq; mq = next_sequence(q, t.state_count(), 5)) {
            if (q.size() > p.size() || (q.size() == p.size() && !(q < p))) break;
            CHECK_FALSE(decide_equal(t, p, q).equal);
        }
    }
}

TEST_CASE("with_identity_state") {
    Transducer ti = f2id();
    CHECK(acts_as_identity(ti, seq(ti, "id")));
    CHECK(decide_equal(ti, seq(ti, "id,x"), seq(ti, "x")).equal);
    CHECK(decide_equal(ti, seq(ti, "x,id"), seq(ti, "x")).equal);
    CHECK_THROWS_AS((void)with_identity_state(f2(), "x"), std::invalid_argument);

    // adding the identity state neither merges nor separates old sequences
    Transducer t = f2();
    StateSeq p;
    for (bool mp = true; mp; mp = next_sequence(p, t.state_count(), 3)) {
        StateSeq q;
        for (bool mq = true; mq; mq = next_sequence(q, t.state_count(), 3)) {
            if (q.size() > p.size() || (q.size() == p.size() && !(q < p))) break;
            CHECK(decide_equal(t, p, q).equal == decide_equal(ti, p, q).equal);
        }
    }
}

TEST_CASE("union_of_powers") {
    Transducer t = f2();
    CHECK(union_of_powers(t, 1) == t);

    Transducer u2 = union_of_powers(t, 2);
    CHECK(u2.state_count() == 6); // x, y and the four pairs

    // a pair state acts exactly like the corresponding two-state sequence
    std::mt19937 rng(3);
    for (int i = 0; i < 100; ++i) {
        Word w = random_word(u2, rng, 4);
        CHECK(u2.act(seq(u2, "(x,y)"), w) == u2.act(seq(u2, "x,y"), w));
    }
    CHECK(decide_equal(u2, seq(u2, "(x,y)"), seq(u2, "x,y")).equal);
    CHECK_FALSE(decide_equal(u2, seq(u2, "(x,y)"), seq(u2, "y,x")).equal);
}

TEST_CASE("union_of_powers_basis projects tuples onto their components") {
    FreeBasis basis = union_of_powers_basis(f2(), 2);
    const Transducer& t = basis.automaton;
    CHECK(basis.pi(t.state("(x,y)")) == std::vector<std::string>{"x", "y"});
    CHECK(basis.pi(t.state("x")) == std::vector<std::string>{"x"});
    CHECK(basis.pi_seq(seq(t, "(x,y),x")) == std::vector<std::string>{"x", "y", "x"});
    CHECK(basis.state_of({"y", "y"}) == t.state("(y,y)"));
    CHECK_FALSE(basis.state_of({"x", "x", "x"}).has_value());

    BasisReport report = validate_free_basis(basis, 2);
    CHECK(report.ok);
}

TEST_CASE("adjoining a free generator is honestly unsupported") {
    CHECK_THROWS_AS((void)adjoin_free_generator(f2(), "g"), UnsupportedOperation);
    CHECK(default_free_basis_provider().max_supported_length() == 1);
}

TEST_CASE("build_free_basis collapses at word length one") {
    FreeBasis basis = build_free_basis({"x", "y"}, {"1"}, 1);
    const Transducer& t = basis.automaton;
    CHECK(t.state_count() == 3);
    CHECK(t.letter_count() == 3);
    for (StateId s = 0; s < t.state_count(); ++s) {
        CHECK(basis.pi(s) == std::vector<std::string>{t.state_name(s)});
    }
    CHECK(validate_free_basis(basis, 3).ok);

    CHECK_THROWS_AS((void)build_free_basis({"x", "y"}, {"1"}, 2), UnsupportedOperation);
    CHECK_THROWS_AS((void)build_free_basis({"x"}, {"1"}, 1), std::invalid_argument);
    CHECK_THROWS_AS((void)build_free_basis({"x", "y"}, {}, 1), std::invalid_argument);
    CHECK_THROWS_AS((void)build_free_basis({"x", "y"}, {"x"}, 1), std::invalid_argument);
}

TEST_CASE("validate_free_basis rejects a corrupted automaton") {
    FreeBasis basis = build_free_basis({"x", "y"}, {"1"}, 1);
    // retarget one transition: state x now ignores input y
    TransducerSpec spec = basis.automaton.spec();
    for (auto& tr : spec.transitions) {
        if (tr.from == "x" && tr.in == "y") tr.to = "x";
    }
    FreeBasis corrupted{Transducer::from_spec(spec), basis.projection};
    BasisReport report = validate_free_basis(corrupted, 3);
    CHECK_FALSE(report.ok);
    CHECK_FALSE(report.detail.empty());
}

TEST_CASE("projection mismatches are reported in both directions") {
    // an automaton whose relations are strictly coarser than the projection
    FreeBasis wrong{f2id(), {{"x"}, {"y"}, {"id"}}};
    BasisReport report = validate_free_basis(wrong, 2);
    CHECK_FALSE(report.ok); // id acts like the empty sequence but projects to "id"
}

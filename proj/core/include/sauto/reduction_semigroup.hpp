// reduction_semigroup.hpp -- encoding a Post correspondence instance into a
// transducer whose generated semigroup is free exactly when the instance has
// no solution.
//
// The construction embeds a free basis over lambda + tile indices, duplicates
// one designated letter into two marker states, and wires up probe letters so
// that a solution word produces a relation between marker-decorated
// sequences, and conversely any relation whose marker projections differ can
// be decoded back into a solution.

#ifndef SAUTO_REDUCTION_SEMIGROUP_HPP
#define SAUTO_REDUCTION_SEMIGROUP_HPP

#include "sauto/free_constructions.hpp"
#include "sauto/word_problem.hpp"

namespace sauto {

/// A Post correspondence instance: two lists of non-empty tiles over lambda,
/// indexed by 1..n.  A solution is a non-empty index word whose two tile
/// concatenations coincide.
struct PcpInstance {
    std::vector<std::string> lambda;                    // |lambda| >= 2
    std::vector<std::vector<std::string>> phi;          // tile list, phi[i] for index i+1
    std::vector<std::vector<std::string>> psi;          // same length as phi
    std::optional<std::string> lambda_sharp;            // default: smallest lambda symbol
    std::optional<std::string> lambda_r;                // default: next smallest

    /// Index symbols "1".."n" in order.
    std::vector<std::string> index_symbols() const;
    unsigned max_tile_length() const;

    /// Tile concatenation of an index word (leftmost index applied first):
    /// image(phi, "i_K ... i_1") = phi(i_K) ... phi(i_1).
    std::vector<std::string> image(const std::vector<std::vector<std::string>>& tiles,
                                   const std::vector<std::string>& index_word) const;
    bool is_solution(const std::vector<std::string>& index_word) const;

    /// Checks the structural invariants; throws std::invalid_argument.
    void check() const;
};

/// Names of the distinguished states and letters of a built reduction.
struct SemigroupSymbols {
    std::string lambda_sharp; // the duplicated letter-state
    std::string lambda_r;     // the filler letter-state, != lambda_sharp
    std::string mark1, mark2; // the two copies of lambda_sharp
    std::string a, b;         // block-shift letter and its frozen image
    std::string iota;         // probe that splits mark1 from mark2
    std::string alpha, alpha_prime, f_alpha;
    std::string beta, beta_prime, f_beta;
    std::string f;
    std::vector<std::string> gamma; // alphabet of the embedded free basis
};

struct BlockFactorization {
    // blocks[j] is the subsequence between marks, blocks[0] rightmost;
    // marks[j-1] is the mark (1 or 2) directly right of blocks[j].
    std::vector<StateSeq> blocks;
    std::vector<int> marks;

    std::size_t mark_count() const { return marks.size(); }
};

class SemigroupReduction {
  public:
    static SemigroupReduction
    build(const PcpInstance& instance,
          const FreeBasisProvider& provider = default_free_basis_provider());

    const Transducer& automaton() const { return automaton_; }
    const SemigroupSymbols& symbols() const { return symbols_; }
    const FreeBasis& basis() const { return basis_; }
    const PcpInstance& instance() const { return instance_; }

    bool is_mark(StateId s) const;
    /// 1 or 2 for marker states, 0 otherwise.
    int mark_index(StateId s) const;
    bool is_index_state(StateId s) const;

    /// Projection of a marker-free sequence onto base symbols.
    /// Throws std::invalid_argument if the sequence contains a marker.
    std::vector<std::string> pi(const StateSeq& p) const;
    bool r_equiv(const StateSeq& p, const StateSeq& q) const;
    std::size_t r_len(const StateSeq& p) const;

    /// Marker subword (values 1/2, leftmost-first).
    std::vector<int> mark_projection(const StateSeq& p) const;
    /// Projection keeping markers: base symbols for ordinary states, the
    /// marker names for marker states.
    std::vector<std::string> pi_prime(const StateSeq& p) const;

    BlockFactorization factorize_blocks(const StateSeq& p) const;
    /// Same number of blocks and blockwise equal projections.
    bool compatible(const StateSeq& p, const StateSeq& q) const;

    /// Closed form for the residual after mu copies of letter `a`
    /// (1 <= mu <= number of marks): the bottom mu blocks and marks collapse
    /// into lambda_sharp followed by filler states.  Agrees with
    /// dual_act(p, a^mu).
    StateSeq shift_law(const StateSeq& p, unsigned mu) const;

    /// The relation induced by a solution word: both sides read
    /// mark1, the solution indices, then mark1 resp. mark2.
    /// Throws std::invalid_argument if the word is not a solution.
    Relation witness_relation(const std::vector<std::string>& solution) const;

    /// Decodes a relation whose marker projections differ back into a
    /// verified solution word.  Preconditions (equal action, differing
    /// marker projections) are re-checked; internal contract violations
    /// raise std::logic_error.
    std::vector<std::string> extract_solution(const StateSeq& p, const StateSeq& q) const;

    /// Weight of a sequence: projected length for ordinary states, 1 per
    /// marker.  Every relation preserves it.
    std::size_t length_value(const StateSeq& p) const;

  private:
    PcpInstance instance_;
    FreeBasis basis_;
    Transducer automaton_;
    SemigroupSymbols symbols_;
    StateId mark1_ = 0, mark2_ = 0;
    std::vector<int> state_kind_;                         // 0 basis, 1/2 marker
    std::vector<std::vector<std::string>> state_pi_;      // projection per basis state
    std::vector<bool> index_state_;
};

/// Picks a name not colliding with anything in `taken`, starting from `base`
/// and appending apostrophes as needed.
std::string fresh_name(std::string base, const std::vector<std::string>& taken);

} // namespace sauto

#endif

// reduction_monoid.hpp -- encoding a padded correspondence instance into a
// transducer with an identity state whose generated monoid is freely
// presented by the remaining states exactly when the instance has no
// solution.
//
// Tiles are padded to a uniform length L with a neutral symbol; the embedded
// free basis needs no word-states because each index is consumed L times in
// a row, stepping through per-index chain letters.

#ifndef SAUTO_REDUCTION_MONOID_HPP
#define SAUTO_REDUCTION_MONOID_HPP

#include <map>

#include "sauto/reduction_semigroup.hpp"

namespace sauto {

/// A correspondence instance whose tiles all have the same length and may
/// contain the padding symbol; solutions are index words whose tile images
/// agree after erasing the padding.
struct EpcpInstance {
    std::vector<std::string> lambda;
    std::string padding; // not in lambda or the index symbols
    std::vector<std::vector<std::string>> phi;
    std::vector<std::vector<std::string>> psi;

    unsigned length() const; // common tile length, >= 2
    std::vector<std::string> index_symbols() const;

    /// Erases the padding symbol.
    std::vector<std::string> strip(const std::vector<std::string>& word) const;
    bool padded_equal(const std::vector<std::string>& u, const std::vector<std::string>& v) const;

    std::vector<std::string> image(const std::vector<std::vector<std::string>>& tiles,
                                   const std::vector<std::string>& index_word) const;
    bool is_solution(const std::vector<std::string>& index_word) const;

    void check() const;
};

/// Pads every tile of a plain instance on the right up to the common length
/// max(2, longest tile).  Throws std::invalid_argument on a name clash.
EpcpInstance pad_instance(const PcpInstance& instance, const std::string& padding);

struct MonoidSymbols {
    std::string padding;      // the identity state
    std::string mark1, mark2; // the two marker states (identities on the base alphabet)
    std::string a, b;
    std::string iota;
    std::string f_alpha, f_beta, f;
    std::string alpha0, alphaL, beta0, betaL;
    std::map<std::pair<std::string, unsigned>, std::string> alpha_chain; // (index, 1..L-1)
    std::map<std::pair<std::string, unsigned>, std::string> beta_chain;
    std::vector<std::string> gamma;
};

class MonoidReduction {
  public:
    static MonoidReduction build(const EpcpInstance& instance);

    const Transducer& automaton() const { return automaton_; }
    const MonoidSymbols& symbols() const { return symbols_; }
    const EpcpInstance& instance() const { return instance_; }

    bool is_mark(StateId s) const;
    int mark_index(StateId s) const;
    bool is_index_state(StateId s) const;
    bool is_padding_state(StateId s) const { return s == padding_; }

    /// The letterwise repetition i -> i^L applied to an index word.
    std::vector<std::string> repeat_hom(const std::vector<std::string>& index_word) const;

    std::vector<int> mark_projection(const StateSeq& p) const;
    /// Projection keeping markers and erasing the padding state.
    std::vector<std::string> pi_prime(const StateSeq& p) const;

    BlockFactorization factorize_blocks(const StateSeq& p) const;
    /// Same number of blocks and blockwise equality after erasing padding.
    bool compatible(const StateSeq& p, const StateSeq& q) const;

    /// Closed form for the residual after mu copies of letter `a`
    /// (0 <= mu <= number of marks); the erased blocks and marks become
    /// padding states.  Agrees with dual_act(p, a^mu).
    StateSeq shift_law(const StateSeq& p, unsigned mu) const;

    /// (mark1 i^L... mark1, mark1 i^L... mark2) for a solution word.
    Relation witness_relation(const std::vector<std::string>& solution) const;

    std::vector<std::string> extract_solution(const StateSeq& p, const StateSeq& q) const;

    struct FreePresentationReport {
        bool consistent = true; // up to the bound only
        unsigned bound = 0;
        std::optional<Relation> violation; // a relation with differing marker projections
    };
    /// Semi-decision: scans all relations up to the bound for one whose
    /// marker projections differ.  "consistent" is evidence, not a proof.
    FreePresentationReport check_free_presentation(unsigned bound) const;

  private:
    EpcpInstance instance_;
    Transducer automaton_;
    MonoidSymbols symbols_;
    StateId padding_ = 0, mark1_ = 0, mark2_ = 0;
    std::vector<int> state_kind_; // 0 ordinary, 1/2 marker
    std::vector<bool> index_state_;
};

} // namespace sauto

#endif

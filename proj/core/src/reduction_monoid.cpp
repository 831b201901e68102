#include "sauto/reduction_monoid.hpp"

#include <algorithm>
#include <unordered_set>

namespace sauto {

unsigned EpcpInstance::length() const {
    return phi.empty() ? 0 : static_cast<unsigned>(phi.front().size());
}

std::vector<std::string> EpcpInstance::index_symbols() const {
    std::vector<std::string> index;
    for (std::size_t i = 1; i <= phi.size(); ++i) index.push_back(std::to_string(i));
    return index;
}

std::vector<std::string> EpcpInstance::strip(const std::vector<std::string>& word) const {
    std::vector<std::string> result;
    for (const auto& c : word) {
        if (c != padding) result.push_back(c);
    }
    return result;
}

bool EpcpInstance::padded_equal(const std::vector<std::string>& u,
                                const std::vector<std::string>& v) const {
    return strip(u) == strip(v);
}

std::vector<std::string>
EpcpInstance::image(const std::vector<std::vector<std::string>>& tiles,
                    const std::vector<std::string>& index_word) const {
    std::vector<std::string> result;
    for (const auto& i : index_word) {
        std::size_t n = std::stoul(i);
        if (n == 0 || n > tiles.size())
            throw std::invalid_argument("unknown tile index '" + i + "'");
        result.insert(result.end(), tiles[n - 1].begin(), tiles[n - 1].end());
    }
    return result;
}

bool EpcpInstance::is_solution(const std::vector<std::string>& index_word) const {
    return !index_word.empty() && padded_equal(image(phi, index_word), image(psi, index_word));
}

void EpcpInstance::check() const {
    if (phi.empty() || phi.size() != psi.size())
        throw std::invalid_argument("instance: need n >= 1 tiles with both components");
    if (lambda.size() + phi.size() < 2)
        throw std::invalid_argument("instance: need |lambda| + n >= 2");
    std::unordered_set<std::string> letters(lambda.begin(), lambda.end());
    if (letters.size() != lambda.size())
        throw std::invalid_argument("instance: duplicate lambda symbol");
    if (letters.count(padding))
        throw std::invalid_argument("instance: padding symbol occurs in lambda");
    for (const auto& i : index_symbols()) {
        if (letters.count(i) || i == padding)
            throw std::invalid_argument("instance: index symbol '" + i + "' clashes");
    }
    unsigned len = length();
    if (len < 2) throw std::invalid_argument("instance: tiles must have common length >= 2");
    auto check_tiles = [&](const std::vector<std::vector<std::string>>& tiles, const char* side) {
        for (std::size_t n = 0; n < tiles.size(); ++n) {
            if (tiles[n].size() != len)
                throw std::invalid_argument("instance: " + std::string(side) + " tile " +
                                            std::to_string(n + 1) + " breaks the uniform length");
            for (const auto& c : tiles[n]) {
                if (!letters.count(c) && c != padding)
                    throw std::invalid_argument("instance: tile symbol '" + c + "' not declared");
            }
        }
    };
    check_tiles(phi, "phi");
    check_tiles(psi, "psi");
}

EpcpInstance pad_instance(const PcpInstance& instance, const std::string& padding) {
    instance.check();
    if (std::find(instance.lambda.begin(), instance.lambda.end(), padding) != instance.lambda.end())
        throw std::invalid_argument("pad_instance: padding symbol occurs in lambda");
    for (const auto& i : instance.index_symbols()) {
        if (i == padding)
            throw std::invalid_argument("pad_instance: padding symbol clashes with tile index");
    }
    EpcpInstance padded;
    padded.lambda = instance.lambda;
    padded.padding = padding;
    unsigned len = std::max(2u, instance.max_tile_length());
    auto pad = [&](std::vector<std::string> tile) {
        while (tile.size() < len) tile.push_back(padding);
        return tile;
    };
    for (const auto& tile : instance.phi) padded.phi.push_back(pad(tile));
    for (const auto& tile : instance.psi) padded.psi.push_back(pad(tile));
    padded.check();
    return padded;
}

MonoidReduction MonoidReduction::build(const EpcpInstance& instance) {
    instance.check();

    MonoidReduction red;
    red.instance_ = instance;
    unsigned len = instance.length();

    std::vector<std::string> base = instance.lambda;
    std::vector<std::string> index = instance.index_symbols();
    base.insert(base.end(), index.begin(), index.end());
    Transducer rhat = with_identity_state(free_semigroup_automaton(base), instance.padding);

    MonoidSymbols& sym = red.symbols_;
    sym.padding = instance.padding;
    sym.gamma = rhat.letter_names();

    std::vector<std::string> taken = rhat.state_names();
    sym.mark1 = fresh_name("#1", taken);
    taken.push_back(sym.mark1);
    sym.mark2 = fresh_name("#2", taken);
    taken.push_back(sym.mark2);

    std::vector<std::string> letters_taken = sym.gamma;
    auto new_letter = [&letters_taken](std::string base_name) {
        std::string name = fresh_name(std::move(base_name), letters_taken);
        letters_taken.push_back(name);
        return name;
    };
    sym.a = new_letter("a");
    sym.b = new_letter("b");
    sym.iota = new_letter("iota");
    sym.f_alpha = new_letter("f_alpha");
    sym.f_beta = new_letter("f_beta");
    sym.f = new_letter("f");
    sym.alpha0 = new_letter("alpha_0");
    sym.alphaL = new_letter("alpha_L");
    sym.beta0 = new_letter("beta_0");
    sym.betaL = new_letter("beta_L");
    for (const auto& i : index) {
        for (unsigned l = 1; l < len; ++l) {
            sym.alpha_chain[{i, l}] = new_letter("alpha(" + i + "," + std::to_string(l) + ")");
            sym.beta_chain[{i, l}] = new_letter("beta(" + i + "," + std::to_string(l) + ")");
        }
    }

    TransducerSpec spec;
    spec.states = rhat.state_names();
    spec.states.push_back(sym.mark1);
    spec.states.push_back(sym.mark2);
    spec.alphabet = letters_taken;

    spec.transitions = rhat.transitions();
    const std::string& pad = sym.padding;
    for (const std::string& mark : {sym.mark1, sym.mark2}) {
        for (const auto& c : sym.gamma) spec.transitions.push_back({mark, c, c, pad});
    }

    std::unordered_set<std::string> index_set(index.begin(), index.end());
    // tile letter at chain position l (1-based, rightmost first): the written
    // tile is phi_L ... phi_1
    auto tile_letter = [&](const std::vector<std::string>& tile, unsigned l) {
        return tile[tile.size() - l];
    };

    for (const auto& name : rhat.state_names()) {
        if (name == pad) {
            // the padding state is an identity on the whole alphabet
            for (const auto& c : letters_taken) {
                if (std::find(sym.gamma.begin(), sym.gamma.end(), c) == sym.gamma.end())
                    spec.transitions.push_back({pad, c, c, pad});
            }
            continue;
        }
        bool is_index = index_set.count(name) > 0;
        spec.transitions.push_back({name, sym.a, sym.a, pad});
        spec.transitions.push_back({name, sym.b, sym.b, name});
        spec.transitions.push_back({name, sym.iota, sym.iota, pad});
        spec.transitions.push_back({name, sym.f_alpha, sym.f_alpha, pad});
        spec.transitions.push_back({name, sym.f_beta, sym.f_beta, pad});
        spec.transitions.push_back({name, sym.f, sym.f, pad});

        if (is_index) {
            std::size_t n = std::stoul(name);
            const auto& phi_tile = instance.phi[n - 1];
            const auto& psi_tile = instance.psi[n - 1];
            auto chain_out = [&](const std::map<std::pair<std::string, unsigned>, std::string>& chain,
                                 const std::string& last, unsigned l) {
                return l + 1 < len ? chain.at({name, l + 1}) : last;
            };
            // entry letters restart this index's chain
            for (const std::string& entry : {sym.alpha0, sym.alphaL}) {
                spec.transitions.push_back(
                    {name, entry, chain_out(sym.alpha_chain, sym.alphaL, 0), tile_letter(phi_tile, 1)});
            }
            for (const std::string& entry : {sym.beta0, sym.betaL}) {
                spec.transitions.push_back(
                    {name, entry, chain_out(sym.beta_chain, sym.betaL, 0), tile_letter(psi_tile, 1)});
            }
            for (const auto& j : index) {
                for (unsigned l = 1; l < len; ++l) {
                    const std::string& in_a = sym.alpha_chain.at({j, l});
                    const std::string& in_b = sym.beta_chain.at({j, l});
                    if (j == name) {
                        spec.transitions.push_back({name, in_a,
                                                    chain_out(sym.alpha_chain, sym.alphaL, l),
                                                    tile_letter(phi_tile, l + 1)});
                        spec.transitions.push_back({name, in_b,
                                                    chain_out(sym.beta_chain, sym.betaL, l),
                                                    tile_letter(psi_tile, l + 1)});
                    } else {
                        spec.transitions.push_back({name, in_a, sym.f_alpha, pad});
                        spec.transitions.push_back({name, in_b, sym.f_beta, pad});
                    }
                }
            }
        } else {
            for (const std::string& c : {sym.alpha0, sym.alphaL})
                spec.transitions.push_back({name, c, sym.f_alpha, pad});
            for (const std::string& c : {sym.beta0, sym.betaL})
                spec.transitions.push_back({name, c, sym.f_beta, pad});
            for (const auto& entry : sym.alpha_chain)
                spec.transitions.push_back({name, entry.second, sym.f_alpha, pad});
            for (const auto& entry : sym.beta_chain)
                spec.transitions.push_back({name, entry.second, sym.f_beta, pad});
        }
    }

    for (const std::string& mark : {sym.mark1, sym.mark2}) {
        spec.transitions.push_back({mark, sym.a, sym.b, pad});
        spec.transitions.push_back({mark, sym.b, sym.b, mark});
        spec.transitions.push_back({mark, sym.f_alpha, sym.f_alpha, pad});
        spec.transitions.push_back({mark, sym.f_beta, sym.f_beta, pad});
        spec.transitions.push_back({mark, sym.f, sym.f, pad});
        spec.transitions.push_back({mark, sym.alpha0, sym.f_alpha, pad});
        spec.transitions.push_back({mark, sym.beta0, sym.f_beta, pad});
        for (const auto& entry : sym.alpha_chain)
            spec.transitions.push_back({mark, entry.second, sym.f_alpha, pad});
        for (const auto& entry : sym.beta_chain)
            spec.transitions.push_back({mark, entry.second, sym.f_beta, pad});
        // the chain-exit letters are where the markers become visible
        spec.transitions.push_back({mark, sym.alphaL, sym.f, pad});
        spec.transitions.push_back({mark, sym.betaL, sym.f, pad});
    }
    spec.transitions.push_back({sym.mark1, sym.iota, sym.alpha0, pad});
    spec.transitions.push_back({sym.mark2, sym.iota, sym.beta0, pad});

    red.automaton_ = Transducer::from_spec(spec);
    red.padding_ = red.automaton_.state(pad);
    red.mark1_ = red.automaton_.state(sym.mark1);
    red.mark2_ = red.automaton_.state(sym.mark2);
    red.state_kind_.assign(red.automaton_.state_count(), 0);
    red.state_kind_[red.mark1_] = 1;
    red.state_kind_[red.mark2_] = 2;
    red.index_state_.assign(red.automaton_.state_count(), false);
    for (const auto& i : index) red.index_state_[red.automaton_.state(i)] = true;
    return red;
}

bool MonoidReduction::is_mark(StateId s) const { return state_kind_[s] != 0; }
int MonoidReduction::mark_index(StateId s) const { return state_kind_[s]; }
bool MonoidReduction::is_index_state(StateId s) const { return index_state_[s]; }

std::vector<std::string>
MonoidReduction::repeat_hom(const std::vector<std::string>& index_word) const {
    std::vector<std::string> result;
    unsigned len = instance_.length();
    for (const auto& i : index_word) result.insert(result.end(), len, i);
    return result;
}

std::vector<int> MonoidReduction::mark_projection(const StateSeq& p) const {
    std::vector<int> marks;
    for (StateId s : p) {
        if (is_mark(s)) marks.push_back(mark_index(s));
    }
    return marks;
}

std::vector<std::string> MonoidReduction::pi_prime(const StateSeq& p) const {
    std::vector<std::string> word;
    for (StateId s : p) {
        if (s == padding_) continue;
        word.push_back(automaton_.state_name(s));
    }
    return word;
}

BlockFactorization MonoidReduction::factorize_blocks(const StateSeq& p) const {
    std::vector<StateSeq> segments{StateSeq{}};
    std::vector<int> marks_ltr;
    for (StateId s : p) {
        if (is_mark(s)) {
            marks_ltr.push_back(mark_index(s));
            segments.emplace_back();
        } else {
            segments.back().push_back(s);
        }
    }
    BlockFactorization fact;
    fact.blocks.assign(segments.rbegin(), segments.rend());
    fact.marks.assign(marks_ltr.rbegin(), marks_ltr.rend());
    return fact;
}

bool MonoidReduction::compatible(const StateSeq& p, const StateSeq& q) const {
    BlockFactorization fp = factorize_blocks(p);
    BlockFactorization fq = factorize_blocks(q);
    if (fp.mark_count() != fq.mark_count()) return false;
    auto stripped = [this](const StateSeq& block) {
        std::vector<StateId> kept;
        for (StateId s : block) {
            if (s != padding_) kept.push_back(s);
        }
        return kept;
    };
    for (std::size_t j = 0; j < fp.blocks.size(); ++j) {
        if (stripped(fp.blocks[j]) != stripped(fq.blocks[j])) return false;
    }
    return true;
}

StateSeq MonoidReduction::shift_law(const StateSeq& p, unsigned mu) const {
    BlockFactorization fact = factorize_blocks(p);
    std::size_t s = fact.mark_count();
    if (mu > s)
        throw std::invalid_argument("shift_law: mu must be between 0 and the mark count " +
                                    std::to_string(s));

    StateSeq result;
    auto mark_state = [this](int x) { return x == 1 ? mark1_ : mark2_; };
    for (std::size_t j = s; j > mu; --j) {
        result.insert(result.end(), fact.blocks[j].begin(), fact.blocks[j].end());
        result.push_back(mark_state(fact.marks[j - 1]));
    }
    result.insert(result.end(), fact.blocks[mu].begin(), fact.blocks[mu].end());
    // each erased mark and every state of the erased blocks leaves one
    // padding state behind
    std::size_t pad_count = mu;
    for (std::size_t j = 0; j < mu; ++j) pad_count += fact.blocks[j].size();
    result.insert(result.end(), pad_count, padding_);
    return result;
}

Relation MonoidReduction::witness_relation(const std::vector<std::string>& solution) const {
    if (!instance_.is_solution(solution))
        throw std::invalid_argument("witness_relation: the given index word is not a solution");
    StateSeq middle;
    for (const auto& i : repeat_hom(solution)) middle.push_back(automaton_.state(i));
    Relation rel;
    rel.left.push_back(mark1_);
    rel.left.insert(rel.left.end(), middle.begin(), middle.end());
    rel.right = rel.left;
    rel.left.push_back(mark1_);
    rel.right.push_back(mark2_);
    if (!decide_equal(automaton_, rel.left, rel.right).equal)
        throw std::logic_error("witness_relation: solution did not induce a relation");
    return rel;
}

std::vector<std::string> MonoidReduction::extract_solution(const StateSeq& p,
                                                           const StateSeq& q) const {
    if (!decide_equal(automaton_, p, q).equal)
        throw std::invalid_argument("extract_solution: sequences are not equal");
    if (!compatible(p, q))
        throw std::logic_error("extract_solution: equal sequences must be compatible");

    BlockFactorization fp = factorize_blocks(p);
    BlockFactorization fq = factorize_blocks(q);
    std::size_t mu0 = 0;
    for (std::size_t j = 1; j <= fp.mark_count(); ++j) {
        if (fp.marks[j - 1] != fq.marks[j - 1]) {
            mu0 = j;
            break;
        }
    }
    if (mu0 == 0)
        throw std::invalid_argument("extract_solution: marker projections agree; nothing to decode");

    StateSeq left = p, right = q;
    if (mu0 > 1) {
        Word shift(mu0 - 1, automaton_.letter(symbols_.a));
        left = automaton_.dual_act(left, shift);
        right = automaton_.dual_act(right, shift);
        fp = factorize_blocks(left);
        fq = factorize_blocks(right);
    }
    if (fp.marks.empty() || fq.marks.empty() || fp.marks[0] == fq.marks[0])
        throw std::logic_error("extract_solution: shift did not expose differing marks");

    const StateSeq& block = fp.marks[0] == 1 ? fp.blocks[1] : fq.blocks[1];
    std::vector<std::string> repeated;
    for (StateId s : block) {
        if (s == padding_) continue;
        if (!is_index_state(s))
            throw std::logic_error("extract_solution: decoded block contains the non-index state '" +
                                   automaton_.state_name(s) + "'");
        repeated.push_back(automaton_.state_name(s));
    }
    unsigned len = instance_.length();
    if (repeated.empty() || repeated.size() % len != 0)
        throw std::logic_error("extract_solution: decoded block is not a whole chain repetition");
    std::vector<std::string> index_word;
    for (std::size_t g = 0; g < repeated.size(); g += len) {
        for (std::size_t j = 1; j < len; ++j) {
            if (repeated[g + j] != repeated[g])
                throw std::logic_error("extract_solution: chain group mixes indices");
        }
        index_word.push_back(repeated[g]);
    }
    if (!instance_.is_solution(index_word))
        throw std::logic_error("extract_solution: decoded word failed the solution check");
    return index_word;
}

MonoidReduction::FreePresentationReport
MonoidReduction::check_free_presentation(unsigned bound) const {
    FreePresentationReport report;
    report.bound = bound;
    for (const Relation& rel : enumerate_relations(automaton_, bound)) {
        if (mark_projection(rel.left) != mark_projection(rel.right)) {
            report.consistent = false;
            report.violation = rel;
            return report;
        }
    }
    return report;
}

} // namespace sauto

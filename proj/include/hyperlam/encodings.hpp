#ifndef HYPERLAM_ENCODINGS_HPP
#define HYPERLAM_ENCODINGS_HPP

#include <optional>
#include <string>
#include <vector>

#include "hyperlam/dpo.hpp"
#include "hyperlam/prover.hpp"

namespace hyperlam {

struct LexEntry {
    Type terminal;
    Type type;
};

/// A type-logical grammar: a ▷ T pairs plus the distinguished type.
struct LexGrammar {
    std::vector<Type> alphabet;
    Type start = Type::prim("S", 0);
    std::vector<LexEntry> lexicon;
    Calculus calculus = Calculus::HL;

    std::vector<Type> types_for(const Type& terminal) const;
};

/// Ranks agree pairwise and every terminal is in the alphabet. Throws.
void validate(const LexGrammar& g);

/// ×(L̂) ÷ (R̂ + $₀•) for a nonterminal rule.
Type dpo_type(const DpoRule& r);

/// Proxy relabeling a -> T_a of a terminal graph.
Hypergraph proxy_graph(const DpoGrammar& normalized, const Hypergraph& h);

/// S ÷ (Σ (!DPO(r))• + $₀•) with a ▷ T_a. Needs rk(S) = 0.
LexGrammar lg_hmel(const DpoGrammar& normalized);
/// a ▷ ×(T_a• + Σ k_r·DPO(r)•) for Σ k_r <= c, deduplicated by type.
LexGrammar lg_c(const DpoGrammar& normalized, int c);
/// The grammar whose HL language is L_c: lg_c(gr, c - 1). Rejects c < 1.
LexGrammar lg_for_lc(const DpoGrammar& normalized, int c);
/// As lg_hmel with the star over the floating template in place of !.
LexGrammar lg_star(const DpoGrammar& normalized);

/**
 * Replays a derivation over nonterminal rules inside HL. Given a tree of
 * Y -> A for the derivation's source Y, returns a tree of
 * Y' + DPO(r_1)• + ... + DPO(r_k)• -> A, one floating edge per step in
 * step order.
 */
DerivationPtr hl_witness_from_dpo(const DpoGrammar& gr, const DpoDerivation& d, const DerivationPtr& base);

struct HlWitness {
    std::vector<Type> assignment; // per edge of the input graph
    DerivationPtr tree;           // concludes the relabeled graph -> start type
};

struct MemberOptions {
    SearchConfig search;
    bool collect_all = false;
};

struct MemberResult {
    Verdict verdict = Verdict::NotDerivable;
    std::vector<HlWitness> witnesses;
    std::size_t assignments = 0; // assignments handed to the prover
    std::size_t pruned = 0;      // rejected by the primitive balance
    std::string route;
};

/// Tries every lexical assignment for the edges of h in edge order.
MemberResult member_hl(const LexGrammar& g, const Hypergraph& h, const MemberOptions& opts = {});
/// Same, reusing a prover across calls.
MemberResult member_hl(const LexGrammar& g, const Hypergraph& h, Prover& prover, bool collect_all = false);

struct HmelOptions {
    int replay_max_steps = 16;
    std::size_t replay_state_cap = 200000;
    bool allow_search = true;
    SearchConfig search;
};

/**
 * Membership in lg_hmel(gr). The replay route finds a derivation of t(H)
 * over the nonterminal rules and turns it into an HMEL₀ tree; the search
 * route runs the bounded prover on t(H) -> S'.
 */
MemberResult member_hmel(const DpoGrammar& normalized, const LexGrammar& g, const Hypergraph& h,
                         const HmelOptions& opts = {});

} // namespace hyperlam

#endif // HYPERLAM_ENCODINGS_HPP

#ifndef HYPERLAM_DPO_HPP
#define HYPERLAM_DPO_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hyperlam/canonical.hpp"
#include "hyperlam/decompose.hpp"

namespace hyperlam {

/// L <-phiL- D_k -phiR-> R with zero-rank sides.
struct DpoRule {
    std::string name;
    Hypergraph left;
    int k = 0;
    std::vector<NodeId> phi_left;
    std::vector<NodeId> phi_right;
    Hypergraph right;
    bool terminal = false; // a proxy rule T_a° -> a° added by normalization
};

/// Throws InvalidArgument / ArityMismatch / UnknownNode.
void validate(const DpoRule& r);

struct DpoGrammar {
    std::vector<Type> nonterminals;
    std::vector<Type> terminals;
    Type start = Type::prim("S", 0);
    std::vector<DpoRule> rules;
    std::map<std::string, Type> proxies; // terminal name -> T_a
    bool normalized = false;

    const DpoRule& rule(const std::string& name) const;
    std::vector<const DpoRule*> nonterminal_rules() const;
    std::vector<const DpoRule*> terminal_rules() const;
    bool is_terminal_graph(const Hypergraph& h) const;
};

void validate(const DpoGrammar& gr);

/// L' and R': the sides with ext set to phiL and phiR.
std::pair<Hypergraph, Hypergraph> internal_forms(const DpoRule& r);

/// Contexts C' with C'[e0/L'] ≅ G, ordered by canonical form of C'.
std::vector<Context> find_matches(const Hypergraph& g, const DpoRule& r);

/// C'[e0/R']. Throws InvalidContext unless C'[e0/L'] ≅ G.
Hypergraph apply(const Hypergraph& g, const DpoRule& r, const Context& ctx);

DpoRule reverse(const DpoRule& r);

/// Proxy nonterminals T_a, terminal rules T_a° -> a°, terminal labels in
/// the original rules replaced by their proxies.
DpoGrammar normalize(const DpoGrammar& gr);

struct DpoStep {
    std::string rule;
    Context context;
    Hypergraph result;
};

struct DpoDerivation {
    Hypergraph source;
    std::vector<DpoStep> steps;

    const Hypergraph& target() const { return steps.empty() ? source : steps.back().result; }
    /// Applications per rule name.
    std::map<std::string, int> rule_counts() const;
};

/// Replays every step. Returns false on the first invalid one.
bool check_derivation(const DpoGrammar& gr, const DpoDerivation& d);

enum class SearchStatus { Found, NotFound, BudgetExceeded };

struct DpoSearchResult {
    SearchStatus status = SearchStatus::NotFound;
    std::optional<DpoDerivation> derivation;
    std::size_t states = 0;
};

/**
 * Layered breadth-first exploration from S• over isomorphism classes.
 * Layers are kept so several queries with growing bounds share work.
 */
class DpoExplorer {
public:
    DpoExplorer(const DpoGrammar& gr, std::size_t state_cap, std::vector<const DpoRule*> rules = {});

    /// Expands until depth max_steps or the cap. False when the cap was hit.
    bool expand_to(int max_steps);
    /// Shortest depth at which h was reached, if within the explored depth.
    std::optional<int> depth_of(const Hypergraph& h) const;
    DpoDerivation path_to(const Hypergraph& h) const;
    int explored_depth() const { return depth_; }
    std::size_t states() const { return nodes_.size(); }
    bool capped() const { return capped_; }
    const DpoGrammar& grammar() const { return gr_; }
    /// Every state reached so far, in discovery order.
    std::vector<Hypergraph> reached() const;

private:
    struct Node {
        Hypergraph graph;
        int depth;
        int parent;
        const DpoRule* rule;
        std::optional<Context> context;
    };

    const DpoGrammar& gr_;
    std::vector<const DpoRule*> rules_;
    std::size_t cap_;
    std::vector<Node> nodes_;
    std::unordered_map<std::string, int> index_;
    std::size_t frontier_begin_ = 0;
    int depth_ = 0;
    bool capped_ = false;
};

/// A derivation S• =>* H with at most max_steps steps.
DpoSearchResult derive_search(const DpoGrammar& gr, const Hypergraph& h, int max_steps, std::size_t state_cap);

struct LcOptions {
    bool count_original_steps = false; // otherwise the normalized grammar is used
    std::size_t state_cap = 200000;
};

/// H in L_c: derivable in at most c·|E_H| steps.
DpoSearchResult lc_member(const DpoGrammar& gr, const Hypergraph& h, int c, const LcOptions& opts = {});
/// Same, over an explorer of an already normalized grammar.
DpoSearchResult lc_member(DpoExplorer& explorer, const Hypergraph& h, int c);

/// Terminal graphs reachable within the bounds, by canonical form.
/// Throws BudgetExceeded when the state cap is hit.
std::map<CanonicalForm, Hypergraph> enumerate_language(const DpoGrammar& gr, int max_steps, int max_nodes,
                                                       int max_edges, std::size_t state_cap = 500000);

} // namespace hyperlam

#endif // HYPERLAM_DPO_HPP

#ifndef HYPERLAM_IO_HPP
#define HYPERLAM_IO_HPP

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "hyperlam/dpo.hpp"
#include "hyperlam/encodings.hpp"
#include "hyperlam/sequent.hpp"

namespace hyperlam::io {

using json = nlohmann::json;

inline constexpr const char* kFormat = "hyperlam/1";

/// Ranked label names seen so far. A name keeps the rank it was first
/// registered with.
class Alphabet {
public:
    /// Throws RankMismatch when the name is already known with another rank.
    void add(const std::string& name, int rank);
    std::optional<int> rank_of(const std::string& name) const;
    const std::map<std::string, int>& entries() const { return ranks_; }

private:
    std::map<std::string, int> ranks_;
};

/**
 * Shared state for a batch of documents. With `strict` set, a plain string
 * label must already be registered; otherwise it is registered on first use
 * with the length of its attachment list.
 */
struct Workspace {
    Alphabet alphabet;
    bool strict = false;
    std::map<std::string, Hypergraph> graphs;
    std::map<std::string, Sequent> sequents;
    std::map<std::string, DpoGrammar> grammars;
    std::map<std::string, LexGrammar> lexicons;

    /// Reads any document and files it under its path. Returns its kind.
    std::string load(const std::string& path);
};

json read_file(const std::string& path);
void write_file(const std::string& path, const json& doc);
/// "kind" of a document, or a guess from its keys.
std::string kind_of(const json& doc);

json to_json(const Hypergraph& g);
json to_json(const Type& t);
json to_json(const Sequent& s);
json to_json(const Alphabet& a);
json to_json(const DpoRule& r);
json to_json(const DpoGrammar& gr);
json to_json(const LexGrammar& g);
json to_json(const Derivation& d);
json to_json(const DpoDerivation& d);

/// Wraps a payload as a top-level document.
json document(const std::string& kind, json body);

Hypergraph hypergraph_from_json(const json& j, Workspace& ws);
Type type_from_json(const json& j, Workspace& ws);
Sequent sequent_from_json(const json& j, Workspace& ws);
Alphabet alphabet_from_json(const json& j, Workspace& ws);
DpoRule rule_from_json(const json& j, Workspace& ws);
DpoGrammar grammar_from_json(const json& j, Workspace& ws);
LexGrammar lexicon_from_json(const json& j, Workspace& ws);
DerivationPtr derivation_from_json(const json& j, Workspace& ws);
DpoDerivation dpo_derivation_from_json(const json& j, Workspace& ws);

Hypergraph load_hypergraph(const std::string& path, Workspace& ws);
Sequent load_sequent(const std::string& path, Workspace& ws);
DpoGrammar load_grammar(const std::string& path, Workspace& ws);
LexGrammar load_lexicon(const std::string& path, Workspace& ws);

std::string to_dot(const Hypergraph& g, const std::string& name = "H");
std::string to_dot(const Derivation& d);
std::string to_dot(const DpoDerivation& d);

} // namespace hyperlam::io

#endif // HYPERLAM_IO_HPP

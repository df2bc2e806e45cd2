// Renderers for proof trees: JSON, inference-line text, and LaTeX.

#ifndef GLS_PROOF_IO_HPP
#define GLS_PROOF_IO_HPP

#include <string>

#include <json.hpp>

#include "gls/calculus.hpp"

namespace gls {

nlohmann::json to_json(const Sequent& s);
Sequent sequent_from_json(const nlohmann::json& j);

/// {"conclusion": {...}, "rule": name, "principal": text?, "premises": [...]}
nlohmann::json to_json(const ProofTree& tree);
/// Throws std::invalid_argument on schema violations and ParseError on bad
/// formula text. The result is not checked; run check_proof on it.
ProofPtr proof_from_json(const nlohmann::json& j);

/// Premises side by side above a horizontal line labelled with the rule.
std::string render_text(const ProofTree& tree);
/// Nested \infer[...]{conclusion}{premise & premise} (proof.sty).
std::string render_latex(const ProofTree& tree);
/// One node per distinct subproof, edges from conclusion to premises.
std::string to_dot(const ProofTree& tree);
std::string latex(const Formula& f);
std::string latex(const Sequent& s);

}  // namespace gls

#endif  // GLS_PROOF_IO_HPP

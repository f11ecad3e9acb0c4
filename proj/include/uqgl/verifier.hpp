#pragma once
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "uqgl/presentation.hpp"
#include "uqgl/superfree.hpp"

namespace uqgl {

// named rewriting generator: a relation row usable inside two-sided products
struct Axiom {
  std::string id;
  SuperElement el;
};

std::string relation_id(const Relation& r);  // slug[i1,i2,...]
std::vector<Axiom> to_axioms(const RelationSet& rs);

// one sandwich product: coeff * left * axiom * right
struct CertTerm {
  std::string axiom;
  Word left, right;
  RF coeff;
};

// exact witness that a target row lies in the two-sided span of named axioms;
// replayable by validate_certificate without any linear algebra
struct Certificate {
  std::string target;
  std::vector<CertTerm> terms;

  json to_json() const;
  static Certificate from_json(const json& j);
  bool operator==(const Certificate& o) const;
};

struct SolveStats {
  std::size_t words = 0;       // workspace words after closure
  std::size_t candidates = 0;  // sandwich products generated
  std::size_t support = 0;     // products used by the certificate
  int attempts = 0;            // evaluation points consumed
};

inline constexpr int ModeEval = 0;      // probabilistic: random-point solves only
inline constexpr int ModeSymbolic = 1;  // exact: eval-guided field certificate

struct VerifierOptions {
  int max_len = 0;  // workspace word-length bound; 0 = longest target word + 4
  std::size_t word_budget = 120000;
  std::size_t cand_budget = 300000;
  int mode = ModeSymbolic;
  int points = 4;  // random evaluation attempts
  std::uint64_t seed = 0x714c31315f7631ULL;
  // restrict unit insertions to word boundaries and to positions adjacent to
  // a letter of the inserted pair's own family. Purely a search heuristic:
  // certificates stay exact; turn off to widen the search
  bool adjacent_insertions = true;
};

struct DeriveResult {
  bool ok = false;
  std::optional<Certificate> cert;  // present on symbolic-mode success
  SolveStats stats;
};

// bounded two-sided span membership. Candidate products u*r*v are grown from
// the target by matching axiom words inside workspace words (the empty word
// of an inverse-pair row matches everywhere and performs unit insertion); a
// candidate is admitted only when every one of its words fits the length
// bound, so the search never drops terms. Symbolic mode solves once at a
// random point to locate a small support, then re-solves that support
// exactly over the coefficient field and replays the certificate.
class Verifier {
 public:
  explicit Verifier(std::vector<Axiom> axioms, VerifierOptions opt = {});

  const std::vector<Axiom>& axioms() const { return ax_; }
  const VerifierOptions& options() const { return opt_; }

  // ok=false when no derivation exists inside the workspace;
  // BudgetError when closure exceeds word/candidate budgets
  DeriveResult derive(const SuperElement& target, const std::string& target_id) const;

 private:
  std::vector<Axiom> ax_;
  VerifierOptions opt_;
  std::map<std::string, SuperElement> by_id_;
};

// exact recomputation: the certificate's terms sum to the target
bool validate_certificate(const Certificate& c, const std::map<std::string, SuperElement>& axioms,
                          const SuperElement& target);

// substitute certified intermediate axioms until every term references a base
// id; expansions maps intermediate ids to their own certificates. Duplicate
// sandwiches are merged and zero terms dropped
Certificate flatten_certificate(const Certificate& c,
                                const std::map<std::string, Certificate>& expansions);

}  // namespace uqgl

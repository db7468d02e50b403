#pragma once

#include <string>
#include <vector>

#include "artin/automorphism.hpp"
#include "artin/oracle.hpp"
#include "artin/presentation.hpp"
#include "json.hpp"

namespace artin {

enum class FixTag { TRIVIAL, Z, Z2, FREE, Z_CROSS_F, DIHEDRAL_A4, ARTIN, ARTIN_FREE_PRODUCT };
const char* fix_tag_name(FixTag t);

enum class Confidence { PROVEN, BUDGET_LIMITED };
const char* confidence_name(Confidence c);

// One checked claim: a fixedness test, a relation between generators, a membership, a count.
struct Certificate {
  std::string kind;
  std::string claim;
  Verdict verdict = Verdict::UNKNOWN;
  std::string invariant;
  std::string detail;
  long spent = 0;
};

struct FixReport {
  FixTag tag = FixTag::TRIVIAL;
  int rank = 0;                // free rank for FREE, Z_CROSS_F and ARTIN_FREE_PRODUCT
  std::vector<int> subgraph;   // vertices of the Artin factor for ARTIN tags
  std::vector<Word> generators;
  bool finite_index = false;   // generators span a finite-index subgroup rather than Fix itself
  Word witness;                // conjugator relating the input to the case representative
  std::string case_name;
  std::vector<Certificate> certificates;
  Confidence confidence = Confidence::PROVEN;
  std::vector<std::string> notes;
};

// Human-readable class, e.g. "FREE(2)" or "ARTIN({a,c})".
std::string class_text(const DefiningGraph& g, const FixReport& r);

// Adds one fixedness certificate per generator; UNKNOWN or NOT_EQUAL lowers confidence.
void certify_fixed(const DefiningGraph& g, const ArtinAutomorphism& a, FixReport& r, long budget);
// Records an equality claim u = v.
Certificate equality_certificate(const DefiningGraph& g, const std::string& kind, const std::string& claim,
                                 const Word& u, const Word& v, long budget);
void add_certificate(FixReport& r, Certificate c);

nlohmann::ordered_json report_to_json(const DefiningGraph& g, const FixReport& r);
std::string report_to_text(const DefiningGraph& g, const FixReport& r);

}  // namespace artin

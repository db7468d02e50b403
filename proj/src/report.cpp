#include "artin/report.hpp"

#include <sstream>

namespace artin {

const char* fix_tag_name(FixTag t) {
  switch (t) {
    case FixTag::TRIVIAL: return "TRIVIAL";
    case FixTag::Z: return "Z";
    case FixTag::Z2: return "Z2";
    case FixTag::FREE: return "FREE";
    case FixTag::Z_CROSS_F: return "Z_CROSS_F";
    case FixTag::DIHEDRAL_A4: return "DIHEDRAL_A4";
    case FixTag::ARTIN: return "ARTIN";
    case FixTag::ARTIN_FREE_PRODUCT: return "ARTIN_FREE_PRODUCT";
  }
  return "?";
}

const char* confidence_name(Confidence c) { return c == Confidence::PROVEN ? "PROVEN" : "BUDGET_LIMITED"; }

std::string class_text(const DefiningGraph& g, const FixReport& r) {
  std::string s = fix_tag_name(r.tag);
  auto sub = [&] {
    std::string o = "{";
    for (size_t i = 0; i < r.subgraph.size(); ++i) o += (i ? "," : "") + g.names[r.subgraph[i]];
    return o + "}";
  };
  switch (r.tag) {
    case FixTag::FREE:
    case FixTag::Z_CROSS_F: return s + "(" + std::to_string(r.rank) + ")";
    case FixTag::ARTIN: return s + "(" + sub() + ")";
    case FixTag::ARTIN_FREE_PRODUCT: return s + "(" + sub() + "," + std::to_string(r.rank) + ")";
    default: return s;
  }
}

Certificate equality_certificate(const DefiningGraph& g, const std::string& kind, const std::string& claim,
                                 const Word& u, const Word& v, long budget) {
  EqualityVerdict ev = word_equal(g, u, v, budget);
  Certificate c;
  c.kind = kind;
  c.claim = claim;
  c.verdict = ev.verdict;
  c.invariant = ev.invariant;
  c.spent = ev.spent;
  if (ev.equal())
    c.detail = std::to_string(ev.trace.steps()) + " step derivation";
  else
    c.detail = ev.detail;
  return c;
}

void add_certificate(FixReport& r, Certificate c) {
  if (c.verdict != Verdict::EQUAL) r.confidence = Confidence::BUDGET_LIMITED;
  r.certificates.push_back(std::move(c));
}

void certify_fixed(const DefiningGraph& g, const ArtinAutomorphism& a, FixReport& r, long budget) {
  for (const Word& w : r.generators)
    add_certificate(r, equality_certificate(g, "fixed", "gamma(" + format_word(w, g.names) + ") = itself",
                                            apply_aut(a, w), w, budget));
}

nlohmann::ordered_json report_to_json(const DefiningGraph& g, const FixReport& r) {
  nlohmann::ordered_json j;
  j["class"] = class_text(g, r);
  nlohmann::ordered_json gens = nlohmann::ordered_json::array();
  for (const Word& w : r.generators) gens.push_back(format_word(w, g.names));
  j["generators"] = gens;
  j["finite_index"] = r.finite_index;
  j["witness"] = format_word(r.witness, g.names);
  nlohmann::ordered_json certs = nlohmann::ordered_json::array();
  for (const auto& c : r.certificates) {
    nlohmann::ordered_json cj;
    cj["kind"] = c.kind;
    cj["claim"] = c.claim;
    cj["verdict"] = verdict_name(c.verdict);
    if (!c.invariant.empty()) cj["invariant"] = c.invariant;
    cj["detail"] = c.detail;
    certs.push_back(cj);
  }
  j["certificates"] = certs;
  j["confidence"] = confidence_name(r.confidence);
  j["case"] = r.case_name;
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

std::string report_to_text(const DefiningGraph& g, const FixReport& r) {
  std::ostringstream os;
  os << "Fix = " << class_text(g, r) << (r.finite_index ? " (generators span a finite-index subgroup)" : "")
     << "\n";
  os << "case: " << r.case_name << "\n";
  os << "witness: " << format_word(r.witness, g.names) << "\n";
  os << "generators:\n";
  for (const Word& w : r.generators) os << "  " << format_word(w, g.names) << "\n";
  os << "certificates:\n";
  for (const auto& c : r.certificates)
    os << "  [" << verdict_name(c.verdict) << "] " << c.kind << ": " << c.claim << "\n";
  for (const auto& n : r.notes) os << "note: " << n << "\n";
  os << "confidence: " << confidence_name(r.confidence) << "\n";
  return os.str();
}

}  // namespace artin

#include "cyclotome/json_io.hpp"

#include <string>

namespace cyclotome {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::SizeBudgetExceeded: return "SizeBudgetExceeded";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::MixedFields: return "MixedFields";
    case Errc::ZeroElement: return "ZeroElement";
    case Errc::InvalidSubfield: return "InvalidSubfield";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::EvenModulus: return "EvenModulus";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case Errc::NotCosetClosed: return "NotCosetClosed";
    case Errc::NotSquareField: return "NotSquareField";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::ZeroCode: return "ZeroCode";
    case Errc::NotSubcode: return "NotSubcode";
    case Errc::DualNotContained: return "DualNotContained";
    case Errc::NotHermitianSelfOrthogonal: return "NotHermitianSelfOrthogonal";
    case Errc::OrderNotOdd: return "OrderNotOdd";
    case Errc::NoSplitting: return "NoSplitting";
    case Errc::LemmaFiveExcluded: return "LemmaFiveExcluded";
    case Errc::InvalidParameters: return "InvalidParameters";
    case Errc::PreconditionFailed: return "PreconditionFailed";
    case Errc::Internal: return "Internal";
  }
  return "Internal";
}

namespace {

const char* kind_name(DistanceResult::Kind k) {
  switch (k) {
    case DistanceResult::Kind::exact: return "exact";
    case DistanceResult::Kind::lower_and_upper: return "lower_and_upper";
    case DistanceResult::Kind::infinite: return "infinite";
  }
  return "infinite";
}

const char* method_name(DistanceResult::Method m) {
  switch (m) {
    case DistanceResult::Method::full_enumeration: return "full_enumeration";
    case DistanceResult::Method::support_search: return "support_search";
    case DistanceResult::Method::none: return "none";
  }
  return "none";
}

ojson code_json_impl(const CyclicCode& c, bool extended) {
  ojson j;
  j["n"] = c.t.n;
  j["q_char"] = c.t.alphabet->p();
  j["q_deg"] = c.t.alphabet->e();
  j["defining_set"] = c.t.elements;
  j["generator"] = c.g;
  if (extended) j["extended"] = true;
  return j;
}

}  // namespace

ojson code_json(const CyclicCode& c) { return code_json_impl(c, false); }

ojson code_json(const ExtendedCode& c) {
  return code_json_impl(c.parent, true);
}

ojson distance_json(const DistanceResult& d) {
  ojson j;
  j["kind"] = kind_name(d.kind);
  if (d.kind == DistanceResult::Kind::exact) {
    j["d"] = d.d;
  } else if (d.kind == DistanceResult::Kind::lower_and_upper) {
    j["d_lo"] = d.d_lo;
    j["d_hi"] = d.d_hi;
  }
  j["method"] = method_name(d.method);
  j["budget_spent"] = d.budget_spent;
  if (!d.witness.empty()) j["witness"] = d.witness;
  return j;
}

ojson splitting_json(const Splitting& s) {
  ojson j;
  j["type"] = "splitting";
  j["n"] = s.n;
  j["q"] = s.q;
  j["a"] = s.a;
  j["s1"] = s.s1;
  j["s2"] = s.s2;
  return j;
}

ojson record_json(const QuantumCodeRecord& rec) {
  ojson j;
  j["n"] = rec.n;
  j["k"] = rec.k;
  j["q"] = rec.q;
  j["d"] = distance_json(rec.dist);
  if (rec.pure_to.has_value()) j["pure_to"] = *rec.pure_to;
  if (rec.degenerate.has_value()) j["degenerate"] = *rec.degenerate;
  j["family"] = rec.family;
  ojson prov;
  prov["theorem"] = rec.theorem;
  prov["ingredients"] = rec.ingredients;
  j["provenance"] = prov;
  j["singleton_ok"] = rec.singleton_ok;
  return j;
}

ojson classification_json(const AffineClassification& rec) {
  ojson j;
  j["p"] = rec.p;
  j["r"] = rec.r;
  j["m"] = rec.m;
  j["j"] = rec.j;
  j["n"] = rec.t.n;
  j["defining_set"] = rec.t.elements;
  j["affine_invariant"] = rec.affine_invariant;
  j["dual_contained"] = rec.dual_contained;
  return j;
}

ojson error_json(const Error& e) {
  ojson j;
  j["error"] = errc_name(e.code());
  j["detail"] = e.detail();
  return j;
}

std::string csv_header() {
  return "family,q,n,j,k,d_kind,d,d_lo,d_hi,method,pure_to,degenerate,"
         "singleton_ok,theorem,ingredients";
}

std::string csv_row(const QuantumCodeRecord& rec, int j) {
  std::string row = rec.family;
  row += ',' + std::to_string(rec.q);
  row += ',' + std::to_string(rec.n);
  row += ',';
  if (j >= 0) row += std::to_string(j);
  row += ',' + std::to_string(rec.k);
  row += ',';
  row += kind_name(rec.dist.kind);
  row += ',';
  if (rec.dist.kind == DistanceResult::Kind::exact)
    row += std::to_string(rec.dist.d);
  row += ',';
  if (rec.dist.kind == DistanceResult::Kind::lower_and_upper)
    row += std::to_string(rec.dist.d_lo);
  row += ',';
  if (rec.dist.kind == DistanceResult::Kind::lower_and_upper)
    row += std::to_string(rec.dist.d_hi);
  row += ',';
  row += method_name(rec.dist.method);
  row += ',';
  if (rec.pure_to.has_value()) row += std::to_string(*rec.pure_to);
  row += ',';
  if (rec.degenerate.has_value()) row += *rec.degenerate ? "true" : "false";
  row += ',';
  row += rec.singleton_ok ? "true" : "false";
  row += ',' + rec.theorem;
  // Ingredient labels contain commas, so the cell is always quoted.
  row += ",\"";
  for (std::size_t i = 0; i < rec.ingredients.size(); ++i) {
    if (i) row += ';';
    row += rec.ingredients[i];
  }
  row += '"';
  return row;
}

}  // namespace cyclotome

// Serialization of library objects to the wire formats described in
// SCHEMA.md: ordered JSON objects (key order is part of the format) and flat
// CSV rows for catalogs.
#pragma once

#include <string>

#include <json.hpp>

#include "cyclotome/affine.hpp"
#include "cyclotome/cyclic.hpp"
#include "cyclotome/cyclotomic.hpp"
#include "cyclotome/error.hpp"
#include "cyclotome/quantum.hpp"

namespace cyclotome {

using ojson = nlohmann::ordered_json;

ojson code_json(const CyclicCode& c);
ojson code_json(const ExtendedCode& c);
ojson distance_json(const DistanceResult& d);
ojson splitting_json(const Splitting& s);
ojson record_json(const QuantumCodeRecord& rec);
ojson classification_json(const AffineClassification& rec);

// {"error": "<clause>", "detail": "..."}; every CLI failure prints one.
ojson error_json(const Error& e);

std::string csv_header();
std::string csv_row(const QuantumCodeRecord& rec, int j /* -1 when absent */);

}  // namespace cyclotome

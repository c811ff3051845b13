#pragma once

#include <string>

#include <json.hpp>

#include "distspec/addressing.hpp"
#include "distspec/cospectral.hpp"
#include "distspec/families.hpp"
#include "distspec/graph.hpp"
#include "distspec/poly.hpp"
#include "distspec/products.hpp"
#include "distspec/reductions.hpp"
#include "distspec/spectra.hpp"

namespace distspec {

// insertion-ordered so identical inputs serialize byte-identically
using Json = nlohmann::ordered_json;

// fixed formatting contract for every floating-point value we emit:
// 12 significant digits, "-0" normalized to "0"
std::string format_double(double x);

Json to_json(const EigenValue& v);
Json to_json(const Spectrum& s);
Json to_json(const QPoly& p);  // degree + coefficient strings, constant first
Json to_json(const Inertia& i);
Json to_json(const StructuralReport& r);
Json to_json(const BoundsReport& r);
Json to_json(const CoefficientReport& r);
Json to_json(const CospectralClass& c);
Json to_json(const CensusResult& r);
Json to_json(const PreservationReport& r);
Json to_json(const ClassificationReport& r);
Json to_json(const AddressingResult& r);
Json to_json(const TwinPartition& p);
Json to_json(const QuotientAssembly& a);
Json to_json(const ProductSpectra& s);

// 2-space indent, trailing newline
std::string dump_json(const Json& j);

}  // namespace distspec

#pragma once

#include <string>

#include "json.hpp"
#include "qmut/classify.hpp"
#include "qmut/mutation_class.hpp"
#include "qmut/patterns.hpp"

// JSON and text renderings shared by the command line and the HTTP API, so
// both front ends print identical payloads. Vertices are 1-based throughout.
namespace qmut::report {

nlohmann::json vertices_json(std::span<const Vertex> vs);
nlohmann::json pattern_json(const SubquiverPattern& p);
nlohmann::json certificate_json(const InfiniteCertificate& c);

nlohmann::json analyze(const Quiver& q);
std::string invariants_text(const Quiver& q);
std::string patterns_text(const Quiver& q);

nlohmann::json classification_json(const Classification& c);
std::string classification_text(const Classification& c);

// Members [offset, offset + limit) of the class, as quivers.
nlohmann::json class_json(const MutationClass& cls, std::size_t offset, std::size_t limit);

nlohmann::json catalog_json(const ReferenceCatalog& catalog);

}  // namespace qmut::report

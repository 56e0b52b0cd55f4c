#ifndef PRODTOP_JSON_IO_HPP
#define PRODTOP_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "prodtop/collapse.hpp"
#include "prodtop/constructions.hpp"
#include "prodtop/graph_complex.hpp"
#include "prodtop/homology.hpp"
#include "prodtop/product_complex.hpp"
#include "prodtop/projection.hpp"
#include "prodtop/regular_complex.hpp"
#include "prodtop/verifier.hpp"

namespace prodtop {

using Json = nlohmann::json;

// Complex documents: kind in {graph, regular2, product, product-subcomplex,
// torus-skeleton} with fields vertices / edges (id, tail, head) / faces
// (id, boundary of {edge, dir}) / factors / cells.
Json complex_to_json(const Graph1Complex& g);
Json complex_to_json(const Regular2Complex& k);
Json complex_to_json(const ProductComplex& p);
Json complex_to_json(const ProductSubcomplex& sub);
Json complex_to_json(const TorusSubsetComplex& t);
Json complex_to_json(const AnyComplex& complex);

Graph1Complex graph_from_json(const Json& j);
Regular2Complex regular2_from_json(const Json& j);
ProductComplex product_from_json(const Json& j);
ProductSubcomplex subcomplex_from_json(const Json& j);
TorusSubsetComplex torus_skeleton_from_json(const Json& j);
AnyComplex complex_from_json(const Json& j);

Json expected_to_json(const ExpectedReport& e);
Json construction_to_json(const NamedConstruction& c);

Json to_json(const HomologySummary& h);
Json to_json(const SurfaceReport& r);
Json to_json(const VerifierReport& r);
Json to_json(const DecompositionResult& d);
Json to_json(const CollapsePlan& p);
Json to_json(const TreeEmbedding& t);

std::string fnv1a_digest(const std::string& bytes);

/// Deterministic envelope around a command's results.
Json report_document(const std::string& command, const std::string& input_digest, Json results,
                     bool pass);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace prodtop

#endif

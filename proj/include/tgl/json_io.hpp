#pragma once

#include <string>

#include "json.hpp"

#include "tgl/galois.hpp"
#include "tgl/matroid.hpp"
#include "tgl/poly.hpp"
#include "tgl/tutte.hpp"

namespace tgl {

using Json = nlohmann::ordered_json;

// Accepted shapes (the "type" field selects one):
//   {"type":"graphic","vertices":n,"edges":[[u,v],...]}
//   {"type":"uniform","rank":r,"size":m}
//   {"type":"linear","matrix":[[int,...],...]}
//   {"type":"bases","size":m,"bases":[[e,...],...]}
// Schema violations throw std::runtime_error with a description.
Matroid matroid_from_json(const Json& j);
Matroid load_matroid_file(const std::string& path);

Json zhat_to_json(const ZHat& z);
Json bipoly_to_json(const BiPolyZ& t);
Json certificate_to_json(const SnCertificate& c);
Json report_to_json(const VerificationReport& r);
Json identity_report_to_json(const IdentityReport& r);
Json jacobian_report_to_json(const JacobianReport& r);

}  // namespace tgl

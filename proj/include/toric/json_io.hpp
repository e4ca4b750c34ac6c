#pragma once

#include <json.hpp>

#include "toric/cox.hpp"
#include "toric/residue.hpp"

namespace toric {

using Json = nlohmann::ordered_json;

Json json_of(const Rat& q);                    // "p/q" or "p"
Json json_of(const std::complex<double>& z);   // {"re":, "im":}
Json json_of(const IVec& v);
Json json_of(const LatticePolytope& p);
Json json_of(const ResidueReport& r);
Json json_of(const EulerJacobiCertificate& c);
Json json_of(const ConverseCertificate& c, const std::vector<std::string>& vars);
Json json_of(const InfinityAudit& a, const std::vector<std::string>& vars);
Json json_of(const EquivalenceReport& r, const std::vector<std::string>& vars);
Json json_of(const TorusRoots& roots);
Json json_of(const CoxContext& ctx);
Json json_of(const CoxPolynomial& f, const CoxContext& ctx);
Json json_of(const RatMatrix& m);

// System file: {"variables": [...], "polynomials": ["...", ...],
//               "supports": optional [[point, ...], ...]}
LaurentSystem system_from_json(const Json& j);
LaurentSystem load_system(const std::string& path);

}  // namespace toric

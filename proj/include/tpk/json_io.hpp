#ifndef TPK_JSON_IO_HPP
#define TPK_JSON_IO_HPP

#include <json.hpp>

#include "tpk/graded.hpp"

namespace tpk {

struct CourantSection; // courant.hpp
struct AxiomReport;
struct GaugeResult; // dirac.hpp

// Wire formats. Polynomials: {"dim": n, "terms": [{"exp": [..], "coef": "p/q"}]},
// rational functions: {"num": .., "den": ..}, graded objects:
// {"dim": n, "degree": k, "kind": "multivector"|"form",
//  "terms": [{"indices": [..], "coef": ..}]} with one-based indices,
// sections: {"X": .., "xi": ..}.
nlohmann::json to_json(const Polynomial& p);
nlohmann::json to_json(const RationalFunction& f);
nlohmann::json to_json(const Graded& g);
nlohmann::json to_json(const CourantSection& e);
nlohmann::json to_json(const AxiomReport& r); // residual objects embedded
nlohmann::json to_json(const GaugeResult& r);

Polynomial polynomial_from_json(const nlohmann::json& j);
RationalFunction ratfun_from_json(const nlohmann::json& j);
Graded graded_from_json(const nlohmann::json& j);
CourantSection section_from_json(const nlohmann::json& j);

nlohmann::json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& j);

} // namespace tpk

#endif

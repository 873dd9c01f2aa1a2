#ifndef CHORDDSE_JSON_IO_HPP
#define CHORDDSE_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "chorddse/diagram.hpp"
#include "chorddse/expansion.hpp"
#include "chorddse/oracle.hpp"
#include "chorddse/series.hpp"
#include "chorddse/tree.hpp"

namespace chorddse {

using Json = nlohmann::json;

Json diagram_to_json(const ChordDiagram& c);
ChordDiagram diagram_from_json(const Json& j);

// [{"coeff": "p/q", "vars": {"a[k,i]": exponent, ...}}, ...]
Json polynomial_to_json(const SymbolicPolynomial& p);
SymbolicPolynomial polynomial_from_json(const Json& j);

Json xseries_to_json(const XSeries& s);
Json biseries_to_json(const BiSeries& s);

// Nested arrays, leaves as integers: ((1,2),3) -> [[1,2],3].
Json tree_to_json(const LabeledTree& t);
LabeledTree tree_from_json(const Json& j);

Json identity_report_to_json(const IdentityReport& r);

Json dse_spec_to_json(const DseSpec& spec);
DseSpec dse_spec_from_json(const Json& j);

}  // namespace chorddse

#endif

#pragma once

// JSON encodings. Rationals are always strings "p" or "p/q" in lowest terms.

#include <string>
#include <vector>

#include <json.hpp>

#include "mgnef/cone.hpp"
#include "mgnef/torelli.hpp"

namespace mgnef::io {

using json = nlohmann::json;

json rational_json(const Rational& q);
Rational rational_from_json(const json& j);
json vector_json(const VectorQ& v);
VectorQ vector_from_json(const json& j);
json matrix_json(const MatrixQ& m);

/** {"family":"C5","indices":[1,2],"genus":7,"tag":"C5(1,2)","vector":["0",...]} */
json to_json(const FCurve& curve);
FCurve fcurve_from_json(const json& j);
json to_json(const CurveClass& c);

/** {"genus":g,"a":"..","b":[..],"expression":"13*L - 2*d0 - ..."} */
json to_json(const DivisorClass& d);
DivisorClass divisor_from_json(const json& j);

json to_json(const Check& c);
json to_json(const FaceCertificate& cert);
json to_json(const FnefVerdict& v);
json to_json(const FaceClassification& c);
json to_json(const SemiampleReport& r);
json to_json(const BpfReport& r);

/** One row of the family table; the value columns do not depend on g. */
struct TableRow
{
    Family family;
    std::string formula;
    std::string latex_formula;
    Rational lambda_value;
    Rational twelve_lambda_minus_delta0_value;
};

std::vector<TableRow> intersection_table();
std::string render_table_text(const std::vector<TableRow>& rows);
std::string render_table_latex(const std::vector<TableRow>& rows);
std::string latex_rational(const Rational& q);

} // namespace mgnef::io

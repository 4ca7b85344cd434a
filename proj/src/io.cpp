#include "mgnef/io.hpp"

#include <sstream>

namespace mgnef::io {

json rational_json(const Rational& q)
{
    return to_string(q);
}

Rational rational_from_json(const json& j)
{
    if (!j.is_string())
        throw ParseError("rational must be a JSON string, got " + j.dump(), 0);
    return parse_rational(j.get<std::string>());
}

json vector_json(const VectorQ& v)
{
    json out = json::array();
    for (Index i = 0; i < v.size(); ++i)
        out.push_back(rational_json(v(i)));
    return out;
}

VectorQ vector_from_json(const json& j)
{
    VectorQ v(static_cast<Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i)
        v(static_cast<Index>(i)) = rational_from_json(j[i]);
    return v;
}

json matrix_json(const MatrixQ& m)
{
    json out = json::array();
    for (Index i = 0; i < m.rows(); ++i)
        out.push_back(vector_json(m.row(i).transpose()));
    return out;
}

json to_json(const FCurve& curve)
{
    return {{"family", std::string(family_name(curve.family))},
            {"indices", curve.indices},
            {"genus", curve.genus},
            {"tag", curve.tag()},
            {"vector", vector_json(intersection_vector(curve))}};
}

FCurve fcurve_from_json(const json& j)
{
    const auto family = parse_family(j.at("family").get<std::string>());
    if (!family)
        throw Error("unknown F-curve family " + j.at("family").dump());
    return make_fcurve(*family, j.at("indices").get<std::vector<int>>(), j.at("genus").get<int>());
}

json to_json(const CurveClass& c)
{
    json out = to_json(c.representative);
    json aliases = json::array();
    for (const FCurve& a : c.aliases)
        aliases.push_back(a.tag());
    out["aliases"] = aliases;
    return out;
}

json to_json(const DivisorClass& d)
{
    return {{"genus", d.genus()}, {"a", rational_json(d.a())}, {"b", vector_json(d.b())}, {"expression", to_expression(d)}};
}

DivisorClass divisor_from_json(const json& j)
{
    return DivisorClass(GenusContext(j.at("genus").get<int>()), rational_from_json(j.at("a")),
                        vector_from_json(j.at("b")));
}

json to_json(const Check& c)
{
    return {{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}};
}

json to_json(const FaceCertificate& cert)
{
    json gens = json::array();
    for (const VectorQ& g : cert.generators)
        gens.push_back(vector_json(g));
    json checks = json::array();
    for (const Check& c : cert.checks)
        checks.push_back(to_json(c));
    json out = {{"genus", cert.genus},
                {"ambient_dim", cert.ambient_dimension},
                {"face_dim", cert.face_dimension},
                {"generators", gens},
                {"active_curves", cert.active_curves},
                {"active_rank", cert.active_rank},
                {"independent_curves", cert.independent_curves},
                {"checks", checks}};
    if (cert.lemma_matrix)
        out["lemma_matrix"] = matrix_json(*cert.lemma_matrix);
    if (cert.lemma_determinant)
        out["det"] = rational_json(*cert.lemma_determinant);
    return out;
}

json to_json(const FnefVerdict& v)
{
    json violations = json::array();
    for (const auto& [curve, value] : v.violations)
        violations.push_back({{"curve", curve.tag()}, {"value", rational_json(value)}});
    json out = {{"fnef", v.fnef}, {"violations", violations}};
    if (v.witness)
        out["witness"] = {{"curve", v.witness->tag()}, {"value", rational_json(v.witness_value)}};
    else
        out["witness"] = nullptr;
    return out;
}

json to_json(const FaceClassification& c)
{
    auto opt = [](const std::optional<Rational>& q) { return q ? rational_json(*q) : json(nullptr); };
    return {{"class", std::string(face_class_name(c.kind))},
            {"alpha", opt(c.alpha)},
            {"beta", opt(c.beta)},
            {"epsilon", opt(c.epsilon)}};
}

json to_json(const SemiampleReport& r)
{
    return {{"status", std::string(semiample_status_name(r.status))},
            {"statement", r.statement},
            {"source", r.source},
            {"face", to_json(r.face)}};
}

json to_json(const BpfReport& r)
{
    json entries = json::array();
    for (const BpfEntry& e : r.entries)
    {
        json values = json::object();
        for (const auto& [curve, v] : e.c3_values)
            values[curve.tag()] = rational_json(v);
        entries.push_back({{"m", rational_json(e.point.m)},
                           {"alpha", rational_json(e.point.alpha)},
                           {"beta", rational_json(e.point.beta)},
                           {"divisor", to_expression(e.divisor)},
                           {"c3_values", values},
                           {"all_minus_one", e.all_minus_one}});
    }
    json symbolic = json::array();
    for (const Check& c : r.symbolic_checks)
        symbolic.push_back(to_json(c));
    return {{"genus", r.genus}, {"entries", entries}, {"deviations", r.deviations()}, {"symbolic_checks", symbolic}};
}

std::vector<TableRow> intersection_table()
{
    struct RowSpec
    {
        Family family;
        const char* formula;
        const char* latex;
        Rational a_coeff;
        Rational b0_coeff;
    };
    // Only the a and b_0 terms matter for lambda and 12 lambda - delta_0,
    // whose b_i vanish for i >= 1; the remaining indices are never 0.
    const RowSpec specs[] = {
        {Family::C1, "a/12 - b0 + b1/12", "\\frac{a}{12}-b_0+\\frac{b_1}{12}", Rational(1, 12), Rational(-1)},
        {Family::C2, "b0", "b_0", Rational(0), Rational(1)},
        {Family::C3, "b_i", "b_i", Rational(0), Rational(0)},
        {Family::C4, "2b0 - b_{i+1}", "2b_0-b_{i+1}", Rational(0), Rational(2)},
        {Family::C5, "b_i + b_j - b_{i+j}", "b_i+b_j-b_{i+j}", Rational(0), Rational(0)},
        {Family::C6, "b_i + b_j + b_k + b_l - b_{i+j} - b_{i+k} - b_{i+l}",
         "b_i+b_j+b_k+b_{\\ell}-b_{i+j}-b_{i+k}-b_{i+\\ell}", Rational(0), Rational(0)},
    };
    std::vector<TableRow> rows;
    for (const RowSpec& s : specs)
        rows.push_back({s.family, s.formula, s.latex, s.a_coeff, 12 * s.a_coeff + s.b0_coeff});
    return rows;
}

std::string render_table_text(const std::vector<TableRow>& rows)
{
    std::ostringstream out;
    out << "C | D.C | lambda.C | (12lambda-delta0).C\n";
    for (const TableRow& r : rows)
        out << family_name(r.family) << " | " << r.formula << " | " << to_string(r.lambda_value) << " | "
            << to_string(r.twelve_lambda_minus_delta0_value) << "\n";
    return out.str();
}

std::string latex_rational(const Rational& q)
{
    if (denominator_of(q) == 1)
        return to_string(q);
    const Integer n = numerator_of(q);
    return std::string(n < 0 ? "-" : "") + "\\frac{" + abs(n).str() + "}{" + denominator_of(q).str() + "}";
}

std::string render_table_latex(const std::vector<TableRow>& rows)
{
    static const char* family_latex[] = {"C_1", "C_2", "C^i_{3}", "C^i_{4}", "C^{ij}_{5}", "C^{ijk}_{6}=F_{i,j,k,\\ell}"};
    std::ostringstream out;
    out << "\\begin{tabular}{llll}\n"
        << "$C$ & $D\\cdot C=(a\\lambda-\\sum_{i=0}^{\\lfloor \\frac{g}{2} \\rfloor}b_i\\delta_i)\\cdot C$ & "
        << "$\\lambda\\cdot C$ & $(12\\lambda-\\delta_0)\\cdot C$ \\\\\n"
        << "\\hline\n\\hline\n";
    for (const TableRow& r : rows)
        out << "$" << family_latex[static_cast<int>(r.family)] << "$ & $" << r.latex_formula << "$ & $"
            << latex_rational(r.lambda_value) << "$ & $" << latex_rational(r.twelve_lambda_minus_delta0_value)
            << "$ \\\\\n\\hline\n";
    out << "\\end{tabular}\n";
    return out.str();
}

} // namespace mgnef::io

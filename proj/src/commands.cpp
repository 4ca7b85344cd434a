#include "mgnef/commands.hpp"

#include <algorithm>
#include <sstream>

#include "mgnef/linalg.hpp"

namespace mgnef {

using io::json;

namespace {

CommandResult make_result(std::string command, int genus, json payload, std::string rendering)
{
    if (!payload.contains("checks"))
        payload["checks"] = json::array();
    payload["command"] = command;
    payload["genus"] = genus;
    const auto& checks = payload["checks"];
    const bool ok = std::all_of(checks.begin(), checks.end(), [](const json& c) { return c.at("pass").get<bool>(); });
    return {std::move(command), genus, std::move(payload), std::move(rendering), ok ? kExitOk : kExitCheckFailed};
}

std::string render_checks(const json& checks)
{
    std::ostringstream out;
    for (const auto& c : checks)
        out << (c.at("pass").get<bool>() ? "[pass] " : "[FAIL] ") << c.at("name").get<std::string>() << ": "
            << c.at("detail").get<std::string>() << "\n";
    return out.str();
}

std::string ray_expression(const VectorQ& ray, int genus)
{
    return to_expression(DivisorClass::from_coordinates(GenusContext(genus), ray));
}

} // namespace

std::string CommandResult::output(OutputFormat format) const
{
    return format == OutputFormat::Json ? payload.dump(2) + "\n" : rendering;
}

CommandResult usage_error(std::string command, int genus, const std::string& message)
{
    CommandResult r{std::move(command), genus, {{"error", message}}, "error: " + message + "\n", kExitUsage};
    r.payload["command"] = r.command;
    return r;
}

CommandResult cmd_fcurves(int genus, OutputFormat format, bool raw)
{
    json curves = json::array();
    std::ostringstream text;
    text << "F-curves for g = " << genus << (raw ? " (all index tuples)" : " (numerically distinct)") << "\n";
    if (raw)
    {
        for (const FCurve& c : enumerate_raw_fcurves(genus))
        {
            curves.push_back(io::to_json(c));
            text << c.tag() << "  " << curves.back()["vector"].dump() << "\n";
        }
    }
    else
    {
        for (const CurveClass& c : fcurve_classes(genus))
        {
            curves.push_back(io::to_json(c));
            text << c.representative.tag() << "  " << curves.back()["vector"].dump();
            if (!c.aliases.empty())
                text << "  = " << curves.back()["aliases"].dump();
            text << "\n";
        }
    }
    (void)format;
    return make_result("fcurves", genus, {{"raw", raw}, {"count", curves.size()}, {"curves", curves}}, text.str());
}

CommandResult cmd_table(int genus, OutputFormat format)
{
    const GenusContext ctx(genus);
    ctx.require_basis();
    const auto rows = io::intersection_table();
    const DivisorClass lambda = lambda_class(ctx);
    const DivisorClass twelve = twelve_lambda_minus_delta0(ctx);
    const auto curves = enumerate_raw_fcurves(genus);

    json jrows = json::array();
    json checks = json::array();
    for (const io::TableRow& row : rows)
    {
        std::size_t count = 0;
        bool match = true;
        for (const FCurve& c : curves)
        {
            if (c.family != row.family)
                continue;
            ++count;
            match = match && intersect(lambda, c) == row.lambda_value &&
                    intersect(twelve, c) == row.twelve_lambda_minus_delta0_value;
        }
        jrows.push_back({{"family", std::string(family_name(row.family))},
                         {"formula", row.formula},
                         {"latex", row.latex_formula},
                         {"lambda", io::rational_json(row.lambda_value)},
                         {"twelve_lambda_minus_delta0", io::rational_json(row.twelve_lambda_minus_delta0_value)},
                         {"curves_at_genus", count}});
        checks.push_back({{"name", "row_" + std::string(family_name(row.family)) + "_matches_curves"},
                          {"pass", match},
                          {"detail", std::to_string(count) + " curves evaluated"}});
    }
    std::string rendering = format == OutputFormat::Latex ? io::render_table_latex(rows)
                                                          : "genus " + std::to_string(genus) + "\n" +
                                                                io::render_table_text(rows);
    return make_result("table", genus, {{"rows", jrows}, {"checks", checks}}, std::move(rendering));
}

CommandResult cmd_check(int genus, std::string_view divisor_text)
{
    const GenusContext ctx(genus);
    const DivisorClass d = parse_divisor(divisor_text, ctx);
    const FnefVerdict verdict = is_fnef(d);
    const SemiampleReport semiample = semiample_status(d, genus);

    json checks = json::array();
    checks.push_back({{"name", "fnef"},
                      {"pass", verdict.fnef},
                      {"detail", verdict.fnef ? "pairs nonnegatively with every F-curve"
                                              : "violated by " + verdict.witness->tag() + " (value " +
                                                    to_string(verdict.witness_value) + ")"}});
    std::ostringstream text;
    text << "divisor: " << to_expression(d) << "  (g = " << genus << ")\n"
         << "F-nef: " << (verdict.fnef ? "yes" : "no");
    if (verdict.witness)
        text << ", witness " << verdict.witness->tag() << " = " << to_string(verdict.witness_value);
    text << "\nface: " << face_class_name(semiample.face.kind) << "\nsemi-ample: " << semiample.statement << " ("
         << semiample.source << ")\n";
    return make_result("check", genus,
                       {{"divisor", io::to_json(d)},
                        {"fnef", verdict.fnef},
                        {"verdict", io::to_json(verdict)},
                        {"class", std::string(face_class_name(semiample.face.kind))},
                        {"classification", io::to_json(semiample.face)},
                        {"semiample", io::to_json(semiample)},
                        {"checks", checks}},
                       text.str());
}

CommandResult cmd_certify(int genus)
{
    FaceCertificate cert;
    try
    {
        cert = verify_extremal_face(genus);
    }
    catch (const CertificateFailure& failure)
    {
        cert = failure.certificate();
    }
    json payload = io::to_json(cert);
    std::ostringstream text;
    text << "F-nef cone, g = " << genus << ": face of 12L - d0 + L has dimension " << cert.face_dimension
         << ", active rank " << cert.active_rank << ", lemma det " << to_string(*cert.lemma_determinant) << "\n";
    for (const VectorQ& g : cert.generators)
        text << "  generator " << ray_expression(g, genus) << "\n";
    text << render_checks(payload["checks"]);
    return make_result("certify", genus, std::move(payload), text.str());
}

CommandResult cmd_rays(int genus, Index max_dimension)
{
    const PolyCone cone = fnef_cone(genus);
    const auto rays = extreme_rays(cone, DdOptions{max_dimension});
    const Index d = cone.dimension;

    json jrays = json::array();
    json checks = json::array();
    std::ostringstream text;
    text << rays.size() << " extreme rays of the F-nef cone, g = " << genus << "\n";
    for (std::size_t k = 0; k < rays.size(); ++k)
    {
        const Index r = active_rank(cone, rays[k]);
        json active = json::array();
        for (std::size_t i = 0; i < cone.inequalities.size(); ++i)
            if (cone.inequalities[i].dot(rays[k]) == 0)
                active.push_back(cone.provenance[i]);
        jrays.push_back({{"ray", io::vector_json(rays[k])},
                         {"expression", ray_expression(rays[k], genus)},
                         {"active_rank", r},
                         {"active_curves", active}});
        checks.push_back({{"name", "ray_" + std::to_string(k) + "_active_rank"},
                          {"pass", r == d - 1},
                          {"detail", std::to_string(r) + " (expected " + std::to_string(d - 1) + ")"}});
        text << "  " << ray_expression(rays[k], genus) << "  active rank " << r << "\n";
    }
    const GenusContext ctx(genus);
    for (const auto& [name, cls] : {std::pair{std::string("lambda_is_ray"), lambda_class(ctx)},
                                    std::pair{std::string("twelve_lambda_minus_delta0_is_ray"),
                                              twelve_lambda_minus_delta0(ctx)}})
    {
        const VectorQ v = primitive_ray(cls.coordinates());
        const bool found = std::find(rays.begin(), rays.end(), v) != rays.end();
        checks.push_back({{"name", name}, {"pass", found}, {"detail", to_expression(cls)}});
    }
    text << render_checks(checks);
    return make_result("rays", genus, {{"dimension", d}, {"rays", jrays}, {"checks", checks}}, text.str());
}

CommandResult cmd_pullback(Compactification model_name, std::string_view divisor_text, int genus)
{
    const CompactificationModel& model = compactification_model(model_name);
    const AbelianDivisor d = parse_abelian_divisor(divisor_text, model_name);
    const DivisorClass image = pullback(model, d, genus);
    const bool model_nef = model.nef_cone.contains(model.coordinates(d));
    const FnefVerdict verdict = is_fnef(image);
    const SemiampleReport semiample = semiample_status(image, genus);

    json checks = json::array();
    if (model_nef)
    {
        checks.push_back({{"name", "pullback_fnef"}, {"pass", verdict.fnef}, {"detail", to_expression(image)}});
        const bool in_face = semiample.face.kind != FaceClass::OutsideF;
        checks.push_back({{"name", "pullback_in_face"},
                          {"pass", in_face},
                          {"detail", std::string(face_class_name(semiample.face.kind))}});
    }
    json generators = json::array();
    const PolyCone image_cone = pullback_nef_cone(model, genus);
    for (const VectorQ& g : *image_cone.generators)
        generators.push_back(ray_expression(g, genus));

    std::ostringstream text;
    text << compactification_name(model_name) << ": " << to_expression(d) << (model_nef ? " (nef)" : " (not nef)")
         << "\npullback: " << to_expression(image) << "\nF-nef: " << (verdict.fnef ? "yes" : "no")
         << "\nface: " << face_class_name(semiample.face.kind) << "\npullback of the nef cone is generated by "
         << generators.dump() << "\n"
         << render_checks(checks);
    return make_result("pullback", genus,
                       {{"model", std::string(compactification_name(model_name))},
                        {"divisor", to_expression(d)},
                        {"model_nef", model_nef},
                        {"pullback", io::to_json(image)},
                        {"fnef", verdict.fnef},
                        {"classification", io::to_json(semiample.face)},
                        {"semiample", io::to_json(semiample)},
                        {"pullback_nef_cone_generators", generators},
                        {"checks", checks}},
                       text.str());
}

CommandResult cmd_bpf(int genus, int m_max, int alpha_max, int beta_max)
{
    const auto grid = bpf_grid(m_max, alpha_max, beta_max);
    const BpfReport report = bpf_scan(genus, grid);
    json payload = io::to_json(report);
    json checks = payload["symbolic_checks"];
    checks.push_back({{"name", "c3_pairings_minus_one"},
                      {"pass", report.deviations() == 0},
                      {"detail", std::to_string(report.deviations()) + " deviating grid points of " +
                                     std::to_string(report.entries.size())}});
    payload["checks"] = checks;
    payload["grid"] = {{"m_max", m_max}, {"alpha_max", alpha_max}, {"beta_max", beta_max}};
    std::ostringstream text;
    text << "m D - (K + Delta) against C3(i), g = " << genus << ", " << report.entries.size() << " grid points\n"
         << render_checks(checks);
    return make_result("bpf", genus, std::move(payload), text.str());
}

} // namespace mgnef

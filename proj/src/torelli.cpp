#include "mgnef/torelli.hpp"

#include <algorithm>
#include <cctype>

#include "mgnef/linalg.hpp"

namespace mgnef {

std::string_view compactification_name(Compactification c)
{
    switch (c)
    {
    case Compactification::Satake:
        return "satake";
    case Compactification::Partial:
        return "partial";
    case Compactification::Perfect:
        return "perfect";
    }
    return "?";
}

std::optional<Compactification> parse_compactification(std::string_view name)
{
    for (auto c : {Compactification::Satake, Compactification::Partial, Compactification::Perfect})
        if (compactification_name(c) == name)
            return c;
    return std::nullopt;
}

VectorQ CompactificationModel::coordinates(const AbelianDivisor& d) const
{
    if (d.model != name)
        throw ModelMismatchError("divisor belongs to " + std::string(compactification_name(d.model)) + ", not " +
                                 std::string(compactification_name(name)));
    if (picard_rank == 1)
    {
        if (d.b != 0)
            throw ModelMismatchError("the Satake model has no boundary divisor");
        VectorQ v(1);
        v << d.a;
        return v;
    }
    VectorQ v(2);
    v << d.a, d.b;
    return v;
}

MatrixQ CompactificationModel::pullback_matrix(GenusContext ctx) const
{
    ctx.require_basis();
    // M -> lambda = e_0; a M - b D -> a lambda - b delta_0, i.e. b lands on b_0.
    MatrixQ p = MatrixQ::Zero(ctx.dimension(), picard_rank);
    p(0, 0) = 1;
    if (picard_rank == 2)
        p(1, 1) = 1;
    return p;
}

namespace {

CompactificationModel make_model(Compactification name)
{
    CompactificationModel model{name, name == Compactification::Satake ? 1 : 2, {}, {}};
    if (model.picard_rank == 1)
    {
        model.basis_labels = {"M"};
        VectorQ n(1);
        n << 1;
        model.nef_cone = make_hrep_cone(1, {n}, {"a >= 0"}, "Nef(A_g^Sat)");
    }
    else
    {
        const std::string boundary = name == Compactification::Perfect ? "D_g^per" : "D_g";
        model.basis_labels = {"M", boundary};
        VectorQ upper(2), lower(2);
        upper << 1, -12;
        lower << 0, 1;
        model.nef_cone = make_hrep_cone(2, {upper, lower}, {"a >= 12b", "b >= 0"},
                                        name == Compactification::Perfect ? "Nef(A_g^per)" : "Nef(A_g^part)");
    }
    model.nef_cone.generators = extreme_rays(model.nef_cone);
    return model;
}

} // namespace

const CompactificationModel& compactification_model(Compactification c)
{
    static const CompactificationModel models[] = {make_model(Compactification::Satake),
                                                   make_model(Compactification::Partial),
                                                   make_model(Compactification::Perfect)};
    return models[static_cast<int>(c)];
}

AbelianDivisor parse_abelian_divisor(std::string_view text, Compactification model)
{
    AbelianDivisor out{model, Rational(0), Rational(0)};
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    auto digit_at = [&](std::size_t p) { return p < text.size() && std::isdigit(static_cast<unsigned char>(text[p])); };

    skip_ws();
    if (pos == text.size())
        throw ParseError("empty divisor expression", pos);
    bool first = true;
    while (pos < text.size())
    {
        Rational sign(1);
        if (text[pos] == '+' || text[pos] == '-')
        {
            sign = text[pos] == '-' ? Rational(-1) : Rational(1);
            ++pos;
            skip_ws();
        }
        else if (!first)
            throw ParseError(std::string("expected '+' or '-', found '") + text[pos] + "'", pos);
        first = false;

        Rational coeff(1);
        bool has_number = false;
        const std::size_t start = pos;
        if (digit_at(pos))
        {
            while (digit_at(pos))
                ++pos;
            if (pos < text.size() && text[pos] == '/' && digit_at(pos + 1))
            {
                ++pos;
                while (digit_at(pos))
                    ++pos;
            }
            coeff = parse_rational(text.substr(start, pos - start));
            has_number = true;
            skip_ws();
            if (pos < text.size() && text[pos] == '*')
            {
                ++pos;
                skip_ws();
            }
        }
        const std::size_t word_start = pos;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_' ||
                                     text[pos] == '^'))
            ++pos;
        const std::string_view word = text.substr(word_start, pos - word_start);
        if (word.empty())
        {
            if (!has_number || coeff != 0)
                throw ParseError("expected M or D", word_start);
        }
        else if (word == "M" || word == "L")
            out.a += sign * coeff;
        else if (word == "D" || word == "D_g" || word == "D_g^per")
        {
            if (model == Compactification::Satake)
                throw ModelMismatchError("the Satake model has no boundary divisor D");
            out.b -= sign * coeff;
        }
        else
            throw ParseError("unknown symbol '" + std::string(word) + "'", word_start);
        skip_ws();
    }
    return out;
}

std::string to_expression(const AbelianDivisor& d)
{
    std::string out;
    if (d.a != 0)
        out += to_string(d.a) + "*M";
    if (d.b != 0)
    {
        if (out.empty())
            out += (d.b > 0 ? "-" : "");
        else
            out += (d.b > 0 ? " - " : " + ");
        out += to_string(abs(d.b)) + "*D";
    }
    return out.empty() ? "0" : out;
}

DivisorClass pullback(const CompactificationModel& model, const AbelianDivisor& d, int genus)
{
    const GenusContext ctx(genus);
    ctx.require_basis();
    return DivisorClass::from_coordinates(ctx, (model.pullback_matrix(ctx) * model.coordinates(d)).eval());
}

PolyCone pullback_nef_cone(const CompactificationModel& model, int genus)
{
    const GenusContext ctx(genus);
    ctx.require_basis();
    const MatrixQ p = model.pullback_matrix(ctx);
    std::vector<VectorQ> images;
    for (const VectorQ& ray : *model.nef_cone.generators)
        images.push_back((p * ray).eval());
    return make_vrep_cone(ctx.dimension(), images, "pullback of " + model.nef_cone.label);
}

std::string_view face_class_name(FaceClass c)
{
    switch (c)
    {
    case FaceClass::InteriorOfF:
        return "InteriorOfF";
    case FaceClass::RayLambda:
        return "RayLambda";
    case FaceClass::Ray12LambdaMinusDelta0:
        return "Ray12LambdaMinusDelta0";
    case FaceClass::Origin:
        return "Origin";
    case FaceClass::OutsideF:
        return "OutsideF";
    }
    return "?";
}

FaceClassification classify_in_face(const DivisorClass& d)
{
    FaceClassification out;
    for (int i = 1; i <= d.context().top_index(); ++i)
        if (d.b(i) != 0)
            return out;
    const Rational& a = d.a();
    const Rational& b = d.b(0);
    if (b > 0)
        out.epsilon = a / b - 12;
    if (a == 0 && b == 0)
        out.kind = FaceClass::Origin;
    else if (b == 0 && a > 0)
        out.kind = FaceClass::RayLambda;
    else if (b > 0 && a == 12 * b)
        out.kind = FaceClass::Ray12LambdaMinusDelta0;
    else if (b > 0 && a > 12 * b)
        out.kind = FaceClass::InteriorOfF;
    else
        return FaceClassification{FaceClass::OutsideF, std::nullopt, std::nullopt, out.epsilon};
    // a lambda - b delta_0 = (a - 12 b) lambda + b (12 lambda - delta_0).
    out.alpha = a - 12 * b;
    out.beta = b;
    return out;
}

BpfFamily bpf_family(int genus)
{
    const GenusContext ctx(genus);
    ctx.require_basis();
    // m D_{alpha beta} = (m alpha) lambda + (m beta)(12 lambda - delta_0).
    return {-(canonical_class(ctx) + boundary_sum(ctx)), lambda_class(ctx), twelve_lambda_minus_delta0(ctx)};
}

std::size_t BpfReport::deviations() const
{
    return static_cast<std::size_t>(
        std::count_if(entries.begin(), entries.end(), [](const BpfEntry& e) { return !e.all_minus_one; }));
}

bool BpfReport::passed() const
{
    return deviations() == 0 &&
           std::all_of(symbolic_checks.begin(), symbolic_checks.end(), [](const Check& c) { return c.pass; });
}

std::vector<BpfPoint> bpf_grid(int m_max, int alpha_max, int beta_max)
{
    std::vector<BpfPoint> grid;
    for (int m = 1; m <= m_max; ++m)
        for (int alpha = 0; alpha <= alpha_max; ++alpha)
            for (int beta = 0; beta <= beta_max; ++beta)
                grid.push_back({Rational(m), Rational(alpha), Rational(beta)});
    return grid;
}

BpfReport bpf_scan(int genus, std::span<const BpfPoint> grid)
{
    const GenusContext ctx(genus);
    ctx.require_basis();
    BpfReport report;
    report.genus = genus;

    const BpfFamily family = bpf_family(genus);
    const DivisorClass k_plus_delta = canonical_class(ctx) + boundary_sum(ctx);
    std::vector<FCurve> c3;
    for (int i = 1; i <= genus - 2; ++i)
        c3.push_back(make_fcurve(Family::C3, {i}, genus));

    for (const BpfPoint& pt : grid)
    {
        if (pt.m <= 0)
            throw std::invalid_argument("bpf grid needs m > 0");
        const DivisorClass divisor =
            linear_combination({{pt.m, face_member(pt.alpha, pt.beta, ctx)}, {Rational(-1), k_plus_delta}});
        BpfEntry entry{pt, divisor, {}, true};
        for (const FCurve& curve : c3)
        {
            Rational v = intersect(divisor, curve);
            if (v != -1)
                entry.all_minus_one = false;
            entry.c3_values.emplace_back(curve, std::move(v));
        }
        report.entries.push_back(std::move(entry));
    }

    // In the form a lambda - sum b_i delta_i, b_i (i >= 1) of
    // constant + u*per_m_alpha + v*per_m_beta must be -1 + 0u + 0v.
    for (int i = 1; i <= ctx.top_index(); ++i)
    {
        const Rational c0 = family.constant.b(i);
        const Rational cu = family.per_m_alpha.b(i);
        const Rational cv = family.per_m_beta.b(i);
        report.symbolic_checks.push_back({"b" + std::to_string(i) + "_coefficient_is_minus_one",
                                          c0 == -1 && cu == 0 && cv == 0,
                                          to_string(c0) + " + " + to_string(cu) + "*m*alpha + " + to_string(cv) +
                                              "*m*beta"});
    }
    report.symbolic_checks.push_back(
        {"lambda_coefficient", family.constant.a() == -13 && family.per_m_alpha.a() == 1 && family.per_m_beta.a() == 12,
         "m(alpha + 12 beta) - 13"});
    report.symbolic_checks.push_back({"delta0_coefficient",
                                      family.constant.delta_coefficient(0) == 1 &&
                                          family.per_m_alpha.delta_coefficient(0) == 0 &&
                                          family.per_m_beta.delta_coefficient(0) == -1,
                                      "-(m beta - 1)"});
    return report;
}

std::string_view semiample_status_name(SemiampleStatus s)
{
    switch (s)
    {
    case SemiampleStatus::SemiAmple:
        return "semi-ample";
    case SemiampleStatus::ConditionallySemiAmple:
        return "conditionally semi-ample";
    case SemiampleStatus::NefOnly:
        return "nef, semi-ampleness unknown";
    case SemiampleStatus::Unknown:
        return "unknown";
    }
    return "?";
}

SemiampleReport semiample_status(const DivisorClass& d, int genus)
{
    if (d.genus() != genus)
        throw GenusMismatchError("divisor has genus " + std::to_string(d.genus()));
    SemiampleReport r;
    r.face = classify_in_face(d);
    switch (r.face.kind)
    {
    case FaceClass::InteriorOfF:
        r.status = SemiampleStatus::SemiAmple;
        r.statement = "semi-ample";
        r.source = "pullback of an ample class along the perfect-cone extension of the Torelli map";
        break;
    case FaceClass::RayLambda:
        r.status = SemiampleStatus::SemiAmple;
        r.statement = "semi-ample";
        r.source = "pullback of the ample generator M along the Satake extension of the Torelli map";
        break;
    case FaceClass::Ray12LambdaMinusDelta0:
        if (genus <= 11)
        {
            r.status = SemiampleStatus::ConditionallySemiAmple;
            r.statement = "semi-ample if g <= 11 over the complex numbers; nef for all g >= 2";
            r.source = "pullback of 12M - D_g^per, semi-ample on A_g^per for g <= 11 over C (Shepherd-Barron)";
        }
        else
        {
            r.status = SemiampleStatus::NefOnly;
            r.statement = "nef for all g >= 2; semi-ampleness unknown";
            r.source = "nefness of 12 lambda - delta_0 (Faber)";
        }
        break;
    case FaceClass::Origin:
        r.status = SemiampleStatus::SemiAmple;
        r.statement = "trivially semi-ample (zero class)";
        r.source = "zero divisor";
        break;
    case FaceClass::OutsideF:
        r.status = SemiampleStatus::Unknown;
        r.statement = "unknown to this library";
        r.source = "outside the face spanned by lambda and 12 lambda - delta_0";
        break;
    }
    return r;
}

} // namespace mgnef

// Acceptance suite: one PASS/FAIL line per criterion, exact arithmetic.
// Usage: mgnef_acceptance [--criterion N]

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mgnef/commands.hpp"
#include "mgnef/linalg.hpp"
#include "oracles.hpp"

using namespace mgnef;

namespace {

struct Outcome
{
    bool pass = true;
    std::vector<std::string> failures;

    void require(bool ok, const std::string& what)
    {
        if (!ok)
        {
            pass = false;
            if (failures.size() < 5)
                failures.push_back(what);
        }
    }
};

struct Criterion
{
    int number;
    std::string title;
    double time_limit_seconds;
    std::function<void(Outcome&)> body;
};

Rational random_positive(std::mt19937& rng)
{
    return Rational(std::uniform_int_distribution<int>(1, 1000)(rng), std::uniform_int_distribution<int>(1, 97)(rng));
}

void table_reproduction(Outcome& out)
{
    const int g = 10;
    const GenusContext ctx(g);
    const DivisorClass lambda = lambda_class(ctx);
    const DivisorClass twelve = twelve_lambda_minus_delta0(ctx);
    for (const FCurve& c : enumerate_raw_fcurves(g))
    {
        Rational want_lambda(0), want_twelve(0);
        switch (c.family)
        {
        case Family::C1:
            want_lambda = Rational(1, 12);
            break;
        case Family::C2:
            want_twelve = 1;
            break;
        case Family::C4:
            want_twelve = 2;
            break;
        default:
            break;
        }
        out.require(intersect(lambda, c) == want_lambda, "lambda." + c.tag());
        out.require(intersect(twelve, c) == want_twelve, "(12lambda-delta0)." + c.tag());
    }
}

void lemma_matrix_structure(Outcome& out)
{
    for (int g = 3; g <= 20; ++g)
    {
        const MatrixQ m = lemma_matrix(g);
        const Index d = g / 2 + 2;
        const std::string at = " at g=" + std::to_string(g);
        out.require(m.rows() == d && m.cols() == d, "shape" + at);
        out.require(abs(determinant(m)) == 1, "|det| = 1" + at);
        out.require(rank(m) == d, "rank d" + at);
        bool diagonal = true;
        std::string offending;
        for (Index i = 0; i < m.rows(); ++i)
            for (Index j = 0; j < m.cols(); ++j)
                if (i != j && m(i, j) != 0 && diagonal)
                {
                    diagonal = false;
                    offending = "(" + std::to_string(i) + "," + std::to_string(j) + ") = " + to_string(m(i, j));
                }
        out.require(diagonal, "diagonal" + at + ": entry " + offending);
    }
}

void extremal_face(Outcome& out)
{
    for (int g = 3; g <= 20; ++g)
    {
        const std::string at = " at g=" + std::to_string(g);
        try
        {
            const FaceCertificate cert = verify_extremal_face(g);
            out.require(cert.passed(), "certificate" + at);
            for (const char* name : {"first_generator_isolates_c1", "second_generator_isolates_c2",
                                     "interior_point_supported_on_c1_c2", "face_active_rank"})
            {
                const auto it = std::find_if(cert.checks.begin(), cert.checks.end(),
                                             [&](const Check& c) { return c.name == name; });
                out.require(it != cert.checks.end() && it->pass, std::string(name) + at);
            }
            out.require(cert.active_rank == g / 2, "active rank d-2" + at);
        }
        catch (const CertificateFailure& e)
        {
            out.require(false, e.failed_check() + at);
        }
    }
}

void cone_mapping(Outcome& out)
{
    const int g = 12;
    const GenusContext ctx(g);
    const CompactificationModel& per = compactification_model(Compactification::Perfect);
    const PolyCone image = pullback_nef_cone(per, g);
    out.require(image.generators &&
                    *image.generators == std::vector<VectorQ>{lambda_class(ctx).coordinates(),
                                                              twelve_lambda_minus_delta0(ctx).coordinates()},
                "pullback generators are lambda and 12lambda-delta0");

    const PolyCone fnef = fnef_cone(g);
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 500; ++trial)
    {
        const Rational b = trial % 50 == 0 ? Rational(0) : random_positive(rng);
        const Rational a = trial % 25 == 1 ? 12 * b : 12 * b + random_positive(rng);
        const DivisorClass p = pullback(per, {Compactification::Perfect, a, b}, g);
        out.require(fnef.contains(p.coordinates()), "F-nef pullback of " + to_string(a) + "M - " + to_string(b) + "D");
        out.require(image.generated_contains(p.coordinates()), "forward membership");
        // Converse: a random member of the generated cone is the pullback of a nef class.
        const Rational s = random_positive(rng), t = random_positive(rng);
        const VectorQ x = s * lambda_class(ctx).coordinates() + t * twelve_lambda_minus_delta0(ctx).coordinates();
        const auto cls = classify_in_face(DivisorClass::from_coordinates(ctx, x));
        const bool back = cls.alpha && cls.beta &&
                          per.nef_cone.contains(per.coordinates({Compactification::Perfect, x(0), x(1)})) &&
                          pullback(per, {Compactification::Perfect, x(0), x(1)}, g).coordinates() == x;
        out.require(back, "converse membership");
    }
}

void bpf_failure(Outcome& out)
{
    const auto grid = bpf_grid(5, 4, 4);
    for (int g = 3; g <= 12; ++g)
    {
        const BpfReport report = bpf_scan(g, grid);
        out.require(report.entries.size() == 125, "grid size");
        out.require(report.deviations() == 0, std::to_string(report.deviations()) + " deviations at g=" + std::to_string(g));
        for (const Check& c : report.symbolic_checks)
            out.require(c.pass, c.name + " at g=" + std::to_string(g));
        const BpfFamily fam = bpf_family(g);
        for (int i = 1; i <= g / 2; ++i)
            out.require(fam.constant.b(i) == -1 && fam.per_m_alpha.b(i) == 0 && fam.per_m_beta.b(i) == 0,
                        "symbolic b_" + std::to_string(i) + " coefficient");
    }
}

void dual_oracle(Outcome& out)
{
    for (int g : {3, 4})
    {
        const std::string at = " at g=" + std::to_string(g);
        const PolyCone cone = fnef_cone(g);
        const auto rays = extreme_rays(cone);
        out.require(oracle::normalized_set(rays) ==
                        oracle::brute_force_rays(oracle::distinct_functionals(g), cone.dimension),
                    "ray set matches brute force" + at);
        for (const auto& r : rays)
            out.require(active_rank(cone, r) == cone.dimension - 1 && primitive_ray(r) == r, "ray rank" + at);
        const GenusContext ctx(g);
        for (const DivisorClass& d : {lambda_class(ctx), twelve_lambda_minus_delta0(ctx)})
            out.require(std::find(rays.begin(), rays.end(), primitive_ray(d.coordinates())) != rays.end(),
                        to_expression(d) + " is a ray" + at);
    }
}

void classification(Outcome& out)
{
    std::mt19937 rng(7);
    for (int g : {3, 7, 12})
    {
        const GenusContext ctx(g);
        for (int trial = 0; trial < 50; ++trial)
        {
            const Rational eps = random_positive(rng);
            const DivisorClass d = (12 + eps) * lambda_class(ctx) - delta_class(ctx, 0);
            const auto c = classify_in_face(d);
            out.require(c.kind == FaceClass::InteriorOfF && c.epsilon == eps, "interior for eps " + to_string(eps));
            for (int i = 1; i <= ctx.top_index(); ++i)
            {
                const Rational coef = trial % 2 ? eps : Rational(-eps);
                out.require(classify_in_face(d + coef * delta_class(ctx, i)).kind == FaceClass::OutsideF,
                            "outside with delta_" + std::to_string(i));
            }
        }
        out.require(classify_in_face(twelve_lambda_minus_delta0(ctx)).kind == FaceClass::Ray12LambdaMinusDelta0,
                    "12lambda-delta0 boundary");
        out.require(classify_in_face(Rational(7, 3) * twelve_lambda_minus_delta0(ctx)).kind ==
                        FaceClass::Ray12LambdaMinusDelta0,
                    "scaled 12lambda-delta0 boundary");
        out.require(classify_in_face(lambda_class(ctx)).kind == FaceClass::RayLambda, "lambda boundary");
        out.require(classify_in_face(Rational(5, 2) * lambda_class(ctx)).kind == FaceClass::RayLambda,
                    "scaled lambda boundary");
    }
}

bool json_round_trips(const io::json& j)
{
    return io::json::parse(j.dump()) == j;
}

void property_suites(Outcome& out)
{
    oracle::RationalGen gen(8);

    // Bilinearity at g = 6.
    {
        const GenusContext ctx(6);
        for (int trial = 0; trial < 20; ++trial)
        {
            const DivisorClass d1 = DivisorClass::from_coordinates(ctx, gen.vector(ctx.dimension()));
            const DivisorClass d2 = DivisorClass::from_coordinates(ctx, gen.vector(ctx.dimension()));
            const Rational a = gen.any(), b = gen.any();
            for (const FCurve& c : enumerate_raw_fcurves(6))
                out.require(intersect(a * d1 + b * d2, c) == a * intersect(d1, c) + b * intersect(d2, c),
                            "bilinearity on " + c.tag());
        }
    }

    // C5 and C6 permutation symmetry for g <= 10.
    for (int g = 3; g <= 10; ++g)
        for (const FCurve& c : enumerate_raw_fcurves(g))
        {
            if (c.family != Family::C5 && c.family != Family::C6)
                continue;
            const VectorQ v = intersection_vector(c);
            std::vector<int> idx = c.indices;
            std::sort(idx.begin(), idx.end());
            do
                out.require(intersection_vector(make_fcurve(c.family, idx, g)) == v, "symmetry of " + c.tag());
            while (std::next_permutation(idx.begin(), idx.end()));
        }

    // Double description under 5 random insertion orders.
    std::mt19937 rng(99);
    for (int g = 3; g <= 6; ++g)
    {
        const PolyCone cone = fnef_cone(g);
        const auto reference = oracle::normalized_set(extreme_rays(cone));
        for (int trial = 0; trial < 5; ++trial)
        {
            std::vector<std::size_t> order(cone.inequalities.size());
            for (std::size_t i = 0; i < order.size(); ++i)
                order[i] = i;
            std::shuffle(order.begin(), order.end(), rng);
            std::vector<VectorQ> normals;
            std::vector<std::string> tags;
            for (std::size_t i : order)
            {
                normals.push_back(cone.inequalities[i]);
                tags.push_back(cone.provenance[i]);
            }
            const auto rays = extreme_rays(make_hrep_cone(cone.dimension, normals, tags, "permuted"));
            out.require(oracle::normalized_set(rays) == reference, "insertion order at g=" + std::to_string(g));
        }
    }

    // JSON round trips of every command payload.
    std::vector<CommandResult> results;
    for (int g = 3; g <= 6; ++g)
    {
        results.push_back(cmd_fcurves(g, OutputFormat::Json));
        results.push_back(cmd_fcurves(g, OutputFormat::Json, true));
        results.push_back(cmd_table(g, OutputFormat::Json));
        results.push_back(cmd_check(g, "13*L - 2*d0 - 2*d1"));
        results.push_back(cmd_check(g, "25/2*L - d0"));
        results.push_back(cmd_certify(g));
        results.push_back(cmd_rays(g));
        results.push_back(cmd_pullback(Compactification::Perfect, "12*M - 1*D", g));
        results.push_back(cmd_pullback(Compactification::Satake, "3*M", g));
        results.push_back(cmd_bpf(g, 2, 2, 2));
    }
    for (const auto& r : results)
        out.require(json_round_trips(r.payload), "JSON round trip of " + r.command);
    for (int g = 3; g <= 9; ++g)
    {
        for (const FCurve& c : enumerate_raw_fcurves(g))
            out.require(io::fcurve_from_json(io::json::parse(io::to_json(c).dump())) == c, "F-curve JSON " + c.tag());
        const GenusContext ctx(g);
        for (int trial = 0; trial < 10; ++trial)
        {
            const DivisorClass d = DivisorClass::from_coordinates(ctx, gen.vector(ctx.dimension()));
            out.require(io::divisor_from_json(io::json::parse(io::to_json(d).dump())) == d, "divisor JSON");
        }
        const DivisorClass k = parse_divisor(to_expression(canonical_class(ctx)), ctx);
        bool k_ok = k.a() == 13;
        for (int i = 0; i <= ctx.top_index(); ++i)
            k_ok = k_ok && k.delta_coefficient(i) == -2;
        out.require(k_ok, "canonical class round trip");
    }
}

std::vector<Criterion> criteria()
{
    return {
        {1, "table reproduction at g=10", 1.0, table_reproduction},
        {2, "lemma matrix diagonal, |det| = 1, rank d for g=3..20", 5.0, lemma_matrix_structure},
        {3, "extremal face certificate for g=3..20", 10.0, extremal_face},
        {4, "perfect-cone nef cone pulls back onto the face at g=12", 10.0, cone_mapping},
        {5, "(mD - K - Delta).C3(i) = -1 for g=3..12", 10.0, bpf_failure},
        {6, "double description matches brute force at g=3,4", 10.0, dual_oracle},
        {7, "classification of (12+eps)lambda - delta0", 1.0, classification},
        {8, "property suites", 60.0, property_suites},
    };
}

} // namespace

int main(int argc, char** argv)
{
    int only = 0;
    for (int i = 1; i < argc; ++i)
    {
        const std::string arg = argv[i];
        if (arg == "--criterion" && i + 1 < argc)
            only = std::atoi(argv[++i]);
        else
        {
            std::cerr << "usage: " << argv[0] << " [--criterion N]\n";
            return 2;
        }
    }

    bool all = true;
    for (const Criterion& c : criteria())
    {
        if (only != 0 && c.number != only)
            continue;
        Outcome out;
        const auto start = std::chrono::steady_clock::now();
        try
        {
            c.body(out);
        }
        catch (const std::exception& e)
        {
            out.require(false, std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        out.require(seconds < c.time_limit_seconds, "runtime over " + std::to_string(c.time_limit_seconds) + " s");

        std::ostringstream line;
        line << "criterion " << c.number << ": " << (out.pass ? "PASS" : "FAIL") << "  " << c.title << "  ("
             << static_cast<long>(seconds * 1000) << " ms)";
        for (const auto& f : out.failures)
            line << "\n    failed: " << f;
        std::cout << line.str() << std::endl;
        all = all && out.pass;
    }
    return all ? 0 : 1;
}

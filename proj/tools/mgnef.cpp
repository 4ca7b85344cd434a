// Command-line front end: one subcommand per checked statement.

#include <fstream>
#include <functional>
#include <iostream>

#include <CLI11.hpp>

#include "mgnef/commands.hpp"

namespace {

int emit(const mgnef::CommandResult& result, mgnef::OutputFormat format, const std::string& output_path)
{
    const std::string text = result.output(format);
    if (output_path.empty())
    {
        (result.exit_status == mgnef::kExitUsage ? std::cerr : std::cout) << text;
    }
    else
    {
        std::ofstream file(output_path);
        if (!file)
        {
            std::cerr << "cannot write " << output_path << "\n";
            return mgnef::kExitUsage;
        }
        file << text;
    }
    return result.exit_status;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact divisor/curve intersection checks on the moduli space of stable curves"};
    app.require_subcommand(1);
    app.fallthrough();

    int genus = 0;
    std::string format_name = "text";
    std::string output_path;
    app.add_option("-g,--genus", genus, "genus g");
    app.add_option("-f,--format", format_name, "json, text or latex")
        ->check(CLI::IsMember({"json", "text", "latex"}));
    app.add_option("-o,--output", output_path, "write the result to FILE");

    std::function<mgnef::CommandResult()> run;
    std::string name;

    auto* fcurves = app.add_subcommand("fcurves", "list numerically distinct F-curves with intersection vectors");
    bool raw = false;
    fcurves->add_flag("--raw", raw, "list every index tuple without merging numerical duplicates");

    auto* table = app.add_subcommand("table", "intersection table of the six F-curve families");

    auto* check = app.add_subcommand("check", "F-nef verdict, face classification and semi-ampleness of a divisor");
    std::string divisor;
    check->add_option("-d,--divisor", divisor, "e.g. \"13*L - 1*d0\"")->required();

    auto* certify = app.add_subcommand("certify", "certify the face spanned by lambda and 12 lambda - delta_0");

    auto* rays = app.add_subcommand("rays", "extreme rays of the F-nef cone by double description");
    int max_dim = 8;
    rays->add_option("--max-dim", max_dim, "dimension limit for ray enumeration");

    auto* pullback = app.add_subcommand("pullback", "pull back a divisor from a compactification of A_g");
    std::string model_name = "perfect";
    std::string abelian;
    pullback->add_option("-m,--model", model_name, "satake, partial or perfect")
        ->check(CLI::IsMember({"satake", "partial", "perfect"}));
    pullback->add_option("-d,--divisor", abelian, "e.g. \"12*M - 1*D\"")->required();

    auto* bpf = app.add_subcommand("bpf", "pair m D - (K + Delta) with the C3 curves over a grid");
    int m_max = 5, alpha_max = 4, beta_max = 4;
    bpf->add_option("--m-max", m_max, "m ranges over 1..m-max");
    bpf->add_option("--alpha-max", alpha_max, "alpha ranges over 0..alpha-max");
    bpf->add_option("--beta-max", beta_max, "beta ranges over 0..beta-max");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        const int code = app.exit(e);
        return code == 0 ? 0 : mgnef::kExitUsage;
    }

    const mgnef::OutputFormat format = format_name == "json"    ? mgnef::OutputFormat::Json
                                       : format_name == "latex" ? mgnef::OutputFormat::Latex
                                                                : mgnef::OutputFormat::Text;
    if (fcurves->parsed())
        run = [&] { return mgnef::cmd_fcurves(genus, format, raw); }, name = "fcurves";
    else if (table->parsed())
        run = [&] { return mgnef::cmd_table(genus, format); }, name = "table";
    else if (check->parsed())
        run = [&] { return mgnef::cmd_check(genus, divisor); }, name = "check";
    else if (certify->parsed())
        run = [&] { return mgnef::cmd_certify(genus); }, name = "certify";
    else if (rays->parsed())
        run = [&] { return mgnef::cmd_rays(genus, max_dim); }, name = "rays";
    else if (pullback->parsed())
        run = [&] { return mgnef::cmd_pullback(*mgnef::parse_compactification(model_name), abelian, genus); },
        name = "pullback";
    else
        run = [&] { return mgnef::cmd_bpf(genus, m_max, alpha_max, beta_max); }, name = "bpf";

    mgnef::CommandResult result;
    try
    {
        result = run();
    }
    catch (const mgnef::Error& e)
    {
        result = mgnef::usage_error(name, genus, e.what());
    }
    catch (const std::invalid_argument& e)
    {
        result = mgnef::usage_error(name, genus, e.what());
    }
    return emit(result, format, output_path);
}

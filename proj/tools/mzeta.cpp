#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "commands.hpp"

namespace {

enum Exit { kOk = 0, kParse = 2, kBounds = 3, kFailed = 4 };

struct Flag {
    const char* name;
    const char* help;
    enum { Int, Str, Json } type;
};

// Command-specific flags; every command also takes the shared ones.
const std::map<std::string, std::vector<Flag>> kFlags{
    {"zeta", {{"variety", "variety kind or JSON", Flag::Str}, {"a", "trace term a", Flag::Int}, {"n", "dimension", Flag::Int}}},
    {"sympow", {{"variety", "variety kind or JSON", Flag::Str}, {"epoly", "E-polynomial JSON", Flag::Json}, {"n", "top power", Flag::Int}, {"a", "trace term a", Flag::Int}}},
    {"eulerprod", {{"variety", "base kind or JSON", Flag::Str}, {"factor", "geometric|squarefree|inverse|l-square", Flag::Str}, {"family", "family JSON", Flag::Json}}},
    {"oracle", {{"variety", "base kind or JSON", Flag::Str}, {"factor", "factor preset", Flag::Str}, {"family", "family JSON", Flag::Json}, {"cap", "configuration cap", Flag::Int}}},
    {"mult-check", {{"trials", "random pairs", Flag::Int}}},
    {"double-check", {}},
    {"howe", {{"max-blocks", "total blocks", Flag::Int}, {"max-n", "tuple length", Flag::Int}}},
    {"ts-example", {}},
    {"dl-zeta", {{"example", "x2|x2+y2|smooth", Flag::Str}, {"resolution", "resolution JSON", Flag::Json}}},
    {"weight", {{"variety", "variety kind or JSON", Flag::Str}, {"epoly", "E-polynomial JSON", Flag::Json}, {"monclass", "class JSON", Flag::Json}, {"n", "dimension", Flag::Int}}},
    {"radius", {{"variety", "variety kind or JSON", Flag::Str}, {"series", "series JSON", Flag::Json}, {"window", "trailing window", Flag::Int}, {"n", "dimension", Flag::Int}}},
    {"coef-growth", {{"preset", "p1|square", Flag::Str}, {"numerator", "numerator series JSON", Flag::Json}, {"a", "period", Flag::Int}, {"r", "pole order", Flag::Int}}},
    {"pole-order", {{"compactification", "boundary data JSON", Flag::Json}}},
    {"height-demo", {{"max-d", "largest height degree", Flag::Int}, {"compactification", "boundary data JSON", Flag::Json}}},
    {"poisson", {{"n", "dimension", Flag::Int}, {"trials", "random products", Flag::Int}, {"level-bound", "level range", Flag::Int}, {"product", "product JSON", Flag::Json}}},
    {"annulus", {{"qs", "JSON list of field sizes", Flag::Json}, {"max-m", "largest m", Flag::Int}, {"max-d", "largest d", Flag::Int}, {"m", "single m", Flag::Int}, {"d", "single d", Flag::Int}, {"polys", "polynomials per case", Flag::Int}}},
    {"family-poisson", {{"m", "largest divisor degree", Flag::Int}, {"n", "dimension", Flag::Int}, {"levels", "levels JSON", Flag::Json}}},
};

struct Options {
    std::map<std::string, std::string> values;
    std::string scenario, out, format = "json";
};

mzio::Json load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw mz::ParseError("cannot read scenario " + path);
    mzio::Json j = mzio::Json::parse(in);
    if (!j.is_object()) throw mz::ParseError("scenario must be a JSON object");
    return j;
}

mzio::Json params_for(const std::string& cmd, const Options& o) {
    mzio::Json p = o.scenario.empty() ? mzio::Json::object() : load_scenario(o.scenario);
    if (p.contains("command") && p["command"] != cmd) throw mz::ParseError("scenario is for " + p["command"].dump());
    p.erase("command");
    auto type_of = [&](const std::string& name) {
        for (const auto& f : kFlags.at(cmd))
            if (name == f.name) return f.type;
        return name == "variety" ? Flag::Str : Flag::Int;
    };
    for (const auto& [name, text] : o.values) {
        switch (type_of(name)) {
            case Flag::Int: p[name] = std::stoll(text); break;
            case Flag::Json: p[name] = mzio::Json::parse(text); break;
            case Flag::Str:
                if (!text.empty() && (text[0] == '{' || text[0] == '['))
                    p[name] = mzio::Json::parse(text);
                else
                    p[name] = text;
        }
    }
    return p;
}

int run(const std::string& cmd, const Options& o) {
    mzio::Json params = params_for(cmd, o);
    mzio::Report report = mzio::run_command(cmd, params);
    std::string text = mzio::render(report, cmd, params, o.format);
    if (o.out.empty()) {
        std::cout << text;
    } else {
        std::filesystem::create_directories(o.out);
        auto path = std::filesystem::path(o.out) / (cmd + "." + o.format);
        std::ofstream(path) << text;
        std::cerr << "wrote " << path.string() << "\n";
    }
    return report.ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Motivic zeta functions and Euler products"};
    app.set_version_flag("--version", mzio::kVersion);
    app.require_subcommand(1);
    Options opts;
    std::string chosen;
    for (const auto& cmd : mzio::command_names()) {
        CLI::App* sub = app.add_subcommand(cmd);
        auto add = [&](const std::string& name, const std::string& help) {
            sub->add_option_function<std::string>(
                "--" + name, [&opts, name](const std::string& v) { opts.values[name] = v; }, help);
        };
        add("q", "field size");
        add("prec", "series precision");
        add("seed", "random seed");
        for (const auto& f : kFlags.at(cmd)) add(f.name, f.help);
        sub->add_option("--out", opts.out, "write <dir>/<command>.<format>");
        sub->add_option("--format", opts.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--scenario", opts.scenario, "JSON file of parameters; flags override");
        sub->callback([&chosen, cmd] { chosen = cmd; });
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kParse;
    }
    try {
        return run(chosen, opts);
    } catch (const mz::BoundsError& e) {
        std::cerr << "bounds: " << e.what() << "\n";
        return kBounds;
    } catch (const mz::ParseError& e) {
        std::cerr << "parse: " << e.what() << "\n";
        return kParse;
    } catch (const mz::DomainError& e) {
        std::cerr << "domain: " << e.what() << "\n";
        return kParse;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "parse: " << e.what() << "\n";
        return kParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "parse: " << e.what() << "\n";
        return kParse;
    } catch (const std::out_of_range& e) {
        std::cerr << "parse: " << e.what() << "\n";
        return kParse;
    }
}

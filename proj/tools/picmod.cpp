// picmod — Picard groups of moduli spaces of curves with symmetry, computed
// from finite presentations of symmetric mapping class groups and checked
// against closed-form theorems.
//
// Exit codes: 0 success, 2 parse/usage error, 3 domain error (bounds, not
// admissible, below the g >= 2 regime), 4 internal route disagreement.
// stdout carries data only; diagnostics go to stderr.

#include "picmod/pipeline.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <map>
#include <string>
#include <vector>

namespace {

void emit_report(const picmod::PicardReport& r, bool json) {
    if (json)
        std::cout << picmod::report_to_json(r).dump(2) << '\n';
    else
        std::cout << picmod::render_report(r);
}

void emit_sweep(const std::vector<picmod::PicardReport>& rows, bool json) {
    if (json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : rows) arr.push_back(picmod::report_to_json(r));
        std::cout << arr.dump(2) << '\n';
        return;
    }
    for (const auto& r : rows)
        std::cout << r.subject << '\t' << r.result_string() << '\t' << r.method << '\n';
}

// "a..b" inclusive, or a single value "a"
picmod::SweepRange parse_range(const std::string& text) {
    auto parse_num = [&](const std::string& s) -> unsigned long {
        try {
            std::size_t used = 0;
            unsigned long v = std::stoul(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            throw picmod::ParseError("range '" + text + "': bad number '" + s + "'");
        }
    };
    std::size_t dots = text.find("..");
    if (dots == std::string::npos) {
        unsigned long v = parse_num(text);
        return {v, v};
    }
    return {parse_num(text.substr(0, dots)), parse_num(text.substr(dots + 2))};
}

std::string oracle_listing() {
    std::string out = "available oracles:\n";
    for (const auto& info : picmod::oracle_registry()) {
        out += "  " + info.name;
        for (const auto& p : info.params) out += " <" + p + ">";
        out += "  -- " + info.summary + "\n";
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Picard groups of moduli spaces of curves with symmetry"};
    app.require_subcommand(1);

    auto* cover = app.add_subcommand(
        "cover", "analyze a cyclic cover of the sphere and compute Pic via both routes");
    std::string spec_text;
    bool cover_json = false;
    cover->add_option("--spec", spec_text,
                      "cover spec, e.g. \"d=2; e=1,1,1,1,1,1\" or JSON "
                      "{\"degree\":2,\"exponents\":[1,1,1,1,1,1]}")
        ->required();
    cover->add_flag("--json", cover_json, "emit the report as JSON");

    auto* oracle = app.add_subcommand("oracle", "evaluate a closed-form theorem value");
    oracle->footer(oracle_listing());
    std::string oracle_name;
    std::vector<std::string> oracle_args;
    bool oracle_json = false;
    oracle->add_option("name", oracle_name, "oracle name")->required();
    oracle->add_option("args", oracle_args, "oracle arguments");
    oracle->add_flag("--json", oracle_json, "emit the report as JSON");

    auto* sweep = app.add_subcommand(
        "sweep", "tabulate an oracle or the cover pipeline over parameter ranges");
    std::string sweep_target;
    bool sweep_json = false;
    std::map<std::string, std::string> range_args;
    sweep->add_option("target", sweep_target,
                      "\"hyperelliptic\", \"admissible\", or an oracle name")
        ->required();
    for (const char* p : {"g", "n", "d", "m", "j"})
        sweep->add_option("--" + std::string(p), range_args[p],
                          std::string("range for parameter ") + p + ", \"a..b\" or \"a\"");
    sweep->add_flag("--json", sweep_json, "emit the rows as a JSON array");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cover->parsed()) {
            emit_report(picmod::run_cover(spec_text), cover_json);
        } else if (oracle->parsed()) {
            emit_report(picmod::run_oracle(oracle_name, oracle_args), oracle_json);
        } else if (sweep->parsed()) {
            std::map<std::string, picmod::SweepRange> ranges;
            for (const auto& [name, text] : range_args)
                if (!text.empty()) ranges[name] = parse_range(text);
            emit_sweep(picmod::run_sweep(sweep_target, ranges), sweep_json);
        }
    } catch (const picmod::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const picmod::RouteMismatchError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 4;
    } catch (const picmod::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}

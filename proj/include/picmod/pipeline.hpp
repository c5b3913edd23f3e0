#pragma once

// The computations behind the CLI subcommands, exposed as library functions
// so they can be exercised in-process. Errors map to exit codes at the CLI
// boundary: ParseError -> 2, DomainError -> 3, RouteMismatchError -> 4.

#include "picmod/report.hpp"

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace picmod {

// Two supposedly-equivalent routes disagreed; always a bug, never expected.
class RouteMismatchError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Accepts the "d=2; e=1,1,1,1,1,1" syntax or the JSON object form
// {"degree": 2, "exponents": [1,1,1,1,1,1]}. Computes the group by both the
// presentation route and the closed form and reports "both-agree".
PicardReport run_cover(const std::string& spec_text);

struct OracleInfo {
    std::string name;
    std::vector<std::string> params; // in positional order
    std::string summary;
    std::function<PicardReport(const std::vector<unsigned long>&)> eval;
};

const std::vector<OracleInfo>& oracle_registry();

PicardReport run_oracle(const std::string& name, const std::vector<std::string>& args);

// Inclusive parameter range.
using SweepRange = std::pair<unsigned long, unsigned long>;

// target: "hyperelliptic" (needs g), "admissible" (needs n and d), or any
// registered oracle name (needs each of its parameters). Rows come back in
// row-major grid order over the parameters in declaration order.
std::vector<PicardReport> run_sweep(const std::string& target,
                                    const std::map<std::string, SweepRange>& ranges);

} // namespace picmod

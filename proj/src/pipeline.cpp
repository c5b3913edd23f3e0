#include "picmod/pipeline.hpp"

#include "picmod/braid.hpp"
#include "picmod/covers.hpp"
#include "picmod/oracles.hpp"
#include "picmod/presentations.hpp"

#include <algorithm>
#include <sstream>

namespace picmod {

namespace {

// Citation tags; docs/citations.md maps them to full statements.
namespace tag {
constexpr const char* pic_cyclic_cover = "pic-cyclic-cover";
constexpr const char* gw_admissible = "gw-admissible";
constexpr const char* bh_presentation = "bh-presentation";
constexpr const char* admissible_h1 = "admissible-h1-order";
constexpr const char* pic_hyperelliptic = "pic-hyperelliptic";
constexpr const char* gw_superelliptic = "gw-superelliptic-h1";
constexpr const char* putman_sato = "putman-sato-level-h1";
constexpr const char* lambda30 = "lambda30-reduction";
constexpr const char* pic_ct_torsion = "pic-compact-type-torsion";
constexpr const char* sp2_f2 = "sp2g-f2-order";
constexpr const char* acampo = "acampo-components";
constexpr const char* h1_gg = "h1-gg";
constexpr const char* pic_hyp_ct = "pic-hyp-compact-type";
constexpr const char* delta_level2 = "delta-level2-h1";
constexpr const char* pmod_sphere = "pmod-sphere-h1";
constexpr const char* arnold = "arnold-braid-cohomology";
} // namespace tag

std::string join_exponents(const CyclicCoverSpec& spec) {
    std::ostringstream os;
    for (std::size_t i = 0; i < spec.exponents().size(); ++i) {
        if (i) os << ',';
        os << spec.exponents()[i];
    }
    return os.str();
}

CyclicCoverSpec parse_spec_text_or_json(const std::string& text) {
    std::size_t i = text.find_first_not_of(" \t\r\n");
    if (i != std::string::npos && text[i] == '{') {
        nlohmann::json j = nlohmann::json::parse(text, nullptr, /*allow_exceptions=*/false);
        if (j.is_discarded()) throw ParseError("cover spec: invalid JSON");
        if (!j.contains("degree") || !j.contains("exponents"))
            throw ParseError("cover spec: JSON form needs \"degree\" and \"exponents\"");
        try {
            return CyclicCoverSpec(j.at("degree").get<unsigned>(),
                                   j.at("exponents").get<std::vector<unsigned>>());
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("cover spec: ") + e.what());
        } catch (const DomainError& e) {
            throw ParseError(e.what());
        }
    }
    return CyclicCoverSpec::parse(text);
}

PicardReport cover_report(const CyclicCoverSpec& spec) {
    CoverAnalysis a = analyze(spec);
    // throws with diagnostics when not admissible or below the g >= 2 regime
    FgAbelianGroup presented = smcg_abelianization(spec);
    FgAbelianGroup closed = FgAbelianGroup::from_cyclic_factors(
        0, {oracles::admissible_h1_order(a.branch_count, spec.degree())});
    if (presented != closed)
        throw RouteMismatchError("cover " + spec.to_text() + ": presentation route gave " +
                                 presented.to_string() + " but the closed form gives " +
                                 closed.to_string());

    PicardReport r;
    if (spec.degree() == 2)
        r.subject = "H_" + std::to_string(a.genus);
    else
        r.subject = "M_" + std::to_string(a.genus) + "^H (cyclic cover, d=" +
                    std::to_string(spec.degree()) + ")";
    r.method = kMethodBothAgree;
    r.citations = {tag::pic_cyclic_cover, tag::gw_admissible, tag::bh_presentation,
                   tag::admissible_h1};
    r.group = presented;
    r.inputs = {{"spec", spec.to_text()},
                {"degree", std::to_string(spec.degree())},
                {"exponents", join_exponents(spec)},
                {"genus", std::to_string(a.genus)},
                {"branch_count", std::to_string(a.branch_count)},
                {"condition", std::to_string(*a.admissible_condition)}};
    if (a.balanced_superelliptic)
        r.inputs["balanced_superelliptic"] =
            "d=" + std::to_string(a.balanced_superelliptic->first) +
            ",n=" + std::to_string(a.balanced_superelliptic->second);
    return r;
}

// (n, d) cell of the admissible-cover grid: Birman-Hilden presentation on one
// side, the closed-form order on the other.
PicardReport admissible_cell(unsigned long n, unsigned long d) {
    FgAbelianGroup presented =
        abelianization(birman_hilden_presentation(static_cast<unsigned>(n),
                                                  static_cast<unsigned>(d)));
    Integer order = oracles::admissible_h1_order(static_cast<unsigned>(n),
                                                 static_cast<unsigned>(d));
    FgAbelianGroup closed = FgAbelianGroup::from_cyclic_factors(0, {order});
    if (presented != closed)
        throw RouteMismatchError("admissible (n=" + std::to_string(n) +
                                 ", d=" + std::to_string(d) + "): presentation route gave " +
                                 presented.to_string() + " but the closed form gives " +
                                 closed.to_string());
    PicardReport r;
    r.subject = "admissible cover (n=" + std::to_string(n) + ", d=" + std::to_string(d) + ")";
    r.method = kMethodBothAgree;
    r.citations = {tag::bh_presentation, tag::admissible_h1};
    r.group = presented;
    r.inputs = {{"n", std::to_string(n)}, {"d", std::to_string(d)}};
    return r;
}

PicardReport group_report(std::string subject, FgAbelianGroup g,
                          std::vector<std::string> citations,
                          std::map<std::string, std::string> inputs) {
    PicardReport r;
    r.subject = std::move(subject);
    r.method = kMethodClosedForm;
    r.citations = std::move(citations);
    r.inputs = std::move(inputs);
    r.group = std::move(g);
    return r;
}

PicardReport value_report(std::string subject, Integer v, std::vector<std::string> citations,
                          std::map<std::string, std::string> inputs) {
    PicardReport r;
    r.subject = std::move(subject);
    r.method = kMethodClosedForm;
    r.citations = std::move(citations);
    r.inputs = std::move(inputs);
    r.value = std::move(v);
    return r;
}

std::map<std::string, std::string> echo(const std::vector<std::string>& params,
                                        const std::vector<unsigned long>& args) {
    std::map<std::string, std::string> m;
    for (std::size_t i = 0; i < params.size(); ++i) m[params[i]] = std::to_string(args[i]);
    return m;
}

std::vector<OracleInfo> build_registry() {
    using Args = const std::vector<unsigned long>&;
    auto u = [](unsigned long v) { return static_cast<unsigned>(v); };

    std::vector<OracleInfo> reg;
    reg.push_back({"pic-hyp",
                   {"g"},
                   "Picard group of the hyperelliptic locus H_g",
                   [=](Args a) {
                       return group_report("H_" + std::to_string(a[0]),
                                           oracles::hyperelliptic_pic(u(a[0])),
                                           {tag::pic_hyperelliptic}, echo({"g"}, a));
                   }});
    reg.push_back({"admissible-order",
                   {"n", "d"},
                   "order (n-1)*gcd(n,2d) of H_1 for an admissible cover",
                   [=](Args a) {
                       return value_report("admissible cover (n=" + std::to_string(a[0]) +
                                               ", d=" + std::to_string(a[1]) + ")",
                                           oracles::admissible_h1_order(u(a[0]), u(a[1])),
                                           {tag::admissible_h1}, echo({"n", "d"}, a));
                   }});
    reg.push_back({"balanced-superelliptic-h1",
                   {"n"},
                   "H_1 of the liftable mapping class group of a balanced superelliptic cover",
                   [=](Args a) {
                       return group_report("balanced superelliptic cover (n=" +
                                               std::to_string(a[0]) + ")",
                                           oracles::balanced_superelliptic_h1(u(a[0])),
                                           {tag::gw_superelliptic}, echo({"n"}, a));
                   }});
    reg.push_back({"sp-level-h1",
                   {"g", "m"},
                   "H_1 of the level-m symplectic group Sp_g(Z)[m]",
                   [=](Args a) {
                       return group_report("Sp_" + std::to_string(a[0]) + "(Z)[" +
                                               std::to_string(a[1]) + "]",
                                           oracles::sp_level_h1(u(a[0]), u(a[1])),
                                           {tag::putman_sato}, echo({"g", "m"}, a));
                   }});
    reg.push_back({"lambda3-0",
                   {"g", "m"},
                   "Lambda^3_0 V_m = Lambda^3 V_m / (theta ^ V_m)",
                   [=](Args a) {
                       return group_report("Lambda^3_0 V_" + std::to_string(a[1]) +
                                               " (g=" + std::to_string(a[0]) + ")",
                                           oracles::lambda3_0(u(a[0]), u(a[1])),
                                           {tag::lambda30}, echo({"g", "m"}, a));
                   }});
    reg.push_back({"pic-mgc-torsion",
                   {"g", "m"},
                   "torsion of Pic of the level-m compact-type moduli space",
                   [=](Args a) {
                       return group_report("M_" + std::to_string(a[0]) + "^c[" +
                                               std::to_string(a[1]) + "] torsion",
                                           oracles::pic_mgc_torsion(u(a[0]), u(a[1])),
                                           {tag::pic_ct_torsion, tag::lambda30, tag::putman_sato},
                                           echo({"g", "m"}, a));
                   }});
    reg.push_back({"sp2-order",
                   {"g"},
                   "order of the symplectic group over F_2",
                   [=](Args a) {
                       return value_report("Sp_" + std::to_string(2 * a[0]) + "(F_2)",
                                           oracles::sp2_order(u(a[0])), {tag::sp2_f2},
                                           echo({"g"}, a));
                   }});
    reg.push_back({"components",
                   {"g", "m"},
                   "number of components of the level-m hyperelliptic locus",
                   [=](Args a) {
                       return value_report("M_" + std::to_string(a[0]) + "^hyp[" +
                                               std::to_string(a[1]) + "] components",
                                           oracles::hyperelliptic_level_components(u(a[0]),
                                                                                   u(a[1])),
                                           {tag::acampo, tag::sp2_f2}, echo({"g", "m"}, a));
                   }});
    reg.push_back({"gg-abelianization",
                   {"g"},
                   "abelianization of the symplectic image of the hyperelliptic group",
                   [=](Args a) {
                       return group_report("G_" + std::to_string(a[0]) + " abelianization",
                                           oracles::gg_abelianization(u(a[0])), {tag::h1_gg},
                                           echo({"g"}, a));
                   }});
    reg.push_back({"pic-hyp-compact",
                   {"g"},
                   "Picard group of the compact-type hyperelliptic locus H_g^c",
                   [=](Args a) {
                       return group_report("H_" + std::to_string(a[0]) + "^c",
                                           oracles::pic_hyp_compact_type(u(a[0])),
                                           {tag::pic_hyp_ct}, echo({"g"}, a));
                   }});
    reg.push_back({"delta-level2-h1",
                   {"g"},
                   "H_1 of the level-2 hyperelliptic mapping class group",
                   [=](Args a) {
                       return group_report("Delta_" + std::to_string(a[0]) + "[2]",
                                           oracles::delta_g_level2_h1(u(a[0])),
                                           {tag::delta_level2}, echo({"g"}, a));
                   }});
    reg.push_back({"pmod-sphere-h1",
                   {"n"},
                   "H_1 of the pure mapping class group of the n-marked sphere",
                   [=](Args a) {
                       return group_report("PMod(S_0," + std::to_string(a[0]) + ")",
                                           oracles::pmod_sphere_h1(u(a[0])), {tag::pmod_sphere},
                                           echo({"n"}, a));
                   }});
    reg.push_back({"arnold-braid-cohomology",
                   {"n", "j"},
                   "dim_Q H^j(B_n, Q)",
                   [=](Args a) {
                       return value_report("H^" + std::to_string(a[1]) + "(B_" +
                                               std::to_string(a[0]) + ", Q)",
                                           oracles::arnold_braid_cohomology(u(a[0]), u(a[1])),
                                           {tag::arnold}, echo({"n", "j"}, a));
                   }});
    return reg;
}

unsigned long parse_arg(const std::string& s) {
    unsigned long v = 0;
    try {
        std::size_t used = 0;
        // stoul accepts a leading '-' by wrapping; reject it up front
        if (s.empty() || s[0] == '-') throw std::invalid_argument(s);
        v = std::stoul(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
    } catch (const std::exception&) {
        throw ParseError("argument '" + s + "' is not a non-negative integer");
    }
    if (v > 1000000) throw DomainError("argument " + s + " is unreasonably large");
    return v;
}

} // namespace

const std::vector<OracleInfo>& oracle_registry() {
    static const std::vector<OracleInfo> reg = build_registry();
    return reg;
}

PicardReport run_cover(const std::string& spec_text) {
    return cover_report(parse_spec_text_or_json(spec_text));
}

PicardReport run_oracle(const std::string& name, const std::vector<std::string>& args) {
    for (const OracleInfo& info : oracle_registry()) {
        if (info.name != name) continue;
        if (args.size() != info.params.size()) {
            std::ostringstream os;
            os << "oracle '" << name << "' expects " << info.params.size() << " argument(s):";
            for (const std::string& p : info.params) os << ' ' << p;
            throw ParseError(os.str());
        }
        std::vector<unsigned long> values;
        values.reserve(args.size());
        for (const std::string& a : args) values.push_back(parse_arg(a));
        return info.eval(values);
    }
    throw ParseError("unknown oracle '" + name + "'");
}

std::vector<PicardReport> run_sweep(const std::string& target,
                                    const std::map<std::string, SweepRange>& ranges) {
    std::vector<std::string> params;
    std::function<PicardReport(const std::vector<unsigned long>&)> eval;

    if (target == "hyperelliptic") {
        params = {"g"};
        eval = [](const std::vector<unsigned long>& a) {
            auto g = static_cast<unsigned>(a[0]);
            return cover_report(CyclicCoverSpec(2, std::vector<unsigned>(2 * g + 2, 1u)));
        };
    } else if (target == "admissible") {
        params = {"n", "d"};
        eval = [](const std::vector<unsigned long>& a) { return admissible_cell(a[0], a[1]); };
    } else {
        for (const OracleInfo& info : oracle_registry()) {
            if (info.name == target) {
                params = info.params;
                eval = info.eval;
                break;
            }
        }
        if (!eval) throw ParseError("unknown sweep target '" + target + "'");
    }

    std::vector<SweepRange> bounds;
    for (const std::string& p : params) {
        auto it = ranges.find(p);
        if (it == ranges.end())
            throw ParseError("sweep '" + target + "' needs a range for parameter '" + p + "'");
        if (it->second.first > it->second.second)
            throw ParseError("empty range for parameter '" + p + "'");
        bounds.push_back(it->second);
    }
    for (const auto& [name, range] : ranges) {
        (void)range;
        if (std::find(params.begin(), params.end(), name) == params.end())
            throw ParseError("sweep '" + target + "' takes no parameter '" + name + "'");
    }

    std::vector<PicardReport> rows;
    std::vector<unsigned long> point(params.size());
    // row-major over the parameter grid; all cells are pure computations
    std::function<void(std::size_t)> walk = [&](std::size_t dim) {
        if (dim == params.size()) {
            rows.push_back(eval(point));
            return;
        }
        for (unsigned long v = bounds[dim].first; v <= bounds[dim].second; ++v) {
            point[dim] = v;
            walk(dim + 1);
        }
    };
    walk(0);
    return rows;
}

} // namespace picmod

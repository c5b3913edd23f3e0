#include "picmod/covers.hpp"

#include "picmod/braid.hpp"
#include "picmod/presentations.hpp"
#include "picmod/snf.hpp"

#include <numeric>
#include <sstream>

namespace picmod {

CyclicCoverSpec::CyclicCoverSpec(unsigned degree, std::vector<unsigned> exponents)
    : degree_(degree), exponents_(std::move(exponents)) {
    if (degree_ < 2) throw DomainError("cover spec: degree must be >= 2");
    unsigned g = degree_;
    for (unsigned e : exponents_) {
        if (e < 1 || e >= degree_)
            throw DomainError("cover spec: exponents must satisfy 1 <= n_j < d");
        g = std::gcd(g, e);
    }
    if (g != 1)
        throw DomainError("cover spec: gcd(d, n_1, ..., n_k) = " + std::to_string(g) +
                          " != 1, the curve is reducible");
}

CyclicCoverSpec CyclicCoverSpec::parse(const std::string& text) {
    auto trim = [](std::string s) {
        std::size_t b = s.find_first_not_of(" \t");
        std::size_t e = s.find_last_not_of(" \t");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    auto parse_uint = [&](const std::string& s) -> unsigned {
        try {
            std::size_t used = 0;
            unsigned long v = std::stoul(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return static_cast<unsigned>(v);
        } catch (const std::exception&) {
            throw ParseError("cover spec: cannot parse number '" + s + "'");
        }
    };

    std::optional<unsigned> d;
    std::optional<std::vector<unsigned>> exps;
    std::istringstream is(text);
    std::string clause;
    while (std::getline(is, clause, ';')) {
        clause = trim(clause);
        if (clause.empty()) continue;
        std::size_t eq = clause.find('=');
        if (eq == std::string::npos)
            throw ParseError("cover spec: expected key=value, got '" + clause + "'");
        std::string key = trim(clause.substr(0, eq));
        std::string value = trim(clause.substr(eq + 1));
        if (key == "d") {
            d = parse_uint(value);
        } else if (key == "e") {
            std::vector<unsigned> es;
            std::istringstream vs(value);
            std::string item;
            while (std::getline(vs, item, ',')) es.push_back(parse_uint(trim(item)));
            exps = std::move(es);
        } else {
            throw ParseError("cover spec: unknown key '" + key + "'");
        }
    }
    if (!d || !exps) throw ParseError("cover spec: need both d=<degree> and e=<exponents>");
    try {
        return CyclicCoverSpec(*d, std::move(*exps));
    } catch (const DomainError& err) {
        throw ParseError(err.what());
    }
}

std::string CyclicCoverSpec::to_text() const {
    std::ostringstream os;
    os << "d=" << degree_ << "; e=";
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        if (i) os << ',';
        os << exponents_[i];
    }
    return os.str();
}

std::optional<int> is_numerically_admissible(const CyclicCoverSpec& spec) {
    const unsigned d = spec.degree();
    const auto& e = spec.exponents();
    const std::size_t k = e.size();

    bool all_equal = true;
    for (unsigned x : e)
        if (x != e.front()) all_equal = false;
    if (all_equal && (k % d == 0 || (k + 1) % d == 0)) return 1;
    if (d >= 3 && k == 1) return 2;
    if (d >= 3 && k == 2 && (e[0] + e[1]) % d == 0) return 3;
    return std::nullopt;
}

std::optional<unsigned> is_balanced_superelliptic(unsigned g, unsigned d) {
    if (g < 2) throw DomainError("is_balanced_superelliptic: need g >= 2");
    if (d < 3) throw DomainError("is_balanced_superelliptic: superelliptic degree must be >= 3");
    if (g % (d - 1) != 0) return std::nullopt;
    return g / (d - 1);
}

CoverAnalysis analyze(const CyclicCoverSpec& spec) {
    const unsigned d = spec.degree();
    const auto& e = spec.exponents();

    unsigned long sum = 0;
    for (unsigned x : e) sum += x;
    const unsigned n_inf = static_cast<unsigned>((d - sum % d) % d);

    CoverAnalysis a;
    a.branch_count = static_cast<unsigned>(e.size()) + (n_inf != 0 ? 1 : 0);

    // Riemann-Hurwitz: 2 - 2g = 2d - sum over branch points of (d - gcd(n_p, d))
    long ramification = 0;
    for (unsigned x : e) ramification += d - std::gcd(x, d);
    if (n_inf != 0) ramification += d - std::gcd(n_inf, d);
    long chi = 2L * d - ramification; // Euler characteristic of the total space
    if (chi % 2 != 0 || chi > 2)
        throw std::logic_error("analyze: Riemann-Hurwitz gave an impossible Euler characteristic");
    a.genus = static_cast<unsigned>((2 - chi) / 2);

    a.admissible_condition = is_numerically_admissible(spec);

    if (d >= 3 && a.genus >= 2) {
        if (auto n = is_balanced_superelliptic(a.genus, d); n && a.branch_count == 2 * *n + 2)
            a.balanced_superelliptic = std::make_pair(d, *n);
    }
    return a;
}

namespace {

std::string admissibility_diagnostics(const CyclicCoverSpec& spec) {
    const unsigned d = spec.degree();
    const auto& e = spec.exponents();
    const std::size_t k = e.size();
    std::ostringstream os;
    os << "cover " << spec.to_text() << " is not numerically admissible:";

    bool all_equal = true;
    for (unsigned x : e)
        if (x != e.front()) all_equal = false;
    os << " condition 1 fails (";
    if (!all_equal)
        os << "exponents are not all equal";
    else
        os << "k=" << k << " is neither 0 nor -1 mod d=" << d;
    os << ");";

    os << " condition 2 fails (";
    if (d < 3)
        os << "d=" << d << " < 3";
    else
        os << "k=" << k << " != 1";
    os << ");";

    os << " condition 3 fails (";
    if (d < 3)
        os << "d=" << d << " < 3";
    else if (k != 2)
        os << "k=" << k << " != 2";
    else
        os << "n_1=" << e[0] << " is not -n_2=-" << e[1] << " mod d=" << d;
    os << ")";
    return os.str();
}

} // namespace

FgAbelianGroup smcg_abelianization(const CyclicCoverSpec& spec) {
    CoverAnalysis a = analyze(spec);
    if (!a.admissible()) throw DomainError(admissibility_diagnostics(spec));
    if (!a.in_mcg_regime())
        throw DomainError("cover " + spec.to_text() + " has total-space genus " +
                          std::to_string(a.genus) + ", outside the g >= 2 regime");
    return abelianization(birman_hilden_presentation(a.branch_count, spec.degree()));
}

} // namespace picmod

#ifndef EXPC_IO_HPP
#define EXPC_IO_HPP

#include <cctype>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "expc/complexity.hpp"
#include "expc/error.hpp"
#include "expc/sequence.hpp"
#include "expc/unipoly.hpp"

namespace expc {

// Sequence file format:
//   p <prime>
//   <s_0> <s_1> ...          (any whitespace, any number of lines)
inline SequencePrefix read_sequence(std::istream& in)
{
    std::string tag;
    std::int64_t p = 0;
    if (!(in >> tag >> p) || tag != "p") throw parse_error("sequence file must start with 'p <prime>'");
    if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)) || p >= (std::int64_t{1} << 31))
        throw parse_error("modulus is not a prime below 2^31: " + std::to_string(p));
    const PrimeField F(static_cast<std::uint64_t>(p));
    std::vector<Fp> s;
    std::string tok;
    while (in >> tok) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(tok, &used);
        } catch (const std::exception&) {
            throw parse_error("not an integer: '" + tok + "'");
        }
        if (used != tok.size()) throw parse_error("not an integer: '" + tok + "'");
        if (v < 0 || v >= p) throw parse_error("element out of range [0, p): " + tok);
        s.push_back(Fp{static_cast<std::uint32_t>(v)});
    }
    if (s.empty()) throw parse_error("sequence file has no elements");
    return SequencePrefix(F, std::move(s));
}

inline void write_sequence(std::ostream& out, const SequencePrefix& s)
{
    out << "p " << s.p() << '\n';
    for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i].v;
    out << '\n';
}

// Ascending comma-separated integer coefficients, reduced mod p:
// "0,1,-1" is x - x^2. An empty string is the zero polynomial.
inline UniPoly parse_poly(const std::string& text, const PrimeField& F)
{
    std::vector<Fp> c;
    if (text.empty()) return UniPoly(F);
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(tok, &used);
        } catch (const std::exception&) {
            throw parse_error("bad polynomial coefficient '" + tok + "'");
        }
        while (used < tok.size() && std::isspace(static_cast<unsigned char>(tok[used]))) ++used;
        if (used != tok.size()) throw parse_error("bad polynomial coefficient '" + tok + "'");
        c.push_back(F.from_int(v));
    }
    return UniPoly(F, std::move(c));
}

inline std::string to_string(const UniPoly& f)
{
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    auto c = f.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || c[i].v != 1) os << c[i].v << (i ? "*" : "");
        if (i >= 1) os << 'x';
        if (i >= 2) os << '^' << i;
    }
    return os.str();
}

inline const char* csv_header() { return "N,E,EstarLo,EstarIrred,EstarHi,EstarExact,L,ThmChecks"; }

// ThmChecks is a ';'-joined list of name=pass|fail in name order.
inline void write_profile_csv(std::ostream& out, const std::vector<ProfileRow>& rows)
{
    out << csv_header() << '\n';
    auto opt = [](const std::optional<std::uint32_t>& v) { return v ? std::to_string(*v) : std::string(); };
    for (const auto& r : rows) {
        out << r.N << ',' << r.E << ',';
        if (r.iexp)
            out << r.iexp->lower << ',' << opt(r.iexp->upper_irred) << ',' << r.iexp->upper << ','
                << opt(r.iexp->exact);
        else
            out << ",,,";
        out << ',' << r.L << ',';
        bool first = true;
        for (const auto& [name, ok] : r.bound_checks) {
            out << (first ? "" : ";") << name << '=' << (ok ? "pass" : "fail");
            first = false;
        }
        out << '\n';
    }
}

inline nlohmann::ordered_json profile_to_json(const std::vector<ProfileRow>& rows)
{
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json j;
        j["N"] = r.N;
        j["E"] = r.E;
        if (r.iexp) {
            j["EstarLo"] = r.iexp->lower;
            j["EstarIrred"] = r.iexp->upper_irred ? nlohmann::ordered_json(*r.iexp->upper_irred) : nullptr;
            j["EstarHi"] = r.iexp->upper;
            j["EstarExact"] = r.iexp->exact ? nlohmann::ordered_json(*r.iexp->exact) : nullptr;
        }
        j["L"] = r.L;
        nlohmann::ordered_json checks = nlohmann::ordered_json::object();
        for (const auto& [name, ok] : r.bound_checks) checks[name] = ok;
        j["ThmChecks"] = checks;
        arr.push_back(std::move(j));
    }
    return arr;
}

} // namespace expc

#endif

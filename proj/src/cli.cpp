#include "fibsect/cli.hpp"

#include <cerrno>
#include <cstdlib>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>
#include <utility>

#include "json.hpp"

#include "fibsect/chebyshev.hpp"
#include "fibsect/dsection.hpp"
#include "fibsect/seqcore.hpp"
#include "fibsect/verify.hpp"

namespace fibsect::cli {

namespace {

using nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { plain, json, csv };

struct GlobalOpts {
    Format format = Format::plain;
    bool quiet = false;
};

// Everything a data-emitting subcommand produces: the echoed parameters,
// the integer terms (exact decimal strings at emission time), a parallel
// index column for CSV, and the route that generated the terms.
struct OutputRecord {
    ordered_json params = ordered_json::object();
    std::vector<Int> terms;
    std::vector<long long> indices;
    std::string route = "direct";
};

long long parse_int(const std::string& s, const std::string& what) {
    errno = 0;
    char* end = nullptr;
    const long long v = std::strtoll(s.c_str(), &end, 10);
    if (errno != 0 || end == s.c_str() || *end != '\0')
        throw UsageError(what + ": not an integer: '" + s + "'");
    return v;
}

// Tokens starting with "--" are flags; anything else (including negative
// numbers) is a positional or a flag value.
struct ParsedArgs {
    std::map<std::string, std::string> values;
    std::set<std::string> switches;
    std::vector<std::string> positionals;
};

ParsedArgs parse_flags(const std::vector<std::string>& args, std::size_t start,
                       const std::set<std::string>& value_flags,
                       const std::set<std::string>& switch_flags) {
    ParsedArgs out;
    for (std::size_t i = start; i < args.size(); ++i) {
        const std::string& t = args[i];
        if (t.rfind("--", 0) != 0) {
            out.positionals.push_back(t);
            continue;
        }
        if (switch_flags.count(t)) {
            out.switches.insert(t);
            continue;
        }
        if (value_flags.count(t)) {
            if (i + 1 >= args.size()) throw UsageError("missing value for " + t);
            if (out.values.count(t)) throw UsageError("duplicate flag " + t);
            out.values[t] = args[++i];
            continue;
        }
        throw UsageError("unknown flag " + t);
    }
    return out;
}

long long require_int(const ParsedArgs& p, const std::string& flag) {
    auto it = p.values.find(flag);
    if (it == p.values.end()) throw UsageError("missing required flag " + flag);
    return parse_int(it->second, flag);
}

std::size_t require_count(const ParsedArgs& p, const std::string& flag) {
    const long long v = require_int(p, flag);
    if (v < 0) throw UsageError(flag + " must be >= 0");
    return static_cast<std::size_t>(v);
}

void emit_record(const OutputRecord& rec, const GlobalOpts& g, std::ostream& out) {
    if (g.quiet) return;
    switch (g.format) {
        case Format::plain: {
            for (std::size_t i = 0; i < rec.terms.size(); ++i) {
                if (i) out << " ";
                out << to_decimal(rec.terms[i]);
            }
            out << "\n";
            break;
        }
        case Format::json: {
            ordered_json doc;
            doc["params"] = rec.params;
            auto terms = ordered_json::array();
            for (const auto& t : rec.terms) terms.push_back(to_decimal(t));
            doc["terms"] = std::move(terms);
            doc["meta"] = {{"route", rec.route}, {"version", kVersion}};
            out << doc.dump() << "\n";
            break;
        }
        case Format::csv: {
            out << "n,value\n";
            for (std::size_t i = 0; i < rec.terms.size(); ++i)
                out << rec.indices[i] << "," << to_decimal(rec.terms[i]) << "\n";
            break;
        }
    }
}

void emit_report(const VerifyReport& rep, const ordered_json& params, const GlobalOpts& g,
                 std::ostream& out) {
    if (g.quiet) return;
    switch (g.format) {
        case Format::plain: {
            out << "suite=" << rep.suite << " checked=" << rep.checked
                << " failed=" << rep.failed << "\n";
            for (const auto& f : rep.failures) out << "fail " << f << "\n";
            break;
        }
        case Format::json: {
            ordered_json doc;
            doc["params"] = params;
            doc["report"] = {{"suite", rep.suite},
                             {"checked", rep.checked},
                             {"failed", rep.failed},
                             {"failures", rep.failures}};
            doc["meta"] = {{"route", "verify"}, {"version", kVersion}};
            out << doc.dump() << "\n";
            break;
        }
        case Format::csv: {
            out << "suite,checked,failed\n";
            out << rep.suite << "," << rep.checked << "," << rep.failed << "\n";
            break;
        }
    }
}

std::vector<long long> iota_indices(std::size_t n, long long start = 0) {
    std::vector<long long> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = start + static_cast<long long>(i);
    return idx;
}

OutputRecord cmd_fib_lucas(const std::string& name, const ParsedArgs& p) {
    const bool is_fib = name == "fib";
    OutputRecord rec;
    rec.params["command"] = name;
    rec.route = "doubling";
    if (auto it = p.values.find("--range"); it != p.values.end()) {
        // --range consumed one value token; the second bound arrives as a
        // positional right after it.
        if (p.positionals.size() != 1)
            throw UsageError(name + ": --range needs exactly two bounds");
        const long long a = parse_int(it->second, "--range");
        const long long b = parse_int(p.positionals[0], "--range");
        if (a > b) throw UsageError(name + ": --range bounds must satisfy A <= B");
        rec.params["range"] = {a, b};
        for (long long i = a; i <= b; ++i) {
            rec.terms.push_back(is_fib ? fib(i) : lucas(i));
            rec.indices.push_back(i);
        }
        return rec;
    }
    if (p.positionals.size() != 1) throw UsageError(name + ": expected a single index N");
    const long long n = parse_int(p.positionals[0], "index");
    rec.params["n"] = n;
    rec.terms.push_back(is_fib ? fib(n) : lucas(n));
    rec.indices.push_back(n);
    return rec;
}

OutputRecord cmd_section(const ParsedArgs& p) {
    const long long d = require_int(p, "--d");
    const long long h = require_int(p, "--h");
    const SequenceKind kind =
        p.switches.count("--lucas") ? SequenceKind::lucas : SequenceKind::fibonacci;
    OutputRecord rec;
    rec.params["command"] = "section";
    rec.params["d"] = d;
    rec.params["h"] = h;
    rec.params["kind"] = to_string(kind);
    if (p.switches.count("--gf")) {
        rec.params["gf"] = true;
        rec.route = "closed";
        const SectionGF gf = section_gf(d, h, kind);
        // Flattened as c0 c1 q0 q1 q2: numerator padded to degree 1, the
        // denominator always has degree exactly 2.
        rec.terms = {gf.num.coeff(0), gf.num.coeff(1), gf.den.coeff(0), gf.den.coeff(1),
                     gf.den.coeff(2)};
        rec.indices = iota_indices(rec.terms.size());
        return rec;
    }
    const std::size_t n_terms = require_count(p, "--terms");
    rec.params["terms"] = n_terms;
    rec.terms = section_terms({d, h, 0}, kind, n_terms);
    rec.indices = iota_indices(n_terms);
    return rec;
}

OutputRecord cmd_conv(const ParsedArgs& p) {
    SectionParams sp;
    sp.d = require_int(p, "--d");
    sp.h = require_int(p, "--h");
    sp.s = require_int(p, "--s");
    const std::size_t n_terms = require_count(p, "--terms");
    const SequenceKind kind =
        p.switches.count("--lucas") ? SequenceKind::lucas : SequenceKind::fibonacci;
    std::string route = "closed";
    if (auto it = p.values.find("--route"); it != p.values.end()) route = it->second;

    OutputRecord rec;
    rec.params["command"] = "conv";
    rec.params["d"] = sp.d;
    rec.params["h"] = sp.h;
    rec.params["s"] = sp.s;
    rec.params["kind"] = to_string(kind);
    rec.params["terms"] = n_terms;
    rec.params["route"] = route;
    rec.route = route;
    if (route == "closed")
        rec.terms = conv_terms(sp, n_terms, kind);
    else if (route == "oracle")
        rec.terms = conv_oracle(sp, n_terms, kind);
    else if (route == "rational")
        rec.terms = conv_rational(sp, n_terms, kind);
    else
        throw UsageError("--route must be closed, oracle or rational");
    rec.indices = iota_indices(n_terms);
    return rec;
}

OutputRecord cmd_cheb(const ParsedArgs& p) {
    ChebParams cp;
    cp.n = require_int(p, "--n");
    cp.s = require_int(p, "--s");
    cp.eps = -1;
    bool signed_family = false;
    if (auto it = p.values.find("--eps"); it != p.values.end()) {
        signed_family = true;
        if (it->second == "+1" || it->second == "1")
            cp.eps = 1;
        else if (it->second == "-1")
            cp.eps = -1;
        else
            throw UsageError("--eps must be +1 or -1");
    }
    const bool monic = p.switches.count("--monic") > 0;
    cp.validate();

    OutputRecord rec;
    rec.params["command"] = "cheb";
    rec.params["n"] = cp.n;
    rec.params["s"] = cp.s;
    rec.params["eps"] = cp.eps;
    rec.params["monic"] = monic;
    rec.route = "explicit";
    IntPolynomial poly;
    if (monic)
        poly = monic_signed_u(cp.n, cp.s, cp.eps);
    else if (signed_family)
        poly = signed_u_explicit(cp.n, cp.s, cp.eps);
    else
        poly = gegen_u_explicit(cp.n, cp.s);
    rec.terms = poly.coeffs();
    rec.indices = iota_indices(rec.terms.size());
    return rec;
}

int cmd_verify(const ParsedArgs& p, const GlobalOpts& g, std::ostream& out) {
    auto it = p.values.find("--suite");
    if (it == p.values.end()) throw UsageError("missing required flag --suite");
    VerifyOptions opt;
    ordered_json params;
    params["command"] = "verify";
    params["suite"] = it->second;
    if (auto d = p.values.find("--max-d"); d != p.values.end()) {
        opt.max_d = parse_int(d->second, "--max-d");
        if (opt.max_d < 1) throw UsageError("--max-d must be >= 1");
        params["max_d"] = opt.max_d;
    }
    if (auto s = p.values.find("--max-s"); s != p.values.end()) {
        opt.max_s = parse_int(s->second, "--max-s");
        if (opt.max_s < 0) throw UsageError("--max-s must be >= 0");
        params["max_s"] = opt.max_s;
    }
    VerifyReport rep;
    try {
        rep = run_suite(it->second, opt);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    emit_report(rep, params, g, out);
    return rep.ok() ? 0 : 1;
}

constexpr const char* kUsage =
    "usage: fibsect <command> [flags]\n"
    "\n"
    "commands:\n"
    "  fib N | fib --range A B          Fibonacci numbers (any integer index)\n"
    "  lucas N | lucas --range A B      Lucas numbers (any integer index)\n"
    "  section --d D --h H [--lucas] (--terms N | --gf)\n"
    "                                   terms F_{Dn+H} (or L_{Dn+H}), or the\n"
    "                                   generating-function coefficients\n"
    "  conv --d D --h H --s S --terms N [--route closed|oracle|rational] [--lucas]\n"
    "                                   s-fold convolution coefficients\n"
    "  cheb --n N --s S [--eps +1|-1] [--monic]\n"
    "                                   polynomial coefficient lists\n"
    "  verify --suite prop|theorem|chebyshev|ladder [--max-d D] [--max-s S]\n"
    "                                   run an identity sweep, report counts\n"
    "\n"
    "global flags: --format plain|json|csv, --quiet\n"
    "exit status: 0 success, 1 verification failure, 2 usage error\n";

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        // Peel global flags off first; they may appear anywhere.
        GlobalOpts g;
        std::vector<std::string> rest;
        for (std::size_t i = 0; i < args.size(); ++i) {
            const std::string& t = args[i];
            if (t == "--format") {
                if (i + 1 >= args.size()) throw UsageError("missing value for --format");
                const std::string& v = args[++i];
                if (v == "plain")
                    g.format = Format::plain;
                else if (v == "json")
                    g.format = Format::json;
                else if (v == "csv")
                    g.format = Format::csv;
                else
                    throw UsageError("--format must be plain, json or csv");
            } else if (t == "--quiet") {
                g.quiet = true;
            } else {
                rest.push_back(t);
            }
        }
        if (rest.empty()) throw UsageError("missing command (try --help)");
        const std::string cmd = rest[0];
        if (cmd == "--help" || cmd == "help") {
            out << kUsage;
            return 0;
        }
        rest.erase(rest.begin());

        if (cmd == "fib" || cmd == "lucas") {
            const auto p = parse_flags(rest, 0, {"--range"}, {});
            emit_record(cmd_fib_lucas(cmd, p), g, out);
            return 0;
        }
        if (cmd == "section") {
            const auto p = parse_flags(rest, 0, {"--d", "--h", "--terms"}, {"--lucas", "--gf"});
            if (!p.positionals.empty())
                throw UsageError("section: unexpected argument '" + p.positionals[0] + "'");
            emit_record(cmd_section(p), g, out);
            return 0;
        }
        if (cmd == "conv") {
            const auto p =
                parse_flags(rest, 0, {"--d", "--h", "--s", "--terms", "--route"}, {"--lucas"});
            if (!p.positionals.empty())
                throw UsageError("conv: unexpected argument '" + p.positionals[0] + "'");
            emit_record(cmd_conv(p), g, out);
            return 0;
        }
        if (cmd == "cheb") {
            const auto p = parse_flags(rest, 0, {"--n", "--s", "--eps"}, {"--monic"});
            if (!p.positionals.empty())
                throw UsageError("cheb: unexpected argument '" + p.positionals[0] + "'");
            emit_record(cmd_cheb(p), g, out);
            return 0;
        }
        if (cmd == "verify") {
            const auto p = parse_flags(rest, 0, {"--suite", "--max-d", "--max-s"}, {});
            if (!p.positionals.empty())
                throw UsageError("verify: unexpected argument '" + p.positionals[0] + "'");
            return cmd_verify(p, g, out);
        }
        throw UsageError("unknown command '" + cmd + "' (try --help)");
    } catch (const UsageError& e) {
        err << "fibsect: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "fibsect: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "fibsect: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace fibsect::cli

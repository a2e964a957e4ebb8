#ifndef CREMFOL_CLI_HPP
#define CREMFOL_CLI_HPP

#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "checks.hpp"
#include "families.hpp"
#include "foliation.hpp"
#include "parser.hpp"
#include "report.hpp"
#include "sampling.hpp"

namespace cremfol {

namespace cli {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitParseError = 2;
constexpr int kExitMathError = 3;

struct Options {
    std::string subcommand;
    std::map<std::string, std::string> flags;
    std::uint64_t seed = kDefaultSeed;
    bool structured = false;
    bool affine = false;
};

inline std::optional<std::string> flag(const Options& o, const std::string& name) {
    auto it = o.flags.find(name);
    if (it == o.flags.end()) return std::nullopt;
    return it->second;
}

/// Session table: geometric variables (x,y,z or X,Y,Z via --vars) plus any
/// parameter symbols declared with --params.
inline SymbolTablePtr session_table(const Options& o) {
    std::vector<std::string> geo{"x", "y", "z"};
    if (auto v = flag(o, "vars")) {
        if (*v == "XYZ") geo = {"X", "Y", "Z"};
        else if (*v != "xyz") throw std::invalid_argument("--vars must be xyz or XYZ");
    }
    std::vector<std::string> params;
    if (auto p = flag(o, "params")) {
        std::stringstream ss(*p);
        std::string name;
        while (std::getline(ss, name, ','))
            if (!name.empty()) params.push_back(name);
    }
    return make_table(std::move(geo), std::move(params));
}

inline std::map<std::string, Rational> parse_bindings(const std::string& text) {
    std::map<std::string, Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item == "none") continue;
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("binding must look like name=value: " + item);
        out.emplace(item.substr(0, eq), rational_from_string(item.substr(eq + 1)));
    }
    return out;
}

inline RatMap resolve_map_name(const std::string& name, const Options& o,
                               const SymbolTablePtr& t) {
    std::map<std::string, Rational> args;
    if (auto a = flag(o, "map-arg")) args = parse_bindings(*a);
    if (name == "sigma") return sigma_map(t);
    if (name == "rho") return rho_map(t);
    if (name == "tau") return tau_map(t);
    if (name == "psi") return psi_cubic_map(t);
    if (name == "phi_ab") {
        if (!args.count("a") || !args.count("b"))
            throw std::invalid_argument("phi_ab needs --map-arg a=<q>,b=<q>");
        return phi_ab_map(t, args.at("a"), args.at("b"));
    }
    auto letter = [&](const std::string& prefix,
                      RatMap (*table_fn)(const SymbolTablePtr&, int)) -> std::optional<RatMap> {
        if (name.rfind(prefix, 0) != 0 || name.size() <= prefix.size()) return std::nullopt;
        return table_fn(t, std::atoi(name.substr(prefix.size()).c_str()));
    };
    if (auto m = letter("rho_l", rho_letter)) return *m;
    if (auto m = letter("tau_l", tau_letter)) return *m;
    if (auto m = letter("psi_l", psi_letter)) return *m;
    return parse_map_literal(name, t);
}

inline RatMap resolve_map(const Options& o, const SymbolTablePtr& t) {
    auto spec = flag(o, "map");
    if (!spec) throw std::invalid_argument("missing --map");
    return resolve_map_name(*spec, o, t);
}

inline Foliation resolve_form(const Options& o, const SymbolTablePtr& t,
                              const std::string& flag_name = "form") {
    auto spec = flag(o, flag_name);
    if (!spec) throw std::invalid_argument("missing --" + flag_name);
    const std::string& text = *spec;
    std::map<std::string, Rational> bind;
    if (auto b = flag(o, "bind")) bind = parse_bindings(*b);

    // seeded generic samples of the numerically invariant families
    static const std::map<std::string, std::string> sample_alias = {
        {"omega_sigma_sample", "omega1"},
        {"omega_rho_sample", "omega4"},
        {"omega_tau_sample", "omega6"},
        {"omega_psi_sample", "omega9"},
    };
    std::string name = text;
    auto alias = sample_alias.find(name);
    if (alias != sample_alias.end()) name = alias->second;
    bool sampled = alias != sample_alias.end();
    if (!sampled && name.size() > 7 && name.substr(name.size() - 7) == "_sample") {
        name = name.substr(0, name.size() - 7);
        sampled = true;
    }
    if (sampled) {
        Rng rng(o.seed);
        return sample_family(name, rng);
    }
    for (const auto& spec_entry : family_registry()) {
        if (spec_entry.name != name) continue;
        auto ft = family_table(name);
        for (const auto& p : spec_entry.parameters)
            if (!bind.count(p))
                throw std::invalid_argument("family " + name + " needs --bind " + p + "=<q>");
        Aff1Form aff = family_affine(name, ft, bind);
        MPoly a = (aff.a.num() / aff.a.den().constant_value()).lift_to(t);
        MPoly b = (aff.b.num() / aff.b.den().constant_value()).lift_to(t);
        return Foliation::from_form(homogenize_affine(Aff1Form(a, b)));
    }
    if (name == "eta") return Foliation::from_form(family_form("eta", t));
    if (o.affine || text.find('{') != std::string::npos) {
        Aff1Form aff = parse_aff_form(text, t);
        if (!aff.polynomial())
            throw std::invalid_argument("affine form literals must have polynomial coefficients");
        return Foliation::from_form(homogenize_affine(aff));
    }
    return Foliation::from_form(parse_proj_form(text, t));
}

inline MapWord resolve_word(const Options& o, const SymbolTablePtr& t) {
    auto spec = flag(o, "word");
    if (!spec) throw std::invalid_argument("missing --word");
    if (*spec == "rho_word") return rho_word(t);
    if (*spec == "tau_word") return tau_word(t);
    if (*spec == "psi_word") return psi_word(t);
    MapWord word;
    for (const auto& part : detail::split_top_level(*spec, ',', 0)) {
        std::string trimmed = part;
        while (!trimmed.empty() && trimmed.front() == ' ') trimmed.erase(trimmed.begin());
        while (!trimmed.empty() && trimmed.back() == ' ') trimmed.pop_back();
        word.push_back(resolve_map_name(trimmed, o, t));
    }
    if (word.empty()) throw std::invalid_argument("empty word");
    return word;
}

inline int cmd_pullback(const Options& o, std::ostream& out) {
    auto t = session_table(o);
    RatMap m = resolve_map(o, t);
    Foliation f = resolve_form(o, t);
    Foliation pulled = pullback_foliation(m, f);
    out << pulled.form().to_string() << "\n";
    out << "degree: " << pulled.degree() << "\n";
    return kExitOk;
}

inline int cmd_degree(const Options& o, std::ostream& out) {
    Foliation f = resolve_form(o, session_table(o));
    out << f.degree() << "\n";
    return kExitOk;
}

inline int cmd_degseq(const Options& o, std::ostream& out) {
    auto t = session_table(o);
    MapWord word = resolve_word(o, t);
    Foliation f = resolve_form(o, t);
    auto seq = degree_sequence(word, f);
    for (std::size_t i = 0; i < seq.size(); ++i) out << (i ? " " : "") << seq[i];
    out << "\n";
    return kExitOk;
}

inline int cmd_wedge(const Options& o, std::ostream& out) {
    auto t = session_table(o);
    Foliation f = resolve_form(o, t);
    Foliation g = resolve_form(o, t, "form2");
    Proj2Form w = wedge11(f.form(), g.form());
    if (w.is_zero()) out << "ZERO\n";
    else out << w.to_string() << "\n";
    return kExitOk;
}

inline int cmd_obstruct(const Options& o, std::ostream& out) {
    auto qt = qform_table();
    RatMap m = resolve_map(o, qt);
    auto mono = flag(o, "monomial");
    if (!mono) throw std::invalid_argument("missing --monomial");
    auto set = monomial_div_obstructions(m, general_quadratic_form(), parse_monomial(*mono, qt));
    for (const auto& member : set.members()) out << member.to_string() << "\n";
    if (set.empty()) out << "(empty)\n";
    return kExitOk;
}

inline int cmd_verify(const Options& o, std::ostream& out) {
    std::string filter = flag(o, "filter").value_or("");
    SuiteReport report = run_suite(filter, o.seed);
    out << (o.structured ? report_json(report) : report_text(report));
    return report.fail_count == 0 ? kExitOk : kExitCheckFailure;
}

inline const char* kUsage =
    "cremfol <subcommand> [flags]\n"
    "\n"
    "subcommands:\n"
    "  pullback --map M --form F [--affine]   reduced pullback and its degree\n"
    "  degree   --form F                      degree of a foliation\n"
    "  degseq   --word W --form F             degrees along a factorization word\n"
    "  wedge    --form F --form2 G            wedge product, or ZERO\n"
    "  obstruct --map M --monomial P          divisibility obstructions of the\n"
    "                                         18-parameter quadratic family\n"
    "  verify   [--filter ID] [--seed N] [--format text|structured]\n"
    "\n"
    "shared flags: --seed N (or CREMFOL_SEED), --params a,b  --bind k=v,...\n"
    "              --vars xyz|XYZ  --map-arg a=...,b=...\n"
    "maps:  sigma rho tau psi phi_ab rho_l1.. tau_l1.. psi_l1.. or (e0 : e1 : e2)\n"
    "forms: [A, B, C] or {a, b}; family names (omega1..omega9 Omega1..Omega4 eta\n"
    "       eta_prime sigma_inv1.. rho_inv1.. tau_inv1.., with --bind); seeded\n"
    "       samples omega3_sample.. or omega_sigma_sample omega_rho_sample\n"
    "       omega_tau_sample omega_psi_sample\n"
    "words: rho_word tau_word psi_word or comma-separated map names (rightmost\n"
    "       acts first; pullbacks apply left to right)\n";

inline Options parse_options(const std::vector<std::string>& args) {
    Options o;
    if (args.empty()) throw std::invalid_argument("missing subcommand");
    o.subcommand = args[0];
    for (std::size_t i = 1; i < args.size(); ++i) {
        const std::string& arg = args[i];
        if (arg.rfind("--", 0) != 0)
            throw std::invalid_argument("unexpected positional argument: " + arg);
        std::string name = arg.substr(2);
        if (name == "affine") {
            o.affine = true;
            continue;
        }
        auto eq = name.find('=');
        std::string value;
        if (eq != std::string::npos) {
            value = name.substr(eq + 1);
            name = name.substr(0, eq);
        } else {
            if (i + 1 >= args.size()) throw std::invalid_argument("flag needs a value: " + arg);
            value = args[++i];
        }
        o.flags[name] = value;
    }
    if (const char* env = std::getenv("CREMFOL_SEED")) o.seed = std::strtoull(env, nullptr, 10);
    if (auto s = flag(o, "seed")) o.seed = std::strtoull(s->c_str(), nullptr, 10);
    if (auto f = flag(o, "format")) {
        if (*f == "structured") o.structured = true;
        else if (*f != "text") throw std::invalid_argument("--format must be text or structured");
    }
    return o;
}

}  // namespace cli

/// Command driver: exit code 0 on success, 1 on check failures, 2 on parse
/// errors, 3 on violated mathematical preconditions.  Reports go to standard
/// output, diagnostics to standard error.
inline int run_command(const std::vector<std::string>& args, std::ostream& out,
                       std::ostream& err) {
    using namespace cli;
    Options o;
    try {
        o = parse_options(args);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n\n" << kUsage;
        return kExitParseError;
    }
    try {
        if (o.subcommand == "pullback") return cmd_pullback(o, out);
        if (o.subcommand == "degree") return cmd_degree(o, out);
        if (o.subcommand == "degseq") return cmd_degseq(o, out);
        if (o.subcommand == "wedge") return cmd_wedge(o, out);
        if (o.subcommand == "obstruct") return cmd_obstruct(o, out);
        if (o.subcommand == "verify") return cmd_verify(o, out);
        if (o.subcommand == "help" || o.subcommand == "--help") {
            out << kUsage;
            return kExitOk;
        }
        err << "error: unknown subcommand '" << o.subcommand << "'\n\n" << kUsage;
        return kExitParseError;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const std::domain_error& e) {
        err << "math error: " << e.what() << "\n";
        return kExitMathError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitMathError;
    }
}

}  // namespace cremfol

#endif

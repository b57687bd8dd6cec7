#pragma once

#include <algorithm>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "compform/catalog.hpp"
#include "compform/compose.hpp"
#include "compform/dioph.hpp"
#include "compform/io.hpp"

namespace compform::cli {

inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kUsage = 2;

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    return out;
}

inline std::vector<BigInt> parse_ints(const std::string& s, const std::string& what) {
    std::vector<BigInt> v;
    for (auto part : split(s, ',')) {
        part.erase(std::remove_if(part.begin(), part.end(), ::isspace), part.end());
        try {
            v.push_back(parse_bigint(part));
        } catch (const Error&) {
            throw Error(ErrorKind::InvalidArgument, what + ": '" + part + "' is not an integer");
        }
    }
    if (v.empty()) throw Error(ErrorKind::InvalidArgument, what + " is empty");
    return v;
}

inline FormFamily load_family(const std::string& name, const std::string& params) {
    if (params.empty() || params == "symbolic") return family(name);
    return family(name, parse_ints(params, "--params"));
}

inline int exit_code(ErrorKind k) {
    switch (k) {
        case ErrorKind::SeedNotSolution:
        case ErrorKind::StepNotSolution:
        case ErrorKind::NotAUnit:
        case ErrorKind::SingularMap:
        case ErrorKind::VerificationFailed:
            return kVerificationFailed;
        default:
            return kUsage;
    }
}

inline std::string clip(const std::string& s, std::size_t n = 400) {
    return s.size() <= n ? s : s.substr(0, n) + " ...";
}

inline std::string vec_text(const SolutionVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_decimal(v[i]);
    return s + ")";
}

/// Structure used by `closure`: the family's own, or the (t, b, c) one for
/// the three-fold quadratic, whose form has t^2 rewritten as a.
inline std::pair<LinearStructure, std::string> closure_structure(const FormFamily& f) {
    if (f.structure) return {*f.structure, f.name()};
    if (f.name() == "threefold_quadratic")
        return {structures::trace_free("t", "b", "c"), "threefold_quadratic (t, b, c structure)"};
    throw Error(ErrorKind::InvalidArgument, f.name() + " has no matrix structure");
}

}  // namespace detail

/// Runs one command line (without the program name). Returns the exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact composition-of-forms toolkit", "compform"};
    app.require_subcommand(1);
    unsigned threads = 1;
    app.add_option("--threads", threads, "library threads")->check(CLI::Range(1U, 256U));

    std::string fam, params, format, route = "auto", order = "pair", seed, step, fixed, xyz = "xyz", point;
    std::string outer, inner, inner_rename;
    std::size_t count = 4;
    long bound = 0;
    std::string target = "1";
    bool threefold = false;
    auto fmt = [&](CLI::App* c, const std::string& def) {
        c->add_option("--format", format, "json or text")->default_str(def)->check(CLI::IsMember({"json", "text"}));
    };

    auto* list = app.add_subcommand("list-families", "list catalog families");
    fmt(list, "text");

    auto* emit = app.add_subcommand("emit-form", "print a family's form");
    emit->add_option("--family", fam)->required();
    emit->add_option("--params", params, "comma-separated integers or 'symbolic'");
    fmt(emit, "text");

    auto* verify = app.add_subcommand("verify", "symbolic composition identity check");
    verify->add_option("--family", fam)->required();
    verify->add_option("--params", params);
    verify->add_flag("--threefold", threefold, "check the three-fold identity");
    verify->add_option("--route", route)->check(CLI::IsMember({"auto", "direct", "structure"}));
    fmt(verify, "text");

    auto* closure = app.add_subcommand("closure", "closure of the family's structure under products");
    closure->add_option("--family", fam)->required();
    closure->add_option("--params", params);
    closure->add_option("--order", order)->check(CLI::IsMember({"pair", "triple"}));
    fmt(closure, "json");

    auto* solve = app.add_subcommand("solve", "solution sequence of f = 1");
    solve->add_option("--family", fam)->required();
    solve->add_option("--params", params)->required();
    solve->add_option("--seed", seed)->required();
    solve->add_option("--step", step)->required();
    solve->add_option("--fixed", fixed, "first fixed vector (three-fold mode)");
    solve->add_option("--order", xyz, "argument slots of current, fixed, step");
    solve->add_option("--count", count)->check(CLI::Range(std::size_t{1}, std::size_t{100000}));
    fmt(solve, "json");

    auto* search = app.add_subcommand("search", "exhaustive search of f = target in a box");
    search->add_option("--family", fam)->required();
    search->add_option("--params", params)->required();
    search->add_option("--bound", bound)->required()->check(CLI::NonNegativeNumber);
    search->add_option("--target", target);
    fmt(search, "json");

    auto* inv = app.add_subcommand("invert", "inverse of a solution under the pairwise map");
    inv->add_option("--family", fam)->required();
    inv->add_option("--params", params)->required();
    inv->add_option("--point", point)->required();
    fmt(inv, "json");

    auto* block = app.add_subcommand("block", "block lifting of two family structures");
    block->add_option("--outer", outer)->required();
    block->add_option("--inner", inner)->required();
    block->add_option("--inner-rename", inner_rename, "old=new,... applied to the inner parameters");
    fmt(block, "json");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        err << "run with --help for usage\n";
        return kUsage;
    }
    for (auto* sub : app.get_subcommands())
        if (sub->get_option("--format")->count() == 0) format = sub->get_option("--format")->get_default_str();
    const bool as_json = format == "json";

    try {
        if (list->parsed()) {
            json arr = json::array();
            for (const auto& f : registry()) {
                arr.push_back({{"name", f.name},
                               {"kind", to_string(f.kind)},
                               {"params", f.params},
                               {"arity", f.params.size()},
                               {"dim", f.dim},
                               {"description", f.description}});
                if (!as_json) {
                    std::string ps;
                    for (const auto& p : f.params) ps += (ps.empty() ? "" : ",") + p;
                    out << f.name << "  " << to_string(f.kind) << "  (" << ps << ")  n=" << f.dim << "  "
                        << f.description << "\n";
                }
            }
            if (as_json) out << arr.dump(2) << "\n";
            return kOk;
        }

        if (emit->parsed()) {
            FormFamily f = detail::load_family(fam, params);
            if (as_json) {
                json j = {{"family", f.name()}, {"params", params_json(f)}, {"coords", f.coords},
                          {"form", to_json(f.form)}, {"form_text", to_text(f.form)}};
                if (!f.factors.empty()) {
                    json fs = json::array();
                    for (const auto& g : f.factors) fs.push_back(to_json(g));
                    j["factors"] = std::move(fs);
                }
                out << j.dump(2) << "\n";
            } else {
                out << to_text(f.form) << "\n";
            }
            return kOk;
        }

        if (verify->parsed()) {
            FormFamily f = detail::load_family(fam, params);
            IdentityRoute r = route == "direct"      ? IdentityRoute::Direct
                              : route == "structure" ? IdentityRoute::Structure
                                                     : IdentityRoute::Auto;
            unsigned arity = threefold ? 3 : (f.kind() == FamilyKind::ThreeFold ? 3 : 2);
            IdentityReport rep = verify_family_identity(f, arity, r, threads);
            json checks = json::array();
            for (const auto& c : rep.checks) {
                const bool z = c.result.zero();
                checks.push_back({{"check", c.what},
                                  {"route", c.result.route},
                                  {"result", z ? "ZERO-RESIDUAL" : "RESIDUAL"},
                                  {"residual_terms", c.result.residual.term_count()}});
                if (!as_json) {
                    out << c.what << " [" << c.result.route << "]: ";
                    if (z) {
                        out << "ZERO-RESIDUAL\n";
                    } else {
                        out << "RESIDUAL (" << c.result.residual.term_count()
                            << " terms) " << detail::clip(to_text(c.result.residual)) << "\n";
                    }
                }
            }
            if (as_json)
                out << json{{"family", f.name()}, {"params", params_json(f)}, {"arity", arity},
                            {"result", rep.zero() ? "ZERO-RESIDUAL" : "RESIDUAL"}, {"checks", checks}}
                           .dump(2)
                    << "\n";
            else
                out << (rep.zero() ? "ZERO-RESIDUAL" : "RESIDUAL") << "\n";
            return rep.zero() ? kOk : kVerificationFailed;
        }

        if (closure->parsed()) {
            FormFamily f = detail::load_family(fam, params);
            auto [s, label] = detail::closure_structure(f);
            auto recipe = find_recipe(s);
            if (!recipe) throw Error(ErrorKind::InvalidArgument, "no extraction recipe for this structure");
            ClosureOptions opt{threads};
            ClosureResult res = order == "pair" ? verify_pair_closure(s, *recipe, opt)
                                                : verify_triple_closure(s, *recipe, opt);
            json j = {{"family", label}, {"order", order}, {"closed", res.closed()}};
            if (res.closed()) {
                const auto& c = *res.certificate;
                j["degenerate"] = c.degenerate;
                j["map"] = to_json(c.map);
                if (c.pairwise_witness) j["pairwise_not_closed"] = to_json(*c.pairwise_witness);
            } else {
                j["not_closed"] = to_json(*res.not_closed);
            }
            if (as_json) {
                out << j.dump(2) << "\n";
            } else if (res.closed()) {
                out << "CLOSED (" << order << ")";
                if (res.certificate->pairwise_witness)
                    out << "; pairwise NotInSpan at (" << res.certificate->pairwise_witness->row + 1 << ","
                        << res.certificate->pairwise_witness->col + 1 << ")";
                out << "\n";
            } else {
                out << "NOT-CLOSED (" << order << ") at (" << res.not_closed->row + 1 << "," << res.not_closed->col + 1
                    << "): " << detail::clip(to_text(res.not_closed->residual)) << "\n";
            }
            return res.closed() ? kOk : kVerificationFailed;
        }

        if (solve->parsed()) {
            FormFamily f = detail::load_family(fam, params);
            SequenceSpec spec;
            spec.seed = detail::parse_ints(seed, "--seed");
            spec.count = count;
            if (!fixed.empty()) {
                spec.mode = SequenceMode::Triple;
                spec.fixed1 = detail::parse_ints(fixed, "--fixed");
                spec.fixed2 = detail::parse_ints(step, "--step");
                spec.order = xyz;
            } else {
                if (f.kind() == FamilyKind::ThreeFold)
                    throw Error(ErrorKind::InvalidArgument, f.name() + " is three-fold; give --fixed as well");
                spec.step = detail::parse_ints(step, "--step");
            }
            auto seq = generate_sequence(f, spec);
            if (as_json) {
                out << sequence_to_json(f, spec, seq).dump(2) << "\n";
            } else {
                for (const auto& v : seq) out << detail::vec_text(v) << "\n";
            }
            return kOk;
        }

        if (search->parsed()) {
            FormFamily f = detail::load_family(fam, params);
            BigInt t = detail::parse_ints(target, "--target").at(0);
            auto sols = brute_force_search(f, bound, t, threads);
            if (as_json) {
                json a = json::array();
                for (const auto& v : sols) a.push_back(to_json(v));
                out << json{{"family", f.name()}, {"params", params_json(f)}, {"bound", bound},
                            {"target", to_decimal(t)}, {"solutions", a}}
                           .dump(2)
                    << "\n";
            } else {
                for (const auto& v : sols) out << detail::vec_text(v) << "\n";
            }
            return kOk;
        }

        if (inv->parsed()) {
            FormFamily f = detail::load_family(fam, params);
            SolutionVec x = detail::parse_ints(point, "--point");
            SolutionVec y = invert(f, x);
            if (as_json) {
                out << json{{"family", f.name()}, {"params", params_json(f)}, {"point", to_json(x)},
                            {"inverse", to_json(y)}, {"composes_to", to_json(apply_map(f, {x, y}))}}
                           .dump(2)
                    << "\n";
            } else {
                out << detail::vec_text(y) << "\n";
            }
            return kOk;
        }

        if (block->parsed()) {
            FormFamily fo = family(outer), fi = family(inner);
            if (!fo.structure || !fi.structure)
                throw Error(ErrorKind::InvalidArgument, "both families need a matrix structure");
            std::map<std::string, std::string> rename;
            if (!inner_rename.empty())
                for (const auto& kv : detail::split(inner_rename, ',')) {
                    auto parts = detail::split(kv, '=');
                    if (parts.size() != 2 || parts[0].empty() || parts[1].empty())
                        throw Error(ErrorKind::InvalidArgument, "--inner-rename expects old=new pairs");
                    rename[parts[0]] = parts[1];
                }
            LinearStructure lifted = block_compose(*fo.structure, fi.structure->rename_params(rename));
            if (as_json) {
                out << json{{"outer", outer}, {"inner", inner}, {"structure", to_json(lifted)}}.dump(2) << "\n";
            } else {
                PolyMatrix m = instantiate(lifted, coordinate_names("x", lifted.coords()));
                for (std::size_t i = 0; i < m.order(); ++i) {
                    for (std::size_t j = 0; j < m.order(); ++j) out << (j ? " | " : "") << to_text(m(i, j));
                    out << "\n";
                }
            }
            return kOk;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return detail::exit_code(e.kind());
    }
    return kUsage;
}

}  // namespace compform::cli

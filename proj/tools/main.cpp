// qweyl: exact calculator for multiparameter quantized Weyl algebras.
//
// Verbs: validate, nf, iso, build-iso, aut, divide, generic.  Exit code
// 0 on a positive answer, 1 on a domain-negative answer (INVALID,
// NOT-ISOMORPHIC, NOT-DIVISIBLE, NOT-GENERIC, NOT-DECIDABLE), 2 on
// usage or parse errors.  All output is deterministic.

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <string>
#include <vector>

#include "qweyl/error.hpp"
#include "qweyl/expr.hpp"
#include "qweyl/iso.hpp"
#include "qweyl/linalg.hpp"
#include "qweyl/pbw.hpp"
#include "qweyl/presentation.hpp"

using njson = nlohmann::ordered_json;
using namespace qweyl;

namespace {

struct Options {
    bool json = false;
    std::string file_a, file_b, expr;
    int index = 0;
    std::string eps_arg, mu_arg;
};

ParamsPtr load_params(const std::string& path, bool must_be_valid) {
    ParsedSpec spec = parse_spec_file(path);
    if (must_be_valid && !spec.violations.empty())
        throw DomainError("presentation in '" + path + "' is invalid: " + spec.violations.front());
    return std::make_shared<const AlgebraParams>(std::move(spec.params));
}

SignVector parse_eps(const std::string& arg, int n) {
    SignVector eps;
    std::string cur;
    auto flush = [&](const std::string& tok) {
        if (tok == "+1" || tok == "1")
            eps.eps.push_back(1);
        else if (tok == "-1")
            eps.eps.push_back(-1);
        else
            throw DomainError("eps entries must be +1 or -1, got '" + tok + "'");
    };
    for (char c : arg) {
        if (c == ',') {
            flush(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    flush(cur);
    if (static_cast<int>(eps.eps.size()) != n)
        throw DomainError("eps must have n = " + std::to_string(n) + " entries");
    return eps;
}

std::vector<Scalar> parse_mu(const std::string& arg, const ParamsPtr& P) {
    std::vector<Scalar> mu;
    std::string cur;
    auto flush = [&](const std::string& tok) { mu.push_back(scalar_parse(tok, P->ctx)); };
    for (char c : arg) {
        if (c == ',') {
            flush(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    flush(cur);
    if (static_cast<int>(mu.size()) != P->n)
        throw DomainError("mu must have n = " + std::to_string(P->n) + " entries");
    return mu;
}

std::string join_scalars(const std::vector<Scalar>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].to_string();
    return s + ")";
}

int run_validate(const Options& opt) {
    ParsedSpec spec = parse_spec_file(opt.file_a);
    if (opt.json) {
        njson out;
        out["ok"] = spec.violations.empty();
        out["violations"] = spec.violations;
        std::cout << out.dump() << "\n";
    } else if (spec.violations.empty()) {
        std::cout << "OK\n";
    } else {
        std::cout << "INVALID\n";
        for (const auto& v : spec.violations) std::cout << "- " << v << "\n";
    }
    return spec.violations.empty() ? 0 : 1;
}

int run_nf(const Options& opt) {
    ParamsPtr P = load_params(opt.file_a, false);
    PbwPolynomial f = nf(parse_expr(opt.expr, *P), P);
    if (opt.json) {
        njson out;
        out["normal_form"] = f.to_string();
        std::cout << out.dump() << "\n";
    } else {
        std::cout << f.to_string() << "\n";
    }
    return 0;
}

int run_iso(const Options& opt) {
    ParamsPtr A = load_params(opt.file_a, true);
    ParamsPtr B = load_params(opt.file_b, true);
    IsoDecision d = decide_iso(A, B);
    if (opt.json) {
        njson out;
        out["isomorphic"] = d.isomorphic;
        if (d.isomorphic)
            out["eps"] = d.eps.eps;
        else {
            out["reason"] = d.reason;
            out["detail"] = d.detail;
        }
        std::cout << out.dump() << "\n";
    } else {
        std::cout << d.to_text() << "\n";
    }
    return d.isomorphic ? 0 : 1;
}

void print_hom(const Options& opt, const SignVector& eps, const std::vector<Scalar>& mu,
               const std::vector<Scalar>& lambda, const Homomorphism& h) {
    if (opt.json) {
        njson out;
        out["eps"] = eps.eps;
        njson jm = njson::array(), jl = njson::array();
        for (const auto& m : mu) jm.push_back(m.to_string());
        for (const auto& l : lambda) jl.push_back(l.to_string());
        out["mu"] = jm;
        out["lambda"] = jl;
        njson imgs = njson::object();
        for (int i = 1; i <= h.source->n; ++i) {
            imgs["x" + std::to_string(i)] =
                h.image_of({GeneratorRef::Kind::X, i}).to_string();
            imgs["y" + std::to_string(i)] =
                h.image_of({GeneratorRef::Kind::Y, i}).to_string();
        }
        out["images"] = imgs;
        std::cout << out.dump() << "\n";
        return;
    }
    std::cout << "eps=" << eps.to_string() << "\n";
    std::cout << "mu=" << join_scalars(mu) << "\n";
    std::cout << "lambda=" << join_scalars(lambda) << "\n";
    for (int i = 1; i <= h.source->n; ++i) {
        std::cout << "x" << i << " -> " << h.image_of({GeneratorRef::Kind::X, i}).to_string()
                  << "\n";
        std::cout << "y" << i << " -> " << h.image_of({GeneratorRef::Kind::Y, i}).to_string()
                  << "\n";
    }
}

int run_build_iso(const Options& opt) {
    ParamsPtr A = load_params(opt.file_a, true);
    ParamsPtr B = load_params(opt.file_b, true);
    SignVector eps = parse_eps(opt.eps_arg, A->n);
    std::vector<Scalar> mu = parse_mu(opt.mu_arg, A);
    Homomorphism h = build_iso(A, B, eps, mu);
    print_hom(opt, eps, mu, lambda_of(eps, *A), h);
    return 0;
}

int run_aut(const Options& opt) {
    ParamsPtr A = load_params(opt.file_a, true);
    std::vector<Scalar> mu = parse_mu(opt.mu_arg, A);
    Homomorphism h = automorphism(A, mu);
    SignVector eps;
    eps.eps.assign(A->n, 1);
    print_hom(opt, eps, mu, lambda_of(eps, *A), h);
    return 0;
}

int run_divide(const Options& opt) {
    ParamsPtr P = load_params(opt.file_a, false);
    PbwPolynomial a = nf(parse_expr(opt.expr, *P), P);
    auto b = divide_by_z(opt.index, a);
    if (opt.json) {
        njson out;
        out["divisible"] = b.has_value();
        if (b) out["quotient"] = b->to_string();
        std::cout << out.dump() << "\n";
    } else {
        std::cout << (b ? b->to_string() : "NOT-DIVISIBLE") << "\n";
    }
    return b ? 0 : 1;
}

int run_generic(const Options& opt) {
    ParamsPtr P = load_params(opt.file_a, false);
    GenericityResult g = genericity_rank(*P);
    if (opt.json) {
        njson out;
        out["decidable"] = g.decidable;
        if (g.decidable) {
            out["rank"] = g.rank;
            out["max_rank"] = g.max_rank;
            out["generic"] = g.generic;
        } else {
            out["detail"] = g.detail;
        }
        std::cout << out.dump() << "\n";
    } else if (!g.decidable) {
        std::cout << "NOT-DECIDABLE detail=" << g.detail << "\n";
    } else if (g.generic) {
        std::cout << "GENERIC rank=" << g.rank << "\n";
    } else {
        std::cout << "NOT-GENERIC rank=" << g.rank << " max=" << g.max_rank << "\n";
    }
    return g.decidable && g.generic ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations in multiparameter quantized Weyl algebras"};
    app.require_subcommand(1);

    Options opt;
    int (*handler)(const Options&) = nullptr;

    auto add_json = [&](CLI::App* cmd) {
        cmd->add_flag("--json", opt.json, "machine-readable output");
    };

    CLI::App* validate_cmd = app.add_subcommand("validate", "check a presentation file");
    validate_cmd->add_option("file", opt.file_a, "algebra spec file")->required();
    add_json(validate_cmd);
    validate_cmd->callback([&] { handler = run_validate; });

    CLI::App* nf_cmd = app.add_subcommand("nf", "PBW normal form of an expression");
    nf_cmd->add_option("file", opt.file_a)->required();
    nf_cmd->add_option("expr", opt.expr, "free-algebra expression")->required();
    add_json(nf_cmd);
    nf_cmd->callback([&] { handler = run_nf; });

    CLI::App* iso_cmd = app.add_subcommand("iso", "decide isomorphism of two presentations");
    iso_cmd->add_option("fileA", opt.file_a)->required();
    iso_cmd->add_option("fileB", opt.file_b)->required();
    add_json(iso_cmd);
    iso_cmd->callback([&] { handler = run_iso; });

    CLI::App* build_cmd =
        app.add_subcommand("build-iso", "construct the isomorphism for eps and mu");
    build_cmd->add_option("fileA", opt.file_a)->required();
    build_cmd->add_option("fileB", opt.file_b)->required();
    build_cmd->add_option("--eps", opt.eps_arg, "sign vector, e.g. +1,-1")->required();
    build_cmd->add_option("--mu", opt.mu_arg, "nonzero scalars, e.g. 2,q1")->required();
    add_json(build_cmd);
    build_cmd->callback([&] { handler = run_build_iso; });

    CLI::App* aut_cmd = app.add_subcommand("aut", "scaling automorphism for a mu vector");
    aut_cmd->add_option("file", opt.file_a)->required();
    aut_cmd->add_option("--mu", opt.mu_arg)->required();
    add_json(aut_cmd);
    aut_cmd->callback([&] { handler = run_aut; });

    CLI::App* div_cmd = app.add_subcommand("divide", "left quotient by z_i, if it exists");
    div_cmd->add_option("file", opt.file_a)->required();
    div_cmd->add_option("i", opt.index, "index of z_i")->required();
    div_cmd->add_option("expr", opt.expr)->required();
    add_json(div_cmd);
    div_cmd->callback([&] { handler = run_divide; });

    CLI::App* gen_cmd = app.add_subcommand("generic", "genericity rank check");
    gen_cmd->add_option("file", opt.file_a)->required();
    add_json(gen_cmd);
    gen_cmd->callback([&] { handler = run_generic; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        return handler(opt);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

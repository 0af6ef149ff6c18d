#include "cli.hpp"

#include <fstream>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ffgcd/gcdlab.hpp"
#include "ffgcd/irreducibles.hpp"
#include "ffgcd/report.hpp"
#include "ffgcd/residue.hpp"

namespace ffgcd::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    u64 degree_cap = kDefaultDegreeCap;
    u64 enumeration_cap = kDefaultEnumerationCap;
    u64 field_cap = kDefaultCardinalityCap;
    u64 seed = 0;
    unsigned threads = 1;
    std::string format = "table";
    std::string output;

    EnumOptions enumeration() const { return {enumeration_cap, threads}; }
};

struct FieldSpec {
    u64 p = 0;
    unsigned m = 1;
    u64 q = 0;
};

struct Output {
    Json doc;
    std::optional<std::string> csv;  // replaces the generic CSV rendering when set
};

void add_field_options(CLI::App* sub, FieldSpec& f) {
    sub->add_option("--p", f.p, "Characteristic p (prime)");
    sub->add_option("--m", f.m, "Extension degree m, field F_{p^m} (default 1)");
    sub->add_option("--q", f.q, "Field order q = p^m, instead of --p/--m");
}

Field resolve_field(const FieldSpec& f, const RunConfig& cfg) {
    if (f.q != 0) {
        if (f.p != 0) throw UsageError("give either --q or --p/--m, not both");
        return make_field_q(f.q, cfg.field_cap);
    }
    if (f.p == 0) throw UsageError("field not specified: use --p [--m] or --q");
    return make_field(f.p, f.m, cfg.field_cap);
}

void emit(const Output& o, const RunConfig& cfg, std::ostream& out) {
    std::string text;
    if (cfg.format == "json") {
        text = o.doc.dump(2) + "\n";
    } else if (cfg.format == "csv") {
        text = o.csv ? *o.csv : to_csv(o.doc);
    } else {
        text = to_table(o.doc);
    }
    if (cfg.output.empty()) {
        out << text;
        return;
    }
    std::ofstream file(cfg.output, std::ios::binary);
    if (!file) throw Error(Errc::InvalidArgument, "cannot open output file " + cfg.output);
    file << text;
}

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"ffgcd: lower bounds for deg gcd(a^n - 1, b^n - 1) over finite fields", "ffgcd"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "Read key=value settings (caps, seed, format); flags win");

    RunConfig cfg;
    app.add_option("--degree-cap", cfg.degree_cap, "Largest polynomial degree expanded directly")
        ->capture_default_str()->check(CLI::PositiveNumber);
    app.add_option("--enum-cap", cfg.enumeration_cap, "Largest number of enumeration candidates")
        ->capture_default_str()->check(CLI::PositiveNumber);
    app.add_option("--field-cap", cfg.field_cap, "Largest field order that may be constructed")
        ->capture_default_str()->check(CLI::PositiveNumber);
    app.add_option("--seed", cfg.seed, "Seed for randomized splitting")->envname("FFGCD_SEED")->capture_default_str();
    app.add_option("--threads", cfg.threads, "Worker threads for enumeration and scans")
        ->capture_default_str()->check(CLI::PositiveNumber);
    app.add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"table", "csv", "json"}))->capture_default_str();
    app.add_option("--output,-o", cfg.output, "Write output to this file instead of stdout");

    std::vector<std::pair<CLI::App*, std::function<Output()>>> commands;
    auto command = [&](const std::string& name, const std::string& desc) {
        return app.add_subcommand(name, desc);
    };

    // field-info
    FieldSpec fi;
    {
        auto* sub = command("field-info", "Show the canonical presentation of F_q");
        add_field_options(sub, fi);
        commands.emplace_back(sub, [&] { return Output{field_json(*resolve_field(fi, cfg)), {}}; });
    }

    // irr-count
    FieldSpec ic;
    unsigned ic_N = 0;
    {
        auto* sub = command("irr-count", "Count monic irreducibles of degree N by enumeration and by the Moebius formula");
        add_field_options(sub, ic);
        sub->add_option("--N", ic_N, "Degree")->required()->check(CLI::PositiveNumber);
        commands.emplace_back(sub, [&] {
            Field F = resolve_field(ic, cfg);
            CountReport rep = count_irreducibles(F, ic_N, cfg.enumeration());
            Json j = to_json(rep);
            j["formula"] = json_int(count_irreducibles_exact(F->q(), ic_N));
            return Output{j, {}};
        });
    }

    // irr-list
    FieldSpec il;
    unsigned il_N = 0;
    std::string il_alpha, il_mu;
    {
        auto* sub = command("irr-list", "List monic irreducibles of degree N, optionally those = alpha mod mu");
        add_field_options(sub, il);
        sub->add_option("--N", il_N, "Degree")->required()->check(CLI::PositiveNumber);
        auto* mu_opt = sub->add_option("--mu", il_mu, "Modulus of the progression");
        sub->add_option("--alpha", il_alpha, "Residue class (default 1)")->needs(mu_opt);
        commands.emplace_back(sub, [&] {
            Field F = resolve_field(il, cfg);
            std::vector<Poly> list;
            if (il_mu.empty()) {
                list = enumerate_irreducibles(F, il_N, cfg.enumeration());
            } else {
                Poly alpha = il_alpha.empty() ? Poly::one(F) : parse_poly(il_alpha, F);
                list = enumerate_progression(F, il_N, alpha, parse_poly(il_mu, F), cfg.enumeration());
            }
            Json arr = Json::array();
            for (const auto& f : list) arr.push_back(Json{{"poly", format_poly(f)}});
            return Output{arr, {}};
        });
    }

    // dirichlet-count
    FieldSpec dc;
    unsigned dc_N = 0;
    std::string dc_alpha, dc_mu;
    {
        auto* sub = command("dirichlet-count", "Count primes of degree N in residue classes mod mu");
        add_field_options(sub, dc);
        sub->add_option("--N", dc_N, "Degree")->required()->check(CLI::PositiveNumber);
        sub->add_option("--mu", dc_mu, "Modulus")->required();
        sub->add_option("--alpha", dc_alpha, "Single residue class; all invertible classes when omitted");
        commands.emplace_back(sub, [&] {
            Field F = resolve_field(dc, cfg);
            Poly mu = parse_poly(dc_mu, F);
            CountReport rep = dc_alpha.empty() ? count_progression_classes(F, dc_N, mu, cfg.enumeration())
                                               : count_progression(F, dc_N, parse_poly(dc_alpha, F), mu, cfg.enumeration());
            return Output{to_json(rep), to_csv(rep)};
        });
    }

    // phi
    FieldSpec ph;
    std::string ph_mu;
    {
        auto* sub = command("phi", "Order of the unit group of F_q[T]/(mu)");
        add_field_options(sub, ph);
        sub->add_option("--mu", ph_mu, "Modulus")->required();
        commands.emplace_back(sub, [&] {
            Field F = resolve_field(ph, cfg);
            Poly mu = parse_poly(ph_mu, F);
            Json j;
            j["q"] = F->q();
            j["mu"] = format_poly(mu);
            j["phi"] = json_int(phi_q(mu));
            return Output{j, {}};
        });
    }

    // factor
    FieldSpec fa;
    std::string fa_f;
    {
        auto* sub = command("factor", "Factor a polynomial into monic irreducibles");
        add_field_options(sub, fa);
        sub->add_option("--f", fa_f, "Polynomial")->required();
        commands.emplace_back(sub, [&] {
            Field F = resolve_field(fa, cfg);
            Poly f = parse_poly(fa_f, F);
            Json j;
            j["input"] = format_poly(f);
            Json body = to_json(factorize(f, cfg.seed));
            j["unit"] = body["unit"];
            j["factors"] = body["factors"];
            return Output{j, to_csv(j["factors"])};
        });
    }

    // symbol
    FieldSpec sy;
    std::string sy_alpha, sy_pi;
    u64 sy_r = 0;
    {
        auto* sub = command("symbol", "r-th power residue symbol (alpha/pi)_r");
        add_field_options(sub, sy);
        sub->add_option("--alpha", sy_alpha, "Numerator polynomial")->required();
        sub->add_option("--pi", sy_pi, "Monic irreducible modulus")->required();
        sub->add_option("--r", sy_r, "Power r dividing q - 1")->required()->check(CLI::PositiveNumber);
        commands.emplace_back(sub, [&] {
            Field F = resolve_field(sy, cfg);
            Poly alpha = parse_poly(sy_alpha, F);
            Poly pi = parse_poly(sy_pi, F);
            FqElem s = residue_symbol(alpha, pi, sy_r);
            Json j;
            j["q"] = F->q();
            j["alpha"] = format_poly(alpha);
            j["pi"] = format_poly(pi);
            j["r"] = sy_r;
            j["symbol"] = s.to_string();
            j["is_rth_power"] = s.is_one();
            return Output{j, {}};
        });
    }

    // reciprocity-verify
    FieldSpec rv;
    std::string rv_mu;
    u64 rv_r = 0;
    unsigned rv_bound = 0;
    bool rv_cross = false;
    {
        auto* sub = command("reciprocity-verify", "Check that mu is an r-th power mod every pi = 1 (mod mu) up to a degree bound");
        add_field_options(sub, rv);
        sub->add_option("--mu", rv_mu, "Monic modulus")->required();
        sub->add_option("--r", rv_r, "Odd r dividing q - 1")->required()->check(CLI::PositiveNumber);
        sub->add_option("--bound", rv_bound, "Largest degree of pi")->required()->check(CLI::PositiveNumber);
        sub->add_flag("--crosscheck", rv_cross, "Confirm each answer by exhaustive r-th root search where feasible");
        commands.emplace_back(sub, [&] {
            Field F = resolve_field(rv, cfg);
            auto rep = check_reciprocity(parse_poly(rv_mu, F), rv_r, rv_bound, {rv_cross, cfg.enumeration()});
            return Output{to_json(rep), {}};
        });
    }

    // plan
    u64 pl_q = 0, pl_n0 = 0;
    unsigned pl_k = 0, pl_list = 3;
    {
        auto* sub = command("plan", "Exponent plan r, Q, n(Q^N) for the class n0 mod q^k");
        sub->add_option("--q", pl_q, "Base field order q")->required();
        sub->add_option("--k", pl_k, "Power k of the modulus q^k")->required()->check(CLI::PositiveNumber);
        sub->add_option("--n0", pl_n0, "Residue class n0 mod q^k")->required();
        sub->add_option("--list", pl_list, "Number of exponents n(Q^N) to list")->capture_default_str();
        commands.emplace_back(sub, [&] {
            ExponentPlan plan = plan_exponents(pl_q, pl_k, pl_n0, cfg.field_cap);
            return Output{to_json(plan, pl_list), {}};
        });
    }

    // gcd-degree
    FieldSpec gd;
    std::string gd_a, gd_b, gd_n;
    {
        auto* sub = command("gcd-degree", "Exact deg gcd(a^n - 1, b^n - 1)");
        add_field_options(sub, gd);
        sub->add_option("--a", gd_a, "Monic polynomial a")->required();
        sub->add_option("--b", gd_b, "Monic polynomial b")->required();
        sub->add_option("--n", gd_n, "Exponent n")->required();
        commands.emplace_back(sub, [&] {
            Field F = resolve_field(gd, cfg);
            Poly a = parse_poly(gd_a, F), b = parse_poly(gd_b, F);
            BigInt n;
            try {
                n = BigInt(gd_n);
            } catch (const std::exception&) {
                throw UsageError("--n must be a nonnegative integer");
            }
            Json j;
            j["q"] = F->q();
            j["a"] = format_poly(a);
            j["b"] = format_poly(b);
            j["n"] = json_int(n);
            j["deg_gcd"] = json_int(gcd_degree_direct(a, b, n, cfg.degree_cap));
            return Output{j, {}};
        });
    }

    // certificate
    u64 ce_q = 0, ce_n0 = 0;
    unsigned ce_k = 0, ce_N = 0;
    std::string ce_a, ce_b;
    bool ce_no_direct = false;
    {
        auto* sub = command("certificate", "Witness certificate for deg gcd(a^n - 1, b^n - 1) at n = n(Q^N)");
        sub->add_option("--q", ce_q, "Base field order q")->required();
        sub->add_option("--k", ce_k, "Power k of the modulus q^k")->required()->check(CLI::PositiveNumber);
        sub->add_option("--n0", ce_n0, "Residue class n0 mod q^k")->required();
        sub->add_option("--N", ce_N, "Witness degree N")->required()->check(CLI::PositiveNumber);
        sub->add_option("--a", ce_a, "Monic polynomial a over F_q")->required();
        sub->add_option("--b", ce_b, "Monic polynomial b over F_q")->required();
        sub->add_flag("--no-direct", ce_no_direct, "Skip the direct gcd computation");
        commands.emplace_back(sub, [&] {
            ExponentPlan plan = plan_exponents(ce_q, ce_k, ce_n0, cfg.field_cap);
            Field F = make_field_q(ce_q, cfg.field_cap);
            CertificateOptions opts{cfg.degree_cap, cfg.field_cap, cfg.enumeration(), cfg.seed, !ce_no_direct};
            auto cert = witness_certificate(parse_poly(ce_a, F), parse_poly(ce_b, F), plan, ce_N, opts);
            return Output{to_json(cert), {}};
        });
    }

    // example1
    FieldSpec ex;
    unsigned ex_N = 0;
    {
        auto* sub = command("example1", "Check the a = T, b = T + 1, n = q^N - 1 identities");
        add_field_options(sub, ex);
        sub->add_option("--N", ex_N, "n = q^N - 1")->required()->check(CLI::PositiveNumber);
        commands.emplace_back(sub, [&] { return Output{to_json(example1_identity(resolve_field(ex, cfg), ex_N, cfg.degree_cap)), {}}; });
    }

    // frobenius
    FieldSpec fr;
    std::string fr_a, fr_b;
    u64 fr_m = 0;
    unsigned fr_i = 0;
    {
        auto* sub = command("frobenius", "Check gcd(a^{m p^i} - 1, b^{m p^i} - 1) = gcd(a^m - 1, b^m - 1)^{p^i}");
        add_field_options(sub, fr);
        sub->add_option("--a", fr_a, "Monic polynomial a")->required();
        sub->add_option("--b", fr_b, "Monic polynomial b")->required();
        sub->add_option("--exponent", fr_m, "Base exponent m")->required()->check(CLI::PositiveNumber);
        sub->add_option("--i", fr_i, "Power i of the characteristic")->required();
        commands.emplace_back(sub, [&] {
            Field F = resolve_field(fr, cfg);
            return Output{to_json(frobenius_scaling(parse_poly(fr_a, F), parse_poly(fr_b, F), fr_m, fr_i, cfg.degree_cap)), {}};
        });
    }

    // indep
    FieldSpec in;
    std::string in_a, in_b;
    {
        auto* sub = command("indep", "Decide multiplicative independence of a and b");
        add_field_options(sub, in);
        sub->add_option("--a", in_a, "Monic polynomial a")->required();
        sub->add_option("--b", in_b, "Monic polynomial b")->required();
        commands.emplace_back(sub, [&] {
            Field F = resolve_field(in, cfg);
            Poly a = parse_poly(in_a, F), b = parse_poly(in_b, F);
            Json j;
            j["q"] = F->q();
            j["a"] = format_poly(a);
            j["b"] = format_poly(b);
            j["independent"] = multiplicative_independence(a, b);
            return Output{j, {}};
        });
    }

    // scan
    FieldSpec sc;
    std::string sc_a, sc_b;
    u64 sc_from = 1, sc_to = 0;
    {
        auto* sub = command("scan", "deg gcd(a^n - 1, b^n - 1) for every n in a range");
        add_field_options(sub, sc);
        sub->add_option("--a", sc_a, "Monic polynomial a")->required();
        sub->add_option("--b", sc_b, "Monic polynomial b")->required();
        sub->add_option("--from", sc_from, "First n")->capture_default_str()->check(CLI::PositiveNumber);
        sub->add_option("--to", sc_to, "Last n")->required()->check(CLI::PositiveNumber);
        commands.emplace_back(sub, [&] {
            Field F = resolve_field(sc, cfg);
            auto rows = scan_degrees(parse_poly(sc_a, F), parse_poly(sc_b, F), sc_from, sc_to, cfg.degree_cap, cfg.threads);
            return Output{to_json(rows), to_csv(rows)};
        });
    }

    // trichotomy
    u64 tr_a = 0, tr_b = 0, tr_n = 0, tr_budget = kDefaultIntegerBudget;
    {
        auto* sub = command("trichotomy", "Integer gcd(a^n - 1, b^n - 1) table with log(gcd)/n");
        sub->add_option("--a-int", tr_a, "Integer a >= 2")->required();
        sub->add_option("--b-int", tr_b, "Integer b >= 2")->required();
        sub->add_option("--n-max", tr_n, "Largest n")->required();
        sub->add_option("--budget", tr_budget, "Largest n allowed")->capture_default_str();
        commands.emplace_back(sub, [&] {
            auto rows = integer_gcd_table(tr_a, tr_b, tr_n, tr_budget);
            return Output{to_json(rows), to_csv(rows)};
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return 0;
        }
        app.exit(e, out, err);
        return 2;
    }

    try {
        for (auto& [sub, run] : commands) {
            if (sub->parsed()) {
                emit(run(), cfg, out);
                return 0;
            }
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.name() << ": " << e.what() << "\n";
        return 1;
    }
    err << "usage error: no subcommand\n";
    return 2;
}

}  // namespace ffgcd::cli

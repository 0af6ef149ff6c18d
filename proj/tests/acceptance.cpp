// Acceptance runner: one PASS/FAIL line per criterion. argv[1] is the ffgcd binary, used for the
// byte-level determinism check.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ffgcd/gcdlab.hpp"
#include "ffgcd/irreducibles.hpp"
#include "ffgcd/report.hpp"
#include "ffgcd/residue.hpp"

using namespace ffgcd;

namespace {

// Values produced by tests/oracles/freeze_values.py before the library existed.
constexpr int kRunAWitnesses = 3;        // |S_{3,4}(1, T^2+T)|
constexpr int kRunADirect = 79;          // deg gcd(T^80-1, (T+1)^80-1) over F_3
constexpr int kRunBWitnesses = 10;       // |S_{16,3}(1, T^2+T)|
constexpr int kRunBDirect = 440;         // deg gcd(T^1365-1, (T+1)^1365-1) over F_4
const std::map<unsigned, std::array<int, 4>> kClassCounts{
    {4, {3, 5, 5, 5}}, {5, {12, 12, 12, 12}}, {6, {26, 30, 30, 30}}};

struct Outcome {
    bool ok = true;
    std::string detail;
    std::ostringstream log;  // everything the run produced, compared across repetitions

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

Poly P(const char* s, const Field& F) { return parse_poly(s, F); }

void criterion1(Outcome& o) {
    auto rep = example1_identity(make_field(5, 1), 2);
    o.log << to_json(rep).dump() << "\n";
    o.require(rep.n == 24, "n != 24");
    o.require(rep.deg_gcd == 23, "deg gcd != 23 for q=5, N=2");
    o.require(rep.b_identity, "(T+1)^24-1 != T(T^24-1)/(T+1)");
    o.require(rep.ok(), "identity check failed for q=5, N=2");
    int cases = 0;
    for (u64 q : {2, 3, 4, 5, 7}) {
        auto F = make_field_q(q);
        u64 qN = q;
        for (unsigned N = 1; qN <= 2500; ++N, qN *= q) {
            auto r = example1_identity(F, N);
            o.log << q << " " << N << " " << r.deg_gcd << " " << format_poly(r.gcd).size() << "\n";
            o.require(r.ok(), "identity failed at q=" + std::to_string(q) + " N=" + std::to_string(N));
            o.require(BigInt(r.deg_gcd) == BigInt(qN) - 2, "deg gcd != q^N-2 at q=" + std::to_string(q));
            ++cases;
        }
    }
    o.detail = o.ok ? std::to_string(cases) + " (q, N) pairs, q=5 N=2 gives n=24 deg 23" : o.detail;
}

void criterion2(Outcome& o) {
    int cases = 0;
    for (u64 q : {2, 3, 4, 5}) {
        auto F = make_field_q(q);
        for (unsigned N = 1; N <= 6; ++N) {
            auto rep = count_irreducibles(F, N);
            BigInt formula = count_irreducibles_exact(q, N);
            o.log << q << " " << N << " " << rep.exact << " " << formula << "\n";
            o.require(rep.exact == formula, "count mismatch at q=" + std::to_string(q) + " N=" + std::to_string(N));
            ++cases;
        }
    }
    if (o.ok) o.detail = std::to_string(cases) + " cases equal";
}

void criterion3(Outcome& o) {
    auto F = make_field(3, 1);
    const Poly mu = P("T^2+T", F);
    double worst = 0;
    for (const auto& [N, expect] : kClassCounts) {
        auto rep = count_progression_classes(F, N, mu);
        o.log << to_json(rep).dump() << "\n";
        const double tol = 3.0 * std::pow(3.0, N / 2.0) / N;
        BigInt total = 0;
        o.require(rep.per_class && rep.per_class->size() == 4, "expected 4 invertible classes");
        if (!o.ok) return;
        for (size_t i = 0; i < 4; ++i) {
            const auto& c = (*rep.per_class)[i];
            total += c.count;
            o.require(c.count > 0, "empty class at N=" + std::to_string(N));
            o.require(c.count == expect[i], "class count differs from oracle at N=" + std::to_string(N));
            const double dev = std::fabs(to_double(c.deviation));
            worst = std::max(worst, dev / tol);
            o.require(dev <= tol, "deviation above 3 q^(N/2)/N at N=" + std::to_string(N));
        }
        o.require(total == count_irreducibles_exact(3, N), "class counts do not sum to #S_{3,N}");
    }
    if (o.ok) o.detail = "largest |deviation| / tolerance = " + format_double(worst);
}

void criterion4(Outcome& o) {
    auto F7 = make_field(7, 1);
    auto F4 = make_field_q(4);
    const std::vector<Poly> mus{P("T", F7), P("T+1", F7), P("T^2+T", F7), P("T^2+T", F4)};
    u64 tested = 0, crossed = 0;
    for (const auto& mu : mus) {
        auto rep = check_reciprocity(mu, 3, 4, {true, {}});
        o.log << to_json(rep).dump() << "\n";
        tested += rep.tested;
        crossed += rep.crosschecked;
        o.require(rep.violations.empty(), "violation for mu=" + format_poly(mu));
        o.require(rep.crosscheck_mismatches == 0, "brute-force disagreement for mu=" + format_poly(mu));
        o.require(rep.crosschecked == rep.tested, "not every pi was cross-checked");
        o.require(rep.tested > 0, "no pi tested");
    }
    if (o.ok) o.detail = std::to_string(tested) + " primes, " + std::to_string(crossed) + " brute-force confirmed";
}

void criterion5(Outcome& o) {
    auto F = make_field(3, 1);
    auto plan = plan_exponents(3, 1, 2);
    o.require(plan.r == 1 && plan.Q == BigInt(3), "plan is not r=1, Q=3");
    auto cert = witness_certificate(P("T", F), P("T+1", F), plan, 4);
    o.log << to_json(cert).dump() << "\n";
    o.require(cert.n == 80, "n != 80");
    o.require(cert.constant_c == Rational(1, 4), "c != 1/4");
    o.require(cert.witnesses.size() == kRunAWitnesses, "witness count differs from the enumeration oracle");
    o.require(cert.witness_degree_sum == 4 * BigInt(cert.witnesses.size()), "witness degree sum != 4 |witnesses|");
    o.require(cert.direct_degree.has_value(), "direct degree not computed");
    if (!o.ok) return;
    o.require(*cert.direct_degree == kRunADirect, "direct degree differs from oracle");
    o.require(*cert.direct_degree >= cert.witness_degree_sum, "direct degree below witness sum");
    o.require(*cert.direct_degree >= 20, "direct degree below floor(n/4)");
    if (o.ok) {
        o.detail = "|W|=" + to_string(BigInt(cert.witnesses.size())) + " sum=" + to_string(cert.witness_degree_sum) +
                   " direct=" + to_string(*cert.direct_degree) + " floor(n/4)=20";
    }
}

void criterion6(Outcome& o) {
    auto F = make_field_q(4);
    auto plan = plan_exponents(4, 1, 1);
    o.require(plan.r == 3 && plan.Q == BigInt(16), "plan is not r=3, Q=16");
    auto cert = witness_certificate(P("T", F), P("T+1", F), plan, 3);
    o.log << to_json(cert).dump() << "\n";
    o.require(cert.n == 1365 && cert.n % 4 == 1, "n != 1365");
    o.require(!cert.witnesses.empty(), "empty witness set");
    const auto emb = make_embedding(F, cert.big_field);
    const Poly la = lift_poly(P("T", F), emb), lb = lift_poly(P("T+1", F), emb);
    for (const auto& pi : cert.witnesses) {
        o.require(poly_powmod(la, cert.n, pi).is_one() && poly_powmod(lb, cert.n, pi).is_one(),
                  "witness " + format_poly(pi) + " fails powmod");
    }
    auto counted = count_progression(cert.big_field, 3, Poly::one(cert.big_field), lift_poly(cert.ell, emb));
    o.require(counted.exact == cert.witnesses.size(), "witness count != Dirichlet enumeration count");
    o.require(cert.witnesses.size() == kRunBWitnesses, "witness count differs from oracle");
    o.require(cert.direct_degree.has_value(), "direct degree not computed");
    if (!o.ok) return;
    o.require(*cert.direct_degree == kRunBDirect, "direct degree differs from oracle");
    o.require(*cert.direct_degree >= cert.witness_degree_sum && cert.witness_degree_sum > 0,
              "direct degree below witness sum");
    if (o.ok) {
        o.detail = "|W|=" + to_string(BigInt(cert.witnesses.size())) + " sum=" + to_string(cert.witness_degree_sum) +
                   " direct=" + to_string(*cert.direct_degree) + " c=1/75";
    }
}

void criterion7(Outcome& o) {
    std::mt19937_64 rng(20240607);
    int done = 0;
    for (u64 p : {2, 3}) {
        auto F = make_field(p, 1);
        for (int t = 0; t < 20; ++t) {
            auto rnd = [&] {
                int d = 1 + static_cast<int>(rng() % 3);
                std::vector<Elem> c(d + 1);
                for (auto& x : c) x = rng() % p;
                c.back() = 1;
                return Poly(F, c);
            };
            Poly a = rnd(), b = rnd();
            u64 m = 1 + rng() % 6;
            unsigned i = static_cast<unsigned>(rng() % 3);
            auto rep = frobenius_scaling(a, b, m, i);
            o.log << to_json(rep).dump() << "\n";
            o.require(rep.identity_holds, "identity fails for a=" + format_poly(a) + " b=" + format_poly(b));
            o.require(rep.ok(), "degree scaling or reduced path disagrees");
            ++done;
        }
    }
    if (o.ok) o.detail = std::to_string(done) + " random (a, b, m, i) exact";
}

std::vector<Poly> residues_mod(const Poly& pi) {
    const Field& F = pi.ctx();
    u64 total = 1;
    for (int i = 0; i < pi.degree(); ++i) total *= F->q();
    std::vector<Poly> out;
    for (u64 code = 0; code < total; ++code) {
        std::vector<Elem> c;
        for (u64 x = code; x; x /= F->q()) c.push_back(x % F->q());
        out.emplace_back(F, c);
    }
    return out;
}

void criterion8(Outcome& o) {
    u64 checks = 0;
    for (u64 q : {7, 4}) {
        auto F = make_field_q(q);
        for (unsigned d = 1; d <= 2; ++d) {
            for (const auto& pi : enumerate_irreducibles(F, d)) {
                auto all = residues_mod(pi);
                std::vector<FqElem> sym;
                for (const auto& a : all) {
                    sym.push_back(residue_symbol(a, pi, 3));
                    if (!a.is_zero()) o.require(elem_pow(sym.back(), 3).is_one(), "symbol^3 != 1");
                }
                for (size_t i = 0; i < all.size(); ++i) {
                    for (size_t j = 0; j < all.size(); ++j) {
                        FqElem lhs = residue_symbol(all[i] * all[j], pi, 3);
                        o.require(lhs == sym[i] * sym[j], "not multiplicative mod " + format_poly(pi));
                        ++checks;
                    }
                }
                o.log << format_poly(pi);
                for (const auto& s : sym) o.log << " " << s.to_string();
                o.log << "\n";
            }
        }
    }
    if (o.ok) o.detail = std::to_string(checks) + " products checked";
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    return out;
}

void criterion9(Outcome& o) {
    o.require(std::gcd(u64{63}, u64{728}) == 7, "std::gcd(63, 728) != 7");
    auto rows = integer_gcd_table(2, 3, 200);
    o.require(rows.size() == 200, "table size");
    o.require(rows[5].gcd == 7, "table gcd at n=6 != 7");
    for (const auto& r : rows) {
        // Euclid by hand on the big integers, separate from the library path
        BigInt x = big_pow(2, r.n) - 1, y = big_pow(3, r.n) - 1;
        while (y != 0) {
            BigInt t = x % y;
            x = y;
            y = t;
        }
        o.require(r.gcd == x, "gcd mismatch at n=" + std::to_string(r.n));
    }
    const std::string csv = to_csv(rows);
    o.log << csv;
    auto lines = split(csv, '\n');
    o.require(!lines.empty() && lines[0] == "n,gcd,log_gcd_over_n", "bad CSV header");
    o.require(lines.size() == 201, "CSV row count");
    for (size_t i = 1; i < lines.size() && o.ok; ++i) {
        auto f = split(lines[i], ',');
        o.require(f.size() == 3, "CSV row width");
        if (!o.ok) break;
        o.require(std::stoull(f[0]) == i, "CSV n column");
        o.require(BigInt(f[1]) == rows[i - 1].gcd, "CSV gcd column");
        double v = std::stod(f[2]);
        o.require(std::isfinite(v) && v >= 0, "CSV log column");
    }
    if (o.ok) o.detail = "gcd(63, 728) = 7, 200 CSV rows valid";
}

std::string capture(const std::string& cmd, int& status) {
    std::string out;
    FILE* f = ::popen(cmd.c_str(), "r");
    if (!f) {
        status = -1;
        return out;
    }
    std::array<char, 4096> buf{};
    size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), f)) > 0) out.append(buf.data(), n);
    status = ::pclose(f);
    return out;
}

struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<void(Outcome&)> run;
};

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> all{
        {1, "T and T+1 gcd identity", 5, criterion1},
        {2, "enumeration equals Moebius count", 10, criterion2},
        {3, "residue class counts mod T(T+1)", 10, criterion3},
        {4, "cubic reciprocity, exhaustive", 60, criterion4},
        {5, "certificate run A (r=1)", 10, criterion5},
        {6, "certificate run B (r=3)", 120, criterion6},
        {7, "Frobenius scaling identity", 10, criterion7},
        {8, "residue symbol properties", 5, criterion8},
        {9, "integer gcd table", 10, criterion9},
    };

    bool all_ok = true;
    std::vector<std::string> first_logs;
    for (const auto& c : all) {
        Outcome o;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        o.require(secs < c.limit_s, "took longer than the limit");
        first_logs.push_back(o.log.str());
        all_ok = all_ok && o.ok;
        std::printf("criterion %2d %s  %-36s %7.3f s  %s\n", c.id, o.ok ? "PASS" : "FAIL", c.name, secs, o.detail.c_str());
        std::fflush(stdout);
    }

    // criterion 10: library runs repeated, then the binary invoked twice per command
    Outcome det;
    for (size_t i = 0; i < all.size(); ++i) {
        Outcome again;
        try {
            all[i].run(again);
        } catch (const std::exception&) {
        }
        det.require(again.log.str() == first_logs[i], "criterion " + std::to_string(all[i].id) + " output changed");
    }
    int cli_runs = 0;
    if (argc > 1) {
        const std::string bin = argv[1];
        const std::vector<std::string> cmds{
            "--format json example1 --p 5 --N 2",
            "--format json certificate --q 3 --k 1 --n0 2 --N 4 --a T --b T+1",
            "--format json certificate --q 4 --k 1 --n0 1 --N 3 --a T --b T+1",
            "--format csv dirichlet-count --p 3 --N 6 --mu T^2+T",
            "--format json reciprocity-verify --q 4 --mu T^2+T --r 3 --bound 4 --crosscheck",
            "--format csv trichotomy --a-int 2 --b-int 3 --n-max 200",
            "--format json --threads 3 irr-list --q 4 --N 4",
            "--format json --seed 5 factor --q 9 --f T^8+2",
        };
        for (const auto& args : cmds) {
            int s1 = 0, s2 = 0;
            const std::string a = capture(bin + " " + args, s1);
            const std::string b = capture(bin + " " + args, s2);
            det.require(s1 == 0 && s2 == 0, "binary failed: " + args);
            det.require(!a.empty() && a == b, "binary output differs: " + args);
            ++cli_runs;
        }
    } else {
        det.require(false, "no ffgcd binary given");
    }
    if (det.ok) det.detail = "criteria 1-9 repeated identically, " + std::to_string(cli_runs) + " binary runs byte-identical";
    all_ok = all_ok && det.ok;
    std::printf("criterion 10 %s  %-36s %7s    %s\n", det.ok ? "PASS" : "FAIL", "determinism", "", det.detail.c_str());
    return all_ok ? 0 : 1;
}

#include "ffgcd/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace ffgcd {

Json json_int(const BigInt& x) {
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
        return static_cast<std::int64_t>(x);
    }
    return x.str();
}

double to_double(const Rational& x) { return x.convert_to<double>(); }

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

namespace {

Json poly_list(const std::vector<Poly>& ps) {
    Json arr = Json::array();
    for (const auto& p : ps) arr.push_back(format_poly(p));
    return arr;
}

std::string scalar_text(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_float()) return format_double(v.get<double>());
    return v.dump();
}

std::string csv_cell(const Json& v) {
    std::string s = scalar_text(v);
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

bool flat_object(const Json& v) {
    if (!v.is_object()) return false;
    return std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_primitive(); });
}

}  // namespace

Json field_json(const FieldCtx& F) {
    Json j;
    j["p"] = F.p();
    j["m"] = F.m();
    j["q"] = F.q();
    if (F.is_prime_field()) {
        j["modulus"] = nullptr;
    } else {
        std::string mod;
        for (std::size_t i = F.modulus().size(); i-- > 0;) {
            const u64 c = F.modulus()[i];
            if (!c) continue;
            if (!mod.empty()) mod += '+';
            if (i == 0) {
                mod += std::to_string(c);
                continue;
            }
            if (c != 1) mod += std::to_string(c) + "*";
            mod += "g";
            if (i > 1) mod += "^" + std::to_string(i);
        }
        j["modulus"] = mod;
    }
    return j;
}

Json to_json(const CountReport& rep) {
    Json j;
    j["q"] = rep.q;
    j["N"] = rep.N;
    if (rep.modulus) j["mu"] = format_poly(*rep.modulus);
    if (rep.alpha) j["alpha"] = format_poly(*rep.alpha);
    j["exact"] = json_int(rep.exact);
    j["main_term_num"] = json_int(numerator(rep.main_term));
    j["main_term_den"] = json_int(denominator(rep.main_term));
    j["deviation"] = to_double(rep.deviation);
    if (rep.per_class) {
        Json classes = Json::array();
        for (const auto& c : *rep.per_class) {
            Json row;
            row["residue"] = format_poly(c.residue);
            row["count"] = json_int(c.count);
            row["deviation"] = to_double(c.deviation);
            classes.push_back(std::move(row));
        }
        j["classes"] = std::move(classes);
    }
    return j;
}

Json to_json(const Factorization& fac) {
    Json j;
    j["unit"] = fac.unit.to_string();
    Json fs = Json::array();
    for (const auto& f : fac.factors) {
        Json row;
        row["prime"] = format_poly(f.prime);
        row["degree"] = f.prime.degree();
        row["multiplicity"] = f.multiplicity;
        fs.push_back(std::move(row));
    }
    j["factors"] = std::move(fs);
    return j;
}

Json to_json(const ReciprocityReport& rep) {
    Json j;
    j["q"] = rep.ctx->q();
    j["r"] = rep.r;
    j["mu"] = format_poly(rep.mu);
    j["bound"] = rep.degree_bound;
    j["tested"] = rep.tested;
    Json v = Json::array();
    for (const auto& x : rep.violations) {
        Json row;
        row["pi"] = format_poly(x.pi);
        row["symbol"] = x.symbol.to_string();
        v.push_back(std::move(row));
    }
    j["violations"] = std::move(v);
    j["crosschecked"] = rep.crosschecked;
    j["crosscheck_mismatches"] = rep.crosscheck_mismatches;
    return j;
}

Json to_json(const ExponentPlan& plan, unsigned list_exponents) {
    Json j;
    j["q"] = plan.base_q;
    j["k"] = plan.k;
    j["n0"] = plan.n0;
    j["p"] = plan.p;
    j["p_power_i"] = plan.p_power_i;
    j["n1"] = plan.n1;
    j["r"] = plan.r;
    j["phi_r"] = plan.phi_r;
    j["Q"] = plan.Q ? json_int(*plan.Q) : Json(plan.q_text());
    j["Q_exponent"] = plan.q_exponent;
    j["feasible"] = plan.feasible;
    if (plan.Q) {
        Json ns = Json::array();
        for (unsigned N = 1; N <= list_exponents; ++N) {
            Json row;
            row["N"] = N;
            row["n"] = json_int(plan.exponent(N));
            ns.push_back(std::move(row));
        }
        j["exponents"] = std::move(ns);
    }
    return j;
}

Json to_json(const GcdCertificate& cert) {
    Json j;
    j["q"] = cert.plan.base_q;
    j["k"] = cert.plan.k;
    j["n0"] = cert.plan.n0;
    j["r"] = cert.plan.r;
    j["Q"] = json_int(*cert.plan.Q);
    j["N"] = cert.N;
    j["n"] = json_int(cert.n);
    j["a"] = format_poly(cert.a);
    j["b"] = format_poly(cert.b);
    j["ell"] = format_poly(cert.ell);
    j["phi_Q_ell"] = json_int(cert.phi_Q_ell);
    j["c_num"] = json_int(numerator(cert.constant_c));
    j["c_den"] = json_int(denominator(cert.constant_c));
    j["witnesses"] = poly_list(cert.witnesses);
    j["witness_degree_sum"] = json_int(cert.witness_degree_sum);
    if (cert.direct_degree) j["direct_degree"] = json_int(*cert.direct_degree);
    j["seed"] = cert.seed;
    return j;
}

Json to_json(const Example1Report& rep) {
    Json j;
    j["q"] = rep.q;
    j["N"] = rep.N;
    j["n"] = json_int(rep.n);
    j["deg_gcd"] = rep.deg_gcd;
    j["b_identity"] = rep.b_identity;
    j["gcd_identity"] = rep.gcd_identity;
    j["degree_identity"] = rep.degree_identity;
    j["ok"] = rep.ok();
    return j;
}

Json to_json(const FrobeniusReport& rep) {
    Json j;
    j["a"] = format_poly(rep.a);
    j["b"] = format_poly(rep.b);
    j["m"] = rep.m;
    j["i"] = rep.i;
    j["p_power"] = rep.p_power;
    j["deg_base"] = rep.deg_base;
    j["deg_scaled"] = rep.deg_scaled;
    j["identity_holds"] = rep.identity_holds;
    j["degree_scales"] = rep.degree_scales;
    j["reduced_path_agrees"] = rep.reduced_path_agrees;
    j["ok"] = rep.ok();
    return j;
}

Json to_json(const std::vector<ScanRow>& rows) {
    Json arr = Json::array();
    for (const auto& r : rows) {
        Json row;
        row["n"] = r.n;
        row["deg_gcd"] = json_int(r.deg_gcd);
        arr.push_back(std::move(row));
    }
    return arr;
}

Json to_json(const std::vector<IntegerGcdRow>& rows) {
    Json arr = Json::array();
    for (const auto& r : rows) {
        Json row;
        row["n"] = r.n;
        row["gcd"] = json_int(r.gcd);
        row["log_gcd_over_n"] = r.log_gcd_over_n;
        arr.push_back(std::move(row));
    }
    return arr;
}

std::string to_csv(const CountReport& rep) {
    std::ostringstream out;
    if (rep.per_class) {
        const double class_main = to_double(rep.main_term) / static_cast<double>(rep.per_class->size());
        out << "residue,count,main_term,deviation\n";
        for (const auto& c : *rep.per_class) {
            out << format_poly(c.residue) << ',' << c.count.str() << ',' << format_double(class_main) << ','
                << format_double(to_double(c.deviation)) << '\n';
        }
        return out.str();
    }
    out << "q,N,exact,main_term,deviation\n";
    out << rep.q << ',' << rep.N << ',' << rep.exact.str() << ',' << format_double(to_double(rep.main_term)) << ','
        << format_double(to_double(rep.deviation)) << '\n';
    return out.str();
}

std::string to_csv(const std::vector<ScanRow>& rows) {
    std::ostringstream out;
    out << "n,deg_gcd\n";
    for (const auto& r : rows) out << r.n << ',' << r.deg_gcd.str() << '\n';
    return out.str();
}

std::string to_csv(const std::vector<IntegerGcdRow>& rows) {
    std::ostringstream out;
    out << "n,gcd,log_gcd_over_n\n";
    for (const auto& r : rows) out << r.n << ',' << r.gcd.str() << ',' << format_double(r.log_gcd_over_n) << '\n';
    return out.str();
}

std::string to_csv(const Json& doc) {
    std::ostringstream out;
    auto emit_rows = [&](const Json& arr) {
        if (arr.empty()) return;
        bool first = true;
        for (auto it = arr.front().begin(); it != arr.front().end(); ++it) {
            out << (first ? "" : ",") << it.key();
            first = false;
        }
        out << '\n';
        for (const auto& row : arr) {
            first = true;
            for (const auto& v : row) {
                out << (first ? "" : ",") << csv_cell(v);
                first = false;
            }
            out << '\n';
        }
    };
    if (doc.is_array()) {
        if (!doc.empty() && flat_object(doc.front())) {
            emit_rows(doc);
        } else {
            out << "value\n";
            for (const auto& v : doc) out << csv_cell(v.is_primitive() ? v : Json(v.dump())) << '\n';
        }
        return out.str();
    }
    bool first = true;
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        out << (first ? "" : ",") << it.key();
        first = false;
    }
    out << '\n';
    first = true;
    for (const auto& v : doc) {
        out << (first ? "" : ",") << csv_cell(v.is_primitive() ? v : Json(v.dump()));
        first = false;
    }
    out << '\n';
    return out.str();
}

std::string to_table(const Json& doc) {
    std::ostringstream out;
    if (doc.is_array()) {
        if (doc.empty()) return "(empty)\n";
        if (!flat_object(doc.front())) {
            for (const auto& v : doc) out << scalar_text(v) << '\n';
            return out.str();
        }
        std::vector<std::string> keys;
        for (auto it = doc.front().begin(); it != doc.front().end(); ++it) keys.push_back(it.key());
        std::vector<std::size_t> width(keys.size());
        for (std::size_t c = 0; c < keys.size(); ++c) width[c] = keys[c].size();
        for (const auto& row : doc) {
            for (std::size_t c = 0; c < keys.size(); ++c) width[c] = std::max(width[c], scalar_text(row[keys[c]]).size());
        }
        auto line = [&](auto cell) {
            for (std::size_t c = 0; c < keys.size(); ++c) {
                std::string s = cell(c);
                out << s << std::string(width[c] - s.size() + (c + 1 < keys.size() ? 2 : 0), ' ');
            }
            out << '\n';
        };
        line([&](std::size_t c) { return keys[c]; });
        for (const auto& row : doc) line([&](std::size_t c) { return scalar_text(row[keys[c]]); });
        return out.str();
    }
    std::size_t width = 0;
    for (auto it = doc.begin(); it != doc.end(); ++it) width = std::max(width, it.key().size());
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        out << it.key() << std::string(width - it.key().size() + 2, ' ');
        const Json& v = it.value();
        if (v.is_primitive()) {
            out << scalar_text(v) << '\n';
        } else if (v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_primitive(); })) {
            bool first = true;
            for (const auto& x : v) {
                out << (first ? "" : ", ") << scalar_text(x);
                first = false;
            }
            out << '\n';
        } else {
            out << '\n';
            std::istringstream nested(to_table(v));
            for (std::string l; std::getline(nested, l);) out << "    " << l << '\n';
        }
    }
    return out.str();
}

}  // namespace ffgcd

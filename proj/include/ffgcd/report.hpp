#pragma once

// Machine-readable renderings of the experiment reports. Integers that fit in 64 bits are JSON
// numbers; larger ones are decimal strings.

#include <string>
#include <vector>

#include <json.hpp>

#include "ffgcd/gcdlab.hpp"
#include "ffgcd/irreducibles.hpp"
#include "ffgcd/residue.hpp"

namespace ffgcd {

using Json = nlohmann::ordered_json;

enum class Format { Table, Csv, Json };

Json json_int(const BigInt& x);
double to_double(const Rational& x);

Json field_json(const FieldCtx& F);
Json to_json(const CountReport& rep);
Json to_json(const Factorization& fac);
Json to_json(const ReciprocityReport& rep);
Json to_json(const ExponentPlan& plan, unsigned list_exponents = 3);
Json to_json(const GcdCertificate& cert);
Json to_json(const Example1Report& rep);
Json to_json(const FrobeniusReport& rep);
Json to_json(const std::vector<ScanRow>& rows);
Json to_json(const std::vector<IntegerGcdRow>& rows);

std::string to_csv(const CountReport& rep);
std::string to_csv(const std::vector<ScanRow>& rows);
std::string to_csv(const std::vector<IntegerGcdRow>& rows);
// Generic CSV: one header row from the object's keys, one data row; arrays of flat objects
// become one row per element.
std::string to_csv(const Json& doc);

// "key  value" lines for objects, a column table for arrays of flat objects.
std::string to_table(const Json& doc);

std::string format_double(double x);

}  // namespace ffgcd

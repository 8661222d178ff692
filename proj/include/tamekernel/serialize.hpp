#pragma once

#include <json.hpp>

#include "tamekernel/classgroups.hpp"
#include "tamekernel/induction.hpp"
#include "tamekernel/k2.hpp"
#include "tamekernel/lvalues.hpp"
#include "tamekernel/scanner.hpp"

// JSON forms of the reports. Every number is emitted as a string: integers in
// decimal, rationals as "num/den".
namespace tamekernel {

using Json = nlohmann::ordered_json;

std::string json_number(std::int64_t v);
std::string json_number(const BigInt& v);

Json to_json(const Rational& q);
Json to_json(const FamilyTag& tag);
Json to_json(const LValue& v);
Json to_json(const IdentityReport& r);
Json to_json(const RedeiMatrix& m);
Json to_json(const RankReport& r);
Json to_json(const PrimeAboveTwo& p);
Json to_json(const R4Bound& b);
Json to_json(const K2Report& r);
Json to_json(const TableRow& row);

}  // namespace tamekernel

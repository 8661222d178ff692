#include "tamekernel/serialize.hpp"

namespace tamekernel {

namespace {

Json number_array(const std::vector<std::int64_t>& values) {
    Json a = Json::array();
    for (std::int64_t v : values) a.push_back(json_number(v));
    return a;
}

}  // namespace

std::string json_number(std::int64_t v) { return std::to_string(v); }
std::string json_number(const BigInt& v) { return v.get_str(); }

Json to_json(const Rational& q) { return q.to_string(); }

Json to_json(const FamilyTag& tag) {
    return Json{{"kind", std::string(family_kind_name(tag.kind))},
                {"n", json_number(tag.n)},
                {"labeling", number_array(tag.labeling)}};
}

Json to_json(const LValue& v) {
    return Json{{"value", to_json(v.value)},
                {"character_modulus", json_number(v.character_modulus)},
                {"excluded_modulus", json_number(v.excluded_modulus)},
                {"s", json_number(v.s_point)}};
}

Json to_json(const IdentityReport& r) {
    Json terms = Json::array();
    for (const auto& t : r.rhs_terms) terms.push_back(to_json(t));
    return Json{{"lhs", to_json(r.lhs)}, {"rhs_terms", terms}, {"rhs", to_json(r.rhs())}, {"equal", r.equal}};
}

Json to_json(const RedeiMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.t; ++i) {
        std::string row;
        for (int j = 0; j < m.t; ++j) row.push_back(m.bits.get(i, j) ? '1' : '0');
        rows.push_back(row);
    }
    return Json{{"t", json_number(m.t)},
                {"prime_discriminants", number_array(m.prime_discriminants)},
                {"rows", rows},
                {"rank", json_number(m.bits.rank())}};
}

Json to_json(const RankReport& r) {
    Json j{{"t", json_number(r.t)},
           {"redei_rank", json_number(r.redei_rank)},
           {"r2_narrow", json_number(r.r2_narrow)},
           {"r4_narrow", json_number(r.r4_narrow)},
           {"minus_one_norm", r.minus_one_norm}};
    j["r2_ordinary"] = r.r2_ordinary ? Json(json_number(*r.r2_ordinary)) : Json(nullptr);
    j["r4_ordinary_zero"] = r.r4_ordinary_zero ? Json(*r.r4_ordinary_zero) : Json(nullptr);
    return j;
}

Json to_json(const PrimeAboveTwo& p) {
    Json j{{"splitting", splitting_name(p.splitting)}, {"s", json_number(p.s)}};
    j["principal"] = p.principal ? Json(*p.principal) : Json(nullptr);
    return j;
}

Json to_json(const R4Bound& b) {
    return Json{{"r4_CE", json_number(b.r4_CE)},
                {"bound_low", json_number(b.bound_low)},
                {"bound_high", json_number(b.bound_high)}};
}

Json to_json(const K2Report& r) {
    Json j{{"D", json_number(r.D)},
           {"l_value", to_json(r.l_value)},
           {"zeta_minus1", to_json(r.zeta_minus1)},
           {"w2", json_number(r.w2)},
           {"k2_order", json_number(r.k2_order)},
           {"v2_order", json_number(static_cast<std::int64_t>(r.v2_order))},
           {"r2", json_number(r.r2)},
           {"r4_bounds", Json::array({json_number(r.r4_bounds.first), json_number(r.r4_bounds.second)})}};
    if (r.structure) {
        Json s = Json::array();
        for (const auto& o : *r.structure) s.push_back(json_number(o));
        j["structure"] = s;
    } else {
        j["structure"] = nullptr;
    }
    j["delta"] = r.delta ? Json(json_number(static_cast<std::int64_t>(*r.delta))) : Json(nullptr);
    j["family"] = to_json(r.family);
    return j;
}

Json to_json(const TableRow& row) {
    Json j{{"D", json_number(row.D)},
           {"D_over_4", json_number(row.D_over_4)},
           {"primes", number_array(row.primes)},
           {"neg_L", format_value(row.neg_L)}};
    j["delta"] = row.delta ? Json(json_number(static_cast<std::int64_t>(*row.delta))) : Json(nullptr);
    return j;
}

}  // namespace tamekernel

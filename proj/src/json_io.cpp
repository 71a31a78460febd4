#include <asmkit/json_io.hpp>

#include <sstream>

namespace asmkit {

using nlohmann::json;

json to_json(const Cyc& v) {
    return json{{"a", v.rat_part().get_str()}, {"b", v.q_part().get_str()}};
}

Cyc cyc_from_json(const json& j) {
    return Cyc(parse_rat(j.at("a").get<std::string>()), parse_rat(j.at("b").get<std::string>()));
}

json to_json(const RatPoly& p) {
    json coeffs = json::object();
    for (const auto& [e, c] : p.coeffs()) coeffs[std::to_string(e)] = c.get_str();
    return json{{"var", std::string(1, p.var() ? p.var() : 'z')}, {"coeffs", coeffs}};
}

json to_json(const CycPoly& p) {
    json coeffs = json::object();
    for (const auto& [e, c] : p.coeffs()) coeffs[std::to_string(e)] = to_json(c);
    return json{{"var", std::string(1, p.var() ? p.var() : 'z')}, {"coeffs", coeffs}};
}

json to_json(const RefinedTable& t) {
    json counts = json::object();
    for (const auto& [pos, c] : t.counts) counts[std::to_string(pos)] = c.get_str();
    return json{{"class", class_name(t.cls)},
                {"order", t.order},
                {"statistic", stat_name(t.stat)},
                {"provenance", provenance_name(t.provenance)},
                {"total", t.total().get_str()},
                {"counts", counts}};
}

std::string table_csv(const RefinedTable& t) {
    std::ostringstream os;
    os << "class,order,statistic,position,count\n";
    for (const auto& [pos, c] : t.counts)
        os << class_name(t.cls) << ',' << t.order << ',' << stat_name(t.stat) << ',' << pos << ','
           << c.get_str() << '\n';
    return os.str();
}

json to_json(const IdentityCheck& c) {
    const char* status = c.status == IdentityCheck::Status::Pass      ? "pass"
                         : c.status == IdentityCheck::Status::Fail    ? "fail"
                                                                      : "skipped";
    json witness = json::object();
    if (!c.witness.empty()) witness["detail"] = c.witness;
    return json{{"identity", c.name}, {"n", c.n},          {"status", status},
                {"witness", witness}, {"provenance", json{{"description", c.provenance}}},
                {"seed", c.seed}};
}

json report_json(const std::vector<IdentityCheck>& checks) {
    json arr = json::array();
    for (const auto& c : checks) arr.push_back(to_json(c));
    return arr;
}

}  // namespace asmkit

#include "trino/error.hpp"
#include "trino/scan.hpp"

#include <json.hpp>

namespace trino {

using nlohmann::json;

bool scan_order(const ScanRecord& x, const ScanRecord& y) {
    auto key = [](const ScanRecord& r) {
        return std::tuple(r.n, r.m, r.a < 0 ? -r.a : r.a, r.a < 0 ? -1 : 1, r.b);
    };
    return key(x) < key(y);
}

std::string to_json_line(const ScanRecord& r) {
    json j;
    j["n"] = r.n;
    j["m"] = r.m;
    j["a"] = r.a;
    j["b"] = r.b;
    j["reducible"] = r.reducible;
    j["factor_degrees"] = r.factor_degrees;
    j["factors"] = r.factors;
    j["certificate"] = r.certificate;
    j["measure"] = r.measure;
    j["house"] = r.house;
    if (r.elapsed) j["elapsed"] = *r.elapsed;
    if (r.error) j["error"] = *r.error;
    return j.dump();
}

ScanRecord parse_scan_record(std::string_view line) {
    try {
        const json j = json::parse(line);
        ScanRecord r;
        r.n = j.at("n").get<int>();
        r.m = j.at("m").get<int>();
        r.a = j.at("a").get<long>();
        r.b = j.at("b").get<int>();
        r.reducible = j.at("reducible").get<bool>();
        r.factor_degrees = j.at("factor_degrees").get<std::vector<int>>();
        r.factors = j.at("factors").get<std::vector<std::string>>();
        r.certificate = j.at("certificate").get<std::string>();
        r.measure = j.at("measure").get<double>();
        r.house = j.at("house").get<double>();
        if (j.contains("elapsed")) r.elapsed = j["elapsed"].get<double>();
        if (j.contains("error")) r.error = j["error"].get<std::string>();
        return r;
    } catch (const json::exception& e) {
        fail(ErrorCode::InvalidArgument, std::string("malformed scan record: ") + e.what());
    }
}

} // namespace trino

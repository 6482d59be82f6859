#include "selink/record_io.hpp"

#include <json.hpp>

#include "selink/errors.hpp"

namespace selink {

using ojson = nlohmann::ordered_json;

OutputFormat parse_format(const std::string& s) {
    if (s == "json") return OutputFormat::json;
    if (s == "csv") return OutputFormat::csv;
    if (s == "md") return OutputFormat::md;
    throw usage_error("unknown output format: " + s + " (expected json, csv, or md)");
}

namespace {

ojson record_to_ojson(const ResultRecord& r) {
    ojson j;
    j["weights"] = r.weights;
    j["degree"] = r.degree;
    j["index"] = r.index;
    j["yy_type"] = r.yy_type.empty() ? ojson(nullptr) : ojson(r.yy_type);
    if (r.exponents)
        j["exponents"] = *r.exponents;
    else
        j["exponents"] = nullptr;
    ojson qs;
    qs["smooth"] = r.qs.smooth;
    qs["cond1"] = r.qs.cond1;
    qs["cond2"] = r.qs.cond2;
    qs["cond3"] = r.qs.cond3;
    qs["triples"] = r.qs.triples;
    qs["witnesses"] = r.qs.witnesses;
    qs["failure"] = r.qs.failure;
    j["quasismooth"] = qs;
    ojson v;
    v["status"] = se_status_name(r.verdict.status);
    v["branch"] = r.verdict.branch;
    v["reason"] = r.verdict.reason;
    ojson m;
    m["lhs_2Id"] = r.verdict.lhs_2Id;
    m["rhs_3w0w1"] = r.verdict.rhs[0];
    m["rhs_3w0w2"] = r.verdict.rhs[1];
    m["rhs_3w0w3"] = r.verdict.rhs[2];
    v["margins"] = m;
    j["verdict"] = v;
    ojson lich;
    lich["obstructed"] = r.lich_obstructed;
    lich["marginal"] = r.lich_marginal;
    j["lichnerowicz"] = lich;
    if (r.b2)
        j["b2"] = *r.b2;
    else
        j["b2"] = nullptr;
    ojson tor = ojson::array();
    for (const auto& t : r.torsion) {
        ojson p;
        p["m"] = t.m;
        p["genus"] = t.genus;
        tor.push_back(p);
    }
    j["torsion"] = tor;
    j["manifold"] = r.manifold.empty() ? ojson(nullptr) : ojson(r.manifold);
    j["provenance"] = r.provenance;
    return j;
}

}  // namespace

std::string record_to_json(const ResultRecord& r) { return record_to_ojson(r).dump(); }

ResultRecord record_from_json(const std::string& line) {
    ojson j = ojson::parse(line);
    ResultRecord r;
    for (int i = 0; i < 4; ++i) r.weights[i] = j["weights"][i].get<i64>();
    r.degree = j["degree"].get<i64>();
    r.index = j["index"].get<i64>();
    if (!j["yy_type"].is_null()) r.yy_type = j["yy_type"].get<std::string>();
    if (!j["exponents"].is_null()) {
        std::array<i64, 4> e{};
        for (int i = 0; i < 4; ++i) e[i] = j["exponents"][i].get<i64>();
        r.exponents = e;
    }
    const auto& qs = j["quasismooth"];
    r.qs.smooth = qs["smooth"].get<bool>();
    for (int i = 0; i < 4; ++i) r.qs.cond1[i] = qs["cond1"][i].get<bool>();
    r.qs.cond2 = qs["cond2"].get<bool>();
    r.qs.cond3 = qs["cond3"].get<bool>();
    r.qs.triples = qs["triples"].get<bool>();
    r.qs.witnesses = qs["witnesses"].get<std::vector<std::string>>();
    r.qs.failure = qs["failure"].get<std::string>();
    const auto& v = j["verdict"];
    std::string status = v["status"].get<std::string>();
    r.verdict.status = status == "SE_certified" ? SEStatus::certified
                       : status == "obstructed" ? SEStatus::obstructed
                                                : SEStatus::unknown;
    r.verdict.branch = v["branch"].get<int>();
    r.verdict.reason = v["reason"].get<std::string>();
    r.verdict.lhs_2Id = v["margins"]["lhs_2Id"].get<i64>();
    r.verdict.rhs[0] = v["margins"]["rhs_3w0w1"].get<i64>();
    r.verdict.rhs[1] = v["margins"]["rhs_3w0w2"].get<i64>();
    r.verdict.rhs[2] = v["margins"]["rhs_3w0w3"].get<i64>();
    r.lich_obstructed = j["lichnerowicz"]["obstructed"].get<bool>();
    r.lich_marginal = j["lichnerowicz"]["marginal"].get<bool>();
    if (!j["b2"].is_null()) r.b2 = j["b2"].get<i64>();
    for (const auto& t : j["torsion"])
        r.torsion.push_back({t["m"].get<i64>(), t["genus"].get<i64>()});
    if (!j["manifold"].is_null()) r.manifold = j["manifold"].get<std::string>();
    r.provenance = j["provenance"].get<std::string>();
    return r;
}

namespace {

std::string join_i64(const std::array<i64, 4>& v, const char* sep) {
    std::string s;
    for (int i = 0; i < 4; ++i) {
        if (i) s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

std::string torsion_str(const ResultRecord& r) {
    std::string s;
    for (const auto& t : r.torsion) {
        if (!s.empty()) s += " ";
        s += std::to_string(t.m) + ":" + std::to_string(t.genus);
    }
    return s;
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        out += c;
    }
    return out + "\"";
}

std::string join_strings(const std::vector<std::string>& v, const char* sep) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += v[i];
    }
    return s;
}

}  // namespace

std::string csv_header() {
    return "weights,degree,index,yy_type,exponents,quasismooth,qs_cond1,qs_cond2,qs_cond3,"
           "qs_triples,qs_witnesses,qs_failure,verdict,branch,reason,lhs_2Id,rhs_3w0w1,"
           "rhs_3w0w2,rhs_3w0w3,lich_obstructed,lich_marginal,b2,torsion,manifold,provenance";
}

std::string record_to_csv(const ResultRecord& r) {
    std::string cond1;
    for (int i = 0; i < 4; ++i) cond1 += r.qs.cond1[i] ? "T" : "F";
    std::string s;
    s += csv_quote(join_i64(r.weights, " ")) + ",";
    s += std::to_string(r.degree) + ",";
    s += std::to_string(r.index) + ",";
    s += r.yy_type + ",";
    s += (r.exponents ? csv_quote(join_i64(*r.exponents, " ")) : "") + ",";
    s += std::string(r.qs.smooth ? "true" : "false") + ",";
    s += cond1 + ",";
    s += std::string(r.qs.cond2 ? "true" : "false") + ",";
    s += std::string(r.qs.cond3 ? "true" : "false") + ",";
    s += std::string(r.qs.triples ? "true" : "false") + ",";
    s += csv_quote(join_strings(r.qs.witnesses, "; ")) + ",";
    s += csv_quote(r.qs.failure) + ",";
    s += std::string(se_status_name(r.verdict.status)) + ",";
    s += std::to_string(r.verdict.branch) + ",";
    s += csv_quote(r.verdict.reason) + ",";
    s += std::to_string(r.verdict.lhs_2Id) + ",";
    s += std::to_string(r.verdict.rhs[0]) + ",";
    s += std::to_string(r.verdict.rhs[1]) + ",";
    s += std::to_string(r.verdict.rhs[2]) + ",";
    s += std::string(r.lich_obstructed ? "true" : "false") + ",";
    s += std::string(r.lich_marginal ? "true" : "false") + ",";
    s += (r.b2 ? std::to_string(*r.b2) : "") + ",";
    s += csv_quote(torsion_str(r)) + ",";
    s += r.manifold + ",";
    s += csv_quote(r.provenance);
    return s;
}

std::string md_header() {
    return "| weights | d | I | type | a | quasismooth | witnesses | verdict | 2Id | 3w0w1 | "
           "3w0w2 | 3w0w3 | lich | b2 | torsion | manifold | provenance |\n"
           "|---|---|---|---|---|---|---|---|---|---|---|---|---|---|---|---|---|";
}

std::string record_to_md(const ResultRecord& r) {
    std::string lich = r.lich_obstructed ? "obstructed" : (r.lich_marginal ? "marginal" : "-");
    std::string s = "| (" + join_i64(r.weights, ",") + ") | " + std::to_string(r.degree) +
                    " | " + std::to_string(r.index) + " | " +
                    (r.yy_type.empty() ? "-" : r.yy_type) + " | " +
                    (r.exponents ? "(" + join_i64(*r.exponents, ",") + ")" : "-") + " | " +
                    (r.qs.smooth ? "yes" : "no: " + r.qs.failure) + " | " +
                    join_strings(r.qs.witnesses, "; ") + " | " + r.verdict.describe() + " | " +
                    std::to_string(r.verdict.lhs_2Id) + " | " +
                    std::to_string(r.verdict.rhs[0]) + " | " + std::to_string(r.verdict.rhs[1]) +
                    " | " + std::to_string(r.verdict.rhs[2]) + " | " + lich + " | " +
                    (r.b2 ? std::to_string(*r.b2) : "-") + " | " +
                    (r.torsion.empty() ? "-" : torsion_str(r)) + " | " +
                    (r.manifold.empty() ? "-" : r.manifold) + " | " + r.provenance + " |";
    return s;
}

std::string render_records(const std::vector<ResultRecord>& records, OutputFormat f) {
    std::string out;
    if (f == OutputFormat::csv) out = csv_header() + "\n";
    if (f == OutputFormat::md) out = md_header() + "\n";
    for (const auto& r : records) {
        switch (f) {
            case OutputFormat::json:
                out += record_to_json(r);
                break;
            case OutputFormat::csv:
                out += record_to_csv(r);
                break;
            case OutputFormat::md:
                out += record_to_md(r);
                break;
        }
        out += "\n";
    }
    return out;
}

}  // namespace selink

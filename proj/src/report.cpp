#include "svlab/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "svlab/errors.hpp"
#include "svlab/parse.hpp"

namespace svlab {

using nlohmann::json;

namespace {

json json_doubles(const std::vector<double>& xs) {
    json out = json::array();
    for (double x : xs) out.push_back(fmt_double(x));
    return out;
}

json json_rats(const std::vector<Rat>& xs) {
    json out = json::array();
    for (const auto& x : xs) out.push_back(rat_str(x));
    return out;
}

json json_records(const std::vector<CheckRecord>& rs) {
    json out = json::array();
    for (const auto& r : rs) out.push_back(json_of(r));
    return out;
}

} // namespace

json json_of(const CheckRecord& r) {
    return {{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}};
}

json json_of(const PositionReport& r) {
    json rows = json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"subset", row.subset},
                        {"verdict", emptiness_str(row.verdict)},
                        {"witness_degree", row.witness_degree}});
    return {{"overall", overall_str(r.overall)},
            {"N", r.n_param},
            {"subset_size", r.subset_size},
            {"rows", rows}};
}

json json_of(const WeightCertificate& c) {
    return {{"q", c.q},
            {"N", c.n_param},
            {"k", c.k},
            {"omega", json_rats(c.omega)},
            {"omega_tilde", rat_str(c.omega_tilde)},
            {"pinned_index", c.pinned_index},
            {"transcript", json_records(c.transcript)}};
}

json json_of(const BasisCompletion& c) {
    json extras = json::array();
    for (const auto& p : c.extras) extras.push_back(poly_str(p));
    return {{"extras", extras},
            {"retries", c.retries},
            {"transcript", json_records(c.transcript)}};
}

json json_of(const ClaimLedger& l) {
    json rows = json::array();
    for (const auto& row : l.rows)
        rows.push_back({{"cluster", row.cluster},
                        {"cluster_degree", row.cluster_degree},
                        {"mults", row.mults},
                        {"mult_w", row.mult_w},
                        {"vanish_count", row.vanish_count},
                        {"rhs", rat_str(row.rhs)},
                        {"pass", row.pass}});
    return {{"rows", rows},
            {"slope_lhs", rat_str(l.slope_lhs)},
            {"slope_rhs", rat_str(l.slope_rhs)},
            {"slope_pass", l.slope_pass},
            {"extras", json_records(l.extras)},
            {"all_pass", l.all_pass}};
}

json json_of(const SMTReport& r) {
    json slope_rows = json::array();
    for (const auto& row : r.slope_rows)
        slope_rows.push_back({{"index", row.index},
                              {"degree", row.degree},
                              {"total_count", row.total_count},
                              {"truncated_count", row.truncated_count},
                              {"contribution", rat_str(row.contribution)}});
    json numeric_rows = json::array();
    for (const auto& row : r.numeric_rows)
        numeric_rows.push_back({{"r", fmt_double(row.r)},
                                {"t_f", fmt_double(row.t_f)},
                                {"counting", json_doubles(row.counting)},
                                {"lhs", fmt_double(row.lhs)},
                                {"rhs", fmt_double(row.rhs)},
                                {"margin", fmt_double(row.margin)}});
    json out{{"q", r.q},
             {"N", r.n_param},
             {"k", r.k},
             {"d", r.d},
             {"hilbert", r.hilbert},
             {"coefficient", rat_str(r.coefficient)},
             {"curve_degree", r.curve_degree},
             {"position", json_of(r.position)},
             {"slope",
              {{"lhs", rat_str(r.slope_lhs)},
               {"rhs", rat_str(r.slope_rhs)},
               {"margin", rat_str(r.slope_margin)},
               {"rows", slope_rows}}},
             {"numeric",
              {{"rows", numeric_rows}, {"skipped_radii", json_doubles(r.skipped_radii)}}},
             {"deep", r.deep},
             {"warnings", r.warnings},
             {"ok", r.ok()}};
    if (r.weights) out["weights"] = json_of(*r.weights);
    if (r.completion) out["completion"] = json_of(*r.completion);
    if (r.claim) out["claim"] = json_of(*r.claim);
    if (r.alpha_beta)
        out["alpha_beta"] = {{"min", fmt_double(r.alpha_beta->first)},
                             {"max", fmt_double(r.alpha_beta->second)}};
    return out;
}

json json_of(const UniquenessReport& r) {
    return {{"q", r.q},
            {"N", r.n_param},
            {"k", r.k},
            {"d", r.d},
            {"hilbert", r.hilbert},
            {"deg_f", r.deg_f},
            {"deg_g", r.deg_g},
            {"threshold", rat_str(r.threshold)},
            {"threshold_met", r.threshold_met},
            {"hyp_separated", r.hyp_separated},
            {"separated_detail", r.separated_detail},
            {"hyp_agree", r.hyp_agree},
            {"agree_detail", r.agree_detail},
            {"maps_equal", r.maps_equal},
            {"consistent", r.consistent},
            {"warnings", r.warnings}};
}

json json_of(const Ineq52Report& r) {
    json rows = json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"r", fmt_double(row.r)},
                        {"sum_n1", fmt_double(row.sum_n1)},
                        {"t_h", fmt_double(row.t_h)},
                        {"t_fg", fmt_double(row.t_fg)},
                        {"margin_counting", fmt_double(row.margin_counting)},
                        {"margin_growth", fmt_double(row.margin_growth)}});
    return {{"identical_maps", r.identical_maps},
            {"minor_s", r.minor_s},
            {"minor_t", r.minor_t},
            {"minor", r.minor},
            {"sum_distinct", r.sum_distinct},
            {"h_degree", r.h_degree},
            {"margin_counting", r.margin_counting},
            {"margin_growth", r.margin_growth},
            {"pass", r.pass},
            {"rows", rows},
            {"skipped_radii", json_doubles(r.skipped_radii)},
            {"warnings", r.warnings}};
}

json json_of(const std::vector<JensenRow>& rows) {
    json out = json::array();
    for (const auto& row : rows)
        out.push_back({{"r", fmt_double(row.r)},
                       {"characteristic", fmt_double(row.characteristic)},
                       {"counting", fmt_double(row.counting)},
                       {"proximity", fmt_double(row.proximity)},
                       {"residual", fmt_double(row.residual)}});
    return out;
}

std::string csv_escape(const std::string& field) {
    bool needs = false;
    for (char ch : field)
        if (ch == ',' || ch == '"' || ch == '\n' || ch == '\r') needs = true;
    if (!needs) return field;
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

namespace {

std::string join_row(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += csv_escape(fields[i]);
    }
    out += "\r\n";
    return out;
}

} // namespace

std::string slope_csv(const SMTReport& r) {
    std::string out = join_row({"index", "degree", "total_count", "truncated_count",
                                "contribution"});
    for (const auto& row : r.slope_rows)
        out += join_row({std::to_string(row.index), std::to_string(row.degree),
                         std::to_string(row.total_count),
                         std::to_string(row.truncated_count), rat_str(row.contribution)});
    return out;
}

std::string numeric_csv(const SMTReport& r) {
    std::vector<std::string> head{"r", "t_f", "lhs", "rhs", "margin"};
    for (int i = 0; i < r.q; ++i) head.push_back("n_" + std::to_string(i));
    std::string out = join_row(head);
    for (const auto& row : r.numeric_rows) {
        std::vector<std::string> fields{fmt_double(row.r), fmt_double(row.t_f),
                                        fmt_double(row.lhs), fmt_double(row.rhs),
                                        fmt_double(row.margin)};
        for (double n : row.counting) fields.push_back(fmt_double(n));
        out += join_row(fields);
    }
    return out;
}

std::string claim_csv(const ClaimLedger& l) {
    std::size_t q = l.rows.empty() ? 0 : l.rows.front().mults.size();
    std::vector<std::string> head{"cluster", "cluster_degree", "mult_w", "vanish_count",
                                  "rhs", "pass"};
    for (std::size_t i = 0; i < q; ++i) head.push_back("m_" + std::to_string(i));
    std::string out = join_row(head);
    for (const auto& row : l.rows) {
        std::vector<std::string> fields{row.cluster, std::to_string(row.cluster_degree),
                                        std::to_string(row.mult_w),
                                        std::to_string(row.vanish_count),
                                        rat_str(row.rhs), row.pass ? "true" : "false"};
        for (int m : row.mults) fields.push_back(std::to_string(m));
        out += join_row(fields);
    }
    return out;
}

std::string jensen_csv(const std::vector<JensenRow>& rows) {
    std::string out =
        join_row({"r", "characteristic", "counting", "proximity", "residual"});
    for (const auto& row : rows)
        out += join_row({fmt_double(row.r), fmt_double(row.characteristic),
                         fmt_double(row.counting), fmt_double(row.proximity),
                         fmt_double(row.residual)});
    return out;
}

std::string ineq52_csv(const Ineq52Report& r) {
    std::string out = join_row(
        {"r", "sum_n1", "t_h", "t_fg", "margin_counting", "margin_growth"});
    for (const auto& row : r.rows)
        out += join_row({fmt_double(row.r), fmt_double(row.sum_n1), fmt_double(row.t_h),
                         fmt_double(row.t_fg), fmt_double(row.margin_counting),
                         fmt_double(row.margin_growth)});
    return out;
}

void atomic_write(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw ConfigError("cannot open " + tmp + " for writing");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out)
            throw ConfigError("write to " + tmp + " failed");
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw ConfigError("cannot rename " + tmp + " to " + path);
    }
}

} // namespace svlab

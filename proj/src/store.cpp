#include "satotate/store.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "satotate/errors.hpp"
#include "satotate/stats.hpp"

namespace satotate {

namespace {

std::string format_double(double v, int sig = 17) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", sig, v);
    return buf;
}

} // namespace

void write_angle_cache(std::ostream& out, const AngleTable& table) {
    out << "# form k=" << table.form.k << " N=" << table.form.N
        << " Q=" << format_double(table.form.Q)
        << " label=" << (table.form.label.empty() ? "-" : table.form.label)
        << " xmax=" << table.xmax << "\n";
    out << "p,a_p,theta\n";
    for (const auto& e : table.entries)
        out << e.p << ',' << to_string(e.a_p) << ',' << format_double(e.theta)
            << "\n";
}

void write_angle_cache(const std::string& path, const AngleTable& table) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot open " + path + " for writing");
    write_angle_cache(out, table);
}

AngleTable read_angle_cache(std::istream& in) {
    std::string header;
    if (!std::getline(in, header) || header.rfind("# form ", 0) != 0)
        throw ParseError("missing cache header", 1);
    int k = 0;
    long long N = 0, xmax = -1;
    double Q = 0.0;
    std::string label;
    {
        std::istringstream hs(header.substr(7));
        std::string tok;
        while (hs >> tok) {
            auto eq = tok.find('=');
            if (eq == std::string::npos) throw ParseError("bad header token '" + tok + "'", 1);
            std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
            try {
                if (key == "k") k = std::stoi(val);
                else if (key == "N") N = std::stoll(val);
                else if (key == "Q") Q = std::stod(val);
                else if (key == "label") label = val == "-" ? "" : val;
                else if (key == "xmax") xmax = std::stoll(val);
                else throw ParseError("unknown header key '" + key + "'", 1);
            } catch (const ParseError&) {
                throw;
            } catch (const std::exception&) {
                throw ParseError("bad header value '" + val + "'", 1);
            }
        }
    }
    if (k == 0 || N == 0 || xmax < 0) throw ParseError("incomplete cache header", 1);

    auto squarefree = [](std::int64_t n) {
        for (std::int64_t d = 2; d * d <= n; ++d)
            if (n % (d * d) == 0) return false;
        return true;
    };
    // flags are not stored: squarefree is recomputed, and a weight-2 cache
    // with Q = N can only have come from the elliptic path
    FormParams form(k, N, Q, squarefree(N), k == 2 && Q == static_cast<double>(N),
                    label);
    AngleTable table{form, xmax, {}};

    std::string line;
    long lineno = 1;
    bool saw_columns = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (!saw_columns) {
            if (line != "p,a_p,theta") throw ParseError("missing column header", lineno);
            saw_columns = true;
            continue;
        }
        std::istringstream ls(line);
        std::string ptok, atok, ttok;
        if (!std::getline(ls, ptok, ',') || !std::getline(ls, atok, ',') ||
            !std::getline(ls, ttok))
            throw ParseError("expected p,a_p,theta", lineno);
        PrimeAngle e;
        try {
            e.p = std::stoll(ptok);
        } catch (const std::exception&) {
            throw ParseError("bad prime '" + ptok + "'", lineno);
        }
        auto aval = parse_int128(atok);
        if (!aval) throw ParseError("bad coefficient '" + atok + "'", lineno);
        e.a_p = *aval;
        try {
            e.theta = std::stod(ttok);
        } catch (const std::exception&) {
            throw ParseError("bad theta '" + ttok + "'", lineno);
        }
        if (!table.entries.empty() && e.p <= table.entries.back().p)
            throw NonMonotonePrimes("cache primes not increasing at line " +
                                    std::to_string(lineno));
        if (N % e.p == 0)
            throw ParseError("ramified prime " + std::to_string(e.p) +
                                 " in cache", lineno);
        // re-derive the angle: catches corrupted coefficients (WeilViolation)
        // and tampered theta columns
        if (std::fabs(e.theta - theta_from_ap(e.a_p, e.p, k)) > 1e-12)
            throw ParseError("theta inconsistent with a_p at p = " +
                                 std::to_string(e.p), lineno);
        table.entries.push_back(e);
    }
    return table;
}

AngleTable read_angle_cache(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    return read_angle_cache(in);
}

BoundReport make_bound_report(std::string name, nlohmann::json inputs,
                              double value, std::optional<double> dominated) {
    BoundReport r;
    r.name = std::move(name);
    r.inputs = std::move(inputs);
    r.value = value;
    r.dominated = dominated;
    if (dominated) r.satisfied = *dominated <= value;
    return r;
}

bool ReportDocument::all_satisfied() const {
    for (const auto& b : bounds)
        if (b.satisfied && !*b.satisfied) return false;
    return true;
}

nlohmann::json to_json(const ReportDocument& doc) {
    nlohmann::json j;
    j["tool_version"] = doc.tool_version;
    j["command"] = doc.command;
    j["form"] = doc.form;
    j["inputs"] = doc.inputs;
    j["bounds"] = nlohmann::json::array();
    for (const auto& b : doc.bounds) {
        nlohmann::json bj;
        bj["name"] = b.name;
        bj["inputs"] = b.inputs;
        bj["value"] = b.value;
        if (b.dominated) bj["dominated"] = *b.dominated;
        if (b.satisfied) bj["satisfied"] = *b.satisfied;
        j["bounds"].push_back(bj);
    }
    j["empirical"] = doc.empirical;
    if (doc.timing_ms) j["timing_ms"] = *doc.timing_ms;
    return j;
}

ReportDocument report_from_json(const nlohmann::json& j) {
    ReportDocument doc;
    doc.tool_version = j.at("tool_version").get<std::string>();
    doc.command = j.at("command").get<std::string>();
    doc.form = j.at("form");
    doc.inputs = j.at("inputs");
    for (const auto& bj : j.at("bounds")) {
        BoundReport b;
        b.name = bj.at("name").get<std::string>();
        b.inputs = bj.at("inputs");
        b.value = bj.at("value").get<double>();
        if (bj.contains("dominated")) b.dominated = bj["dominated"].get<double>();
        if (bj.contains("satisfied")) b.satisfied = bj["satisfied"].get<bool>();
        doc.bounds.push_back(std::move(b));
    }
    doc.empirical = j.at("empirical");
    if (j.contains("timing_ms")) doc.timing_ms = j["timing_ms"].get<double>();
    return doc;
}

void print_report(std::ostream& out, const ReportDocument& doc) {
    out << doc.tool_version << "  [" << doc.command << "]\n";
    if (!doc.form.is_null()) out << "form: " << doc.form.dump() << "\n";
    if (!doc.inputs.is_null()) out << "inputs: " << doc.inputs.dump() << "\n";
    for (const auto& b : doc.bounds) {
        out << "  " << b.name << " = " << format_double(b.value);
        if (b.dominated)
            out << "   vs " << format_double(*b.dominated)
                << (b.satisfied && *b.satisfied ? "   [satisfied]" : "   [VIOLATED]");
        out << "\n";
    }
    if (!doc.empirical.is_null()) out << "empirical: " << doc.empirical.dump() << "\n";
    if (doc.timing_ms) out << "timing_ms: " << *doc.timing_ms << "\n";
}

void write_angle_histogram(std::ostream& out, const AngleTable& table, double x,
                           int bins) {
    if (bins < 1) throw DomainError("need at least one bin");
    constexpr double kPi = std::numbers::pi;
    std::vector<std::int64_t> counts(static_cast<std::size_t>(bins), 0);
    std::int64_t total = 0;
    for (const auto& e : table.entries) {
        if (static_cast<double>(e.p) > x) break;
        int b = static_cast<int>(e.theta / kPi * bins);
        if (b == bins) b = bins - 1;
        ++counts[static_cast<std::size_t>(b)];
        ++total;
    }
    out << "theta_bin,empirical_mass,st_mass\n";
    for (int b = 0; b < bins; ++b) {
        double lo = kPi * b / bins, hi = kPi * (b + 1) / bins;
        double emp = total ? static_cast<double>(counts[static_cast<std::size_t>(b)]) / total : 0.0;
        out << format_double((lo + hi) / 2.0, 12) << ',' << format_double(emp, 12)
            << ',' << format_double(mu_ST(Interval{lo, hi}), 12) << "\n";
    }
}

} // namespace satotate

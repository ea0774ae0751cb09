#include <doctest.h>

#include <fstream>
#include <numbers>
#include <sstream>

#include "satotate/errors.hpp"
#include "satotate/stats.hpp"
#include "satotate/store.hpp"

using namespace satotate;
using nlohmann::json;

namespace {

AngleTable sample_table() {
    static CurveParams c(0, -1, 1, -10, -20, 11, "11a1");
    return build_angle_table(c, FormParams::for_curve(c), 200);
}

// minimal structural validator for the subset of JSON Schema the shipped
// schema uses (type / required / properties / items)
bool validate_schema(const json& schema, const json& doc) {
    if (schema.contains("type")) {
        auto t = schema["type"].get<std::string>();
        if (t == "object" && !doc.is_object()) return false;
        if (t == "array" && !doc.is_array()) return false;
        if (t == "string" && !doc.is_string()) return false;
        if (t == "number" && !doc.is_number()) return false;
        if (t == "boolean" && !doc.is_boolean()) return false;
    }
    if (schema.contains("required"))
        for (const auto& key : schema["required"])
            if (!doc.contains(key.get<std::string>())) return false;
    if (schema.contains("properties") && doc.is_object())
        for (auto& [key, sub] : schema["properties"].items())
            if (doc.contains(key) && !validate_schema(sub, doc[key])) return false;
    if (schema.contains("items") && doc.is_array())
        for (const auto& el : doc)
            if (!validate_schema(schema["items"], el)) return false;
    return true;
}

} // namespace

TEST_CASE("angle cache round-trip is byte-lossless") {
    auto t = sample_table();
    std::ostringstream first;
    write_angle_cache(first, t);
    std::istringstream back(first.str());
    auto t2 = read_angle_cache(back);
    CHECK(t2.form.k == t.form.k);
    CHECK(t2.form.N == t.form.N);
    CHECK(t2.form.Q == t.form.Q);
    CHECK(t2.form.label == t.form.label);
    CHECK(t2.xmax == t.xmax);
    REQUIRE(t2.entries.size() == t.entries.size());
    std::ostringstream second;
    write_angle_cache(second, t2);
    CHECK(first.str() == second.str());
}

TEST_CASE("cache rejects malformed input") {
    {
        std::istringstream in("not a cache\n");
        CHECK_THROWS_AS(read_angle_cache(in), ParseError);
    }
    {
        std::istringstream in("# form k=2 N=11 Q=11 label=x xmax=100\np,a_p,theta\n7,zz,1.0\n");
        CHECK_THROWS_AS(read_angle_cache(in), ParseError);
    }
    {
        std::istringstream in("# form k=2 N=11 Q=11 label=x xmax=100\np,a_p,theta\n"
                              "7,0,1.5707963267948966\n5,0,1.5707963267948966\n");
        CHECK_THROWS_AS(read_angle_cache(in), NonMonotonePrimes);
    }
    {
        // ramified prime smuggled into the cache
        std::istringstream in("# form k=2 N=11 Q=11 label=x xmax=100\np,a_p,theta\n"
                              "11,0,1.5707963267948966\n");
        CHECK_THROWS_AS(read_angle_cache(in), ParseError);
    }
    {
        // theta column inconsistent with the coefficient
        std::istringstream in(
            "# form k=2 N=11 Q=11 label=x xmax=100\np,a_p,theta\n7,1,1.0\n");
        CHECK_THROWS_AS(read_angle_cache(in), ParseError);
    }
    {
        // coefficient violating the Weil bound
        std::istringstream in(
            "# form k=2 N=11 Q=11 label=x xmax=100\np,a_p,theta\n7,999,0.5\n");
        CHECK_THROWS_AS(read_angle_cache(in), WeilViolation);
    }
}

TEST_CASE("bound report satisfied flag") {
    auto r = make_bound_report("b", json{{"x", 1.0}}, 10.0, 9.5);
    REQUIRE(r.satisfied.has_value());
    CHECK(*r.satisfied);
    auto v = make_bound_report("b", json{{"x", 1.0}}, 10.0, 10.5);
    CHECK_FALSE(*v.satisfied);
    auto none = make_bound_report("b", json{{"x", 1.0}}, 10.0);
    CHECK_FALSE(none.satisfied.has_value());
}

TEST_CASE("report document JSON round-trip") {
    ReportDocument doc;
    doc.command = "verify";
    doc.form = json{{"k", 2}, {"N", 11}};
    doc.inputs = json{{"x", 1e6}};
    doc.bounds.push_back(make_bound_report("pi_theorem_bound", json{{"x", 1e6}},
                                           6.1642e6, 123.456789012345));
    doc.empirical = json{{"pi_f_I", 614}};
    auto j = to_json(doc);
    auto doc2 = report_from_json(j);
    CHECK(to_json(doc2) == j);
    CHECK(doc2.bounds.size() == 1);
    CHECK(*doc2.bounds[0].dominated == 123.456789012345); // exact double
    CHECK(doc.all_satisfied());
    doc.bounds.push_back(make_bound_report("x", json::object(), 1.0, 2.0));
    CHECK_FALSE(doc.all_satisfied());
}

TEST_CASE("report validates against the shipped schema") {
    std::ifstream sf("schema/report.schema.json");
    REQUIRE_MESSAGE(sf.good(), "run tests from the repository root");
    json schema = json::parse(sf);

    ReportDocument doc;
    doc.command = "bounds";
    doc.inputs = json{{"k", 2}};
    doc.bounds.push_back(make_bound_report("eta_m", json{{"m", 1}}, 2.2e-4));
    CHECK(validate_schema(schema, to_json(doc)));

    json broken = to_json(doc);
    broken.erase("tool_version");
    CHECK_FALSE(validate_schema(schema, broken));
    json wrong = to_json(doc);
    wrong["bounds"][0]["value"] = "high";
    CHECK_FALSE(validate_schema(schema, wrong));
}

TEST_CASE("angle histogram") {
    auto t = sample_table();
    std::ostringstream os;
    write_angle_histogram(os, t, 200.0, 8);
    std::istringstream is(os.str());
    std::string header;
    std::getline(is, header);
    CHECK(header == "theta_bin,empirical_mass,st_mass");
    double emp_total = 0.0, st_total = 0.0;
    std::string line;
    int rows = 0;
    while (std::getline(is, line)) {
        ++rows;
        auto c1 = line.find(','), c2 = line.find(',', c1 + 1);
        emp_total += std::stod(line.substr(c1 + 1, c2 - c1 - 1));
        st_total += std::stod(line.substr(c2 + 1));
    }
    CHECK(rows == 8);
    CHECK(emp_total == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(st_total == doctest::Approx(1.0).epsilon(1e-9));
}

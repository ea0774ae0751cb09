#ifndef SATOTATE_STORE_HPP
#define SATOTATE_STORE_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "satotate/angles.hpp"

namespace satotate {

inline constexpr const char* kToolVersion = "satotate 1.0.0";

// Angle cache CSV:
//   # form k=<k> N=<N> Q=<Q> label=<label> xmax=<xmax>
//   p,a_p,theta
//   <p>,<a_p>,<theta to 17 significant digits>
// Ramified primes are never recorded.  A read-write-read cycle is lossless.
void write_angle_cache(std::ostream& out, const AngleTable& table);
void write_angle_cache(const std::string& path, const AngleTable& table);
AngleTable read_angle_cache(std::istream& in);
AngleTable read_angle_cache(const std::string& path);

// One evaluated bound, optionally paired with the empirical quantity it
// dominates.  satisfied = (dominated <= value) when both sides are present.
struct BoundReport {
    std::string name;
    nlohmann::json inputs;
    double value = 0.0;
    std::optional<double> dominated;
    std::optional<bool> satisfied;
};

BoundReport make_bound_report(std::string name, nlohmann::json inputs,
                              double value,
                              std::optional<double> dominated = std::nullopt);

struct ReportDocument {
    std::string tool_version = kToolVersion;
    std::string command;
    nlohmann::json form;      // descriptor of the form in play (may be null)
    nlohmann::json inputs;    // command inputs
    std::vector<BoundReport> bounds;
    nlohmann::json empirical; // empirical records (may be null)
    std::optional<double> timing_ms; // only populated on request; wall-clock
                                     // data would break byte-determinism

    bool all_satisfied() const;
};

nlohmann::json to_json(const ReportDocument& doc);
ReportDocument report_from_json(const nlohmann::json& j);

// Fixed-width human-readable rendering.
void print_report(std::ostream& out, const ReportDocument& doc);

// Plot data: empirical histogram of the angles against the Sato-Tate mass.
// CSV with fixed header "theta_bin,empirical_mass,st_mass"; theta_bin is the
// bin midpoint, empirical_mass the fraction of tabulated angles in the bin.
void write_angle_histogram(std::ostream& out, const AngleTable& table, double x,
                           int bins);

} // namespace satotate

#endif

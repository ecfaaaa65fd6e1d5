#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "orcas/polar.hpp"
#include "orcas/tree.hpp"

namespace orcas {

struct ProfileError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// On-disk description of a code; "family" discriminates the payload.
// ORCAS codes persist the rate profile, polar codes the construction
// parameters (frozen set and removed positions are re-derived on load).
struct ProfileFile {
    int format_version = 1;
    std::string family;  // "orcas" | "polar"
    int n = 0;
    int k = 0;
    double design_snr_db = 0.0;  // Es/N0 in dB at construction time
    std::optional<RateProfile> profile;
    std::optional<PolarSpec> polar;
};

ProfileFile make_profile_file(const RateProfile& profile, double design_es_n0_linear);
ProfileFile make_profile_file(const PolarSpec& spec);

std::string profile_to_json(const ProfileFile& file);
ProfileFile profile_from_json(const std::string& text);

void save_profile(const std::string& path, const ProfileFile& file);
ProfileFile load_profile(const std::string& path);

// One CSV row of simulation results.
std::string result_csv_header();
std::string result_csv_row(const std::string& code_id, double eb_n0_db, long long frames,
                           long long frame_errors, double bler, double ber, double elapsed_s,
                           std::uint64_t seed);

}  // namespace orcas

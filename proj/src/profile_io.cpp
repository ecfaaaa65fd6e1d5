#include "orcas/profile_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace orcas {

using json = nlohmann::ordered_json;

ProfileFile make_profile_file(const RateProfile& profile, double design_es_n0_linear) {
    ProfileFile f;
    f.family = "orcas";
    f.n = profile.n();
    f.k = profile.k();
    f.design_snr_db = 10.0 * std::log10(design_es_n0_linear);
    f.profile = profile;
    return f;
}

ProfileFile make_profile_file(const PolarSpec& spec) {
    ProfileFile f;
    f.family = "polar";
    f.n = spec.n;
    f.k = spec.k;
    f.design_snr_db = 10.0 * std::log10(spec.design_es_n0);
    f.polar = spec;
    return f;
}

std::string profile_to_json(const ProfileFile& file) {
    json j;
    j["format_version"] = file.format_version;
    j["family"] = file.family;
    j["n"] = file.n;
    j["k"] = file.k;
    j["design_snr_db"] = file.design_snr_db;
    if (file.family == "orcas") {
        json bits = json::array();
        for (int i = 0; i < file.n; ++i)
            bits.push_back(file.profile->bits.get(static_cast<std::size_t>(i)) ? 1 : 0);
        j["rate_profile"] = std::move(bits);
    } else {
        j["mother_n"] = file.polar->mother_n;
        j["matching"] = to_string(file.polar->matching);
        j["order"] = to_string(file.polar->order);
    }
    return j.dump(2) + "\n";
}

ProfileFile profile_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ProfileError(std::string("profile parse error: ") + e.what());
    }
    ProfileFile f;
    try {
        f.format_version = j.at("format_version").get<int>();
        if (f.format_version != 1) throw ProfileError("unsupported profile format_version");
        f.family = j.at("family").get<std::string>();
        f.n = j.at("n").get<int>();
        f.k = j.at("k").get<int>();
        f.design_snr_db = j.at("design_snr_db").get<double>();
        if (f.n < 1) throw ProfileError("profile: n must be positive");
        if (f.family == "orcas") {
            const auto& bits = j.at("rate_profile");
            if (static_cast<int>(bits.size()) != f.n)
                throw ProfileError("profile: rate_profile length differs from n");
            RateProfile p;
            p.bits = BitVector(static_cast<std::size_t>(f.n));
            int ones = 0;
            for (int i = 0; i < f.n; ++i) {
                int b = bits.at(static_cast<std::size_t>(i)).get<int>();
                if (b != 0 && b != 1) throw ProfileError("profile: rate_profile entries must be 0/1");
                if (b) {
                    p.bits.set(static_cast<std::size_t>(i), true);
                    ++ones;
                }
            }
            if (ones != f.k) throw ProfileError("profile: k does not match rate_profile weight");
            f.profile = std::move(p);
        } else if (f.family == "polar") {
            int mother_n = j.at("mother_n").get<int>();
            std::string matching = j.at("matching").get<std::string>();
            std::string order = j.at("order").get<std::string>();
            PolarMatching m = matching == "none"       ? PolarMatching::None
                              : matching == "puncture" ? PolarMatching::Puncture
                              : matching == "shorten"  ? PolarMatching::Shorten
                                                       : throw ProfileError("profile: bad matching");
            PolarOrder o = order == "natural" ? PolarOrder::Natural
                           : order == "bitrev" ? PolarOrder::BitReverse
                                                : throw ProfileError("profile: bad order");
            double es = std::pow(10.0, f.design_snr_db / 10.0);
            PolarSpec spec = construct_polar(f.n, f.k, m, o, es);
            if (spec.mother_n != mother_n) throw ProfileError("profile: mother_n inconsistent");
            f.polar = std::move(spec);
        } else {
            throw ProfileError("profile: unknown family '" + f.family + "'");
        }
    } catch (const json::exception& e) {
        throw ProfileError(std::string("profile field error: ") + e.what());
    }
    return f;
}

void save_profile(const std::string& path, const ProfileFile& file) {
    std::ofstream out(path);
    if (!out) throw ProfileError("cannot write profile file: " + path);
    out << profile_to_json(file);
}

ProfileFile load_profile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ProfileError("cannot read profile file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return profile_from_json(buf.str());
}

std::string result_csv_header() {
    return "code,eb_n0_db,frames,frame_errors,bler,ber,elapsed_s,seed";
}

std::string result_csv_row(const std::string& code_id, double eb_n0_db, long long frames,
                           long long frame_errors, double bler, double ber, double elapsed_s,
                           std::uint64_t seed) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%s,%.4f,%lld,%lld,%.8g,%.8g,%.3f,%llu", code_id.c_str(),
                  eb_n0_db, frames, frame_errors, bler, ber, elapsed_s,
                  static_cast<unsigned long long>(seed));
    return buf;
}

}  // namespace orcas

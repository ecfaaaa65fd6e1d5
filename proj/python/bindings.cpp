// Python bindings for the main operations: code design, analytic BLER,
// weight distributions, encoding/decoding, polar baseline, Monte Carlo.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <memory>
#include <optional>

#include "orcas/designer.hpp"
#include "orcas/ga.hpp"
#include "orcas/nprsd.hpp"
#include "orcas/profile_io.hpp"
#include "orcas/simulator.hpp"

namespace py = pybind11;
using namespace orcas;

namespace {

std::vector<int> to_bits(const BitVector& v) {
    std::vector<int> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v.get(i);
    return out;
}

BitVector from_bits(const std::vector<int>& bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != 0 && bits[i] != 1) throw std::invalid_argument("bits must be 0/1");
        v.set(i, bits[i]);
    }
    return v;
}

py::list weights_to_list(const WeightDistribution& w) {
    py::list out;
    for (const BigInt& c : w.counts) out.append(py::int_(py::str(c.str())));
    return out;
}

py::dict record_to_dict(const TrialRecord& rec, int k) {
    py::dict d;
    d["frames"] = rec.frames;
    d["frame_errors"] = rec.frame_errors;
    d["bit_errors"] = rec.bit_errors;
    d["codeword_errors"] = rec.codeword_errors;
    d["bler"] = rec.bler();
    d["ber"] = rec.frames && k ? static_cast<double>(rec.bit_errors) / (rec.frames * k) : 0.0;
    d["elapsed_s"] = rec.elapsed_s;
    d["seed"] = rec.seed;
    return d;
}

class PyOrcasCode {
public:
    PyOrcasCode(RateProfile profile, double es_n0_linear)
        : profile_(std::move(profile)),
          es_n0_(es_n0_linear),
          tree_(std::make_shared<CodeTree>(build_tree(profile_))),
          decoder_(std::make_unique<OrcasDecoder>(*tree_)) {}

    int n() const { return profile_.n(); }
    int k() const { return profile_.k(); }
    double design_snr_db() const { return 10.0 * std::log10(es_n0_); }
    std::vector<int> rate_profile() const { return to_bits(profile_.bits); }

    std::string tree_str() const { return tree_to_string(*tree_); }
    std::vector<std::tuple<int, int, long long>> leaves() const {
        std::vector<std::tuple<int, int, long long>> out;
        for (const CodeTree* leaf : tree_leaves(*tree_)) out.emplace_back(leaf->n, leaf->k, leaf->d);
        return out;
    }
    long long min_distance() const { return tree_->d; }

    std::vector<int> encode_bits(const std::vector<int>& message) const {
        return to_bits(encode(*tree_, from_bits(message)));
    }
    py::tuple decode_llrs(const std::vector<double>& llr) {
        ScResult res = decoder_->decode(llr);
        return py::make_tuple(to_bits(res.message), to_bits(res.codeword));
    }

    double analytic_bler(double eb_n0_db) const {
        return evaluate(std::pow(10.0, eb_n0_db / 10.0), profile_);
    }

    py::dict simulate(double eb_n0_db, long long min_errors, long long max_frames,
                      std::uint64_t seed, bool all_zero) const {
        CodeSystem sys = make_system(tree_);
        TrialRecord rec = run_point(sys, make_channel(eb_n0_db, n(), k()),
                                    {min_errors, max_frames}, seed, all_zero);
        return record_to_dict(rec, k());
    }

    double throughput(double seconds, double es_n0_db) const {
        return measure_throughput(make_system(tree_), seconds, es_n0_db);
    }

    void save(const std::string& path) const {
        save_profile(path, make_profile_file(profile_, es_n0_));
    }

    const RateProfile& profile() const { return profile_; }

private:
    RateProfile profile_;
    double es_n0_;
    std::shared_ptr<CodeTree> tree_;
    std::unique_ptr<OrcasDecoder> decoder_;
};

class PyPolarCode {
public:
    explicit PyPolarCode(PolarSpec spec)
        : spec_(std::make_shared<PolarSpec>(std::move(spec))),
          decoder_(std::make_unique<PolarDecoder>(*spec_, true)) {}

    int n() const { return spec_->n; }
    int k() const { return spec_->k; }
    int mother_n() const { return spec_->mother_n; }
    std::string matching() const {
        return to_string(spec_->matching) +
               (spec_->matching == PolarMatching::None ? "" : "-" + to_string(spec_->order));
    }
    double design_snr_db() const { return 10.0 * std::log10(spec_->design_es_n0); }
    std::vector<int> frozen() const {
        return std::vector<int>(spec_->frozen.begin(), spec_->frozen.end());
    }

    std::vector<int> encode_bits(const std::vector<int>& message) const {
        return to_bits(polar_encode(*spec_, from_bits(message)));
    }
    py::tuple decode_llrs(const std::vector<double>& llr) {
        ScResult res = decoder_->decode(llr);
        return py::make_tuple(to_bits(res.message), to_bits(res.codeword));
    }

    double analytic_bler(double eb_n0_db) const {
        return polar_analytic_bler(*spec_, std::pow(10.0, eb_n0_db / 10.0));
    }

    py::dict simulate(double eb_n0_db, long long min_errors, long long max_frames,
                      std::uint64_t seed, bool all_zero) const {
        CodeSystem sys = make_system(spec_);
        TrialRecord rec = run_point(sys, make_channel(eb_n0_db, n(), k()),
                                    {min_errors, max_frames}, seed, all_zero);
        return record_to_dict(rec, k());
    }

    double throughput(double seconds, double es_n0_db) const {
        return measure_throughput(make_system(spec_), seconds, es_n0_db);
    }

    void save(const std::string& path) const { save_profile(path, make_profile_file(*spec_)); }

private:
    std::shared_ptr<PolarSpec> spec_;
    std::unique_ptr<PolarDecoder> decoder_;
};

std::pair<PolarMatching, PolarOrder> parse_matching(const std::string& s) {
    if (s == "none") return {PolarMatching::None, PolarOrder::Natural};
    if (s == "puncture-natural") return {PolarMatching::Puncture, PolarOrder::Natural};
    if (s == "puncture-bitrev") return {PolarMatching::Puncture, PolarOrder::BitReverse};
    if (s == "shorten-natural") return {PolarMatching::Shorten, PolarOrder::Natural};
    if (s == "shorten-bitrev") return {PolarMatching::Shorten, PolarOrder::BitReverse};
    throw std::invalid_argument("matching must be none|puncture-natural|puncture-bitrev|"
                                "shorten-natural|shorten-bitrev");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "ORCAS codes: recursive Plotkin concatenations of naturally punctured repeated "
              "simplex codes and their duals, with DEGA construction, SC decoding, a polar "
              "baseline, and a Monte Carlo BLER simulator.";

    py::class_<PyOrcasCode>(m, "OrcasCode")
        .def_property_readonly("n", &PyOrcasCode::n)
        .def_property_readonly("k", &PyOrcasCode::k)
        .def_property_readonly("design_snr_db", &PyOrcasCode::design_snr_db)
        .def_property_readonly("rate_profile", &PyOrcasCode::rate_profile)
        .def_property_readonly("min_distance", &PyOrcasCode::min_distance)
        .def("tree_str", &PyOrcasCode::tree_str)
        .def("leaves", &PyOrcasCode::leaves, "in-order (n, k, d) of the component codes")
        .def("encode", &PyOrcasCode::encode_bits, py::arg("message"))
        .def("decode", &PyOrcasCode::decode_llrs, py::arg("llr"),
             "SC decode; returns (message, codeword), positive LLR favors bit 0")
        .def("analytic_bler", &PyOrcasCode::analytic_bler, py::arg("eb_n0_db"))
        .def("simulate", &PyOrcasCode::simulate, py::arg("eb_n0_db"),
             py::arg("min_errors") = 100, py::arg("max_frames") = 10'000'000,
             py::arg("seed") = 12345, py::arg("all_zero") = false)
        .def("throughput", &PyOrcasCode::throughput, py::arg("seconds") = 0.5,
             py::arg("es_n0_db") = 2.0)
        .def("save", &PyOrcasCode::save, py::arg("path"))
        .def("__repr__", [](const PyOrcasCode& c) {
            return "OrcasCode(n=" + std::to_string(c.n()) + ", k=" + std::to_string(c.k()) + ")";
        });

    py::class_<PyPolarCode>(m, "PolarCode")
        .def_property_readonly("n", &PyPolarCode::n)
        .def_property_readonly("k", &PyPolarCode::k)
        .def_property_readonly("mother_n", &PyPolarCode::mother_n)
        .def_property_readonly("matching", &PyPolarCode::matching)
        .def_property_readonly("design_snr_db", &PyPolarCode::design_snr_db)
        .def_property_readonly("frozen", &PyPolarCode::frozen)
        .def("encode", &PyPolarCode::encode_bits, py::arg("message"))
        .def("decode", &PyPolarCode::decode_llrs, py::arg("llr"))
        .def("analytic_bler", &PyPolarCode::analytic_bler, py::arg("eb_n0_db"))
        .def("simulate", &PyPolarCode::simulate, py::arg("eb_n0_db"),
             py::arg("min_errors") = 100, py::arg("max_frames") = 10'000'000,
             py::arg("seed") = 12345, py::arg("all_zero") = false)
        .def("throughput", &PyPolarCode::throughput, py::arg("seconds") = 0.5,
             py::arg("es_n0_db") = 2.0)
        .def("save", &PyPolarCode::save, py::arg("path"))
        .def("__repr__", [](const PyPolarCode& c) {
            return "PolarCode(n=" + std::to_string(c.n()) + ", k=" + std::to_string(c.k()) + ")";
        });

    m.def(
        "design",
        [](int n, int k, std::optional<double> design_snr_db, std::optional<double> target_bler) {
            if (design_snr_db.has_value() == target_bler.has_value())
                throw std::invalid_argument("give exactly one of design_snr_db / target_bler");
            if (target_bler) {
                TargetDesign td = design_for_target(n, k, *target_bler);
                return PyOrcasCode(td.profile, td.es_n0_linear);
            }
            double es = std::pow(10.0, *design_snr_db / 10.0);
            return PyOrcasCode(design(n, k, es), es);
        },
        py::arg("n"), py::arg("k"), py::arg("design_snr_db") = std::nullopt,
        py::arg("target_bler") = std::nullopt,
        "Construct an ORCAS code at a design Es/N0 (dB) or for a target BLER.");

    m.def(
        "polar",
        [](int n, int k, const std::string& matching, std::optional<double> design_snr_db,
           std::optional<double> target_bler) {
            auto [m_, o_] = parse_matching(matching);
            if (design_snr_db.has_value() == target_bler.has_value())
                throw std::invalid_argument("give exactly one of design_snr_db / target_bler");
            if (target_bler) return PyPolarCode(polar_design_for_target(n, k, m_, o_, *target_bler));
            return PyPolarCode(construct_polar(n, k, m_, o_, std::pow(10.0, *design_snr_db / 10.0)));
        },
        py::arg("n"), py::arg("k"), py::arg("matching") = "none",
        py::arg("design_snr_db") = std::nullopt, py::arg("target_bler") = std::nullopt,
        "Construct the DEGA polar baseline with optional length matching.");

    m.def(
        "load",
        [](const std::string& path) -> py::object {
            ProfileFile f = load_profile(path);
            if (f.family == "orcas")
                return py::cast(PyOrcasCode(*f.profile, std::pow(10.0, f.design_snr_db / 10.0)));
            return py::cast(PyPolarCode(*f.polar));
        },
        py::arg("path"), "Load a profile JSON file written by save() or the CLI.");

    m.def("nprs_weights", [](int n, int k) { return weights_to_list(nprs_weight_distribution(n, k)); },
          py::arg("n"), py::arg("k"), "Weight distribution A_0..A_n of NPRS(n,k), exact integers.");
    m.def("nprsd_weights",
          [](int n, int k) { return weights_to_list(nprsd_weight_distribution(n, k)); },
          py::arg("n"), py::arg("k"), "Weight distribution A_0..A_n of NPRSD(n,k).");
    m.def("distance_optimal_dims", &distance_optimal_dims, py::arg("n"),
          "Dimensions for which NPRS(n,k) is provably distance-optimal.");

    m.def("phi", &phi, py::arg("x"));
    m.def("phi_inv", &phi_inv, py::arg("y"));
    m.def("q_func", &q_func, py::arg("x"));
    m.def("f_evolve", &f_evolve, py::arg("mu"));
    m.def("g_evolve", &g_evolve, py::arg("mu"));

    m.attr("__version__") = "0.1.0";
}

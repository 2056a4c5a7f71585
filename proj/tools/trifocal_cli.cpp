#include <cstdint>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include <trifocal/ideal/ideal_lab.hpp>
#include <trifocal/io/json_io.hpp>
#include <trifocal/orbits/orbits.hpp>
#include <trifocal/poly/generators.hpp>
#include <trifocal/poly/text_format.hpp>

#ifndef TRIFOCAL_DATA_DIR
#define TRIFOCAL_DATA_DIR "data"
#endif

using namespace trifocal;
using nlohmann::json;

namespace {

// Exit codes: 0 positive verdict or success, 1 negative verdict, 2 input or configuration error.
constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitInput = 2;

struct RunConfig {
    std::uint64_t prime = kDefaultPrime;
    std::uint64_t seed = 1;
    int degree_cap = kDefaultDegreeCap;
    int oversample = 2;
    bool json_out = false;
    bool quiet = false;

    void validate() const {
        if (prime < 2 || prime > kMaxPrime || !is_prime(prime))
            throw InputError("--prime must be a prime below 2^31, got " + std::to_string(prime));
        if (degree_cap < 1 || degree_cap > kStretchDegreeCap)
            throw InputError("--degree-cap must lie in 1.." + std::to_string(kStretchDegreeCap));
        if (oversample < 1) throw InputError("--oversample must be at least 1");
    }
    IdealOptions ideal_options() const {
        IdealOptions o;
        o.prime = prime;
        o.seed = seed;
        o.degree_cap = degree_cap;
        o.oversample = oversample;
        if (!quiet) o.progress = [](const std::string& s) { std::cerr << "[trifocal] " << s << '\n'; };
        return o;
    }
    json to_json() const {
        return {{"prime", prime}, {"seed", seed}, {"degree_cap", degree_cap}, {"oversample", oversample}};
    }
};

json report_header(const std::string& command, const RunConfig& cfg) {
    return {{"schema_version", kSchemaVersion}, {"command", command}, {"config", cfg.to_json()}};
}

json rank_json(const RankTriple& r) { return json::array({r.a, r.b, r.c}); }

void emit(const RunConfig& cfg, const json& report, const std::string& text) {
    if (cfg.json_out)
        std::cout << report.dump(2) << '\n';
    else
        std::cout << text;
}

int cmd_check(const RunConfig& cfg, const std::string& path, bool tolerant, bool random_coordinates) {
    auto t = load_tensor(path);
    auto v = is_trifocal(t, tolerant, random_coordinates ? std::optional<std::uint64_t>(cfg.seed) : std::nullopt);
    json r = report_header("check", cfg);
    r["input"] = path;
    r["is_trifocal"] = v.trifocal;
    r["reason"] = v.reason;
    r["prank"] = rank_json(v.prank);
    if (v.trifocal || v.frank.a + v.frank.b + v.frank.c > 0) r["frank"] = rank_json(v.frank);
    emit(cfg, r, std::string(v.trifocal ? "YES" : "NO") + ": " + v.reason + "\n");
    return v.trifocal ? kExitYes : kExitNo;
}

int cmd_classify(const RunConfig& cfg, const std::string& path, bool tolerant, bool high_degree) {
    auto t = load_tensor(path);
    auto s = signature(t, high_degree);
    auto c = classify_component(t);
    auto v = is_trifocal(t, tolerant);
    json sig = {{"frank", rank_json(s.frank)},
                {"prank", rank_json(s.prank)},
                {"m3_vanishing", {{"A", s.m3_vanishing[0]}, {"B", s.m3_vanishing[1]}, {"C", s.m3_vanishing[2]}}}};
    std::string text = "F-Rank " + s.frank.to_string() + "\nP-Rank " + s.prank.to_string() + "\nM3 vanishing (A,B,C): " +
                       std::to_string(s.m3_vanishing[0]) + std::to_string(s.m3_vanishing[1]) + std::to_string(s.m3_vanishing[2]) + "\n";
    if (s.high_degree) {
        sig["m5_vanishing"] = s.m5_vanishing;
        json m6 = json::object();
        text += "M5 vanishing: " + std::string(s.m5_vanishing ? "yes" : "no") + "\nM6 modules not vanishing:";
        for (const auto& [l, b] : s.m6_vanishing) {
            m6[l.to_string()] = b;
            if (!b) text += " " + l.to_string();
        }
        sig["m6_vanishing"] = m6;
        text += "\n";
    }
    json r = report_header("classify", cfg);
    r["input"] = path;
    r["signature"] = sig;
    r["component"] = component_name(c);
    r["is_trifocal"] = v.trifocal;
    r["reason"] = v.reason;
    text += "component: " + component_name(c) + "\ntrifocal: " + (v.trifocal ? "yes" : "no") + " (" + v.reason + ")\n";
    emit(cfg, r, text);
    return kExitYes;
}

int cmd_from_cameras(const RunConfig& cfg, const std::string& path, const std::string& out) {
    auto ct = load_cameras(path);
    auto t = trifocal_from_cameras(ct);
    json doc = to_json(t);
    if (!out.empty()) {
        std::ofstream f(out);
        if (!f) throw InputError("cannot write " + out);
        f << doc.dump(2) << '\n';
    }
    if (out.empty() || cfg.json_out) std::cout << doc.dump(2) << '\n';
    return kExitYes;
}

int cmd_discover(const RunConfig& cfg, int degree) {
    auto opt = cfg.ideal_options();
    check_degree_cap(GradedGeneratorSet{}, degree, opt);
    auto inv = discover(degree, opt);
    json r = report_header("discover", cfg);
    json degrees = json::array();
    std::string text = "degree  new  modules\n";
    for (const auto& dd : inv.degrees) {
        json mods = json::array();
        std::string names;
        for (const auto& m : dd.modules) {
            mods.push_back({{"label", m.label.to_string()}, {"dimension", m.dimension}});
            names += " " + m.label.to_string() + ":" + std::to_string(m.dimension);
        }
        json labels = json::array();
        for (const auto& v : dd.vanishing)
            labels.push_back({{"label", v.label.to_string()}, {"kronecker", v.kronecker}, {"ideal_multiplicity", v.ideal_multiplicity}});
        degrees.push_back({{"degree", dd.degree},
                           {"new_generators", dd.generators.size()},
                           {"labels_scanned", dd.labels_scanned},
                           {"modules", mods},
                           {"vanishing", labels}});
        text += std::to_string(dd.degree) + "       " + std::to_string(dd.generators.size()) + "  " + names + "\n";
    }
    json counts = json::object();
    for (const auto& [d, n] : inv.counts()) counts[std::to_string(d)] = n;
    r["degrees"] = degrees;
    r["generator_counts"] = counts;
    emit(cfg, r, text);
    return kExitYes;
}

int cmd_hilbert(const RunConfig& cfg, int max_degree) {
    auto opt = cfg.ideal_options();
    check_degree_cap(GradedGeneratorSet{}, max_degree, opt);
    auto inv = discover(std::min(max_degree, 6), opt);
    json r = report_header("hilbert", cfg);
    json table = json::array();
    std::string text = "degree  dim S^d  dim I_d  quotient\n";
    for (int d = 1; d <= max_degree; ++d) {
        const auto idim = ideal_dim_in_degree(inv.generators, d, opt);
        const auto amb = ambient_dim(d);
        table.push_back({{"degree", d}, {"ambient", amb}, {"ideal", idim}, {"quotient", amb - idim}});
        text += std::to_string(d) + "  " + std::to_string(amb) + "  " + std::to_string(idim) + "  " + std::to_string(amb - idim) + "\n";
    }
    r["table"] = table;
    emit(cfg, r, text);
    return kExitYes;
}

int cmd_nzd(const RunConfig& cfg, const std::string& witness, const std::string& witness_file, int cap) {
    auto opt = cfg.ideal_options();
    GradedGeneratorSet g;
    Poly27<Rational> f;
    if (witness == "toy") {
        g.add(2, {Poly27<Rational>::var(0, 0, 0) * Poly27<Rational>::var(0, 0, 1)});
        f = Poly27<Rational>::var(0, 0, 0);
    } else {
        if (witness == "f") {
            f = determinant_witness();
        } else if (witness == "g") {
            f = load_poly(witness_file.empty() ? std::string(TRIFOCAL_DATA_DIR) + "/witness_g.txt" : witness_file);
        } else {
            throw InputError("--witness must be f, g or toy");
        }
        check_degree_cap(g, cap, opt);
        g = discover(std::min(cap, 6), opt).generators;
    }
    auto rep = graded_nonzerodivisor_check(g, f, cap, opt);
    json r = report_header("nzd", cfg);
    r["witness"] = witness;
    r["cap"] = cap;
    r["nonzerodivisor"] = rep.nonzerodivisor;
    if (rep.failing_degree) r["failing_degree"] = *rep.failing_degree;
    json table = json::array();
    std::string text = "degree  H_J  H_J+f  H_J(d)-H_J(d-e)\n";
    for (const auto& row : rep.table) {
        table.push_back({{"degree", row.degree}, {"h_j", row.h_j}, {"h_jf", row.h_jf}, {"predicted", row.predicted},
                         {"ok", row.h_jf == row.predicted}});
        text += std::to_string(row.degree) + "  " + std::to_string(row.h_j) + "  " + std::to_string(row.h_jf) + "  " +
                std::to_string(row.predicted) + (row.h_jf == row.predicted ? "" : "  <- fails") + "\n";
    }
    r["table"] = table;
    text += rep.nonzerodivisor ? "non-zero-divisor through degree " + std::to_string(cap) + "\n"
                               : "zero-divisor detected in degree " + std::to_string(*rep.failing_degree) + "\n";
    emit(cfg, r, text);
    return rep.nonzerodivisor ? kExitYes : kExitNo;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact tools for the trifocal variety"};
    app.require_subcommand(1);
    RunConfig cfg;
    auto add_common = [&](CLI::App* s) {
        s->add_option("--prime", cfg.prime, "prime for modular ranks")->capture_default_str();
        s->add_option("--seed", cfg.seed, "seed for every random choice")->capture_default_str();
        s->add_option("--degree-cap", cfg.degree_cap, "largest degree allowed (at most 7)")->capture_default_str();
        s->add_option("--oversample", cfg.oversample, "points per basis vector in vanishing tests")->capture_default_str();
        s->add_flag("--json", cfg.json_out, "emit a JSON report");
        s->add_flag("--quiet", cfg.quiet, "suppress progress on stderr");
    };

    std::string path, out, witness = "f", witness_file;
    bool tolerant = false, random_coordinates = false, low_only = false;
    int degree = 6, cap = 6;

    auto* check = app.add_subcommand("check", "decide whether a tensor is trifocal");
    check->add_option("tensor", path, "tensor JSON file")->required();
    check->add_flag("--permutation-tolerant", tolerant, "accept any ordering of P-Rank (3,3,2)");
    check->add_flag("--random-coordinates", random_coordinates, "apply a seeded random change of coordinates first");
    add_common(check);

    auto* classify = app.add_subcommand("classify", "signature and component of a tensor");
    classify->add_option("tensor", path, "tensor JSON file")->required();
    classify->add_flag("--permutation-tolerant", tolerant, "accept any ordering of P-Rank (3,3,2)");
    classify->add_flag("--low-degree-only", low_only, "skip the degree 5 and 6 module tests");
    add_common(classify);

    auto* from = app.add_subcommand("from-cameras", "trifocal tensor of three cameras");
    from->add_option("cameras", path, "camera triple JSON file")->required();
    from->add_option("-o,--output", out, "write the tensor JSON here");
    add_common(from);

    auto* disc = app.add_subcommand("discover", "minimal generators of the trifocal ideal up to a degree");
    disc->add_option("degree", degree, "largest degree to scan")->capture_default_str();
    add_common(disc);

    auto* hilb = app.add_subcommand("hilbert", "Hilbert function of the quotient");
    hilb->add_option("degree", degree, "largest degree")->capture_default_str();
    add_common(hilb);

    auto* nzd = app.add_subcommand("nzd", "graded non-zero-divisor test");
    nzd->add_option("--witness", witness, "f, g or toy")->capture_default_str();
    nzd->add_option("--witness-file", witness_file, "polynomial file for g");
    nzd->add_option("--cap", cap, "largest degree checked")->capture_default_str();
    add_common(nzd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        cfg.validate();
        if (*check) return cmd_check(cfg, path, tolerant, random_coordinates);
        if (*classify) return cmd_classify(cfg, path, tolerant, !low_only);
        if (*from) return cmd_from_cameras(cfg, path, out);
        if (*disc) return cmd_discover(cfg, degree);
        if (*hilb) return cmd_hilbert(cfg, degree);
        if (*nzd) return cmd_nzd(cfg, witness, witness_file, cap);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const DegenerateConfiguration& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const DegreeCapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
    return kExitInput;
}

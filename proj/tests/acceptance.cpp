// One PASS/FAIL line per criterion. Exit status is nonzero when a criterion fails
// unexpectedly or a known failure starts passing.
#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <trifocal/camera/camera.hpp>
#include <trifocal/ideal/generator_modules.hpp>
#include <trifocal/orbits/orbits.hpp>
#include <trifocal/poly/text_format.hpp>

using namespace trifocal;

namespace {

struct Outcome {
    int unexpected = 0;
    int total = 0;
};
Outcome outcome;

// known: the criterion is recorded as unattainable; passing is then reported as XPASS.
void report(const std::string& id, const std::string& what, bool pass, const std::string& detail = {}, bool known = false) {
    ++outcome.total;
    std::string tag;
    if (pass && !known) tag = "PASS";
    else if (pass) tag = "XPASS";
    else if (known) tag = "FAIL (expected)";
    else tag = "FAIL";
    if (tag == "FAIL" || tag == "XPASS") ++outcome.unexpected;
    std::cout << tag << " [" << id << "] " << what;
    if (!detail.empty()) std::cout << " -- " << detail;
    std::cout << std::endl;
}

std::string show(const std::map<int, std::size_t>& m) {
    std::ostringstream s;
    for (const auto& [d, n] : m) s << d << ":" << n << " ";
    return s.str();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const std::map<int, std::uint64_t> kHilbert = {{1, 27}, {2, 378}, {3, 3644}, {4, 27135}, {5, 166050}, {6, 865860}};
const std::map<int, std::size_t> kCounts = {{3, 10}, {5, 81}, {6, 1980}};

std::multiset<std::string> module_list(const Inventory& inv, int d) {
    std::multiset<std::string> out;
    for (const auto& dd : inv.degrees)
        if (dd.degree == d)
            for (const auto& m : dd.modules) out.insert(m.label.to_string() + "/" + std::to_string(m.dimension));
    return out;
}

std::multiset<std::string> expected_modules(int d) {
    std::multiset<std::string> out;
    for (const auto& l : generator_module_labels().at(d)) out.insert(l.to_string() + "/" + std::to_string(weyl_dim(l)));
    return out;
}

// ---- 1, 2 ----
void generators_and_hilbert(std::map<std::uint64_t, Inventory>& inventories) {
    for (std::uint64_t p : {kDefaultPrime, kSecondPrime}) {
        IdealOptions opt;
        opt.prime = p;
        auto t0 = std::chrono::steady_clock::now();
        inventories[p] = discover(6, opt);
        const auto& inv = inventories[p];
        const double secs = seconds_since(t0);
        const std::string at = " over F_" + std::to_string(p);
        report("1", "minimal generator counts 10/0/81/1980 in degrees 3/4/5/6" + at, inv.counts() == kCounts,
               show(inv.counts()) + "in " + std::to_string(static_cast<int>(secs)) + " s");
        bool labels = module_list(inv, 3) == expected_modules(3) && module_list(inv, 5) == expected_modules(5) &&
                      module_list(inv, 6) == expected_modules(6) && module_list(inv, 4).empty();
        report("1", "generator module labels and dimensions" + at, labels);
        std::ostringstream hs;
        bool ok = true;
        for (const auto& [d, want] : kHilbert) {
            auto got = hilbert_quotient(inv.generators, d, opt);
            hs << got << " ";
            ok = ok && got == want;
        }
        report("2", "Hilbert function 27, 378, 3644, 27135, 166050, 865860" + at, ok, hs.str());
    }
}

// ---- 3 ----
void membership() {
    std::mt19937_64 rng(20240601);
    int accepted = 0;
    for (int i = 0; i < 100; ++i)
        if (is_trifocal(trifocal_from_cameras(random_camera_triple<Rational>(rng))).trifocal) ++accepted;
    report("3", "random camera triples accepted", accepted == 100, std::to_string(accepted) + "/100");

    int rejected = 0;
    for (int i = 0; i < 100; ++i) {
        auto v = is_trifocal(random_tensor(rng, 9, Rational(0)));
        if (!v.trifocal && v.reason == "P-Rank (3,3,3)") ++rejected;
    }
    report("3", "random tensors rejected with reason P-Rank (3,3,3)", rejected == 100, std::to_string(rejected) + "/100");

    auto f = is_trifocal(f_tensor());
    report("3", "F rejected with reason P-Rank (2,2,2), too low", !f.trifocal && f.reason == "P-Rank (2,2,2), too low", f.reason);

    int sub_ok = 0, sub_total = 0;
    std::string last;
    for (std::uint64_t s = 1; s <= 10; ++s)
        for (auto [p, q, r] : {std::array<int, 3>{2, 3, 3}, {3, 2, 3}, {3, 3, 2}}) {
            auto t = sub_generic(p, q, r, s);
            auto v = is_trifocal(t);
            ++sub_total;
            // the reason must name the rank triple that certifies the rejection
            auto pr = prank(t);
            bool good = !v.trifocal && v.reason.rfind("P-Rank " + pr.to_string(), 0) == 0;
            if (!good && !v.trifocal) good = v.reason == "F-Rank " + frank(t).to_string() + ", too low";
            if (good) ++sub_ok;
            else last = v.reason;
        }
    report("3", "Sub-generic points rejected with rank reasons", sub_ok == sub_total,
           std::to_string(sub_ok) + "/" + std::to_string(sub_total) + (last.empty() ? "" : ", last bad: " + last));
}

// ---- 4 ----
void vanishing() {
    const auto& mods = generator_modules();
    TrifocalPointSource src(99991);
    std::vector<Tensor333<Rational>> pts = src.batch(100);
    std::mt19937_64 rng(4242);
    for (int i = 0; i < 100; ++i) pts.push_back(trifocal_from_cameras(random_camera_triple<Rational>(rng)));
    std::size_t polys = 0, bad = 0;
    for (const auto& m : mods) {
        std::vector<CompiledPoly> comp;
        for (const auto& f : m.basis) comp.emplace_back(f);
        polys += comp.size();
        for (const auto& t : pts) {
            auto ip = IntegerPoint::from(t, m.label.degree());
            for (const auto& c : comp)
                if (!(ip ? ip->evaluate(c) : evaluate(c.source(), t)).is_zero()) ++bad;
        }
    }
    report("4", "M3, M5, M6 vanish exactly on 200 fresh trifocal points", bad == 0 && polys == 2071,
           std::to_string(polys) + " polynomials, " + std::to_string(bad) + " nonzero values");

    bool m5_on_f = false;
    for (const auto& m : mods)
        if (m.label.degree() == 5 && !module_vanishes(m, f_tensor())) m5_on_f = true;
    report("4", "M5 has a member nonzero on F", m5_on_f);

    auto nonzero = [&](const Tensor333<Rational>& t, const char* a, const char* b, const char* c) {
        auto l = IsotypicLabel::parse(a, b, c);
        for (const auto& m : mods)
            if (m.label == l) return !module_vanishes(m, t);
        return false;
    };
    report("4", "S33 S222 S411 nonzero on orbit 17", nonzero(orbit17(), "33", "222", "411"));
    report("4", "S222 S33 S411 nonzero on orbit 17'", nonzero(primed(orbit17(), 1), "222", "33", "411"));
    // Under the a->b->c->a priming these two modules are nonzero on 18 and 18' instead.
    report("4", "S33 S33 S222 nonzero on orbit 18'", nonzero(primed(orbit18(), 1), "33", "33", "222"),
           "nonzero on 18: " + std::string(nonzero(orbit18(), "33", "33", "222") ? "yes" : "no"), true);
    report("4", "S222 S33 S33 nonzero on orbit 18''", nonzero(primed(orbit18(), 2), "222", "33", "33"),
           "nonzero on 18': " + std::string(nonzero(primed(orbit18(), 1), "222", "33", "33") ? "yes" : "no"), true);

    // 17, 17', 18', 18'' are the minimal orbits of V(M3) outside X; each must be cut out by M5 + M6.
    auto cut_by = [&](const Tensor333<Rational>& t) {
        std::string out;
        for (const auto& m : mods)
            if (m.label.degree() >= 5 && !module_vanishes(m, t)) out += m.label.to_string() + " ";
        return out;
    };
    std::string missing, detail;
    for (const auto& [name, t] : std::vector<std::pair<std::string, Tensor333<Rational>>>{
             {"17", orbit17()}, {"17'", primed(orbit17(), 1)}, {"18'", primed(orbit18(), 1)}, {"18''", primed(orbit18(), 2)}}) {
        auto c = cut_by(t);
        if (c.empty() || !all_vanish(m3_generators(Axis::C), t)) missing += name + " ";
        detail += name + ": " + (c.empty() ? "none " : c);
    }
    detail += "| 17'': " + std::string(cut_by(primed(orbit17(), 2)).empty() ? "inside V(M3+M5+M6)" : "cut out");
    report("4", "17, 17', 18', 18'' lie in V(M3) and each has a nonvanishing M5 or M6 module", missing.empty(),
           missing.empty() ? detail : "not separated: " + missing);
}

// ---- 5 ----
void representation_checks() {
    int hw_bad = 0, labels = 0;
    for (int d = 1; d <= 5; ++d)
        for (const auto& l : labels_of_degree(d)) {
            ++labels;
            if (static_cast<std::int64_t>(hw_space(l).basis.size()) != kronecker(l)) ++hw_bad;
        }
    for (const auto& l : generator_module_labels().at(6)) {
        ++labels;
        if (static_cast<std::int64_t>(hw_space(l).basis.size()) != kronecker(l)) ++hw_bad;
    }
    report("5", "dim hw_space = Kronecker coefficient (all labels d <= 5 and the degree-6 generator labels)", hw_bad == 0,
           std::to_string(labels - hw_bad) + "/" + std::to_string(labels));

    bool complete = true;
    for (int d = 1; d <= 5; ++d) {
        std::int64_t s = 0;
        for (const auto& l : labels_of_degree(d)) s += kronecker(l) * weyl_dim(l);
        complete = complete && static_cast<std::uint64_t>(s) == ambient_dim(d);
    }
    report("5", "sum of Kronecker times Weyl dimensions = dim S^d(C^27) for d <= 5", complete);

    std::set<std::size_t> seen;
    bool spans = module_span(Poly27<Rational>::var(0, 0, 0)).size() == 27;
    seen.insert(27);
    for (const auto& m : generator_modules()) {
        spans = spans && static_cast<std::int64_t>(m.basis.size()) == weyl_dim(m.label);
        seen.insert(m.basis.size());
    }
    spans = spans && seen.count(54) && seen.count(100) && seen.count(640);
    report("5", "module_span dimensions match Weyl products (27, 54, 100, 640)", spans);
}

// ---- 6 ----
void nonzerodivisors(const std::map<std::uint64_t, Inventory>& inventories) {
    const auto g = load_poly(std::string(TRIFOCAL_DATA_DIR) + "/witness_g.txt");
    for (const auto& [p, inv] : inventories) {
        IdealOptions opt;
        opt.prime = p;
        for (const auto& [name, w] : {std::pair<std::string, Poly27<Rational>>{"f", determinant_witness()}, {"g", g}}) {
            auto rep = graded_nonzerodivisor_check(inv.generators, w, 6, opt);
            std::ostringstream t;
            for (const auto& r : rep.table) t << r.h_jf << " ";
            report("6", "(1 - t^" + std::to_string(*w.degree()) + ") H_J = H_{J+" + name + "} through degree 6 over F_" + std::to_string(p),
                   rep.nonzerodivisor, t.str());
        }
    }
}

// ---- 7 ----
void degenerations() {
    auto r17 = degeneration_check(DegenerationTarget::Orbit17);
    report("7", "orbit 17 lies in the closure of the F orbit", r17.holds, r17.reason);
    // Recorded as unattainable: orbit 18 has no isotropic pair, a closed condition satisfied on all of the F orbit.
    auto r18 = degeneration_check(DegenerationTarget::Orbit18);
    report("7", "orbit 18 lies in the closure of the F orbit", r18.holds, r18.reason, true);
}

}  // namespace

int main() {
    try {
        std::map<std::uint64_t, Inventory> inventories;
        generators_and_hilbert(inventories);
        membership();
        vanishing();
        representation_checks();
        nonzerodivisors(inventories);
        degenerations();
    } catch (const std::exception& e) {
        std::cout << "FAIL [internal] " << e.what() << std::endl;
        return 1;
    }
    std::cout << outcome.total << " lines, " << outcome.unexpected << " unexpected" << std::endl;
    return outcome.unexpected == 0 ? 0 : 1;
}

#pragma once

#include <array>
#include <initializer_list>
#include <map>
#include <mutex>
#include <vector>

#include "ideal_lab.hpp"

namespace trifocal {

// Isotypic labels of the minimal generator modules of the trifocal ideal, by degree.
inline const std::map<int, std::vector<IsotypicLabel>>& generator_module_labels() {
    static const std::map<int, std::vector<IsotypicLabel>> labels = [] {
        std::map<int, std::vector<IsotypicLabel>> m;
        auto add = [&](int d, std::initializer_list<std::array<const char*, 3>> ls) {
            for (const auto& [a, b, c] : ls) m[d].push_back(IsotypicLabel::parse(a, b, c));
        };
        add(3, {{"111", "111", "3"}});
        add(5, {{"221", "221", "311"}, {"221", "221", "221"}});
        add(6, {{"222", "33", "33"}, {"33", "222", "33"}, {"222", "33", "411"}, {"33", "222", "411"}, {"33", "411", "222"},
                {"411", "33", "222"}, {"33", "33", "222"}, {"33", "321", "321"}, {"321", "33", "321"}});
        return m;
    }();
    return labels;
}

struct GeneratorModule {
    IsotypicLabel label;
    Poly27<Rational> highest_weight;
    std::vector<Poly27<Rational>> basis;
};

// The unique vanishing highest weight line of a generator label, with its module.
inline GeneratorModule generator_module(const IsotypicLabel& l, const IdealOptions& opt = {}) {
    auto rep = vanishing_subspace(hw_space(l, {opt.seed, true}), opt);
    if (rep.ideal_multiplicity != 1)
        throw InternalConsistencyError("generator module " + l.to_string() + ": vanishing multiplicity " +
                                       std::to_string(rep.ideal_multiplicity) + ", expected 1");
    auto basis = module_span(rep.certificate.front());
    return {l, rep.certificate.front(), std::move(basis)};
}

// All generator modules, built once per process with default options.
inline const std::vector<GeneratorModule>& generator_modules() {
    static std::once_flag once;
    static std::vector<GeneratorModule> mods;
    std::call_once(once, [] {
        for (const auto& [d, ls] : generator_module_labels())
            for (const auto& l : ls) mods.push_back(generator_module(l));
    });
    return mods;
}

inline GradedGeneratorSet generator_set(const std::vector<GeneratorModule>& mods, int max_degree = kMaxLabelDegree) {
    std::map<int, std::vector<Poly27<Rational>>> by;
    for (const auto& m : mods) {
        const int d = m.label.degree();
        if (d > max_degree) continue;
        by[d].insert(by[d].end(), m.basis.begin(), m.basis.end());
    }
    return GradedGeneratorSet(std::move(by));
}

// True iff every polynomial of the module vanishes at t.
inline bool module_vanishes(const GeneratorModule& m, const Tensor333<Rational>& t) {
    auto ip = IntegerPoint::from(t, m.label.degree());
    for (const auto& f : m.basis) {
        if (ip) {
            if (!ip->vanishes(CompiledPoly(f))) return false;
        } else if (!evaluate(f, t).is_zero()) {
            return false;
        }
    }
    return true;
}

}  // namespace trifocal

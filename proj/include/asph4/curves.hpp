#pragma once

#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "asph4/homology.hpp"

namespace asph4::curves {

using mcg::HomologyClass;

/// Combinatorial data of a system of curves on a genus-3 surface: names,
/// homology classes, and the geometric/algebraic intersection tables.
/// Curve indices in the public API are 1-based, matching the curve names.
class CurveSystem {
public:
    CurveSystem(std::vector<std::string> names, std::vector<HomologyClass> h1_classes,
                std::vector<std::vector<long long>> geom, std::vector<std::vector<long long>> alg)
        : names_(std::move(names)),
          h1_(std::move(h1_classes)),
          geom_(std::move(geom)),
          alg_(std::move(alg)) {
        const std::size_t m = names_.size();
        if (h1_.size() != m || geom_.size() != m || alg_.size() != m)
            throw std::invalid_argument("CurveSystem: size mismatch");
        for (std::size_t i = 0; i < m; ++i) {
            if (geom_[i].size() != m || alg_[i].size() != m)
                throw std::invalid_argument("CurveSystem: table shape");
            if (geom_[i][i] != 0 || alg_[i][i] != 0)
                throw std::invalid_argument("CurveSystem: diagonal must be zero");
            for (std::size_t j = 0; j < m; ++j) {
                if (geom_[i][j] < 0) throw std::invalid_argument("CurveSystem: negative geometric count");
                if (geom_[i][j] != geom_[j][i]) throw std::invalid_argument("CurveSystem: geom not symmetric");
                if (alg_[i][j] != -alg_[j][i]) throw std::invalid_argument("CurveSystem: alg not antisymmetric");
                if (std::abs(alg_[i][j]) > geom_[i][j])
                    throw std::invalid_argument("CurveSystem: |alg| exceeds geom");
                if (Int(alg_[i][j]) != mcg::symplectic_pairing(h1_[i], h1_[j]))
                    throw std::invalid_argument("CurveSystem: alg disagrees with symplectic pairing");
            }
        }
    }

    int count() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_.at(index(i)); }
    const HomologyClass& h1(int i) const { return h1_.at(index(i)); }
    long long geom(int i, int j) const { return geom_.at(index(i)).at(index(j)); }
    long long alg(int i, int j) const { return alg_.at(index(i)).at(index(j)); }

private:
    std::size_t index(int i) const {
        if (i < 1 || i > count()) throw std::invalid_argument("CurveSystem: curve index out of range");
        return static_cast<std::size_t>(i - 1);
    }

    std::vector<std::string> names_;
    std::vector<HomologyClass> h1_;
    std::vector<std::vector<long long>> geom_;
    std::vector<std::vector<long long>> alg_;
};

/// The seven lantern curves on the 3-punctured disk inside a genus-3 surface.
/// C1..C4 are disjoint from everything; C5, C6, C7 pairwise meet twice with
/// algebraic count zero. Classes live in the Lagrangian spanned by a1,a2,a3.
inline CurveSystem lantern_curve_system() {
    const int g = 3;
    const auto a1 = HomologyClass::a(1, g);
    const auto a2 = HomologyClass::a(2, g);
    const auto a3 = HomologyClass::a(3, g);
    std::vector<HomologyClass> h1 = {a1, a2, a3, a1 + a2 + a3, a1 + a2, a2 + a3, a1 + a3};
    std::vector<std::string> names = {"C1", "C2", "C3", "C4", "C5", "C6", "C7"};
    std::vector<std::vector<long long>> geom(7, std::vector<long long>(7, 0));
    auto set_geom = [&geom](int i, int j, long long v) {
        geom[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = v;
        geom[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)] = v;
    };
    set_geom(5, 6, 2);
    set_geom(6, 7, 2);
    set_geom(5, 7, 2);
    std::vector<std::vector<long long>> alg(7, std::vector<long long>(7, 0));
    return {names, h1, geom, alg};
}

/// True when every curve in the prefix is disjoint from the target, so a
/// composition of twists along the prefix fixes the target pointwise.
inline bool composite_fixes_support(const std::vector<int>& prefix, int target,
                                    const CurveSystem& cs) {
    for (int p : prefix)
        if (cs.geom(p, target) != 0) return false;
    (void)cs.geom(target, target);  // validates the target index
    return true;
}

/// Intersection tables as fixed-width text, geometric count with the
/// algebraic count in parentheses.
inline std::string curve_system_table(const CurveSystem& cs) {
    std::ostringstream os;
    os << "      ";
    for (int j = 1; j <= cs.count(); ++j) os << cs.name(j) << "    ";
    os << "\n";
    for (int i = 1; i <= cs.count(); ++i) {
        os << cs.name(i) << "  ";
        for (int j = 1; j <= cs.count(); ++j)
            os << "  " << cs.geom(i, j) << "(" << cs.alg(i, j) << ")";
        os << "\n";
    }
    return os.str();
}

}  // namespace asph4::curves

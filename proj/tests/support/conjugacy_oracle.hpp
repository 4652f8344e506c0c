#pragma once

#include <array>
#include <set>
#include <vector>

#include "asph4/sl2.hpp"

namespace testsupport {

using asph4::Int;
using asph4::sl2z::Sl2Matrix;

/// Brute-force SL(2,Z) conjugacy decision, independent of the classifier.
///
/// Searches for a conjugator that is a word of length <= 2*half_depth in
/// {R, L, R^-1, L^-1} by growing the conjugate sets of both matrices to
/// half_depth and intersecting. Trace equality is used as the (exact)
/// necessary condition to cut off hopeless pairs.
class ConjugacyOracle {
public:
    explicit ConjugacyOracle(int half_depth = 6) : half_depth_(half_depth) {}

    bool conjugate(const Sl2Matrix& x, const Sl2Matrix& y) const {
        if (x.trace() != y.trace()) return false;
        if (x == y) return true;
        const auto xs = conjugate_ball(x);
        const auto ys = conjugate_ball(y);
        std::vector<std::array<Int, 4>> common;
        std::set_intersection(xs.begin(), xs.end(), ys.begin(), ys.end(),
                              std::back_inserter(common));
        return !common.empty();
    }

private:
    std::set<std::array<Int, 4>> conjugate_ball(const Sl2Matrix& m) const {
        auto key = [](const Sl2Matrix& x) {
            return std::array<Int, 4>{x.a(), x.b(), x.c(), x.d()};
        };
        const Sl2Matrix r{1, 1, 0, 1}, l{1, 0, 1, 1};
        const std::array<Sl2Matrix, 4> gens{r, r.inverse(), l, l.inverse()};
        std::set<std::array<Int, 4>> seen{key(m)};
        std::vector<Sl2Matrix> frontier{m};
        for (int depth = 0; depth < half_depth_; ++depth) {
            std::vector<Sl2Matrix> next;
            for (const auto& cur : frontier) {
                for (const auto& g : gens) {
                    const Sl2Matrix nb = g * cur * g.inverse();
                    if (seen.insert(key(nb)).second) next.push_back(nb);
                }
            }
            frontier = std::move(next);
        }
        return seen;
    }

    int half_depth_;
};

}  // namespace testsupport

#pragma once

#include "asph4/curves.hpp"
#include "asph4/free_group.hpp"
#include "asph4/homology.hpp"

namespace asph4::mcg {

/// H1 shadow of the lantern relation on the genus-3 surface:
/// T4 T3 T2 T1 == T7 T6 T5 as exact 6x6 integer matrices.
inline bool verify_h1_lantern(const curves::CurveSystem& cs) {
    const int g = 3;
    auto t = [&cs, g](int i) { return transvection(cs.h1(i), g); };
    const IntMatrix lhs = t(4) * t(3) * t(2) * t(1);
    const IntMatrix rhs = t(7) * t(6) * t(5);
    return lhs == rhs;
}

/// T7^-1 T6^-1 T5^-1 T4 T3 T2 T1 == identity on H1; the lantern relation
/// rearranged into the form used for the once-punctured genus-3 bundle.
inline bool verify_seven_twist_identity(const curves::CurveSystem& cs) {
    const int g = 3;
    auto t = [&cs, g](int i) { return transvection(cs.h1(i), g); };
    auto ti = [&cs, g](int i) { return transvection_inverse(cs.h1(i), g); };
    const IntMatrix product = ti(7) * ti(6) * ti(5) * t(4) * t(3) * t(2) * t(1);
    return product.is_identity();
}

/// H1 action of a word in the twists phi_1..phi_7 (letters of a FreeWord over
/// seven generators; negative letters are inverse twists).
inline IntMatrix twist_word_h1(const FreeWord& word, const curves::CurveSystem& cs) {
    const int g = 3;
    IntMatrix m = IntMatrix::identity(2 * g);
    for (int letter : word.letters()) {
        const int idx = letter > 0 ? letter : -letter;
        m = m * (letter > 0 ? transvection(cs.h1(idx), g) : transvection_inverse(cs.h1(idx), g));
    }
    return m;
}

}  // namespace asph4::mcg

#pragma once

#include <random>
#include <string>
#include <vector>

#include "asph4/sl2.hpp"

namespace testsupport {

using asph4::sl2z::Sl2Matrix;

/// Deterministic RNG for reproducible property tests.
inline std::mt19937_64 make_rng(unsigned seed) { return std::mt19937_64{seed}; }

/// Random word in {R, L, R^-1, L^-1} of the given length, as a matrix.
inline Sl2Matrix random_gl_word(std::mt19937_64& rng, int length) {
    Sl2Matrix m = Sl2Matrix::identity();
    std::uniform_int_distribution<int> pick(0, 3);
    for (int i = 0; i < length; ++i) {
        switch (pick(rng)) {
            case 0: m = m * asph4::sl2z::gen_r(); break;
            case 1: m = m * asph4::sl2z::gen_l(); break;
            case 2: m = m * asph4::sl2z::gen_r().inverse(); break;
            default: m = m * asph4::sl2z::gen_l().inverse(); break;
        }
    }
    return m;
}

/// Random positive word in {R, L} containing both letters (hyperbolic).
inline std::string random_positive_word(std::mt19937_64& rng, int length) {
    if (length < 2) length = 2;
    std::string w;
    std::uniform_int_distribution<int> pick(0, 1);
    for (int i = 0; i < length; ++i) w += pick(rng) ? 'R' : 'L';
    if (w.find('R') == std::string::npos) w[0] = 'R';
    if (w.find('L') == std::string::npos) w[0] = 'L';
    return w;
}

inline Sl2Matrix word_to_matrix(const std::string& w) {
    Sl2Matrix m = Sl2Matrix::identity();
    for (char ch : w) m = m * (ch == 'R' ? asph4::sl2z::gen_r() : asph4::sl2z::gen_l());
    return m;
}

/// Random hyperbolic matrix: a positive word conjugated by a random word.
inline Sl2Matrix random_hyperbolic(std::mt19937_64& rng, int word_len = 6, int conj_len = 5) {
    std::uniform_int_distribution<int> wl(2, word_len);
    const Sl2Matrix w = word_to_matrix(random_positive_word(rng, wl(rng)));
    std::uniform_int_distribution<int> cl(0, conj_len);
    const Sl2Matrix p = random_gl_word(rng, cl(rng));
    return p * w * p.inverse();
}

}  // namespace testsupport

#include <catch2/catch_amalgamated.hpp>

#include "asph4/sl2.hpp"
#include "support/random_gen.hpp"

using namespace asph4::sl2z;
using asph4::Int;
using testsupport::make_rng;
using testsupport::random_gl_word;
using testsupport::random_positive_word;
using testsupport::word_to_matrix;

TEST_CASE("matrix construction rejects bad determinant") {
    CHECK_THROWS_AS(Sl2Matrix(1, 0, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(Sl2Matrix(0, 1, 1, 0), std::invalid_argument);
}

TEST_CASE("multiply golden values") {
    CHECK(Sl2Matrix(1, 1, 0, 1) * Sl2Matrix(1, 0, -1, 1) == Sl2Matrix(0, 1, -1, 1));
    CHECK(Sl2Matrix::identity() * twist_b() == twist_b());
    CHECK(phi() * phi() == -Sl2Matrix::identity());
}

TEST_CASE("invert golden values") {
    CHECK(phi().inverse() == Sl2Matrix(0, -1, 1, 0));
    CHECK(Sl2Matrix::identity().inverse() == Sl2Matrix::identity());
    CHECK(twist_a().inverse() == Sl2Matrix(1, -1, 0, 1));
}

TEST_CASE("generator matrices as printed") {
    CHECK(twist_a() == Sl2Matrix(1, 1, 0, 1));
    CHECK(twist_b() == Sl2Matrix(1, 0, -1, 1));
    CHECK(phi() == Sl2Matrix(0, 1, -1, 0));
}

TEST_CASE("three-twist factorization of the quarter turn") {
    CHECK(verify_phi_decomposition());
    CHECK(twist_a() * twist_b().inverse() * twist_a() != phi());
    const Sl2Matrix id = Sl2Matrix::identity();
    CHECK(id * id * id != phi());
    CHECK(phi() * phi() * phi() * phi() == id);
    CHECK(phi().trace() == 0);
}

TEST_CASE("invert is involution, multiply associative") {
    auto rng = make_rng(101);
    for (int i = 0; i < 200; ++i) {
        const Sl2Matrix a = random_gl_word(rng, 8);
        const Sl2Matrix b = random_gl_word(rng, 8);
        const Sl2Matrix c = random_gl_word(rng, 8);
        CHECK(a.inverse().inverse() == a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * a.inverse() == Sl2Matrix::identity());
    }
}

TEST_CASE("classify centrals and parabolics") {
    const auto id = classify(Sl2Matrix::identity());
    CHECK(id == MonodromyClass::central(+1));
    CHECK(classify(-Sl2Matrix::identity()) == MonodromyClass::central(-1));

    CHECK(classify(twist_a()) == MonodromyClass::parabolic(+1, 1));
    CHECK(classify(twist_b()) == MonodromyClass::parabolic(+1, 1));
    CHECK(classify(twist_a().inverse()) == MonodromyClass::parabolic(+1, -1));
    CHECK(classify(gen_l()) == MonodromyClass::parabolic(+1, -1));
    CHECK(classify(Sl2Matrix(1, 7, 0, 1)) == MonodromyClass::parabolic(+1, 7));
    CHECK(classify(-twist_a()) == MonodromyClass::parabolic(-1, 1));
}

TEST_CASE("classify hyperbolic golden value") {
    const auto c = classify(Sl2Matrix(2, 1, 1, 1));
    CHECK(c.kind() == MonodromyClass::Kind::Hyperbolic);
    CHECK(c.sign() == +1);
    CHECK(c.rl_word() == "RL");
    CHECK(classify(-Sl2Matrix(2, 1, 1, 1)).sign() == -1);
}

TEST_CASE("classify separates twist from its inverse") {
    CHECK(!are_conjugate(twist_a(), twist_a().inverse()));
    CHECK(are_conjugate(twist_a(), twist_b()));
    CHECK(are_conjugate(phi(), phi()));
    CHECK(!are_conjugate(phi(), phi().inverse()));
}

TEST_CASE("classify agrees with word construction for all short positive words") {
    // Every positive word with both letters is hyperbolic and classify must
    // recover it up to cyclic rotation. This exercises reduction and peeling.
    std::vector<std::string> words;
    for (int len = 2; len <= 10; ++len) {
        for (int mask = 0; mask < (1 << len); ++mask) {
            std::string w;
            for (int i = 0; i < len; ++i) w += (mask >> i) & 1 ? 'L' : 'R';
            if (w.find('R') == std::string::npos || w.find('L') == std::string::npos) continue;
            words.push_back(w);
        }
    }
    auto rng = make_rng(7);
    int checked = 0;
    for (const auto& w : words) {
        const Sl2Matrix m = word_to_matrix(w);
        const auto c = classify(m);
        REQUIRE(c.kind() == MonodromyClass::Kind::Hyperbolic);
        CHECK(c.sign() == +1);
        CHECK(c.rl_word() == detail::canonical_rotation(w));
        if (++checked % 17 == 0) {
            const Sl2Matrix p = random_gl_word(rng, 6);
            CHECK(classify(p * m * p.inverse()) == c);
        }
    }
    CHECK(checked > 1500);
}

TEST_CASE("classify is conjugation invariant") {
    auto rng = make_rng(202);
    std::vector<Sl2Matrix> bases = {
        twist_a(), twist_a().inverse(), phi(), phi().inverse(),
        Sl2Matrix(2, 1, 1, 1),  Sl2Matrix(0, -1, 1, -1), Sl2Matrix(0, -1, 1, 1),
        -Sl2Matrix(2, 1, 1, 1), Sl2Matrix(1, -4, 0, 1),  -Sl2Matrix::identity()};
    for (int i = 0; i < 1000; ++i) {
        const Sl2Matrix& base = bases[static_cast<std::size_t>(i) % bases.size()];
        const Sl2Matrix p = random_gl_word(rng, 8);
        CHECK(classify(p * base * p.inverse()) == classify(base));
    }
}

TEST_CASE("classify survives deep conjugations with large entries") {
    auto rng = make_rng(909);
    for (int i = 0; i < 50; ++i) {
        const Sl2Matrix base = word_to_matrix(random_positive_word(rng, 8));
        const auto expected = classify(base);
        const Sl2Matrix p = random_gl_word(rng, 16);
        const Sl2Matrix conj = p * base * p.inverse();
        CHECK(classify(conj) == expected);
        CHECK(classify(-conj) == classify(-base));
    }
}

TEST_CASE("conjugate matrices share trace") {
    auto rng = make_rng(303);
    for (int i = 0; i < 300; ++i) {
        const Sl2Matrix a = random_gl_word(rng, 10);
        const Sl2Matrix b = random_gl_word(rng, 10);
        if (are_conjugate(a, b)) CHECK(a.trace() == b.trace());
    }
}

TEST_CASE("class representative lies in its own class") {
    auto rng = make_rng(404);
    for (int i = 0; i < 200; ++i) {
        const Sl2Matrix a = random_gl_word(rng, 9);
        const auto c = classify(a);
        CHECK(classify(class_representative(c)) == c);
    }
}

TEST_CASE("inverse_class is an involution matching matrix inversion") {
    auto rng = make_rng(505);
    for (int i = 0; i < 200; ++i) {
        const Sl2Matrix a = random_gl_word(rng, 9);
        const auto c = classify(a);
        CHECK(inverse_class(c) == classify(a.inverse()));
        CHECK(inverse_class(inverse_class(c)) == c);
    }
}

TEST_CASE("elliptic canonical representatives are pairwise non-conjugate") {
    const auto& reps = detail::elliptic_reps();
    for (std::size_t i = 0; i < reps.size(); ++i) {
        for (std::size_t j = 0; j < reps.size(); ++j) {
            if (i == j) continue;
            CHECK(!are_conjugate(reps[i], reps[j]));
        }
        CHECK(classify(reps[i]).elliptic_index() == static_cast<int>(i));
    }
}

TEST_CASE("rl_word_length golden values") {
    CHECK(rl_word_length(Sl2Matrix::identity()) == 0);
    CHECK(rl_word_length(twist_a()) == 1);
    CHECK(rl_word_length(Sl2Matrix(2, 1, 1, 1)) == 2);
    CHECK(rl_word_length(Sl2Matrix(1, -3, 0, 1)) == 3);
}

TEST_CASE("twist factorization reassembles its input") {
    auto rng = make_rng(606);
    std::vector<Sl2Matrix> cases = {
        Sl2Matrix::identity(), -Sl2Matrix::identity(), twist_a(), twist_b(),
        phi(), phi().inverse(), Sl2Matrix(0, -1, 1, -1), Sl2Matrix(2, 1, 1, 1)};
    for (int i = 0; i < 300; ++i) cases.push_back(random_gl_word(rng, 10));
    for (const auto& m : cases) {
        Sl2Matrix prod = Sl2Matrix::identity();
        for (const auto& letter : twist_factorization(m)) prod = prod * letter.matrix();
        CHECK(prod == m);
    }
}

TEST_CASE("every twist letter is a single positive or negative twist") {
    auto rng = make_rng(707);
    for (int i = 0; i < 50; ++i) {
        const Sl2Matrix m = random_gl_word(rng, 8);
        for (const auto& letter : twist_factorization(m)) {
            const auto c = classify(letter.matrix());
            REQUIRE(c.kind() == MonodromyClass::Kind::Parabolic);
            CHECK(c.sign() == +1);
            CHECK((c.twist() == 1 || c.twist() == -1));
        }
    }
}

TEST_CASE("induced core monodromy") {
    const Sl2Matrix m = induced_core_monodromy();
    CHECK(m == Sl2Matrix(0, -1, 1, 0));
    CHECK((are_conjugate(m, phi()) || are_conjugate(m, phi().inverse())));
    CHECK(m * m * m * m == Sl2Matrix::identity());
}

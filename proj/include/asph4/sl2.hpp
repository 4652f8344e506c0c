#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "asph4/bigint.hpp"

namespace asph4::sl2z {

/// Exact 2x2 integer matrix of determinant one, row-major [[a,b],[c,d]].
class Sl2Matrix {
public:
    Sl2Matrix(Int a, Int b, Int c, Int d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
        if (a_ * d_ - b_ * c_ != 1)
            throw std::invalid_argument("Sl2Matrix: determinant must be 1");
    }

    static Sl2Matrix identity() { return {1, 0, 0, 1}; }

    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    const Int& c() const { return c_; }
    const Int& d() const { return d_; }

    Int trace() const { return a_ + d_; }

    /// Closed-form inverse [[d,-b],[-c,a]].
    Sl2Matrix inverse() const { return {d_, -b_, -c_, a_}; }

    Sl2Matrix operator-() const { return {-a_, -b_, -c_, -d_}; }

    Sl2Matrix operator*(const Sl2Matrix& o) const {
        return {a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_,
                c_ * o.a_ + d_ * o.c_, c_ * o.b_ + d_ * o.d_};
    }

    bool operator==(const Sl2Matrix& o) const {
        return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_;
    }
    bool operator!=(const Sl2Matrix& o) const { return !(*this == o); }

    bool is_identity() const { return a_ == 1 && b_ == 0 && c_ == 0 && d_ == 1; }
    bool is_minus_identity() const { return a_ == -1 && b_ == 0 && c_ == 0 && d_ == -1; }
    bool nonnegative() const { return a_ >= 0 && b_ >= 0 && c_ >= 0 && d_ >= 0; }

    Int max_abs_entry() const {
        Int m = abs(a_);
        if (abs(b_) > m) m = abs(b_);
        if (abs(c_) > m) m = abs(c_);
        if (abs(d_) > m) m = abs(d_);
        return m;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << "[[" << a_ << "," << b_ << "],[" << c_ << "," << d_ << "]]";
        return os.str();
    }

private:
    Int a_, b_, c_, d_;
};

inline Sl2Matrix multiply(const Sl2Matrix& x, const Sl2Matrix& y) { return x * y; }
inline Sl2Matrix invert(const Sl2Matrix& x) { return x.inverse(); }

/// Positive Dehn twist about the first basis curve: R = [[1,1],[0,1]].
inline Sl2Matrix twist_a() { return {1, 1, 0, 1}; }
/// Positive Dehn twist about the second basis curve: [[1,0],[-1,1]].
inline Sl2Matrix twist_b() { return {1, 0, -1, 1}; }
/// Quarter-turn monodromy of the core block: [[0,1],[-1,0]].
inline Sl2Matrix phi() { return {0, 1, -1, 0}; }

/// Generators of the positive cone; R = twist_a, L = twist_b's inverse.
inline Sl2Matrix gen_r() { return {1, 1, 0, 1}; }
inline Sl2Matrix gen_l() { return {1, 0, 1, 1}; }

/// Checks the three-twist factorization twist_a * twist_b * twist_a == phi.
inline bool verify_phi_decomposition() {
    return twist_a() * twist_b() * twist_a() == phi();
}

/// SL(2,Z) conjugacy normal form.
///
/// Central:    +-identity.
/// Elliptic:   |trace| < 2, finite order; identified by the index of one of
///             six canonical representatives.
/// Parabolic:  |trace| = 2, not central; class of sign * [[1,k],[0,1]], k != 0.
/// Hyperbolic: |trace| > 2; class of sign * (positive word in R, L), the word
///             canonical up to cyclic rotation (least rotation, ordering R < L).
class MonodromyClass {
public:
    enum class Kind { Central, Elliptic, Parabolic, Hyperbolic };

    static MonodromyClass central(int sign) { return {Kind::Central, sign, 0, 0, ""}; }
    static MonodromyClass elliptic(int rep_index) {
        return {Kind::Elliptic, +1, rep_index, 0, ""};
    }
    static MonodromyClass parabolic(int sign, Int twist) {
        return {Kind::Parabolic, sign, 0, std::move(twist), ""};
    }
    static MonodromyClass hyperbolic(int sign, std::string word) {
        return {Kind::Hyperbolic, sign, 0, 0, std::move(word)};
    }

    Kind kind() const { return kind_; }
    int sign() const { return sign_; }
    int elliptic_index() const { return elliptic_index_; }
    const Int& twist() const { return twist_; }
    const std::string& rl_word() const { return rl_word_; }

    bool operator==(const MonodromyClass& o) const {
        return kind_ == o.kind_ && sign_ == o.sign_ &&
               elliptic_index_ == o.elliptic_index_ && twist_ == o.twist_ &&
               rl_word_ == o.rl_word_;
    }
    bool operator!=(const MonodromyClass& o) const { return !(*this == o); }
    bool operator<(const MonodromyClass& o) const {
        auto key = [](const MonodromyClass& m) {
            return std::tuple<int, int, int, Int, std::string>(
                static_cast<int>(m.kind_), m.sign_, m.elliptic_index_, m.twist_, m.rl_word_);
        };
        return key(*this) < key(o);
    }

    std::string to_string() const;

private:
    MonodromyClass(Kind k, int s, int e, Int t, std::string w)
        : kind_(k), sign_(s), elliptic_index_(e), twist_(std::move(t)), rl_word_(std::move(w)) {}

    Kind kind_;
    int sign_;
    int elliptic_index_;
    Int twist_;
    std::string rl_word_;
};

namespace detail {

/// The six canonical elliptic representatives, one per conjugacy class:
/// indices 0..2 are [[0,-1],[1,0]], [[0,-1],[1,-1]], [[0,-1],[1,1]],
/// indices 3..5 their negatives.
inline const std::array<Sl2Matrix, 6>& elliptic_reps() {
    static const std::array<Sl2Matrix, 6> reps = {
        Sl2Matrix{0, -1, 1, 0},  Sl2Matrix{0, -1, 1, -1}, Sl2Matrix{0, -1, 1, 1},
        Sl2Matrix{0, 1, -1, 0},  Sl2Matrix{0, 1, -1, 1},  Sl2Matrix{0, 1, -1, -1}};
    return reps;
}

inline std::array<Int, 4> to_key(const Sl2Matrix& m) {
    return {m.a(), m.b(), m.c(), m.d()};
}

/// Conjugation moves by the four generators R, L, R^-1, L^-1.
inline std::vector<Sl2Matrix> conjugate_neighbors(const Sl2Matrix& m) {
    const Sl2Matrix r = gen_r(), l = gen_l();
    const Sl2Matrix ri = r.inverse(), li = l.inverse();
    return {r * m * ri, ri * m * r, l * m * li, li * m * l};
}

/// Breadth-first search through the conjugacy class of `m`, bounded by entry
/// size, looking for any of `targets`. Returns the index found or -1.
inline int bfs_find(const Sl2Matrix& m, const std::vector<Sl2Matrix>& targets, const Int& entry_cap) {
    std::map<std::array<Int, 4>, bool> seen;
    std::vector<Sl2Matrix> frontier{m};
    seen[to_key(m)] = true;
    auto match = [&](const Sl2Matrix& x) -> int {
        for (std::size_t i = 0; i < targets.size(); ++i)
            if (x == targets[i]) return static_cast<int>(i);
        return -1;
    };
    if (int i = match(m); i >= 0) return i;
    while (!frontier.empty()) {
        std::vector<Sl2Matrix> next;
        for (const auto& cur : frontier) {
            for (const auto& nb : conjugate_neighbors(cur)) {
                if (nb.max_abs_entry() > entry_cap) continue;
                auto key = to_key(nb);
                if (seen.count(key)) continue;
                seen[key] = true;
                if (int i = match(nb); i >= 0) return i;
                next.push_back(nb);
            }
        }
        frontier = std::move(next);
    }
    return -1;
}

/// Moves the elliptic fixed point into the closure of the standard
/// fundamental domain. Each inversion strictly decreases |c|, so the loop
/// terminates. The reduced matrix has entries of size at most 2.
inline Sl2Matrix elliptic_reduce(Sl2Matrix m) {
    const Sl2Matrix s{0, -1, 1, 0};
    for (;;) {
        // fixed point z = ((a-d) + i sqrt(4-t^2)) / (2c); c != 0 for elliptic
        const Int n = round_div(m.a() - m.d(), 2 * m.c());
        if (n != 0) {
            // translate z by -n: conjugate by R^-n
            const Sl2Matrix t{1, -n, 0, 1};
            m = t * m * t.inverse();
            continue;
        }
        // |z|^2 = -b/c; invert when |z| < 1
        const bool inside = (m.c() > 0) ? (-m.b() < m.c()) : (-m.b() > m.c());
        if (inside) {
            m = s * m * s.inverse();
            continue;
        }
        return m;
    }
}

inline int classify_elliptic(const Sl2Matrix& a) {
    const Sl2Matrix reduced = elliptic_reduce(a);
    const auto& reps = elliptic_reps();
    int idx = bfs_find(reduced, {reps.begin(), reps.end()}, Int(8));
    if (idx < 0)
        throw std::logic_error("classify: elliptic reduction failed for " + a.to_string());
    return idx;
}

/// Walks the attracting fixed point of a trace > 2 matrix down its continued
/// fraction until the matrix lies in the nonnegative cone. This is the
/// classical reduction of the associated indefinite quadratic form.
inline Sl2Matrix hyperbolic_reduce(Sl2Matrix m) {
    const Int disc = m.trace() * m.trace() - 4;  // positive, never a square
    const Sl2Matrix l = gen_l();
    for (int steps = 0; steps < 500000; ++steps) {
        if (m.nonnegative()) return m;
        // attracting fixed point x+ = ((a-d) + sqrt(disc)) / (2c), c != 0
        const Int n = floor_quadratic(m.a() - m.d(), disc, 2 * m.c());
        if (n != 0) {
            const Sl2Matrix t{1, -n, 0, 1};
            m = t * m * t.inverse();  // x+ moves to x+ - n, now in (0,1)
        } else {
            m = l.inverse() * m * l;  // x+ moves to x+/(1-x+), back in (0,oo)
        }
    }
    throw std::logic_error("classify: hyperbolic reduction did not terminate");
}

/// Factors a nonnegative matrix as a positive word in R and L by peeling.
/// For det-1 nonnegative m != I exactly one of the two peels applies.
inline std::string peel_word(Sl2Matrix m) {
    std::string word;
    while (!m.is_identity()) {
        if (m.a() >= m.c() && m.b() >= m.d() && !(m.c() == 0 && m.d() == 0)) {
            word += 'R';
            m = Sl2Matrix{m.a() - m.c(), m.b() - m.d(), m.c(), m.d()};
        } else if (m.c() >= m.a() && m.d() >= m.b()) {
            word += 'L';
            m = Sl2Matrix{m.a(), m.b(), m.c() - m.a(), m.d() - m.b()};
        } else {
            throw std::logic_error("peel_word: matrix not in cone");
        }
    }
    return word;
}

/// Least cyclic rotation under the ordering R < L.
inline std::string canonical_rotation(const std::string& w) {
    if (w.empty()) return w;
    auto less = [](char x, char y) {
        auto rank = [](char ch) { return ch == 'R' ? 0 : 1; };
        return rank(x) < rank(y);
    };
    std::string best = w;
    std::string cur = w;
    for (std::size_t i = 1; i < w.size(); ++i) {
        cur = cur.substr(1) + cur[0];
        if (std::lexicographical_compare(cur.begin(), cur.end(), best.begin(), best.end(), less))
            best = cur;
    }
    return best;
}

inline Sl2Matrix word_matrix(const std::string& w) {
    Sl2Matrix m = Sl2Matrix::identity();
    for (char ch : w) m = m * (ch == 'R' ? gen_r() : gen_l());
    return m;
}

/// Twist parameter of a unipotent matrix u = I + n, written n = k * m_v for
/// the primitive kernel direction v, with m_v = [[-v1 v2, v1^2],[-v2^2, v1 v2]].
/// Normalized so that [[1,k],[0,1]] yields k.
inline Int parabolic_twist(const Sl2Matrix& u) {
    const Int alpha = u.a() - 1, beta = u.b(), gamma = u.c();
    if (beta != 0) {
        Int g = gcd(abs(beta), abs(alpha));
        const Int v1 = beta / g;  // kernel vector (beta, -alpha) / g
        return beta / (v1 * v1);
    }
    // beta == 0 forces alpha == 0; kernel direction (0,1)
    return -gamma;
}

}  // namespace detail

/// Canonical conjugacy normal form; total on SL(2,Z).
inline MonodromyClass classify(const Sl2Matrix& a) {
    if (a.is_identity()) return MonodromyClass::central(+1);
    if (a.is_minus_identity()) return MonodromyClass::central(-1);
    const Int t = a.trace();
    if (t == 2) return MonodromyClass::parabolic(+1, detail::parabolic_twist(a));
    if (t == -2) return MonodromyClass::parabolic(-1, detail::parabolic_twist(-a));
    if (t > -2 && t < 2) return MonodromyClass::elliptic(detail::classify_elliptic(a));
    const int sign = t > 2 ? +1 : -1;
    const Sl2Matrix pos = sign > 0 ? a : -a;
    const std::string word = detail::peel_word(detail::hyperbolic_reduce(pos));
    return MonodromyClass::hyperbolic(sign, detail::canonical_rotation(word));
}

inline bool are_conjugate(const Sl2Matrix& a, const Sl2Matrix& b) {
    return classify(a) == classify(b);
}

/// A small matrix representing the class exactly.
inline Sl2Matrix class_representative(const MonodromyClass& c) {
    switch (c.kind()) {
        case MonodromyClass::Kind::Central:
            return c.sign() > 0 ? Sl2Matrix::identity() : -Sl2Matrix::identity();
        case MonodromyClass::Kind::Elliptic:
            return detail::elliptic_reps()[static_cast<std::size_t>(c.elliptic_index())];
        case MonodromyClass::Kind::Parabolic: {
            Sl2Matrix m{1, c.twist(), 0, 1};
            return c.sign() > 0 ? m : -m;
        }
        case MonodromyClass::Kind::Hyperbolic: {
            Sl2Matrix m = detail::word_matrix(c.rl_word());
            return c.sign() > 0 ? m : -m;
        }
    }
    throw std::logic_error("class_representative: bad kind");
}

/// Class of the inverses of the class members (well defined).
inline MonodromyClass inverse_class(const MonodromyClass& c) {
    return classify(class_representative(c).inverse());
}

inline std::string MonodromyClass::to_string() const {
    std::ostringstream os;
    switch (kind_) {
        case Kind::Central:
            os << "Central(" << (sign_ > 0 ? "+" : "-") << ")";
            break;
        case Kind::Elliptic:
            os << "Elliptic(" << detail::elliptic_reps()[static_cast<std::size_t>(elliptic_index_)].to_string() << ")";
            break;
        case Kind::Parabolic:
            os << "Parabolic(" << (sign_ > 0 ? "+" : "-") << ",k=" << twist_ << ")";
            break;
        case Kind::Hyperbolic:
            os << "Hyperbolic(" << (sign_ > 0 ? "+" : "-") << "," << rl_word_ << ")";
            break;
    }
    return os.str();
}

/// One letter of a twist word: R^(+-1) or L^(+-1). Each letter is the matrix
/// of a single positive or negative Dehn twist about a nonseparating curve.
struct TwistLetter {
    char base;  // 'R' or 'L'
    int exponent;  // +1 or -1

    Sl2Matrix matrix() const {
        Sl2Matrix g = base == 'R' ? gen_r() : gen_l();
        return exponent > 0 ? g : g.inverse();
    }
    bool operator==(const TwistLetter& o) const {
        return base == o.base && exponent == o.exponent;
    }
};

/// Factors any element as a product of single-twist letters (not minimal).
/// The product of the returned letters, left to right, equals the input.
inline std::vector<TwistLetter> twist_factorization(const Sl2Matrix& a) {
    std::vector<TwistLetter> letters;
    auto emit = [&letters](char base, const Int& exponent) {
        const int unit = exponent > 0 ? +1 : -1;
        for (Int i = 0; i < abs(exponent); ++i) letters.push_back({base, unit});
    };
    auto emit_minus_identity = [&letters]() {
        // -identity = (R L^-1 R)^2, six single twists
        for (int rep = 0; rep < 2; ++rep) {
            letters.push_back({'R', +1});
            letters.push_back({'L', -1});
            letters.push_back({'R', +1});
        }
    };
    // Cone matrices factor exactly as positive words by peeling.
    if (a.nonnegative()) {
        for (char ch : detail::peel_word(a)) letters.push_back({ch, +1});
        return letters;
    }
    if ((-a).nonnegative()) {
        emit_minus_identity();
        for (char ch : detail::peel_word(-a)) letters.push_back({ch, +1});
        return letters;
    }
    Sl2Matrix m = a;
    // Euclid on the first column via left multiplication by R^-q, L^-q.
    while (m.c() != 0) {
        if (m.a() == 0) {
            // m = [[0,-1],[1,d]] = (R^-1 L R^-1) R^d or [[0,1],[-1,d]] = (R L^-1 R) R^-d
            if (m.c() == 1) {
                letters.push_back({'R', -1});
                letters.push_back({'L', +1});
                letters.push_back({'R', -1});
                emit('R', m.d());
            } else {
                letters.push_back({'R', +1});
                letters.push_back({'L', -1});
                letters.push_back({'R', +1});
                emit('R', -m.d());
            }
            return letters;
        } else if (abs(m.a()) >= abs(m.c())) {
            const Int q = round_div(m.a(), m.c());
            emit('R', q);
            m = Sl2Matrix{m.a() - q * m.c(), m.b() - q * m.d(), m.c(), m.d()};
        } else {
            const Int q = round_div(m.c(), m.a());
            emit('L', q);
            m = Sl2Matrix{m.a(), m.b(), m.c() - q * m.a(), m.d() - q * m.b()};
        }
    }
    // Now m = [[s, b],[0, s]] with s = +-1.
    if (m.a() == 1) {
        emit('R', m.b());
    } else {
        emit_minus_identity();
        emit('R', -m.b());
    }
    return letters;
}

/// Number of single-twist letters needed for a representative of the class.
inline std::size_t twist_length(const MonodromyClass& c) {
    if (c.kind() == MonodromyClass::Kind::Central && c.sign() > 0) return 0;
    return twist_factorization(class_representative(c)).size();
}

/// Length of the R/L data produced by classify: 0 for central, |k| for
/// parabolic, the word length for hyperbolic. Elliptic classes carry no
/// positive word; the canonical representative's twist factorization length
/// is reported instead. An upper bound on twist word length, not minimal.
inline Int rl_word_length(const Sl2Matrix& a) {
    const MonodromyClass c = classify(a);
    switch (c.kind()) {
        case MonodromyClass::Kind::Central:
            return 0;
        case MonodromyClass::Kind::Parabolic:
            return abs(c.twist());
        case MonodromyClass::Kind::Hyperbolic:
            return Int(c.rl_word().size());
        case MonodromyClass::Kind::Elliptic:
            return Int(twist_factorization(class_representative(c)).size());
    }
    throw std::logic_error("rl_word_length: bad kind");
}

/// H1 action of the identification (x,y) |-> (y, xbar) on the boundary torus
/// basis: e1 |-> e2, e2 |-> -e1 in the column convention. Conjugate to the
/// quarter turn or its inverse; anything else signals a modeling bug.
inline Sl2Matrix induced_core_monodromy() {
    const Sl2Matrix m{0, -1, 1, 0};
    if (!are_conjugate(m, phi()) && !are_conjugate(m, phi().inverse()))
        throw std::logic_error("induced_core_monodromy: not conjugate to the quarter turn");
    return m;
}

}  // namespace asph4::sl2z

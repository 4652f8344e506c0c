#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace asph4::mcg {

/// Freely reduced word in a free group. Letters are nonzero integers: +i is
/// the i-th generator (1-based), -i its inverse.
class FreeWord {
public:
    FreeWord() = default;

    explicit FreeWord(const std::vector<int>& raw) {
        for (int letter : raw) push(letter);
    }

    static FreeWord generator(int index, int exponent = 1) {
        if (index < 1) throw std::invalid_argument("FreeWord: generator index must be >= 1");
        if (exponent != 1 && exponent != -1)
            throw std::invalid_argument("FreeWord: exponent must be +-1");
        FreeWord w;
        w.letters_.push_back(exponent * index);
        return w;
    }

    const std::vector<int>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    std::size_t size() const { return letters_.size(); }

    FreeWord operator*(const FreeWord& o) const {
        FreeWord out = *this;
        for (int letter : o.letters_) out.push(letter);
        return out;
    }

    FreeWord inverse() const {
        FreeWord out;
        for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push(-*it);
        return out;
    }

    bool operator==(const FreeWord& o) const { return letters_ == o.letters_; }
    bool operator!=(const FreeWord& o) const { return !(*this == o); }

    int max_generator() const {
        int m = 0;
        for (int letter : letters_) m = std::max(m, letter > 0 ? letter : -letter);
        return m;
    }

    std::string to_string(const std::string& symbol = "x") const {
        if (letters_.empty()) return "1";
        std::ostringstream os;
        for (std::size_t i = 0; i < letters_.size(); ++i) {
            if (i) os << " ";
            const int letter = letters_[i];
            os << symbol << (letter > 0 ? letter : -letter);
            if (letter < 0) os << "^-1";
        }
        return os.str();
    }

private:
    void push(int letter) {
        if (letter == 0) throw std::invalid_argument("FreeWord: zero letter");
        if (!letters_.empty() && letters_.back() == -letter)
            letters_.pop_back();
        else
            letters_.push_back(letter);
    }

    std::vector<int> letters_;
};

/// Free reduction (identity on the always-reduced representation; kept as the
/// named operation and for raw letter sequences).
inline FreeWord reduce(const FreeWord& w) { return w; }
inline FreeWord reduce(const std::vector<int>& raw) { return FreeWord(raw); }

/// Automorphism of a rank-n free group, stored with its inverse so that
/// invertibility is a construction-time invariant.
class FreeAutomorphism {
public:
    FreeAutomorphism(int rank, std::vector<FreeWord> images, std::vector<FreeWord> inverse_images)
        : rank_(rank), images_(std::move(images)), inverse_images_(std::move(inverse_images)) {
        if (rank_ < 1) throw std::invalid_argument("FreeAutomorphism: rank must be >= 1");
        if (images_.size() != static_cast<std::size_t>(rank_) ||
            inverse_images_.size() != static_cast<std::size_t>(rank_))
            throw std::invalid_argument("FreeAutomorphism: image count mismatch");
        for (int i = 1; i <= rank_; ++i) {
            if (map(images_, FreeWord::generator(i)).max_generator() > rank_ ||
                map(inverse_images_, FreeWord::generator(i)).max_generator() > rank_)
                throw std::invalid_argument("FreeAutomorphism: image uses out-of-range generator");
            if (map(inverse_images_, images_[static_cast<std::size_t>(i - 1)]) != FreeWord::generator(i) ||
                map(images_, inverse_images_[static_cast<std::size_t>(i - 1)]) != FreeWord::generator(i))
                throw std::invalid_argument("FreeAutomorphism: stored inverse is not an inverse");
        }
    }

    static FreeAutomorphism identity(int rank) {
        std::vector<FreeWord> images;
        for (int i = 1; i <= rank; ++i) images.push_back(FreeWord::generator(i));
        return {rank, images, images};
    }

    int rank() const { return rank_; }
    const FreeWord& image(int generator_index) const {
        return images_.at(static_cast<std::size_t>(generator_index - 1));
    }

    FreeWord apply(const FreeWord& w) const {
        if (w.max_generator() > rank_)
            throw std::invalid_argument("apply: word uses out-of-range generator");
        return map(images_, w);
    }

    FreeAutomorphism inverse() const { return {rank_, inverse_images_, images_}; }

    /// Composition f.after(g): g first, then f.
    FreeAutomorphism after(const FreeAutomorphism& g) const {
        if (rank_ != g.rank_) throw std::invalid_argument("compose: rank mismatch");
        std::vector<FreeWord> images, inv_images;
        for (int i = 1; i <= rank_; ++i) {
            images.push_back(apply(g.image(i)));
            inv_images.push_back(g.inverse().apply(inverse_images_[static_cast<std::size_t>(i - 1)]));
        }
        return {rank_, images, inv_images};
    }

    bool operator==(const FreeAutomorphism& o) const {
        return rank_ == o.rank_ && images_ == o.images_;
    }
    bool operator!=(const FreeAutomorphism& o) const { return !(*this == o); }

private:
    static FreeWord map(const std::vector<FreeWord>& images, const FreeWord& w) {
        FreeWord out;
        for (int letter : w.letters()) {
            const auto& img = images[static_cast<std::size_t>((letter > 0 ? letter : -letter) - 1)];
            out = out * (letter > 0 ? img : img.inverse());
        }
        return out;
    }

    int rank_;
    std::vector<FreeWord> images_;
    std::vector<FreeWord> inverse_images_;
};

inline FreeWord apply(const FreeAutomorphism& f, const FreeWord& w) { return f.apply(w); }
inline FreeAutomorphism compose(const FreeAutomorphism& f, const FreeAutomorphism& g) {
    return f.after(g);
}

/// Artin generator sigma_i of the braid group acting on the free group:
/// x_i |-> x_i x_{i+1} x_i^-1, x_{i+1} |-> x_i, fixing the others. Fixes the
/// boundary word x_1 x_2 ... x_n exactly.
inline FreeAutomorphism artin_generator(int i, int n) {
    if (i < 1 || i >= n) throw std::invalid_argument("artin_generator: need 1 <= i < n");
    std::vector<FreeWord> images, inv_images;
    for (int j = 1; j <= n; ++j) {
        if (j == i) {
            images.push_back(FreeWord::generator(i) * FreeWord::generator(i + 1) *
                             FreeWord::generator(i, -1));
            inv_images.push_back(FreeWord::generator(i + 1));
        } else if (j == i + 1) {
            images.push_back(FreeWord::generator(i));
            inv_images.push_back(FreeWord::generator(i + 1, -1) * FreeWord::generator(i) *
                                 FreeWord::generator(i + 1));
        } else {
            images.push_back(FreeWord::generator(j));
            inv_images.push_back(FreeWord::generator(j));
        }
    }
    return {n, images, inv_images};
}

/// Positive half-twist words used by the lantern certificate: the twists
/// about curves enclosing punctures (1,2), (2,3), (1,3) of the disk.
inline FreeAutomorphism disk_twist_12() {
    const auto s1 = artin_generator(1, 3);
    return s1.after(s1);
}
inline FreeAutomorphism disk_twist_23() {
    const auto s2 = artin_generator(2, 3);
    return s2.after(s2);
}
inline FreeAutomorphism disk_twist_13() {
    const auto s1 = artin_generator(1, 3);
    const auto s2 = artin_generator(2, 3);
    return s1.after(s2).after(s2).after(s1.inverse());
}

/// Full twist about the boundary of the 3-punctured disk: (sigma_1 sigma_2)^3.
inline FreeAutomorphism disk_full_twist() {
    const auto s1 = artin_generator(1, 3);
    const auto s2 = artin_generator(2, 3);
    const auto s1s2 = s1.after(s2);
    return s1s2.after(s1s2).after(s1s2);
}

/// Lantern relation in the punctured-disk model, checked by free reduction in
/// Aut(F_3): the full twist equals the product of the three two-puncture
/// twists (boundary-parallel twists about single punctures act trivially).
inline bool verify_braid_lantern() {
    const auto lhs = disk_full_twist();
    const auto rhs = disk_twist_13().after(disk_twist_12()).after(disk_twist_23());
    return lhs == rhs;
}

}  // namespace asph4::mcg

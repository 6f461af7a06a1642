#ifndef CSYM_PERM_HPP
#define CSYM_PERM_HPP

#include "csym/rational.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace csym {

// Permutation of {0,...,n-1}, stored as the image list img[i] = sigma(i).
// The action on tuples is (sigma . v)[i] = v[sigma(i)], so that substituting
// sigma into a polynomial sends x_i -> x_{sigma(i)}.
//
// Products compose as functions: (f*g)(i) = f(g(i)). Acting on tuples,
// (f*g) . v = g . (f . v).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> image) : img_(std::move(image)) {
        std::vector<bool> seen(img_.size(), false);
        for (int v : img_) {
            if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
                throw error("invalid permutation image list");
            seen[v] = true;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 0);
        return Permutation(img);
    }

    // Transposition (a b), 0-based.
    static Permutation transposition(int n, int a, int b) {
        auto p = identity(n);
        std::swap(p.img_[a], p.img_[b]);
        return p;
    }

    // Cycle (c0 c1 ... ck): c0 -> c1 -> ... -> ck -> c0, 0-based.
    static Permutation cycle(int n, const std::vector<int>& c) {
        auto p = identity(n);
        for (size_t i = 0; i < c.size(); ++i)
            p.img_[c[i]] = c[(i + 1) % c.size()];
        return p;
    }

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i]; }
    const std::vector<int>& image() const { return img_; }

    bool is_identity() const {
        for (int i = 0; i < size(); ++i)
            if (img_[i] != i) return false;
        return true;
    }

    Permutation inverse() const {
        std::vector<int> inv(img_.size());
        for (int i = 0; i < size(); ++i) inv[img_[i]] = i;
        return Permutation(inv);
    }

    // Function composition: result(i) = (*this)(other(i)).
    Permutation compose(const Permutation& other) const {
        if (size() != other.size()) throw error("permutation size mismatch");
        std::vector<int> img(img_.size());
        for (int i = 0; i < size(); ++i) img[i] = img_[other(i)];
        return Permutation(img);
    }

    template <typename T>
    std::vector<T> act(const std::vector<T>& v) const {
        if (static_cast<int>(v.size()) != size())
            throw error("permutation/tuple size mismatch");
        std::vector<T> out(v.size());
        for (int i = 0; i < size(); ++i) out[i] = v[img_[i]];
        return out;
    }

    // Orbit partition; each orbit sorted, orbits ordered by least element.
    std::vector<std::vector<int>> orbits() const {
        std::vector<std::vector<int>> out;
        std::vector<bool> seen(img_.size(), false);
        for (int i = 0; i < size(); ++i) {
            if (seen[i]) continue;
            std::vector<int> orb;
            int j = i;
            while (!seen[j]) {
                seen[j] = true;
                orb.push_back(j);
                j = img_[j];
            }
            std::sort(orb.begin(), orb.end());
            out.push_back(std::move(orb));
        }
        return out;
    }

    std::vector<int> orbit_of(int i) const {
        std::vector<int> orb{i};
        for (int j = img_[i]; j != i; j = img_[j]) orb.push_back(j);
        std::sort(orb.begin(), orb.end());
        return orb;
    }

    // Cycle notation with 1-based entries, e.g. "(1 2 4)(3)"; "id" if trivial.
    std::string cycle_string() const {
        if (is_identity()) return "id";
        std::string out;
        std::vector<bool> seen(img_.size(), false);
        for (int i = 0; i < size(); ++i) {
            if (seen[i] || img_[i] == i) { seen[i] = true; continue; }
            out += "(";
            int j = i;
            bool first = true;
            while (!seen[j]) {
                seen[j] = true;
                if (!first) out += " ";
                out += std::to_string(j + 1);
                first = false;
                j = img_[j];
            }
            out += ")";
        }
        return out;
    }

    bool operator==(const Permutation& o) const { return img_ == o.img_; }
    bool operator!=(const Permutation& o) const { return img_ != o.img_; }
    bool operator<(const Permutation& o) const { return img_ < o.img_; }

private:
    std::vector<int> img_;
};

inline std::vector<Permutation> all_permutations(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::vector<Permutation> out;
    do {
        out.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

} // namespace csym

#endif

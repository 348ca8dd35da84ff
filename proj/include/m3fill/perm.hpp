#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "m3fill/errors.hpp"

namespace m3fill {

/// A permutation of the vertex labels {0,1,2,3} of a tetrahedron.
class Perm4 {
public:
    constexpr Perm4() : img_{0, 1, 2, 3} {}
    constexpr Perm4(int a, int b, int c, int d)
        : img_{static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
               static_cast<std::uint8_t>(c), static_cast<std::uint8_t>(d)} {}

    int operator[](int i) const { return img_[static_cast<std::size_t>(i)]; }

    Perm4 inverse() const {
        Perm4 out;
        for (int i = 0; i < 4; ++i)
            out.img_[static_cast<std::size_t>(img_[static_cast<std::size_t>(i)])] =
                static_cast<std::uint8_t>(i);
        return out;
    }

    /// (*this) after `other`: (a.of(b))[i] == a[b[i]].
    Perm4 of(const Perm4& other) const {
        Perm4 out;
        for (int i = 0; i < 4; ++i)
            out.img_[static_cast<std::size_t>(i)] =
                img_[static_cast<std::size_t>(other[i])];
        return out;
    }

    bool is_identity() const {
        return img_[0] == 0 && img_[1] == 1 && img_[2] == 2 && img_[3] == 3;
    }

    /// +1 for even, -1 for odd.
    int sign() const {
        int inv = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (img_[static_cast<std::size_t>(i)] > img_[static_cast<std::size_t>(j)])
                    ++inv;
        return (inv % 2 == 0) ? +1 : -1;
    }

    /// Index in S4 under lexicographic order of image tuples, 0..23.
    int index() const {
        int idx = 0;
        std::array<bool, 4> used{false, false, false, false};
        for (int i = 0; i < 4; ++i) {
            int smaller = 0;
            for (int v = 0; v < img_[static_cast<std::size_t>(i)]; ++v)
                if (!used[static_cast<std::size_t>(v)]) ++smaller;
            int fact = 1;
            for (int k = 2; k <= 3 - i; ++k) fact *= k;
            idx += smaller * fact;
            used[static_cast<std::size_t>(img_[static_cast<std::size_t>(i)])] = true;
        }
        return idx;
    }

    static Perm4 from_index(int idx) {
        std::array<int, 4> pool{0, 1, 2, 3};
        std::array<int, 4> img{};
        int fact = 6;
        for (int i = 0; i < 4; ++i) {
            int pick = idx / fact;
            idx %= fact;
            img[static_cast<std::size_t>(i)] = pool[static_cast<std::size_t>(pick)];
            for (int k = pick; k < 3 - i; ++k)
                pool[static_cast<std::size_t>(k)] = pool[static_cast<std::size_t>(k + 1)];
            if (i < 3) fact /= (3 - i);
        }
        return Perm4(img[0], img[1], img[2], img[3]);
    }

    friend bool operator==(const Perm4& a, const Perm4& b) { return a.img_ == b.img_; }
    friend bool operator!=(const Perm4& a, const Perm4& b) { return !(a == b); }

    std::string str() const {
        return std::to_string(img_[0]) + std::to_string(img_[1]) +
               std::to_string(img_[2]) + std::to_string(img_[3]);
    }

private:
    std::array<std::uint8_t, 4> img_;
};

/// Extends a face correspondence to a full permutation: the three vertices of
/// face `from` (all labels except `from`) map to the given images, and the
/// omitted vertex maps to the omitted target vertex.
inline Perm4 face_perm(int from_face, std::array<int, 3> images) {
    std::array<int, 4> img{-1, -1, -1, -1};
    int k = 0;
    bool seen[4] = {false, false, false, false};
    for (int v = 0; v < 4; ++v) {
        if (v == from_face) continue;
        int to = images[static_cast<std::size_t>(k++)];
        if (to < 0 || to > 3 || seen[to]) throw Error("face_perm: bad image triple");
        seen[to] = true;
        img[static_cast<std::size_t>(v)] = to;
    }
    for (int v = 0; v < 4; ++v)
        if (!seen[v]) img[static_cast<std::size_t>(from_face)] = v;
    return Perm4(img[0], img[1], img[2], img[3]);
}

}  // namespace m3fill

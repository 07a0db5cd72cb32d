#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace hyperradius {

using BigInt = boost::multiprecision::cpp_int;
// Exact rationals back the symbolic expansions; every regularity check that
// must certify an exact zero runs on these instead of doubles.
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.template convert_to<double>(); }

/// A signed basis unit ±e_i, 0 <= i <= 7. The octonion units are closed under
/// multiplication, so symbolic expansions can carry one of these around
/// instead of a full 8-component element.
struct SignedUnit {
    std::int8_t sign = 1;   // +1 or -1
    std::uint8_t index = 0; // e0..e7

    friend bool operator==(const SignedUnit&, const SignedUnit&) = default;
    SignedUnit operator-() const { return {static_cast<std::int8_t>(-sign), index}; }
};

// epsilon_ijk = +1 on these index triples; the rest of the unit table follows
// from antisymmetry, e_i e_i = -e0, and e0 acting as identity.
inline constexpr std::array<std::array<int, 3>, 7> kOctonionTriples = {{
    {1, 2, 3}, {1, 4, 5}, {1, 7, 6}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 6, 5},
}};

using UnitTable = std::array<std::array<SignedUnit, 8>, 8>;

namespace detail {
UnitTable build_octonion_unit_table();
}

/// The generated 8x8 table e_i * e_j -> ±e_k.
const UnitTable& octonion_unit_table();

SignedUnit operator*(SignedUnit a, SignedUnit b);

template <class T>
struct QuaternionT {
    std::array<T, 4> c{}; // components along 1, i, j, k

    QuaternionT() = default;
    QuaternionT(T x0, T x1, T x2, T x3) : c{std::move(x0), std::move(x1), std::move(x2), std::move(x3)} {}

    static QuaternionT zero() { return {}; }
    static QuaternionT one() { return {T(1), T(0), T(0), T(0)}; }
    static QuaternionT unit(int i) {
        QuaternionT q;
        q.c[static_cast<std::size_t>(i)] = T(1);
        return q;
    }

    const T& operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
    T& operator[](int i) { return c[static_cast<std::size_t>(i)]; }

    bool is_zero() const { return c[0] == T(0) && c[1] == T(0) && c[2] == T(0) && c[3] == T(0); }

    friend bool operator==(const QuaternionT&, const QuaternionT&) = default;

    friend QuaternionT operator+(const QuaternionT& a, const QuaternionT& b) {
        return {a.c[0] + b.c[0], a.c[1] + b.c[1], a.c[2] + b.c[2], a.c[3] + b.c[3]};
    }
    friend QuaternionT operator-(const QuaternionT& a, const QuaternionT& b) {
        return {a.c[0] - b.c[0], a.c[1] - b.c[1], a.c[2] - b.c[2], a.c[3] - b.c[3]};
    }
    QuaternionT operator-() const { return {-c[0], -c[1], -c[2], -c[3]}; }

    QuaternionT& operator+=(const QuaternionT& o) {
        for (int i = 0; i < 4; ++i) c[static_cast<std::size_t>(i)] += o.c[static_cast<std::size_t>(i)];
        return *this;
    }

    // Hamilton product: i^2 = j^2 = k^2 = -1, ijk = -1.
    friend QuaternionT operator*(const QuaternionT& a, const QuaternionT& b) {
        return {a.c[0] * b.c[0] - a.c[1] * b.c[1] - a.c[2] * b.c[2] - a.c[3] * b.c[3],
                a.c[0] * b.c[1] + a.c[1] * b.c[0] + a.c[2] * b.c[3] - a.c[3] * b.c[2],
                a.c[0] * b.c[2] - a.c[1] * b.c[3] + a.c[2] * b.c[0] + a.c[3] * b.c[1],
                a.c[0] * b.c[3] + a.c[1] * b.c[2] - a.c[2] * b.c[1] + a.c[3] * b.c[0]};
    }
    friend QuaternionT operator*(const T& s, const QuaternionT& q) {
        return {s * q.c[0], s * q.c[1], s * q.c[2], s * q.c[3]};
    }
    friend QuaternionT operator*(const QuaternionT& q, const T& s) { return s * q; }

    QuaternionT conj() const { return {c[0], -c[1], -c[2], -c[3]}; }
    T norm_sq() const { return c[0] * c[0] + c[1] * c[1] + c[2] * c[2] + c[3] * c[3]; }

    QuaternionT inverse() const {
        T n2 = norm_sq();
        if (n2 == T(0)) throw std::domain_error("quaternion inverse of zero");
        QuaternionT k = conj();
        return {k.c[0] / n2, k.c[1] / n2, k.c[2] / n2, k.c[3] / n2};
    }
};

template <class T>
struct OctonionT {
    std::array<T, 8> c{}; // components along e0..e7

    OctonionT() = default;
    explicit OctonionT(std::array<T, 8> comps) : c(std::move(comps)) {}

    static OctonionT zero() { return {}; }
    static OctonionT one() { return unit(0); }
    static OctonionT unit(int i) {
        OctonionT o;
        o.c[static_cast<std::size_t>(i)] = T(1);
        return o;
    }

    const T& operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
    T& operator[](int i) { return c[static_cast<std::size_t>(i)]; }

    bool is_zero() const {
        for (const T& v : c)
            if (v != T(0)) return false;
        return true;
    }

    friend bool operator==(const OctonionT&, const OctonionT&) = default;

    friend OctonionT operator+(const OctonionT& a, const OctonionT& b) {
        OctonionT r;
        for (int i = 0; i < 8; ++i) r[i] = a[i] + b[i];
        return r;
    }
    friend OctonionT operator-(const OctonionT& a, const OctonionT& b) {
        OctonionT r;
        for (int i = 0; i < 8; ++i) r[i] = a[i] - b[i];
        return r;
    }
    OctonionT operator-() const {
        OctonionT r;
        for (int i = 0; i < 8; ++i) r[i] = -c[static_cast<std::size_t>(i)];
        return r;
    }
    OctonionT& operator+=(const OctonionT& o) {
        for (int i = 0; i < 8; ++i) c[static_cast<std::size_t>(i)] += o[i];
        return *this;
    }

    // Table-driven product; not associative in general.
    friend OctonionT operator*(const OctonionT& a, const OctonionT& b) {
        const UnitTable& tab = octonion_unit_table();
        OctonionT r;
        for (int i = 0; i < 8; ++i) {
            if (a[i] == T(0)) continue;
            for (int j = 0; j < 8; ++j) {
                if (b[j] == T(0)) continue;
                const SignedUnit u = tab[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                T term = a[i] * b[j];
                if (u.sign < 0)
                    r[u.index] -= term;
                else
                    r[u.index] += term;
            }
        }
        return r;
    }
    friend OctonionT operator*(const T& s, const OctonionT& o) {
        OctonionT r;
        for (int i = 0; i < 8; ++i) r[i] = s * o[i];
        return r;
    }
    friend OctonionT operator*(const OctonionT& o, const T& s) { return s * o; }

    OctonionT conj() const {
        OctonionT r;
        r[0] = c[0];
        for (int i = 1; i < 8; ++i) r[i] = -c[static_cast<std::size_t>(i)];
        return r;
    }
    T norm_sq() const {
        T s(0);
        for (const T& v : c) s += v * v;
        return s;
    }
    OctonionT inverse() const {
        T n2 = norm_sq();
        if (n2 == T(0)) throw std::domain_error("octonion inverse of zero");
        OctonionT r = conj();
        for (int i = 0; i < 8; ++i) r[i] = r[i] / n2;
        return r;
    }
};

using Quaternion = QuaternionT<double>;
using Octonion = OctonionT<double>;
using QuaternionRat = QuaternionT<Rational>;
using OctonionRat = OctonionT<Rational>;

inline Quaternion to_double(const QuaternionRat& q) {
    return {to_double(q[0]), to_double(q[1]), to_double(q[2]), to_double(q[3])};
}
inline Octonion to_double(const OctonionRat& o) {
    Octonion r;
    for (int i = 0; i < 8; ++i) r[i] = to_double(o[i]);
    return r;
}

inline double euclid_norm(const Quaternion& q) { return std::sqrt(q.norm_sq()); }
inline double euclid_norm(const Octonion& o) { return std::sqrt(o.norm_sq()); }

/// max{|x0 + i x1|, |x0 + j x2|, |x0 + k x3|}; a norm on R^4 whose unit ball
/// contains the Euclidean one.
double prime_norm(const Quaternion& q);

/// Octonion analogue: max over i in 1..7 of sqrt(c0^2 + c_i^2).
double prime_norm(const Octonion& o);

/// Bicylinder gauge max{sqrt(v1^2+v2^2), sqrt(v1^2+v3^2)} on purely imaginary
/// quaternions. Throws std::domain_error when the real part is nonzero.
double prime_norm_mt(const Quaternion& v);

} // namespace hyperradius

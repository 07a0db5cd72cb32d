#include "hyperradius/algebra.hpp"

#include <algorithm>

namespace hyperradius {

namespace detail {

UnitTable build_octonion_unit_table() {
    UnitTable tab{};
    for (int i = 0; i < 8; ++i) {
        tab[0][static_cast<std::size_t>(i)] = {1, static_cast<std::uint8_t>(i)};
        tab[static_cast<std::size_t>(i)][0] = {1, static_cast<std::uint8_t>(i)};
    }
    for (int i = 1; i < 8; ++i) tab[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = {-1, 0};
    for (const auto& t : kOctonionTriples) {
        const int a = t[0], b = t[1], c = t[2];
        // even permutations carry +1, odd carry -1
        auto set = [&tab](int i, int j, int k, int sign) {
            tab[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = {static_cast<std::int8_t>(sign),
                                                                             static_cast<std::uint8_t>(k)};
        };
        set(a, b, c, 1);
        set(b, c, a, 1);
        set(c, a, b, 1);
        set(b, a, c, -1);
        set(c, b, a, -1);
        set(a, c, b, -1);
    }
    return tab;
}

} // namespace detail

const UnitTable& octonion_unit_table() {
    static const UnitTable tab = detail::build_octonion_unit_table();
    return tab;
}

SignedUnit operator*(SignedUnit a, SignedUnit b) {
    SignedUnit r = octonion_unit_table()[a.index][b.index];
    r.sign = static_cast<std::int8_t>(r.sign * a.sign * b.sign);
    return r;
}

double prime_norm(const Quaternion& q) {
    double m = 0.0;
    for (int s = 1; s <= 3; ++s) m = std::max(m, std::sqrt(q[0] * q[0] + q[s] * q[s]));
    return m;
}

double prime_norm(const Octonion& o) {
    double m = 0.0;
    for (int i = 1; i <= 7; ++i) m = std::max(m, std::sqrt(o[0] * o[0] + o[i] * o[i]));
    return m;
}

double prime_norm_mt(const Quaternion& v) {
    if (v[0] != 0.0) throw std::domain_error("prime_norm_mt requires a purely imaginary quaternion");
    return std::max(std::sqrt(v[1] * v[1] + v[2] * v[2]), std::sqrt(v[1] * v[1] + v[3] * v[3]));
}

} // namespace hyperradius

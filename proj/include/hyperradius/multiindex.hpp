#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "hyperradius/algebra.hpp"

namespace hyperradius {

/// Thrown when a symbolic-path degree cap is exceeded (CLI exit code 3).
struct cap_exceeded : std::length_error {
    using std::length_error::length_error;
};

/// Degree cap for symbolic expansions and word enumeration. Defaults to 12
/// (words: 14); HYPERRADIUS_MAX_DEGREE raises both. Raising it is unsafe for
/// the symbolic paths: term generation grows as 2^n.
int expansion_degree_cap();
int word_length_cap();

/// Exponent vector nu = (n_1, ..., n_d), d in {2, 3, 7}. Part p corresponds
/// to the p-th basis function of the active flavor.
class MultiIndex {
  public:
    explicit MultiIndex(int dim) : dim_(check_dim(dim)) {}
    MultiIndex(std::initializer_list<int> parts);

    int dim() const { return dim_; }
    int degree() const {
        int n = 0;
        for (int p = 0; p < dim_; ++p) n += parts_[static_cast<std::size_t>(p)];
        return n;
    }
    int operator[](int p) const { return parts_[static_cast<std::size_t>(p)]; }
    int& operator[](int p) { return parts_[static_cast<std::size_t>(p)]; }

    /// nu - e_p; requires nu[p] > 0.
    MultiIndex decremented(int p) const {
        MultiIndex r = *this;
        r[p] -= 1;
        return r;
    }

    friend bool operator==(const MultiIndex& a, const MultiIndex& b) {
        return a.dim_ == b.dim_ && a.parts_ == b.parts_;
    }
    // lexicographic on the parts vector; canonical ordering for tables
    friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
        if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
        return a.parts_ <=> b.parts_;
    }

  private:
    static int check_dim(int dim) {
        if (dim != 2 && dim != 3 && dim != 7) throw std::invalid_argument("MultiIndex dim must be 2, 3, or 7");
        return dim;
    }
    int dim_;
    std::array<int, 7> parts_{};
};

/// All nu with the given degree, each exactly once, in descending
/// lexicographic order: (n,0,...,0) first, (0,...,0,n) last.
std::vector<MultiIndex> enumerate_degree(int dim, int n);
void enumerate_degree_into(int dim, int n, std::vector<MultiIndex>& out);

/// Number of indices of the given degree, C(n+dim-1, dim-1), as a double.
double degree_slice_size(int dim, int n);

/// n! / prod(nu_p!) exactly.
BigInt multinomial_exact(const MultiIndex& nu);

/// log of the multinomial via lgamma.
double multinomial_log(const MultiIndex& nu);

/// lf[k] = log k! for k = 0..n_max.
std::vector<double> log_factorials(int n_max);

/// A word over letters {1..dim}; the letter-count histogram of every word in
/// A_nu equals nu.
using Word = std::vector<std::uint8_t>;

/// All distinct words with histogram nu; exactly multinomial_exact(nu) of
/// them. Throws cap_exceeded past the brute-force degree guard.
std::vector<Word> enumerate_words(const MultiIndex& nu);

} // namespace hyperradius

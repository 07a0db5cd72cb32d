#include "hyperradius/multiindex.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace hyperradius {

namespace {

int env_cap(int fallback) {
    static const int cached = [] {
        if (const char* v = std::getenv("HYPERRADIUS_MAX_DEGREE")) {
            const int n = std::atoi(v);
            if (n > 0) return n;
        }
        return 0;
    }();
    return std::max(fallback, cached);
}

} // namespace

int expansion_degree_cap() { return env_cap(12); }
int word_length_cap() { return env_cap(14); }

MultiIndex::MultiIndex(std::initializer_list<int> parts) : dim_(check_dim(static_cast<int>(parts.size()))) {
    int p = 0;
    for (int v : parts) {
        if (v < 0) throw std::invalid_argument("MultiIndex parts must be non-negative");
        parts_[static_cast<std::size_t>(p++)] = v;
    }
}

void enumerate_degree_into(int dim, int n, std::vector<MultiIndex>& out) {
    if (n < 0) throw std::invalid_argument("enumerate_degree: n must be >= 0");
    out.clear();
    MultiIndex nu(dim);
    // descending lexicographic: fill part p from `rest` down to 0
    auto rec = [&](auto&& self, int p, int rest) -> void {
        if (p == dim - 1) {
            nu[p] = rest;
            out.push_back(nu);
            return;
        }
        for (int v = rest; v >= 0; --v) {
            nu[p] = v;
            self(self, p + 1, rest - v);
        }
    };
    rec(rec, 0, n);
}

std::vector<MultiIndex> enumerate_degree(int dim, int n) {
    std::vector<MultiIndex> out;
    enumerate_degree_into(dim, n, out);
    return out;
}

double degree_slice_size(int dim, int n) {
    double r = 1.0;
    for (int i = 1; i < dim; ++i) r *= static_cast<double>(n + i) / i;
    return r;
}

BigInt multinomial_exact(const MultiIndex& nu) {
    // product form C(m1, nu1)*C(m1+m2, nu2)*... keeps intermediates integral
    BigInt r = 1;
    int total = 0;
    for (int p = 0; p < nu.dim(); ++p) {
        for (int i = 1; i <= nu[p]; ++i) {
            ++total;
            r = r * total / i;
        }
    }
    return r;
}

double multinomial_log(const MultiIndex& nu) {
    double r = std::lgamma(static_cast<double>(nu.degree()) + 1.0);
    for (int p = 0; p < nu.dim(); ++p) r -= std::lgamma(static_cast<double>(nu[p]) + 1.0);
    return r;
}

std::vector<double> log_factorials(int n_max) {
    std::vector<double> lf(static_cast<std::size_t>(n_max) + 1);
    for (int k = 0; k <= n_max; ++k) lf[static_cast<std::size_t>(k)] = std::lgamma(static_cast<double>(k) + 1.0);
    return lf;
}

std::vector<Word> enumerate_words(const MultiIndex& nu) {
    const int n = nu.degree();
    if (n > expansion_degree_cap())
        throw cap_exceeded("enumerate_words: degree " + std::to_string(n) + " exceeds the brute-force cap");
    Word letters;
    letters.reserve(static_cast<std::size_t>(n));
    for (int p = 0; p < nu.dim(); ++p)
        letters.insert(letters.end(), static_cast<std::size_t>(nu[p]), static_cast<std::uint8_t>(p + 1));
    std::vector<Word> words;
    do {
        words.push_back(letters);
    } while (std::next_permutation(letters.begin(), letters.end()));
    return words;
}

} // namespace hyperradius

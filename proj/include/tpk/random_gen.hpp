#ifndef TPK_RANDOM_GEN_HPP
#define TPK_RANDOM_GEN_HPP

#include <cstdint>
#include <random>

#include "tpk/graded.hpp"

namespace tpk {

// Deterministic generators for randomized identity checks. All draws go
// through pick() so results depend only on the seed, not on library
// distribution internals.
class Gen {
  public:
    explicit Gen(uint64_t seed) : rng_(seed) {}

    uint64_t pick(uint64_t n) { return rng_() % n; } // n <= 2^32 in practice

    // Uniform small integer in [-range, range].
    long small_int(long range) {
        return static_cast<long>(pick(2 * range + 1)) - range;
    }

    double real(double lo, double hi) {
        return lo + (hi - lo) * (static_cast<double>(rng_() >> 11) * 0x1.0p-53);
    }

    // Sparse polynomial of total degree <= maxdeg with small integer
    // coefficients; never identically zero unless allow_zero.
    Polynomial polynomial(int dim, int maxdeg = 2, bool allow_zero = false) {
        for (int attempt = 0; attempt < 32; ++attempt) {
            Polynomial p(dim);
            int terms = 1 + static_cast<int>(pick(3));
            for (int t = 0; t < terms; ++t) {
                Polynomial::Exponents e(dim, 0);
                int deg = static_cast<int>(pick(maxdeg + 1));
                for (int d = 0; d < deg; ++d)
                    e[pick(dim)] += 1;
                p.add_term(e, Rational(small_int(3)));
            }
            if (allow_zero || !p.is_zero())
                return p;
        }
        return Polynomial::constant(dim, Rational(1));
    }

    RationalFunction function(int dim, int maxdeg = 2) {
        return RationalFunction(polynomial(dim, maxdeg));
    }

    Graded graded(Kind kind, int dim, int degree, int maxdeg = 2) {
        Graded g(kind, dim, degree);
        Graded::Indices idx(degree);
        int count = 1 + static_cast<int>(pick(3));
        for (int c = 0; c < count; ++c) {
            // strictly increasing tuple by sampling without replacement
            std::vector<int> pool;
            for (int i = 0; i < dim; ++i)
                pool.push_back(i);
            for (int k = 0; k < degree; ++k) {
                int j = static_cast<int>(pick(pool.size()));
                idx[k] = pool[j];
                pool.erase(pool.begin() + j);
            }
            g.add_term(idx, RationalFunction(polynomial(dim, maxdeg, true)));
        }
        return g;
    }

    Graded form(int dim, int degree, int maxdeg = 2) {
        return graded(Kind::form, dim, degree, maxdeg);
    }

    Graded multivector(int dim, int degree, int maxdeg = 2) {
        return graded(Kind::multivector, dim, degree, maxdeg);
    }

    Graded vector_field(int dim, int maxdeg = 2) {
        return graded(Kind::multivector, dim, 1, maxdeg);
    }

    // Closed 3-form: d of a random 2-form.
    Graded closed_three_form(int dim, int maxdeg = 2) {
        return de_rham_d(form(dim, 2, maxdeg));
    }

  private:
    std::mt19937_64 rng_;
};

} // namespace tpk

#endif

#pragma once

/*
 * Seeded random generators for property tests and the uniqueness oracle.
 * mt19937_64 keeps every draw reproducible across platforms.
 */

#include <random>

#include "malp/exterior.hpp"

namespace malp {

inline Rational random_rational(std::mt19937_64& rng, long lo = -3, long hi = 3, long max_den = 3) {
    std::uniform_int_distribution<long> num(lo, hi);
    std::uniform_int_distribution<long> den(1, max_den);
    return Rational(num(rng), den(rng));
}

inline Rational random_nonzero_rational(std::mt19937_64& rng, long lo = -3, long hi = 3,
                                        long max_den = 3) {
    Rational r;
    do {
        r = random_rational(rng, lo, hi, max_den);
    } while (r.is_zero());
    return r;
}

/* random element of Sp(2n, Q) as a product of block generators:
 * diag(A, A^{-T}) for unit-triangular A, shears [[I,S],[0,I]] / [[I,0],[T,I]]
 * with symmetric S, T, and the interchange J. Preserves the standard
 * symplectic form by construction. */
Matrix<Rational> random_symplectic(int n, std::mt19937_64& rng, int factors = 5);

/* random SL(n, Q): product of elementary transvections I + c E_ij */
Matrix<Rational> random_unimodular(int n, std::mt19937_64& rng, int factors = 6);

}  // namespace malp

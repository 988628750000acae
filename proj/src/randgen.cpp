#include "malp/randgen.hpp"

namespace malp {

Matrix<Rational> random_unimodular(int n, std::mt19937_64& rng, int factors) {
    std::uniform_int_distribution<int> pick(0, n - 1);
    Matrix<Rational> m = Matrix<Rational>::identity(static_cast<std::size_t>(n), Rational(0));
    for (int f = 0; f < factors; ++f) {
        int i = pick(rng), j = pick(rng);
        if (i == j) continue;
        Matrix<Rational> t = Matrix<Rational>::identity(static_cast<std::size_t>(n), Rational(0));
        t.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
            random_nonzero_rational(rng, -2, 2, 2);
        m = m * t;
    }
    return m;
}

Matrix<Rational> random_symplectic(int n, std::mt19937_64& rng, int factors) {
    std::size_t nn = static_cast<std::size_t>(n);
    Matrix<Rational> m = Matrix<Rational>::identity(2 * nn, Rational(0));
    std::uniform_int_distribution<int> kind(0, 3);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int f = 0; f < factors; ++f) {
        Matrix<Rational> g = Matrix<Rational>::identity(2 * nn, Rational(0));
        switch (kind(rng)) {
            case 0: {
                Matrix<Rational> a = random_unimodular(n, rng, 3);
                Matrix<Rational> ait = a.inverse()->transpose();
                for (std::size_t i = 0; i < nn; ++i)
                    for (std::size_t j = 0; j < nn; ++j) {
                        g.at(i, j) = a.at(i, j);
                        g.at(nn + i, nn + j) = ait.at(i, j);
                    }
                break;
            }
            case 1: {
                std::size_t i = static_cast<std::size_t>(pick(rng));
                std::size_t j = static_cast<std::size_t>(pick(rng));
                Rational c = random_nonzero_rational(rng, -2, 2, 2);
                g.at(i, nn + j) += c;
                g.at(j, nn + i) += c;
                if (i == j) g.at(i, nn + i) = c;
                break;
            }
            case 2: {
                std::size_t i = static_cast<std::size_t>(pick(rng));
                std::size_t j = static_cast<std::size_t>(pick(rng));
                Rational c = random_nonzero_rational(rng, -2, 2, 2);
                g.at(nn + i, j) += c;
                g.at(nn + j, i) += c;
                if (i == j) g.at(nn + i, i) = c;
                break;
            }
            default: {
                for (std::size_t i = 0; i < nn; ++i) {
                    g.at(i, i) = Rational(0);
                    g.at(nn + i, nn + i) = Rational(0);
                    g.at(i, nn + i) = Rational(-1);
                    g.at(nn + i, i) = Rational(1);
                }
                break;
            }
        }
        m = m * g;
    }
    return m;
}

}  // namespace malp

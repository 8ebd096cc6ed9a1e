#pragma once

#include <complex>
#include <vector>

#include "coh/complex_matrix.hpp"
#include "coh/rng.hpp"

namespace coh::test {

inline ComplexMatrix random_hermitian(int d, std::uint64_t seed) {
    SplitMix64 rng(seed);
    ComplexMatrix a(d);
    for (int i = 0; i < d; ++i) {
        a(i, i) = rng.next_gaussian();
        for (int j = i + 1; j < d; ++j) {
            const Complex z = 0.5 * rng.next_complex_gaussian();
            a(i, j) = z;
            a(j, i) = std::conj(z);
        }
    }
    return a;
}

// Determinant by LU with partial pivoting: an oracle independent of the
// Jacobi eigensolver.
inline Complex det_lu(ComplexMatrix a) {
    const int d = a.dim();
    Complex det = 1.0;
    for (int c = 0; c < d; ++c) {
        int pivot = c;
        for (int r = c + 1; r < d; ++r)
            if (std::abs(a(r, c)) > std::abs(a(pivot, c))) pivot = r;
        if (std::abs(a(pivot, c)) == 0.0) return 0.0;
        if (pivot != c) {
            for (int k = 0; k < d; ++k) std::swap(a(pivot, k), a(c, k));
            det = -det;
        }
        det *= a(c, c);
        for (int r = c + 1; r < d; ++r) {
            const Complex f = a(r, c) / a(c, c);
            for (int k = c; k < d; ++k) a(r, k) -= f * a(c, k);
        }
    }
    return det;
}

}  // namespace coh::test

#pragma once

#include "wigner/error.hpp"
#include "wigner/philox.hpp"
#include "wigner/words.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

namespace testing {

#define CHECK_ERROR_KIND(expr, expected_kind)                                  \
    do {                                                                       \
        bool thrown_ = false;                                                  \
        try {                                                                  \
            (void)(expr);                                                      \
        } catch (const wigner::Error& e_) {                                    \
            thrown_ = true;                                                    \
            CHECK_MESSAGE(e_.kind() == (expected_kind), e_.what());            \
        }                                                                      \
        CHECK_MESSAGE(thrown_, "expected an error from " #expr);               \
    } while (0)

inline bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

/// Random closed word: length in [lo, hi], letters in [1, alphabet].
inline wigner::Word random_closed_word(wigner::PhiloxStream& rng, std::size_t lo, std::size_t hi,
                                       wigner::Letter alphabet) {
    const std::size_t len = lo + rng.below(hi - lo + 1);
    std::vector<wigner::Letter> letters(len);
    for (auto& l : letters) l = 1 + static_cast<wigner::Letter>(rng.below(alphabet));
    letters.back() = letters.front();
    return wigner::Word(letters);
}

inline std::vector<double> standard_normals(wigner::PhiloxStream& rng, std::size_t count) {
    std::vector<double> out(count);
    for (auto& v : out) {
        const double u1 = 1.0 - rng.uniform(), u2 = rng.uniform();
        v = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }
    return out;
}

} // namespace testing

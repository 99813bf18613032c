#ifndef SSSIM_TEST_HELPERS_HPP
#define SSSIM_TEST_HELPERS_HPP

#include <doctest.h>

// Pure relative comparison: |lhs - expected| <= rel * max(|lhs|, |expected|).
// doctest's Approx defaults to a mixed form with an absolute scale term of
// 1.0, which is meaningless against SI magnitudes like 1e-22 J or 1e-13 F;
// zeroing the scale makes the stated epsilon a true relative tolerance.
inline doctest::Approx approx_rel(double expected, double rel) {
    return doctest::Approx(expected).epsilon(rel).scale(0.0);
}

#endif

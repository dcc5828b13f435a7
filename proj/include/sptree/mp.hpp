#pragma once

#include <mutex>

#include <boost/multiprecision/mpfr.hpp>
#include <gmpxx.h>

namespace sptree::mp {

using Real = boost::multiprecision::mpfr_float;

// Sets the working precision (decimal digits) for newly created Reals and
// restores the previous one on exit. The default precision is process-wide,
// so scopes are serialized through a recursive mutex.
class PrecisionScope {
public:
    explicit PrecisionScope(unsigned digits10) : lock_(mutex()) {
        saved_ = Real::default_precision();
        Real::default_precision(digits10);
    }
    ~PrecisionScope() { Real::default_precision(saved_); }

    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    static std::recursive_mutex& mutex() {
        static std::recursive_mutex m;
        return m;
    }

    std::unique_lock<std::recursive_mutex> lock_;
    unsigned saved_ = 0;
};

// Constants at the current working precision.
inline Real pi() {
    Real r;
    mpfr_const_pi(r.backend().data(), MPFR_RNDN);
    return r;
}

inline Real log2() {
    Real r;
    mpfr_const_log2(r.backend().data(), MPFR_RNDN);
    return r;
}

inline Real from_mpz(const mpz_class& z) {
    Real r;
    mpfr_set_z(r.backend().data(), z.get_mpz_t(), MPFR_RNDN);
    return r;
}

} // namespace sptree::mp

#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace sph {

// Exact rational scalar used by every linear-algebra path.
using rat = mpq_class;

// Small integer coefficient vectors (root / weight coordinates).
using ivec = std::vector<long long>;

struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

inline bool is_zero(const rat& x) { return sgn(x) == 0; }

// mpq_class has no long long constructor
inline rat to_rat(long long x) { return rat(static_cast<long>(x)); }

inline bool is_integer(const rat& x) { return x.get_den() == 1; }

inline long long to_ll(const rat& x)
{
    if (!is_integer(x) || !x.get_num().fits_slong_p())
        throw std::logic_error("rational does not fit an integer");
    return x.get_num().get_si();
}

inline std::string rat_str(const rat& x) { return x.get_str(); }

inline ivec ivec_add(const ivec& a, const ivec& b)
{
    ivec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline ivec ivec_sub(const ivec& a, const ivec& b)
{
    ivec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline ivec ivec_scale(const ivec& a, long long c)
{
    ivec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline bool ivec_is_zero(const ivec& a)
{
    for (long long x : a)
        if (x != 0) return false;
    return true;
}

#define SPH_CHECK(cond, msg)                                         \
    do {                                                             \
        if (!(cond)) throw std::logic_error(std::string("internal: ") + (msg)); \
    } while (0)

}  // namespace sph

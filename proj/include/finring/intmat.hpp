#pragma once

#include <array>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace finring {

// Exact 2x2 integer matrices, for the infinite-ring computations that no
// finite table can host.
struct IntMat2 {
    using Int = boost::multiprecision::cpp_int;
    std::array<Int, 4> e;  // row major: e[0]=a11 e[1]=a12 e[2]=a21 e[3]=a22

    static IntMat2 of(long long a, long long b, long long c, long long d) {
        return IntMat2{{Int(a), Int(b), Int(c), Int(d)}};
    }
    static IntMat2 zero() { return of(0, 0, 0, 0); }
    static IntMat2 ident() { return of(1, 0, 0, 1); }

    friend IntMat2 operator+(const IntMat2& x, const IntMat2& y) {
        return IntMat2{{x.e[0] + y.e[0], x.e[1] + y.e[1], x.e[2] + y.e[2], x.e[3] + y.e[3]}};
    }
    friend IntMat2 operator-(const IntMat2& x, const IntMat2& y) {
        return IntMat2{{x.e[0] - y.e[0], x.e[1] - y.e[1], x.e[2] - y.e[2], x.e[3] - y.e[3]}};
    }
    friend IntMat2 operator*(const IntMat2& x, const IntMat2& y) {
        return IntMat2{{x.e[0] * y.e[0] + x.e[1] * y.e[2], x.e[0] * y.e[1] + x.e[1] * y.e[3],
                        x.e[2] * y.e[0] + x.e[3] * y.e[2], x.e[2] * y.e[1] + x.e[3] * y.e[3]}};
    }
    friend bool operator==(const IntMat2& x, const IntMat2& y) { return x.e == y.e; }

    bool is_zero() const { return e[0] == 0 && e[1] == 0 && e[2] == 0 && e[3] == 0; }

    IntMat2 pow(unsigned n) const {
        IntMat2 acc = ident();
        for (unsigned i = 0; i < n; ++i) acc = acc * *this;
        return acc;
    }

    std::string str() const;
};

// Entry-wise congruence mod m.
bool congruent_mod(const IntMat2& x, const IntMat2& y, long long m);

}  // namespace finring

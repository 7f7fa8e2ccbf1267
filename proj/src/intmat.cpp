#include "finring/intmat.hpp"

#include <sstream>

namespace finring {

std::string IntMat2::str() const {
    std::ostringstream os;
    os << "[[" << e[0] << "," << e[1] << "],[" << e[2] << "," << e[3] << "]]";
    return os.str();
}

bool congruent_mod(const IntMat2& x, const IntMat2& y, long long m) {
    for (int i = 0; i < 4; ++i)
        if ((x.e[i] - y.e[i]) % m != 0) return false;
    return true;
}

}  // namespace finring

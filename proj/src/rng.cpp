#include "mvpav/rng.hpp"

namespace mvpav {

Rational01 random_rational01(Rng& rng, int max_den) {
    int den = rng.range(1, max_den);
    int num = rng.range(0, den);
    return Rational01(num, den);
}

}  // namespace mvpav

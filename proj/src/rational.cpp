#include "mvpav/rational.hpp"

#include <ostream>

namespace mvpav {

Rat rat_from_string(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw Error("empty rational literal");
    mpq_class q;
    if (q.set_str(t, 10) != 0) throw Error("bad rational literal: " + text);
    if (q.get_den() == 0) throw Error("zero denominator: " + text);
    q.canonicalize();
    return q;
}

std::string rat_to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational01::Rational01(long num, long den) : value_(num, den) {
    if (den == 0) throw Error("zero denominator");
    value_.canonicalize();
    if (value_ < 0 || value_ > 1)
        throw Error("rational out of [0,1]: " + rat_to_string(value_));
}

Rational01::Rational01(Rat value) : value_(std::move(value)) {
    value_.canonicalize();
    if (value_ < 0 || value_ > 1)
        throw Error("rational out of [0,1]: " + rat_to_string(value_));
}

Rational01 Rational01::parse(const std::string& text) {
    return Rational01(rat_from_string(text));
}

std::ostream& operator<<(std::ostream& os, const Rational01& r) {
    return os << r.str();
}

Rational01 mv_impl(const Rational01& x, const Rational01& y) {
    Rat v = 1 - x.value() + y.value();
    if (v > 1) v = 1;
    return Rational01(v);
}

Rational01 mv_odot(const Rational01& x, const Rational01& y) {
    Rat v = x.value() + y.value() - 1;
    if (v < 0) v = 0;
    return Rational01(v);
}

Rational01 mv_oplus(const Rational01& x, const Rational01& y) {
    Rat v = x.value() + y.value();
    if (v > 1) v = 1;
    return Rational01(v);
}

Rational01 mv_neg(const Rational01& x) { return Rational01(1 - x.value()); }

Rational01 mv_meet(const Rational01& x, const Rational01& y) {
    return x <= y ? x : y;
}

Rational01 mv_join(const Rational01& x, const Rational01& y) {
    return x >= y ? x : y;
}

Rational01 mv_prod(const Rational01& x, const Rational01& y) {
    return Rational01(x.value() * y.value());
}

Rational01 mv_div(const Rational01& x, int n) {
    if (n < 1) throw Error("division index must be >= 1");
    return Rational01(x.value() / n);
}

Rational01 mv_multiple(int n, const Rational01& x) {
    if (n < 0) throw Error("multiple index must be >= 0");
    Rat v = n * x.value();
    if (v > 1) v = 1;
    return Rational01(v);
}

}  // namespace mvpav

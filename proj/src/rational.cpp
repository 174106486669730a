#include "frobcheck/rational.hpp"

#include <cctype>
#include <ostream>

#include "frobcheck/error.hpp"

namespace frobcheck {

Rational::Rational(long num, long den) {
    if (den == 0) throw ShapeError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    // Strict format: -?digits(/digits)?  — no spaces, no empty parts.
    auto digits = [](const std::string& s, size_t from, size_t to) {
        if (from >= to) return false;
        for (size_t k = from; k < to; ++k)
            if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
        return true;
    };
    size_t start = (!text.empty() && text[0] == '-') ? 1 : 0;
    size_t slash = text.find('/');
    bool ok;
    if (slash == std::string::npos) {
        ok = digits(text, start, text.size());
    } else {
        ok = digits(text, start, slash) && digits(text, slash + 1, text.size());
    }
    if (!ok) throw ShapeError("malformed rational literal: '" + text + "'");

    mpq_class v;
    if (v.set_str(text, 10) != 0) throw ShapeError("malformed rational literal: '" + text + "'");
    if (sgn(v.get_den()) == 0) throw ShapeError("rational with zero denominator: '" + text + "'");
    v.canonicalize();
    return Rational(std::move(v));
}

Rational Rational::operator-() const {
    return Rational(mpq_class(-v_));
}

Rational& Rational::operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw ShapeError("rational division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rational::to_string() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

}  // namespace frobcheck

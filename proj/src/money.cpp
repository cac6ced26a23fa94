#include "hubnet/money.hpp"

#include <cctype>
#include <cstdlib>
#include <numeric>

namespace hubnet {

namespace {

int64_t checked_add(int64_t a, int64_t b) {
    int64_t out;
    if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("money addition overflow");
    return out;
}

int64_t checked_mul(int64_t a, int64_t b) {
    int64_t out;
    if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("money multiplication overflow");
    return out;
}

int64_t narrow_i128(__int128 v, const char* what) {
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error(what);
    return static_cast<int64_t>(v);
}

}  // namespace

Money Money::from_units(int64_t units) {
    return Money(checked_mul(units, kScale));
}

std::optional<Money> Money::parse(std::string_view text) {
    if (text.empty()) return std::nullopt;
    size_t pos = 0;
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
        negative = text[pos] == '-';
        ++pos;
    }
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) return std::nullopt;

    int64_t units = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        if (__builtin_mul_overflow(units, 10, &units)) return std::nullopt;
        if (__builtin_add_overflow(units, text[pos] - '0', &units)) return std::nullopt;
        ++pos;
    }

    int64_t frac = 0;
    int frac_digits = 0;
    if (pos < text.size() && text[pos] == '.') {
        ++pos;
        if (pos >= text.size()) return std::nullopt;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            if (++frac_digits > 4) return std::nullopt;
            frac = frac * 10 + (text[pos] - '0');
            ++pos;
        }
        if (frac_digits == 0) return std::nullopt;
    }
    if (pos != text.size()) return std::nullopt;

    for (int d = frac_digits; d < 4; ++d) frac *= 10;
    int64_t minor;
    if (__builtin_mul_overflow(units, kScale, &minor)) return std::nullopt;
    if (__builtin_add_overflow(minor, frac, &minor)) return std::nullopt;
    return Money(negative ? -minor : minor);
}

std::string Money::str() const {
    int64_t m = minor_;
    std::string sign;
    if (m < 0) {
        sign = "-";
        m = -m;
    }
    int64_t units = m / kScale;
    int64_t frac = m % kScale;
    if (frac == 0) return sign + std::to_string(units);
    std::string digits = std::to_string(frac);
    digits.insert(0, 4 - digits.size(), '0');
    while (digits.back() == '0') digits.pop_back();
    return sign + std::to_string(units) + "." + digits;
}

Money Money::operator+(Money rhs) const { return Money(checked_add(minor_, rhs.minor_)); }

Money Money::operator-(Money rhs) const {
    int64_t out;
    if (__builtin_sub_overflow(minor_, rhs.minor_, &out)) throw std::overflow_error("money subtraction overflow");
    return Money(out);
}

Money Money::operator-() const {
    if (minor_ == INT64_MIN) throw std::overflow_error("money negation overflow");
    return Money(-minor_);
}

Money Money::operator*(int64_t factor) const { return Money(checked_mul(minor_, factor)); }

Money& Money::operator+=(Money rhs) {
    minor_ = checked_add(minor_, rhs.minor_);
    return *this;
}

Rational Rational::make(int64_t num, int64_t den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (num == INT64_MIN || den == INT64_MIN) throw std::overflow_error("rational magnitude overflow");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    Rational r;
    r.num_ = num;
    r.den_ = den;
    return r;
}

namespace {

Rational make_from_i128(__int128 num, __int128 den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    __int128 a = num < 0 ? -num : num;
    __int128 b = den;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    if (a > 1) {
        num /= a;
        den /= a;
    }
    return Rational::make(narrow_i128(num, "rational numerator overflow"),
                          narrow_i128(den, "rational denominator overflow"));
}

}  // namespace

Rational Rational::operator+(const Rational& rhs) const {
    return make_from_i128(static_cast<__int128>(num_) * rhs.den_ + static_cast<__int128>(rhs.num_) * den_,
                          static_cast<__int128>(den_) * rhs.den_);
}

Rational Rational::operator-(const Rational& rhs) const {
    return make_from_i128(static_cast<__int128>(num_) * rhs.den_ - static_cast<__int128>(rhs.num_) * den_,
                          static_cast<__int128>(den_) * rhs.den_);
}

Rational Rational::operator*(const Rational& rhs) const {
    return make_from_i128(static_cast<__int128>(num_) * rhs.num_, static_cast<__int128>(den_) * rhs.den_);
}

Rational Rational::div_int(int64_t divisor) const {
    if (divisor == 0) throw std::invalid_argument("rational division by zero");
    return make_from_i128(num_, static_cast<__int128>(den_) * divisor);
}

std::strong_ordering Rational::operator<=>(const Rational& rhs) const {
    __int128 lhs_v = static_cast<__int128>(num_) * rhs.den_;
    __int128 rhs_v = static_cast<__int128>(rhs.num_) * den_;
    if (lhs_v < rhs_v) return std::strong_ordering::less;
    if (lhs_v > rhs_v) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::optional<Money> Rational::to_money_exact() const {
    __int128 scaled = static_cast<__int128>(num_) * Money::kScale;
    if (scaled % den_ != 0) return std::nullopt;
    return Money::from_minor(narrow_i128(scaled / den_, "money conversion overflow"));
}

Money Rational::to_money_half_up() const {
    __int128 scaled = static_cast<__int128>(num_) * Money::kScale;
    __int128 mag = scaled < 0 ? -scaled : scaled;
    __int128 rounded = (2 * mag + den_) / (2 * static_cast<__int128>(den_));
    if (scaled < 0) rounded = -rounded;
    return Money::from_minor(narrow_i128(rounded, "money rounding overflow"));
}

MoneyMatrix::MoneyMatrix(int rows, int cols, Money fill)
    : rows_(rows), cols_(cols), cells_(static_cast<size_t>(rows) * cols, fill) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

size_t MoneyMatrix::index(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("matrix index");
    return static_cast<size_t>(r) * cols_ + c;
}

}  // namespace hubnet

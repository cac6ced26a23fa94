#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hubnet {

// Fixed-point money with 4 decimal digits. All arithmetic is exact and
// checked; overflow throws std::overflow_error.
class Money {
public:
    static constexpr int64_t kScale = 10'000;

    constexpr Money() = default;

    static constexpr Money from_minor(int64_t minor) { return Money(minor); }
    static Money from_units(int64_t units);

    // Accepts [+-]digits[.digits], at most 4 fractional digits.
    static std::optional<Money> parse(std::string_view text);

    constexpr int64_t minor() const { return minor_; }
    double to_double() const { return static_cast<double>(minor_) / kScale; }

    // Minimal decimal form: 13.95, not 13.9500.
    std::string str() const;

    Money operator+(Money rhs) const;
    Money operator-(Money rhs) const;
    Money operator-() const;
    Money operator*(int64_t factor) const;
    Money& operator+=(Money rhs);

    auto operator<=>(const Money&) const = default;

private:
    explicit constexpr Money(int64_t minor) : minor_(minor) {}

    int64_t minor_ = 0;
};

// Exact rational over int64, normalized with positive denominator.
// Intermediate products use 128-bit arithmetic.
class Rational {
public:
    constexpr Rational() = default;

    static Rational make(int64_t num, int64_t den);
    static Rational of_int(int64_t value) { return make(value, 1); }
    static Rational of(Money m) { return make(m.minor(), Money::kScale); }

    int64_t num() const { return num_; }
    int64_t den() const { return den_; }

    Rational operator+(const Rational& rhs) const;
    Rational operator-(const Rational& rhs) const;
    Rational operator*(const Rational& rhs) const;
    Rational div_int(int64_t divisor) const;

    bool operator==(const Rational&) const = default;
    std::strong_ordering operator<=>(const Rational& rhs) const;

    bool is_negative() const { return num_ < 0; }

    // Exact conversion when the value fits 4 fractional digits.
    std::optional<Money> to_money_exact() const;
    // Commercial rounding at the 4th digit (ties away from zero).
    Money to_money_half_up() const;

private:
    int64_t num_ = 0;
    int64_t den_ = 1;
};

class MoneyMatrix {
public:
    MoneyMatrix() = default;
    MoneyMatrix(int rows, int cols, Money fill = Money());

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Money at(int r, int c) const { return cells_[index(r, c)]; }
    Money& at(int r, int c) { return cells_[index(r, c)]; }

    bool operator==(const MoneyMatrix&) const = default;

private:
    size_t index(int r, int c) const;

    int rows_ = 0;
    int cols_ = 0;
    std::vector<Money> cells_;
};

}  // namespace hubnet

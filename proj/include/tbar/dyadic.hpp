/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The tbar Authors
 */

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace tbar {

/*
 * Exact dyadic rational m / 2^e.
 *
 * Canonical form: e >= 0, and if e > 0 then m is odd; zero is 0 / 2^0.
 * Two values are equal iff their canonical forms are identical, so the
 * comparison operators below never need to cross-multiply.
 *
 * Numerators live in an int64 while they fit and move to a shared,
 * immutable GMP integer otherwise. A value is stored big only when it
 * does not fit in 64 bits, which keeps the representation unique.
 */
class Dyadic {
public:
	Dyadic() noexcept = default;
	Dyadic(std::int64_t integer) noexcept : small_(integer) {}

	/// Canonical form of numerator / 2^exponent. Throws UsageError when
	/// exponent < 0.
	static Dyadic normalize(std::int64_t numerator, std::int64_t exponent);
	static Dyadic normalize(const mpz_class &numerator, std::int64_t exponent);

	/// Parses "m" or "m/d" where d is a power of two greater than one and
	/// the fraction is in lowest terms; this is exactly what to_string()
	/// produces. Throws ParseError otherwise.
	static Dyadic parse(std::string_view text);

	mpz_class numerator() const;
	std::int64_t exponent() const noexcept { return exp_; }
	bool is_small() const noexcept { return !big_; }

	int sign() const noexcept;
	bool is_zero() const noexcept { return !big_ && small_ == 0; }
	bool is_integer() const noexcept { return exp_ == 0; }

	/// Largest integer not exceeding the value.
	Dyadic floor() const;

	/// The value as an int64; UsageError unless it is an integer that fits.
	std::int64_t to_int64() const;

	std::string to_string() const;
	std::size_t hash() const noexcept;

	Dyadic operator-() const;
	Dyadic &operator+=(const Dyadic &o) { return *this = *this + o; }
	Dyadic &operator-=(const Dyadic &o) { return *this = *this - o; }

	friend Dyadic operator+(const Dyadic &x, const Dyadic &y);
	friend Dyadic operator-(const Dyadic &x, const Dyadic &y);
	friend Dyadic operator*(const Dyadic &x, const Dyadic &y);

	/// x * 2^k for any integer k.
	friend Dyadic mul_pow2(const Dyadic &x, std::int64_t k);

	friend std::strong_ordering operator<=>(const Dyadic &x, const Dyadic &y);
	friend bool operator==(const Dyadic &x, const Dyadic &y) noexcept;

	friend std::optional<std::int64_t> pow2_ratio(const Dyadic &num, const Dyadic &den);

private:
	static Dyadic from_big(mpz_class numerator, std::int64_t exponent);

	std::int64_t small_ = 0;
	std::shared_ptr<const mpz_class> big_;
	std::int64_t exp_ = 0;
};

/// If num / den == 2^k (both strictly positive) returns k.
std::optional<std::int64_t> pow2_ratio(const Dyadic &num, const Dyadic &den);

inline std::ostream &operator<<(std::ostream &os, const Dyadic &x)
{
	return os << x.to_string();
}

} // namespace tbar

template <>
struct std::hash<tbar::Dyadic> {
	std::size_t operator()(const tbar::Dyadic &x) const noexcept { return x.hash(); }
};

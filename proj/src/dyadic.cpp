/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The tbar Authors
 */

#include "tbar/dyadic.hpp"

#include "tbar/error.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace tbar {

namespace {

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();
constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();

int ctz(std::int64_t v)
{
	return std::countr_zero(static_cast<std::uint64_t>(v));
}

// v * 2^s into out, false on overflow.
bool shl_fits(std::int64_t v, std::int64_t s, std::int64_t &out)
{
	if (v == 0) {
		out = 0;
		return true;
	}
	if (s >= 63)
		return false;
	if (v > (kMax >> s) || v < (kMin >> s))
		return false;
	out = static_cast<std::int64_t>(static_cast<std::uint64_t>(v) << s);
	return true;
}

mpz_class to_mpz(std::int64_t v)
{
	mpz_class r;
	mpz_set_si(r.get_mpz_t(), static_cast<long>(v));
	return r;
}

mpz_class shifted(const mpz_class &v, std::int64_t s)
{
	mpz_class r;
	mpz_mul_2exp(r.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(s));
	return r;
}

} // namespace

Dyadic Dyadic::normalize(std::int64_t numerator, std::int64_t exponent)
{
	if (exponent < 0)
		throw UsageError("Dyadic::normalize: negative exponent");
	Dyadic r;
	if (numerator == 0)
		return r;
	std::int64_t drop = std::min<std::int64_t>(ctz(numerator), exponent);
	r.small_ = numerator >> drop;
	r.exp_ = exponent - drop;
	return r;
}

Dyadic Dyadic::normalize(const mpz_class &numerator, std::int64_t exponent)
{
	if (exponent < 0)
		throw UsageError("Dyadic::normalize: negative exponent");
	return from_big(numerator, exponent);
}

Dyadic Dyadic::from_big(mpz_class n, std::int64_t e)
{
	Dyadic r;
	if (sgn(n) == 0)
		return r;
	auto tz = static_cast<std::int64_t>(mpz_scan1(n.get_mpz_t(), 0));
	std::int64_t drop = std::min(tz, e);
	if (drop > 0)
		mpz_fdiv_q_2exp(n.get_mpz_t(), n.get_mpz_t(), static_cast<mp_bitcnt_t>(drop));
	r.exp_ = e - drop;
	if (mpz_fits_slong_p(n.get_mpz_t()))
		r.small_ = mpz_get_si(n.get_mpz_t());
	else
		r.big_ = std::make_shared<const mpz_class>(std::move(n));
	return r;
}

mpz_class Dyadic::numerator() const
{
	return big_ ? *big_ : to_mpz(small_);
}

int Dyadic::sign() const noexcept
{
	if (big_)
		return sgn(*big_);
	return (small_ > 0) - (small_ < 0);
}

Dyadic Dyadic::floor() const
{
	if (exp_ == 0)
		return *this;
	if (!big_) {
		if (exp_ >= 63)
			return Dyadic(small_ < 0 ? -1 : 0);
		return Dyadic(small_ >> exp_);
	}
	mpz_class q;
	mpz_fdiv_q_2exp(q.get_mpz_t(), big_->get_mpz_t(), static_cast<mp_bitcnt_t>(exp_));
	return from_big(std::move(q), 0);
}

std::int64_t Dyadic::to_int64() const
{
	if (exp_ != 0 || big_)
		throw UsageError("Dyadic::to_int64: " + to_string() + " is not a 64-bit integer");
	return small_;
}

std::string Dyadic::to_string() const
{
	std::string s = big_ ? big_->get_str() : std::to_string(small_);
	if (exp_ == 0)
		return s;
	mpz_class den;
	mpz_setbit(den.get_mpz_t(), static_cast<mp_bitcnt_t>(exp_));
	return s + "/" + den.get_str();
}

std::size_t Dyadic::hash() const noexcept
{
	std::size_t h = big_ ? std::hash<std::string>{}(big_->get_str(16))
	                     : std::hash<std::int64_t>{}(small_);
	return h ^ (std::hash<std::int64_t>{}(exp_) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

Dyadic Dyadic::parse(std::string_view text)
{
	auto fail = [&](const char *why) {
		return ParseError("bad dyadic \"" + std::string(text) + "\": " + why);
	};
	auto digits = [&](std::string_view d) {
		if (d.empty())
			throw fail("missing digits");
		if (!std::all_of(d.begin(), d.end(), [](char c) { return c >= '0' && c <= '9'; }))
			throw fail("unexpected character");
		if (d.size() > 1 && d.front() == '0')
			throw fail("leading zero");
	};

	std::string_view rest = text;
	bool negative = false;
	if (!rest.empty() && rest.front() == '-') {
		negative = true;
		rest.remove_prefix(1);
	}
	auto slash = rest.find('/');
	std::string_view num = rest.substr(0, slash);
	digits(num);
	mpz_class m(std::string(num), 10);
	if (negative) {
		if (sgn(m) == 0)
			throw fail("negative zero");
		m = -m;
	}
	if (slash == std::string_view::npos)
		return from_big(std::move(m), 0);

	std::string_view den = rest.substr(slash + 1);
	digits(den);
	mpz_class d(std::string(den), 10);
	if (d <= 1 || mpz_popcount(d.get_mpz_t()) != 1)
		throw fail("denominator must be a power of two greater than one");
	if (mpz_even_p(m.get_mpz_t()))
		throw fail("not in lowest terms");
	auto e = static_cast<std::int64_t>(mpz_scan1(d.get_mpz_t(), 0));
	return from_big(std::move(m), e);
}

Dyadic Dyadic::operator-() const
{
	if (!big_ && small_ != kMin) {
		Dyadic r = *this;
		r.small_ = -small_;
		return r;
	}
	return from_big(-numerator(), exp_);
}

Dyadic operator+(const Dyadic &x, const Dyadic &y)
{
	if (x.is_zero())
		return y;
	if (y.is_zero())
		return x;
	std::int64_t e = std::max(x.exp_, y.exp_);
	if (!x.big_ && !y.big_) {
		std::int64_t a, b, s;
		if (shl_fits(x.small_, e - x.exp_, a) && shl_fits(y.small_, e - y.exp_, b) &&
		    !__builtin_add_overflow(a, b, &s))
			return Dyadic::normalize(s, e);
	}
	mpz_class s = shifted(x.numerator(), e - x.exp_) + shifted(y.numerator(), e - y.exp_);
	return Dyadic::from_big(std::move(s), e);
}

Dyadic operator-(const Dyadic &x, const Dyadic &y)
{
	return x + (-y);
}

Dyadic operator*(const Dyadic &x, const Dyadic &y)
{
	std::int64_t e = x.exp_ + y.exp_;
	if (!x.big_ && !y.big_) {
		std::int64_t p;
		if (!__builtin_mul_overflow(x.small_, y.small_, &p))
			return Dyadic::normalize(p, e);
	}
	mpz_class p = x.numerator() * y.numerator();
	return Dyadic::from_big(std::move(p), e);
}

Dyadic mul_pow2(const Dyadic &x, std::int64_t k)
{
	if (x.is_zero() || k == 0)
		return x;
	if (k < 0) {
		// Odd numerators stay odd; integers may still carry factors of two.
		if (x.exp_ > 0) {
			Dyadic r = x;
			r.exp_ -= k;
			return r;
		}
		if (!x.big_)
			return Dyadic::normalize(x.small_, -k);
		return Dyadic::from_big(*x.big_, -k);
	}
	if (x.exp_ >= k) {
		Dyadic r = x;
		r.exp_ -= k;
		return r;
	}
	std::int64_t s = k - x.exp_;
	if (!x.big_) {
		std::int64_t v;
		if (shl_fits(x.small_, s, v))
			return Dyadic(v);
	}
	return Dyadic::from_big(shifted(x.numerator(), s), 0);
}

std::strong_ordering operator<=>(const Dyadic &x, const Dyadic &y)
{
	int sx = x.sign(), sy = y.sign();
	if (sx != sy)
		return sx <=> sy;
	if (!x.big_ && !y.big_) {
		if (x.exp_ == y.exp_)
			return x.small_ <=> y.small_;
		std::int64_t a, b;
		std::int64_t e = std::max(x.exp_, y.exp_);
		if (shl_fits(x.small_, e - x.exp_, a) && shl_fits(y.small_, e - y.exp_, b))
			return a <=> b;
	}
	std::int64_t e = std::max(x.exp_, y.exp_);
	int c = cmp(shifted(x.numerator(), e - x.exp_), shifted(y.numerator(), e - y.exp_));
	return c <=> 0;
}

bool operator==(const Dyadic &x, const Dyadic &y) noexcept
{
	if (x.exp_ != y.exp_ || bool(x.big_) != bool(y.big_))
		return false;
	return x.big_ ? *x.big_ == *y.big_ : x.small_ == y.small_;
}

std::optional<std::int64_t> pow2_ratio(const Dyadic &num, const Dyadic &den)
{
	if (num.sign() <= 0 || den.sign() <= 0)
		return std::nullopt;
	if (num.is_small() && den.is_small()) {
		std::int64_t a = num.small_;
		std::int64_t b = den.small_;
		int ta = ctz(a), tb = ctz(b);
		if ((a >> ta) != (b >> tb))
			return std::nullopt;
		return (ta - num.exponent()) - (tb - den.exponent());
	}
	mpz_class a = num.numerator(), b = den.numerator();
	auto ta = static_cast<std::int64_t>(mpz_scan1(a.get_mpz_t(), 0));
	auto tb = static_cast<std::int64_t>(mpz_scan1(b.get_mpz_t(), 0));
	mpz_fdiv_q_2exp(a.get_mpz_t(), a.get_mpz_t(), static_cast<mp_bitcnt_t>(ta));
	mpz_fdiv_q_2exp(b.get_mpz_t(), b.get_mpz_t(), static_cast<mp_bitcnt_t>(tb));
	if (a != b)
		return std::nullopt;
	return (ta - num.exponent()) - (tb - den.exponent());
}

} // namespace tbar

/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The tbar Authors
 */

#include "tbar/qembed.hpp"

#include "tbar/error.hpp"
#include "tbar/roots.hpp"

#include <string>

namespace tbar {

std::string_view to_string(ChainKind kind)
{
	switch (kind) {
	case ChainKind::standard:
		return "standard";
	case ChainKind::exotic:
		return "exotic";
	case ChainKind::custom:
		return "custom";
	}
	return "custom";
}

ChainKind parse_chain_kind(std::string_view name)
{
	if (name == "standard")
		return ChainKind::standard;
	if (name == "exotic")
		return ChainKind::exotic;
	if (name == "custom")
		return ChainKind::custom;
	throw UsageError("unknown chain kind \"" + std::string(name) + "\"");
}

std::int64_t factorial(int n)
{
	if (n < 0 || n > 20)
		throw UsageError("factorial argument out of range");
	std::int64_t r = 1;
	for (int i = 2; i <= n; ++i)
		r *= i;
	return r;
}

Dyadic d(int n)
{
	if (n < 1)
		throw UsageError("d(n) needs n >= 1");
	std::int64_t e = static_cast<std::int64_t>(n) * (n - 1) / 2;
	return mul_pow2(Dyadic(1), -e);
}

namespace {

constexpr int kOrderCheckLimit = 6;

template <typename NextFn>
Chain build_chain(ChainKind kind, int length, NextFn next)
{
	if (length < 1)
		throw UsageError("chain length must be at least 1");
	Chain c;
	c.kind = kind;
	c.elements.reserve(length);
	c.elements.push_back(Element::z());
	for (int n = 2; n <= length; ++n) {
		RootOptions opts{.check_order = n <= kOrderCheckLimit};
		c.elements.push_back(next(c.elements.back(), n, factorial(n - 1), opts));
	}
	return c;
}

} // namespace

Chain standard_chain(int length)
{
	return build_chain(ChainKind::standard, length,
	                   [](const Element &prev, int n, std::int64_t m, RootOptions opts) {
		                   return nth_root(prev, n, m, {}, opts);
	                   });
}

Chain exotic_chain(int length)
{
	return build_chain(ChainKind::exotic, length,
	                   [](const Element &prev, int n, std::int64_t m, RootOptions opts) {
		                   Dyadic v = Dyadic::normalize(1, 1) + mul_pow2(Dyadic(1), -n);
		                   return nth_root_with_value(prev, n, m, v, opts);
	                   });
}

Chain seeded_chain(int length, ChoiceSeed choice)
{
	return build_chain(ChainKind::custom, length,
	                   [choice](const Element &prev, int n, std::int64_t m, RootOptions opts) {
		                   return nth_root(prev, n, m, choice, opts);
	                   });
}

bool standard_clauses_hold(const Element &s_n, int n)
{
	if (n < 2)
		return s_n == Element::z();
	const Dyadic dn = d(n);
	const Dyadic half_prev = mul_pow2(d(n - 1), -1);
	const Dyadic zero(0);
	if (s_n.restrict({zero, dn}) != PLMap::linear({zero, dn}, {dn, dn + dn}))
		return false;
	if (dn < half_prev &&
	    s_n.restrict({dn, half_prev}) != PLMap::linear({dn, half_prev}, {dn + dn, d(n - 1)}))
		return false;
	return true;
}

Report verify_chain(const Chain &chain)
{
	Report r;
	if (chain.elements.empty()) {
		r.add("non-empty", false, "chain has no elements");
		return r;
	}
	const Element z = Element::z();
	const Element &s1 = chain.s(1);
	r.add("s_1 = z", s1 == z);
	auto zpow = is_power_of_z(s1);
	r.add("s_1 has infinite order", zpow.has_value() && *zpow != 0,
	      zpow ? "s_1 = z^" + std::to_string(*zpow) : "s_1 is not a power of z");

	bool all_steps = s1 == z;
	for (int n = 2; n <= chain.length(); ++n) {
		const Element &sn = chain.s(n);
		bool ok = power(sn, n) == chain.s(n - 1);
		all_steps = all_steps && ok;
		r.add("s_" + std::to_string(n) + "^" + std::to_string(n) + " = s_" + std::to_string(n - 1), ok,
		      std::to_string(sn.breakpoint_count()) + " breakpoints");
	}
	for (int n = 1; n <= chain.length(); ++n) {
		auto fpf = fixed_point_free(chain.s(n));
		r.add("s_" + std::to_string(n) + " fixed-point free", fpf.free && fpf.sign > 0);
	}
	if (chain.kind == ChainKind::standard) {
		for (int n = 1; n <= chain.length(); ++n) {
			Dyadic v = chain.s(n)(Dyadic(0));
			bool ok = v == d(n) && standard_clauses_hold(chain.s(n), n);
			r.add("s_" + std::to_string(n) + " matches x + d_n and 2x clauses", ok,
			      "s_" + std::to_string(n) + "(0) = " + v.to_string());
		}
	} else if (chain.kind == ChainKind::exotic) {
		for (int n = 1; n <= chain.length(); ++n) {
			Dyadic v = chain.s(n)(Dyadic(0));
			Dyadic want = n == 1 ? Dyadic(1) : Dyadic::normalize(1, 1) + mul_pow2(Dyadic(1), -n);
			r.add("s_" + std::to_string(n) + "(0) = 1/2 + 2^-" + std::to_string(n), v == want,
			      "s_" + std::to_string(n) + "(0) = " + v.to_string());
		}
	}
	const int N = chain.length();
	r.add("contains centre: s_" + std::to_string(N) + "^" + std::to_string(N) + "! = z", all_steps,
	      "derived by telescoping the verified steps, not recomputed");
	return r;
}

std::set<Dyadic> orbit_sample(const Chain &chain, int depth, int levels)
{
	if (depth < 0)
		throw UsageError("orbit depth must be non-negative");
	const int L = std::min(levels, chain.length());
	std::vector<Element> inverses;
	inverses.reserve(L);
	for (int n = 1; n <= L; ++n)
		inverses.push_back(invert(chain.s(n)));

	std::set<Dyadic> seen{Dyadic(0)};
	std::vector<Dyadic> frontier{Dyadic(0)};
	for (int step = 0; step < depth && !frontier.empty(); ++step) {
		std::vector<Dyadic> next;
		for (const Dyadic &x : frontier) {
			for (int n = 1; n <= L; ++n) {
				for (Dyadic y : {chain.s(n)(x), inverses[n - 1](x)}) {
					if (seen.insert(y).second)
						next.push_back(std::move(y));
				}
			}
		}
		frontier = std::move(next);
	}
	return seen;
}

std::vector<Dyadic> orbit_violations(const std::set<Dyadic> &sample)
{
	const Dyadic half = Dyadic::normalize(1, 1);
	std::vector<Dyadic> bad;
	for (const Dyadic &x : sample) {
		Dyadic frac = x - x.floor();
		if (frac.sign() > 0 && frac <= half)
			bad.push_back(x);
	}
	return bad;
}

} // namespace tbar

/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The tbar Authors
 */

#include "tbar/roots.hpp"

#include "tbar/error.hpp"

#include <algorithm>

namespace tbar {

namespace {

void require_positive_fpf(const Element &g)
{
	auto fpf = fixed_point_free(g);
	if (!fpf)
		throw InvariantError("root extraction needs an element without fixed points");
	if (fpf.sign < 0)
		throw InvariantError("root extraction expects positive displacement; invert the element first");
}

void require_order(const Element &g, std::int64_t m)
{
	if (m == 0)
		throw UsageError("order over z must be nonzero");
	if (power(g, m) != Element::z())
		throw InvariantError("g^" + std::to_string(m) + " is not z");
}

} // namespace

RootGerm root_germ(const Element &g, int n, ChoiceSeed choice)
{
	if (n < 2)
		throw UsageError("root degree must be at least 2");
	require_positive_fpf(g);
	Dyadic c = g(Dyadic(0));
	std::vector<Dyadic> partition;
	partition.reserve(n + 1);
	partition.emplace_back(0);
	for (int i = 1; i <= n; ++i)
		partition.push_back(mul_pow2(c, i - n));
	return root_germ(g, std::move(partition), choice);
}

RootGerm root_germ(const Element &g, std::vector<Dyadic> partition, ChoiceSeed choice)
{
	if (partition.size() < 3)
		throw UsageError("root degree must be at least 2");
	require_positive_fpf(g);
	const int n = static_cast<int>(partition.size()) - 1;
	if (!partition.front().is_zero() || partition.back() != g(Dyadic(0)))
		throw UsageError("partition must run from 0 to g(0)");
	for (int i = 1; i <= n; ++i)
		if (!(partition[i - 1] < partition[i]))
			throw UsageError("partition must be strictly increasing");

	RootGerm germ;
	germ.n = n;
	germ.partition = std::move(partition);
	const auto &p = germ.partition;
	germ.pieces.reserve(n);
	for (int i = 1; i < n; ++i)
		germ.pieces.push_back(canonical_map({p[i - 1], p[i]}, {p[i], p[i + 1]}, choice));

	PLMap closing = PLMap::identity({p[n - 1], p[n]});
	for (int i = n - 1; i >= 1; --i)
		closing = compose(invert(germ.pieces[i - 1]), closing);
	closing = compose(g.restrict({p[0], p[1]}), closing);
	germ.pieces.push_back(std::move(closing));
	return germ;
}

std::vector<Dyadic> prescribed_partition(const Dyadic &c, int n, const Dyadic &v)
{
	if (n < 2)
		throw UsageError("root degree must be at least 2");
	if (!(v.sign() > 0 && v < c))
		throw UsageError("prescribed value " + v.to_string() + " must lie strictly between 0 and " +
		                 c.to_string());

	const std::int64_t e = std::max(v.exponent(), c.exponent()) + n;
	const Dyadic gap = c - v;
	mpz_class denom;
	mpz_ui_pow_ui(denom.get_mpz_t(), 2, static_cast<unsigned long>(n - 1));
	denom -= 1;

	std::vector<Dyadic> p;
	p.reserve(n + 1);
	p.emplace_back(0);
	p.push_back(v);
	for (int i = 2; i < n; ++i) {
		mpz_class weight;
		mpz_ui_pow_ui(weight.get_mpz_t(), 2, static_cast<unsigned long>(i - 1));
		weight -= 1;
		mpz_class scaled = gap.numerator() * weight;
		mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(),
		             static_cast<mp_bitcnt_t>(e - gap.exponent()));
		mpz_class q;
		mpz_fdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), denom.get_mpz_t());
		p.push_back(v + Dyadic::normalize(q, e));
	}
	p.push_back(c);
	for (int i = 1; i <= n; ++i)
		if (!(p[i - 1] < p[i]))
			throw InvariantError("prescribed partition is not strictly increasing");
	return p;
}

Dyadic eval_root(const Element &g, const RootGerm &germ, const Dyadic &x)
{
	const Dyadic &c = germ.partition.back();
	Dyadic y = x;
	std::int64_t k = 0;
	while (y >= c) {
		y = g.eval_inverse(y);
		++k;
	}
	while (y.sign() < 0) {
		y = g(y);
		--k;
	}
	// The glued germ is evaluated piece by piece to avoid re-concatenating.
	std::size_t i = 1;
	while (i < germ.partition.size() - 1 && y >= germ.partition[i])
		++i;
	Dyadic r = germ.pieces[i - 1].eval(y);
	for (; k > 0; --k)
		r = g(r);
	for (; k < 0; ++k)
		r = g.eval_inverse(r);
	return r;
}

Element materialize_root(const Element &g, const RootGerm &germ)
{
	const Dyadic one(1);
	std::vector<PLMap> pieces;
	pieces.push_back(germ.glued());
	Dyadic lo = germ.partition.back();
	if (lo < one) {
		const Element g_inv = invert(g);
		while (lo < one) {
			Dyadic hi = g(lo);
			PLMap pulled = compose(pieces.back(), g_inv.restrict({lo, hi}));
			pieces.push_back(compose(g.restrict(pulled.range()), pulled));
			lo = std::move(hi);
		}
	}
	PLMap whole = concat(pieces);
	return Element::from_fundamental(whole.restrict({Dyadic(0), one}));
}

Element nth_root(const Element &g, int n, std::int64_t m, ChoiceSeed choice, RootOptions options)
{
	if (n < 2)
		throw UsageError("root degree must be at least 2");
	if (options.check_order)
		require_order(g, m);
	else if (m == 0)
		throw UsageError("order over z must be nonzero");
	if (m < 0)
		return invert(nth_root(invert(g), n, -m, choice, {.check_order = false}));
	return materialize_root(g, root_germ(g, n, choice));
}

Element nth_root_with_value(const Element &g, int n, std::int64_t m, const Dyadic &v,
                            RootOptions options)
{
	if (n < 2)
		throw UsageError("root degree must be at least 2");
	if (m < 1)
		throw UsageError("prescribed-value roots need a positive order over z");
	if (options.check_order)
		require_order(g, m);
	Dyadic c = g(Dyadic(0));
	return materialize_root(g, root_germ(g, prescribed_partition(c, n, v)));
}

std::optional<std::int64_t> order_over_z(const Element &g, std::int64_t bound)
{
	auto fpf = fixed_point_free(g);
	if (!fpf)
		return std::nullopt;
	const Element base = fpf.sign > 0 ? g : invert(g);
	const Element z = Element::z();
	Element acc = base;
	for (std::int64_t m = 1; m <= bound; ++m) {
		if (acc == z)
			return fpf.sign > 0 ? m : -m;
		if (acc(Dyadic(0)) > Dyadic(1))
			return std::nullopt;
		acc = compose(acc, base);
	}
	return std::nullopt;
}

} // namespace tbar

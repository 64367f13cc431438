/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The tbar Authors
 */

#include "tbar/words.hpp"

#include "tbar/error.hpp"
#include "tbar/qembed.hpp"

#include <charconv>
#include <limits>
#include <unordered_map>

namespace tbar {

namespace {

constexpr std::uint64_t kMaxParsedLetters = std::uint64_t{1} << 24;

Letter inverse_of(Letter l)
{
	return {l.gen, !l.inverse};
}

char letter_char(Letter l)
{
	char c = l.gen == Generator::a ? 'a' : 'b';
	return l.inverse ? static_cast<char>(c - 'a' + 'A') : c;
}

std::uint64_t sat_add(std::uint64_t x, std::uint64_t y)
{
	std::uint64_t r;
	return __builtin_add_overflow(x, y, &r) ? std::numeric_limits<std::uint64_t>::max() : r;
}

std::uint64_t sat_mul(std::uint64_t x, std::uint64_t y)
{
	std::uint64_t r;
	return __builtin_mul_overflow(x, y, &r) ? std::numeric_limits<std::uint64_t>::max() : r;
}

std::uint64_t magnitude(std::int64_t k)
{
	return k < 0 ? -static_cast<std::uint64_t>(k) : static_cast<std::uint64_t>(k);
}

Dyadic dy(std::int64_t num, std::int64_t exp)
{
	return Dyadic::normalize(num, exp);
}

} // namespace

Word::Word(std::span<const Letter> letters)
{
	letters_.reserve(letters.size());
	for (Letter l : letters)
		push(l);
}

void Word::push(Letter l)
{
	if (!letters_.empty() && letters_.back() == inverse_of(l))
		letters_.pop_back();
	else
		letters_.push_back(l);
}

Word Word::letter(Generator g, bool inverse)
{
	Word w;
	w.letters_.push_back({g, inverse});
	return w;
}

Word Word::parse(std::string_view text)
{
	Word w;
	std::size_t pos = 0;
	while (pos < text.size()) {
		if (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' || text[pos] == '\r') {
			++pos;
			continue;
		}
		std::size_t end = text.find_first_of(" \t\r\n", pos);
		std::string_view tok = text.substr(pos, end == std::string_view::npos ? text.npos : end - pos);
		pos = end == std::string_view::npos ? text.size() : end;

		Letter l;
		switch (tok.front()) {
		case 'a': l = {Generator::a, false}; break;
		case 'b': l = {Generator::b, false}; break;
		case 'A': l = {Generator::a, true}; break;
		case 'B': l = {Generator::b, true}; break;
		default: throw ParseError("bad word token \"" + std::string(tok) + "\"");
		}
		std::int64_t k = 1;
		if (tok.size() > 1) {
			if (tok[1] != '^' || tok.size() == 2)
				throw ParseError("bad word token \"" + std::string(tok) + "\"");
			std::string_view digits = tok.substr(2);
			if (digits.front() == '+')
				digits.remove_prefix(1);
			auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
			if (ec != std::errc() || ptr != digits.data() + digits.size())
				throw ParseError("bad exponent in word token \"" + std::string(tok) + "\"");
		}
		if (sat_add(w.size(), magnitude(k)) > kMaxParsedLetters)
			throw ParseError("word too long");
		if (k < 0)
			l = inverse_of(l);
		for (std::uint64_t i = 0; i < magnitude(k); ++i)
			w.push(l);
	}
	return w;
}

Word Word::inverse() const
{
	Word w;
	w.letters_.reserve(letters_.size());
	for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
		w.letters_.push_back(inverse_of(*it));
	return w;
}

Word Word::power(std::int64_t k) const
{
	const Word base = k < 0 ? inverse() : *this;
	if (sat_mul(base.size(), magnitude(k)) > kMaxParsedLetters)
		throw UsageError("word power too long to expand");
	Word w;
	for (std::uint64_t i = 0; i < magnitude(k); ++i)
		for (Letter l : base.letters_)
			w.push(l);
	return w;
}

std::string Word::to_string() const
{
	std::string s;
	s.reserve(letters_.size() * 2);
	for (Letter l : letters_) {
		if (!s.empty())
			s += ' ';
		s += letter_char(l);
	}
	return s;
}

Word operator*(const Word &u, const Word &v)
{
	Word w = u;
	for (Letter l : v.letters_)
		w.push(l);
	return w;
}

Word conjugate(const Word &x, const Word &y)
{
	return y.inverse() * x * y;
}

Word commutator(const Word &x, const Word &y)
{
	return x * y * x.inverse() * y.inverse();
}

const Element &generator_element(Generator g)
{
	static const Element a = Element::from_fundamental(PLMap::from_breakpoints({
	    {dy(0, 0), dy(1, 1)},
	    {dy(3, 2), dy(7, 3)},
	    {dy(7, 3), dy(1, 0)},
	    {dy(1, 0), dy(3, 1)},
	}));
	static const Element b = Element::from_fundamental(PLMap::from_breakpoints({
	    {dy(0, 0), dy(1, 1)},
	    {dy(1, 1), dy(3, 2)},
	    {dy(3, 2), dy(1, 0)},
	    {dy(1, 0), dy(3, 1)},
	}));
	return g == Generator::a ? a : b;
}

namespace {

const Element &letter_element(Letter l)
{
	static const Element a_inv = invert(generator_element(Generator::a));
	static const Element b_inv = invert(generator_element(Generator::b));
	if (!l.inverse)
		return generator_element(l.gen);
	return l.gen == Generator::a ? a_inv : b_inv;
}

Element multiply(const Element &acc, const Element &next, Convention c)
{
	return c == Convention::functional ? compose(acc, next) : compose(next, acc);
}

} // namespace

Element evaluate(const Word &w, Convention convention)
{
	Element acc;
	for (Letter l : w.letters())
		acc = multiply(acc, letter_element(l), convention);
	return acc;
}

struct WordExpr::Node {
	enum class Kind { leaf, product, power } kind = Kind::leaf;
	Word word;
	std::vector<WordExpr> factors;
	std::shared_ptr<const Node> base;
	std::int64_t exponent = 1;
};

WordExpr::WordExpr(Word w)
{
	auto n = std::make_shared<Node>();
	n->word = std::move(w);
	node_ = std::move(n);
}

WordExpr WordExpr::product(std::vector<WordExpr> factors)
{
	auto n = std::make_shared<Node>();
	n->kind = Node::Kind::product;
	n->factors = std::move(factors);
	return WordExpr(std::shared_ptr<const Node>(std::move(n)));
}

WordExpr WordExpr::power(std::int64_t k) const
{
	if (k == 1)
		return *this;
	if (k == 0)
		return WordExpr(Word());
	auto n = std::make_shared<Node>();
	n->kind = Node::Kind::power;
	n->base = node_;
	n->exponent = k;
	return WordExpr(std::shared_ptr<const Node>(std::move(n)));
}

namespace {

std::uint64_t bound_of(const WordExpr::Node &n)
{
	using Kind = WordExpr::Node::Kind;
	switch (n.kind) {
	case Kind::leaf:
		return n.word.size();
	case Kind::product: {
		std::uint64_t s = 0;
		for (const WordExpr &f : n.factors)
			s = sat_add(s, f.letter_bound());
		return s;
	}
	case Kind::power:
		return sat_mul(bound_of(*n.base), magnitude(n.exponent));
	}
	return 0;
}

} // namespace

std::uint64_t WordExpr::letter_bound() const
{
	return bound_of(*node_);
}

Word WordExpr::flatten(std::uint64_t max_letters) const
{
	if (letter_bound() > max_letters)
		throw UsageError("word expansion has more than " + std::to_string(max_letters) + " letters");

	std::vector<Letter> out;
	out.reserve(letter_bound());
	auto push = [&](Letter l) {
		if (!out.empty() && out.back() == inverse_of(l))
			out.pop_back();
		else
			out.push_back(l);
	};
	auto emit = [&](auto &self, const Node &n, bool inv) -> void {
		switch (n.kind) {
		case Node::Kind::leaf: {
			auto ls = n.word.letters();
			if (!inv)
				for (Letter l : ls)
					push(l);
			else
				for (auto it = ls.rbegin(); it != ls.rend(); ++it)
					push(inverse_of(*it));
			break;
		}
		case Node::Kind::product:
			if (!inv)
				for (const WordExpr &f : n.factors)
					self(self, *f.node_, false);
			else
				for (auto it = n.factors.rbegin(); it != n.factors.rend(); ++it)
					self(self, *it->node_, true);
			break;
		case Node::Kind::power:
			for (std::uint64_t i = 0; i < magnitude(n.exponent); ++i)
				self(self, *n.base, inv != (n.exponent < 0));
			break;
		}
	};
	emit(emit, *node_, false);
	return Word(out);
}

WordExpr conjugate(const WordExpr &x, const WordExpr &y)
{
	return WordExpr::product({y.inverse(), x, y});
}

WordExpr commutator(const WordExpr &x, const WordExpr &y)
{
	return WordExpr::product({x, y, x.inverse(), y.inverse()});
}

Element evaluate(const WordExpr &w, Convention convention)
{
	using Node = WordExpr::Node;
	std::unordered_map<const Node *, Element> memo;
	auto eval = [&](auto &self, const Node &n) -> Element {
		if (auto it = memo.find(&n); it != memo.end())
			return it->second;
		Element r;
		switch (n.kind) {
		case Node::Kind::leaf:
			r = evaluate(n.word, convention);
			break;
		case Node::Kind::product:
			for (const WordExpr &f : n.factors)
				r = multiply(r, self(self, *f.node_), convention);
			break;
		case Node::Kind::power:
			r = tbar::power(self(self, *n.base), n.exponent);
			break;
		}
		memo.emplace(&n, r);
		return r;
	};
	return eval(eval, *w.node_);
}

std::vector<Relation> presentation_relations()
{
	Word a = Word::letter(Generator::a), b = Word::letter(Generator::b);
	Word bab = b * a * b;
	return {
	    {"a^4 = b^3", a.power(4), b.power(3)},
	    {"(ba)^5 = b^9", (b * a).power(5), b.power(9)},
	    {"[bab, a^2baba^2] = 1", commutator(bab, Word::parse("a a b a b a a")), Word()},
	    {"[bab, a^2b^2a^2baba^2ba^2] = 1",
	     commutator(bab, Word::parse("a a b b a a b a b a a b a a")), Word()},
	};
}

Report check_relations(std::span<const Relation> relations, Convention convention)
{
	Report r;
	for (const Relation &rel : relations) {
		Element lhs = evaluate(rel.lhs, convention);
		Element rhs = evaluate(rel.rhs, convention);
		r.add(rel.name, lhs == rhs,
		      "lhs has " + std::to_string(lhs.breakpoint_count()) + " breakpoints on [0,1]");
	}
	return r;
}

Report relator_report(Convention convention)
{
	Report r = check_relations(presentation_relations(), convention);
	const Element z = Element::z();
	r.add("b^3 = z", evaluate(Word::parse("b^3"), convention) == z);
	r.add("a^4 = z", evaluate(Word::parse("a^4"), convention) == z);
	return r;
}

Word named(Named which)
{
	switch (which) {
	case Named::p:
		return Word::parse("A b");
	case Named::q:
		return Word::parse("A b a a B");
	case Named::r:
		return Word::parse("B a b a a B A B A b A b");
	}
	return {};
}

Element r_table()
{
	return Element::from_fundamental(PLMap::from_breakpoints({
	    {dy(0, 0), dy(0, 0)},
	    {dy(1, 2), dy(1, 2)},
	    {dy(1, 1), dy(3, 3)},
	    {dy(5, 3), dy(5, 3)},
	    {dy(1, 0), dy(1, 0)},
	}));
}

Report named_report(Convention convention)
{
	Report r;
	const Dyadic zero(0);
	Element p = evaluate(named(Named::p), convention);
	Interval half(zero, dy(1, 1));
	PLMap p_half = p.restrict(half);
	r.add("p = a^-1 b is the identity on [0,1/2]", p_half == PLMap::identity(half),
	      std::to_string(p_half.segment_count()) + " segment(s) on [0,1/2]");
	Element q = evaluate(named(Named::q), convention);
	Interval src(zero, dy(3, 3)), dst(zero, dy(3, 2));
	r.add("q = a^-1 b a^2 b^-1 maps [0,3/8] linearly onto [0,3/4]", q.restrict(src) == PLMap::linear(src, dst));
	r.add("r = b^-1 a b a^2 (ab)^-2 b a^-1 b equals its table", evaluate(named(Named::r), convention) == r_table());
	return r;
}

Word t_word(int n)
{
	if (n < 3)
		throw UsageError("t_n is defined for n >= 3");
	Word t = Word::parse("b b a B A B A b");
	const Word p = named(Named::p), q = named(Named::q), r = named(Named::r);
	for (int k = 4; k <= n; ++k) {
		Word left = conjugate(t, q.power(k - 2));
		Word right = conjugate(r, p.power(k - 4) * q.power(static_cast<std::int64_t>(k) * (k - 3) / 2));
		t = left * right;
	}
	return t;
}

Report t_clause_report(const Element &t_n, int n)
{
	if (n < 3)
		throw UsageError("t_n is defined for n >= 3");
	Report r;
	const Dyadic zero(0), one(1);
	const Dyadic dp = d(n - 1), dn = d(n);
	const Dyadic half_dp = mul_pow2(dp, -1), half_dn = mul_pow2(dn, -1);
	const std::string tag = "t_" + std::to_string(n) + " ";

	Interval left(zero, half_dp), right(half_dp, dp), next(dp, dp + dn), rest(dp + dn, one);
	r.add(tag + "maps [0, d_{n-1}/2] linearly onto [0, d_{n-1}]",
	      t_n.restrict(left) == PLMap::linear(left, {zero, dp}));
	r.add(tag + "maps [d_{n-1}/2, d_{n-1}] linearly onto [d_{n-1}, d_{n-1} + d_n/2]",
	      t_n.restrict(right) == PLMap::linear(right, {dp, dp + half_dn}));
	r.add(tag + "maps [d_{n-1}, d_{n-1} + d_n] linearly onto [d_{n-1} + d_n/2, d_{n-1} + d_n]",
	      t_n.restrict(next) == PLMap::linear(next, {dp + half_dn, dp + dn}));
	r.add(tag + "is the identity on [d_{n-1} + d_n, 1]", t_n.restrict(rest) == PLMap::identity(rest));
	return r;
}

WordExpr s_expr(int n, SForm form)
{
	switch (n) {
	case 1:
		return Word::parse("b b b");
	case 2:
		return Word::parse("b a a B");
	case 3:
		return Word::parse("B a b A A b a b A B");
	default:
		break;
	}
	if (n < 1)
		throw UsageError("s_n is defined for n >= 1");
	if (form == SForm::product && n > 5)
		throw UsageError("the product form of s_n is only built for n <= 5");

	const WordExpr t = t_word(n);
	const WordExpr s = s_expr(n - 1, form);
	const std::int64_t count = factorial(n - 1);
	const WordExpr correction = commutator(t, conjugate(t, s));

	if (form == SForm::closed)
		return WordExpr::product({correction, s_expr(1, form), (s.inverse() * t).power(count)});

	std::vector<WordExpr> factors;
	factors.reserve(static_cast<std::size_t>(count) + 1);
	factors.push_back(correction);
	for (std::int64_t j = count - 1; j >= 1; --j)
		factors.push_back(conjugate(t, s.power(-j)));
	factors.push_back(t);
	return WordExpr::product(std::move(factors));
}

Word s_word(int n, SForm form, std::uint64_t max_letters)
{
	return s_expr(n, form).flatten(max_letters);
}

} // namespace tbar

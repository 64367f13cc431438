/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The tbar Authors
 */

#pragma once

#include "tbar/element.hpp"
#include "tbar/report.hpp"

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tbar {

enum class Generator : std::uint8_t { a, b };

struct Letter {
	Generator gen = Generator::a;
	bool inverse = false;

	friend bool operator==(const Letter &, const Letter &) = default;
};

/*
 * Freely reduced word over {a, b}.
 *
 * Text form: whitespace-separated tokens a, b, A, B (upper case is the
 * inverse), each optionally followed by ^k with k a signed integer, e.g.
 * "b a^2 B" or "a^-3". to_string() writes one letter per token.
 */
class Word {
public:
	Word() = default;
	explicit Word(std::span<const Letter> letters);

	static Word parse(std::string_view text);
	static Word letter(Generator g, bool inverse = false);

	std::span<const Letter> letters() const noexcept { return letters_; }
	std::size_t size() const noexcept { return letters_.size(); }
	bool empty() const noexcept { return letters_.empty(); }

	Word inverse() const;
	Word power(std::int64_t k) const;
	std::string to_string() const;

	friend Word operator*(const Word &u, const Word &v);
	friend bool operator==(const Word &, const Word &) = default;

private:
	void push(Letter l);

	std::vector<Letter> letters_;
};

/// y^{-1} x y
Word conjugate(const Word &x, const Word &y);
/// x y x^{-1} y^{-1}
Word commutator(const Word &x, const Word &y);

/*
 * How a product of two words acts. With `functional`, the word xy is the
 * map x after y (apply y first). This is the convention under which the
 * named elements and t_n match their tabulated descriptions; `flipped`
 * reads words left to right instead.
 */
enum class Convention { functional, flipped };

/// The generator tables on [0, 1].
const Element &generator_element(Generator g);

Element evaluate(const Word &w, Convention convention = Convention::functional);

/*
 * Structured word: products, powers and inverses of words kept as a tree,
 * so that words with factorially many letters can be evaluated by binary
 * powering and shared sub-expressions are evaluated once.
 */
class WordExpr {
public:
	WordExpr(Word w);

	static WordExpr product(std::vector<WordExpr> factors);

	WordExpr inverse() const { return power(-1); }
	WordExpr power(std::int64_t k) const;

	friend WordExpr operator*(const WordExpr &u, const WordExpr &v) { return product({u, v}); }

	/// Length of the unreduced expansion, saturating at UINT64_MAX.
	std::uint64_t letter_bound() const;

	/// Freely reduced expansion; UsageError if letter_bound() exceeds
	/// max_letters.
	Word flatten(std::uint64_t max_letters = std::uint64_t{1} << 24) const;

	struct Node;

private:
	explicit WordExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
	friend Element evaluate(const WordExpr &, Convention);

	std::shared_ptr<const Node> node_;
};

WordExpr conjugate(const WordExpr &x, const WordExpr &y);
WordExpr commutator(const WordExpr &x, const WordExpr &y);

Element evaluate(const WordExpr &w, Convention convention = Convention::functional);

struct Relation {
	std::string name;
	Word lhs;
	Word rhs;
};

/// a^4 = b^3, (ba)^5 = b^9, [bab, a^2baba^2] = 1, [bab, a^2b^2a^2baba^2ba^2] = 1.
std::vector<Relation> presentation_relations();

Report check_relations(std::span<const Relation> relations, Convention convention = Convention::functional);

/// The four defining relations plus b^3 = z and a^4 = z.
Report relator_report(Convention convention = Convention::functional);

enum class Named { p, q, r };

/// p = a^-1 b, q = a^-1 b a^2 b^-1, r = b^-1 a b a^2 (ab)^-2 b a^-1 b.
Word named(Named which);

/// r's tabulated values on [0, 1].
Element r_table();

/// p is the identity on [0, 1/2]; q maps [0, 3/8] linearly onto [0, 3/4];
/// r evaluates to its table.
Report named_report(Convention convention = Convention::functional);

/// t_3 = b^2 a (ab)^-2 b; t_n = (t_{n-1} <| q^{n-2}) (r <| p^{n-4} q^{n(n-3)/2}).
/// UsageError for n < 3.
Word t_word(int n);

/// The four-clause description of t_n on [0, 1].
Report t_clause_report(const Element &t_n, int n);

enum class SForm { product, closed };

/*
 * Word for s_n: s_1 = b^3, s_2 = b a^2 b^-1, s_3 = b^-1 a b a^-2 b a b a^-1 b^-1
 * and for n >= 4, with t = t_n and s = s_{n-1},
 *
 *   product: [t, t <| s] (t <| s^{1-(n-1)!}) ... (t <| s^{-1}) t   (n <= 5)
 *   closed:  [t, t <| s] s_1 (s^{-1} t)^{(n-1)!}
 */
WordExpr s_expr(int n, SForm form);

/// Flattened s_expr.
Word s_word(int n, SForm form, std::uint64_t max_letters = std::uint64_t{1} << 24);

} // namespace tbar

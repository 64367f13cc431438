/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The tbar Authors
 */

#include "tbar/cli.hpp"

#include "tbar/error.hpp"
#include "tbar/json.hpp"
#include "tbar/qembed.hpp"
#include "tbar/roots.hpp"
#include "tbar/words.hpp"

#include <CLI11.hpp>

#include <optional>
#include <vector>

namespace tbar::cli {

namespace {

enum class Format { text, json };

struct Common {
	Format format = Format::text;
	Convention convention = Convention::functional;
	bool inject_fault = false;
};

void add_format(CLI::App *cmd, Common &c)
{
	cmd->add_option("--format", c.format, "Output format")
	    ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"text", Format::text},
	                                                                      {"json", Format::json}})
	                    .description(""))
	    ->option_text("text|json");
}

void add_convention(CLI::App *cmd, Common &c)
{
	cmd->add_option("--convention", c.convention, "How a product xy acts (default: x after y)")
	    ->transform(CLI::CheckedTransformer(std::map<std::string, Convention>{
	                    {"default", Convention::functional}, {"flipped", Convention::flipped}})
	                    .description(""))
	    ->option_text("default|flipped");
}

void add_fault(CLI::App *cmd, Common &c)
{
	// Test hook: corrupt the input so that a named check must fail.
	cmd->add_flag("--inject-fault", c.inject_fault)->group("");
}

void print_report(std::ostream &out, const Report &r)
{
	std::size_t failed = 0;
	for (const Check &c : r.checks()) {
		out << (c.pass ? "PASS  " : "FAIL  ") << c.name;
		if (!c.detail.empty())
			out << "  (" << c.detail << ')';
		out << '\n';
		failed += c.pass ? 0 : 1;
	}
	if (failed == 0)
		out << "all " << r.checks().size() << " checks passed\n";
	else
		out << failed << " of " << r.checks().size() << " checks failed\n";
}

int finish(std::ostream &out, const Common &c, const Report &r, json extra = json::object())
{
	if (c.format == Format::json) {
		json j = std::move(extra);
		j["report"] = to_json(r);
		out << j.dump(2) << '\n';
	} else
		print_report(out, r);
	return r.pass() ? kOk : kVerificationFailed;
}

int cmd_relators(std::ostream &out, const Common &c)
{
	auto relations = presentation_relations();
	if (c.inject_fault)
		relations.front() = {"a^5 = b^3", Word::parse("a^5"), Word::parse("b^3")};
	Report r = check_relations(relations, c.convention);
	const Element z = Element::z();
	r.add("b^3 = z", evaluate(Word::parse("b^3"), c.convention) == z);
	r.add("a^4 = z", evaluate(Word::parse("a^4"), c.convention) == z);
	return finish(out, c, r, {{"command", "relators"}});
}

struct ChainArgs {
	std::string kind = "standard";
	int n = 0;
	bool verify = false;
	bool emit = false;
};

int cmd_chain(std::ostream &out, const Common &c, const ChainArgs &a)
{
	ChainKind kind = parse_chain_kind(a.kind);
	if (kind == ChainKind::custom)
		throw UsageError("--kind must be standard or exotic");
	Chain chain = kind == ChainKind::standard ? standard_chain(a.n) : exotic_chain(a.n);
	if (c.inject_fault) {
		if (chain.length() >= 2)
			chain.elements[1] = Element::z();
		else
			chain.elements[0] = Element();
	}

	json j{{"command", "chain"}, {"kind", a.kind}, {"n", a.n}};
	Report r;
	if (a.verify)
		r = verify_chain(chain);
	if (c.format == Format::json) {
		if (a.emit)
			j["chain"] = to_json(chain);
		if (a.verify)
			j["report"] = to_json(r);
		out << j.dump(2) << '\n';
	} else {
		out << a.kind << " chain s_1 .. s_" << a.n << '\n';
		for (int n = 1; n <= chain.length(); ++n)
			out << "  s_" << n << "(0) = " << chain.s(n)(Dyadic(0)) << ", " << chain.s(n).breakpoint_count()
			    << " breakpoints on [0,1]\n";
		if (a.emit)
			out << to_json(chain).dump() << '\n';
		if (a.verify)
			print_report(out, r);
	}
	return r.pass() ? kOk : kVerificationFailed;
}

struct WordsArgs {
	int n = 0;
	bool compare_geometric = false;
	bool both_forms = false;
};

int cmd_words(std::ostream &out, const Common &c, const WordsArgs &a)
{
	if (a.n < 1)
		throw UsageError("--n must be at least 1");
	if (a.both_forms && a.n > 5)
		throw UsageError("--both-forms needs n <= 5");
	Report r;
	const std::string sn = "s_" + std::to_string(a.n);
	WordExpr closed = s_expr(a.n, SForm::closed);
	Element s = evaluate(closed, c.convention);
	if (c.inject_fault)
		s = compose(s, Element::z());
	r.add(sn + " word is fixed-point free", fixed_point_free(s).sign > 0,
	      "closed form expands to at most " + std::to_string(closed.letter_bound()) + " letters");
	if (a.n >= 2) {
		Element prev = evaluate(s_expr(a.n - 1, SForm::closed), c.convention);
		r.add(sn + "^" + std::to_string(a.n) + " = s_" + std::to_string(a.n - 1) + " (words)",
		      power(s, a.n) == prev);
	}
	if (a.both_forms)
		r.add(sn + " product form = closed form", evaluate(s_expr(a.n, SForm::product), c.convention) == s);
	if (a.compare_geometric) {
		Chain chain = standard_chain(a.n);
		r.add(sn + " word = geometric root", chain.s(a.n) == s);
	}
	return finish(out, c, r, {{"command", "words"}, {"n", a.n}});
}

int cmd_tn(std::ostream &out, const Common &c, int n)
{
	Word t = t_word(n);
	Element e = evaluate(t, c.convention);
	if (c.inject_fault)
		e = compose(e, generator_element(Generator::a));
	Report r = t_clause_report(e, n);
	return finish(out, c, r, {{"command", "tn"}, {"n", n}, {"letters", t.size()}});
}

struct RootArgs {
	int n = 2;
	std::optional<std::uint64_t> seed;
	std::optional<std::string> value;
	int of_chain = 1;
	std::optional<std::string> of_word;
};

int cmd_root(std::ostream &out, const Common &c, const RootArgs &a)
{
	if (a.n < 2)
		throw UsageError("--n must be at least 2");
	Element g;
	std::int64_t m = 1;
	std::string source;
	if (a.of_word) {
		g = evaluate(Word::parse(*a.of_word), c.convention);
		auto found = order_over_z(g);
		if (!found)
			throw UsageError("no power g^m = z with |m| <= 64 for the given word");
		m = *found;
		source = "word \"" + *a.of_word + "\"";
	} else {
		if (a.of_chain < 1)
			throw UsageError("--of-chain must be at least 1");
		g = standard_chain(a.of_chain).s(a.of_chain);
		m = factorial(a.of_chain);
		source = "s_" + std::to_string(a.of_chain);
	}

	Element f;
	std::optional<Dyadic> value;
	if (a.value) {
		value = Dyadic::parse(*a.value);
		f = nth_root_with_value(g, a.n, m, *value);
	} else
		f = nth_root(g, a.n, m, {a.seed.value_or(0)});
	if (c.inject_fault)
		f = compose(f, Element::z());

	Report r;
	r.add("f^" + std::to_string(a.n) + " = " + source, power(f, a.n) == g,
	      std::to_string(f.breakpoint_count()) + " breakpoints on [0,1], g^" + std::to_string(m) + " = z");
	const Element z = Element::z();
	r.add("f commutes with z", compose(f, z) == compose(z, f));
	if (value)
		r.add("f(0) = " + value->to_string(), f(Dyadic(0)) == *value);
	return finish(out, c, r, {{"command", "root"}, {"n", a.n}, {"root", to_json(f)}});
}

struct OrbitArgs {
	std::string kind = "exotic";
	int depth = 0;
	int levels = 4;
	int n = 4;
};

int cmd_orbit(std::ostream &out, const Common &c, const OrbitArgs &a)
{
	ChainKind kind = parse_chain_kind(a.kind);
	if (kind == ChainKind::custom)
		throw UsageError("--kind must be standard or exotic");
	if (a.depth < 0 || a.levels < 1 || a.n < 1)
		throw UsageError("--depth must be >= 0, --levels and --n >= 1");
	Chain chain = kind == ChainKind::standard ? standard_chain(a.n) : exotic_chain(a.n);
	if (c.inject_fault)
		chain.elements[0] = Element::translation(Dyadic::normalize(1, 2));
	auto sample = orbit_sample(chain, a.depth, a.levels);

	Report r;
	const int levels = std::min(a.levels, chain.length());
	if (kind == ChainKind::exotic) {
		auto bad = orbit_violations(sample);
		r.add("orbit of 0 avoids (0,1/2] mod 1", bad.empty(),
		      std::to_string(sample.size()) + " points" +
		          (bad.empty() ? std::string() : ", first offender " + bad.front().to_string()));
	} else if (a.depth >= 1) {
		for (int n = 1; n <= levels; ++n)
			r.add("d_" + std::to_string(n) + " = " + d(n).to_string() + " in orbit", sample.count(d(n)) == 1);
	}
	json j{{"command", "orbit"}, {"kind", a.kind}, {"depth", a.depth}, {"levels", levels},
	       {"points", sample.size()}};
	return finish(out, c, r, std::move(j));
}

int cmd_eval(std::ostream &out, const Common &c, const std::string &word, const std::string &at)
{
	Dyadic x = Dyadic::parse(at);
	Element e = evaluate(Word::parse(word), c.convention);
	Dyadic y = e(x);
	if (c.format == Format::json)
		out << json{{"command", "eval"}, {"word", Word::parse(word).to_string()}, {"at", x.to_string()},
		            {"value", y.to_string()}}
		           .dump(2)
		    << '\n';
	else
		out << y << '\n';
	return kOk;
}

} // namespace

int run(std::span<const std::string> args, std::ostream &out, std::ostream &err)
{
	CLI::App app{"Exact computations in the group T-bar of lifts of Thompson's group T", "tbar"};
	app.require_subcommand(1);

	Common common;

	auto *relators = app.add_subcommand("relators", "Check the defining relators of the presentation");
	add_format(relators, common);
	add_convention(relators, common);
	add_fault(relators, common);

	ChainArgs chain_args;
	auto *chain = app.add_subcommand("chain", "Build a chain s_1 = z, s_n^n = s_{n-1}");
	chain->add_option("--kind", chain_args.kind, "standard or exotic")
	    ->check(CLI::IsMember({"standard", "exotic"}));
	chain->add_option("--n", chain_args.n, "Chain length")->required()->check(CLI::Range(1, 20));
	chain->add_flag("--verify", chain_args.verify, "Verify every chain invariant");
	chain->add_flag("--emit", chain_args.emit, "Print the chain elements");
	add_format(chain, common);
	add_fault(chain, common);

	WordsArgs words_args;
	auto *words = app.add_subcommand("words", "Evaluate the s_n words");
	words->add_option("--n", words_args.n, "Index n")->required()->check(CLI::Range(1, 20));
	words->add_flag("--compare-geometric", words_args.compare_geometric, "Compare with the geometric s_n");
	words->add_flag("--both-forms", words_args.both_forms, "Compare product and closed forms (n <= 5)");
	add_format(words, common);
	add_convention(words, common);
	add_fault(words, common);

	int tn_n = 0;
	auto *tn = app.add_subcommand("tn", "Check the four-clause description of t_n");
	tn->add_option("--n", tn_n, "Index n >= 3")->required()->check(CLI::Range(3, 64));
	add_format(tn, common);
	add_convention(tn, common);
	add_fault(tn, common);

	RootArgs root_args;
	std::uint64_t seed = 0;
	std::string value;
	auto *root = app.add_subcommand("root", "Extract an n-th root and verify its power");
	root->add_option("--n", root_args.n, "Root degree")->required()->check(CLI::Range(2, 64));
	auto *seed_opt = root->add_option("--seed", seed, "Choice seed");
	auto *value_opt = root->add_option("--value", value, "Prescribed f(0) (dyadic)");
	seed_opt->excludes(value_opt);
	auto *chain_opt = root->add_option("--of-chain", root_args.of_chain, "Take the root of standard s_M")
	                      ->check(CLI::Range(1, 10));
	std::string of_word;
	auto *word_opt = root->add_option("--of-word", of_word, "Take the root of a word with g^m = z");
	chain_opt->excludes(word_opt);
	add_format(root, common);
	add_convention(root, common);
	add_fault(root, common);

	OrbitArgs orbit_args;
	auto *orbit = app.add_subcommand("orbit", "Sample the orbit of 0 under a chain");
	orbit->add_option("--kind", orbit_args.kind, "standard or exotic")
	    ->check(CLI::IsMember({"standard", "exotic"}));
	orbit->add_option("--depth", orbit_args.depth, "Word length")->required()->check(CLI::Range(0, 32));
	orbit->add_option("--levels", orbit_args.levels, "Use s_1 .. s_levels")->check(CLI::Range(1, 20));
	orbit->add_option("--n", orbit_args.n, "Chain length to build")->check(CLI::Range(1, 10));
	add_format(orbit, common);
	add_fault(orbit, common);

	std::string eval_word, eval_at;
	auto *eval = app.add_subcommand("eval", "Evaluate a word at a dyadic point");
	eval->add_option("--word", eval_word, "Word, e.g. \"b a^2 B\"")->required();
	eval->add_option("--at", eval_at, "Dyadic point, e.g. 3/8")->required();
	add_format(eval, common);
	add_convention(eval, common);

	std::vector<std::string> reversed(args.rbegin(), args.rend());
	try {
		app.parse(reversed);
	} catch (const CLI::CallForHelp &e) {
		out << app.help();
		return kOk;
	} catch (const CLI::CallForAllHelp &e) {
		out << app.help("", CLI::AppFormatMode::All);
		return kOk;
	} catch (const CLI::ParseError &e) {
		err << "error: " << e.what() << '\n';
		if (auto *sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front())
			err << sub->help();
		return kUsage;
	}

	try {
		if (relators->parsed())
			return cmd_relators(out, common);
		if (chain->parsed())
			return cmd_chain(out, common, chain_args);
		if (words->parsed())
			return cmd_words(out, common, words_args);
		if (tn->parsed())
			return cmd_tn(out, common, tn_n);
		if (root->parsed()) {
			if (*seed_opt)
				root_args.seed = seed;
			if (*value_opt)
				root_args.value = value;
			if (*word_opt)
				root_args.of_word = of_word;
			return cmd_root(out, common, root_args);
		}
		if (orbit->parsed())
			return cmd_orbit(out, common, orbit_args);
		if (eval->parsed())
			return cmd_eval(out, common, eval_word, eval_at);
	} catch (const Error &e) {
		err << "error: " << e.what() << '\n';
		return kUsage;
	}
	return kUsage;
}

} // namespace tbar::cli

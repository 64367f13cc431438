/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The tbar Authors
 */

#include "tbar/json.hpp"

#include "tbar/error.hpp"

namespace tbar {

namespace {

json breakpoints_json(const PLMap &f)
{
	json pts = json::array();
	for (const Breakpoint &p : f.breakpoints())
		pts.push_back(json::array({p.x.to_string(), p.y.to_string()}));
	return pts;
}

std::vector<Breakpoint> breakpoints_from(const json &j)
{
	if (!j.is_array())
		throw ParseError("breakpoints must be an array");
	std::vector<Breakpoint> pts;
	pts.reserve(j.size());
	for (const json &p : j) {
		if (!p.is_array() || p.size() != 2)
			throw ParseError("breakpoint must be a [x, y] pair");
		pts.push_back({dyadic_from_json(p[0]), dyadic_from_json(p[1])});
	}
	return pts;
}

const json &field(const json &j, const char *key)
{
	if (!j.is_object() || !j.contains(key))
		throw ParseError(std::string("missing field \"") + key + "\"");
	return j.at(key);
}

} // namespace

json to_json(const Dyadic &x)
{
	return x.to_string();
}

json to_json(const PLMap &f)
{
	json j;
	j["domain"] = json::array({f.domain().lo().to_string(), f.domain().hi().to_string()});
	j["breakpoints"] = breakpoints_json(f);
	return j;
}

json to_json(const Element &e)
{
	json j;
	j["type"] = "tbar";
	j["breakpoints"] = breakpoints_json(e.fundamental());
	return j;
}

json to_json(const RootGerm &germ)
{
	json j;
	j["n"] = germ.n;
	json part = json::array();
	for (const Dyadic &p : germ.partition)
		part.push_back(p.to_string());
	j["partition"] = std::move(part);
	json pieces = json::array();
	for (const PLMap &f : germ.pieces)
		pieces.push_back(to_json(f));
	j["pieces"] = std::move(pieces);
	return j;
}

json to_json(const Chain &chain)
{
	json j;
	j["kind"] = std::string(to_string(chain.kind));
	json els = json::array();
	for (const Element &e : chain.elements)
		els.push_back(to_json(e));
	j["elements"] = std::move(els);
	return j;
}

json to_json(const Report &report)
{
	json j;
	j["pass"] = report.pass();
	json checks = json::array();
	for (const Check &c : report.checks())
		checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
	j["checks"] = std::move(checks);
	return j;
}

json to_json(const Word &w)
{
	json j = json::array();
	for (Letter l : w.letters()) {
		char c = l.gen == Generator::a ? 'a' : 'b';
		if (l.inverse)
			c = static_cast<char>(c - 'a' + 'A');
		j.push_back(std::string(1, c));
	}
	return j;
}

Dyadic dyadic_from_json(const json &j)
{
	if (!j.is_string())
		throw ParseError("dyadic values must be JSON strings");
	return Dyadic::parse(j.get<std::string>());
}

PLMap plmap_from_json(const json &j)
{
	const json &dom = field(j, "domain");
	if (!dom.is_array() || dom.size() != 2)
		throw ParseError("domain must be a [lo, hi] pair");
	PLMap f = PLMap::from_breakpoints(breakpoints_from(field(j, "breakpoints")));
	if (f.domain() != Interval(dyadic_from_json(dom[0]), dyadic_from_json(dom[1])))
		throw InvariantError("domain does not match the breakpoint list");
	return f;
}

Element element_from_json(const json &j)
{
	const json &type = field(j, "type");
	if (type != "tbar")
		throw ParseError("element type must be \"tbar\"");
	return Element::from_fundamental(PLMap::from_breakpoints(breakpoints_from(field(j, "breakpoints"))));
}

RootGerm root_germ_from_json(const json &j)
{
	RootGerm g;
	const json &n = field(j, "n");
	if (!n.is_number_integer())
		throw ParseError("n must be an integer");
	g.n = n.get<int>();
	for (const json &p : field(j, "partition"))
		g.partition.push_back(dyadic_from_json(p));
	for (const json &f : field(j, "pieces"))
		g.pieces.push_back(plmap_from_json(f));
	if (g.n < 2 || g.partition.size() != static_cast<std::size_t>(g.n) + 1 ||
	    g.pieces.size() != static_cast<std::size_t>(g.n))
		throw ParseError("root germ sizes do not match n");
	return g;
}

Chain chain_from_json(const json &j)
{
	Chain c;
	const json &kind = field(j, "kind");
	if (!kind.is_string())
		throw ParseError("kind must be a string");
	try {
		c.kind = parse_chain_kind(kind.get<std::string>());
	} catch (const UsageError &e) {
		throw ParseError(e.what());
	}
	for (const json &e : field(j, "elements"))
		c.elements.push_back(element_from_json(e));
	return c;
}

Word word_from_json(const json &j)
{
	if (!j.is_array())
		throw ParseError("word must be an array of letters");
	std::string text;
	for (const json &t : j) {
		if (!t.is_string())
			throw ParseError("word letters must be strings");
		const std::string &s = t.get_ref<const std::string &>();
		if (s != "a" && s != "b" && s != "A" && s != "B")
			throw ParseError("bad word letter \"" + s + "\"");
		text += s;
		text += ' ';
	}
	return Word::parse(text);
}

} // namespace tbar

#include "hopf/catalog.hpp"

#include <algorithm>
#include <cctype>

#include "hopf/errors.hpp"

namespace hopf {

namespace {

std::vector<GeneratorInfo> gens3(bool bideg)
{
	if (bideg)
		return {{"X", 1, {{1, 0}}}, {"Y", 1, {{0, 1}}}, {"Z", 2, {{1, 1}}}};
	return {{"X", 1, {}}, {"Y", 1, {}}, {"Z", 2, {}}};
}

std::vector<GeneratorInfo> gens4(std::optional<std::array<int, 2>> w_bideg)
{
	if (w_bideg)
		return {{"X", 1, {{1, 0}}}, {"Y", 1, {{0, 1}}}, {"Z", 2, {{1, 1}}}, {"W", 3, w_bideg}};
	return {{"X", 1, {}}, {"Y", 1, {}}, {"Z", 2, {}}, {"W", 3, {}}};
}

// Elements of the free commutative algebra on the same generators; PBW
// monomials have the same coordinates in every presentation on these names.
struct Free {
	OrePresentation p;
	explicit Free(std::vector<GeneratorInfo> g) : p(std::move(g), {}) {}
	Element operator()(const std::string& expr) const { return p.parse(expr); }
};

TensorElement pair(const Element& a, const Element& b) { return TensorElement::product({a, b}); }

TensorElement delta_z(const Free& f) { return pair(f("X"), f("Y")) - pair(f("Y"), f("X")); }

TensorElement u_form(const Free& f)
{
	return pair(f("Z"), f("X")) - pair(f("X"), f("Z")) + pair(f("X"), f("X*Y")) + pair(f("X*Y"), f("X"));
}

TensorElement t_form(const Free& f)
{
	return pair(f("Y"), f("Z")) - pair(f("Z"), f("Y")) + pair(f("X*Y"), f("Y")) + pair(f("Y"), f("X*Y"));
}

OrePresentation::CommutatorTable table(const OrePresentation& p,
                                       const std::vector<std::pair<std::string, Element>>& rels)
{
	OrePresentation::CommutatorTable t;
	for (const auto& [key, value] : rels) {
		auto comma = key.find(',');
		size_t j = p.require_index(key.substr(0, comma));
		size_t i = p.require_index(key.substr(comma + 1));
		if (!value.is_zero())
			t[{j, i}] = value;
	}
	return t;
}

void warn(Warnings* w, std::string text)
{
	if (w)
		w->push_back(std::move(text));
}

bool is01(const Scalar& s) { return s.is_zero() || s.is_one(); }

void require(bool ok, const std::string& what)
{
	if (!ok)
		throw ParameterError(what);
}

std::string lower(std::string s)
{
	std::string out;
	for (char c : s)
		if (c != '-' && c != '_')
			out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
	return out;
}

} // namespace

HopfPresentation make_A(const Scalar& l1, const Scalar& l2, const Scalar& alpha, Warnings* w)
{
	if (l1 != l2 ? !alpha.is_zero() : !is01(alpha))
		warn(w, "A(" + l1.str() + "," + l2.str() + "," + alpha.str() +
		            ") is outside the normalized list (alpha = 0 when l1 != l2, alpha in {0,1} otherwise)");
	Free f(gens3(true));
	OrePresentation alg(gens3(true), table(f.p, {{"Z,X", l1 * f("X") + alpha * f("Y")}, {"Z,Y", l2 * f("Y")}}));
	return HopfPresentation(alg, {{2, delta_z(f)}});
}

HopfPresentation make_B(const Scalar& lambda)
{
	Free f(gens3(true));
	OrePresentation alg(gens3(true), table(f.p, {{"Y,X", -f("Y")}, {"Z,X", -f("Z") + lambda * f("Y")}}));
	return HopfPresentation(alg, {{2, delta_z(f)}});
}

HopfPresentation make_D(const Scalar& th1, const Scalar& th2, const Scalar& a11, const Scalar& a12,
                        const Scalar& a21, const Scalar& a22, const Scalar& xi1, const Scalar& xi2, Warnings* w)
{
	require(!th1.is_zero() || !th2.is_zero(), "D family needs theta1 or theta2 nonzero");
	bool normal = (a21.is_zero() && a12.is_zero() && a11.is_zero() && a22.is_zero()) ||
	              (a11.is_zero() && a12.is_one() && a21.is_zero() && a22.is_zero()) ||
	              (a11.is_one() && a12.is_zero() && a21.is_zero() && a22.is_zero()) ||
	              (a11.is_one() && a12.is_one() && a21.is_zero() && a22.is_one()) ||
	              (a11.is_one() && a12.is_zero() && a21.is_zero() && !a22.is_zero());
	if (!normal)
		warn(w, "D matrix (a_ij) is not one of the five normalized forms");
	std::optional<std::array<int, 2>> wb;
	if (th2.is_zero())
		wb = std::array<int, 2>{2, 1};
	else if (th1.is_zero())
		wb = std::array<int, 2>{1, 2};
	Free f(gens4(wb));
	OrePresentation alg(gens4(wb), table(f.p, {{"W,X", a11 * f("X") + a12 * f("Y")},
	                                           {"W,Y", a21 * f("X") + a22 * f("Y")},
	                                           {"W,Z", (a11 + a22) * f("Z") + xi1 * f("X") + xi2 * f("Y")}}));
	return HopfPresentation(alg, {{2, delta_z(f)}, {3, th1 * u_form(f) + th2 * t_form(f)}});
}

HopfPresentation make_E(const Scalar& a, const Scalar& b, const Scalar& xi, Warnings* w)
{
	bool normal = (a.is_zero() && is01(b)) || a.is_one();
	if (!normal)
		warn(w, "E(" + a.str() + "," + b.str() + "," + xi.str() +
		            ") is outside the normalized classes (0,0,xi), (0,1,xi), (1,b,xi)");
	Free f(gens4(std::nullopt));
	OrePresentation alg(gens4(std::nullopt), table(f.p, {{"Z,X", f("X")},
	                                                     {"W,X", a * f("X")},
	                                                     {"W,Y", b * f("X")},
	                                                     {"W,Z", a * f("Z") - f("W") + xi * f("X")}}));
	return HopfPresentation(alg, {{2, delta_z(f)}, {3, u_form(f)}});
}

HopfPresentation make_F(const Scalar& beta, const Scalar& gamma, const Scalar& xi, Warnings* w)
{
	bool normal = (beta.is_zero() && gamma.is_one()) || (beta.is_one() && gamma.is_zero());
	if (!normal)
		warn(w, "F(" + beta.str() + "," + gamma.str() + "," + xi.str() +
		            ") is outside the normalized classes {beta,gamma} = {0,1} or {1,0}");
	Free f(gens4(std::nullopt));
	OrePresentation alg(gens4(std::nullopt),
	                    table(f.p, {{"Z,X", f("Y")},
	                                {"W,X", beta * f("Y")},
	                                {"W,Y", gamma * f("Y")},
	                                {"W,Z", gamma * f("Z") - Scalar(2, 3) * f("Y^3") + xi * f("X")}}));
	return HopfPresentation(alg, {{2, delta_z(f)}, {3, t_form(f)}});
}

HopfPresentation make_K()
{
	Free f(gens4(std::nullopt));
	OrePresentation alg(gens4(std::nullopt),
	                    table(f.p, {{"Z,X", f("X")}, {"W,X", -f("Z")}, {"W,Z", f("W") - f("X*Y^2")}}));
	return HopfPresentation(alg, {{2, delta_z(f)}, {3, t_form(f)}});
}

HopfPresentation make_lie(const std::vector<std::string>& names,
                          const std::map<std::pair<size_t, size_t>, Vec>& brackets)
{
	CLA L(names);
	for (const auto& [key, v] : brackets) {
		if (key.first >= names.size() || key.second >= names.size())
			throw InputError("bracket index out of range");
		L.set_bracket(key.first, key.second, v);
	}
	return enveloping(L);
}

CLA make_cla_a(const Scalar& l1, const Scalar& l2, const Scalar& alpha)
{
	CLA L({"x", "y", "z"});
	L.set_bracket(2, 0, {l1, alpha, 0});
	L.set_bracket(2, 1, {0, l2, 0});
	L.set_delta(2, 0, 1, 1);
	L.set_delta(2, 1, 0, -1);
	return L;
}

CLA make_cla_b(const Scalar& lambda)
{
	CLA L({"x", "y", "z"});
	L.set_bracket(0, 1, {0, 1, 0});
	L.set_bracket(2, 0, {0, lambda, -1});
	L.set_delta(2, 0, 1, 1);
	L.set_delta(2, 1, 0, -1);
	return L;
}

CLA make_cla_35(char variant, const std::vector<Scalar>& p)
{
	auto arity = [&](size_t n) {
		require(p.size() == n, std::string("variant ") + variant + " takes " + std::to_string(n) + " parameters");
	};
	auto pair01 = [&] {
		require(is01(p[0]) && is01(p[1]), std::string("variant ") + variant + " needs (a,b) in {0,1}^2");
	};
	CLA L({"x1", "x2", "x3", "z"});
	const Scalar one = 1;
	switch (variant) {
	case 'a':
		arity(3);
		pair01();
		L.set_bracket(1, 0, {0, 1, 0, 0});
		L.set_bracket(3, 0, {p[0], p[2], 0, 1});
		L.set_bracket(3, 1, {0, p[0], 0, 0});
		L.set_bracket(3, 2, {0, p[1], 0, 0});
		break;
	case 'b':
		arity(9);
		for (size_t i = 0; i < 3; ++i)
			L.set_bracket(3, i, {p[3 * i], p[3 * i + 1], p[3 * i + 2], 0});
		break;
	case 'c':
		arity(3);
		L.set_bracket(2, 0, {0, 1, 0, 0});
		L.set_bracket(3, 0, {p[0], 0, p[1], 0});
		L.set_bracket(3, 1, {0, 1, 0, 0});
		L.set_bracket(3, 2, {p[2], 0, one - p[0], 0});
		break;
	case 'd':
		arity(3);
		L.set_bracket(2, 0, {0, 1, 0, 0});
		L.set_bracket(3, 0, {p[0], 0, p[1], 0});
		L.set_bracket(3, 2, {p[2], 0, -p[0], 0});
		break;
	case 'e':
		arity(3);
		pair01();
		L.set_bracket(2, 0, {1, 0, 0, 0});
		L.set_bracket(3, 0, {p[0], 0, 0, 0});
		L.set_bracket(3, 1, {p[1], 0, 0, 0});
		L.set_bracket(3, 2, {p[2], 0, p[0], -1});
		break;
	case 'f':
		arity(0);
		L.set_bracket(2, 0, {1, 1, 0, 0});
		L.set_bracket(2, 1, {0, 1, 0, 0});
		L.set_bracket(3, 2, {0, 0, 0, -2});
		break;
	case 'g':
		arity(3);
		pair01();
		L.set_bracket(2, 0, {1, 0, 0, 0});
		L.set_bracket(2, 1, {0, -1, 0, 0});
		L.set_bracket(3, 0, {p[0], p[2], 0, 0});
		L.set_bracket(3, 1, {p[1], 0, 0, 0});
		break;
	case 'h':
		arity(2);
		require(!p[0].is_zero() && p[0] != Scalar(-1), "variant h needs lambda not in {0,-1}");
		require(is01(p[1]), "variant h needs a in {0,1}");
		L.set_bracket(2, 0, {1, 0, 0, 0});
		L.set_bracket(2, 1, {0, p[0], 0, 0});
		L.set_bracket(3, 0, {0, p[1], 0, 0});
		L.set_bracket(3, 1, {p[1], 0, 0, 0});
		L.set_bracket(3, 2, {0, 0, 0, Scalar(-1) - p[0]});
		break;
	default:
		throw ParameterError(std::string("unknown variant '") + variant + "'");
	}
	L.set_delta(3, 0, 1, 1);
	L.set_delta(3, 1, 0, -1);
	return L;
}

// ---------------------------------------------------------------------------

std::string FamilySpec::label() const
{
	std::string out = tag;
	if (!params.empty()) {
		out += "(";
		for (size_t i = 0; i < params.size(); ++i)
			out += (i ? "," : "") + params[i].str();
		out += ")";
	}
	return out;
}

const std::vector<FamilyInfo>& family_table()
{
	static const std::vector<FamilyInfo> table = {
	    {"A", 3, false, "l1,l2,alpha"},
	    {"B", 1, false, "lambda"},
	    {"D", 8, false, "theta1,theta2,a11,a12,a21,a22,xi1,xi2"},
	    {"E", 3, false, "a,b,xi"},
	    {"F", 3, false, "beta,gamma,xi"},
	    {"K", 0, false, ""},
	    {"lie-ab4", 0, false, ""},
	    {"lie-solv2", 0, false, ""},
	    {"cla-a", 3, true, "l1,l2,alpha"},
	    {"cla-b", 1, true, "lambda"},
	    {"cla35a", 3, true, "a,b,c"},
	    {"cla35b", 9, true, "a11,...,a33"},
	    {"cla35c", 3, true, "a,b,c"},
	    {"cla35d", 3, true, "a,b,c"},
	    {"cla35e", 3, true, "a,b,c"},
	    {"cla35f", 0, true, ""},
	    {"cla35g", 3, true, "a,b,c"},
	    {"cla35h", 2, true, "lambda,a"},
	};
	return table;
}

const FamilyInfo& find_family(const std::string& tag)
{
	for (const auto& f : family_table())
		if (lower(f.tag) == lower(tag))
			return f;
	throw InputError("unknown family '" + tag + "'");
}

HopfPresentation CatalogObject::as_hopf() const { return hopf ? *hopf : enveloping(*cla); }

CatalogObject build_family(const FamilySpec& spec)
{
	const FamilyInfo& info = find_family(spec.tag);
	const auto& p = spec.params;
	if (p.size() != info.arity)
		throw ParameterError("family " + info.tag + " takes " + std::to_string(info.arity) + " parameters (" +
		                     info.params + "), got " + std::to_string(p.size()));
	CatalogObject out{{info.tag, p}, {}, {}, {}};
	Warnings* w = &out.warnings;
	const std::string& t = info.tag;
	if (t == "A")
		out.hopf = make_A(p[0], p[1], p[2], w);
	else if (t == "B")
		out.hopf = make_B(p[0]);
	else if (t == "D")
		out.hopf = make_D(p[0], p[1], p[2], p[3], p[4], p[5], p[6], p[7], w);
	else if (t == "E")
		out.hopf = make_E(p[0], p[1], p[2], w);
	else if (t == "F")
		out.hopf = make_F(p[0], p[1], p[2], w);
	else if (t == "K")
		out.hopf = make_K();
	else if (t == "lie-ab4")
		out.hopf = make_lie({"X1", "X2", "X3", "X4"}, {});
	else if (t == "lie-solv2")
		out.hopf = make_lie({"X", "Y"}, {{{0, 1}, {0, 1}}});
	else if (t == "cla-a")
		out.cla = make_cla_a(p[0], p[1], p[2]);
	else if (t == "cla-b")
		out.cla = make_cla_b(p[0]);
	else
		out.cla = make_cla_35(t.back(), p);
	return out;
}

std::vector<FamilySpec> list_catalog()
{
	auto s = [](std::string tag, std::vector<Scalar> params) { return FamilySpec{std::move(tag), std::move(params)}; };
	return {
	    s("A", {0, 0, 0}),
	    s("A", {0, 0, 1}),
	    s("A", {1, 1, 1}),
	    s("A", {1, 0, 0}),
	    s("A", {1, 2, 0}),
	    s("B", {0}),
	    s("B", {1}),
	    s("D", {0, 1, 0, 0, 0, 0, 0, 0}),
	    s("D", {1, 0, 1, 0, 0, 0, 0, 0}),
	    s("D", {0, 1, 1, 1, 0, 1, 2, 3}),
	    s("E", {0, 0, 0}),
	    s("E", {0, 1, 2}),
	    s("E", {1, 1, 0}),
	    s("F", {1, 0, 0}),
	    s("F", {0, 1, 0}),
	    s("F", {0, 1, 5}),
	    s("K", {}),
	    s("lie-ab4", {}),
	    s("lie-solv2", {}),
	    s("cla-a", {0, 0, 0}),
	    s("cla-a", {1, 2, 0}),
	    s("cla-a", {1, 1, 1}),
	    s("cla-b", {0}),
	    s("cla-b", {1}),
	    s("cla35a", {1, 1, 0}),
	    s("cla35b", {1, 0, 0, 0, 2, 0, 0, 0, 3}),
	    s("cla35c", {0, 1, 2}),
	    s("cla35d", {1, 0, 1}),
	    s("cla35e", {1, 1, 0}),
	    s("cla35f", {}),
	    s("cla35g", {1, 0, 0}),
	    s("cla35h", {2, 1}),
	};
}

} // namespace hopf

#include "hopf/io.hpp"

#include <fstream>

#include "hopf/errors.hpp"

namespace hopf {

namespace {

// Wraps library type errors so callers only ever see InputError.
template <class F>
auto guarded(const char* what, F&& f) -> decltype(f())
{
	try {
		return f();
	} catch (const Json::exception& e) {
		throw InputError(std::string("malformed ") + what + ": " + e.what());
	}
}

Scalar coeff_of(const Json& j)
{
	if (j.is_string())
		return Scalar::parse(j.get<std::string>());
	if (j.is_number_integer())
		return Scalar(j.get<long>());
	throw InputError("coefficient must be a string \"p/q\" or an integer");
}

const Json& field(const Json& j, const char* key)
{
	if (!j.is_object() || !j.contains(key))
		throw InputError(std::string("missing field \"") + key + "\"");
	return j.at(key);
}

size_t index_of(const Json& j, size_t dim, const char* what)
{
	if (!j.is_number_integer() || j.get<long>() < 0 || static_cast<size_t>(j.get<long>()) >= dim)
		throw InputError(std::string(what) + " index out of range");
	return j.get<size_t>();
}

size_t parse_index(const std::string& s, size_t dim)
{
	size_t pos = 0;
	unsigned long v = 0;
	try {
		v = std::stoul(s, &pos);
	} catch (const std::exception&) {
		throw InputError("bad index \"" + s + "\"");
	}
	if (pos != s.size() || v >= dim)
		throw InputError("bad index \"" + s + "\"");
	return v;
}

} // namespace

Json monomial_to_json(const OrePresentation& alg, const Monomial& m)
{
	Json j = Json::object();
	for (size_t i = 0; i < m.size(); ++i)
		if (m[i] > 0)
			j[alg.generators()[i].name] = m[i];
	return j;
}

Monomial monomial_from_json(const OrePresentation& alg, const Json& j)
{
	if (!j.is_object())
		throw InputError("a monomial is an object name -> exponent");
	std::vector<int> e(alg.size(), 0);
	for (const auto& [name, exp] : j.items()) {
		if (!exp.is_number_integer() || exp.get<long>() < 0)
			throw InputError("exponent of " + name + " must be a non-negative integer");
		e[alg.require_index(name)] += exp.get<int>();
	}
	return Monomial(std::move(e));
}

Json element_to_json(const OrePresentation& alg, const Element& a)
{
	Json out = Json::array();
	for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it)
		out.push_back({{"coeff", it->second.str()}, {"monomial", monomial_to_json(alg, it->first)}});
	return out;
}

Element element_from_json(const OrePresentation& alg, const Json& j)
{
	if (!j.is_array())
		throw InputError("an element is a list of terms");
	Element a;
	for (const auto& t : j)
		a.add_term(monomial_from_json(alg, field(t, "monomial")), coeff_of(field(t, "coeff")));
	return a;
}

Json tensor_to_json(const OrePresentation& alg, const TensorElement& t)
{
	Json out = Json::array();
	for (const auto& [k, c] : t.terms()) {
		Json term = {{"coeff", c.str()}};
		if (t.rank() == 2) {
			term["left"] = monomial_to_json(alg, k[0]);
			term["right"] = monomial_to_json(alg, k[1]);
		} else {
			Json f = Json::array();
			for (const auto& m : k)
				f.push_back(monomial_to_json(alg, m));
			term["factors"] = f;
		}
		out.push_back(term);
	}
	return out;
}

TensorElement tensor_from_json(const OrePresentation& alg, const Json& j, size_t rank)
{
	if (!j.is_array())
		throw InputError("a tensor is a list of terms");
	TensorElement t(rank);
	for (const auto& term : j) {
		TensorKey k;
		if (rank == 2 && term.is_object() && term.contains("left")) {
			k = {monomial_from_json(alg, field(term, "left")), monomial_from_json(alg, field(term, "right"))};
		} else {
			const Json& f = field(term, "factors");
			if (!f.is_array() || f.size() != rank)
				throw InputError("tensor term has the wrong number of factors");
			for (const auto& m : f)
				k.push_back(monomial_from_json(alg, m));
		}
		t.add_term(k, coeff_of(field(term, "coeff")));
	}
	return t;
}

Json presentation_to_json(const OrePresentation& alg)
{
	Json gens = Json::array();
	for (const auto& g : alg.generators()) {
		Json x = {{"name", g.name}, {"degree", g.degree}};
		if (g.bidegree)
			x["bidegree"] = {(*g.bidegree)[0], (*g.bidegree)[1]};
		gens.push_back(x);
	}
	Json comm = Json::object();
	for (const auto& [key, kappa] : alg.commutators())
		comm[alg.generators()[key.first].name + "," + alg.generators()[key.second].name] = element_to_json(alg, kappa);
	return {{"generators", gens}, {"commutators", comm}};
}

OrePresentation presentation_from_json(const Json& j)
{
	return guarded("presentation", [&] {
		const Json& gj = field(j, "generators");
		if (!gj.is_array() || gj.empty())
			throw InputError("\"generators\" must be a non-empty list");
		std::vector<GeneratorInfo> gens;
		for (const auto& g : gj) {
			GeneratorInfo info;
			info.name = field(g, "name").get<std::string>();
			info.degree = g.contains("degree") ? g.at("degree").get<int>() : 1;
			if (g.contains("bidegree")) {
				const Json& b = g.at("bidegree");
				if (!b.is_array() || b.size() != 2)
					throw InputError("bidegree of " + info.name + " must be a pair");
				info.bidegree = std::array<int, 2>{b[0].get<int>(), b[1].get<int>()};
			}
			gens.push_back(info);
		}
		// The free presentation resolves names for the table entries.
		OrePresentation free(gens, {});
		OrePresentation::CommutatorTable table;
		if (j.contains("commutators")) {
			const Json& cj = j.at("commutators");
			if (!cj.is_object())
				throw InputError("\"commutators\" must be an object");
			for (const auto& [key, val] : cj.items()) {
				auto comma = key.find(',');
				if (comma == std::string::npos)
					throw InputError("commutator key \"" + key + "\" must read HIGHER,LOWER");
				size_t hi = free.require_index(key.substr(0, comma));
				size_t lo = free.require_index(key.substr(comma + 1));
				if (hi <= lo)
					throw InputError("commutator key \"" + key + "\" must list the later generator first");
				Element kappa = element_from_json(free, val);
				if (!kappa.is_zero())
					table[{hi, lo}] = kappa;
			}
		}
		return OrePresentation(std::move(gens), std::move(table));
	});
}

Json hopf_to_json(const HopfPresentation& h)
{
	Json j = presentation_to_json(h.algebra());
	Json co = Json::object();
	for (const auto& [g, d] : h.deltas())
		if (!d.is_zero())
			co[h.algebra().generators()[g].name] = tensor_to_json(h.algebra(), d);
	j["coproducts"] = co;
	return j;
}

HopfPresentation hopf_from_json(const Json& j)
{
	OrePresentation alg = presentation_from_json(j);
	return guarded("coproducts", [&] {
		HopfPresentation::DeltaTable table;
		if (j.contains("coproducts")) {
			const Json& cj = j.at("coproducts");
			if (!cj.is_object())
				throw InputError("\"coproducts\" must be an object");
			for (const auto& [name, val] : cj.items()) {
				TensorElement d = tensor_from_json(alg, val, 2);
				if (!d.is_zero())
					table[alg.require_index(name)] = d;
			}
		}
		return HopfPresentation(alg, std::move(table));
	});
}

Json cla_to_json(const CLA& L)
{
	const size_t n = L.dim();
	Json br = Json::object(), de = Json::object();
	for (size_t i = 0; i < n; ++i)
		for (size_t j = i + 1; j < n; ++j) {
			Json terms = Json::array();
			for (size_t k = 0; k < n; ++k)
				if (!L.b(i, j, k).is_zero())
					terms.push_back({{"coeff", L.b(i, j, k).str()}, {"basis", k}});
			if (!terms.empty())
				br[std::to_string(i) + "," + std::to_string(j)] = terms;
		}
	for (size_t i = 0; i < n; ++i) {
		Json terms = Json::array();
		for (size_t a = 0; a < n; ++a)
			for (size_t b = 0; b < n; ++b)
				if (!L.d(i, a, b).is_zero())
					terms.push_back({{"coeff", L.d(i, a, b).str()}, {"left", a}, {"right", b}});
		if (!terms.empty())
			de[std::to_string(i)] = terms;
	}
	return {{"dim", n}, {"basis", L.names()}, {"brackets", br}, {"delta", de}};
}

CLA cla_from_json(const Json& j)
{
	return guarded("CLA", [&] {
		std::vector<std::string> names;
		if (j.contains("basis")) {
			names = j.at("basis").get<std::vector<std::string>>();
			if (j.contains("dim") && j.at("dim").get<size_t>() != names.size())
				throw InputError("\"dim\" disagrees with the length of \"basis\"");
		} else {
			size_t n = field(j, "dim").get<size_t>();
			for (size_t i = 0; i < n; ++i)
				names.push_back("x" + std::to_string(i + 1));
		}
		CLA L(names);
		const size_t n = names.size();
		if (j.contains("brackets")) {
			// both [i,j] and [j,i] may be given; they must agree
			std::map<std::pair<size_t, size_t>, Vec> seen;
			for (const auto& [key, val] : j.at("brackets").items()) {
				auto comma = key.find(',');
				if (comma == std::string::npos)
					throw InputError("bracket key \"" + key + "\" must read i,j");
				size_t a = parse_index(key.substr(0, comma), n), b = parse_index(key.substr(comma + 1), n);
				Vec v(n);
				for (const auto& t : val)
					v[index_of(field(t, "basis"), n, "bracket")] += coeff_of(field(t, "coeff"));
				if (a > b) {
					std::swap(a, b);
					for (auto& x : v)
						x = -x;
				}
				if (auto it = seen.find({a, b}); it != seen.end() && it->second != v)
					throw InputError("brackets " + key + " and its reverse are not antisymmetric");
				seen[{a, b}] = v;
				L.set_bracket(a, b, v);
			}
		}
		if (j.contains("delta"))
			for (const auto& [key, val] : j.at("delta").items()) {
				size_t i = parse_index(key, n);
				std::map<std::pair<size_t, size_t>, Scalar> acc;
				for (const auto& t : val)
					acc[{index_of(field(t, "left"), n, "delta"), index_of(field(t, "right"), n, "delta")}] +=
					    coeff_of(field(t, "coeff"));
				for (const auto& [ab, c] : acc)
					L.set_delta(i, ab.first, ab.second, c);
			}
		return L;
	});
}

Json report_to_json(const VerificationReport& r)
{
	Json checks = Json::array();
	for (const auto& c : r.checks()) {
		Json x = {{"name", c.name}, {"passed", c.passed}};
		if (c.informational)
			x["informational"] = true;
		if (!c.witness.empty())
			x["witness"] = c.witness;
		checks.push_back(x);
	}
	Json j = {{"subject", r.subject()}, {"passed", r.passed()}, {"checks", checks}};
	if (!r.notes().empty())
		j["notes"] = r.notes();
	return j;
}

Json subspace_to_json(const FilteredSubspace& s)
{
	Json basis = Json::array();
	for (const auto& b : s.basis)
		basis.push_back({{"render", s.algebra.render(b)}, {"terms", element_to_json(s.algebra, b)}});
	return {{"degree_bound", s.degree_bound}, {"dim", s.dim()}, {"basis", basis}};
}

Json graded_lie_to_json(const GradedLie& g)
{
	Json br = Json::array();
	for (size_t i = 0; i < g.dim(); ++i)
		for (size_t j = i + 1; j < g.dim(); ++j)
			for (size_t k = 0; k < g.dim(); ++k)
				if (!g.bracket[i][j][k].is_zero())
					br.push_back({{"left", g.names[i]}, {"right", g.names[j]}, {"coeff", g.bracket[i][j][k].str()},
					              {"basis", g.names[k]}});
	Json dims = Json::object();
	for (const auto& [d, n] : g.dims_by_degree())
		dims[std::to_string(d)] = n;
	return {{"basis", g.names}, {"degrees", g.degrees}, {"dims_by_degree", dims}, {"brackets", br},
	        {"shape", classify_lantern(g)}};
}

Json cobar_report_to_json(const CobarReport& r)
{
	Json entries = Json::array();
	for (const auto& e : r.entries) {
		Json x = {{"total", e.total}, {"cocycles", e.cocycles}, {"coboundaries", e.coboundaries}, {"h2", e.h2()}};
		if (e.bidegree)
			x["bidegree"] = {(*e.bidegree)[0], (*e.bidegree)[1]};
		entries.push_back(x);
	}
	return {{"bound", r.bound}, {"by_bidegree", r.by_bidegree}, {"total_h2", r.total_h2()}, {"entries", entries}};
}

namespace {

std::string combo(const std::vector<std::string>& names, const Vec& v)
{
	std::string out;
	for (size_t k = 0; k < v.size(); ++k) {
		if (v[k].is_zero())
			continue;
		Scalar c = v[k];
		if (out.empty()) {
			if (c.sign() < 0) {
				out = "-";
				c = -c;
			}
		} else {
			out += c.sign() < 0 ? " - " : " + ";
			if (c.sign() < 0)
				c = -c;
		}
		if (!c.is_one())
			out += c.str() + "*";
		out += names[k];
	}
	return out.empty() ? "0" : out;
}

} // namespace

std::string cla_to_text(const CLA& L)
{
	std::string out;
	const size_t n = L.dim();
	for (size_t i = 0; i < n; ++i)
		for (size_t j = i + 1; j < n; ++j) {
			Vec v(n);
			for (size_t k = 0; k < n; ++k)
				v[k] = L.b(i, j, k);
			std::string c = combo(L.names(), v);
			if (c != "0")
				out += "[" + L.names()[i] + ", " + L.names()[j] + "] = " + c + "\n";
		}
	for (size_t i = 0; i < n; ++i) {
		std::string terms;
		for (size_t a = 0; a < n; ++a)
			for (size_t b = 0; b < n; ++b) {
				const Scalar& c = L.d(i, a, b);
				if (c.is_zero())
					continue;
				Scalar m = c;
				if (terms.empty()) {
					if (m.sign() < 0) {
						terms = "-";
						m = -m;
					}
				} else {
					terms += m.sign() < 0 ? " - " : " + ";
					if (m.sign() < 0)
						m = -m;
				}
				terms += (m.is_one() ? "" : m.str() + "*") + L.names()[a] + " (x) " + L.names()[b];
			}
		if (!terms.empty())
			out += "delta(" + L.names()[i] + ") = " + terms + "\n";
	}
	return out.empty() ? "abelian, delta = 0\n" : out;
}

std::string graded_lie_to_text(const GradedLie& g)
{
	std::string out = "basis:";
	for (size_t i = 0; i < g.dim(); ++i)
		out += " " + g.names[i] + "(" + std::to_string(g.degrees[i]) + ")";
	out += "\n";
	for (size_t i = 0; i < g.dim(); ++i)
		for (size_t j = i + 1; j < g.dim(); ++j) {
			std::string c = combo(g.names, g.bracket[i][j]);
			if (c != "0")
				out += "[" + g.names[i] + ", " + g.names[j] + "] = " + c + "\n";
		}
	out += "shape: " + classify_lantern(g) + "\n";
	return out;
}

DocumentKind document_kind(const Json& j)
{
	if (j.is_object() && j.contains("generators"))
		return DocumentKind::Hopf;
	if (j.is_object() && (j.contains("dim") || j.contains("brackets")))
		return DocumentKind::Cla;
	throw InputError("document is neither a presentation nor a CLA");
}

Json load_json_file(const std::string& path)
{
	std::ifstream in(path);
	if (!in)
		throw InputError("cannot open " + path);
	try {
		return Json::parse(in);
	} catch (const Json::parse_error& e) {
		throw InputError(path + ": " + e.what());
	}
}

} // namespace hopf

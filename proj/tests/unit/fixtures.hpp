#pragma once

// Presentations written out directly from relation tables, independent of
// the catalog constructors, so they can serve as oracles for them.

#include <string>
#include <utility>
#include <vector>

#include "hopf/algebra.hpp"
#include "hopf/coalgebra.hpp"

namespace fixtures {

using hopf::Element;
using hopf::GeneratorInfo;
using hopf::OrePresentation;

struct Rel {
	std::string key; // "HIGHER,LOWER"
	std::string value;
};

inline OrePresentation ore(std::vector<GeneratorInfo> gens, const std::vector<Rel>& rels)
{
	OrePresentation free(gens, {});
	OrePresentation::CommutatorTable t;
	for (const auto& r : rels) {
		auto comma = r.key.find(',');
		size_t j = free.require_index(r.key.substr(0, comma));
		size_t i = free.require_index(r.key.substr(comma + 1));
		t[{j, i}] = free.parse(r.value);
	}
	return OrePresentation(std::move(gens), std::move(t));
}

inline std::vector<GeneratorInfo> xyz() { return {{"X", 1, {}}, {"Y", 1, {}}, {"Z", 2, {}}}; }
inline std::vector<GeneratorInfo> xyzw() { return {{"X", 1, {}}, {"Y", 1, {}}, {"Z", 2, {}}, {"W", 3, {}}}; }

inline OrePresentation alg_A(const std::string& l1, const std::string& l2, const std::string& al)
{
	return ore(xyz(), {{"Z,X", l1 + "*X + " + al + "*Y"}, {"Z,Y", l2 + "*Y"}});
}

inline OrePresentation alg_B(const std::string& lam)
{
	return ore(xyz(), {{"Y,X", "-Y"}, {"Z,X", "-Z + " + lam + "*Y"}});
}

inline OrePresentation alg_F(const std::string& beta, const std::string& gamma, const std::string& xi)
{
	return ore(xyzw(), {{"Z,X", "Y"},
	                    {"W,X", beta + "*Y"},
	                    {"W,Y", gamma + "*Y"},
	                    {"W,Z", gamma + "*Z - 2/3*Y^3 + " + xi + "*X"}});
}

inline OrePresentation alg_K()
{
	return ore(xyzw(), {{"Z,X", "X"}, {"W,X", "-Z"}, {"W,Z", "W - X*Y^2"}});
}

struct TermSpec {
	std::string coeff, left, right;
};

inline hopf::TensorElement tensor2(const OrePresentation& p, const std::vector<TermSpec>& terms)
{
	hopf::TensorElement t(2);
	for (const auto& term : terms)
		t += hopf::Scalar::parse(term.coeff) *
		     hopf::TensorElement::product({p.parse(term.left), p.parse(term.right)});
	return t;
}

inline hopf::HopfPresentation hopf_of(const OrePresentation& p,
                                      const std::vector<std::pair<std::string, std::vector<TermSpec>>>& deltas)
{
	hopf::HopfPresentation::DeltaTable t;
	for (const auto& [g, terms] : deltas)
		t[p.require_index(g)] = tensor2(p, terms);
	return hopf::HopfPresentation(p, std::move(t));
}

inline std::vector<TermSpec> delta_z() { return {{"1", "X", "Y"}, {"-1", "Y", "X"}}; }
inline std::vector<TermSpec> u_terms() { return {{"1", "Z", "X"}, {"-1", "X", "Z"}, {"1", "X*Y", "X"}, {"1", "X", "X*Y"}}; }
inline std::vector<TermSpec> t_terms() { return {{"1", "Y", "Z"}, {"-1", "Z", "Y"}, {"1", "X*Y", "Y"}, {"1", "Y", "X*Y"}}; }

inline hopf::HopfPresentation hopf_A(const std::string& l1, const std::string& l2, const std::string& al)
{
	return hopf_of(alg_A(l1, l2, al), {{"Z", delta_z()}});
}

inline hopf::HopfPresentation hopf_B(const std::string& lam) { return hopf_of(alg_B(lam), {{"Z", delta_z()}}); }

inline hopf::HopfPresentation hopf_F(const std::string& beta, const std::string& gamma, const std::string& xi)
{
	return hopf_of(alg_F(beta, gamma, xi), {{"Z", delta_z()}, {"W", t_terms()}});
}

inline hopf::HopfPresentation hopf_K() { return hopf_of(alg_K(), {{"Z", delta_z()}, {"W", t_terms()}}); }

/// D family relations; delta(W) is chosen by hopf_D.
inline OrePresentation alg_D(hopf::Scalar a11, hopf::Scalar a12, hopf::Scalar a21, hopf::Scalar a22,
                             hopf::Scalar x1, hopf::Scalar x2)
{
	OrePresentation free(xyzw(), {});
	Element X = free.gen("X"), Y = free.gen("Y"), Z = free.gen("Z");
	OrePresentation::CommutatorTable t;
	t[{3, 0}] = a11 * X + a12 * Y;
	t[{3, 1}] = a21 * X + a22 * Y;
	t[{3, 2}] = (a11 + a22) * Z + x1 * X + x2 * Y;
	for (auto it = t.begin(); it != t.end();)
		it = it->second.is_zero() ? t.erase(it) : std::next(it);
	return OrePresentation(xyzw(), t);
}

inline hopf::HopfPresentation hopf_D(const std::string& th1, const std::string& th2, const OrePresentation& alg)
{
	hopf::TensorElement w = hopf::Scalar::parse(th1) * tensor2(alg, u_terms()) +
	                        hopf::Scalar::parse(th2) * tensor2(alg, t_terms());
	hopf::HopfPresentation::DeltaTable t;
	t[2] = tensor2(alg, delta_z());
	t[3] = w;
	return hopf::HopfPresentation(alg, t);
}

} // namespace fixtures

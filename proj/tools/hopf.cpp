// Command-line front end. Exit codes: 0 pass, 1 verification failed,
// 2 malformed input.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "hopf/catalog.hpp"
#include "hopf/cobar.hpp"
#include "hopf/errors.hpp"
#include "hopf/io.hpp"
#include "hopf/replication.hpp"
#include "hopf/structure.hpp"

using namespace hopf;

namespace {

constexpr int kPass = 0, kFail = 1, kMalformed = 2;

struct ObjectOptions {
	std::string family;
	std::string params;
	std::string file;
};

struct Loaded {
	std::string label;
	std::optional<HopfPresentation> hopf;
	std::optional<CLA> cla;

	HopfPresentation as_hopf() const { return hopf ? *hopf : enveloping(*cla); }
};

std::vector<Scalar> parse_params(const std::string& text)
{
	std::vector<Scalar> out;
	if (text.empty())
		return out;
	std::stringstream ss(text);
	std::string item;
	while (std::getline(ss, item, ',')) {
		auto b = item.find_first_not_of(" \t"), e = item.find_last_not_of(" \t");
		if (b == std::string::npos)
			throw InputError("empty parameter in \"" + text + "\"");
		out.push_back(Scalar::parse(item.substr(b, e - b + 1)));
	}
	return out;
}

Loaded load(const ObjectOptions& o)
{
	Loaded out;
	if (!o.file.empty()) {
		Json j = load_json_file(o.file);
		DocumentKind kind = document_kind(j);
		std::string fam = o.family;
		for (auto& c : fam)
			c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
		if (!fam.empty() && fam != "lie" && fam != "cla" && fam != "hopf")
			throw InputError("--family with --file must be lie, cla or hopf");
		if ((fam == "lie" || fam == "cla") && kind != DocumentKind::Cla)
			throw InputError(o.file + " is not a CLA document");
		if (fam == "hopf" && kind != DocumentKind::Hopf)
			throw InputError(o.file + " is not a presentation document");
		if (kind == DocumentKind::Cla) {
			out.cla = cla_from_json(j);
			if (fam == "lie" && !out.cla->delta_is_zero())
				throw InputError(o.file + ": a Lie algebra file must have zero delta");
		} else {
			out.hopf = hopf_from_json(j);
		}
		out.label = o.file;
		return out;
	}
	if (o.family.empty())
		throw InputError("give --family or --file");
	CatalogObject obj = build_family({o.family, parse_params(o.params)});
	for (const auto& w : obj.warnings)
		std::cerr << "warning: " << w << "\n";
	out.label = obj.spec.label();
	out.hopf = obj.hopf;
	out.cla = obj.cla;
	return out;
}

int default_bound()
{
	if (const char* env = std::getenv("HOPF_MAX_DEGREE")) {
		try {
			size_t pos = 0;
			int v = std::stoi(env, &pos);
			if (pos == std::string(env).size() && v > 0)
				return v;
		} catch (const std::exception&) {
		}
		throw InputError(std::string("HOPF_MAX_DEGREE must be a positive integer, got \"") + env + "\"");
	}
	return 5;
}

void add_object_options(CLI::App* sub, ObjectOptions& o)
{
	sub->add_option("--family", o.family, "catalog tag, or lie/cla/hopf together with --file");
	sub->add_option("--params", o.params, "comma-separated rationals");
	sub->add_option("--file", o.file, "presentation or CLA JSON file");
}

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

int report_exit(const VerificationReport& r) { return r.passed() ? kPass : kFail; }

std::string summary(const VerificationReport& rep)
{
	std::ostringstream os;
	size_t total = 0, failed = 0;
	os << rep.subject() << "\n";
	for (const auto& c : rep.checks()) {
		if (c.informational) {
			os << "  [info] " << c.name << ": " << (c.passed ? "true" : "false") << "\n";
			continue;
		}
		++total;
		if (!c.passed) {
			++failed;
			os << "  [FAIL] " << c.name << (c.witness.empty() ? "" : "  (" + c.witness + ")") << "\n";
		}
	}
	for (const auto& n : rep.notes())
		os << "  note: " << n << "\n";
	os << total - failed << " of " << total << " checks pass; overall: " << (rep.passed() ? "pass" : "FAIL") << "\n";
	return os.str();
}

int cmd_verify(const Loaded& obj, int bound, bool json, bool verbose)
{
	VerificationReport rep(obj.label);
	if (obj.cla) {
		rep.merge(verify_cla(*obj.cla), "CLA");
		if (rep.passed())
			rep.merge(enveloping(*obj.cla).verify_all(std::min(bound, 4)), "U(L)");
	} else {
		rep.merge(obj.hopf->verify_all(std::min(bound, 4)));
	}
	if (json)
		print(report_to_json(rep));
	else
		std::cout << (verbose ? rep.to_text() : summary(rep));
	return report_exit(rep);
}

int subspace_command(const std::string& what, const Loaded& obj, int bound, bool json,
                     const std::function<FilteredSubspace(const HopfPresentation&, int)>& f)
{
	HopfPresentation h = obj.as_hopf();
	FilteredSubspace s = f(h, bound);
	std::optional<size_t> prev;
	if (bound > 1)
		prev = f(h, bound - 1).dim();
	bool stable = prev && *prev == s.dim();
	if (json) {
		Json j = subspace_to_json(s);
		j["subject"] = obj.label;
		j["space"] = what;
		j["stable"] = stable;
		print(j);
	} else {
		std::cout << what << " of " << obj.label << " within degree bound " << bound << "\n";
		std::cout << "dim " << s.dim() << (stable ? " (stable from " + std::to_string(bound - 1) + ")" : " (not stable)")
		          << "\n";
		for (const auto& b : s.basis)
			std::cout << "  " << s.algebra.render(b) << "\n";
	}
	return kPass;
}

std::map<std::string, std::string> parse_maps(const std::vector<std::string>& maps)
{
	std::map<std::string, std::string> out;
	for (const auto& m : maps) {
		auto eq = m.find('=');
		if (eq == std::string::npos)
			throw InputError("--map expects NAME=EXPR, got \"" + m + "\"");
		auto name = m.substr(0, eq);
		name.erase(0, name.find_first_not_of(' '));
		name.erase(name.find_last_not_of(' ') + 1);
		if (!out.emplace(name, m.substr(eq + 1)).second)
			throw InputError("generator " + name + " mapped twice");
	}
	return out;
}

} // namespace

int main(int argc, char** argv)
{
	CLI::App app{"Connected Hopf algebras and coassociative Lie algebras"};
	app.require_subcommand(1);
	bool json = false;
	std::optional<int> max_degree;
	app.add_flag("--json", json, "machine-readable output")->group("Global");

	ObjectOptions obj;
	auto with_object = [&](const char* name, const char* help) {
		auto* sub = app.add_subcommand(name, help);
		add_object_options(sub, obj);
		sub->add_option("--max-degree", max_degree, "degree bound (default 5, or HOPF_MAX_DEGREE)");
		sub->add_flag("--json", json, "machine-readable output");
		return sub;
	};

	auto* verify = with_object("verify", "run every verification for the object");
	bool verbose = false;
	verify->add_flag("--verbose", verbose, "list every check, not only failures");
	auto* primitives = with_object("primitives", "primitive space P within the degree bound");
	auto* p2 = with_object("p2", "the space P2 within the degree bound");
	auto* coradical = with_object("coradical", "coradical filtration term H_n");
	int level = 1;
	coradical->add_option("--level", level, "filtration index n")->check(CLI::NonNegativeNumber);
	auto* extract = with_object("extract-cla", "the CLA on P2");
	auto* lantern = with_object("lantern", "lantern of the associated graded algebra");
	auto* cohomology = with_object("cohomology", "H2 of the truncated cobar complex (JSON)");
	bool bidegree = false;
	cohomology->add_flag("--bidegree", bidegree, "split by bidegree instead of by filtration level");

	auto* morphism = with_object("morphism", "check a substitution of generators");
	ObjectOptions source;
	std::vector<std::string> maps;
	bool coalgebra = false;
	morphism->add_option("--source-family", source.family, "source catalog tag");
	morphism->add_option("--source-params", source.params, "source parameters");
	morphism->add_option("--source-file", source.file, "source JSON file");
	morphism->add_option("--map", maps, "NAME=EXPR, image of a source generator in the target")->required();
	morphism->add_flag("--coalgebra", coalgebra, "also check the coproduct");

	auto* catalog = app.add_subcommand("catalog", "list the catalog");
	catalog->add_flag("--json", json, "machine-readable output");

	auto* replicate_cmd = app.add_subcommand("replicate", "run every replication criterion");
	replicate_cmd->add_flag("--json", json, "machine-readable output");
	std::vector<int> only;
	bool inject = false, serial = false;
	replicate_cmd->add_option("--only", only, "criterion ids")->check(CLI::Range(1, kCriteriaCount));
	replicate_cmd->add_flag("--serial", serial, "run criteria one after another");
	replicate_cmd->add_flag("--inject-corruption", inject, "corrupt the B family first (harness check)")
	    ->group("");

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		int code = app.exit(e);
		return code == 0 ? kPass : kMalformed;
	}

	try {
		int bound = max_degree ? *max_degree : default_bound();
		if (bound < 1)
			throw InputError("--max-degree must be positive");

		if (*verify)
			return cmd_verify(load(obj), bound, json, verbose);
		if (*primitives)
			return subspace_command("P", load(obj), bound, json, primitive_space);
		if (*p2)
			return subspace_command("P2", load(obj), bound, json, p2_space);
		if (*coradical)
			return subspace_command("H_" + std::to_string(level), load(obj), bound, json,
			                        [&](const HopfPresentation& h, int d) { return coradical_filtration(h, level, d); });
		if (*extract) {
			Loaded o = load(obj);
			CLA L = extract_cla(o.as_hopf(), bound);
			if (json)
				print(cla_to_json(L));
			else
				std::cout << "CLA on P2 of " << o.label << "\n" << cla_to_text(L);
			return kPass;
		}
		if (*lantern) {
			Loaded o = load(obj);
			GradedLie g = lantern_of_hopf(o.as_hopf(), bound);
			if (json)
				print(graded_lie_to_json(g));
			else
				std::cout << "lantern of " << o.label << " within degree bound " << bound << "\n" << graded_lie_to_text(g);
			return g.verify().passed() ? kPass : kFail;
		}
		if (*cohomology) {
			Loaded o = load(obj);
			Json j = cobar_report_to_json(h2_report(o.as_hopf(), bound, bidegree));
			j["subject"] = o.label;
			print(j);
			return kPass;
		}
		if (*morphism) {
			Loaded dst = load(obj);
			Loaded src = load(source);
			HopfPresentation s = src.as_hopf(), d = dst.as_hopf();
			VerificationReport rep = verify_morphism(s, d, parse_images(s, d, parse_maps(maps)), coalgebra);
			if (json)
				print(report_to_json(rep));
			else
				std::cout << src.label << " -> " << dst.label << "\n" << rep.to_text();
			return report_exit(rep);
		}
		if (*catalog) {
			Json out = Json::array();
			for (const auto& spec : list_catalog()) {
				const FamilyInfo& info = find_family(spec.tag);
				if (json)
					out.push_back({{"label", spec.label()}, {"tag", info.tag}, {"kind", info.is_cla ? "cla" : "hopf"},
					               {"params", info.params}});
				else
					std::cout << spec.label() << (info.is_cla ? "  [CLA]" : "") << "\n";
			}
			if (json)
				print(out);
			return kPass;
		}
		if (*replicate_cmd) {
			ReplicationOptions opts;
			opts.only = only;
			opts.parallel = !serial;
			if (inject)
				opts.mutate = corrupt_b_family;
			ReplicationReport rep = replicate(opts);
			if (json)
				print(replication_to_json(rep));
			else
				std::cout << replication_table(rep);
			return rep.passed() ? kPass : kFail;
		}
	} catch (const InputError& e) {
		std::cerr << "error: " << e.what() << "\n";
		return kMalformed;
	} catch (const StructuralError& e) {
		std::cerr << "structural failure: " << e.what() << "\n";
		return kFail;
	}
	return kMalformed;
}

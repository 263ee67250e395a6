#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "lass/catalog.hpp"
#include "lass/io.hpp"
#include "lass/serre.hpp"

namespace lass::cli {

namespace {

struct RunConfig {
    std::string input;
    std::string out = "table";
    std::string pages = "auto";
    unsigned order = 0;
    bool order_given = false;
    bool verify = false;
    std::uint64_t seed = 1;
};

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Named {
    std::string name;
    Verdict verdict;
};

Document resolve(const std::string& input) {
    if (std::filesystem::is_regular_file(input)) {
        try {
            return load_document(input);
        } catch (const Json::exception& e) {
            throw InputError(input + ": " + e.what());
        }
    }
    try {
        return catalog_load(input).doc;
    } catch (const CatalogError& e) {
        throw InputError("no such file or catalog entry: " + input);
    }
}

bool json_mode(const RunConfig& c) { return c.out == "json"; }

void print_verdicts(std::ostream& out, const std::vector<Named>& vs) {
    for (const auto& [name, v] : vs) {
        out << name << ": " << (v.ok ? "ok" : "FAIL");
        if (!v.ok && !v.detail.empty()) out << " (" << v.detail << ")";
        out << "\n";
    }
}

Json verdicts_json(const std::vector<Named>& vs) {
    Json out = Json::array();
    for (const auto& [name, v] : vs) {
        Json j = verdict_to_json(v);
        j["name"] = name;
        out.push_back(std::move(j));
    }
    return out;
}

bool all_ok(const std::vector<Named>& vs) {
    return std::all_of(vs.begin(), vs.end(), [](const Named& n) { return n.verdict.ok; });
}

int page_limit(const RunConfig& c, const SpectralSequence& ss) {
    if (c.pages == "auto") return ss.stabilization().page;
    try {
        std::size_t used = 0;
        const int n = std::stoi(c.pages, &used);
        if (used != c.pages.size() || n < 0) throw std::invalid_argument("");
        return n;
    } catch (const std::exception&) {
        throw InputError("--pages expects a non-negative integer or \"auto\"");
    }
}

std::string join(const std::vector<std::size_t>& xs) {
    std::ostringstream os;
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? " " : "") << xs[i];
    return os.str();
}

std::string cells_text(const Json& cells) {
    std::ostringstream os;
    bool first = true;
    for (const auto& c : cells) {
        os << (first ? "" : " ") << "(" << c[0].get<int>() << "," << c[1].get<int>() << "):" << c[2].get<long>();
        first = false;
    }
    return first ? "none" : os.str();
}

// Page grids up to the requested page, the stabilization page and E_inf.
Json emit_pages(const RunConfig& c, const SpectralSequence& ss, std::ostream& out) {
    const int last = page_limit(c, ss);
    const int stab = ss.stabilization().page;
    const Json einf = cell_list(ss.table(ss.last_page()));
    Json pages = Json::array();
    for (int r = 0; r <= last; ++r) {
        const PageTable t = ss.table(r);
        if (json_mode(c))
            pages.push_back(table_to_json(t));
        else
            out << render_grid(t) << "\n";
    }
    if (!json_mode(c)) {
        out << "stabilization page: " << stab << "\n";
        out << "E_inf: " << cells_text(einf) << "\n";
    }
    return Json{{"pages", pages}, {"stabilization_page", stab}, {"einf", einf}};
}

std::vector<Named> engine_checks(const SpectralSequence& ss, const RunConfig& c) {
    std::vector<Named> out;
    for (int r = 0; r <= ss.last_page(); ++r) {
        out.push_back({"turn_page r=" + std::to_string(r), ss.turn_page_check(r)});
        out.push_back({"d_squared r=" + std::to_string(r), ss.d_squared_check(r)});
        out.push_back({"well_defined r=" + std::to_string(r), ss.well_definedness_check(r, c.seed)});
    }
    out.push_back({"convergence", ss.convergence_check()});
    return out;
}

void finish(const RunConfig& c, std::ostream& out, Json j, const std::vector<Named>& verdicts) {
    if (json_mode(c)) {
        if (!verdicts.empty()) j["verdicts"] = verdicts_json(verdicts);
        out << j.dump(2) << "\n";
    } else {
        print_verdicts(out, verdicts);
    }
}

int cmd_check(const RunConfig& c, std::ostream& out) {
    const Document d = resolve(c.input);
    std::vector<Named> vs;
    if (d.g) {
        vs.push_back({"antisymmetry", check_antisymmetry(*d.g)});
        vs.push_back({"jacobi", check_jacobi(*d.g)});
        if (d.v) vs.push_back({"flatness", check_flat(*d.g, *d.v)});
        auto closed = [&](const Matrix& span, bool ideal) {
            const Subalgebra h = Subalgebra::unchecked(*d.g, span);
            vs.push_back({"subalgebra", h.is_closed() ? Verdict::pass()
                                                      : Verdict::fail("subspace is not closed under the bracket")});
            if (ideal) {
                vs.push_back({"ideal", h.is_ideal() ? Verdict::pass() : Verdict::fail("subspace is not an ideal")});
            }
        };
        if (d.subalgebra) closed(*d.subalgebra, false);
        if (d.ideal) {
            closed(*d.ideal, true);
            if (all_ok(vs)) {
                try {
                    const AbelianExtension ext(Subalgebra(*d.g, *d.ideal), module_of(d), d.splitting);
                    vs.push_back({"curvature_closed", check_curvature_closed(ext)});
                } catch (const std::invalid_argument& e) {
                    vs.push_back({"extension", Verdict::fail(e.what())});
                } catch (const StructuralError& e) {
                    vs.push_back({"extension", Verdict::fail(e.what())});
                }
            }
        }
    }
    if (d.jet) {
        vs.push_back({"jet_axioms", check_axioms_mod(*d.jet)});
        if (d.jet_module) vs.push_back({"module_flatness", check_flat(d.jet->fiber_algebra(), *d.jet_module)});
    }
    const bool ok = all_ok(vs);
    finish(c, out, Json{{"ok", ok}}, vs);
    if (!json_mode(c)) out << (ok ? "all checks passed" : "structural checks failed") << "\n";
    return ok ? kOk : kFailure;
}

int cmd_betti(const RunConfig& c, std::ostream& out) {
    const Document d = resolve(c.input);
    if (!d.g) throw PreconditionError("betti needs a Lie algebra");
    const Representation v = module_of(d);
    if (const Verdict f = check_flat(*d.g, v); !f) throw PreconditionError("representation: " + f.detail);
    const auto b = betti_numbers(ce_complex(*d.g, v));
    if (json_mode(c))
        out << Json{{"betti", b}}.dump() << "\n";
    else
        out << "betti: " << join(b) << "\n";
    return kOk;
}

int cmd_ss_hs(const RunConfig& c, std::ostream& out) {
    const Document d = resolve(c.input);
    if (!d.g || !(d.subalgebra || d.ideal)) throw PreconditionError("ss hs needs a subalgebra block");
    const Subalgebra h(*d.g, d.subalgebra ? *d.subalgebra : *d.ideal);
    const Representation v = module_of(d);
    const HSInstance inst = hs_filtration(h, v);
    Json j = emit_pages(c, inst.ss(), out);
    std::vector<Named> vs;
    if (c.verify) {
        auto add_ids = [&](const char* what, const std::vector<Identification>& ids) {
            Verdict all = Verdict::pass();
            for (const auto& i : ids)
                if (!i.verdict.ok) {
                    all = i.verdict;
                    break;
                }
            vs.push_back({what, all});
        };
        add_ids("e1_identification", e1_table(inst));
        if (h.is_ideal()) {
            add_ids("e2_identification", e2_table(inst));
            for (int q = 0; q <= static_cast<int>(h.dim()); ++q) {
                (void)induced_rep_on_H(h, v, q, c.seed);
            }
            vs.push_back({"induced_rep_randomized", Verdict::pass()});
        }
        for (auto& n : engine_checks(inst.ss(), c)) vs.push_back(std::move(n));
    }
    finish(c, out, std::move(j), vs);
    return all_ok(vs) ? kOk : kFailure;
}

int cmd_ss_jet(const RunConfig& c, std::ostream& out) {
    const Document d = resolve(c.input);
    if (!d.jet) throw PreconditionError("ss jet needs a jet block");
    const unsigned k = c.order_given ? c.order : d.orders.front();
    const Representation v = d.jet_module ? *d.jet_module : Representation::trivial(d.jet->fiber_algebra());
    const JetInstance inst = jet_complex(d.jet->with_order(k), v);
    Json j = emit_pages(c, inst.ss(), out);
    const LinearisableReport rep = stabilization_report(inst);
    j["order"] = k;
    j["betti"] = rep.betti;
    Json nz = Json::array();
    for (const auto& [r, p, q, rk] : rep.nonzero_differentials) nz.push_back({{"r", r}, {"from", {p, q}}, {"rank", rk}});
    j["nonzero_differentials"] = nz;
    if (!json_mode(c)) {
        out << "order: " << k << "\n";
        out << "H: " << join(rep.betti) << "\n";
        for (const auto& [r, p, q, rk] : rep.nonzero_differentials)
            out << "nonzero d_" << r << " at (" << p << "," << q << "): rank " << rk << "\n";
    }
    std::vector<Named> vs;
    if (c.verify) {
        vs.push_back({"jet_axioms", check_axioms_mod(inst.algebroid)});
        vs.push_back({"e1_identification", e1_invariant_check(inst).verdict});
        if (inst.algebroid.is_linear()) {
            vs.push_back({"linearisable_degeneration", linearisable_stabilization_check(inst).verdict});
        }
        for (auto& n : engine_checks(inst.ss(), c)) vs.push_back(std::move(n));
    }
    finish(c, out, std::move(j), vs);
    return all_ok(vs) ? kOk : kFailure;
}

int cmd_d2check(const RunConfig& c, std::ostream& out) {
    const Document d = resolve(c.input);
    if (!d.g || !d.ideal) throw PreconditionError("d2check needs an extension block");
    const AbelianExtension ext(Subalgebra(*d.g, *d.ideal), module_of(d), d.splitting);
    const auto cmp = d2_check(ext);
    bool ok = true;
    Json arr = Json::array();
    for (const auto& x : cmp) {
        ok = ok && x.equal;
        arr.push_back(d2_to_json(x));
    }
    const bool zero = extension_class(ext).is_zero();
    if (json_mode(c)) {
        out << Json{{"d2", arr}, {"extension_class_zero", zero}, {"ok", ok}}.dump(2) << "\n";
    } else {
        out << "extension class: " << (zero ? "zero" : "nonzero") << "\n";
        out << "  (p,q)  engine  oracle  equal\n";
        for (const auto& x : cmp) {
            std::ostringstream pq;
            pq << "(" << x.p << "," << x.q << ")";
            out << "  " << pq.str() << std::string(pq.str().size() < 7 ? 7 - pq.str().size() : 1, ' ') << x.engine_rank
                << "       " << x.oracle_rank << "       " << (x.equal ? "yes" : "NO") << "\n";
        }
        out << (ok ? "d2 matches the contraction at every (p,q)" : "d2 mismatch") << "\n";
    }
    return ok ? kOk : kFailure;
}

int cmd_catalog_list(const RunConfig& c, std::ostream& out) {
    const auto entries = catalog_load_all();
    if (json_mode(c)) {
        Json arr = Json::array();
        for (const auto& e : entries) arr.push_back({{"name", e.doc.name}, {"kind", e.doc.kind}});
        out << Json{{"entries", arr}}.dump(2) << "\n";
        return kOk;
    }
    std::size_t w = 0;
    for (const auto& e : entries) w = std::max(w, e.doc.name.size());
    for (const auto& e : entries)
        out << e.doc.name << std::string(w + 2 - e.doc.name.size(), ' ') << e.doc.kind
            << std::string(e.doc.kind.size() < 11 ? 11 - e.doc.kind.size() : 1, ' ') << e.doc.description
            << "\n";
    return kOk;
}

int cmd_catalog_show(const RunConfig& c, const std::string& name, std::ostream& out) {
    CatalogEntry e;
    try {
        e = catalog_load(name);
    } catch (const CatalogError& ex) {
        throw InputError(ex.what());
    }
    if (json_mode(c)) {
        out << e.raw.dump(2) << "\n";
        return kOk;
    }
    out << "name: " << e.doc.name << "\nkind: " << e.doc.kind << "\n";
    if (!e.doc.description.empty()) out << "description: " << e.doc.description << "\n";
    for (const auto& [key, item] : e.doc.expected.items()) {
        const Json& v = item["value"];
        out << key << " [" << item.value("provenance", "?") << "]: ";
        if (key == "pages")
            out << v.size() << " page tables";
        else if (key == "orders")
            out << v.size() << " jet orders";
        else
            out << v.dump();
        out << "\n";
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig c;
    CLI::App app{"Exact spectral sequences of filtered Lie algebra and jet complexes", "lass"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--out", c.out, "Output format")->check(CLI::IsMember({"table", "json"}));
    app.add_option("--pages", c.pages, "Last page to print (N or auto)");
    app.add_option("--order", c.order, "Jet order");
    app.add_flag("--verify", c.verify, "Run identification and engine checks");
    app.add_option("--seed", c.seed, "Seed for randomized checks");

    auto input = [&](CLI::App* sub) { sub->add_option("input", c.input, "JSON file or catalog name")->required(); };
    auto* check = app.add_subcommand("check", "Structural checks (Jacobi, flatness, subalgebra, jet axioms)");
    input(check);
    auto* betti = app.add_subcommand("betti", "Betti numbers of the Chevalley-Eilenberg complex");
    input(betti);
    auto* ss = app.add_subcommand("ss", "Spectral sequence pages");
    ss->require_subcommand(1);
    ss->fallthrough();
    auto* hs = ss->add_subcommand("hs", "Hochschild-Serre spectral sequence of a subalgebra");
    input(hs);
    auto* jet = ss->add_subcommand("jet", "Spectral sequence of a finite jet complex");
    input(jet);
    auto* d2 = app.add_subcommand("d2check", "Compare d_2 with the contraction by the extension class");
    input(d2);
    auto* cat = app.add_subcommand("catalog", "Built-in reference instances");
    cat->require_subcommand(1);
    cat->fallthrough();
    auto* list = cat->add_subcommand("list", "List entries");
    auto* show = cat->add_subcommand("show", "Show one entry");
    std::string show_name;
    show->add_option("name", show_name)->required();
    for (auto* s : {check, betti, hs, jet, d2, list, show}) s->fallthrough();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }
    c.order_given = app.count("--order") > 0;

    try {
        if (*check) return cmd_check(c, out);
        if (*betti) return cmd_betti(c, out);
        if (*hs) return cmd_ss_hs(c, out);
        if (*jet) return cmd_ss_jet(c, out);
        if (*d2) return cmd_d2check(c, out);
        if (*list) return cmd_catalog_list(c, out);
        if (*show) return cmd_catalog_show(c, show_name, out);
    } catch (const ParseError& e) {
        err << "parse error at " << e.what() << "\n";
        return kInputError;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const CatalogError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kFailure;
    }
    return kInputError;
}

}  // namespace lass::cli

#include "lass/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "lass/serre.hpp"

#ifndef LASS_DEFAULT_CATALOG_DIR
#define LASS_DEFAULT_CATALOG_DIR "data/catalog"
#endif

namespace lass {

namespace fs = std::filesystem;

namespace {

Json read_json(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw CatalogError("cannot open " + path.string());
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw CatalogError(path.string() + ": " + e.what());
    }
}

// Orders [p, q, dim] triples by (p, q); json's own ordering is not used.
void sort_cells(Json& cells) {
    std::sort(cells.begin(), cells.end(), [](const Json& a, const Json& b) {
        return std::pair(a[0].get<long>(), a[1].get<long>()) < std::pair(b[0].get<long>(), b[1].get<long>());
    });
}

std::string entry_name(const Json& j, const fs::path& path) {
    if (j.is_object() && j.contains("name") && j["name"].is_string()) return j["name"].get<std::string>();
    return path.stem().string();
}

Json cells(const std::vector<Identification>& ids) {
    Json out = Json::array();
    for (const auto& i : ids)
        if (i.oracle_dim != 0) out.push_back(Json::array({i.p, i.q, i.oracle_dim}));
    sort_cells(out);
    return out;
}

Json pages_json(const SpectralSequence& ss, int last) {
    Json out = Json::array();
    for (int r = 0; r <= last; ++r) out.push_back(table_to_json(ss.table(r)));
    return out;
}

void add_spectral(Json& out, const SpectralSequence& ss) {
    const Stabilization st = ss.stabilization();
    out["stabilization_page"] = st.page;
    out["pages"] = pages_json(ss, st.page);
    out["einf"] = cell_list(ss.table(ss.last_page()));
}

}  // namespace

std::string catalog_dir() {
    if (const char* env = std::getenv("LASS_CATALOG"); env && *env) return env;
    return LASS_DEFAULT_CATALOG_DIR;
}

const Json& CatalogEntry::expected(const std::string& key) const {
    if (!has_expected(key)) throw CatalogError(doc.name + ": no expected value \"" + key + "\"");
    return doc.expected[key]["value"];
}

bool CatalogEntry::has_expected(const std::string& key) const {
    return doc.expected.contains(key) && doc.expected[key].contains("value");
}

std::vector<std::string> catalog_list(const std::string& dir) {
    std::vector<std::string> names;
    if (!fs::is_directory(dir)) throw CatalogError("catalog directory not found: " + dir);
    for (const auto& e : fs::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".json") names.push_back(entry_name(read_json(e.path()), e.path()));
    std::sort(names.begin(), names.end());
    return names;
}

CatalogEntry catalog_load(const std::string& name, const std::string& dir) {
    if (!fs::is_directory(dir)) throw CatalogError("catalog directory not found: " + dir);
    for (const auto& e : fs::directory_iterator(dir)) {
        if (!e.is_regular_file() || e.path().extension() != ".json") continue;
        Json j = read_json(e.path());
        if (entry_name(j, e.path()) != name) continue;
        CatalogEntry entry{e.path().string(), j, document_from_json(j)};
        if (entry.doc.name.empty()) entry.doc.name = name;
        return entry;
    }
    throw CatalogError("unknown catalog entry: " + name);
}

std::vector<CatalogEntry> catalog_load_all(const std::string& dir) {
    std::vector<CatalogEntry> out;
    for (const auto& name : catalog_list(dir)) out.push_back(catalog_load(name, dir));
    return out;
}

Json cell_list(const PageTable& t) {
    Json out = Json::array();
    for (int p = 0; p <= t.max_p; ++p)
        for (int n = 0; n <= t.top; ++n)
            if (const auto d = t.dim(p, n - p); d != 0) out.push_back(Json::array({p, n - p, d}));
    sort_cells(out);
    return out;
}

Json regenerate_expected(const Document& doc) {
    Json out = Json::object();
    if (doc.kind == "jet") {
        Json orders = Json::array();
        const Representation v = doc.jet_module ? *doc.jet_module : Representation::trivial(doc.jet->fiber_algebra());
        for (unsigned k : doc.orders) {
            const JetInstance inst = jet_complex(doc.jet->with_order(k), v);
            Json o{{"order", k}, {"betti", betti_numbers(inst.complex())}};
            Json e1 = Json::array();
            for (int p = 0; p <= static_cast<int>(k); ++p)
                for (int n = 0; n <= inst.complex().top(); ++n)
                    if (const auto d = sym_cohomology_dim(inst.algebroid, v, static_cast<std::size_t>(p), n); d != 0)
                        e1.push_back(Json::array({p, n - p, d}));
            sort_cells(e1);
            o["e1"] = e1;
            add_spectral(o, inst.ss());
            Json nz = Json::array();
            for (const auto& [r, p, q, rk] : stabilization_report(inst).nonzero_differentials)
                nz.push_back({{"r", r}, {"from", Json::array({p, q})}, {"rank", rk}});
            o["nonzero_differentials"] = nz;
            orders.push_back(std::move(o));
        }
        out["orders"] = orders;
        return out;
    }

    const Representation v = module_of(doc);
    out["betti"] = betti_numbers(ce_complex(*doc.g, v));
    if (doc.kind == "lie") return out;

    const Matrix& span = doc.kind == "extension" ? *doc.ideal : *doc.subalgebra;
    const Subalgebra h(*doc.g, span);
    const HSInstance inst = hs_filtration(h, v);
    out["e1"] = cells(e1_table(inst));
    if (h.is_ideal()) out["e2"] = cells(e2_table(inst));
    add_spectral(out, inst.ss());

    if (doc.kind == "extension") {
        const AbelianExtension ext(h, v, doc.splitting);
        out["extension_class_zero"] = extension_class(ext).is_zero();
        Json ranks = Json::array();
        for (const auto& c : d2_check(ext))
            if (c.oracle_rank != 0) ranks.push_back({{"pq", Json::array({c.p, c.q})}, {"rank", c.oracle_rank}});
        out["d2_ranks"] = ranks;
    }
    return out;
}

std::vector<std::string> diff_expected(const Json& stored, const Json& fresh) {
    std::vector<std::string> out;
    for (const auto& [key, item] : stored.items()) {
        if (!item.contains("value")) {
            out.push_back(key + ": stored entry has no value");
            continue;
        }
        if (!fresh.contains(key)) {
            out.push_back(key + ": not regenerated");
            continue;
        }
        if (item["value"] != fresh[key])
            out.push_back(key + ": stored " + item["value"].dump() + " vs regenerated " + fresh[key].dump());
    }
    return out;
}

}  // namespace lass

#include "lass/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace lass {

namespace {

const Json& field(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object()) throw ParseError(where, "expected an object");
    const auto it = j.find(key);
    if (it == j.end()) throw ParseError(where, std::string("missing field \"") + key + "\"");
    return *it;
}

std::size_t index_from_json(const Json& j, std::size_t bound, const std::string& where) {
    if (!j.is_number_integer() || j.get<long long>() < 0) throw ParseError(where, "expected a non-negative integer");
    const auto v = j.get<std::size_t>();
    if (v >= bound) throw ParseError(where, "index " + std::to_string(v) + " out of range (< " + std::to_string(bound) + ")");
    return v;
}

std::size_t size_from_json(const Json& j, const std::string& where) {
    if (!j.is_number_integer() || j.get<long long>() < 0) throw ParseError(where, "expected a non-negative integer");
    return j.get<std::size_t>();
}

Vector vector_from_json(const Json& j, std::size_t dim, const std::string& where) {
    if (!j.is_array()) throw ParseError(where, "expected an array");
    if (j.size() != dim)
        throw ParseError(where, "expected " + std::to_string(dim) + " entries, got " + std::to_string(j.size()));
    Vector v;
    for (std::size_t i = 0; i < j.size(); ++i) v.push_back(scalar_from_json(j[i], where + "/" + std::to_string(i)));
    return v;
}

std::vector<std::string> labels_from_json(const Json& j, const char* key, std::size_t dim, const std::string& where) {
    if (!j.contains(key)) return {};
    const Json& b = j[key];
    if (!b.is_array() || b.size() != dim) throw ParseError(where + "/" + key, "expected " + std::to_string(dim) + " labels");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (!b[i].is_string()) throw ParseError(where + "/" + key + "/" + std::to_string(i), "expected a string");
        out.push_back(b[i].get<std::string>());
    }
    if (std::set<std::string>(out.begin(), out.end()).size() != out.size())
        throw ParseError(where + "/" + key, "labels are not unique");
    return out;
}

Exponent exponent_from_json(const Json& j, std::size_t vars, const std::string& where) {
    if (!j.is_array() || j.size() != vars) throw ParseError(where, "expected an exponent vector of length " + std::to_string(vars));
    Exponent e;
    for (std::size_t i = 0; i < j.size(); ++i) e.push_back(static_cast<unsigned>(size_from_json(j[i], where + "/" + std::to_string(i))));
    return e;
}

Json exponent_to_json(const Exponent& e) {
    Json out = Json::array();
    for (auto x : e) out.push_back(x);
    return out;
}

Json cell_json(int p, int q) { return Json::array({p, q}); }

}  // namespace

Json scalar_to_json(const Scalar& x) { return to_string(x); }

Scalar scalar_from_json(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Scalar(std::to_string(j.get<long long>()));
    if (!j.is_string()) throw ParseError(where, "expected a rational number as a string or integer");
    try {
        return parse_scalar(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw ParseError(where, e.what());
    }
}

Json matrix_to_json(const Matrix& m) {
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m(r, c)));
        out.push_back(std::move(row));
    }
    return out;
}

Matrix matrix_from_json(const Json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where, "expected an array of rows");
    if (j.empty()) return {};
    if (!j[0].is_array()) throw ParseError(where + "/0", "expected a row array");
    const std::size_t cols = j[0].size();
    Matrix m(j.size(), cols);
    for (std::size_t r = 0; r < j.size(); ++r) {
        const Vector row = vector_from_json(j[r], cols, where + "/" + std::to_string(r));
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
    }
    return m;
}

Matrix columns_from_json(const Json& j, std::size_t dim, const std::string& where) {
    if (!j.is_array()) throw ParseError(where, "expected an array of vectors");
    Matrix m(dim, j.size());
    for (std::size_t c = 0; c < j.size(); ++c) m.set_column(c, vector_from_json(j[c], dim, where + "/" + std::to_string(c)));
    return m;
}

Json columns_to_json(const Matrix& m) {
    Json out = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
        Json col = Json::array();
        for (std::size_t r = 0; r < m.rows(); ++r) col.push_back(scalar_to_json(m(r, c)));
        out.push_back(std::move(col));
    }
    return out;
}

Json rep_to_json(const Representation& v) {
    Json out{{"dim", v.dim()}};
    Json mats = Json::array();
    for (const auto& m : v.matrices()) mats.push_back(matrix_to_json(m));
    out["matrices"] = std::move(mats);
    if (!v.labels().empty()) out["basis"] = v.labels();
    return out;
}

Representation rep_from_json(const Json& j, std::size_t generators, const std::string& where) {
    const std::size_t dim = size_from_json(field(j, "dim", where), where + "/dim");
    const Json& mats = field(j, "matrices", where);
    if (!mats.is_array() || mats.size() != generators)
        throw ParseError(where + "/matrices", "expected " + std::to_string(generators) + " matrices");
    std::vector<Matrix> out;
    for (std::size_t a = 0; a < mats.size(); ++a) {
        const std::string w = where + "/matrices/" + std::to_string(a);
        if (!mats[a].is_array() || mats[a].size() != dim) throw ParseError(w, "expected " + std::to_string(dim) + " rows");
        Matrix m(dim, dim);
        for (std::size_t r = 0; r < dim; ++r) {
            const Vector row = vector_from_json(mats[a][r], dim, w + "/" + std::to_string(r));
            for (std::size_t c = 0; c < dim; ++c) m(r, c) = row[c];
        }
        out.push_back(std::move(m));
    }
    return Representation(dim, std::move(out), labels_from_json(j, "basis", dim, where));
}

Json lie_to_json(const LieAlgebra& g, const Representation* v) {
    Json out{{"dim", g.dim()}};
    if (!g.labels().empty()) out["basis"] = g.labels();
    Json brackets = Json::array();
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = i + 1; j < g.dim(); ++j) {
            Json coeffs = Json::object();
            for (std::size_t k = 0; k < g.dim(); ++k)
                if (sgn(g.structure(i, j)[k]) != 0) coeffs[std::to_string(k)] = scalar_to_json(g.structure(i, j)[k]);
            if (!coeffs.empty()) brackets.push_back({{"i", i}, {"j", j}, {"coeffs", coeffs}});
        }
    out["brackets"] = std::move(brackets);
    if (v) out["representation"] = rep_to_json(*v);
    return out;
}

LieAlgebra lie_from_json(const Json& j, const std::string& where) {
    const std::size_t dim = size_from_json(field(j, "dim", where), where + "/dim");
    std::vector<LieAlgebra::BracketEntry> entries;
    if (j.contains("brackets")) {
        const Json& b = j["brackets"];
        if (!b.is_array()) throw ParseError(where + "/brackets", "expected an array");
        for (std::size_t e = 0; e < b.size(); ++e) {
            const std::string w = where + "/brackets/" + std::to_string(e);
            const std::size_t i = index_from_json(field(b[e], "i", w), dim, w + "/i");
            const std::size_t jj = index_from_json(field(b[e], "j", w), dim, w + "/j");
            const Json& c = field(b[e], "coeffs", w);
            Vector coeffs(dim);
            if (c.is_object()) {
                for (const auto& [key, value] : c.items()) {
                    std::size_t k = 0;
                    try {
                        std::size_t used = 0;
                        k = std::stoul(key, &used);
                        if (used != key.size()) throw std::invalid_argument(key);
                    } catch (const std::exception&) {
                        throw ParseError(w + "/coeffs", "key \"" + key + "\" is not an index");
                    }
                    if (k >= dim) throw ParseError(w + "/coeffs/" + key, "index out of range");
                    coeffs[k] = scalar_from_json(value, w + "/coeffs/" + key);
                }
            } else {
                coeffs = vector_from_json(c, dim, w + "/coeffs");
            }
            for (const auto& prev : entries)
                if (prev.i == i && prev.j == jj) throw ParseError(w, "bracket listed twice");
            entries.push_back({i, jj, std::move(coeffs)});
        }
    }
    return LieAlgebra::from_brackets(dim, entries, labels_from_json(j, "basis", dim, where));
}

Json polynomial_terms_to_json(const Polynomial& f) {
    Json out = Json::array();
    for (const auto& [e, c] : f)
        if (sgn(c) != 0) out.push_back({{"monomial", exponent_to_json(e)}, {"coeff", scalar_to_json(c)}});
    return out;
}

Json jet_to_json(const PolyJetAlgebroid& a) {
    Json anchor = Json::array();
    for (std::size_t g = 0; g < a.rank(); ++g) {
        Json fieldj = Json::array();
        for (std::size_t i = 0; i < a.base_dim(); ++i)
            for (const auto& [e, c] : a.anchor(g, i))
                if (sgn(c) != 0) fieldj.push_back({{"coord", i}, {"monomial", exponent_to_json(e)}, {"coeff", scalar_to_json(c)}});
        anchor.push_back({{"gen", g}, {"field", fieldj}});
    }
    Json sf = Json::array();
    for (std::size_t i = 0; i < a.rank(); ++i)
        for (std::size_t j = i + 1; j < a.rank(); ++j)
            for (std::size_t k = 0; k < a.rank(); ++k)
                for (const auto& [e, c] : a.structure(i, j, k))
                    if (sgn(c) != 0)
                        sf.push_back({{"i", i}, {"j", j}, {"k", k}, {"monomial", exponent_to_json(e)}, {"coeff", scalar_to_json(c)}});
    return {{"fiber_dim", a.rank()}, {"base_dim", a.base_dim()}, {"order", a.order()}, {"anchor", anchor}, {"structure_functions", sf}};
}

PolyJetAlgebroid jet_from_json(const Json& j, const std::string& where) {
    const unsigned order = static_cast<unsigned>(size_from_json(field(j, "order", where), where + "/order"));
    if (j.contains("action")) {
        const std::string w = where + "/action";
        const LieAlgebra g = lie_from_json(j["action"], w);
        const Representation rho = rep_from_json(field(j["action"], "representation", w), g.dim(), w + "/representation");
        return PolyJetAlgebroid::action(g, rho, order);
    }
    const std::size_t n = size_from_json(field(j, "fiber_dim", where), where + "/fiber_dim");
    const std::size_t m = size_from_json(field(j, "base_dim", where), where + "/base_dim");
    std::vector<std::vector<Polynomial>> anchor(n, std::vector<Polynomial>(m));
    const Json& an = field(j, "anchor", where);
    if (!an.is_array()) throw ParseError(where + "/anchor", "expected an array");
    for (std::size_t e = 0; e < an.size(); ++e) {
        const std::string w = where + "/anchor/" + std::to_string(e);
        const std::size_t g = index_from_json(field(an[e], "gen", w), n, w + "/gen");
        const Json& terms = field(an[e], "field", w);
        if (!terms.is_array()) throw ParseError(w + "/field", "expected an array");
        for (std::size_t t = 0; t < terms.size(); ++t) {
            const std::string wt = w + "/field/" + std::to_string(t);
            const std::size_t i = index_from_json(field(terms[t], "coord", wt), m, wt + "/coord");
            const Exponent ex = exponent_from_json(field(terms[t], "monomial", wt), m, wt + "/monomial");
            anchor[g][i] = add(anchor[g][i], monomial(ex, scalar_from_json(field(terms[t], "coeff", wt), wt + "/coeff")));
        }
    }
    std::vector<Polynomial> structure(n * n * n);
    std::set<std::pair<std::size_t, std::size_t>> listed;
    if (j.contains("structure_functions")) {
        const Json& sf = j["structure_functions"];
        if (!sf.is_array()) throw ParseError(where + "/structure_functions", "expected an array");
        for (std::size_t e = 0; e < sf.size(); ++e) {
            const std::string w = where + "/structure_functions/" + std::to_string(e);
            const std::size_t a = index_from_json(field(sf[e], "i", w), n, w + "/i");
            const std::size_t b = index_from_json(field(sf[e], "j", w), n, w + "/j");
            const std::size_t d = index_from_json(field(sf[e], "k", w), n, w + "/k");
            const Exponent ex = exponent_from_json(field(sf[e], "monomial", w), m, w + "/monomial");
            auto& slot = structure[(a * n + b) * n + d];
            slot = add(slot, monomial(ex, scalar_from_json(field(sf[e], "coeff", w), w + "/coeff")));
            listed.insert({a, b});
        }
    }
    // Unlisted (j, i) pairs are filled by antisymmetry.
    for (const auto& [a, b] : listed)
        if (!listed.count({b, a}))
            for (std::size_t d = 0; d < n; ++d) structure[(b * n + a) * n + d] = scale(-1, structure[(a * n + b) * n + d]);
    try {
        return PolyJetAlgebroid(n, m, order, std::move(anchor), std::move(structure));
    } catch (const StructuralError& e) {
        throw ParseError(where, e.what());
    }
}

Document document_from_json(const Json& root) {
    if (!root.is_object()) throw ParseError("", "expected a JSON object");
    Document d;
    const Json* payload = &root;
    std::string base;
    if (root.contains("schema")) {
        if (!root["schema"].is_string() || root["schema"].get<std::string>() != "lass.catalog/1")
            throw ParseError("/schema", "unsupported schema (expected \"lass.catalog/1\")");
        payload = &field(root, "payload", "");
        base = "/payload";
        if (root.contains("expected")) d.expected = root["expected"];
    }
    auto text = [&](const char* key) {
        return root.contains(key) && root[key].is_string() ? root[key].get<std::string>() : std::string();
    };
    d.name = text("name");
    d.kind = text("kind");
    d.description = text("description");
    const Json& p = *payload;
    if (!p.is_object()) throw ParseError(base, "expected an object");

    if (p.contains("lie_algebra")) {
        const std::string w = base + "/lie_algebra";
        d.g = lie_from_json(p["lie_algebra"], w);
        if (p["lie_algebra"].contains("representation"))
            d.v = rep_from_json(p["lie_algebra"]["representation"], d.g->dim(), w + "/representation");
    }
    if (p.contains("subalgebra")) {
        if (!d.g) throw ParseError(base + "/subalgebra", "subalgebra given without a Lie algebra");
        d.subalgebra = columns_from_json(field(p["subalgebra"], "basis", base + "/subalgebra"), d.g->dim(),
                                         base + "/subalgebra/basis");
    }
    if (p.contains("extension")) {
        const std::string w = base + "/extension";
        if (!d.g) throw ParseError(w, "extension given without a Lie algebra");
        d.ideal = columns_from_json(field(field(p["extension"], "ideal", w), "basis", w + "/ideal"), d.g->dim(),
                                    w + "/ideal/basis");
        if (p["extension"].contains("splitting"))
            d.splitting = columns_from_json(p["extension"]["splitting"], d.g->dim(), w + "/splitting");
    }
    if (p.contains("jet")) {
        d.jet = jet_from_json(p["jet"], base + "/jet");
        if (p.contains("module"))
            d.jet_module = rep_from_json(p["module"], d.jet->rank(), base + "/module");
        if (p.contains("orders")) {
            const Json& o = p["orders"];
            if (!o.is_array()) throw ParseError(base + "/orders", "expected an array");
            for (std::size_t i = 0; i < o.size(); ++i)
                d.orders.push_back(static_cast<unsigned>(size_from_json(o[i], base + "/orders/" + std::to_string(i))));
        }
        if (d.orders.empty()) d.orders.push_back(d.jet->order());
    }
    if (d.kind.empty()) {
        d.kind = d.jet ? "jet" : d.ideal ? "extension" : d.subalgebra ? "hs" : "lie";
    }
    if (!d.g && !d.jet) throw ParseError(base, "document has neither \"lie_algebra\" nor \"jet\"");
    return d;
}

Document load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, "cannot open file");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ParseError(path, std::string("invalid JSON (") + e.what() + ")");
    }
    return document_from_json(j);
}

Json payload_to_json(const Document& d) {
    Json out = Json::object();
    if (d.g) out["lie_algebra"] = lie_to_json(*d.g, d.v ? &*d.v : nullptr);
    if (d.subalgebra) out["subalgebra"] = {{"basis", columns_to_json(*d.subalgebra)}};
    if (d.ideal) {
        out["extension"] = {{"ideal", {{"basis", columns_to_json(*d.ideal)}}}};
        if (d.splitting) out["extension"]["splitting"] = columns_to_json(*d.splitting);
    }
    if (d.jet) {
        out["jet"] = jet_to_json(*d.jet);
        if (d.jet_module) out["module"] = rep_to_json(*d.jet_module);
        out["orders"] = d.orders;
    }
    return out;
}

Representation module_of(const Document& d) {
    if (d.v) return *d.v;
    return Representation::trivial(*d.g);
}

Json table_to_json(const PageTable& t) {
    Json entries = Json::array();
    for (int p = 0; p <= t.max_p; ++p)
        for (int n = 0; n <= t.top; ++n) entries.push_back({{"p", p}, {"q", n - p}, {"dim", t.dim(p, n - p)}});
    Json diffs = Json::array();
    auto ranks = t.ranks;
    std::sort(ranks.begin(), ranks.end());
    for (const auto& [p, q, rk] : ranks)
        diffs.push_back({{"from", cell_json(p, q)}, {"to", cell_json(p + t.r, q - t.r + 1)}, {"rank", rk}});
    return {{"r", t.r}, {"max_p", t.max_p}, {"top", t.top}, {"entries", entries}, {"differentials", diffs}};
}

PageTable table_from_json(const Json& j) {
    PageTable t;
    t.r = field(j, "r", "").get<int>();
    t.max_p = field(j, "max_p", "").get<int>();
    t.top = field(j, "top", "").get<int>();
    t.dims.assign(static_cast<std::size_t>(t.max_p + 1), std::vector<std::size_t>(static_cast<std::size_t>(t.top + 1), 0));
    for (const auto& e : field(j, "entries", "")) {
        const int p = e.at("p").get<int>();
        const int n = p + e.at("q").get<int>();
        if (p < 0 || p > t.max_p || n < 0 || n > t.top) throw ParseError("/entries", "cell outside the window");
        t.dims[static_cast<std::size_t>(p)][static_cast<std::size_t>(n)] = e.at("dim").get<std::size_t>();
    }
    for (const auto& d : field(j, "differentials", ""))
        t.ranks.emplace_back(d.at("from")[0].get<int>(), d.at("from")[1].get<int>(), d.at("rank").get<std::size_t>());
    return t;
}

Json verdict_to_json(const Verdict& v) {
    Json out{{"ok", v.ok}};
    if (!v.detail.empty()) out["detail"] = v.detail;
    if (!v.site.empty()) out["site"] = v.site;
    return out;
}

Json d2_to_json(const D2Comparison& c) {
    return {{"pq", cell_json(c.p, c.q)}, {"engine_rank", c.engine_rank}, {"oracle_rank", c.oracle_rank}, {"equal", c.equal}};
}

}  // namespace lass

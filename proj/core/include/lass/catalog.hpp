#pragma once

// Built-in reference instances stored as JSON files, one per entry, under the
// schema id "lass.catalog/1".
//
// Every expected value is stored as {"value": ..., "provenance": "..."}.

#include <stdexcept>
#include <string>
#include <vector>

#include "lass/io.hpp"

namespace lass {

class CatalogError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// $LASS_CATALOG if set, otherwise the data directory the library was built with.
std::string catalog_dir();

struct CatalogEntry {
    std::string path;
    Json raw;
    Document doc;

    /// Stored value of an expected key; throws CatalogError if absent.
    [[nodiscard]] const Json& expected(const std::string& key) const;
    [[nodiscard]] bool has_expected(const std::string& key) const;
};

/// Entry names, sorted.
std::vector<std::string> catalog_list(const std::string& dir = catalog_dir());
/// Throws CatalogError for an unknown name.
CatalogEntry catalog_load(const std::string& name, const std::string& dir = catalog_dir());
std::vector<CatalogEntry> catalog_load_all(const std::string& dir = catalog_dir());

/// Recomputes every expected quantity of a document through the library:
/// Betti numbers from the cohomology of the complex, E_1 and E_2 from their
/// oracle models, pages and stabilization from the spectral engine, d_2 ranks
/// from the contraction oracle. Keys match the stored "expected" block.
Json regenerate_expected(const Document& doc);

/// One line per stored key whose value differs from `fresh`.
std::vector<std::string> diff_expected(const Json& stored, const Json& fresh);

/// Cells of a (p, q) table as [[p, q, dim], ...], nonzero only.
Json cell_list(const PageTable& t);

}  // namespace lass

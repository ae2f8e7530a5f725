#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spssot/dataset.hpp"

namespace spssot {

struct CsvSchema {
    std::vector<std::string> feature_names;
    std::optional<std::string> label_column;  // usually "label"
};

// UTF-8, comma-separated, first row header. Missing cells are empty and get
// column-mean imputed after parsing. The header must match the schema
// (features in order, label column last when declared).
TabularDataset load_csv(const std::string& path, const CsvSchema& schema,
                        DomainTag tag = DomainTag::source);

// Reads the header to build the schema: every column except `label` is a
// feature. Returns the dataset as parsed by load_csv.
TabularDataset load_csv_autoschema(const std::string& path, DomainTag tag);

void write_csv(const TabularDataset& data, const std::string& path);

}  // namespace spssot

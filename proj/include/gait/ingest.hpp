#pragma once

#include "gait/dataset.hpp"

#include <iosfwd>
#include <string>

namespace gait {

/// Parse a gait CSV into a dataset. Columns are bound by header name, so
/// column order in the file is irrelevant. Throws MissingColumnError,
/// BadLabelError, NonNumericError, DuplicateIdError, EmptyFileError, or
/// CsvFormatError. `source_name` is used in error text and provenance.
GaitDataset parse_dataset(std::istream& in, const std::string& source_name = "stream");
GaitDataset parse_dataset_string(const std::string& text,
                                 const std::string& source_name = "string");
GaitDataset load_dataset(const std::string& path);

/// Write a dataset in the canonical column order with round-trip precision:
/// parse(serialize(parse(x))) reproduces parse(x) exactly.
void serialize_dataset(const GaitDataset& ds, std::ostream& out);
std::string serialize_dataset_string(const GaitDataset& ds);
void save_dataset(const GaitDataset& ds, const std::string& path);

/// Keep only rows tagged as linear walking, preserving relative order.
/// Throws EmptyAfterFilterError if nothing survives.
GaitDataset filter_linear_phases(const GaitDataset& ds);

} // namespace gait

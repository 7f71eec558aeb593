#pragma once

#include "claf/error.hpp"
#include "claf/graph.hpp"

#include <string>
#include <vector>

namespace claf::kg {

/// Delimiters of the structured extraction format. A record looks like
///
///   ("entity"<|>Photosynthesis<|>process<|>plants make food<|>Basic level)
///
/// where tuple_open/tuple_close wrap the record, field_delimiter separates
/// the fields, record_delimiter separates records and completion_delimiter
/// terminates the whole listing. Everything is configurable; all five must
/// be non-empty and pairwise distinct.
struct ExtractionDelimiters {
    std::string tuple_open = "(";
    std::string tuple_close = ")";
    std::string field_delimiter = "<|>";
    std::string record_delimiter = "##";
    std::string completion_delimiter = "<|COMPLETE|>";

    void validate() const; // throws ClafError(InvalidConfig)
};

struct ParseIssue {
    std::size_t record_index = 0;
    ErrorCode code = ErrorCode::MalformedRecord;
    std::string message;
};

struct ParseResult {
    std::vector<Entity> entities;
    std::vector<Relation> relations;
    std::vector<std::string> content_keywords;
    std::vector<ParseIssue> issues;
};

/// Parses the raw completion of the extraction prompt. Malformed records are
/// collected as issues (MalformedRecord / UnknownLevel) and skipped; parsing
/// always continues. Text after the completion delimiter is ignored.
ParseResult parse_extraction_output(const std::string& raw,
                                    const ExtractionDelimiters& delims = {});

} // namespace claf::kg

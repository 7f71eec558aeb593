#include "claf/extraction.hpp"

#include "claf/textutil.hpp"

#include <array>
#include <charconv>

namespace claf::kg {

namespace {

std::string strip_quotes(const std::string& s) {
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"')
        return s.substr(1, s.size() - 2);
    return s;
}

bool parse_strength(const std::string& s, double& out) {
    const std::string t = text::trim(s);
    if (t.empty()) return false;
    const char* begin = t.data();
    const char* end = begin + t.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc{} && ptr == end;
}

std::vector<std::string> split_keywords(const std::string& field) {
    std::vector<std::string> out;
    for (const std::string& part : text::split(field, ",")) {
        std::string k = text::trim(part);
        if (!k.empty()) out.push_back(std::move(k));
    }
    return out;
}

} // namespace

void ExtractionDelimiters::validate() const {
    const std::array<const std::string*, 5> all = {
        &tuple_open, &tuple_close, &field_delimiter, &record_delimiter, &completion_delimiter};
    for (const std::string* d : all)
        if (d->empty())
            throw ClafError(ErrorCode::InvalidConfig, "extraction delimiter must be non-empty");
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j)
            if (*all[i] == *all[j])
                throw ClafError(ErrorCode::InvalidConfig,
                                "extraction delimiters must be pairwise distinct");
}

ParseResult parse_extraction_output(const std::string& raw, const ExtractionDelimiters& delims) {
    delims.validate();
    ParseResult result;

    std::string body = raw;
    if (std::size_t done = body.find(delims.completion_delimiter); done != std::string::npos)
        body = body.substr(0, done);

    std::size_t index = 0;
    for (const std::string& chunk : text::split(body, delims.record_delimiter)) {
        std::string record = text::trim(chunk);
        if (record.empty()) continue;
        const std::size_t record_index = index++;

        auto issue = [&](ErrorCode code, std::string message) {
            result.issues.push_back({record_index, code, std::move(message)});
        };

        if (record.rfind(delims.tuple_open, 0) != 0 ||
            record.size() < delims.tuple_open.size() + delims.tuple_close.size() ||
            record.compare(record.size() - delims.tuple_close.size(),
                           delims.tuple_close.size(), delims.tuple_close) != 0) {
            issue(ErrorCode::MalformedRecord, "record not enclosed in tuple delimiters");
            continue;
        }
        record = record.substr(delims.tuple_open.size(),
                               record.size() - delims.tuple_open.size() - delims.tuple_close.size());

        std::vector<std::string> fields = text::split(record, delims.field_delimiter);
        for (std::string& f : fields) f = text::trim(f);
        const std::string kind = text::fold(strip_quotes(fields[0]));

        if (kind == "entity") {
            if (fields.size() != 5) {
                issue(ErrorCode::MalformedRecord,
                      "entity record expects 4 fields, got " + std::to_string(fields.size() - 1));
                continue;
            }
            const int level = parse_level_phrase(fields[4]);
            if (level < 0) {
                issue(ErrorCode::UnknownLevel, "unknown cognitive level '" + fields[4] + "'");
                continue;
            }
            if (fields[1].empty()) {
                issue(ErrorCode::MalformedRecord, "entity record with empty name");
                continue;
            }
            result.entities.push_back({fields[1], fields[2], fields[3], level});
        } else if (kind == "relationship") {
            if (fields.size() != 7) {
                issue(ErrorCode::MalformedRecord,
                      "relationship record expects 6 fields, got " +
                          std::to_string(fields.size() - 1));
                continue;
            }
            const int level = parse_level_phrase(fields[6]);
            if (level < 0) {
                issue(ErrorCode::UnknownLevel, "unknown cognitive level '" + fields[6] + "'");
                continue;
            }
            double strength = 0.0;
            if (!parse_strength(fields[5], strength) || strength < 0.0 || strength > 10.0) {
                issue(ErrorCode::MalformedRecord,
                      "relationship strength not a number in [0,10]: '" + fields[5] + "'");
                continue;
            }
            if (canonical_key(fields[1]) == canonical_key(fields[2])) {
                issue(ErrorCode::MalformedRecord, "relationship endpoints must differ");
                continue;
            }
            result.relations.push_back(
                {fields[1], fields[2], fields[3], split_keywords(fields[4]), strength, level});
        } else if (kind == "content_keywords") {
            if (fields.size() != 2) {
                issue(ErrorCode::MalformedRecord,
                      "content_keywords record expects 1 field, got " +
                          std::to_string(fields.size() - 1));
                continue;
            }
            for (std::string& k : split_keywords(fields[1]))
                result.content_keywords.push_back(std::move(k));
        } else {
            issue(ErrorCode::MalformedRecord, "unknown record kind '" + kind + "'");
        }
    }

    return result;
}

} // namespace claf::kg

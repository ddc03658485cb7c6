#include "render.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

#include "cyclolat/errors.hpp"

namespace cyclolat::cli {

std::string format_double(double value, int precision) {
    if (!std::isfinite(value)) throw Error("non-finite value reached the output layer");
    char buffer[64];
    const std::to_chars_result result =
        precision > 0 ? std::to_chars(buffer, buffer + sizeof buffer, value,
                                      std::chars_format::general, precision)
                      : std::to_chars(buffer, buffer + sizeof buffer, value,
                                      std::chars_format::general);
    return std::string(buffer, result.ptr);
}

std::string csv_escape(std::string_view field) {
    if (field.find_first_of(",\"\n") == std::string_view::npos) return std::string(field);
    std::string escaped = "\"";
    for (const char c : field) {
        if (c == '"') escaped += '"';
        escaped += c;
    }
    escaped += '"';
    return escaped;
}

std::string csv_row(const std::vector<std::string>& fields) {
    std::string row;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) row += ',';
        row += csv_escape(fields[i]);
    }
    row += '\n';
    return row;
}

JsonBuilder& JsonBuilder::begin_object() {
    separate();
    out_ += '{';
    first_in_scope_.push_back(true);
    return *this;
}

JsonBuilder& JsonBuilder::end_object() {
    out_ += '}';
    first_in_scope_.pop_back();
    return *this;
}

JsonBuilder& JsonBuilder::begin_array() {
    separate();
    out_ += '[';
    first_in_scope_.push_back(true);
    return *this;
}

JsonBuilder& JsonBuilder::end_array() {
    out_ += ']';
    first_in_scope_.pop_back();
    return *this;
}

namespace {

void append_quoted(std::string& out, std::string_view text) {
    out += '"';
    for (const char c : text) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    out += '"';
}

}  // namespace

JsonBuilder& JsonBuilder::key(std::string_view name) {
    separate();
    append_quoted(out_, name);
    out_ += ':';
    value_pending_ = true;
    return *this;
}

JsonBuilder& JsonBuilder::number(double value) {
    separate();
    out_ += format_double(value, precision_);
    return *this;
}

JsonBuilder& JsonBuilder::integer(std::int64_t value) {
    separate();
    out_ += std::to_string(value);
    return *this;
}

JsonBuilder& JsonBuilder::string(std::string_view value) {
    separate();
    append_quoted(out_, value);
    return *this;
}

JsonBuilder& JsonBuilder::boolean(bool value) {
    separate();
    out_ += value ? "true" : "false";
    return *this;
}

std::string JsonBuilder::take() {
    out_ += '\n';
    return std::move(out_);
}

void JsonBuilder::separate() {
    if (value_pending_) {
        value_pending_ = false;
        return;
    }
    if (first_in_scope_.empty()) return;
    if (!first_in_scope_.back())
        out_ += ',';
    else
        first_in_scope_.back() = false;
}

}  // namespace cyclolat::cli

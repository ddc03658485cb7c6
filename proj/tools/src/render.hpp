#pragma once

// Output plumbing for the CLI: deterministic number formatting, CSV field
// escaping, and a small ordered JSON builder.  Everything locale-independent.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cyclolat::cli {

enum class OutputFormat { csv, json };

struct RenderOptions {
    OutputFormat format = OutputFormat::csv;
    int precision = 6;  // significant digits; 0 = shortest round-trip
};

// Shortest-round-trip or fixed-significant-digit decimal rendering.
// Throws Error on non-finite input (forbidden in every payload).
std::string format_double(double value, int precision);

// RFC-4180 style: quotes the field iff it contains a comma, quote or newline.
std::string csv_escape(std::string_view field);

std::string csv_row(const std::vector<std::string>& fields);

// Ordered streaming JSON builder (objects keep insertion order, output is one
// compact line). The caller is responsible for balanced begin/end calls.
class JsonBuilder {
public:
    explicit JsonBuilder(int precision) : precision_(precision) {}

    JsonBuilder& begin_object();
    JsonBuilder& end_object();
    JsonBuilder& begin_array();
    JsonBuilder& end_array();
    JsonBuilder& key(std::string_view name);
    JsonBuilder& number(double value);
    JsonBuilder& integer(std::int64_t value);
    JsonBuilder& string(std::string_view value);
    JsonBuilder& boolean(bool value);

    // Finishes the payload with a trailing newline.
    std::string take();

private:
    void separate();

    std::string out_;
    std::vector<bool> first_in_scope_;
    bool value_pending_ = false;
    int precision_;
};

}  // namespace cyclolat::cli

#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "hausmorph/shape.hpp"

namespace hausmorph {

/// Malformed well-known text. `offset()` is the byte position of the problem.
class WktSyntaxError : public std::runtime_error {
public:
    WktSyntaxError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Parses POLYGON, MULTIPOLYGON or their EMPTY forms. Rings may be given
/// closed (first vertex repeated) or open, in either orientation; the result
/// is oriented and validated. Throws WktSyntaxError or ValidationError.
Shape parse_wkt(std::string_view text);

/// POLYGON for one polygon, MULTIPOLYGON otherwise, "MULTIPOLYGON EMPTY" for
/// the empty shape. Coordinates use the shortest round-trip representation.
std::string emit_wkt(const Shape& shape);

Shape read_wkt_file(const std::string& path);
void write_wkt_file(const std::string& path, const Shape& shape);

}  // namespace hausmorph

#include "hausmorph/wkt.hpp"

#include <cctype>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <system_error>

#include "hausmorph/io.hpp"

namespace hausmorph {

namespace {

class WktParser {
public:
    explicit WktParser(std::string_view text) : text_(text) {}

    Shape parse() {
        Shape shape;
        const std::string keyword = read_keyword();
        if (keyword == "POLYGON") {
            if (try_empty()) {
                // empty polygon
            } else {
                shape.polygons.push_back(read_polygon());
            }
        } else if (keyword == "MULTIPOLYGON") {
            if (!try_empty()) {
                expect('(');
                do {
                    shape.polygons.push_back(read_polygon());
                } while (accept(','));
                expect(')');
            }
        } else {
            fail("expected POLYGON or MULTIPOLYGON", keyword_pos_);
        }
        skip_space();
        if (pos_ != text_.size()) fail("unexpected trailing characters", pos_);
        return shape;
    }

private:
    [[noreturn]] void fail(const std::string& what, std::size_t at) { throw WktSyntaxError(what, at); }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'", pos_);
    }

    std::string read_keyword() {
        skip_space();
        keyword_pos_ = pos_;
        std::string word;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
            word.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(text_[pos_++]))));
        return word;
    }

    bool try_empty() {
        skip_space();
        const std::size_t save = pos_;
        if (read_keyword() == "EMPTY") return true;
        pos_ = save;
        return false;
    }

    double read_number() {
        skip_space();
        const std::size_t start = pos_;
        // from_chars rejects a leading '+'.
        if (pos_ < text_.size() && text_[pos_] == '+') ++pos_;
        double value = 0.0;
        const char* first = text_.data() + pos_;
        const char* last = text_.data() + text_.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr == first) fail("expected a number", start);
        pos_ += static_cast<std::size_t>(ptr - first);
        return value;
    }

    Ring read_ring() {
        expect('(');
        Ring ring;
        do {
            const double x = read_number();
            const double y = read_number();
            ring.vertices.push_back({x, y});
        } while (accept(','));
        expect(')');
        if (ring.vertices.size() > 1 && ring.vertices.front() == ring.vertices.back()) ring.vertices.pop_back();
        return ring;
    }

    PolygonWithHoles read_polygon() {
        expect('(');
        PolygonWithHoles poly;
        poly.outer = read_ring();
        while (accept(',')) poly.holes.push_back(read_ring());
        expect(')');
        return poly;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t keyword_pos_ = 0;
};

void append_number(std::string& out, double v) {
    if (v == 0.0) v = 0.0;  // no "-0"
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    out.append(buf, ptr);
}

void append_ring(std::string& out, const Ring& ring) {
    out.push_back('(');
    for (std::size_t i = 0; i < ring.vertices.size(); ++i) {
        if (i) out.push_back(',');
        append_number(out, ring.vertices[i].x);
        out.push_back(' ');
        append_number(out, ring.vertices[i].y);
    }
    out.push_back(')');
}

void append_polygon(std::string& out, const PolygonWithHoles& poly) {
    out.push_back('(');
    append_ring(out, poly.outer);
    for (const Ring& h : poly.holes) {
        out.push_back(',');
        append_ring(out, h);
    }
    out.push_back(')');
}

}  // namespace

Shape parse_wkt(std::string_view text) {
    Shape shape = with_normalized_orientation(WktParser(text).parse());
    validate(shape);
    return shape;
}

std::string emit_wkt(const Shape& shape) {
    if (shape.empty()) return "MULTIPOLYGON EMPTY";
    std::string out;
    if (shape.polygons.size() == 1) {
        out = "POLYGON";
        append_polygon(out, shape.polygons.front());
        return out;
    }
    out = "MULTIPOLYGON(";
    for (std::size_t i = 0; i < shape.polygons.size(); ++i) {
        if (i) out.push_back(',');
        append_polygon(out, shape.polygons[i]);
    }
    out.push_back(')');
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << content;
        if (!out.flush()) throw std::runtime_error("write failed for " + tmp.string());
    }
    fs::rename(tmp, target);
}

Shape read_wkt_file(const std::string& path) { return parse_wkt(read_text_file(path)); }

void write_wkt_file(const std::string& path, const Shape& shape) { write_file_atomic(path, emit_wkt(shape) + "\n"); }

}  // namespace hausmorph

#include "symdiff/shape_io.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace symdiff {

namespace {

// Minimal recursive-descent reader for the fixed shape schema. A hand-rolled
// parser keeps exact line/column positions for both syntax and ring errors.
class ShapeReader {
public:
    ShapeReader(const std::string& text, const std::string& name)
        : text_(text), name_(name) {}

    PolygonShape read() {
        skip_ws();
        expect('{');
        skip_ws();
        std::string key = read_string();
        if (key != "rings") fail("expected key \"rings\"");
        skip_ws();
        expect(':');
        PolygonShape shape = read_rings();
        skip_ws();
        if (peek() == ',') fail("unexpected extra key");
        expect('}');
        skip_ws();
        if (pos_ < text_.size()) fail("trailing content after shape object");
        return shape;
    }

private:
    const std::string& text_;
    std::string name_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;

    [[noreturn]] void fail(const std::string& msg) const { fail_at(line_, col_, msg); }

    [[noreturn]] void fail_at(std::size_t line, std::size_t col, const std::string& msg) const {
        std::ostringstream out;
        out << name_ << ":" << line << ":" << col << ": " << msg;
        throw validation_error(out.str());
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    char advance() {
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
    }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        advance();
    }

    std::string read_string() {
        expect('"');
        std::string out;
        while (peek() != '"') out += advance();
        advance();
        return out;
    }

    double read_number() {
        std::size_t start = pos_;
        std::size_t nline = line_, ncol = col_;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '.' ||
                c == 'e' || c == 'E') {
                advance();
            } else {
                break;
            }
        }
        if (pos_ == start) fail("expected a number");
        std::string token = text_.substr(start, pos_ - start);
        char* end = nullptr;
        double value = std::strtod(token.c_str(), &end);
        if (end != token.c_str() + token.size()) fail_at(nline, ncol, "malformed number '" + token + "'");
        if (!std::isfinite(value)) fail_at(nline, ncol, "coordinate is not finite");
        return value;
    }

    Point2 read_point() {
        skip_ws();
        expect('[');
        skip_ws();
        double x = read_number();
        skip_ws();
        expect(',');
        skip_ws();
        double y = read_number();
        skip_ws();
        expect(']');
        return {x, y};
    }

    Ring read_ring(std::size_t index) {
        skip_ws();
        std::size_t rline = line_, rcol = col_;
        expect('[');
        Ring ring;
        skip_ws();
        if (peek() != ']') {
            ring.vertices.push_back(read_point());
            skip_ws();
            while (peek() == ',') {
                advance();
                ring.vertices.push_back(read_point());
                skip_ws();
            }
        }
        expect(']');
        double sa = signed_ring_area(ring.vertices);
        if (ring.vertices.size() < 3) {
            fail_at(rline, rcol, "ring " + std::to_string(index) + ": fewer than 3 vertices");
        }
        if (sa == 0.0) {
            fail_at(rline, rcol, "ring " + std::to_string(index) + ": zero signed area");
        }
        ring.orientation = sa > 0.0 ? RingOrientation::ccw : RingOrientation::cw;
        return ring;
    }

    PolygonShape read_rings() {
        skip_ws();
        std::size_t sline = line_, scol = col_;
        expect('[');
        PolygonShape shape;
        skip_ws();
        if (peek() != ']') {
            shape.rings.push_back(read_ring(0));
            skip_ws();
            while (peek() == ',') {
                advance();
                shape.rings.push_back(read_ring(shape.rings.size()));
                skip_ws();
            }
        }
        expect(']');
        try {
            validate_shape(shape);
        } catch (const validation_error& e) {
            fail_at(sline, scol, e.what());
        }
        return shape;
    }
};

}  // namespace

PolygonShape parse_shape(const std::string& text, const std::string& name) {
    ShapeReader reader(text, name);
    return reader.read();
}

PolygonShape load_shape(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw validation_error("cannot open shape file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_shape(buf.str(), path);
}

std::string write_shape(const PolygonShape& shape) {
    std::ostringstream out;
    out.precision(17);
    out << "{\"rings\": [";
    for (std::size_t r = 0; r < shape.rings.size(); ++r) {
        if (r) out << ", ";
        out << "[";
        const auto& vs = shape.rings[r].vertices;
        for (std::size_t i = 0; i < vs.size(); ++i) {
            if (i) out << ", ";
            out << "[" << vs[i].x << ", " << vs[i].y << "]";
        }
        out << "]";
    }
    out << "]}";
    return out.str();
}

}  // namespace symdiff

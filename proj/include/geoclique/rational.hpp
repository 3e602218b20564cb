#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace geoclique {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Rat make_rat(std::int64_t num, std::int64_t den) {
    return Rat(Int(num), Int(den));
}

inline double to_double(const Rat& r) { return r.template convert_to<double>(); }

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

inline int rat_sign(const Rat& r) { return r < 0 ? -1 : (r > 0 ? 1 : 0); }

Rat parse_rat(const std::string& s);
std::string rat_to_string(const Rat& r);

// 2D point / vector with exact rational coordinates.
struct Vec2 {
    Rat x, y;

    Vec2() : x(0), y(0) {}
    Vec2(Rat xx, Rat yy) : x(std::move(xx)), y(std::move(yy)) {}

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator-() const { return {-x, -y}; }
    bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Vec2& o) const { return !(*this == o); }
};

inline Vec2 operator*(const Rat& s, const Vec2& v) { return {s * v.x, s * v.y}; }

inline Rat dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

inline Rat cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

// Sign of the turn a->b->c; >0 means counter-clockwise.
inline int orient(const Vec2& a, const Vec2& b, const Vec2& c) {
    return rat_sign(cross(b - a, c - a));
}

inline bool lex_less(const Vec2& a, const Vec2& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

} // namespace geoclique

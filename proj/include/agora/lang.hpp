#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace agora {

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed token text; position() is the 0-based offset of the offending
// character within the trimmed input.
class parse_error : public error {
public:
    parse_error(const std::string& what, std::size_t position)
        : error(what), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// Well-formed data that breaks a schema or range rule; field() names the
// offending element as a path like "scenarios[2].weight".
class schema_error : public error {
public:
    schema_error(std::string field, const std::string& what)
        : error(field.empty() ? what : field + ": " + what), field_(std::move(field)) {}
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

// A signed propositional atom. The claim language is deliberately restricted
// to literals: every claim is an atom or a negated atom, so consistency of a
// set reduces to complementary-pair detection.
//
// Atom names are case-sensitive tokens over letters, digits, underscore and
// hyphen. Text form: optional "!" prefix followed by the atom name; this is
// the exact form used in every file format and CLI flag.
struct literal {
    std::string name;
    bool positive = true;

    bool operator==(const literal&) const = default;

    // Canonical order: by name, then positive before negative.
    std::strong_ordering operator<=>(const literal& other) const {
        if (auto c = name.compare(other.name); c != 0)
            return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        return static_cast<int>(other.positive) <=> static_cast<int>(positive);
    }
};

bool is_valid_atom_name(std::string_view name) noexcept;

// Parses the text form. Leading "!" flips polarity; the remainder must be a
// valid atom name. Throws parse_error naming the offending position.
literal parse_literal(std::string_view text);

literal negate(literal l);

std::string to_string(const literal& l);

// True iff no atom occurs with both polarities. The empty set is consistent.
bool consistent(std::span<const literal> ls);

// Canonical set form: sorted, duplicates removed.
std::vector<literal> literal_set(std::vector<literal> ls);

bool contains(std::span<const literal> sorted_set, const literal& l);

} // namespace agora

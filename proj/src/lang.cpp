#include "agora/lang.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace agora {

namespace {

bool is_atom_char(char c) noexcept {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
           c == '_' || c == '-';
}

std::string_view trim(std::string_view s) noexcept {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

} // namespace

bool is_valid_atom_name(std::string_view name) noexcept {
    if (name.empty()) return false;
    return std::all_of(name.begin(), name.end(), is_atom_char);
}

literal parse_literal(std::string_view text) {
    const std::string_view trimmed = trim(text);
    if (trimmed.empty()) throw parse_error("empty literal", 0);

    bool positive = true;
    std::size_t start = 0;
    if (trimmed.front() == '!') {
        positive = false;
        start = 1;
    }
    const std::string_view name = trimmed.substr(start);
    if (name.empty())
        throw parse_error("literal '" + std::string(trimmed) + "' has no atom name", start);
    for (std::size_t i = 0; i < name.size(); ++i) {
        if (!is_atom_char(name[i])) {
            const std::size_t pos = start + i;
            throw parse_error("invalid character '" + std::string(1, name[i]) + "' at position " +
                                  std::to_string(pos) + " in literal '" + std::string(trimmed) + "'",
                              pos);
        }
    }
    return literal{std::string(name), positive};
}

literal negate(literal l) {
    l.positive = !l.positive;
    return l;
}

std::string to_string(const literal& l) {
    return l.positive ? l.name : "!" + l.name;
}

bool consistent(std::span<const literal> ls) {
    // polarity mask per atom: bit 0 = positive seen, bit 1 = negative seen
    std::map<std::string_view, unsigned> seen;
    for (const literal& l : ls) {
        unsigned& mask = seen[l.name];
        mask |= l.positive ? 1u : 2u;
        if (mask == 3u) return false;
    }
    return true;
}

std::vector<literal> literal_set(std::vector<literal> ls) {
    std::sort(ls.begin(), ls.end());
    ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
    return ls;
}

bool contains(std::span<const literal> sorted_set, const literal& l) {
    return std::binary_search(sorted_set.begin(), sorted_set.end(), l);
}

} // namespace agora

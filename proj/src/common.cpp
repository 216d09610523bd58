#include "qeuler/common.hpp"

#include <cctype>

namespace qeuler {

Int parse_int_decimal(const std::string& text) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
    }
    if (i == text.size()) throw ParseError("integer: no digits in '" + text + "'");
    for (std::size_t k = i; k < text.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(text[k])))
            throw ParseError("integer: bad character in '" + text + "'");
    while (i + 1 < text.size() && text[i] == '0') ++i;
    Int value(text.substr(i));
    return negative ? Int(-value) : value;
}

}  // namespace qeuler

// SPDX-License-Identifier: Apache-2.0
#include "tumbler/bigint.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

#include "tumbler/errors.hpp"

namespace tumbler {

double log2_big(const BigInt& x) {
    if (x <= 0) {
        throw InvalidArgument("log2_big: argument must be positive");
    }
    const unsigned top = boost::multiprecision::msb(x); // x in [2^top, 2^(top+1))
    if (top <= 52) {
        return std::log2(x.convert_to<double>());
    }
    const unsigned drop = top - 52;
    const BigInt mantissa = x >> drop; // 53 significant bits, exact in a double
    return std::log2(mantissa.convert_to<double>()) + static_cast<double>(drop);
}

BigInt parse_hex(const std::string& digits) {
    if (digits.empty()) {
        throw InvalidArgument("parse_hex: empty string");
    }
    for (char c : digits) {
        if (!std::isxdigit(static_cast<unsigned char>(c))) {
            throw InvalidArgument(std::string("parse_hex: invalid hex digit '") + c + "'");
        }
    }
    return BigInt("0x" + digits);
}

std::string to_hex(const BigInt& value) {
    if (value < 0) {
        throw InvalidArgument("to_hex: negative value");
    }
    std::ostringstream os;
    os << std::hex << std::uppercase << value;
    return os.str();
}

} // namespace tumbler

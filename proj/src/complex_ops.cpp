#include "matfun/complex_ops.hpp"

#include <charconv>
#include <cstdlib>
#include <stdexcept>

namespace matfun {

std::string format_double(double value) {
    if (value == 0.0) value = 0.0;  // normalize -0
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

std::string format_complex(Complex z) {
    const double re = z.real();
    const double im = z.imag() == 0.0 ? 0.0 : z.imag();
    if (im == 0.0) return format_double(re);
    std::string imag = format_double(im) + "i";
    if (re == 0.0) return imag;
    return format_double(re) + (im > 0.0 ? "+" : "") + imag;
}

namespace {

double parse_real_token(std::string_view tok) {
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);  // from_chars rejects '+'
    if (tok.empty()) throw std::invalid_argument("empty number");
    double value = 0;
    auto res = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
        throw std::invalid_argument("bad number '" + std::string(tok) + "'");
    if (!std::isfinite(value))
        throw std::invalid_argument("non-finite number '" + std::string(tok) + "'");
    return value;
}

// "" / "+" / "-" are implicit unit coefficients of i.
double parse_imag_coeff(std::string_view tok) {
    if (tok.empty() || tok == "+") return 1.0;
    if (tok == "-") return -1.0;
    return parse_real_token(tok);
}

}  // namespace

Complex parse_complex(std::string_view text) {
    // strip surrounding whitespace
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
    if (text.empty()) throw std::invalid_argument("empty complex literal");

    const bool has_i = text.back() == 'i' || text.back() == 'I';
    if (!has_i) return {parse_real_token(text), 0.0};

    std::string_view body = text.substr(0, text.size() - 1);
    // Find the sign separating real and imaginary parts: the last '+'/'-' that
    // is neither leading nor an exponent sign.
    size_t split = std::string_view::npos;
    for (size_t k = body.size(); k-- > 1;) {
        const char c = body[k];
        if ((c == '+' || c == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    if (split == std::string_view::npos) return {0.0, parse_imag_coeff(body)};
    return {parse_real_token(body.substr(0, split)), parse_imag_coeff(body.substr(split))};
}

}  // namespace matfun

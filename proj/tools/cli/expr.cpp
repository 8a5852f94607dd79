#include "expr.hpp"

#include <cctype>
#include <charconv>
#include <string>

#include "hyperlab/error.hpp"

namespace hyperlab::cli {

namespace {

class Scanner {
public:
    explicit Scanner(std::string_view text) : text_(text) {}

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }
    bool done() {
        skip_space();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) {
            fail(std::string("expected '") + c + "'");
        }
    }
    bool at_number() {
        const char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) || c == '.';
    }
    double number() {
        skip_space();
        std::size_t end = pos_;
        while (end < text_.size() &&
               (std::isdigit(static_cast<unsigned char>(text_[end])) || text_[end] == '.' || text_[end] == 'e' ||
                text_[end] == 'E' ||
                ((text_[end] == '+' || text_[end] == '-') && end > pos_ &&
                 (text_[end - 1] == 'e' || text_[end - 1] == 'E')))) {
            ++end;
        }
        double value = 0.0;
        const auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + end, value);
        if (ec != std::errc{} || ptr != text_.data() + end) {
            fail("malformed number");
        }
        pos_ = end;
        return value;
    }
    [[noreturn]] void fail(const std::string& why) const {
        throw InputError("cannot parse '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + why);
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

// number ['i'] | 'i'
Complex scalar(Scanner& s) {
    if (s.accept('i')) {
        return {0.0, 1.0};
    }
    const double v = s.number();
    if (s.accept('i')) {
        return {0.0, v};
    }
    return {v, 0.0};
}

// Sum of signed scalars, e.g. "0.5-0.25i".
Complex complex_sum(Scanner& s) {
    Complex total{};
    bool first = true;
    while (true) {
        double sign = 1.0;
        if (s.accept('-')) {
            sign = -1.0;
        } else if (!s.accept('+') && !first) {
            break;
        }
        total += sign * scalar(s);
        first = false;
        if (s.done() || s.peek() == ')') {
            break;
        }
    }
    return total;
}

std::vector<Complex> polynomial(Scanner& s) {
    std::vector<Complex> coeffs(1);
    bool first = true;
    while (!s.done() && s.peek() != ')') {
        double sign = 1.0;
        if (s.accept('-')) {
            sign = -1.0;
        } else if (!s.accept('+') && !first) {
            s.fail("expected '+' or '-'");
        }
        first = false;

        Complex coeff{1.0, 0.0};
        bool have_coeff = false;
        if (s.accept('(')) {
            coeff = complex_sum(s);
            s.expect(')');
            have_coeff = true;
        } else if (s.at_number() || s.peek() == 'i') {
            coeff = scalar(s);
            have_coeff = true;
        }
        s.accept('*');

        std::size_t power = 0;
        if (s.accept('z')) {
            power = 1;
            if (s.accept('^')) {
                const double e = s.number();
                if (e < 0 || e != static_cast<double>(static_cast<std::size_t>(e))) {
                    s.fail("exponent must be a non-negative integer");
                }
                power = static_cast<std::size_t>(e);
            }
        } else if (!have_coeff) {
            s.fail("expected a coefficient or z");
        }
        if (coeffs.size() <= power) {
            coeffs.resize(power + 1);
        }
        coeffs[power] += sign * coeff;
    }
    return coeffs;
}

std::vector<Complex> affine_side(std::string_view text) {
    Scanner s(text);
    std::vector<Complex> side;
    if (s.accept('(')) {
        side = polynomial(s);
        s.expect(')');
    } else {
        side = polynomial(s);
    }
    if (!s.done()) {
        s.fail("trailing characters");
    }
    if (side.size() > 2) {
        throw InputError("symbol '" + std::string(text) + "' is not affine in z");
    }
    side.resize(2);
    return side;
}

}  // namespace

Complex parse_complex(std::string_view text) {
    Scanner s(text);
    const Complex z = complex_sum(s);
    if (!s.done()) {
        s.fail("trailing characters");
    }
    return z;
}

std::vector<Complex> parse_polynomial(std::string_view text) {
    Scanner s(text);
    std::vector<Complex> coeffs = polynomial(s);
    if (!s.done()) {
        s.fail("trailing characters");
    }
    return coeffs;
}

HardyFunction parse_function(std::string_view text) {
    if (text == "identity") {
        return HardyFunction::identity();
    }
    return HardyFunction(parse_polynomial(text));
}

MoebiusMap parse_symbol(std::string_view text) {
    int depth = 0;
    std::size_t slash = std::string_view::npos;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '(') {
            ++depth;
        } else if (text[i] == ')') {
            --depth;
        } else if (text[i] == '/' && depth == 0) {
            if (slash != std::string_view::npos) {
                throw InputError("symbol '" + std::string(text) + "' has more than one top-level '/'");
            }
            slash = i;
        }
    }
    const std::vector<Complex> num = affine_side(text.substr(0, slash));
    const std::vector<Complex> den =
        slash == std::string_view::npos ? std::vector<Complex>{1.0, 0.0} : affine_side(text.substr(slash + 1));
    return MoebiusMap(num[1], num[0], den[1], den[0]);
}

}  // namespace hyperlab::cli

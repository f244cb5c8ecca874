#include "minorlab/scalar.hpp"

#include <cctype>
#include <sstream>

namespace minorlab {

bool is_squarefree(std::int64_t value)
{
    std::uint64_t n = value < 0 ? static_cast<std::uint64_t>(-(value + 1)) + 1 : static_cast<std::uint64_t>(value);
    if (n == 0)
        return false;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0)
                return false;
        }
    }
    return true;
}

FieldTag::FieldTag(std::int64_t d) : d_(d)
{
    if (d == 0)
        return;
    if (d == 1 || !is_squarefree(d))
        throw MathError("radicand " + std::to_string(d) + " must be squarefree and different from 1");
}

std::ostream& operator<<(std::ostream& os, FieldTag field)
{
    if (field.is_rational())
        return os << "Q";
    return os << "Q(sqrt(" << field.d() << "))";
}

QuadScalar::QuadScalar(FieldTag field, Rational p, Rational q) : field_(field), p_(std::move(p)), q_(std::move(q))
{
    p_.canonicalize();
    q_.canonicalize();
    if (field_.is_rational() && sgn(q_) != 0)
        throw MathError("radical part must be zero in the rational field");
}

QuadScalar QuadScalar::radical(FieldTag field)
{
    if (field.is_rational())
        throw MathError("the rational field has no radical");
    return QuadScalar(field, 0, 1);
}

bool QuadScalar::is_integer() const
{
    return sgn(q_) == 0 && p_.get_den() == 1;
}

Rational QuadScalar::norm() const
{
    return Rational(p_ * p_ - Rational(field_.d()) * q_ * q_);
}

QuadScalar QuadScalar::conjugate() const
{
    return QuadScalar(field_, p_, -q_);
}

QuadScalar QuadScalar::in_field(FieldTag target) const
{
    if (target == field_)
        return *this;
    if (!is_rational())
        throw MathError("cannot move an irrational element between fields");
    return QuadScalar(target, p_);
}

void QuadScalar::require_same_field(const QuadScalar& other, const char* op) const
{
    if (field_ != other.field_) {
        std::ostringstream msg;
        msg << "field mismatch in " << op << ": " << field_ << " vs " << other.field_;
        throw MathError(msg.str());
    }
}

QuadScalar QuadScalar::operator-() const
{
    QuadScalar r = *this;
    r.p_ = -r.p_;
    r.q_ = -r.q_;
    return r;
}

QuadScalar& QuadScalar::operator+=(const QuadScalar& rhs)
{
    require_same_field(rhs, "add");
    p_ += rhs.p_;
    q_ += rhs.q_;
    return *this;
}

QuadScalar& QuadScalar::operator-=(const QuadScalar& rhs)
{
    require_same_field(rhs, "sub");
    p_ -= rhs.p_;
    q_ -= rhs.q_;
    return *this;
}

QuadScalar& QuadScalar::operator*=(const QuadScalar& rhs)
{
    require_same_field(rhs, "mul");
    // (p1 + q1 s)(p2 + q2 s) = (p1 p2 + d q1 q2) + (p1 q2 + p2 q1) s
    Rational p = p_ * rhs.p_ + Rational(field_.d()) * q_ * rhs.q_;
    Rational q = p_ * rhs.q_ + rhs.p_ * q_;
    p_ = std::move(p);
    q_ = std::move(q);
    return *this;
}

QuadScalar& QuadScalar::operator/=(const QuadScalar& rhs)
{
    require_same_field(rhs, "div");
    if (rhs.is_zero())
        throw MathError("division by zero");
    Rational n = rhs.norm();
    *this *= rhs.conjugate();
    p_ /= n;
    q_ /= n;
    return *this;
}

QuadScalar& QuadScalar::operator+=(const Rational& rhs)
{
    p_ += rhs;
    return *this;
}

QuadScalar& QuadScalar::operator-=(const Rational& rhs)
{
    p_ -= rhs;
    return *this;
}

QuadScalar& QuadScalar::operator*=(const Rational& rhs)
{
    p_ *= rhs;
    q_ *= rhs;
    return *this;
}

QuadScalar& QuadScalar::operator/=(const Rational& rhs)
{
    if (sgn(rhs) == 0)
        throw MathError("division by zero");
    p_ /= rhs;
    q_ /= rhs;
    return *this;
}

QuadScalar int_pow(const QuadScalar& x, unsigned long k)
{
    QuadScalar result = QuadScalar::one(x.field());
    QuadScalar base = x;
    while (k > 0) {
        if (k & 1UL)
            result *= base;
        k >>= 1;
        if (k > 0)
            base *= base;
    }
    return result;
}

namespace {

class ScalarParser {
public:
    ScalarParser(std::string_view text, FieldTag field) : text_(text), field_(field) {}

    QuadScalar parse()
    {
        if (text_.empty())
            fail("empty scalar");
        QuadScalar value = term();
        if (pos_ < text_.size()) {
            char op = text_[pos_];
            if (op != '+' && op != '-')
                fail("expected '+' or '-'");
            ++pos_;
            QuadScalar rhs = term();
            value = op == '+' ? value + rhs : value - rhs;
        }
        if (pos_ != text_.size())
            fail("trailing characters");
        return value;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError("scalar '" + std::string(text_) + "': " + what + " at offset " + std::to_string(pos_));
    }

    bool at_radical() const { return pos_ < text_.size() && (text_[pos_] == 's' || text_[pos_] == 'i'); }

    QuadScalar radical()
    {
        char c = text_[pos_++];
        if (field_.is_rational())
            fail(std::string("radical '") + c + "' used in the rational field");
        if (c == 'i' && field_.d() != -1)
            fail("'i' is only valid when d = -1");
        return QuadScalar::radical(field_);
    }

    QuadScalar term()
    {
        if (at_radical())
            return radical();
        Rational value = rational();
        if (pos_ < text_.size() && text_[pos_] == '*') {
            ++pos_;
            if (!at_radical())
                fail("expected 's' or 'i' after '*'");
            return radical() * value;
        }
        return QuadScalar(field_, value);
    }

    BigInt digits()
    {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected digits");
        return BigInt(std::string(text_.substr(start, pos_ - start)));
    }

    Rational rational()
    {
        bool negative = false;
        if (pos_ < text_.size() && text_[pos_] == '-') {
            negative = true;
            ++pos_;
        }
        BigInt num = digits();
        BigInt den = 1;
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            den = digits();
            if (den == 0)
                fail("zero denominator");
        }
        Rational r(negative ? BigInt(-num) : num, den);
        r.canonicalize();
        return r;
    }

    std::string_view text_;
    FieldTag field_;
    std::size_t pos_ = 0;
};

} // namespace

QuadScalar parse_scalar(std::string_view text, FieldTag field)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    return ScalarParser(text, field).parse();
}

std::string to_string(const Rational& x)
{
    return x.get_str();
}

std::string to_string(const QuadScalar& x)
{
    const Rational& p = x.rational_part();
    const Rational& q = x.radical_part();
    if (sgn(q) == 0)
        return to_string(p);

    std::string out;
    if (sgn(p) != 0) {
        out = to_string(p);
        out += sgn(q) > 0 ? '+' : '-';
        Rational mag = abs(q);
        out += mag == 1 ? std::string("s") : to_string(mag) + "*s";
        return out;
    }
    if (q == 1)
        return "s";
    return to_string(q) + "*s";
}

std::ostream& operator<<(std::ostream& os, const QuadScalar& x)
{
    return os << to_string(x);
}

} // namespace minorlab

#include "relupatch/rational.hpp"

#include <cctype>
#include <stdexcept>

#include "relupatch/errors.hpp"

namespace relupatch {

Rat rat(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Rat rat_from_double(double d) {
    // mpq_class(double) is exact: doubles are dyadic rationals.
    return Rat(d);
}

static bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

Rat rat_parse(const std::string& text) {
    if (text.empty()) throw ParseError("empty numeric literal");

    if (auto slash = text.find('/'); slash != std::string::npos) {
        std::string num = text.substr(0, slash);
        std::string den = text.substr(slash + 1);
        if (!is_integer_token(num) || !is_integer_token(den) || den[0] == '+' || den[0] == '-')
            throw ParseError("bad fraction literal: '" + text + "'");
        Int n(num), d(den);
        if (d == 0) throw ParseError("zero denominator in '" + text + "'");
        Rat q(n, d);
        q.canonicalize();
        return q;
    }

    // Decimal form: [+-]digits[.digits][(e|E)[+-]digits], parsed in base ten.
    size_t i = 0;
    bool neg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        neg = (text[i] == '-');
        ++i;
    }
    std::string digits;
    long frac_digits = 0;
    bool any = false;
    for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
        digits += text[i];
        any = true;
    }
    if (i < text.size() && text[i] == '.') {
        ++i;
        for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
            digits += text[i];
            ++frac_digits;
            any = true;
        }
    }
    long exp10 = 0;
    if (any && i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
        size_t epos = i + 1;
        std::string etok = text.substr(epos);
        if (!is_integer_token(etok)) throw ParseError("bad exponent in '" + text + "'");
        exp10 = std::stol(etok);
        i = text.size();
    }
    if (!any || i != text.size()) throw ParseError("bad numeric literal: '" + text + "'");

    Int n(digits.empty() ? "0" : digits);
    if (neg) n = -n;
    long net_exp = exp10 - frac_digits;
    Int pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(net_exp < 0 ? -net_exp : net_exp));
    Rat q = net_exp >= 0 ? Rat(n * pow10) : Rat(n, pow10);
    q.canonicalize();
    return q;
}

std::string rat_str(const Rat& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double rat_to_double(const Rat& q) {
    return q.get_d();
}

Rat rat_abs(const Rat& q) {
    return q < 0 ? Rat(-q) : q;
}

bool rat_is_dyadic(const Rat& q) {
    const mpz_class& den = q.get_den();
    return mpz_popcount(den.get_mpz_t()) == 1;
}

// Nearest integer to n/d (d > 0), ties to even.
static Int div_round_half_even(const Int& n, const Int& d) {
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    Int twice = 2 * r;
    int cmp = mpz_cmp(twice.get_mpz_t(), d.get_mpz_t());
    if (cmp < 0) return q;
    if (cmp > 0) return q + 1;
    return mpz_even_p(q.get_mpz_t()) ? q : q + 1;
}

static Rat round_dyadic(const Rat& q, int bits) {
    if (q == 0) return Rat(0);
    bool neg = q < 0;
    Int n = neg ? Int(-q.get_num()) : Int(q.get_num());
    Int d = q.get_den();

    // floor(log2(n/d)) is ln-ld or ln-ld-1; settle by one comparison.
    long ln = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2));
    long ld = static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 2));
    long L = ln - ld;
    {
        Int lhs = n, rhs = d;
        if (L >= 0)
            rhs <<= L;
        else
            lhs <<= -L;
        if (lhs < rhs) --L;
    }

    long E = L - bits + 1;
    Int num2 = n, den2 = d;
    if (E >= 0)
        den2 <<= E;
    else
        num2 <<= -E;
    Int m = div_round_half_even(num2, den2);
    Int top = Int(1) << bits;
    if (m == top) { // rounded into the next binade
        m >>= 1;
        E += 1;
    }

    Rat r;
    if (E >= 0) {
        r = Rat(m << E);
    } else {
        r = Rat(m, Int(1) << -E);
        r.canonicalize();
    }
    return neg ? Rat(-r) : r;
}

Rat round_significand(const Rat& q, int bits) {
    if (bits < 1) throw std::invalid_argument("significand bits must be >= 1");
    if (q == 0) return Rat(0);
    Rat v = rat_is_dyadic(q) ? q : round_dyadic(q, 53);
    return round_dyadic(v, bits);
}

Rat linf_norm(const RatVec& v) {
    Rat best(0);
    for (const Rat& x : v) {
        Rat a = rat_abs(x);
        if (a > best) best = a;
    }
    return best;
}

RatVec vec_add(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw ValidationError("vector length mismatch in add");
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

RatVec mat_vec_mul(const RatMat& m, const RatVec& x) {
    RatVec r(m.size(), Rat(0));
    for (size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != x.size()) throw ValidationError("matrix/vector dimension mismatch");
        Rat acc(0);
        for (size_t j = 0; j < x.size(); ++j) acc += m[i][j] * x[j];
        r[i] = acc;
    }
    return r;
}

} // namespace relupatch

#include "dpva/scalar.hpp"

#include "dpva/errors.hpp"

namespace dpva {

Scalar parse_scalar(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw Error("empty rational");
    Scalar r;
    if (r.set_str(s, 10) != 0) throw Error("bad rational '" + s + "'");
    if (r.get_den() == 0) throw Error("zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

std::string scalar_str(const Scalar& s) { return s.get_str(); }

Scalar factorial(int n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n < 0 ? 0 : n));
    return Scalar(f);
}

Scalar binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return Scalar(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Scalar(b);
}

Scalar falling(int n, int k) {
    if (k < 0 || k > n) return Scalar(0);
    mpz_class r = 1;
    for (int i = 0; i < k; ++i) r *= (n - i);
    return Scalar(r);
}

}  // namespace dpva

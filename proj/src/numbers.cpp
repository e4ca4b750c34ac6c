#include "toric/numbers.hpp"

#include <sstream>

namespace toric {

Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Int n(s);
            return Rat(n);
        }
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den <= 0) throw InputError("denominator must be positive in \"" + s + "\"");
        return make_rat(num, den);
    } catch (const std::invalid_argument&) {
        throw InputError("malformed rational \"" + s + "\"");
    }
}

std::string rat_to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string ivec_to_string(const IVec& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i].get_str();
    }
    os << ")";
    return os.str();
}

bool nth_root_exact(const Int& a, unsigned n, Int& out) {
    if (a < 0) return false;
    Int r;
    int exact = mpz_root(r.get_mpz_t(), a.get_mpz_t(), n);
    if (!exact) return false;
    out = r;
    return true;
}

}  // namespace toric

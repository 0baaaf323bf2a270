#include "alexdef/numbers.hpp"

#include "alexdef/errors.hpp"

namespace alexdef {

std::string rat_to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat parse_rat(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0 || sgn(q.get_den()) <= 0)
        throw precondition_error("malformed rational literal: '" + s + "'");
    q.canonicalize();
    return q;
}

} // namespace alexdef

#include "hyperint/report.hpp"

#include <stdexcept>

namespace hyperint {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::n_integral: return "n-integral";
        case Verdict::not_n_integral: return "not-n-integral";
        case Verdict::in_zp: return "in-Zp";
        case Verdict::not_in_zp: return "not-in-Zp";
        case Verdict::inconclusive: return "inconclusive";
    }
    throw std::logic_error("to_string(Verdict): bad value");
}

} // namespace hyperint

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperint/rational.hpp"

namespace hyperint {

enum class Verdict {
    n_integral,
    not_n_integral,
    in_zp,
    not_in_zp,
    inconclusive,
};

std::string to_string(Verdict v);

/// Machine-checkable counterexample carried by every negative verdict.
/// `condition` names the violated inequality; the optional fields pin the
/// exact arguments so the value can be recomputed by the matching operation.
struct Witness {
    std::string condition;
    std::optional<std::int64_t> a;
    std::optional<std::int64_t> p;
    std::optional<std::int64_t> n;
    std::optional<std::int64_t> k;
    std::optional<std::int64_t> l;
    std::optional<std::int64_t> h;
    std::optional<std::int64_t> e;
    std::optional<Rational> eps;
    std::optional<Rational> x;
    std::optional<Rational> value;
};

struct CriterionReport {
    Verdict verdict{Verdict::inconclusive};
    std::string route;
    std::optional<Witness> witness;
    // ordered key/value pairs so structured output is reproducible
    std::vector<std::pair<std::string, std::string>> metadata;

    void add_meta(std::string key, std::string value) {
        metadata.emplace_back(std::move(key), std::move(value));
    }
    bool affirmative() const {
        return verdict == Verdict::n_integral || verdict == Verdict::in_zp ||
               verdict == Verdict::inconclusive;
    }
};

} // namespace hyperint

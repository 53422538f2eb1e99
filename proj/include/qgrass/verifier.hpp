#pragma once

// Certificates: structured verdicts tying an enumerated quantity to its
// closed form, or a constructed family pair to its advertised predicates
// and size product. Certificates serialize to JSON with a fixed key order,
// so identical inputs give byte-identical files; wall-clock timing is only
// recorded when explicitly requested, to keep that reproducibility.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qgrass/families.hpp"

namespace qgrass {

struct Certificate {
    std::string kind;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    nlohmann::ordered_json enumerated; // decimal string, or object of counts
    std::string formula;               // decimal string ("" when not applicable)
    nlohmann::ordered_json predicates = nlohmann::ordered_json::object();
    bool pass = false;
    std::vector<std::string> notes;
    std::optional<long> runtime_ms; // set only when timings were requested
};

nlohmann::ordered_json certificate_to_json(const Certificate& c);
std::string certificate_to_string(const Certificate& c); // pretty, trailing \n

// Extra inputs for count_vs_formula; anything unset falls back to the
// leading coordinate subspace of the appropriate dimension.
struct CountChoices {
    std::optional<Subspace> l;        // reference subspace (type-count, m-size)
    std::optional<long> dim_l;        // build the default l with this dimension
    std::optional<long> m, h, m1, h1; // type parameters
};

// kinds: grassmannian | h1-size | h2-size | m-size | type-count | eq1 |
//        eq66-upper | x-complement
Certificate count_vs_formula(const std::string& kind, const ParamPoint& p,
                             const CountChoices& choices = {},
                             long budget = kDefaultBudget, bool with_timings = false);

// Predicate + size-product report for an arbitrary pair. Records |F|, |G|,
// the product, the [n-t k-t]^2 bound, g1/g2 comparisons, both covering
// numbers, and whether the pair is the equality configuration
// F = G = H1(V,E;k). pass <=> the pair is s-almost cross-t-intersecting.
Certificate certify_pair(const Family& fam_f, const Family& fam_g, long t, long s,
                         long budget = kDefaultBudget, bool with_timings = false);

// Builds one of the named constructions and checks everything it
// advertises: which = "almost" (product g1, not cross-t), "cover"
// (product g2, cross-t), or "theorem-extremal" (dispatches on k vs 2t).
Certificate verify_construction(const std::string& which, const ParamPoint& p,
                                const ExampleChoices& choices = {},
                                long budget = kDefaultBudget,
                                bool with_timings = false);

struct SuiteSummary {
    long pass = 0, fail = 0, skipped = 0; // skipped = hypothesis unmet
    std::string payload;                  // the serialized report body
};

// Batch driver. Suites: qbinom-identities, counting-lemma, inequalities,
// grassmannian-counts, constructions. Lemma-grid suites emit CSV,
// certificate suites emit a JSON array; format "csv"/"json" overrides,
// "" picks that default. out_path "" skips writing.
SuiteSummary grid_report(const std::string& suite, const std::string& out_path,
                         const std::string& format = "",
                         long budget = kDefaultBudget, bool with_timings = false);

std::vector<std::string> known_suites();

} // namespace qgrass

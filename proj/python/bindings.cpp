#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "pss/enumerator.hpp"
#include "pss/formulas.hpp"
#include "pss/permutation.hpp"
#include "pss/report.hpp"
#include "pss/stack_engine.hpp"

namespace py = pybind11;
using namespace pss;

namespace {

using Values = std::vector<int>;

Values values_of(const Permutation& p) { return {p.begin(), p.end()}; }

std::vector<Values> values_of(const PermutationSet& set) {
    std::vector<Values> out;
    for (const auto& p : set) out.push_back(values_of(p));
    return out;
}

py::int_ to_py(const BigCount& c) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(c.str().c_str(), nullptr, 10));
}

MapId map_of(const std::string& code) {
    if (auto id = parse_map_id(code)) return *id;
    throw py::value_error("unknown map '" + code + "'; expected west, s12, s21, m12 or m21");
}

Strategy strategy_of(MapId map, const std::optional<std::string>& name) {
    if (!name) return default_strategy(map);
    for (auto s : {Strategy::Simulated, Strategy::ClosedForm, Strategy::RecursiveWest}) {
        if (to_string(s) == *name) return s;
    }
    throw py::value_error("unknown strategy '" + *name + "'");
}

ClaimId claim_of(const std::string& name) {
    if (auto id = parse_claim_id(name)) return *id;
    throw py::value_error("unknown claim '" + name + "'");
}

std::vector<std::pair<std::size_t, std::size_t>> intervals(const RunDecomposition& d) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (const auto& r : d.runs) out.emplace_back(r.start, r.end);
    return out;
}

BruteOptions options(std::size_t jobs, bool force) { return {jobs == 0 ? 1 : jobs, force}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Stack-sorting maps on permutations";

    py::register_exception<GuardError>(m, "GuardError", PyExc_RuntimeError);

    m.def("parse", [](const std::string& text) { return values_of(parse(text)); });
    m.def("format", [](const Values& p) { return format(Permutation(p)); });
    m.def("rev", [](const Values& p) { return values_of(rev(Permutation(p))); });
    m.def("inc", [](const Values& p) {
        const auto w = inc(Permutation(p));
        return Values(w.entries().begin(), w.entries().end());
    });
    m.def("ins", [](const Values& p, std::size_t i) { return values_of(ins(Permutation(p), i)); },
          py::arg("p"), py::arg("i"));
    m.def("delete_one", [](const Values& p) { return values_of(delete_one(Permutation(p))); });
    m.def("standardize", [](const Values& word) { return values_of(standardize(word)); });
    m.def("peaks", [](const Values& p) { return peaks(Permutation(p)); });
    m.def("valleys", [](const Values& p) { return valleys(Permutation(p)); });
    m.def("peak_runs", [](const Values& p) { return intervals(peak_runs(Permutation(p))); },
          "1-indexed inclusive (start, end) pairs");
    m.def("valley_runs", [](const Values& p) { return intervals(valley_runs(Permutation(p))); },
          "1-indexed inclusive (start, end) pairs");
    m.def("contains_pattern", [](const Values& p, const Values& q) {
        return contains_pattern(Permutation(p), Permutation(q));
    });
    m.def("rank", [](const Values& p) { return rank(Permutation(p)); });
    m.def("unrank", [](std::size_t n, Rank r) { return values_of(unrank(n, r)); },
          py::arg("n"), py::arg("r"));

    m.def(
        "apply",
        [](const std::string& map, const Values& p, std::optional<std::string> strategy) {
            const auto id = map_of(map);
            return values_of(apply(id, Permutation(p), strategy_of(id, strategy)));
        },
        py::arg("map"), py::arg("p"), py::arg("strategy") = py::none());
    m.def(
        "iterate",
        [](const std::string& map, const Values& p, std::size_t times,
           std::optional<std::string> strategy) {
            const auto id = map_of(map);
            return values_of(iterate(id, Permutation(p), times, strategy_of(id, strategy)));
        },
        py::arg("map"), py::arg("p"), py::arg("times"), py::arg("strategy") = py::none());
    m.def(
        "sorts_in",
        [](const std::string& map, const Values& p, std::size_t t_max) {
            return sorts_in(map_of(map), Permutation(p), t_max);
        },
        py::arg("map"), py::arg("p"), py::arg("t_max"),
        "Least t <= t_max with the identity after t applications, else None");
    m.def(
        "trace",
        [](const std::string& map, const Values& p) {
            const auto id = map_of(map);
            const auto policy = [&] {
                switch (id) {
                    case MapId::West: return PushPolicy::west();
                    case MapId::S12: return PushPolicy::dotted({BasePattern::Ascent12, 1});
                    case MapId::S21: return PushPolicy::dotted({BasePattern::Descent21, 1});
                    default: throw py::value_error("trace needs a single-pass map");
                }
            }();
            const auto result = run_pass(Permutation(p), policy, true);
            py::list events;
            for (const auto& e : result.trace->events) {
                events.append(py::make_tuple(e.step, e.op == StackEvent::Op::Push ? "push" : "pop",
                                             e.value));
            }
            return events;
        },
        py::arg("map"), py::arg("p"), "List of (step, 'push' | 'pop', value)");
    m.def(
        "orbit",
        [](const std::string& map, const Values& p) {
            const auto r = orbit(map_of(map), Permutation(p));
            py::dict d;
            d["tail_length"] = r.tail_length;
            d["cycle_length"] = r.cycle_length;
            d["reaches_identity_at"] = r.reaches_identity_at;
            d["is_periodic_point"] = r.is_periodic_point;
            return d;
        },
        py::arg("map"), py::arg("p"));

    m.def("claims", [] {
        std::vector<std::string> out;
        for (auto c : all_claims()) out.emplace_back(to_string(c));
        return out;
    });
    m.def(
        "count",
        [](const std::string& claim, std::size_t n, std::optional<std::size_t> t) -> py::object {
            switch (claim_of(claim)) {
                case ClaimId::T3_4:
                    if (!t) throw py::value_error("T3_4 needs t");
                    return to_py(count_t_sortable_s12(n, *t));
                case ClaimId::T3_6: return to_py(count_t_sortable_s21(n));
                case ClaimId::T4_2: return to_py(count_machine21_sortable(n));
                case ClaimId::T4_4: return to_py(count_machine21_fixed_points(n));
                case ClaimId::C5_1_min: return to_py(count_min_sorted_s12(n));
                case ClaimId::C5_1_high: return to_py(count_highly_sorted_s12(n));
                case ClaimId::L5_3: return py::int_(machine12_bound(n));
                default: throw py::value_error("claim '" + claim + "' has no closed-form count");
            }
        },
        py::arg("claim"), py::arg("n"), py::arg("t") = py::none());
    m.def("image_s12_power", [](std::size_t n) { return values_of(image_s12_power(n)); });
    m.def("image_machine12", [](std::size_t n) { return values_of(image_machine12(n)); });
    m.def(
        "witness",
        [](const std::string& family, std::size_t n) {
            const auto f = parse_witness_family(family);
            if (!f) throw py::value_error("unknown witness family '" + family + "'");
            const auto c = witness_claim(*f, n);
            py::dict d;
            d["start"] = values_of(c.start);
            d["passes"] = c.passes;
            d["target"] = values_of(c.target);
            return d;
        },
        py::arg("family"), py::arg("n"));

    m.def(
        "brute_t_sortable",
        [](const std::string& map, std::size_t n, std::size_t t, std::size_t jobs, bool force) {
            BigCount c;
            {
                py::gil_scoped_release release;
                c = brute_t_sortable(map_of(map), n, t, options(jobs, force));
            }
            return to_py(c);
        },
        py::arg("map"), py::arg("n"), py::arg("t"), py::arg("jobs") = 1,
        py::arg("force") = false);
    m.def(
        "brute_image",
        [](const std::string& map, std::size_t n, std::size_t power, std::size_t jobs,
           bool force) {
            ImageResult r;
            {
                py::gil_scoped_release release;
                r = brute_image(map_of(map), n, power, options(jobs, force));
            }
            if (r.overflow) throw py::value_error("image exceeds the member cap");
            return values_of(r.members);
        },
        py::arg("map"), py::arg("n"), py::arg("power"), py::arg("jobs") = 1,
        py::arg("force") = false);
    m.def(
        "brute_fixed_points",
        [](const std::string& map, std::size_t n, std::size_t jobs, bool force) {
            FixedPointResult r;
            {
                py::gil_scoped_release release;
                r = brute_fixed_points(map_of(map), n, true, options(jobs, force));
            }
            std::vector<Values> out;
            for (const auto& p : *r.members) out.push_back(values_of(p));
            return out;
        },
        py::arg("map"), py::arg("n"), py::arg("jobs") = 1, py::arg("force") = false);
    m.def(
        "brute_ord",
        [](const std::string& map, std::size_t n, std::size_t jobs, bool force) {
            py::gil_scoped_release release;
            return brute_ord(map_of(map), n, options(jobs, force));
        },
        py::arg("map"), py::arg("n"), py::arg("jobs") = 1, py::arg("force") = false);

    m.def(
        "verify_json",
        [](const std::string& claim, std::size_t n_min, std::size_t n_max, std::size_t jobs,
           bool force) {
            std::vector<ClaimId> ids;
            if (claim == "all") {
                ids = all_claims();
            } else {
                ids.push_back(claim_of(claim));
            }
            std::vector<VerificationReport> reports;
            {
                py::gil_scoped_release release;
                for (auto id : ids) reports.push_back(verify(id, n_min, n_max, options(jobs, force)));
            }
            return (claim == "all" ? to_json(reports) : to_json(reports.front())).dump();
        },
        py::arg("claim"), py::arg("n_min"), py::arg("n_max"), py::arg("jobs"), py::arg("force"));
}

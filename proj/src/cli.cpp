#include "znil/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "znil/abelian.hpp"
#include "znil/cohomology.hpp"
#include "znil/cyclic_module.hpp"
#include "znil/errors.hpp"
#include "znil/factor.hpp"
#include "znil/intmath.hpp"
#include "znil/oracle.hpp"
#include "znil/parallel.hpp"

namespace znil::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

// Integers above 2^53 are emitted as decimal strings so downstream JSON
// consumers with double-backed numbers cannot lose precision.
constexpr std::uint64_t kJsonExactMax = std::uint64_t{1} << 53;

ordered_json ju(std::uint64_t v) {
    if (v > kJsonExactMax) return std::to_string(v);
    return v;
}

ordered_json jfactorization(const Factorization& f) {
    ordered_json arr = ordered_json::array();
    for (const auto& pp : f.factors) arr.push_back(ordered_json::array({ju(pp.p), pp.k}));
    return arr;
}

ordered_json jgroup(const FiniteAbelianGroup& g) {
    ordered_json arr = ordered_json::array();
    for (std::uint64_t c : g.cyclic_orders) arr.push_back(ju(c));
    return arr;
}

ordered_json jpresentation(const QuotientPresentation& q) {
    ordered_json obj;
    obj["p"] = ju(q.p);
    obj["k"] = q.k;
    obj["a"] = q.a;
    obj["b"] = q.b;
    return obj;
}

std::string factorization_text(const Factorization& f) {
    if (f.factors.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
        if (i > 0) s += " * ";
        s += std::to_string(f.factors[i].p);
        if (f.factors[i].k > 1) s += "^" + std::to_string(f.factors[i].k);
    }
    return s;
}

std::string module_text(const CyclicModule& M) { return "Z/" + std::to_string(M.n()) + "Z"; }

std::string presentations_text(const std::vector<QuotientPresentation>& ps) {
    if (ps.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (i > 0) s += " x ";
        s += ps[i].to_string();
    }
    return s;
}

const char* class_name(ElementClass c) {
    switch (c) {
        case ElementClass::Zero:
            return "zero";
        case ElementClass::Nilpotent:
            return "nilpotent";
        default:
            return "non-nilpotent";
    }
}

struct GlobalOpts {
    std::string format = "text";
    std::uint64_t enum_bound = kDefaultEnumBound;

    bool json() const { return format == "json"; }
};

void emit(const GlobalOpts& opts, const ordered_json& payload, const std::string& text,
          std::ostream& out) {
    if (opts.json()) {
        out << payload.dump() << "\n";
    } else {
        out << text;
    }
}

// ---------------------------------------------------------------- commands

int cmd_factor(std::uint64_t n, const GlobalOpts& opts, std::ostream& out) {
    const Factorization f = factorize(n);
    ordered_json j;
    j["n"] = ju(n);
    j["command"] = "factor";
    j["factorization"] = jfactorization(f);
    emit(opts, j, std::to_string(n) + " = " + factorization_text(f) + "\n", out);
    return kExitOk;
}

int cmd_classify(std::uint64_t n, const GlobalOpts& opts, std::ostream& out) {
    const CyclicModule M = CyclicModule::of(n);
    ordered_json j;
    j["n"] = ju(n);
    j["command"] = "classify";
    j["factorization"] = jfactorization(M.f);
    j["reduced"] = is_reduced(M);
    j["semisimple"] = is_semisimple(M);
    j["non_nilpotent_count"] = ju(non_nilpotent_count(M));
    j["radical"] = ju(radical(M.f));
    std::ostringstream text;
    text << "n = " << n << " = " << factorization_text(M.f) << "\n"
         << "reduced: " << (is_reduced(M) ? "true" : "false") << "\n"
         << "semisimple: " << (is_semisimple(M) ? "true" : "false") << "\n"
         << "non-nilpotent count: " << non_nilpotent_count(M) << "\n"
         << "radical: " << radical(M.f) << "\n";
    emit(opts, j, text.str(), out);
    return kExitOk;
}

int cmd_element(std::uint64_t n, std::uint64_t m, const GlobalOpts& opts, std::ostream& out) {
    const CyclicModule M = CyclicModule::of(n);
    const ElementClass c = classify_element(M, m);
    ordered_json j;
    j["n"] = ju(n);
    j["command"] = "element";
    j["m"] = ju(m);
    j["class"] = class_name(c);
    emit(opts, j,
         std::to_string(m) + " in " + module_text(M) + ": " + class_name(c) + "\n", out);
    return kExitOk;
}

int cmd_elements(std::uint64_t n, const std::string& kind, std::optional<std::uint64_t> limit,
                 const GlobalOpts& opts, std::ostream& out) {
    const CyclicModule M = CyclicModule::of(n);
    const bool non_nil = kind == "non-nilpotent";
    const std::vector<std::uint64_t> elems = non_nil
                                                 ? non_nilpotent_elements(M, limit, opts.enum_bound)
                                                 : nilpotent_elements(M, limit, opts.enum_bound);
    const std::uint64_t total = non_nil ? non_nilpotent_count(M) : M.n() - radical(M.f);
    ordered_json j;
    j["n"] = ju(n);
    j["command"] = "elements";
    j["kind"] = kind;
    j["count"] = ju(total);
    j["elements"] = ordered_json::array();
    for (std::uint64_t e : elems) j["elements"].push_back(ju(e));
    j["truncated"] = elems.size() < total;
    std::ostringstream text;
    text << kind << " elements of " << module_text(M) << " (" << total << ")";
    if (elems.size() < total) text << ", first " << elems.size();
    text << ":";
    for (std::uint64_t e : elems) text << " " << e;
    text << "\n";
    emit(opts, j, text.str(), out);
    return kExitOk;
}

int cmd_cohomology(std::uint64_t n, std::uint32_t from, std::uint32_t to, bool show_presentation,
                   bool show_canonical, const GlobalOpts& opts, std::ostream& out) {
    const CyclicModule M = CyclicModule::of(n);
    const std::uint32_t first = first_valid_index(M);
    if (from < first) {
        throw std::out_of_range("cohomology: index " + std::to_string(from) +
                                " is below the first valid index " + std::to_string(first));
    }
    ordered_json j;
    j["n"] = ju(n);
    j["command"] = "cohomology";
    j["from"] = from;
    j["to"] = to;
    j["stabilization_index"] = stabilization_index(M);
    j["groups"] = ordered_json::array();
    std::ostringstream text;
    text << module_text(M) << " = " << FiniteAbelianGroup::cyclic(n).to_string() << "\n";
    const bool both = show_presentation == show_canonical;
    for (std::uint32_t idx = from; idx <= to; ++idx) {
        const CompositeCohomology h = cohomology_composite(M, idx);
        ordered_json entry;
        entry["index"] = idx;
        entry["presentations"] = ordered_json::array();
        for (const auto& p : h.presentations) entry["presentations"].push_back(jpresentation(p));
        entry["canonical"] = jgroup(h.group);
        j["groups"].push_back(std::move(entry));
        text << "H^" << idx << " = ";
        if (both) {
            text << presentations_text(h.presentations) << " ~ " << h.group.to_string();
        } else if (show_presentation) {
            text << presentations_text(h.presentations);
        } else {
            text << h.group.to_string();
        }
        text << "\n";
    }
    text << "stabilization index: " << stabilization_index(M) << "\n";
    emit(opts, j, text.str(), out);
    return kExitOk;
}

int cmd_stabilize(std::uint64_t n, const GlobalOpts& opts, std::ostream& out) {
    const CyclicModule M = CyclicModule::of(n);
    const CohomologySequence seq = cohomology_sequence(M, stabilization_index(M) + 2);
    ordered_json j;
    j["n"] = ju(n);
    j["command"] = "stabilize";
    j["defined_from"] = seq.defined_from;
    j["stabilization_index"] = seq.stabilization_index;
    j["limit"] = jgroup(seq.limit);
    std::ostringstream text;
    text << "n = " << n << " = " << factorization_text(M.f) << "\n"
         << "first valid index: " << seq.defined_from << "\n"
         << "stabilization index: " << seq.stabilization_index << "\n"
         << "limit: " << seq.limit.to_string() << "\n";
    emit(opts, j, text.str(), out);
    return kExitOk;
}

int cmd_reduce(std::uint64_t n, bool chain, const GlobalOpts& opts, std::ostream& out) {
    const CyclicModule M = CyclicModule::of(n);
    ordered_json j;
    j["n"] = ju(n);
    j["command"] = "reduce";
    std::ostringstream text;
    if (chain) {
        const ReductionChain rc = reduction_chain(M);
        j["chain"] = ordered_json::array();
        for (const auto& step : rc.steps) {
            ordered_json entry;
            entry["n"] = ju(step.n());
            entry["factorization"] = jfactorization(step.f);
            j["chain"].push_back(std::move(entry));
        }
        for (std::size_t i = 0; i < rc.steps.size(); ++i) {
            if (i > 0) text << " -> ";
            text << module_text(rc.steps[i]);
        }
        text << "\nsteps: " << rc.steps.size() - 1 << "\n";
    } else {
        const ReductionStep step = reduce_once(M);
        j["generator"] = ju(step.generator);
        ordered_json q;
        q["n"] = ju(step.quotient.n());
        q["factorization"] = jfactorization(step.quotient.f);
        j["quotient"] = std::move(q);
        text << "N = <" << step.generator << "> in " << module_text(M) << "\n"
             << "M/N = " << module_text(step.quotient) << " = "
             << factorization_text(step.quotient.f) << "\n";
    }
    emit(opts, j, text.str(), out);
    return kExitOk;
}

int cmd_same_class(std::uint64_t n1, std::uint64_t n2, const GlobalOpts& opts,
                   std::ostream& out) {
    const CyclicModule M1 = CyclicModule::of(n1);
    const CyclicModule M2 = CyclicModule::of(n2);
    const bool same = same_class(M1, M2);
    ordered_json j;
    j["command"] = "same-class";
    j["n1"] = ju(n1);
    j["n2"] = ju(n2);
    j["radical1"] = ju(radical(M1.f));
    j["radical2"] = ju(radical(M2.f));
    j["same_class"] = same;
    std::ostringstream text;
    text << module_text(M1) << " and " << module_text(M2) << ": "
         << (same ? "same class" : "different classes") << " (radicals " << radical(M1.f)
         << ", " << radical(M2.f) << ")\n";
    emit(opts, j, text.str(), out);
    return kExitOk;
}

// ----------------------------------------------------------------- verify

struct Mismatch {
    std::uint64_t n;
    std::string check;
    std::string detail;
};

// Recomputes every closed form for one modulus from definitions and reports
// disagreements. The mutate hook perturbs the closed-form side so tests can
// prove the sweep actually detects a lie.
void verify_modulus(std::uint64_t n, std::uint64_t enum_bound, const std::string& mutate,
                    std::vector<Mismatch>& out) {
    const CyclicModule M = CyclicModule::of(n);
    const std::vector<bool> nil = oracle::nilpotent_flags(n, enum_bound);

    for (std::uint64_t m = 0; m < n; ++m) {
        bool closed_nil = classify_element(M, m) != ElementClass::NonNilpotent;
        if (mutate == "classify" && m == 1) closed_nil = !closed_nil;
        if (closed_nil != nil[m]) {
            out.push_back({n, "classify",
                           "element " + std::to_string(m) + ": closed form says " +
                               (closed_nil ? "nilpotent" : "non-nilpotent") +
                               ", definition says the opposite"});
            break;
        }
    }

    std::uint64_t oracle_count = 0;
    for (std::uint64_t m = 1; m < n; ++m) {
        if (!nil[m]) ++oracle_count;
    }
    std::uint64_t closed_count = non_nilpotent_count(M);
    if (mutate == "count") ++closed_count;
    if (closed_count != oracle_count) {
        out.push_back({n, "count",
                       "closed form " + std::to_string(closed_count) + ", enumeration " +
                           std::to_string(oracle_count)});
    }

    const bool reduced = is_reduced(M);
    const bool torsion = oracle::satisfies_torsion_p2_condition(n, enum_bound);
    if (reduced != is_semisimple(M) || reduced != is_squarefree(M.f) || reduced != torsion) {
        out.push_back({n, "equivalences", "reduced/semisimple/squarefree/torsion disagree"});
    }

    FiniteAbelianGroup closed_quotient = FiniteAbelianGroup::cyclic(reduce_once(M).quotient.n());
    if (mutate == "quotient") closed_quotient = direct_sum(closed_quotient, {{2}});
    const FiniteAbelianGroup oracle_quotient = oracle::quotient_by_non_nilpotents(n, enum_bound);
    if (closed_quotient != oracle_quotient) {
        out.push_back({n, "quotient",
                       "closed form " + closed_quotient.to_string() + ", cosets " +
                           oracle_quotient.to_string()});
    }

    const std::vector<std::uint64_t> span = oracle::span_of_nilpotents(n, enum_bound);
    const bool span_zero = span.size() == 1 && span[0] == 0;
    const bool span_full = span.size() == n;
    if (reduced ? !span_zero : !span_full) {
        out.push_back({n, "span", "span of nilpotents has " + std::to_string(span.size()) +
                                      " of " + std::to_string(n) + " elements"});
    }

    for (const auto& pp : M.f.factors) {
        bool bad = false;
        for (std::uint32_t idx = start_index(pp.k); idx <= pp.k + 2 && !bad; ++idx) {
            FiniteAbelianGroup closed = cohomology_prime_power(pp.p, pp.k, idx).canonical();
            if (mutate == "cohomology") closed = direct_sum(closed, {{2}});
            if (closed != oracle::cohomology_brute(pp.p, pp.k, idx, enum_bound)) {
                out.push_back({n, "cohomology",
                               "H^" + std::to_string(idx) + " of Z_" +
                                   std::to_string(checked_pow(pp.p, pp.k)) +
                                   " disagrees with ker/im enumeration"});
                bad = true;
            }
        }
    }

    const std::uint32_t first = first_valid_index(M);
    const std::uint32_t horizon = stabilization_index(M) + 2;
    std::vector<FiniteAbelianGroup> seq;
    for (std::uint32_t idx = first; idx <= horizon; ++idx) {
        FiniteAbelianGroup g;
        for (const auto& pp : M.f.factors) {
            g = direct_sum(g, oracle::cohomology_brute(pp.p, pp.k, idx, enum_bound));
        }
        seq.push_back(std::move(g));
    }
    std::uint32_t least = horizon;
    while (least > first && seq[least - 1 - first] == seq.back()) --least;
    std::uint32_t closed_stab = stabilization_index(M);
    if (mutate == "stabilization") ++closed_stab;
    if (closed_stab != least || seq.back() != FiniteAbelianGroup::cyclic(n)) {
        out.push_back({n, "stabilization",
                       "closed form stabilizes at " + std::to_string(closed_stab) +
                           ", enumeration at " + std::to_string(least)});
    }
}

int cmd_verify(std::uint64_t from, std::uint64_t through, const std::string& mutate,
               const GlobalOpts& opts, std::ostream& out, std::ostream& err) {
    if (through < from) {
        err << "error: verify range is empty: [" << from << ", " << through << "]\n";
        return kExitUsage;
    }
    if (through > opts.enum_bound) {
        throw ResourceError("verify: " + std::to_string(through) +
                            " exceeds the enumeration bound " + std::to_string(opts.enum_bound));
    }
    std::vector<std::vector<Mismatch>> slots(through - from + 1);
    parallel_for(from, through + 1, [&](std::uint64_t n) {
        verify_modulus(n, opts.enum_bound, mutate, slots[n - from]);
    });
    std::vector<Mismatch> mismatches;
    for (auto& slot : slots) {
        mismatches.insert(mismatches.end(), slot.begin(), slot.end());
    }
    ordered_json j;
    j["command"] = "verify";
    j["from"] = ju(from);
    j["through"] = ju(through);
    j["checked"] = ju(through - from + 1);
    j["mismatch_count"] = ju(mismatches.size());
    j["mismatches"] = ordered_json::array();
    std::ostringstream text;
    for (const auto& m : mismatches) {
        ordered_json entry;
        entry["n"] = ju(m.n);
        entry["check"] = m.check;
        entry["detail"] = m.detail;
        j["mismatches"].push_back(std::move(entry));
        text << "mismatch at n = " << m.n << " [" << m.check << "]: " << m.detail << "\n";
    }
    text << "verified n in [" << from << ", " << through << "]: " << (through - from + 1)
         << " moduli, " << mismatches.size() << " mismatches\n";
    emit(opts, j, text.str(), out);
    return mismatches.empty() ? kExitOk : kExitMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Structural invariants of the Z-module Z/nZ"};
    app.name("znil");
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts opts;
    app.add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--enum-bound", opts.enum_bound,
                   "Bound on element enumeration and brute-force scans")
        ->capture_default_str();

    std::uint64_t n = 0, m = 0, n2 = 0;
    std::uint32_t from_idx = 0, to_idx = 0;
    std::string kind = "non-nilpotent";
    std::optional<std::uint64_t> limit;
    bool chain = false, show_presentation = false, show_canonical = false;
    std::optional<std::uint64_t> verify_n;
    std::optional<std::uint64_t> verify_through;
    std::string mutate;

    auto* factor_cmd = app.add_subcommand("factor", "Prime factorization of n");
    factor_cmd->add_option("n", n, "Modulus")->required();

    auto* classify_cmd =
        app.add_subcommand("classify", "Reducedness, semisimplicity and the class invariant");
    classify_cmd->add_option("n", n, "Modulus")->required();

    auto* element_cmd = app.add_subcommand("element", "Classify a single element of Z/nZ");
    element_cmd->add_option("n", n, "Modulus")->required();
    element_cmd->add_option("m", m, "Canonical residue")->required();

    auto* elements_cmd = app.add_subcommand("elements", "List elements by class");
    elements_cmd->add_option("n", n, "Modulus")->required();
    elements_cmd->add_option("--kind", kind, "Element class to list")
        ->check(CLI::IsMember({"nilpotent", "non-nilpotent"}))
        ->capture_default_str();
    elements_cmd->add_option("--limit", limit, "Maximum number of elements to list");

    auto* cohomology_cmd =
        app.add_subcommand("cohomology", "Cohomology groups of the multiplication complex");
    cohomology_cmd->add_option("n", n, "Modulus")->required();
    cohomology_cmd->add_option("--from", from_idx, "First index")->required();
    cohomology_cmd->add_option("--to", to_idx, "Last index")->required();
    auto* pres_flag =
        cohomology_cmd->add_flag("--presentation", show_presentation, "Presentation form only");
    cohomology_cmd->add_flag("--canonical", show_canonical, "Canonical form only")
        ->excludes(pres_flag);

    auto* stabilize_cmd =
        app.add_subcommand("stabilize", "Stabilization index and limit of the cohomology sequence");
    stabilize_cmd->add_option("n", n, "Modulus")->required();

    auto* reduce_cmd =
        app.add_subcommand("reduce", "Quotient by the non-nilpotent elements plus zero");
    reduce_cmd->add_option("n", n, "Modulus")->required();
    reduce_cmd->add_flag("--chain", chain, "Iterate until a reduced module is reached");

    auto* same_class_cmd = app.add_subcommand("same-class", "Compare class invariants");
    same_class_cmd->add_option("n1", n, "First modulus")->required();
    same_class_cmd->add_option("n2", n2, "Second modulus")->required();

    auto* verify_cmd =
        app.add_subcommand("verify", "Check every closed form against brute-force enumeration");
    verify_cmd->add_option("n", verify_n, "First modulus to check (default 1)");
    verify_cmd->add_option("--through", verify_through, "Last modulus to check");
    verify_cmd->add_option("--mutate", mutate, "Perturb a closed form (self-test hook)")
        ->check(CLI::IsMember({"classify", "count", "quotient", "cohomology", "stabilization"}))
        ->group("");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("znil");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (factor_cmd->parsed()) return cmd_factor(n, opts, out);
        if (classify_cmd->parsed()) return cmd_classify(n, opts, out);
        if (element_cmd->parsed()) return cmd_element(n, m, opts, out);
        if (elements_cmd->parsed()) return cmd_elements(n, kind, limit, opts, out);
        if (cohomology_cmd->parsed()) {
            if (to_idx < from_idx) {
                err << "error: --to must be >= --from\n";
                return kExitUsage;
            }
            return cmd_cohomology(n, from_idx, to_idx, show_presentation, show_canonical, opts,
                                  out);
        }
        if (stabilize_cmd->parsed()) return cmd_stabilize(n, opts, out);
        if (reduce_cmd->parsed()) return cmd_reduce(n, chain, opts, out);
        if (same_class_cmd->parsed()) return cmd_same_class(n, n2, opts, out);
        if (verify_cmd->parsed()) {
            if (!verify_n && !verify_through) {
                err << "error: verify needs a modulus or --through\n";
                return kExitUsage;
            }
            const std::uint64_t from = verify_n.value_or(1);
            const std::uint64_t through = verify_through.value_or(from);
            return cmd_verify(from, through, mutate, opts, out, err);
        }
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    err << "error: no subcommand\n";
    return kExitUsage;
}

}  // namespace znil::cli

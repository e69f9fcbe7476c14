#include "horadam/cli/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "horadam/binomials/binomials.hpp"
#include "horadam/closed_forms/closed_forms.hpp"
#include "horadam/cobweb/cobweb.hpp"
#include "horadam/oracles/oracles.hpp"
#include "horadam/sequences/sequences.hpp"

namespace horadam::cli {

using json = nlohmann::json;

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Report {
    json inputs = json::object();
    json results = json::object();
    json checks = json::array();
    /// Integer table for CSV export, when the subcommand produces one.
    std::optional<GBTable> table;

    void check(const std::string& name, bool pass, const std::string& lhs, const std::string& rhs) {
        checks.push_back({{"name", name}, {"pass", pass}, {"lhs", lhs}, {"rhs", rhs}});
    }

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c["pass"].get<bool>()) return false;
        return true;
    }
};

std::string str(const Scalar& x) { return x.to_string(); }
std::string str(const Integer& x) { return x.get_str(); }

json scalars(const std::vector<Scalar>& xs) {
    json out = json::array();
    for (const auto& x : xs) out.push_back(x.to_string());
    return out;
}

std::string joined(const std::vector<Scalar>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + xs[i].to_string();
    return out;
}

std::size_t need(const std::optional<std::size_t>& value, const char* flag) {
    if (!value) throw UsageError(std::string("missing required option ") + flag);
    return *value;
}

json table_json(const GBTable& table) {
    json rows = json::array();
    for (const auto& row : table.rows) rows.push_back(scalars(row));
    return rows;
}

json sequence_json(const Sequence& seq) {
    json out{{"label", seq.label()}, {"kind", sequence_kind_name(seq.kind())}};
    if (const auto& spec = seq.spec()) {
        out["a"] = str(spec->a);
        out["b"] = str(spec->b);
        out["s"] = str(spec->s);
        out["t"] = str(spec->t);
        out["delta"] = str(spec->delta());
        if (spec->roots) out["roots"] = {str(spec->roots->p), str(spec->roots->q)};
    }
    return out;
}

// seq ----------------------------------------------------------------------

Report do_seq(const RunConfig& c) {
    Report rep;
    const std::size_t count = c.N.value_or(10);
    rep.inputs = {{"seq", c.seq}, {"N", count}};
    const Sequence seq = sequence_preset(c.seq);
    const auto terms = seq.terms(count);
    rep.results["sequence"] = sequence_json(seq);
    rep.results["terms"] = scalars(terms);
    const auto& spec = seq.spec();
    if (!spec) return rep;
    const auto ogf = ogf_coefficients(*spec, count);
    rep.check("ogf coefficients equal recurrence", ogf == terms, joined(ogf), joined(terms));
    if (!spec->s.is_zero()) {
        std::vector<Scalar> closed;
        for (std::size_t n = 0; n < count; ++n) closed.push_back(horadam_binomial_sum(*spec, n));
        rep.check("binomial-sum closed form equals recurrence", closed == terms, joined(closed), joined(terms));
    }
    if (spec->roots && !(spec->roots->p - spec->roots->q).is_zero()) {
        const auto bc = binet_coeffs(*spec);
        rep.results["binet"] = {{"A", str(bc.A)}, {"B", str(bc.B)}};
        std::vector<Scalar> binet;
        for (std::size_t n = 0; n < count; ++n) binet.push_back(binet_term(*spec, bc, n));
        rep.check("Binet form equals recurrence", binet == terms, joined(binet), joined(terms));
        const auto egf = egf_coefficients(*spec, count);
        rep.results["egf"] = scalars(egf);
    }
    return rep;
}

// binomials ----------------------------------------------------------------

Report do_binom(const RunConfig& c) {
    Report rep;
    const std::size_t n = need(c.n, "--n");
    const std::size_t k = need(c.k, "--k");
    rep.inputs = {{"seq", c.seq}, {"n", n}, {"k", k}};
    const Sequence seq = sequence_preset(c.seq);
    const Scalar value = f_binomial(seq, n, k);
    rep.results["sequence"] = seq.label();
    rep.results["value"] = str(value);
    rep.results["factorial_n"] = str(f_factorial(seq, n));
    rep.results["integer"] = value.is_integer();
    if (k <= n) {
        const Scalar mirror = f_binomial(seq, n, n - k);
        rep.check("symmetry binom(n,k) = binom(n,n-k)", value == mirror, str(value), str(mirror));
    }
    return rep;
}

Report do_multinom(const RunConfig& c) {
    Report rep;
    const std::size_t n = need(c.n, "--n");
    rep.inputs = {{"seq", c.seq}, {"n", n}, {"parts", c.parts}};
    const Sequence seq = sequence_preset(c.seq);
    rep.results["sequence"] = seq.label();
    std::vector<std::size_t> all_parts;
    if (c.k) all_parts.push_back(*c.k);
    all_parts.insert(all_parts.end(), c.parts.begin(), c.parts.end());
    std::size_t total = 0;
    for (std::size_t p : all_parts) total += p;
    if (total != n) throw InvalidArgument("parts (with k, if given) must sum to n");
    const Scalar value = f_multinomial(seq, n, all_parts);
    rep.results["value"] = str(value);
    if (c.k) {
        rep.inputs["k"] = *c.k;
        const bool ok = multinomial_factorization_check(seq, n, *c.k, c.parts);
        const Scalar split = f_binomial(seq, n, *c.k) * f_multinomial(seq, n - *c.k, c.parts);
        rep.check("binom(n,k) * multinom(n-k; parts) = multinom(n; k, parts)", ok, str(split), str(value));
    }
    return rep;
}

Report do_mixed(const RunConfig& c) {
    Report rep;
    const std::size_t r = need(c.r, "--r");
    const std::size_t s = need(c.s, "--s");
    rep.inputs = {{"seq", c.seq}, {"r", r}, {"s", s}};
    const Sequence seq = sequence_preset(c.seq);
    if (!seq.spec()) throw InvalidArgument("mixed coefficients need a recurrence-defined sequence for (s, t)");
    const auto& spec = *seq.spec();
    const Scalar value = mixed_binomial(r, s, spec.s, spec.t);
    const Scalar swapped = mixed_binomial(s, r, spec.s, spec.t);
    rep.results["parameters"] = {{"s", str(spec.s)}, {"t", str(spec.t)}};
    rep.results["value"] = str(value);
    rep.results["swapped_value"] = str(swapped);
    rep.results["symmetric"] = value == swapped;
    return rep;
}

Report do_table(const RunConfig& c) {
    Report rep;
    const std::size_t N = need(c.N, "--N");
    rep.inputs = {{"seq", c.seq}, {"N", N}};
    const Sequence seq = sequence_preset(c.seq);
    GBTable table;
    if (c.schemes.empty()) {
        table = factorial_table(seq, N);
        rep.results["method"] = "factorial";
    } else {
        if (c.schemes.size() != 1) throw UsageError("table takes at most one --scheme");
        const auto scheme = scheme_from_string(c.schemes.front());
        if (!scheme) throw UsageError("unknown scheme '" + c.schemes.front() + "'");
        rep.inputs["scheme"] = std::string(scheme_cli_name(*scheme));
        table = recurrence_fill(*scheme, seq, N);
        rep.results["method"] = std::string(scheme_id(*scheme));
    }
    rep.results["sequence"] = seq.label();
    rep.results["N"] = N;
    rep.results["rows"] = table_json(table);
    rep.results["integer"] = table.all_integer();
    rep.table = std::move(table);
    return rep;
}

Report do_verify(const RunConfig& c) {
    Report rep;
    const std::size_t N = c.N.value_or(12);
    std::vector<SchemeName> schemes;
    bool all = false;
    if (c.schemes.empty()) throw UsageError("verify needs --scheme (a scheme name or 'all')");
    for (const auto& name : c.schemes) {
        if (name == "all") {
            all = true;
            schemes = all_schemes();
            break;
        }
        const auto scheme = scheme_from_string(name);
        if (!scheme) throw UsageError("unknown scheme '" + name + "'");
        schemes.push_back(*scheme);
    }
    json names = json::array();
    for (auto s : schemes) names.push_back(std::string(scheme_cli_name(s)));
    rep.inputs = {{"seq", c.seq}, {"N", N}, {"schemes", names}};
    const Sequence seq = sequence_preset(c.seq);
    rep.results["sequence"] = seq.label();
    json failures = json::array();
    json skipped = json::array();
    json errors = json::array();
    for (auto scheme : schemes) {
        const VerificationReport vr = verify_scheme(scheme, seq, N);
        const std::string id(scheme_id(scheme));
        if (vr.error) {
            const bool not_applicable = vr.error->rfind("SchemeNotApplicable", 0) == 0;
            if (all && not_applicable) {
                skipped.push_back({{"scheme", id}, {"reason", *vr.error}});
                continue;
            }
            errors.push_back({{"scheme", id}, {"error", *vr.error}});
            rep.check(id + " fill equals definition", false, "error", *vr.error);
            continue;
        }
        for (const auto& cell : vr.cells)
            if (!cell.pass)
                failures.push_back({{"scheme", id}, {"n", cell.n}, {"k", cell.k}, {"filled", str(cell.filled)},
                                    {"expected", str(cell.expected)}});
        const std::size_t total = vr.cells.size();
        rep.check(id + " fill equals definition", vr.all_pass(), std::to_string(total - vr.failures()) + " agreeing cells",
                  std::to_string(total) + " cells");
    }
    rep.results["failures"] = failures;
    rep.results["skipped"] = skipped;
    rep.results["errors"] = errors;
    return rep;
}

// closed forms -------------------------------------------------------------

Report do_carlitz_n(std::size_t n) {
    Report rep;
    rep.inputs = {{"n", n}};
    const auto cr = carlitz_product(n);
    rep.results["lhs"] = cr.lhs.to_string();
    rep.results["rhs"] = cr.rhs.to_string();
    rep.results["lhs_reduced"] = cr.lhs_reduced.to_string();
    rep.results["rhs_reduced"] = cr.rhs_reduced.to_string();
    rep.results["equal"] = cr.equal;
    rep.check("product equals signed U*-binomial sum under p*q = -1", cr.equal, cr.lhs_reduced.to_string(),
              cr.rhs_reduced.to_string());
    return rep;
}

Report do_closed_form(const RunConfig& c) {
    const std::string& f = c.formula;
    if (f == "carlitz") {
        Report rep = do_carlitz_n(need(c.n, "--n"));
        rep.inputs["formula"] = f;
        return rep;
    }
    Report rep;
    const std::size_t n = need(c.n, "--n");
    const std::size_t k = need(c.k, "--k");
    rep.inputs = {{"formula", f}, {"n", n}, {"k", k}};
    if (f == "qstar") {
        const auto q = qstar_transfer(n, k);
        rep.results["pq_form"] = str(q.pq_form);
        rep.results["transferred"] = str(q.transferred);
        rep.results["agrees_with_factorial"] = q.equal;
        rep.check("binom_{p,q}(n,k) = q^(k(n-k)) binom_{q*}(n,k)", q.equal, str(q.pq_form), str(q.transferred));
        return rep;
    }
    rep.inputs["seq"] = c.seq;
    const Sequence seq = sequence_preset(c.seq);
    Scalar value;
    Scalar expected;
    if (f == "mdU") {
        if (!seq.spec()) throw InvalidArgument("mdU needs a recurrence-defined sequence for (s, t)");
        const auto& spec = *seq.spec();
        value = md_u_binomial(n, k, spec.s, spec.t);
        expected = f_binomial(Sequence::fundamental_u(spec.s, spec.t), n, k);
        rep.results["parameters"] = {{"s", str(spec.s)}, {"t", str(spec.t)}};
    } else if (f == "md" || f == "errata" || f == "bp49") {
        value = f == "md" ? md_fibonomial(n, k, seq)
                          : (f == "errata" ? errata_fibonomial(n, k, seq) : corrected_benjamin_plott(n, k, seq));
        expected = f_binomial(seq, n, k);
    } else {
        throw UsageError("unknown formula '" + f + "' (md, errata, bp49, mdU, carlitz, qstar)");
    }
    rep.results["value"] = str(value);
    rep.results["factorial_value"] = str(expected);
    rep.results["agrees_with_factorial"] = value == expected;
    // The erratum variant is reported, not asserted.
    if (f != "errata") rep.check(f + " equals factorial definition", value == expected, str(value), str(expected));
    return rep;
}

// oracles ------------------------------------------------------------------

Integer gamma_by_binomials(std::size_t n, std::size_t colors, const Sequence& seq) {
    if (colors == 1) return Integer(1);
    Integer sum(0);
    for (std::size_t b = 0; b <= n; ++b)
        sum += *f_binomial(seq, n, b).integer_value() * gamma_by_binomials(n - b, colors - 1, seq);
    return sum;
}

Report do_oracle(const RunConfig& c) {
    Report rep;
    const std::string& model = c.model;
    rep.inputs["model"] = model;
    rep.results["model"] = model;
    auto record = [&](const std::string& oracle, const std::string& algebraic) {
        rep.results["oracle_value"] = oracle;
        rep.results["algebraic_value"] = algebraic;
        rep.results["equal"] = oracle == algebraic;
        rep.check(model + " oracle equals algebraic value", oracle == algebraic, oracle, algebraic);
    };
    if (model == "tilings" || model == "bracelets") {
        const std::size_t n = need(c.n, "--n");
        const Scalar s = parse_scalar(c.s_expr);
        const Scalar t = parse_scalar(c.t_expr);
        rep.inputs["n"] = n;
        rep.inputs["s"] = str(s);
        rep.inputs["t"] = str(t);
        if (model == "tilings") {
            record(str(count_linear_tilings(n, s, t)), str(lucas_u(n + 1, s, t)));
        } else {
            record(str(count_bracelets(n, s, t)), str(lucas_v(n, s, t)));
        }
    } else if (model == "paths") {
        const std::size_t n = need(c.n, "--n");
        const std::size_t k = need(c.k, "--k");
        rep.inputs["n"] = n;
        rep.inputs["k"] = k;
        const auto dist = gaussian_by_paths(n, k);
        json counts = json::object();
        for (const auto& [a, cnt] : dist.counts) counts[std::to_string(a)] = cnt.get_str();
        rep.results["area_distribution"] = counts;
        rep.results["inversions_equal_area"] = inversions_equal_area(n, k);
        record(Scalar(dist.polynomial()).to_string(), str(f_binomial(sequence_preset("gauss"), n, k)));
        rep.check("area equals inversion count on every path", inversions_equal_area(n, k), "area", "inversions");
    } else if (model == "subspaces") {
        const std::size_t n = need(c.n, "--n");
        const std::size_t k = need(c.k, "--k");
        rep.inputs["n"] = n;
        rep.inputs["k"] = k;
        rep.inputs["qf"] = c.qf;
        const Integer count = count_subspaces(n, k, c.qf);
        record(str(count), str(substitute(f_binomial(sequence_preset("gauss"), n, k), Assignment{{"q", c.qf}})));
    } else if (model == "graphs") {
        const std::size_t n = need(c.n, "--n");
        rep.inputs["n"] = n;
        const auto g = count_two_colored_graphs(n);
        rep.results["formula"] = str(g.formula);
        rep.results["row_sum"] = str(g.row_sum);
        record(str(g.direct), str(g.formula));
        rep.check("N(2) row sum equals formula", g.row_sum == g.formula, str(g.row_sum), str(g.formula));
    } else if (model == "gamma") {
        const std::size_t n = need(c.n, "--n");
        const std::size_t k = need(c.k, "--k");
        rep.inputs["n"] = n;
        rep.inputs["k"] = k;
        rep.inputs["alpha"] = c.alpha;
        if (k == 0) throw InvalidArgument("gamma needs k >= 1 colors");
        record(str(gamma_alpha(n, k, c.alpha)), str(gamma_by_binomials(n, k, Sequence::n_alpha(c.alpha))));
    } else if (model == "cigler") {
        const std::size_t m = need(c.m, "--m");
        const std::size_t n = need(c.n, "--n");
        rep.inputs["m"] = m;
        rep.inputs["n"] = n;
        const auto r = cigler_addition_report(m, n);
        rep.results["lhs"] = str(r.lhs);
        rep.results["printed_rhs"] = str(r.printed_rhs);
        rep.results["standard_rhs"] = str(r.standard_rhs);
        rep.results["printed_holds"] = r.printed_holds;
        rep.results["standard_holds"] = r.standard_holds;
    } else {
        throw UsageError("unknown model '" + model + "' (tilings, bracelets, paths, subspaces, graphs, gamma, cigler)");
    }
    return rep;
}

// cobweb -------------------------------------------------------------------

Report do_cobweb(const RunConfig& c) {
    Report rep;
    const std::size_t n = need(c.n, "--n");
    const std::size_t k = need(c.k, "--k");
    rep.inputs = {{"seq", c.seq}, {"n", n}, {"k", k}, {"search_tiling", c.search_tiling},
                  {"intervals_only", c.intervals_only}};
    const Sequence F = sequence_preset(c.seq);
    const bool admissible = is_admissible(F, n);
    rep.results["admissible"] = admissible;
    if (!admissible) throw NotAdmissible(F.label() + " is not admissible up to " + std::to_string(n));
    const auto counting = verify_counting_identity(F, k, n);
    rep.results["chain_count"] = str(counting.chains);
    rep.results["binomial"] = str(counting.binomial);
    rep.results["kappa"] = str(counting.kappa);
    rep.results["counting_identity"] = counting.holds;
    if (k >= 1) rep.results["layer_chain_count"] = str(layer_chain_count(make_layer(F, k, n)));
    rep.check("chains = binomial * kappa", counting.holds, str(counting.chains),
              str(counting.binomial * counting.kappa));
    if (c.search_tiling) {
        rep.inputs["budget"] = c.budget;
        const std::size_t m = n - k;
        const auto result = box_tiling_search(F, m, n, c.budget, c.intervals_only);
        json tiling{{"status", tiling_status_name(result.status)}, {"nodes", result.nodes}};
        if (result.partition) {
            json blocks = json::array();
            for (const auto& b : result.partition->blocks) blocks.push_back(b.axes);
            tiling["blocks"] = blocks;
            tiling["edges"] = result.partition->edges;
            tiling["kappa"] = str(result.partition->kappa);
            const bool valid = validate_partition(F, m, n, *result.partition);
            rep.check("tiling is a valid partition", valid, std::to_string(result.partition->blocks.size()) + " blocks",
                      str(counting.binomial) + " blocks");
        }
        rep.results["tiling"] = tiling;
    }
    return rep;
}

// calc ---------------------------------------------------------------------

Report do_calc(const RunConfig& c) {
    Report rep;
    if (c.expr.empty()) throw UsageError("calc needs --expr");
    rep.inputs = {{"expr", c.expr}};
    Scalar value = parse_scalar(c.expr);
    if (!c.assignments.empty()) {
        Assignment assignment;
        for (const auto& a : c.assignments) {
            const auto eq = a.find('=');
            if (eq == std::string::npos || eq == 0) throw UsageError("--assign expects name=expression");
            assignment.emplace(a.substr(0, eq), parse_scalar(a.substr(eq + 1)));
        }
        rep.inputs["assign"] = c.assignments;
        value = substitute(value, assignment);
    }
    rep.results["value"] = str(value);
    rep.results["polynomial"] = value.is_polynomial();
    if (c.divide_by) {
        rep.inputs["divide_by"] = *c.divide_by;
        const Scalar d = parse_scalar(*c.divide_by);
        if (!value.is_polynomial() || !d.is_polynomial()) throw InvalidArgument("exact division needs polynomials");
        rep.results["quotient"] = exact_divide(value.num(), d.num()).to_string();
    }
    return rep;
}

// output -------------------------------------------------------------------

void pretty_value(std::ostream& os, const std::string& key, const json& v, int depth) {
    const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
    if (v.is_object()) {
        os << pad << key << ":\n";
        for (const auto& [k2, v2] : v.items()) pretty_value(os, k2, v2, depth + 1);
    } else if (v.is_array() && !v.empty() && (v.front().is_array() || v.front().is_object())) {
        os << pad << key << ":\n";
        for (std::size_t i = 0; i < v.size(); ++i) pretty_value(os, std::to_string(i), v[i], depth + 1);
    } else if (v.is_array()) {
        os << pad << key << ": ";
        for (std::size_t i = 0; i < v.size(); ++i)
            os << (i ? "  " : "") << (v[i].is_string() ? v[i].get<std::string>() : v[i].dump());
        os << '\n';
    } else {
        os << pad << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    }
}

std::string render_pretty(const json& doc) {
    std::ostringstream os;
    os << doc["subcommand"].get<std::string>() << " (version " << doc["tool_version"].get<std::string>() << ")\n";
    pretty_value(os, "inputs", doc["inputs"], 0);
    if (doc.contains("results")) pretty_value(os, "results", doc["results"], 0);
    if (doc.contains("error")) pretty_value(os, "error", doc["error"], 0);
    if (doc.contains("checks"))
        for (const auto& c : doc["checks"])
            os << (c["pass"].get<bool>() ? "[PASS] " : "[FAIL] ") << c["name"].get<std::string>() << ": "
               << c["lhs"].get<std::string>() << " | " << c["rhs"].get<std::string>() << '\n';
    return os.str();
}

std::string render_csv(const GBTable& table) {
    std::ostringstream os;
    os << "n,k,value\n";
    for (std::size_t n = 0; n < table.rows.size(); ++n)
        for (std::size_t k = 0; k < table.rows[n].size(); ++k) os << n << ',' << k << ',' << table.rows[n][k].to_string() << '\n';
    return os.str();
}

void emit(const RunConfig& c, const std::string& text, std::ostream& out) {
    if (c.out.empty()) {
        out << text;
        return;
    }
    std::filesystem::path path(c.out);
    if (path.is_relative()) {
        if (const char* dir = std::getenv(kOutputDirEnv); dir && *dir) path = std::filesystem::path(dir) / path;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw IOError("cannot open output file '" + path.string() + "'");
    file << text;
    file.flush();
    if (!file) throw IOError("failed writing output file '" + path.string() + "'");
}

json base_document(const RunConfig& c) {
    return json{{"tool_version", kToolVersion}, {"subcommand", c.subcommand}};
}

std::string render(const RunConfig& c, const json& doc, const Report* rep, std::ostream& err) {
    if (c.format == "pretty") return render_pretty(doc);
    if (c.format == "csv") {
        if (rep && rep->table && rep->table->all_integer()) return render_csv(*rep->table);
        err << "warning: csv output is limited to integer tables; writing json instead\n";
    }
    return doc.dump(2) + "\n";
}

Report dispatch(const RunConfig& c) {
    static const std::map<std::string, std::function<Report(const RunConfig&)>> handlers{
        {"seq", do_seq},
        {"binom", do_binom},
        {"multinom", do_multinom},
        {"mixed", do_mixed},
        {"table", do_table},
        {"verify", do_verify},
        {"closed-form", do_closed_form},
        {"oracle", do_oracle},
        {"cobweb", do_cobweb},
        {"carlitz", [](const RunConfig& cfg) { return do_carlitz_n(need(cfg.n, "--n")); }},
        {"calc", do_calc},
    };
    const auto it = handlers.find(c.subcommand);
    if (it == handlers.end()) throw UsageError("unknown subcommand '" + c.subcommand + "'");
    return it->second(c);
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (config.format != "json" && config.format != "csv" && config.format != "pretty") {
        err << "error: --format must be json, csv or pretty\n";
        return kUsage;
    }
    json doc = base_document(config);
    try {
        Report rep = dispatch(config);
        doc["inputs"] = rep.inputs;
        doc["results"] = rep.results;
        doc["checks"] = rep.checks;
        emit(config, render(config, doc, &rep, err), out);
        return rep.all_pass() ? kOk : kVerificationFailed;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << error_code_name(e.code()) << ": " << e.what() << '\n';
        doc["inputs"] = json::object();
        doc["error"] = {{"code", error_code_name(e.code())}, {"message", e.what()}};
        try {
            emit(config, render(config, doc, nullptr, err), out);
        } catch (const Error&) {
        }
        return kErrorBase + static_cast<int>(e.code());
    }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Exact Ward-Horadam sequences, generalized binomials and their combinatorial oracles"};
    app.name("horadam");
    app.require_subcommand(1, 1);
    app.set_version_flag("--version", kToolVersion);

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "pretty"}));
        sub->add_option("--out", cfg.out, "Output file (relative paths resolve under $HORADAM_OUTPUT_DIR)");
    };
    auto with_seq = [&](CLI::App* sub) {
        sub->add_option("--seq", cfg.seq,
                        "Sequence preset: fibonacci, lucas, pell, naturals, gauss[:q], nalpha:A, horadam:a,b,s,t, "
                        "U:s,t, V:s,t, Uroots:p,q, Vroots:p,q, fibpoly:x, custom:v0,v1,...");
    };

    auto* seq = app.add_subcommand("seq", "Sequence terms with closed-form, generating-function and Binet checks");
    with_seq(seq);
    seq->add_option("--N", cfg.N, "Number of terms (default 10)");

    auto* binom = app.add_subcommand("binom", "F-binomial coefficient n!_F / (k!_F (n-k)!_F)");
    with_seq(binom);
    binom->add_option("--n", cfg.n)->required();
    binom->add_option("--k", cfg.k)->required();

    auto* multinom = app.add_subcommand("multinom", "F-multinomial coefficient");
    with_seq(multinom);
    multinom->add_option("--n", cfg.n)->required();
    multinom->add_option("--parts", cfg.parts, "Comma-separated parts")->delimiter(',');
    multinom->add_option("--k", cfg.k, "Leading part; also checks the factorization through binom(n, k)");

    auto* mixed = app.add_subcommand("mixed", "Mixed V/U coefficient V_(r+s)! / (V_r! U_s!) over the sequence's (s, t)");
    with_seq(mixed);
    mixed->add_option("--r", cfg.r)->required();
    mixed->add_option("--s", cfg.s)->required();

    auto* table = app.add_subcommand("table", "Triangle of F-binomials by definition or by a recurrence scheme");
    with_seq(table);
    table->add_option("--N", cfg.N)->required();
    table->add_option("--scheme", cfg.schemes, "Fill with this recurrence scheme instead of factorials");

    auto* verify = app.add_subcommand("verify", "Compare recurrence fills with the factorial definition");
    with_seq(verify);
    verify->add_option("--N", cfg.N, "Largest n (default 12)");
    verify->add_option("--scheme", cfg.schemes, "Scheme name, repeatable, or 'all'")->required();

    auto* closed = app.add_subcommand("closed-form", "Chain-sum formulas, the Carlitz identity and the q* transfer");
    with_seq(closed);
    closed->add_option("--formula", cfg.formula)
        ->required()
        ->check(CLI::IsMember({"md", "errata", "bp49", "mdU", "carlitz", "qstar"}));
    closed->add_option("--n", cfg.n);
    closed->add_option("--k", cfg.k);

    auto* oracle = app.add_subcommand("oracle", "Brute-force combinatorial counts against algebraic values");
    oracle->add_option("--model", cfg.model)
        ->required()
        ->check(CLI::IsMember({"tilings", "bracelets", "paths", "subspaces", "graphs", "gamma", "cigler"}));
    oracle->add_option("--n", cfg.n);
    oracle->add_option("--k", cfg.k, "Subset size, subspace dimension, or number of colors");
    oracle->add_option("--m", cfg.m);
    oracle->add_option("--s", cfg.s_expr, "Square weight expression (default s)");
    oracle->add_option("--t", cfg.t_expr, "Domino weight expression (default t)");
    oracle->add_option("--qf", cfg.qf, "Field order 2, 3 or 4");
    oracle->add_option("--alpha", cfg.alpha);

    auto* cobweb = app.add_subcommand("cobweb", "Cobweb layers, the chain counting identity and box tilings");
    with_seq(cobweb);
    cobweb->add_option("--n", cfg.n)->required();
    cobweb->add_option("--k", cfg.k)->required();
    cobweb->add_flag("--search-tiling", cfg.search_tiling);
    cobweb->add_flag("--intervals-only", cfg.intervals_only);
    cobweb->add_option("--budget", cfg.budget, "Search node limit");

    auto* carlitz = app.add_subcommand("carlitz", "Carlitz product identity under p*q = -1");
    carlitz->add_option("--n", cfg.n)->required();

    auto* calc = app.add_subcommand("calc", "Normalize, substitute into, or exactly divide an expression");
    calc->add_option("--expr", cfg.expr)->required();
    calc->add_option("--assign", cfg.assignments, "name=expression, repeatable");
    calc->add_option("--divide-by", cfg.divide_by);

    for (auto* sub : app.get_subcommands({})) common(sub);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }
    for (auto* sub : app.get_subcommands()) cfg.subcommand = sub->get_name();
    return run(cfg, out, err);
}

}  // namespace horadam::cli
